//! Transfinite sequences of ordinals, described by finitely many segments.
//!
//! A sequence of ordinal length is given as a list of segments, each either
//! an explicit finite run of values or a constant run `Repeat { value,
//! length }` of arbitrary ordinal length. Positions are addressed by
//! `(segment, offset)` pairs; splitting at any in-range point is exact
//! because the segment language is closed under left subtraction of
//! lengths.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::ordinal::{compare, ord_add, ord_sub_left, Ordinal};

/// One segment of a sequence description.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Segment {
    /// Finitely many values, listed in order.
    Explicit(Vec<Ordinal>),
    /// The constant value repeated `length` times, `length > 0`.
    Repeat { value: Ordinal, length: Ordinal },
}

impl Segment {
    pub fn length(&self) -> Ordinal {
        match self {
            Segment::Explicit(vs) => Ordinal::from_nat(vs.len() as u64),
            Segment::Repeat { length, .. } => length.clone(),
        }
    }
}

/// A sequence of ordinal length, concatenation of its segments.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SeqDesc {
    pub segments: Vec<Segment>,
}

/// A position inside a [`SeqDesc`]: an offset into one of its segments.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Position {
    pub segment: usize,
    pub offset: Ordinal,
}

impl Position {
    pub fn new(segment: usize, offset: impl Into<Ordinal>) -> Self {
        Position { segment, offset: offset.into() }
    }
}

impl PartialOrd for Position {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Position {
    fn cmp(&self, other: &Self) -> Ordering {
        self.segment
            .cmp(&other.segment)
            .then_with(|| compare(&self.offset, &other.offset))
    }
}

/// Which successor stages of a transfinite sum take the natural rather than
/// the ordinary step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StepSet {
    AllNatural,
    AllOrdinary,
    /// Natural steps exactly at the listed positions, ordinary elsewhere.
    Selected(BTreeSet<Position>),
}

/// Where a split cut the original description: before segment `segment`
/// when `offset` is zero, else `offset` deep into that segment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cut {
    pub segment: usize,
    pub offset: Ordinal,
}

impl SeqDesc {
    pub fn new(segments: Vec<Segment>) -> Self {
        SeqDesc { segments }
    }

    /// Total length, the ordinal sum of the segment lengths.
    pub fn length(&self) -> Ordinal {
        self.segments
            .iter()
            .fold(Ordinal::Zero, |acc, s| ord_add(&acc, &s.length()))
    }

    /// The value at a position, if in range.
    pub fn value_at(&self, pos: &Position) -> Result<Ordinal> {
        let seg = self.segments.get(pos.segment).ok_or_else(|| self.out_of_range(pos))?;
        match seg {
            Segment::Explicit(vs) => {
                let idx = pos
                    .offset
                    .as_finite()
                    .and_then(|n| usize::try_from(&n).ok())
                    .filter(|i| *i < vs.len())
                    .ok_or_else(|| self.out_of_range(pos))?;
                Ok(vs[idx].clone())
            }
            Segment::Repeat { value, length } => {
                if compare(&pos.offset, length) == Ordering::Less {
                    Ok(value.clone())
                } else {
                    Err(self.out_of_range(pos))
                }
            }
        }
    }

    fn out_of_range(&self, pos: &Position) -> Error {
        Error::PositionOutOfRange {
            position: format!("({}, {:?})", pos.segment, pos.offset),
            length: format!("{:?}", self.length()),
        }
    }

    /// Split into the prefix of length `delta` and the remaining suffix,
    /// together with the cut point in the original coordinates.
    ///
    /// Errors only when `delta` exceeds the length; any in-range point is
    /// representable because repeat runs split into repeat runs.
    pub fn split_at(&self, delta: &Ordinal) -> Result<(SeqDesc, SeqDesc, Cut)> {
        let mut remaining = delta.clone();
        let mut prefix: Vec<Segment> = Vec::new();
        for (i, seg) in self.segments.iter().enumerate() {
            if remaining.is_zero() {
                return Ok((
                    SeqDesc::new(prefix),
                    SeqDesc::new(self.segments[i..].to_vec()),
                    Cut { segment: i, offset: Ordinal::Zero },
                ));
            }
            let len = seg.length();
            match ord_sub_left(&len, &remaining) {
                // remaining >= len: the segment lies wholly in the prefix,
                // but absorption can make the cut land at its start anyway
                Some(rest) => {
                    // delta = consumed + remaining; after taking this
                    // segment the still-needed length is len - ... not
                    // expressible directly, so recompute from the right:
                    // the suffix of delta past this segment is `rest` only
                    // when addition is cancellative here, which left
                    // subtraction guarantees.
                    prefix.push(seg.clone());
                    remaining = rest;
                }
                None => {
                    // remaining < len: cut inside this segment
                    match seg {
                        Segment::Explicit(vs) => {
                            let k = remaining
                                .as_finite()
                                .and_then(|n| usize::try_from(&n).ok())
                                .expect("offset below a finite length is finite");
                            prefix.push(Segment::Explicit(vs[..k].to_vec()));
                            let mut suffix = vec![Segment::Explicit(vs[k..].to_vec())];
                            suffix.extend(self.segments[i + 1..].iter().cloned());
                            return Ok((
                                SeqDesc::new(prefix),
                                SeqDesc::new(suffix),
                                Cut { segment: i, offset: remaining },
                            ));
                        }
                        Segment::Repeat { value, length } => {
                            let tail_len = ord_sub_left(&remaining, length)
                                .expect("offset below the run length subtracts");
                            prefix.push(Segment::Repeat {
                                value: value.clone(),
                                length: remaining.clone(),
                            });
                            let mut suffix = vec![Segment::Repeat {
                                value: value.clone(),
                                length: tail_len,
                            }];
                            suffix.extend(self.segments[i + 1..].iter().cloned());
                            return Ok((
                                SeqDesc::new(prefix),
                                SeqDesc::new(suffix),
                                Cut { segment: i, offset: remaining },
                            ));
                        }
                    }
                }
            }
        }
        if remaining.is_zero() {
            let n = self.segments.len();
            Ok((
                self.clone(),
                SeqDesc::new(Vec::new()),
                Cut { segment: n, offset: Ordinal::Zero },
            ))
        } else {
            Err(Error::PositionOutOfRange {
                position: format!("{delta:?}"),
                length: format!("{:?}", self.length()),
            })
        }
    }

    /// True when some proper initial part already covers every nonzero
    /// value, i.e. the values are zero from some point on.
    pub fn is_eventually_zero(&self) -> bool {
        let mut zero_tail = Ordinal::Zero;
        for seg in self.segments.iter().rev() {
            let seg_zero = match seg {
                Segment::Explicit(vs) => vs.iter().all(Ordinal::is_zero),
                Segment::Repeat { value, .. } => value.is_zero(),
            };
            if seg_zero {
                zero_tail = ord_add(&seg.length(), &zero_tail);
                continue;
            }
            // last segment carrying a nonzero value
            return match seg {
                Segment::Explicit(_) => true,
                Segment::Repeat { length, .. } => {
                    length.as_finite().is_some() || !zero_tail.is_zero()
                }
            };
        }
        true
    }

    /// The subsequence of nonzero values, as a description.
    pub fn nonzero_subsequence(&self) -> SeqDesc {
        let mut out = Vec::new();
        for seg in &self.segments {
            match seg {
                Segment::Explicit(vs) => {
                    let vs: Vec<Ordinal> =
                        vs.iter().filter(|v| !v.is_zero()).cloned().collect();
                    if !vs.is_empty() {
                        out.push(Segment::Explicit(vs));
                    }
                }
                Segment::Repeat { value, length } => {
                    if !value.is_zero() && !length.is_zero() {
                        out.push(seg.clone());
                    }
                }
            }
        }
        SeqDesc::new(out)
    }

    /// Finite count of positions, when every segment is finite.
    pub fn finite_position_count(&self) -> Option<BigUint> {
        self.length().as_finite()
    }
}

/// Two stages below a common limit lie in the same component when they
/// differ by a natural number, i.e. have equal limit parts.
pub fn same_component(a: &Ordinal, b: &Ordinal) -> bool {
    a.limit_part() == b.limit_part()
}

/// Map a selected step set through a split at `cut`, yielding the step sets
/// of the prefix and the suffix. Positions keep their offsets; suffix
/// segment indices are rebased, and positions inside a split segment are
/// shifted by the cut offset.
pub fn split_step_set(
    steps: &BTreeSet<Position>,
    cut: &Cut,
) -> (BTreeSet<Position>, BTreeSet<Position>) {
    let mut pre = BTreeSet::new();
    let mut post = BTreeSet::new();
    for p in steps {
        if p.segment < cut.segment {
            pre.insert(p.clone());
        } else if p.segment == cut.segment && compare(&p.offset, &cut.offset) == Ordering::Less {
            pre.insert(p.clone());
        } else if p.segment == cut.segment {
            let rebased = ord_sub_left(&cut.offset, &p.offset)
                .expect("offset at or past the cut subtracts");
            post.insert(Position { segment: 0, offset: rebased });
        } else {
            post.insert(Position { segment: p.segment - cut.segment, offset: p.offset.clone() });
        }
    }
    (pre, post)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(v: u64) -> Ordinal {
        Ordinal::from_nat(v)
    }

    fn w() -> Ordinal {
        Ordinal::omega()
    }

    fn rep(value: Ordinal, length: Ordinal) -> Segment {
        Segment::Repeat { value, length }
    }

    #[test]
    fn length_adds_segmentwise() {
        let s = SeqDesc::new(vec![
            Segment::Explicit(vec![n(1), n(2)]),
            rep(n(1), w()),
            Segment::Explicit(vec![n(7)]),
        ]);
        // 2 + w + 1 = w + 1
        assert_eq!(s.length(), ord_add(&w(), &n(1)));
    }

    #[test]
    fn value_at_cases() {
        let s = SeqDesc::new(vec![Segment::Explicit(vec![n(4), n(5)]), rep(w(), w())]);
        assert_eq!(s.value_at(&Position::new(0, 1u64)).unwrap(), n(5));
        assert_eq!(s.value_at(&Position::new(1, 100u64)).unwrap(), w());
        assert!(s.value_at(&Position::new(0, 2u64)).is_err());
        assert!(s.value_at(&Position::new(1, w())).is_err());
        assert!(s.value_at(&Position::new(2, 0u64)).is_err());
    }

    #[test]
    fn split_at_boundary_and_inside() {
        let s = SeqDesc::new(vec![Segment::Explicit(vec![n(1), n(2)]), rep(n(3), w())]);
        let (pre, post, cut) = s.split_at(&n(2)).unwrap();
        assert_eq!(pre.segments, vec![Segment::Explicit(vec![n(1), n(2)])]);
        assert_eq!(post.segments, vec![rep(n(3), w())]);
        assert_eq!(cut, Cut { segment: 1, offset: n(0) });

        let (pre, post, cut) = s.split_at(&n(1)).unwrap();
        assert_eq!(pre.segments, vec![Segment::Explicit(vec![n(1)])]);
        assert_eq!(post.segments[0], Segment::Explicit(vec![n(2)]));
        assert_eq!(cut, Cut { segment: 0, offset: n(1) });
        assert_eq!(ord_add(&pre.length(), &post.length()), s.length());
    }

    #[test]
    fn split_inside_repeat_preserves_length() {
        // w*2 repeat split at w + 3
        let s = SeqDesc::new(vec![rep(n(1), Ordinal::from_monomials(vec![
            crate::ordinal::Monomial::new(n(1), 2u32),
        ]))]);
        let delta = ord_add(&w(), &n(3));
        let (pre, post, cut) = s.split_at(&delta).unwrap();
        assert_eq!(pre.length(), delta);
        assert_eq!(post.length(), w());
        assert_eq!(cut.offset, delta);
        assert_eq!(ord_add(&pre.length(), &post.length()), s.length());
    }

    #[test]
    fn split_at_full_length_and_out_of_range() {
        let s = SeqDesc::new(vec![Segment::Explicit(vec![n(1)])]);
        let (pre, post, _) = s.split_at(&n(1)).unwrap();
        assert_eq!(pre, s);
        assert!(post.segments.is_empty());
        assert!(s.split_at(&n(2)).is_err());
    }

    #[test]
    fn eventually_zero_cases() {
        let inf = rep(n(1), w());
        assert!(!SeqDesc::new(vec![inf.clone()]).is_eventually_zero());
        assert!(SeqDesc::new(vec![inf.clone(), rep(n(0), w())]).is_eventually_zero());
        assert!(SeqDesc::new(vec![Segment::Explicit(vec![n(5)])]).is_eventually_zero());
        assert!(SeqDesc::new(vec![rep(n(0), w())]).is_eventually_zero());
        assert!(!SeqDesc::new(vec![rep(n(0), w()), inf]).is_eventually_zero());
    }

    #[test]
    fn nonzero_subsequence_filters() {
        let s = SeqDesc::new(vec![
            Segment::Explicit(vec![n(0), n(2), n(0)]),
            rep(n(0), w()),
            rep(n(3), w()),
        ]);
        let t = s.nonzero_subsequence();
        assert_eq!(t.segments, vec![Segment::Explicit(vec![n(2)]), rep(n(3), w())]);
    }

    #[test]
    fn same_component_cases() {
        assert!(same_component(&n(3), &n(10)));
        assert!(same_component(&ord_add(&w(), &n(1)), &ord_add(&w(), &n(9))));
        assert!(!same_component(&n(3), &w()));
        assert!(!same_component(&w(), &ord_add(&w(), &w())));
    }

    #[test]
    fn split_step_set_rebases() {
        let steps: BTreeSet<Position> = [
            Position::new(0, 1u64),
            Position::new(1, 2u64),
            Position::new(1, 5u64),
            Position::new(2, 0u64),
        ]
        .into_iter()
        .collect();
        let cut = Cut { segment: 1, offset: n(3) };
        let (pre, post) = split_step_set(&steps, &cut);
        assert_eq!(
            pre,
            [Position::new(0, 1u64), Position::new(1, 2u64)].into_iter().collect()
        );
        assert_eq!(
            post,
            [Position::new(0, 2u64), Position::new(1, 0u64)].into_iter().collect()
        );
    }
}
