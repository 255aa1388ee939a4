//! Transfinite sums over sequence descriptions: the iterated natural sum,
//! the ordinary iterated sum, partial and range sums, partial sums relative
//! to a set of natural-step stages, the finite value spectrum, and the tail
//! characterization of limit-length sums.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::ordinal::{
    compare, leading_exponent, nat_add, nat_mul_fin, omega_pow, ord_add, ord_mul,
    smallest_exponent, Monomial, Ordinal,
};
use crate::seq::{Position, SeqDesc, Segment, StepSet};

/// The tail data of a limit-length sum: past `gamma_bar` every range sum —
/// natural or ordinary — is exactly `w^xi`, and the total is the partial
/// sum at `gamma_bar` plus `w^xi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TailCharacter {
    pub gamma_bar: Ordinal,
    pub xi: Ordinal,
}

/// The iterated natural sum of the sequence: natural steps at successors,
/// suprema at limits. Constant runs of limit length are folded by the
/// closed form: a run of `alpha` over `w^eta * s` contributes
/// `+ w^(lead(alpha) + eta)` s times, and the finite remainder of the run
/// joins by natural addition.
pub fn iter_nat_sum(s: &SeqDesc) -> Ordinal {
    let mut acc = Ordinal::Zero;
    for seg in &s.segments {
        match seg {
            Segment::Explicit(vs) => {
                for v in vs {
                    acc = nat_add(&acc, v);
                }
            }
            Segment::Repeat { value, length } => {
                acc = repeat_run(acc, value, length, &mut |acc, v, _| nat_add(&acc, v));
            }
        }
    }
    acc
}

/// The ordinary iterated sum: ordinal addition at successors, suprema at
/// limits; a constant run of `alpha` over `lambda` contributes
/// `alpha * lambda`.
pub fn iter_ord_sum(s: &SeqDesc) -> Ordinal {
    let mut acc = Ordinal::Zero;
    for seg in &s.segments {
        match seg {
            Segment::Explicit(vs) => {
                for v in vs {
                    acc = ord_add(&acc, v);
                }
            }
            Segment::Repeat { value, length } => {
                acc = ord_add(&acc, &ord_mul(value, length));
            }
        }
    }
    acc
}

/// Shared evaluation of a constant run: the limit monomials of the run
/// length enter by ordinal addition of single `w`-powers; the finite
/// remainder of the run is handed to `step`, one copy of `value` at a time
/// (offset counted from the run's limit part).
fn repeat_run(
    mut acc: Ordinal,
    value: &Ordinal,
    length: &Ordinal,
    step: &mut dyn FnMut(Ordinal, &Ordinal, u64) -> Ordinal,
) -> Ordinal {
    if value.is_zero() || length.is_zero() {
        return acc;
    }
    let lead = leading_exponent(value).expect("nonzero run value");
    let mut finite_reps = BigUint::default();
    for m in length.monomials() {
        if m.exponent.is_zero() {
            finite_reps = m.coefficient;
        } else {
            let e = ord_add(&lead, &m.exponent);
            acc = ord_add(
                &acc,
                &Ordinal::from_monomials(vec![Monomial::new(e, m.coefficient)]),
            );
        }
    }
    if let Ok(reps) = u64::try_from(&finite_reps) {
        for k in 0..reps {
            acc = step(acc, value, k);
        }
    } else {
        // a run too long to walk one by one can only be joined naturally
        acc = nat_add(&acc, &nat_mul_fin(value, finite_reps));
    }
    acc
}

/// The iterated natural sum of the prefix of length `delta`.
pub fn partial_nat_sum(s: &SeqDesc, delta: &Ordinal) -> Result<Ordinal> {
    let (prefix, _, _) = s.split_at(delta)?;
    Ok(iter_nat_sum(&prefix))
}

/// The iterated natural sum over the index range `[delta_lo, delta_hi)`.
pub fn range_nat_sum(s: &SeqDesc, delta_lo: &Ordinal, delta_hi: &Ordinal) -> Result<Ordinal> {
    Ok(iter_nat_sum(&sub_description(s, delta_lo, delta_hi)?))
}

/// The ordinary iterated sum over the index range `[delta_lo, delta_hi)`.
pub fn range_ord_sum(s: &SeqDesc, delta_lo: &Ordinal, delta_hi: &Ordinal) -> Result<Ordinal> {
    Ok(iter_ord_sum(&sub_description(s, delta_lo, delta_hi)?))
}

fn sub_description(s: &SeqDesc, delta_lo: &Ordinal, delta_hi: &Ordinal) -> Result<SeqDesc> {
    if compare(delta_lo, delta_hi) == Ordering::Greater {
        return Err(Error::PositionOutOfRange {
            position: format!("{delta_lo:?}"),
            length: format!("{delta_hi:?}"),
        });
    }
    let (_, suffix, _) = s.split_at(delta_lo)?;
    let width = crate::ordinal::ord_sub_left(delta_lo, delta_hi).expect("checked delta_lo <= delta_hi");
    let (mid, _, _) = suffix.split_at(&width)?;
    Ok(mid)
}

/// Check a step set against a description. Selected positions must address
/// an existing entry, and may not fall in the limit part of a constant run:
/// the fold cannot distinguish step operators there.
pub fn validate_step_set(s: &SeqDesc, g: &StepSet) -> Result<()> {
    let selected = match g {
        StepSet::Selected(ps) => ps,
        _ => return Ok(()),
    };
    for p in selected {
        let seg = s.segments.get(p.segment).ok_or_else(|| {
            Error::InvalidStepSet(format!("no segment {}", p.segment))
        })?;
        s.value_at(p)?;
        if let Segment::Repeat { length, .. } = seg {
            let limit = length.limit_part();
            if compare(&p.offset, &limit) == Ordering::Less {
                return Err(Error::InvalidStepSet(format!(
                    "position ({}, {:?}) lies in the limit part of a constant run",
                    p.segment, p.offset
                )));
            }
        }
    }
    Ok(())
}

/// The partial sum relative to a step set: natural addition at the listed
/// stages, ordinal addition elsewhere; limit stages take suprema either
/// way, via the same closed form as [`iter_nat_sum`].
pub fn g_sum(s: &SeqDesc, g: &StepSet) -> Result<Ordinal> {
    validate_step_set(s, g)?;
    match g {
        StepSet::AllNatural => Ok(iter_nat_sum(s)),
        StepSet::AllOrdinary => Ok(iter_ord_sum(s)),
        StepSet::Selected(ps) => {
            let mut acc = Ordinal::Zero;
            for (i, seg) in s.segments.iter().enumerate() {
                match seg {
                    Segment::Explicit(vs) => {
                        for (k, v) in vs.iter().enumerate() {
                            let here = Position::new(i, k as u64);
                            acc = if ps.contains(&here) {
                                nat_add(&acc, v)
                            } else {
                                ord_add(&acc, v)
                            };
                        }
                    }
                    Segment::Repeat { value, length } => {
                        let limit = length.limit_part();
                        acc = repeat_run(acc, value, length, &mut |acc, v, k| {
                            let here = Position {
                                segment: i,
                                offset: ord_add(&limit, &Ordinal::from_nat(k)),
                            };
                            if ps.contains(&here) {
                                nat_add(&acc, v)
                            } else {
                                ord_add(&acc, v)
                            }
                        });
                    }
                }
            }
            Ok(acc)
        }
    }
}

/// Every value attained by some choice of step set. Only finitely many
/// stages can influence the result: the explicit entries, the finite
/// remainder of each constant run, and each run's first stage. All subsets
/// of those are enumerated, so the slot count is capped.
pub fn g_sum_spectrum(s: &SeqDesc) -> Result<BTreeSet<Ordinal>> {
    const MAX_SLOTS: usize = 22;
    let mut slots: Vec<Position> = Vec::new();
    for (i, seg) in s.segments.iter().enumerate() {
        match seg {
            Segment::Explicit(vs) => {
                for k in 0..vs.len() {
                    slots.push(Position::new(i, k as u64));
                }
            }
            Segment::Repeat { value, length } => {
                if value.is_zero() || length.is_zero() {
                    continue;
                }
                let limit = length.limit_part();
                if !limit.is_zero() {
                    // the run's first stage; its operator is absorbed by
                    // the limit monomials but it is a legitimate slot
                    slots.push(Position::new(i, 0u64));
                }
                let n = length
                    .finite_part();
                let n = u64::try_from(&n).map_err(|_| Error::BoundExceeded(usize::MAX))?;
                for k in 0..n {
                    slots.push(Position {
                        segment: i,
                        offset: ord_add(&limit, &Ordinal::from_nat(k)),
                    });
                }
            }
        }
    }
    if slots.len() > MAX_SLOTS {
        return Err(Error::BoundExceeded(slots.len()));
    }
    let mut out = BTreeSet::new();
    for mask in 0u64..(1u64 << slots.len()) {
        let chosen: BTreeSet<Position> = slots
            .iter()
            .enumerate()
            .filter(|(j, _)| mask >> j & 1 == 1)
            .map(|(_, p)| p.clone())
            .collect();
        out.insert(g_sum_unchecked(s, &chosen));
    }
    Ok(out)
}

/// `g_sum` for an arbitrary position set, without the limit-part
/// restriction: stages in the limit part of a run are simply absorbed.
fn g_sum_unchecked(s: &SeqDesc, ps: &BTreeSet<Position>) -> Ordinal {
    let mut acc = Ordinal::Zero;
    for (i, seg) in s.segments.iter().enumerate() {
        match seg {
            Segment::Explicit(vs) => {
                for (k, v) in vs.iter().enumerate() {
                    let here = Position::new(i, k as u64);
                    acc = if ps.contains(&here) { nat_add(&acc, v) } else { ord_add(&acc, v) };
                }
            }
            Segment::Repeat { value, length } => {
                // a selected first stage acts before the limit monomials
                if ps.contains(&Position::new(i, 0u64)) && !length.limit_part().is_zero() {
                    acc = nat_add(&acc, value);
                }
                let limit = length.limit_part();
                acc = repeat_run(acc, value, length, &mut |acc, v, k| {
                    let here = Position { segment: i, offset: ord_add(&limit, &Ordinal::from_nat(k)) };
                    if ps.contains(&here) { nat_add(&acc, v) } else { ord_add(&acc, v) }
                });
            }
        }
    }
    acc
}

/// The tail characterization of a limit-length, not eventually zero sum:
/// `xi` is the smallest exponent of the total, and `gamma_bar` the least
/// supported point past which every range sum collapses to `w^xi`.
pub fn tail_character(s: &SeqDesc) -> Result<TailCharacter> {
    let zeta = s.length();
    if !zeta.is_limit() {
        return Err(Error::UnsupportedShape(
            "tail characterization needs a limit-length sequence".into(),
        ));
    }
    if s.is_eventually_zero() {
        return Err(Error::UnsupportedShape(
            "tail characterization needs values that are not eventually zero".into(),
        ));
    }
    let total = iter_nat_sum(s);
    let xi = smallest_exponent(&total).expect("not eventually zero, so the total is nonzero");
    let tail = omega_pow(&xi);

    // candidate split points: segment boundaries, interior limit points of
    // each run length, and finitely many successors of each, in increasing
    // order
    const FINITE_PROBES: u64 = 32;
    let mut candidates: Vec<Ordinal> = Vec::new();
    let mut boundary = Ordinal::Zero;
    for seg in &s.segments {
        let len = seg.length();
        let mut anchors = vec![Ordinal::Zero];
        let mut prefix = Ordinal::Zero;
        for m in len.monomials() {
            if m.exponent.is_zero() {
                continue;
            }
            let copies = u64::try_from(&m.coefficient).unwrap_or(1);
            for _ in 0..copies {
                prefix = ord_add(&prefix, &omega_pow(&m.exponent));
                anchors.push(prefix.clone());
            }
        }
        let probes = match len.as_finite().and_then(|n| u64::try_from(&n).ok()) {
            Some(n) => n,
            None => FINITE_PROBES,
        };
        for anchor in anchors {
            for k in 0..=probes {
                candidates.push(ord_add(&boundary, &ord_add(&anchor, &Ordinal::from_nat(k))));
            }
        }
        boundary = ord_add(&boundary, &len);
    }
    candidates.sort();
    candidates.dedup();

    for gamma in candidates {
        if compare(&gamma, &zeta) != Ordering::Less {
            break;
        }
        let prefix = partial_nat_sum(s, &gamma)?;
        if ord_add(&prefix, &tail) == total
            && range_nat_sum(s, &gamma, &zeta)? == tail
            && range_ord_sum(s, &gamma, &zeta)? == tail
        {
            return Ok(TailCharacter { gamma_bar: gamma, xi });
        }
    }
    Err(Error::UnsupportedShape(
        "no supported split point characterizes the tail".into(),
    ))
}
