//! Rearrangement-invariant sums of multisets of ordinals.
//!
//! A multiset assigns each distinct ordinal value a multiplicity, which may
//! be finite or an aleph. For countable index sets the invariant sum has an
//! exact closed form: truncate the finitely many large members at the
//! critical exponent, join them naturally, and add one `w`-power. For
//! uncountable index sets only arrangement-by-arrangement evaluation is
//! offered; callers take minima over generated arrangement families.

use std::collections::BTreeMap;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::ordinal::{
    compare, leading_exponent, nat_add, nat_mul_fin, omega_pow, ord_add, Ordinal,
};
use crate::seq::{SeqDesc, Segment};
use crate::sum::iter_nat_sum;

/// How many times a value occurs: a finite count or the k-th infinite
/// cardinal (`Aleph(0)` is the countable one).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Multiplicity {
    Finite(u64),
    Aleph(u32),
}

impl Multiplicity {
    fn plus(self, other: Multiplicity) -> Multiplicity {
        use Multiplicity::*;
        match (self, other) {
            (Finite(a), Finite(b)) => Finite(a + b),
            (Aleph(j), Aleph(k)) => Aleph(j.max(k)),
            (Aleph(j), Finite(_)) | (Finite(_), Aleph(j)) => Aleph(j),
        }
    }
}

/// A finite description of a multiset of ordinals: distinct values with
/// their multiplicities. Zero-count entries are dropped on construction
/// and duplicate values merged.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct OrdMultiset {
    entries: Vec<(Ordinal, Multiplicity)>,
}

impl OrdMultiset {
    pub fn new(entries: impl IntoIterator<Item = (Ordinal, Multiplicity)>) -> Self {
        let mut merged: BTreeMap<Ordinal, Multiplicity> = BTreeMap::new();
        for (v, m) in entries {
            if m == Multiplicity::Finite(0) {
                continue;
            }
            merged
                .entry(v)
                .and_modify(|cur| *cur = cur.plus(m))
                .or_insert(m);
        }
        OrdMultiset { entries: merged.into_iter().collect() }
    }

    pub fn entries(&self) -> &[(Ordinal, Multiplicity)] {
        &self.entries
    }
}

/// The invariant natural sum of a countable multiset.
///
/// With finitely many nonzero members this is their plain natural sum.
/// Otherwise, let `xi` be the least ordinal such that only finitely many
/// members (counted with multiplicity) are `>= w^xi`; the sum is the
/// natural join of those members truncated at `xi`, plus `w^xi`. Every
/// arrangement of the multiset, of any countable length, attains this
/// value, so the three invariant sums coincide here.
pub fn countable_nsum(m: &OrdMultiset) -> Result<Ordinal> {
    let mut xi = Ordinal::Zero;
    let mut infinite = false;
    for (v, mult) in m.entries() {
        match mult {
            Multiplicity::Aleph(0) => {}
            Multiplicity::Aleph(_) => return Err(Error::UncountableMultiplicity),
            Multiplicity::Finite(_) => continue,
        }
        if v.is_zero() {
            continue;
        }
        infinite = true;
        // v < w^xi exactly when lead(v) + 1 <= xi
        let needed = ord_add(&leading_exponent(v)?, &Ordinal::one());
        if compare(&needed, &xi) == std::cmp::Ordering::Greater {
            xi = needed;
        }
    }
    if !infinite {
        let mut acc = Ordinal::Zero;
        for (v, mult) in m.entries() {
            if let Multiplicity::Finite(n) = mult {
                acc = nat_add(&acc, &nat_mul_fin(v, *n));
            }
        }
        return Ok(acc);
    }
    let mut acc = omega_pow(&xi);
    for (v, mult) in m.entries() {
        if let Multiplicity::Finite(n) = mult {
            let kept = crate::ordinal::truncate(v, &xi);
            acc = nat_add(&acc, &nat_mul_fin(&kept, *n));
        }
    }
    Ok(acc)
}

/// The iterated natural sum of one arrangement of the multiset, after
/// checking symbolically that the arrangement enumerates exactly the
/// multiset: per value, the explicit occurrences plus the cardinalities of
/// its constant runs must add up to the stated multiplicity.
pub fn arrangement_nat_sum(m: &OrdMultiset, arrangement: &SeqDesc) -> Result<Ordinal> {
    let mut counts: BTreeMap<Ordinal, Multiplicity> = BTreeMap::new();
    let mut bump = |v: &Ordinal, m: Multiplicity| {
        counts
            .entry(v.clone())
            .and_modify(|cur| *cur = cur.plus(m))
            .or_insert(m);
    };
    for seg in &arrangement.segments {
        match seg {
            Segment::Explicit(vs) => {
                for v in vs {
                    bump(v, Multiplicity::Finite(1));
                }
            }
            Segment::Repeat { value, length } => {
                if length.is_zero() {
                    continue;
                }
                bump(value, cardinality(length)?);
            }
        }
    }
    let stated: BTreeMap<Ordinal, Multiplicity> =
        m.entries().iter().cloned().collect();
    if counts != stated {
        return Err(Error::ArrangementMismatch(format!(
            "arranged {counts:?}, stated {stated:?}"
        )));
    }
    Ok(iter_nat_sum(arrangement))
}

/// The cardinality of a nonzero ordinal, as a multiplicity: the largest
/// aleph named in its normal form, countable if none but infinite, else
/// the natural number itself.
fn cardinality(lambda: &Ordinal) -> Result<Multiplicity> {
    if let Some(k) = lambda.max_atom_index() {
        return Ok(Multiplicity::Aleph(k));
    }
    match lambda.as_finite() {
        Some(n) => u64::try_from(&n)
            .map(Multiplicity::Finite)
            .map_err(|_| Error::BoundExceeded(usize::MAX)),
        None => Ok(Multiplicity::Aleph(0)),
    }
}

/// Apply a permutation to the leading explicit segment and report whether
/// the iterated natural sum is unchanged (it must be: all those positions
/// sit in the component of zero). `pi` maps new position `k` to old
/// position `pi[k]` and must be a bijection on the whole segment.
pub fn component_permutation_check(s: &SeqDesc, pi: &[usize]) -> Result<bool> {
    let first = match s.segments.first() {
        Some(Segment::Explicit(vs)) => vs,
        _ => {
            return Err(Error::UnsupportedShape(
                "sequence must start with an explicit segment".into(),
            ))
        }
    };
    if pi.len() != first.len() {
        return Err(Error::PermutationEscapesComponent);
    }
    let mut seen = vec![false; first.len()];
    for &p in pi {
        if p >= first.len() || seen[p] {
            return Err(Error::PermutationEscapesComponent);
        }
        seen[p] = true;
    }
    let permuted: Vec<Ordinal> = pi.iter().map(|&p| first[p].clone()).collect();
    let mut segments = s.segments.clone();
    segments[0] = Segment::Explicit(permuted);
    Ok(iter_nat_sum(&SeqDesc::new(segments)) == iter_nat_sum(s))
}

/// Replace each cell of a partition of the leading explicit segment by the
/// natural sum of its members and report whether the iterated natural sum
/// is unchanged. Cells may list their members in any order but must
/// jointly cover the segment exactly once.
pub fn finite_grouping_check(s: &SeqDesc, cells: &[Vec<usize>]) -> Result<bool> {
    let first = match s.segments.first() {
        Some(Segment::Explicit(vs)) => vs,
        _ => {
            return Err(Error::MalformedGrouping(
                "sequence must start with an explicit segment".into(),
            ))
        }
    };
    let mut seen = vec![false; first.len()];
    for cell in cells {
        if cell.is_empty() {
            return Err(Error::MalformedGrouping("empty cell".into()));
        }
        for &p in cell {
            if p >= first.len() || seen[p] {
                return Err(Error::MalformedGrouping(format!("position {p}")));
            }
            seen[p] = true;
        }
    }
    if !seen.iter().all(|&b| b) {
        return Err(Error::MalformedGrouping("cells do not cover the segment".into()));
    }
    let grouped: Vec<Ordinal> = cells
        .iter()
        .map(|cell| {
            cell.iter()
                .fold(Ordinal::Zero, |acc, &p| nat_add(&acc, &first[p]))
        })
        .collect();
    let mut segments = s.segments.clone();
    segments[0] = Segment::Explicit(grouped);
    Ok(iter_nat_sum(&SeqDesc::new(segments)) == iter_nat_sum(s))
}

/// Convenience: `n` as a `BigUint`-backed finite ordinal count, used by
/// callers that build multisets from tree data.
pub fn finite_count(n: &BigUint) -> Result<Multiplicity> {
    u64::try_from(n)
        .map(Multiplicity::Finite)
        .map_err(|_| Error::BoundExceeded(usize::MAX))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ordinal::{ord_mul, Monomial};

    fn n(v: u64) -> Ordinal {
        Ordinal::from_nat(v)
    }

    fn w() -> Ordinal {
        Ordinal::omega()
    }

    fn wpow(e: u64, c: u32) -> Ordinal {
        Ordinal::from_monomials(vec![Monomial::new(n(e), c)])
    }

    fn o1() -> Ordinal {
        Ordinal::atom(1)
    }

    fn rep(value: Ordinal, length: Ordinal) -> Segment {
        Segment::Repeat { value, length }
    }

    use Multiplicity::{Aleph, Finite};

    #[test]
    fn countable_nsum_fixtures() {
        let m = OrdMultiset::new([(n(1), Aleph(0))]);
        assert_eq!(countable_nsum(&m).unwrap(), w());

        let m = OrdMultiset::new([(ord_add(&w(), &n(1)), Aleph(0))]);
        assert_eq!(countable_nsum(&m).unwrap(), wpow(2, 1));

        let m = OrdMultiset::new([(ord_add(&wpow(2, 1), &n(1)), Finite(1)), (n(1), Aleph(0))]);
        assert_eq!(countable_nsum(&m).unwrap(), ord_add(&wpow(2, 1), &w()));
    }

    #[test]
    fn countable_nsum_finite_case() {
        let m = OrdMultiset::new([(w(), Finite(2)), (n(3), Finite(1))]);
        assert_eq!(countable_nsum(&m).unwrap(), ord_add(&wpow(1, 2), &n(3)));
        assert_eq!(countable_nsum(&OrdMultiset::default()).unwrap(), n(0));
    }

    #[test]
    fn countable_nsum_rejects_uncountable() {
        let m = OrdMultiset::new([(n(1), Aleph(1))]);
        assert_eq!(countable_nsum(&m), Err(Error::UncountableMultiplicity));
    }

    #[test]
    fn arrangement_fixtures() {
        let m = OrdMultiset::new([(n(1), Aleph(1)), (o1(), Aleph(0))]);
        let asc = SeqDesc::new(vec![rep(n(1), o1()), rep(o1(), w())]);
        assert_eq!(arrangement_nat_sum(&m, &asc).unwrap(), ord_mul(&o1(), &w()));
        let desc = SeqDesc::new(vec![rep(o1(), w()), rep(n(1), o1())]);
        let expect = ord_add(&ord_mul(&o1(), &w()), &o1());
        assert_eq!(arrangement_nat_sum(&m, &desc).unwrap(), expect);

        let m = OrdMultiset::new([(n(1), Aleph(0))]);
        let a = SeqDesc::new(vec![rep(n(1), w())]);
        assert_eq!(arrangement_nat_sum(&m, &a).unwrap(), w());
    }

    #[test]
    fn arrangement_mismatch() {
        let m = OrdMultiset::new([(n(1), Aleph(0))]);
        let bad = SeqDesc::new(vec![rep(n(2), w())]);
        assert!(matches!(
            arrangement_nat_sum(&m, &bad),
            Err(Error::ArrangementMismatch(_))
        ));
        let wrong_card = SeqDesc::new(vec![rep(n(1), o1())]);
        assert!(arrangement_nat_sum(&m, &wrong_card).is_err());
        // explicit copies plus a run must match a mixed multiplicity
        let m2 = OrdMultiset::new([(n(1), Aleph(0)), (w(), Finite(2))]);
        let ok = SeqDesc::new(vec![
            Segment::Explicit(vec![w(), w()]),
            rep(n(1), w()),
        ]);
        assert_eq!(arrangement_nat_sum(&m2, &ok).unwrap(), ord_add(&wpow(1, 2), &w()));
    }

    #[test]
    fn permutation_check_cases() {
        let s = SeqDesc::new(vec![
            Segment::Explicit(vec![n(1), w(), wpow(2, 1)]),
            rep(n(1), w()),
        ]);
        assert!(component_permutation_check(&s, &[2, 1, 0]).unwrap());
        assert!(component_permutation_check(&s, &[0, 1, 2]).unwrap());
        let t = SeqDesc::new(vec![
            Segment::Explicit(vec![n(0), n(1)]),
            rep(n(1), w()),
            Segment::Explicit(vec![n(1)]),
        ]);
        assert!(component_permutation_check(&t, &[1, 0]).unwrap());
        assert!(component_permutation_check(&t, &[1, 1]).is_err());
        assert!(component_permutation_check(&t, &[0, 1, 2]).is_err());
    }

    #[test]
    fn grouping_check_cases() {
        let s = SeqDesc::new(vec![
            Segment::Explicit(vec![n(1), n(1), n(1)]),
            rep(n(1), w()),
        ]);
        assert!(finite_grouping_check(&s, &[vec![0, 1], vec![2]]).unwrap());
        assert!(finite_grouping_check(&s, &[vec![0], vec![1], vec![2]]).unwrap());
        let t = SeqDesc::new(vec![
            Segment::Explicit(vec![w(), n(1)]),
            rep(n(1), w()),
        ]);
        assert!(finite_grouping_check(&t, &[vec![0, 1]]).unwrap());
        assert!(finite_grouping_check(&t, &[vec![0]]).is_err());
        assert!(finite_grouping_check(&t, &[vec![0, 1], vec![1]]).is_err());
    }
}
