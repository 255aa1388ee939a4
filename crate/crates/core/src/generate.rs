//! Deterministic, seeded generators for ordinals, sequence descriptions,
//! arrangements, and trees. All randomized suites draw from these so that
//! runs are reproducible from a single seed.

use num_bigint::BigUint;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use crate::invariant::{Multiplicity, OrdMultiset};
use crate::ordinal::{compare, Monomial, Ordinal};
use crate::seq::{SeqDesc, Segment};
use crate::tree::{TreeDesc, TreeMult};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Shape parameters for random ordinals.
#[derive(Debug, Clone, Copy)]
pub struct OrdinalParams {
    /// maximal nesting depth of exponents (0 = naturals only)
    pub depth: u32,
    /// maximal number of monomials per level
    pub terms: usize,
    /// maximal coefficient
    pub max_coeff: u64,
    /// largest atom index to use, 0 for none
    pub max_atom: u32,
}

impl OrdinalParams {
    /// Small countable ordinals (below `w^w^2`), the workhorse for
    /// algebraic-law suites.
    pub fn algebra() -> Self {
        OrdinalParams { depth: 2, terms: 3, max_coeff: 4, max_atom: 0 }
    }

    /// Very small ordinals with few blocks, for interleaving enumeration.
    pub fn few_blocks() -> Self {
        OrdinalParams { depth: 1, terms: 2, max_coeff: 3, max_atom: 0 }
    }

    /// Wider shapes including atoms, for printer round trips.
    pub fn roundtrip() -> Self {
        OrdinalParams { depth: 3, terms: 3, max_coeff: 9, max_atom: 2 }
    }
}

/// A random ordinal under the given shape parameters.
pub fn random_ordinal(rng: &mut ChaCha8Rng, p: &OrdinalParams) -> Ordinal {
    if p.depth == 0 || rng.gen_bool(0.25) {
        return Ordinal::from_nat(rng.gen_range(0..=p.max_coeff));
    }
    if p.max_atom > 0 && rng.gen_bool(0.15) {
        return Ordinal::atom(rng.gen_range(1..=p.max_atom));
    }
    let sub = OrdinalParams { depth: p.depth - 1, ..*p };
    let count = rng.gen_range(1..=p.terms);
    let mut exps: Vec<Ordinal> = (0..count).map(|_| random_ordinal(rng, &sub)).collect();
    exps.sort_by(|a, b| compare(b, a));
    exps.dedup();
    let monomials = exps
        .into_iter()
        .map(|e| Monomial::new(e, rng.gen_range(1..=p.max_coeff)))
        .collect();
    Ordinal::from_monomials(monomials)
}

/// A nonzero random ordinal.
pub fn random_nonzero_ordinal(rng: &mut ChaCha8Rng, p: &OrdinalParams) -> Ordinal {
    loop {
        let a = random_ordinal(rng, p);
        if !a.is_zero() {
            return a;
        }
    }
}

/// A random sequence description: a few explicit segments and constant
/// runs. With `limit_tail` the final segment is an infinite run with a
/// nonzero value, making the sequence limit-length and not eventually
/// zero.
pub fn random_seq(rng: &mut ChaCha8Rng, p: &OrdinalParams, limit_tail: bool) -> SeqDesc {
    let mut segments = Vec::new();
    let n = rng.gen_range(if limit_tail { 0..=2 } else { 1..=3 });
    for _ in 0..n {
        if rng.gen_bool(0.6) {
            let len = rng.gen_range(1..=3);
            let vs = (0..len).map(|_| random_ordinal(rng, p)).collect();
            segments.push(Segment::Explicit(vs));
        } else {
            segments.push(Segment::Repeat {
                value: random_ordinal(rng, p),
                length: random_run_length(rng),
            });
        }
    }
    if limit_tail {
        segments.push(Segment::Repeat {
            value: random_nonzero_ordinal(rng, p),
            length: random_limit_length(rng),
        });
    }
    SeqDesc::new(segments)
}

/// A run length: finite, `w`-powered, or a small combination.
fn random_run_length(rng: &mut ChaCha8Rng) -> Ordinal {
    if rng.gen_bool(0.5) {
        Ordinal::from_nat(rng.gen_range(1u64..=3))
    } else {
        random_limit_length(rng)
    }
}

/// A limit run length of the form `w^eta * s` (+ smaller limit monomials),
/// with small `eta` and `s`.
fn random_limit_length(rng: &mut ChaCha8Rng) -> Ordinal {
    let eta = rng.gen_range(1u64..=2);
    let s = rng.gen_range(1u64..=2);
    let mut ms = vec![Monomial::new(Ordinal::from_nat(eta), s)];
    if eta == 2 && rng.gen_bool(0.3) {
        ms.push(Monomial::new(Ordinal::one(), rng.gen_range(1u64..=2)));
    }
    Ordinal::from_monomials(ms)
}

/// The flavors of generated arrangements of a multiset.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArrangementStyle {
    Ascending,
    Descending,
    Interleaved,
}

/// Arrangements of a countable multiset as length-`w` (or longer, when
/// entries carry their own runs) sequence descriptions: one run per entry,
/// ordered by value according to the style. Infinite multiplicities become
/// `w`-length runs; the interleaved style additionally splits one copy of
/// each finite entry to the front.
pub fn arrange_countable(m: &OrdMultiset, style: ArrangementStyle) -> SeqDesc {
    let mut entries: Vec<(Ordinal, Multiplicity)> = m.entries().to_vec();
    match style {
        ArrangementStyle::Ascending => entries.sort_by(|a, b| compare(&a.0, &b.0)),
        ArrangementStyle::Descending | ArrangementStyle::Interleaved => {
            entries.sort_by(|a, b| compare(&b.0, &a.0))
        }
    }
    let mut front = Vec::new();
    let mut segments = Vec::new();
    for (v, mult) in entries {
        match mult {
            Multiplicity::Finite(n) => {
                if style == ArrangementStyle::Interleaved && n > 0 {
                    front.push(v.clone());
                    if n > 1 {
                        segments.push(Segment::Explicit(vec![v; (n - 1) as usize]));
                    }
                } else {
                    segments.push(Segment::Explicit(vec![v; n as usize]));
                }
            }
            Multiplicity::Aleph(0) => {
                segments.push(Segment::Repeat { value: v, length: Ordinal::omega() });
            }
            Multiplicity::Aleph(_) => {
                panic!("arrange_countable requires countable multiplicities")
            }
        }
    }
    let mut out = Vec::new();
    if !front.is_empty() {
        out.push(Segment::Explicit(front));
    }
    out.extend(segments);
    SeqDesc::new(out)
}

/// A random countable multiset with exactly one countably-infinite entry
/// and a few finite ones.
pub fn random_countable_multiset(rng: &mut ChaCha8Rng, p: &OrdinalParams) -> OrdMultiset {
    let mut entries = vec![(random_nonzero_ordinal(rng, p), Multiplicity::Aleph(0))];
    for _ in 0..rng.gen_range(0..=3) {
        entries.push((
            random_nonzero_ordinal(rng, p),
            Multiplicity::Finite(rng.gen_range(1..=3)),
        ));
    }
    OrdMultiset::new(entries)
}

/// A random finite tree with at most `max_nodes` nodes.
pub fn random_finite_tree(rng: &mut ChaCha8Rng, max_nodes: u64) -> TreeDesc {
    let budget = rng.gen_range(1..=max_nodes);
    random_tree_with_budget(rng, budget, false)
}

/// A random tree that may use countable multiplicities.
pub fn random_countable_tree(rng: &mut ChaCha8Rng, max_nodes: u64) -> TreeDesc {
    let budget = rng.gen_range(1..=max_nodes);
    random_tree_with_budget(rng, budget, true)
}

fn random_tree_with_budget(rng: &mut ChaCha8Rng, budget: u64, allow_omega: bool) -> TreeDesc {
    if budget <= 1 {
        return TreeDesc::leaf();
    }
    let mut remaining = budget - 1; // the root
    let mut children = Vec::new();
    while remaining > 0 && rng.gen_bool(0.8) {
        let per = rng.gen_range(1..=remaining);
        let mult = if allow_omega && rng.gen_bool(0.3) {
            TreeMult::Omega
        } else {
            TreeMult::Finite(rng.gen_range(1..=3.min(remaining)))
        };
        let copies = match mult {
            TreeMult::Finite(k) => k,
            TreeMult::Omega => 1,
        };
        let per = (per / copies).max(1);
        if per * copies > remaining {
            break;
        }
        remaining -= per * copies;
        children.push((random_tree_with_budget(rng, per, allow_omega), mult));
    }
    if children.is_empty() {
        TreeDesc::leaf()
    } else {
        TreeDesc::node(dedup_children(children))
    }
}

/// Merge equal subtrees so the children list keeps distinct entries.
fn dedup_children(children: Vec<(TreeDesc, TreeMult)>) -> Vec<(TreeDesc, TreeMult)> {
    let mut out: Vec<(TreeDesc, TreeMult)> = Vec::new();
    for (t, m) in children {
        if let Some((_, m0)) = out.iter_mut().find(|(u, _)| *u == t) {
            *m0 = match (*m0, m) {
                (TreeMult::Finite(a), TreeMult::Finite(b)) => TreeMult::Finite(a + b),
                _ => TreeMult::Omega,
            };
        } else {
            out.push((t, m));
        }
    }
    out
}

/// A natural number drawn from the RNG as a `BigUint`, for coefficient
/// fuzzing.
pub fn random_coefficient(rng: &mut ChaCha8Rng, max: u64) -> BigUint {
    BigUint::from(rng.gen_range(1..=max))
}
