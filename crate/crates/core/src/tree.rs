//! Sizes and ranks of countably-branching well-founded trees.
//!
//! Trees are reversed: leaves sit at level 0 and the root is the element of
//! largest rank. The size of a tree is the invariant sum of its children's
//! sizes plus one, so leaves have size 1 and a finite tree's size is its
//! node count. The canonical downward-finite linear extension realizes the
//! same ordinal, built here through an explicit block arrangement instead
//! of the multiset formula, so the two routes check each other.

use num_bigint::BigUint;
use num_traits::One;

use crate::error::Result;
use crate::invariant::{countable_nsum, Multiplicity, OrdMultiset};
use crate::ordinal::{blocks, compare, omega_pow, ord_add, Ordinal};

/// How many equal copies of a subtree hang below a node.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TreeMult {
    Finite(u64),
    Omega,
}

/// A finitely described tree: copies of distinct subtrees below one root.
/// An empty children list is a leaf.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TreeDesc {
    pub children: Vec<(TreeDesc, TreeMult)>,
}

impl TreeDesc {
    pub fn leaf() -> Self {
        TreeDesc::default()
    }

    pub fn node(children: Vec<(TreeDesc, TreeMult)>) -> Self {
        debug_assert!(
            children.iter().all(|(_, m)| *m != TreeMult::Finite(0)),
            "multiplicities must be >= 1"
        );
        TreeDesc { children }
    }
}

/// The rank: 0 for leaves, else one past the largest child rank.
pub fn rank(t: &TreeDesc) -> Ordinal {
    let sup = t
        .children
        .iter()
        .map(|(c, _)| rank(c))
        .max()
        .unwrap_or(Ordinal::Zero);
    if t.children.is_empty() {
        Ordinal::Zero
    } else {
        ord_add(&sup, &Ordinal::one())
    }
}

/// The size: the invariant sum of children sizes, plus one for the root.
pub fn size(t: &TreeDesc) -> Result<Ordinal> {
    Ok(ord_add(&forest_size_of(&t.children)?, &Ordinal::one()))
}

/// The size of a forest: the invariant sum of its trees' sizes.
pub fn forest_size(f: &[(TreeDesc, TreeMult)]) -> Result<Ordinal> {
    forest_size_of(f)
}

fn forest_size_of(f: &[(TreeDesc, TreeMult)]) -> Result<Ordinal> {
    let mut entries = Vec::new();
    for (child, mult) in f {
        let s = size(child)?;
        let m = match mult {
            TreeMult::Finite(n) => Multiplicity::Finite(*n),
            TreeMult::Omega => Multiplicity::Aleph(0),
        };
        entries.push((s, m));
    }
    countable_nsum(&OrdMultiset::new(entries))
}

/// The order type of the canonical downward-finite linear extension: child
/// extensions are arranged as one left-finite mixed sum of maximal order
/// type, and the root goes on top. The arrangement concatenates the CNF
/// blocks of the (suitably truncated) child types in non-increasing order,
/// with one limit block when infinitely many children remain.
pub fn extension_order_type(t: &TreeDesc) -> Result<Ordinal> {
    let mut child_types = Vec::new();
    let mut infinite = false;
    for (child, mult) in &t.children {
        let ot = extension_order_type(child)?;
        match mult {
            TreeMult::Finite(n) => child_types.push((ot, *n)),
            TreeMult::Omega => {
                infinite = true;
                child_types.push((ot, 0));
            }
        }
    }
    let below = max_left_finite_arrangement(&child_types, infinite);
    Ok(ord_add(&below, &Ordinal::one()))
}

/// Maximal left-finite arrangement of the given order types (`count` 0
/// marks countably many copies). All blocks are laid out in non-increasing
/// order; with infinitely many members, only the blocks at or above the
/// critical power survive, and a single `w`-power block carries everything
/// smaller.
fn max_left_finite_arrangement(types: &[(Ordinal, u64)], infinite: bool) -> Ordinal {
    let mut pieces: Vec<Ordinal> = Vec::new();
    if infinite {
        // least xi with only finitely many members >= w^xi
        let mut xi = Ordinal::Zero;
        for (ot, count) in types {
            if *count == 0 && !ot.is_zero() {
                let needed = ord_add(
                    &crate::ordinal::leading_exponent(ot).expect("nonzero"),
                    &Ordinal::one(),
                );
                if compare(&needed, &xi) == std::cmp::Ordering::Greater {
                    xi = needed;
                }
            }
        }
        for (ot, count) in types {
            if *count > 0 {
                let kept = crate::ordinal::truncate(ot, &xi);
                for _ in 0..*count {
                    pieces.extend(blocks(&kept));
                }
            }
        }
        pieces.push(omega_pow(&xi));
    } else {
        for (ot, count) in types {
            for _ in 0..*count {
                pieces.extend(blocks(ot));
            }
        }
    }
    pieces.sort_by(|a, b| compare(b, a));
    pieces
        .iter()
        .fold(Ordinal::Zero, |acc, p| ord_add(&acc, p))
}

/// Replace every countable multiplicity by `n`, yielding a finite tree.
pub fn truncate_tree(t: &TreeDesc, n: u64) -> TreeDesc {
    assert!(n >= 1, "truncation multiplicity must be >= 1");
    TreeDesc {
        children: t
            .children
            .iter()
            .map(|(c, m)| {
                let m = match m {
                    TreeMult::Finite(k) => TreeMult::Finite(*k),
                    TreeMult::Omega => TreeMult::Finite(n),
                };
                (truncate_tree(c, n), m)
            })
            .collect(),
    }
}

/// Number of nodes of a finite tree, as an ordinal; `None` if any
/// multiplicity is countable.
pub fn node_count(t: &TreeDesc) -> Option<Ordinal> {
    let mut total = BigUint::one();
    for (c, m) in &t.children {
        let per = node_count(c)?.as_finite()?;
        match m {
            TreeMult::Finite(k) => total += per * *k,
            TreeMult::Omega => return None,
        }
    }
    Some(Ordinal::from_nat(total))
}

/// All linear-extension order types of a small finite tree, by brute force
/// over the topological orders of its node poset. Exponential; callers
/// keep the node count tiny.
pub fn brute_force_extension_types(t: &TreeDesc) -> Vec<Ordinal> {
    // materialize the poset: parent above child (child precedes parent)
    let mut parents: Vec<Option<usize>> = Vec::new();
    build_poset(t, None, &mut parents);
    let n = parents.len();
    let mut types = Vec::new();
    let mut placed = vec![false; n];
    let mut order = Vec::new();
    enumerate_linear(&parents, &mut placed, &mut order, &mut types);
    types.sort();
    types.dedup();
    types
}

fn build_poset(t: &TreeDesc, parent: Option<usize>, parents: &mut Vec<Option<usize>>) {
    let me = parents.len();
    parents.push(parent);
    for (c, m) in &t.children {
        let k = match m {
            TreeMult::Finite(k) => *k,
            TreeMult::Omega => panic!("brute force requires a finite tree"),
        };
        for _ in 0..k {
            build_poset(c, Some(me), parents);
        }
    }
}

fn enumerate_linear(
    parents: &[Option<usize>],
    placed: &mut [bool],
    order: &mut Vec<usize>,
    types: &mut Vec<Ordinal>,
) {
    if order.len() == parents.len() {
        // in the reversed tree every node precedes its parent, so a valid
        // order lists children first; its type is just its length
        types.push(Ordinal::from_nat(order.len() as u64));
        return;
    }
    for v in 0..parents.len() {
        if placed[v] {
            continue;
        }
        // v may be placed once all elements below it (its subtree children)
        // are placed; children of v are the nodes whose parent is v
        let ready = parents
            .iter()
            .enumerate()
            .all(|(u, p)| *p != Some(v) || placed[u]);
        if !ready {
            continue;
        }
        placed[v] = true;
        order.push(v);
        enumerate_linear(parents, placed, order, types);
        order.pop();
        placed[v] = false;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ordinal::Monomial;

    fn n(v: u64) -> Ordinal {
        Ordinal::from_nat(v)
    }

    fn w() -> Ordinal {
        Ordinal::omega()
    }

    fn wpow(e: u64, c: u32) -> Ordinal {
        Ordinal::from_monomials(vec![Monomial::new(n(e), c)])
    }

    fn star_omega() -> TreeDesc {
        TreeDesc::node(vec![(TreeDesc::leaf(), TreeMult::Omega)])
    }

    #[test]
    fn rank_cases() {
        assert_eq!(rank(&TreeDesc::leaf()), n(0));
        assert_eq!(rank(&star_omega()), n(1));
        let nested = TreeDesc::node(vec![(star_omega(), TreeMult::Omega)]);
        assert_eq!(rank(&nested), n(2));
    }

    #[test]
    fn size_cases() {
        // path of 3 nodes and a cherry both have 3 nodes
        let path = TreeDesc::node(vec![(
            TreeDesc::node(vec![(TreeDesc::leaf(), TreeMult::Finite(1))]),
            TreeMult::Finite(1),
        )]);
        assert_eq!(size(&path).unwrap(), n(3));
        let cherry = TreeDesc::node(vec![(TreeDesc::leaf(), TreeMult::Finite(2))]);
        assert_eq!(size(&cherry).unwrap(), n(3));

        assert_eq!(size(&star_omega()).unwrap(), ord_add(&w(), &n(1)));
        let nested = TreeDesc::node(vec![(star_omega(), TreeMult::Omega)]);
        assert_eq!(size(&nested).unwrap(), ord_add(&wpow(2, 1), &n(1)));
    }

    #[test]
    fn forest_size_cases() {
        let two_leaves = vec![(TreeDesc::leaf(), TreeMult::Finite(2))];
        assert_eq!(forest_size(&two_leaves).unwrap(), n(2));
        let omega_leaves = vec![(TreeDesc::leaf(), TreeMult::Omega)];
        assert_eq!(forest_size(&omega_leaves).unwrap(), w());
        let single = vec![(star_omega(), TreeMult::Finite(1))];
        assert_eq!(forest_size(&single).unwrap(), size(&star_omega()).unwrap());
    }

    #[test]
    fn extension_matches_size() {
        let samples = [
            TreeDesc::leaf(),
            star_omega(),
            TreeDesc::node(vec![(star_omega(), TreeMult::Omega)]),
            TreeDesc::node(vec![
                (star_omega(), TreeMult::Finite(2)),
                (TreeDesc::leaf(), TreeMult::Omega),
            ]),
            TreeDesc::node(vec![
                (TreeDesc::node(vec![(TreeDesc::leaf(), TreeMult::Finite(3))]), TreeMult::Finite(2)),
                (TreeDesc::leaf(), TreeMult::Finite(5)),
            ]),
        ];
        for t in &samples {
            assert_eq!(extension_order_type(t).unwrap(), size(t).unwrap(), "{t:?}");
        }
    }

    #[test]
    fn truncation_and_counts() {
        let t = TreeDesc::node(vec![(star_omega(), TreeMult::Omega)]);
        let t2 = truncate_tree(&t, 2);
        // 2 stars of 2 leaves each, plus their roots, plus the top root
        assert_eq!(node_count(&t2).unwrap(), n(7));
        assert_eq!(size(&t2).unwrap(), n(7));
        let mut last = Ordinal::Zero;
        for k in 1..=5 {
            let s = size(&truncate_tree(&t, k)).unwrap();
            assert!(compare(&last, &s) == std::cmp::Ordering::Less);
            assert!(compare(&s, &size(&t).unwrap()) == std::cmp::Ordering::Less);
            last = s;
        }
    }

    #[test]
    fn brute_force_finite_extensions() {
        let cherry = TreeDesc::node(vec![(TreeDesc::leaf(), TreeMult::Finite(2))]);
        assert_eq!(brute_force_extension_types(&cherry), vec![n(3)]);
        let t = TreeDesc::node(vec![
            (TreeDesc::node(vec![(TreeDesc::leaf(), TreeMult::Finite(1))]), TreeMult::Finite(1)),
            (TreeDesc::leaf(), TreeMult::Finite(2)),
        ]);
        assert_eq!(brute_force_extension_types(&t), vec![size(&t).unwrap()]);
    }

    #[test]
    fn rank_size_coherence() {
        let samples = [
            TreeDesc::leaf(),
            star_omega(),
            TreeDesc::node(vec![(star_omega(), TreeMult::Omega)]),
        ];
        for t in &samples {
            let lower = ord_add(&rank(t), &Ordinal::one());
            assert!(compare(&size(t).unwrap(), &lower) != std::cmp::Ordering::Less);
        }
    }
}
