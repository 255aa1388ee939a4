//! Ordinal terms in Cantor normal form and the basic arithmetic on them:
//! comparison, ordinal sum and product, the Hessenberg natural sum,
//! truncation and block decomposition.
//!
//! Every nonzero ordinal below the first uncountable-cardinal atom is a sum
//! `w^e_k * c_k + ... + w^e_0 * c_0` with strictly decreasing exponents and
//! positive integer coefficients. Uncountable cardinals enter only as opaque
//! atoms `Omega(k)` (the k-th uncountable cardinal), which are epsilon
//! numbers: `w^Omega(k) = Omega(k)`.

use std::cmp::Ordering;

use num_bigint::BigUint;
use num_traits::{One, Zero as _};

use crate::error::{Error, Result};

/// A monomial `w^exponent * coefficient` with `coefficient >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub exponent: Ordinal,
    pub coefficient: BigUint,
}

impl Monomial {
    pub fn new(exponent: Ordinal, coefficient: impl Into<BigUint>) -> Self {
        let coefficient = coefficient.into();
        assert!(!coefficient.is_zero(), "monomial coefficient must be >= 1");
        Monomial { exponent, coefficient }
    }
}

/// An ordinal term in canonical form.
///
/// Invariants: `Cnf` holds a nonempty list of monomials with strictly
/// decreasing exponents, and a `Cnf` consisting of the single monomial
/// `(Omega(k), 1)` is forbidden; that value is the leaf `Atom(k)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Ordinal {
    Zero,
    /// The k-th uncountable cardinal, `k >= 1`.
    Atom(u32),
    Cnf(Vec<Monomial>),
}

impl Ordinal {
    pub fn zero() -> Self {
        Ordinal::Zero
    }

    pub fn one() -> Self {
        Ordinal::from_nat(1u32)
    }

    /// The ordinal `w`.
    pub fn omega() -> Self {
        Ordinal::Cnf(vec![Monomial::new(Ordinal::one(), 1u32)])
    }

    /// The k-th uncountable cardinal `Omega(k)`, `k >= 1`.
    pub fn atom(k: u32) -> Self {
        assert!(k >= 1, "atom index must be >= 1");
        Ordinal::Atom(k)
    }

    pub fn from_nat(n: impl Into<BigUint>) -> Self {
        let n = n.into();
        if n.is_zero() {
            Ordinal::Zero
        } else {
            Ordinal::Cnf(vec![Monomial::new(Ordinal::Zero, n)])
        }
    }

    /// Canonicalizing constructor from a monomial list sorted by strictly
    /// decreasing exponent.
    pub fn from_monomials(monomials: Vec<Monomial>) -> Self {
        debug_assert!(
            monomials.windows(2).all(|w| compare(&w[0].exponent, &w[1].exponent) == Ordering::Greater),
            "monomial exponents must be strictly decreasing"
        );
        if monomials.is_empty() {
            return Ordinal::Zero;
        }
        if monomials.len() == 1 && monomials[0].coefficient.is_one() {
            if let Ordinal::Atom(k) = monomials[0].exponent {
                // w^Omega(k) = Omega(k)
                return Ordinal::Atom(k);
            }
        }
        Ordinal::Cnf(monomials)
    }

    /// The monomial list view. `Atom(k)` reads as the single monomial
    /// `(Omega(k), 1)`; `Zero` as the empty list.
    pub fn monomials(&self) -> Vec<Monomial> {
        match self {
            Ordinal::Zero => Vec::new(),
            Ordinal::Atom(k) => vec![Monomial::new(Ordinal::Atom(*k), 1u32)],
            Ordinal::Cnf(ms) => ms.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Ordinal::Zero)
    }

    /// The natural number this term denotes, if finite.
    pub fn as_finite(&self) -> Option<BigUint> {
        match self {
            Ordinal::Zero => Some(BigUint::zero()),
            Ordinal::Atom(_) => None,
            Ordinal::Cnf(ms) => {
                if ms.len() == 1 && ms[0].exponent.is_zero() {
                    Some(ms[0].coefficient.clone())
                } else {
                    None
                }
            }
        }
    }

    pub fn is_finite(&self) -> bool {
        self.as_finite().is_some()
    }

    /// True for nonzero ordinals without a finite part.
    pub fn is_limit(&self) -> bool {
        match self {
            Ordinal::Zero => false,
            Ordinal::Atom(_) => true,
            Ordinal::Cnf(ms) => !ms.last().unwrap().exponent.is_zero(),
        }
    }

    /// The coefficient of `w^0`, i.e. the finite part.
    pub fn finite_part(&self) -> BigUint {
        match self {
            Ordinal::Cnf(ms) if ms.last().unwrap().exponent.is_zero() => {
                ms.last().unwrap().coefficient.clone()
            }
            _ => BigUint::zero(),
        }
    }

    /// The term with its finite part removed (zero or a limit ordinal).
    pub fn limit_part(&self) -> Ordinal {
        match self {
            Ordinal::Cnf(ms) if ms.last().unwrap().exponent.is_zero() => {
                Ordinal::from_monomials(ms[..ms.len() - 1].to_vec())
            }
            other => other.clone(),
        }
    }

    /// Largest atom index occurring anywhere in the term, if any.
    pub fn max_atom_index(&self) -> Option<u32> {
        match self {
            Ordinal::Zero => None,
            Ordinal::Atom(k) => Some(*k),
            Ordinal::Cnf(ms) => ms.iter().filter_map(|m| m.exponent.max_atom_index()).max(),
        }
    }
}

impl From<u64> for Ordinal {
    fn from(n: u64) -> Self {
        Ordinal::from_nat(n)
    }
}

impl PartialOrd for Ordinal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ordinal {
    fn cmp(&self, other: &Self) -> Ordering {
        compare(self, other)
    }
}

/// Total order on ordinal terms: lexicographic on the `(exponent,
/// coefficient)` monomial lists, recursing into exponents.
pub fn compare(a: &Ordinal, b: &Ordinal) -> Ordering {
    match (a, b) {
        (Ordinal::Zero, Ordinal::Zero) => Ordering::Equal,
        (Ordinal::Zero, _) => Ordering::Less,
        (_, Ordinal::Zero) => Ordering::Greater,
        (Ordinal::Atom(j), Ordinal::Atom(k)) => j.cmp(k),
        _ => {
            let am = a.monomials();
            let bm = b.monomials();
            for i in 0..am.len().max(bm.len()) {
                match (am.get(i), bm.get(i)) {
                    (None, None) => unreachable!(),
                    (None, Some(_)) => return Ordering::Less,
                    (Some(_), None) => return Ordering::Greater,
                    (Some(x), Some(y)) => {
                        match compare(&x.exponent, &y.exponent) {
                            Ordering::Equal => {}
                            ord => return ord,
                        }
                        match x.coefficient.cmp(&y.coefficient) {
                            Ordering::Equal => {}
                            ord => return ord,
                        }
                    }
                }
            }
            Ordering::Equal
        }
    }
}

/// Ordinary ordinal sum `a + b` on CNF terms: monomials of `a` below the
/// leading exponent of `b` are absorbed.
pub fn ord_add(a: &Ordinal, b: &Ordinal) -> Ordinal {
    if b.is_zero() {
        return a.clone();
    }
    if a.is_zero() {
        return b.clone();
    }
    let am = a.monomials();
    let bm = b.monomials();
    let eta = &bm[0].exponent;
    let mut out: Vec<Monomial> = Vec::new();
    for m in &am {
        match compare(&m.exponent, eta) {
            Ordering::Greater => out.push(m.clone()),
            _ => break,
        }
    }
    let boundary = am
        .iter()
        .find(|m| compare(&m.exponent, eta) == Ordering::Equal)
        .map(|m| m.coefficient.clone())
        .unwrap_or_else(BigUint::zero);
    out.push(Monomial::new(eta.clone(), boundary + &bm[0].coefficient));
    out.extend(bm[1..].iter().cloned());
    Ordinal::from_monomials(out)
}

/// Hessenberg natural sum `a (+) b`: coefficient-wise merge of the monomial
/// lists.
pub fn nat_add(a: &Ordinal, b: &Ordinal) -> Ordinal {
    let am = a.monomials();
    let bm = b.monomials();
    let mut out: Vec<Monomial> = Vec::new();
    let (mut i, mut j) = (0usize, 0usize);
    while i < am.len() || j < bm.len() {
        match (am.get(i), bm.get(j)) {
            (Some(x), Some(y)) => match compare(&x.exponent, &y.exponent) {
                Ordering::Greater => {
                    out.push(x.clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(y.clone());
                    j += 1;
                }
                Ordering::Equal => {
                    out.push(Monomial::new(x.exponent.clone(), &x.coefficient + &y.coefficient));
                    i += 1;
                    j += 1;
                }
            },
            (Some(x), None) => {
                out.push(x.clone());
                i += 1;
            }
            (None, Some(y)) => {
                out.push(y.clone());
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    Ordinal::from_monomials(out)
}

/// `n`-fold natural sum of `a`: every coefficient scaled by `n`.
pub fn nat_mul_fin(a: &Ordinal, n: impl Into<BigUint>) -> Ordinal {
    let n = n.into();
    if n.is_zero() || a.is_zero() {
        return Ordinal::Zero;
    }
    let ms = a
        .monomials()
        .into_iter()
        .map(|m| Monomial::new(m.exponent, m.coefficient * &n))
        .collect();
    Ordinal::from_monomials(ms)
}

/// Ordinary ordinal product `a * b`, distributed over `b`'s monomials from
/// the left: `a * w^e = w^(lead(a) + e)` for `e > 0`, and `a * n` scales the
/// leading coefficient keeping the tail.
pub fn ord_mul(a: &Ordinal, b: &Ordinal) -> Ordinal {
    if a.is_zero() || b.is_zero() {
        return Ordinal::Zero;
    }
    let lead = leading_exponent(a).expect("nonzero");
    let mut acc = Ordinal::Zero;
    for m in b.monomials() {
        let term = if m.exponent.is_zero() {
            // a * n: leading coefficient times n, tail kept
            let mut ms = a.monomials();
            ms[0].coefficient = &ms[0].coefficient * &m.coefficient;
            Ordinal::from_monomials(ms)
        } else {
            Ordinal::from_monomials(vec![Monomial::new(ord_add(&lead, &m.exponent), m.coefficient)])
        };
        acc = ord_add(&acc, &term);
    }
    acc
}

/// `w^e`, canonicalized (`w^Omega(k) = Omega(k)`).
pub fn omega_pow(e: &Ordinal) -> Ordinal {
    Ordinal::from_monomials(vec![Monomial::new(e.clone(), 1u32)])
}

/// `a` truncated at the `eta`-th exponent of `w`: keep exactly the monomials
/// with exponent `>= eta`; zero when `a < w^eta`.
pub fn truncate(a: &Ordinal, eta: &Ordinal) -> Ordinal {
    let ms = a
        .monomials()
        .into_iter()
        .take_while(|m| compare(&m.exponent, eta) != Ordering::Less)
        .collect();
    Ordinal::from_monomials(ms)
}

/// First exponent of the CNF of `a`; error on zero.
pub fn leading_exponent(a: &Ordinal) -> Result<Ordinal> {
    match a {
        Ordinal::Zero => Err(Error::ExponentOfZero),
        _ => Ok(a.monomials()[0].exponent.clone()),
    }
}

/// Last exponent of the CNF of `a`; error on zero.
pub fn smallest_exponent(a: &Ordinal) -> Result<Ordinal> {
    match a {
        Ordinal::Zero => Err(Error::ExponentOfZero),
        _ => Ok(a.monomials().last().unwrap().exponent.clone()),
    }
}

/// The block order types of `a` read off its CNF: coefficient `c` at
/// exponent `e` contributes `c` consecutive entries `w^e`, in decreasing
/// exponent order.
pub fn blocks(a: &Ordinal) -> Vec<Ordinal> {
    let mut out = Vec::new();
    for m in a.monomials() {
        let c = usize::try_from(&m.coefficient).expect("block expansion needs a machine-size coefficient");
        let power = omega_pow(&m.exponent);
        out.extend(std::iter::repeat(power).take(c));
    }
    out
}

/// The unique `e` with `a + e = d`, if `a <= d` (left subtraction).
pub(crate) fn ord_sub_left(a: &Ordinal, d: &Ordinal) -> Option<Ordinal> {
    let am = a.monomials();
    let dm = d.monomials();
    let mut i = 0usize;
    loop {
        match (am.get(i), dm.get(i)) {
            (None, None) => return Some(Ordinal::Zero),
            (None, Some(_)) => return Some(Ordinal::from_monomials(dm[i..].to_vec())),
            (Some(_), None) => return None,
            (Some(x), Some(y)) => match compare(&x.exponent, &y.exponent) {
                Ordering::Greater => return None,
                Ordering::Less => return Some(Ordinal::from_monomials(dm[i..].to_vec())),
                Ordering::Equal => match x.coefficient.cmp(&y.coefficient) {
                    Ordering::Greater => return None,
                    Ordering::Less => {
                        let mut rest = vec![Monomial::new(
                            y.exponent.clone(),
                            &y.coefficient - &x.coefficient,
                        )];
                        rest.extend(dm[i + 1..].iter().cloned());
                        return Some(Ordinal::from_monomials(rest));
                    }
                    Ordering::Equal => i += 1,
                },
            },
        }
    }
}
