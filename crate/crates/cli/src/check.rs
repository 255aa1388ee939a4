//! Randomized property suites over the core library, runnable from the
//! `check` subcommand and reused by the integration tests. Every suite is
//! deterministic in its seed and reports failures as strings rather than
//! panicking, so the CLI can aggregate them.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use ordcalc_core::generate::{
    arrange_countable, random_countable_multiset, random_countable_tree, random_finite_tree,
    random_ordinal, random_seq, rng, ArrangementStyle, OrdinalParams,
};
use ordcalc_core::invariant::{arrangement_nat_sum, countable_nsum};
use ordcalc_core::mixed::{
    block_cover_check, check_condition_gamma, enumerate_pure_interleavings, order_type_of,
    pure_merge,
};
use ordcalc_core::ordinal::{
    blocks, compare, leading_exponent, nat_add, nat_mul_fin, omega_pow, ord_add, truncate,
};
use ordcalc_core::seq::split_step_set;
use ordcalc_core::sum::{
    g_sum, g_sum_spectrum, iter_nat_sum, iter_ord_sum, partial_nat_sum, range_nat_sum,
    range_ord_sum, tail_character, validate_step_set,
};
use ordcalc_core::tree::{
    brute_force_extension_types, extension_order_type, node_count, rank, size, truncate_tree,
};
use ordcalc_core::{Monomial, Multiplicity, Ordinal, Position, SeqDesc, Segment, StepSet};

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

/// Outcome of one suite run.
#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub const SUITES: &[&str] = &[
    "algebra",
    "carruth",
    "sandwich",
    "dominance",
    "lm",
    "infsum",
    "spectrum",
    "repeat-rule",
    "id",
    "treesize",
    "roundtrip",
];

/// Run one suite by name.
pub fn run_suite(name: &str, seed: u64, cases: usize) -> Option<SuiteReport> {
    Some(match name {
        "algebra" => algebra_suite(seed, cases),
        "carruth" => carruth_suite(seed, cases),
        "sandwich" => sandwich_suite(seed, cases),
        "dominance" => dominance_suite(seed, cases),
        "lm" => lm_suite(seed, cases),
        "infsum" => infsum_suite(seed, cases),
        "spectrum" => spectrum_suite(seed, cases),
        "repeat-rule" => repeat_rule_suite(),
        "id" => id_suite(seed, cases),
        "treesize" => treesize_suite(seed, cases),
        "roundtrip" => roundtrip_suite(seed, cases),
        _ => return None,
    })
}

fn le(a: &Ordinal, b: &Ordinal) -> bool {
    compare(a, b) != Ordering::Greater
}

fn lt(a: &Ordinal, b: &Ordinal) -> bool {
    compare(a, b) == Ordering::Less
}

fn wpow_times(e: &Ordinal, c: u64) -> Ordinal {
    if c == 0 {
        Ordinal::Zero
    } else {
        Ordinal::from_monomials(vec![Monomial::new(e.clone(), c as u32)])
    }
}

/// Laws of the natural sum and its interaction with the ordinal sum, on
/// random triples.
pub fn algebra_suite(seed: u64, cases: usize) -> SuiteReport {
    let mut failures = Vec::new();
    let mut r = rng(seed);
    let p = OrdinalParams::algebra();
    for case in 0..cases {
        let a = random_ordinal(&mut r, &p);
        let b = random_ordinal(&mut r, &p);
        let c = random_ordinal(&mut r, &p);
        let mut fail = |msg: String| failures.push(format!("case {case}: {msg}"));

        // commutativity, associativity, cancellation, strict monotonicity
        if nat_add(&a, &b) != nat_add(&b, &a) {
            fail(format!("natural sum not commutative on {a:?}, {b:?}"));
        }
        if nat_add(&nat_add(&a, &b), &c) != nat_add(&a, &nat_add(&b, &c)) {
            fail("natural sum not associative".into());
        }
        if a != b && nat_add(&a, &c) == nat_add(&b, &c) {
            fail("natural sum not cancellative".into());
        }
        if lt(&b, &c) && !lt(&nat_add(&a, &b), &nat_add(&a, &c)) {
            fail("natural sum not strictly monotone".into());
        }

        // sup{a,b} <= a+b <= a(+)b
        let sup = if le(&a, &b) { &b } else { &a };
        let osum = ord_add(&a, &b);
        let nsum = nat_add(&a, &b);
        if !le(sup, &osum) || !le(&osum, &nsum) {
            fail(format!("sum comparisons failed on {a:?}, {b:?}"));
        }

        // for beta < w^eta: a (+) beta < a + w^eta
        let eta = Ordinal::from_nat(r.gen_range(0u64..=3));
        let beta_small = Ordinal::from_monomials(
            b.monomials()
                .into_iter()
                .filter(|m| lt(&m.exponent, &eta))
                .collect(),
        );
        let bound = ord_add(&a, &omega_pow(&eta));
        if !lt(&nat_add(&a, &beta_small), &bound) {
            fail(format!("a (+) beta >= a + w^eta for a={a:?}, beta={beta_small:?}, eta={eta:?}"));
        }

        // splitting of w^eta*r lower bounds across the two summands
        for m in nsum.monomials() {
            let rr = u64::try_from(&m.coefficient).unwrap_or(0).min(6);
            for target in 1..=rr {
                let need = wpow_times(&m.exponent, target);
                if !le(&need, &nsum) {
                    continue;
                }
                let found = (0..=target).any(|r1| {
                    le(&wpow_times(&m.exponent, r1), &a)
                        && le(&wpow_times(&m.exponent, target - r1), &b)
                });
                if !found {
                    fail(format!("no split of w^e*{target} between {a:?} and {b:?}"));
                }
            }
        }

        // a + b = a|eta + b = a|eta (+) b with eta = lead(b)
        if !b.is_zero() {
            let eta_b = leading_exponent(&b).unwrap();
            let a_cut = truncate(&a, &eta_b);
            if osum != ord_add(&a_cut, &b) || osum != nat_add(&a_cut, &b) {
                fail(format!("truncated-sum identity failed on {a:?}, {b:?}"));
            }
        }

        // mixed-associativity inequalities
        if !le(&ord_add(&a, &nat_add(&b, &c)), &nat_add(&ord_add(&a, &b), &c)) {
            fail("(a+b) (+) c >= a + (b (+) c) failed".into());
        }
        if !le(&ord_add(&nat_add(&a, &b), &c), &nat_add(&a, &ord_add(&b, &c))) {
            fail("a (+) (b+c) >= (a (+) b) + c failed".into());
        }

        // ordinal-sum associativity, block shape, block reassembly
        if ord_add(&ord_add(&a, &b), &c) != ord_add(&a, &ord_add(&b, &c)) {
            fail("ordinal sum not associative".into());
        }
        let bl = blocks(&a);
        if bl.windows(2).any(|w| lt(&w[0], &w[1])) {
            fail("blocks not non-increasing".into());
        }
        let rebuilt = bl.iter().fold(Ordinal::Zero, |acc, p| ord_add(&acc, p));
        if rebuilt != a {
            fail("blocks do not reassemble".into());
        }

        // natural sum scaling matches repeated addition
        let n = r.gen_range(0u64..=4);
        let mut acc = Ordinal::Zero;
        for _ in 0..n {
            acc = nat_add(&acc, &a);
        }
        if nat_mul_fin(&a, n) != acc {
            fail("finite natural multiple mismatch".into());
        }
    }
    SuiteReport { name: "algebra", cases, failures }
}

/// Maximality of the natural sum among pure interleavings, with the merge
/// witness, cover and finiteness conditions.
pub fn carruth_suite(seed: u64, cases: usize) -> SuiteReport {
    let mut failures = Vec::new();
    let mut r = rng(seed);
    let p = OrdinalParams::few_blocks();
    for case in 0..cases {
        let a = random_ordinal(&mut r, &p);
        let b = random_ordinal(&mut r, &p);
        let mut fail = |msg: String| failures.push(format!("case {case} ({a:?}, {b:?}): {msg}"));
        let nsum = nat_add(&a, &b);
        let vals = match enumerate_pure_interleavings(&a, &b) {
            Ok(v) => v,
            Err(e) => {
                fail(format!("enumeration failed: {e}"));
                continue;
            }
        };
        match vals.iter().max_by(|x, y| compare(x, y)) {
            Some(max) if *max == nsum => {}
            other => fail(format!("maximum {other:?} is not the natural sum {nsum:?}")),
        }
        if vals.iter().any(|v| !le(v, &nsum)) {
            fail("an interleaving exceeds the natural sum".into());
        }
        if !vals.contains(&ord_add(&a, &b)) || !vals.contains(&ord_add(&b, &a)) {
            fail("one-after-the-other orders missing".into());
        }
        let merged = pure_merge(&a, &b);
        if order_type_of(&merged) != nsum {
            fail("pure merge does not realize the natural sum".into());
        }
        if !check_condition_gamma(&merged) {
            fail("finiteness condition fails on the merge".into());
        }
        if !block_cover_check(&a, &b) {
            fail("block cover fails".into());
        }
    }
    SuiteReport { name: "carruth", cases, failures }
}

/// A list of supported split points of `s`: segment boundaries and small
/// finite offsets past them, capped below the total length.
fn split_points(s: &SeqDesc, r: &mut ChaCha8Rng) -> Vec<Ordinal> {
    let zeta = s.length();
    let mut pts = vec![Ordinal::Zero];
    let mut boundary = Ordinal::Zero;
    for seg in &s.segments {
        for _ in 0..2 {
            let k = r.gen_range(0u64..=3);
            let cand = ord_add(&boundary, &Ordinal::from_nat(k));
            if le(&cand, &zeta) {
                pts.push(cand);
            }
        }
        boundary = ord_add(&boundary, &seg.length());
        pts.push(boundary.clone());
    }
    pts.sort();
    pts.dedup();
    pts
}

/// A random step set valid for `s`: positions in explicit segments and in
/// the finite remainders of constant runs.
fn random_step_set(s: &SeqDesc, r: &mut ChaCha8Rng) -> StepSet {
    match r.gen_range(0..4) {
        0 => StepSet::AllNatural,
        1 => StepSet::AllOrdinary,
        _ => {
            let mut ps = BTreeSet::new();
            for (i, seg) in s.segments.iter().enumerate() {
                match seg {
                    Segment::Explicit(vs) => {
                        for k in 0..vs.len() {
                            if r.gen_bool(0.4) {
                                ps.insert(Position::new(i, k as u64));
                            }
                        }
                    }
                    Segment::Repeat { length, .. } => {
                        let limit = length.limit_part();
                        let n = u64::try_from(&length.finite_part()).unwrap_or(0);
                        for k in 0..n.min(4) {
                            if r.gen_bool(0.4) {
                                ps.insert(Position {
                                    segment: i,
                                    offset: ord_add(&limit, &Ordinal::from_nat(k)),
                                });
                            }
                        }
                    }
                }
            }
            StepSet::Selected(ps)
        }
    }
}

/// The partial-sum sandwich between natural and ordinary joins of a split,
/// for the plain iterated sum and for sums relative to a step set.
pub fn sandwich_suite(seed: u64, cases: usize) -> SuiteReport {
    let mut failures = Vec::new();
    let mut r = rng(seed);
    let p = OrdinalParams::algebra();
    for case in 0..cases {
        let limit_tail = r.gen_bool(0.5);
        let s = random_seq(&mut r, &p, limit_tail);
        let pts = split_points(&s, &mut r);
        let mut fail = |msg: String| failures.push(format!("case {case} {s:?}: {msg}"));
        for lo in &pts {
            for hi in &pts {
                if compare(lo, hi) == Ordering::Greater {
                    continue;
                }
                let p_lo = partial_nat_sum(&s, lo).unwrap();
                let p_hi = partial_nat_sum(&s, hi).unwrap();
                let mid_nat = range_nat_sum(&s, lo, hi).unwrap();
                if !le(&p_hi, &nat_add(&p_lo, &mid_nat)) || !le(&ord_add(&p_lo, &mid_nat), &p_hi)
                {
                    fail(format!("natural-sum sandwich fails on [{lo:?}, {hi:?})"));
                }
            }
        }
        // the same shape for a sum relative to a random step set
        let g = random_step_set(&s, &mut r);
        let full = match g_sum(&s, &g) {
            Ok(v) => v,
            Err(e) => {
                fail(format!("step set rejected: {e}"));
                continue;
            }
        };
        for pt in &pts {
            let (prefix, _, cut) = s.split_at(pt).unwrap();
            let g_prefix = match &g {
                StepSet::Selected(ps) => StepSet::Selected(split_step_set(ps, &cut).0),
                other => other.clone(),
            };
            let partial = g_sum(&prefix, &g_prefix).unwrap();
            let zeta = s.length();
            let tail_nat = range_nat_sum(&s, pt, &zeta).unwrap();
            let tail_ord = range_ord_sum(&s, pt, &zeta).unwrap();
            if !le(&ord_add(&partial, &tail_ord), &full) || !le(&full, &nat_add(&partial, &tail_nat))
            {
                fail(format!("relative-sum sandwich fails at {pt:?}"));
            }
        }
    }
    SuiteReport { name: "sandwich", cases, failures }
}

/// Dominance of the natural over the ordinary sum, pointwise and prefix
/// monotonicity, zero removal, and the finite picking bound.
pub fn dominance_suite(seed: u64, cases: usize) -> SuiteReport {
    let mut failures = Vec::new();
    let mut r = rng(seed);
    let p = OrdinalParams::algebra();
    for case in 0..cases {
        let limit_tail = r.gen_bool(0.5);
        let s = random_seq(&mut r, &p, limit_tail);
        let mut fail = |msg: String| failures.push(format!("case {case} {s:?}: {msg}"));
        let total_nat = iter_nat_sum(&s);
        let total_ord = iter_ord_sum(&s);
        if !le(&total_ord, &total_nat) {
            fail("ordinary sum exceeds natural sum".into());
        }

        // pointwise smaller values give smaller sums
        let shrunk = SeqDesc::new(
            s.segments
                .iter()
                .map(|seg| match seg {
                    Segment::Explicit(vs) => Segment::Explicit(
                        vs.iter().map(|v| shrink_value(v, &mut r)).collect(),
                    ),
                    Segment::Repeat { value, length } => Segment::Repeat {
                        value: shrink_value(value, &mut r),
                        length: length.clone(),
                    },
                })
                .collect(),
        );
        if !le(&iter_nat_sum(&shrunk), &total_nat) || !le(&iter_ord_sum(&shrunk), &total_ord) {
            fail("pointwise monotonicity fails".into());
        }

        // prefixes never exceed the total; equality exactly when the
        // dropped tail is all zero
        let pts = split_points(&s, &mut r);
        for pt in &pts {
            let (_, suffix, _) = s.split_at(pt).unwrap();
            let partial = partial_nat_sum(&s, pt).unwrap();
            if !le(&partial, &total_nat) {
                fail(format!("prefix at {pt:?} exceeds total"));
            }
            let tail_zero = iter_nat_sum(&suffix.nonzero_subsequence()).is_zero();
            if (partial == total_nat) != tail_zero {
                fail(format!("prefix equality at {pt:?} disagrees with zero tail"));
            }
        }

        // zero removal
        if iter_nat_sum(&s.nonzero_subsequence()) != total_nat {
            fail("dropping zeros changes the natural sum".into());
        }

        // prefix joined with finitely many later values stays below total
        if let Some(cut_idx) = (0..=s.segments.len()).choose(&mut r) {
            let boundary = s.segments[..cut_idx]
                .iter()
                .fold(Ordinal::Zero, |acc, seg| ord_add(&acc, &seg.length()));
            let mut picked = partial_nat_sum(&s, &boundary).unwrap();
            let mut budget: u32 = 3;
            for seg in &s.segments[cut_idx..] {
                if budget == 0 {
                    break;
                }
                match seg {
                    Segment::Explicit(vs) => {
                        for v in vs.iter().take(2) {
                            if budget > 0 {
                                picked = nat_add(&picked, v);
                                budget -= 1;
                            }
                        }
                    }
                    Segment::Repeat { value, .. } => {
                        picked = nat_add(&picked, value);
                        budget -= 1;
                    }
                }
            }
            if !le(&picked, &total_nat) {
                fail("picking finitely many later values exceeds the total".into());
            }
        }
    }
    SuiteReport { name: "dominance", cases, failures }
}

/// A value-wise smaller (or equal) ordinal: drop a monomial or lower a
/// coefficient.
fn shrink_value(v: &Ordinal, r: &mut ChaCha8Rng) -> Ordinal {
    let ms = v.monomials();
    if ms.is_empty() || r.gen_bool(0.3) {
        return v.clone();
    }
    let keep = r.gen_range(0..ms.len());
    let mut out: Vec<Monomial> = ms[..=keep].to_vec();
    let c = u64::try_from(&out[keep].coefficient).unwrap_or(1);
    let c = r.gen_range(1..=c.max(1));
    out[keep].coefficient = c.into();
    Ordinal::from_monomials(out)
}

/// Lower bounds transfer from the natural to the ordinary sum, one CNF
/// monomial at a time.
pub fn lm_suite(seed: u64, cases: usize) -> SuiteReport {
    let mut failures = Vec::new();
    let mut r = rng(seed);
    let p = OrdinalParams::algebra();
    for case in 0..cases {
        let limit_tail = r.gen_bool(0.5);
        let s = random_seq(&mut r, &p, limit_tail);
        let total_nat = iter_nat_sum(&s);
        let total_ord = iter_ord_sum(&s);
        for m in total_nat.monomials() {
            let c = u64::try_from(&m.coefficient).unwrap_or(1).min(8);
            for n in 1..=c {
                let threshold = wpow_times(&m.exponent, n);
                if !le(&threshold, &total_ord) {
                    failures.push(format!(
                        "case {case} {s:?}: ordinary sum below w^{:?}*{n}",
                        m.exponent
                    ));
                }
            }
        }
    }
    SuiteReport { name: "lm", cases, failures }
}

/// Tail collapse of limit-length sums: past the reported point, every
/// range sum is the single power `w^xi` and the total splits off the same
/// power.
pub fn infsum_suite(seed: u64, cases: usize) -> SuiteReport {
    let mut failures = Vec::new();
    let mut r = rng(seed);
    let p = OrdinalParams::algebra();
    for case in 0..cases {
        let s = random_seq(&mut r, &p, true);
        let mut fail = |msg: String| failures.push(format!("case {case} {s:?}: {msg}"));
        let zeta = s.length();
        let total = iter_nat_sum(&s);
        let tc = match tail_character(&s) {
            Ok(tc) => tc,
            Err(e) => {
                fail(format!("no tail characterization: {e}"));
                continue;
            }
        };
        let tail = omega_pow(&tc.xi);
        if ord_add(&partial_nat_sum(&s, &tc.gamma_bar).unwrap(), &tail) != total {
            fail("total does not split at the reported point".into());
        }
        let mut probes = split_points(&s, &mut r);
        probes.retain(|pt| !lt(pt, &tc.gamma_bar) && lt(pt, &zeta));
        for eps in probes {
            if range_nat_sum(&s, &eps, &zeta).unwrap() != tail
                || range_ord_sum(&s, &eps, &zeta).unwrap() != tail
                || ord_add(&partial_nat_sum(&s, &eps).unwrap(), &tail) != total
            {
                fail(format!("tail identity fails at {eps:?}"));
            }
        }
    }
    SuiteReport { name: "infsum", cases, failures }
}

/// Spectrum correctness: every relative sum lands in the computed value
/// set, and on short explicit sequences the set matches a literal
/// per-step brute force over all subsets.
pub fn spectrum_suite(seed: u64, cases: usize) -> SuiteReport {
    let mut failures = Vec::new();
    let mut r = rng(seed);
    let p = OrdinalParams::algebra();
    for case in 0..cases {
        // membership on generated descriptions
        let limit_tail = r.gen_bool(0.3);
        let s = random_seq(&mut r, &p, limit_tail);
        let mut fail = |msg: String| failures.push(format!("case {case}: {msg}"));
        if let Ok(spectrum) = g_sum_spectrum(&s) {
            for _ in 0..4 {
                let g = random_step_set(&s, &mut r);
                if validate_step_set(&s, &g).is_err() {
                    continue;
                }
                let v = g_sum(&s, &g).unwrap();
                if !spectrum.contains(&v) {
                    fail(format!("{s:?}: value {v:?} outside the spectrum"));
                }
            }
        }

        // exact equality on short explicit sequences
        let len = r.gen_range(1..=8usize);
        let vs: Vec<Ordinal> = (0..len).map(|_| random_ordinal(&mut r, &p)).collect();
        let e = SeqDesc::new(vec![Segment::Explicit(vs.clone())]);
        let spectrum = g_sum_spectrum(&e).unwrap();
        let mut brute = BTreeSet::new();
        for mask in 0u32..(1 << len) {
            // literal recursion: step k applies its operator to the value
            let mut acc = Ordinal::Zero;
            for (k, v) in vs.iter().enumerate() {
                acc = if mask >> k & 1 == 1 { nat_add(&acc, v) } else { ord_add(&acc, v) };
            }
            brute.insert(acc);
        }
        if spectrum != brute {
            fail(format!("{e:?}: spectrum {spectrum:?} differs from brute force {brute:?}"));
        }
    }
    SuiteReport { name: "spectrum", cases, failures }
}

/// The parametric-supremum oracle for the constant-run limit rule: on a
/// fixed grid of run values and limit lengths, partial sums cofinal in the
/// run are dominated by the closed form and admit no smaller upper bound
/// of the probed shape.
pub fn repeat_rule_suite() -> SuiteReport {
    let mut failures = Vec::new();
    let w = Ordinal::omega();
    let w2 = omega_pow(&Ordinal::from_nat(2u64));
    let alphas = vec![
        Ordinal::one(),
        w.clone(),
        ord_add(&w, &Ordinal::one()),
        ord_add(&w2, &w),
        ord_add(&nat_mul_fin(&w2, 2u32), &Ordinal::from_nat(3u64)),
    ];
    let mut cases = 0;
    for alpha in &alphas {
        for eta in 1u64..=3 {
            for s in 1u64..=2 {
                cases += 1;
                let lambda = wpow_times(&Ordinal::from_nat(eta), s);
                let run = SeqDesc::new(vec![Segment::Repeat {
                    value: alpha.clone(),
                    length: lambda.clone(),
                }]);
                let closed = iter_nat_sum(&run);
                let mut fail = |msg: String| {
                    failures.push(format!("alpha={alpha:?} eta={eta} s={s}: {msg}"))
                };

                // the closed form predicted by the limit rule
                let lead = leading_exponent(alpha).unwrap();
                let expect = wpow_times(&ord_add(&lead, &Ordinal::from_nat(eta)), s);
                if closed != expect {
                    fail(format!("closed form {closed:?} differs from {expect:?}"));
                }

                // partial sums at a grid cofinal in the run
                let mut partials = Vec::new();
                for s2 in 0..s {
                    for m in 0..=6u64 {
                        for n in 0..=26u64 {
                            let mut delta = wpow_times(&Ordinal::from_nat(eta), s2);
                            if eta >= 2 {
                                delta = ord_add(
                                    &delta,
                                    &wpow_times(&Ordinal::from_nat(eta - 1), m),
                                );
                            }
                            delta = ord_add(&delta, &Ordinal::from_nat(n));
                            if !lt(&delta, &lambda) {
                                continue;
                            }
                            let partial = partial_nat_sum(&run, &delta).unwrap();
                            if !lt(&partial, &closed) {
                                fail(format!("partial at {delta:?} not below the closed form"));
                            }
                            partials.push(partial);
                        }
                    }
                }

                // no bound of the probed shape below the closed form
                let e = ord_add(&lead, &Ordinal::from_nat(eta));
                for m in 0..=5u64 {
                    for n in 0..=20u64 {
                        let mut bound = wpow_times(&e, s - 1);
                        let lower_e = if e.as_finite().map_or(false, |v| v >= 1u32.into()) {
                            let ev = u64::try_from(&e.as_finite().unwrap()).unwrap();
                            Ordinal::from_nat(ev - 1)
                        } else {
                            continue;
                        };
                        bound = ord_add(&bound, &wpow_times(&lower_e, m));
                        bound = ord_add(&bound, &Ordinal::from_nat(n));
                        if !lt(&bound, &closed) {
                            continue;
                        }
                        if !partials.iter().any(|p| compare(p, &bound) == Ordering::Greater) {
                            fail(format!("no partial exceeds the probe {bound:?}"));
                        }
                    }
                }
            }
        }
    }
    SuiteReport { name: "repeat-rule", cases, failures }
}

/// Rearrangement invariance of countable multiset sums, zero padding, and
/// longer-than-omega arrangements.
pub fn id_suite(seed: u64, cases: usize) -> SuiteReport {
    let mut failures = Vec::new();
    let mut r = rng(seed);
    let p = OrdinalParams::algebra();
    for case in 0..cases {
        let m = random_countable_multiset(&mut r, &p);
        let mut fail = |msg: String| failures.push(format!("case {case} {m:?}: {msg}"));
        let exact = countable_nsum(&m).unwrap();

        // the finite-entries-first arrangement has length omega and must
        // attain the formula exactly
        let mut finite_prefix = Vec::new();
        let mut run_value = None;
        for (v, mult) in m.entries() {
            match mult {
                Multiplicity::Finite(n) => {
                    finite_prefix.extend(std::iter::repeat(v.clone()).take(*n as usize))
                }
                Multiplicity::Aleph(_) => run_value = Some(v.clone()),
            }
        }
        let mut canonical = vec![Segment::Explicit(finite_prefix)];
        if let Some(v) = run_value {
            canonical.push(Segment::Repeat { value: v, length: Ordinal::omega() });
        }
        match arrangement_nat_sum(&m, &SeqDesc::new(canonical)) {
            Ok(v) if v == exact => {}
            Ok(v) => fail(format!("canonical arrangement gives {v:?}, formula {exact:?}")),
            Err(e) => fail(format!("canonical arrangement rejected: {e}")),
        }

        for style in [
            ArrangementStyle::Ascending,
            ArrangementStyle::Descending,
            ArrangementStyle::Interleaved,
        ] {
            let a = arrange_countable(&m, style);
            let omega_length = a.length() == Ordinal::omega();
            match arrangement_nat_sum(&m, &a) {
                // every length-omega arrangement attains the formula;
                // longer ones may only exceed it
                Ok(v) if v == exact => {}
                Ok(v) if !omega_length && le(&exact, &v) => {}
                Ok(v) => fail(format!("{style:?} arrangement gives {v:?}, formula {exact:?}")),
                Err(e) => fail(format!("{style:?} arrangement rejected: {e}")),
            }

            // padding with zeros never changes the value
            let mut padded = a.clone();
            padded.segments.push(Segment::Repeat {
                value: Ordinal::Zero,
                length: Ordinal::omega(),
            });
            if iter_nat_sum(&padded) != iter_nat_sum(&a) {
                fail("zero padding changes the sum".into());
            }

            // stretching the infinite entry over several runs keeps the
            // count but lengthens the arrangement past omega; the value
            // may grow, never shrink
            let mut stretched_segments = a.segments.clone();
            if let Some(idx) = stretched_segments.iter().position(
                |seg| matches!(seg, Segment::Repeat { length, .. } if length.as_finite().is_none()),
            ) {
                let seg = stretched_segments[idx].clone();
                stretched_segments.insert(idx, seg);
                let stretched = SeqDesc::new(stretched_segments);
                match arrangement_nat_sum(&m, &stretched) {
                    Ok(v) if le(&exact, &v) => {}
                    Ok(v) => fail(format!("stretched arrangement gives {v:?} below {exact:?}")),
                    Err(e) => fail(format!("stretched arrangement rejected: {e}")),
                }
            }
        }
    }
    SuiteReport { name: "id", cases, failures }
}

/// Tree sizes: node counts in the finite case, extension order types,
/// truncation monotonicity, rank coherence, and the finite brute force.
pub fn treesize_suite(seed: u64, cases: usize) -> SuiteReport {
    let mut failures = Vec::new();
    let mut r = rng(seed);
    for case in 0..cases {
        let mut fail = |msg: String| failures.push(format!("case {case}: {msg}"));

        let t = random_finite_tree(&mut r, 200);
        let sz = size(&t).unwrap();
        if Some(sz.clone()) != node_count(&t) {
            fail(format!("finite size {sz:?} differs from node count"));
        }
        if extension_order_type(&t).unwrap() != sz {
            fail("finite extension order type differs from size".into());
        }

        let u = random_countable_tree(&mut r, 30);
        let su = size(&u).unwrap();
        if extension_order_type(&u).unwrap() != su {
            fail(format!("extension order type differs from size on {u:?}"));
        }
        let lower = ord_add(&rank(&u), &Ordinal::one());
        if lt(&su, &lower) {
            fail("size below rank + 1".into());
        }
        let mut prev = Ordinal::Zero;
        for n in 1..=4 {
            let cut = size(&truncate_tree(&u, n)).unwrap();
            if lt(&cut, &prev) || !le(&cut, &su) {
                fail(format!("truncation monotonicity fails at {n}"));
            }
            prev = cut;
        }

        let small = random_finite_tree(&mut r, 7);
        let types = brute_force_extension_types(&small);
        let ssz = size(&small).unwrap();
        if types != vec![ssz.clone()] {
            fail(format!("brute-forced extension types {types:?} differ from {{{ssz:?}}}"));
        }
    }
    SuiteReport { name: "treesize", cases, failures }
}

/// Printer/parser round trip on wide random ordinals.
pub fn roundtrip_suite(seed: u64, cases: usize) -> SuiteReport {
    let mut failures = Vec::new();
    let mut r = rng(seed);
    let p = OrdinalParams::roundtrip();
    for case in 0..cases {
        let a = random_ordinal(&mut r, &p);
        let text = crate::printer::print_ordinal(&a);
        match crate::parser::parse_ordinal(&text) {
            Ok(b) if b == a => {}
            Ok(b) => failures.push(format!("case {case}: {text:?} reparses to {b:?}, not {a:?}")),
            Err(e) => failures.push(format!("case {case}: {text:?} fails to parse: {e}")),
        }
    }
    SuiteReport { name: "roundtrip", cases, failures }
}
