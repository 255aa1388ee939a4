//! Acceptance checks: worked fixtures evaluated exactly, plus the property
//! suites at their contractual case counts. Each test reports one line;
//! run with `--nocapture` to see them.

use std::cmp::Ordering;

use ordcalc_cli::check::run_suite;
use ordcalc_cli::parser::parse_ordinal;
use ordcalc_core::generate::rng;
use ordcalc_core::invariant::arrangement_nat_sum;
use ordcalc_core::ordinal::{compare, nat_add, ord_add, ord_mul};
use ordcalc_core::sum::{iter_nat_sum, range_nat_sum};
use ordcalc_core::{Multiplicity, OrdMultiset, Ordinal, SeqDesc, Segment};

use rand::Rng;

const SEED: u64 = 20260824;

fn report(n: u32) {
    println!("criterion {n}: PASS");
}

fn suite(n: u32, name: &str, cases: usize) {
    let r = run_suite(name, SEED, cases).expect("known suite");
    if !r.passed() {
        println!("criterion {n}: FAIL");
        panic!("suite {name} violations: {:#?}", r.failures);
    }
    report(n);
}

fn n(v: u64) -> Ordinal {
    Ordinal::from_nat(v)
}

fn w() -> Ordinal {
    Ordinal::omega()
}

fn seq(segments: Vec<Segment>) -> SeqDesc {
    SeqDesc::new(segments)
}

fn rep(value: Ordinal, length: Ordinal) -> Segment {
    Segment::Repeat { value, length }
}

#[test]
fn criterion_1_one_plus_omega_fixtures() {
    let w1 = ord_add(&w(), &n(1));
    assert_eq!(parse_ordinal("1 # w").unwrap(), w1);
    assert_eq!(parse_ordinal("1 + w").unwrap(), w());

    // the sum of 1 followed by omega ones is omega, strictly below
    // 1 (+) [sum of the ones]
    let s = seq(vec![Segment::Explicit(vec![n(1)]), rep(n(1), w())]);
    assert_eq!(iter_nat_sum(&s), w());
    let tail = range_nat_sum(&s, &n(1), &s.length()).unwrap();
    assert_eq!(nat_add(&n(1), &tail), w1);
    assert_eq!(compare(&iter_nat_sum(&s), &nat_add(&n(1), &tail)), Ordering::Less);

    // while 1 followed by a single omega exceeds 1 + omega
    let t = seq(vec![Segment::Explicit(vec![n(1), w()])]);
    assert_eq!(iter_nat_sum(&t), w1);
    assert_eq!(compare(&iter_nat_sum(&t), &ord_add(&n(1), &w())), Ordering::Greater);
    report(1);
}

#[test]
fn criterion_2_swapping_across_the_limit_changes_the_sum() {
    let original = seq(vec![
        Segment::Explicit(vec![n(0)]),
        rep(n(1), w()),
        Segment::Explicit(vec![n(1)]),
    ]);
    let swapped = seq(vec![
        Segment::Explicit(vec![n(1)]),
        rep(n(1), w()),
        Segment::Explicit(vec![n(0)]),
    ]);
    assert_eq!(iter_nat_sum(&original), ord_add(&w(), &n(1)));
    assert_eq!(iter_nat_sum(&swapped), w());
    report(2);
}

#[test]
fn criterion_3_uncountable_multiset_arrangements() {
    let o1 = Ordinal::atom(1);
    let m = OrdMultiset::new([
        (n(1), Multiplicity::Aleph(1)),
        (o1.clone(), Multiplicity::Aleph(0)),
    ]);
    let o1w = ord_mul(&o1, &w());
    let o1w1 = ord_add(&o1w, &o1);

    let asc = seq(vec![rep(n(1), o1.clone()), rep(o1.clone(), w())]);
    assert_eq!(arrangement_nat_sum(&m, &asc).unwrap(), o1w);
    let desc = seq(vec![rep(o1.clone(), w()), rep(n(1), o1.clone())]);
    assert_eq!(arrangement_nat_sum(&m, &desc).unwrap(), o1w1);

    // lambda-length arrangements: a countable prefix holding all the
    // copies of w1, closed by the uncountable run of ones
    let mut r = rng(SEED);
    let mut lambda_values = Vec::new();
    let mut any_values = Vec::new();
    for _ in 0..12 {
        let mut prefix = Vec::new();
        for _ in 0..r.gen_range(0..3) {
            prefix.push(rep(n(1), n(1 + r.gen_range(0..4))));
            prefix.push(rep(o1.clone(), n(1 + r.gen_range(0..3))));
        }
        if r.gen_bool(0.5) {
            prefix.push(rep(n(1), w()));
        }
        prefix.push(rep(o1.clone(), w()));
        let mut lambda_arr = prefix.clone();
        lambda_arr.push(rep(n(1), o1.clone()));
        lambda_values.push(arrangement_nat_sum(&m, &seq(lambda_arr)).unwrap());

        // any-length: the uncountable run may come first instead
        let mut any_arr = vec![rep(n(1), o1.clone())];
        any_arr.extend(prefix);
        any_values.push(arrangement_nat_sum(&m, &seq(any_arr)).unwrap());
    }
    assert!(lambda_values.len() >= 10 && any_values.len() >= 10);
    for v in &lambda_values {
        assert_ne!(compare(v, &o1w1), Ordering::Less, "{v:?}");
    }
    for v in &any_values {
        assert_ne!(compare(v, &o1w), Ordering::Less, "{v:?}");
    }
    report(3);
}

#[test]
fn criterion_4_interleaving_maximum() {
    suite(4, "carruth", 200);
}

#[test]
fn criterion_5_partial_sum_sandwich() {
    suite(5, "sandwich", 500);
}

#[test]
fn criterion_6_ordinary_sum_dominates_each_monomial() {
    suite(6, "lm", 500);
}

#[test]
fn criterion_7_tail_characterization() {
    suite(7, "infsum", 200);
}

#[test]
fn criterion_8_spectrum_matches_brute_force() {
    suite(8, "spectrum", 50);
}

#[test]
fn criterion_9_countable_rearrangement_invariance() {
    suite(9, "id", 100);
}

#[test]
fn criterion_10_constant_run_closed_form() {
    suite(10, "repeat-rule", 0);
}

#[test]
fn criterion_11_tree_sizes() {
    suite(11, "treesize", 200);
}

#[test]
fn criterion_12_algebra_laws_and_round_trip() {
    let r = run_suite("algebra", SEED, 1000).unwrap();
    assert!(r.passed(), "algebra violations: {:#?}", r.failures);
    let r = run_suite("roundtrip", SEED, 1000).unwrap();
    assert!(r.passed(), "roundtrip violations: {:#?}", r.failures);
    report(12);
}
