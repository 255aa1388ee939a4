use criterion::{black_box, criterion_group, criterion_main, Criterion};

use ordcalc_core::generate::{random_ordinal, random_seq, rng, OrdinalParams};
use ordcalc_core::mixed::enumerate_pure_interleavings;
use ordcalc_core::ordinal::{compare, nat_add, ord_add, ord_mul};
use ordcalc_core::sum::{g_sum_spectrum, iter_nat_sum};

fn bench_sums(c: &mut Criterion) {
    let mut r = rng(7);
    let p = OrdinalParams::algebra();
    let pairs: Vec<_> = (0..64)
        .map(|_| (random_ordinal(&mut r, &p), random_ordinal(&mut r, &p)))
        .collect();

    c.bench_function("nat_add", |b| {
        b.iter(|| {
            for (x, y) in &pairs {
                black_box(nat_add(black_box(x), black_box(y)));
            }
        })
    });
    c.bench_function("ord_add", |b| {
        b.iter(|| {
            for (x, y) in &pairs {
                black_box(ord_add(black_box(x), black_box(y)));
            }
        })
    });
    c.bench_function("ord_mul", |b| {
        b.iter(|| {
            for (x, y) in &pairs {
                black_box(ord_mul(black_box(x), black_box(y)));
            }
        })
    });
    c.bench_function("compare", |b| {
        b.iter(|| {
            for (x, y) in &pairs {
                black_box(compare(black_box(x), black_box(y)));
            }
        })
    });
}

fn bench_sequences(c: &mut Criterion) {
    let mut r = rng(11);
    let p = OrdinalParams::few_blocks();
    let seqs: Vec<_> = (0..16).map(|_| random_seq(&mut r, &p, true)).collect();

    c.bench_function("iter_nat_sum", |b| {
        b.iter(|| {
            for s in &seqs {
                black_box(iter_nat_sum(black_box(s)));
            }
        })
    });
}

fn bench_enumeration(c: &mut Criterion) {
    let mut r = rng(13);
    let p = OrdinalParams::few_blocks();
    let pairs: Vec<_> = (0..8)
        .map(|_| (random_ordinal(&mut r, &p), random_ordinal(&mut r, &p)))
        .collect();

    c.bench_function("pure_interleavings", |b| {
        b.iter(|| {
            for (x, y) in &pairs {
                let _ = black_box(enumerate_pure_interleavings(black_box(x), black_box(y)));
            }
        })
    });

    let mut r = rng(17);
    let small = OrdinalParams { depth: 1, terms: 2, max_coeff: 3, max_atom: 0 };
    let seqs: Vec<_> = (0..4)
        .map(|_| {
            use ordcalc_core::{SeqDesc, Segment};
            let vs: Vec<_> = (0..6).map(|_| random_ordinal(&mut r, &small)).collect();
            SeqDesc::new(vec![Segment::Explicit(vs)])
        })
        .collect();
    c.bench_function("g_sum_spectrum", |b| {
        b.iter(|| {
            for s in &seqs {
                let _ = black_box(g_sum_spectrum(black_box(s)));
            }
        })
    });
}

criterion_group!(benches, bench_sums, bench_sequences, bench_enumeration);
criterion_main!(benches);
