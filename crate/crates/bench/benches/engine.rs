use criterion::{black_box, criterion_group, criterion_main, Criterion};

use zigzag_core::algebra::AlgebraSpec;
use zigzag_core::braid::{apply_word, BraidWord};
use zigzag_core::burau::burau_matrix;
use zigzag_core::complexes::{hom_poincare, projective};
use zigzag_core::curves::{apply_word_curve, basic_curve, ibigr_basic};

/// The alternating word whose images grow at the golden-ratio rate; the
/// worst realistic load per letter for the reduction engine.
fn alternating_word(m: usize, len: usize) -> BraidWord {
    let letters: Vec<i32> =
        (0..len).map(|n| if n % 2 == 0 { 1 } else { -2 }).collect();
    BraidWord::new(m, letters).unwrap()
}

fn full_twist_word(m: usize, reps: usize) -> BraidWord {
    let mut letters = Vec::new();
    for _ in 0..reps {
        for k in 1..=m {
            letters.push(k as i32);
        }
    }
    BraidWord::new(m, letters).unwrap()
}

fn bench_apply_word(c: &mut Criterion) {
    let spec = AlgebraSpec::new(4);
    let w = full_twist_word(4, 2);
    c.bench_function("apply_word m=4 (delta^2) on P_2", |b| {
        b.iter(|| apply_word(black_box(&w), &projective(2, spec)).unwrap())
    });
    let spec2 = AlgebraSpec::new(2);
    let alt = alternating_word(2, 12);
    c.bench_function("apply_word m=2 alternating len 12 on P_1", |b| {
        b.iter(|| apply_word(black_box(&alt), &projective(1, spec2)).unwrap())
    });
}

fn bench_hom(c: &mut Criterion) {
    let spec = AlgebraSpec::new(2);
    let alt = alternating_word(2, 12);
    let complex = apply_word(&alt, &projective(1, spec)).unwrap();
    c.bench_function("hom_poincare on a rank-high image", |b| {
        b.iter(|| hom_poincare(black_box(1), &complex))
    });
}

fn bench_curves(c: &mut Criterion) {
    let alt = alternating_word(2, 12);
    c.bench_function("apply_word_curve m=2 alternating len 12", |b| {
        b.iter(|| apply_word_curve(black_box(&alt), &basic_curve(2, 1)).unwrap())
    });
    let curve = apply_word_curve(&alt, &basic_curve(2, 1)).unwrap();
    c.bench_function("ibigr_basic on the image curve", |b| {
        b.iter(|| ibigr_basic(black_box(1), &curve).unwrap())
    });
}

fn bench_burau(c: &mut Criterion) {
    let w = full_twist_word(4, 4);
    c.bench_function("burau_matrix m=4 (delta^4)", |b| {
        b.iter(|| burau_matrix(black_box(&w)))
    });
}

criterion_group!(benches, bench_apply_word, bench_hom, bench_curves, bench_burau);
criterion_main!(benches);
