//! Acceptance suite. Each criterion prints one PASS line (run with
//! `--nocapture` to see them) and enforces its runtime budget. All
//! arithmetic is exact; every comparison is equality.

use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use zigzag_core::algebra::AlgebraSpec;
use zigzag_core::braid::{apply_word, grothendieck_class, r_apply, tl_check, BraidWord};
use zigzag_core::burau::{burau_matrix, euler_pairing};
use zigzag_core::complexes::{fingerprint, hom_poincare, projective};
use zigzag_core::curves::{
    apply_word_curve, basic_curve, gin_basic, ibigr_basic, is_identity_word, l_complex,
};
use zigzag_core::poly::BigradedPoly;
use zigzag_core::suites::random_word;

const SWEEP_SEED: u64 = 2026;
const SWEEP_WORDS: usize = 200;
const SWEEP_MAX_LEN: usize = 8;

fn report(n: u32, what: &str, start: Instant, budget: Duration) {
    let elapsed = start.elapsed();
    println!("PASS criterion {n}: {what} ({elapsed:.2?})");
    assert!(
        elapsed < budget,
        "criterion {n} exceeded its budget: {elapsed:.2?} > {budget:.2?}"
    );
}

#[test]
fn criterion_01_identity_hom_table() {
    let start = Instant::now();
    for m in 1..=4 {
        let spec = AlgebraSpec::new(m);
        for i in 0..=m {
            for j in 0..=m {
                let h = hom_poincare(i, &projective(j, spec));
                let mut expect = BigradedPoly::zero();
                if i == j {
                    expect.add_term(0, 0, 1);
                    if i >= 1 {
                        expect.add_term(0, 1, 1);
                    }
                } else if j == i + 1 {
                    expect.add_term(0, 0, 1);
                } else if i == j + 1 {
                    expect.add_term(0, 1, 1);
                }
                assert_eq!(h.poly, expect, "m={m} i={i} j={j}");
                assert!(h.torsion.is_empty());
            }
        }
    }
    report(1, "identity-braid Hom table, m = 1..4", start, Duration::from_secs(1));
}

#[test]
fn criterion_02_generator_twist() {
    let start = Instant::now();
    for m in 1..=4 {
        let spec = AlgebraSpec::new(m);
        for k in 1..=m {
            let c = r_apply(k, 1, &projective(k, spec)).unwrap();
            assert_eq!(c.summand_multiset(), vec![(k, -1, 1)], "m={m} k={k}");
        }
    }
    report(2, "R_k P_k = P_k[1]{1} for all k, m <= 4", start, Duration::from_secs(1));
}

#[test]
fn criterion_03_inverses() {
    let start = Instant::now();
    for m in 1..=4 {
        let spec = AlgebraSpec::new(m);
        for k in 1..=m {
            for j in 0..=m {
                for sign in [1, -1] {
                    let c =
                        r_apply(k, -sign, &r_apply(k, sign, &projective(j, spec)).unwrap())
                            .unwrap();
                    assert_eq!(c.summand_multiset(), vec![(j, 0, 0)], "m={m} k={k} j={j}");
                }
            }
        }
    }
    report(3, "R_k^{-1} R_k P_j = P_j both ways, m <= 4", start, Duration::from_secs(5));
}

#[test]
fn criterion_04_braid_relations() {
    let start = Instant::now();
    for m in 1..=4 {
        let spec = AlgebraSpec::new(m);
        let mut pairs = Vec::new();
        for i in 1..m {
            pairs.push((
                vec![i as i32, i as i32 + 1, i as i32],
                vec![i as i32 + 1, i as i32, i as i32 + 1],
            ));
        }
        for i in 1..=m {
            for j in i + 2..=m {
                pairs.push((vec![i as i32, j as i32], vec![j as i32, i as i32]));
            }
        }
        for (l1, l2) in pairs {
            let w1 = BraidWord::new(m, l1).unwrap();
            let w2 = BraidWord::new(m, l2).unwrap();
            for j in 0..=m {
                let c1 = apply_word(&w1, &projective(j, spec)).unwrap();
                let c2 = apply_word(&w2, &projective(j, spec)).unwrap();
                assert_eq!(
                    c1.summand_multiset(),
                    c2.summand_multiset(),
                    "m={m} {w1} vs {w2} on P_{j}"
                );
                for i in 0..=m {
                    assert_eq!(
                        hom_poincare(i, &c1).poly,
                        hom_poincare(i, &c2).poly,
                        "m={m} {w1} vs {w2} on P_{j} against P_{i}"
                    );
                }
            }
        }
    }
    report(4, "braid relations as fingerprint and Hom equalities, m <= 4", start,
        Duration::from_secs(30));
}

#[test]
fn criterion_05_temperley_lieb() {
    let start = Instant::now();
    for m in 1..=4 {
        let spec = AlgebraSpec::new(m);
        for k in 1..=m {
            for l in 1..=m {
                assert!(tl_check(spec, k, l).unwrap(), "m={m} U_{k} U_{l}");
            }
        }
    }
    report(5, "Temperley-Lieb object relations, m <= 4", start, Duration::from_secs(5));
}

/// Criteria 6 through 9 share one seeded word sweep: for m in {2, 3, 4} and
/// 200 random words of length <= 8, over all (i, j):
///   6. Hom Poincaré polynomial equals the bigraded intersection number, and
///      its value at q1 = q2 = 1 is twice the geometric intersection number;
///   7. the complex of the twisted curve has the fingerprint of the twisted
///      projective;
///   8. Grothendieck classes factor through Burau, and the q1 = -1, q2 = q
///      specialization equals the Euler pairing;
///   9. no torsion anywhere.
#[test]
fn criteria_06_to_09_word_sweep() {
    let start = Instant::now();
    let mut time_8 = Duration::ZERO;
    for m in [2usize, 3, 4] {
        let spec = AlgebraSpec::new(m);
        let mut rng = ChaCha8Rng::seed_from_u64(SWEEP_SEED + m as u64);
        for n in 0..SWEEP_WORDS {
            let w = random_word(m, SWEEP_MAX_LEN, &mut rng);
            let t8 = Instant::now();
            let burau = burau_matrix(&w);
            time_8 += t8.elapsed();
            for j in 0..=m {
                let complex = apply_word(&w, &projective(j, spec)).unwrap();
                let curve = apply_word_curve(&w, &basic_curve(m, j)).unwrap();
                // criterion 7
                let lc = l_complex(&curve, spec).unwrap();
                assert_eq!(
                    fingerprint(&lc),
                    complex.summand_multiset(),
                    "criterion 7: m={m} word #{n} ({w}) j={j}"
                );
                // criterion 8 (classes)
                let t8 = Instant::now();
                assert_eq!(
                    grothendieck_class(&complex),
                    burau.column(j),
                    "criterion 8: m={m} word #{n} ({w}) j={j}"
                );
                time_8 += t8.elapsed();
                for i in 0..=m {
                    let h = hom_poincare(i, &complex);
                    // criterion 6
                    let ib = ibigr_basic(i, &curve).unwrap();
                    assert_eq!(
                        h.poly, ib,
                        "criterion 6: m={m} word #{n} ({w}) i={i} j={j}"
                    );
                    let gin = gin_basic(i, &curve).unwrap();
                    assert_eq!(
                        h.poly.total_rank(),
                        gin.doubled(),
                        "criterion 6 (rank vs 2 I): m={m} word #{n} i={i} j={j}"
                    );
                    // criterion 9
                    assert!(
                        h.torsion.is_empty(),
                        "criterion 9: torsion at m={m} word #{n} i={i} j={j}"
                    );
                    // criterion 8 (Euler specialization)
                    let t8 = Instant::now();
                    assert_eq!(
                        h.poly.specialize_euler(),
                        euler_pairing(i, &w, j, &spec),
                        "criterion 8: m={m} word #{n} ({w}) i={i} j={j}"
                    );
                    time_8 += t8.elapsed();
                }
            }
        }
    }
    let words = 3 * SWEEP_WORDS;
    report(
        6,
        &format!("Hom = bigraded intersection number over {words} seeded words, m in 2..4"),
        start,
        Duration::from_secs(600),
    );
    println!("PASS criterion 7: curve/complex functoriality over the same sweep");
    println!("PASS criterion 8: decategorification over the same sweep ({time_8:.2?})");
    assert!(time_8 < Duration::from_secs(120), "criterion 8 budget");
    println!("PASS criterion 9: every Hom group torsion-free over the sweep");
}

#[test]
fn criterion_10_identity_detection() {
    let start = Instant::now();
    for m in 1..=4 {
        assert!(is_identity_word(&BraidWord::identity(m)).unwrap(), "empty word, m={m}");
        // w . w^{-1} for seeded random words
        let mut rng = ChaCha8Rng::seed_from_u64(99 + m as u64);
        for _ in 0..3 {
            let w = random_word(m, 5, &mut rng);
            let ww = w.concat(&w.inverse());
            assert!(is_identity_word(&ww).unwrap(), "w w^-1, m={m} w={w}");
        }
        // braid relators
        for i in 1..m {
            let i = i as i32;
            let rel = BraidWord::new(m, vec![i, i + 1, i, -(i + 1), -i, -(i + 1)]).unwrap();
            assert!(is_identity_word(&rel).unwrap(), "relator at {i}, m={m}");
        }
        for i in 1..=m {
            for j in i + 2..=m {
                let c =
                    BraidWord::new(m, vec![i as i32, j as i32, -(i as i32), -(j as i32)])
                        .unwrap();
                assert!(is_identity_word(&c).unwrap(), "commutator {i},{j} m={m}");
            }
        }
        // non-identities
        assert!(!is_identity_word(&BraidWord::new(m, vec![1]).unwrap()).unwrap());
        assert!(!is_identity_word(&BraidWord::new(m, vec![1, 1]).unwrap()).unwrap());
        if m >= 2 {
            assert!(!is_identity_word(&BraidWord::new(m, vec![1, 2]).unwrap()).unwrap());
            assert!(!is_identity_word(&BraidWord::new(m, vec![1, -2]).unwrap()).unwrap());
        }
    }
    // Formal one-variable output: the substitution q1 = q, q2 = q^n is
    // consistent at n = 1, 2 with the total rank and the Euler route.
    let spec = AlgebraSpec::new(2);
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..5 {
        let w = random_word(2, 6, &mut rng);
        for j in 0..=2 {
            let c = apply_word(&w, &projective(j, spec)).unwrap();
            for i in 0..=2 {
                let p = hom_poincare(i, &c).poly;
                for n in [1, 2] {
                    assert_eq!(p.specialize_comparison(n).eval_one(), p.total_rank());
                }
            }
        }
    }
    report(10, "identity detection fixtures and q1=q, q2=q^n consistency", start,
        Duration::from_secs(60));
}
