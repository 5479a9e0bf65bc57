//! Named verification suites: randomized and exhaustive consistency checks
//! shared by the command-line `check` command and the acceptance tests.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::AlgebraSpec;
use crate::braid::{apply_word, grothendieck_class, r_apply, tl_check, BraidWord};
use crate::burau::{burau_matrix, euler_pairing};
use crate::complexes::{hom_poincare, projective};
use crate::curves::{apply_word_curve, basic_curve, ibigr_basic, l_complex};
use crate::error::Error;

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub name: String,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// A seeded word of length up to `max_len` in the generators of `B_{m+1}`.
pub fn random_word(m: usize, max_len: usize, rng: &mut ChaCha8Rng) -> BraidWord {
    let len = rng.gen_range(0..=max_len);
    let letters: Vec<i32> = (0..len)
        .map(|_| {
            let k = rng.gen_range(1..=m) as i32;
            if rng.gen_bool(0.5) {
                k
            } else {
                -k
            }
        })
        .collect();
    BraidWord::new(m, letters).expect("letters in range")
}

/// `R_k^{-1} R_k P_j = P_j` and the other order, all `j, k`.
pub fn suite_inverses(m: usize) -> Result<SuiteReport, Error> {
    let spec = AlgebraSpec::new(m);
    let mut cases = 0;
    let mut failures = Vec::new();
    for k in 1..=m {
        for j in 0..=m {
            for sign in [1, -1] {
                cases += 1;
                let c = r_apply(k, -sign, &r_apply(k, sign, &projective(j, spec))?)?;
                if c.summand_multiset() != vec![(j, 0, 0)] {
                    failures.push(format!("k={k} j={j} sign={sign}"));
                }
            }
        }
    }
    Ok(SuiteReport { name: "inverses".into(), cases, failures })
}

/// All object-level Temperley-Lieb relations.
pub fn suite_tl(m: usize) -> Result<SuiteReport, Error> {
    let spec = AlgebraSpec::new(m);
    let mut cases = 0;
    let mut failures = Vec::new();
    for k in 1..=m {
        for l in 1..=m {
            cases += 1;
            if !tl_check(spec, k, l)? {
                failures.push(format!("U_{k} U_{l}"));
            }
        }
    }
    Ok(SuiteReport { name: "tl".into(), cases, failures })
}

/// Both braid relations as fingerprint and Hom-table equalities on every
/// projective.
pub fn suite_braid_relations(m: usize) -> Result<SuiteReport, Error> {
    let spec = AlgebraSpec::new(m);
    let mut cases = 0;
    let mut failures = Vec::new();
    let mut pairs: Vec<(BraidWord, BraidWord)> = Vec::new();
    for i in 1..m {
        pairs.push((
            BraidWord::new(m, vec![i as i32, i as i32 + 1, i as i32])?,
            BraidWord::new(m, vec![i as i32 + 1, i as i32, i as i32 + 1])?,
        ));
    }
    for i in 1..=m {
        for j in i + 2..=m {
            pairs.push((
                BraidWord::new(m, vec![i as i32, j as i32])?,
                BraidWord::new(m, vec![j as i32, i as i32])?,
            ));
        }
    }
    for (w1, w2) in &pairs {
        for j in 0..=m {
            cases += 1;
            let c1 = apply_word(w1, &projective(j, spec))?;
            let c2 = apply_word(w2, &projective(j, spec))?;
            if c1.summand_multiset() != c2.summand_multiset() {
                failures.push(format!("fingerprint {w1} vs {w2} on P_{j}"));
                continue;
            }
            for i in 0..=m {
                if hom_poincare(i, &c1).poly != hom_poincare(i, &c2).poly {
                    failures.push(format!("hom {w1} vs {w2} on P_{j} against P_{i}"));
                    break;
                }
            }
        }
    }
    Ok(SuiteReport { name: "braid-relations".into(), cases, failures })
}

/// Hom Poincaré polynomials equal bigraded intersection numbers, and their
/// specialization at `q1 = q2 = 1` is twice the geometric intersection
/// number, over seeded random words. Also reports any torsion.
pub fn suite_dimequals(
    m: usize,
    words: usize,
    max_len: usize,
    seed: u64,
) -> Result<SuiteReport, Error> {
    let spec = AlgebraSpec::new(m);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cases = 0;
    let mut failures = Vec::new();
    for n in 0..words {
        let w = random_word(m, max_len, &mut rng);
        for j in 0..=m {
            let complex = apply_word(&w, &projective(j, spec))?;
            let curve = apply_word_curve(&w, &basic_curve(m, j))?;
            for i in 0..=m {
                cases += 1;
                let h = hom_poincare(i, &complex);
                let ib = ibigr_basic(i, &curve)?;
                if h.poly != ib {
                    failures.push(format!("word #{n} ({w}) i={i} j={j}: {} vs {ib}", h.poly));
                }
                if !h.torsion.is_empty() {
                    failures.push(format!("torsion at word #{n} ({w}) i={i} j={j}"));
                }
                let gin2 = ib.total_rank();
                if h.poly.total_rank() != gin2 {
                    failures.push(format!("total rank mismatch at word #{n} i={i} j={j}"));
                }
            }
        }
    }
    Ok(SuiteReport { name: "dimequals".into(), cases, failures })
}

/// The curve-to-complex map intertwines the two actions: fingerprints of
/// `L(w . b_j)` and `w . P_j` agree over seeded random words.
pub fn suite_main_theorem(
    m: usize,
    words: usize,
    max_len: usize,
    seed: u64,
) -> Result<SuiteReport, Error> {
    let spec = AlgebraSpec::new(m);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cases = 0;
    let mut failures = Vec::new();
    for n in 0..words {
        let w = random_word(m, max_len, &mut rng);
        for j in 0..=m {
            cases += 1;
            let complex = apply_word(&w, &projective(j, spec))?;
            let curve = apply_word_curve(&w, &basic_curve(m, j))?;
            let lc = l_complex(&curve, spec)?;
            if crate::complexes::fingerprint(&lc) != complex.summand_multiset() {
                failures.push(format!("word #{n} ({w}) j={j}"));
            }
        }
    }
    Ok(SuiteReport { name: "main-theorem".into(), cases, failures })
}

/// Decategorification: Grothendieck classes factor through the Burau matrix
/// and the Euler specialization of the Hom polynomial matches the pairing.
pub fn suite_burau_euler(
    m: usize,
    words: usize,
    max_len: usize,
    seed: u64,
) -> Result<SuiteReport, Error> {
    let spec = AlgebraSpec::new(m);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cases = 0;
    let mut failures = Vec::new();
    for n in 0..words {
        let w = random_word(m, max_len, &mut rng);
        let b = burau_matrix(&w);
        for j in 0..=m {
            let complex = apply_word(&w, &projective(j, spec))?;
            cases += 1;
            if grothendieck_class(&complex) != b.column(j) {
                failures.push(format!("class at word #{n} ({w}) j={j}"));
            }
            for i in 0..=m {
                cases += 1;
                let h = hom_poincare(i, &complex).poly.specialize_euler();
                let e = euler_pairing(i, &w, j, &spec);
                if h != e {
                    failures.push(format!("euler at word #{n} ({w}) i={i} j={j}"));
                }
            }
        }
    }
    Ok(SuiteReport { name: "burau-euler".into(), cases, failures })
}

pub fn run_suite(
    name: &str,
    m: usize,
    words: usize,
    max_len: usize,
    seed: u64,
) -> Result<SuiteReport, Error> {
    match name {
        "inverses" => suite_inverses(m),
        "tl" => suite_tl(m),
        "braid-relations" => suite_braid_relations(m),
        "dimequals" => suite_dimequals(m, words, max_len, seed),
        "main-theorem" => suite_main_theorem(m, words, max_len, seed),
        "burau-euler" => suite_burau_euler(m, words, max_len, seed),
        other => Err(Error::BadBraidWord {
            input: other.to_string(),
            reason: "unknown suite".into(),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        assert!(suite_inverses(2).unwrap().passed());
        assert!(suite_tl(2).unwrap().passed());
        assert!(suite_braid_relations(2).unwrap().passed());
        assert!(suite_dimequals(2, 5, 4, 7).unwrap().passed());
        assert!(suite_main_theorem(2, 5, 4, 7).unwrap().passed());
        assert!(suite_burau_euler(2, 5, 5, 7).unwrap().passed());
    }
}
