//! Exact Burau representation over `Z[q, q^-1]` and the Euler-form pairing:
//! the decategorified oracle for the twist functors.

use crate::algebra::{idempotent_slice, AlgebraSpec};
use crate::braid::BraidWord;
use crate::poly::LaurentPoly;

/// Matrix over Laurent polynomials, `rows x cols`, row major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<LaurentPoly>,
}

impl LaurentMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        LaurentMatrix { rows, cols, data: vec![LaurentPoly::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = LaurentMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, LaurentPoly::one());
        }
        m
    }

    pub fn get(&self, r: usize, c: usize) -> &LaurentPoly {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: LaurentPoly) {
        self.data[r * self.cols + c] = v;
    }

    pub fn mul(&self, other: &LaurentMatrix) -> LaurentMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = LaurentMatrix::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = LaurentPoly::zero();
                for k in 0..self.cols {
                    acc = &acc + &(self.get(r, k) * other.get(k, c));
                }
                out.set(r, c, acc);
            }
        }
        out
    }

    /// Apply to a standard basis vector: the `j`-th column.
    pub fn column(&self, j: usize) -> Vec<LaurentPoly> {
        (0..self.rows).map(|r| self.get(r, j).clone()).collect()
    }

    pub fn determinant(&self) -> LaurentPoly {
        assert_eq!(self.rows, self.cols);
        // Laplace expansion; matrices here are small.
        let n = self.rows;
        if n == 0 {
            return LaurentPoly::one();
        }
        if n == 1 {
            return self.get(0, 0).clone();
        }
        let mut det = LaurentPoly::zero();
        for c in 0..n {
            let mut minor = LaurentMatrix::zero(n - 1, n - 1);
            for r in 1..n {
                let mut cc = 0;
                for c2 in 0..n {
                    if c2 == c {
                        continue;
                    }
                    minor.set(r - 1, cc, self.get(r, c2).clone());
                    cc += 1;
                }
            }
            let term = self.get(0, c) * &minor.determinant();
            det = if c % 2 == 0 { &det + &term } else { &det - &term };
        }
        det
    }
}

/// The matrix of a positive generator on the basis of projective classes:
/// `e_k -> -q e_k`, `e_{k+1} -> e_{k+1} - e_k`, `e_{k-1} -> e_{k-1} - q e_k`.
fn generator_matrix(m: usize, k: usize) -> LaurentMatrix {
    let mut g = LaurentMatrix::identity(m + 1);
    g.set(k, k, LaurentPoly::monomial(1, -1));
    if k < m {
        g.set(k, k + 1, LaurentPoly::monomial(0, -1));
    }
    g.set(k, k - 1, LaurentPoly::monomial(1, -1));
    g
}

/// The inverse generator, read off the coevaluation side:
/// `e_k -> -q^{-1} e_k`, `e_{k+1} -> e_{k+1} - q^{-1} e_k`,
/// `e_{k-1} -> e_{k-1} - e_k`.
fn generator_matrix_inv(m: usize, k: usize) -> LaurentMatrix {
    let mut g = LaurentMatrix::identity(m + 1);
    g.set(k, k, LaurentPoly::monomial(-1, -1));
    if k < m {
        g.set(k, k + 1, LaurentPoly::monomial(-1, -1));
    }
    g.set(k, k - 1, LaurentPoly::monomial(0, -1));
    g
}

/// Product of generator matrices for the word, in word order, acting on
/// column vectors (so the last letter acts first, matching `apply_word`).
pub fn burau_matrix(w: &BraidWord) -> LaurentMatrix {
    let mut out = LaurentMatrix::identity(w.m + 1);
    for &l in &w.letters {
        let k = l.unsigned_abs() as usize;
        let g = if l > 0 { generator_matrix(w.m, k) } else { generator_matrix_inv(w.m, k) };
        out = out.mul(&g);
    }
    out
}

/// Restriction to the invariant submodule spanned by `e_1, ..., e_m`.
pub fn reduced_burau(w: &BraidWord) -> LaurentMatrix {
    let full = burau_matrix(w);
    let m = w.m;
    let mut out = LaurentMatrix::zero(m, m);
    for r in 1..=m {
        for c in 1..=m {
            out.set(r - 1, c - 1, full.get(r, c).clone());
        }
    }
    out
}

/// The Euler form on classes of projectives, from the graded ranks of the
/// idempotent slices: `E(i, j) = sum_d rk((i) A_m (j))_d q^d`.
pub fn euler_form(i: usize, j: usize, spec: &AlgebraSpec) -> LaurentPoly {
    let mut e = LaurentPoly::zero();
    for (deg, rank) in idempotent_slice(i, j, spec) {
        e.add_term(deg as i32, rank as i64);
    }
    e
}

/// `< e_i, B(w) e_j >` under the Euler form, extended `q`-linearly.
pub fn euler_pairing(i: usize, w: &BraidWord, j: usize, spec: &AlgebraSpec) -> LaurentPoly {
    assert!(i <= spec.m && j <= spec.m);
    let b = burau_matrix(w);
    let mut acc = LaurentPoly::zero();
    for l in 0..=spec.m {
        let e = euler_form(i, l, spec);
        if e.is_zero() {
            continue;
        }
        acc = &acc + &(&e * b.get(l, j));
    }
    acc
}
