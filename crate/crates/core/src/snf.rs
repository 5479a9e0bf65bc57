//! Smith-style diagonalization of integer matrices, enough to read off ranks
//! and invariant factors of cohomology groups, plus a mod-2 rank routine.

/// Dense integer matrix, row major.
#[derive(Debug, Clone)]
pub struct IntMat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<i128>,
}

impl IntMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMat { rows, cols, data: vec![0; rows * cols] }
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> i128 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: i128) {
        self.data[r * self.cols + c] = v;
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    fn add_row(&mut self, src: usize, dst: usize, factor: i128) {
        for c in 0..self.cols {
            let v = self.get(src, c).checked_mul(factor).expect("overflow");
            let w = self.get(dst, c).checked_add(v).expect("overflow");
            self.set(dst, c, w);
        }
    }

    fn add_col(&mut self, src: usize, dst: usize, factor: i128) {
        for r in 0..self.rows {
            let v = self.get(r, src).checked_mul(factor).expect("overflow");
            let w = self.get(r, dst).checked_add(v).expect("overflow");
            self.set(r, dst, w);
        }
    }
}

/// Result of diagonalization: the nonzero diagonal entries, in order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    pub diagonal: Vec<i128>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.diagonal.len()
    }

    /// Invariant factors with absolute value greater than one.
    pub fn torsion_factors(&self) -> Vec<i128> {
        self.diagonal.iter().map(|d| d.abs()).filter(|&d| d > 1).collect()
    }
}

/// Diagonalize over the integers by repeated pivoting on a minimal-absolute
/// value entry. The divisibility chain is not enforced; ranks and the set of
/// prime-power factors are what callers consume.
pub fn smith_normal_form(mut m: IntMat) -> SmithForm {
    let mut diagonal = Vec::new();
    let mut k = 0;
    while k < m.rows && k < m.cols {
        // Find a pivot of minimal nonzero absolute value.
        let mut pivot: Option<(usize, usize)> = None;
        let mut best: i128 = 0;
        for r in k..m.rows {
            for c in k..m.cols {
                let v = m.get(r, c).abs();
                if v != 0 && (best == 0 || v < best) {
                    best = v;
                    pivot = Some((r, c));
                }
            }
        }
        let Some((pr, pc)) = pivot else { break };
        m.swap_rows(k, pr);
        m.swap_cols(k, pc);
        loop {
            let p = m.get(k, k);
            debug_assert!(p != 0);
            let mut clean = true;
            for r in k + 1..m.rows {
                let v = m.get(r, k);
                if v != 0 {
                    m.add_row(k, r, -v.div_euclid(p));
                    if m.get(r, k) != 0 {
                        clean = false;
                    }
                }
            }
            for c in k + 1..m.cols {
                let v = m.get(k, c);
                if v != 0 {
                    m.add_col(k, c, -v.div_euclid(p));
                    if m.get(k, c) != 0 {
                        clean = false;
                    }
                }
            }
            if clean {
                break;
            }
            // A nonzero remainder is strictly smaller than |p|; move it to
            // the pivot slot and repeat. Termination: |pivot| decreases.
            let mut moved = false;
            'find: for r in k..m.rows {
                for c in k..m.cols {
                    if (r > k || c > k) && m.get(r, c) != 0 && m.get(r, c).abs() < p.abs() {
                        m.swap_rows(k, r);
                        m.swap_cols(k, c);
                        moved = true;
                        break 'find;
                    }
                }
            }
            if !moved {
                // remainders were all eliminated after all
                break;
            }
        }
        diagonal.push(m.get(k, k));
        k += 1;
    }
    SmithForm { diagonal }
}

/// Rank over the field with two elements.
pub fn rank_mod2(m: &IntMat) -> usize {
    let mut rows: Vec<Vec<bool>> = (0..m.rows)
        .map(|r| (0..m.cols).map(|c| m.get(r, c).rem_euclid(2) == 1).collect())
        .collect();
    let mut rank = 0;
    for c in 0..m.cols {
        let Some(p) = (rank..m.rows).find(|&r| rows[r][c]) else { continue };
        rows.swap(rank, p);
        for r in 0..m.rows {
            if r != rank && rows[r][c] {
                let (head, tail) = rows.split_at_mut(std::cmp::max(r, rank));
                let (a, b) = if r < rank {
                    (&mut head[r], &tail[0])
                } else {
                    (&mut tail[0], &head[rank])
                };
                for (x, y) in a.iter_mut().zip(b.iter()) {
                    *x ^= y;
                }
            }
        }
        rank += 1;
        if rank == m.rows {
            break;
        }
    }
    rank
}
