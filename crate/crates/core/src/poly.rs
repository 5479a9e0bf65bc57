//! Exact polynomial types: Laurent polynomials in one variable `q` and
//! bigraded Laurent polynomials in `q1, q2`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Laurent polynomial over the integers in the variable `q`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i32, i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(0, 1)
    }

    pub fn q() -> Self {
        LaurentPoly::monomial(1, 1)
    }

    pub fn monomial(exp: i32, coeff: i64) -> Self {
        let mut p = LaurentPoly::zero();
        p.add_term(exp, coeff);
        p
    }

    pub fn add_term(&mut self, exp: i32, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let c = self.terms.entry(exp).or_insert(0);
        *c += coeff;
        if *c == 0 {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn coeff(&self, exp: i32) -> i64 {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    /// Evaluate at `q = 1`.
    pub fn eval_one(&self) -> i64 {
        self.terms.values().sum()
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c);
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, -c);
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e, c) in self.terms() {
            out.add_term(e, -c);
        }
        out
    }
}

fn write_power(f: &mut fmt::Formatter<'_>, var: &str, exp: i32) -> fmt::Result {
    match exp {
        0 => Ok(()),
        1 => write!(f, "{var}"),
        e => write!(f, "{var}^{e}"),
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (e, c)) in self.terms().enumerate() {
            if n == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            if a != 1 || e == 0 {
                write!(f, "{a}")?;
                if e != 0 {
                    write!(f, " ")?;
                }
            }
            write_power(f, "q", e)?;
        }
        Ok(())
    }
}

/// Bigraded Laurent polynomial in `q1, q2` with integer coefficients,
/// recording ranks of bigraded groups.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BigradedPoly {
    terms: BTreeMap<(i32, i32), i64>,
}

impl BigradedPoly {
    pub fn zero() -> Self {
        BigradedPoly::default()
    }

    pub fn one() -> Self {
        BigradedPoly::monomial(0, 0, 1)
    }

    pub fn monomial(r1: i32, r2: i32, coeff: i64) -> Self {
        let mut p = BigradedPoly::zero();
        p.add_term(r1, r2, coeff);
        p
    }

    pub fn add_term(&mut self, r1: i32, r2: i32, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let c = self.terms.entry((r1, r2)).or_insert(0);
        *c += coeff;
        if *c == 0 {
            self.terms.remove(&(r1, r2));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = ((i32, i32), i64)> + '_ {
        self.terms.iter().map(|(&k, &c)| (k, c))
    }

    pub fn coeff(&self, r1: i32, r2: i32) -> i64 {
        self.terms.get(&(r1, r2)).copied().unwrap_or(0)
    }

    pub fn scale(&self, s: i64) -> Self {
        let mut out = BigradedPoly::zero();
        for ((r1, r2), c) in self.terms() {
            out.add_term(r1, r2, c * s);
        }
        out
    }

    /// Multiply by the monomial `q1^a q2^b`.
    pub fn shifted(&self, a: i32, b: i32) -> Self {
        let mut out = BigradedPoly::zero();
        for ((r1, r2), c) in self.terms() {
            out.add_term(r1 + a, r2 + b, c);
        }
        out
    }

    /// Sum of all coefficients, i.e. evaluation at `q1 = q2 = 1`;
    /// the total rank of the bigraded group.
    pub fn total_rank(&self) -> i64 {
        self.terms.values().sum()
    }

    /// Substitute `q1 = -1, q2 = q`, landing in a Laurent polynomial in `q`.
    pub fn specialize_euler(&self) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for ((r1, r2), c) in self.terms() {
            let sign = if r1.rem_euclid(2) == 0 { 1 } else { -1 };
            out.add_term(r2, sign * c);
        }
        out
    }

    /// Substitute `q1 = q, q2 = q^n`.
    pub fn specialize_comparison(&self, n: i32) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for ((r1, r2), c) in self.terms() {
            out.add_term(r1 + n * r2, c);
        }
        out
    }
}

impl Add for &BigradedPoly {
    type Output = BigradedPoly;
    fn add(self, rhs: &BigradedPoly) -> BigradedPoly {
        let mut out = self.clone();
        for ((r1, r2), c) in rhs.terms() {
            out.add_term(r1, r2, c);
        }
        out
    }
}

impl fmt::Display for BigradedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, ((r1, r2), c)) in self.terms().enumerate() {
            if n == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            if a != 1 || (r1 == 0 && r2 == 0) {
                write!(f, "{a}")?;
                if r1 != 0 || r2 != 0 {
                    write!(f, " ")?;
                }
            }
            write_power(f, "q1", r1)?;
            if r1 != 0 && r2 != 0 {
                write!(f, " ")?;
            }
            write_power(f, "q2", r2)?;
        }
        Ok(())
    }
}

/// A half-integer, stored as twice its value. Geometric intersection numbers
/// live here.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct HalfInt(pub i64);

impl HalfInt {
    pub fn from_doubled(twice: i64) -> Self {
        HalfInt(twice)
    }

    pub fn doubled(self) -> i64 {
        self.0
    }

    pub fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 % 2 == 0 {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}
