//! The graded ring `A_m`: a quotient of the path ring of the zigzag quiver
//! on vertices `0..=m`, free abelian of rank `4m + 1`.
//!
//! Paths are tuples of vertices with consecutive entries differing by one.
//! The grading counts descending steps. The defining relations kill every
//! path that passes straight through an interior vertex, identify the two
//! length-two loops at an interior vertex, and kill the loop at vertex 0.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::Error;

/// Coefficient ring for `A_m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, serde::Serialize, serde::Deserialize)]
pub enum Coefficients {
    #[default]
    Integers,
    Mod2,
}

/// Fixes `m` (number of braid generators; vertices `0..=m`) and the
/// coefficient ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AlgebraSpec {
    pub m: usize,
    pub coefficients: Coefficients,
}

impl AlgebraSpec {
    pub fn new(m: usize) -> Self {
        assert!(m >= 1, "m must be at least 1");
        AlgebraSpec { m, coefficients: Coefficients::Integers }
    }

    pub fn with_coefficients(m: usize, coefficients: Coefficients) -> Self {
        assert!(m >= 1, "m must be at least 1");
        AlgebraSpec { m, coefficients }
    }

    pub fn vertex_count(&self) -> usize {
        self.m + 1
    }
}

/// A path in the quiver, stored as its vertex tuple `(i_1|...|i_{l+1})`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path(pub Vec<usize>);

impl Path {
    pub fn idempotent(i: usize) -> Self {
        Path(vec![i])
    }

    pub fn new(vertices: Vec<usize>) -> Self {
        Path(vertices)
    }

    pub fn source(&self) -> usize {
        self.0[0]
    }

    pub fn target(&self) -> usize {
        *self.0.last().unwrap()
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.0.len() - 1
    }

    pub fn is_idempotent(&self) -> bool {
        self.0.len() == 1
    }

    pub fn is_valid(&self, spec: &AlgebraSpec) -> bool {
        if self.0.is_empty() {
            return false;
        }
        if self.0.iter().any(|&v| v > spec.m) {
            return false;
        }
        self.0.windows(2).all(|w| w[0].abs_diff(w[1]) == 1)
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (n, v) in self.0.iter().enumerate() {
            if n > 0 {
                write!(f, "|")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// Number of descending steps; additive under concatenation.
pub fn degree(p: &Path) -> usize {
    p.0.windows(2).filter(|w| w[1] + 1 == w[0]).count()
}

/// The canonical ordered basis of `A_m`:
/// `(0),...,(m), (0|1),...,(m-1|m), (1|0),...,(m|m-1), (1|0|1),...,(m|m-1|m)`.
pub fn basis(spec: &AlgebraSpec) -> Vec<Path> {
    let m = spec.m;
    let mut out = Vec::with_capacity(4 * m + 1);
    for i in 0..=m {
        out.push(Path(vec![i]));
    }
    for i in 0..m {
        out.push(Path(vec![i, i + 1]));
    }
    for i in 1..=m {
        out.push(Path(vec![i, i - 1]));
    }
    for i in 1..=m {
        out.push(Path(vec![i, i - 1, i]));
    }
    out
}

/// Position of a basis path in the canonical order, if it is one.
pub fn basis_index(spec: &AlgebraSpec, p: &Path) -> Option<usize> {
    let m = spec.m;
    match p.0.as_slice() {
        [i] => Some(*i),
        [i, j] if *j == i + 1 => Some(m + 1 + i),
        [i, j] if j + 1 == *i => Some(2 * m + i),
        [i, j, k] if j + 1 == *i && k == i => Some(3 * m + i),
        _ => None,
    }
}

/// Rewrites one monomial path into the basis. Returns `None` when the
/// relations kill it, otherwise the unique basis path it equals.
///
/// Rewriting is leftmost-first; confluence is covered by tests that replay
/// random rewrite orders.
pub fn reduce_path(p: &Path, spec: &AlgebraSpec) -> Option<Path> {
    debug_assert!(p.is_valid(spec), "invalid path {p}");
    let mut v = p.0.clone();
    'outer: loop {
        if v.len() <= 2 {
            return Some(Path(v));
        }
        for s in 0..v.len() - 2 {
            let (a, b, c) = (v[s], v[s + 1], v[s + 2]);
            // Straight-through patterns vanish.
            if (b == a + 1 && c == b + 1) || (b + 1 == a && c + 1 == b) {
                return None;
            }
            if b == a + 1 && c == a {
                if a == 0 {
                    // (0|1|0) = 0
                    return None;
                }
                // (i|i+1|i) = (i|i-1|i)
                v[s + 1] = a - 1;
                continue 'outer;
            }
        }
        // A redex-free path has every triple of the form (i|i-1|i); two such
        // overlapping triples force (i-1|i|i-1), itself a redex. So nothing
        // longer than a single down-up loop survives the scan.
        assert!(v.len() <= 3, "irreducible path of length > 2: {v:?}");
        return Some(Path(v));
    }
}

/// An exact integer (or mod-2) combination of basis paths.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AlgebraElement {
    terms: BTreeMap<Path, i64>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        AlgebraElement { terms: BTreeMap::new() }
    }

    pub fn from_path(p: Path, spec: &AlgebraSpec) -> Self {
        let mut e = AlgebraElement::zero();
        if let Some(b) = reduce_path(&p, spec) {
            e.add_term(b, 1, spec);
        }
        e
    }

    pub fn idempotent(i: usize, spec: &AlgebraSpec) -> Self {
        Self::from_path(Path::idempotent(i), spec)
    }

    /// Sum of all idempotents.
    pub fn unit(spec: &AlgebraSpec) -> Self {
        let mut e = AlgebraElement::zero();
        for i in 0..=spec.m {
            e.add_term(Path::idempotent(i), 1, spec);
        }
        e
    }

    pub fn add_term(&mut self, basis_path: Path, coeff: i64, spec: &AlgebraSpec) {
        if coeff == 0 {
            return;
        }
        let c = self.terms.entry(basis_path.clone()).or_insert(0);
        *c += coeff;
        if spec.coefficients == Coefficients::Mod2 {
            *c = c.rem_euclid(2);
        }
        if *c == 0 {
            self.terms.remove(&basis_path);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Path, i64)> {
        self.terms.iter().map(|(p, &c)| (p, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn negate(&self) -> Self {
        AlgebraElement { terms: self.terms.iter().map(|(p, c)| (p.clone(), -c)).collect() }
    }

    pub fn scale(&self, s: i64, spec: &AlgebraSpec) -> Self {
        let mut out = AlgebraElement::zero();
        for (p, c) in self.terms() {
            out.add_term(p.clone(), c * s, spec);
        }
        out
    }

    pub fn add(&self, other: &Self, spec: &AlgebraSpec) -> Self {
        let mut out = self.clone();
        for (p, c) in other.terms() {
            out.add_term(p.clone(), c, spec);
        }
        out
    }

    /// True when the element is `±1` times a single idempotent `(v)`.
    /// These are exactly the differential entries the reduction engine may
    /// cancel.
    pub fn as_unit_idempotent(&self) -> Option<(usize, i64)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (p, &c) = self.terms.iter().next().unwrap();
        if p.is_idempotent() && (c == 1 || c == -1) {
            Some((p.source(), c))
        } else {
            None
        }
    }

    /// Every term is homogeneous of the given degree and runs `src -> dst`.
    pub fn is_homogeneous(&self, src: usize, dst: usize, deg: i64) -> bool {
        self.terms.iter().all(|(p, _)| {
            p.source() == src && p.target() == dst && degree(p) as i64 == deg
        })
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (p, c)) in self.terms.iter().enumerate() {
            if n == 0 {
                if *c < 0 {
                    write!(f, "-")?;
                }
            } else if *c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            if a != 1 {
                write!(f, "{a}")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Bilinear multiplication: concatenation where endpoints match, followed by
/// reduction into the basis.
pub fn multiply(a: &AlgebraElement, b: &AlgebraElement, spec: &AlgebraSpec) -> AlgebraElement {
    let mut out = AlgebraElement::zero();
    for (p, cp) in a.terms() {
        for (q, cq) in b.terms() {
            if p.target() != q.source() {
                continue;
            }
            let mut v = p.0.clone();
            v.extend_from_slice(&q.0[1..]);
            if let Some(r) = reduce_path(&Path(v), spec) {
                out.add_term(r, cp * cq, spec);
            }
        }
    }
    out
}

/// Graded rank of `(i) A_m (j)` as a list of `(degree, rank)` pairs.
pub fn idempotent_slice(i: usize, j: usize, spec: &AlgebraSpec) -> Vec<(usize, usize)> {
    assert!(i <= spec.m && j <= spec.m, "vertex out of range");
    if i == j {
        if i == 0 {
            vec![(0, 1)]
        } else {
            vec![(0, 1), (1, 1)]
        }
    } else if j == i + 1 {
        vec![(0, 1)]
    } else if i == j + 1 {
        vec![(1, 1)]
    } else {
        vec![]
    }
}

/// The basis paths of `(i) A_m (j)` in canonical order with their degrees.
pub fn hom_basis(i: usize, j: usize, spec: &AlgebraSpec) -> Vec<(Path, usize)> {
    assert!(i <= spec.m && j <= spec.m, "vertex out of range");
    if i == j {
        if i == 0 {
            vec![(Path(vec![0]), 0)]
        } else {
            vec![(Path(vec![i]), 0), (Path(vec![i, i - 1, i]), 1)]
        }
    } else if j == i + 1 {
        vec![(Path(vec![i, j]), 0)]
    } else if i == j + 1 {
        vec![(Path(vec![i, j]), 1)]
    } else {
        vec![]
    }
}

/// Parse a vertex tuple and reduce it, for CLI/JSON input.
pub fn element_from_vertices(vertices: &[usize], spec: &AlgebraSpec) -> Result<AlgebraElement, Error> {
    let p = Path(vertices.to_vec());
    if !p.is_valid(spec) {
        return Err(Error::InvalidPath(format!("{vertices:?}")));
    }
    Ok(AlgebraElement::from_path(p, spec))
}
