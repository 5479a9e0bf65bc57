//! Admissible bigraded curves on the disc with `m + 1` marked points, in
//! normal form with respect to the vertical dividing arcs, stored purely
//! combinatorially.
//!
//! Model: marked points `z_0, ..., z_m` in a row; the dividing arc `d_l`
//! runs top to bottom just left of `z_l`, so the strip cells are
//! `D_0 | d_0 | D_1 | ... | d_m | D_{m+1}` with `z_{j-1}` inside `D_j` and a
//! distinguished boundary point on the wall of `D_0`. A curve is the ordered
//! list of its wall crossings, each carrying a bigrading `(x1, x2)`, the
//! side information of the arcs between consecutive crossings, and the two
//! curve ends (a marked point or the boundary point).
//!
//! The positive half-twist along the `k`-th basic curve rotates the two
//! marked points of `D_k (+) D_{k+1}` counterclockwise; its action is
//! computed string by string: a connected component of the curve inside
//! `D_k (+) D_{k+1}` falls into one of finitely many families, and twisting
//! moves the family parameter by one while fixing everything on and beyond
//! the outer walls.

use crate::algebra::{AlgebraElement, AlgebraSpec, Path};
use crate::braid::BraidWord;
use crate::complexes::ProjComplex;
use crate::error::Error;
use crate::poly::{BigradedPoly, HalfInt};

/// A crossing of the curve with the dividing arc `d_line`, with its local
/// bigrading.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Crossing {
    pub line: usize,
    pub x1: i32,
    pub x2: i32,
}

/// Shape of the arc between two consecutive crossings.
///
/// Between adjacent lines the arc passes above or below the marked point of
/// the cell it traverses (types 1 and 1' of essential segments). Between two
/// crossings of one line it wraps the marked point of the cell on that side
/// of the line (types 2 and 2').
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum GapKind {
    Above,
    Below,
    WrapLeft,
    WrapRight,
}

/// Where a curve end sits, relative to the line of its extremal crossing:
/// the marked point of the cell to the left or right, or the boundary point
/// (which lives in `D_0` and only attaches to crossings of `d_0`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum EndKind {
    PunctureLeft,
    PunctureRight,
    Boundary,
}

/// An admissible bigraded curve in normal form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BigradedNormalCurve {
    pub m: usize,
    crossings: Vec<Crossing>,
    gaps: Vec<GapKind>,
    ends: (EndKind, EndKind),
}

fn end_cell(line: usize, kind: EndKind) -> usize {
    match kind {
        EndKind::PunctureLeft => line,
        EndKind::PunctureRight => line + 1,
        EndKind::Boundary => 0,
    }
}

fn gap_cell(l1: usize, l2: usize, kind: GapKind) -> usize {
    match kind {
        GapKind::Above | GapKind::Below => l1.max(l2),
        GapKind::WrapLeft => l1,
        GapKind::WrapRight => l1 + 1,
    }
}

/// End point identifier: `-1` for the boundary point, otherwise the marked
/// point index.
fn end_point(line: usize, kind: EndKind) -> i64 {
    match kind {
        EndKind::PunctureLeft => line as i64 - 1,
        EndKind::PunctureRight => line as i64,
        EndKind::Boundary => -1,
    }
}

impl BigradedNormalCurve {
    pub fn new(
        m: usize,
        crossings: Vec<Crossing>,
        gaps: Vec<GapKind>,
        ends: (EndKind, EndKind),
    ) -> Result<Self, Error> {
        let mut c = BigradedNormalCurve { m, crossings, gaps, ends };
        c.validate()?;
        c.canonicalize();
        Ok(c)
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn gaps(&self) -> &[GapKind] {
        &self.gaps
    }

    pub fn ends(&self) -> (EndKind, EndKind) {
        self.ends
    }

    /// The marked-point index (or `-1` for the boundary point) of each end.
    pub fn end_points(&self) -> (i64, i64) {
        (
            end_point(self.crossings[0].line, self.ends.0),
            end_point(self.crossings[self.crossings.len() - 1].line, self.ends.1),
        )
    }

    fn reversed(&self) -> Self {
        BigradedNormalCurve {
            m: self.m,
            crossings: self.crossings.iter().rev().copied().collect(),
            gaps: self.gaps.iter().rev().copied().collect(),
            ends: (self.ends.1, self.ends.0),
        }
    }

    fn canonicalize(&mut self) {
        let (a, b) = self.end_points();
        if a > b {
            *self = self.reversed();
        }
    }

    pub fn validate(&self) -> Result<(), Error> {
        let n = self.crossings.len();
        if n == 0 {
            return Err(Error::InvalidCurve("no crossings".into()));
        }
        if self.gaps.len() + 1 != n {
            return Err(Error::InvalidCurve("gap count must be crossings - 1".into()));
        }
        for cr in &self.crossings {
            if cr.line > self.m {
                return Err(Error::InvalidCurve(format!("line {} out of range", cr.line)));
            }
        }
        for (i, g) in self.gaps.iter().enumerate() {
            let p = self.crossings[i];
            let q = self.crossings[i + 1];
            let ok = match (p.line as i64 - q.line as i64, g) {
                (-1, GapKind::Above) => (q.x1, q.x2) == (p.x1 + 1, p.x2),
                (-1, GapKind::Below) => (q.x1, q.x2) == (p.x1 - 1, p.x2 + 1),
                (1, GapKind::Above) => (q.x1, q.x2) == (p.x1 - 1, p.x2),
                (1, GapKind::Below) => (q.x1, q.x2) == (p.x1 + 1, p.x2 - 1),
                (0, GapKind::WrapLeft | GapKind::WrapRight) => {
                    (q.x1, q.x2) == (p.x1 + 1, p.x2 - 1) || (q.x1, q.x2) == (p.x1 - 1, p.x2 + 1)
                }
                _ => {
                    return Err(Error::InvalidCurve(format!(
                        "gap {i}: lines {} and {} with {:?}",
                        p.line, q.line, g
                    )))
                }
            };
            if !ok {
                return Err(Error::InvalidCurve(format!(
                    "gap {i}: bigrading step ({},{}) -> ({},{}) wrong for {:?}",
                    p.x1, p.x2, q.x1, q.x2, g
                )));
            }
            if *g == GapKind::WrapLeft && p.line == 0 {
                return Err(Error::InvalidCurve("wrap into the puncture-free cell".into()));
            }
        }
        match self.ends.0 {
            EndKind::PunctureLeft if self.crossings[0].line == 0 => {
                return Err(Error::InvalidCurve("no puncture left of line 0".into()))
            }
            EndKind::Boundary if self.crossings[0].line != 0 => {
                return Err(Error::InvalidCurve("boundary end away from line 0".into()))
            }
            _ => {}
        }
        match self.ends.1 {
            EndKind::PunctureLeft if self.crossings[n - 1].line == 0 => {
                return Err(Error::InvalidCurve("no puncture left of line 0".into()))
            }
            EndKind::Boundary if self.crossings[n - 1].line != 0 => {
                return Err(Error::InvalidCurve("boundary end away from line 0".into()))
            }
            _ => {}
        }
        // Each crossing separates the two cells flanking its line.
        let cells = self.slot_cells();
        for i in 0..n {
            let l = self.crossings[i].line;
            let left = cells[i];
            let right = cells[i + 1];
            if !(left.min(right) == l && left.max(right) == l + 1) {
                return Err(Error::InvalidCurve(format!(
                    "crossing {i} on line {l} flanked by cells {left}, {right}"
                )));
            }
        }
        let (a, b) = self.end_points();
        if a == b {
            return Err(Error::InvalidCurve("ends coincide".into()));
        }
        Ok(())
    }

    /// Cell of each slot along the curve: slot `0` is the starting end,
    /// slot `i` for `1 <= i <= n-1` is the gap between crossings `i-1` and
    /// `i`, slot `n` is the final end.
    fn slot_cells(&self) -> Vec<usize> {
        let n = self.crossings.len();
        let mut cells = Vec::with_capacity(n + 1);
        cells.push(end_cell(self.crossings[0].line, self.ends.0));
        for i in 0..n - 1 {
            cells.push(gap_cell(self.crossings[i].line, self.crossings[i + 1].line, self.gaps[i]));
        }
        cells.push(end_cell(self.crossings[n - 1].line, self.ends.1));
        cells
    }
}

/// The basic curve `b_k` with its normalized bigrading: a single crossing of
/// `d_k` graded `(0, 0)`.
pub fn basic_curve(m: usize, k: usize) -> BigradedNormalCurve {
    assert!(k <= m, "basic curve index out of range");
    let ends = if k == 0 {
        (EndKind::Boundary, EndKind::PunctureRight)
    } else {
        (EndKind::PunctureLeft, EndKind::PunctureRight)
    };
    BigradedNormalCurve::new(m, vec![Crossing { line: k, x1: 0, x2: 0 }], vec![], ends)
        .expect("basic curve is valid")
}

/// Shift the bigrading of every crossing by `(r1, r2)`.
pub fn curve_shift(c: &BigradedNormalCurve, r1: i32, r2: i32) -> BigradedNormalCurve {
    let mut out = c.clone();
    for cr in &mut out.crossings {
        cr.x1 += r1;
        cr.x2 += r2;
    }
    out
}

/// The complex of projectives attached to a bigraded curve: one summand
/// `P_{line}[-x1]{x2}` per crossing, with differentials given by right
/// multiplication along the essential segments.
pub fn l_complex(c: &BigradedNormalCurve, spec: AlgebraSpec) -> Result<ProjComplex, Error> {
    assert_eq!(c.m, spec.m, "curve and algebra have different m");
    c.validate()?;
    let mut out = ProjComplex::empty(spec);
    let ids: Vec<_> = c
        .crossings
        .iter()
        .map(|cr| out.add_summand(cr.line, cr.x1, cr.x2))
        .collect();
    for (i, _) in c.gaps.iter().enumerate() {
        let p = c.crossings[i];
        let q = c.crossings[i + 1];
        // orient toward the end with larger x1
        let (tail, head, ti, hi) =
            if q.x1 == p.x1 + 1 { (p, q, i, i + 1) } else { (q, p, i + 1, i) };
        debug_assert_eq!(head.x1, tail.x1 + 1);
        let path = if tail.line == head.line {
            Path::new(vec![tail.line, tail.line - 1, tail.line])
        } else {
            Path::new(vec![tail.line, head.line])
        };
        out.add_entry(ids[ti], ids[hi], AlgebraElement::from_path(path, &spec));
    }
    out.validate().map(|_| out)
}

/// Type tags for connected components of a curve inside a double cell
/// `D_k (+) D_{k+1}`. Five infinite families and five exceptional types for
/// interior `k` (restricted automatically near the edges), and five
/// exceptional types for `k = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum KStringType {
    I,
    II,
    IIPrime,
    III,
    IIIPrime,
    IV,
    IVPrime,
    V,
    VPrime,
    VI,
    VII,
    VIII,
    IX,
    X,
    XI,
}

impl KStringType {
    fn is_family(self) -> bool {
        matches!(
            self,
            KStringType::I
                | KStringType::II
                | KStringType::IIPrime
                | KStringType::III
                | KStringType::IIIPrime
        )
    }
}

/// A classified `k`-string: its type, the twisting parameter `u` for the
/// infinite families, and the bigrading shift `(r1, r2)` of its anchor
/// crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KString {
    pub k: usize,
    pub type_tag: KStringType,
    pub u: Option<i64>,
    pub shift: (i32, i32),
}

impl KString {
    /// Contribution to the bigraded intersection number with the `k`-th
    /// basic curve: the base value of the type times
    /// `q1^{r1} q2^{r2} (q1^{-1} q2)^u`.
    pub fn contribution(&self) -> BigradedPoly {
        let mut base = BigradedPoly::zero();
        match self.type_tag {
            KStringType::I | KStringType::II => {
                base.add_term(1, 0, 1);
                base.add_term(0, 1, 1);
            }
            KStringType::IIPrime | KStringType::VIII | KStringType::X => {
                base.add_term(0, 0, 1);
                base.add_term(1, -1, 1);
            }
            KStringType::III => base.add_term(0, 1, 1),
            KStringType::IIIPrime | KStringType::IX | KStringType::XI => base.add_term(0, 0, 1),
            KStringType::VI => {
                base.add_term(0, 0, 1);
                base.add_term(0, 1, 1);
            }
            KStringType::IV
            | KStringType::IVPrime
            | KStringType::V
            | KStringType::VPrime
            | KStringType::VII => {}
        }
        let u = self.u.unwrap_or(0) as i32;
        base.shifted(self.shift.0 - u, self.shift.1 + u)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum RunEnd {
    Interface,
    Puncture(i64),
    Boundary,
}

#[derive(Debug, Clone)]
struct Run {
    lo: usize,
    hi: usize,
    covers_start: bool,
    covers_end: bool,
    left: RunEnd,
    right: RunEnd,
}

fn compute_runs(c: &BigradedNormalCurve, k: usize) -> Vec<Run> {
    let n = c.crossings.len();
    let cells = c.slot_cells();
    let in_dp = |cell: usize| cell == k || cell == k + 1;
    let mut runs = Vec::new();
    let mut s = 0usize;
    while s <= n {
        if !in_dp(cells[s]) {
            s += 1;
            continue;
        }
        let mut e = s;
        while e < n && in_dp(cells[e + 1]) {
            e += 1;
        }
        let lo = if s == 0 { 0 } else { s - 1 };
        let hi = if e == n { n - 1 } else { e };
        let left = if s == 0 {
            match c.ends.0 {
                EndKind::Boundary => RunEnd::Boundary,
                other => RunEnd::Puncture(end_point(c.crossings[0].line, other)),
            }
        } else {
            RunEnd::Interface
        };
        let right = if e == n {
            match c.ends.1 {
                EndKind::Boundary => RunEnd::Boundary,
                other => RunEnd::Puncture(end_point(c.crossings[n - 1].line, other)),
            }
        } else {
            RunEnd::Interface
        };
        runs.push(Run { lo, hi, covers_start: s == 0, covers_end: e == n, left, right });
        s = e + 1;
    }
    runs
}

/// The combinatorial content of one string, oriented for classification.
#[derive(Debug, Clone, PartialEq, Eq)]
struct StringData {
    crossings: Vec<Crossing>,
    gaps: Vec<GapKind>,
    left: RunEnd,
    right: RunEnd,
}

impl StringData {
    fn reversed(&self) -> Self {
        StringData {
            crossings: self.crossings.iter().rev().copied().collect(),
            gaps: self.gaps.iter().rev().copied().collect(),
            left: self.right,
            right: self.left,
        }
    }
}

fn extract_string(c: &BigradedNormalCurve, run: &Run) -> StringData {
    StringData {
        crossings: c.crossings[run.lo..=run.hi].to_vec(),
        gaps: c.gaps[run.lo..run.hi].to_vec(),
        left: run.left,
        right: run.right,
    }
}

/// Template for a classified string in its canonical orientation. Terminal
/// ends are returned as `Some(kind)`; interface ends as `None`.
fn emit_template(
    k: usize,
    tag: KStringType,
    u: i64,
    anchor: (i32, i32),
) -> (Vec<Crossing>, Vec<GapKind>, Option<EndKind>, Option<EndKind>) {
    use EndKind::*;
    use GapKind::*;
    let (r1, r2) = anchor;
    let cr = |line: usize, a: i32, b: i32| Crossing { line, x1: a, x2: b };
    let wl = k.wrapping_sub(1); // only used when k >= 1
    let wr = k + 1;
    let wraps_from = |first_right: bool, count: usize| -> Vec<GapKind> {
        (0..count)
            .map(|t| {
                if (t % 2 == 0) == first_right {
                    WrapRight
                } else {
                    WrapLeft
                }
            })
            .collect()
    };
    match tag {
        KStringType::VI => {
            (vec![cr(k, r1, r2)], vec![], Some(PunctureLeft), Some(PunctureRight))
        }
        KStringType::IV => (
            vec![cr(wl, r1, r2), cr(k, r1 + 1, r2), cr(wr, r1 + 2, r2)],
            vec![Above, Above],
            None,
            None,
        ),
        KStringType::IVPrime => (
            vec![cr(wl, r1, r2), cr(k, r1 - 1, r2 + 1), cr(wr, r1 - 2, r2 + 2)],
            vec![Below, Below],
            None,
            None,
        ),
        KStringType::V => (
            vec![
                cr(wl, r1, r2),
                cr(k, r1 + 1, r2),
                cr(k, r1 + 2, r2 - 1),
                cr(wl, r1 + 3, r2 - 2),
            ],
            vec![Above, WrapRight, Below],
            None,
            None,
        ),
        KStringType::VPrime => (
            vec![
                cr(wr, r1, r2),
                cr(k, r1 + 1, r2 - 1),
                cr(k, r1 + 2, r2 - 2),
                cr(wr, r1 + 3, r2 - 2),
            ],
            vec![Below, WrapLeft, Above],
            None,
            None,
        ),
        KStringType::I => {
            let n = if u >= 1 { 2 * u - 1 } else { 1 - 2 * u } as usize;
            let mut crs = vec![cr(wl, r1, r2)];
            for j in 1..=n {
                let cj = j.min(n + 1 - j) as i32;
                crs.push(if u >= 1 {
                    cr(k, r1 - cj, r2 + cj)
                } else {
                    cr(k, r1 + cj, r2 - cj + 1)
                });
            }
            crs.push(cr(wr, r1, r2 + 1));
            let mut gp = vec![if u >= 1 { Below } else { Above }];
            gp.extend(wraps_from(true, n - 1));
            gp.push(if u >= 1 { Above } else { Below });
            (crs, gp, None, None)
        }
        KStringType::II => {
            if u == 0 {
                return (
                    vec![cr(wl, r1, r2), cr(wl, r1 + 1, r2 - 1)],
                    vec![WrapRight],
                    None,
                    None,
                );
            }
            let n = 2 * u.unsigned_abs() as usize;
            let mut crs = vec![cr(wl, r1, r2)];
            for j in 1..=n {
                if u >= 1 {
                    let cj = (j as i64).min(2 * u - j as i64) as i32;
                    crs.push(cr(k, r1 - cj, r2 + cj));
                } else {
                    let au = u.unsigned_abs() as usize;
                    let cj = j.min(2 * (au + 1) - j) as i32;
                    crs.push(cr(k, r1 + cj, r2 - (cj - 1)));
                }
            }
            crs.push(cr(wl, r1 + 1, r2 - 1));
            let side = if u >= 1 { Below } else { Above };
            let mut gp = vec![side];
            gp.extend(wraps_from(true, n - 1));
            gp.push(side);
            (crs, gp, None, None)
        }
        KStringType::IIPrime => {
            if u == 0 {
                return (
                    vec![cr(wr, r1, r2), cr(wr, r1 + 1, r2 - 1)],
                    vec![WrapLeft],
                    None,
                    None,
                );
            }
            let n = 2 * u.unsigned_abs() as usize;
            let mut crs = vec![cr(wr, r1, r2)];
            for j in 1..=n {
                if u >= 1 {
                    let cj = (j as i64).min(2 * u - j as i64) as i32;
                    crs.push(cr(k, r1 - cj, r2 + cj - 1));
                } else {
                    let au = u.unsigned_abs() as usize;
                    let cj = j.min(2 * (au + 1) - j) as i32;
                    crs.push(cr(k, r1 + cj, r2 - cj));
                }
            }
            crs.push(cr(wr, r1 + 1, r2 - 1));
            let side = if u >= 1 { Above } else { Below };
            let mut gp = vec![side];
            gp.extend(wraps_from(false, n - 1));
            gp.push(side);
            (crs, gp, None, None)
        }
        KStringType::III => {
            let n = u.unsigned_abs() as usize;
            let mut crs = vec![cr(wl, r1, r2)];
            for j in 1..=n {
                let ji = j as i32;
                crs.push(if u >= 1 {
                    cr(k, r1 - ji, r2 + ji)
                } else {
                    cr(k, r1 + ji, r2 - (ji - 1))
                });
            }
            let mut gp = Vec::new();
            if n > 0 {
                gp.push(if u >= 1 { Below } else { Above });
                gp.extend(wraps_from(true, n - 1));
            }
            let end = if n == 0 {
                PunctureRight // the marked point of D_k, seen from line k-1
            } else if u % 2 == 0 {
                PunctureLeft
            } else {
                PunctureRight
            };
            (crs, gp, None, Some(end))
        }
        KStringType::IIIPrime => {
            let n = u.unsigned_abs() as usize;
            let mut crs = vec![cr(wr, r1, r2)];
            for j in 1..=n {
                let ji = j as i32;
                crs.push(if u >= 1 {
                    cr(k, r1 - ji, r2 + ji - 1)
                } else {
                    cr(k, r1 + ji, r2 - ji)
                });
            }
            let mut gp = Vec::new();
            if n > 0 {
                gp.push(if u >= 1 { Above } else { Below });
                gp.extend(wraps_from(false, n - 1));
            }
            let end = if n == 0 {
                PunctureLeft // the marked point of D_{k+1}, seen from line k+1
            } else if u % 2 == 0 {
                PunctureRight
            } else {
                PunctureLeft
            };
            (crs, gp, None, Some(end))
        }
        // 0-string types; never twisted, only classified.
        KStringType::XI => {
            (vec![cr(0, r1, r2)], vec![], Some(Boundary), Some(PunctureRight))
        }
        KStringType::VII => (
            vec![cr(0, r1 - 1, r2), cr(1, r1, r2)],
            vec![Above],
            Some(Boundary),
            None,
        ),
        KStringType::VIII => (
            vec![cr(0, r1 + 1, r2 - 1), cr(1, r1, r2)],
            vec![Below],
            Some(Boundary),
            None,
        ),
        KStringType::IX => (vec![cr(1, r1, r2)], vec![], Some(PunctureLeft), None),
        KStringType::X => (
            vec![cr(1, r1, r2), cr(1, r1 + 1, r2 - 1)],
            vec![GapKind::WrapLeft],
            None,
            None,
        ),
    }
}

/// A classification result: the typed string plus the orientation of the
/// host traversal relative to the canonical template.
#[derive(Debug, Clone)]
struct Classified {
    ks: KString,
    reversed: bool,
}

fn side_gap(g: GapKind, what: &str, k: usize) -> Result<GapKind, Error> {
    match g {
        GapKind::Above | GapKind::Below => Ok(g),
        _ => Err(Error::UnclassifiableString(k, format!("{what} gap is a wrap"))),
    }
}

fn classify_string(k: usize, data: &StringData) -> Result<Classified, Error> {
    let fail = |msg: &str| Error::UnclassifiableString(k, msg.to_string());
    let a = k as i64 - 1; // marked point of D_k
    let b = k as i64; // marked point of D_{k+1}
    let first = *data.crossings.first().unwrap();
    let last = *data.crossings.last().unwrap();
    let mcount = data.crossings.iter().filter(|c| c.line == k).count();

    let (tag, u, anchor, reversed, data_n): (KStringType, i64, (i32, i32), bool, StringData) =
        if k == 0 {
            classify_zero_string(data)?
        } else {
            match (data.left, data.right) {
                (RunEnd::Interface, RunEnd::Interface) => {
                    let (fl, ll) = (first.line, last.line);
                    if fl == k - 1 && ll == k + 1 || fl == k + 1 && ll == k - 1 {
                        // through string
                        let (d, rev) = if fl == k - 1 {
                            (data.clone(), false)
                        } else {
                            (data.reversed(), true)
                        };
                        let entry = side_gap(d.gaps[0], "entry", k)?;
                        let exit = side_gap(*d.gaps.last().unwrap(), "exit", k)?;
                        let anchor = (d.crossings[0].x1, d.crossings[0].x2);
                        let (tag, u) = match (entry, exit) {
                            (GapKind::Above, GapKind::Below) => {
                                (KStringType::I, (1 - mcount as i64) / 2)
                            }
                            (GapKind::Below, GapKind::Above) => {
                                (KStringType::I, (mcount as i64 + 1) / 2)
                            }
                            (GapKind::Above, GapKind::Above) => (KStringType::IV, 0),
                            (GapKind::Below, GapKind::Below) => (KStringType::IVPrime, 0),
                            _ => return Err(fail("through string with wrap boundary")),
                        };
                        (tag, u, anchor, rev, d)
                    } else if fl == ll && (fl == k - 1 || fl == k + 1) {
                        // loop on one wall
                        let (d, rev) = if first.x1 <= last.x1 {
                            (data.clone(), false)
                        } else {
                            (data.reversed(), true)
                        };
                        let anchor = (d.crossings[0].x1, d.crossings[0].x2);
                        let left_wall = fl == k - 1;
                        let (tag, u) = if mcount == 0 {
                            (if left_wall { KStringType::II } else { KStringType::IIPrime }, 0)
                        } else {
                            let entry = side_gap(d.gaps[0], "entry", k)?;
                            let exit = side_gap(*d.gaps.last().unwrap(), "exit", k)?;
                            let half = (mcount / 2) as i64;
                            match (left_wall, entry, exit) {
                                (true, GapKind::Below, GapKind::Below) => (KStringType::II, half),
                                (true, GapKind::Above, GapKind::Above) => (KStringType::II, -half),
                                (true, GapKind::Above, GapKind::Below) => (KStringType::V, 0),
                                (false, GapKind::Above, GapKind::Above) => {
                                    (KStringType::IIPrime, half)
                                }
                                (false, GapKind::Below, GapKind::Below) => {
                                    (KStringType::IIPrime, -half)
                                }
                                (false, GapKind::Below, GapKind::Above) => (KStringType::VPrime, 0),
                                _ => return Err(fail("loop with inconsistent sides")),
                            }
                        };
                        (tag, u, anchor, rev, d)
                    } else {
                        return Err(fail("interface lines do not match the double cell"));
                    }
                }
                (RunEnd::Interface, RunEnd::Puncture(_))
                | (RunEnd::Puncture(_), RunEnd::Interface) => {
                    let (d, rev) = if data.left == RunEnd::Interface {
                        (data.clone(), false)
                    } else {
                        (data.reversed(), true)
                    };
                    let RunEnd::Puncture(p) = d.right else { unreachable!() };
                    let iline = d.crossings[0].line;
                    let anchor = (d.crossings[0].x1, d.crossings[0].x2);
                    let prime = if iline == k - 1 {
                        false
                    } else if iline == k + 1 {
                        true
                    } else {
                        return Err(fail("terminal string enters through the middle line"));
                    };
                    let n = mcount as i64;
                    let u = if n == 0 {
                        0
                    } else {
                        let entry = side_gap(d.gaps[0], "entry", k)?;
                        match (prime, entry) {
                            (false, GapKind::Below) | (true, GapKind::Above) => n,
                            (false, GapKind::Above) | (true, GapKind::Below) => -n,
                            _ => unreachable!(),
                        }
                    };
                    // parity consistency between u and the terminal point
                    let expect = if prime {
                        if u.rem_euclid(2) == 0 { b } else { a }
                    } else if u.rem_euclid(2) == 0 {
                        a
                    } else {
                        b
                    };
                    if p != expect {
                        return Err(fail("terminal marked point inconsistent with winding"));
                    }
                    (
                        if prime { KStringType::IIIPrime } else { KStringType::III },
                        u,
                        anchor,
                        rev,
                        d,
                    )
                }
                (RunEnd::Puncture(p1), RunEnd::Puncture(p2)) => {
                    if !((p1 == a && p2 == b) || (p1 == b && p2 == a)) {
                        return Err(fail("two-point string must join the cell points"));
                    }
                    let (d, rev) =
                        if p1 == a { (data.clone(), false) } else { (data.reversed(), true) };
                    let anchor = (d.crossings[0].x1, d.crossings[0].x2);
                    (KStringType::VI, 0, anchor, rev, d)
                }
                _ => return Err(fail("boundary end inside an interior double cell")),
            }
        };

    // Regenerate the template and insist on exact agreement.
    let (tcr, tgp, tstart, tend) = emit_template(k, tag, u, anchor);
    if tcr != data_n.crossings || tgp != data_n.gaps {
        return Err(Error::UnclassifiableString(
            k,
            format!(
                "string {:?} gaps {:?} does not match template {tag:?} u={u} at {anchor:?}",
                data_n.crossings, data_n.gaps
            ),
        ));
    }
    // check terminal-end agreement
    let check_end = |re: RunEnd, te: Option<EndKind>, line: usize| -> bool {
        match (re, te) {
            (RunEnd::Interface, None) => true,
            (RunEnd::Puncture(p), Some(kind)) => {
                kind != EndKind::Boundary && end_point(line, kind) == p
            }
            (RunEnd::Boundary, Some(EndKind::Boundary)) => true,
            _ => false,
        }
    };
    if !check_end(data_n.left, tstart, data_n.crossings[0].line)
        || !check_end(data_n.right, tend, data_n.crossings.last().unwrap().line)
    {
        return Err(Error::UnclassifiableString(k, "terminal ends disagree".into()));
    }
    Ok(Classified {
        ks: KString {
            k,
            type_tag: tag,
            u: if tag.is_family() { Some(u) } else { None },
            shift: anchor,
        },
        reversed,
    })
}

#[allow(clippy::type_complexity)]
fn classify_zero_string(
    data: &StringData,
) -> Result<(KStringType, i64, (i32, i32), bool, StringData), Error> {
    let fail = |msg: &str| Error::UnclassifiableString(0, msg.to_string());
    match (data.left, data.right) {
        (RunEnd::Boundary, RunEnd::Puncture(0)) | (RunEnd::Puncture(0), RunEnd::Boundary) => {
            let (d, rev) = if data.left == RunEnd::Boundary {
                (data.clone(), false)
            } else {
                (data.reversed(), true)
            };
            let c0 = d.crossings[0];
            Ok((KStringType::XI, 0, (c0.x1, c0.x2), rev, d))
        }
        (RunEnd::Boundary, RunEnd::Interface) | (RunEnd::Interface, RunEnd::Boundary) => {
            let (d, rev) = if data.left == RunEnd::Boundary {
                (data.clone(), false)
            } else {
                (data.reversed(), true)
            };
            if d.crossings.len() != 2 {
                return Err(fail("boundary strand with extra crossings"));
            }
            let anchor = (d.crossings[1].x1, d.crossings[1].x2);
            match d.gaps[0] {
                GapKind::Above => Ok((KStringType::VII, 0, anchor, rev, d)),
                GapKind::Below => Ok((KStringType::VIII, 0, anchor, rev, d)),
                _ => Err(fail("boundary strand with a wrap")),
            }
        }
        (RunEnd::Puncture(0), RunEnd::Interface) | (RunEnd::Interface, RunEnd::Puncture(0)) => {
            let (d, rev) = if data.left == RunEnd::Puncture(0) {
                (data.clone(), false)
            } else {
                (data.reversed(), true)
            };
            let c0 = d.crossings[0];
            Ok((KStringType::IX, 0, (c0.x1, c0.x2), rev, d))
        }
        (RunEnd::Interface, RunEnd::Interface) => {
            let first = data.crossings.first().unwrap();
            let last = data.crossings.last().unwrap();
            let (d, rev) = if first.x1 <= last.x1 {
                (data.clone(), false)
            } else {
                (data.reversed(), true)
            };
            let c0 = d.crossings[0];
            Ok((KStringType::X, 0, (c0.x1, c0.x2), rev, d))
        }
        _ => Err(fail("unrecognized 0-string ends")),
    }
}

/// Split the curve into its `k`-strings and classify each one.
pub fn decompose_kstrings(
    c: &BigradedNormalCurve,
    k: usize,
) -> Result<Vec<KString>, Error> {
    if k > c.m {
        return Err(Error::GeneratorOutOfRange(k, c.m));
    }
    compute_runs(c, k)
        .iter()
        .map(|run| classify_string(k, &extract_string(c, run)).map(|cl| cl.ks))
        .collect()
}

/// Bigraded intersection number with the `k`-th basic curve, as the sum of
/// per-string table contributions.
pub fn ibigr_basic(k: usize, c: &BigradedNormalCurve) -> Result<BigradedPoly, Error> {
    let mut acc = BigradedPoly::zero();
    for ks in decompose_kstrings(c, k)? {
        acc = &acc + &ks.contribution();
    }
    Ok(acc)
}

/// Geometric intersection number with the `k`-th basic curve: the bigraded
/// number at `q1 = q2 = 1`, divided by two.
pub fn gin_basic(k: usize, c: &BigradedNormalCurve) -> Result<HalfInt, Error> {
    Ok(HalfInt::from_doubled(ibigr_basic(k, c)?.total_rank()))
}

/// The positive (`sign = +1`) or negative half-twist along the `k`-th basic
/// curve, acting on normal-form bigraded curves string by string.
pub fn twist(
    c: &BigradedNormalCurve,
    k: usize,
    sign: i32,
) -> Result<BigradedNormalCurve, Error> {
    if k < 1 || k > c.m {
        return Err(Error::GeneratorOutOfRange(k, c.m));
    }
    let sign = sign.signum();
    assert!(sign != 0, "twist sign must be nonzero");
    let runs = compute_runs(c, k);
    struct Rep {
        lo: usize,
        hi: usize,
        crossings: Vec<Crossing>,
        gaps: Vec<GapKind>,
        start_end: Option<EndKind>,
        end_end: Option<EndKind>,
    }
    let mut reps = Vec::new();
    for run in &runs {
        let cl = classify_string(k, &extract_string(c, run))?;
        let KString { type_tag, u, shift, .. } = cl.ks;
        let (tag2, u2, anchor2) = match type_tag {
            t if t.is_family() => (t, u.unwrap() + sign as i64, shift),
            KStringType::VI => {
                (KStringType::VI, 0, (shift.0 - sign, shift.1 + sign))
            }
            t => (t, 0, shift),
        };
        let (mut tcr, mut tgp, mut tstart, mut tend) = emit_template(k, tag2, u2, anchor2);
        if cl.reversed {
            tcr.reverse();
            tgp.reverse();
            std::mem::swap(&mut tstart, &mut tend);
        }
        // interface crossings must be preserved verbatim
        if run.left == RunEnd::Interface {
            assert_eq!(tcr[0], c.crossings[run.lo], "left interface moved");
        }
        if run.right == RunEnd::Interface {
            assert_eq!(*tcr.last().unwrap(), c.crossings[run.hi], "right interface moved");
        }
        reps.push(Rep {
            lo: run.lo,
            hi: run.hi,
            crossings: tcr,
            gaps: tgp,
            start_end: if run.covers_start { tstart } else { None },
            end_end: if run.covers_end { tend } else { None },
        });
    }

    let mut out_cross: Vec<Crossing> = Vec::new();
    let mut out_gaps: Vec<GapKind> = Vec::new();
    let mut new_ends = c.ends;
    let n = c.crossings.len();
    let mut i = 0usize;
    while i < n {
        if let Some(rep) = reps.iter().find(|r| r.lo == i) {
            if i > 0 {
                out_gaps.push(c.gaps[i - 1]);
            }
            out_cross.extend_from_slice(&rep.crossings);
            out_gaps.extend_from_slice(&rep.gaps);
            if let Some(e) = rep.start_end {
                new_ends.0 = e;
            }
            if let Some(e) = rep.end_end {
                new_ends.1 = e;
            }
            i = rep.hi + 1;
        } else {
            if i > 0 {
                out_gaps.push(c.gaps[i - 1]);
            }
            out_cross.push(c.crossings[i]);
            i += 1;
        }
    }
    BigradedNormalCurve::new(c.m, out_cross, out_gaps, new_ends)
}

/// Apply a braid word to a curve; like the complex side, the last letter
/// acts first.
pub fn apply_word_curve(
    w: &BraidWord,
    c: &BigradedNormalCurve,
) -> Result<BigradedNormalCurve, Error> {
    let mut cur = c.clone();
    for &l in w.letters.iter().rev() {
        cur = twist(&cur, l.unsigned_abs() as usize, l.signum())?;
    }
    Ok(cur)
}

/// Decide whether the word acts trivially, by comparing the geometric
/// intersection numbers of the images and double images of all basic curves
/// against the untwisted values. Returns the first witnessing pair
/// `(j, k)` on failure.
pub fn is_identity_word_witness(w: &BraidWord) -> Result<Option<(usize, usize)>, Error> {
    let m = w.m;
    for k in 0..=m {
        let base = basic_curve(m, k);
        let once = apply_word_curve(w, &base)?;
        let twice = apply_word_curve(w, &once)?;
        for j in 0..=m {
            let expect = gin_basic(j, &base)?;
            if gin_basic(j, &once)? != expect || gin_basic(j, &twice)? != expect {
                return Ok(Some((j, k)));
            }
        }
    }
    Ok(None)
}

pub fn is_identity_word(w: &BraidWord) -> Result<bool, Error> {
    Ok(is_identity_word_witness(w)?.is_none())
}
