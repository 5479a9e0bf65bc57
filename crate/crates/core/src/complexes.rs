//! Bounded complexes of shifted indecomposable projectives `P_i{t}` with a
//! sparse differential of right-multiplication entries, Gaussian-elimination
//! reduction, and Hom-space Poincaré polynomials computed by integer
//! (co)homology.
//!
//! Conventions: a summand `(vertex v, hdeg h, ideg t)` is `P_v{t}` sitting in
//! cohomological position `h`; the internal shift obeys `(M{k})_d = M_{d-k}`,
//! and `Hom(P_i, P_j{s}) = ((i) A_m (j))_{-s}`.

use std::collections::{BTreeMap, BTreeSet};

use crate::algebra::{
    hom_basis, multiply, AlgebraElement, AlgebraSpec, Coefficients, Path,
};
use crate::error::Error;
use crate::poly::BigradedPoly;
use crate::snf::{rank_mod2, smith_normal_form, IntMat};

pub type SummandId = u32;

/// One shifted projective summand of a complex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Summand {
    pub id: SummandId,
    pub vertex: usize,
    pub hdeg: i32,
    pub ideg: i32,
}

/// A bounded complex of projectives over `A_m`.
#[derive(Debug, Clone)]
pub struct ProjComplex {
    pub spec: AlgebraSpec,
    summands: Vec<Summand>,
    entries: BTreeMap<(SummandId, SummandId), AlgebraElement>,
    next_id: SummandId,
}

/// A chain map between two complexes, entry per summand pair.
pub type ChainMap = BTreeMap<(SummandId, SummandId), AlgebraElement>;

impl ProjComplex {
    pub fn empty(spec: AlgebraSpec) -> Self {
        ProjComplex { spec, summands: Vec::new(), entries: BTreeMap::new(), next_id: 0 }
    }

    pub fn is_zero(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn summands(&self) -> &[Summand] {
        &self.summands
    }

    pub fn entries(&self) -> impl Iterator<Item = (SummandId, SummandId, &AlgebraElement)> {
        self.entries.iter().map(|(&(a, b), e)| (a, b, e))
    }

    pub fn summand(&self, id: SummandId) -> &Summand {
        self.summands.iter().find(|s| s.id == id).expect("summand id")
    }

    pub fn add_summand(&mut self, vertex: usize, hdeg: i32, ideg: i32) -> SummandId {
        let id = self.next_id;
        self.next_id += 1;
        self.summands.push(Summand { id, vertex, hdeg, ideg });
        id
    }

    pub fn add_entry(&mut self, src: SummandId, dst: SummandId, e: AlgebraElement) {
        if e.is_zero() {
            return;
        }
        let spec = self.spec;
        let cur = self.entries.entry((src, dst)).or_insert_with(AlgebraElement::zero);
        *cur = cur.add(&e, &spec);
        if cur.is_zero() {
            self.entries.remove(&(src, dst));
        }
    }

    /// Structural invariants: entry shape, grading compatibility, and
    /// `d^2 = 0`.
    pub fn validate(&self) -> Result<(), Error> {
        let by_id: BTreeMap<SummandId, &Summand> =
            self.summands.iter().map(|s| (s.id, s)).collect();
        if by_id.len() != self.summands.len() {
            return Err(Error::InvalidComplex("duplicate summand id".into()));
        }
        for (&(a, b), e) in &self.entries {
            let sa = by_id.get(&a).ok_or_else(|| Error::InvalidComplex("bad src id".into()))?;
            let sb = by_id.get(&b).ok_or_else(|| Error::InvalidComplex("bad dst id".into()))?;
            if sb.hdeg != sa.hdeg + 1 {
                return Err(Error::InvalidComplex(format!(
                    "entry {a}->{b} does not raise hdeg by one"
                )));
            }
            if !e.is_homogeneous(sa.vertex, sb.vertex, (sa.ideg - sb.ideg) as i64) {
                return Err(Error::InvalidComplex(format!(
                    "entry {a}->{b} = {e} is not homogeneous of degree {}",
                    sa.ideg - sb.ideg
                )));
            }
        }
        // d^2 = 0
        let mut out: BTreeMap<SummandId, Vec<(SummandId, &AlgebraElement)>> = BTreeMap::new();
        for (&(a, b), e) in &self.entries {
            out.entry(a).or_default().push((b, e));
        }
        for (&a, firsts) in &out {
            let mut acc: BTreeMap<SummandId, AlgebraElement> = BTreeMap::new();
            for &(b, e1) in firsts {
                if let Some(seconds) = out.get(&b) {
                    for &(c, e2) in seconds {
                        let prod = multiply(e1, e2, &self.spec);
                        let cur = acc.entry(c).or_insert_with(AlgebraElement::zero);
                        *cur = cur.add(&prod, &self.spec);
                    }
                }
            }
            for (c, v) in acc {
                if !v.is_zero() {
                    return Err(Error::InvalidComplex(format!(
                        "d^2 != 0 from {a} to {c}: {v}"
                    )));
                }
            }
        }
        Ok(())
    }

    fn debug_validate(&self) {
        #[cfg(debug_assertions)]
        if let Err(e) = self.validate() {
            panic!("complex invariant violated: {e}");
        }
    }

    /// Multiset of `(vertex, hdeg, ideg)` of the summands, sorted.
    pub fn summand_multiset(&self) -> Vec<(usize, i32, i32)> {
        let mut v: Vec<_> = self.summands.iter().map(|s| (s.vertex, s.hdeg, s.ideg)).collect();
        v.sort_unstable();
        v
    }

    /// Multiset of `(vertex, ideg)` pairs, for graded-module comparisons.
    pub fn module_multiset(&self) -> Vec<(usize, i32)> {
        let mut v: Vec<_> = self.summands.iter().map(|s| (s.vertex, s.ideg)).collect();
        v.sort_unstable();
        v
    }
}

/// The indecomposable projective `P_i` as a one-summand complex.
pub fn projective(i: usize, spec: AlgebraSpec) -> ProjComplex {
    assert!(i <= spec.m, "vertex out of range");
    let mut c = ProjComplex::empty(spec);
    c.add_summand(i, 0, 0);
    c
}

/// `C[a]{b}`: summand `(v,h,t)` goes to `(v, h-a, t+b)`, entries pick up
/// `(-1)^a`.
pub fn shift(c: &ProjComplex, a: i32, b: i32) -> ProjComplex {
    let mut out = ProjComplex::empty(c.spec);
    out.next_id = c.next_id;
    out.summands = c
        .summands
        .iter()
        .map(|s| Summand { id: s.id, vertex: s.vertex, hdeg: s.hdeg - a, ideg: s.ideg + b })
        .collect();
    let sign = if a.rem_euclid(2) == 0 { 1 } else { -1 };
    for (&(x, y), e) in &c.entries {
        out.entries.insert((x, y), e.scale(sign, &c.spec));
    }
    out.debug_validate();
    out
}

/// Disjoint union of summands and entries.
pub fn direct_sum(c1: &ProjComplex, c2: &ProjComplex) -> Result<ProjComplex, Error> {
    if c1.spec != c2.spec {
        return Err(Error::SpecMismatch);
    }
    let mut out = ProjComplex::empty(c1.spec);
    let mut map1 = BTreeMap::new();
    let mut map2 = BTreeMap::new();
    for s in &c1.summands {
        map1.insert(s.id, out.add_summand(s.vertex, s.hdeg, s.ideg));
    }
    for s in &c2.summands {
        map2.insert(s.id, out.add_summand(s.vertex, s.hdeg, s.ideg));
    }
    for (&(x, y), e) in &c1.entries {
        out.add_entry(map1[&x], map1[&y], e.clone());
    }
    for (&(x, y), e) in &c2.entries {
        out.add_entry(map2[&x], map2[&y], e.clone());
    }
    out.debug_validate();
    Ok(out)
}

/// Verify `f` is a grading-preserving chain map `src -> dst`.
fn check_chain_map(f: &ChainMap, src: &ProjComplex, dst: &ProjComplex) -> Result<(), Error> {
    let spec = src.spec;
    for (&(x, y), e) in f {
        let sx = src.summand(x);
        let sy = dst.summand(y);
        if sy.hdeg != sx.hdeg {
            return Err(Error::NotChainMap(format!("component {x}->{y} shifts hdeg")));
        }
        if !e.is_homogeneous(sx.vertex, sy.vertex, (sx.ideg - sy.ideg) as i64) {
            return Err(Error::NotChainMap(format!("component {x}->{y} not grading-preserving")));
        }
    }
    // f d_src = d_dst f, computed entrywise.
    let mut lhs: BTreeMap<(SummandId, SummandId), AlgebraElement> = BTreeMap::new();
    for (&(x, y), d) in &src.entries {
        for (&(y2, z), g) in f {
            if y2 == y {
                let prod = multiply(d, g, &spec);
                let cur = lhs.entry((x, z)).or_insert_with(AlgebraElement::zero);
                *cur = cur.add(&prod, &spec);
            }
        }
    }
    for (&(x, y), g) in f {
        for (&(y2, z), d) in &dst.entries {
            if y2 == y {
                let prod = multiply(g, d, &spec);
                let cur = lhs.entry((x, z)).or_insert_with(AlgebraElement::zero);
                *cur = cur.add(&prod.negate(), &spec);
            }
        }
    }
    for ((x, z), v) in lhs {
        if !v.is_zero() {
            return Err(Error::NotChainMap(format!("fails at {x}->{z}: {v}")));
        }
    }
    Ok(())
}

/// Renaming of summand ids into a new complex.
pub type IdMap = BTreeMap<SummandId, SummandId>;

/// Mapping cone `C(f) = src[1] (+) dst` with `d(x,y) = (-dx, f(x) + dy)`.
/// Also returns the summand maps (src ids, dst ids) into the cone.
pub fn cone_with_maps(
    f: &ChainMap,
    src: &ProjComplex,
    dst: &ProjComplex,
) -> Result<(ProjComplex, IdMap, IdMap), Error> {
    if src.spec != dst.spec {
        return Err(Error::SpecMismatch);
    }
    check_chain_map(f, src, dst)?;
    let mut out = ProjComplex::empty(src.spec);
    let mut msrc = BTreeMap::new();
    let mut mdst = BTreeMap::new();
    for s in &src.summands {
        msrc.insert(s.id, out.add_summand(s.vertex, s.hdeg - 1, s.ideg));
    }
    for s in &dst.summands {
        mdst.insert(s.id, out.add_summand(s.vertex, s.hdeg, s.ideg));
    }
    for (&(x, y), e) in &src.entries {
        out.add_entry(msrc[&x], msrc[&y], e.negate());
    }
    for (&(x, y), e) in &dst.entries {
        out.add_entry(mdst[&x], mdst[&y], e.clone());
    }
    for (&(x, y), e) in f {
        out.add_entry(msrc[&x], mdst[&y], e.clone());
    }
    out.debug_validate();
    Ok((out, msrc, mdst))
}

pub fn cone(f: &ChainMap, src: &ProjComplex, dst: &ProjComplex) -> Result<ProjComplex, Error> {
    cone_with_maps(f, src, dst).map(|(c, _, _)| c)
}

/// The functor `U_k`, plus the copy bookkeeping needed to build the
/// adjunction maps: `copies[(id, n)]` is the summand of `U_k C` carved out by
/// the `n`-th basis path of `(k) A_m (vertex)`.
pub struct UFunctorImage {
    pub complex: ProjComplex,
    pub copies: BTreeMap<(SummandId, usize), SummandId>,
}

pub fn u_functor_with_maps(k: usize, c: &ProjComplex) -> Result<UFunctorImage, Error> {
    let spec = c.spec;
    if k < 1 || k > spec.m {
        return Err(Error::GeneratorOutOfRange(k, spec.m));
    }
    let mut out = ProjComplex::empty(spec);
    let mut copies = BTreeMap::new();
    for s in &c.summands {
        for (n, (_, deg)) in hom_basis(k, s.vertex, &spec).iter().enumerate() {
            let id = out.add_summand(k, s.hdeg, s.ideg + *deg as i32);
            copies.insert((s.id, n), id);
        }
    }
    for (&(x, y), e) in &c.entries {
        let sx = c.summand(x);
        let sy = c.summand(y);
        let bx = hom_basis(k, sx.vertex, &spec);
        let by = hom_basis(k, sy.vertex, &spec);
        for (nx, (p, _)) in bx.iter().enumerate() {
            // p * e expanded over the basis of (k) A_m (vertex y)
            let pe = multiply(&AlgebraElement::from_path(p.clone(), &spec), e, &spec);
            for (q, coeff) in pe.terms() {
                let ny = by
                    .iter()
                    .position(|(b, _)| b == q)
                    .expect("product lies in the hom basis");
                let mut ide = AlgebraElement::zero();
                ide.add_term(Path::idempotent(k), coeff, &spec);
                out.add_entry(copies[&(x, nx)], copies[&(y, ny)], ide);
            }
        }
    }
    out.debug_validate();
    Ok(UFunctorImage { complex: out, copies })
}

/// `U_k(C)` on objects.
pub fn u_functor(k: usize, c: &ProjComplex) -> Result<ProjComplex, Error> {
    u_functor_with_maps(k, c).map(|u| u.complex)
}

/// Gaussian elimination of `±1`-idempotent entries until none remain.
/// Deterministic order: lowest source hdeg first, then summand ids.
pub fn reduce(c: &ProjComplex) -> ProjComplex {
    let mut cur = c.clone();
    loop {
        let mut pick: Option<(SummandId, SummandId, i64)> = None;
        let mut pick_key = (i32::MAX, SummandId::MAX, SummandId::MAX);
        for (&(x, y), e) in &cur.entries {
            if let Some((_, sign)) = e.as_unit_idempotent() {
                let key = (cur.summand(x).hdeg, x, y);
                if key < pick_key {
                    pick_key = key;
                    pick = Some((x, y, sign));
                }
            }
        }
        let Some((x, y, sign)) = pick else { break };
        eliminate(&mut cur, x, y, sign);
    }
    cur.debug_validate();
    cur
}

fn eliminate(c: &mut ProjComplex, x: SummandId, y: SummandId, sign: i64) {
    let spec = c.spec;
    let ins: Vec<(SummandId, AlgebraElement)> = c
        .entries
        .iter()
        .filter(|(&(a, b), _)| b == y && a != x)
        .map(|(&(a, _), e)| (a, e.clone()))
        .collect();
    let outs: Vec<(SummandId, AlgebraElement)> = c
        .entries
        .iter()
        .filter(|(&(a, b), _)| a == x && b != y)
        .map(|(&(_, b), e)| (b, e.clone()))
        .collect();
    c.entries.retain(|&(a, b), _| a != x && b != x && a != y && b != y);
    c.summands.retain(|s| s.id != x && s.id != y);
    for (a, f) in &ins {
        for (b, g) in &outs {
            // zig-zag correction: -g e^{-1} f as right multiplications,
            // i.e. the element -sign * f * g.
            let corr = multiply(f, g, &spec).scale(-sign, &spec);
            c.add_entry(*a, *b, corr);
        }
    }
}

/// Multiset of summands of the fully reduced complex: the operational
/// homotopy-equivalence certificate.
pub fn fingerprint(c: &ProjComplex) -> Vec<(usize, i32, i32)> {
    reduce(c).summand_multiset()
}

/// Torsion found in a Hom cohomology group; expected to stay empty on every
/// braid image of a projective.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorsionEntry {
    pub r1: i32,
    pub r2: i32,
    pub factor: i128,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomPoincare {
    pub poly: BigradedPoly,
    pub torsion: Vec<TorsionEntry>,
}

impl HomPoincare {
    pub fn total_rank(&self) -> i64 {
        self.poly.total_rank()
    }
}

/// Poincaré polynomial of `Hom(P_i, C[r1]{-r2})` over the homotopy category:
/// the coefficient of `q1^{r1} q2^{r2}` is the rank of the cohomology at
/// position `r1` of the complex of free abelian groups `(i) . C` in internal
/// degree `r2`. Integer ranks via Smith diagonalization; torsion reported.
pub fn hom_poincare(i: usize, c: &ProjComplex) -> HomPoincare {
    let spec = c.spec;
    assert!(i <= spec.m, "vertex out of range");
    let mut degrees: BTreeSet<i32> = BTreeSet::new();
    for s in &c.summands {
        for (_, deg) in hom_basis(i, s.vertex, &spec) {
            degrees.insert(s.ideg + deg as i32);
        }
    }
    let mut poly = BigradedPoly::zero();
    let mut torsion = Vec::new();
    for &d in &degrees {
        // Basis of Hom(P_i, C^h) in internal degree d, per position h.
        let mut basis_by_h: BTreeMap<i32, Vec<(SummandId, Path)>> = BTreeMap::new();
        for s in &c.summands {
            for (p, deg) in hom_basis(i, s.vertex, &spec) {
                if s.ideg + deg as i32 == d {
                    basis_by_h.entry(s.hdeg).or_default().push((s.id, p));
                }
            }
        }
        let hs: Vec<i32> = basis_by_h.keys().copied().collect();
        let mut rank_at: BTreeMap<i32, usize> = BTreeMap::new();
        let mut torsion_at: BTreeMap<i32, Vec<i128>> = BTreeMap::new();
        for &h in &hs {
            let cols = &basis_by_h[&h];
            let empty = Vec::new();
            let rows = basis_by_h.get(&(h + 1)).unwrap_or(&empty);
            if rows.is_empty() || cols.is_empty() {
                rank_at.insert(h, 0);
                continue;
            }
            let mut mat = IntMat::zero(rows.len(), cols.len());
            for (ci, (sid, p)) in cols.iter().enumerate() {
                for (&(a, b), e) in &c.entries {
                    if a != *sid {
                        continue;
                    }
                    let pe = multiply(&AlgebraElement::from_path(p.clone(), &spec), e, &spec);
                    for (q, coeff) in pe.terms() {
                        if let Some(ri) =
                            rows.iter().position(|(rid, rp)| *rid == b && rp == q)
                        {
                            mat.set(ri, ci, mat.get(ri, ci) + coeff as i128);
                        }
                    }
                }
            }
            match spec.coefficients {
                Coefficients::Integers => {
                    let snf = smith_normal_form(mat);
                    rank_at.insert(h, snf.rank());
                    let tf = snf.torsion_factors();
                    if !tf.is_empty() {
                        torsion_at.insert(h, tf);
                    }
                }
                Coefficients::Mod2 => {
                    rank_at.insert(h, rank_mod2(&mat));
                }
            }
        }
        for &h in &hs {
            let n = basis_by_h[&h].len();
            let r_out = *rank_at.get(&h).unwrap_or(&0);
            let r_in = *rank_at.get(&(h - 1)).unwrap_or(&0);
            let rank = n as i64 - r_out as i64 - r_in as i64;
            debug_assert!(rank >= 0, "negative cohomology rank");
            poly.add_term(h, d, rank);
            if let Some(factors) = torsion_at.get(&(h - 1)) {
                for &f in factors {
                    torsion.push(TorsionEntry { r1: h, r2: d, factor: f });
                }
            }
        }
    }
    HomPoincare { poly, torsion }
}
