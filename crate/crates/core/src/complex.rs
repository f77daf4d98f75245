//! The bounded homotopy category of projectives: complexes whose terms are
//! multisets of vertex labels (meaning `⊕ e_v A`) and whose differentials
//! are matrices of algebra elements, chain maps modulo homotopy,
//! minimization, cones, decomposition, isomorphism and the order `≥`.
//!
//! Conventions: differentials raise degree by one and satisfy `d∘d = 0`;
//! the shift acts by `X[n]^d = X^{n+d}` with differential `(-1)^n d`.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::algebra::{Algebra, El};
use crate::error::{Error, Result};
use crate::fdalg::FdAlgebra;
use crate::field::Scalar;
use crate::matrix::{Mat, Subspace};
use crate::quiver::VertexId;
use crate::rep::{
    hom_modules, min_presentation, quotient_rep, InjSum, ModuleMap, ProjSum,
    Representation,
};

/// Matrix of algebra elements; entry `(r, c)` lies in
/// `e_{rows[r]} A e_{cols[c]}` and acts by left multiplication.
pub type ElMat = Vec<Vec<El>>;

#[derive(Debug, Clone)]
pub struct ProjComplex {
    pub alg: Arc<Algebra>,
    /// Degree of `terms[0]`; irrelevant when `terms` is empty.
    pub low: i32,
    pub terms: Vec<Vec<VertexId>>,
    /// `diffs[k]` maps `terms[k] -> terms[k+1]`.
    pub diffs: Vec<ElMat>,
}

impl ProjComplex {
    pub fn zero(alg: &Arc<Algebra>) -> ProjComplex {
        ProjComplex {
            alg: alg.clone(),
            low: 0,
            terms: Vec::new(),
            diffs: Vec::new(),
        }
    }

    /// A stalk complex `⊕ e_v A` concentrated in one degree.
    pub fn stalk(alg: &Arc<Algebra>, verts: &[VertexId], degree: i32) -> ProjComplex {
        if verts.is_empty() {
            return ProjComplex::zero(alg);
        }
        ProjComplex {
            alg: alg.clone(),
            low: degree,
            terms: vec![verts.to_vec()],
            diffs: Vec::new(),
        }
    }

    /// The algebra itself as a stalk in degree zero.
    pub fn algebra_stalk(alg: &Arc<Algebra>) -> ProjComplex {
        let verts: Vec<VertexId> = (0..alg.vertex_count()).map(VertexId).collect();
        ProjComplex::stalk(alg, &verts, 0)
    }

    /// The minimal projective presentation of a module placed in degrees
    /// 0 -> 1, so `H^1` is the module.
    pub fn presentation_of(m: &Representation) -> ProjComplex {
        let pres = min_presentation(m);
        ProjComplex::from_parts(
            &m.alg,
            0,
            vec![pres.p1.verts.clone(), pres.p0.verts.clone()],
            vec![pres.diff.clone()],
        )
        .expect("presentation is a complex")
        .trimmed()
    }

    pub fn from_parts(
        alg: &Arc<Algebra>,
        low: i32,
        terms: Vec<Vec<VertexId>>,
        diffs: Vec<ElMat>,
    ) -> Result<ProjComplex> {
        let x = ProjComplex {
            alg: alg.clone(),
            low,
            terms,
            diffs,
        };
        x.validate()?;
        Ok(x)
    }

    pub fn validate(&self) -> Result<()> {
        if self.terms.is_empty() {
            return Ok(());
        }
        if self.diffs.len() + 1 != self.terms.len() {
            return Err(Error::Parse("differential count mismatch".into()));
        }
        for (k, d) in self.diffs.iter().enumerate() {
            let rows = self.terms[k + 1].len();
            let cols = self.terms[k].len();
            if d.len() != rows || d.iter().any(|r| r.len() != cols) {
                return Err(Error::Parse(format!(
                    "differential at degree {} has wrong shape",
                    self.low + k as i32
                )));
            }
            for (r, row) in d.iter().enumerate() {
                for (c, entry) in row.iter().enumerate() {
                    // entry must lie in e_{w} A e_{v} for w = terms[k+1][r],
                    // v = terms[k][c]
                    let w = self.terms[k + 1][r];
                    let v = self.terms[k][c];
                    let allowed = self.alg.proj_hom_basis(v, w);
                    for (bi, coeff) in entry.iter().enumerate() {
                        if !coeff.is_zero() && !allowed.contains(&bi) {
                            return Err(Error::Parse(format!(
                                "differential entry at ({r}, {c}) in degree {} is not a map P_{} -> P_{}",
                                self.low + k as i32,
                                self.alg.quiver().vertex_label(v),
                                self.alg.quiver().vertex_label(w),
                            )));
                        }
                    }
                }
            }
        }
        // d ∘ d = 0
        for k in 0..self.diffs.len().saturating_sub(1) {
            let prod = elmat_mul(&self.alg, &self.diffs[k + 1], &self.diffs[k]);
            if !elmat_is_zero(&self.alg, &prod) {
                return Err(Error::Parse(format!(
                    "d^2 != 0 between degrees {} and {}",
                    self.low + k as i32,
                    self.low + k as i32 + 2
                )));
            }
        }
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.iter().all(|t| t.is_empty())
    }

    /// Support window `(lowest, highest)` of nonempty terms.
    pub fn support(&self) -> Option<(i32, i32)> {
        let first = self.terms.iter().position(|t| !t.is_empty())?;
        let last = self.terms.iter().rposition(|t| !t.is_empty())?;
        Some((self.low + first as i32, self.low + last as i32))
    }

    pub fn length(&self) -> usize {
        match self.support() {
            None => 0,
            Some((a, b)) => (b - a + 1) as usize,
        }
    }

    pub fn term(&self, degree: i32) -> &[VertexId] {
        let k = degree - self.low;
        if k < 0 || k as usize >= self.terms.len() {
            &[]
        } else {
            &self.terms[k as usize]
        }
    }

    pub fn diff(&self, degree: i32) -> Option<&ElMat> {
        let k = degree - self.low;
        if k < 0 || k as usize >= self.diffs.len() {
            None
        } else {
            Some(&self.diffs[k as usize])
        }
    }

    /// Drop empty terms at both ends of the window.
    pub fn trimmed(&self) -> ProjComplex {
        let Some(first) = self.terms.iter().position(|t| !t.is_empty()) else {
            return ProjComplex::zero(&self.alg);
        };
        let last = self.terms.iter().rposition(|t| !t.is_empty()).unwrap();
        ProjComplex {
            alg: self.alg.clone(),
            low: self.low + first as i32,
            terms: self.terms[first..=last].to_vec(),
            diffs: self.diffs[first..last.max(first)].to_vec(),
        }
    }

    /// `X[n]`: degrees shift down by `n`, differential picks up `(-1)^n`.
    pub fn shift(&self, n: i32) -> ProjComplex {
        if self.is_zero() {
            return ProjComplex::zero(&self.alg);
        }
        let sign = if n.rem_euclid(2) == 0 { 1 } else { -1 };
        let diffs = self
            .diffs
            .iter()
            .map(|d| {
                if sign == 1 {
                    d.clone()
                } else {
                    elmat_neg(&self.alg, d)
                }
            })
            .collect();
        ProjComplex {
            alg: self.alg.clone(),
            low: self.low - n,
            terms: self.terms.clone(),
            diffs,
        }
    }

    /// Expansion into explicit representations and module maps.
    pub fn module_complex(&self) -> ModuleComplex {
        let sums: Vec<ProjSum> = self
            .terms
            .iter()
            .map(|t| ProjSum::new(&self.alg, t))
            .collect();
        let maps: Vec<ModuleMap> = self
            .diffs
            .iter()
            .enumerate()
            .map(|(k, d)| ProjSum::from_el_matrix(&sums[k], &sums[k + 1], d))
            .collect();
        ModuleComplex {
            low: self.low,
            reps: sums.iter().map(|s| s.rep.clone()).collect(),
            maps,
        }
    }

    /// `H^i` of the complex as a representation.
    pub fn cohomology(&self, degree: i32) -> Representation {
        self.module_complex().cohomology(&self.alg, degree)
    }

    /// One-line rendering of the terms, e.g. `[0] P1+P2 ->(1) P2`.
    pub fn brief(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let q = self.alg.quiver();
        let mut parts = Vec::new();
        for (k, t) in self.terms.iter().enumerate() {
            let names: Vec<String> = t
                .iter()
                .map(|v| format!("P{}", q.vertex_label(*v)))
                .collect();
            let deg = self.low + k as i32;
            parts.push(format!(
                "[{deg}]{}",
                if names.is_empty() {
                    "0".into()
                } else {
                    names.join("+")
                }
            ));
        }
        parts.join(" -> ")
    }

    /// Column layout mirroring the `(0th) (1st) (2nd)` display, one row per
    /// indecomposable summand when the decomposition is available.
    pub fn pretty(&self) -> String {
        let rows: Vec<ProjComplex> = match decompose_complex(self) {
            Ok(parts) if !parts.is_empty() => parts,
            _ => vec![minimize(self)],
        };
        let Some((a, b)) = minimize(self).support() else {
            return "0".into();
        };
        let mut out = String::new();
        let header: Vec<String> = (a..=b).map(|d| format!("({}{})", d, ordinal(d))).collect();
        out.push_str(&header.join("  "));
        out.push('\n');
        let q = self.alg.quiver();
        for row in rows {
            let mut cells = Vec::new();
            for d in a..=b {
                let t = row.term(d);
                let cell = if t.is_empty() {
                    ".".to_string()
                } else {
                    t.iter()
                        .map(|v| format!("P{}", q.vertex_label(*v)))
                        .collect::<Vec<_>>()
                        .join("+")
                };
                let label = row
                    .diff(d)
                    .filter(|m| !elmat_is_zero(&self.alg, m))
                    .map(|m| format!(" --{}--> ", elmat_brief(&self.alg, m)))
                    .unwrap_or_else(|| {
                        if d < b && !row.term(d).is_empty() {
                            "      ".into()
                        } else {
                            String::new()
                        }
                    });
                cells.push(format!("{cell}{label}"));
            }
            out.push_str(cells.join("").trim_end());
            out.push('\n');
        }
        out
    }

    /// Deterministic exact serialization used as a cache key. Not an
    /// isomorphism invariant (fingerprints are; see [`fingerprint`]).
    pub fn exact_key(&self) -> String {
        let mut s = format!("L{}|", self.low);
        for t in &self.terms {
            let ids: Vec<String> = t.iter().map(|v| v.0.to_string()).collect();
            s.push_str(&ids.join(","));
            s.push(';');
        }
        s.push('|');
        for d in &self.diffs {
            for row in d {
                for e in row {
                    for c in e {
                        s.push_str(&c.render());
                        s.push(',');
                    }
                    s.push(':');
                }
                s.push('/');
            }
            s.push('|');
        }
        s
    }
}

fn ordinal(d: i32) -> &'static str {
    match d.rem_euclid(10) {
        1 => "st",
        2 => "nd",
        3 => "rd",
        _ => "th",
    }
}

/// A bounded complex of arbitrary modules (used for `νX` over non
/// self-injective algebras and for hom computations in `K^b(mod A)`).
#[derive(Debug, Clone)]
pub struct ModuleComplex {
    pub low: i32,
    pub reps: Vec<Representation>,
    pub maps: Vec<ModuleMap>,
}

impl ModuleComplex {
    pub fn rep(&self, degree: i32) -> Option<&Representation> {
        let k = degree - self.low;
        if k < 0 || k as usize >= self.reps.len() {
            None
        } else {
            Some(&self.reps[k as usize])
        }
    }

    pub fn map(&self, degree: i32) -> Option<&ModuleMap> {
        let k = degree - self.low;
        if k < 0 || k as usize >= self.maps.len() {
            None
        } else {
            Some(&self.maps[k as usize])
        }
    }

    pub fn shift(&self, alg: &Arc<Algebra>, n: i32) -> ModuleComplex {
        let _ = alg;
        let sign = n.rem_euclid(2) == 1;
        ModuleComplex {
            low: self.low - n,
            reps: self.reps.clone(),
            maps: self
                .maps
                .iter()
                .map(|m| {
                    if sign {
                        m.scale(&m.source.alg.field().from_i64(-1))
                    } else {
                        m.clone()
                    }
                })
                .collect(),
        }
    }

    pub fn cohomology(&self, alg: &Arc<Algebra>, degree: i32) -> Representation {
        let Some(rep) = self.rep(degree) else {
            return Representation::zero(alg);
        };
        let field = alg.field();
        // kernel of the outgoing map
        let (ker, ker_incl) = match self.map(degree) {
            Some(d) => crate::rep::kernel(d),
            None => (rep.clone(), ModuleMap::identity(rep)),
        };
        // image of the incoming map, expressed inside the kernel
        let im_in_ker: Vec<Mat> = match self.map(degree - 1) {
            None => (0..rep.dims.len())
                .map(|v| Mat::zero(ker.dims[v], 0, field))
                .collect(),
            Some(d_in) => {
                let (im, im_incl) = crate::rep::image(d_in);
                (0..rep.dims.len())
                    .map(|v| {
                        let mut cols = Vec::new();
                        for c in 0..im.dims[v] {
                            let vecx = im_incl.mats[v].col(c);
                            let sol = ker_incl.mats[v]
                                .solve(&vecx)
                                .expect("image lies in kernel");
                            cols.push(sol);
                        }
                        Mat::from_cols_vec(field, ker.dims[v], cols)
                    })
                    .collect()
            }
        };
        quotient_rep(&ker, &im_in_ker).0
    }

    pub fn support(&self) -> Option<(i32, i32)> {
        let first = self.reps.iter().position(|t| !t.is_zero())?;
        let last = self.reps.iter().rposition(|t| !t.is_zero())?;
        Some((self.low + first as i32, self.low + last as i32))
    }
}

// ---------------------------------------------------------------------------
// element-matrix helpers

pub fn elmat_zero(alg: &Arc<Algebra>, rows: usize, cols: usize) -> ElMat {
    vec![vec![alg.zero_el(); cols]; rows]
}

pub fn elmat_neg(alg: &Arc<Algebra>, m: &ElMat) -> ElMat {
    m.iter()
        .map(|row| row.iter().map(|e| alg.el_neg(e)).collect())
        .collect()
}

pub fn elmat_is_zero(alg: &Arc<Algebra>, m: &ElMat) -> bool {
    m.iter().all(|row| row.iter().all(|e| alg.el_is_zero(e)))
}

/// Product `a · b` where `a` is applied after `b` (entries compose as left
/// multiplications: `L_y ∘ L_x = L_{yx}`).
pub fn elmat_mul(alg: &Arc<Algebra>, a: &ElMat, b: &ElMat) -> ElMat {
    let rows = a.len();
    let mid = b.len();
    let cols = if mid == 0 { 0 } else { b[0].len() };
    let mut out = elmat_zero(alg, rows, cols);
    for r in 0..rows {
        assert_eq!(a[r].len(), mid, "elmat shape mismatch");
        for m in 0..mid {
            if alg.el_is_zero(&a[r][m]) {
                continue;
            }
            for c in 0..cols {
                if alg.el_is_zero(&b[m][c]) {
                    continue;
                }
                let prod = alg.el_mul(&a[r][m], &b[m][c]);
                out[r][c] = alg.el_add(&out[r][c], &prod);
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// chain maps and hom spaces

/// A strict chain map between complexes (degreewise matrices commuting with
/// the differentials).
#[derive(Debug, Clone)]
pub struct ChainMap {
    pub source: ProjComplex,
    pub target: ProjComplex,
    /// `mats[k]` maps `source.term(lo + k)` to `target.term(lo + k)` where
    /// `lo` is the common lower bound of the stored window.
    pub low: i32,
    pub mats: Vec<ElMat>,
}

impl ChainMap {
    pub fn mat(&self, degree: i32) -> Option<&ElMat> {
        let k = degree - self.low;
        if k < 0 || k as usize >= self.mats.len() {
            None
        } else {
            Some(&self.mats[k as usize])
        }
    }

    pub fn block(&self, alg: &Arc<Algebra>, degree: i32) -> ElMat {
        match self.mat(degree) {
            Some(m) => m.clone(),
            None => elmat_zero(
                alg,
                self.target.term(degree).len(),
                self.source.term(degree).len(),
            ),
        }
    }

    pub fn compose(&self, alg: &Arc<Algebra>, inner: &ChainMap) -> ChainMap {
        // self ∘ inner
        let low = inner.low.min(self.low);
        let high = (inner.low + inner.mats.len() as i32).max(self.low + self.mats.len() as i32);
        let mut mats = Vec::new();
        for d in low..high {
            mats.push(elmat_mul(alg, &self.block(alg, d), &inner.block(alg, d)));
        }
        ChainMap {
            source: inner.source.clone(),
            target: self.target.clone(),
            low,
            mats,
        }
    }
}

/// The space `Hom_{K^b}(X, Y[i])`: a basis of strict chain maps
/// representing homotopy classes, plus the machinery to reduce arbitrary
/// chain maps to class coordinates.
#[derive(Debug)]
pub struct HomSpace {
    pub x: ProjComplex,
    pub y_shifted: ProjComplex,
    pub shift: i32,
    pub dim: usize,
    pub basis: Vec<ChainMap>,
    // coordinate data in the raw chain-map variable space
    var_slots: Vec<(i32, usize, usize, usize)>, // (degree, row, col, basis index)
    null_rows: Vec<Vec<Scalar>>,                // echelon basis of null-homotopic maps
    class_basis_reduced: Vec<Vec<Scalar>>,      // reduced coordinates of `basis`
}

impl HomSpace {
    pub fn vectorize(&self, f: &ChainMap) -> Vec<Scalar> {
        let alg = &self.x.alg;
        self.var_slots
            .iter()
            .map(|&(d, r, c, bi)| {
                f.mat(d)
                    .map(|m| m[r][c][bi].clone())
                    .unwrap_or_else(|| alg.field().zero())
            })
            .collect()
    }

    fn reduce_mod_null(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut x = v.to_vec();
        for row in &self.null_rows {
            let p = row.iter().position(|c| !c.is_zero()).unwrap();
            if !x[p].is_zero() {
                let c = x[p].clone();
                for (k, rk) in row.iter().enumerate() {
                    if !rk.is_zero() {
                        x[k] = x[k].sub(&c.mul(rk));
                    }
                }
            }
        }
        x
    }

    /// Coordinates of the homotopy class of `f` in the chosen basis.
    pub fn class_coords(&self, f: &ChainMap) -> Vec<Scalar> {
        let field = self.x.alg.field();
        let red = self.reduce_mod_null(&self.vectorize(f));
        if self.dim == 0 {
            return Vec::new();
        }
        let m = Mat::from_cols_vec(field, red.len(), self.class_basis_reduced.clone());
        m.solve(&red).expect("chain map reduces into the class basis")
    }

    pub fn is_zero_class(&self, f: &ChainMap) -> bool {
        self.reduce_mod_null(&self.vectorize(f))
            .iter()
            .all(|c| c.is_zero())
    }

    /// Linear combination of the basis classes.
    pub fn combination(&self, coords: &[Scalar]) -> ChainMap {
        let alg = &self.x.alg;
        let mut f = zero_chain_map(&self.x, &self.y_shifted);
        for (c, b) in coords.iter().zip(&self.basis) {
            if !c.is_zero() {
                f = add_chain_maps(alg, &f, &scale_chain_map(alg, b, c));
            }
        }
        f
    }
}

pub fn zero_chain_map(x: &ProjComplex, y: &ProjComplex) -> ChainMap {
    let low = x.low.min(y.low);
    let high = (x.low + x.terms.len() as i32).max(y.low + y.terms.len() as i32);
    let alg = &x.alg;
    let mats = (low..high)
        .map(|d| elmat_zero(alg, y.term(d).len(), x.term(d).len()))
        .collect();
    ChainMap {
        source: x.clone(),
        target: y.clone(),
        low,
        mats,
    }
}

pub fn add_chain_maps(alg: &Arc<Algebra>, f: &ChainMap, g: &ChainMap) -> ChainMap {
    let low = f.low.min(g.low);
    let high = (f.low + f.mats.len() as i32).max(g.low + g.mats.len() as i32);
    let mats = (low..high)
        .map(|d| {
            let a = f.block(alg, d);
            let b = g.block(alg, d);
            a.iter()
                .zip(&b)
                .map(|(ra, rb)| {
                    ra.iter()
                        .zip(rb)
                        .map(|(ea, eb)| alg.el_add(ea, eb))
                        .collect()
                })
                .collect()
        })
        .collect();
    ChainMap {
        source: f.source.clone(),
        target: f.target.clone(),
        low,
        mats,
    }
}

pub fn scale_chain_map(alg: &Arc<Algebra>, f: &ChainMap, s: &Scalar) -> ChainMap {
    ChainMap {
        source: f.source.clone(),
        target: f.target.clone(),
        low: f.low,
        mats: f
            .mats
            .iter()
            .map(|m| {
                m.iter()
                    .map(|row| row.iter().map(|e| alg.el_scale(s, e)).collect())
                    .collect()
            })
            .collect(),
    }
}

pub fn identity_chain_map(x: &ProjComplex) -> ChainMap {
    let alg = &x.alg;
    let mut f = zero_chain_map(x, x);
    for (k, t) in x.terms.iter().enumerate() {
        let d = x.low + k as i32 - f.low;
        for (i, &v) in t.iter().enumerate() {
            f.mats[d as usize][i][i] = alg.basis_el(alg.idempotent_index(v));
        }
    }
    f
}

/// Compute `Hom_{K^b}(X, Y[i])`.
pub fn hom_space(x: &ProjComplex, y: &ProjComplex, shift: i32) -> HomSpace {
    let alg = x.alg.clone();
    let field = alg.field();
    let ys = y.shift(shift);
    // variable slots: one per (degree, row, col, hom-basis element)
    let mut var_slots = Vec::new();
    let lo = match (x.support(), ys.support()) {
        (Some((xa, xb)), Some((ya, yb))) => {
            let a = xa.max(ya);
            let b = xb.min(yb);
            if a > b {
                None
            } else {
                Some((a, b))
            }
        }
        _ => None,
    };
    if let Some((a, b)) = lo {
        for d in a..=b {
            let xt = x.term(d);
            let yt = ys.term(d);
            for (r, &w) in yt.iter().enumerate() {
                for (c, &v) in xt.iter().enumerate() {
                    let n = alg.proj_hom_basis(v, w).len();
                    for bi in 0..n {
                        var_slots.push((d, r, c, bi));
                    }
                }
            }
        }
    }
    let nvars = var_slots.len();
    if nvars == 0 {
        return HomSpace {
            x: x.clone(),
            y_shifted: ys,
            shift,
            dim: 0,
            basis: Vec::new(),
            var_slots,
            null_rows: Vec::new(),
            class_basis_reduced: Vec::new(),
        };
    }
    let slot_index: BTreeMap<(i32, usize, usize, usize), usize> = var_slots
        .iter()
        .enumerate()
        .map(|(i, &s)| (s, i))
        .collect();
    // chain condition: for every degree d, d_Y ∘ f^d − f^{d+1} ∘ d_X = 0;
    // expand in the path basis of each hom component
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    let (a, b) = lo.unwrap();
    for d in (a - 1)..=b {
        let xt = x.term(d);
        let yt_next = ys.term(d + 1);
        if yt_next.is_empty() || xt.is_empty() {
            continue;
        }
        for (r, &w) in yt_next.iter().enumerate() {
            for (c, &v) in xt.iter().enumerate() {
                // target entry lives in e_w A e_v; one equation per basis path
                let mut coeff_rows: Vec<Vec<Scalar>> =
                    vec![vec![field.zero(); nvars]; alg.dim()];
                // d_Y ∘ f^d: sum over m of dY[r][m] * f^d[m][c]
                if let Some(dy) = ys.diff(d) {
                    let yt = ys.term(d);
                    for (m, &u) in yt.iter().enumerate() {
                        let dyrm = &dy[r][m];
                        if alg.el_is_zero(dyrm) {
                            continue;
                        }
                        for (bi, &pidx) in alg.proj_hom_basis(v, u).iter().enumerate() {
                            if let Some(&slot) = slot_index.get(&(d, m, c, bi)) {
                                let prod = alg.el_mul(dyrm, &alg.basis_el(pidx));
                                for (k, pc) in prod.iter().enumerate() {
                                    if !pc.is_zero() {
                                        coeff_rows[k][slot] = coeff_rows[k][slot].add(pc);
                                    }
                                }
                            }
                        }
                    }
                }
                // − f^{d+1} ∘ d_X: sum over m of f^{d+1}[r][m] * dX[m][c]
                if let Some(dx) = x.diff(d) {
                    let xt_next = x.term(d + 1);
                    for (m, &u) in xt_next.iter().enumerate() {
                        let dxmc = &dx[m][c];
                        if alg.el_is_zero(dxmc) {
                            continue;
                        }
                        for (bi, &pidx) in alg.proj_hom_basis(u, w).iter().enumerate() {
                            if let Some(&slot) = slot_index.get(&(d + 1, r, m, bi)) {
                                let prod = alg.el_mul(&alg.basis_el(pidx), dxmc);
                                for (k, pc) in prod.iter().enumerate() {
                                    if !pc.is_zero() {
                                        coeff_rows[k][slot] = coeff_rows[k][slot].sub(pc);
                                    }
                                }
                            }
                        }
                    }
                }
                for row in coeff_rows {
                    if row.iter().any(|c| !c.is_zero()) {
                        rows.push(row);
                    }
                }
            }
        }
    }
    let chain_kernel = if rows.is_empty() {
        (0..nvars)
            .map(|i| {
                let mut v = vec![field.zero(); nvars];
                v[i] = field.one();
                v
            })
            .collect::<Vec<_>>()
    } else {
        Mat::from_rows(field, rows).kernel_basis()
    };
    // null-homotopic subspace: images of h ↦ d_Y h + h d_X over homotopy
    // variables h^d : X^d -> Y^{d-1}
    let mut null_gens: Vec<Vec<Scalar>> = Vec::new();
    for d in a..=b + 1 {
        let xt = x.term(d);
        let yt_prev = ys.term(d - 1);
        for (hr, &w) in yt_prev.iter().enumerate() {
            for (hc, &v) in xt.iter().enumerate() {
                for &pidx in alg.proj_hom_basis(v, w).iter() {
                    // h is the elementary homotopy with this single entry
                    let h_entry = alg.basis_el(pidx);
                    let mut image = vec![field.zero(); nvars];
                    // (d_Y h)^d = d_Y^{d-1} ∘ h^d : contributes at degree d
                    if let Some(dy) = ys.diff(d - 1) {
                        let yt_d = ys.term(d);
                        for (r, &wd) in yt_d.iter().enumerate() {
                            let coeff = &dy[r][hr];
                            if alg.el_is_zero(coeff) {
                                continue;
                            }
                            let prod = alg.el_mul(coeff, &h_entry);
                            write_entry(&alg, &slot_index, &mut image, d, r, hc, v, wd, &prod);
                        }
                    }
                    // (h d_X)^{d-1} = h^d ∘ d_X^{d-1} : contributes at degree d-1
                    if let Some(dx) = x.diff(d - 1) {
                        let xt_prev = x.term(d - 1);
                        for (c, &u) in xt_prev.iter().enumerate() {
                            let coeff = &dx[hc][c];
                            if alg.el_is_zero(coeff) {
                                continue;
                            }
                            let prod = alg.el_mul(&h_entry, coeff);
                            write_entry(&alg, &slot_index, &mut image, d - 1, hr, c, u, w, &prod);
                        }
                    }
                    if image.iter().any(|c| !c.is_zero()) {
                        null_gens.push(image);
                    }
                }
            }
        }
    }
    let null_rows = Subspace::echelon_basis(field, &null_gens, nvars);
    // reduce the chain kernel modulo homotopies and pick a complement basis
    let hs_stub = HomSpace {
        x: x.clone(),
        y_shifted: ys.clone(),
        shift,
        dim: 0,
        basis: Vec::new(),
        var_slots: var_slots.clone(),
        null_rows: null_rows.clone(),
        class_basis_reduced: Vec::new(),
    };
    let reduced: Vec<Vec<Scalar>> = chain_kernel
        .iter()
        .map(|v| hs_stub.reduce_mod_null(v))
        .collect();
    let chosen = Subspace::complement_indices(field, &[], &reduced, nvars);
    let class_basis_reduced: Vec<Vec<Scalar>> = chosen.iter().map(|&i| reduced[i].clone()).collect();
    let basis: Vec<ChainMap> = chosen
        .iter()
        .map(|&i| chain_map_from_vector(x, &ys, &var_slots, &chain_kernel[i]))
        .collect();
    HomSpace {
        x: x.clone(),
        y_shifted: ys,
        shift,
        dim: basis.len(),
        basis,
        var_slots,
        null_rows,
        class_basis_reduced,
    }
}

/// Add the hom-basis coordinates of `prod ∈ e_w A e_v` to the image vector
/// at slot `(d, r, c, ·)`.
fn write_entry(
    alg: &Arc<Algebra>,
    slot_index: &BTreeMap<(i32, usize, usize, usize), usize>,
    image: &mut [Scalar],
    d: i32,
    r: usize,
    c: usize,
    v: VertexId,
    w: VertexId,
    prod: &El,
) {
    for (bi, &pidx) in alg.proj_hom_basis(v, w).iter().enumerate() {
        if !prod[pidx].is_zero() {
            if let Some(&slot) = slot_index.get(&(d, r, c, bi)) {
                image[slot] = image[slot].add(&prod[pidx]);
            }
        }
    }
}

fn chain_map_from_vector(
    x: &ProjComplex,
    ys: &ProjComplex,
    var_slots: &[(i32, usize, usize, usize)],
    v: &[Scalar],
) -> ChainMap {
    let alg = &x.alg;
    let mut f = zero_chain_map(x, ys);
    for (&(d, r, c, bi), coeff) in var_slots.iter().zip(v) {
        if coeff.is_zero() {
            continue;
        }
        let vsrc = x.term(d)[c];
        let wtgt = ys.term(d)[r];
        let pidx = alg.proj_hom_basis(vsrc, wtgt)[bi];
        let k = (d - f.low) as usize;
        f.mats[k][r][c][pidx] = f.mats[k][r][c][pidx].add(coeff);
    }
    f
}

// ---------------------------------------------------------------------------
// minimization

/// Strip contractible summands: after this, every differential entry lies
/// in the radical (no component of any differential is an isomorphism).
pub fn minimize(x: &ProjComplex) -> ProjComplex {
    let alg = x.alg.clone();
    let mut terms: Vec<Vec<VertexId>> = x.terms.clone();
    let mut diffs: Vec<ElMat> = x.diffs.clone();
    'outer: loop {
        for k in 0..diffs.len() {
            for r in 0..terms[k + 1].len() {
                for c in 0..terms[k].len() {
                    let v = terms[k][c];
                    if terms[k + 1][r] != v {
                        continue;
                    }
                    let entry = &diffs[k][r][c];
                    let unit_coeff = entry[alg.idempotent_index(v)].clone();
                    if unit_coeff.is_zero() {
                        continue;
                    }
                    eliminate(&alg, &mut terms, &mut diffs, k, r, c);
                    continue 'outer;
                }
            }
        }
        break;
    }
    let out = ProjComplex {
        alg,
        low: x.low,
        terms,
        diffs,
    };
    out.trimmed()
}

/// Invert `u ∈ e_v A e_v` in the local algebra `e_v A e_v`.
fn local_inverse(alg: &Arc<Algebra>, u: &El, v: VertexId) -> El {
    let basis = alg.paths_from_to(v, v);
    let field = alg.field();
    // solve z · u = e_v over the basis of e_v A e_v
    let mut m = Mat::zero(basis.len(), basis.len(), field);
    for (c, &bz) in basis.iter().enumerate() {
        let prod = alg.el_mul(&alg.basis_el(bz), u);
        for (r, &bt) in basis.iter().enumerate() {
            m.set(r, c, prod[bt].clone());
        }
    }
    let mut rhs = vec![field.zero(); basis.len()];
    let ev = alg.idempotent_index(v);
    let pos = basis.iter().position(|&b| b == ev).unwrap();
    rhs[pos] = field.one();
    let sol = m.solve(&rhs).expect("unit entries are invertible");
    let mut z = alg.zero_el();
    for (c, &bz) in basis.iter().enumerate() {
        z[bz] = sol[c].clone();
    }
    z
}

fn eliminate(
    alg: &Arc<Algebra>,
    terms: &mut [Vec<VertexId>],
    diffs: &mut [ElMat],
    k: usize,
    r: usize,
    c: usize,
) {
    let v = terms[k][c];
    let u = diffs[k][r][c].clone();
    let u_inv = local_inverse(alg, &u, v);
    let rows = terms[k + 1].len();
    let cols = terms[k].len();
    // clear column c below/above the pivot: row ops on X^{k+1}
    let alphas: Vec<El> = (0..rows)
        .map(|rp| {
            if rp == r {
                alg.zero_el()
            } else {
                alg.el_mul(&diffs[k][rp][c], &u_inv)
            }
        })
        .collect();
    for rp in 0..rows {
        if rp == r || alg.el_is_zero(&alphas[rp]) {
            continue;
        }
        // d^k row rp -= alpha * row r
        for cc in 0..cols {
            let sub = alg.el_mul(&alphas[rp], &diffs[k][r][cc]);
            diffs[k][rp][cc] = alg.el_sub(&diffs[k][rp][cc], &sub);
        }
        // d^{k+1} column r += column rp * alpha
        if k + 1 < diffs.len() {
            for rr in 0..terms[k + 2].len() {
                let add = alg.el_mul(&diffs[k + 1][rr][rp], &alphas[rp]);
                diffs[k + 1][rr][r] = alg.el_add(&diffs[k + 1][rr][r], &add);
            }
        }
    }
    // clear row r: column ops on X^k
    let betas: Vec<El> = (0..cols)
        .map(|cp| {
            if cp == c {
                alg.zero_el()
            } else {
                alg.el_mul(&u_inv, &diffs[k][r][cp])
            }
        })
        .collect();
    for cp in 0..cols {
        if cp == c || alg.el_is_zero(&betas[cp]) {
            continue;
        }
        for rr in 0..rows {
            let sub = alg.el_mul(&diffs[k][rr][c], &betas[cp]);
            diffs[k][rr][cp] = alg.el_sub(&diffs[k][rr][cp], &sub);
        }
        // d^{k-1} row c += beta * row cp
        if k > 0 {
            for cc in 0..terms[k - 1].len() {
                let add = alg.el_mul(&betas[cp], &diffs[k - 1][cp][cc]);
                diffs[k - 1][c][cc] = alg.el_add(&diffs[k - 1][c][cc], &add);
            }
        }
    }
    // delete row r of term k+1 and column c of term k
    terms[k + 1].remove(r);
    terms[k].remove(c);
    diffs[k].remove(r);
    for row in diffs[k].iter_mut() {
        row.remove(c);
    }
    if k + 1 < diffs.len() {
        for row in diffs[k + 1].iter_mut() {
            row.remove(r);
        }
    }
    if k > 0 {
        diffs[k - 1].remove(c);
    }
}

// ---------------------------------------------------------------------------
// cones and sums

/// The mapping cone of a strict chain map: `C^d = X^{d+1} ⊕ Y^d` with
/// differential `[[-d_X, 0], [f, d_Y]]`, giving the triangle
/// `X -> Y -> C -> X[1]`.
pub fn cone(f: &ChainMap) -> ProjComplex {
    let alg = f.source.alg.clone();
    let x = &f.source;
    let y = &f.target;
    if x.is_zero() && y.is_zero() {
        return ProjComplex::zero(&alg);
    }
    let lows = [
        x.support().map(|(a, _)| a - 1),
        y.support().map(|(a, _)| a),
    ];
    let highs = [
        x.support().map(|(_, b)| b - 1),
        y.support().map(|(_, b)| b),
    ];
    let low = lows.iter().flatten().min().copied().unwrap();
    let high = highs.iter().flatten().max().copied().unwrap();
    let mut terms = Vec::new();
    for d in low..=high {
        let mut t: Vec<VertexId> = x.term(d + 1).to_vec();
        t.extend_from_slice(y.term(d));
        terms.push(t);
    }
    let mut diffs = Vec::new();
    for d in low..high {
        let xs = x.term(d + 1).len();
        let ys_len = y.term(d).len();
        let xs2 = x.term(d + 2).len();
        let ys2 = y.term(d + 1).len();
        let mut m = elmat_zero(&alg, xs2 + ys2, xs + ys_len);
        if let Some(dx) = x.diff(d + 1) {
            for r in 0..xs2 {
                for c in 0..xs {
                    m[r][c] = alg.el_neg(&dx[r][c]);
                }
            }
        }
        let fblk = f.block(&alg, d + 1);
        for r in 0..ys2 {
            for c in 0..xs {
                m[xs2 + r][c] = fblk[r][c].clone();
            }
        }
        if let Some(dy) = y.diff(d) {
            for r in 0..ys2 {
                for c in 0..ys_len {
                    m[xs2 + r][xs + c] = dy[r][c].clone();
                }
            }
        }
        diffs.push(m);
    }
    let out = ProjComplex {
        alg,
        low,
        terms,
        diffs,
    };
    debug_assert!(out.validate().is_ok(), "cone is a complex");
    out.trimmed()
}

/// `cocone(f) = cone(f)[-1]`, completing `f: X -> Y` to the triangle
/// `cocone(f) -> X -> Y -> cocone(f)[1]`.
pub fn cocone(f: &ChainMap) -> ProjComplex {
    cone(f).shift(-1)
}

pub fn direct_sum_complexes(parts: &[ProjComplex]) -> ProjComplex {
    let nonzero: Vec<&ProjComplex> = parts.iter().filter(|p| !p.is_zero()).collect();
    let Some(first) = nonzero.first() else {
        return parts
            .first()
            .map(|p| ProjComplex::zero(&p.alg))
            .expect("direct sum of an empty family needs an algebra");
    };
    let alg = first.alg.clone();
    let low = nonzero
        .iter()
        .map(|p| p.support().unwrap().0)
        .min()
        .unwrap();
    let high = nonzero
        .iter()
        .map(|p| p.support().unwrap().1)
        .max()
        .unwrap();
    let mut terms = Vec::new();
    for d in low..=high {
        let mut t = Vec::new();
        for p in &nonzero {
            t.extend_from_slice(p.term(d));
        }
        terms.push(t);
    }
    let mut diffs = Vec::new();
    for d in low..high {
        let rows: usize = nonzero.iter().map(|p| p.term(d + 1).len()).sum();
        let cols: usize = nonzero.iter().map(|p| p.term(d).len()).sum();
        let mut m = elmat_zero(&alg, rows, cols);
        let mut ro = 0;
        let mut co = 0;
        for p in &nonzero {
            if let Some(dp) = p.diff(d) {
                for (r, row) in dp.iter().enumerate() {
                    for (c, e) in row.iter().enumerate() {
                        m[ro + r][co + c] = e.clone();
                    }
                }
            }
            ro += p.term(d + 1).len();
            co += p.term(d).len();
        }
        diffs.push(m);
    }
    ProjComplex {
        alg,
        low,
        terms,
        diffs,
    }
    .trimmed()
}

// ---------------------------------------------------------------------------
// endomorphisms, decomposition, isomorphism

/// The endomorphism algebra of `X` in `K^b(proj A)` as an abstract algebra
/// over the basis of `hom_space(X, X, 0)`.
pub fn end_algebra_of_complex(x: &ProjComplex) -> Result<(FdAlgebra, HomSpace)> {
    let hs = hom_space(x, x, 0);
    let alg = &x.alg;
    let dim = hs.dim;
    if dim == 0 {
        return Err(Error::Internal("endomorphisms of the zero complex".into()));
    }
    let mut mult = vec![vec![Vec::new(); dim]; dim];
    for i in 0..dim {
        for j in 0..dim {
            let prod = hs.basis[i].compose(alg, &hs.basis[j]);
            mult[i][j] = hs.class_coords(&prod);
        }
    }
    let one = hs.class_coords(&identity_chain_map(x));
    Ok((
        FdAlgebra {
            field: alg.field(),
            dim,
            mult,
            one,
        },
        hs,
    ))
}

/// Split a strict idempotent chain endomorphism: the summand complex whose
/// terms are projectivizations of the degreewise images.
fn split_by_strict_idempotent(x: &ProjComplex, e: &ChainMap) -> ProjComplex {
    let alg = x.alg.clone();
    let field = alg.field();
    let sums: Vec<ProjSum> = x.terms.iter().map(|t| ProjSum::new(&alg, t)).collect();
    let maps: Vec<ModuleMap> = x
        .diffs
        .iter()
        .enumerate()
        .map(|(k, d)| ProjSum::from_el_matrix(&sums[k], &sums[k + 1], d))
        .collect();
    // image of e at each degree, then a projective cover identification
    let mut new_sums: Vec<ProjSum> = Vec::new();
    let mut psis: Vec<ModuleMap> = Vec::new();
    for (k, s) in sums.iter().enumerate() {
        let d = x.low + k as i32;
        let eblk = e.block(&alg, d);
        let emap = ProjSum::from_el_matrix(s, s, &eblk);
        let (im, incl) = crate::rep::image(&emap);
        let (cover_sum, cover) = crate::rep::projective_cover(&im);
        let psi = incl.compose(&cover);
        new_sums.push(cover_sum);
        psis.push(psi);
    }
    // transported differentials: solve psi_{k+1} ∘ d_new = d ∘ psi_k
    let mut new_diffs = Vec::new();
    for k in 0..maps.len() {
        let rhs = maps[k].compose(&psis[k]);
        let tgt = &psis[k + 1];
        let mut mats = Vec::new();
        for v in 0..rhs.target.dims.len() {
            let mut m = Mat::zero(
                new_sums[k + 1].rep.dims[v],
                new_sums[k].rep.dims[v],
                field,
            );
            for c in 0..new_sums[k].rep.dims[v] {
                let col = rhs.mats[v].col(c);
                let sol = tgt.mats[v]
                    .solve(&col)
                    .expect("differential maps image into image");
                for r in 0..m.rows {
                    m.set(r, c, sol[r].clone());
                }
            }
            mats.push(m);
        }
        let d_new = ModuleMap {
            source: new_sums[k].rep.clone(),
            target: new_sums[k + 1].rep.clone(),
            mats,
        };
        new_diffs.push(ProjSum::to_el_matrix(&new_sums[k], &new_sums[k + 1], &d_new));
    }
    ProjComplex {
        alg,
        low: x.low,
        terms: new_sums.iter().map(|s| s.verts.clone()).collect(),
        diffs: new_diffs,
    }
    .trimmed()
}

/// Indecomposable direct summands of `X` (minimized), canonically ordered.
pub fn decompose_complex(x: &ProjComplex) -> Result<Vec<ProjComplex>> {
    let xm = minimize(x);
    if xm.is_zero() {
        return Ok(Vec::new());
    }
    let (fd, hs) = end_algebra_of_complex(&xm)?;
    match fd.split_idempotent()? {
        None => Ok(vec![xm]),
        Some(coords) => {
            // make the idempotent strict: Newton iteration in the chain
            // endomorphism algebra (the error term is radical, hence
            // nilpotent, on a minimal complex)
            let alg = &xm.alg;
            let mut e = hs.combination(&coords);
            let two = alg.field().from_i64(2);
            let three = alg.field().from_i64(3);
            for _ in 0..64 {
                let e2 = e.compose(alg, &e);
                if chain_maps_equal(alg, &e2, &e) {
                    break;
                }
                let e3 = e2.compose(alg, &e);
                let t3 = scale_chain_map(alg, &e2, &three);
                let t2 = scale_chain_map(alg, &e3, &two);
                e = sub_chain_maps(alg, &t3, &t2);
            }
            let e2 = e.compose(alg, &e);
            if !chain_maps_equal(alg, &e2, &e) {
                return Err(Error::Internal("idempotent lifting did not converge".into()));
            }
            let one = identity_chain_map(&xm);
            let comp = sub_chain_maps(alg, &one, &e);
            let x1 = split_by_strict_idempotent(&xm, &e);
            let x2 = split_by_strict_idempotent(&xm, &comp);
            let mut parts = decompose_complex(&x1)?;
            parts.extend(decompose_complex(&x2)?);
            parts.sort_by(|a, b| complex_order_key(a).cmp(&complex_order_key(b)));
            Ok(parts)
        }
    }
}

pub fn sub_chain_maps(alg: &Arc<Algebra>, f: &ChainMap, g: &ChainMap) -> ChainMap {
    let neg = scale_chain_map(alg, g, &alg.field().from_i64(-1));
    add_chain_maps(alg, f, &neg)
}

fn chain_maps_equal(alg: &Arc<Algebra>, f: &ChainMap, g: &ChainMap) -> bool {
    let diff = sub_chain_maps(alg, f, g);
    diff.mats.iter().all(|m| elmat_is_zero(alg, m))
}

/// Canonical ordering key: support window, per-degree vertex multisets,
/// then the full fingerprint string.
pub fn complex_order_key(x: &ProjComplex) -> (i32, i32, Vec<Vec<usize>>, String) {
    match x.support() {
        None => (0, 0, Vec::new(), String::new()),
        Some((a, b)) => {
            let terms: Vec<Vec<usize>> = (a..=b)
                .map(|d| {
                    let mut t: Vec<usize> = x.term(d).iter().map(|v| v.0).collect();
                    t.sort();
                    t
                })
                .collect();
            (a, b, terms, fingerprint(x))
        }
    }
}

/// Isomorphism-invariant fingerprint of the minimized complex: support
/// window, per-degree vertex multisets, and per-degree cohomology dimension
/// vectors. Collisions are resolved by `iso_complexes`.
pub fn fingerprint(x: &ProjComplex) -> String {
    let xm = minimize(x);
    let Some((a, b)) = xm.support() else {
        return "0".into();
    };
    let mut s = format!("w{a}:{b}");
    for d in a..=b {
        let mut t: Vec<usize> = xm.term(d).iter().map(|v| v.0).collect();
        t.sort();
        s.push('|');
        s.push_str(
            &t.iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(","),
        );
    }
    s.push('#');
    for d in a..=b {
        let h = xm.cohomology(d);
        s.push_str(
            &h.dims
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(","),
        );
        s.push(';');
    }
    s
}

/// Isomorphism of minimized indecomposables via a non-nilpotent composite.
fn indec_complex_iso(u: &ProjComplex, v: &ProjComplex) -> Result<bool> {
    let (Some((ua, ub)), Some((va, vb))) = (u.support(), v.support()) else {
        return Ok(u.is_zero() && v.is_zero());
    };
    if (ua, ub) != (va, vb) {
        return Ok(false);
    }
    for d in ua..=ub {
        let mut tu: Vec<usize> = u.term(d).iter().map(|x| x.0).collect();
        let mut tv: Vec<usize> = v.term(d).iter().map(|x| x.0).collect();
        tu.sort();
        tv.sort();
        if tu != tv {
            return Ok(false);
        }
    }
    let alg = &u.alg;
    let fwd = hom_space(u, v, 0);
    if fwd.dim == 0 {
        return Ok(false);
    }
    let bwd = hom_space(v, u, 0);
    if bwd.dim == 0 {
        return Ok(false);
    }
    let (end_u, end_hs) = end_algebra_of_complex(u)?;
    for f in &fwd.basis {
        for g in &bwd.basis {
            let comp = g.compose(alg, f);
            let coords = end_hs.class_coords(&comp);
            // nilpotency in the endomorphism algebra
            let mut p = coords.clone();
            let mut nilpotent = false;
            for _ in 0..end_u.dim + 1 {
                if end_u.is_zero(&p) {
                    nilpotent = true;
                    break;
                }
                p = end_u.mul(&p, &coords);
            }
            if !nilpotent {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Isomorphism in `K^b(proj A)`: minimize, decompose, and match summand
/// multisets.
pub fn iso_complexes(x: &ProjComplex, y: &ProjComplex) -> Result<bool> {
    let xm = minimize(x);
    let ym = minimize(y);
    if xm.is_zero() || ym.is_zero() {
        return Ok(xm.is_zero() && ym.is_zero());
    }
    if fingerprint(&xm) != fingerprint(&ym) {
        return Ok(false);
    }
    let xs = decompose_complex(&xm)?;
    let mut ys: Vec<Option<ProjComplex>> = decompose_complex(&ym)?.into_iter().map(Some).collect();
    if xs.len() != ys.len() {
        return Ok(false);
    }
    'outer: for u in &xs {
        for slot in ys.iter_mut() {
            if let Some(v) = slot {
                if indec_complex_iso(u, v)? {
                    *slot = None;
                    continue 'outer;
                }
            }
        }
        return Ok(false);
    }
    Ok(true)
}

/// The order `X ≥ Y`: `Hom(X, Y[i]) = 0` for all `i > 0`; only finitely
/// many shifts can be nonzero, forced by the supports.
pub fn compare_order(x: &ProjComplex, y: &ProjComplex) -> bool {
    let xm = minimize(x);
    let ym = minimize(y);
    let (Some((_, xb)), Some((ya, _))) = (xm.support(), ym.support()) else {
        return true;
    };
    // Hom(X, Y[i]) can be nonzero only when the supports overlap:
    // Y[i] lives in degrees [ya - i, yb - i]
    let max_i = xb - ya;
    for i in 1..=max_i {
        if hom_space(&xm, &ym, i).dim != 0 {
            return false;
        }
    }
    true
}

// ---------------------------------------------------------------------------
// Nakayama functor on complexes

/// `νX` as a complex of injectives (valid over any algebra); used through
/// its cohomology.
pub fn nu_module_complex(x: &ProjComplex) -> ModuleComplex {
    let alg = &x.alg;
    let sums: Vec<InjSum> = x.terms.iter().map(|t| InjSum::new(alg, t)).collect();
    let maps: Vec<ModuleMap> = x
        .diffs
        .iter()
        .enumerate()
        .map(|(k, d)| {
            let (_, _, m) = InjSum::nu_of_el_matrix(alg, &x.terms[k], &x.terms[k + 1], d);
            m
        })
        .collect();
    ModuleComplex {
        low: x.low,
        reps: sums.into_iter().map(|s| s.rep).collect(),
        maps,
    }
}

/// `νX` as a complex of projectives; requires a self-injective algebra.
/// Terms map by the Nakayama permutation and differential entries by the
/// transport tables.
pub fn nu_complex(x: &ProjComplex) -> Result<ProjComplex> {
    let alg = &x.alg;
    let st = alg.structure();
    let Some(rho) = st.rho.as_ref() else {
        return Err(Error::Internal(
            "nu of a complex of projectives needs a self-injective algebra".into(),
        ));
    };
    let terms: Vec<Vec<VertexId>> = x
        .terms
        .iter()
        .map(|t| t.iter().map(|v| VertexId(rho[v.0])).collect())
        .collect();
    let diffs: Vec<ElMat> = x
        .diffs
        .iter()
        .enumerate()
        .map(|(k, d)| {
            d.iter()
                .enumerate()
                .map(|(r, row)| {
                    row.iter()
                        .enumerate()
                        .map(|(c, e)| {
                            let v = x.terms[k][c];
                            let w = x.terms[k + 1][r];
                            crate::naka::transport_el(alg, e, v, w)
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    Ok(ProjComplex {
        alg: alg.clone(),
        low: x.low,
        terms,
        diffs,
    })
}

/// Hom dimension between bounded complexes of modules, modulo homotopy
/// (used for Serre-duality checks in `K^b(mod A)`).
pub fn module_complex_hom_dim(
    alg: &Arc<Algebra>,
    x: &ModuleComplex,
    y: &ModuleComplex,
    shift: i32,
) -> usize {
    let field = alg.field();
    let ys = y.shift(alg, shift);
    let (Some((xa, xb)), Some((ya, yb))) = (x.support(), ys.support()) else {
        return 0;
    };
    let a = xa.max(ya);
    let b = xb.min(yb);
    if a > b {
        return 0;
    }
    // variables: coordinates over hom bases per degree
    let mut bases: BTreeMap<i32, Vec<ModuleMap>> = BTreeMap::new();
    let mut offsets: BTreeMap<i32, usize> = BTreeMap::new();
    let mut total = 0usize;
    for d in a..=b {
        let h = hom_modules(x.rep(d).unwrap(), ys.rep(d).unwrap());
        offsets.insert(d, total);
        total += h.len();
        bases.insert(d, h);
    }
    if total == 0 {
        return 0;
    }
    // chain condition at each degree: d_Y ∘ f^d − f^{d+1} ∘ d_X = 0,
    // expressed in the hom basis of Hom(X^d, Y^{d+1})
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for d in a - 1..=b {
        let (Some(xr), Some(ynext)) = (x.rep(d), ys.rep(d + 1)) else {
            continue;
        };
        let target_basis = hom_modules(xr, ynext);
        if target_basis.is_empty() {
            continue;
        }
        let mut contributions: Vec<(usize, Vec<Scalar>)> = Vec::new();
        if let (Some(hb), Some(dy)) = (bases.get(&d), ys.map(d)) {
            for (i, h) in hb.iter().enumerate() {
                let comp = dy.compose(h);
                let coords = crate::rep::express_in_basis(&comp, &target_basis)
                    .expect("composite in hom basis");
                contributions.push((offsets[&d] + i, coords));
            }
        }
        if let (Some(hb), Some(dx)) = (bases.get(&(d + 1)), x.map(d)) {
            for (i, h) in hb.iter().enumerate() {
                let comp = h.compose(dx);
                let coords = crate::rep::express_in_basis(&comp, &target_basis)
                    .expect("composite in hom basis");
                let neg: Vec<Scalar> = coords.iter().map(|c| c.neg()).collect();
                contributions.push((offsets[&(d + 1)] + i, neg));
            }
        }
        let tdim = target_basis.len();
        for k in 0..tdim {
            let mut row = vec![field.zero(); total];
            for (slot, coords) in &contributions {
                if !coords[k].is_zero() {
                    row[*slot] = row[*slot].add(&coords[k]);
                }
            }
            if row.iter().any(|c| !c.is_zero()) {
                rows.push(row);
            }
        }
    }
    let z_dim = if rows.is_empty() {
        total
    } else {
        total - Subspace::echelon_basis(field, &rows, total).len()
    };
    // homotopies h^d : X^d -> Y^{d-1}
    let mut null_gens: Vec<Vec<Scalar>> = Vec::new();
    for d in a..=b + 1 {
        let (Some(xr), Some(yprev)) = (x.rep(d), ys.rep(d - 1)) else {
            continue;
        };
        let hb = hom_modules(xr, yprev);
        for h in &hb {
            let mut image = vec![field.zero(); total];
            if let (Some(dy), Some(base)) = (ys.map(d - 1), bases.get(&d)) {
                let comp = dy.compose(h);
                let coords =
                    crate::rep::express_in_basis(&comp, base).expect("dh in hom basis");
                for (k, c) in coords.iter().enumerate() {
                    if !c.is_zero() {
                        image[offsets[&d] + k] = image[offsets[&d] + k].add(c);
                    }
                }
            }
            if let (Some(dx), Some(base)) = (x.map(d - 1), bases.get(&(d - 1))) {
                let comp = h.compose(dx);
                let coords =
                    crate::rep::express_in_basis(&comp, base).expect("hd in hom basis");
                for (k, c) in coords.iter().enumerate() {
                    if !c.is_zero() {
                        image[offsets[&(d - 1)] + k] = image[offsets[&(d - 1)] + k].add(c);
                    }
                }
            }
            if image.iter().any(|c| !c.is_zero()) {
                null_gens.push(image);
            }
        }
    }
    let b_dim = Subspace::echelon_basis(field, &null_gens, total).len();
    z_dim - b_dim
}

/// Brief label of a differential matrix for pretty-printing.
pub fn elmat_brief(alg: &Arc<Algebra>, m: &ElMat) -> String {
    if m.len() == 1 && m[0].len() == 1 {
        return alg.el_render(&m[0][0]);
    }
    let rows: Vec<String> = m
        .iter()
        .map(|row| {
            let cells: Vec<String> = row.iter().map(|e| alg.el_render(e)).collect();
            cells.join(",")
        })
        .collect();
    format!("[{}]", rows.join(";"))
}

// expansion helper for Serre checks
pub fn to_module_complex(x: &ProjComplex) -> ModuleComplex {
    x.module_complex()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::presets;
    use crate::rep::module_iso;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn v(i: usize) -> VertexId {
        VertexId(i)
    }

    #[test]
    fn stalk_endomorphisms() {
        let a3 = presets::a3(Q);
        let a = ProjComplex::algebra_stalk(&a3);
        assert_eq!(hom_space(&a, &a, 0).dim, 6);
        for i in 1..4 {
            assert_eq!(hom_space(&a, &a, i).dim, 0);
        }
        // shift adjunction
        assert_eq!(hom_space(&a.shift(1), &a, 1).dim, 6);
    }

    #[test]
    fn pretilting_pair_on_a3() {
        let a3 = presets::a3(Q);
        let s1 = Representation::simple(&a3, v(0));
        let t = direct_sum_complexes(&[
            ProjComplex::stalk(&a3, &[v(2)], 0),
            ProjComplex::presentation_of(&s1),
        ]);
        for i in -4..=4 {
            if i == 0 {
                assert!(hom_space(&t, &t, 0).dim >= 1);
            } else {
                assert_eq!(hom_space(&t, &t, i).dim, 0, "shift {i}");
            }
        }
    }

    #[test]
    fn shift_round_trip_and_support() {
        let n3 = presets::n3(Q);
        let t = presets::n3_three_term_tilting(&n3);
        let back = t.shift(1).shift(-1);
        assert!(iso_complexes(&t, &back).unwrap());
        assert_eq!(t.support(), Some((0, 2)));
        assert_eq!(t.shift(1).support(), Some((-1, 1)));
    }

    #[test]
    fn cone_basics() {
        let n3 = presets::n3(Q);
        let a = ProjComplex::algebra_stalk(&n3);
        let c = cone(&identity_chain_map(&a));
        assert!(minimize(&c).is_zero());
        // cone of the zero map is Y ⊕ X[1]
        let p1 = ProjComplex::stalk(&n3, &[v(0)], 0);
        let p2 = ProjComplex::stalk(&n3, &[v(1)], 0);
        let z = zero_chain_map(&p1, &p2);
        let cz = cone(&z);
        let expected = direct_sum_complexes(&[p2.clone(), p1.shift(1)]);
        assert!(iso_complexes(&cz, &expected).unwrap());
    }

    #[test]
    fn cohomology_of_presentations() {
        let n3 = presets::n3(Q);
        let s1 = Representation::simple(&n3, v(0));
        let pres = ProjComplex::presentation_of(&s1);
        assert!(module_iso(&pres.cohomology(1), &s1).unwrap());
        assert!(pres.cohomology(0).is_zero() == (crate::rep::hom_dim(&s1, &s1) == 1 && {
            // H^0 = ker(x1·-) on P_2 = soc P_2 ≠ 0
            false
        }) || !pres.cohomology(0).is_zero());
        let a = ProjComplex::algebra_stalk(&n3);
        let h0 = a.cohomology(0);
        assert_eq!(h0.total_dim(), 12);
    }

    #[test]
    fn five_section_tilting_cohomology() {
        let n3 = presets::n3(Q);
        let t = presets::n3_three_term_tilting(&n3);
        let h0 = t.cohomology(0);
        // rad P_2 ⊕ P_2 ⊕ rad² P_2 has dimension 3 + 4 + 2
        assert_eq!(h0.total_dim(), 9);
        let p2 = Representation::projective(&n3, v(1));
        let (radp2, _) = crate::rep::radical(&p2);
        let (rad2p2, _) = crate::rep::radical_power(&p2, 2);
        let (expected, _, _) = crate::rep::direct_sum(&[radp2, p2.clone(), rad2p2]);
        assert!(module_iso(&h0, &expected).unwrap());
    }

    #[test]
    fn decompose_three_summands() {
        let n3 = presets::n3(Q);
        let t = presets::n3_three_term_tilting(&n3);
        let parts = decompose_complex(&t).unwrap();
        assert_eq!(parts.len(), 3);
        let a = ProjComplex::algebra_stalk(&n3);
        let parts = decompose_complex(&a).unwrap();
        assert_eq!(parts.len(), 3);
        assert!(parts.iter().all(|p| p.length() == 1));
    }

    #[test]
    fn iso_and_order() {
        let n3 = presets::n3(Q);
        let a = ProjComplex::algebra_stalk(&n3);
        assert!(iso_complexes(&a, &a).unwrap());
        assert!(!iso_complexes(&a, &a.shift(1)).unwrap());
        assert!(compare_order(&a, &a.shift(-1)));
        assert!(!compare_order(&a.shift(-1), &a));
        // two-term tilting sits between A[-1]·[0] window: A[-1] ≥ T1 ≥ A
        let t1 = presets::n3_two_term_tilting(&n3);
        assert!(compare_order(&a.shift(-1), &t1));
        assert!(compare_order(&t1, &a));
        assert!(!compare_order(&a.shift(-2), &a));
    }

    #[test]
    fn minimize_strips_padding() {
        let n3 = presets::n3(Q);
        let t1 = presets::n3_two_term_tilting(&n3);
        // pad with a contractible cone(id_{P_1})
        let p1 = ProjComplex::stalk(&n3, &[v(0)], 0);
        let pad = cone(&identity_chain_map(&p1));
        let padded = direct_sum_complexes(&[t1.clone(), pad]);
        let m = minimize(&padded);
        assert!(iso_complexes(&m, &t1).unwrap());
        // hom dimensions are homotopy invariants
        let a = ProjComplex::algebra_stalk(&n3);
        for i in -2..=2 {
            assert_eq!(
                hom_space(&padded, &a, i).dim,
                hom_space(&t1, &a, i).dim,
                "shift {i}"
            );
        }
    }

    #[test]
    fn serre_duality_dimensions() {
        let n3 = presets::n3(Q);
        let a = ProjComplex::algebra_stalk(&n3);
        let t = presets::n3_three_term_tilting(&n3);
        // dim Hom(P, X[i]) = dim Hom(X[i], νP)
        for i in -3..=3 {
            let lhs = hom_space(&a, &t, i).dim;
            let xc = to_module_complex(&t.shift(i));
            let nu_a = nu_module_complex(&a);
            let rhs = module_complex_hom_dim(&n3, &xc, &nu_a, 0);
            assert_eq!(lhs, rhs, "Serre at shift {i}");
        }
    }

    #[test]
    fn nu_fixes_tilting_over_symmetric() {
        let n3 = presets::n3(Q);
        let t = presets::n3_three_term_tilting(&n3);
        let nt = nu_complex(&t).unwrap();
        assert!(iso_complexes(&nt, &t).unwrap());

        let sn = presets::sn22(Q);
        let p1 = ProjComplex::stalk(&sn, &[v(0)], 0);
        let np1 = nu_complex(&p1).unwrap();
        let p2 = ProjComplex::stalk(&sn, &[v(1)], 0);
        assert!(iso_complexes(&np1, &p2).unwrap());
    }

    #[test]
    fn length_order_equivalence_samples() {
        let n3 = presets::n3(Q);
        let a = ProjComplex::algebra_stalk(&n3);
        let t = presets::n3_three_term_tilting(&n3);
        // minimal with support [0, 2]: A[0] ≥ T and T ≥ A[2]
        assert!(compare_order(&a, &t));
        assert!(compare_order(&t, &a.shift(-2)));
        assert_eq!(t.length(), 3);
    }
}
