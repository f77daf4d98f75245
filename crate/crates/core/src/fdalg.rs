//! Abstract finite dimensional algebras given by structure constants:
//! radical via the trace form, minimal polynomials, split idempotents, and
//! quiver-presentation extraction.

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::matrix::{Mat, Subspace};

/// A finite dimensional associative unital algebra in a fixed basis.
#[derive(Debug, Clone)]
pub struct FdAlgebra {
    pub field: FieldSpec,
    pub dim: usize,
    /// `mult[i][j]` = coordinates of `b_i · b_j`.
    pub mult: Vec<Vec<Vec<Scalar>>>,
    /// Coordinates of the unit.
    pub one: Vec<Scalar>,
}

impl FdAlgebra {
    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi.mul(yj);
                for (k, m) in self.mult[i][j].iter().enumerate() {
                    if !m.is_zero() {
                        out[k] = out[k].add(&c.mul(m));
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self, x: &[Scalar]) -> bool {
        x.iter().all(|c| c.is_zero())
    }

    /// Matrix of left multiplication by `x` in the algebra basis.
    pub fn left_regular(&self, x: &[Scalar]) -> Mat {
        let mut cols = Vec::with_capacity(self.dim);
        for j in 0..self.dim {
            let mut ej = vec![self.field.zero(); self.dim];
            ej[j] = self.field.one();
            cols.push(self.mul(x, &ej));
        }
        Mat::from_cols_vec(self.field, self.dim, cols)
    }

    fn trace_of_left_mult(&self, x: &[Scalar]) -> Scalar {
        let mut t = self.field.zero();
        for j in 0..self.dim {
            // diagonal entry of L_x at column j
            let mut acc = self.field.zero();
            for (i, xi) in x.iter().enumerate() {
                if !xi.is_zero() && !self.mult[i][j][j].is_zero() {
                    acc = acc.add(&xi.mul(&self.mult[i][j][j]));
                }
            }
            t = t.add(&acc);
        }
        t
    }

    /// Jacobson radical via Dickson's trace-form criterion; valid in
    /// characteristic zero or `p > dim`.
    pub fn radical_basis(&self) -> Result<Vec<Vec<Scalar>>> {
        if !self.field.admits_radical(self.dim) {
            return Err(Error::FieldTooSmall { needed: self.dim });
        }
        // Gram matrix of (x, y) -> tr(L_{xy})
        let mut gram = Mat::zero(self.dim, self.dim, self.field);
        for i in 0..self.dim {
            for j in 0..self.dim {
                gram.set(i, j, self.trace_of_left_mult(&self.mult[i][j]));
            }
        }
        // x in radical iff sum_i x_i tr(L_{b_i b_j}) = 0 for all j
        Ok(gram.transpose().kernel_basis())
    }

    /// Minimal polynomial of `x`, monic, as coefficient list `c_0..c_d`
    /// (constant first, leading coefficient `1` last).
    pub fn min_poly(&self, x: &[Scalar]) -> Vec<Scalar> {
        let mut powers: Vec<Vec<Scalar>> = vec![self.one.clone()];
        loop {
            let last = powers.last().unwrap();
            let next = self.mul(last, x);
            // is `next` dependent on previous powers?
            let m = Mat::from_cols_vec(self.field, self.dim, powers.clone());
            if let Some(sol) = m.solve(&next) {
                let mut coeffs: Vec<Scalar> = sol.iter().map(|c| c.neg()).collect();
                coeffs.push(self.field.one());
                return coeffs;
            }
            powers.push(next);
        }
    }

    /// Quotient algebra structure by a (two-sided) ideal spanned by `ideal`:
    /// returns the quotient along with the projection of each original basis
    /// vector (rows of `pi`) and a lift of each quotient basis vector.
    pub fn quotient(&self, ideal: &[Vec<Scalar>]) -> (FdAlgebra, Mat, Vec<Vec<Scalar>>) {
        let sub = Subspace::echelon_basis(self.field, ideal, self.dim);
        let pivots: Vec<usize> = sub
            .iter()
            .map(|row| row.iter().position(|c| !c.is_zero()).unwrap())
            .collect();
        let free: Vec<usize> = (0..self.dim).filter(|i| !pivots.contains(i)).collect();
        let qdim = free.len();
        // projection: reduce modulo the echelon rows, keep free coordinates
        let project = |x: &[Scalar]| -> Vec<Scalar> {
            let mut v = x.to_vec();
            for (row, &p) in sub.iter().zip(&pivots) {
                if !v[p].is_zero() {
                    let c = v[p].clone();
                    for (k, rk) in row.iter().enumerate() {
                        if !rk.is_zero() {
                            v[k] = v[k].sub(&c.mul(rk));
                        }
                    }
                }
            }
            free.iter().map(|&i| v[i].clone()).collect()
        };
        let mut pi = Mat::zero(qdim, self.dim, self.field);
        for i in 0..self.dim {
            let mut e = vec![self.field.zero(); self.dim];
            e[i] = self.field.one();
            for (r, c) in project(&e).into_iter().enumerate() {
                pi.set(r, i, c);
            }
        }
        let lifts: Vec<Vec<Scalar>> = free
            .iter()
            .map(|&i| {
                let mut e = vec![self.field.zero(); self.dim];
                e[i] = self.field.one();
                e
            })
            .collect();
        let mut mult = vec![vec![Vec::new(); qdim]; qdim];
        for a in 0..qdim {
            for b in 0..qdim {
                mult[a][b] = project(&self.mul(&lifts[a], &lifts[b]));
            }
        }
        let one = project(&self.one);
        (
            FdAlgebra {
                field: self.field,
                dim: qdim,
                mult,
                one,
            },
            pi,
            lifts,
        )
    }

    /// Search for a nontrivial idempotent. Returns `Ok(None)` when the
    /// algebra is local (radical has codimension one). Errors with
    /// `FieldTooSmall` when the semisimple quotient cannot be split over the
    /// ground field by the deterministic search.
    pub fn split_idempotent(&self) -> Result<Option<Vec<Scalar>>> {
        let rad = self.radical_basis()?;
        if self.dim - rad.len() <= 1 {
            return Ok(None);
        }
        let (ss, _pi, lifts) = self.quotient(&rad);
        // find s in the semisimple quotient, nonzero and non-invertible,
        // via rational eigenvalues of candidate elements
        let mut candidates: Vec<Vec<Scalar>> = Vec::new();
        for i in 0..ss.dim {
            let mut e = vec![ss.field.zero(); ss.dim];
            e[i] = ss.field.one();
            candidates.push(e);
        }
        let base = candidates.clone();
        for a in &base {
            for b in &base {
                candidates.push(ss.mul(a, b));
                candidates.push(a.iter().zip(b).map(|(x, y)| x.add(y)).collect());
            }
        }
        // weighted generic combinations
        for t in 1..=(ss.dim * ss.dim + 2) as i64 {
            let mut v = vec![ss.field.zero(); ss.dim];
            let mut w = ss.field.one();
            let tt = ss.field.from_i64(t);
            for e in &base {
                for (k, c) in e.iter().enumerate() {
                    v[k] = v[k].add(&c.mul(&w));
                }
                w = w.mul(&tt);
            }
            candidates.push(v);
        }
        for cand in &candidates {
            if ss.is_zero(cand) {
                continue;
            }
            if let Some(idem) = ss.idempotent_from_element(cand) {
                // lift to the original algebra through the radical
                let mut e: Vec<Scalar> = lift_through(&lifts, &idem, self.dim, self.field);
                // Newton iteration: e <- 3e^2 - 2e^3 converges modulo
                // powers of the (nilpotent) radical
                for _ in 0..self.dim + 2 {
                    let e2 = self.mul(&e, &e);
                    let diff: Vec<Scalar> = e2.iter().zip(&e).map(|(a, b)| a.sub(b)).collect();
                    if diff.iter().all(|c| c.is_zero()) {
                        break;
                    }
                    let e3 = self.mul(&e2, &e);
                    e = e2
                        .iter()
                        .zip(&e3)
                        .map(|(a, b)| {
                            self.field
                                .from_i64(3)
                                .mul(a)
                                .sub(&self.field.from_i64(2).mul(b))
                        })
                        .collect();
                }
                let e2 = self.mul(&e, &e);
                if e2 != e {
                    continue;
                }
                if self.is_zero(&e) {
                    continue;
                }
                let one_minus: Vec<Scalar> = self.one.iter().zip(&e).map(|(a, b)| a.sub(b)).collect();
                if self.is_zero(&one_minus) {
                    continue;
                }
                return Ok(Some(e));
            }
        }
        Err(Error::FieldTooSmall { needed: self.dim })
    }

    /// If `x` (in a semisimple algebra) has a rational eigenvalue giving a
    /// nontrivial coprime factorization of its minimal polynomial, return
    /// the corresponding idempotent in `k[x]`.
    fn idempotent_from_element(&self, x: &[Scalar]) -> Option<Vec<Scalar>> {
        let mp = self.min_poly(x);
        let deg = mp.len() - 1;
        if deg < 2 {
            return None;
        }
        for root in rational_root_candidates(self.field, &mp) {
            if !poly_eval_scalar(self.field, &mp, &root).is_zero() {
                continue;
            }
            let shifted: Vec<Scalar> = x
                .iter()
                .zip(&self.one)
                .map(|(a, b)| a.sub(&root.mul(b)))
                .collect();
            let m = self.min_poly(&shifted);
            // m = x^v * h with h(0) != 0
            let v = m.iter().take_while(|c| c.is_zero()).count();
            if v == 0 || v == m.len() - 1 {
                continue;
            }
            let h: Vec<Scalar> = m[v..].to_vec();
            if h.len() == 1 {
                continue;
            }
            // idempotent projecting onto ker(shifted^v): e = h(s)/h(0)
            let h0 = h[0].clone();
            if h0.is_zero() {
                continue;
            }
            let mut e = vec![self.field.zero(); self.dim];
            let mut pow = self.one.clone();
            for c in &h {
                if !c.is_zero() {
                    let cc = c.div(&h0);
                    for (k, p) in pow.iter().enumerate() {
                        e[k] = e[k].add(&cc.mul(p));
                    }
                }
                pow = self.mul(&pow, &shifted);
            }
            let ee = self.mul(&e, &e);
            if ee == e && !self.is_zero(&e) {
                let one_minus: Vec<Scalar> =
                    self.one.iter().zip(&e).map(|(a, b)| a.sub(b)).collect();
                if !self.is_zero(&one_minus) {
                    return Some(e);
                }
            }
        }
        None
    }

    /// True when the algebra is local: the radical has codimension one.
    pub fn is_local(&self) -> Result<bool> {
        Ok(self.dim - self.radical_basis()?.len() == 1)
    }
}

fn lift_through(
    lifts: &[Vec<Scalar>],
    quot_coords: &[Scalar],
    dim: usize,
    field: FieldSpec,
) -> Vec<Scalar> {
    let mut out = vec![field.zero(); dim];
    for (c, lift) in quot_coords.iter().zip(lifts) {
        if !c.is_zero() {
            for (k, l) in lift.iter().enumerate() {
                out[k] = out[k].add(&c.mul(l));
            }
        }
    }
    out
}

fn poly_eval_scalar(field: FieldSpec, poly: &[Scalar], x: &Scalar) -> Scalar {
    let mut acc = field.zero();
    for c in poly.iter().rev() {
        acc = acc.mul(x).add(c);
    }
    acc
}

/// Candidate rational roots of a monic polynomial: small integers plus, over
/// the rationals, divisors of the constant term; over GF(p), a bounded scan.
fn rational_root_candidates(field: FieldSpec, poly: &[Scalar]) -> Vec<Scalar> {
    let mut out = Vec::new();
    match field {
        FieldSpec::Rationals => {
            for n in -8i64..=8 {
                out.push(field.from_i64(n));
            }
            if let Some(c0) = poly.first().and_then(|c| c.as_i64()) {
                let c0 = c0.abs();
                let mut d = 1;
                while d * d <= c0 && d <= 10_000 {
                    if c0 % d == 0 {
                        for v in [d, c0 / d] {
                            out.push(field.from_i64(v));
                            out.push(field.from_i64(-v));
                        }
                    }
                    d += 1;
                }
            }
        }
        FieldSpec::Gf(p) => {
            let bound = p.min(65_536);
            for n in 0..bound {
                out.push(field.from_i64(n as i64));
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Scalar {
        FieldSpec::Rationals.from_i64(n)
    }

    /// k[x]/(x^2): local, radical spanned by x.
    fn dual_numbers() -> FdAlgebra {
        FdAlgebra {
            field: FieldSpec::Rationals,
            dim: 2,
            mult: vec![
                vec![vec![q(1), q(0)], vec![q(0), q(1)]],
                vec![vec![q(0), q(1)], vec![q(0), q(0)]],
            ],
            one: vec![q(1), q(0)],
        }
    }

    /// k x k with basis (1,1), (0,1).
    fn k_times_k() -> FdAlgebra {
        FdAlgebra {
            field: FieldSpec::Rationals,
            dim: 2,
            mult: vec![
                vec![vec![q(1), q(0)], vec![q(0), q(1)]],
                vec![vec![q(0), q(1)], vec![q(0), q(1)]],
            ],
            one: vec![q(1), q(0)],
        }
    }

    #[test]
    fn radical_of_dual_numbers() {
        let a = dual_numbers();
        let rad = a.radical_basis().unwrap();
        assert_eq!(rad.len(), 1);
        assert!(a.is_local().unwrap());
        assert!(a.split_idempotent().unwrap().is_none());
    }

    #[test]
    fn split_k_times_k() {
        let a = k_times_k();
        assert_eq!(a.radical_basis().unwrap().len(), 0);
        let e = a.split_idempotent().unwrap().expect("should split");
        assert_eq!(a.mul(&e, &e), e);
        assert!(!a.is_zero(&e));
    }

    #[test]
    fn min_poly_of_idempotent() {
        let a = k_times_k();
        let mp = a.min_poly(&[q(0), q(1)]);
        // x^2 - x
        assert_eq!(mp, vec![q(0), q(-1), q(1)]);
    }
}
