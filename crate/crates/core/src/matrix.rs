//! Dense exact linear algebra over [`Scalar`].
//!
//! Everything here is plain Gaussian elimination with a deterministic pivot
//! order (first nonzero entry scanning rows top to bottom). Sizes are desk
//! scale, so no fraction-free tricks are needed.

use crate::field::{FieldSpec, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    pub field: FieldSpec,
    data: Vec<Scalar>,
}

impl Mat {
    pub fn zero(rows: usize, cols: usize, field: FieldSpec) -> Mat {
        Mat {
            rows,
            cols,
            field,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(n: usize, field: FieldSpec) -> Mat {
        let mut m = Mat::zero(n, n, field);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, field: FieldSpec, f: impl Fn(usize, usize) -> Scalar) -> Mat {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Mat { rows, cols, field, data }
    }

    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<Scalar>>) -> Mat {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        for row in &rows {
            assert_eq!(row.len(), c, "ragged rows");
        }
        Mat {
            rows: r,
            cols: c,
            field,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn at(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.cols, self.rows, self.field, |r, c| self.at(c, r).clone())
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat::from_fn(self.rows, self.cols, self.field, |r, c| {
            self.at(r, c).add(other.at(r, c))
        })
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat::from_fn(self.rows, self.cols, self.field, |r, c| {
            self.at(r, c).sub(other.at(r, c))
        })
    }

    pub fn neg(&self) -> Mat {
        Mat::from_fn(self.rows, self.cols, self.field, |r, c| self.at(r, c).neg())
    }

    pub fn scale(&self, s: &Scalar) -> Mat {
        Mat::from_fn(self.rows, self.cols, self.field, |r, c| self.at(r, c).mul(s))
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        let mut out = Mat::zero(self.rows, other.cols, self.field);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.at(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.at(r, c).add(&a.mul(b));
                    out.set(r, c, v);
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| {
                let mut acc = self.field.zero();
                for c in 0..self.cols {
                    if !self.at(r, c).is_zero() && !v[c].is_zero() {
                        acc = acc.add(&self.at(r, c).mul(&v[c]));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn col(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    pub fn hstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.rows, other.rows);
        Mat::from_fn(self.rows, self.cols + other.cols, self.field, |r, c| {
            if c < self.cols {
                self.at(r, c).clone()
            } else {
                other.at(r, c - self.cols).clone()
            }
        })
    }

    pub fn vstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.cols);
        Mat::from_fn(self.rows + other.rows, self.cols, self.field, |r, c| {
            if r < self.rows {
                self.at(r, c).clone()
            } else {
                other.at(r - self.rows, c).clone()
            }
        })
    }

    pub fn from_cols_vec(field: FieldSpec, rows: usize, cols: Vec<Vec<Scalar>>) -> Mat {
        let n = cols.len();
        Mat::from_fn(rows, n, field, |r, c| cols[c][r].clone())
    }

    /// Reduced row echelon form; returns the echelon matrix and the pivot
    /// column indices.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row >= m.rows {
                break;
            }
            let mut sel = None;
            for r in row..m.rows {
                if !m.at(r, col).is_zero() {
                    sel = Some(r);
                    break;
                }
            }
            let Some(sel) = sel else { continue };
            if sel != row {
                for c in 0..m.cols {
                    let a = m.at(sel, c).clone();
                    let b = m.at(row, c).clone();
                    m.set(sel, c, b);
                    m.set(row, c, a);
                }
            }
            let inv = m.at(row, col).inv();
            for c in 0..m.cols {
                let v = m.at(row, c).mul(&inv);
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r != row && !m.at(r, col).is_zero() {
                    let factor = m.at(r, col).clone();
                    for c in 0..m.cols {
                        let v = m.at(r, c).sub(&factor.mul(m.at(row, c)));
                        m.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel, one column vector per basis element, in the
    /// deterministic order induced by free columns.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = Some(i);
            }
            v
        };
        for free in 0..self.cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut vec = vec![self.field.zero(); self.cols];
            vec[free] = self.field.one();
            for (i, &p) in pivots.iter().enumerate() {
                vec[p] = r.at(i, free).neg();
            }
            basis.push(vec);
        }
        basis
    }

    /// Solve `self * x = b`; `None` when inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows);
        let bm = Mat::from_fn(self.rows, 1, self.field, |r, _| b[r].clone());
        let aug = self.hstack(&bm);
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = r.at(i, self.cols).clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Mat> {
        assert_eq!(self.rows, self.cols);
        let aug = self.hstack(&Mat::identity(self.rows, self.field));
        let (r, pivots) = aug.rref();
        if pivots.len() != self.rows || pivots.iter().enumerate().any(|(i, &p)| i != p) {
            return None;
        }
        Some(Mat::from_fn(self.rows, self.rows, self.field, |i, j| {
            r.at(i, self.rows + j).clone()
        }))
    }

    pub fn det(&self) -> Scalar {
        assert_eq!(self.rows, self.cols);
        let mut m = self.clone();
        let mut det = self.field.one();
        for col in 0..m.cols {
            let mut sel = None;
            for r in col..m.rows {
                if !m.at(r, col).is_zero() {
                    sel = Some(r);
                    break;
                }
            }
            let Some(sel) = sel else {
                return self.field.zero();
            };
            if sel != col {
                det = det.neg();
                for c in 0..m.cols {
                    let a = m.at(sel, c).clone();
                    let b = m.at(col, c).clone();
                    m.set(sel, c, b);
                    m.set(col, c, a);
                }
            }
            det = det.mul(m.at(col, col));
            let inv = m.at(col, col).inv();
            for r in col + 1..m.rows {
                if !m.at(r, col).is_zero() {
                    let factor = m.at(r, col).mul(&inv);
                    for c in col..m.cols {
                        let v = m.at(r, c).sub(&factor.mul(m.at(col, c)));
                        m.set(r, c, v);
                    }
                }
            }
        }
        det
    }
}

/// Span utilities for subspaces given by generating vectors (row convention).
pub struct Subspace;

impl Subspace {
    /// Row-reduce the generators to an echelon basis.
    pub fn echelon_basis(field: FieldSpec, gens: &[Vec<Scalar>], dim: usize) -> Vec<Vec<Scalar>> {
        if gens.is_empty() {
            return Vec::new();
        }
        let m = Mat::from_rows(field, gens.to_vec());
        assert_eq!(m.cols, dim);
        let (r, pivots) = m.rref();
        (0..pivots.len())
            .map(|i| (0..dim).map(|c| r.at(i, c).clone()).collect())
            .collect()
    }

    /// Does `v` lie in the span of `basis` (basis need not be echelon)?
    pub fn contains(field: FieldSpec, basis: &[Vec<Scalar>], v: &[Scalar]) -> bool {
        if v.iter().all(|x| x.is_zero()) {
            return true;
        }
        if basis.is_empty() {
            return false;
        }
        let m = Mat::from_cols_vec(field, v.len(), basis.to_vec());
        m.solve(v).is_some()
    }

    /// Extend `inside` (a linearly independent family) to a basis of the span
    /// of `inside ∪ ambient`, returning indices of chosen `ambient` vectors.
    pub fn complement_indices(
        field: FieldSpec,
        inside: &[Vec<Scalar>],
        ambient: &[Vec<Scalar>],
        dim: usize,
    ) -> Vec<usize> {
        let mut rows: Vec<Vec<Scalar>> = inside.to_vec();
        let mut chosen = Vec::new();
        for (i, cand) in ambient.iter().enumerate() {
            let mut trial = rows.clone();
            trial.push(cand.clone());
            let rank_before = if rows.is_empty() {
                0
            } else {
                Mat::from_rows(field, rows.clone()).rank()
            };
            let rank_after = Mat::from_rows(field, trial.clone()).rank();
            let _ = dim;
            if rank_after > rank_before {
                rows.push(cand.clone());
                chosen.push(i);
            }
        }
        chosen
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Scalar {
        FieldSpec::Rationals.from_i64(n)
    }

    #[test]
    fn solve_and_kernel() {
        let f = FieldSpec::Rationals;
        let m = Mat::from_rows(f, vec![vec![q(1), q(2)], vec![q(2), q(4)]]);
        assert_eq!(m.rank(), 1);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 1);
        assert!(m.apply(&k[0]).iter().all(|x| x.is_zero()));
        let b = vec![q(3), q(6)];
        let x = m.solve(&b).unwrap();
        assert_eq!(m.apply(&x), b);
        assert!(m.solve(&[q(1), q(0)]).is_none());
    }

    #[test]
    fn inverse_and_det() {
        let f = FieldSpec::Rationals;
        let m = Mat::from_rows(f, vec![vec![q(2), q(1)], vec![q(1), q(1)]]);
        assert_eq!(m.det(), q(1));
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Mat::identity(2, f));
    }

    #[test]
    fn complement_extension() {
        let f = FieldSpec::Rationals;
        let inside = vec![vec![q(1), q(0), q(0)]];
        let ambient = vec![
            vec![q(2), q(0), q(0)],
            vec![q(0), q(1), q(0)],
            vec![q(0), q(1), q(1)],
        ];
        let chosen = Subspace::complement_indices(f, &inside, &ambient, 3);
        assert_eq!(chosen, vec![1, 2]);
    }
}
