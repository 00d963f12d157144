//! Exact dense linear algebra over a [`FieldScalar`] field.
//!
//! Small and unoptimized; every entry is an exact field element and all
//! eliminations are fraction-free only in the sense that the field itself
//! is exact. Sufficient for the desk-scale systems the engine solves.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::CoreError;
use crate::scalar::{FieldKind, FieldScalar};

/// Row-major dense matrix with entries in a single field.
#[derive(Debug, Clone)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    pub a: Vec<FieldScalar>,
}

impl Mat {
    pub fn zero(rows: usize, cols: usize, kind: FieldKind) -> Self {
        Mat {
            rows,
            cols,
            a: vec![FieldScalar::zero(kind); rows * cols],
        }
    }

    pub fn identity(n: usize, kind: FieldKind) -> Self {
        let mut m = Self::zero(n, n, kind);
        for i in 0..n {
            *m.at_mut(i, i) = FieldScalar::one(kind);
        }
        m
    }

    #[inline]
    pub fn at(&self, r: usize, c: usize) -> &FieldScalar {
        &self.a[r * self.cols + c]
    }

    #[inline]
    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut FieldScalar {
        &mut self.a[r * self.cols + c]
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.a.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let mut pr = None;
            for r in row..self.rows {
                if !self.at(r, col).is_zero() {
                    pr = Some(r);
                    break;
                }
            }
            let Some(pr) = pr else { continue };
            self.swap_rows(row, pr);
            let inv = self.at(row, col).inv().expect("pivot invertible");
            for c in col..self.cols {
                let v = self.at(row, c).mul(&inv);
                *self.at_mut(row, c) = v;
            }
            for r in 0..self.rows {
                if r != row && !self.at(r, col).is_zero() {
                    let factor = self.at(r, col).clone();
                    for c in col..self.cols {
                        let delta = factor.mul(self.at(row, c));
                        let v = self.at(r, c).sub(&delta);
                        *self.at_mut(r, c) = v;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Basis of the right nullspace.
    pub fn nullspace(&self) -> Vec<Vec<FieldScalar>> {
        let kind = self.a.first().map(|s| s.kind()).unwrap_or(FieldKind::Rational);
        let mut m = self.clone();
        let pivots = m.rref();
        let mut is_pivot = vec![None; self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            is_pivot[c] = Some(r);
        }
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free].is_some() {
                continue;
            }
            let mut v = vec![FieldScalar::zero(kind); self.cols];
            v[free] = FieldScalar::one(kind);
            for (c, p) in is_pivot.iter().enumerate() {
                if let Some(r) = p {
                    v[c] = m.at(*r, free).neg();
                }
            }
            basis.push(v);
        }
        basis
    }

    /// Solve `self * x = b`. Returns a particular solution and a basis of
    /// the homogeneous kernel, or `None` when inconsistent.
    pub fn solve(&self, b: &[FieldScalar]) -> Option<(Vec<FieldScalar>, Vec<Vec<FieldScalar>>)> {
        assert_eq!(b.len(), self.rows);
        let kind = self
            .a
            .iter()
            .chain(b.iter())
            .map(|s| s.kind())
            .find(|k| *k != FieldKind::Rational)
            .unwrap_or(FieldKind::Rational);
        let mut aug = Mat::zero(self.rows, self.cols + 1, kind);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *aug.at_mut(r, c) = self.at(r, c).promote(kind).expect("promote");
            }
            *aug.at_mut(r, self.cols) = b[r].promote(kind).expect("promote");
        }
        let pivots = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // pivot in the augmented column: inconsistent
        }
        let mut x = vec![FieldScalar::zero(kind); self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = aug.at(r, self.cols).clone();
        }
        let kernel = self.nullspace();
        Some((x, kernel))
    }

    pub fn det(&self) -> Result<FieldScalar, CoreError> {
        if self.rows != self.cols {
            return Err(CoreError::Scalar("determinant of non-square matrix".into()));
        }
        let kind = self.a.first().map(|s| s.kind()).unwrap_or(FieldKind::Rational);
        let mut m = self.clone();
        let mut det = FieldScalar::one(kind);
        for col in 0..m.cols {
            let mut pr = None;
            for r in col..m.rows {
                if !m.at(r, col).is_zero() {
                    pr = Some(r);
                    break;
                }
            }
            let Some(pr) = pr else {
                return Ok(FieldScalar::zero(kind));
            };
            if pr != col {
                m.swap_rows(col, pr);
                det = det.neg();
            }
            let pivot = m.at(col, col).clone();
            det = det.mul(&pivot);
            let inv = pivot.inv().expect("pivot invertible");
            for r in col + 1..m.rows {
                if m.at(r, col).is_zero() {
                    continue;
                }
                let factor = m.at(r, col).mul(&inv);
                for c in col..m.cols {
                    let delta = factor.mul(m.at(col, c));
                    let v = m.at(r, c).sub(&delta);
                    *m.at_mut(r, c) = v;
                }
            }
        }
        Ok(det)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat_int;

    fn fs(n: i64) -> FieldScalar {
        FieldScalar::Rat(rat_int(n))
    }

    #[test]
    fn solve_and_nullspace() {
        // x + y = 3, x - y = 1  =>  x = 2, y = 1
        let mut m = Mat::zero(2, 2, FieldKind::Rational);
        *m.at_mut(0, 0) = fs(1);
        *m.at_mut(0, 1) = fs(1);
        *m.at_mut(1, 0) = fs(1);
        *m.at_mut(1, 1) = fs(-1);
        let (x, ker) = m.solve(&[fs(3), fs(1)]).unwrap();
        assert_eq!(x, vec![fs(2), fs(1)]);
        assert!(ker.is_empty());
        assert_eq!(m.det().unwrap(), fs(-2));

        // singular system
        let mut s = Mat::zero(2, 2, FieldKind::Rational);
        *s.at_mut(0, 0) = fs(1);
        *s.at_mut(0, 1) = fs(2);
        *s.at_mut(1, 0) = fs(2);
        *s.at_mut(1, 1) = fs(4);
        assert_eq!(s.rank(), 1);
        assert!(s.solve(&[fs(1), fs(3)]).is_none());
        let ns = s.nullspace();
        assert_eq!(ns.len(), 1);
    }
}
