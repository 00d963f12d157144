//! Automorphisms of `g` fixing the even part pointwise.
//!
//! Four kinds are supported: the identity, the sign-grading operator
//! `delta`, the one-parameter family `phi_s` acting by `s` on `g_{-1}` and
//! `s^{-1}` on `g_1` of a compatible Z-grading, and an arbitrary invertible
//! matrix on the odd part of an abelian algebra.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::{LieSuperalgebra, Parity};
use crate::error::CoreError;
use crate::linalg::Mat;
use crate::scalar::{FieldKind, FieldScalar, Rat};

#[derive(Debug, Clone, PartialEq)]
pub enum GradedAutomorphism {
    Identity,
    Delta,
    /// `s` on `g_{-1}`, identity on `g_0`, `s^{-1}` on `g_1`.
    Scale(FieldScalar),
    /// Columns are images of the odd basis (odd-index order); abelian only.
    Matrix(Vec<Vec<FieldScalar>>),
}

impl GradedAutomorphism {
    pub fn identity() -> Self {
        GradedAutomorphism::Identity
    }

    pub fn delta() -> Self {
        GradedAutomorphism::Delta
    }

    pub fn scale(s: FieldScalar) -> Self {
        GradedAutomorphism::Scale(s)
    }

    pub fn field_kind(&self) -> FieldKind {
        match self {
            GradedAutomorphism::Identity | GradedAutomorphism::Delta => FieldKind::Rational,
            GradedAutomorphism::Scale(s) => s.kind(),
            GradedAutomorphism::Matrix(cols) => cols
                .iter()
                .flatten()
                .map(|s| s.kind())
                .find(|k| *k != FieldKind::Rational)
                .unwrap_or(FieldKind::Rational),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            GradedAutomorphism::Identity => "id".into(),
            GradedAutomorphism::Delta => "delta".into(),
            GradedAutomorphism::Scale(s) => format!("scale({s})"),
            GradedAutomorphism::Matrix(_) => "matrix".into(),
        }
    }

    /// Image of a single basis generator as a sparse combination.
    pub fn apply_gen(
        &self,
        alg: &LieSuperalgebra,
        i: usize,
    ) -> Result<Vec<(usize, FieldScalar)>, CoreError> {
        let kind = self.field_kind();
        let one = FieldScalar::one(kind);
        match self {
            GradedAutomorphism::Identity => Ok(alloc::vec![(i, one)]),
            GradedAutomorphism::Delta => {
                let s = match alg.parity(i) {
                    Parity::Even => one,
                    Parity::Odd => one.neg(),
                };
                Ok(alloc::vec![(i, s)])
            }
            GradedAutomorphism::Scale(s) => match (alg.parity(i), alg.basis[i].z_degree) {
                (Parity::Even, 0) => Ok(alloc::vec![(i, one)]),
                (Parity::Odd, -1) => Ok(alloc::vec![(i, s.clone())]),
                (Parity::Odd, 1) => Ok(alloc::vec![(i, s.inv()?)]),
                _ => Err(CoreError::Unsupported(format!(
                    "scaling automorphism needs a compatible Z-grading on {}",
                    alg.name
                ))),
            },
            GradedAutomorphism::Matrix(cols) => {
                let all_zero = alg
                    .bracket
                    .iter()
                    .all(|row| row.iter().all(|e| e.is_empty()));
                if !all_zero {
                    return Err(CoreError::Unsupported(
                        "matrix automorphisms are only supported for abelian algebras".into(),
                    ));
                }
                if alg.parity(i) == Parity::Even {
                    return Ok(alloc::vec![(i, one)]);
                }
                let odd = alg.odd_indices();
                let k = odd.iter().position(|&j| j == i).expect("odd index");
                if cols.len() != odd.len() || cols.iter().any(|c| c.len() != odd.len()) {
                    return Err(CoreError::Unsupported(
                        "matrix automorphism has wrong dimensions".into(),
                    ));
                }
                Ok(odd
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| !cols[k][*j].is_zero())
                    .map(|(j, &gj)| (gj, cols[k][j].clone()))
                    .collect())
            }
        }
    }

    /// Linear extension to a dense coefficient vector over the basis.
    pub fn apply_vec(
        &self,
        alg: &LieSuperalgebra,
        x: &[FieldScalar],
    ) -> Result<Vec<FieldScalar>, CoreError> {
        let kind = crate::pbw::try_unify_kind(
            self.field_kind(),
            x.iter()
                .map(|s| s.kind())
                .find(|k| *k != FieldKind::Rational)
                .unwrap_or(FieldKind::Rational),
        )?;
        let mut out = alloc::vec![FieldScalar::zero(kind); alg.dim()];
        for (i, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, s) in self.apply_gen(alg, i)? {
                out[j] = out[j].add(&c.mul(&s));
            }
        }
        Ok(out)
    }

    /// True iff 1 is not an eigenvalue of the restriction to the odd part.
    pub fn fixed_point_free_on_odd(&self, alg: &LieSuperalgebra) -> Result<bool, CoreError> {
        let odd = alg.odd_indices();
        if odd.is_empty() {
            return Ok(true);
        }
        match self {
            GradedAutomorphism::Identity => Ok(false),
            GradedAutomorphism::Delta => Ok(true),
            GradedAutomorphism::Scale(s) => {
                // eigenvalues are s and s^{-1}; 1 appears iff s = 1
                let one = FieldScalar::one(s.kind());
                Ok(s != &one)
            }
            GradedAutomorphism::Matrix(cols) => {
                let n = odd.len();
                let kind = self.field_kind();
                let mut m = Mat::zero(n, n, kind);
                for (k, col) in cols.iter().enumerate() {
                    for (j, v) in col.iter().enumerate() {
                        *m.at_mut(j, k) = v.promote(kind)?;
                    }
                }
                for d in 0..n {
                    let v = m.at(d, d).sub(&FieldScalar::one(kind));
                    *m.at_mut(d, d) = v;
                }
                Ok(!m.det()?.is_zero())
            }
        }
    }

    /// Exact bracket-preservation check over all basis pairs.
    pub fn preserves_brackets(&self, alg: &LieSuperalgebra) -> Result<bool, CoreError> {
        let kind = self.field_kind();
        let n = alg.dim();
        for i in 0..n {
            for j in 0..n {
                // phi([x_i, x_j])
                let mut lhs = alloc::vec![FieldScalar::zero(kind); n];
                for (k, c) in alg.bracket_basis(i, j) {
                    for (t, s) in self.apply_gen(alg, *k)? {
                        lhs[t] = lhs[t].add(&s.mul_rat(c));
                    }
                }
                // [phi(x_i), phi(x_j)]
                let mut rhs = alloc::vec![FieldScalar::zero(kind); n];
                for (a, sa) in self.apply_gen(alg, i)? {
                    for (b, sb) in self.apply_gen(alg, j)? {
                        for (k, c) in alg.bracket_basis(a, b) {
                            rhs[*k] = rhs[*k].add(&sa.mul(&sb).mul_rat(c));
                        }
                    }
                }
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Composition `self o other` (apply `other` first).
    pub fn compose(
        &self,
        other: &Self,
        alg: &LieSuperalgebra,
    ) -> Result<GradedAutomorphism, CoreError> {
        use GradedAutomorphism::*;
        let as_scale = |a: &Self| -> Option<FieldScalar> {
            match a {
                Identity => Some(FieldScalar::Rat(Rat::from_integer(1.into()))),
                Delta if alg.is_type_i() => Some(FieldScalar::Rat(Rat::from_integer((-1).into()))),
                Scale(s) => Some(s.clone()),
                _ => None,
            }
        };
        match (self, other) {
            (Identity, b) => Ok(b.clone()),
            (a, Identity) => Ok(a.clone()),
            (Delta, Delta) => Ok(Identity),
            (Matrix(a), Matrix(b)) => {
                // (a o b) column k = a applied to b's column k
                let n = a.len();
                let kind = crate::pbw::try_unify_kind(self.field_kind(), other.field_kind())?;
                let mut cols = alloc::vec![alloc::vec![FieldScalar::zero(kind); n]; n];
                for k in 0..n {
                    for j in 0..n {
                        if b[k][j].is_zero() {
                            continue;
                        }
                        for t in 0..n {
                            let add = a[j][t].mul(&b[k][j]);
                            cols[k][t] = cols[k][t].add(&add);
                        }
                    }
                }
                Ok(Matrix(cols))
            }
            (a, b) => match (as_scale(a), as_scale(b)) {
                (Some(s), Some(t)) => {
                    let st = s.mul(&t);
                    if st.is_one() {
                        Ok(Identity)
                    } else {
                        Ok(Scale(st))
                    }
                }
                _ => Err(CoreError::Unsupported(format!(
                    "cannot compose {} with {} on {}",
                    self.describe(),
                    other.describe(),
                    alg.name
                ))),
            },
        }
    }

    /// The scalar by which the automorphism scales `g_{-1}`, when defined:
    /// the twist parameter used by graded-module scalar predictions.
    pub fn twist_scalar(&self, field: FieldKind) -> Result<FieldScalar, CoreError> {
        match self {
            GradedAutomorphism::Identity => Ok(FieldScalar::one(field)),
            GradedAutomorphism::Delta => Ok(FieldScalar::from_int(-1, field)),
            GradedAutomorphism::Scale(s) => s.promote(field).or_else(|_| Ok(s.clone())),
            GradedAutomorphism::Matrix(_) => Err(CoreError::Unsupported(
                "matrix automorphisms have no single twist scalar".into(),
            )),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{build_abelian, build_gl, build_osp1};
    use crate::scalar::rat_int;

    #[test]
    fn delta_and_scale_on_gl11() {
        let (g, _) = build_gl(1, 1).unwrap();
        let y = g.index_of("y").unwrap();
        let h1 = g.index_of("h1").unwrap();
        let delta = GradedAutomorphism::delta();
        assert_eq!(
            delta.apply_gen(&g, y).unwrap(),
            alloc::vec![(y, FieldScalar::Rat(rat_int(-1)))]
        );
        let c = FieldScalar::fun_c();
        let phi = GradedAutomorphism::scale(c.clone());
        // scale_c on y in g_{-1} is c*y; h1 is fixed
        assert_eq!(phi.apply_gen(&g, y).unwrap(), alloc::vec![(y, c.clone())]);
        assert_eq!(
            phi.apply_gen(&g, h1).unwrap(),
            alloc::vec![(h1, FieldScalar::one(FieldKind::RatFun))]
        );
        assert!(delta.preserves_brackets(&g).unwrap());
        assert!(phi.preserves_brackets(&g).unwrap());
        assert!(GradedAutomorphism::identity().preserves_brackets(&g).unwrap());
    }

    #[test]
    fn fixed_point_free() {
        let (g, _) = build_gl(1, 1).unwrap();
        assert!(GradedAutomorphism::delta().fixed_point_free_on_odd(&g).unwrap());
        assert!(!GradedAutomorphism::identity().fixed_point_free_on_odd(&g).unwrap());
        let c = GradedAutomorphism::scale(FieldScalar::fun_c());
        assert!(c.fixed_point_free_on_odd(&g).unwrap());
        let one = GradedAutomorphism::scale(FieldScalar::one(FieldKind::Rational));
        assert!(!one.fixed_point_free_on_odd(&g).unwrap());
    }

    #[test]
    fn scale_requires_grading() {
        let (g, _) = build_osp1(1).unwrap();
        let u = g.index_of("u1").unwrap();
        let phi = GradedAutomorphism::scale(FieldScalar::Rat(rat_int(2)));
        assert!(phi.apply_gen(&g, u).is_err());
        // delta still fine
        assert!(GradedAutomorphism::delta().preserves_brackets(&g).unwrap());
    }

    #[test]
    fn matrix_on_abelian() {
        let g = build_abelian(0, 2).unwrap();
        // A = [[1,1],[0,1]] has eigenvalue 1
        let one = FieldScalar::Rat(rat_int(1));
        let zero = FieldScalar::Rat(rat_int(0));
        let a = GradedAutomorphism::Matrix(alloc::vec![
            alloc::vec![one.clone(), zero.clone()],
            alloc::vec![one.clone(), one.clone()],
        ]);
        assert!(!a.fixed_point_free_on_odd(&g).unwrap());
        assert!(a.preserves_brackets(&g).unwrap());
        // 2*A - I style: [[2,0],[0,3]] is fixed-point free
        let b = GradedAutomorphism::Matrix(alloc::vec![
            alloc::vec![FieldScalar::Rat(rat_int(2)), zero.clone()],
            alloc::vec![zero.clone(), FieldScalar::Rat(rat_int(3))],
        ]);
        assert!(b.fixed_point_free_on_odd(&g).unwrap());
        // matrix kind rejected on non-abelian algebras
        let (gl, _) = build_gl(1, 1).unwrap();
        let y = gl.index_of("y").unwrap();
        assert!(b.apply_gen(&gl, y).is_err());
    }

    #[test]
    fn composition() {
        let (g, _) = build_gl(1, 1).unwrap();
        let d = GradedAutomorphism::delta();
        assert_eq!(d.compose(&d, &g).unwrap(), GradedAutomorphism::Identity);
        let two = GradedAutomorphism::scale(FieldScalar::Rat(rat_int(2)));
        let three = GradedAutomorphism::scale(FieldScalar::Rat(rat_int(3)));
        assert_eq!(
            two.compose(&three, &g).unwrap(),
            GradedAutomorphism::scale(FieldScalar::Rat(rat_int(6)))
        );
        // delta is scale(-1) on type-I algebras
        assert_eq!(
            d.compose(&two, &g).unwrap(),
            GradedAutomorphism::scale(FieldScalar::Rat(rat_int(-2)))
        );
    }
}
