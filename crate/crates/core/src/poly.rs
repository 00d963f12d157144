//! Supersymmetric polynomials on a Cartan (sub)space.
//!
//! Even variables have degree 1, odd variables degree 1/2 and square to
//! zero. Degrees are stored doubled so everything stays integral.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::CoreError;
use crate::scalar::{FieldKind, FieldScalar, Rat};

/// Variable names of one polynomial space, shared by its elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarSpace {
    pub even: Vec<String>,
    pub odd: Vec<String>,
}

impl VarSpace {
    pub fn even_only(names: Vec<String>) -> Self {
        VarSpace {
            even: names,
            odd: Vec::new(),
        }
    }
}

/// Monomial: even exponents plus an odd-subset mask.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct PolyMono {
    pub even: Vec<u32>,
    pub odd: u64,
}

impl PolyMono {
    pub fn unit(n_even: usize) -> Self {
        PolyMono {
            even: vec![0; n_even],
            odd: 0,
        }
    }

    /// Doubled degree: even variables count 2, odd variables count 1.
    pub fn degree2(&self) -> u64 {
        2 * self.even.iter().map(|&e| e as u64).sum::<u64>() + self.odd.count_ones() as u64
    }
}

/// Sign of merging two odd masks (None when they intersect).
fn odd_merge_sign(a: u64, b: u64) -> Option<i8> {
    if a & b != 0 {
        return None;
    }
    // count inversions: bits of b that must pass over higher bits of a
    let mut sign = 0u32;
    let mut bb = b;
    while bb != 0 {
        let bit = bb.trailing_zeros();
        bb &= bb - 1;
        let higher_a = a >> (bit + 1);
        sign += higher_a.count_ones();
    }
    Some(if sign % 2 == 0 { 1 } else { -1 })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuperPolynomial {
    pub space: Arc<VarSpace>,
    pub field: FieldKind,
    pub terms: BTreeMap<PolyMono, FieldScalar>,
}

impl SuperPolynomial {
    pub fn zero(space: Arc<VarSpace>, field: FieldKind) -> Self {
        SuperPolynomial {
            space,
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(space: Arc<VarSpace>, c: FieldScalar) -> Self {
        let mut p = Self::zero(space, c.kind());
        p.add_term(PolyMono::unit(p.space.even.len()), c);
        p
    }

    pub fn even_var(space: Arc<VarSpace>, idx: usize, field: FieldKind) -> Self {
        let mut p = Self::zero(space, field);
        let mut m = PolyMono::unit(p.space.even.len());
        m.even[idx] = 1;
        p.add_term(m, FieldScalar::one(field));
        p
    }

    pub fn odd_var(space: Arc<VarSpace>, idx: usize, field: FieldKind) -> Self {
        let mut p = Self::zero(space, field);
        let mut m = PolyMono::unit(p.space.even.len());
        m.odd = 1 << idx;
        p.add_term(m, FieldScalar::one(field));
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: PolyMono, c: FieldScalar) {
        if c.is_zero() {
            return;
        }
        let c = c.promote(self.field).expect("poly term field");
        match self.terms.get_mut(&m) {
            Some(old) => {
                let s = old.add(&c);
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn unify_field(&self, other: &Self) -> Result<FieldKind, CoreError> {
        crate::pbw::try_unify_kind(self.field, other.field)
    }

    pub fn add(&self, other: &Self) -> Result<Self, CoreError> {
        if self.space != other.space {
            return Err(CoreError::Unsupported("polynomial spaces differ".into()));
        }
        let field = self.unify_field(other)?;
        let mut out = Self::zero(self.space.clone(), field);
        for (m, c) in self.terms.iter().chain(other.terms.iter()) {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = v.neg();
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Result<Self, CoreError> {
        self.add(&other.neg())
    }

    pub fn scaled(&self, c: &FieldScalar) -> Self {
        let field = crate::pbw::try_unify_kind(self.field, c.kind()).expect("scale field");
        let mut out = Self::zero(self.space.clone(), field);
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v.mul(c));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self, CoreError> {
        if self.space != other.space {
            return Err(CoreError::Unsupported("polynomial spaces differ".into()));
        }
        let field = self.unify_field(other)?;
        let mut out = Self::zero(self.space.clone(), field);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let Some(sign) = odd_merge_sign(ma.odd, mb.odd) else {
                    continue;
                };
                let even: Vec<u32> = ma.even.iter().zip(&mb.even).map(|(a, b)| a + b).collect();
                let m = PolyMono {
                    even,
                    odd: ma.odd | mb.odd,
                };
                let mut c = ca.mul(cb);
                if sign < 0 {
                    c = c.neg();
                }
                out.add_term(m, c);
            }
        }
        Ok(out)
    }

    /// Maximal doubled degree; zero polynomial reports 0.
    pub fn degree2(&self) -> u64 {
        self.terms.keys().map(|m| m.degree2()).max().unwrap_or(0)
    }

    /// The sum of the top-degree monomials.
    pub fn leading_part(&self) -> Self {
        let d = self.degree2();
        let mut out = Self::zero(self.space.clone(), self.field);
        for (m, c) in &self.terms {
            if m.degree2() == d {
                out.add_term(m.clone(), c.clone());
            }
        }
        out
    }

    /// Evaluate a purely even polynomial at a point given in even-variable
    /// coordinates.
    pub fn eval_even(&self, lam: &[FieldScalar]) -> Result<FieldScalar, CoreError> {
        let mut acc = FieldScalar::zero(self.field);
        for (m, c) in &self.terms {
            if m.odd != 0 {
                return Err(CoreError::Unsupported(
                    "cannot evaluate a polynomial with odd variables".into(),
                ));
            }
            let mut t = c.clone();
            for (i, &e) in m.even.iter().enumerate() {
                for _ in 0..e {
                    t = t.mul(&lam[i]);
                }
            }
            acc = acc.add(&t);
        }
        Ok(acc)
    }

    pub fn eval_even_rat(&self, lam: &[Rat]) -> Result<FieldScalar, CoreError> {
        let pt: Vec<FieldScalar> = lam
            .iter()
            .map(|r| FieldScalar::from_rat(r.clone(), self.field))
            .collect();
        self.eval_even(&pt)
    }

    /// Substitute each even variable by an affine expression
    /// `sign * var(perm) + shift` in the same space. Odd variables are
    /// untouched (the substitutions used here are purely even).
    pub fn substitute_even_affine(
        &self,
        perm: &[usize],
        signs: &[i8],
        shifts: &[Rat],
    ) -> Result<Self, CoreError> {
        let n = self.space.even.len();
        let mut out = Self::zero(self.space.clone(), self.field);
        for (m, c) in &self.terms {
            // product over variables of (sign_j x_{perm_j} + shift_j)^{e_j}
            let mut acc = Self::constant(self.space.clone(), c.clone());
            for (j, &e) in m.even.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let mut lin = Self::zero(self.space.clone(), self.field);
                let mut vm = PolyMono::unit(n);
                vm.even[perm[j]] = 1;
                let one = FieldScalar::one(self.field);
                lin.add_term(vm, if signs[j] < 0 { one.neg() } else { one });
                lin.add_term(
                    PolyMono::unit(n),
                    FieldScalar::from_rat(shifts[j].clone(), self.field),
                );
                for _ in 0..e {
                    acc = acc.mul(&lin)?;
                }
            }
            if m.odd != 0 {
                let mut odd = Self::zero(self.space.clone(), self.field);
                let mut om = PolyMono::unit(n);
                om.odd = m.odd;
                odd.add_term(om, FieldScalar::one(self.field));
                acc = acc.mul(&odd)?;
            }
            out = out.add(&acc)?;
        }
        Ok(out)
    }

    /// Exact division by a polynomial of degree one in some even variable.
    /// Returns `None` when the division leaves a remainder.
    pub fn divide_exact_linear(&self, lin: &Self) -> Option<Self> {
        if lin.terms.iter().any(|(m, _)| m.odd != 0) {
            return None;
        }
        // pick a pivot variable with nonzero linear coefficient
        let mut pivot = None;
        for (m, c) in &lin.terms {
            if m.degree2() == 2 {
                let j = m.even.iter().position(|&e| e == 1)?;
                if m.even.iter().map(|&e| e as u64).sum::<u64>() != 1 {
                    return None; // not linear
                }
                pivot = Some((j, c.clone()));
                break;
            } else if m.degree2() > 2 {
                return None;
            }
        }
        let (j, lead) = pivot?;
        let lead_inv = lead.inv().ok()?;
        let mut rem = self.clone();
        let mut quot = Self::zero(self.space.clone(), self.field);
        loop {
            // highest exponent of variable j present
            let Some((m, c)) = rem
                .terms
                .iter()
                .filter(|(m, _)| m.even[j] > 0)
                .max_by_key(|(m, _)| m.even[j])
                .map(|(m, c)| (m.clone(), c.clone()))
            else {
                break;
            };
            let mut qm = m.clone();
            qm.even[j] -= 1;
            let qc = c.mul(&lead_inv);
            let mut qpart = Self::zero(self.space.clone(), self.field);
            qpart.add_term(qm, qc);
            let prod = qpart.mul(lin).ok()?;
            rem = rem.sub(&prod).ok()?;
            quot = quot.add(&qpart).ok()?;
        }
        if rem.is_zero() {
            Some(quot)
        } else {
            None
        }
    }

    pub fn display(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (m, c) in &self.terms {
            let mut factors = Vec::new();
            for (i, &e) in m.even.iter().enumerate() {
                if e == 1 {
                    factors.push(self.space.even[i].clone());
                } else if e > 1 {
                    factors.push(format!("{}^{}", self.space.even[i], e));
                }
            }
            for (i, name) in self.space.odd.iter().enumerate() {
                if m.odd & (1 << i) != 0 {
                    factors.push(name.clone());
                }
            }
            if factors.is_empty() {
                parts.push(format!("({c})"));
            } else {
                parts.push(format!("({})*{}", c, factors.join("*")));
            }
        }
        parts.join(" + ")
    }
}

/// The even factor and top odd monomial of an image in the invariant part
/// `S(a_even) * top odd monomial`.
#[derive(Debug, Clone)]
pub struct HCSplit {
    pub even_part: SuperPolynomial,
    /// Mask of the full odd monomial factored out.
    pub xi_mask: u64,
}

/// Factor `p = even_part * xi` where `xi` is the ordered product of all
/// odd variables. Fails unless every monomial carries the full mask.
pub fn split_top_odd(p: &SuperPolynomial) -> Result<HCSplit, CoreError> {
    let n_odd = p.space.odd.len();
    let full: u64 = if n_odd == 0 { 0 } else { (1u64 << n_odd) - 1 };
    let mut even_part = SuperPolynomial::zero(p.space.clone(), p.field);
    for (m, c) in &p.terms {
        if m.odd != full {
            return Err(CoreError::NotGhostImage);
        }
        // p = q * xi with q even: the merge sign of (q-mono, xi) is +1
        // because q-monomials carry no odd variables.
        let qm = PolyMono {
            even: m.even.clone(),
            odd: 0,
        };
        even_part.add_term(qm, c.clone());
    }
    Ok(HCSplit {
        even_part,
        xi_mask: full,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat_int;

    fn space2() -> Arc<VarSpace> {
        Arc::new(VarSpace {
            even: vec!["h1".into(), "h2".into()],
            odd: vec!["q1".into(), "q2".into()],
        })
    }

    fn fs(n: i64) -> FieldScalar {
        FieldScalar::Rat(rat_int(n))
    }

    #[test]
    fn odd_variables_anticommute() {
        let sp = space2();
        let q1 = SuperPolynomial::odd_var(sp.clone(), 0, FieldKind::Rational);
        let q2 = SuperPolynomial::odd_var(sp.clone(), 1, FieldKind::Rational);
        let a = q1.mul(&q2).unwrap();
        let b = q2.mul(&q1).unwrap();
        assert_eq!(a, b.neg());
        assert!(q1.mul(&q1).unwrap().is_zero());
        assert_eq!(a.degree2(), 2);
    }

    #[test]
    fn division_by_linear() {
        let sp = Arc::new(VarSpace::even_only(vec!["h1".into(), "h2".into()]));
        let h1 = SuperPolynomial::even_var(sp.clone(), 0, FieldKind::Rational);
        let h2 = SuperPolynomial::even_var(sp.clone(), 1, FieldKind::Rational);
        let one = SuperPolynomial::constant(sp.clone(), fs(1));
        // (h1 + h2)(h1 + 1) divides correctly
        let f1 = h1.add(&h2).unwrap();
        let f2 = h1.add(&one).unwrap();
        let p = f1.mul(&f2).unwrap();
        let q = p.divide_exact_linear(&f1).unwrap();
        assert_eq!(q, f2);
        assert!(p.divide_exact_linear(&h2).is_none());
    }

    #[test]
    fn split_requires_full_mask() {
        let sp = space2();
        let q1 = SuperPolynomial::odd_var(sp.clone(), 0, FieldKind::Rational);
        let q2 = SuperPolynomial::odd_var(sp.clone(), 1, FieldKind::Rational);
        let h1 = SuperPolynomial::even_var(sp.clone(), 0, FieldKind::Rational);
        let xi = q1.mul(&q2).unwrap();
        let p = h1.mul(&xi).unwrap();
        let s = split_top_odd(&p).unwrap();
        assert_eq!(s.even_part, h1);
        assert!(split_top_odd(&q1).is_err());
        // zero splits as (0, xi)
        let z = SuperPolynomial::zero(sp, FieldKind::Rational);
        assert!(split_top_odd(&z).unwrap().even_part.is_zero());
    }

    #[test]
    fn affine_substitution() {
        // p = h1: swap coordinates with shift: h1 -> h2 + 1
        let sp = Arc::new(VarSpace::even_only(vec!["h1".into(), "h2".into()]));
        let h1 = SuperPolynomial::even_var(sp.clone(), 0, FieldKind::Rational);
        let out = h1
            .substitute_even_affine(&[1, 0], &[1, 1], &[rat_int(1), rat_int(0)])
            .unwrap();
        let h2 = SuperPolynomial::even_var(sp.clone(), 1, FieldKind::Rational);
        let one = SuperPolynomial::constant(sp, fs(1));
        assert_eq!(out, h2.add(&one).unwrap());
    }

    #[test]
    fn evaluation() {
        let sp = Arc::new(VarSpace::even_only(vec!["h1".into(), "h2".into()]));
        let h1 = SuperPolynomial::even_var(sp.clone(), 0, FieldKind::Rational);
        let h2 = SuperPolynomial::even_var(sp, 1, FieldKind::Rational);
        let p = h1.mul(&h2).unwrap().add(&h1).unwrap();
        let v = p.eval_even_rat(&[rat_int(3), rat_int(5)]).unwrap();
        assert_eq!(v, fs(18));
    }
}
