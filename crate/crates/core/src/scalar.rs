//! Exact coefficient fields.
//!
//! Three pluggable fields are supported: the rationals, cyclotomic
//! extensions `Q(zeta_M)` represented as polynomial residues modulo the
//! M-th cyclotomic polynomial, and univariate rational functions `Q(c)` in
//! one formal parameter written `c`. Rationals embed into the other two
//! fields, so rational structure constants promote lazily wherever a
//! computation runs over a larger field.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::CoreError;

/// Exact rational number.
pub type Rat = BigRational;

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parse "p/q" or "p" into an exact rational.
pub fn parse_rat(s: &str) -> Result<Rat, CoreError> {
    let s = s.trim();
    let mk_err = || CoreError::Scalar(format!("malformed rational '{s}'"));
    if let Some((p, q)) = s.split_once('/') {
        let num: BigInt = p.trim().parse().map_err(|_| mk_err())?;
        let den: BigInt = q.trim().parse().map_err(|_| mk_err())?;
        if den.is_zero() {
            return Err(mk_err());
        }
        Ok(Rat::new(num, den))
    } else {
        let num: BigInt = s.parse().map_err(|_| mk_err())?;
        Ok(Rat::from_integer(num))
    }
}

/// Format a rational as "p/q" (or "p" when the denominator is one).
pub fn rat_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

// ---------------------------------------------------------------------------
// Univariate polynomials over Q
// ---------------------------------------------------------------------------

/// Dense univariate polynomial over the rationals (no trailing zeros).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QPoly(pub Vec<Rat>);

impl QPoly {
    pub fn zero() -> Self {
        QPoly(Vec::new())
    }

    pub fn constant(c: Rat) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            QPoly(vec![c])
        }
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    /// The generator `c`.
    pub fn var() -> Self {
        QPoly(vec![Rat::zero(), Rat::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        if self.0.is_empty() {
            None
        } else {
            Some(self.0.len() - 1)
        }
    }

    fn trim(mut v: Vec<Rat>) -> Self {
        while v.last().map(|c| c.is_zero()).unwrap_or(false) {
            v.pop();
        }
        QPoly(v)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.0.len().max(other.0.len());
        let mut v = vec![Rat::zero(); n];
        for (i, c) in self.0.iter().enumerate() {
            v[i] += c;
        }
        for (i, c) in other.0.iter().enumerate() {
            v[i] += c;
        }
        Self::trim(v)
    }

    pub fn neg(&self) -> Self {
        QPoly(self.0.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut v = vec![Rat::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                if !b.is_zero() {
                    v[i + j] += a * b;
                }
            }
        }
        Self::trim(v)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QPoly(self.0.iter().map(|a| a * c).collect())
    }

    /// Euclidean division; the divisor must be nonzero.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut r = self.0.clone();
        let dd = d.0.len() - 1;
        let lead = d.0.last().unwrap().clone();
        if r.len() < d.0.len() {
            return (Self::zero(), Self::trim(r));
        }
        let mut q = vec![Rat::zero(); r.len() - dd];
        while r.len() >= d.0.len() && !r.is_empty() {
            let k = r.len() - d.0.len();
            let coef = r.last().unwrap() / &lead;
            q[k] = coef.clone();
            for (i, c) in d.0.iter().enumerate() {
                let t = &coef * c;
                r[k + i] -= t;
            }
            while r.last().map(|c| c.is_zero()).unwrap_or(false) {
                r.pop();
            }
        }
        (Self::trim(q), Self::trim(r))
    }

    /// Monic gcd via the Euclidean algorithm.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn monic(&self) -> Self {
        match self.0.last() {
            None => Self::zero(),
            Some(l) => {
                let inv = Rat::one() / l;
                self.scale(&inv)
            }
        }
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Render with `v` as the variable name, e.g. `c^2 - 1/2*c + 3`.
    pub fn display(&self, v: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign_neg = c.is_negative();
            if out.is_empty() {
                if sign_neg {
                    out.push('-');
                }
            } else if sign_neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let body = match k {
                0 => rat_string(&mag),
                1 if mag.is_one() => v.to_string(),
                1 => format!("{}*{}", rat_string(&mag), v),
                _ if mag.is_one() => format!("{v}^{k}"),
                _ => format!("{}*{}^{}", rat_string(&mag), v, k),
            };
            out.push_str(&body);
        }
        out
    }
}

/// The M-th cyclotomic polynomial, exactly, by recursive division of
/// `x^M - 1` by the lower-order cyclotomic polynomials.
pub fn cyclotomic_polynomial(m: u32) -> QPoly {
    assert!(m >= 1);
    let mut f = {
        let mut v = vec![Rat::zero(); m as usize + 1];
        v[0] = -Rat::one();
        v[m as usize] = Rat::one();
        QPoly(v)
    };
    for d in 1..m {
        if m % d == 0 {
            let (q, r) = f.div_rem(&cyclotomic_polynomial(d));
            debug_assert!(r.is_zero());
            f = q;
        }
    }
    f
}

// ---------------------------------------------------------------------------
// FieldScalar
// ---------------------------------------------------------------------------

/// Tag identifying one of the three coefficient fields.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum FieldKind {
    /// The rationals.
    Rational,
    /// `Q(zeta_M)` as `Q[z]/Phi_M(z)`.
    Cyclotomic(u32),
    /// Rational functions `Q(c)` in the formal parameter `c`.
    RatFun,
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldKind::Rational => write!(f, "Q"),
            FieldKind::Cyclotomic(m) => write!(f, "cyclotomic:{m}"),
            FieldKind::RatFun => write!(f, "ratfun-c"),
        }
    }
}

/// A scalar in one of the three exact fields.
///
/// Cyclotomic residues are kept reduced modulo `Phi_M`; rational functions
/// are kept in lowest terms with monic denominator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldScalar {
    Rat(Rat),
    Cyc { order: u32, residue: QPoly },
    Fun { num: QPoly, den: QPoly },
}

impl FieldScalar {
    pub fn kind(&self) -> FieldKind {
        match self {
            FieldScalar::Rat(_) => FieldKind::Rational,
            FieldScalar::Cyc { order, .. } => FieldKind::Cyclotomic(*order),
            FieldScalar::Fun { .. } => FieldKind::RatFun,
        }
    }

    pub fn zero(kind: FieldKind) -> Self {
        Self::from_rat(Rat::zero(), kind)
    }

    pub fn one(kind: FieldKind) -> Self {
        Self::from_rat(Rat::one(), kind)
    }

    pub fn from_rat(r: Rat, kind: FieldKind) -> Self {
        match kind {
            FieldKind::Rational => FieldScalar::Rat(r),
            FieldKind::Cyclotomic(m) => FieldScalar::Cyc {
                order: m,
                residue: QPoly::constant(r),
            },
            FieldKind::RatFun => FieldScalar::Fun {
                num: QPoly::constant(r),
                den: QPoly::one(),
            },
        }
    }

    pub fn from_int(n: i64, kind: FieldKind) -> Self {
        Self::from_rat(rat_int(n), kind)
    }

    /// The formal parameter `c` of the rational-function field.
    pub fn fun_c() -> Self {
        FieldScalar::Fun {
            num: QPoly::var(),
            den: QPoly::one(),
        }
    }

    /// `zeta_M^i` in the given field, when the field contains it.
    pub fn root_of_unity(kind: FieldKind, m: u32, i: u32) -> Result<Self, CoreError> {
        if m == 0 {
            return Err(CoreError::Scalar("root of unity of order 0".into()));
        }
        let i = i % m;
        match kind {
            FieldKind::Rational | FieldKind::RatFun => match (m, i) {
                (_, 0) => Ok(Self::one(kind)),
                (2, 1) => Ok(Self::from_int(-1, kind)),
                _ => Err(CoreError::Unsupported(format!(
                    "field {kind} does not contain a primitive {m}-th root of unity"
                ))),
            },
            FieldKind::Cyclotomic(ord) => {
                if ord % m != 0 {
                    return Err(CoreError::Unsupported(format!(
                        "cyclotomic:{ord} does not contain zeta_{m}"
                    )));
                }
                let e = ((ord / m) * i) % ord;
                let mut v = vec![Rat::zero(); e as usize + 1];
                v[e as usize] = Rat::one();
                Ok(Self::reduce_cyc(ord, QPoly::trim_pub(v)))
            }
        }
    }

    fn reduce_cyc(order: u32, p: QPoly) -> Self {
        let phi = cyclotomic_polynomial(order);
        let (_, r) = p.div_rem(&phi);
        FieldScalar::Cyc { order, residue: r }
    }

    fn reduce_fun(num: QPoly, den: QPoly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return FieldScalar::Fun {
                num: QPoly::zero(),
                den: QPoly::one(),
            };
        }
        let g = num.gcd(&den);
        let (num, r1) = num.div_rem(&g);
        debug_assert!(r1.is_zero());
        let (den, r2) = den.div_rem(&g);
        debug_assert!(r2.is_zero());
        let lead = den.0.last().unwrap().clone();
        let inv = Rat::one() / lead;
        FieldScalar::Fun {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldScalar::Rat(r) => r.is_zero(),
            FieldScalar::Cyc { residue, .. } => residue.is_zero(),
            FieldScalar::Fun { num, .. } => num.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        self == &Self::one(self.kind())
    }

    /// Promote to a common field; rationals embed everywhere.
    pub fn unify(a: &Self, b: &Self) -> Result<(Self, Self), CoreError> {
        match (a.kind(), b.kind()) {
            (x, y) if x == y => Ok((a.clone(), b.clone())),
            (FieldKind::Rational, k) => Ok((a.promote(k)?, b.clone())),
            (_, FieldKind::Rational) => Ok((a.clone(), b.promote(a.kind())?)),
            _ => Err(CoreError::FieldMismatch),
        }
    }

    pub fn promote(&self, kind: FieldKind) -> Result<Self, CoreError> {
        if self.kind() == kind {
            return Ok(self.clone());
        }
        match self {
            FieldScalar::Rat(r) => Ok(Self::from_rat(r.clone(), kind)),
            _ => Err(CoreError::FieldMismatch),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let (a, b) = Self::unify(self, other).expect("field mismatch in scalar add");
        match (a, b) {
            (FieldScalar::Rat(x), FieldScalar::Rat(y)) => FieldScalar::Rat(x + y),
            (FieldScalar::Cyc { order, residue: x }, FieldScalar::Cyc { residue: y, .. }) => {
                FieldScalar::Cyc {
                    order,
                    residue: x.add(&y),
                }
            }
            (FieldScalar::Fun { num: n1, den: d1 }, FieldScalar::Fun { num: n2, den: d2 }) => {
                Self::reduce_fun(n1.mul(&d2).add(&n2.mul(&d1)), d1.mul(&d2))
            }
            _ => unreachable!(),
        }
    }

    pub fn neg(&self) -> Self {
        match self {
            FieldScalar::Rat(r) => FieldScalar::Rat(-r),
            FieldScalar::Cyc { order, residue } => FieldScalar::Cyc {
                order: *order,
                residue: residue.neg(),
            },
            FieldScalar::Fun { num, den } => FieldScalar::Fun {
                num: num.neg(),
                den: den.clone(),
            },
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = Self::unify(self, other).expect("field mismatch in scalar mul");
        match (a, b) {
            (FieldScalar::Rat(x), FieldScalar::Rat(y)) => FieldScalar::Rat(x * y),
            (FieldScalar::Cyc { order, residue: x }, FieldScalar::Cyc { residue: y, .. }) => {
                Self::reduce_cyc(order, x.mul(&y))
            }
            (FieldScalar::Fun { num: n1, den: d1 }, FieldScalar::Fun { num: n2, den: d2 }) => {
                Self::reduce_fun(n1.mul(&n2), d1.mul(&d2))
            }
            _ => unreachable!(),
        }
    }

    pub fn mul_rat(&self, r: &Rat) -> Self {
        self.mul(&Self::from_rat(r.clone(), self.kind()))
    }

    pub fn inv(&self) -> Result<Self, CoreError> {
        if self.is_zero() {
            return Err(CoreError::Scalar("division by zero".into()));
        }
        match self {
            FieldScalar::Rat(r) => Ok(FieldScalar::Rat(Rat::one() / r)),
            FieldScalar::Cyc { order, residue } => {
                let phi = cyclotomic_polynomial(*order);
                let (g, s, _) = ext_gcd(residue, &phi);
                // Phi_M is squarefree and residue != 0, so g is a nonzero constant.
                let g0 = g.0.first().cloned().unwrap_or_else(Rat::zero);
                if g.degree() != Some(0) || g0.is_zero() {
                    return Err(CoreError::Scalar("non-invertible cyclotomic residue".into()));
                }
                let inv = s.scale(&(Rat::one() / g0));
                Ok(Self::reduce_cyc(*order, inv))
            }
            FieldScalar::Fun { num, den } => Ok(Self::reduce_fun(den.clone(), num.clone())),
        }
    }

    pub fn div(&self, other: &Self) -> Result<Self, CoreError> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, e: i64) -> Result<Self, CoreError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one(self.kind());
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    /// Evaluate a rational-function scalar at a rational point; errors on a
    /// pole. Rational scalars evaluate to themselves.
    pub fn eval_at_c(&self, x: &Rat) -> Result<Rat, CoreError> {
        match self {
            FieldScalar::Rat(r) => Ok(r.clone()),
            FieldScalar::Fun { num, den } => {
                let d = den.eval(x);
                if d.is_zero() {
                    return Err(CoreError::NormalizationError(format!(
                        "pole at c = {}",
                        rat_string(x)
                    )));
                }
                Ok(num.eval(x) / d)
            }
            FieldScalar::Cyc { .. } => Err(CoreError::Unsupported(
                "cannot evaluate a cyclotomic scalar at a rational point".into(),
            )),
        }
    }

    /// The underlying rational when the scalar is (a copy of) a rational.
    pub fn as_rat(&self) -> Option<Rat> {
        match self {
            FieldScalar::Rat(r) => Some(r.clone()),
            FieldScalar::Cyc { residue, .. } => match residue.degree() {
                None => Some(Rat::zero()),
                Some(0) => Some(residue.0[0].clone()),
                _ => None,
            },
            FieldScalar::Fun { num, den } => {
                if den.degree() == Some(0) && num.degree().map(|d| d == 0).unwrap_or(true) {
                    let d = &den.0[0];
                    Some(num.0.first().cloned().unwrap_or_else(Rat::zero) / d)
                } else {
                    None
                }
            }
        }
    }
}

impl QPoly {
    fn trim_pub(v: Vec<Rat>) -> QPoly {
        QPoly::trim(v)
    }
}

/// Extended Euclid over Q[x]: returns (g, s, t) with s*a + t*b = g.
fn ext_gcd(a: &QPoly, b: &QPoly) -> (QPoly, QPoly, QPoly) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (QPoly::one(), QPoly::zero());
    let (mut t0, mut t1) = (QPoly::zero(), QPoly::one());
    while !r1.is_zero() {
        let (q, r) = r0.div_rem(&r1);
        let s = s0.sub(&q.mul(&s1));
        let t = t0.sub(&q.mul(&t1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
        t0 = t1;
        t1 = t;
    }
    (r0, s0, t0)
}

impl fmt::Display for FieldScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldScalar::Rat(r) => write!(f, "{}", rat_string(r)),
            FieldScalar::Cyc { residue, .. } => write!(f, "{}", residue.display("z")),
            FieldScalar::Fun { num, den } => {
                if den.degree() == Some(0) {
                    write!(f, "{}", num.display("c"))
                } else {
                    write!(f, "({})/({})", num.display("c"), den.display("c"))
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polys() {
        // Phi_1 = x - 1, Phi_2 = x + 1, Phi_3 = x^2 + x + 1, Phi_4 = x^2 + 1,
        // Phi_6 = x^2 - x + 1, Phi_12 = x^4 - x^2 + 1.
        assert_eq!(cyclotomic_polynomial(1).0, vec![rat_int(-1), rat_int(1)]);
        assert_eq!(cyclotomic_polynomial(2).0, vec![rat_int(1), rat_int(1)]);
        assert_eq!(
            cyclotomic_polynomial(3).0,
            vec![rat_int(1), rat_int(1), rat_int(1)]
        );
        assert_eq!(
            cyclotomic_polynomial(12).0,
            vec![rat_int(1), rat_int(0), rat_int(-1), rat_int(0), rat_int(1)]
        );
    }

    #[test]
    fn cyclotomic_arithmetic() {
        let k = FieldKind::Cyclotomic(3);
        let z = FieldScalar::root_of_unity(k, 3, 1).unwrap();
        let z2 = FieldScalar::root_of_unity(k, 3, 2).unwrap();
        // 1 + z + z^2 = 0
        let sum = FieldScalar::one(k).add(&z).add(&z2);
        assert!(sum.is_zero());
        // z * z^2 = 1
        assert!(z.mul(&z2).is_one());
        // inverse
        assert_eq!(z.inv().unwrap(), z2);
    }

    #[test]
    fn ratfun_arithmetic() {
        let c = FieldScalar::fun_c();
        let one = FieldScalar::one(FieldKind::RatFun);
        // c/(1-c) + 1 = 1/(1-c)
        let lhs = c.div(&one.sub(&c)).unwrap().add(&one);
        let rhs = one.div(&one.sub(&c)).unwrap();
        assert_eq!(lhs, rhs);
        // (c^2-1)/(c-1) reduces to c+1
        let c2m1 = c.mul(&c).sub(&one);
        let cm1 = c.sub(&one);
        let red = c2m1.div(&cm1).unwrap();
        assert_eq!(red, c.add(&one));
        // pole detection at c = 1
        assert!(rhs.eval_at_c(&rat_int(1)).is_err());
        assert_eq!(red.eval_at_c(&rat_int(1)).unwrap(), rat_int(2));
    }

    #[test]
    fn rational_parse_and_display() {
        assert_eq!(parse_rat("-3/6").unwrap(), rat(-1, 2));
        assert_eq!(rat_string(&rat(-1, 2)), "-1/2");
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("q").is_err());
    }

    #[test]
    fn unify_promotes_rationals() {
        let a = FieldScalar::Rat(rat_int(2));
        let c = FieldScalar::fun_c();
        let s = a.add(&c);
        assert_eq!(s.kind(), FieldKind::RatFun);
        let bad = FieldScalar::unify(
            &FieldScalar::one(FieldKind::Cyclotomic(3)),
            &FieldScalar::one(FieldKind::RatFun),
        );
        assert!(bad.is_err());
    }
}
