//! Exact arithmetic in the universal enveloping algebra.
//!
//! Elements are sparse maps from PBW monomials (exponent vectors aligned
//! with a declared generator ordering, odd exponents at most one) to field
//! scalars. The rewriter straightens arbitrary words by supercommutator
//! swaps and the eager odd-square rule `x^2 = [x,x]/2`, memoizing word
//! normal forms per engine instance. Normal forms of words are
//! field-independent (structure constants are rational), so the memo is
//! shared across coefficient fields.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::rc::Rc;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::cell::RefCell;

use num_traits::Zero;

use crate::algebra::{LieSuperalgebra, Parity};
use crate::aut::GradedAutomorphism;
use crate::error::CoreError;
use crate::scalar::{rat, FieldKind, FieldScalar, Rat};

/// A total ordering of the basis: `perm[position] = basis index`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorOrdering {
    pub name: String,
    pub perm: Vec<usize>,
    pub pos_of: Vec<usize>,
}

impl GeneratorOrdering {
    pub fn new(name: &str, perm: Vec<usize>) -> Self {
        let mut pos_of = vec![0; perm.len()];
        let mut seen = vec![false; perm.len()];
        for (pos, &idx) in perm.iter().enumerate() {
            assert!(idx < perm.len() && !seen[idx], "ordering must be a bijection");
            seen[idx] = true;
            pos_of[idx] = pos;
        }
        GeneratorOrdering {
            name: name.to_string(),
            perm,
            pos_of,
        }
    }

    /// Declaration order of the basis.
    pub fn declaration(alg: &LieSuperalgebra) -> Self {
        Self::new("declaration", (0..alg.dim()).collect())
    }

    /// Odd generators first (declaration order), even generators last.
    /// This isolates `U(g) g_even` coset reduction as a suffix block.
    pub fn coset(alg: &LieSuperalgebra) -> Self {
        let mut perm = alg.odd_indices();
        perm.extend(alg.even_indices());
        Self::new("coset", perm)
    }

    /// Number of trailing positions occupied by the given index set, if it
    /// indeed forms a suffix block.
    pub fn suffix_block(&self, sub: &[usize]) -> Option<usize> {
        let k = sub.len();
        let n = self.perm.len();
        if k > n {
            return None;
        }
        let tail = &self.perm[n - k..];
        if sub.iter().all(|i| tail.contains(i)) {
            Some(n - k)
        } else {
            None
        }
    }
}

/// PBW monomial: exponents aligned with the ordering positions.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct PbwMonomial {
    pub exps: Vec<u32>,
}

impl PbwMonomial {
    pub fn unit(dim: usize) -> Self {
        PbwMonomial {
            exps: vec![0; dim],
        }
    }

    pub fn is_unit(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn to_word(&self, ord: &GeneratorOrdering) -> Vec<u16> {
        let mut w = Vec::new();
        for (pos, &e) in self.exps.iter().enumerate() {
            for _ in 0..e {
                w.push(ord.perm[pos] as u16);
            }
        }
        w
    }

    pub fn parity(&self, alg: &LieSuperalgebra, ord: &GeneratorOrdering) -> Parity {
        let mut odd = 0u32;
        for (pos, &e) in self.exps.iter().enumerate() {
            if alg.parity(ord.perm[pos]) == Parity::Odd {
                odd += e;
            }
        }
        if odd % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// Filtration degree: even factors weigh 2, odd factors weigh 1.
    pub fn filtration_degree(&self, alg: &LieSuperalgebra, ord: &GeneratorOrdering) -> u64 {
        let mut d = 0u64;
        for (pos, &e) in self.exps.iter().enumerate() {
            let w = if alg.parity(ord.perm[pos]) == Parity::Even { 2 } else { 1 };
            d += w * e as u64;
        }
        d
    }

    pub fn weight(&self, alg: &LieSuperalgebra, ord: &GeneratorOrdering) -> Vec<Rat> {
        let mut w = vec![Rat::zero(); alg.cartan_even.len()];
        for (pos, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let bw = &alg.basis[ord.perm[pos]].weight;
            for (t, c) in bw.iter().enumerate() {
                w[t] += c * Rat::from_integer(e.into());
            }
        }
        w
    }

    pub fn display(&self, alg: &LieSuperalgebra, ord: &GeneratorOrdering) -> String {
        if self.is_unit() {
            return "1".into();
        }
        let mut parts = Vec::new();
        for (pos, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let name = &alg.basis[ord.perm[pos]].name;
            if e == 1 {
                parts.push(name.clone());
            } else {
                parts.push(format!("{name}^{e}"));
            }
        }
        parts.join("*")
    }
}

/// Sparse element of `U(g)` under a fixed ordering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UEAElement {
    pub ord: Arc<GeneratorOrdering>,
    pub field: FieldKind,
    pub terms: BTreeMap<PbwMonomial, FieldScalar>,
}

impl UEAElement {
    pub fn zero(ord: Arc<GeneratorOrdering>, field: FieldKind) -> Self {
        UEAElement {
            ord,
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: PbwMonomial, c: FieldScalar) {
        if c.is_zero() {
            return;
        }
        let c = c.promote(self.field).expect("term field");
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

    pub fn scaled(&self, c: &FieldScalar) -> Self {
        let mut out = UEAElement::zero(self.ord.clone(), unify_kind(self.field, c.kind()));
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v.mul(c));
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = v.neg();
        }
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self, CoreError> {
        if self.ord.perm != other.ord.perm {
            return Err(CoreError::OrderingMismatch(
                "cannot add elements under different orderings".into(),
            ));
        }
        let field = try_unify_kind(self.field, other.field)?;
        let mut out = UEAElement::zero(self.ord.clone(), field);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.clone());
        }
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, CoreError> {
        self.add(&other.neg())
    }

    /// Coefficient of the empty monomial.
    pub fn counit(&self) -> FieldScalar {
        let unit = PbwMonomial::unit(self.ord.perm.len());
        self.terms
            .get(&unit)
            .cloned()
            .unwrap_or_else(|| FieldScalar::zero(self.field))
    }

    pub fn parity(&self, alg: &LieSuperalgebra) -> Option<Parity> {
        let mut p = None;
        for m in self.terms.keys() {
            let mp = m.parity(alg, &self.ord);
            match p {
                None => p = Some(mp),
                Some(q) if q == mp => {}
                _ => return None,
            }
        }
        p.or(Some(Parity::Even))
    }

    pub fn filtration_degree(&self, alg: &LieSuperalgebra) -> u64 {
        self.terms
            .keys()
            .map(|m| m.filtration_degree(alg, &self.ord))
            .max()
            .unwrap_or(0)
    }

    /// Common weight of all monomials, or `None` when inhomogeneous.
    pub fn weight(&self, alg: &LieSuperalgebra) -> Option<Vec<Rat>> {
        let mut w = None;
        for m in self.terms.keys() {
            let mw = m.weight(alg, &self.ord);
            match &w {
                None => w = Some(mw),
                Some(v) if *v == mw => {}
                _ => return None,
            }
        }
        w.or_else(|| Some(vec![Rat::zero(); alg.cartan_even.len()]))
    }

    pub fn display(&self, alg: &LieSuperalgebra) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (m, c) in &self.terms {
            if !out.is_empty() {
                out.push_str(" + ");
            }
            out.push_str(&format!("({})*{}", c, m.display(alg, &self.ord)));
        }
        out
    }
}

fn unify_kind(a: FieldKind, b: FieldKind) -> FieldKind {
    try_unify_kind(a, b).expect("field mismatch")
}

pub fn try_unify_kind(a: FieldKind, b: FieldKind) -> Result<FieldKind, CoreError> {
    match (a, b) {
        (x, y) if x == y => Ok(x),
        (FieldKind::Rational, y) => Ok(y),
        (x, FieldKind::Rational) => Ok(x),
        _ => Err(CoreError::FieldMismatch),
    }
}

type RatTerms = BTreeMap<PbwMonomial, Rat>;

/// Rewriting engine bound to one algebra and one ordering.
///
/// The memo cache is per-engine; engines are cheap to create, so callers
/// that want isolation simply construct a fresh one.
pub struct PbwEngine<'g> {
    pub alg: &'g LieSuperalgebra,
    pub ord: Arc<GeneratorOrdering>,
    memo: RefCell<BTreeMap<Vec<u16>, Rc<RatTerms>>>,
}

impl<'g> PbwEngine<'g> {
    pub fn new(alg: &'g LieSuperalgebra, ord: GeneratorOrdering) -> Self {
        assert_eq!(ord.perm.len(), alg.dim());
        PbwEngine {
            alg,
            ord: Arc::new(ord),
            memo: RefCell::new(BTreeMap::new()),
        }
    }

    pub fn coset(alg: &'g LieSuperalgebra) -> Self {
        Self::new(alg, GeneratorOrdering::coset(alg))
    }

    pub fn zero(&self, field: FieldKind) -> UEAElement {
        UEAElement::zero(self.ord.clone(), field)
    }

    pub fn one(&self, field: FieldKind) -> UEAElement {
        let mut e = self.zero(field);
        e.add_term(PbwMonomial::unit(self.alg.dim()), FieldScalar::one(field));
        e
    }

    /// The generator with basis index `i` as an element.
    pub fn gen(&self, i: usize, field: FieldKind) -> UEAElement {
        let mut e = self.zero(field);
        let mut m = PbwMonomial::unit(self.alg.dim());
        m.exps[self.ord.pos_of[i]] = 1;
        e.add_term(m, FieldScalar::one(field));
        e
    }

    /// Normal form of a word of basis indices, with rational coefficients.
    pub fn normal_order_word(&self, w: &[u16]) -> Rc<RatTerms> {
        if let Some(hit) = self.memo.borrow().get(w) {
            return hit.clone();
        }
        let out = self.straighten(w);
        let rc = Rc::new(out);
        self.memo.borrow_mut().insert(w.to_vec(), rc.clone());
        rc
    }

    fn straighten(&self, w: &[u16]) -> RatTerms {
        let dim = self.alg.dim();
        for i in 0..w.len().saturating_sub(1) {
            let a = w[i] as usize;
            let b = w[i + 1] as usize;
            let pa = self.ord.pos_of[a];
            let pb = self.ord.pos_of[b];
            if pa > pb {
                // swap with supercommutator correction:
                // ab = (-1)^{|a||b|} ba + [a,b]
                let sign = self.alg.parity(a).sign_product(self.alg.parity(b));
                let mut out = RatTerms::new();
                let mut swapped = w.to_vec();
                swapped.swap(i, i + 1);
                accumulate(&mut out, &self.normal_order_word(&swapped), &rat(sign as i64, 1));
                for (k, c) in self.alg.bracket_basis(a, b) {
                    let mut shorter: Vec<u16> = Vec::with_capacity(w.len() - 1);
                    shorter.extend_from_slice(&w[..i]);
                    shorter.push(*k as u16);
                    shorter.extend_from_slice(&w[i + 2..]);
                    accumulate(&mut out, &self.normal_order_word(&shorter), c);
                }
                return out;
            }
            if pa == pb && self.alg.parity(a) == Parity::Odd {
                // x^2 = [x,x]/2
                let mut out = RatTerms::new();
                for (k, c) in self.alg.bracket_basis(a, a) {
                    let mut shorter: Vec<u16> = Vec::with_capacity(w.len() - 1);
                    shorter.extend_from_slice(&w[..i]);
                    shorter.push(*k as u16);
                    shorter.extend_from_slice(&w[i + 2..]);
                    accumulate(&mut out, &self.normal_order_word(&shorter), &(c / rat(2, 1)));
                }
                return out;
            }
        }
        // already normal
        let mut m = PbwMonomial::unit(dim);
        for &g in w {
            m.exps[self.ord.pos_of[g as usize]] += 1;
        }
        let mut out = RatTerms::new();
        out.insert(m, Rat::from_integer(1.into()));
        out
    }

    /// Normal-order a word with a scalar coefficient into an element.
    pub fn from_word(&self, w: &[u16], coeff: FieldScalar) -> UEAElement {
        let nf = self.normal_order_word(w);
        let mut out = self.zero(coeff.kind());
        for (m, c) in nf.iter() {
            out.add_term(m.clone(), coeff.mul_rat(c));
        }
        out
    }

    /// Re-express an element (possibly under another ordering) in this
    /// engine's ordering.
    pub fn convert(&self, a: &UEAElement) -> UEAElement {
        if a.ord.perm == self.ord.perm {
            let mut b = a.clone();
            b.ord = self.ord.clone();
            return b;
        }
        let mut out = self.zero(a.field);
        for (m, c) in &a.terms {
            let w = m.to_word(&a.ord);
            let part = self.from_word(&w, c.clone());
            out = out.add(&part).expect("convert add");
        }
        out
    }

    pub fn multiply(&self, a: &UEAElement, b: &UEAElement) -> Result<UEAElement, CoreError> {
        let field = try_unify_kind(a.field, b.field)?;
        let a = self.convert(a);
        let b = self.convert(b);
        let mut out = self.zero(field);
        for (ma, ca) in &a.terms {
            let wa = ma.to_word(&self.ord);
            for (mb, cb) in &b.terms {
                let mut w = wa.clone();
                w.extend(mb.to_word(&self.ord));
                let nf = self.normal_order_word(&w);
                let coeff = ca.mul(cb);
                for (m, c) in nf.iter() {
                    out.add_term(m.clone(), coeff.mul_rat(c));
                }
            }
        }
        Ok(out)
    }

    /// Canonical coset representative modulo the right ideal
    /// `U(g)*span(sub)`: drops every normal-form term whose trailing factor
    /// lies in `sub`. Requires `sub` to occupy a suffix block.
    pub fn reduce_mod_right_subalgebra(
        &self,
        a: &UEAElement,
        sub: &[usize],
    ) -> Result<UEAElement, CoreError> {
        let a = self.convert(a);
        let Some(cut) = self.ord.suffix_block(sub) else {
            return Err(CoreError::OrderingMismatch(format!(
                "ordering '{}' does not isolate the subalgebra as a suffix block",
                self.ord.name
            )));
        };
        let mut out = self.zero(a.field);
        for (m, c) in &a.terms {
            if m.exps[cut..].iter().all(|&e| e == 0) {
                out.add_term(m.clone(), c.clone());
            }
        }
        Ok(out)
    }

    /// One step of the twisted adjoint action:
    /// `ad_phi(u)(v) = u v - (-1)^{|u||v|} v phi(u)` for the generator `u`,
    /// extended linearly over the parity-homogeneous components of `v`.
    pub fn twisted_adjoint(
        &self,
        phi: &GradedAutomorphism,
        u: usize,
        v: &UEAElement,
    ) -> Result<UEAElement, CoreError> {
        let v = self.convert(v);
        let field = try_unify_kind(v.field, phi.field_kind())?;
        let gu = self.gen(u, field);
        let mut out = self.multiply(&gu, &v)?;
        let phi_u = phi.apply_gen(self.alg, u)?;
        let pu = self.alg.parity(u);
        for (m, c) in &v.terms {
            let sign = if pu == Parity::Odd && m.parity(self.alg, &self.ord) == Parity::Odd {
                -1i64
            } else {
                1
            };
            for (j, s) in &phi_u {
                // (-1)^{|u||v|} * c * s * (m * g_j)
                let mut w = m.to_word(&self.ord);
                w.push(*j as u16);
                let nf = self.normal_order_word(&w);
                let coeff = c.mul(s).mul_rat(&rat(-sign, 1));
                for (mm, cc) in nf.iter() {
                    out.add_term(mm.clone(), coeff.mul_rat(cc));
                }
            }
        }
        Ok(out)
    }

    /// Composite action of a word, rightmost letter applied first, so that
    /// `ad_phi(w1 w2 ... wk) = ad_phi(w1) o ... o ad_phi(wk)`.
    pub fn twisted_adjoint_word(
        &self,
        phi: &GradedAutomorphism,
        word: &[u16],
        v: &UEAElement,
    ) -> Result<UEAElement, CoreError> {
        let mut acc = self.convert(v);
        for &u in word.iter().rev() {
            acc = self.twisted_adjoint(phi, u as usize, &acc)?;
        }
        Ok(acc)
    }

    /// Action of a full element `a = sum c_m m` as
    /// `sum c_m ad_phi(word(m))(v)`.
    pub fn twisted_adjoint_element(
        &self,
        phi: &GradedAutomorphism,
        a: &UEAElement,
        v: &UEAElement,
    ) -> Result<UEAElement, CoreError> {
        let a = self.convert(a);
        let field = try_unify_kind(try_unify_kind(a.field, v.field)?, phi.field_kind())?;
        let mut out = self.zero(field);
        for (m, c) in &a.terms {
            let w = m.to_word(&self.ord);
            let part = self.twisted_adjoint_word(phi, &w, v)?;
            out = out.add(&part.scaled(c))?;
        }
        Ok(out)
    }

    /// Parse helper: an element from a list of (word, coefficient) pairs.
    pub fn element_from_words(&self, parts: &[(Vec<u16>, FieldScalar)]) -> UEAElement {
        let field = parts
            .iter()
            .map(|(_, c)| c.kind())
            .fold(FieldKind::Rational, unify_kind);
        let mut out = self.zero(field);
        for (w, c) in parts {
            let t = self.from_word(w, c.clone());
            out = out.add(&t).expect("element_from_words");
        }
        out
    }
}

fn accumulate(out: &mut RatTerms, part: &RatTerms, scale: &Rat) {
    if scale.is_zero() {
        return;
    }
    for (m, c) in part {
        let v = c * scale;
        match out.get_mut(m) {
            Some(old) => {
                *old += v;
                if old.is_zero() {
                    out.remove(m);
                }
            }
            None => {
                out.insert(m.clone(), v);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aut::GradedAutomorphism;
    use crate::families::build_gl;
    use crate::scalar::rat_int;

    fn fs(n: i64) -> FieldScalar {
        FieldScalar::Rat(rat_int(n))
    }

    /// gl(1|1) with the (y < h1 < h2 < x)-style ordering used by the
    /// Harish-Chandra projection.
    fn gl11_hc() -> (LieSuperalgebra, Vec<usize>) {
        let (g, _) = build_gl(1, 1).unwrap();
        let y = g.index_of("y").unwrap();
        let h1 = g.index_of("h1").unwrap();
        let h2 = g.index_of("h2").unwrap();
        let x = g.index_of("x").unwrap();
        (g, vec![y, h1, h2, x])
    }

    #[test]
    fn normal_order_xy_gl11() {
        let (g, perm) = gl11_hc();
        let eng = PbwEngine::new(&g, GeneratorOrdering::new("hc", perm));
        let x = g.index_of("x").unwrap() as u16;
        let y = g.index_of("y").unwrap() as u16;
        // x*y = (h1 + h2) - y*x under y < h < x
        let e = eng.from_word(&[x, y], fs(1));
        let h1 = eng.gen(g.index_of("h1").unwrap(), FieldKind::Rational);
        let h2 = eng.gen(g.index_of("h2").unwrap(), FieldKind::Rational);
        let yx = eng.from_word(&[y, x], fs(1));
        let expected = h1.add(&h2).unwrap().sub(&yx).unwrap();
        assert_eq!(e, expected);
        // x*x = 0
        assert!(eng.from_word(&[x, x], fs(1)).is_zero());
        // counit picks the empty monomial
        assert!(e.counit().is_zero());
        assert!(eng.one(FieldKind::Rational).counit().is_one());
    }

    #[test]
    fn multiplication_unit_and_associativity_instance() {
        let (g, perm) = gl11_hc();
        let eng = PbwEngine::new(&g, GeneratorOrdering::new("hc", perm));
        let x = eng.gen(g.index_of("x").unwrap(), FieldKind::Rational);
        let y = eng.gen(g.index_of("y").unwrap(), FieldKind::Rational);
        let one = eng.one(FieldKind::Rational);
        let a = eng.multiply(&x, &y).unwrap();
        assert_eq!(eng.multiply(&a, &one).unwrap(), a);
        // (x*y)*x = x*(y*x)
        let lhs = eng.multiply(&a, &x).unwrap();
        let rhs = eng.multiply(&x, &eng.multiply(&y, &x).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn reduce_mod_even_part() {
        let (g, _) = build_gl(1, 1).unwrap();
        let eng = PbwEngine::coset(&g);
        let x = g.index_of("x").unwrap() as u16;
        let y = g.index_of("y").unwrap() as u16;
        let xy = eng.from_word(&[x, y], fs(1));
        let evens = g.even_indices();
        let red = eng.reduce_mod_right_subalgebra(&xy, &evens).unwrap();
        // x*y = (h1+h2) - y*x; the Cartan part has a trailing even factor
        let yx = eng.from_word(&[y, x], fs(-1));
        assert_eq!(red, yx);
        // elements of U(g)*g_even reduce to zero
        let h1 = g.index_of("h1").unwrap() as u16;
        let e = eng.from_word(&[y, x, h1], fs(3));
        assert!(eng.reduce_mod_right_subalgebra(&e, &evens).unwrap().is_zero());
        // 1 mod the ideal is 1
        let one = eng.one(FieldKind::Rational);
        assert_eq!(eng.reduce_mod_right_subalgebra(&one, &evens).unwrap(), one);
    }

    #[test]
    fn twisted_adjoint_examples() {
        let (g, perm) = gl11_hc();
        let eng = PbwEngine::new(&g, GeneratorOrdering::new("hc", perm));
        let x = g.index_of("x").unwrap();
        let y = g.index_of("y").unwrap();
        let one = eng.one(FieldKind::Rational);
        let delta = GradedAutomorphism::delta();
        // ad_delta(x)(1) = 2x
        let r = eng.twisted_adjoint(&delta, x, &one).unwrap();
        assert_eq!(r, eng.gen(x, FieldKind::Rational).scaled(&fs(2)));
        // ad_delta(y.x)(1) = 4(yx - (h1+h2)/2)
        let r2 = eng
            .twisted_adjoint_word(&delta, &[y as u16, x as u16], &one)
            .unwrap();
        let yx = eng.from_word(&[y as u16, x as u16], fs(4));
        let h = eng
            .gen(g.index_of("h1").unwrap(), FieldKind::Rational)
            .add(&eng.gen(g.index_of("h2").unwrap(), FieldKind::Rational))
            .unwrap();
        let expected = yx.sub(&h.scaled(&fs(2))).unwrap();
        assert_eq!(r2, expected);
        // ad_id(u)(v) = [u,v]
        let id = GradedAutomorphism::identity();
        let h1e = eng.gen(g.index_of("h1").unwrap(), FieldKind::Rational);
        let r3 = eng.twisted_adjoint(&id, x, &h1e).unwrap();
        // [x, h1] = -x
        assert_eq!(r3, eng.gen(x, FieldKind::Rational).scaled(&fs(-1)));
        // ad_phi(empty word)(v) = v
        let r4 = eng.twisted_adjoint_word(&delta, &[], &h1e).unwrap();
        assert_eq!(r4, h1e);
    }

    #[test]
    fn symbolic_twisted_adjoint() {
        let (g, perm) = gl11_hc();
        let eng = PbwEngine::new(&g, GeneratorOrdering::new("hc", perm));
        let x = g.index_of("x").unwrap();
        let y = g.index_of("y").unwrap();
        let one = eng.one(FieldKind::RatFun);
        let c = FieldScalar::fun_c();
        let phi = GradedAutomorphism::scale(c.clone());
        // ad_{phi_c}(x)(1) = (1 - c^{-1}) x
        let r = eng.twisted_adjoint(&phi, x, &one).unwrap();
        let coeff = FieldScalar::one(FieldKind::RatFun).sub(&c.inv().unwrap());
        assert_eq!(r, eng.gen(x, FieldKind::RatFun).scaled(&coeff));
        // ad_{phi_c}(y.x)(1) = (1-c^{-1})((1-c) yx + c(h1+h2))
        let r2 = eng
            .twisted_adjoint_word(&phi, &[y as u16, x as u16], &one)
            .unwrap();
        let one_s = FieldScalar::one(FieldKind::RatFun);
        let yx = eng.from_word(&[y as u16, x as u16], one_s.sub(&c));
        let h = eng
            .gen(g.index_of("h1").unwrap(), FieldKind::RatFun)
            .add(&eng.gen(g.index_of("h2").unwrap(), FieldKind::RatFun))
            .unwrap();
        let expected = yx.add(&h.scaled(&c)).unwrap().scaled(&coeff);
        assert_eq!(r2, expected);
    }

    #[test]
    fn filtration_weight_parity() {
        let (g, _) = build_gl(1, 1).unwrap();
        let eng = PbwEngine::coset(&g);
        let x = g.index_of("x").unwrap() as u16;
        let y = g.index_of("y").unwrap() as u16;
        let h1 = g.index_of("h1").unwrap() as u16;
        let yx = eng.from_word(&[y, x], fs(1));
        assert_eq!(yx.filtration_degree(&g), 2);
        let e = eng.from_word(&[h1, y, x], fs(1));
        assert_eq!(e.filtration_degree(&g), 4);
        assert_eq!(eng.one(FieldKind::Rational).filtration_degree(&g), 0);
        // weights
        assert_eq!(yx.weight(&g), Some(vec![rat_int(0), rat_int(0)]));
        let xe = eng.from_word(&[x], fs(1));
        assert_eq!(xe.weight(&g), Some(vec![rat_int(1), rat_int(-1)]));
        let mixed = xe.add(&eng.gen(h1 as usize, FieldKind::Rational)).unwrap();
        assert_eq!(mixed.weight(&g), None);
        assert_eq!(mixed.parity(&g), None);
        assert_eq!(yx.parity(&g), Some(Parity::Even));
    }

    #[test]
    fn field_mismatch_detected() {
        let (g, _) = build_gl(1, 1).unwrap();
        let eng = PbwEngine::coset(&g);
        let a = eng.one(FieldKind::Cyclotomic(3));
        let b = eng.one(FieldKind::RatFun);
        assert_eq!(eng.multiply(&a, &b), Err(CoreError::FieldMismatch));
    }
}
