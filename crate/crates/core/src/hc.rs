//! Harish-Chandra projections.
//!
//! Two routes are implemented. For a Cartan-even algebra the classical
//! projection `U(g) -> S(h)` keeps the pure-Cartan monomials of the normal
//! form under the `n^- < h < n^+` ordering. For a general symmetric pair
//! presented by an Iwasawa decomposition `g = k + a + n` of a host
//! algebra, the projection lands in the supersymmetric polynomial algebra
//! on the Cartan subspace `a`, killing leading `n` factors, trailing `k`
//! factors and everything touching `t_even`.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::algebra::{BasisVector, LieSuperalgebra, Parity};
use crate::borel::{weyl_simple_reflections, BorelChoice};
use crate::error::CoreError;
use crate::linalg::Mat;
use crate::pbw::{GeneratorOrdering, PbwEngine, UEAElement};
use crate::poly::{PolyMono, SuperPolynomial, VarSpace};
use crate::scalar::{rat, FieldKind, FieldScalar, Rat};

/// Polynomial space on the even Cartan of an algebra.
pub fn cartan_space(alg: &LieSuperalgebra) -> Arc<VarSpace> {
    Arc::new(VarSpace::even_only(
        alg.cartan_even
            .iter()
            .map(|&i| alg.basis[i].name.clone())
            .collect(),
    ))
}

/// Classical Harish-Chandra projection for Cartan-even algebras: keep the
/// terms supported on the Cartan generators of the `hc` normal form. No
/// rho-shift is applied.
pub fn hc_project_group(
    alg: &LieSuperalgebra,
    engine: &PbwEngine<'_>,
    a: &UEAElement,
) -> Result<SuperPolynomial, CoreError> {
    if !alg.is_cartan_even() {
        return Err(CoreError::Unsupported(format!(
            "{} is not Cartan-even; use the Iwasawa-pair projection",
            alg.name
        )));
    }
    let a = engine.convert(a);
    let space = cartan_space(alg);
    let cartan_pos: Vec<usize> = alg.cartan_even.iter().map(|&i| engine.ord.pos_of[i]).collect();
    let mut out = SuperPolynomial::zero(space, a.field);
    'terms: for (m, c) in &a.terms {
        let mut exps = vec![0u32; cartan_pos.len()];
        for (pos, &e) in m.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            match cartan_pos.iter().position(|&p| p == pos) {
                Some(t) => exps[t] = e,
                None => continue 'terms,
            }
        }
        out.add_term(
            PolyMono {
                even: exps,
                odd: 0,
            },
            c.clone(),
        );
    }
    Ok(out)
}

/// Iwasawa presentation of a symmetric pair inside a host algebra: a
/// partition of the host basis into the fixed subalgebra `k` (with its
/// Cartan part `t` listed separately), the Cartan subspace `a`, and the
/// nilpotent part `n`.
#[derive(Debug, Clone)]
pub struct IwasawaPair {
    pub k_rest: Vec<usize>,
    pub t_even: Vec<usize>,
    pub t_odd: Vec<usize>,
    pub a_even: Vec<usize>,
    pub a_odd: Vec<usize>,
    pub n: Vec<usize>,
}

impl IwasawaPair {
    pub fn k_full(&self) -> Vec<usize> {
        let mut k = self.k_rest.clone();
        k.extend(&self.t_even);
        k.extend(&self.t_odd);
        k
    }

    /// Check the partition, closure of `k` and `n`, and the structural
    /// requirements on `t` and `a` used by the projection.
    pub fn validate(&self, host: &LieSuperalgebra) -> Result<(), CoreError> {
        let mut seen = vec![false; host.dim()];
        for &i in self
            .k_rest
            .iter()
            .chain(&self.t_even)
            .chain(&self.t_odd)
            .chain(&self.a_even)
            .chain(&self.a_odd)
            .chain(&self.n)
        {
            if i >= host.dim() || seen[i] {
                return Err(CoreError::NoIwasawa(
                    "index sets must partition the host basis".into(),
                ));
            }
            seen[i] = true;
        }
        if seen.iter().any(|s| !s) {
            return Err(CoreError::NoIwasawa(
                "index sets do not cover the host basis".into(),
            ));
        }
        let k = self.k_full();
        let closed = |set: &[usize]| {
            set.iter().all(|&i| {
                set.iter().all(|&j| {
                    host.bracket_basis(i, j)
                        .iter()
                        .all(|(t, _)| set.contains(t))
                })
            })
        };
        if !closed(&k) {
            return Err(CoreError::NoIwasawa("k is not a subalgebra".into()));
        }
        if !closed(&self.n) {
            return Err(CoreError::NoIwasawa("n is not a subalgebra".into()));
        }
        // [a_odd, a_odd] must land in t_even, and t_even must centralize a
        for &i in &self.a_odd {
            for &j in &self.a_odd {
                if !host
                    .bracket_basis(i, j)
                    .iter()
                    .all(|(t, _)| self.t_even.contains(t))
                {
                    return Err(CoreError::NoIwasawa(
                        "[a_odd, a_odd] escapes t_even".into(),
                    ));
                }
            }
        }
        for &t in &self.t_even {
            for &a in self.a_even.iter().chain(&self.a_odd) {
                if !host.bracket_basis(t, a).is_empty() {
                    return Err(CoreError::NoIwasawa("t_even does not centralize a".into()));
                }
            }
        }
        Ok(())
    }

    /// Ordering blocks: n first, then a, then t, then the rest of k.
    pub fn ordering(&self) -> GeneratorOrdering {
        let mut perm = self.n.clone();
        perm.extend(&self.a_even);
        perm.extend(&self.a_odd);
        perm.extend(&self.t_even);
        perm.extend(&self.t_odd);
        perm.extend(&self.k_rest);
        GeneratorOrdering::new("iwasawa", perm)
    }

    pub fn a_space(&self, host: &LieSuperalgebra) -> Arc<VarSpace> {
        Arc::new(VarSpace {
            even: self.a_even.iter().map(|&i| host.basis[i].name.clone()).collect(),
            odd: self.a_odd.iter().map(|&i| host.basis[i].name.clone()).collect(),
        })
    }
}

/// Harish-Chandra projection for an Iwasawa pair: the image of a coset in
/// `U(host)/U(host)k` inside the supersymmetric algebra on `a`.
pub fn hc_project_pair(
    host: &LieSuperalgebra,
    pair: &IwasawaPair,
    engine: &PbwEngine<'_>,
    elem: &UEAElement,
) -> Result<SuperPolynomial, CoreError> {
    if engine.ord.name != "iwasawa" {
        return Err(CoreError::OrderingMismatch(
            "pair projection requires the iwasawa ordering".into(),
        ));
    }
    let elem = engine.convert(elem);
    let space = pair.a_space(host);
    let ae_pos: Vec<usize> = pair.a_even.iter().map(|&i| engine.ord.pos_of[i]).collect();
    let ao_pos: Vec<usize> = pair.a_odd.iter().map(|&i| engine.ord.pos_of[i]).collect();
    let mut out = SuperPolynomial::zero(space, elem.field);
    'terms: for (m, c) in &elem.terms {
        let mut even = vec![0u32; ae_pos.len()];
        let mut odd = 0u64;
        for (pos, &e) in m.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if let Some(t) = ae_pos.iter().position(|&p| p == pos) {
                even[t] = e;
            } else if let Some(t) = ao_pos.iter().position(|&p| p == pos) {
                odd |= 1 << t;
            } else {
                continue 'terms;
            }
        }
        out.add_term(PolyMono { even, odd }, c.clone());
    }
    Ok(out)
}

/// The diagonal pair `(g x g, g)` with Cartan subspace the antidiagonal
/// Cartan: the algebraic model of the group case.
pub struct DiagonalPair {
    pub host: LieSuperalgebra,
    pub pair: IwasawaPair,
    /// `left_embed[i]` expresses `(x_i, 0)` over the host basis.
    pub left_embed: Vec<Vec<(usize, Rat)>>,
    /// `twisted_embed[i]` expresses `(x_i, delta(x_i))` over the host basis.
    pub twisted_embed: Vec<Vec<(usize, Rat)>>,
}

pub fn diagonal_pair(
    alg: &LieSuperalgebra,
    borel: &BorelChoice,
) -> Result<DiagonalPair, CoreError> {
    let d = alg.dim();
    // adapted basis: pairs (p, q) as dense length-2d rational vectors
    struct Adapted {
        name: String,
        parity: Parity,
        vec: Vec<Rat>,
    }
    let mk = |name: String, parity: Parity, left: Option<usize>, lc: i64, right: Option<usize>, rc: i64| {
        let mut v = vec![Rat::zero(); 2 * d];
        if let Some(i) = left {
            v[i] = rat(lc, 1);
        }
        if let Some(i) = right {
            v[d + i] += rat(rc, 1);
        }
        Adapted {
            name,
            parity,
            vec: v,
        }
    };
    let mut adapted: Vec<Adapted> = Vec::new();
    let mut n_idx = Vec::new();
    let mut ae_idx = Vec::new();
    let mut ao_idx = Vec::new();
    let mut te_idx = Vec::new();
    let mut to_idx = Vec::new();
    let mut k_idx = Vec::new();
    for &i in &borel.n_minus {
        n_idx.push(adapted.len());
        adapted.push(mk(format!("Ln_{}", alg.basis[i].name), alg.parity(i), Some(i), 1, None, 0));
    }
    for &i in &borel.n_plus {
        n_idx.push(adapted.len());
        adapted.push(mk(format!("Rn_{}", alg.basis[i].name), alg.parity(i), None, 0, Some(i), 1));
    }
    for &i in &alg.cartan_even {
        ae_idx.push(adapted.len());
        adapted.push({
            let mut a = mk(format!("a_{}", alg.basis[i].name), Parity::Even, Some(i), 1, Some(i), -1);
            a.vec[d + i] = rat(-1, 1);
            a
        });
    }
    for &i in &alg.cartan_odd {
        ao_idx.push(adapted.len());
        adapted.push({
            let mut a = mk(format!("a_{}", alg.basis[i].name), Parity::Odd, Some(i), 1, None, 0);
            a.vec[d + i] = rat(-1, 1);
            a
        });
    }
    for &i in &alg.cartan_even {
        te_idx.push(adapted.len());
        adapted.push({
            let mut a = mk(format!("t_{}", alg.basis[i].name), Parity::Even, Some(i), 1, None, 0);
            a.vec[d + i] = rat(1, 1);
            a
        });
    }
    for &i in &alg.cartan_odd {
        to_idx.push(adapted.len());
        adapted.push({
            let mut a = mk(format!("t_{}", alg.basis[i].name), Parity::Odd, Some(i), 1, None, 0);
            a.vec[d + i] = rat(1, 1);
            a
        });
    }
    for i in 0..d {
        if alg.cartan_even.contains(&i) || alg.cartan_odd.contains(&i) {
            continue;
        }
        k_idx.push(adapted.len());
        adapted.push({
            let mut a = mk(format!("k_{}", alg.basis[i].name), alg.parity(i), Some(i), 1, None, 0);
            a.vec[d + i] = rat(1, 1);
            a
        });
    }
    let hd = adapted.len();
    if hd != 2 * d {
        return Err(CoreError::NoIwasawa(
            "adapted diagonal basis does not span g x g".into(),
        ));
    }
    // change of basis: columns = adapted vectors; invert over Q
    let mut b = Mat::zero(2 * d, 2 * d, FieldKind::Rational);
    for (j, a) in adapted.iter().enumerate() {
        for r in 0..2 * d {
            *b.at_mut(r, j) = FieldScalar::Rat(a.vec[r].clone());
        }
    }
    let binv = invert(&b).ok_or_else(|| {
        CoreError::NoIwasawa("adapted diagonal basis is degenerate".into())
    })?;
    let express = |v: &[Rat]| -> Vec<(usize, Rat)> {
        let mut out = Vec::new();
        for r in 0..2 * d {
            let mut acc = Rat::zero();
            for c in 0..2 * d {
                if let FieldScalar::Rat(x) = binv.at(r, c) {
                    if !x.is_zero() && !v[c].is_zero() {
                        acc += x * &v[c];
                    }
                }
            }
            if !acc.is_zero() {
                out.push((r, acc));
            }
        }
        out
    };
    // host bracket table: bracket in g + g is componentwise
    let pair_bracket = |x: &[Rat], y: &[Rat]| -> Vec<Rat> {
        let mut out = vec![Rat::zero(); 2 * d];
        let l = alg.bracket_vec(&x[..d], &y[..d]);
        let r = alg.bracket_vec(&x[d..], &y[d..]);
        out[..d].clone_from_slice(&l);
        out[d..].clone_from_slice(&r);
        out
    };
    let mut bracket = vec![vec![Vec::new(); 2 * d]; 2 * d];
    let mut raw = vec![vec![Vec::new(); 2 * d]; 2 * d];
    for i in 0..2 * d {
        for j in 0..2 * d {
            let v = pair_bracket(&adapted[i].vec, &adapted[j].vec);
            raw[i][j] = v.clone();
            bracket[i][j] = express(&v);
        }
    }
    // Weights are taken against the diagonal Cartan t only: the k-block
    // vectors (x, x) are not eigenvectors of the antidiagonal part.
    let host_cartan_even: Vec<usize> = te_idx.clone();
    let host_cartan_odd: Vec<usize> = to_idx.clone();
    let mut weights = vec![vec![Rat::zero(); host_cartan_even.len()]; 2 * d];
    for (t, &h) in host_cartan_even.iter().enumerate() {
        for k in 0..2 * d {
            let br = &bracket[h][k];
            if br.is_empty() {
                continue;
            }
            if br.len() != 1 || br[0].0 != k {
                return Err(CoreError::NoIwasawa(
                    "adapted basis is not weight-adapted".into(),
                ));
            }
            weights[k][t] = br[0].1.clone();
        }
    }
    let basis: Vec<BasisVector> = adapted
        .iter()
        .enumerate()
        .map(|(k, a)| BasisVector {
            name: a.name.clone(),
            parity: a.parity,
            z_degree: 0,
            weight: weights[k].clone(),
        })
        .collect();
    let host = LieSuperalgebra {
        name: format!("{} x {} / diagonal", alg.name, alg.name),
        family: None,
        basis,
        bracket,
        cartan_even: host_cartan_even,
        cartan_odd: host_cartan_odd,
    };
    let report = host.validate();
    if !report.passed() {
        return Err(CoreError::NoIwasawa(format!(
            "diagonal host failed validation: {}",
            report.violations[0]
        )));
    }
    let pair = IwasawaPair {
        k_rest: k_idx,
        t_even: te_idx,
        t_odd: to_idx,
        a_even: ae_idx,
        a_odd: ao_idx,
        n: n_idx,
    };
    pair.validate(&host)?;
    // embeddings of g into the host
    let mut left_embed = Vec::with_capacity(d);
    let mut twisted_embed = Vec::with_capacity(d);
    for i in 0..d {
        let mut v = vec![Rat::zero(); 2 * d];
        v[i] = Rat::from_integer(1.into());
        left_embed.push(express(&v));
        let mut w = vec![Rat::zero(); 2 * d];
        w[i] = Rat::from_integer(1.into());
        let sgn = match alg.parity(i) {
            Parity::Even => Rat::from_integer(1.into()),
            Parity::Odd => Rat::from_integer((-1).into()),
        };
        w[d + i] = sgn;
        twisted_embed.push(express(&w));
    }
    Ok(DiagonalPair {
        host,
        pair,
        left_embed,
        twisted_embed,
    })
}

fn invert(m: &Mat) -> Option<Mat> {
    let n = m.rows;
    let kind = FieldKind::Rational;
    let mut aug = Mat::zero(n, 2 * n, kind);
    for r in 0..n {
        for c in 0..n {
            *aug.at_mut(r, c) = m.at(r, c).clone();
        }
        *aug.at_mut(r, n + r) = FieldScalar::one(kind);
    }
    let pivots = aug.rref();
    if pivots.len() != n || pivots.iter().enumerate().any(|(k, &c)| k != c) {
        return None;
    }
    let mut out = Mat::zero(n, n, kind);
    for r in 0..n {
        for c in 0..n {
            *out.at_mut(r, c) = aug.at(r, n + c).clone();
        }
    }
    Some(out)
}

/// Push an element of `U(g)` through `x -> x (x) 1` into the host coset
/// space, using an embedding table (one sparse combination per generator).
pub fn embed_element(
    host_engine: &PbwEngine<'_>,
    embed: &[Vec<(usize, Rat)>],
    elem: &UEAElement,
    src_ord: &GeneratorOrdering,
) -> Result<UEAElement, CoreError> {
    let mut out = host_engine.zero(elem.field);
    for (m, c) in &elem.terms {
        let word = m.to_word(src_ord);
        let mut acc = host_engine.one(elem.field);
        for &g in &word {
            let mut letter = host_engine.zero(elem.field);
            for (j, coeff) in &embed[g as usize] {
                let t = host_engine.gen(*j, elem.field).scaled(&FieldScalar::from_rat(
                    coeff.clone(),
                    elem.field,
                ));
                letter = letter.add(&t)?;
            }
            acc = host_engine.multiply(&acc, &letter)?;
        }
        out = out.add(&acc.scaled(c))?;
    }
    Ok(out)
}

/// Rename a pair-side polynomial (variables on the antidiagonal Cartan
/// `(h, -h)`) into the group-side Cartan variables, `(h,-h) -> 2h`.
pub fn pair_poly_to_group(
    p: &SuperPolynomial,
    alg: &LieSuperalgebra,
) -> Result<SuperPolynomial, CoreError> {
    if p.space.odd.iter().any(|_| true) && p.terms.keys().any(|m| m.odd != 0) {
        return Err(CoreError::Unsupported(
            "odd pair variables have no group-side counterpart".into(),
        ));
    }
    let space = cartan_space(alg);
    let mut out = SuperPolynomial::zero(space.clone(), p.field);
    let two = FieldScalar::from_rat(rat(2, 1), p.field);
    for (m, c) in &p.terms {
        let total: u32 = m.even.iter().sum();
        let mut coeff = c.clone();
        for _ in 0..total {
            coeff = coeff.mul(&two);
        }
        // variable names match: a_<name> -> <name>
        let mut even = vec![0u32; space.even.len()];
        for (i, &e) in m.even.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let name = p.space.even[i].strip_prefix("a_").unwrap_or(&p.space.even[i]);
            let t = space
                .even
                .iter()
                .position(|n| n == name)
                .ok_or_else(|| CoreError::Unsupported(format!("unknown Cartan variable {name}")))?;
            even[t] = e;
        }
        out.add_term(PolyMono { even, odd: 0 }, coeff);
    }
    Ok(out)
}

/// `t_g = prod over positive odd roots of (h_alpha + (rho, alpha))`.
pub fn t_g_polynomial(
    alg: &LieSuperalgebra,
    borel: &BorelChoice,
) -> Result<SuperPolynomial, CoreError> {
    let space = cartan_space(alg);
    let mut out = SuperPolynomial::constant(space.clone(), FieldScalar::one(FieldKind::Rational));
    for root in &borel.positive_odd {
        let h = root.coroot.as_ref().ok_or_else(|| {
            CoreError::Unsupported(format!(
                "odd root of {} has no one-dimensional coroot",
                alg.name
            ))
        })?;
        let rho_a = borel.rho_pair(root).expect("coroot present");
        for _ in 0..root.vectors.len() {
            let mut f = SuperPolynomial::zero(space.clone(), FieldKind::Rational);
            for (t, c) in h.iter().enumerate() {
                if !c.is_zero() {
                    let mut m = PolyMono::unit(space.even.len());
                    m.even[t] = 1;
                    f.add_term(m, FieldScalar::Rat(c.clone()));
                }
            }
            f.add_term(PolyMono::unit(space.even.len()), FieldScalar::Rat(rho_a.clone()));
            out = out.mul(&f)?;
        }
    }
    Ok(out)
}

/// Determinant of the odd-Cartan Clifford form `lambda([u_i, u_j])` as a
/// polynomial on the even Cartan; constant 1 for Cartan-even algebras.
pub fn clifford_poly_bh(alg: &LieSuperalgebra) -> Result<SuperPolynomial, CoreError> {
    let space = cartan_space(alg);
    let n = alg.cartan_odd.len();
    if n == 0 {
        return Ok(SuperPolynomial::constant(
            space,
            FieldScalar::one(FieldKind::Rational),
        ));
    }
    let mut entries = vec![vec![SuperPolynomial::zero(space.clone(), FieldKind::Rational); n]; n];
    for (i, &bi) in alg.cartan_odd.iter().enumerate() {
        for (j, &bj) in alg.cartan_odd.iter().enumerate() {
            let mut p = SuperPolynomial::zero(space.clone(), FieldKind::Rational);
            for (k, c) in alg.bracket_basis(bi, bj) {
                let t = alg
                    .cartan_even
                    .iter()
                    .position(|&ce| ce == *k)
                    .ok_or_else(|| {
                        CoreError::Unsupported(
                            "[h_odd, h_odd] escapes the even Cartan".into(),
                        )
                    })?;
                let mut m = PolyMono::unit(space.even.len());
                m.even[t] = 1;
                p.add_term(m, FieldScalar::Rat(c.clone()));
            }
            entries[i][j] = p;
        }
    }
    poly_det(&entries)
}

fn poly_det(m: &[Vec<SuperPolynomial>]) -> Result<SuperPolynomial, CoreError> {
    let n = m.len();
    if n == 1 {
        return Ok(m[0][0].clone());
    }
    let space = m[0][0].space.clone();
    let mut acc = SuperPolynomial::zero(space, m[0][0].field);
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<SuperPolynomial>> = (1..n)
            .map(|r| {
                (0..n)
                    .filter(|&c| c != j)
                    .map(|c| m[r][c].clone())
                    .collect()
            })
            .collect();
        let sub = poly_det(&minor)?;
        let term = m[0][j].mul(&sub)?;
        if j % 2 == 0 {
            acc = acc.add(&term)?;
        } else {
            acc = acc.sub(&term)?;
        }
    }
    Ok(acc)
}

/// Degree bound for the group projection: twice the polynomial degree of
/// the image is at most the filtration degree of the element.
pub fn check_degree_bound_group(
    alg: &LieSuperalgebra,
    engine: &PbwEngine<'_>,
    a: &UEAElement,
) -> Result<bool, CoreError> {
    let p = hc_project_group(alg, engine, a)?;
    Ok(p.degree2() <= a.filtration_degree(alg))
}

/// Same bound for the pair projection, with odd variables contributing
/// half a degree each.
pub fn check_degree_bound_pair(
    host: &LieSuperalgebra,
    pair: &IwasawaPair,
    engine: &PbwEngine<'_>,
    a: &UEAElement,
) -> Result<bool, CoreError> {
    let p = hc_project_pair(host, pair, engine, a)?;
    Ok(p.degree2() <= a.filtration_degree(host))
}

/// `p(w.(lambda+rho) - rho) = p(lambda)` for every simple reflection `w`
/// of the even Weyl group.
pub fn rho_shifted_weyl_check(
    p: &SuperPolynomial,
    alg: &LieSuperalgebra,
    borel: &BorelChoice,
) -> Result<bool, CoreError> {
    let refls = weyl_simple_reflections(alg)?;
    for s in &refls {
        let shifts: Vec<Rat> = (0..borel.rho.len())
            .map(|j| {
                let moved = if s.signs[j] < 0 {
                    -borel.rho[s.perm[j]].clone()
                } else {
                    borel.rho[s.perm[j]].clone()
                };
                moved - &borel.rho[j]
            })
            .collect();
        let moved = p.substitute_even_affine(&s.perm, &s.signs, &shifts)?;
        if &moved != p {
            return Ok(false);
        }
    }
    Ok(true)
}
