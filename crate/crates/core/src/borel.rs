//! Root data, Borel choices, the Weyl vector and coroots.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::algebra::{Family, LieSuperalgebra, Parity};
use crate::error::CoreError;
use crate::linalg::Mat;
use crate::pbw::GeneratorOrdering;
use crate::scalar::{FieldKind, FieldScalar, Rat};

/// One root: a common nonzero weight of non-Cartan basis vectors.
#[derive(Debug, Clone)]
pub struct Root {
    pub weight: Vec<Rat>,
    pub parity: Parity,
    /// Basis indices spanning the root space (dimension 1 for built-ins).
    pub vectors: Vec<usize>,
    /// `h_alpha = [e_alpha, f_alpha]` in even-Cartan coordinates, when the
    /// root space and its opposite are one-dimensional.
    pub coroot: Option<Vec<Rat>>,
}

impl Root {
    /// `(lambda, alpha)` realized as `lambda(h_alpha)`.
    pub fn pair(&self, lam: &[Rat]) -> Option<Rat> {
        let h = self.coroot.as_ref()?;
        Some(dot(lam, h))
    }

    /// Isotropic means `alpha(h_alpha) = 0`.
    pub fn is_isotropic(&self) -> bool {
        match &self.coroot {
            Some(h) => dot(&self.weight, h).is_zero(),
            None => false,
        }
    }
}

pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[derive(Debug, Clone)]
pub struct BorelChoice {
    pub functional: Vec<Rat>,
    pub positive_even: Vec<Root>,
    pub positive_odd: Vec<Root>,
    pub negative_even: Vec<Root>,
    pub negative_odd: Vec<Root>,
    /// Half sum of even positive roots minus half sum of odd positive roots.
    pub rho: Vec<Rat>,
    pub n_plus: Vec<usize>,
    pub n_minus: Vec<usize>,
}

impl BorelChoice {
    pub fn all_positive(&self) -> impl Iterator<Item = &Root> {
        self.positive_even.iter().chain(self.positive_odd.iter())
    }

    /// `(rho, alpha)` for a positive root, via its coroot.
    pub fn rho_pair(&self, root: &Root) -> Option<Rat> {
        root.pair(&self.rho)
    }

    /// True iff `(lambda + rho, alpha) = 0` for some isotropic positive
    /// odd root.
    pub fn is_atypical(&self, lam: &[Rat]) -> bool {
        let shifted: Vec<Rat> = lam.iter().zip(&self.rho).map(|(a, b)| a + b).collect();
        self.positive_odd
            .iter()
            .filter(|r| r.is_isotropic())
            .any(|r| r.pair(&shifted).map(|v| v.is_zero()).unwrap_or(false))
    }

    /// Dominance for the even part: `lambda(h_alpha) >= 0` with the right
    /// integrality on every positive even root.
    pub fn is_dominant_integral(&self, lam: &[Rat]) -> bool {
        if lam.iter().any(|c| !c.denom().is_one()) {
            return false;
        }
        for r in &self.positive_even {
            let Some(h) = &r.coroot else { continue };
            let v = dot(lam, h);
            if v.is_negative() {
                return false;
            }
            let aa = dot(&r.weight, h);
            if !aa.is_zero() {
                let two = Rat::from_integer(2.into());
                let cart = two * v / aa;
                if !cart.denom().is_one() {
                    return false;
                }
            }
        }
        true
    }

    /// The Harish-Chandra ordering: `n^-` ascending by the positivity
    /// functional, then the Cartan block, then `n^+` ascending.
    pub fn hc_ordering(&self, alg: &LieSuperalgebra) -> GeneratorOrdering {
        let l = &self.functional;
        let key = |i: &usize| dot(&alg.basis[*i].weight, l);
        let mut nm = self.n_minus.clone();
        nm.sort_by(|a, b| key(a).cmp(&key(b)).then(a.cmp(b)));
        let mut np = self.n_plus.clone();
        np.sort_by(|a, b| key(a).cmp(&key(b)).then(a.cmp(b)));
        let mut perm = nm;
        perm.extend(alg.cartan_even.iter().copied());
        perm.extend(alg.cartan_odd.iter().copied());
        perm.extend(np);
        GeneratorOrdering::new("hc", perm)
    }
}

/// Default positivity functional in even-Cartan coordinates; `None` when
/// the family has no preferred choice.
fn default_functional(alg: &LieSuperalgebra) -> Option<Vec<Rat>> {
    match &alg.family {
        Some(Family::Gl(m, n)) => {
            let d = m + n;
            Some((0..d).map(|i| Rat::from_integer(((d - i) as i64).into())).collect())
        }
        Some(Family::Osp1(n)) => {
            Some((0..*n).map(|i| Rat::from_integer(((n - i) as i64).into())).collect())
        }
        Some(Family::Osp2(n)) => {
            let mut v = vec![Rat::from_integer(((n + 1) as i64).into())];
            v.extend((0..*n).map(|i| Rat::from_integer(((n - i) as i64).into())));
            Some(v)
        }
        Some(Family::Abelian(_, _)) | Some(Family::Q1) => {
            Some(vec![Rat::zero(); alg.cartan_even.len()])
        }
        Some(Family::Sl(m, n)) => sl_functional(alg, *m, *n),
        None => None,
    }
}

/// For `sl(m|n)` the standard block order is recovered by solving for a
/// functional with `l(wt(e_ij)) = j - i` on every off-diagonal unit.
fn sl_functional(alg: &LieSuperalgebra, m: usize, n: usize) -> Option<Vec<Rat>> {
    let rank = alg.cartan_even.len();
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    let d = m + n;
    for i in 1..=d {
        for j in 1..=d {
            if i == j {
                continue;
            }
            let name = format!("e{i}{j}");
            if let Some(k) = alg.index_of(&name) {
                rows.push(alg.basis[k].weight.clone());
                rhs.push(Rat::from_integer((j as i64 - i as i64).into()));
            }
        }
    }
    let mut mat = Mat::zero(rows.len(), rank, FieldKind::Rational);
    for (r, row) in rows.iter().enumerate() {
        for (c, v) in row.iter().enumerate() {
            *mat.at_mut(r, c) = FieldScalar::Rat(v.clone());
        }
    }
    let b: Vec<FieldScalar> = rhs.into_iter().map(FieldScalar::Rat).collect();
    let (sol, _) = mat.solve(&b)?;
    Some(
        sol.into_iter()
            .map(|s| s.as_rat().expect("rational functional"))
            .collect(),
    )
}

/// Build root data for a positivity choice. `None` uses the family default.
pub fn make_borel(
    alg: &LieSuperalgebra,
    positivity: Option<&[Rat]>,
) -> Result<BorelChoice, CoreError> {
    let functional = match positivity {
        Some(f) => {
            if f.len() != alg.cartan_even.len() {
                return Err(CoreError::AmbiguousPositivity(
                    "functional length must match the even Cartan rank".into(),
                ));
            }
            f.to_vec()
        }
        None => default_functional(alg).ok_or_else(|| {
            CoreError::AmbiguousPositivity(format!(
                "no default positivity for {}; supply a functional",
                alg.name
            ))
        })?,
    };
    // group non-Cartan basis vectors by weight
    let mut spaces: BTreeMap<Vec<String>, (Vec<Rat>, Vec<usize>)> = BTreeMap::new();
    for i in 0..alg.dim() {
        if alg.cartan_even.contains(&i) || alg.cartan_odd.contains(&i) {
            continue;
        }
        let w = alg.basis[i].weight.clone();
        if w.iter().all(|c| c.is_zero()) {
            return Err(CoreError::AmbiguousPositivity(format!(
                "non-Cartan vector {} has zero weight; designate a Cartan first",
                alg.basis[i].name
            )));
        }
        let key: Vec<String> = w.iter().map(crate::scalar::rat_string).collect();
        spaces.entry(key).or_insert_with(|| (w, Vec::new())).1.push(i);
    }
    let mut positive_even = Vec::new();
    let mut positive_odd = Vec::new();
    let mut negative_even = Vec::new();
    let mut negative_odd = Vec::new();
    let mut n_plus = Vec::new();
    let mut n_minus = Vec::new();
    for (_, (w, vectors)) in &spaces {
        let parities: Vec<Parity> = vectors.iter().map(|&i| alg.parity(i)).collect();
        let parity = parities[0];
        if parities.iter().any(|p| *p != parity) {
            return Err(CoreError::AmbiguousPositivity(
                "mixed parity inside one root space".into(),
            ));
        }
        let val = dot(w, &functional);
        if val.is_zero() {
            return Err(CoreError::AmbiguousPositivity(format!(
                "functional vanishes on the root of {}",
                alg.basis[vectors[0]].name
            )));
        }
        let positive = val.is_positive();
        // coroot from the opposite space, when both sides are 1-dimensional
        let neg_w: Vec<Rat> = w.iter().map(|c| -c).collect();
        let neg_key: Vec<String> = neg_w.iter().map(crate::scalar::rat_string).collect();
        let coroot = spaces.get(&neg_key).and_then(|(_, opp)| {
            if vectors.len() == 1 && opp.len() == 1 {
                let br = alg.bracket_basis(vectors[0], opp[0]);
                let mut h = vec![Rat::zero(); alg.cartan_even.len()];
                for (k, c) in br {
                    let t = alg.cartan_even.iter().position(|&ce| ce == *k)?;
                    h[t] = c.clone();
                }
                // the bracket must land in the even Cartan
                let ok = br.iter().all(|(k, _)| alg.cartan_even.contains(k));
                if ok {
                    Some(h)
                } else {
                    None
                }
            } else {
                None
            }
        });
        let root = Root {
            weight: w.clone(),
            parity,
            vectors: vectors.clone(),
            coroot,
        };
        if positive {
            n_plus.extend(vectors.iter().copied());
            match parity {
                Parity::Even => positive_even.push(root),
                Parity::Odd => positive_odd.push(root),
            }
        } else {
            n_minus.extend(vectors.iter().copied());
            match parity {
                Parity::Even => negative_even.push(root),
                Parity::Odd => negative_odd.push(root),
            }
        }
    }
    let rank = alg.cartan_even.len();
    let mut rho = vec![Rat::zero(); rank];
    let half = Rat::new(1.into(), 2.into());
    for r in &positive_even {
        for (t, c) in r.weight.iter().enumerate() {
            rho[t] += c * &half * Rat::from_integer((r.vectors.len() as i64).into());
        }
    }
    for r in &positive_odd {
        for (t, c) in r.weight.iter().enumerate() {
            rho[t] -= c * &half * Rat::from_integer((r.vectors.len() as i64).into());
        }
    }
    n_plus.sort_unstable();
    n_minus.sort_unstable();
    Ok(BorelChoice {
        functional,
        positive_even,
        positive_odd,
        negative_even,
        negative_odd,
        rho,
        n_plus,
        n_minus,
    })
}

/// Check `dim [g_alpha, g_{-alpha}] = 1` and nondegeneracy of the pairing
/// `g_alpha x g_{-alpha} -> [g_alpha, g_{-alpha}]` for every root.
pub fn check_root_pairings(alg: &LieSuperalgebra, borel: &BorelChoice) -> Result<(), CoreError> {
    for pos in borel.all_positive() {
        let neg_w: Vec<Rat> = pos.weight.iter().map(|c| -c).collect();
        let neg = borel
            .negative_even
            .iter()
            .chain(borel.negative_odd.iter())
            .find(|r| r.weight == neg_w)
            .ok_or_else(|| {
                CoreError::Unsupported("positive root without an opposite".into())
            })?;
        // span of all pairwise brackets
        let mut span: Vec<Vec<Rat>> = Vec::new();
        let mut pairing = Mat::zero(pos.vectors.len(), neg.vectors.len(), FieldKind::Rational);
        for (a, &e) in pos.vectors.iter().enumerate() {
            for (b, &f) in neg.vectors.iter().enumerate() {
                let mut v = vec![Rat::zero(); alg.dim()];
                for (k, c) in alg.bracket_basis(e, f) {
                    v[*k] = c.clone();
                }
                if v.iter().any(|c| !c.is_zero()) {
                    span.push(v.clone());
                }
                // scalar representative: first nonzero coordinate
                let s = v.into_iter().find(|c| !c.is_zero()).unwrap_or_else(Rat::zero);
                *pairing.at_mut(a, b) = FieldScalar::Rat(s);
            }
        }
        if span.is_empty() {
            return Err(CoreError::Unsupported(
                "root pairing [g_a, g_-a] is zero".into(),
            ));
        }
        let dim = {
            let mut m = Mat::zero(span.len(), alg.dim(), FieldKind::Rational);
            for (r, row) in span.iter().enumerate() {
                for (c, v) in row.iter().enumerate() {
                    *m.at_mut(r, c) = FieldScalar::Rat(v.clone());
                }
            }
            m.rank()
        };
        if dim != 1 {
            return Err(CoreError::Unsupported(format!(
                "dim [g_a, g_-a] = {dim} is not 1"
            )));
        }
        if pairing.rank() != pos.vectors.len() || pos.vectors.len() != neg.vectors.len() {
            return Err(CoreError::Unsupported(
                "root pairing is degenerate".into(),
            ));
        }
    }
    Ok(())
}

/// An orthogonal coordinate move `lambda_j -> sign_j * lambda_{perm_j}`.
#[derive(Debug, Clone)]
pub struct CoordMap {
    pub perm: Vec<usize>,
    pub signs: Vec<i8>,
}

impl CoordMap {
    pub fn apply(&self, lam: &[Rat]) -> Vec<Rat> {
        (0..lam.len())
            .map(|j| {
                let v = lam[self.perm[j]].clone();
                if self.signs[j] < 0 {
                    -v
                } else {
                    v
                }
            })
            .collect()
    }

    fn swap(rank: usize, i: usize, j: usize) -> Self {
        let mut perm: Vec<usize> = (0..rank).collect();
        perm.swap(i, j);
        CoordMap {
            perm,
            signs: vec![1; rank],
        }
    }

    fn flip(rank: usize, i: usize) -> Self {
        let mut signs = vec![1i8; rank];
        signs[i] = -1;
        CoordMap {
            perm: (0..rank).collect(),
            signs,
        }
    }
}

/// Simple reflections of the even Weyl group in Cartan coordinates.
/// Implemented for the built-in `gl` and `osp` families; an empty list
/// means the Weyl group is trivial.
pub fn weyl_simple_reflections(alg: &LieSuperalgebra) -> Result<Vec<CoordMap>, CoreError> {
    match &alg.family {
        Some(Family::Gl(m, n)) => {
            let rank = m + n;
            let mut out = Vec::new();
            for i in 0..m.saturating_sub(1) {
                out.push(CoordMap::swap(rank, i, i + 1));
            }
            for i in 0..n.saturating_sub(1) {
                out.push(CoordMap::swap(rank, m + i, m + i + 1));
            }
            Ok(out)
        }
        Some(Family::Osp1(n)) => {
            let mut out = Vec::new();
            for i in 0..n.saturating_sub(1) {
                out.push(CoordMap::swap(*n, i, i + 1));
            }
            out.push(CoordMap::flip(*n, n - 1));
            Ok(out)
        }
        Some(Family::Osp2(n)) => {
            let rank = n + 1;
            let mut out = Vec::new();
            for i in 0..n.saturating_sub(1) {
                out.push(CoordMap::swap(rank, 1 + i, 1 + i + 1));
            }
            out.push(CoordMap::flip(rank, rank - 1));
            Ok(out)
        }
        Some(Family::Abelian(_, _)) | Some(Family::Q1) => Ok(Vec::new()),
        _ => Err(CoreError::Unsupported(format!(
            "Weyl reflections are not implemented for {}",
            alg.name
        ))),
    }
}

/// Integer weight grid: all integral coordinate vectors with entries in
/// `[-radius, radius]` that are dominant for the even part.
pub fn dominant_grid(borel: &BorelChoice, rank: usize, radius: i64) -> Vec<Vec<Rat>> {
    let mut out = Vec::new();
    let side = (2 * radius + 1) as usize;
    let total = side.pow(rank as u32);
    for code in 0..total {
        let mut c = code;
        let mut lam = Vec::with_capacity(rank);
        for _ in 0..rank {
            let v = (c % side) as i64 - radius;
            c /= side;
            lam.push(Rat::from_integer(v.into()));
        }
        if borel.is_dominant_integral(&lam) {
            out.push(lam);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{build_abelian, build_gl, build_osp1, build_sl};
    use crate::scalar::{rat, rat_int};

    #[test]
    fn gl11_borel() {
        let (g, _) = build_gl(1, 1).unwrap();
        let b = make_borel(&g, None).unwrap();
        assert_eq!(b.positive_odd.len(), 1);
        assert!(b.positive_even.is_empty());
        let alpha = &b.positive_odd[0];
        assert_eq!(alpha.weight, vec![rat_int(1), rat_int(-1)]);
        // rho = -alpha/2
        assert_eq!(b.rho, vec![rat(-1, 2), rat(1, 2)]);
        // h_alpha = h1 + h2
        assert_eq!(alpha.coroot, Some(vec![rat_int(1), rat_int(1)]));
        assert!(alpha.is_isotropic());
        assert_eq!(b.rho_pair(alpha), Some(rat_int(0)));
        check_root_pairings(&g, &b).unwrap();
        // atypicality: lambda1 + lambda2 = 0
        assert!(!b.is_atypical(&[rat_int(1), rat_int(0)]));
        assert!(b.is_atypical(&[rat_int(1), rat_int(-1)]));
    }

    #[test]
    fn gl21_borel() {
        let (g, _) = build_gl(2, 1).unwrap();
        let b = make_borel(&g, None).unwrap();
        assert_eq!(b.positive_odd.len(), 2);
        assert_eq!(b.positive_even.len(), 1);
        // rho = -eps2 + delta1 in coordinates (0, -1, 1)
        assert_eq!(b.rho, vec![rat_int(0), rat_int(-1), rat_int(1)]);
        // (rho, alpha1) = 1 and (rho, alpha2) = 0 for alpha1 = eps1-delta1
        let a1 = b
            .positive_odd
            .iter()
            .find(|r| r.weight == vec![rat_int(1), rat_int(0), rat_int(-1)])
            .unwrap();
        let a2 = b
            .positive_odd
            .iter()
            .find(|r| r.weight == vec![rat_int(0), rat_int(1), rat_int(-1)])
            .unwrap();
        assert_eq!(b.rho_pair(a1), Some(rat_int(1)));
        assert_eq!(b.rho_pair(a2), Some(rat_int(0)));
        check_root_pairings(&g, &b).unwrap();
    }

    #[test]
    fn osp12_borel() {
        let (g, _) = build_osp1(1).unwrap();
        let b = make_borel(&g, None).unwrap();
        // odd roots +-delta1, even roots +-2delta1
        assert_eq!(b.positive_odd.len(), 1);
        assert_eq!(b.positive_even.len(), 1);
        let d1 = &b.positive_odd[0];
        assert!(!d1.is_isotropic());
        // rho = delta1 * (2/2 - 1/2) = delta1/2
        assert_eq!(b.rho, vec![rat(1, 2)]);
        check_root_pairings(&g, &b).unwrap();
        assert!(!b.is_atypical(&[rat_int(3)]));
    }

    #[test]
    fn sl21_borel_and_abelian() {
        let (g, _) = build_sl(2, 1).unwrap();
        let b = make_borel(&g, None).unwrap();
        assert_eq!(b.positive_odd.len(), 2);
        assert_eq!(b.positive_even.len(), 1);
        let a = build_abelian(0, 2).unwrap();
        let ba = make_borel(&a, None).unwrap();
        assert!(ba.positive_even.is_empty() && ba.positive_odd.is_empty());
        assert!(ba.rho.is_empty());
    }

    #[test]
    fn degenerate_functional_rejected() {
        let (g, _) = build_gl(1, 1).unwrap();
        let bad = vec![rat_int(1), rat_int(1)];
        assert!(matches!(
            make_borel(&g, Some(&bad)),
            Err(CoreError::AmbiguousPositivity(_))
        ));
    }

    #[test]
    fn dominance_and_grid() {
        let (g, _) = build_gl(2, 1).unwrap();
        let b = make_borel(&g, None).unwrap();
        assert!(b.is_dominant_integral(&[rat_int(2), rat_int(0), rat_int(-1)]));
        assert!(!b.is_dominant_integral(&[rat_int(0), rat_int(2), rat_int(0)]));
        let grid = dominant_grid(&b, 3, 1);
        // lambda1 >= lambda2 in {-1,0,1}^2 gives 6 pairs, times 3 choices
        assert_eq!(grid.len(), 18);
    }

    #[test]
    fn hc_ordering_matches_expected_gl11() {
        let (g, _) = build_gl(1, 1).unwrap();
        let b = make_borel(&g, None).unwrap();
        let ord = b.hc_ordering(&g);
        let names: Vec<&str> = ord.perm.iter().map(|&i| g.basis[i].name.as_str()).collect();
        assert_eq!(names, vec!["y", "h1", "h2", "x"]);
    }
}
