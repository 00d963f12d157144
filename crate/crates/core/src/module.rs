//! Finite-dimensional Z-graded modules used as a representation-side
//! cross-check: Kac modules for the type-I `gl` built-ins, exact action
//! matrices, graded-constant checks and twisted trace polynomials.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::algebra::{Family, LieSuperalgebra, Parity};
use crate::borel::BorelChoice;
use crate::error::CoreError;
use crate::linalg::Mat;
use crate::pbw::{GeneratorOrdering, PbwEngine, UEAElement};
use crate::scalar::{FieldScalar, Rat};

/// Column-sparse action matrix: `cols[j]` lists `(row, value)`.
pub type SparseAction = Vec<Vec<(usize, Rat)>>;

#[derive(Debug, Clone)]
pub struct GradedModule {
    pub name: String,
    pub dim: usize,
    pub parities: Vec<Parity>,
    /// Z-degree of each basis vector (0, -1, ..., -dim g_{-1}).
    pub degrees: Vec<i64>,
    pub weights: Vec<Vec<Rat>>,
    pub highest_weight: Vec<Rat>,
    /// One action matrix per algebra basis generator.
    pub actions: Vec<SparseAction>,
    /// Kac modules are irreducible exactly at typical highest weights.
    pub typical: bool,
}

impl GradedModule {
    /// Exhaustive bracket-relation check:
    /// `rho(x)rho(y) - (-1)^{|x||y|} rho(y)rho(x) = rho([x,y])` on all
    /// basis pairs.
    pub fn check_bracket_fidelity(&self, alg: &LieSuperalgebra) -> Result<(), CoreError> {
        for i in 0..alg.dim() {
            for j in 0..alg.dim() {
                let sign = alg.parity(i).sign_product(alg.parity(j));
                for col in 0..self.dim {
                    // lhs column: rho(x_i) rho(x_j) e_col -+ rho(x_j) rho(x_i) e_col
                    let mut lhs: BTreeMap<usize, Rat> = BTreeMap::new();
                    for (r1, v1) in &self.actions[j][col] {
                        for (r2, v2) in &self.actions[i][*r1] {
                            *lhs.entry(*r2).or_insert_with(Rat::zero) += v1 * v2;
                        }
                    }
                    for (r1, v1) in &self.actions[i][col] {
                        for (r2, v2) in &self.actions[j][*r1] {
                            let t = v1 * v2 * Rat::from_integer((sign as i64).into());
                            *lhs.entry(*r2).or_insert_with(Rat::zero) -= t;
                        }
                    }
                    let mut rhs: BTreeMap<usize, Rat> = BTreeMap::new();
                    for (k, c) in alg.bracket_basis(i, j) {
                        for (r, v) in &self.actions[*k][col] {
                            *rhs.entry(*r).or_insert_with(Rat::zero) += c * v;
                        }
                    }
                    lhs.retain(|_, v| !v.is_zero());
                    rhs.retain(|_, v| !v.is_zero());
                    if lhs != rhs {
                        return Err(CoreError::OracleViolation(format!(
                            "bracket relation fails on ({}, {}) at column {}",
                            alg.basis[i].name, alg.basis[j].name, col
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn graded_dims(&self) -> Vec<usize> {
        let depth = self.degrees.iter().map(|d| -d).max().unwrap_or(0) as usize;
        let mut dims = vec![0usize; depth + 1];
        for &d in &self.degrees {
            dims[(-d) as usize] += 1;
        }
        dims
    }
}

/// The highest-weight module of the even part used at degree zero of a
/// Kac module, as explicit action matrices for the even generators.
struct EvenHighest {
    dim: usize,
    /// generator basis index -> sparse action
    actions: BTreeMap<usize, SparseAction>,
    /// weight of each basis vector
    weights: Vec<Vec<Rat>>,
}

fn even_highest_gl(
    alg: &LieSuperalgebra,
    lam: &[Rat],
) -> Result<EvenHighest, CoreError> {
    match &alg.family {
        Some(Family::Gl(1, 1)) => {
            let mut actions = BTreeMap::new();
            for (t, &h) in alg.cartan_even.iter().enumerate() {
                actions.insert(h, vec![vec![(0, lam[t].clone())]]);
            }
            Ok(EvenHighest {
                dim: 1,
                actions,
                weights: vec![lam.to_vec()],
            })
        }
        Some(Family::Gl(2, 1)) => {
            let d = (&lam[0] - &lam[1])
                .to_integer();
            if !(&lam[0] - &lam[1]).denom().is_one() || d < 0.into() {
                return Err(CoreError::NotDominant(
                    "lambda1 - lambda2 must be a nonnegative integer".into(),
                ));
            }
            let d: i64 = i64::try_from(d).map_err(|_| {
                CoreError::NotDominant("weight out of range".into())
            })?;
            let n = (d + 1) as usize;
            // weight basis w_0..w_d with E21 w_k = w_{k+1},
            // E12 w_k = k (d - k + 1) w_{k-1}, E11 w_k = (l1 - k) w_k,
            // E22 w_k = (l2 + k) w_k, E33 w_k = l3 w_k.
            let h1 = alg.index_of("h1").unwrap();
            let h2 = alg.index_of("h2").unwrap();
            let h3 = alg.index_of("h3").unwrap();
            let e12 = alg.index_of("e12").unwrap();
            let e21 = alg.index_of("e21").unwrap();
            let mut actions: BTreeMap<usize, SparseAction> = BTreeMap::new();
            let mut a_h1: SparseAction = vec![Vec::new(); n];
            let mut a_h2: SparseAction = vec![Vec::new(); n];
            let mut a_h3: SparseAction = vec![Vec::new(); n];
            let mut a_e: SparseAction = vec![Vec::new(); n];
            let mut a_f: SparseAction = vec![Vec::new(); n];
            let mut weights = Vec::with_capacity(n);
            for k in 0..n {
                let kq = Rat::from_integer((k as i64).into());
                a_h1[k].push((k, &lam[0] - &kq));
                a_h2[k].push((k, &lam[1] + &kq));
                a_h3[k].push((k, lam[2].clone()));
                if k > 0 {
                    let coef = &kq * Rat::from_integer((d - k as i64 + 1).into());
                    a_e[k].push((k - 1, coef));
                }
                if k + 1 < n {
                    a_f[k].push((k + 1, Rat::one()));
                }
                weights.push(vec![&lam[0] - &kq, &lam[1] + &kq, lam[2].clone()]);
            }
            actions.insert(h1, a_h1);
            actions.insert(h2, a_h2);
            actions.insert(h3, a_h3);
            actions.insert(e12, a_e);
            actions.insert(e21, a_f);
            Ok(EvenHighest {
                dim: n,
                actions,
                weights,
            })
        }
        _ => Err(CoreError::Unsupported(format!(
            "Kac modules are built in for gl(1|1) and gl(2|1), not {}",
            alg.name
        ))),
    }
}

/// Ordering with `g_{-1}` first, then the even part, then `g_1`: normal
/// forms read directly as operators on an induced module.
pub fn kac_ordering(alg: &LieSuperalgebra) -> GeneratorOrdering {
    let mut perm = alg.z_graded_indices(-1);
    perm.extend(alg.even_indices());
    perm.extend(alg.z_graded_indices(1));
    GeneratorOrdering::new("kac", perm)
}

/// Kac module: `Lambda(g_{-1}) (x) L_0(lambda)` with the induced action.
pub fn build_kac_module(
    alg: &LieSuperalgebra,
    borel: &BorelChoice,
    lam: &[Rat],
) -> Result<GradedModule, CoreError> {
    if !borel.is_dominant_integral(lam) {
        return Err(CoreError::NotDominant(format!(
            "weight is not dominant integral for the even part of {}",
            alg.name
        )));
    }
    let l0 = even_highest_gl(alg, lam)?;
    let lowering = alg.z_graded_indices(-1);
    let nl = lowering.len();
    let dim = (1usize << nl) * l0.dim;
    let engine = PbwEngine::new(alg, kac_ordering(alg));
    let idx = |mask: usize, k: usize| mask * l0.dim + k;
    // metadata
    let mut parities = Vec::with_capacity(dim);
    let mut degrees = Vec::with_capacity(dim);
    let mut weights = Vec::with_capacity(dim);
    for mask in 0..(1usize << nl) {
        for k in 0..l0.dim {
            let pop = (mask as u32).count_ones() as i64;
            degrees.push(-pop);
            parities.push(if pop % 2 == 0 { Parity::Even } else { Parity::Odd });
            let mut w = l0.weights[k].clone();
            for (b, &y) in lowering.iter().enumerate() {
                if mask & (1 << b) != 0 {
                    for (t, c) in alg.basis[y].weight.iter().enumerate() {
                        w[t] += c;
                    }
                }
            }
            weights.push(w);
        }
    }
    // action of each generator via PBW straightening
    let mut actions: Vec<SparseAction> = vec![vec![Vec::new(); dim]; alg.dim()];
    let lowering_pos: Vec<usize> = lowering.iter().map(|&y| engine.ord.pos_of[y]).collect();
    let even_pos: Vec<(usize, usize)> = alg
        .even_indices()
        .iter()
        .map(|&e| (e, engine.ord.pos_of[e]))
        .collect();
    let raising_pos: Vec<usize> = alg
        .z_graded_indices(1)
        .iter()
        .map(|&x| engine.ord.pos_of[x])
        .collect();
    for u in 0..alg.dim() {
        for mask in 0..(1usize << nl) {
            // word u * y_S (ascending)
            let mut word: Vec<u16> = vec![u as u16];
            for (b, &y) in lowering.iter().enumerate() {
                if mask & (1 << b) != 0 {
                    word.push(y as u16);
                }
            }
            let nf = engine.normal_order_word(&word);
            for k in 0..l0.dim {
                let col = idx(mask, k);
                let mut out: BTreeMap<usize, Rat> = BTreeMap::new();
                'terms: for (mono, coeff) in nf.iter() {
                    // raising part kills the L0 factor
                    if raising_pos.iter().any(|&p| mono.exps[p] != 0) {
                        continue;
                    }
                    // even part acts on L0, rightmost factor first
                    let mut vec0: BTreeMap<usize, Rat> = BTreeMap::new();
                    vec0.insert(k, coeff.clone());
                    for &(e, p) in even_pos.iter().rev() {
                        for _ in 0..mono.exps[p] {
                            let act = l0.actions.get(&e).ok_or_else(|| {
                                CoreError::Unsupported(format!(
                                    "missing L0 action for {}",
                                    alg.basis[e].name
                                ))
                            })?;
                            let mut nxt: BTreeMap<usize, Rat> = BTreeMap::new();
                            for (j, v) in &vec0 {
                                for (r, av) in &act[*j] {
                                    *nxt.entry(*r).or_insert_with(Rat::zero) += av * v;
                                }
                            }
                            nxt.retain(|_, v| !v.is_zero());
                            if nxt.is_empty() {
                                continue 'terms;
                            }
                            vec0 = nxt;
                        }
                    }
                    // lowering part selects the target mask
                    let mut tmask = 0usize;
                    for (b, &p) in lowering_pos.iter().enumerate() {
                        if mono.exps[p] != 0 {
                            tmask |= 1 << b;
                        }
                    }
                    for (j, v) in vec0 {
                        *out.entry(idx(tmask, j)).or_insert_with(Rat::zero) += v;
                    }
                }
                out.retain(|_, v| !v.is_zero());
                actions[u][col] = out.into_iter().collect();
            }
        }
    }
    let module = GradedModule {
        name: format!("Kac({})", crate::scalar::rat_string(&lam[0])),
        dim,
        parities,
        degrees,
        weights,
        highest_weight: lam.to_vec(),
        actions,
        typical: !borel.is_atypical(lam),
    };
    module.check_bracket_fidelity(alg)?;
    Ok(module)
}

/// The one-dimensional irreducible quotient of an atypical `gl(1|1)` Kac
/// module: `h1, h2` act by the weight, `x` and `y` by zero.
pub fn atypical_gl11_irreducible(
    alg: &LieSuperalgebra,
    lam: &[Rat],
) -> Result<GradedModule, CoreError> {
    if !matches!(alg.family, Some(Family::Gl(1, 1))) {
        return Err(CoreError::Unsupported("gl(1|1) only".into()));
    }
    if (&lam[0] + &lam[1]) != Rat::zero() {
        return Err(CoreError::Unsupported(
            "the one-dimensional quotient exists at atypical weights only".into(),
        ));
    }
    let mut actions: Vec<SparseAction> = vec![vec![Vec::new()]; alg.dim()];
    for (t, &h) in alg.cartan_even.iter().enumerate() {
        actions[h] = vec![vec![(0, lam[t].clone())]];
    }
    let m = GradedModule {
        name: "L(atypical)".into(),
        dim: 1,
        parities: vec![Parity::Even],
        degrees: vec![0],
        weights: vec![lam.to_vec()],
        highest_weight: lam.to_vec(),
        actions,
        typical: false,
    };
    m.check_bracket_fidelity(alg)?;
    Ok(m)
}

/// Exact matrix of an element acting on a module, with entries promoted
/// to the element's field. Entry layout is column-major sparse.
pub fn act(
    engine: &PbwEngine<'_>,
    elem: &UEAElement,
    module: &GradedModule,
) -> Result<Vec<Vec<(usize, FieldScalar)>>, CoreError> {
    let elem = engine.convert(elem);
    let field = elem.field;
    let mut cols: Vec<BTreeMap<usize, FieldScalar>> = vec![BTreeMap::new(); module.dim];
    for (mono, coeff) in &elem.terms {
        let word = mono.to_word(&engine.ord);
        for col in 0..module.dim {
            // apply rightmost letter first
            let mut vec: BTreeMap<usize, FieldScalar> = BTreeMap::new();
            vec.insert(col, FieldScalar::one(field));
            for &g in word.iter().rev() {
                let mut nxt: BTreeMap<usize, FieldScalar> = BTreeMap::new();
                for (j, v) in &vec {
                    for (r, av) in &module.actions[g as usize][*j] {
                        let add = v.mul_rat(av);
                        match nxt.get_mut(r) {
                            Some(old) => *old = old.add(&add),
                            None => {
                                nxt.insert(*r, add);
                            }
                        }
                    }
                }
                nxt.retain(|_, v| !v.is_zero());
                vec = nxt;
                if vec.is_empty() {
                    break;
                }
            }
            for (r, v) in vec {
                let add = v.mul(coeff);
                match cols[col].get_mut(&r) {
                    Some(old) => *old = old.add(&add),
                    None => {
                        cols[col].insert(r, add);
                    }
                }
            }
        }
    }
    Ok(cols
        .into_iter()
        .map(|m| m.into_iter().filter(|(_, v)| !v.is_zero()).collect())
        .collect())
}

/// Outcome of the graded-constant check.
pub enum GradedConstants {
    /// One scalar per module degree `0, -1, -2, ...`.
    Scalars(Vec<FieldScalar>),
    /// A basis column on which the action is not the degree scalar.
    Failure { column: usize },
}

pub fn graded_constant_check(
    engine: &PbwEngine<'_>,
    elem: &UEAElement,
    module: &GradedModule,
) -> Result<GradedConstants, CoreError> {
    let field = elem.field;
    let matrix = act(engine, elem, module)?;
    let depth = module.degrees.iter().map(|d| -d).max().unwrap_or(0) as usize;
    let mut scalars: Vec<Option<FieldScalar>> = vec![None; depth + 1];
    for col in 0..module.dim {
        let deg = (-module.degrees[col]) as usize;
        // expect column = s * e_col
        let mut s = FieldScalar::zero(field);
        for (r, v) in &matrix[col] {
            if *r == col {
                s = v.clone();
            } else if !v.is_zero() {
                return Ok(GradedConstants::Failure { column: col });
            }
        }
        match &scalars[deg] {
            None => scalars[deg] = Some(s),
            Some(prev) if *prev == s => {}
            _ => return Ok(GradedConstants::Failure { column: col }),
        }
    }
    Ok(GradedConstants::Scalars(
        scalars
            .into_iter()
            .map(|s| s.unwrap_or_else(|| FieldScalar::zero(field)))
            .collect(),
    ))
}

/// Integer coefficients of `p_L(c) = sum (-1)^i c^i dim L_{-i}`.
pub fn twisted_trace_poly(module: &GradedModule) -> Vec<i64> {
    module
        .graded_dims()
        .iter()
        .enumerate()
        .map(|(i, &d)| if i % 2 == 0 { d as i64 } else { -(d as i64) })
        .collect()
}

pub fn eval_trace_poly(coeffs: &[i64], c: &Rat) -> Rat {
    let mut acc = Rat::zero();
    for k in coeffs.iter().rev() {
        acc = acc * c + Rat::from_integer((*k).into());
    }
    acc
}

pub enum TgAction {
    Zero,
    Invertible,
    Neither,
}

/// Classify the action of an element (the minimal ghost `T_g` in
/// practice): exactly zero, invertible, or neither.
pub fn classify_action(
    engine: &PbwEngine<'_>,
    elem: &UEAElement,
    module: &GradedModule,
) -> Result<TgAction, CoreError> {
    let matrix = act(engine, elem, module)?;
    if matrix.iter().all(|c| c.is_empty()) {
        return Ok(TgAction::Zero);
    }
    let field = elem.field;
    let mut m = Mat::zero(module.dim, module.dim, field);
    for (col, entries) in matrix.iter().enumerate() {
        for (r, v) in entries {
            *m.at_mut(*r, col) = v.clone();
        }
    }
    if m.rank() == module.dim {
        Ok(TgAction::Invertible)
    } else {
        Ok(TgAction::Neither)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::borel::make_borel;
    use crate::families::build_gl;
    use crate::scalar::{rat_int, FieldKind};

    #[test]
    fn kac_gl11_shape() {
        let (g, _) = build_gl(1, 1).unwrap();
        let b = make_borel(&g, None).unwrap();
        let m = build_kac_module(&g, &b, &[rat_int(1), rat_int(0)]).unwrap();
        assert_eq!(m.dim, 2);
        assert_eq!(m.graded_dims(), vec![1, 1]);
        assert!(m.typical);
        assert_eq!(twisted_trace_poly(&m), vec![1, -1]);
        // h1 eigenvalue on the degree-0 vector is 1
        let eng = PbwEngine::new(&g, kac_ordering(&g));
        let h1 = eng.gen(g.index_of("h1").unwrap(), FieldKind::Rational);
        let mat = act(&eng, &h1, &m).unwrap();
        assert_eq!(mat[0], vec![(0, FieldScalar::Rat(rat_int(1)))]);
        // atypical flag
        let m0 = build_kac_module(&g, &b, &[rat_int(0), rat_int(0)]).unwrap();
        assert!(!m0.typical);
    }

    #[test]
    fn kac_gl21_shape() {
        let (g, _) = build_gl(2, 1).unwrap();
        let b = make_borel(&g, None).unwrap();
        let m = build_kac_module(&g, &b, &[rat_int(1), rat_int(0), rat_int(0)]).unwrap();
        // dim L0 = 2, times Lambda(g_{-1}) of dim 4
        assert_eq!(m.dim, 8);
        assert_eq!(m.graded_dims(), vec![2, 4, 2]);
        assert_eq!(twisted_trace_poly(&m), vec![2, -4, 2]);
        // p_L = dim L0 (1 - c)^2 evaluated at c = -1 gives dim L
        assert_eq!(eval_trace_poly(&twisted_trace_poly(&m), &rat_int(-1)), rat_int(8));
        // and at c = 1 the superdimension, zero here
        assert_eq!(eval_trace_poly(&twisted_trace_poly(&m), &rat_int(1)), rat_int(0));
    }

    #[test]
    fn non_dominant_rejected() {
        let (g, _) = build_gl(2, 1).unwrap();
        let b = make_borel(&g, None).unwrap();
        assert!(matches!(
            build_kac_module(&g, &b, &[rat_int(0), rat_int(1), rat_int(0)]),
            Err(CoreError::NotDominant(_))
        ));
    }

    #[test]
    fn raising_generator_is_not_graded_constant() {
        let (g, _) = build_gl(1, 1).unwrap();
        let b = make_borel(&g, None).unwrap();
        let m = build_kac_module(&g, &b, &[rat_int(1), rat_int(0)]).unwrap();
        let eng = PbwEngine::new(&g, kac_ordering(&g));
        let x = eng.gen(g.index_of("x").unwrap(), FieldKind::Rational);
        match graded_constant_check(&eng, &x, &m).unwrap() {
            GradedConstants::Failure { .. } => {}
            GradedConstants::Scalars(_) => panic!("raising generator cannot be graded-constant"),
        }
        // central element acts by equal scalars
        let h = eng
            .gen(g.index_of("h1").unwrap(), FieldKind::Rational)
            .add(&eng.gen(g.index_of("h2").unwrap(), FieldKind::Rational))
            .unwrap();
        match graded_constant_check(&eng, &h, &m).unwrap() {
            GradedConstants::Scalars(s) => {
                assert_eq!(s, vec![FieldScalar::Rat(rat_int(1)); 2]);
            }
            _ => panic!("central element must be graded-constant"),
        }
    }
}
