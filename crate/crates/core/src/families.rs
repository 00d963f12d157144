//! Built-in algebra families.
//!
//! `gl(m|n)` and `sl(m|n)` come from matrix units, `osp(1|2n)` and
//! `osp(2|2n)` from the orthosymplectic condition inside `gl(k|2n)`,
//! `q(1)` from its standard presentation inside `gl(1|1)`, and
//! `abelian(m|n)` from a zero table. Structure constants are extracted by
//! expanding supercommutators of the defining matrices over the basis, so
//! super-antisymmetry and Jacobi hold by construction; `validate` is still
//! run before anything is returned.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::algebra::{BasisVector, BracketEntry, Family, LieSuperalgebra, Parity};
use crate::error::CoreError;
use crate::linalg::Mat;
use crate::scalar::{FieldKind, FieldScalar, Rat};

const MAX_DIM: usize = 48;

/// Dense rational matrix used for defining representations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QMatrix {
    pub n: usize,
    pub a: Vec<Rat>,
}

impl QMatrix {
    pub fn zero(n: usize) -> Self {
        QMatrix {
            n,
            a: vec![Rat::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.a[i * n + i] = Rat::one();
        }
        m
    }

    pub fn unit(n: usize, r: usize, c: usize) -> Self {
        let mut m = Self::zero(n);
        m.a[r * n + c] = Rat::one();
        m
    }

    #[inline]
    pub fn at(&self, r: usize, c: usize) -> &Rat {
        &self.a[r * self.n + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rat) {
        self.a[r * self.n + c] = v;
    }

    pub fn add(&self, o: &Self) -> Self {
        QMatrix {
            n: self.n,
            a: self.a.iter().zip(&o.a).map(|(x, y)| x + y).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        QMatrix {
            n: self.n,
            a: self.a.iter().zip(&o.a).map(|(x, y)| x - y).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        QMatrix {
            n: self.n,
            a: self.a.iter().map(|x| x * c).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let n = self.n;
        let mut out = Self::zero(n);
        for i in 0..n {
            for k in 0..n {
                let aik = self.at(i, k);
                if aik.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = o.at(k, j);
                    if !b.is_zero() {
                        out.a[i * n + j] += aik * b;
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().all(|x| x.is_zero())
    }

    /// Supercommutator `xy - (-1)^{|x||y|} yx`.
    pub fn super_commutator(&self, o: &Self, px: Parity, py: Parity) -> Self {
        let xy = self.mul(o);
        let yx = o.mul(self);
        if px.sign_product(py) < 0 {
            xy.add(&yx)
        } else {
            xy.sub(&yx)
        }
    }
}

/// A defining representation: coordinate parities plus one matrix per
/// basis vector, in basis order.
#[derive(Debug, Clone)]
pub struct DefiningRep {
    pub space_parities: Vec<Parity>,
    pub matrices: Vec<QMatrix>,
}

struct ProtoBasis {
    name: String,
    parity: Parity,
    z_degree: i32,
    mat: QMatrix,
}

/// Expand supercommutators over the given matrix basis and assemble the
/// algebra. `cartan_even`/`cartan_odd` index into the proto list.
fn assemble(
    name: &str,
    family: Family,
    proto: Vec<ProtoBasis>,
    space_parities: Vec<Parity>,
    cartan_even: Vec<usize>,
    cartan_odd: Vec<usize>,
) -> Result<(LieSuperalgebra, DefiningRep), CoreError> {
    let dim = proto.len();
    if dim == 0 || dim > MAX_DIM {
        return Err(CoreError::UnsupportedAlgebra(format!(
            "{name}: dimension {dim} outside supported range 1..={MAX_DIM}"
        )));
    }
    let amb = proto[0].mat.n;
    let rows = amb * amb;
    // One batched reduction: [basis columns | all bracket columns].
    let mut m = Mat::zero(rows, dim + dim * dim, FieldKind::Rational);
    for (j, p) in proto.iter().enumerate() {
        for r in 0..rows {
            *m.at_mut(r, j) = FieldScalar::Rat(p.mat.a[r].clone());
        }
    }
    let mut brackets_flat: Vec<QMatrix> = Vec::with_capacity(dim * dim);
    for i in 0..dim {
        for j in 0..dim {
            let b = proto[i]
                .mat
                .super_commutator(&proto[j].mat, proto[i].parity, proto[j].parity);
            for r in 0..rows {
                *m.at_mut(r, dim + i * dim + j) = FieldScalar::Rat(b.a[r].clone());
            }
            brackets_flat.push(b);
        }
    }
    let pivots = m.rref();
    if pivots.len() != dim || pivots.iter().enumerate().any(|(k, &c)| k != c) {
        return Err(CoreError::UnsupportedAlgebra(format!(
            "{name}: defining matrices are not linearly independent"
        )));
    }
    // Any pivot beyond the basis block means some bracket left the span.
    let mut bracket: Vec<Vec<BracketEntry>> = vec![vec![Vec::new(); dim]; dim];
    for i in 0..dim {
        for j in 0..dim {
            let col = dim + i * dim + j;
            let mut entry = BracketEntry::new();
            for row in 0..dim {
                if let FieldScalar::Rat(c) = m.at(row, col) {
                    if !c.is_zero() {
                        entry.push((row, c.clone()));
                    }
                }
            }
            // consistency: residual rows below the pivot block must vanish
            for row in dim..rows.min(m.rows) {
                if !m.at(row, col).is_zero() {
                    return Err(CoreError::UnsupportedAlgebra(format!(
                        "{name}: bracket escapes the span of the basis"
                    )));
                }
            }
            bracket[i][j] = entry;
        }
    }
    // Weights: simultaneous ad-eigenvalues on the even Cartan basis.
    let mut weights = vec![vec![Rat::zero(); cartan_even.len()]; dim];
    for (t, &h) in cartan_even.iter().enumerate() {
        for k in 0..dim {
            let b = &brackets_flat[h * dim + k];
            if b.is_zero() {
                continue;
            }
            // must be a multiple of proto[k]
            let lam = eigen_ratio(b, &proto[k].mat).ok_or_else(|| {
                CoreError::UnsupportedAlgebra(format!(
                    "{name}: basis vector {} is not an ad-eigenvector of {}",
                    proto[k].name, proto[h].name
                ))
            })?;
            weights[k][t] = lam;
        }
    }
    let basis: Vec<BasisVector> = proto
        .iter()
        .enumerate()
        .map(|(k, p)| BasisVector {
            name: p.name.clone(),
            parity: p.parity,
            z_degree: p.z_degree,
            weight: weights[k].clone(),
        })
        .collect();
    let rep = DefiningRep {
        space_parities,
        matrices: proto.into_iter().map(|p| p.mat).collect(),
    };
    let alg = LieSuperalgebra {
        name: name.to_string(),
        family: Some(family),
        basis,
        bracket,
        cartan_even,
        cartan_odd,
    };
    let report = alg.validate();
    if !report.passed() {
        return Err(CoreError::UnsupportedAlgebra(format!(
            "{name}: construction failed validation: {}",
            report.violations[0]
        )));
    }
    Ok((alg, rep))
}

fn eigen_ratio(b: &QMatrix, x: &QMatrix) -> Option<Rat> {
    let mut lam: Option<Rat> = None;
    for (u, v) in b.a.iter().zip(&x.a) {
        match (u.is_zero(), v.is_zero()) {
            (true, true) => {}
            (false, true) => return None,
            (true, false) => {
                if lam.is_none() {
                    lam = Some(Rat::zero());
                } else if lam != Some(Rat::zero()) {
                    return None;
                }
            }
            (false, false) => {
                let r = u / v;
                match &lam {
                    None => lam = Some(r),
                    Some(l) if *l == r => {}
                    _ => return None,
                }
            }
        }
    }
    Some(lam.unwrap_or_else(Rat::zero))
}

fn gl_parities(m: usize, n: usize) -> Vec<Parity> {
    let mut p = vec![Parity::Even; m];
    p.extend(vec![Parity::Odd; n]);
    p
}

/// `gl(m|n)`: matrix units, diagonal Cartan first, then even off-diagonal
/// entries, then the lower-left odd block `g_{-1}`, then upper-right `g_1`.
pub fn build_gl(m: usize, n: usize) -> Result<(LieSuperalgebra, DefiningRep), CoreError> {
    let d = m + n;
    if d == 0 || d * d > MAX_DIM {
        return Err(CoreError::UnsupportedAlgebra(format!(
            "gl({m}|{n}) outside supported range"
        )));
    }
    let par = gl_parities(m, n);
    let mut proto = Vec::new();
    let special = m == 1 && n == 1;
    for i in 0..d {
        proto.push(ProtoBasis {
            name: format!("h{}", i + 1),
            parity: Parity::Even,
            z_degree: 0,
            mat: QMatrix::unit(d, i, i),
        });
    }
    for i in 0..d {
        for j in 0..d {
            if i != j && par[i] == par[j] {
                proto.push(ProtoBasis {
                    name: format!("e{}{}", i + 1, j + 1),
                    parity: Parity::Even,
                    z_degree: 0,
                    mat: QMatrix::unit(d, i, j),
                });
            }
        }
    }
    for i in m..d {
        for j in 0..m {
            proto.push(ProtoBasis {
                name: if special { "y".into() } else { format!("e{}{}", i + 1, j + 1) },
                parity: Parity::Odd,
                z_degree: -1,
                mat: QMatrix::unit(d, i, j),
            });
        }
    }
    for i in 0..m {
        for j in m..d {
            proto.push(ProtoBasis {
                name: if special { "x".into() } else { format!("e{}{}", i + 1, j + 1) },
                parity: Parity::Odd,
                z_degree: 1,
                mat: QMatrix::unit(d, i, j),
            });
        }
    }
    let cartan = (0..d).collect();
    assemble(
        &format!("gl({m}|{n})"),
        Family::Gl(m, n),
        proto,
        gl_parities(m, n),
        cartan,
        vec![],
    )
}

/// `sl(m|n)` with `m != n`: supertraceless Cartan combinations, all
/// off-diagonal units of `gl(m|n)`.
pub fn build_sl(m: usize, n: usize) -> Result<(LieSuperalgebra, DefiningRep), CoreError> {
    if m == n {
        return Err(CoreError::UnsupportedAlgebra(
            "sl(n|n) is not a built-in (no invariant complement); use gl or a user table".into(),
        ));
    }
    let d = m + n;
    if d < 2 || d * d - 1 > MAX_DIM {
        return Err(CoreError::UnsupportedAlgebra(format!(
            "sl({m}|{n}) outside supported range"
        )));
    }
    let par = gl_parities(m, n);
    let mut proto = Vec::new();
    for i in 0..d - 1 {
        // E_ii - E_{i+1,i+1} inside a block; E_mm + E_{m+1,m+1} across it.
        let sign = if i + 1 == m { Rat::one() } else { -Rat::one() };
        let mat = QMatrix::unit(d, i, i).add(&QMatrix::unit(d, i + 1, i + 1).scale(&sign));
        proto.push(ProtoBasis {
            name: format!("h{}", i + 1),
            parity: Parity::Even,
            z_degree: 0,
            mat,
        });
    }
    for i in 0..d {
        for j in 0..d {
            if i != j && par[i] == par[j] {
                proto.push(ProtoBasis {
                    name: format!("e{}{}", i + 1, j + 1),
                    parity: Parity::Even,
                    z_degree: 0,
                    mat: QMatrix::unit(d, i, j),
                });
            }
        }
    }
    for i in m..d {
        for j in 0..m {
            proto.push(ProtoBasis {
                name: format!("e{}{}", i + 1, j + 1),
                parity: Parity::Odd,
                z_degree: -1,
                mat: QMatrix::unit(d, i, j),
            });
        }
    }
    for i in 0..m {
        for j in m..d {
            proto.push(ProtoBasis {
                name: format!("e{}{}", i + 1, j + 1),
                parity: Parity::Odd,
                z_degree: 1,
                mat: QMatrix::unit(d, i, j),
            });
        }
    }
    let cartan = (0..d - 1).collect();
    assemble(
        &format!("sl({m}|{n})"),
        Family::Sl(m, n),
        proto,
        gl_parities(m, n),
        cartan,
        vec![],
    )
}

/// `osp(1|2n)` in `gl(1|2n)`; odd root vectors are normalized so that
/// `h_i = [u_i, v_i]` satisfies `delta_i(h_i) = 1`.
pub fn build_osp1(n: usize) -> Result<(LieSuperalgebra, DefiningRep), CoreError> {
    if n == 0 || n * (2 * n + 1) + 2 * n > MAX_DIM {
        return Err(CoreError::UnsupportedAlgebra(format!(
            "osp(1|{}) outside supported range",
            2 * n
        )));
    }
    let amb = 1 + 2 * n;
    // coordinates: 0 even; f_i = i, f_{-i} = n + i (1-based i).
    let fp = |i: usize| i; // f_i
    let fm = |i: usize| n + i; // f_{-i}
    let mut proto = Vec::new();
    // Cartan h_i = E_{f_i,f_i} - E_{f_-i,f_-i}
    for i in 1..=n {
        let mat = QMatrix::unit(amb, fp(i), fp(i)).sub(&QMatrix::unit(amb, fm(i), fm(i)));
        proto.push(ProtoBasis {
            name: format!("h{i}"),
            parity: Parity::Even,
            z_degree: 0,
            mat,
        });
    }
    // gl(n) part: A_ij = E_{f_i,f_j} - E_{f_-j,f_-i}, i != j
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                let mat = QMatrix::unit(amb, fp(i), fp(j)).sub(&QMatrix::unit(amb, fm(j), fm(i)));
                proto.push(ProtoBasis {
                    name: format!("a{i}{j}"),
                    parity: Parity::Even,
                    z_degree: 0,
                    mat,
                });
            }
        }
    }
    // B_ij = E_{f_i,f_-j} + E_{f_j,f_-i} (i <= j), weight delta_i + delta_j
    for i in 1..=n {
        for j in i..=n {
            let mat = QMatrix::unit(amb, fp(i), fm(j)).add(&QMatrix::unit(amb, fp(j), fm(i)));
            proto.push(ProtoBasis {
                name: format!("b{i}{j}"),
                parity: Parity::Even,
                z_degree: 0,
                mat,
            });
        }
    }
    // C_ij = E_{f_-i,f_j} + E_{f_-j,f_i} (i <= j), weight -delta_i - delta_j
    for i in 1..=n {
        for j in i..=n {
            let mat = QMatrix::unit(amb, fm(i), fp(j)).add(&QMatrix::unit(amb, fm(j), fp(i)));
            proto.push(ProtoBasis {
                name: format!("c{i}{j}"),
                parity: Parity::Even,
                z_degree: 0,
                mat,
            });
        }
    }
    // odd: u_i = E_{f_i,0} - E_{0,f_-i} (weight +delta_i),
    //      v_i = E_{f_-i,0} + E_{0,f_i} (weight -delta_i); [u_i,v_i] = h_i.
    for i in 1..=n {
        proto.push(ProtoBasis {
            name: format!("u{i}"),
            parity: Parity::Odd,
            z_degree: 0,
            mat: QMatrix::unit(amb, fp(i), 0).sub(&QMatrix::unit(amb, 0, fm(i))),
        });
        proto.push(ProtoBasis {
            name: format!("v{i}"),
            parity: Parity::Odd,
            z_degree: 0,
            mat: QMatrix::unit(amb, fm(i), 0).add(&QMatrix::unit(amb, 0, fp(i))),
        });
    }
    let cartan = (0..n).collect();
    let mut sp = vec![Parity::Odd; amb];
    sp[0] = Parity::Even;
    assemble(&format!("osp(1|{})", 2 * n), Family::Osp1(n), proto, sp, cartan, vec![])
}

/// `osp(2|2n)` in `gl(2|2n)` with hyperbolic even form; carries the type-I
/// grading by the charge of the `so(2)` generator `t`.
pub fn build_osp2(n: usize) -> Result<(LieSuperalgebra, DefiningRep), CoreError> {
    if n == 0 || 1 + n * (2 * n + 1) + 4 * n > MAX_DIM {
        return Err(CoreError::UnsupportedAlgebra(format!(
            "osp(2|{}) outside supported range",
            2 * n
        )));
    }
    let amb = 2 + 2 * n;
    let gp = 0usize;
    let gm = 1usize;
    let fp = |i: usize| 1 + i;
    let fm = |i: usize| 1 + n + i;
    let mut proto = Vec::new();
    // so(2) Cartan
    proto.push(ProtoBasis {
        name: "t".into(),
        parity: Parity::Even,
        z_degree: 0,
        mat: QMatrix::unit(amb, gp, gp).sub(&QMatrix::unit(amb, gm, gm)),
    });
    for i in 1..=n {
        let mat = QMatrix::unit(amb, fp(i), fp(i)).sub(&QMatrix::unit(amb, fm(i), fm(i)));
        proto.push(ProtoBasis {
            name: format!("h{i}"),
            parity: Parity::Even,
            z_degree: 0,
            mat,
        });
    }
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                let mat = QMatrix::unit(amb, fp(i), fp(j)).sub(&QMatrix::unit(amb, fm(j), fm(i)));
                proto.push(ProtoBasis {
                    name: format!("a{i}{j}"),
                    parity: Parity::Even,
                    z_degree: 0,
                    mat,
                });
            }
        }
    }
    for i in 1..=n {
        for j in i..=n {
            let mat = QMatrix::unit(amb, fp(i), fm(j)).add(&QMatrix::unit(amb, fp(j), fm(i)));
            proto.push(ProtoBasis {
                name: format!("b{i}{j}"),
                parity: Parity::Even,
                z_degree: 0,
                mat,
            });
            let mat = QMatrix::unit(amb, fm(i), fp(j)).add(&QMatrix::unit(amb, fm(j), fp(i)));
            proto.push(ProtoBasis {
                name: format!("c{i}{j}"),
                parity: Parity::Even,
                z_degree: 0,
                mat,
            });
        }
    }
    // odd X_{f,g} = E_{f,g} - sum_{f'} J[f,f'] E_{gbar,f'};
    // charge of X_{.,g+} is -1 (so z-degree -1), of X_{.,g-} is +1.
    let x_mat = |f_is_plus: bool, i: usize, g: usize, gbar: usize| {
        if f_is_plus {
            QMatrix::unit(amb, fp(i), g).sub(&QMatrix::unit(amb, gbar, fm(i)))
        } else {
            QMatrix::unit(amb, fm(i), g).add(&QMatrix::unit(amb, gbar, fp(i)))
        }
    };
    for i in 1..=n {
        proto.push(ProtoBasis {
            name: format!("yp{i}"),
            parity: Parity::Odd,
            z_degree: -1,
            mat: x_mat(true, i, gp, gm),
        });
        proto.push(ProtoBasis {
            name: format!("ym{i}"),
            parity: Parity::Odd,
            z_degree: -1,
            mat: x_mat(false, i, gp, gm),
        });
    }
    for i in 1..=n {
        proto.push(ProtoBasis {
            name: format!("xp{i}"),
            parity: Parity::Odd,
            z_degree: 1,
            mat: x_mat(true, i, gm, gp),
        });
        proto.push(ProtoBasis {
            name: format!("xm{i}"),
            parity: Parity::Odd,
            z_degree: 1,
            mat: x_mat(false, i, gm, gp),
        });
    }
    let cartan = (0..=n).collect();
    let mut sp = vec![Parity::Odd; amb];
    sp[gp] = Parity::Even;
    sp[gm] = Parity::Even;
    assemble(&format!("osp(2|{})", 2 * n), Family::Osp2(n), proto, sp, cartan, vec![])
}

/// Purely abelian `k^{m|n}`.
pub fn build_abelian(m: usize, n: usize) -> Result<LieSuperalgebra, CoreError> {
    if m + n == 0 || m + n > MAX_DIM {
        return Err(CoreError::UnsupportedAlgebra(format!(
            "abelian({m}|{n}) outside supported range"
        )));
    }
    let mut basis = Vec::new();
    for i in 1..=m {
        basis.push(BasisVector {
            name: format!("a{i}"),
            parity: Parity::Even,
            z_degree: 0,
            weight: vec![Rat::zero(); m],
        });
    }
    for i in 1..=n {
        basis.push(BasisVector {
            name: format!("x{i}"),
            parity: Parity::Odd,
            z_degree: 0,
            weight: vec![Rat::zero(); m],
        });
    }
    let dim = m + n;
    let alg = LieSuperalgebra {
        name: format!("abelian({m}|{n})"),
        family: Some(Family::Abelian(m, n)),
        basis,
        bracket: vec![vec![Vec::new(); dim]; dim],
        cartan_even: (0..m).collect(),
        cartan_odd: (m..dim).collect(),
    };
    Ok(alg)
}

/// `q(1)`: central even `h` with one odd `b`, `[b,b] = 2h`. Realized
/// inside `gl(1|1)` as `h = E11+E22`, `b = E12+E21`.
pub fn build_q1() -> Result<(LieSuperalgebra, DefiningRep), CoreError> {
    let proto = vec![
        ProtoBasis {
            name: "h".into(),
            parity: Parity::Even,
            z_degree: 0,
            mat: QMatrix::identity(2),
        },
        ProtoBasis {
            name: "b".into(),
            parity: Parity::Odd,
            z_degree: 0,
            mat: QMatrix::unit(2, 0, 1).add(&QMatrix::unit(2, 1, 0)),
        },
    ];
    assemble(
        "q(1)",
        Family::Q1,
        proto,
        vec![Parity::Even, Parity::Odd],
        vec![0],
        vec![1],
    )
}

/// Parse and build a family from a textual descriptor such as
/// `gl(1|1)`, `sl(2|1)`, `osp(1|2)`, `abelian(0|2)`, `q(1)`.
pub fn build_algebra(desc: &str) -> Result<LieSuperalgebra, CoreError> {
    build_algebra_with_rep(desc).map(|(alg, _)| alg)
}

/// Same as [`build_algebra`], returning the defining representation when
/// the family has one (everything except `abelian`).
pub fn build_algebra_with_rep(
    desc: &str,
) -> Result<(LieSuperalgebra, Option<DefiningRep>), CoreError> {
    let desc = desc.trim();
    let err = || CoreError::UnsupportedAlgebra(format!("cannot parse family '{desc}'"));
    // both gl(1|1) and the flag-friendly gl,1,1 are accepted
    let normalized;
    let desc = if desc.contains('(') {
        desc
    } else if let Some((head, rest)) = desc.split_once(',') {
        normalized = format!("{head}({})", rest.replace(',', "|"));
        &normalized
    } else {
        desc
    };
    let (head, rest) = desc.split_once('(').ok_or_else(err)?;
    let args = rest.strip_suffix(')').ok_or_else(err)?;
    let parse_pair = |s: &str| -> Result<(usize, usize), CoreError> {
        let (a, b) = s.split_once('|').ok_or_else(err)?;
        Ok((
            a.trim().parse().map_err(|_| err())?,
            b.trim().parse().map_err(|_| err())?,
        ))
    };
    match head.trim() {
        "gl" => {
            let (m, n) = parse_pair(args)?;
            let (a, r) = build_gl(m, n)?;
            Ok((a, Some(r)))
        }
        "sl" => {
            let (m, n) = parse_pair(args)?;
            let (a, r) = build_sl(m, n)?;
            Ok((a, Some(r)))
        }
        "osp" => {
            let (m, two_n) = parse_pair(args)?;
            if two_n == 0 || two_n % 2 != 0 {
                return Err(err());
            }
            match m {
                1 => {
                    let (a, r) = build_osp1(two_n / 2)?;
                    Ok((a, Some(r)))
                }
                2 => {
                    let (a, r) = build_osp2(two_n / 2)?;
                    Ok((a, Some(r)))
                }
                _ => Err(CoreError::UnsupportedAlgebra(format!(
                    "osp({m}|{two_n}) is not a built-in family"
                ))),
            }
        }
        "abelian" => {
            let (m, n) = parse_pair(args)?;
            Ok((build_abelian(m, n)?, None))
        }
        "q" => {
            if args.trim() == "1" || args.trim() == "1|0" {
                let (a, r) = build_q1()?;
                Ok((a, Some(r)))
            } else {
                Err(CoreError::UnsupportedAlgebra(
                    "only q(1) is built in; supply larger q(n) as a user table".into(),
                ))
            }
        }
        _ => Err(err()),
    }
}

/// Matrix of a word of generators in the defining representation: a plain
/// product of the generator matrices, independent of any PBW rewriting.
pub fn rep_matrix_of_word(rep: &DefiningRep, word: &[u16]) -> QMatrix {
    let n = rep.space_parities.len();
    let mut acc = QMatrix::identity(n);
    for &g in word {
        acc = acc.mul(&rep.matrices[g as usize]);
    }
    acc
}

/// Matrix of an element: the coefficient-weighted sum of its monomial
/// words. Only meaningful for rational coefficients.
pub fn rep_matrix_of_element(
    rep: &DefiningRep,
    elem: &crate::pbw::UEAElement,
) -> Result<QMatrix, CoreError> {
    let n = rep.space_parities.len();
    let mut acc = QMatrix::zero(n);
    for (m, c) in &elem.terms {
        let w = m.to_word(&elem.ord);
        let c = c.as_rat().ok_or_else(|| {
            CoreError::Unsupported("matrix oracle needs rational coefficients".into())
        })?;
        acc = acc.add(&rep_matrix_of_word(rep, &w).scale(&c));
    }
    Ok(acc)
}
