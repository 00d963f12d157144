//! Lie superalgebra structure data and validation.
//!
//! An algebra is an ordered homogeneous basis together with an exact
//! structure-constant table over the rationals. Field promotion happens at
//! the element level; the algebra data itself is field-independent.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::scalar::Rat;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn flip(self) -> Self {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }

    pub fn sign_product(self, other: Self) -> i8 {
        if self == Parity::Odd && other == Parity::Odd {
            -1
        } else {
            1
        }
    }
}

/// Built-in family tags; user-supplied tables carry `None`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Gl(usize, usize),
    Sl(usize, usize),
    Osp1(usize),
    Osp2(usize),
    Abelian(usize, usize),
    Q1,
}

#[derive(Debug, Clone)]
pub struct BasisVector {
    pub name: String,
    pub parity: Parity,
    /// -1/0/+1 for compatible Z-gradings, 0 otherwise.
    pub z_degree: i32,
    /// Values of the simultaneous ad-eigenvalue on the even Cartan basis.
    pub weight: Vec<Rat>,
}

/// Sparse bracket value: list of (basis index, coefficient).
pub type BracketEntry = Vec<(usize, Rat)>;

#[derive(Debug, Clone)]
pub struct LieSuperalgebra {
    pub name: String,
    pub family: Option<Family>,
    pub basis: Vec<BasisVector>,
    /// `bracket[i][j]` = [x_i, x_j] as a sparse vector.
    pub bracket: Vec<Vec<BracketEntry>>,
    pub cartan_even: Vec<usize>,
    pub cartan_odd: Vec<usize>,
}

impl LieSuperalgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.basis[i].parity
    }

    pub fn odd_indices(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.parity(i) == Parity::Odd).collect()
    }

    pub fn even_indices(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.parity(i) == Parity::Even).collect()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.basis.iter().position(|b| b.name == name)
    }

    /// True when the designated Cartan subalgebra is purely even and
    /// self-centralizing (every non-Cartan basis vector has nonzero weight).
    pub fn is_cartan_even(&self) -> bool {
        if !self.cartan_odd.is_empty() {
            return false;
        }
        for i in 0..self.dim() {
            if self.cartan_even.contains(&i) {
                continue;
            }
            if self.basis[i].weight.iter().all(|w| w.is_zero()) {
                return false;
            }
        }
        true
    }

    /// Does the algebra carry a compatible Z-grading with `g_1 != 0`?
    pub fn is_type_i(&self) -> bool {
        let mut has = false;
        for b in &self.basis {
            match (b.parity, b.z_degree) {
                (Parity::Odd, d) if d == 1 || d == -1 => has = true,
                (Parity::Odd, _) => return false,
                (Parity::Even, 0) => {}
                (Parity::Even, _) => return false,
            }
        }
        has
    }

    pub fn z_graded_indices(&self, degree: i32) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.basis[i].z_degree == degree).collect()
    }

    /// Bracket of two basis vectors as a sparse rational vector.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &BracketEntry {
        &self.bracket[i][j]
    }

    /// Bracket of two dense rational vectors.
    pub fn bracket_vec(&self, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); self.dim()];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                for (k, c) in &self.bracket[i][j] {
                    out[*k] += xi * yj * c;
                }
            }
        }
        out
    }

    /// Sum of the weights of all odd basis vectors: the weight by which the
    /// even Cartan acts on the top exterior power of the odd part.
    pub fn berezinian_odd_weight(&self) -> Vec<Rat> {
        let mut w = vec![Rat::zero(); self.cartan_even.len()];
        for i in self.odd_indices() {
            for (k, v) in self.basis[i].weight.iter().enumerate() {
                w[k] += v;
            }
        }
        w
    }

    /// Exhaustive structural validation; the report lists every violation.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        let n = self.dim();
        for (i, b) in self.basis.iter().enumerate() {
            if b.weight.len() != self.cartan_even.len() {
                violations.push(format!("basis vector {} has wrong weight length", b.name));
            }
            if b.z_degree != 0 && b.parity == Parity::Even {
                violations.push(format!("even vector {} has nonzero z-degree", b.name));
            }
            if self.cartan_even.contains(&i) && b.weight.iter().any(|w| !w.is_zero()) {
                violations.push(format!("Cartan vector {} has nonzero weight", b.name));
            }
        }
        // super-antisymmetry: [x,y] + (-1)^{|x||y|}[y,x] = 0
        for i in 0..n {
            for j in 0..n {
                let sign = self.parity(i).sign_product(self.parity(j));
                let mut acc = vec![Rat::zero(); n];
                for (k, c) in &self.bracket[i][j] {
                    acc[*k] += c;
                }
                for (k, c) in &self.bracket[j][i] {
                    if sign > 0 {
                        acc[*k] += c;
                    } else {
                        acc[*k] -= c;
                    }
                }
                if acc.iter().any(|c| !c.is_zero()) {
                    violations.push(format!(
                        "super-antisymmetry fails on ({}, {})",
                        self.basis[i].name, self.basis[j].name
                    ));
                }
            }
        }
        // parity, z-degree and weight additivity of the bracket
        for i in 0..n {
            for j in 0..n {
                for (k, c) in &self.bracket[i][j] {
                    if c.is_zero() {
                        continue;
                    }
                    let pij = if self.parity(i) == self.parity(j) {
                        Parity::Even
                    } else {
                        Parity::Odd
                    };
                    if self.parity(*k) != pij {
                        violations.push(format!(
                            "bracket parity fails on ({}, {})",
                            self.basis[i].name, self.basis[j].name
                        ));
                    }
                    if self.basis[*k].z_degree != self.basis[i].z_degree + self.basis[j].z_degree {
                        violations.push(format!(
                            "bracket z-degree fails on ({}, {})",
                            self.basis[i].name, self.basis[j].name
                        ));
                    }
                    for t in 0..self.cartan_even.len() {
                        let sum = &self.basis[i].weight[t] + &self.basis[j].weight[t];
                        if self.basis[*k].weight[t] != sum {
                            violations.push(format!(
                                "weight additivity fails on ({}, {})",
                                self.basis[i].name, self.basis[j].name
                            ));
                        }
                    }
                }
            }
        }
        // super Jacobi: [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|}[y,[x,z]]
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let mut acc = vec![Rat::zero(); n];
                    for (t, c) in &self.bracket[j][k] {
                        for (u, d) in &self.bracket[i][*t] {
                            acc[*u] += c * d;
                        }
                    }
                    for (t, c) in &self.bracket[i][j] {
                        for (u, d) in &self.bracket[*t][k] {
                            acc[*u] -= c * d;
                        }
                    }
                    let sign = self.parity(i).sign_product(self.parity(j));
                    for (t, c) in &self.bracket[i][k] {
                        for (u, d) in &self.bracket[j][*t] {
                            if sign > 0 {
                                acc[*u] -= c * d;
                            } else {
                                acc[*u] += c * d;
                            }
                        }
                    }
                    if acc.iter().any(|c| !c.is_zero()) {
                        violations.push(format!(
                            "super Jacobi fails on ({}, {}, {})",
                            self.basis[i].name, self.basis[j].name, self.basis[k].name
                        ));
                    }
                }
            }
        }
        ValidationReport { violations }
    }
}

#[derive(Debug, Clone)]
pub struct ValidationReport {
    pub violations: Vec<String>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}
