//! JSON file formats: user-supplied structure-constant tables and Borel
//! positivity functionals.

use serde::{Deserialize, Serialize};

use ghostcentre_core::algebra::{BasisVector, LieSuperalgebra, Parity};
use ghostcentre_core::error::CoreError;
use ghostcentre_core::scalar::{parse_rat, rat_string, Rat};

pub const ALGEBRA_FORMAT: &str = "ghostcentre-algebra";
pub const ALGEBRA_VERSION: u32 = 1;

#[derive(Debug, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub format: String,
    pub version: u32,
    pub name: String,
    pub basis: Vec<BasisEntry>,
    /// Triples `(i, j, [[k, "p/q"], ...])`; omitted pairs bracket to zero.
    pub brackets: Vec<(usize, usize, Vec<(usize, String)>)>,
    #[serde(default)]
    pub cartan_even: Vec<usize>,
    #[serde(default)]
    pub cartan_odd: Vec<usize>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct BasisEntry {
    pub name: String,
    pub parity: String,
    #[serde(default)]
    pub z_degree: i32,
    pub weight: Vec<String>,
}

/// Parse and validate a user algebra. Any structural violation is an
/// error: the engine's correctness arguments assume valid tables.
pub fn algebra_from_json(text: &str) -> Result<LieSuperalgebra, CoreError> {
    let file: AlgebraFile = serde_json::from_str(text)
        .map_err(|e| CoreError::UnsupportedAlgebra(format!("bad algebra file: {e}")))?;
    if file.format != ALGEBRA_FORMAT {
        return Err(CoreError::UnsupportedAlgebra(format!(
            "unknown format '{}'",
            file.format
        )));
    }
    if file.version != ALGEBRA_VERSION {
        return Err(CoreError::UnsupportedAlgebra(format!(
            "unsupported version {}",
            file.version
        )));
    }
    let dim = file.basis.len();
    let mut basis = Vec::with_capacity(dim);
    for b in &file.basis {
        let parity = match b.parity.as_str() {
            "even" => Parity::Even,
            "odd" => Parity::Odd,
            other => {
                return Err(CoreError::UnsupportedAlgebra(format!(
                    "parity must be 'even' or 'odd', got '{other}'"
                )))
            }
        };
        let weight = b
            .weight
            .iter()
            .map(|s| parse_rat(s))
            .collect::<Result<Vec<Rat>, _>>()?;
        basis.push(BasisVector {
            name: b.name.clone(),
            parity,
            z_degree: b.z_degree,
            weight,
        });
    }
    let mut bracket = vec![vec![Vec::new(); dim]; dim];
    for (i, j, entries) in &file.brackets {
        if *i >= dim || *j >= dim {
            return Err(CoreError::UnsupportedAlgebra(
                "bracket index out of range".into(),
            ));
        }
        let mut row = Vec::with_capacity(entries.len());
        for (k, c) in entries {
            if *k >= dim {
                return Err(CoreError::UnsupportedAlgebra(
                    "bracket target out of range".into(),
                ));
            }
            row.push((*k, parse_rat(c)?));
        }
        bracket[*i][*j] = row;
    }
    let alg = LieSuperalgebra {
        name: file.name,
        family: None,
        basis,
        bracket,
        cartan_even: file.cartan_even,
        cartan_odd: file.cartan_odd,
    };
    let report = alg.validate();
    if !report.passed() {
        return Err(CoreError::UnsupportedAlgebra(format!(
            "user algebra failed validation: {}",
            report.violations.join("; ")
        )));
    }
    Ok(alg)
}

/// Serialize a built-in algebra into the interchange format (handy for
/// bootstrapping user tables).
pub fn algebra_to_json(alg: &LieSuperalgebra) -> String {
    let basis = alg
        .basis
        .iter()
        .map(|b| BasisEntry {
            name: b.name.clone(),
            parity: match b.parity {
                Parity::Even => "even".into(),
                Parity::Odd => "odd".into(),
            },
            z_degree: b.z_degree,
            weight: b.weight.iter().map(rat_string).collect(),
        })
        .collect();
    let mut brackets = Vec::new();
    for i in 0..alg.dim() {
        for j in 0..alg.dim() {
            let e = alg.bracket_basis(i, j);
            if !e.is_empty() {
                brackets.push((
                    i,
                    j,
                    e.iter().map(|(k, c)| (*k, rat_string(c))).collect(),
                ));
            }
        }
    }
    let file = AlgebraFile {
        format: ALGEBRA_FORMAT.into(),
        version: ALGEBRA_VERSION,
        name: alg.name.clone(),
        basis,
        brackets,
        cartan_even: alg.cartan_even.clone(),
        cartan_odd: alg.cartan_odd.clone(),
    };
    serde_json::to_string_pretty(&file).expect("serialize algebra")
}

#[derive(Debug, Serialize, Deserialize)]
pub struct BorelFile {
    /// Positivity functional in even-Cartan coordinates, "p/q" strings.
    pub functional: Vec<String>,
}

pub fn functional_from_json(text: &str) -> Result<Vec<Rat>, CoreError> {
    let f: BorelFile = serde_json::from_str(text)
        .map_err(|e| CoreError::AmbiguousPositivity(format!("bad borel file: {e}")))?;
    f.functional.iter().map(|s| parse_rat(s)).collect()
}
