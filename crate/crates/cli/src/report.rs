//! Machine-readable run reports: deterministic JSON with exact scalar
//! strings, plus an FNV-1a fingerprint of the structure constants.

use serde::Serialize;
use serde_json::{json, Value};

use ghostcentre_core::algebra::LieSuperalgebra;
use ghostcentre_core::pbw::UEAElement;
use ghostcentre_core::poly::SuperPolynomial;
use ghostcentre_core::scalar::rat_string;

/// FNV-1a over the canonical bracket-table serialization.
pub fn fingerprint(alg: &LieSuperalgebra) -> String {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    let mut eat = |bytes: &[u8]| {
        for &b in bytes {
            h ^= b as u64;
            h = h.wrapping_mul(0x0000_0100_0000_01b3);
        }
    };
    for b in &alg.basis {
        eat(b.name.as_bytes());
        eat(&[match b.parity {
            ghostcentre_core::algebra::Parity::Even => 0,
            ghostcentre_core::algebra::Parity::Odd => 1,
        }]);
        eat(&b.z_degree.to_le_bytes());
        for w in &b.weight {
            eat(rat_string(w).as_bytes());
        }
    }
    for i in 0..alg.dim() {
        for j in 0..alg.dim() {
            for (k, c) in alg.bracket_basis(i, j) {
                eat(&(i as u64).to_le_bytes());
                eat(&(j as u64).to_le_bytes());
                eat(&(*k as u64).to_le_bytes());
                eat(rat_string(c).as_bytes());
            }
        }
    }
    format!("{h:016x}")
}

pub fn element_json(elem: &UEAElement, alg: &LieSuperalgebra) -> Value {
    let terms: Vec<Value> = elem
        .terms
        .iter()
        .map(|(m, c)| {
            json!({
                "monomial": m.display(alg, &elem.ord),
                "coefficient": format!("{c}"),
            })
        })
        .collect();
    json!({
        "field": format!("{}", elem.field),
        "ordering": elem.ord.name,
        "terms": terms,
    })
}

pub fn poly_json(p: &SuperPolynomial) -> Value {
    let terms: Vec<Value> = p
        .terms
        .iter()
        .map(|(m, c)| {
            let mut factors: Vec<String> = Vec::new();
            for (i, &e) in m.even.iter().enumerate() {
                if e == 1 {
                    factors.push(p.space.even[i].clone());
                } else if e > 1 {
                    factors.push(format!("{}^{}", p.space.even[i], e));
                }
            }
            for (i, name) in p.space.odd.iter().enumerate() {
                if m.odd & (1 << i) != 0 {
                    factors.push(name.clone());
                }
            }
            json!({
                "monomial": if factors.is_empty() { "1".to_string() } else { factors.join("*") },
                "coefficient": format!("{c}"),
            })
        })
        .collect();
    json!({
        "variables": { "even": p.space.even, "odd": p.space.odd },
        "terms": terms,
    })
}

/// The outer report envelope. `timing_ms` is filled only on request so
/// that default output stays byte-stable across runs.
#[derive(Serialize)]
pub struct RunReport {
    pub command: String,
    pub algebra: String,
    pub fingerprint: String,
    pub field: String,
    pub results: Value,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub certificates: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

impl RunReport {
    pub fn render(&self, as_json: bool) -> String {
        if as_json {
            serde_json::to_string_pretty(self).expect("report json")
        } else {
            let mut out = String::new();
            out.push_str(&format!("# {} on {} [{}]\n", self.command, self.algebra, self.field));
            out.push_str(&format!("fingerprint: {}\n", self.fingerprint));
            out.push_str(&render_value(&self.results, 0));
            for c in &self.certificates {
                out.push_str(&format!("certificate: {c}\n"));
            }
            for n in &self.notes {
                out.push_str(&format!("note: {n}\n"));
            }
            if let Some(t) = self.timing_ms {
                out.push_str(&format!("timing_ms: {t}\n"));
            }
            out
        }
    }
}

fn render_value(v: &Value, indent: usize) -> String {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            let mut out = String::new();
            for (k, val) in map {
                match val {
                    Value::Object(_) | Value::Array(_) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        out.push_str(&render_value(val, indent + 1));
                    }
                    _ => out.push_str(&format!("{pad}{k}: {}\n", plain(val))),
                }
            }
            out
        }
        Value::Array(items) => {
            let mut out = String::new();
            for item in items {
                match item {
                    Value::Object(_) | Value::Array(_) => {
                        out.push_str(&format!("{pad}-\n"));
                        out.push_str(&render_value(item, indent + 1));
                    }
                    _ => out.push_str(&format!("{pad}- {}\n", plain(item))),
                }
            }
            out
        }
        _ => format!("{pad}{}\n", plain(v)),
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
