//! Expression grammar for elements of `U(g)`:
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := rational | 'c' | generator ['^' integer]
//! ```
//!
//! Generator names come from the algebra basis; the parameter literal `c`
//! is a scalar and is accepted only over the rational-function field.
//! Serialized output uses `^` exponents, which the parser accepts back.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::algebra::LieSuperalgebra;
use crate::error::CoreError;
use crate::pbw::{PbwEngine, UEAElement};
use crate::scalar::{parse_rat, FieldKind, FieldScalar};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, CoreError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        match b {
            b' ' | b'\t' | b'\n' | b'\r' => i += 1,
            b'+' => {
                out.push((i, Tok::Plus));
                i += 1;
            }
            b'-' => {
                out.push((i, Tok::Minus));
                i += 1;
            }
            b'*' => {
                out.push((i, Tok::Star));
                i += 1;
            }
            b'^' => {
                out.push((i, Tok::Caret));
                i += 1;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                // optional /q part of an exact rational
                if i < bytes.len() && bytes[i] == b'/' {
                    let mut j = i + 1;
                    while j < bytes.len() && bytes[j].is_ascii_digit() {
                        j += 1;
                    }
                    if j == i + 1 {
                        return Err(CoreError::Parse {
                            pos: i,
                            message: "expected digits after '/'".into(),
                        });
                    }
                    i = j;
                }
                out.push((start, Tok::Num(text[start..i].to_string())));
            }
            b'a'..=b'z' | b'A'..=b'Z' | b'_' => {
                let start = i;
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                out.push((start, Tok::Ident(text[start..i].to_string())));
            }
            _ => {
                return Err(CoreError::Parse {
                    pos: i,
                    message: format!("unexpected character '{}'", text[i..].chars().next().unwrap()),
                })
            }
        }
    }
    Ok(out)
}

/// Parse an expression into a normal-ordered element over the engine's
/// ordering and the requested field.
pub fn parse_element(
    text: &str,
    alg: &LieSuperalgebra,
    engine: &PbwEngine<'_>,
    field: FieldKind,
) -> Result<UEAElement, CoreError> {
    let toks = lex(text)?;
    let mut pos = 0usize;
    let mut parts: Vec<(Vec<u16>, FieldScalar)> = Vec::new();
    loop {
        // sign run before the term (leading sign or `+ -x` style)
        let mut sign_negative = false;
        while let Some((_, tok)) = toks.get(pos) {
            match tok {
                Tok::Plus => pos += 1,
                Tok::Minus => {
                    sign_negative = !sign_negative;
                    pos += 1;
                }
                _ => break,
            }
        }
        let (word, coeff) = parse_term(&toks, &mut pos, alg, field)?;
        let coeff = if sign_negative { coeff.neg() } else { coeff };
        parts.push((word, coeff));
        match toks.get(pos) {
            None => break,
            Some((_, Tok::Plus)) | Some((_, Tok::Minus)) => {}
            Some((p, _)) => {
                return Err(CoreError::Parse {
                    pos: *p,
                    message: "expected '+' or '-' between terms".into(),
                })
            }
        }
    }
    let mut out = engine.zero(field);
    for (w, c) in parts {
        let t = engine.from_word(&w, c);
        out = out.add(&t)?;
    }
    Ok(out)
}

fn parse_term(
    toks: &[(usize, Tok)],
    pos: &mut usize,
    alg: &LieSuperalgebra,
    field: FieldKind,
) -> Result<(Vec<u16>, FieldScalar), CoreError> {
    let mut word: Vec<u16> = Vec::new();
    let mut coeff = FieldScalar::one(field);
    loop {
        let Some((p, tok)) = toks.get(*pos) else {
            return Err(CoreError::Parse {
                pos: toks.last().map(|(p, _)| *p + 1).unwrap_or(0),
                message: "expected a factor".into(),
            });
        };
        match tok {
            Tok::Num(s) => {
                let r = parse_rat(s).map_err(|_| CoreError::Parse {
                    pos: *p,
                    message: format!("malformed rational '{s}'"),
                })?;
                coeff = coeff.mul(&FieldScalar::from_rat(r, field));
                *pos += 1;
            }
            Tok::Ident(name) => {
                if let Some(g) = alg.index_of(name) {
                    *pos += 1;
                    let mut reps = 1u32;
                    if let Some((_, Tok::Caret)) = toks.get(*pos) {
                        let Some((pe, Tok::Num(e))) = toks.get(*pos + 1) else {
                            return Err(CoreError::Parse {
                                pos: p + name.len(),
                                message: "expected an integer exponent after '^'".into(),
                            });
                        };
                        reps = e.parse().map_err(|_| CoreError::Parse {
                            pos: *pe,
                            message: format!("malformed exponent '{e}'"),
                        })?;
                        *pos += 2;
                    }
                    for _ in 0..reps {
                        word.push(g as u16);
                    }
                } else if name == "c" {
                    if field != FieldKind::RatFun {
                        return Err(CoreError::Parse {
                            pos: *p,
                            message: "parameter 'c' requires the ratfun-c field".into(),
                        });
                    }
                    *pos += 1;
                    let mut reps = 1u32;
                    if let Some((_, Tok::Caret)) = toks.get(*pos) {
                        let Some((pe, Tok::Num(e))) = toks.get(*pos + 1) else {
                            return Err(CoreError::Parse {
                                pos: p + 1,
                                message: "expected an integer exponent after '^'".into(),
                            });
                        };
                        reps = e.parse().map_err(|_| CoreError::Parse {
                            pos: *pe,
                            message: format!("malformed exponent '{e}'"),
                        })?;
                        *pos += 2;
                    }
                    for _ in 0..reps {
                        coeff = coeff.mul(&FieldScalar::fun_c());
                    }
                } else {
                    return Err(CoreError::Parse {
                        pos: *p,
                        message: format!("unknown generator '{name}'"),
                    });
                }
            }
            _ => {
                return Err(CoreError::Parse {
                    pos: *p,
                    message: "expected a rational, 'c', or a generator name".into(),
                })
            }
        }
        match toks.get(*pos) {
            Some((_, Tok::Star)) => {
                *pos += 1;
            }
            _ => break,
        }
    }
    Ok((word, coeff))
}

/// Canonical serialization: sorted monomials with explicit coefficients,
/// parseable back by [`parse_element`] whenever the coefficients are
/// rational or polynomial in `c`. Proper rational functions (and
/// cyclotomic scalars) fall back to a parenthesized display form.
pub fn serialize_element(elem: &UEAElement, alg: &LieSuperalgebra) -> String {
    use ghost_fmt::push_signed;
    if elem.terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (m, c) in &elem.terms {
        let mono = m.display(alg, &elem.ord);
        match c {
            FieldScalar::Rat(r) => push_signed(&mut out, r, None, &mono),
            FieldScalar::Fun { num, den } if den.degree() == Some(0) => {
                // denominator is monic, hence exactly 1: distribute over
                // the powers of c
                for (k, a) in num.0.iter().enumerate() {
                    if !num_traits::Zero::is_zero(a) {
                        push_signed(&mut out, a, Some(k), &mono);
                    }
                }
            }
            other => {
                if !out.is_empty() {
                    out.push_str(" + ");
                }
                if mono == "1" {
                    out.push_str(&alloc::format!("({other})"));
                } else {
                    out.push_str(&alloc::format!("({other})*{mono}"));
                }
            }
        }
    }
    out
}

mod ghost_fmt {
    use alloc::format;
    use alloc::string::String;
    use alloc::vec::Vec;
    use num_traits::{One, Signed};

    use crate::scalar::{rat_string, Rat};

    /// Append `coeff * c^k * mono` with explicit sign handling.
    pub fn push_signed(out: &mut String, coeff: &Rat, c_pow: Option<usize>, mono: &str) {
        let neg = coeff.is_negative();
        let mag = coeff.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else if neg {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let mut factors: Vec<String> = Vec::new();
        match c_pow {
            Some(0) | None => {}
            Some(1) => factors.push("c".into()),
            Some(k) => factors.push(format!("c^{k}")),
        }
        if mono != "1" {
            factors.push(mono.into());
        }
        if factors.is_empty() || !mag.is_one() {
            factors.insert(0, rat_string(&mag));
        }
        out.push_str(&factors.join("*"));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::build_gl;
    use crate::scalar::rat;

    #[test]
    fn parses_shifted_ghost_expression() {
        let (g, _) = build_gl(1, 1).unwrap();
        let eng = PbwEngine::coset(&g);
        let e = parse_element("y*x - 1/2*h1 - 1/2*h2", &g, &eng, FieldKind::Rational).unwrap();
        assert_eq!(e.terms.len(), 3);
        let y = g.index_of("y").unwrap() as u16;
        let x = g.index_of("x").unwrap() as u16;
        let yx = eng.from_word(&[y, x], FieldScalar::Rat(rat(1, 1)));
        let h1 = eng.gen(g.index_of("h1").unwrap(), FieldKind::Rational);
        let h2 = eng.gen(g.index_of("h2").unwrap(), FieldKind::Rational);
        let expect = yx
            .sub(&h1.scaled(&FieldScalar::Rat(rat(1, 2))))
            .unwrap()
            .sub(&h2.scaled(&FieldScalar::Rat(rat(1, 2))))
            .unwrap();
        assert_eq!(e, expect);
    }

    #[test]
    fn squares_collapse() {
        let (g, _) = build_gl(1, 1).unwrap();
        let eng = PbwEngine::coset(&g);
        let e = parse_element("x*x", &g, &eng, FieldKind::Rational).unwrap();
        assert!(e.is_zero());
        let e2 = parse_element("h1^3", &g, &eng, FieldKind::Rational).unwrap();
        assert_eq!(e2.filtration_degree(&g), 6);
    }

    #[test]
    fn errors_carry_position() {
        let (g, _) = build_gl(1, 1).unwrap();
        let eng = PbwEngine::coset(&g);
        match parse_element("q*x", &g, &eng, FieldKind::Rational) {
            Err(CoreError::Parse { pos, message }) => {
                assert_eq!(pos, 0);
                assert!(message.contains("unknown generator"));
            }
            other => panic!("expected parse error, got {other:?}"),
        }
        // c outside the ratfun field
        assert!(parse_element("c*x", &g, &eng, FieldKind::Rational).is_err());
        assert!(parse_element("c*x", &g, &eng, FieldKind::RatFun).is_ok());
        // dangling operator
        assert!(parse_element("x +", &g, &eng, FieldKind::Rational).is_err());
    }

    #[test]
    fn round_trip() {
        let (g, _) = build_gl(1, 1).unwrap();
        let eng = PbwEngine::coset(&g);
        let e = parse_element("3*h1^2*h2 - 2/3*y*x + 1", &g, &eng, FieldKind::Rational).unwrap();
        let s = serialize_element(&e, &g);
        let back = parse_element(&s, &g, &eng, FieldKind::Rational).unwrap();
        assert_eq!(e, back);
    }
}
