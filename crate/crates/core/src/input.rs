//! Line-oriented input documents.
//!
//! ```text
//! # comment
//! field Q                 | field F <p>
//! curve <poly>
//! foliation <A> ; <B> ; <C>
//! ideal <g1> ; <g2> ; ...
//! meta irreducible true|false|unknown
//! meta description <free text>
//! ```
//!
//! `field` may appear anywhere but at most once; polynomials are parsed over
//! it after the whole document is read. `ideal` is only read by the oracle
//! command.

use crate::algebra::{parse_polynomial, FieldSpec, Polynomial};
use crate::curves::{Irreducibility, PlaneCurve};
use crate::error::{Error, Result};
use crate::foliations::Form;
use crate::groebner::Ideal;

#[derive(Clone, Debug)]
pub struct InputDocument {
    pub field: FieldSpec,
    pub curve: Option<PlaneCurve>,
    pub foliation: Option<Form>,
    pub ideal: Option<Vec<Polynomial>>,
    pub claimed_irreducibility: Option<Irreducibility>,
    pub description: Option<String>,
}

fn line_error(line: usize, msg: impl std::fmt::Display) -> Error {
    Error::Input(format!("line {line}: {msg}"))
}

fn parse_list(text: &str, field: FieldSpec, line: usize) -> Result<Vec<Polynomial>> {
    text.split(';')
        .map(|part| parse_polynomial(part.trim(), field).map_err(|e| line_error(line, e)))
        .collect()
}

impl InputDocument {
    pub fn parse(text: &str) -> Result<InputDocument> {
        let mut field = None;
        let mut curve = None;
        let mut foliation = None;
        let mut ideal = None;
        let mut claimed = None;
        let mut description = None;
        for (k, raw) in text.lines().enumerate() {
            let n = k + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
            let rest = rest.trim();
            let slot = match key {
                "field" => {
                    if field.is_some() {
                        return Err(line_error(n, "field declared twice"));
                    }
                    let f = match rest.split_whitespace().collect::<Vec<_>>().as_slice() {
                        ["Q"] => FieldSpec::rationals(),
                        ["F", p] => {
                            let p: u32 = p.parse().map_err(|_| line_error(n, format!("bad characteristic {p:?}")))?;
                            FieldSpec::prime(p).map_err(|e| line_error(n, e))?
                        }
                        _ => return Err(line_error(n, "expected `field Q` or `field F <p>`")),
                    };
                    field = Some(f);
                    continue;
                }
                "curve" => &mut curve,
                "foliation" => &mut foliation,
                "ideal" => &mut ideal,
                "meta" => {
                    let (what, value) = rest.split_once(char::is_whitespace).unwrap_or((rest, ""));
                    match (what, value.trim()) {
                        ("irreducible", "true") => claimed = Some(Irreducibility::Irreducible),
                        ("irreducible", "false") => claimed = Some(Irreducibility::Reducible),
                        ("irreducible", "unknown") => claimed = Some(Irreducibility::Unknown),
                        ("description", v) => description = Some(v.to_string()),
                        _ => return Err(line_error(n, format!("unknown meta line {rest:?}"))),
                    }
                    continue;
                }
                other => return Err(line_error(n, format!("unknown directive {other:?}"))),
            };
            if slot.is_some() {
                return Err(line_error(n, format!("{key} given twice")));
            }
            if rest.is_empty() {
                return Err(line_error(n, format!("{key} needs a polynomial")));
            }
            *slot = Some((n, rest.to_string()));
        }
        let field = field.unwrap_or(FieldSpec::rationals());
        let curve = match curve {
            Some((n, text)) => Some(PlaneCurve::parse(&text, field).map_err(|e| line_error(n, e))?),
            None => None,
        };
        let foliation = match foliation {
            Some((n, text)) => {
                let parts = parse_list(&text, field, n)?;
                let form: Form = parts
                    .try_into()
                    .map_err(|_| line_error(n, "foliation needs exactly three coefficients"))?;
                Some(form)
            }
            None => None,
        };
        let ideal = match ideal {
            Some((n, text)) => Some(parse_list(&text, field, n)?),
            None => None,
        };
        if curve.is_none() && foliation.is_none() && ideal.is_none() {
            return Err(Error::Input("document has no curve, foliation or ideal".into()));
        }
        Ok(InputDocument { field, curve, foliation, ideal, claimed_irreducibility: claimed, description })
    }

    /// Canonical text; parsing it gives back the same document.
    pub fn to_text(&self) -> String {
        let mut out = format!("field {}\n", self.field);
        if let Some(d) = &self.description {
            out += &format!("meta description {d}\n");
        }
        if let Some(c) = &self.curve {
            out += &format!("curve {c}\n");
        }
        if let Some([a, b, c]) = &self.foliation {
            out += &format!("foliation {a} ; {b} ; {c}\n");
        }
        if let Some(gens) = &self.ideal {
            let parts: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
            out += &format!("ideal {}\n", parts.join(" ; "));
        }
        if let Some(c) = self.claimed_irreducibility {
            let v = match c {
                Irreducibility::Irreducible => "true",
                Irreducibility::Reducible => "false",
                Irreducibility::Unknown => "unknown",
            };
            out += &format!("meta irreducible {v}\n");
        }
        out
    }

    /// The ideal the oracle command reads: the `ideal` line, or else the
    /// Tjurina ideal `(f, f_x, f_y)` of the curve in the chart z = 1.
    pub fn oracle_ideal(&self) -> Result<Ideal> {
        if let Some(gens) = &self.ideal {
            return Ok(Ideal::affine(self.field, gens.iter().cloned()));
        }
        let c = self.curve.as_ref().ok_or_else(|| Error::Input("oracle needs an ideal or a curve".into()))?;
        Ok(affine_tjurina_ideal(c))
    }
}

pub fn affine_tjurina_ideal(c: &PlaneCurve) -> Ideal {
    use crate::algebra::Var;
    let f = c.equation().dehomogenize(Var::Z);
    let gens = [f.clone(), f.differentiate(Var::X), f.differentiate(Var::Y)];
    Ideal::affine(c.field(), gens.into_iter().filter(|g| !g.is_zero()))
}
