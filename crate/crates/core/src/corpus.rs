//! Built-in corpus of curves and foliations with expected invariants.
//!
//! Each expected value carries a source tag. `cited` values are quoted
//! results, `elementary` ones follow by hand, and `oracle` ones were computed
//! once by `corpus run --bless` and frozen in `corpus/expected.json`: τ there
//! is cross-checked by the Macaulay colength oracle in a random chart, the
//! rest by the pipeline itself. Blessing never overwrites a cited or
//! elementary value.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{FieldSpec, LinearChange, Polynomial, VarSet};
use crate::bounds::{full_report, BoundsReport, ReportOptions};
use crate::error::{Error, Result};
use crate::foliations::{tangency_degree_check, Foliation};
use crate::groebner::oracle::oracle_colength;
use crate::input::{affine_tjurina_ideal, InputDocument};
use crate::seeded_rng;

pub const EXPECTED_JSON: &str = include_str!("../corpus/expected.json");
pub const EXPECTED_PATH: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/corpus/expected.json");

const STREAM_RANDOM_CURVES: u64 = 31;
const STREAM_BLESS: u64 = 32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    Cited,
    Elementary,
    Oracle,
}

/// Keys compared by the runner. `m_leaf_min` is a lower bound, `gated` = 1
/// means the invariants stage must refuse the curve.
pub const KEYS: [&str; 9] = ["tau", "sigma", "u", "m_leaf", "m_factors", "m_leaf_min", "deg_s", "reg_s", "gated"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expected {
    pub value: i64,
    pub source: Source,
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub tags: Vec<&'static str>,
    pub text: String,
    pub expected: BTreeMap<&'static str, Expected>,
}

impl CorpusEntry {
    fn new(name: impl Into<String>, tags: &[&'static str], text: impl Into<String>) -> Self {
        CorpusEntry { name: name.into(), tags: tags.to_vec(), text: text.into(), expected: BTreeMap::new() }
    }

    fn with(mut self, key: &'static str, value: i64, source: Source) -> Self {
        assert!(KEYS.contains(&key));
        self.expected.insert(key, Expected { value, source });
        self
    }

    pub fn document(&self) -> Result<InputDocument> {
        InputDocument::parse(&self.text)
    }

    pub fn matches(&self, filter: Option<&str>) -> bool {
        filter.is_none_or(|f| self.name == f || self.tags.contains(&f))
    }
}

fn q_curve(curve: &str, irreducible: &str) -> String {
    format!("field Q\ncurve {curve}\nmeta irreducible {irreducible}\n")
}

fn random_curves() -> Vec<CorpusEntry> {
    let field = FieldSpec::prime(32003).expect("prime");
    (3..=6)
        .map(|d| {
            let mut rng = seeded_rng(d as u64, STREAM_RANDOM_CURVES);
            let f = Polynomial::random(field, VarSet::XYZ, d, true, 50, &mut rng);
            CorpusEntry::new(format!("random_f32003_d{d}"), &["random", "finite_field"], format!("field F 32003\ncurve {f}\n"))
        })
        .collect()
}

/// The built-in corpus with cited and elementary expectations, before the
/// frozen oracle values are merged in.
fn base_corpus() -> Vec<CorpusEntry> {
    use Source::*;
    let mut out = Vec::new();
    let cone_lines = ["x", "y", "(x + y)", "(x - y)", "(x + 2*y)", "(x - 2*y)"];
    for d in 2..=6usize {
        let f = cone_lines[..d].join("*");
        let d = d as i64;
        out.push(
            CorpusEntry::new(format!("cone_d{d}"), &["cones"], q_curve(&f, "false"))
                .with("tau", (d - 1) * (d - 1), Cited)
                .with("sigma", 2 * d - 3, Cited)
                .with("u", 0, Cited)
                .with("m_leaf", 0, Elementary),
        );
    }
    out.push(
        CorpusEntry::new("smooth_conic", &["smooth"], q_curve("x^2 + y^2 - z^2", "true"))
            .with("tau", 0, Elementary)
            .with("sigma", 0, Elementary)
            .with("u", 0, Elementary),
    );
    out.push(
        CorpusEntry::new("smooth_cubic", &["smooth"], q_curve("x^3 + y^3 + z^3", "true"))
            .with("tau", 0, Elementary)
            .with("sigma", 0, Elementary)
            .with("u", 0, Elementary),
    );
    out.push(
        CorpusEntry::new("nodal_cubic", &["cubics"], q_curve("y^2*z - x^2*(x + z)", "true"))
            .with("tau", 1, Cited)
            .with("u", 0, Cited),
    );
    out.push(
        CorpusEntry::new("cuspidal_cubic", &["cubics"], q_curve("y^2*z - x^3", "true"))
            .with("tau", 2, Elementary)
            .with("u", 0, Elementary),
    );
    for (name, f, irr) in [
        ("quartic_three_nodes", "x^2*y^2 + y^2*z^2 + z^2*x^2", "true"),
        ("quartic_three_cusps", "x^2*y^2 + y^2*z^2 + z^2*x^2 - 2*x*y*z*(x + y + z)", "true"),
        ("quartic_node_cusp", "y^2*z^2 - x^3*z + x^2*y^2", "true"),
        ("quartic_cusp_line", "(y^2*z - x^3)*(x + y + z)", "false"),
        ("quartic_nodal_cubic_line", "(y^2*z - x^2*(x + z))*(y - 2*z)", "false"),
    ] {
        out.push(CorpusEntry::new(name, &["quartics"], q_curve(f, irr)).with("u", 0, Elementary));
    }
    out.push(
        CorpusEntry::new("non_quasi_homogeneous_quintic", &["quintics"], q_curve("x^5 + y^5 + x^2*y^2*z", "true"))
            .with("u", 1, Oracle),
    );
    out.push(
        CorpusEntry::new("five_lines", &["lines"], q_curve("x*y*(x + y)*(x - y)*(x + z)", "false"))
            .with("m_factors", 1, Cited)
            .with("m_leaf_min", 3, Cited),
    );
    out.push(CorpusEntry::new("line_and_circle", &["nodes"], q_curve("y*(x^2 + y^2 - z^2)", "false")).with("tau", 2, Elementary));
    out.push(
        CorpusEntry::new("line_and_conjugate_nodes", &["nodes"], q_curve("y*(x^2 + y^2 - 2*z^2)", "false"))
            .with("tau", 2, Elementary),
    );
    out.extend(random_curves());
    out.push(
        CorpusEntry::new("double_line", &["gates"], "field Q\ncurve x^2*y\n").with("gated", 1, Elementary),
    );
    out.push(
        CorpusEntry::new("septic_in_char_7", &["gates", "finite_field"], "field F 7\ncurve x^7 + y^6*z + z^7\n")
            .with("gated", 1, Elementary),
    );
    out.push(
        CorpusEntry::new("pencil", &["foliations"], "field Q\nfoliation y ; -x ; 0\n")
            .with("deg_s", 1, Cited)
            .with("m_leaf", 0, Elementary),
    );
    for m in 1..=3i64 {
        // Jouanolou: the form R × (y^m, z^m, x^m) of the vector field cycling the variables.
        let text = format!("field Q\nfoliation y*x^{m} - z^{n} ; z*y^{m} - x^{n} ; x*z^{m} - y^{n}\n", n = m + 1);
        out.push(
            CorpusEntry::new(format!("jouanolou_m{m}"), &["foliations"], text)
                .with("deg_s", m * m + m + 1, Cited)
                .with("reg_s", 2 * m, Cited),
        );
    }
    out
}

type Frozen = BTreeMap<String, BTreeMap<String, Expected>>;

fn frozen() -> Frozen {
    serde_json::from_str(EXPECTED_JSON).expect("corpus/expected.json is valid")
}

/// Full corpus with frozen oracle values merged in.
pub fn corpus() -> Vec<CorpusEntry> {
    let frozen = frozen();
    let mut entries = base_corpus();
    for e in &mut entries {
        if let Some(values) = frozen.get(&e.name) {
            for (key, v) in values {
                let key = KEYS.iter().find(|k| *k == key).expect("known corpus key");
                e.expected.entry(key).or_insert(*v);
            }
        }
    }
    entries
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub key: String,
    pub expected: i64,
    pub found: Option<i64>,
    pub source: Source,
    pub ok: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct EntryOutcome {
    pub index: usize,
    pub name: String,
    pub checks: Vec<Check>,
    pub violations: Vec<String>,
    pub problems: Vec<String>,
    pub passed: bool,
    #[serde(skip)]
    pub report: Option<BoundsReport>,
}

/// Values computed for an entry, keyed as in [`KEYS`].
fn measure(doc: &InputDocument, seed: u64) -> (BTreeMap<&'static str, i64>, Option<BoundsReport>, Vec<String>) {
    let mut found = BTreeMap::new();
    let mut problems = Vec::new();
    let mut report = None;
    if let Some(form) = &doc.foliation {
        match Foliation::from_form(form.clone()) {
            Ok(fol) => {
                found.insert("deg_s", fol.deg_s() as i64);
                if fol.degree() > 0 {
                    found.insert("reg_s", fol.singular_regularity() as i64);
                    match tangency_degree_check(&fol, seed) {
                        Ok(t) if t == fol.degree() => {}
                        Ok(t) => problems.push(format!("tangency degree {t} differs from m = {}", fol.degree())),
                        Err(e) => problems.push(format!("tangency check: {e}")),
                    }
                }
                if doc.curve.is_none() {
                    found.insert("m_leaf", fol.degree() as i64);
                }
            }
            Err(e) => problems.push(format!("foliation: {e}")),
        }
    }
    if let Some(c) = &doc.curve {
        let opts = ReportOptions { seed, foliation: doc.foliation.clone() };
        let r = full_report(Some(c), doc.field, &opts);
        let inv = &r.invariants;
        for (key, v) in [
            ("tau", inv.tau.map(|t| t as i64)),
            ("sigma", inv.sigma.map(|s| s as i64)),
            ("u", inv.u.map(|u| u as i64)),
            ("m_leaf", r.foliation.m_leaf.map(|m| m as i64)),
            ("m_factors", r.foliation.m_factors.map(|m| m as i64)),
            ("m_leaf_min", r.foliation.m_leaf.map(|m| m as i64)),
        ] {
            if let Some(v) = v {
                found.insert(key, v);
            }
        }
        let gated = r.errors.iter().any(|e| e.stage == "curve" || e.stage == "invariants");
        found.insert("gated", gated as i64);
        if let (Some(claim), Some(ci)) = (doc.claimed_irreducibility, &r.curve_invariants) {
            use crate::curves::Irreducibility::*;
            let clash = matches!((claim, ci.irreducibility), (Irreducible, Reducible) | (Reducible, Irreducible));
            if clash {
                problems.push(format!("claimed {claim}, certificate says {}", ci.irreducibility));
            }
        }
        report = Some(r);
    }
    (found, report, problems)
}

pub fn run_entry(index: usize, entry: &CorpusEntry, seed: u64) -> EntryOutcome {
    let doc = match entry.document() {
        Ok(d) => d,
        Err(e) => {
            return EntryOutcome {
                index,
                name: entry.name.clone(),
                checks: Vec::new(),
                violations: Vec::new(),
                problems: vec![format!("parse: {e}")],
                passed: false,
                report: None,
            }
        }
    };
    let (found, report, problems) = measure(&doc, seed);
    let checks: Vec<Check> = entry
        .expected
        .iter()
        .map(|(key, exp)| {
            let got = found.get(key).copied();
            let ok = match *key {
                "m_leaf_min" => got.is_some_and(|g| g >= exp.value),
                _ => got == Some(exp.value),
            };
            Check { key: key.to_string(), expected: exp.value, found: got, source: exp.source, ok }
        })
        .collect();
    let violations: Vec<String> =
        report.iter().flat_map(|r| r.violations()).map(|v| v.id.to_string()).collect();
    let passed = checks.iter().all(|c| c.ok) && violations.is_empty() && problems.is_empty();
    EntryOutcome { index, name: entry.name.clone(), checks, violations, problems, passed, report }
}

/// Runs the selected entries in parallel; results come back in corpus order.
pub fn run_corpus(filter: Option<&str>, seed: u64) -> Vec<EntryOutcome> {
    let entries = corpus();
    let selected: Vec<(usize, &CorpusEntry)> = entries.iter().enumerate().filter(|(_, e)| e.matches(filter)).collect();
    selected.into_par_iter().map(|(i, e)| run_entry(i, e, seed)).collect()
}

/// τ of the curve from the Macaulay oracle, in a random chart so every
/// singular point is affine. Isolated plateaus occur at low bounds, so the
/// value must repeat at three consecutive stable bounds.
pub fn oracle_tau(c: &crate::curves::PlaneCurve, seed: u64) -> Result<u64> {
    let mut rng = seeded_rng(seed, STREAM_BLESS);
    let change = LinearChange::random(c.field(), &mut rng, 2);
    let ideal = affine_tjurina_ideal(&c.transformed(&change));
    let top = 3 * c.degree() + 6;
    let mut run: Option<(u64, u32)> = None;
    for bound in (c.degree() + 2)..=top {
        run = match (oracle_colength(&ideal, bound), run) {
            (Ok(v), Some((w, n))) if v == w => Some((v, n + 1)),
            (Ok(v), _) => Some((v, 1)),
            (Err(_), _) => None,
        };
        if let Some((v, 3)) = run {
            return Ok(v);
        }
    }
    Err(Error::NotStabilized(top))
}

/// Recomputes every non-cited value and returns the new frozen table. τ must
/// agree with the oracle, otherwise blessing fails.
pub fn bless(seed: u64) -> Result<String> {
    let base = base_corpus();
    let mut table: Frozen = BTreeMap::new();
    for e in &base {
        let doc = e.document()?;
        let (found, _, problems) = measure(&doc, seed);
        if !problems.is_empty() {
            return Err(Error::Internal(format!("{}: {}", e.name, problems.join("; "))));
        }
        if found.get("gated") == Some(&1) {
            continue;
        }
        if let (Some(c), Some(&tau)) = (&doc.curve, found.get("tau")) {
            let o = oracle_tau(c, seed)?;
            if o as i64 != tau {
                return Err(Error::Internal(format!("{}: pipeline tau {tau}, oracle {o}", e.name)));
            }
        }
        let mut values = BTreeMap::new();
        for (key, v) in found {
            if key == "m_leaf_min" || key == "gated" || e.expected.contains_key(key) {
                continue;
            }
            values.insert(key.to_string(), Expected { value: v, source: Source::Oracle });
        }
        table.insert(e.name.clone(), values);
    }
    Ok(serde_json::to_string_pretty(&table).expect("serializes") + "\n")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn entries_parse_and_names_are_unique() {
        let c = corpus();
        let mut names: Vec<_> = c.iter().map(|e| e.name.clone()).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), c.len());
        for e in &c {
            let doc = e.document().unwrap();
            assert_eq!(InputDocument::parse(&doc.to_text()).unwrap().to_text(), doc.to_text());
        }
    }

    #[test]
    fn every_frozen_entry_exists() {
        let names: Vec<String> = base_corpus().into_iter().map(|e| e.name).collect();
        for k in frozen().keys() {
            assert!(names.contains(k), "{k}");
        }
    }

    #[test]
    fn cone_entries_pass() {
        for o in run_corpus(Some("cones"), 0) {
            assert!(o.passed, "{o:?}");
        }
    }

    #[test]
    fn gate_entries_pass() {
        for o in run_corpus(Some("gates"), 0) {
            assert!(o.passed, "{o:?}");
        }
    }
}
