//! Verdicts for each bound on d, m, σ, τ and u, with explicit hypothesis gates,
//! and the full per-curve report.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::curves::{analyze_curve, is_reduced, CurveInvariants, Irreducibility, PlaneCurve};
use crate::error::Error;
use crate::foliations::{hamilton_foliation, minimal_degree, Foliation, Form, SearchMode};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum TheoremId {
    #[serde(rename = "P2.3")]
    P2_3,
    #[serde(rename = "T2.5")]
    T2_5,
    #[serde(rename = "L3.1")]
    L3_1,
    #[serde(rename = "T3.2")]
    T3_2,
    #[serde(rename = "P3.3a")]
    P3_3a,
    #[serde(rename = "P3.3b")]
    P3_3b,
}

impl TheoremId {
    pub const ALL: [TheoremId; 6] =
        [TheoremId::P2_3, TheoremId::T2_5, TheoremId::L3_1, TheoremId::T3_2, TheoremId::P3_3a, TheoremId::P3_3b];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::P2_3 => "P2.3",
            TheoremId::T2_5 => "T2.5",
            TheoremId::L3_1 => "L3.1",
            TheoremId::T3_2 => "T3.2",
            TheoremId::P3_3a => "P3.3a",
            TheoremId::P3_3b => "P3.3b",
        }
    }

    /// The inequality in words, for text output.
    pub fn statement(self) -> &'static str {
        match self {
            TheoremId::P2_3 => "reg S = 2m for a foliation of degree m > 0 with finite S",
            TheoremId::T2_5 => "d <= m+1 if rho <= 0, d <= m+1+rho if rho > 0; d = m+1+rho when d >= 2m+2",
            TheoremId::L3_1 => "sigma <= d-2 + (tau-u)/(d-1)",
            TheoremId::T3_2 => "(d-1)(d-m-1) + u <= tau",
            TheoremId::P3_3a => "m <= d-1 and tau <= (d-1)(d-m-1) + m^2",
            TheoremId::P3_3b => "tau <= (d-1)(d-m-1) + m^2 - binom(2m+2-d, 2) when d <= 2m and C irreducible",
        }
    }
}

impl std::fmt::Display for TheoremId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Hypotheses {
    pub met: bool,
    pub reasons: Vec<String>,
}

/// An exact rational printed as `p` or `p/q`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Exact(pub BigRational);

impl Exact {
    pub fn int(n: i64) -> Exact {
        Exact(BigRational::from_integer(BigInt::from(n)))
    }
}

impl std::fmt::Display for Exact {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Serialize for Exact {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremVerdict {
    pub id: TheoremId,
    pub hypotheses: Hypotheses,
    pub lhs: Option<Exact>,
    pub rhs: Option<Exact>,
    pub holds: Option<bool>,
    pub equality: Option<bool>,
    /// For T3.2, the equality dichotomy; for T2.5, the clause for d ≥ 2m+2.
    pub equality_case_consistent: Option<bool>,
    pub skipped: Option<String>,
}

impl TheoremVerdict {
    fn skipped(id: TheoremId, reasons: Vec<String>) -> Self {
        let skipped = Some(reasons.join("; "));
        TheoremVerdict {
            id,
            hypotheses: Hypotheses { met: false, reasons },
            lhs: None,
            rhs: None,
            holds: None,
            equality: None,
            equality_case_consistent: None,
            skipped,
        }
    }

    fn checked(id: TheoremId, reasons: Vec<String>, lhs: Exact, rhs: Exact, holds: bool) -> Self {
        let equality = lhs == rhs;
        TheoremVerdict {
            id,
            hypotheses: Hypotheses { met: true, reasons },
            lhs: Some(lhs),
            rhs: Some(rhs),
            holds: Some(holds),
            equality: Some(equality),
            equality_case_consistent: None,
            skipped: None,
        }
    }

    /// False only for an evaluated verdict that fails.
    pub fn is_violation(&self) -> bool {
        self.holds == Some(false) || self.equality_case_consistent == Some(false)
    }
}

fn binom2(n: i64) -> i64 {
    if n < 2 {
        0
    } else {
        n * (n - 1) / 2
    }
}

/// Numeric data the curve-side verdicts read.
#[derive(Clone, Debug)]
pub struct BoundInputs {
    pub characteristic: u32,
    pub d: i64,
    pub tau: i64,
    pub u: Option<i64>,
    pub sigma: i64,
    pub irreducibility: Irreducibility,
}

impl BoundInputs {
    pub fn from_invariants(inv: &CurveInvariants, characteristic: u32) -> Self {
        BoundInputs {
            characteristic,
            d: inv.d as i64,
            tau: inv.tau as i64,
            u: inv.u.map(|u| u as i64),
            sigma: inv.sigma as i64,
            irreducibility: inv.irreducibility,
        }
    }

    pub fn rho(&self) -> i64 {
        self.sigma - self.d + 2
    }
}

pub fn verify_prop_2_3(fol: &Foliation) -> TheoremVerdict {
    let m = fol.degree();
    if m == 0 {
        return TheoremVerdict::skipped(TheoremId::P2_3, vec!["m > 0 required".into()]);
    }
    let reg = fol.singular_regularity() as i64;
    let reasons = vec![format!("m = {m} > 0"), format!("S finite of degree {}", fol.deg_s())];
    TheoremVerdict::checked(TheoremId::P2_3, reasons, Exact::int(reg), Exact::int(2 * m as i64), reg == 2 * m as i64)
}

/// `m` is the least degree of a foliation with C as leaf; its witness is
/// saturated, so S is finite.
pub fn verify_theorem_2_5(b: &BoundInputs, m: i64) -> TheoremVerdict {
    let p = b.characteristic as i64;
    if p != 0 && b.d % p == 0 {
        return TheoremVerdict::skipped(TheoremId::T2_5, vec![format!("characteristic {p} divides d = {}", b.d)]);
    }
    let rho = b.rho();
    let rhs = if rho <= 0 { m + 1 } else { m + 1 + rho };
    let reasons = vec![
        "C reduced".into(),
        if p == 0 { "characteristic 0".into() } else { format!("characteristic {p} does not divide d") },
        format!("C is a leaf of a degree {m} foliation with finite S"),
        format!("rho = {rho}"),
    ];
    let mut v = TheoremVerdict::checked(TheoremId::T2_5, reasons, Exact::int(b.d), Exact::int(rhs), b.d <= rhs);
    if b.d >= 2 * m + 2 {
        let ok = b.d == m + 1 + rho;
        v.hypotheses.reasons.push(format!("d >= 2m+2: require d = m+1+rho = {}", m + 1 + rho));
        v.equality_case_consistent = Some(ok);
    }
    v
}

fn char_zero_gate(id: TheoremId, b: &BoundInputs) -> Result<i64, TheoremVerdict> {
    let mut reasons = Vec::new();
    if b.characteristic != 0 {
        reasons.push(format!("characteristic 0 required (field has characteristic {})", b.characteristic));
    }
    if b.d < 2 {
        reasons.push(format!("d >= 2 required (d = {})", b.d));
    }
    match (reasons.is_empty(), b.u) {
        (true, Some(u)) => Ok(u),
        (true, None) => Err(TheoremVerdict::skipped(id, vec!["u unavailable".into()])),
        (false, _) => Err(TheoremVerdict::skipped(id, reasons)),
    }
}

pub fn verify_lemma_3_1(b: &BoundInputs) -> TheoremVerdict {
    let u = match char_zero_gate(TheoremId::L3_1, b) {
        Ok(u) => u,
        Err(v) => return v,
    };
    let rhs = Exact(
        BigRational::from_integer(BigInt::from(b.d - 2))
            + BigRational::new(BigInt::from(b.tau - u), BigInt::from(b.d - 1)),
    );
    let lhs = Exact::int(b.sigma);
    let holds = lhs <= rhs;
    let reasons = vec!["C reduced".into(), "characteristic 0".into(), format!("d = {} >= 2", b.d)];
    TheoremVerdict::checked(TheoremId::L3_1, reasons, lhs, rhs, holds)
}

pub fn verify_theorem_3_2(b: &BoundInputs, m: i64) -> TheoremVerdict {
    let u = match char_zero_gate(TheoremId::T3_2, b) {
        Ok(u) => u,
        Err(v) => return v,
    };
    let lhs = (b.d - 1) * (b.d - m - 1) + u;
    let reasons = vec![
        "C reduced".into(),
        "characteristic 0".into(),
        format!("C is a leaf of a degree {m} foliation"),
    ];
    let mut v = TheoremVerdict::checked(TheoremId::T3_2, reasons, Exact::int(lhs), Exact::int(b.tau), lhs <= b.tau);
    if lhs == b.tau {
        let consistent = if b.d == m + 1 { b.tau == 0 } else { b.d > m + 1 && b.sigma == 2 * b.d - m - 3 };
        v.equality_case_consistent = Some(consistent);
    }
    v
}

pub fn verify_prop_3_3(b: &BoundInputs, m: i64) -> (TheoremVerdict, TheoremVerdict) {
    let base = (b.d - 1) * (b.d - m - 1) + m * m;
    let reasons = vec!["C reduced".into(), format!("m = {m} is the least leaf degree")];
    let a = TheoremVerdict::checked(
        TheoremId::P3_3a,
        reasons.clone(),
        Exact::int(b.tau),
        Exact::int(base),
        b.tau <= base && m <= b.d - 1,
    );
    let mut gate = Vec::new();
    if b.d > 2 * m {
        gate.push(format!("d <= 2m required (d = {}, m = {m})", b.d));
    }
    if b.irreducibility != Irreducibility::Irreducible {
        gate.push(format!("irreducibility not certified ({})", b.irreducibility));
    }
    let bv = if gate.is_empty() {
        let rhs = base - binom2(2 * m + 2 - b.d);
        let mut r = reasons;
        r.push("d <= 2m".into());
        r.push("C irreducible (finite-field certificate)".into());
        TheoremVerdict::checked(TheoremId::P3_3b, r, Exact::int(b.tau), Exact::int(rhs), b.tau <= rhs)
    } else {
        TheoremVerdict::skipped(TheoremId::P3_3b, gate)
    };
    (a, bv)
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct InvariantSummary {
    pub d: Option<u32>,
    pub tau: Option<u64>,
    pub u: Option<u64>,
    pub sigma: Option<u32>,
    pub rho: Option<i64>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct FoliationSummary {
    pub m_leaf: Option<u32>,
    pub m_factors: Option<u32>,
    pub hamilton_degree: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StageError {
    pub stage: String,
    pub error: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct BoundsReport {
    pub curve: Option<String>,
    pub field: String,
    pub seed: u64,
    pub invariants: InvariantSummary,
    pub foliation: FoliationSummary,
    pub verdicts: Vec<TheoremVerdict>,
    pub errors: Vec<StageError>,
    #[serde(skip)]
    pub curve_invariants: Option<CurveInvariants>,
}

impl BoundsReport {
    pub fn violations(&self) -> Vec<&TheoremVerdict> {
        self.verdicts.iter().filter(|v| v.is_violation()).collect()
    }

    pub fn verdict(&self, id: TheoremId) -> Option<&TheoremVerdict> {
        self.verdicts.iter().find(|v| v.id == id)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[derive(Clone, Debug, Default)]
pub struct ReportOptions {
    pub seed: u64,
    /// A user-supplied foliation; P2.3 is evaluated on it instead of the
    /// Hamilton foliation.
    pub foliation: Option<Form>,
}

/// Runs invariants, Hamilton foliation, both minimal-degree searches and all
/// verdicts. Failures are recorded per stage; independent stages still run.
pub fn full_report(curve: Option<&PlaneCurve>, field: crate::algebra::FieldSpec, opts: &ReportOptions) -> BoundsReport {
    let mut report = BoundsReport {
        curve: curve.map(|c| c.to_string()),
        field: field.to_string(),
        seed: opts.seed,
        invariants: InvariantSummary::default(),
        foliation: FoliationSummary::default(),
        verdicts: Vec::new(),
        errors: Vec::new(),
        curve_invariants: None,
    };
    let fail = |report: &mut BoundsReport, stage: &str, e: &Error| {
        report.errors.push(StageError { stage: stage.into(), error: e.to_string() });
    };

    let supplied = match &opts.foliation {
        Some(form) => match Foliation::from_form(form.clone()) {
            Ok(f) => Some(f),
            Err(e) => {
                fail(&mut report, "foliation", &e);
                None
            }
        },
        None => None,
    };

    let Some(c) = curve else {
        report.verdicts.push(match &supplied {
            Some(f) => verify_prop_2_3(f),
            None => TheoremVerdict::skipped(TheoremId::P2_3, vec!["no foliation".into()]),
        });
        for id in &TheoremId::ALL[1..] {
            report.verdicts.push(TheoremVerdict::skipped(*id, vec!["no curve".into()]));
        }
        return report;
    };
    report.invariants.d = Some(c.degree());
    if !is_reduced(c) {
        fail(&mut report, "curve", &Error::NotReduced);
        for id in TheoremId::ALL {
            report.verdicts.push(TheoremVerdict::skipped(id, vec!["curve is not reduced".into()]));
        }
        return report;
    }

    let hamilton = match hamilton_foliation(c, opts.seed) {
        Ok(h) => {
            report.foliation.hamilton_degree = Some(h.foliation.degree());
            Some(h)
        }
        Err(e) => {
            fail(&mut report, "hamilton", &e);
            None
        }
    };
    let leaf = match minimal_degree(c, SearchMode::Leaf, opts.seed) {
        Ok(r) => {
            report.foliation.m_leaf = Some(r.m);
            Some(r.m as i64)
        }
        Err(e) => {
            fail(&mut report, "minimal_degree_leaf", &e);
            None
        }
    };
    match minimal_degree(c, SearchMode::FactorsThrough, opts.seed) {
        Ok(r) => report.foliation.m_factors = Some(r.m),
        Err(e) => fail(&mut report, "minimal_degree_factors_through", &e),
    }

    report.verdicts.push(match (&supplied, &hamilton) {
        (Some(f), _) => verify_prop_2_3(f),
        (None, Some(h)) => verify_prop_2_3(&h.foliation),
        (None, None) => TheoremVerdict::skipped(TheoremId::P2_3, vec!["no foliation available".into()]),
    });

    let inv = match analyze_curve(c, opts.seed) {
        Ok(inv) => inv,
        Err(e) => {
            fail(&mut report, "invariants", &e);
            let reason = format!("curve invariants unavailable: {e}");
            for id in &TheoremId::ALL[1..] {
                report.verdicts.push(TheoremVerdict::skipped(*id, vec![reason.clone()]));
            }
            return report;
        }
    };
    report.invariants = InvariantSummary {
        d: Some(inv.d),
        tau: Some(inv.tau),
        u: inv.u,
        sigma: Some(inv.sigma),
        rho: Some(inv.rho),
    };
    let b = BoundInputs::from_invariants(&inv, field.characteristic());
    report.curve_invariants = Some(inv);
    match leaf {
        Some(m) => {
            report.verdicts.push(verify_theorem_2_5(&b, m));
            report.verdicts.push(verify_lemma_3_1(&b));
            report.verdicts.push(verify_theorem_3_2(&b, m));
            let (a, bb) = verify_prop_3_3(&b, m);
            report.verdicts.push(a);
            report.verdicts.push(bb);
        }
        None => {
            report.verdicts.push(TheoremVerdict::skipped(TheoremId::T2_5, vec!["leaf degree unavailable".into()]));
            report.verdicts.push(verify_lemma_3_1(&b));
            for id in [TheoremId::T3_2, TheoremId::P3_3a, TheoremId::P3_3b] {
                report.verdicts.push(TheoremVerdict::skipped(id, vec!["leaf degree unavailable".into()]));
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::FieldSpec;

    fn inputs(d: i64, tau: i64, u: i64, sigma: i64, irr: Irreducibility) -> BoundInputs {
        BoundInputs { characteristic: 0, d, tau, u: Some(u), sigma, irreducibility: irr }
    }

    #[test]
    fn cone_arithmetic() {
        let b = inputs(4, 9, 0, 5, Irreducibility::Reducible);
        let t = verify_theorem_2_5(&b, 0);
        assert_eq!((t.holds, t.equality, t.equality_case_consistent), (Some(true), Some(true), Some(true)));
        let l = verify_lemma_3_1(&b);
        assert_eq!((l.lhs.unwrap().to_string(), l.rhs.unwrap().to_string()), ("5".into(), "5".into()));
        let t = verify_theorem_3_2(&b, 0);
        assert_eq!((t.equality, t.equality_case_consistent), (Some(true), Some(true)));
        let (a, bb) = verify_prop_3_3(&b, 0);
        assert_eq!((a.holds, a.equality), (Some(true), Some(true)));
        assert!(bb.skipped.is_some());
    }

    #[test]
    fn smooth_conic_arithmetic() {
        let b = inputs(2, 0, 0, 0, Irreducibility::Irreducible);
        assert_eq!(verify_theorem_2_5(&b, 1).holds, Some(true));
        assert_eq!(verify_lemma_3_1(&b).equality, Some(true));
        let t = verify_theorem_3_2(&b, 1);
        assert_eq!(t.equality_case_consistent, Some(true));
        let (_, bb) = verify_prop_3_3(&b, 1);
        assert_eq!((bb.holds, bb.equality, bb.rhs.unwrap().to_string()), (Some(true), Some(true), "0".into()));
    }

    #[test]
    fn rational_right_side() {
        let b = inputs(5, 10, 1, 4, Irreducibility::Irreducible);
        assert_eq!(verify_lemma_3_1(&b).rhs.unwrap().to_string(), "21/4");
    }

    #[test]
    fn positive_characteristic_gates() {
        let mut b = inputs(3, 1, 0, 1, Irreducibility::Irreducible);
        b.characteristic = 3;
        b.u = None;
        assert!(verify_theorem_2_5(&b, 2).skipped.is_some());
        assert!(verify_lemma_3_1(&b).skipped.is_some());
        assert!(verify_theorem_3_2(&b, 2).skipped.is_some());
    }

    #[test]
    fn cone_report() {
        let c = PlaneCurve::parse("x^3*y - x*y^3", FieldSpec::rationals()).unwrap();
        let r = full_report(Some(&c), FieldSpec::rationals(), &ReportOptions::default());
        assert!(r.errors.is_empty(), "{:?}", r.errors);
        assert!(r.violations().is_empty());
        let evaluated = r.verdicts.iter().filter(|v| v.holds == Some(true)).count();
        assert_eq!(evaluated, 5);
        assert_eq!(r.foliation.m_leaf, Some(0));
    }

    #[test]
    fn non_reduced_report() {
        let c = PlaneCurve::parse("x^2*y", FieldSpec::rationals()).unwrap();
        let r = full_report(Some(&c), FieldSpec::rationals(), &ReportOptions::default());
        assert!(r.verdicts.iter().all(|v| v.skipped.is_some()));
        assert_eq!(r.errors[0].error, Error::NotReduced.to_string());
    }
}
