//! Full report for the tricuspidal quartic, which is extremal for the bound
//! on τ of an irreducible leaf.

use leafbound::algebra::FieldSpec;
use leafbound::bounds::{full_report, ReportOptions};
use leafbound::curves::PlaneCurve;

fn main() -> leafbound::Result<()> {
    let field = FieldSpec::rationals();
    let c = PlaneCurve::parse("x^2*y^2 + y^2*z^2 + z^2*x^2 - 2*x*y*z*(x + y + z)", field)?;
    let report = full_report(Some(&c), field, &ReportOptions::default());
    for v in &report.verdicts {
        match (&v.skipped, &v.lhs, &v.rhs) {
            (Some(why), _, _) => println!("{:<6} skipped: {why}", v.id),
            (None, Some(l), Some(r)) => println!("{:<6} {l} vs {r}: holds {:?}, equality {:?}", v.id, v.holds, v.equality),
            _ => {}
        }
    }
    println!("{}", report.to_json());
    Ok(())
}
