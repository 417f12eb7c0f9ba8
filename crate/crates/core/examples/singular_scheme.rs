//! The saturated Jacobian scheme of concurrent lines and its Hilbert function.

use leafbound::algebra::FieldSpec;
use leafbound::curves::{singular_scheme, PlaneCurve};

fn main() -> leafbound::Result<()> {
    for d in 2..=6usize {
        let lines = ["x", "y", "(x + y)", "(x - y)", "(x + 2*y)", "(x - 2*y)"];
        let c = PlaneCurve::parse(&lines[..d].join("*"), FieldSpec::rationals())?;
        let s = singular_scheme(&c)?;
        let h: Vec<String> = s.ideal.hilbert_function(2 * d as u32).values.iter().map(|v| v.to_string()).collect();
        println!("d = {d}: tau = {:>2}, sigma = {}, H = {}", s.tau, s.hilbert.regularity, h.join(" "));
    }
    Ok(())
}
