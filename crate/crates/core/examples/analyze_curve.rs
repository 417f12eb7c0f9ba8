//! Curve-side invariants of a nodal-plus-cuspidal quartic.

use leafbound::algebra::FieldSpec;
use leafbound::curves::{analyze_curve, PlaneCurve};

fn main() -> leafbound::Result<()> {
    let c = PlaneCurve::parse("y^2*z^2 - x^3*z + x^2*y^2", FieldSpec::rationals())?;
    let inv = analyze_curve(&c, 0)?;
    println!("C: {c} = 0");
    println!("d = {}, tau = {}, u = {:?}, sigma = {}, rho = {}", inv.d, inv.tau, inv.u, inv.sigma, inv.rho);
    println!("irreducibility: {}", inv.irreducibility);
    for k in &inv.clusters {
        println!("  {} -> tjurina {}, milnor {}", k.eliminant_factor, k.tjurina_length, k.milnor_length);
    }
    Ok(())
}
