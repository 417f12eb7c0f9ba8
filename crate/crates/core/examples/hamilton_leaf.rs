//! The Hamilton foliation of a curve has degree d - 1 and the curve as a leaf.

use leafbound::algebra::FieldSpec;
use leafbound::curves::PlaneCurve;
use leafbound::foliations::{hamilton_foliation, is_leaf};

fn main() -> leafbound::Result<()> {
    for text in ["y^2*z - x^3", "x^3 + y^3 + z^3", "x^2*y^2 + y^2*z^2 + z^2*x^2"] {
        let c = PlaneCurve::parse(text, FieldSpec::rationals())?;
        let h = hamilton_foliation(&c, 0)?;
        let check = is_leaf(&c, h.foliation.form())?;
        println!("{c}: degree {}, leaf {}", h.foliation.degree(), check.is_leaf);
        let [a, b, cc] = h.foliation.form();
        println!("  form ({a}) dx + ({b}) dy + ({cc}) dz");
    }
    Ok(())
}
