//! Four concurrent lines plus a general one: the weak search finds degree 1,
//! but no degree-1 or degree-2 foliation has the curve as a leaf.

use leafbound::algebra::FieldSpec;
use leafbound::curves::PlaneCurve;
use leafbound::foliations::{minimal_degree, SearchMode};

fn main() -> leafbound::Result<()> {
    let c = PlaneCurve::parse("x*y*(x + y)*(x - y)*(x + z)", FieldSpec::rationals())?;
    let weak = minimal_degree(&c, SearchMode::FactorsThrough, 0)?;
    let leaf = minimal_degree(&c, SearchMode::Leaf, 0)?;
    println!("factors through: m = {}", weak.m);
    println!("leaf:            m = {} (solution dimensions {:?}, degrees without a leaf {:?})", leaf.m, leaf.nullities, leaf.gaps);
    Ok(())
}
