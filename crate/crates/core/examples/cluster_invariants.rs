//! Splitting the singular points of five lines into Galois clusters and
//! measuring each one.

use leafbound::algebra::FieldSpec;
use leafbound::curves::{cluster_invariants, split_clusters, PlaneCurve};

fn main() -> leafbound::Result<()> {
    let c = PlaneCurve::parse("x*y*(x + y)*(x - y)*(x + z)", FieldSpec::rationals())?;
    let split = split_clusters(&c, 0)?;
    println!("coordinate seed {}, {} clusters", split.coordinate_seed, split.len());
    for i in 0..split.len() {
        let k = cluster_invariants(&split, i)?;
        println!(
            "{:<24} points {}  tau {}  polar {}  mu {}  quasi-homogeneous {:?}",
            k.eliminant_factor.to_string(),
            k.point_count,
            k.tjurina_length,
            k.polar_length,
            k.milnor_length,
            k.quasi_homogeneous
        );
    }
    Ok(())
}
