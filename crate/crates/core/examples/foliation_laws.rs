//! Random saturated foliations: deg S = m^2 + m + 1, reg S = 2m, and m
//! tangencies with a general line.

use leafbound::algebra::FieldSpec;
use leafbound::foliations::{random_foliation, tangency_degree_check};
use leafbound::seeded_rng;

fn main() -> leafbound::Result<()> {
    let mut rng = seeded_rng(0, 1);
    for field in [FieldSpec::rationals(), FieldSpec::prime(32003)?] {
        for m in 0..=3 {
            let f = random_foliation(field, m, &mut rng);
            let tangency = if m > 0 { tangency_degree_check(&f, 0)?.to_string() } else { "-".into() };
            println!("{field:<8} m = {m}: deg S = {:>2}, reg S = {}, tangencies = {tangency}", f.deg_s(), f.singular_regularity());
        }
    }
    Ok(())
}
