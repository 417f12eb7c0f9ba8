//! Colengths from Macaulay matrices, next to the Gröbner staircase count.

use leafbound::algebra::{parse_polynomial, FieldSpec};
use leafbound::groebner::oracle::{oracle_colength, oracle_local_colength};
use leafbound::groebner::Ideal;

fn main() -> leafbound::Result<()> {
    let q = FieldSpec::rationals();
    let ideal = |gens: &[&str]| -> leafbound::Result<Ideal> {
        Ok(Ideal::affine(q, gens.iter().map(|g| parse_polynomial(g, q)).collect::<leafbound::Result<Vec<_>>>()?))
    };
    let cone = ideal(&["3*x^2*y - y^3", "x^3 - 3*x*y^2"])?;
    println!("cone Jacobian: oracle {}, staircase {:?}", oracle_colength(&cone, 8)?, cone.colength());
    let germ = ideal(&["5*x^4 + 2*x*y^2", "5*y^4 + 2*x^2*y"])?;
    println!("Milnor ideal of x^5 + y^5 + x^2 y^2 at 0: {}", oracle_local_colength(&germ, 12, 16)?);
    match oracle_colength(&ideal(&["x*y"])?, 6) {
        Ok(n) => println!("(xy): {n}"),
        Err(e) => println!("(xy): {e}"),
    }
    Ok(())
}
