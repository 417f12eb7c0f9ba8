//! Gröbner-free colength and Hilbert function oracles built from Macaulay
//! matrices of generator multiples.
//!
//! Affinely the span of all multiples `m·g` with `deg(m·g) ≤ B` can miss
//! elements of `I` of degree close to `B` (degree falls: `(x² + y, xy)`
//! contains `y^B`, but only via products of degree `B + 1`). So the count is
//! taken on a lagging window `W < B`:
//!
//! `colength ≈ #monomials(≤ W) − dim(span_B ∩ V_{≤W})`
//!
//! and `dim(span_B ∩ V_{≤W}) = rank(M) − rank(M restricted to degree > W)`.

use std::collections::HashMap;

use crate::algebra::poly::{monomials_of_degree, monomials_up_to};
use crate::algebra::{Coeff, LinearSystem, Monomial, Polynomial, VarSet};
use crate::error::{Error, Result};

use super::Ideal;

/// Counting window for product degree `b`.
pub fn window(b: u32) -> u32 {
    b - b.div_ceil(4).max(1)
}

fn macaulay_value(i: &Ideal, b: u32) -> u64 {
    let field = i.field();
    let vars = i.vars();
    let w = window(b);
    let cols = monomials_up_to(vars, b);
    let index: HashMap<Monomial, usize> = cols.iter().enumerate().map(|(k, m)| (*m, k)).collect();
    let high: Vec<usize> = cols.iter().enumerate().filter(|(_, m)| m.degree() > w).map(|(k, _)| k).collect();
    let mut full = LinearSystem::new(field, cols.len());
    let mut top = LinearSystem::new(field, high.len());
    for g in i.generators() {
        let dg = g.degree() as u32;
        if dg > b {
            continue;
        }
        for m in monomials_up_to(vars, b - dg) {
            let mut row = vec![field.zero(); cols.len()];
            for (gm, c) in g.terms() {
                row[index[&gm.mul(&m)]] = c.clone();
            }
            let top_row: Vec<Coeff> = high.iter().map(|&k| row[k].clone()).collect();
            full.push_row(row);
            top.push_row(top_row);
        }
    }
    let low = monomials_up_to(vars, w).len() as u64;
    let inside = (full.rank() - top.rank()) as u64;
    low - inside
}

/// Colength of `I` without Gröbner bases; values at bounds `bound − 1` and
/// `bound` must agree.
pub fn oracle_colength(i: &Ideal, bound: u32) -> Result<u64> {
    if bound < 2 {
        return Err(Error::NotStabilized(bound));
    }
    let a = macaulay_value(i, bound - 1);
    let b = macaulay_value(i, bound);
    if a == b {
        Ok(b)
    } else {
        Err(Error::NotStabilized(bound))
    }
}

/// Colength of `I` localized at the origin: `I + m^n` with `n` at least the
/// local colength.
pub fn oracle_local_colength(i: &Ideal, n: u32, bound: u32) -> Result<u64> {
    let field = i.field();
    let power = monomials_of_degree(i.vars(), n)
        .into_iter()
        .map(|m| Polynomial::term(field, m, field.one()));
    oracle_colength(&i.with_generators(power), bound)
}

/// `dim (k[vars]/I)_t` for homogeneous `I`, from the rank of the degree-`t`
/// Macaulay matrix.
pub fn oracle_hilbert(i: &Ideal, t: u32) -> u64 {
    assert!(i.is_homogeneous());
    let field = i.field();
    let vars: VarSet = i.vars();
    let cols = monomials_of_degree(vars, t);
    let index: HashMap<Monomial, usize> = cols.iter().enumerate().map(|(k, m)| (*m, k)).collect();
    let mut sys = LinearSystem::new(field, cols.len());
    for g in i.generators() {
        let dg = g.degree() as u32;
        if dg > t {
            continue;
        }
        for m in monomials_of_degree(vars, t - dg) {
            let mut row = vec![field.zero(); cols.len()];
            for (gm, c) in g.terms() {
                row[index[&gm.mul(&m)]] = c.clone();
            }
            sys.push_row(row);
        }
    }
    cols.len() as u64 - sys.rank() as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_polynomial, FieldSpec};

    fn affine(gens: &[&str]) -> Ideal {
        let f = FieldSpec::rationals();
        Ideal::affine(f, gens.iter().map(|g| parse_polynomial(g, f).unwrap()))
    }

    #[test]
    fn small_colengths() {
        assert_eq!(oracle_colength(&affine(&["x", "y"]), 3), Ok(1));
        assert_eq!(oracle_colength(&affine(&["x^2", "y"]), 4), Ok(2));
    }

    #[test]
    fn degree_fall_is_absorbed_by_the_window() {
        // Standard monomials 1, x, x^2.
        assert_eq!(oracle_colength(&affine(&["x^2 + y", "x*y"]), 8), Ok(3));
    }

    #[test]
    fn cone_jacobian() {
        assert_eq!(oracle_colength(&affine(&["3*x^2*y - y^3", "x^3 - 3*x*y^2"]), 8), Ok(9));
    }

    #[test]
    fn too_small_bound_is_reported() {
        assert_eq!(
            oracle_colength(&affine(&["3*x^2*y - y^3", "x^3 - 3*x*y^2"]), 3),
            Err(Error::NotStabilized(3))
        );
    }
}
