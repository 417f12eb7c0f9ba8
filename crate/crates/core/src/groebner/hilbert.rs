//! Staircase counting on monomial ideals of leading terms.
//!
//! For a monomial ideal with minimal generators whose lcm has total degree L,
//! the Taylor resolution shows the Hilbert function of the quotient agrees
//! with the Hilbert polynomial for every `t ≥ L − 2`. That makes the stable
//! value and the stabilization index exact rather than guessed.

use serde::Serialize;

use crate::algebra::poly::{monomials_of_degree, monomials_up_to};
use crate::algebra::{Monomial, TermOrder, VarSet};

/// Hilbert function values `dim (S/I)_t` for `t = 0..values.len()`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertTable {
    pub values: Vec<u64>,
    /// The table reaches the constant tail.
    pub stabilized: bool,
    pub stable_value: Option<u64>,
    /// Least `t` from which the function is constant.
    pub stabilizes_from: Option<u32>,
    /// Computed on an ideal flagged as saturated.
    pub saturated: bool,
}

impl HilbertTable {
    pub(crate) fn new(values: Vec<u64>, stable: Option<StableHilbert>, saturated: bool) -> Self {
        let up_to = values.len() as u32 - 1;
        HilbertTable {
            stabilized: stable.is_some_and(|s| s.index <= up_to),
            stable_value: stable.map(|s| s.degree),
            stabilizes_from: stable.map(|s| s.index),
            values,
            saturated,
        }
    }

    pub fn value(&self, t: u32) -> Option<u64> {
        self.values.get(t as usize).copied()
    }
}

/// Tail data of the Hilbert function of a finite projective scheme.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct StableHilbert {
    /// Degree of the scheme (the constant value).
    pub degree: u64,
    /// Least `t` with `HF(t') = degree` for all `t' ≥ t`.
    pub index: u32,
    /// `1 + index`, or 0 for the empty scheme.
    pub regularity: u32,
}

fn in_ring(lms: &[Monomial], vars: VarSet) -> impl Iterator<Item = &Monomial> {
    lms.iter().filter(move |m| m.support().is_subset(vars))
}

/// Finite affine quotient: each variable has a pure power among the leading terms.
pub(crate) fn is_artinian(lms: &[Monomial], vars: VarSet) -> bool {
    if lms.contains(&Monomial::ONE) {
        return true;
    }
    vars.iter().all(|v| in_ring(lms, vars).any(|m| m.pure_power_of() == Some(v)))
}

pub(crate) fn standard_monomials(lms: &[Monomial], vars: VarSet) -> Option<Vec<Monomial>> {
    if !is_artinian(lms, vars) {
        return None;
    }
    if lms.contains(&Monomial::ONE) {
        return Some(Vec::new());
    }
    let bound: u32 = vars
        .iter()
        .map(|v| {
            in_ring(lms, vars)
                .filter(|m| m.pure_power_of() == Some(v))
                .map(|m| m.exp(v) as u32)
                .min()
                .expect("artinian")
                - 1
        })
        .sum();
    let mut out: Vec<Monomial> = monomials_up_to(vars, bound)
        .into_iter()
        .filter(|m| !lms.iter().any(|l| l.divides(m)))
        .collect();
    out.sort_by(|a, b| TermOrder::Grevlex.cmp(a, b));
    Some(out)
}

pub(crate) fn count_standard(lms: &[Monomial], vars: VarSet, t: u32) -> u64 {
    monomials_of_degree(vars, t).iter().filter(|m| !lms.iter().any(|l| l.divides(m))).count() as u64
}

/// Krull dimension of the quotient is at most one: every pair of ring
/// variables carries the support of some leading monomial.
fn dim_at_most_one(lms: &[Monomial], vars: VarSet) -> bool {
    let vs: Vec<_> = vars.iter().collect();
    for (i, a) in vs.iter().enumerate() {
        for b in &vs[i + 1..] {
            let pair = VarSet::of(&[*a, *b]);
            if !lms.iter().any(|m| m.support().is_subset(pair)) {
                return false;
            }
        }
    }
    true
}

pub(crate) fn stable(lms: &[Monomial], vars: VarSet) -> Option<StableHilbert> {
    if lms.contains(&Monomial::ONE) {
        return Some(StableHilbert { degree: 0, index: 0, regularity: 0 });
    }
    if !dim_at_most_one(lms, vars) {
        return None;
    }
    let l: u32 = vars.iter().map(|v| in_ring(lms, vars).map(|m| m.exp(v) as u32).max().unwrap_or(0)).sum();
    let values: Vec<u64> = (0..=l).map(|t| count_standard(lms, vars, t)).collect();
    let degree = values[l as usize];
    let mut index = l;
    while index > 0 && values[index as usize - 1] == degree {
        index -= 1;
    }
    let regularity = if degree == 0 { 0 } else { index + 1 };
    Some(StableHilbert { degree, index, regularity })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fat_point_staircase() {
        // (x^2, xy, y^2) in three variables: 1, 3, 3, 3, ...
        let lms = [Monomial::xyz(2, 0, 0), Monomial::xyz(1, 1, 0), Monomial::xyz(0, 2, 0)];
        let vals: Vec<u64> = (0..5).map(|t| count_standard(&lms, VarSet::XYZ, t)).collect();
        assert_eq!(vals, vec![1, 3, 3, 3, 3]);
        let s = stable(&lms, VarSet::XYZ).unwrap();
        assert_eq!((s.degree, s.index, s.regularity), (3, 1, 2));
    }

    #[test]
    fn line_is_not_finite() {
        assert!(stable(&[Monomial::xyz(1, 0, 0)], VarSet::XYZ).is_none());
    }

    #[test]
    fn affine_staircase() {
        let lms = [Monomial::xyz(2, 0, 0), Monomial::xyz(0, 1, 0)];
        let s = standard_monomials(&lms, VarSet::XY).unwrap();
        assert_eq!(s, vec![Monomial::ONE, Monomial::xyz(1, 0, 0)]);
    }
}
