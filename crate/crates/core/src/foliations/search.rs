//! Least degree of a form along which a curve is invariant.
//!
//! For each k the forms of coefficient degree k+1 with zero Euler contraction
//! and `F | ω ∧ dF` are the nullspace N_k of one exact linear system. The
//! forms vanishing along a fixed component G of C form a subspace of N_k, and
//! a vector space is never a finite union of proper subspaces, so a leaf
//! exists in degree k iff the gcd of all coefficients of a basis of N_k is
//! coprime to F. The search is therefore exhaustive; random combinations are
//! only used to exhibit a witness.

use std::collections::HashMap;

use serde::Serialize;

use crate::algebra::poly::monomials_of_degree;
use crate::algebra::{gcd, Coeff, LinearSystem, Monomial, Polynomial, TermOrder, Var, VarSet};
use crate::curves::{is_reduced, PlaneCurve};
use crate::error::{Error, Result};
use crate::seeded_rng;

use super::{wedge_with_differential, Form};

const RANDOM_COMBINATIONS: usize = 50;
const STREAM_SEARCH: u64 = 23;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchMode {
    /// C is a leaf: divisibility and no component of C in the zero locus.
    Leaf,
    /// Only `F | ω ∧ dF`.
    FactorsThrough,
}

#[derive(Clone, Debug, Serialize)]
pub struct MinimalDegree {
    pub mode: SearchMode,
    pub m: u32,
    pub witness: Form,
    /// Dimension of the solution space for k = 0..=m.
    pub nullities: Vec<usize>,
    /// Degrees with solutions, none of them a leaf (leaf mode only).
    pub gaps: Vec<u32>,
}

/// Basis of the forms of coefficient degree `k + 1` with zero Euler
/// contraction whose wedge with dF is divisible by F.
pub fn tangent_forms(curve: &PlaneCurve, k: u32) -> Vec<Form> {
    let field = curve.field();
    let f = curve.equation();
    let mons = monomials_of_degree(VarSet::XYZ, k + 1);
    let n = mons.len();
    let mut rows: HashMap<(u8, Monomial), Vec<Coeff>> = HashMap::new();
    let mut put = |tag: u8, p: &Polynomial, col: usize| {
        for (m, c) in p.terms() {
            rows.entry((tag, *m)).or_insert_with(|| vec![field.zero(); 3 * n])[col] = c.clone();
        }
    };
    for slot in 0..3 {
        for (j, m) in mons.iter().enumerate() {
            let col = slot * n + j;
            let mut form: Form = std::array::from_fn(|_| Polynomial::zero(field));
            form[slot] = Polynomial::term(field, *m, field.one());
            let euler = Polynomial::term(field, m.mul(&Monomial::var(Var::XYZ[slot], 1)), field.one());
            put(0, &euler, col);
            for (w, wedge) in wedge_with_differential(&form, f).iter().enumerate() {
                put(1 + w as u8, &wedge.div_rem(f, TermOrder::Grevlex).1, col);
            }
        }
    }
    let mut keys: Vec<_> = rows.keys().copied().collect();
    keys.sort();
    let mut sys = LinearSystem::new(field, 3 * n);
    for key in keys {
        sys.push_row(rows.remove(&key).unwrap());
    }
    sys.nullspace()
        .into_iter()
        .map(|v| {
            std::array::from_fn(|slot| {
                Polynomial::from_terms(field, mons.iter().enumerate().map(|(j, m)| (*m, v[slot * n + j].clone())))
            })
        })
        .collect()
}

/// gcd(F, p_1, p_2, ...) is constant. Starting from F keeps the operands
/// small, and the loop stops as soon as the gcd is constant.
fn coprime_to<'a>(f: &Polynomial, ps: impl IntoIterator<Item = &'a Polynomial>) -> bool {
    let mut g = f.clone();
    for p in ps {
        if p.is_zero() {
            continue;
        }
        g = gcd(&g, p);
        if g.is_constant() {
            return true;
        }
    }
    g.is_constant()
}

fn transverse(form: &Form, f: &Polynomial) -> bool {
    coprime_to(f, form.iter())
}

pub fn minimal_degree(curve: &PlaneCurve, mode: SearchMode, seed: u64) -> Result<MinimalDegree> {
    if !is_reduced(curve) {
        return Err(Error::NotReduced);
    }
    let field = curve.field();
    let f = curve.equation();
    let d = curve.degree();
    let mut rng = seeded_rng(seed, STREAM_SEARCH);
    let mut nullities = Vec::new();
    let mut gaps = Vec::new();
    for k in 0..d {
        let basis = tangent_forms(curve, k);
        nullities.push(basis.len());
        if basis.is_empty() {
            continue;
        }
        if mode == SearchMode::FactorsThrough {
            return Ok(MinimalDegree { mode, m: k, witness: basis[0].clone(), nullities, gaps });
        }
        if !coprime_to(f, basis.iter().flatten()) {
            gaps.push(k);
            continue;
        }
        let mut witness = basis.iter().find(|w| transverse(w, f)).cloned();
        for _ in 0..RANDOM_COMBINATIONS * 10 {
            if witness.is_some() {
                break;
            }
            let mut w: Form = std::array::from_fn(|_| Polynomial::zero(field));
            for b in &basis {
                let c = field.random_small(&mut rng, 10);
                for s in 0..3 {
                    w[s] = &w[s] + &b[s].scale(&c);
                }
            }
            if transverse(&w, f) {
                witness = Some(w);
            }
        }
        let witness = witness.ok_or_else(|| Error::Internal(format!("leaf exists in degree {k} but no witness was drawn")))?;
        return Ok(MinimalDegree { mode, m: k, witness, nullities, gaps });
    }
    // The Hamilton form has coefficient degree d, so k = d − 1 always has a leaf.
    Err(Error::Internal(format!("no leaf form up to degree {}", d - 1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::FieldSpec;
    use crate::foliations::is_leaf;

    fn curve(s: &str) -> PlaneCurve {
        PlaneCurve::parse(s, FieldSpec::rationals()).unwrap()
    }

    #[test]
    fn conic_needs_degree_one() {
        let c = curve("x*z - y^2");
        let r = minimal_degree(&c, SearchMode::Leaf, 0).unwrap();
        assert_eq!(r.m, 1);
        assert!(is_leaf(&c, &r.witness).unwrap().is_leaf);
        assert_eq!(minimal_degree(&c, SearchMode::FactorsThrough, 0).unwrap().m, 1);
    }

    #[test]
    fn concurrent_lines_are_leaves_of_the_pencil() {
        let r = minimal_degree(&curve("x^3*y - x*y^3"), SearchMode::Leaf, 0).unwrap();
        assert_eq!(r.m, 0);
    }

    #[test]
    fn five_lines_gap() {
        let c = curve("x*y*(x + y)*(x - y)*(x + z)");
        let weak = minimal_degree(&c, SearchMode::FactorsThrough, 0).unwrap();
        assert_eq!(weak.m, 1);
        let strong = minimal_degree(&c, SearchMode::Leaf, 0).unwrap();
        assert!(strong.m >= 3 && strong.m <= 4);
        assert!(strong.gaps.contains(&1));
    }

    #[test]
    fn nodal_and_cuspidal_cubics() {
        assert_eq!(minimal_degree(&curve("y^2*z - x^2*(x + z)"), SearchMode::Leaf, 0).unwrap().m, 2);
        assert_eq!(minimal_degree(&curve("y^2*z - x^3"), SearchMode::Leaf, 0).unwrap().m, 1);
    }
}
