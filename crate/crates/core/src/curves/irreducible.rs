//! Irreducibility by line restrictions.
//!
//! Certificate over 𝔽_p: if F mod p restricts to an irreducible binary form
//! of degree d on some line, F mod p is irreducible over 𝔽_p. If it also has
//! a squarefree restriction whose factor degrees have gcd 1, it cannot split
//! into k > 1 Frobenius-conjugate components (each root of a squarefree
//! restriction lies on exactly one component, so every factor degree would be
//! a multiple of k). An absolutely irreducible reduction of full degree
//! forces F to be irreducible over the algebraic closure of the base field.
//!
//! The converse direction is only a search: a rational linear factor through
//! pairs of rational points on two lines.

use num_integer::Integer;
use rand::Rng;
use serde::Serialize;

use crate::algebra::univariate::{distinct_degree, factor_squarefree, mp_is_squarefree, primes_near, to_mod_poly};
use crate::algebra::{Coeff, FieldSpec, Polynomial, Var};
use crate::seeded_rng;

use super::PlaneCurve;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Irreducibility {
    Irreducible,
    Reducible,
    Unknown,
}

impl std::fmt::Display for Irreducibility {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Irreducibility::Irreducible => "irreducible",
            Irreducibility::Reducible => "reducible",
            Irreducibility::Unknown => "unknown",
        })
    }
}

const LINE_TRIALS: usize = 60;
const STREAM_LINES: u64 = 11;

fn reduce_mod(f: &Polynomial, p: u32) -> Option<Polynomial> {
    let fp = FieldSpec::prime(p).ok()?;
    let mut out = Polynomial::zero(fp);
    for (m, c) in f.terms() {
        let r = match c.as_rational() {
            Some(q) => fp.from_rational(q)?,
            None => fp.from_i64(c.residue()? as i64),
        };
        out.add_term(*m, r);
    }
    Some(out)
}

type Point = [Coeff; 3];

fn random_point<R: Rng>(field: FieldSpec, rng: &mut R) -> Point {
    std::array::from_fn(|_| field.random_small(rng, 50))
}

/// `s ↦ F(s·a + b)` as a univariate polynomial in x.
fn restrict(f: &Polynomial, a: &Point, b: &Point) -> Polynomial {
    let field = f.field();
    let images = std::array::from_fn(|i| {
        &Polynomial::var(field, Var::X).scale(&a[i]) + &Polynomial::constant(field, b[i].clone())
    });
    f.substitute(&images)
}

fn certified_mod(f: &Polynomial, d: u32, p: u32, rng: &mut impl Rng) -> bool {
    let field = f.field();
    let (mut irreducible, mut coprime) = (false, false);
    for _ in 0..LINE_TRIALS {
        let (a, b) = (random_point(field, rng), random_point(field, rng));
        let g = restrict(f, &a, &b);
        if g.degree() != d as i64 {
            continue;
        }
        let coeffs = to_mod_poly(&g.univariate_coeffs(Var::X).expect("univariate"));
        if d > 1 && !mp_is_squarefree(&coeffs, p as u64) {
            continue;
        }
        let degrees: Vec<usize> = distinct_degree(&coeffs, p as u64).into_iter().map(|(_, k)| k).collect();
        irreducible |= degrees == [d as usize];
        coprime |= degrees.iter().fold(0usize, |acc, &k| acc.gcd(&k)) == 1;
        if irreducible && coprime {
            return true;
        }
    }
    false
}

fn base_roots(g: &Polynomial, seed: u64) -> Option<Vec<Coeff>> {
    let gd = g.differentiate(Var::X);
    if !crate::algebra::gcd(g, &gd).is_constant() {
        return None;
    }
    let factors = factor_squarefree(g, Var::X, seed).ok()?;
    Some(
        factors
            .iter()
            .filter(|h| h.degree() == 1)
            .map(|h| {
                let c = h.univariate_coeffs(Var::X).unwrap();
                -(&c[0] / &c[1])
            })
            .collect(),
    )
}

fn rational_points_on_line<R: Rng>(f: &Polynomial, d: u32, rng: &mut R) -> Option<Vec<Point>> {
    let field = f.field();
    for _ in 0..LINE_TRIALS {
        let (a, b) = (random_point(field, rng), random_point(field, rng));
        let g = restrict(f, &a, &b);
        if g.degree() != d as i64 {
            continue;
        }
        if let Some(roots) = base_roots(&g, rng.gen()) {
            return Some(
                roots
                    .iter()
                    .map(|s| std::array::from_fn(|i| &(&a[i] * s) + &b[i]))
                    .collect(),
            );
        }
    }
    None
}

fn line_through(p: &Point, q: &Point) -> [Coeff; 3] {
    [
        &(&p[1] * &q[2]) - &(&p[2] * &q[1]),
        &(&p[2] * &q[0]) - &(&p[0] * &q[2]),
        &(&p[0] * &q[1]) - &(&p[1] * &q[0]),
    ]
}

fn has_linear_factor<R: Rng>(c: &PlaneCurve, rng: &mut R) -> bool {
    let f = c.equation();
    let field = c.field();
    let (Some(l1), Some(l2)) = (rational_points_on_line(f, c.degree(), rng), rational_points_on_line(f, c.degree(), rng))
    else {
        return false;
    };
    for p in &l1 {
        for q in &l2 {
            let l = line_through(p, q);
            if l.iter().all(|x| x.is_zero()) {
                continue;
            }
            let mut lin = Polynomial::zero(field);
            for (v, coef) in Var::XYZ.iter().zip(&l) {
                lin = &lin + &Polynomial::var(field, *v).scale(coef);
            }
            if f.exact_div(&lin).is_some() {
                return true;
            }
        }
    }
    false
}

/// Absolute irreducibility of the curve, as far as it can be certified.
pub fn irreducibility_status(c: &PlaneCurve, seed: u64) -> Irreducibility {
    let field = c.field();
    let f = c.equation();
    let mut rng = seeded_rng(seed, STREAM_LINES);
    if c.degree() == 1 {
        return Irreducibility::Irreducible;
    }
    let primes = if field.is_rational() { primes_near(32003, 5) } else { vec![field.characteristic()] };
    for p in primes {
        let Some(fp) = reduce_mod(f, p) else { continue };
        if fp.degree() != c.degree() as i64 || fp.is_zero() {
            continue;
        }
        if certified_mod(&fp, c.degree(), p, &mut rng) {
            return Irreducibility::Irreducible;
        }
    }
    if has_linear_factor(c, &mut rng) {
        return Irreducibility::Reducible;
    }
    Irreducibility::Unknown
}

#[cfg(test)]
mod tests {
    use super::*;

    fn status(s: &str) -> Irreducibility {
        irreducibility_status(&PlaneCurve::parse(s, FieldSpec::rationals()).unwrap(), 5)
    }

    #[test]
    fn certificates() {
        assert_eq!(status("x*z - y^2"), Irreducibility::Irreducible);
        assert_eq!(status("y^2*z - x^2*(x + z)"), Irreducibility::Irreducible);
        assert_eq!(status("x^5 + y^5 + x^2*y^2*z"), Irreducibility::Irreducible);
        assert_eq!(status("x^3*y - x*y^3"), Irreducibility::Reducible);
        assert_eq!(status("y*(x^2 + y^2 - z^2)"), Irreducibility::Reducible);
    }

    #[test]
    fn conjugate_lines_are_not_certified() {
        // x^2 + y^2 is irreducible over ℚ but splits over ℚ(i).
        assert_eq!(status("x^2 + y^2"), Irreducibility::Unknown);
        // Two conics: no rational linear factor to find.
        assert_eq!(status("(x^2 + y^2 - z^2)*(x^2 - 2*y^2 + 3*z^2)"), Irreducibility::Unknown);
    }

    #[test]
    fn prime_field_curves() {
        let f = FieldSpec::prime(32003).unwrap();
        let c = PlaneCurve::parse("x^3 + y^3 + z^3", f).unwrap();
        assert_eq!(irreducibility_status(&c, 1), Irreducibility::Irreducible);
        let c = PlaneCurve::parse("x*y*(x + y + z)", f).unwrap();
        assert_eq!(irreducibility_status(&c, 1), Irreducibility::Reducible);
    }
}
