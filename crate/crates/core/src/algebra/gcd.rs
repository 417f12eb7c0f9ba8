//! Multivariate gcd by content/primitive-part recursion on the last occurring
//! variable, with a primitive remainder sequence in that variable.

use super::field::FieldSpec;
use super::monomial::{Monomial, TermOrder, Var};
use super::poly::Polynomial;

/// Greatest common divisor, normalized monic in grevlex. `gcd(p, 0)` is `p` made monic.
pub fn gcd(p: &Polynomial, q: &Polynomial) -> Polynomial {
    assert_eq!(p.field(), q.field(), "field mismatch");
    if p.is_zero() {
        return q.monic(TermOrder::Grevlex);
    }
    if q.is_zero() {
        return p.monic(TermOrder::Grevlex);
    }
    let vars = p.vars().union(q.vars());
    let Some(v) = vars.iter().last() else {
        return Polynomial::one(p.field());
    };
    if coprime_modulo_prime(p, q) {
        return Polynomial::one(p.field());
    }
    let cp = content(p, v);
    let cq = content(q, v);
    let g = gcd(&cp, &cq);
    let pp = p.exact_div(&cp).expect("content divides");
    let qq = q.exact_div(&cq).expect("content divides");
    let h = primitive_prs(pp, qq, v);
    (&g * &h).monic(TermOrder::Grevlex)
}

/// Over ℚ, a sufficient test for gcd(p, q) = 1. Take a prime ℓ that divides
/// no denominator and not the leading coefficient of p. Then p and q lie in
/// ℤ_(ℓ)[vars] and, by Gauss's lemma there, a primitive gcd g divides p
/// with a unit leading coefficient. So g mod ℓ keeps its leading monomial
/// and divides both images, and coprime images force g = 1.
fn coprime_modulo_prime(p: &Polynomial, q: &Polynomial) -> bool {
    const PRIMES: [u32; 2] = [2_147_483_647, 2_147_483_629];
    if !p.field().is_rational() || p.degree() + q.degree() < 3 {
        return false;
    }
    let image = |f: &Polynomial, fp: FieldSpec| -> Option<Polynomial> {
        let mut out = Polynomial::zero(fp);
        for (m, c) in f.terms() {
            out.add_term(*m, fp.from_rational(c.as_rational()?)?);
        }
        Some(out)
    };
    for ell in PRIMES {
        let fp = FieldSpec::prime(ell).expect("prime");
        let (Some(a), Some(b)) = (image(p, fp), image(q, fp)) else { continue };
        if a.leading_monomial(TermOrder::Grevlex) != p.leading_monomial(TermOrder::Grevlex) || b.is_zero() {
            continue;
        }
        return gcd(&a, &b).is_constant();
    }
    false
}

pub fn gcd_all<'a, I: IntoIterator<Item = &'a Polynomial>>(polys: I) -> Option<Polynomial> {
    let mut it = polys.into_iter();
    let first = it.next()?.monic(TermOrder::Grevlex);
    Some(it.fold(first, |g, p| if g.is_one() { g } else { gcd(&g, p) }))
}

/// Coefficients of `p` viewed as a polynomial in `v`, index = power of `v`.
pub fn coefficients_in(p: &Polynomial, v: Var) -> Vec<Polynomial> {
    let n = (p.degree_in(v).max(0) + 1) as usize;
    let mut out = vec![Polynomial::zero(p.field()); n];
    for (m, c) in p.terms() {
        let mut rest = *m;
        let e = rest.0[v.index()] as usize;
        rest.0[v.index()] = 0;
        out[e].add_term(rest, c.clone());
    }
    out
}

/// Content with respect to `v`: gcd of the coefficients in `v`, monic.
pub fn content(p: &Polynomial, v: Var) -> Polynomial {
    let cs = coefficients_in(p, v);
    gcd_all(cs.iter().filter(|c| !c.is_zero())).unwrap_or_else(|| Polynomial::zero(p.field()))
}

fn primitive_part(p: &Polynomial, v: Var) -> Polynomial {
    let c = content(p, v);
    p.exact_div(&c).expect("content divides")
}

/// Pseudo-remainder of `a` by `b` in `v`.
fn pseudo_rem(a: &Polynomial, b: &Polynomial, v: Var) -> Polynomial {
    let db = b.degree_in(v);
    let bc = coefficients_in(b, v);
    let lc_b = bc.last().cloned().expect("nonzero");
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in(v) >= db {
        let dr = r.degree_in(v);
        let lc_r = coefficients_in(&r, v).pop().expect("nonzero");
        let shift = Monomial::var(v, (dr - db) as u16);
        let sub = (&lc_r * b).mul_term(&shift, &r.field().one());
        r = &(&lc_b * &r) - &sub;
    }
    r
}

fn primitive_prs(mut a: Polynomial, mut b: Polynomial, v: Var) -> Polynomial {
    if a.degree_in(v) < b.degree_in(v) {
        std::mem::swap(&mut a, &mut b);
    }
    loop {
        if b.is_zero() {
            return primitive_part(&a, v);
        }
        if b.degree_in(v) == 0 {
            return Polynomial::one(a.field());
        }
        let r = pseudo_rem(&a, &b, v);
        a = b;
        b = if r.is_zero() { r } else { primitive_part(&r, v) };
    }
}

/// Squarefree part of a univariate polynomial in characteristic 0 or of degree
/// below the characteristic.
pub fn squarefree_part(p: &Polynomial, v: Var) -> Polynomial {
    let g = gcd(p, &p.differentiate(v));
    p.exact_div(&g).expect("gcd divides").monic(TermOrder::Grevlex)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::FieldSpec;
    use crate::algebra::parse::parse_polynomial;

    fn q(s: &str) -> Polynomial {
        parse_polynomial(s, FieldSpec::rationals()).unwrap()
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd(&q("x^2 - y^2"), &q("x - y")), q("x - y"));
        assert!(gcd(&q("x*y"), &q("z")).is_one());
        assert_eq!(gcd(&q("2*x*y"), &Polynomial::zero(FieldSpec::rationals())), q("x*y"));
    }

    #[test]
    fn jacobian_gcd_of_coordinate_triangle() {
        let f = q("x*y*z");
        let parts: Vec<_> = Var::XYZ.iter().map(|v| f.differentiate(*v)).collect();
        let g = gcd_all([&f, &parts[0], &parts[1], &parts[2]]).unwrap();
        assert!(g.is_one());
    }

    #[test]
    fn gcd_finds_shared_conic() {
        let c = q("x*z - y^2");
        let a = &c * &q("x + 2*y - z");
        let b = &c * &q("x^2 + z^2");
        assert_eq!(gcd(&a, &b), c.monic(TermOrder::Grevlex));
    }

    #[test]
    fn modular_shortcut_agrees_with_the_full_gcd() {
        let shared = q("x^2 + 3*y*z - 5*z^2");
        let a = &shared * &q("7*x - 11*y + 13*z");
        let b = &shared * &q("x^2 - 2*y^2 + 1/3*z^2");
        assert_eq!(gcd(&a, &b), shared.monic(TermOrder::Grevlex));
        assert!(gcd(&q("x^3 + y^3 + z^3"), &q("x*y - 2*z^2")).is_one());
        // The leading coefficient vanishes mod the first prime.
        let big = q("2147483647*x^2 + y^2 - z^2");
        assert!(gcd(&big, &q("x + y")).is_one());
        assert_eq!(gcd(&(&big * &q("x + y")), &q("x + y")), q("x + y"));
    }

    #[test]
    fn squarefree_univariate() {
        let p = q("(x - 1)^3*(x + 2)");
        assert_eq!(squarefree_part(&p, Var::X), q("(x - 1)*(x + 2)").monic(TermOrder::Grevlex));
    }
}
