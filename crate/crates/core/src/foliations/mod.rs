//! Foliations of the projective plane as twisted 1-forms `A dx + B dy + C dz`
//! with `x·A + y·B + z·C = 0`. Coefficient degree `m + 1` means degree `m`.

mod search;

use rand::Rng;
use serde::Serialize;

use crate::algebra::{gcd, gcd_all, FieldSpec, LinearChange, Polynomial, TermOrder, Var};
use crate::curves::{is_reduced, PlaneCurve};
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::seeded_rng;

pub use search::{minimal_degree, MinimalDegree, SearchMode};

pub type Form = [Polynomial; 3];

const ATTEMPTS: u64 = 20;
const STREAM_LINE: u64 = 21;
const STREAM_HAMILTON: u64 = 22;

/// `x·A + y·B + z·C`.
pub fn euler_contraction(form: &Form) -> Polynomial {
    let field = form[0].field();
    Var::XYZ
        .iter()
        .zip(form)
        .fold(Polynomial::zero(field), |acc, (v, a)| &acc + &(&Polynomial::var(field, *v) * a))
}

/// A saturated form with its singular scheme.
#[derive(Clone, Debug)]
pub struct Foliation {
    form: Form,
    m: u32,
    removed: Polynomial,
    singular: Ideal,
    deg_s: u64,
}

/// Common coefficient degree of a nonzero form, checking homogeneity.
fn form_degree(form: &Form) -> Result<u32> {
    let mut deg = None;
    for a in form.iter().filter(|a| !a.is_zero()) {
        if !a.is_homogeneous() || !a.vars().is_subset(crate::algebra::VarSet::XYZ) {
            return Err(Error::DegreeMismatch);
        }
        match deg {
            None => deg = Some(a.degree() as u32),
            Some(d) if d != a.degree() as u32 => return Err(Error::DegreeMismatch),
            _ => {}
        }
    }
    deg.ok_or(Error::AllZero)
}

/// Validates, divides out `gcd(A, B, C)` and computes the singular scheme.
pub fn make_foliation(a: Polynomial, b: Polynomial, c: Polynomial) -> Result<Foliation> {
    let form = [a, b, c];
    form_degree(&form)?;
    if !euler_contraction(&form).is_zero() {
        return Err(Error::EulerViolated);
    }
    let g = gcd_all(form.iter()).expect("nonempty").monic(TermOrder::Grevlex);
    let form = form.map(|p| p.exact_div(&g).expect("gcd divides"));
    let k = form_degree(&form)?;
    let m = k - 1;
    let field = form[0].field();
    let singular = Ideal::homogeneous(field, form.iter().cloned()).saturate_irrelevant();
    let deg_s = singular
        .stable_hilbert()
        .ok_or_else(|| Error::SingularDegree { expected: expected_deg_s(m), found: "infinite".into() })?
        .degree;
    if deg_s != expected_deg_s(m) {
        return Err(Error::SingularDegree { expected: expected_deg_s(m), found: deg_s.to_string() });
    }
    Ok(Foliation { form, m, removed: g, singular, deg_s })
}

fn expected_deg_s(m: u32) -> u64 {
    let m = m as u64;
    m * m + m + 1
}

impl Foliation {
    pub fn from_form(form: Form) -> Result<Foliation> {
        let [a, b, c] = form;
        make_foliation(a, b, c)
    }

    pub fn form(&self) -> &Form {
        &self.form
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn field(&self) -> FieldSpec {
        self.form[0].field()
    }

    /// The common factor divided out of the input coefficients (1 if none).
    pub fn removed_factor(&self) -> &Polynomial {
        &self.removed
    }

    pub fn singular_ideal(&self) -> &Ideal {
        &self.singular
    }

    pub fn deg_s(&self) -> u64 {
        self.deg_s
    }

    /// Regularity of S, by the same Hilbert-table rule as σ for curves.
    pub fn singular_regularity(&self) -> u32 {
        self.singular.stable_hilbert().expect("finite").regularity
    }

    /// Pullback of the form under `x = M·x'`.
    pub fn transformed(&self, change: &LinearChange) -> Result<Foliation> {
        Foliation::from_form(change.apply_form(&self.form))
    }
}

/// Regularity of S for `m > 0`; degree 0 is outside the intended scope.
pub fn foliation_regularity(fol: &Foliation) -> Result<u32> {
    if fol.m == 0 {
        return Err(Error::DegreeZero);
    }
    Ok(fol.singular_regularity())
}

/// Restricts the form to seeded random lines until one is neither invariant
/// nor through S, and returns the degree of the tangency divisor.
///
/// With the line `s·P + t·Q`, the pullback is `α ds + β dt` and the Euler
/// relation gives `s·α + t·β = 0`, so `α = t·γ`, `β = −s·γ`; γ is the
/// tangency form.
pub fn tangency_degree_check(fol: &Foliation, seed: u64) -> Result<u32> {
    let field = fol.field();
    let mut rng = seeded_rng(seed, STREAM_LINE);
    let (s, t) = (Polynomial::var(field, Var::X), Polynomial::var(field, Var::Y));
    for _ in 0..ATTEMPTS {
        let p: [_; 3] = std::array::from_fn(|_| field.random_small(&mut rng, 20));
        let q: [_; 3] = std::array::from_fn(|_| field.random_small(&mut rng, 20));
        let images: [Polynomial; 3] = std::array::from_fn(|i| &s.scale(&p[i]) + &t.scale(&q[i]));
        let line = {
            let l = [
                &(&p[1] * &q[2]) - &(&p[2] * &q[1]),
                &(&p[2] * &q[0]) - &(&p[0] * &q[2]),
                &(&p[0] * &q[1]) - &(&p[1] * &q[0]),
            ];
            if l.iter().all(|c| c.is_zero()) {
                continue;
            }
            Var::XYZ
                .iter()
                .zip(&l)
                .fold(Polynomial::zero(field), |acc, (v, c)| &acc + &Polynomial::var(field, *v).scale(c))
        };
        if !fol.singular.with_generators([line]).saturate_irrelevant().is_unit() {
            continue;
        }
        let restricted: Vec<Polynomial> = fol.form.iter().map(|a| a.substitute(&images)).collect();
        let dot = |v: &[crate::algebra::Coeff; 3]| {
            restricted.iter().zip(v).fold(Polynomial::zero(field), |acc, (a, c)| &acc + &a.scale(c))
        };
        let (alpha, beta) = (dot(&p), dot(&q));
        if alpha.is_zero() && beta.is_zero() {
            continue;
        }
        let gamma = alpha
            .exact_div(&t)
            .ok_or_else(|| Error::Internal("restricted form violates the Euler relation".into()))?;
        if beta != -&(&s * &gamma) {
            return Err(Error::Internal("restricted form violates the Euler relation".into()));
        }
        return Ok(gamma.degree() as u32);
    }
    Err(Error::DegenerateLine)
}

/// Outcome of the leaf test for one curve and one form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LeafCheckResult {
    pub is_leaf: bool,
    /// Divisibility holds but a component of C lies in the zero locus of the form.
    pub factors_through_only: bool,
    pub tangency_remainders: [Polynomial; 3],
}

/// Coefficients of `ω ∧ dF`.
pub fn wedge_with_differential(form: &Form, f: &Polynomial) -> [Polynomial; 3] {
    let [fx, fy, fz] = Var::XYZ.map(|v| f.differentiate(v));
    let [a, b, c] = form;
    [&(a * &fy) - &(b * &fx), &(b * &fz) - &(c * &fy), &(c * &fx) - &(a * &fz)]
}

/// `ω|C` factors through Ω¹_C iff F divides all of `ω ∧ dF`; C is a leaf if
/// moreover the form does not vanish along a component of C.
pub fn is_leaf(curve: &PlaneCurve, form: &Form) -> Result<LeafCheckResult> {
    if !is_reduced(curve) {
        return Err(Error::NotReduced);
    }
    form_degree(form)?;
    let f = curve.equation();
    let tangency_remainders = wedge_with_differential(form, f).map(|w| w.div_rem(f, TermOrder::Grevlex).1);
    let divisible = tangency_remainders.iter().all(|r| r.is_zero());
    let common = gcd_all(form.iter()).expect("nonempty");
    let transverse = gcd(&common, f).is_constant();
    Ok(LeafCheckResult {
        is_leaf: divisible && transverse,
        factors_through_only: divisible && !transverse,
        tangency_remainders,
    })
}

/// The Hamilton foliation of a curve together with the coordinates it was built in.
#[derive(Clone, Debug)]
pub struct Hamilton {
    /// Coordinates in which neither z nor F_x vanishes on a component.
    pub change: LinearChange,
    /// The foliation pulled back to the original coordinates.
    pub foliation: Foliation,
    /// `F_x` and `F_y` share a factor in the chosen coordinates.
    pub degree_dropped: bool,
}

/// The vector field `F_y ∂x − F_x ∂y` read as the form
/// `(z F_x, z F_y, −(x F_x + y F_y))`, built in coordinates where neither z
/// nor F_x vanishes on a component of C and pulled back.
pub fn hamilton_foliation(curve: &PlaneCurve, seed: u64) -> Result<Hamilton> {
    if !is_reduced(curve) {
        return Err(Error::NotReduced);
    }
    let field = curve.field();
    let mut rng = seeded_rng(seed, STREAM_HAMILTON);
    for k in 0..ATTEMPTS {
        let change = if k == 0 { LinearChange::identity(field) } else { LinearChange::random(field, &mut rng, 3) };
        let moved = curve.transformed(&change);
        let f = moved.equation();
        let [fx, fy, _] = moved.partials();
        let z = Polynomial::var(field, Var::Z);
        if fx.is_zero() || f.exact_div(&z).is_some() || !gcd(f, &fx).is_constant() {
            continue;
        }
        let (x, y) = (Polynomial::var(field, Var::X), Polynomial::var(field, Var::Y));
        let form = [&z * &fx, &z * &fy, -&(&(&x * &fx) + &(&y * &fy))];
        let back = change.inverse().apply_form(&form);
        let foliation = Foliation::from_form(back)?;
        let degree_dropped = !gcd(&fx, &fy).is_constant();
        return Ok(Hamilton { change, foliation, degree_dropped });
    }
    Err(Error::CoordinateSearchFailed)
}

/// A seeded random saturated foliation of degree `m`.
pub fn random_foliation<R: Rng>(field: FieldSpec, m: u32, rng: &mut R) -> Foliation {
    // ω = i_R i_V (dx∧dy∧dz) for a random homogeneous vector field V of degree m.
    let (x, y, z) = (Polynomial::var(field, Var::X), Polynomial::var(field, Var::Y), Polynomial::var(field, Var::Z));
    loop {
        let v: [Polynomial; 3] =
            std::array::from_fn(|_| Polynomial::random(field, crate::algebra::VarSet::XYZ, m, true, 3, rng));
        let form = [
            &(&z * &v[1]) - &(&y * &v[2]),
            &(&x * &v[2]) - &(&z * &v[0]),
            &(&y * &v[0]) - &(&x * &v[1]),
        ];
        if form.iter().all(|a| a.is_zero()) {
            continue;
        }
        if let Ok(f) = Foliation::from_form(form) {
            if f.m == m {
                return f;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_polynomial;
    use rand::SeedableRng;

    fn q(s: &str) -> Polynomial {
        parse_polynomial(s, FieldSpec::rationals()).unwrap()
    }

    fn curve(s: &str) -> PlaneCurve {
        PlaneCurve::parse(s, FieldSpec::rationals()).unwrap()
    }

    fn pencil() -> Form {
        [q("y"), q("-x"), q("0")]
    }

    #[test]
    fn pencil_of_lines() {
        let f = Foliation::from_form(pencil()).unwrap();
        assert_eq!((f.degree(), f.deg_s()), (0, 1));
        assert_eq!(foliation_regularity(&f), Err(Error::DegreeZero));
        assert_eq!(f.singular_regularity(), 1);
        assert_eq!(tangency_degree_check(&f, 1), Ok(0));
    }

    #[test]
    fn common_factor_is_removed() {
        let f = make_foliation(q("z*y"), q("-z*x"), q("0")).unwrap();
        assert_eq!(f.degree(), 0);
        assert_eq!(f.removed_factor(), &q("z"));
    }

    #[test]
    fn input_errors() {
        assert_eq!(make_foliation(q("y"), q("x"), q("0")).unwrap_err(), Error::EulerViolated);
        assert_eq!(make_foliation(q("0"), q("0"), q("0")).unwrap_err(), Error::AllZero);
        assert_eq!(make_foliation(q("y^2"), q("-x"), q("0")).unwrap_err(), Error::DegreeMismatch);
    }

    #[test]
    fn random_foliations_have_the_expected_singular_data() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(4);
        for m in 1..=3 {
            let f = random_foliation(FieldSpec::rationals(), m, &mut rng);
            assert_eq!(f.deg_s(), expected_deg_s(m));
            assert_eq!(foliation_regularity(&f), Ok(2 * m));
            assert_eq!(tangency_degree_check(&f, m as u64), Ok(m));
        }
    }

    #[test]
    fn leaf_tests() {
        let lines = curve("x^3*y - x*y^3");
        assert!(is_leaf(&lines, &pencil()).unwrap().is_leaf);
        let conic = curve("x*z - y^2");
        let r = is_leaf(&conic, &pencil()).unwrap();
        assert!(!r.is_leaf && !r.factors_through_only);
        // z·(pencil) vanishes along the line z = 0.
        let zline = curve("z*(x - y)");
        let r = is_leaf(&zline, &[q("z*y"), q("-z*x"), q("0")]).unwrap();
        assert!(r.factors_through_only && !r.is_leaf);
        assert_eq!(is_leaf(&curve("x^2*y"), &pencil()).unwrap_err(), Error::NotReduced);
    }

    #[test]
    fn hamilton_foliations() {
        for (s, m) in [("y^2*z - x^3", 2), ("x", 0), ("x*z - y^2", 1), ("x^3*y - x*y^3", 3)] {
            let c = curve(s);
            let h = hamilton_foliation(&c, 0).unwrap();
            assert_eq!(h.foliation.degree(), m, "{s}");
            assert!(is_leaf(&c, h.foliation.form()).unwrap().is_leaf, "{s}");
        }
        let quartic = hamilton_foliation(&curve("x^4 + y^4 - z^4 + x*y*z^2"), 0).unwrap();
        assert_eq!(tangency_degree_check(&quartic.foliation, 2), Ok(3));
    }
}
