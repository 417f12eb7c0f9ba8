//! Reduced plane projective curves and the invariants of their singular
//! scheme: τ, σ, ρ, per-cluster Tjurina/Milnor/polar lengths and u.

mod clusters;
mod irreducible;

use serde::Serialize;

use crate::algebra::{gcd_all, parse_polynomial, FieldSpec, LinearChange, Polynomial, Var, VarSet};
use crate::error::{Error, Result};
use crate::groebner::StableHilbert;
use crate::groebner::Ideal;

pub use clusters::{analyze_clusters, cluster_invariants, split_clusters, ClusterSplit, SingularCluster};
pub use irreducible::{irreducibility_status, Irreducibility};

/// `C = V(F)` in the projective plane over `field`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneCurve {
    f: Polynomial,
    d: u32,
}

impl PlaneCurve {
    pub fn new(f: Polynomial) -> Result<Self> {
        if f.is_zero() {
            return Err(Error::Input("curve equation is zero".into()));
        }
        if !f.vars().is_subset(VarSet::XYZ) {
            return Err(Error::Input("curve equation must lie in x, y, z".into()));
        }
        if !f.is_homogeneous() {
            return Err(Error::Input(format!("curve equation {f} is not homogeneous")));
        }
        if f.degree() < 1 {
            return Err(Error::Input("curve must have positive degree".into()));
        }
        let d = f.degree() as u32;
        Ok(PlaneCurve { f, d })
    }

    pub fn parse(text: &str, field: FieldSpec) -> Result<Self> {
        PlaneCurve::new(parse_polynomial(text, field)?)
    }

    pub fn equation(&self) -> &Polynomial {
        &self.f
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    pub fn field(&self) -> FieldSpec {
        self.f.field()
    }

    pub fn partials(&self) -> [Polynomial; 3] {
        Var::XYZ.map(|v| self.f.differentiate(v))
    }

    /// The curve `F(M·x) = 0`.
    pub fn transformed(&self, change: &LinearChange) -> PlaneCurve {
        PlaneCurve { f: change.apply(&self.f), d: self.d }
    }

    pub fn scaled(&self, c: &crate::algebra::Coeff) -> PlaneCurve {
        assert!(!c.is_zero());
        PlaneCurve { f: self.f.scale(c), d: self.d }
    }
}

impl std::fmt::Display for PlaneCurve {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.f)
    }
}

/// No repeated component. A repeated factor divides every partial, and a
/// squarefree F sharing a factor with all partials would need an
/// irreducible factor whose partials all vanish, i.e. a p-th power. So this
/// criterion is exact in every characteristic.
pub fn is_reduced(c: &PlaneCurve) -> bool {
    let [fx, fy, fz] = c.partials();
    gcd_all([&c.f, &fx, &fy, &fz]).is_some_and(|g| g.is_constant())
}

/// Saturated singular scheme Σ together with its Hilbert tail.
#[derive(Clone, Debug)]
pub struct SingularScheme {
    pub ideal: Ideal,
    pub tau: u64,
    pub hilbert: StableHilbert,
}

/// Σ = V(F_x, F_y, F_z) saturated by (x, y, z); τ is its degree.
pub fn singular_scheme(c: &PlaneCurve) -> Result<SingularScheme> {
    if !is_reduced(c) {
        return Err(Error::NotReduced);
    }
    let p = c.field().characteristic();
    if p != 0 && c.d % p == 0 {
        return Err(Error::CharDividesDegree(p, c.d as i64));
    }
    let field = c.field();
    let jac: Vec<Polynomial> = c.partials().into_iter().filter(|g| !g.is_zero()).collect();
    let ideal = Ideal::homogeneous(field, jac).saturate_irrelevant();
    let hilbert = ideal
        .stable_hilbert()
        .ok_or_else(|| Error::Internal("singular scheme of a reduced curve is not finite".into()))?;
    Ok(SingularScheme { tau: hilbert.degree, ideal, hilbert })
}

/// σ = 1 + (least t from which the Hilbert function equals τ); 0 when smooth.
pub fn regularity_sigma(c: &PlaneCurve) -> Result<u32> {
    Ok(singular_scheme(c)?.hilbert.regularity)
}

/// Curve-side report.
#[derive(Clone, Debug, Serialize)]
pub struct CurveInvariants {
    pub d: u32,
    pub reduced: bool,
    pub irreducibility: Irreducibility,
    pub tau: u64,
    /// Absent in positive characteristic.
    pub u: Option<u64>,
    pub sigma: u32,
    pub rho: i64,
    pub clusters: Vec<SingularCluster>,
    pub coordinate_seed: u64,
}

/// Number of singular points that are not quasi-homogeneous.
pub fn count_u(clusters: &[SingularCluster]) -> Result<u64> {
    let mut u = 0;
    for c in clusters {
        match c.quasi_homogeneous {
            Some(true) => {}
            Some(false) => u += c.point_count,
            None => return Err(Error::CharNotZero),
        }
    }
    Ok(u)
}

pub fn analyze_curve(c: &PlaneCurve, seed: u64) -> Result<CurveInvariants> {
    let sigma_scheme = singular_scheme(c)?;
    let (split, clusters) = analyze_clusters(c, seed)?;
    let tau_sum: u64 = clusters.iter().map(|k| k.tjurina_length).sum();
    if tau_sum != sigma_scheme.tau {
        return Err(Error::Internal(format!(
            "cluster Tjurina lengths sum to {tau_sum}, singular scheme has degree {}",
            sigma_scheme.tau
        )));
    }
    let u = if c.field().is_rational() { Some(count_u(&clusters)?) } else { None };
    let sigma = sigma_scheme.hilbert.regularity;
    Ok(CurveInvariants {
        d: c.d,
        reduced: true,
        irreducibility: irreducibility_status(c, seed),
        tau: sigma_scheme.tau,
        u,
        sigma,
        rho: sigma as i64 - c.d as i64 + 2,
        clusters,
        coordinate_seed: split.coordinate_seed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> PlaneCurve {
        PlaneCurve::parse(s, FieldSpec::rationals()).unwrap()
    }

    #[test]
    fn construction_checks() {
        let f = FieldSpec::rationals();
        assert!(PlaneCurve::parse("x^2 + y", f).is_err());
        assert!(PlaneCurve::parse("0", f).is_err());
        assert!(PlaneCurve::parse("3", f).is_err());
        assert_eq!(q("x*z - y^2").degree(), 2);
    }

    #[test]
    fn reducedness() {
        assert!(!is_reduced(&q("x^2*y")));
        assert!(is_reduced(&q("x^3*y - x*y^3")));
        let f7 = FieldSpec::prime(7).unwrap();
        assert!(!is_reduced(&PlaneCurve::parse("x^7 + y^7", f7).unwrap()));
        assert!(is_reduced(&PlaneCurve::parse("x^7 + y^6*z", f7).unwrap()));
    }

    #[test]
    fn singular_schemes() {
        let cone = singular_scheme(&q("x^3*y - x*y^3")).unwrap();
        assert_eq!((cone.tau, cone.hilbert.regularity), (9, 5));
        assert_eq!(singular_scheme(&q("x*z - y^2")).unwrap().tau, 0);
        assert_eq!(regularity_sigma(&q("x*z - y^2")).unwrap(), 0);
        let node = singular_scheme(&q("y^2*z - x^2*(x + z)")).unwrap();
        assert_eq!((node.tau, node.hilbert.regularity), (1, 1));
        assert_eq!(regularity_sigma(&q("y^2*z - x^3")).unwrap(), 2);
    }

    #[test]
    fn singular_scheme_refusals() {
        assert_eq!(singular_scheme(&q("x^2*y")).unwrap_err(), Error::NotReduced);
        let f3 = FieldSpec::prime(3).unwrap();
        let c = PlaneCurve::parse("x^3 + y^3 + x*y*z", f3).unwrap();
        assert_eq!(singular_scheme(&c).unwrap_err(), Error::CharDividesDegree(3, 3));
    }

    #[test]
    fn cone_invariants() {
        let inv = analyze_curve(&q("x^3*y - x*y^3"), 1).unwrap();
        assert_eq!((inv.tau, inv.u, inv.sigma, inv.rho), (9, Some(0), 5, 3));
        assert_eq!(inv.irreducibility, Irreducibility::Reducible);
        assert_eq!(inv.clusters.len(), 1);
    }
}
