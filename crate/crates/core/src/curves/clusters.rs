//! Splitting the singular locus into Galois-stable clusters in a generic
//! affine chart, and the local lengths of each cluster.
//!
//! A cluster is the set of singular points whose x-coordinates are the roots
//! of one irreducible factor φ of the squarefree x-eliminant r. Everything
//! stays over the base field: the cluster's share of a zero-dimensional ideal
//! is the part of its quotient ring on which the cluster's equations act
//! nilpotently.

use rand::Rng;
use serde::Serialize;

use crate::algebra::gcd::squarefree_part;
use crate::algebra::univariate::factor_squarefree;
use crate::algebra::{FieldSpec, LinearChange, Polynomial, Var};
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::seeded_rng;

use super::PlaneCurve;

const ATTEMPTS: u64 = 20;
const STREAM_CHANGE: u64 = 1;
const STREAM_POLARS: u64 = 3;
const STREAM_FACTOR: u64 = 4;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SingularCluster {
    pub eliminant_factor: Polynomial,
    pub point_count: u64,
    pub tjurina_length: u64,
    pub milnor_length: u64,
    pub polar_length: u64,
    /// Saito's criterion τ = μ; only meaningful in characteristic zero.
    pub quasi_homogeneous: Option<bool>,
}

/// The curve in shape position, with the affine ideals shared by all clusters.
#[derive(Clone, Debug)]
pub struct ClusterSplit {
    pub coordinate_seed: u64,
    pub change: LinearChange,
    pub moved: PlaneCurve,
    /// `(f, f_x, f_y)` in the chart z = 1.
    pub tjurina: Ideal,
    /// `(f_x, f_y)` in the chart z = 1.
    pub milnor: Ideal,
    /// Squarefree x-eliminant of the Tjurina ideal.
    pub eliminant: Polynomial,
    pub factors: Vec<Polynomial>,
}

impl ClusterSplit {
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }
}

fn squarefree(p: &Polynomial, v: Var) -> Result<Polynomial> {
    let ch = p.field().characteristic() as i64;
    if ch != 0 && p.degree() >= ch {
        return Err(Error::FieldTooSmall(format!(
            "eliminant of degree {} over a field of characteristic {ch}",
            p.degree()
        )));
    }
    Ok(squarefree_part(p, v))
}

fn try_position(c: &PlaneCurve, change: &LinearChange) -> Result<Option<(PlaneCurve, Ideal, Ideal, Polynomial)>> {
    let field = c.field();
    let moved = c.transformed(change);
    // No singular point on z = 0.
    let mut at_infinity: Vec<Polynomial> = moved.partials().into_iter().filter(|g| !g.is_zero()).collect();
    at_infinity.push(Polynomial::var(field, Var::Z));
    if !Ideal::homogeneous(field, at_infinity).is_m_primary() {
        return Ok(None);
    }
    let f = moved.equation().dehomogenize(Var::Z);
    let (fx, fy) = (f.differentiate(Var::X), f.differentiate(Var::Y));
    let milnor = Ideal::affine(field, [fx.clone(), fy.clone()]);
    if !milnor.is_zero_dimensional() {
        return Ok(None);
    }
    let tjurina = Ideal::affine(field, [f, fx, fy]);
    let r = squarefree(&tjurina.eliminant(Var::X)?, Var::X)?;
    let s = squarefree(&tjurina.eliminant(Var::Y)?, Var::Y)?;
    // Seidenberg: T + (r, s) is radical, so its colength counts the points.
    let radical = tjurina.with_generators([r.clone(), s]);
    if radical.colength().finite() != Some(r.degree().max(0) as u64) {
        return Ok(None);
    }
    Ok(Some((moved, tjurina, milnor, r)))
}

/// Seeded generic coordinates in which x separates the singular points and
/// none lies at infinity.
pub fn split_clusters(c: &PlaneCurve, seed: u64) -> Result<ClusterSplit> {
    if !super::is_reduced(c) {
        return Err(Error::NotReduced);
    }
    let field = c.field();
    let p = field.characteristic();
    if p != 0 && c.degree() % p == 0 {
        return Err(Error::CharDividesDegree(p, c.degree() as i64));
    }
    for k in 0..ATTEMPTS {
        let coordinate_seed = seed.wrapping_add(k);
        let mut rng = seeded_rng(coordinate_seed, STREAM_CHANGE);
        let change = LinearChange::random(field, &mut rng, 2);
        if let Some((moved, tjurina, milnor, eliminant)) = try_position(c, &change)? {
            let factors = factor_squarefree(&eliminant, Var::X, seeded_rng(coordinate_seed, STREAM_FACTOR).gen())?;
            return Ok(ClusterSplit { coordinate_seed, change, moved, tjurina, milnor, eliminant, factors });
        }
    }
    Err(Error::ShapePositionFailed(format!(
        "no generic chart found in {ATTEMPTS} coordinate changes over {field}; try a larger prime"
    )))
}

fn polar_pair<R: Rng>(moved: &PlaneCurve, rng: &mut R) -> Option<Ideal> {
    let field = moved.field();
    let grad = moved.partials();
    let mut polar = || {
        let mut p = Polynomial::zero(field);
        for g in &grad {
            p = &p + &g.scale(&field.random_small(rng, 7));
        }
        p.dehomogenize(Var::Z)
    };
    let (a, b) = (polar(), polar());
    let e = Ideal::affine(field, [a, b]);
    e.is_zero_dimensional().then_some(e)
}

/// Tjurina, Milnor and polar lengths of cluster `index`.
pub fn cluster_invariants(split: &ClusterSplit, index: usize) -> Result<SingularCluster> {
    let field: FieldSpec = split.moved.field();
    let phi = &split.factors[index];
    // Tjurina components over the roots of φ are the cluster; other ideals
    // may have components there off the curve, so cut with T + (φ).
    let over_phi = Ideal::affine(field, [phi.clone()]);
    let support = split.tjurina.with_generators([phi.clone()]);
    let tjurina_length = split.tjurina.local_colength(&over_phi)?;
    let milnor_length = split.milnor.local_colength(&support)?;
    let stream_seed = split.coordinate_seed.wrapping_mul(1009).wrapping_add(index as u64);
    let mut rng = seeded_rng(stream_seed, STREAM_POLARS);
    let polars = (0..ATTEMPTS)
        .find_map(|_| polar_pair(&split.moved, &mut rng))
        .ok_or_else(|| Error::Internal("no general pair of polars found".into()))?;
    let polar_length = polars.local_colength(&support)?;
    Ok(SingularCluster {
        eliminant_factor: phi.clone(),
        point_count: phi.degree() as u64,
        tjurina_length,
        milnor_length,
        polar_length,
        quasi_homogeneous: field.is_rational().then_some(tjurina_length == milnor_length),
    })
}

pub fn analyze_clusters(c: &PlaneCurve, seed: u64) -> Result<(ClusterSplit, Vec<SingularCluster>)> {
    let split = split_clusters(c, seed)?;
    let clusters = (0..split.len()).map(|k| cluster_invariants(&split, k)).collect::<Result<Vec<_>>>()?;
    Ok((split, clusters))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::oracle::oracle_local_colength;

    fn q(s: &str) -> PlaneCurve {
        PlaneCurve::parse(s, FieldSpec::rationals()).unwrap()
    }

    fn summary(s: &str) -> Vec<(u64, u64, u64, u64)> {
        let (_, cl) = analyze_clusters(&q(s), 7).unwrap();
        cl.iter().map(|c| (c.point_count, c.tjurina_length, c.polar_length, c.milnor_length)).collect()
    }

    #[test]
    fn node_and_cusp() {
        assert_eq!(summary("y^2*z - x^2*(x + z)"), vec![(1, 1, 1, 1)]);
        assert_eq!(summary("y^2*z - x^3"), vec![(1, 2, 2, 2)]);
    }

    #[test]
    fn smooth_curve_has_no_clusters() {
        assert!(summary("x^3 + y^3 + z^3").is_empty());
    }

    #[test]
    fn two_rational_nodes() {
        // The line meets the circle in the two nodes (±1 : 0 : 1).
        let s = summary("y*(x^2 + y^2 - z^2)");
        assert_eq!(s, vec![(1, 1, 1, 1), (1, 1, 1, 1)]);
    }

    #[test]
    fn nilpotent_part_matches_saturation() {
        let (split, cl) = analyze_clusters(&q("(y^2*z - x^3)*(x^2 + y^2 - z^2)"), 2).unwrap();
        for (k, c) in cl.iter().enumerate() {
            let rest = split.eliminant.exact_div(&split.factors[k]).unwrap();
            let sat = split.tjurina.saturate_by(&rest);
            assert_eq!(sat.colength().finite(), Some(c.tjurina_length));
        }
    }

    #[test]
    fn conjugate_nodes_form_one_cluster() {
        // Line y = 0 meets the conic x^2 + y^2 = 2 in x^2 = 2.
        let s = summary("y*(x^2 + y^2 - 2*z^2)");
        assert_eq!(s, vec![(2, 2, 2, 2)]);
    }

    #[test]
    fn non_quasi_homogeneous_point() {
        let (_, cl) = analyze_clusters(&q("x^5 + y^5 + x^2*y^2*z"), 3).unwrap();
        assert_eq!(cl.len(), 1);
        let f = FieldSpec::rationals();
        let p = |s: &str| crate::algebra::parse_polynomial(s, f).unwrap();
        let g = p("x^5 + y^5 + x^2*y^2");
        let t = Ideal::affine(f, [g.clone(), g.differentiate(Var::X), g.differentiate(Var::Y)]);
        let m = Ideal::affine(f, [g.differentiate(Var::X), g.differentiate(Var::Y)]);
        let tau = oracle_local_colength(&t, 12, 16).unwrap();
        let mu = oracle_local_colength(&m, 12, 16).unwrap();
        assert_eq!((cl[0].tjurina_length, cl[0].milnor_length), (tau, mu));
        assert!(tau < mu);
        assert_eq!(cl[0].quasi_homogeneous, Some(false));
    }
}
