use leafbound::algebra::poly::monomials_of_degree;
use leafbound::algebra::{FieldSpec, LinearChange, Polynomial, VarSet};
use leafbound::curves::{analyze_curve, is_reduced, singular_scheme, PlaneCurve};
use leafbound::foliations::{hamilton_foliation, is_leaf};
use leafbound::seeded_rng;
use proptest::prelude::*;

/// Degree-d curve singular at (0 : 0 : 1): terms of x,y-degree below 2 dropped.
fn singular_curve(d: u32, coeffs: &[i64]) -> Option<PlaneCurve> {
    let field = FieldSpec::rationals();
    let mut f = Polynomial::zero(field);
    for (m, &c) in monomials_of_degree(VarSet::XYZ, d).iter().zip(coeffs) {
        if m.0[0] + m.0[1] >= 2 {
            f.add_term(*m, field.from_i64(c));
        }
    }
    let c = PlaneCurve::new(f).ok()?;
    is_reduced(&c).then_some(c)
}

fn curve_strategy() -> impl Strategy<Value = PlaneCurve> {
    (3u32..=4, prop::collection::vec(-3i64..=3, 15)).prop_filter_map("reduced", |(d, cs)| singular_curve(d, &cs))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 12, .. ProptestConfig::default() })]

    #[test]
    fn cluster_lengths_are_ordered_and_add_up(c in curve_strategy()) {
        let inv = analyze_curve(&c, 0).unwrap();
        prop_assert!(inv.tau >= 1);
        let mut total = 0;
        for k in &inv.clusters {
            prop_assert!(k.tjurina_length <= k.polar_length, "{c}: {k:?}");
            prop_assert!(k.polar_length <= k.milnor_length, "{c}: {k:?}");
            total += k.tjurina_length;
        }
        prop_assert_eq!(total, singular_scheme(&c).unwrap().tau);
    }

    #[test]
    fn invariants_do_not_depend_on_coordinates(c in curve_strategy(), seed in 0u64..1000) {
        let inv = analyze_curve(&c, 0).unwrap();
        let change = LinearChange::random(c.field(), &mut seeded_rng(seed, 0), 2);
        let moved = analyze_curve(&c.transformed(&change), seed).unwrap();
        prop_assert_eq!((inv.tau, inv.u, inv.sigma), (moved.tau, moved.u, moved.sigma));
        let mut a: Vec<_> = inv.clusters.iter().map(|k| (k.point_count, k.tjurina_length, k.milnor_length)).collect();
        let mut b: Vec<_> = moved.clusters.iter().map(|k| (k.point_count, k.tjurina_length, k.milnor_length)).collect();
        a.sort();
        b.sort();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn hamilton_foliation_has_the_curve_as_leaf(c in curve_strategy()) {
        let h = hamilton_foliation(&c, 0).unwrap();
        prop_assert!(is_leaf(&c, h.foliation.form()).unwrap().is_leaf);
        if !h.degree_dropped {
            prop_assert_eq!(h.foliation.degree(), c.degree() - 1);
        }
    }

    #[test]
    fn generic_curves_over_a_prime_field_are_smooth(d in 2u32..=5, seed in 0u64..1000) {
        let field = FieldSpec::prime(32003).unwrap();
        let f = Polynomial::random(field, VarSet::XYZ, d, true, 1000, &mut seeded_rng(seed, 5));
        let c = PlaneCurve::new(f).unwrap();
        let inv = analyze_curve(&c, seed).unwrap();
        prop_assert_eq!((inv.tau, inv.sigma), (0, 0));
        prop_assert!(inv.clusters.is_empty());
        prop_assert_eq!(inv.u, None);
    }
}
