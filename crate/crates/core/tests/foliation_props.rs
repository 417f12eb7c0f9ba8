use leafbound::algebra::{FieldSpec, LinearChange};
use leafbound::foliations::{euler_contraction, random_foliation, tangency_degree_check};
use leafbound::seeded_rng;
use proptest::prelude::*;

fn field(i: usize) -> FieldSpec {
    [FieldSpec::rationals(), FieldSpec::prime(32003).unwrap()][i]
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 16, .. ProptestConfig::default() })]

    #[test]
    fn degree_laws(m in 1u32..=3, seed in 0u64..10_000, fi in 0usize..2) {
        let f = random_foliation(field(fi), m, &mut seeded_rng(seed, 1));
        prop_assert!(euler_contraction(f.form()).is_zero());
        prop_assert_eq!(f.deg_s(), (m * m + m + 1) as u64);
        prop_assert_eq!(f.singular_regularity(), 2 * m);
        prop_assert_eq!(tangency_degree_check(&f, seed).unwrap(), m);
    }

    #[test]
    fn coordinate_changes_preserve_the_foliation_data(m in 1u32..=2, seed in 0u64..10_000, fi in 0usize..2) {
        let fd = field(fi);
        let mut rng = seeded_rng(seed, 2);
        let f = random_foliation(fd, m, &mut rng);
        let change = LinearChange::random(fd, &mut rng, 2);
        let g = f.transformed(&change).unwrap();
        prop_assert_eq!(g.degree(), m);
        prop_assert_eq!(g.deg_s(), f.deg_s());
        prop_assert_eq!(g.singular_regularity(), f.singular_regularity());
        let back = g.transformed(&change.inverse()).unwrap();
        for (a, b) in back.form().iter().zip(f.form()) {
            // Forms agree up to one common scalar; compare a·lc(b) with b·lc(a).
            let la = a.leading_term(leafbound::algebra::TermOrder::Grevlex).map(|t| t.1);
            let lb = b.leading_term(leafbound::algebra::TermOrder::Grevlex).map(|t| t.1);
            match (la, lb) {
                (Some(la), Some(lb)) => prop_assert_eq!(a.scale(&lb), b.scale(&la)),
                (None, None) => {}
                _ => prop_assert!(false, "zero pattern changed"),
            }
        }
    }
}
