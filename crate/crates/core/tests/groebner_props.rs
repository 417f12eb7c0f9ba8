use leafbound::algebra::{FieldSpec, Polynomial, TermOrder, VarSet};
use leafbound::groebner::oracle::{oracle_colength, oracle_hilbert};
use leafbound::groebner::{Colength, Ideal};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn fields() -> [FieldSpec; 2] {
    [FieldSpec::rationals(), FieldSpec::prime(32003).unwrap()]
}

fn spoly(f: &Polynomial, g: &Polynomial, order: TermOrder) -> Polynomial {
    let (mf, cf) = f.leading_term(order).unwrap();
    let (mg, cg) = g.leading_term(order).unwrap();
    let l = mf.lcm(&mg);
    let a = f.mul_term(&mf.quotient_of(&l), &cf.inv().unwrap());
    let b = g.mul_term(&mg.quotient_of(&l), &cg.inv().unwrap());
    &a - &b
}

fn random_ideal(field: FieldSpec, seed: u64) -> Ideal {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ideal::random_zero_dimensional(field, 4, &mut rng)
}

fn random_homogeneous(field: FieldSpec, seed: u64, n: usize, deg: u32) -> Ideal {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ideal::homogeneous(
        field,
        (0..n).map(|_| Polynomial::random(field, VarSet::XYZ, deg, true, 3, &mut rng)),
    )
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, .. ProptestConfig::default() })]

    #[test]
    fn buchberger_output_is_a_groebner_basis(seed in 0u64..10_000, fi in 0usize..2, lex in any::<bool>()) {
        let field = fields()[fi];
        let i = random_ideal(field, seed);
        let order = if lex { TermOrder::Lex } else { TermOrder::Grevlex };
        let b = i.groebner_basis(order);
        for g in i.generators() {
            prop_assert!(b.reduces_to_zero(g));
        }
        let ps = b.polys();
        for (k, f) in ps.iter().enumerate() {
            for g in &ps[k + 1..] {
                prop_assert!(b.reduces_to_zero(&spoly(f, g, order)));
            }
        }
    }

    #[test]
    fn colength_does_not_depend_on_the_order(seed in 0u64..10_000, fi in 0usize..2) {
        let field = fields()[fi];
        let i = random_ideal(field, seed);
        let a = i.groebner_basis(TermOrder::Grevlex).colength(VarSet::XY);
        let b = i.groebner_basis(TermOrder::Lex).colength(VarSet::XY);
        prop_assert_eq!(a, b);
        prop_assert!(matches!(a, Colength::Finite(_)));
    }

    #[test]
    fn hilbert_data_does_not_depend_on_the_order(seed in 0u64..10_000) {
        let field = FieldSpec::rationals();
        let i = random_homogeneous(field, seed, 3, 2);
        let a = i.groebner_basis(TermOrder::Grevlex).stable_hilbert(VarSet::XYZ);
        let b = i.groebner_basis(TermOrder::Lex).stable_hilbert(VarSet::XYZ);
        prop_assert_eq!(a, b);
        let h = i.hilbert_function(6);
        for t in 0..=6 {
            prop_assert_eq!(h.values[t as usize], oracle_hilbert(&i, t));
        }
    }

    #[test]
    fn saturation_is_idempotent(seed in 0u64..10_000, fi in 0usize..2) {
        let field = fields()[fi];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let i = random_homogeneous(field, seed, 3, 2)
            .with_generators([Polynomial::random(field, VarSet::XYZ, 3, true, 2, &mut rng)]);
        let i = Ideal::homogeneous(field, i.generators().to_vec());
        let j = Ideal::homogeneous(field, [Polynomial::random(field, VarSet::XYZ, 1, true, 2, &mut rng)]);
        let s = i.saturate(&j).unwrap();
        let ss = s.saturate(&j).unwrap();
        prop_assert!(s.same_as(&ss));
        let m = i.saturate_irrelevant();
        prop_assert!(m.saturate_irrelevant().same_as(&m));
        prop_assert!(m.same_as(&i.saturate(&Ideal::irrelevant(field, VarSet::XYZ)).unwrap()));
    }

    #[test]
    fn quotients_contain_the_ideal(seed in 0u64..10_000, fi in 0usize..2) {
        let field = fields()[fi];
        let i = random_ideal(field, seed);
        let j = random_ideal(field, seed.wrapping_add(7));
        let q = i.quotient(&j);
        prop_assert!(q.contains_ideal(&i));
        let smaller = Ideal::affine(field, i.generators().iter().take(1).cloned());
        prop_assert!(smaller.sum(&i).quotient(&smaller).is_unit());
        let _ = j;
    }
}

#[test]
fn oracle_matches_staircase_on_fifty_random_ideals() {
    for seed in 0..50u64 {
        let field = fields()[(seed % 2) as usize];
        let i = random_ideal(field, seed);
        let staircase = i.colength().finite().unwrap();
        let oracle = oracle_colength(&i, 14).unwrap();
        assert_eq!(staircase, oracle, "seed {seed}: {i}");
    }
}
