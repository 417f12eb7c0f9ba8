//! Invertible linear changes of the homogeneous coordinates `x, y, z`.

use rand::Rng;

use super::field::{Coeff, FieldSpec};
use super::monomial::Var;
use super::poly::Polynomial;

/// The substitution `x_i ↦ Σ_j m[i][j]·x_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearChange {
    field: FieldSpec,
    m: [[Coeff; 3]; 3],
}

impl LinearChange {
    pub fn identity(field: FieldSpec) -> Self {
        let m = std::array::from_fn(|i| {
            std::array::from_fn(|j| if i == j { field.one() } else { field.zero() })
        });
        LinearChange { field, m }
    }

    pub fn from_matrix(field: FieldSpec, m: [[i64; 3]; 3]) -> Option<Self> {
        let m = m.map(|r| r.map(|x| field.from_i64(x)));
        let c = LinearChange { field, m };
        (!c.determinant().is_zero()).then_some(c)
    }

    /// Random invertible change with integer entries in `[-bound, bound]`.
    pub fn random<R: Rng + ?Sized>(field: FieldSpec, rng: &mut R, bound: i64) -> Self {
        loop {
            let m = std::array::from_fn(|_| std::array::from_fn(|_| field.random_small(rng, bound)));
            let c = LinearChange { field, m };
            if !c.determinant().is_zero() {
                return c;
            }
        }
    }

    pub fn entry(&self, i: usize, j: usize) -> &Coeff {
        &self.m[i][j]
    }

    pub fn determinant(&self) -> Coeff {
        let m = &self.m;
        let t1 = &m[0][0] * &(&(&m[1][1] * &m[2][2]) - &(&m[1][2] * &m[2][1]));
        let t2 = &m[0][1] * &(&(&m[1][0] * &m[2][2]) - &(&m[1][2] * &m[2][0]));
        let t3 = &m[0][2] * &(&(&m[1][0] * &m[2][1]) - &(&m[1][1] * &m[2][0]));
        &(&t1 - &t2) + &t3
    }

    fn images(&self) -> [Polynomial; 3] {
        std::array::from_fn(|i| {
            let mut p = Polynomial::zero(self.field);
            for (j, v) in Var::XYZ.iter().enumerate() {
                p = &p + &Polynomial::var(self.field, *v).scale(&self.m[i][j]);
            }
            p
        })
    }

    /// `F ↦ F(M·x)`.
    pub fn apply(&self, f: &Polynomial) -> Polynomial {
        f.substitute(&self.images())
    }

    /// Pullback of the 1-form `A dx + B dy + C dz` under `x = M·x'`:
    /// `A'_j = Σ_i m[i][j]·A_i(M·x')`.
    pub fn apply_form(&self, form: &[Polynomial; 3]) -> [Polynomial; 3] {
        let images = self.images();
        let moved: Vec<Polynomial> = form.iter().map(|a| a.substitute(&images)).collect();
        std::array::from_fn(|j| {
            let mut acc = Polynomial::zero(self.field);
            for (i, a) in moved.iter().enumerate() {
                acc = &acc + &a.scale(&self.m[i][j]);
            }
            acc
        })
    }

    /// Inverse matrix by the adjugate.
    pub fn inverse(&self) -> LinearChange {
        let det_inv = self.determinant().inv().expect("invertible");
        let m = &self.m;
        let cof = |i: usize, j: usize| {
            let (r0, r1) = ((i + 1) % 3, (i + 2) % 3);
            let (c0, c1) = ((j + 1) % 3, (j + 2) % 3);
            &(&m[r0][c0] * &m[r1][c1]) - &(&m[r0][c1] * &m[r1][c0])
        };
        let m = std::array::from_fn(|i| std::array::from_fn(|j| &cof(j, i) * &det_inv));
        LinearChange { field: self.field, m }
    }

    /// Composition: applying `self.then(o)` to F gives `o.apply(self.apply(F))`.
    pub fn then(&self, o: &LinearChange) -> LinearChange {
        // F(M x) then substitute x ↦ N x gives F(M N x).
        let m = std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                (0..3).fold(self.field.zero(), |acc, k| &acc + &(&self.m[i][k] * &o.m[k][j]))
            })
        });
        LinearChange { field: self.field, m }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse::parse_polynomial;
    use rand::SeedableRng;

    #[test]
    fn composition_matches_sequential_application() {
        let field = FieldSpec::rationals();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let a = LinearChange::random(field, &mut rng, 3);
        let b = LinearChange::random(field, &mut rng, 3);
        let f = parse_polynomial("x^3 - y^2*z + x*y*z", field).unwrap();
        assert_eq!(b.apply(&a.apply(&f)), a.then(&b).apply(&f));
    }

    #[test]
    fn inverse_undoes_the_change() {
        let field = FieldSpec::rationals();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let a = LinearChange::random(field, &mut rng, 3);
        assert_eq!(a.then(&a.inverse()), LinearChange::identity(field));
        let f = parse_polynomial("x^2*y - z^3 + 2*x*y*z", field).unwrap();
        assert_eq!(a.inverse().apply(&a.apply(&f)), f);
    }

    #[test]
    fn pullback_keeps_euler_contraction_zero() {
        let field = FieldSpec::rationals();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        let c = LinearChange::random(field, &mut rng, 2);
        let form = [
            parse_polynomial("y", field).unwrap(),
            parse_polynomial("-x", field).unwrap(),
            Polynomial::zero(field),
        ];
        let moved = c.apply_form(&form);
        let euler = Var::XYZ
            .iter()
            .zip(&moved)
            .fold(Polynomial::zero(field), |acc, (v, a)| &acc + &(&Polynomial::var(field, *v) * a));
        assert!(euler.is_zero());
    }
}
