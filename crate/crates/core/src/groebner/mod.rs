//! Ideals, reduced Gröbner bases, and what can be read off them: membership,
//! quotients, saturations, colength, Hilbert functions, eliminants.

mod engine;
mod hilbert;
pub mod oracle;

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{Coeff, FieldSpec, LinearSystem, Monomial, Polynomial, TermOrder, Var, VarSet};
use crate::error::{Error, Result};
use engine::Engine;

pub use hilbert::{HilbertTable, StableHilbert};

/// Upper limit on iterated quotients in [`Ideal::saturate`].
pub const SATURATION_CAP: usize = 50;

/// Dimension of a quotient ring, or `Infinite` when the ideal is not zero-dimensional.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Colength {
    Finite(u64),
    Infinite,
}

impl Colength {
    pub fn finite(self) -> Option<u64> {
        match self {
            Colength::Finite(n) => Some(n),
            Colength::Infinite => None,
        }
    }
}

impl fmt::Display for Colength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Colength::Finite(n) => write!(f, "{n}"),
            Colength::Infinite => f.write_str("infinite"),
        }
    }
}

/// A reduced Gröbner basis: monic, sorted by ascending leading monomial.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    field: FieldSpec,
    order: TermOrder,
    polys: Vec<Polynomial>,
    engine: Engine,
}

impl GroebnerBasis {
    fn compute(field: FieldSpec, order: TermOrder, gens: &[Polynomial]) -> Self {
        let engine = Engine::compute(field, order, gens);
        let polys = engine.export(field, order);
        GroebnerBasis { field, order, polys, engine }
    }

    pub fn order(&self) -> TermOrder {
        self.order
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.polys.iter().map(|p| p.leading_monomial(self.order).expect("nonzero")).collect()
    }

    pub fn is_unit(&self) -> bool {
        self.polys.len() == 1 && self.polys[0].is_one()
    }

    /// Remainder of division by the basis; zero iff `p` lies in the ideal.
    pub fn normal_form(&self, p: &Polynomial) -> Polynomial {
        assert_eq!(p.field(), self.field, "field mismatch");
        if self.polys.is_empty() {
            return p.clone();
        }
        self.engine.normal_form(p)
    }

    pub fn reduces_to_zero(&self, p: &Polynomial) -> bool {
        self.normal_form(p).is_zero()
    }

    /// Colength of `k[vars]/I` from this basis's staircase (any order).
    pub fn colength(&self, vars: VarSet) -> Colength {
        match hilbert::standard_monomials(&self.leading_monomials(), vars) {
            Some(s) => Colength::Finite(s.len() as u64),
            None => Colength::Infinite,
        }
    }

    /// Stable Hilbert data from this basis's staircase; the order must make the
    /// leading-term ideal have the same Hilbert function (any order does for
    /// homogeneous ideals).
    pub fn stable_hilbert(&self, vars: VarSet) -> Option<StableHilbert> {
        hilbert::stable(&self.leading_monomials(), vars)
    }

    /// One basis element per line, for golden comparisons.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        for p in &self.polys {
            s.push_str(&p.to_string());
            s.push('\n');
        }
        s
    }
}

/// An ideal of `k[vars]` given by generators, with a per-order basis cache.
///
/// The cache sits behind a `RefCell`: an `Ideal` can be moved between threads
/// but not shared.
#[derive(Clone, Debug)]
pub struct Ideal {
    field: FieldSpec,
    vars: VarSet,
    gens: Vec<Polynomial>,
    saturated: bool,
    cache: RefCell<HashMap<TermOrder, Arc<GroebnerBasis>>>,
}

impl Ideal {
    pub fn new(field: FieldSpec, vars: VarSet, gens: impl IntoIterator<Item = Polynomial>) -> Self {
        let gens: Vec<Polynomial> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        for g in &gens {
            assert_eq!(g.field(), field, "field mismatch");
            assert!(g.vars().is_subset(vars), "generator {g} outside the ring");
        }
        Ideal { field, vars, gens, saturated: false, cache: RefCell::new(HashMap::new()) }
    }

    /// Ideal of `k[x, y]`.
    pub fn affine(field: FieldSpec, gens: impl IntoIterator<Item = Polynomial>) -> Self {
        Ideal::new(field, VarSet::XY, gens)
    }

    /// Ideal of `k[x, y, z]`; generators are expected homogeneous.
    pub fn homogeneous(field: FieldSpec, gens: impl IntoIterator<Item = Polynomial>) -> Self {
        let i = Ideal::new(field, VarSet::XYZ, gens);
        assert!(i.is_homogeneous(), "inhomogeneous generator");
        i
    }

    pub fn unit(field: FieldSpec, vars: VarSet) -> Self {
        Ideal::new(field, vars, [Polynomial::one(field)])
    }

    /// The maximal ideal generated by the ring variables.
    pub fn irrelevant(field: FieldSpec, vars: VarSet) -> Self {
        Ideal::new(field, vars, vars.iter().map(|v| Polynomial::var(field, v)))
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn vars(&self) -> VarSet {
        self.vars
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }

    /// True once the ideal has been saturated by the irrelevant ideal.
    pub fn is_saturated(&self) -> bool {
        self.saturated
    }

    fn with_gens(&self, gens: Vec<Polynomial>) -> Ideal {
        Ideal::new(self.field, self.vars, gens)
    }

    pub fn groebner_basis(&self, order: TermOrder) -> Arc<GroebnerBasis> {
        if let Some(b) = self.cache.borrow().get(&order) {
            return b.clone();
        }
        let b = Arc::new(GroebnerBasis::compute(self.field, order, &self.gens));
        self.cache.borrow_mut().insert(order, b.clone());
        b
    }

    /// The grevlex basis.
    pub fn basis(&self) -> Arc<GroebnerBasis> {
        self.groebner_basis(TermOrder::Grevlex)
    }

    pub fn normal_form(&self, p: &Polynomial) -> Polynomial {
        self.basis().normal_form(p)
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        p.is_zero() || self.basis().reduces_to_zero(p)
    }

    pub fn contains_ideal(&self, j: &Ideal) -> bool {
        let b = self.basis();
        j.gens.iter().all(|g| b.reduces_to_zero(g))
    }

    pub fn same_as(&self, j: &Ideal) -> bool {
        self.contains_ideal(j) && j.contains_ideal(self)
    }

    pub fn is_unit(&self) -> bool {
        self.basis().is_unit()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// `I + J`.
    pub fn sum(&self, j: &Ideal) -> Ideal {
        let mut gens = self.gens.clone();
        gens.extend(j.gens.iter().cloned());
        Ideal::new(self.field, self.vars.union(j.vars), gens)
    }

    pub fn with_generators(&self, extra: impl IntoIterator<Item = Polynomial>) -> Ideal {
        let mut gens = self.gens.clone();
        gens.extend(extra);
        let vars = gens.iter().fold(self.vars, |s, g| s.union(g.vars()));
        Ideal::new(self.field, vars, gens)
    }

    /// Generators of `I ∩ k[vars ∖ block]`.
    pub fn eliminate(&self, block: VarSet) -> Ideal {
        let b = self.groebner_basis(TermOrder::Elimination(block));
        let gens = b
            .polys()
            .iter()
            .filter(|p| block.iter().all(|v| p.degree_in(v) <= 0))
            .cloned()
            .collect::<Vec<_>>();
        Ideal::new(self.field, self.vars.iter().filter(|v| !block.contains(*v)).fold(VarSet::EMPTY, |s, v| s.with(v)), gens)
    }

    /// `I ∩ J` via `t·I + (1 − t)·J ∩ k[vars]`.
    pub fn intersection(&self, j: &Ideal) -> Ideal {
        let vars = self.vars.union(j.vars);
        if self.is_zero() || j.is_zero() {
            return Ideal::new(self.field, vars, []);
        }
        if self.is_unit() {
            return Ideal::new(self.field, vars, j.gens.clone());
        }
        if j.is_unit() {
            return Ideal::new(self.field, vars, self.gens.clone());
        }
        let t = Polynomial::var(self.field, Var::T);
        let one_minus_t = &Polynomial::one(self.field) - &t;
        let mut gens: Vec<Polynomial> = self.gens.iter().map(|g| &t * g).collect();
        gens.extend(j.gens.iter().map(|g| &one_minus_t * g));
        let aux = Ideal::new(self.field, vars.with(Var::T), gens);
        let mut out = aux.eliminate(VarSet::of(&[Var::T]));
        out.vars = vars;
        out
    }

    /// `(I : g)`.
    pub fn quotient_by(&self, g: &Polynomial) -> Ideal {
        if g.is_zero() {
            return Ideal::unit(self.field, self.vars);
        }
        if let Some(a) = self.quotient_ring(g) {
            let kernel = a.kernel(&a.multiplication(g));
            return self.with_generators(kernel).reduced_copy();
        }
        let principal = Ideal::new(self.field, self.vars.union(g.vars()), [g.clone()]);
        let meet = self.intersection(&principal);
        let gens = meet.gens.iter().map(|h| h.exact_div(g).expect("g divides I ∩ (g)")).collect();
        self.with_gens(gens)
    }

    /// `(I : J)` as the intersection of `(I : g)` over the generators of `J`.
    pub fn quotient(&self, j: &Ideal) -> Ideal {
        let mut acc: Option<Ideal> = None;
        for g in &j.gens {
            let q = self.quotient_by(g);
            acc = Some(match acc {
                None => q,
                Some(a) => a.intersection(&q),
            });
        }
        acc.unwrap_or_else(|| Ideal::unit(self.field, self.vars))
    }

    /// `(I : J^∞)` by iterated quotients, stopping once two consecutive
    /// ideals contain each other.
    pub fn saturate(&self, j: &Ideal) -> Result<Ideal> {
        let mut cur = self.clone();
        for _ in 0..SATURATION_CAP {
            let next = cur.quotient(j);
            if cur.contains_ideal(&next) {
                return Ok(cur.reduced_copy());
            }
            cur = next;
        }
        Err(Error::SaturationCap(SATURATION_CAP))
    }

    /// `(I : q^∞) = (I + (1 − t·q)) ∩ k[vars]`; for zero-dimensional `I`
    /// the kernel of a stable power of multiplication by `q` on `k[vars]/I`.
    pub fn saturate_by(&self, q: &Polynomial) -> Ideal {
        if let Some(a) = self.quotient_ring(q) {
            let kernel = a.generalized_kernel(q);
            return self.with_generators(kernel).reduced_copy();
        }
        let t = Polynomial::var(self.field, Var::T);
        let rab = &Polynomial::one(self.field) - &(&t * q);
        let aux = self.with_generators([rab]);
        let mut out = aux.eliminate(VarSet::of(&[Var::T]));
        out.vars = self.vars.union(q.vars());
        out
    }

    /// Saturation of a homogeneous ideal of `k[x, y, z]` by `(x, y, z)`.
    ///
    /// `(I : m^∞)` is the intersection of the three `(I : v^∞)`, and each of
    /// those is read off a grevlex basis with `v` last by dividing out powers
    /// of `v`. When the scheme misses the line `z = 0` the first one suffices.
    pub fn saturate_irrelevant(&self) -> Ideal {
        assert!(self.is_homogeneous() && self.vars.is_subset(VarSet::XYZ));
        if self.saturated {
            return self.clone();
        }
        let sat_z = self.saturate_var(Var::Z);
        let z = Polynomial::var(self.field, Var::Z);
        let mut out = if self.with_generators([z]).is_m_primary() {
            sat_z
        } else {
            let sx = self.saturate_var(Var::X);
            let sy = self.saturate_var(Var::Y);
            sat_z.intersection(&sx).intersection(&sy).reduced_copy()
        };
        out.vars = VarSet::XYZ;
        out.saturated = true;
        out
    }

    /// `(I : v^∞)` for homogeneous `I` via the grevlex basis with `v` last.
    fn saturate_var(&self, v: Var) -> Ideal {
        let mut perm = [Var::X, Var::Y, Var::Z, Var::T];
        perm.swap(v.index(), Var::Z.index());
        let moved = self.with_gens(self.gens.iter().map(|g| g.permute_vars(perm)).collect());
        let b = moved.basis();
        let gens: Vec<Polynomial> = b
            .polys()
            .iter()
            .map(|p| {
                let e = p.terms().map(|(m, _)| m.exp(Var::Z)).min().unwrap_or(0);
                let div = Polynomial::term(self.field, Monomial::var(Var::Z, e), self.field.one());
                p.exact_div(&div).expect("monomial divides").permute_vars(perm)
            })
            .collect();
        self.with_gens(gens)
    }

    /// The same ideal, generated by its reduced grevlex basis.
    pub fn reduced_copy(&self) -> Ideal {
        let b = self.basis();
        let mut out = self.with_gens(b.polys().to_vec());
        out.saturated = self.saturated;
        out.cache.borrow_mut().insert(TermOrder::Grevlex, b);
        out
    }

    /// Zero-dimensional affinely, i.e. finite quotient `k[vars]/I`.
    pub fn is_zero_dimensional(&self) -> bool {
        hilbert::is_artinian(&self.basis().leading_monomials(), self.vars)
    }

    /// Primary to the ideal of all ring variables (finite colength, homogeneous setting).
    pub fn is_m_primary(&self) -> bool {
        self.is_zero_dimensional()
    }

    /// Standard monomials of a zero-dimensional ideal, ascending in grevlex.
    pub fn standard_monomials(&self) -> Option<Vec<Monomial>> {
        let lms = self.basis().leading_monomials();
        hilbert::standard_monomials(&lms, self.vars)
    }

    /// Affine colength, or for a homogeneous ideal of `k[x, y, z]` the degree of
    /// the projective scheme it defines.
    pub fn colength(&self) -> Colength {
        if self.vars == VarSet::XYZ && self.is_homogeneous() {
            return match self.stable_hilbert() {
                Some(s) => Colength::Finite(s.degree),
                None => Colength::Infinite,
            };
        }
        match self.standard_monomials() {
            Some(s) => Colength::Finite(s.len() as u64),
            None => Colength::Infinite,
        }
    }

    /// Affine colength; `Infinite` whenever the quotient is infinite-dimensional.
    pub fn affine_colength(&self) -> Colength {
        match self.standard_monomials() {
            Some(s) => Colength::Finite(s.len() as u64),
            None => Colength::Infinite,
        }
    }

    /// Values of `dim (k[x,y,z]/I)_t` for `t = 0..=up_to`.
    pub fn hilbert_function(&self, up_to: u32) -> HilbertTable {
        assert!(self.is_homogeneous(), "Hilbert function of an inhomogeneous ideal");
        let lms = self.basis().leading_monomials();
        let values = (0..=up_to).map(|t| hilbert::count_standard(&lms, self.vars, t)).collect();
        let stable = hilbert::stable(&lms, self.vars);
        HilbertTable::new(values, stable, self.saturated)
    }

    /// Degree and regularity of the finite scheme defined by a homogeneous ideal,
    /// or `None` when the scheme is not finite.
    pub fn stable_hilbert(&self) -> Option<StableHilbert> {
        assert!(self.is_homogeneous(), "Hilbert function of an inhomogeneous ideal");
        hilbert::stable(&self.basis().leading_monomials(), self.vars)
    }

    /// Monic generator of `I ∩ k[keep]` for zero-dimensional `I`, found as the
    /// minimal polynomial of multiplication by `keep` on the quotient.
    pub fn eliminant(&self, keep: Var) -> Result<Polynomial> {
        let std = self.standard_monomials().ok_or(Error::NotZeroDimensional)?;
        let field = self.field;
        if std.is_empty() {
            return Ok(Polynomial::one(field));
        }
        let index: HashMap<Monomial, usize> = std.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        let b = self.basis();
        let x = Polynomial::var(field, keep);
        let mut cur = b.normal_form(&Polynomial::one(field));
        let mut vecs: Vec<Vec<Coeff>> = Vec::new();
        loop {
            let mut v = vec![field.zero(); std.len()];
            for (m, c) in cur.terms() {
                v[index[m]] = c.clone();
            }
            vecs.push(v);
            let k = vecs.len();
            let mut sys = LinearSystem::new(field, k);
            for row in 0..std.len() {
                sys.push_row(vecs.iter().map(|v| v[row].clone()).collect());
            }
            let ns = sys.nullspace();
            if let Some(c) = ns.first() {
                let p = Polynomial::from_univariate(field, keep, c);
                return Ok(p.monic(TermOrder::Grevlex));
            }
            cur = b.normal_form(&(&cur * &x));
        }
    }
}

/// `k[vars]/I` for zero-dimensional `I`, with the standard monomials as basis.
struct QuotientRing {
    field: FieldSpec,
    basis: Arc<GroebnerBasis>,
    std: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl QuotientRing {
    fn coords(&self, p: &Polynomial) -> Vec<Coeff> {
        let mut v = vec![self.field.zero(); self.std.len()];
        for (m, c) in self.basis.normal_form(p).terms() {
            v[self.index[m]] = c.clone();
        }
        v
    }

    /// Column `j` holds the coordinates of `g · std[j]`.
    fn multiplication(&self, g: &Polynomial) -> Vec<Vec<Coeff>> {
        let cols: Vec<Vec<Coeff>> = self
            .std
            .iter()
            .map(|m| self.coords(&g.mul_term(m, &self.field.one())))
            .collect();
        (0..self.std.len()).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect()
    }

    /// Basis of the stable image `M^k(A)`, k large, of multiplication by g,
    /// or of its transpose. `A` is the direct sum of this and the
    /// generalized kernel; the images are reduced at each step, so entries
    /// stay small where raw powers would blow up over ℚ.
    fn stable_image(&self, g: &Polynomial, transpose: bool) -> Vec<Vec<Coeff>> {
        let m = self.multiplication(g);
        let n = m.len();
        let m: Vec<Vec<Coeff>> =
            if transpose { (0..n).map(|i| (0..n).map(|j| m[j][i].clone()).collect()).collect() } else { m };
        let reduce = |vs: Vec<Vec<Coeff>>| {
            let mut sys = LinearSystem::new(self.field, n);
            for v in vs {
                sys.push_row(v);
            }
            sys.row_basis()
        };
        let columns = (0..n).map(|j| m.iter().map(|row| row[j].clone()).collect()).collect();
        let mut image = reduce(columns);
        while !image.is_empty() {
            let next = reduce(image.iter().map(|v| mat_vec(&m, v)).collect());
            if next.len() == image.len() {
                return next;
            }
            image = next;
        }
        image
    }

    /// Generalized kernel of multiplication by g: the orthogonal complement
    /// of the stable image of the transpose.
    fn generalized_kernel(&self, g: &Polynomial) -> Vec<Polynomial> {
        let rows = self.stable_image(g, true);
        if rows.is_empty() {
            return self.std.iter().map(|m| Polynomial::term(self.field, *m, self.field.one())).collect();
        }
        self.kernel(&rows)
    }

    fn kernel(&self, m: &[Vec<Coeff>]) -> Vec<Polynomial> {
        let sys = LinearSystem::from_rows(self.field, m.to_vec());
        let sys = if sys.width() == 0 { LinearSystem::new(self.field, self.std.len()) } else { sys };
        sys.nullspace()
            .into_iter()
            .map(|v| {
                Polynomial::from_terms(self.field, self.std.iter().zip(v).map(|(m, c)| (*m, c)))
            })
            .collect()
    }
}

fn mat_vec(a: &[Vec<Coeff>], v: &[Coeff]) -> Vec<Coeff> {
    let field = v[0].field();
    a.iter()
        .map(|row| {
            let mut acc = field.zero();
            for (x, y) in row.iter().zip(v) {
                if !x.is_zero() && !y.is_zero() {
                    acc = &acc + &(x * y);
                }
            }
            acc
        })
        .collect()
}

impl Ideal {
    fn quotient_ring(&self, g: &Polynomial) -> Option<QuotientRing> {
        if !g.vars().is_subset(self.vars) || self.is_homogeneous() && self.vars == VarSet::XYZ {
            return None;
        }
        let std = self.standard_monomials()?;
        if std.is_empty() {
            return None;
        }
        let index = std.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        Some(QuotientRing { field: self.field, basis: self.basis(), std, index })
    }

    /// Colength of the part of a zero-dimensional `I` supported on `V(support)`.
    ///
    /// On `A = k[vars]/I = ⊕_P A_P` multiplication by g is nilpotent on the
    /// `A_P` with `g(P) = 0` and invertible on the rest, so its stable image
    /// is the sum of the `A_P` with `g(P) ≠ 0`. The components on
    /// `V(support)` are those outside every such image.
    pub fn local_colength(&self, support: &Ideal) -> Result<u64> {
        let std = self.standard_monomials().ok_or(Error::NotZeroDimensional)?;
        if std.is_empty() {
            return Ok(0);
        }
        let n = std.len();
        let index = std.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        let a = QuotientRing { field: self.field, basis: self.basis(), std, index };
        let mut stacked = LinearSystem::new(self.field, n);
        for g in &support.gens {
            for v in a.stable_image(g, false) {
                stacked.push_row(v);
            }
        }
        Ok((n - stacked.rank()) as u64)
    }

    /// A seeded random zero-dimensional ideal of `k[x, y]` with two or three
    /// sparse generators of degree at most `max_degree`.
    pub fn random_zero_dimensional<R: rand::Rng + ?Sized>(field: FieldSpec, max_degree: u32, rng: &mut R) -> Ideal {
        loop {
            let n = rng.gen_range(2..=3);
            let gens: Vec<Polynomial> = (0..n)
                .map(|_| {
                    let d = rng.gen_range(1..=max_degree);
                    let mut p = Polynomial::zero(field);
                    for m in crate::algebra::poly::monomials_up_to(VarSet::XY, d) {
                        if m.degree() == d || rng.gen_bool(0.4) {
                            p.add_term(m, field.random_small(rng, 3));
                        }
                    }
                    p
                })
                .collect();
            let i = Ideal::affine(field, gens);
            if !i.is_unit() && i.is_zero_dimensional() {
                return i;
            }
        }
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_polynomial;

    fn q(s: &str) -> Polynomial {
        parse_polynomial(s, FieldSpec::rationals()).unwrap()
    }

    fn affine(gens: &[&str]) -> Ideal {
        Ideal::affine(FieldSpec::rationals(), gens.iter().map(|g| q(g)))
    }

    fn proj(gens: &[&str]) -> Ideal {
        Ideal::homogeneous(FieldSpec::rationals(), gens.iter().map(|g| q(g)))
    }

    fn jacobian(f: &Polynomial) -> Ideal {
        Ideal::homogeneous(f.field(), Var::XYZ.iter().map(|v| f.differentiate(*v)))
    }

    #[test]
    fn already_reduced() {
        let b = affine(&["y", "x"]).basis();
        assert_eq!(b.dump(), "y\nx\n");
    }

    #[test]
    fn lex_basis_eliminates() {
        let i = affine(&["x^2 - y", "x*y - 1"]);
        let b = i.groebner_basis(TermOrder::Lex);
        assert!(b.polys().contains(&q("y^3 - 1")), "{}", b.dump());
    }

    #[test]
    fn principal_basis_is_monic_generator() {
        let b = proj(&["2*x^3 - y^2*z"]).basis();
        assert_eq!(b.polys(), &[q("x^3 - 1/2*y^2*z")]);
    }

    #[test]
    fn normal_forms() {
        let f = q("x^3*y - x*y^3");
        assert!(jacobian(&f).normal_form(&f).is_zero());
        assert_eq!(affine(&["y"]).normal_form(&q("x")), q("x"));
        let i = affine(&["x^3"]);
        assert_eq!(i.normal_form(&q("x^2*y - y^3 + x^3*x")), q("x^2*y - y^3"));
        // The remainder is the genuine field remainder, not a scaled copy.
        assert_eq!(affine(&["2*x - 1"]).normal_form(&q("3*x^2")), q("3/4"));
    }

    #[test]
    fn quotients_and_saturations() {
        let i = proj(&["x^2", "x*y"]);
        let x = proj(&["x"]);
        let y = proj(&["y"]);
        assert!(i.quotient(&x).same_as(&proj(&["x", "y"])));
        // x lies in (x, y), so the second quotient is already the unit ideal.
        assert!(i.saturate(&x).unwrap().is_unit());
        assert!(i.saturate(&y).unwrap().same_as(&proj(&["x"])));
    }

    #[test]
    fn cone_jacobian_saturation() {
        let j = jacobian(&q("x^3*y - x*y^3"));
        let s = j.saturate_irrelevant();
        assert!(s.same_as(&j));
        assert_eq!(s.colength(), Colength::Finite(9));
        assert_eq!(s.stable_hilbert().unwrap().regularity, 5);
    }

    #[test]
    fn irrelevant_component_is_removed() {
        // Double points at (0:0:1) and (0:1:0), plus an embedded component.
        let i = proj(&["x^2", "x*y", "x*z^3", "y^2*z^2"]);
        let s = i.saturate_irrelevant();
        assert!(s.same_as(&i.saturate(&Ideal::irrelevant(i.field(), VarSet::XYZ)).unwrap()));
        assert!(s.same_as(&proj(&["x", "y^2*z^2"])));
    }

    #[test]
    fn points_on_every_coordinate_line() {
        // The three coordinate points; no single variable misses them all.
        let i = proj(&["x^2*y", "x*y^2", "x*y*z", "x^2*z", "x*z^2", "y^2*z", "y*z^2"]);
        let s = i.saturate_irrelevant();
        assert_eq!(s.colength(), Colength::Finite(3));
        assert!(s.same_as(&proj(&["x*y", "x*z", "y*z"])));
    }

    #[test]
    fn colengths() {
        assert_eq!(affine(&["x", "y"]).colength(), Colength::Finite(1));
        assert_eq!(affine(&["x^2", "y"]).colength(), Colength::Finite(2));
        assert_eq!(affine(&["x*y", "y", "x"]).colength(), Colength::Finite(1));
        assert_eq!(affine(&["x*y"]).colength(), Colength::Infinite);
        assert_eq!(affine(&["1"]).colength(), Colength::Finite(0));
    }

    #[test]
    fn hilbert_tables() {
        let h = proj(&["x", "y"]).hilbert_function(4);
        assert_eq!(h.values, vec![1, 1, 1, 1, 1]);
        let h = proj(&["x^2", "x*y", "y^2"]).hilbert_function(4);
        assert_eq!(h.values, vec![1, 3, 3, 3, 3]);
        let ci = proj(&["x", "y^3"]);
        let h = ci.hilbert_function(5);
        assert_eq!(h.values, vec![1, 2, 3, 3, 3, 3]);
        assert_eq!(h.stabilizes_from, Some(2));
        assert_eq!(ci.stable_hilbert().unwrap().regularity, 3);
    }

    #[test]
    fn eliminants() {
        assert_eq!(affine(&["x - 1", "y - 2"]).eliminant(Var::X).unwrap(), q("x - 1"));
        assert_eq!(affine(&["x^2 - 1", "y - x"]).eliminant(Var::X).unwrap(), q("x^2 - 1"));
        let f = q("y^2 - (x^2 - 1)^2");
        let t = affine(&[]).with_generators([f.clone(), f.differentiate(Var::X), f.differentiate(Var::Y)]);
        assert_eq!(t.eliminant(Var::X).unwrap(), q("x^2 - 1"));
        assert_eq!(affine(&["x*y"]).eliminant(Var::X), Err(Error::NotZeroDimensional));
    }

    #[test]
    fn prime_field_basis() {
        let f = FieldSpec::prime(7).unwrap();
        let i = Ideal::affine(f, ["x^2 - y", "x*y - 1"].iter().map(|g| parse_polynomial(g, f).unwrap()));
        assert_eq!(i.colength(), Colength::Finite(3));
        assert_eq!(i.eliminant(Var::Y).unwrap(), parse_polynomial("y^3 - 1", f).unwrap());
    }
}
