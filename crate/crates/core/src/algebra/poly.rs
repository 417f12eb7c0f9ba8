//! Sparse multivariate polynomials over a [`FieldSpec`].

use std::collections::BTreeMap;
use std::fmt;

use rand::Rng;

use super::field::{Coeff, FieldSpec};
use super::monomial::{Monomial, TermOrder, Var, VarSet};
use crate::error::{Error, Result};

/// A sparse polynomial. No zero coefficients are ever stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    field: FieldSpec,
    terms: BTreeMap<Monomial, Coeff>,
}

impl Polynomial {
    pub fn zero(field: FieldSpec) -> Self {
        Polynomial { field, terms: BTreeMap::new() }
    }

    pub fn constant(field: FieldSpec, c: Coeff) -> Self {
        Self::term(field, Monomial::ONE, c)
    }

    pub fn one(field: FieldSpec) -> Self {
        Self::constant(field, field.one())
    }

    pub fn from_i64(field: FieldSpec, n: i64) -> Self {
        Self::constant(field, field.from_i64(n))
    }

    pub fn term(field: FieldSpec, m: Monomial, c: Coeff) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { field, terms }
    }

    pub fn var(field: FieldSpec, v: Var) -> Self {
        Self::term(field, Monomial::var(v, 1), field.one())
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Coeff)>>(field: FieldSpec, it: I) -> Self {
        let mut p = Polynomial::zero(field);
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Coeff)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| *m == Monomial::ONE)
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coeff(&Monomial::ONE).is_one()
    }

    pub fn coeff(&self, m: &Monomial) -> Coeff {
        self.terms.get(m).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// Total degree; the zero polynomial has degree −1.
    pub fn degree(&self) -> i64 {
        self.terms.keys().map(|m| m.degree() as i64).max().unwrap_or(-1)
    }

    pub fn degree_in(&self, v: Var) -> i64 {
        self.terms.keys().map(|m| m.exp(v) as i64).max().unwrap_or(-1)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Variables that actually occur.
    pub fn vars(&self) -> VarSet {
        self.terms.keys().fold(VarSet::EMPTY, |s, m| s.union(m.support()))
    }

    pub fn add_term(&mut self, m: Monomial, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(old) => {
                let s = &*old + &c;
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.field);
        }
        Polynomial {
            field: self.field,
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    pub fn mul_term(&self, t: &Monomial, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.field);
        }
        Polynomial {
            field: self.field,
            terms: self.terms.iter().map(|(m, a)| (m.mul(t), a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.field);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn leading_term(&self, order: TermOrder) -> Option<(Monomial, Coeff)> {
        self.terms
            .iter()
            .max_by(|a, b| order.cmp(a.0, b.0))
            .map(|(m, c)| (*m, c.clone()))
    }

    pub fn leading_monomial(&self, order: TermOrder) -> Option<Monomial> {
        self.leading_term(order).map(|t| t.0)
    }

    /// Scales so the leading coefficient (in `order`) is 1. Zero stays zero.
    pub fn monic(&self, order: TermOrder) -> Polynomial {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.inv().expect("nonzero")),
        }
    }

    /// Terms sorted descending in `order`.
    pub fn sorted_terms(&self, order: TermOrder) -> Vec<(Monomial, Coeff)> {
        let mut v: Vec<_> = self.terms.iter().map(|(m, c)| (*m, c.clone())).collect();
        v.sort_by(|a, b| order.cmp(&b.0, &a.0));
        v
    }

    /// Formal partial derivative. In characteristic p the exponent factor is
    /// reduced mod p, so `x^p ↦ 0`.
    pub fn differentiate(&self, v: Var) -> Polynomial {
        let mut out = Polynomial::zero(self.field);
        for (m, c) in &self.terms {
            let e = m.exp(v);
            if e == 0 {
                continue;
            }
            let mut dm = *m;
            dm.0[v.index()] -= 1;
            out.add_term(dm, c * &self.field.from_i64(e as i64));
        }
        out
    }

    /// Differentiates by variable name; rejects names outside `x, y, z` and
    /// variables not in `ring`.
    pub fn differentiate_by_name(&self, name: &str, ring: VarSet) -> Result<Polynomial> {
        let v = name
            .chars()
            .next()
            .filter(|_| name.len() == 1)
            .and_then(Var::from_name)
            .filter(|v| ring.contains(*v))
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        Ok(self.differentiate(v))
    }

    pub fn homogenize(&self, v: Var, degree: u32) -> Result<Polynomial> {
        let d = self.degree();
        if d > degree as i64 {
            return Err(Error::DegreeTooSmall { degree, required: d as u32 });
        }
        let mut out = Polynomial::zero(self.field);
        for (m, c) in &self.terms {
            let mut hm = *m;
            hm.0[v.index()] += (degree - m.degree()) as u16;
            out.add_term(hm, c.clone());
        }
        Ok(out)
    }

    /// Substitutes `v = 1`.
    pub fn dehomogenize(&self, v: Var) -> Polynomial {
        let mut out = Polynomial::zero(self.field);
        for (m, c) in &self.terms {
            let mut dm = *m;
            dm.0[v.index()] = 0;
            out.add_term(dm, c.clone());
        }
        out
    }

    /// Substitutes constant `c` for `v`.
    pub fn evaluate_var(&self, v: Var, c: &Coeff) -> Polynomial {
        let mut out = Polynomial::zero(self.field);
        for (m, a) in &self.terms {
            let mut dm = *m;
            let e = dm.0[v.index()];
            dm.0[v.index()] = 0;
            out.add_term(dm, a * &c.pow(e as u64));
        }
        out
    }

    /// Simultaneous substitution `x ↦ images[0]`, `y ↦ images[1]`, `z ↦ images[2]`.
    pub fn substitute(&self, images: &[Polynomial; 3]) -> Polynomial {
        // Cache powers of each image.
        let mut powers: Vec<Vec<Polynomial>> = images
            .iter()
            .map(|p| vec![Polynomial::one(self.field), p.clone()])
            .collect();
        let mut out = Polynomial::zero(self.field);
        for (m, c) in &self.terms {
            assert_eq!(m.exp(Var::T), 0, "substitute on auxiliary variable");
            let mut acc = Polynomial::constant(self.field, c.clone());
            for (i, v) in Var::XYZ.iter().enumerate() {
                let e = m.exp(*v) as usize;
                while powers[i].len() <= e {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                if e > 0 {
                    acc = &acc * &powers[i][e];
                }
            }
            out = &out + &acc;
        }
        out
    }

    /// Renames variables by an index permutation `perm[old] = new`.
    pub fn permute_vars(&self, perm: [Var; 4]) -> Polynomial {
        let mut out = Polynomial::zero(self.field);
        for (m, c) in &self.terms {
            let mut nm = Monomial::ONE;
            for v in Var::ALL {
                nm.0[perm[v.index()].index()] = m.exp(v);
            }
            out.add_term(nm, c.clone());
        }
        out
    }

    /// Sum of the terms of the given total degree.
    pub fn homogeneous_part(&self, degree: u32) -> Polynomial {
        Polynomial::from_terms(
            self.field,
            self.terms
                .iter()
                .filter(|(m, _)| m.degree() == degree)
                .map(|(m, c)| (*m, c.clone())),
        )
    }

    /// Polynomial in a single variable as a coefficient vector (index = exponent).
    pub fn univariate_coeffs(&self, v: Var) -> Option<Vec<Coeff>> {
        let mut out = vec![self.field.zero(); (self.degree_in(v).max(0) + 1) as usize];
        for (m, c) in &self.terms {
            if m.degree() != m.exp(v) as u32 {
                return None;
            }
            out[m.exp(v) as usize] = c.clone();
        }
        Some(out)
    }

    pub fn from_univariate(field: FieldSpec, v: Var, coeffs: &[Coeff]) -> Polynomial {
        Polynomial::from_terms(
            field,
            coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (Monomial::var(v, i as u16), c.clone())),
        )
    }

    /// Random polynomial with every monomial of degree ≤ `degree` (or exactly
    /// `degree` when `homogeneous`) in `vars`, coefficients in `[-bound, bound]`.
    pub fn random<R: Rng + ?Sized>(
        field: FieldSpec,
        vars: VarSet,
        degree: u32,
        homogeneous: bool,
        bound: i64,
        rng: &mut R,
    ) -> Polynomial {
        let mut p = Polynomial::zero(field);
        for m in monomials_up_to(vars, degree) {
            if homogeneous && m.degree() != degree {
                continue;
            }
            p.add_term(m, field.random_small(rng, bound));
        }
        p
    }

    /// Exact division; `None` when `d` does not divide `self`.
    pub fn exact_div(&self, d: &Polynomial) -> Option<Polynomial> {
        let (q, r) = self.div_rem(d, TermOrder::Grevlex);
        r.is_zero().then_some(q)
    }

    /// Multivariate division by a single polynomial.
    pub fn div_rem(&self, d: &Polynomial, order: TermOrder) -> (Polynomial, Polynomial) {
        let (lm, lc) = d.leading_term(order).expect("division by zero polynomial");
        let lc_inv = lc.inv().expect("nonzero");
        let mut q = Polynomial::zero(self.field);
        let mut r = Polynomial::zero(self.field);
        let mut p = self.clone();
        while let Some((m, c)) = p.leading_term(order) {
            if lm.divides(&m) {
                let t = lm.quotient_of(&m);
                let f = &c * &lc_inv;
                p = &p - &d.mul_term(&t, &f);
                q.add_term(t, f);
            } else {
                p.terms.remove(&m);
                r.add_term(m, c);
            }
        }
        (q, r)
    }
}

/// All monomials in `vars` of total degree ≤ `degree`, ascending in grevlex.
pub fn monomials_up_to(vars: VarSet, degree: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for d in 0..=degree {
        out.extend(monomials_of_degree(vars, d));
    }
    out
}

/// All monomials in `vars` of total degree exactly `degree`, ascending in grevlex.
pub fn monomials_of_degree(vars: VarSet, degree: u32) -> Vec<Monomial> {
    let vs: Vec<Var> = vars.iter().collect();
    let mut out = Vec::new();
    fn rec(vs: &[Var], left: u32, cur: Monomial, out: &mut Vec<Monomial>) {
        match vs.split_first() {
            None => {
                if left == 0 {
                    out.push(cur)
                }
            }
            Some((v, rest)) => {
                for e in 0..=left {
                    let mut m = cur;
                    m.0[v.index()] = e as u16;
                    rec(rest, left - e, m, out);
                }
            }
        }
    }
    rec(&vs, degree, Monomial::ONE, &mut out);
    out.sort_by(|a, b| TermOrder::Grevlex.cmp(a, b));
    out
}

impl<'a> std::ops::Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl<'a> std::ops::Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl<'a> std::ops::Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        let mut out = Polynomial::zero(self.field);
        for (m, a) in &self.terms {
            for (n, b) in &rhs.terms {
                out.add_term(m.mul(n), a * b);
            }
        }
        out
    }
}

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            field: self.field,
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl std::ops::$tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                std::ops::$tr::$m(&self, &rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl serde::Serialize for Polynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl fmt::Display for Polynomial {
    /// Canonical text: grevlex-descending terms, `*` between factors.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.sorted_terms(TermOrder::Grevlex).iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if *m == Monomial::ONE {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse::parse_polynomial;

    fn q(s: &str) -> Polynomial {
        parse_polynomial(s, FieldSpec::rationals()).unwrap()
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(q("x^3").differentiate(Var::X), q("3*x^2"));
        assert!(q("x^3*y - x*y^3").differentiate(Var::Z).is_zero());
        let f3 = FieldSpec::prime(3).unwrap();
        let p = parse_polynomial("x^3", f3).unwrap();
        assert!(p.differentiate(Var::X).is_zero());
    }

    #[test]
    fn unknown_variable_rejected() {
        let p = q("x*y");
        assert!(p.differentiate_by_name("w", VarSet::XYZ).is_err());
        assert!(p.differentiate_by_name("z", VarSet::XY).is_err());
        assert_eq!(p.differentiate_by_name("y", VarSet::XY).unwrap(), q("x"));
    }

    #[test]
    fn homogenize_examples() {
        assert_eq!(q("y^2 - x^3").homogenize(Var::Z, 3).unwrap(), q("y^2*z - x^3"));
        assert_eq!(q("y^2*z - x^3").dehomogenize(Var::Z), q("y^2 - x^3"));
        assert_eq!(q("x").homogenize(Var::Z, 3).unwrap(), q("x*z^2"));
        assert!(q("x^4").homogenize(Var::Z, 3).is_err());
    }

    #[test]
    fn zero_degree_sentinel() {
        assert_eq!(Polynomial::zero(FieldSpec::rationals()).degree(), -1);
        assert_eq!(q("7").degree(), 0);
    }

    #[test]
    fn display_is_canonical() {
        assert_eq!(q("y^2*z - x^3 + 1/2").to_string(), "-x^3 + y^2*z + 1/2");
        assert_eq!(q("-x*y").to_string(), "-x*y");
    }

    #[test]
    fn division_remainder() {
        let (qq, r) = q("x^2*y - y^3 + x^4").div_rem(&q("x^3"), TermOrder::Grevlex);
        assert_eq!(qq, q("x"));
        assert_eq!(r, q("x^2*y - y^3"));
    }
}
