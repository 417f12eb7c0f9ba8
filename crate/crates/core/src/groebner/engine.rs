//! Buchberger's algorithm on a packed term representation.
//!
//! Over ℚ all arithmetic happens in ℤ: polynomials are kept primitive and
//! reduction is fraction-free (`p ← a·p − b·m·g`). Over 𝔽_p reducers are monic.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::algebra::field::pow_mod;
use crate::algebra::{Coeff, FieldSpec, Monomial, Polynomial, TermOrder, Var, VarSet};

pub(crate) type Key = [i32; 6];

/// A term order as a weight matrix, so that comparing keys lexicographically
/// is comparing monomials, and keys are additive under multiplication.
#[derive(Clone, Debug)]
pub(crate) struct OrderKey {
    rows: Vec<[i32; 4]>,
}

impl OrderKey {
    pub(crate) fn new(order: TermOrder) -> Self {
        let unit = |v: Var| {
            let mut r = [0; 4];
            r[v.index()] = -1;
            r
        };
        let block_rows = |set: VarSet, rows: &mut Vec<[i32; 4]>| {
            let mut ind = [0; 4];
            for v in set.iter() {
                ind[v.index()] = 1;
            }
            rows.push(ind);
            let vs: Vec<Var> = set.iter().collect();
            for v in vs.into_iter().rev() {
                rows.push(unit(v));
            }
        };
        let mut rows = Vec::new();
        match order {
            TermOrder::Grevlex => block_rows(VarSet::of(&Var::ALL), &mut rows),
            TermOrder::Lex => {
                for v in Var::ALL {
                    let mut r = [0; 4];
                    r[v.index()] = 1;
                    rows.push(r);
                }
            }
            TermOrder::Elimination(block) => {
                let all = VarSet::of(&Var::ALL);
                let rest = all.iter().filter(|v| !block.contains(*v)).collect::<Vec<_>>();
                block_rows(block, &mut rows);
                block_rows(VarSet::of(&rest), &mut rows);
            }
        }
        assert!(rows.len() <= 6);
        OrderKey { rows }
    }

    pub(crate) fn key(&self, m: &Monomial) -> Key {
        let mut k = [0; 6];
        for (i, r) in self.rows.iter().enumerate() {
            k[i] = (0..4).map(|j| r[j] * m.0[j] as i32).sum();
        }
        k
    }
}

fn add_keys(a: &Key, b: &Key) -> Key {
    std::array::from_fn(|i| a[i] + b[i])
}

#[derive(Clone, Debug, PartialEq)]
pub(crate) struct Term<E> {
    pub key: Key,
    pub mono: Monomial,
    pub c: E,
}

/// Terms sorted by descending key.
pub(crate) type Poly<E> = Vec<Term<E>>;

pub(crate) trait Domain {
    type E: Clone + PartialEq + Debug;
    fn is_zero(&self, a: &Self::E) -> bool;
    fn is_one(&self, a: &Self::E) -> bool;
    fn one(&self) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    /// `a·x − b·y`
    fn lin(&self, a: &Self::E, x: &Self::E, b: &Self::E, y: &Self::E) -> Self::E;
    fn neg_mul(&self, b: &Self::E, y: &Self::E) -> Self::E;
    /// `(a, b)` with `a·lp = b·lg`.
    fn cancel(&self, lp: &Self::E, lg: &Self::E) -> (Self::E, Self::E);
    /// Make `p` primitive (ℤ) or monic (𝔽_p); returns the divisor applied.
    fn normalize(&self, p: &mut Poly<Self::E>) -> Self::E;
    /// Divisor that `normalize` would apply, without the 𝔽_p monic step.
    fn content(&self, p: &Poly<Self::E>) -> Option<Self::E>;
    fn divide(&self, p: &mut Poly<Self::E>, g: &Self::E);
    fn import(&self, p: &Polynomial, ok: &OrderKey) -> Poly<Self::E>;
    fn export(&self, field: FieldSpec, p: &Poly<Self::E>) -> Polynomial;
    /// `num / den` as a field element.
    fn ratio(&self, field: FieldSpec, num: &Self::E, den: &Self::E) -> Coeff;
}

pub(crate) struct ZDom;

impl Domain for ZDom {
    type E = BigInt;
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn is_one(&self, a: &BigInt) -> bool {
        a.is_one()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn lin(&self, a: &BigInt, x: &BigInt, b: &BigInt, y: &BigInt) -> BigInt {
        if a.is_one() {
            x - b * y
        } else {
            a * x - b * y
        }
    }
    fn neg_mul(&self, b: &BigInt, y: &BigInt) -> BigInt {
        -(b * y)
    }
    fn cancel(&self, lp: &BigInt, lg: &BigInt) -> (BigInt, BigInt) {
        let g = lp.gcd(lg);
        let (mut a, mut b) = (lg / &g, lp / &g);
        if a.is_negative() {
            a = -a;
            b = -b;
        }
        (a, b)
    }
    fn normalize(&self, p: &mut Poly<BigInt>) -> BigInt {
        if p.is_empty() {
            return BigInt::one();
        }
        let mut g = self.content(p).unwrap_or_else(BigInt::one);
        if p[0].c.is_negative() {
            g = -g;
        }
        self.divide(p, &g);
        g
    }
    fn content(&self, p: &Poly<BigInt>) -> Option<BigInt> {
        let mut g = BigInt::zero();
        for t in p {
            g = g.gcd(&t.c);
            if g.is_one() {
                return None;
            }
        }
        (!g.is_zero()).then_some(g)
    }
    fn divide(&self, p: &mut Poly<BigInt>, g: &BigInt) {
        if g.is_one() {
            return;
        }
        for t in p.iter_mut() {
            t.c = &t.c / g;
        }
    }
    fn import(&self, p: &Polynomial, ok: &OrderKey) -> Poly<BigInt> {
        let den = p
            .terms()
            .fold(BigInt::one(), |l, (_, c)| l.lcm(c.as_rational().expect("rational").denom()));
        let mut out: Poly<BigInt> = p
            .terms()
            .map(|(m, c)| {
                let q = c.as_rational().expect("rational");
                Term { key: ok.key(m), mono: *m, c: q.numer() * (&den / q.denom()) }
            })
            .collect();
        out.sort_by(|a, b| b.key.cmp(&a.key));
        self.normalize(&mut out);
        out
    }
    fn export(&self, field: FieldSpec, p: &Poly<BigInt>) -> Polynomial {
        Polynomial::from_terms(field, p.iter().map(|t| (t.mono, field.from_bigint(&t.c))))
    }
    fn ratio(&self, field: FieldSpec, num: &BigInt, den: &BigInt) -> Coeff {
        field.from_ratio(num, den).expect("nonzero denominator")
    }
}

pub(crate) struct FpDom(pub u64);

impl FpDom {
    fn inv(&self, a: u64) -> u64 {
        pow_mod(a, self.0 - 2, self.0)
    }
}

impl Domain for FpDom {
    type E = u64;
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn is_one(&self, a: &u64) -> bool {
        *a == 1
    }
    fn one(&self) -> u64 {
        1
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.0
    }
    fn lin(&self, a: &u64, x: &u64, b: &u64, y: &u64) -> u64 {
        let m = self.0;
        (a * x % m + m - b * y % m) % m
    }
    fn neg_mul(&self, b: &u64, y: &u64) -> u64 {
        let m = self.0;
        (m - b * y % m) % m
    }
    fn cancel(&self, lp: &u64, lg: &u64) -> (u64, u64) {
        if *lg == 1 {
            (1, *lp)
        } else {
            (1, lp * self.inv(*lg) % self.0)
        }
    }
    fn normalize(&self, p: &mut Poly<u64>) -> u64 {
        let Some(first) = p.first() else { return 1 };
        let lc = first.c;
        if lc != 1 {
            let inv = self.inv(lc);
            for t in p.iter_mut() {
                t.c = t.c * inv % self.0;
            }
        }
        // Scaling by lc⁻¹ is dividing by lc.
        lc
    }
    fn content(&self, _p: &Poly<u64>) -> Option<u64> {
        None
    }
    fn divide(&self, p: &mut Poly<u64>, g: &u64) {
        if *g == 1 {
            return;
        }
        let inv = self.inv(*g);
        for t in p.iter_mut() {
            t.c = t.c * inv % self.0;
        }
    }
    fn import(&self, p: &Polynomial, ok: &OrderKey) -> Poly<u64> {
        let mut out: Poly<u64> = p
            .terms()
            .map(|(m, c)| Term { key: ok.key(m), mono: *m, c: c.residue().expect("prime field") as u64 })
            .collect();
        out.sort_by(|a, b| b.key.cmp(&a.key));
        self.normalize(&mut out);
        out
    }
    fn export(&self, field: FieldSpec, p: &Poly<u64>) -> Polynomial {
        Polynomial::from_terms(field, p.iter().map(|t| (t.mono, field.from_i64(t.c as i64))))
    }
    fn ratio(&self, field: FieldSpec, num: &u64, den: &u64) -> Coeff {
        field.from_i64((num * self.inv(*den) % self.0) as i64)
    }
}

/// `a·p − b·(m·g)`; the leading term of `m·g` is expected to cancel.
fn sub_mul<D: Domain>(dom: &D, p: &[Term<D::E>], a: &D::E, b: &D::E, m: &Monomial, mk: &Key, g: &[Term<D::E>]) -> Poly<D::E> {
    let mut out = Vec::with_capacity(p.len() + g.len());
    let (mut i, mut j) = (0, 0);
    let a_one = dom.is_one(a);
    while i < p.len() || j < g.len() {
        let gk = g.get(j).map(|t| add_keys(&t.key, mk));
        let ord = match (p.get(i), gk) {
            (Some(pt), Some(gk)) => pt.key.cmp(&gk),
            (Some(_), None) => std::cmp::Ordering::Greater,
            (None, _) => std::cmp::Ordering::Less,
        };
        match ord {
            std::cmp::Ordering::Greater => {
                let t = &p[i];
                let c = if a_one { t.c.clone() } else { dom.mul(a, &t.c) };
                out.push(Term { key: t.key, mono: t.mono, c });
                i += 1;
            }
            std::cmp::Ordering::Less => {
                let t = &g[j];
                out.push(Term { key: gk.unwrap(), mono: t.mono.mul(m), c: dom.neg_mul(b, &t.c) });
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let c = dom.lin(a, &p[i].c, b, &g[j].c);
                if !dom.is_zero(&c) {
                    out.push(Term { key: p[i].key, mono: p[i].mono, c });
                }
                i += 1;
                j += 1;
            }
        }
    }
    out
}

fn find_reducer<D: Domain>(basis: &[Poly<D::E>], active: &[usize], m: &Monomial) -> Option<usize> {
    active
        .iter()
        .copied()
        .filter(|&k| basis[k][0].mono.divides(m))
        .min_by_key(|&k| (basis[k].len(), k))
}

/// Reduces only leading terms; result is normalized.
fn top_reduce<D: Domain>(dom: &D, mut p: Poly<D::E>, basis: &[Poly<D::E>], active: &[usize]) -> Poly<D::E> {
    while let Some(lead) = p.first() {
        let Some(k) = find_reducer::<D>(basis, active, &lead.mono) else { break };
        let g = &basis[k];
        let m = g[0].mono.quotient_of(&lead.mono);
        let mk = add_keys(&lead.key, &neg_key(&g[0].key));
        let (a, b) = dom.cancel(&lead.c, &g[0].c);
        p = sub_mul(dom, &p, &a, &b, &m, &mk, g);
        dom.normalize(&mut p);
    }
    p
}

fn neg_key(k: &Key) -> Key {
    k.map(|x| -x)
}

/// Full reduction by `reducers`. Returns `(r, num, den)` with
/// `normal form = r · den / num`.
pub(crate) fn reduce_full<D: Domain>(dom: &D, mut p: Poly<D::E>, reducers: &[&Poly<D::E>]) -> (Poly<D::E>, D::E, D::E) {
    let mut num = dom.one();
    let mut den = dom.one();
    let mut i = 0;
    let mut steps = 0usize;
    while i < p.len() {
        let mono = p[i].mono;
        let found = reducers
            .iter()
            .enumerate()
            .filter(|(_, g)| g[0].mono.divides(&mono))
            .min_by_key(|(k, g)| (g.len(), *k))
            .map(|(_, g)| *g);
        let Some(g) = found else {
            i += 1;
            continue;
        };
        let m = g[0].mono.quotient_of(&mono);
        let mk = add_keys(&p[i].key, &neg_key(&g[0].key));
        let (a, b) = dom.cancel(&p[i].c, &g[0].c);
        p = sub_mul(dom, &p, &a, &b, &m, &mk, g);
        if !dom.is_one(&a) {
            num = dom.mul(&num, &a);
        }
        steps += 1;
        if steps % 8 == 0 {
            if let Some(c) = dom.content(&p) {
                dom.divide(&mut p, &c);
                den = dom.mul(&den, &c);
            }
        }
    }
    if let Some(c) = dom.content(&p) {
        dom.divide(&mut p, &c);
        den = dom.mul(&den, &c);
    }
    (p, num, den)
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

fn pair(basis_lms: &[Monomial], i: usize, j: usize) -> Pair {
    Pair { i, j, lcm: basis_lms[i].lcm(&basis_lms[j]) }
}

/// Gebauer–Möller update after adding basis element `h`.
fn update(lms: &[Monomial], active: &mut Vec<usize>, pairs: &mut Vec<Pair>, h: usize) {
    let lh = lms[h];
    let mut c: Vec<Pair> = active.iter().map(|&g| pair(lms, h, g)).collect();
    let mut d: Vec<Pair> = Vec::new();
    while let Some(p) = (!c.is_empty()).then(|| c.remove(0)) {
        let coprime = lh.is_coprime(&lms[p.j]);
        let dominated = c.iter().chain(d.iter()).any(|q| q.lcm.divides(&p.lcm));
        if coprime || !dominated {
            d.push(p);
        }
    }
    d.retain(|p| !lh.is_coprime(&lms[p.j]));
    pairs.retain(|p| {
        !(lh.divides(&p.lcm) && lms[p.i].lcm(&lh) != p.lcm && lms[p.j].lcm(&lh) != p.lcm)
    });
    pairs.extend(d);
    active.retain(|&g| !lh.divides(&lms[g]));
    active.push(h);
}

fn spoly<D: Domain>(dom: &D, f: &Poly<D::E>, g: &Poly<D::E>, lcm: &Monomial, ok: &OrderKey) -> Poly<D::E> {
    let mf = f[0].mono.quotient_of(lcm);
    let fpart: Poly<D::E> = f
        .iter()
        .map(|t| Term { key: add_keys(&t.key, &ok.key(&mf)), mono: t.mono.mul(&mf), c: t.c.clone() })
        .collect();
    let mg = g[0].mono.quotient_of(lcm);
    let (a, b) = dom.cancel(&f[0].c, &g[0].c);
    sub_mul(dom, &fpart, &a, &b, &mg, &ok.key(&mg), g)
}

/// Reduced Gröbner basis, each element normalized, sorted by ascending leading term.
pub(crate) fn groebner<D: Domain>(dom: &D, ok: &OrderKey, input: Vec<Poly<D::E>>) -> Vec<Poly<D::E>> {
    let mut basis: Vec<Poly<D::E>> = Vec::new();
    let mut lms: Vec<Monomial> = Vec::new();
    let mut active: Vec<usize> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    for mut f in input.into_iter().filter(|f| !f.is_empty()) {
        dom.normalize(&mut f);
        if f[0].mono == Monomial::ONE {
            return vec![vec![Term { key: [0; 6], mono: Monomial::ONE, c: dom.one() }]];
        }
        lms.push(f[0].mono);
        basis.push(f);
        update(&lms, &mut active, &mut pairs, basis.len() - 1);
    }
    while !pairs.is_empty() {
        let best = (0..pairs.len())
            .min_by(|&a, &b| {
                let (pa, pb) = (&pairs[a], &pairs[b]);
                pa.lcm
                    .degree()
                    .cmp(&pb.lcm.degree())
                    .then_with(|| TermOrder::Lex.cmp(&pa.lcm, &pb.lcm))
                    .then_with(|| (pa.i.min(pa.j), pa.i.max(pa.j)).cmp(&(pb.i.min(pb.j), pb.i.max(pb.j))))
            })
            .expect("nonempty");
        let p = pairs.swap_remove(best);
        let s = spoly(dom, &basis[p.i], &basis[p.j], &p.lcm, ok);
        let h = top_reduce(dom, s, &basis, &active);
        if h.is_empty() {
            continue;
        }
        if h[0].mono == Monomial::ONE {
            return vec![vec![Term { key: [0; 6], mono: Monomial::ONE, c: dom.one() }]];
        }
        lms.push(h[0].mono);
        basis.push(h);
        update(&lms, &mut active, &mut pairs, basis.len() - 1);
    }
    // Minimal basis: drop elements whose leading term is a multiple of another's.
    let mut minimal: Vec<usize> = Vec::new();
    for &g in &active {
        let redundant = active.iter().any(|&o| {
            o != g && (lms[o].divides(&lms[g]) && (lms[o] != lms[g] || o < g))
        });
        if !redundant {
            minimal.push(g);
        }
    }
    minimal.sort_by(|&a, &b| basis[a][0].key.cmp(&basis[b][0].key));
    let mut out = Vec::with_capacity(minimal.len());
    for (idx, &g) in minimal.iter().enumerate() {
        let others: Vec<&Poly<D::E>> =
            minimal.iter().enumerate().filter(|(k, _)| *k != idx).map(|(_, &o)| &basis[o]).collect();
        let lead = basis[g][0].clone();
        let tail: Poly<D::E> = basis[g][1..].to_vec();
        let (r, num, den) = reduce_full(dom, tail, &others);
        let mut full = vec![Term { key: lead.key, mono: lead.mono, c: dom.mul(&lead.c, &num) }];
        full.extend(r.into_iter().map(|t| Term { c: dom.mul(&t.c, &den), ..t }));
        dom.normalize(&mut full);
        out.push(full);
    }
    out
}

/// Field-agnostic wrapper holding an imported basis.
#[derive(Clone, Debug)]
pub(crate) enum Engine {
    Z(OrderKey, Vec<Poly<BigInt>>),
    P(OrderKey, u64, Vec<Poly<u64>>),
}

impl Engine {
    pub(crate) fn compute(field: FieldSpec, order: TermOrder, gens: &[Polynomial]) -> Engine {
        let ok = OrderKey::new(order);
        if field.is_rational() {
            let input = gens.iter().map(|g| ZDom.import(g, &ok)).collect();
            let b = groebner(&ZDom, &ok, input);
            Engine::Z(ok, b)
        } else {
            let p = field.characteristic() as u64;
            let dom = FpDom(p);
            let input = gens.iter().map(|g| dom.import(g, &ok)).collect();
            let b = groebner(&dom, &ok, input);
            Engine::P(ok, p, b)
        }
    }

    pub(crate) fn export(&self, field: FieldSpec, order: TermOrder) -> Vec<Polynomial> {
        match self {
            Engine::Z(_, b) => b.iter().map(|p| ZDom.export(field, p).monic(order)).collect(),
            Engine::P(_, p, b) => b.iter().map(|q| FpDom(*p).export(field, q)).collect(),
        }
    }

    pub(crate) fn normal_form(&self, p: &Polynomial) -> Polynomial {
        fn go<D: Domain>(dom: &D, ok: &OrderKey, basis: &[Poly<D::E>], p: &Polynomial) -> Polynomial {
            if p.is_zero() {
                return p.clone();
            }
            let field = p.field();
            // `import` rescales; p = s · q.
            let q = dom.import(p, ok);
            let s = scale_between(p, &dom.export(field, &q));
            let refs: Vec<&Poly<D::E>> = basis.iter().collect();
            let (r, num, den) = reduce_full(dom, q, &refs);
            dom.export(field, &r).scale(&(&dom.ratio(field, &den, &num) * &s))
        }
        match self {
            Engine::Z(ok, b) => go(&ZDom, ok, b, p),
            Engine::P(ok, m, b) => go(&FpDom(*m), ok, b, p),
        }
    }
}

/// `c` with `p = c · q`, both nonzero and proportional.
fn scale_between(p: &Polynomial, q: &Polynomial) -> Coeff {
    let (m, c) = p.terms().next().expect("nonzero");
    c / &q.coeff(m)
}
