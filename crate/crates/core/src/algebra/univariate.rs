//! Dense univariate arithmetic and factorization of squarefree polynomials:
//! Cantor–Zassenhaus over 𝔽_p, Zassenhaus (Hensel lifting + recombination)
//! over ℚ.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::field::{is_prime, pow_mod, Coeff, FieldSpec};
use super::monomial::Var;
use super::poly::Polynomial;
use crate::error::{Error, Result};

// ---------------------------------------------------------------------------
// 𝔽_p[x], little-endian coefficient vectors with no trailing zeros.

pub type ModPoly = Vec<u64>;

fn trim(mut a: ModPoly) -> ModPoly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn deg(a: &[u64]) -> isize {
    a.len() as isize - 1
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn mp_sub(a: &[u64], b: &[u64], p: u64) -> ModPoly {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| {
                let x = a.get(i).copied().unwrap_or(0);
                let y = b.get(i).copied().unwrap_or(0);
                (x + p - y) % p
            })
            .collect(),
    )
}

fn mp_add(a: &[u64], b: &[u64], p: u64) -> ModPoly {
    let n = a.len().max(b.len());
    trim((0..n).map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % p).collect())
}

fn mp_mul(a: &[u64], b: &[u64], p: u64) -> ModPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(out)
}

fn mp_divrem(a: &[u64], b: &[u64], p: u64) -> (ModPoly, ModPoly) {
    assert!(!b.is_empty(), "division by zero polynomial");
    let mut r = a.to_vec();
    let db = b.len() - 1;
    if r.len() < b.len() {
        return (Vec::new(), trim(r));
    }
    let lc_inv = inv_mod(b[db], p);
    let mut q = vec![0u64; r.len() - db];
    for i in (db..r.len()).rev() {
        let c = r[i] * lc_inv % p;
        if c == 0 {
            continue;
        }
        q[i - db] = c;
        for j in 0..=db {
            r[i - db + j] = (r[i - db + j] + p - c * b[j] % p) % p;
        }
    }
    r.truncate(db);
    (trim(q), trim(r))
}

fn mp_rem(a: &[u64], b: &[u64], p: u64) -> ModPoly {
    mp_divrem(a, b, p).1
}

fn mp_monic(a: &[u64], p: u64) -> ModPoly {
    match a.last() {
        None => Vec::new(),
        Some(&lc) => {
            let inv = inv_mod(lc, p);
            a.iter().map(|&x| x * inv % p).collect()
        }
    }
}

pub fn mp_gcd(a: &[u64], b: &[u64], p: u64) -> ModPoly {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let r = mp_rem(&a, &b, p);
        a = b;
        b = r;
    }
    mp_monic(&a, p)
}

fn mp_derivative(a: &[u64], p: u64) -> ModPoly {
    trim(a.iter().enumerate().skip(1).map(|(i, &c)| c * (i as u64 % p) % p).collect())
}

fn mp_powmod(base: &[u64], exp: &BigUint, modulus: &[u64], p: u64) -> ModPoly {
    let mut acc: ModPoly = vec![1];
    let b = mp_rem(base, modulus, p);
    for i in (0..exp.bits()).rev() {
        acc = mp_rem(&mp_mul(&acc, &acc, p), modulus, p);
        if exp.bit(i) {
            acc = mp_rem(&mp_mul(&acc, &b, p), modulus, p);
        }
    }
    acc
}

pub fn mp_is_squarefree(a: &[u64], p: u64) -> bool {
    let d = mp_derivative(a, p);
    !d.is_empty() && deg(&mp_gcd(a, &d, p)) == 0
}

/// Distinct-degree factorization of a monic squarefree polynomial: pairs
/// `(product of all irreducible factors of degree d, d)`.
pub fn distinct_degree(f: &[u64], p: u64) -> Vec<(ModPoly, usize)> {
    let mut f = mp_monic(f, p);
    let mut out = Vec::new();
    let mut h: ModPoly = vec![0, 1];
    let x: ModPoly = vec![0, 1];
    let pp = BigUint::from(p);
    let mut i = 1;
    while deg(&f) >= 2 * i as isize {
        h = mp_powmod(&h, &pp, &f, p);
        let g = mp_gcd(&mp_sub(&h, &x, p), &f, p);
        if deg(&g) > 0 {
            out.push((g.clone(), i));
            f = mp_divrem(&f, &g, p).0;
            h = mp_rem(&h, &f, p);
        }
        i += 1;
    }
    if deg(&f) > 0 {
        let d = deg(&f) as usize;
        out.push((f, d));
    }
    out
}

fn equal_degree<R: Rng>(g: &[u64], d: usize, p: u64, rng: &mut R) -> Vec<ModPoly> {
    let n = deg(g) as usize;
    if n == d {
        return vec![g.to_vec()];
    }
    let exp = (BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
    loop {
        let a: ModPoly = trim((0..n).map(|_| rng.gen_range(0..p)).collect());
        if deg(&a) < 1 {
            continue;
        }
        let b = mp_sub(&mp_powmod(&a, &exp, g, p), &[1], p);
        let c = mp_gcd(&b, g, p);
        if deg(&c) > 0 && deg(&c) < n as isize {
            let rest = mp_divrem(g, &c, p).0;
            let mut out = equal_degree(&c, d, p, rng);
            out.extend(equal_degree(&mp_monic(&rest, p), d, p, rng));
            return out;
        }
    }
}

/// Monic irreducible factors of a squarefree polynomial over 𝔽_p, p odd.
pub fn factor_mod_p(f: &[u64], p: u64, seed: u64) -> Vec<ModPoly> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for (g, d) in distinct_degree(f, p) {
        out.extend(equal_degree(&g, d, p, &mut rng));
    }
    out.sort();
    out
}

// ---------------------------------------------------------------------------
// ℤ[x]

type IntPoly = Vec<BigInt>;

fn itrim(mut a: IntPoly) -> IntPoly {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

fn ip_mul(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    itrim(out)
}

fn ip_sub(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    let n = a.len().max(b.len());
    itrim(
        (0..n)
            .map(|i| {
                a.get(i).cloned().unwrap_or_default() - b.get(i).cloned().unwrap_or_default()
            })
            .collect(),
    )
}

fn ip_content(a: &[BigInt]) -> BigInt {
    a.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

fn ip_primitive(a: &[BigInt]) -> IntPoly {
    let c = ip_content(a);
    if c.is_zero() {
        return Vec::new();
    }
    let sign = if a.last().is_some_and(|x| x.is_negative()) { -c } else { c };
    a.iter().map(|x| x / &sign).collect()
}

/// Exact division over ℤ; `None` if `b` does not divide `a`.
fn ip_exact_div(a: &[BigInt], b: &[BigInt]) -> Option<IntPoly> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    if r.len() < b.len() {
        return r.iter().all(|c| c.is_zero()).then(Vec::new);
    }
    let lc = &b[db];
    let mut q = vec![BigInt::zero(); r.len() - db];
    for i in (db..r.len()).rev() {
        if r[i].is_zero() {
            continue;
        }
        let (c, rem) = r[i].div_rem(lc);
        if !rem.is_zero() {
            return None;
        }
        for j in 0..=db {
            r[i - db + j] -= &c * &b[j];
        }
        q[i - db] = c;
    }
    r.iter().all(|c| c.is_zero()).then(|| itrim(q))
}

fn symmetric_mod(a: &[BigInt], m: &BigInt) -> IntPoly {
    let half = m / 2;
    itrim(
        a.iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

fn to_mod(a: &[BigInt], p: u64) -> ModPoly {
    let pb = BigInt::from(p);
    trim(a.iter().map(|c| c.mod_floor(&pb).to_u64().expect("fits")).collect())
}

fn from_mod(a: &[u64]) -> IntPoly {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

/// Extended gcd over 𝔽_p: returns `(s, t)` with `s·a + t·b = 1` for coprime `a, b`.
fn mp_bezout(a: &[u64], b: &[u64], p: u64) -> (ModPoly, ModPoly) {
    let (mut r0, mut r1) = (trim(a.to_vec()), trim(b.to_vec()));
    let (mut s0, mut s1): (ModPoly, ModPoly) = (vec![1], vec![]);
    let (mut t0, mut t1): (ModPoly, ModPoly) = (vec![], vec![1]);
    while !r1.is_empty() {
        let (q, r) = mp_divrem(&r0, &r1, p);
        r0 = std::mem::replace(&mut r1, r);
        let s2 = mp_sub(&s0, &mp_mul(&q, &s1, p), p);
        s0 = std::mem::replace(&mut s1, s2);
        let t2 = mp_sub(&t0, &mp_mul(&q, &t1, p), p);
        t0 = std::mem::replace(&mut t1, t2);
    }
    assert_eq!(r0.len(), 1, "not coprime");
    let inv = inv_mod(r0[0], p);
    (
        s0.iter().map(|&x| x * inv % p).collect(),
        t0.iter().map(|&x| x * inv % p).collect(),
    )
}

/// Lifts `f ≡ g·h (mod p)`, `g` monic, to a factorization modulo `p^k`.
fn hensel_pair(f: &[BigInt], g: &[u64], h: &[u64], p: u64, k: u32) -> (IntPoly, IntPoly) {
    let (s, t) = mp_bezout(g, h, p);
    let pb = BigInt::from(p);
    let mut g = from_mod(g);
    let mut h = symmetric_mod(&from_mod(h), &pb);
    let mut pj = pb.clone();
    for _ in 1..k {
        let diff = ip_sub(f, &ip_mul(&g, &h));
        let e: IntPoly = diff.iter().map(|c| c / &pj).collect();
        let e = to_mod(&e, p);
        let (q, r) = mp_divrem(&mp_mul(&t, &e, p), &to_mod(&g, p), p);
        let dh = mp_add(&mp_mul(&s, &e, p), &mp_mul(&q, &to_mod(&h, p), p), p);
        g = itrim(
            (0..g.len().max(r.len()))
                .map(|i| {
                    g.get(i).cloned().unwrap_or_default()
                        + &pj * BigInt::from(r.get(i).copied().unwrap_or(0))
                })
                .collect(),
        );
        h = itrim(
            (0..h.len().max(dh.len()))
                .map(|i| {
                    h.get(i).cloned().unwrap_or_default()
                        + &pj * BigInt::from(dh.get(i).copied().unwrap_or(0))
                })
                .collect(),
        );
        pj *= &pb;
        g = symmetric_mod(&g, &pj);
        h = symmetric_mod(&h, &pj);
    }
    (g, h)
}

/// Lifts all modular factors of `f` to `p^k`.
fn hensel_multi(f: &[BigInt], factors: &[ModPoly], p: u64, k: u32) -> Vec<IntPoly> {
    if factors.len() == 1 {
        let m = BigInt::from(p).pow(k);
        // f ≡ lc·u; the monic lift is f·lc⁻¹ mod p^k.
        let lc = f.last().expect("nonzero").clone();
        let inv = mod_inverse(&lc, &m);
        return vec![symmetric_mod(&f.iter().map(|c| c * &inv).collect::<Vec<_>>(), &m)];
    }
    let lc_mod = to_mod(&[f.last().unwrap().clone()], p)[0];
    let g = factors[0].clone();
    let rest = factors[1..].iter().fold(vec![lc_mod], |acc, u| mp_mul(&acc, u, p));
    let (g_l, h_l) = hensel_pair(f, &g, &rest, p, k);
    let mut out = vec![g_l];
    out.extend(hensel_multi(&h_l, &factors[1..], p, k));
    out
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    assert!(e.gcd.is_one(), "not invertible");
    e.x.mod_floor(m)
}

const SMALL_PRIMES: [u64; 24] =
    [3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97];

/// Irreducible factors over ℤ of a squarefree primitive polynomial with
/// positive leading coefficient.
fn factor_integer(f: &[BigInt]) -> Vec<IntPoly> {
    let n = f.len() as isize - 1;
    if n <= 1 {
        return vec![f.to_vec()];
    }
    let lc = f.last().unwrap().clone();
    // Choose the good prime with the fewest modular factors among the first few.
    let mut best: Option<(u64, Vec<ModPoly>)> = None;
    let mut tried = 0;
    for &p in SMALL_PRIMES.iter().chain([101u64, 103, 107, 109, 113, 127, 131].iter()) {
        if (&lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = to_mod(f, p);
        if deg(&fp) != n || !mp_is_squarefree(&fp, p) {
            continue;
        }
        let facs = factor_mod_p(&mp_monic(&fp, p), p, p);
        tried += 1;
        if best.as_ref().is_none_or(|b| facs.len() < b.1.len()) {
            best = Some((p, facs));
        }
        if tried >= 5 {
            break;
        }
    }
    let (p, modular) = best.expect("a good prime exists among the candidates");
    if modular.len() == 1 {
        return vec![f.to_vec()];
    }
    // Mignotte-style bound on coefficients of lc·g for a factor g of f.
    let maxc = f.iter().map(|c| c.abs()).max().unwrap();
    let bound = BigInt::from(2u32) * lc.abs() * (BigInt::one() << (n as usize)) * maxc * BigInt::from(n + 1);
    let mut k = 1u32;
    let pb = BigInt::from(p);
    while pb.pow(k) <= bound {
        k += 1;
    }
    let m = pb.pow(k);
    let lifted = hensel_multi(f, &modular, p, k);

    let mut remaining: Vec<usize> = (0..lifted.len()).collect();
    let mut f_rem = f.to_vec();
    let mut out = Vec::new();
    let mut s = 1;
    'outer: while 2 * s <= remaining.len() {
        for subset in combinations(&remaining, s) {
            let lc_rem = f_rem.last().unwrap().clone();
            let mut g: IntPoly = vec![lc_rem];
            for &i in &subset {
                g = symmetric_mod(&ip_mul(&g, &lifted[i]), &m);
            }
            let g = ip_primitive(&g);
            if let Some(h) = ip_exact_div(&f_rem, &g) {
                out.push(g);
                f_rem = h;
                remaining.retain(|i| !subset.contains(i));
                continue 'outer;
            }
        }
        s += 1;
    }
    if f_rem.len() > 1 {
        out.push(ip_primitive(&f_rem));
    }
    out
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fn rec(items: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            rec(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(items, k, 0, &mut Vec::new(), &mut out);
    out
}

// ---------------------------------------------------------------------------
// Bridges to `Polynomial`.

pub fn to_mod_poly(coeffs: &[Coeff]) -> ModPoly {
    trim(coeffs.iter().map(|c| c.residue().expect("prime field") as u64).collect())
}

pub fn from_mod_poly(field: FieldSpec, v: Var, a: &[u64]) -> Polynomial {
    let cs: Vec<Coeff> = a.iter().map(|&c| field.from_i64(c as i64)).collect();
    Polynomial::from_univariate(field, v, &cs)
}

/// Irreducible monic factors (sorted by degree, then canonical text) of a
/// squarefree univariate polynomial in `v`.
pub fn factor_squarefree(p: &Polynomial, v: Var, seed: u64) -> Result<Vec<Polynomial>> {
    let field = p.field();
    let coeffs = p
        .univariate_coeffs(v)
        .ok_or_else(|| Error::Internal("factor_squarefree: not univariate".into()))?;
    if p.degree() <= 0 {
        return Ok(Vec::new());
    }
    let mut out = if field.is_rational() {
        let den = coeffs
            .iter()
            .fold(BigInt::one(), |l, c| l.lcm(c.as_rational().unwrap().denom()));
        let ints: IntPoly = coeffs
            .iter()
            .map(|c| {
                let q = c.as_rational().unwrap();
                q.numer() * (&den / q.denom())
            })
            .collect();
        factor_integer(&ip_primitive(&itrim(ints)))
            .into_iter()
            .map(|g| {
                let cs: Vec<Coeff> = g.iter().map(|c| field.from_bigint(c)).collect();
                Polynomial::from_univariate(field, v, &cs).monic(super::monomial::TermOrder::Grevlex)
            })
            .collect::<Vec<_>>()
    } else {
        let pr = field.characteristic() as u64;
        if pr == 2 {
            return Err(Error::FieldTooSmall("univariate factoring needs an odd characteristic".into()));
        }
        let a = to_mod_poly(&coeffs);
        if !mp_is_squarefree(&a, pr) {
            return Err(Error::Internal("factor_squarefree: input not squarefree".into()));
        }
        factor_mod_p(&mp_monic(&a, pr), pr, seed)
            .into_iter()
            .map(|g| from_mod_poly(field, v, &g))
            .collect()
    };
    out.sort_by_key(|g| (g.degree(), g.to_string()));
    Ok(out)
}

/// Deterministic list of primes just above `near`.
pub fn primes_near(near: u32, count: usize) -> Vec<u32> {
    let mut out = Vec::new();
    let mut n = near as u64;
    while out.len() < count {
        if is_prime(n) {
            out.push(n as u32);
        }
        n += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse::parse_polynomial;

    fn q(s: &str) -> Polynomial {
        parse_polynomial(s, FieldSpec::rationals()).unwrap()
    }

    #[test]
    fn factors_over_rationals() {
        let f = q("(x^2 - 2)*(x - 3)*(x^3 + x + 1)*(2*x + 1)");
        let facs = factor_squarefree(&f, Var::X, 0).unwrap();
        let texts: Vec<String> = facs.iter().map(|g| g.to_string()).collect();
        assert_eq!(texts, vec!["x + 1/2", "x - 3", "x^2 - 2", "x^3 + x + 1"]);
    }

    #[test]
    fn irreducible_stays_whole() {
        let f = q("x^4 + 1"); // irreducible over Q, splits mod every prime
        let facs = factor_squarefree(&f, Var::X, 0).unwrap();
        assert_eq!(facs, vec![f]);
    }

    #[test]
    fn swinnerton_dyer_eight() {
        // x^4 - 10x^2 + 1 is irreducible over Q
        let f = q("x^4 - 10*x^2 + 1");
        assert_eq!(factor_squarefree(&f, Var::X, 0).unwrap().len(), 1);
        let g = &f * &q("x^2 - 5*x + 7");
        assert_eq!(factor_squarefree(&g, Var::X, 0).unwrap().len(), 2);
    }

    #[test]
    fn factors_mod_p() {
        let field = FieldSpec::prime(32003).unwrap();
        let f = parse_polynomial("(x^2 + 1)*(x - 5)*(x^3 + 2*x + 7)", field).unwrap();
        let facs = factor_squarefree(&f, Var::X, 3).unwrap();
        let prod = facs.iter().fold(Polynomial::one(field), |a, b| &a * b);
        assert_eq!(prod, f);
        assert!(facs.len() >= 3);
    }

    #[test]
    fn distinct_degree_pattern() {
        let p = 7;
        // (x^2+1) irreducible mod 7 (7 ≡ 3 mod 4), (x-2) linear
        let a = mp_mul(&[1, 0, 1], &[5, 1], p);
        let dd = distinct_degree(&a, p);
        let degs: Vec<usize> = dd.iter().map(|d| d.1).collect();
        assert_eq!(degs, vec![1, 2]);
    }
}
