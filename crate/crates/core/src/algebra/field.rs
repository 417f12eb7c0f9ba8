//! Coefficient fields: the rationals and prime fields with word-sized residues.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Which field a computation lives over. Characteristic 0 means ℚ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldSpec {
    characteristic: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldKind {
    Rationals,
    PrimeField,
}

impl FieldSpec {
    pub const fn rationals() -> Self {
        FieldSpec { characteristic: 0 }
    }

    /// A prime field 𝔽_p. Residues are stored in machine words, so `p < 2^31`.
    pub fn prime(p: u32) -> Result<Self> {
        if p < 2 || p >= (1 << 31) || !is_prime(p as u64) {
            return Err(Error::InvalidField(p as u64));
        }
        Ok(FieldSpec { characteristic: p })
    }

    pub fn kind(&self) -> FieldKind {
        if self.characteristic == 0 {
            FieldKind::Rationals
        } else {
            FieldKind::PrimeField
        }
    }

    pub fn characteristic(&self) -> u32 {
        self.characteristic
    }

    pub fn is_rational(&self) -> bool {
        self.characteristic == 0
    }

    pub fn zero(&self) -> Coeff {
        self.from_i64(0)
    }

    pub fn one(&self) -> Coeff {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Coeff {
        match self.characteristic {
            0 => Coeff::Rat(BigRational::from_integer(BigInt::from(n))),
            p => Coeff::Mod(n.rem_euclid(p as i64) as u32, p),
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> Coeff {
        match self.characteristic {
            0 => Coeff::Rat(BigRational::from_integer(n.clone())),
            p => {
                let r = n.mod_floor(&BigInt::from(p));
                Coeff::Mod(r.to_u32().expect("residue fits"), p)
            }
        }
    }

    /// `num/den` in this field; fails when `den` vanishes in the field.
    pub fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Coeff> {
        if den.is_zero() {
            return Err(Error::Unrepresentable(format!("{num}/{den}")));
        }
        match self.characteristic {
            0 => Ok(Coeff::Rat(BigRational::new(num.clone(), den.clone()))),
            _ => {
                let d = self.from_bigint(den);
                let inv = d
                    .inv()
                    .ok_or_else(|| Error::Unrepresentable(format!("{num}/{den}")))?;
                Ok(&self.from_bigint(num) * &inv)
            }
        }
    }

    /// Embeds an exact rational; `None` when the denominator is divisible by p.
    pub fn from_rational(&self, q: &BigRational) -> Option<Coeff> {
        self.from_ratio(q.numer(), q.denom()).ok()
    }

    /// Uniform element drawn from a window of small integers `[-bound, bound]`.
    pub fn random_small<R: Rng + ?Sized>(&self, rng: &mut R, bound: i64) -> Coeff {
        self.from_i64(rng.gen_range(-bound..=bound))
    }

    pub fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R, bound: i64) -> Coeff {
        loop {
            let c = self.random_small(rng, bound);
            if !c.is_zero() {
                return c;
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.characteristic {
            0 => write!(f, "Q"),
            p => write!(f, "F {p}"),
        }
    }
}

impl Serialize for FieldSpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// A field element. Prime-field residues carry their modulus.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Coeff {
    Rat(BigRational),
    Mod(u32, u32),
}

impl Coeff {
    pub fn field(&self) -> FieldSpec {
        match self {
            Coeff::Rat(_) => FieldSpec::rationals(),
            Coeff::Mod(_, p) => FieldSpec { characteristic: *p },
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Rat(q) => q.is_zero(),
            Coeff::Mod(v, _) => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coeff::Rat(q) => q.is_one(),
            Coeff::Mod(v, _) => *v == 1,
        }
    }

    pub fn inv(&self) -> Option<Coeff> {
        match self {
            Coeff::Rat(q) => (!q.is_zero()).then(|| Coeff::Rat(q.recip())),
            Coeff::Mod(v, p) => {
                if *v == 0 {
                    None
                } else {
                    Some(Coeff::Mod(pow_mod(*v as u64, (*p - 2) as u64, *p as u64) as u32, *p))
                }
            }
        }
    }

    pub fn pow(&self, mut e: u64) -> Coeff {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Coeff::Rat(q) => Some(q),
            Coeff::Mod(..) => None,
        }
    }

    /// Residue of a prime-field element.
    pub fn residue(&self) -> Option<u32> {
        match self {
            Coeff::Mod(v, _) => Some(*v),
            Coeff::Rat(_) => None,
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Coeff::Rat(q) => q.is_negative(),
            Coeff::Mod(..) => false,
        }
    }
}

pub(crate) fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Rat(q) => {
                if q.is_integer() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Coeff::Mod(v, _) => write!(f, "{v}"),
        }
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $rat:expr, $modop:expr) => {
        impl<'a> std::ops::$tr<&'a Coeff> for &'a Coeff {
            type Output = Coeff;
            fn $m(self, rhs: &'a Coeff) -> Coeff {
                match (self, rhs) {
                    (Coeff::Rat(a), Coeff::Rat(b)) => Coeff::Rat($rat(a, b)),
                    (Coeff::Mod(a, p), Coeff::Mod(b, q)) => {
                        assert_eq!(p, q, "mixed prime fields");
                        Coeff::Mod($modop(*a as u64, *b as u64, *p as u64) as u32, *p)
                    }
                    _ => panic!("mixed coefficient fields"),
                }
            }
        }
        impl std::ops::$tr<Coeff> for Coeff {
            type Output = Coeff;
            fn $m(self, rhs: Coeff) -> Coeff {
                std::ops::$tr::$m(&self, &rhs)
            }
        }
    };
}

binop!(Add, add, |a: &BigRational, b: &BigRational| a + b, |a, b, p| (a + b) % p);
binop!(Sub, sub, |a: &BigRational, b: &BigRational| a - b, |a, b, p| (a + p - b) % p);
binop!(Mul, mul, |a: &BigRational, b: &BigRational| a * b, |a, b, p| a * b % p);

impl<'a> std::ops::Div<&'a Coeff> for &'a Coeff {
    type Output = Coeff;
    fn div(self, rhs: &'a Coeff) -> Coeff {
        self * &rhs.inv().expect("division by zero")
    }
}

impl std::ops::Neg for &Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        match self {
            Coeff::Rat(a) => Coeff::Rat(-a),
            Coeff::Mod(a, p) => Coeff::Mod((*p - *a) % *p, *p),
        }
    }
}

impl std::ops::Neg for Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arithmetic() {
        let f = FieldSpec::prime(7).unwrap();
        let a = f.from_i64(3);
        let b = f.from_i64(5);
        assert_eq!(&a + &b, f.from_i64(1));
        assert_eq!(&a - &b, f.from_i64(5));
        assert_eq!(&a * &b, f.from_i64(1));
        assert_eq!(&a * &a.inv().unwrap(), f.one());
        assert_eq!(-&a, f.from_i64(4));
    }

    #[test]
    fn composite_modulus_rejected() {
        assert!(FieldSpec::prime(32001).is_err());
        assert!(FieldSpec::prime(32003).is_ok());
        assert!(FieldSpec::prime(1).is_err());
    }

    #[test]
    fn ratio_not_representable_mod_p() {
        let f = FieldSpec::prime(5).unwrap();
        assert!(f.from_ratio(&BigInt::from(1), &BigInt::from(5)).is_err());
        let half = f.from_ratio(&BigInt::from(1), &BigInt::from(2)).unwrap();
        assert_eq!(&half * &f.from_i64(2), f.one());
    }
}
