//! Exponent vectors and term orders.
//!
//! User-facing polynomials live in `x, y, z`. A fourth slot, `t`, is reserved
//! for auxiliary variables in elimination-based ideal operations and never
//! appears in parsed input.

use std::cmp::Ordering;
use std::fmt;

pub const NVARS: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X = 0,
    Y = 1,
    Z = 2,
    T = 3,
}

impl Var {
    pub const ALL: [Var; NVARS] = [Var::X, Var::Y, Var::Z, Var::T];
    pub const XYZ: [Var; 3] = [Var::X, Var::Y, Var::Z];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Var {
        Var::ALL[i]
    }

    pub fn name(self) -> char {
        ['x', 'y', 'z', 't'][self.index()]
    }

    pub fn from_name(c: char) -> Option<Var> {
        match c {
            'x' => Some(Var::X),
            'y' => Some(Var::Y),
            'z' => Some(Var::Z),
            _ => None,
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// A set of variables, used as the ambient ring of an ideal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VarSet(u8);

impl VarSet {
    pub const EMPTY: VarSet = VarSet(0);
    /// The affine chart ring `k[x, y]`.
    pub const XY: VarSet = VarSet(0b0011);
    /// The homogeneous coordinate ring `k[x, y, z]`.
    pub const XYZ: VarSet = VarSet(0b0111);

    pub fn of(vars: &[Var]) -> VarSet {
        VarSet(vars.iter().fold(0, |m, v| m | (1 << v.index())))
    }

    pub fn contains(self, v: Var) -> bool {
        self.0 & (1 << v.index()) != 0
    }

    pub fn with(self, v: Var) -> VarSet {
        VarSet(self.0 | (1 << v.index()))
    }

    pub fn without(self, v: Var) -> VarSet {
        VarSet(self.0 & !(1 << v.index()))
    }

    pub fn union(self, o: VarSet) -> VarSet {
        VarSet(self.0 | o.0)
    }

    pub fn is_subset(self, o: VarSet) -> bool {
        self.0 & !o.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = Var> {
        Var::ALL.into_iter().filter(move |v| self.contains(*v))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(pub [u16; NVARS]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; NVARS]);

    pub fn var(v: Var, e: u16) -> Monomial {
        let mut m = Monomial::ONE;
        m.0[v.index()] = e;
        m
    }

    pub fn xyz(a: u16, b: u16, c: u16) -> Monomial {
        Monomial([a, b, c, 0])
    }

    pub fn exp(&self, v: Var) -> u16 {
        self.0[v.index()]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn support(&self) -> VarSet {
        VarSet::of(&Var::ALL.into_iter().filter(|v| self.exp(*v) > 0).collect::<Vec<_>>())
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        let mut r = *self;
        for i in 0..NVARS {
            r.0[i] += o.0[i];
        }
        r
    }

    pub fn divides(&self, o: &Monomial) -> bool {
        (0..NVARS).all(|i| self.0[i] <= o.0[i])
    }

    /// `o / self`, assuming `self` divides `o`.
    pub fn quotient_of(&self, o: &Monomial) -> Monomial {
        let mut r = *o;
        for i in 0..NVARS {
            r.0[i] -= self.0[i];
        }
        r
    }

    pub fn lcm(&self, o: &Monomial) -> Monomial {
        let mut r = *self;
        for i in 0..NVARS {
            r.0[i] = r.0[i].max(o.0[i]);
        }
        r
    }

    pub fn is_coprime(&self, o: &Monomial) -> bool {
        (0..NVARS).all(|i| self.0[i] == 0 || o.0[i] == 0)
    }

    /// Is this a pure power `v^e`, `e ≥ 1`?
    pub fn pure_power_of(&self) -> Option<Var> {
        let nz: Vec<_> = (0..NVARS).filter(|&i| self.0[i] > 0).collect();
        (nz.len() == 1).then(|| Var::from_index(nz[0]))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in Var::ALL {
            let e = self.exp(v);
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// Admissible term orders. Variables rank `x > y > z > t` within every order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TermOrder {
    Grevlex,
    Lex,
    /// Block order: the variables in the set are compared first (grevlex on the
    /// block), ties broken by grevlex on the rest. Eliminates the block.
    Elimination(VarSet),
}

impl TermOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            TermOrder::Grevlex => grevlex(a, b, VarSet(0b1111)),
            TermOrder::Lex => a.0.cmp(&b.0),
            TermOrder::Elimination(block) => grevlex(a, b, *block)
                .then_with(|| grevlex(a, b, VarSet(!block.0 & 0b1111))),
        }
    }

    /// Eliminates a single variable.
    pub fn eliminating(v: Var) -> TermOrder {
        TermOrder::Elimination(VarSet::of(&[v]))
    }
}

fn grevlex(a: &Monomial, b: &Monomial, vars: VarSet) -> Ordering {
    let da: u32 = vars.iter().map(|v| a.exp(v) as u32).sum();
    let db: u32 = vars.iter().map(|v| b.exp(v) as u32).sum();
    da.cmp(&db).then_with(|| {
        for v in Var::ALL.into_iter().rev().filter(|v| vars.contains(*v)) {
            match a.exp(v).cmp(&b.exp(v)) {
                Ordering::Equal => continue,
                o => return o.reverse(),
            }
        }
        Ordering::Equal
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grevlex_basics() {
        let o = TermOrder::Grevlex;
        // x^2 > xy > y^2 > xz > yz > z^2
        let seq = [
            Monomial::xyz(2, 0, 0),
            Monomial::xyz(1, 1, 0),
            Monomial::xyz(0, 2, 0),
            Monomial::xyz(1, 0, 1),
            Monomial::xyz(0, 1, 1),
            Monomial::xyz(0, 0, 2),
        ];
        for w in seq.windows(2) {
            assert_eq!(o.cmp(&w[0], &w[1]), Ordering::Greater, "{} vs {}", w[0], w[1]);
        }
    }

    #[test]
    fn elimination_order_ranks_block_first() {
        let o = TermOrder::eliminating(Var::T);
        let t = Monomial::var(Var::T, 1);
        let big = Monomial::xyz(5, 5, 5);
        assert_eq!(o.cmp(&t, &big), Ordering::Greater);
    }
}
