//! Exact linear algebra: rank and right nullspace by fraction-free elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::field::{Coeff, FieldSpec};

/// A homogeneous linear system `M·v = 0` with labelled unknowns.
#[derive(Clone, Debug)]
pub struct LinearSystem {
    field: FieldSpec,
    width: usize,
    rows: Vec<Vec<Coeff>>,
    labels: Vec<String>,
}

impl LinearSystem {
    pub fn new(field: FieldSpec, width: usize) -> Self {
        LinearSystem { field, width, rows: Vec::new(), labels: (0..width).map(|i| format!("u{i}")).collect() }
    }

    pub fn with_labels(field: FieldSpec, labels: Vec<String>) -> Self {
        LinearSystem { field, width: labels.len(), rows: Vec::new(), labels }
    }

    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<Coeff>>) -> Self {
        let width = rows.first().map(|r| r.len()).unwrap_or(0);
        let mut sys = LinearSystem::new(field, width);
        for r in rows {
            sys.push_row(r);
        }
        sys
    }

    pub fn push_row(&mut self, row: Vec<Coeff>) {
        assert_eq!(row.len(), self.width, "row width mismatch");
        if row.iter().any(|c| !c.is_zero()) {
            self.rows.push(row);
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn rows(&self) -> &[Vec<Coeff>] {
        &self.rows
    }

    pub fn rank(&self) -> usize {
        self.eliminate(false).pivots.len()
    }

    /// Reduced echelon basis of the row space, each row scaled to primitive
    /// integers over ℚ.
    pub fn row_basis(&self) -> Vec<Vec<Coeff>> {
        let e = self.eliminate(true);
        e.pivots.iter().map(|&(_, row)| (0..self.width).map(|j| e.entry(row, j)).collect()).collect()
    }

    /// Basis of the right nullspace; empty iff full column rank.
    pub fn nullspace(&self) -> Vec<Vec<Coeff>> {
        let e = self.eliminate(true);
        let pivot_cols: Vec<usize> = e.pivots.iter().map(|p| p.0).collect();
        let mut basis = Vec::new();
        for free in (0..self.width).filter(|c| !pivot_cols.contains(c)) {
            let mut v = vec![self.field.zero(); self.width];
            v[free] = self.field.one();
            for &(col, row) in &e.pivots {
                let a = e.entry(row, free);
                if !a.is_zero() {
                    v[col] = -&(&a / &e.entry(row, col));
                }
            }
            basis.push(v);
        }
        basis
    }

    /// Echelon form; `full` also clears above the pivots.
    fn eliminate(&self, full: bool) -> Reduced {
        if self.field.is_rational() {
            let rows: Vec<Vec<BigInt>> = self.rows.iter().map(|r| integer_row(r)).collect();
            let (rows, pivots) = gauss_jordan(rows, self.width, &IntOps, full);
            Reduced { field: self.field, int_rows: rows, mod_rows: Vec::new(), pivots }
        } else {
            let p = self.field.characteristic() as u64;
            let rows: Vec<Vec<u64>> = self
                .rows
                .iter()
                .map(|r| r.iter().map(|c| c.residue().expect("prime field") as u64).collect())
                .collect();
            let (rows, pivots) = gauss_jordan(rows, self.width, &ModOps(p), full);
            Reduced { field: self.field, int_rows: Vec::new(), mod_rows: rows, pivots }
        }
    }
}

struct Reduced {
    field: FieldSpec,
    int_rows: Vec<Vec<BigInt>>,
    mod_rows: Vec<Vec<u64>>,
    /// (pivot column, row index)
    pivots: Vec<(usize, usize)>,
}

impl Reduced {
    fn entry(&self, row: usize, col: usize) -> Coeff {
        if self.field.is_rational() {
            self.field.from_bigint(&self.int_rows[row][col])
        } else {
            self.field.from_i64(self.mod_rows[row][col] as i64)
        }
    }
}

fn integer_row(row: &[Coeff]) -> Vec<BigInt> {
    let lcm = row
        .iter()
        .filter_map(|c| c.as_rational())
        .fold(BigInt::one(), |l, q| l.lcm(q.denom()));
    row.iter()
        .map(|c| {
            let q: &BigRational = c.as_rational().expect("rational entry");
            q.numer() * (&lcm / q.denom())
        })
        .collect()
}

trait ElimOps<T> {
    fn is_zero(&self, a: &T) -> bool;
    /// `p·a − q·b`
    fn combine(&self, p: &T, a: &T, q: &T, b: &T) -> T;
    fn normalize(&self, row: &mut [T], pivot: usize);
}

struct IntOps;

impl ElimOps<BigInt> for IntOps {
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn combine(&self, p: &BigInt, a: &BigInt, q: &BigInt, b: &BigInt) -> BigInt {
        p * a - q * b
    }
    fn normalize(&self, row: &mut [BigInt], pivot: usize) {
        let g = row.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
        if g.is_zero() {
            return;
        }
        let g = if row[pivot].is_negative() { -g } else { g };
        for x in row.iter_mut() {
            *x = &*x / &g;
        }
    }
}

struct ModOps(u64);

impl ElimOps<u64> for ModOps {
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn combine(&self, p: &u64, a: &u64, q: &u64, b: &u64) -> u64 {
        let m = self.0;
        (p * a % m + m - q * b % m) % m
    }
    fn normalize(&self, row: &mut [u64], pivot: usize) {
        let m = self.0;
        if row[pivot] == 0 {
            return;
        }
        let inv = super::field::pow_mod(row[pivot], m - 2, m);
        for x in row.iter_mut() {
            *x = *x * inv % m;
        }
    }
}

/// Gauss–Jordan without division: `row_i ← p·row_i − a·row_piv`, then rows are
/// normalized (content removal over ℤ, monic pivot over 𝔽_p).
fn gauss_jordan<T: Clone, O: ElimOps<T>>(
    mut rows: Vec<Vec<T>>,
    width: usize,
    ops: &O,
    full: bool,
) -> (Vec<Vec<T>>, Vec<(usize, usize)>) {
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..width {
        let Some(r) = (next..rows.len()).find(|&r| !ops.is_zero(&rows[r][col])) else {
            continue;
        };
        rows.swap(next, r);
        ops.normalize(&mut rows[next], col);
        let piv_row = rows[next].clone();
        let p = piv_row[col].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == next || (!full && i < next) || ops.is_zero(&row[col]) {
                continue;
            }
            let a = row[col].clone();
            // Left of `col` only rows above the pivot are nonzero.
            let start = if full { 0 } else { col };
            for j in start..width {
                row[j] = ops.combine(&p, &row[j], &a, &piv_row[j]);
            }
            ops.normalize(row, col);
        }
        pivots.push((col, next));
        next += 1;
        if next == rows.len() {
            break;
        }
    }
    (rows, pivots)
}
