//! Exact sparse linear algebra over the rationals.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Sparse matrix with exact rational entries; absent entries are zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), BigRational>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> BigRational {
        self.entries.get(&(r, c)).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigRational) {
        assert!(r < self.rows && c < self.cols);
        if v.is_zero() {
            self.entries.remove(&(r, c));
        } else {
            self.entries.insert((r, c), v);
        }
    }

    pub fn add_at(&mut self, r: usize, c: usize, v: &BigRational) {
        let cur = self.get(r, c);
        self.set(r, c, cur + v);
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    /// Nonzero entries in row-major order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &BigRational)> {
        self.entries.iter().map(|(&(r, c), v)| (r, c, v))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn transpose(&self) -> SparseMatrix {
        SparseMatrix {
            rows: self.cols,
            cols: self.rows,
            entries: self.entries.iter().map(|(&(r, c), v)| ((c, r), v.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols, other.rows);
        let mut by_row: Vec<Vec<(usize, &BigRational)>> = vec![Vec::new(); other.rows];
        for (&(r, c), v) in &other.entries {
            by_row[r].push((c, v));
        }
        let mut out = SparseMatrix::zeros(self.rows, other.cols);
        for (&(r, k), a) in &self.entries {
            for &(c, b) in &by_row[k] {
                out.add_at(r, c, &(a * b));
            }
        }
        out
    }

    pub fn sub(&self, other: &SparseMatrix) -> SparseMatrix {
        self.add_scaled(other, &-BigRational::one())
    }

    pub fn add(&self, other: &SparseMatrix) -> SparseMatrix {
        self.add_scaled(other, &BigRational::one())
    }

    /// `self + k * other`
    pub fn add_scaled(&self, other: &SparseMatrix, k: &BigRational) -> SparseMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (&(r, c), v) in &other.entries {
            out.add_at(r, c, &(v * k));
        }
        out
    }

    pub fn scale(&self, k: &BigRational) -> SparseMatrix {
        let mut out = SparseMatrix::zeros(self.rows, self.cols);
        if !k.is_zero() {
            for (&(r, c), v) in &self.entries {
                out.entries.insert((r, c), v * k);
            }
        }
        out
    }

    /// `[self, other] = self·other - other·self`
    pub fn commutator(&self, other: &SparseMatrix) -> SparseMatrix {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn is_diagonal(&self) -> bool {
        self.entries.keys().all(|&(r, c)| r == c)
    }

    pub fn diagonal(&self) -> Vec<BigRational> {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).collect()
    }

    pub fn trace(&self) -> BigRational {
        self.diagonal().into_iter().sum()
    }

    pub fn to_dense(&self) -> Vec<Vec<BigRational>> {
        let mut d = vec![vec![BigRational::zero(); self.cols]; self.rows];
        for (&(r, c), v) in &self.entries {
            d[r][c] = v.clone();
        }
        d
    }
}

type IntRow = Vec<(usize, BigInt)>;

fn content_normalize(row: &mut IntRow) {
    let g = row.iter().fold(BigInt::zero(), |g, (_, v)| g.gcd(v));
    if g.is_zero() {
        return;
    }
    let flip = row.first().map(|(_, v)| v.is_negative()).unwrap_or(false);
    let g = if flip { -g } else { g };
    if !g.is_one() {
        for (_, v) in row.iter_mut() {
            *v = &*v / &g;
        }
    }
}

// a*r - b*p, sparse merge
fn combine(a: &BigInt, r: &IntRow, b: &BigInt, p: &IntRow) -> IntRow {
    let mut out = Vec::with_capacity(r.len() + p.len());
    let (mut i, mut j) = (0, 0);
    while i < r.len() || j < p.len() {
        let ci = r.get(i).map(|e| e.0).unwrap_or(usize::MAX);
        let cj = p.get(j).map(|e| e.0).unwrap_or(usize::MAX);
        let (c, v) = if ci < cj {
            i += 1;
            (ci, a * &r[i - 1].1)
        } else if cj < ci {
            j += 1;
            (cj, -(b * &p[j - 1].1))
        } else {
            i += 1;
            j += 1;
            (ci, a * &r[i - 1].1 - b * &p[j - 1].1)
        };
        if !v.is_zero() {
            out.push((c, v));
        }
    }
    out
}

/// Incremental fraction-free row echelon form for sparse integer systems.
///
/// Rows are reduced on their leading column against existing pivots and kept
/// primitive (content divided out), so entries stay small.
#[derive(Debug, Clone)]
pub struct SparseEchelon {
    ncols: usize,
    pivots: BTreeMap<usize, IntRow>,
}

impl SparseEchelon {
    pub fn new(ncols: usize) -> Self {
        SparseEchelon {
            ncols,
            pivots: BTreeMap::new(),
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn nullity(&self) -> usize {
        self.ncols - self.rank()
    }

    /// Adds an equation with rational coefficients; returns `true` if it
    /// increased the rank.
    pub fn insert_rational(&mut self, row: &[(usize, BigRational)]) -> bool {
        let den = row
            .iter()
            .fold(BigInt::one(), |l, (_, v)| l.lcm(v.denom()));
        let ints: IntRow = row
            .iter()
            .map(|(c, v)| (*c, (v * BigRational::from_integer(den.clone())).to_integer()))
            .collect();
        self.insert(ints)
    }

    /// Adds an equation given as `(column, coefficient)` pairs; duplicate
    /// columns are summed.
    pub fn insert(&mut self, row: Vec<(usize, BigInt)>) -> bool {
        let mut merged: BTreeMap<usize, BigInt> = BTreeMap::new();
        for (c, v) in row {
            assert!(c < self.ncols, "column {} out of range", c);
            *merged.entry(c).or_default() += v;
        }
        let mut r: IntRow = merged.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        content_normalize(&mut r);
        loop {
            let Some((lead, a)) = r.first().cloned() else {
                return false;
            };
            match self.pivots.get(&lead) {
                Some(p) => {
                    let b = p[0].1.clone();
                    let g = a.gcd(&b);
                    r = combine(&(&b / &g), &r, &(&a / &g), p);
                    content_normalize(&mut r);
                }
                None => {
                    self.pivots.insert(lead, r);
                    return true;
                }
            }
        }
    }

    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ncols).filter(|c| !self.pivots.contains_key(c)).collect()
    }

    /// A basis of the solution space, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<BigRational>> {
        self.free_columns()
            .into_iter()
            .map(|f| {
                let mut x = vec![BigRational::zero(); self.ncols];
                x[f] = BigRational::one();
                for (&c, row) in self.pivots.iter().rev() {
                    let mut s = BigRational::zero();
                    for (j, v) in &row[1..] {
                        if !x[*j].is_zero() {
                            s += &x[*j] * BigRational::from_integer(v.clone());
                        }
                    }
                    x[c] = -s / BigRational::from_integer(row[0].1.clone());
                }
                x
            })
            .collect()
    }
}

/// Scales a rational vector to coprime integers with first nonzero entry
/// positive.
pub fn primitive_integer_vector(v: &[BigRational]) -> Vec<BigInt> {
    let den = v.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let mut ints: Vec<BigInt> = v
        .iter()
        .map(|x| (x * BigRational::from_integer(den.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() {
        return ints;
    }
    let negative = ints.iter().find(|x| !x.is_zero()).map(|x| x.is_negative()).unwrap_or(false);
    let g = if negative { -g } else { g };
    for x in ints.iter_mut() {
        *x = &*x / &g;
    }
    ints
}

/// Rank of an integer matrix by Bareiss fraction-free elimination.
pub fn integer_rank(m: &[Vec<BigInt>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let rows = a.len();
    if rows == 0 {
        return 0;
    }
    let cols = a[0].len();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let v = (&a[rank][col] * &a[r][c] - &a[r][col] * &a[rank][c]) / &prev;
                a[r][c] = v;
            }
            a[r][col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
    }
    rank
}

/// Determinant of a square integer matrix by Bareiss elimination.
pub fn integer_determinant(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut prev = BigInt::one();
    let mut sign = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return BigInt::zero();
        };
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        for r in k + 1..n {
            for c in k + 1..n {
                a[r][c] = (&a[k][k] * &a[r][c] - &a[r][k] * &a[k][c]) / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    if n == 0 {
        return BigInt::one();
    }
    sign * prev
}
