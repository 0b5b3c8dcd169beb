//! Explicit matrices for a highest-weight module given by canonical
//! generators, and the invariant antisymmetric form on it.
//!
//! The module is grown weight space by weight space from a highest-weight
//! vector `v`. Candidates at weight `μ` are the vectors `y_i b` with `b` a
//! basis vector at `μ + α_i`, taken in generator order. Their contravariant
//! form `<y_i b, c> = <b, x_i c>` is computed from the already known action
//! of the raising operators, and the irreducible quotient is read off as the
//! span modulo the radical of that form.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::linalg::{integer_rank, primitive_integer_vector, SparseEchelon, SparseMatrix};
use crate::repcore::weyl_dimension;
use crate::rootkit::{AlgebraType, RootSystem};
use crate::{Error, Result, Weight};

type Coords = Vec<(usize, BigRational)>;

/// Matrices of the canonical generators `x_i, y_i, h_i` on a module, in a
/// basis of weight vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepMatrices {
    ty: AlgebraType,
    highest_weight: Weight,
    weights: Vec<Weight>,
    x: Vec<SparseMatrix>,
    y: Vec<SparseMatrix>,
    h: Vec<SparseMatrix>,
}

impl RepMatrices {
    pub fn algebra_type(&self) -> AlgebraType {
        self.ty
    }

    pub fn highest_weight(&self) -> &Weight {
        &self.highest_weight
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn rank(&self) -> usize {
        self.x.len()
    }

    /// Weight of each basis vector.
    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    /// `ρ(x_i)`, 1-based.
    pub fn x(&self, i: usize) -> &SparseMatrix {
        &self.x[i - 1]
    }

    pub fn y(&self, i: usize) -> &SparseMatrix {
        &self.y[i - 1]
    }

    pub fn h(&self, i: usize) -> &SparseMatrix {
        &self.h[i - 1]
    }

    pub fn x_mut(&mut self, i: usize) -> &mut SparseMatrix {
        &mut self.x[i - 1]
    }

    pub fn y_mut(&mut self, i: usize) -> &mut SparseMatrix {
        &mut self.y[i - 1]
    }

    /// The raising and lowering generators `x_1..x_n, y_1..y_n`.
    pub fn generators(&self) -> impl Iterator<Item = &SparseMatrix> {
        self.x.iter().chain(self.y.iter())
    }
}

struct Space {
    weight: Weight,
    first: usize,
    gram: Vec<Vec<BigRational>>,
}

fn add_into(acc: &mut BTreeMap<usize, BigRational>, coords: &Coords, k: &BigRational) {
    for (u, c) in coords {
        let e = acc.entry(*u).or_insert_with(BigRational::zero);
        *e += c * k;
    }
}

fn to_coords(acc: BTreeMap<usize, BigRational>) -> Coords {
    acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

/// Pivot columns of a dense rational matrix.
fn pivot_columns(m: &[Vec<BigRational>]) -> Vec<usize> {
    let mut a = m.to_vec();
    let rows = a.len();
    let cols = a.first().map(|r| r.len()).unwrap_or(0);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let pv = a[r][c].clone();
        for i in r + 1..rows {
            if !a[i][c].is_zero() {
                let f = &a[i][c] / &pv;
                for k in c..cols {
                    let t = &a[r][k] * &f;
                    a[i][k] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Solves `a · X = b` for square nonsingular `a`; `b` is given column-wise.
fn solve_columns(a: &[Vec<BigRational>], b: &[Vec<BigRational>]) -> Option<Vec<Vec<BigRational>>> {
    let n = a.len();
    let m = b.len();
    let mut aug: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            let mut row = a[i].clone();
            row.extend(b.iter().map(|col| col[i].clone()));
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !aug[i][c].is_zero())?;
        aug.swap(c, p);
        let pv = aug[c][c].clone();
        for v in aug[c].iter_mut() {
            *v /= &pv;
        }
        for i in 0..n {
            if i != c && !aug[i][c].is_zero() {
                let f = aug[i][c].clone();
                for k in 0..n + m {
                    let t = &aug[c][k] * &f;
                    aug[i][k] -= t;
                }
            }
        }
    }
    Some((0..m).map(|j| (0..n).map(|i| aug[i][n + j].clone()).collect()).collect())
}

/// Builds the irreducible module with highest weight `hw`. Fails if its
/// dimension would exceed `max_dim`.
pub fn construct_highest_weight_module(
    rs: &RootSystem,
    hw: &Weight,
    max_dim: usize,
) -> Result<RepMatrices> {
    rs.check_dominant(hw)?;
    let expected = weyl_dimension(rs, hw)?;
    if expected.to_usize().is_none_or(|d| d > max_dim) {
        return Err(Error::Construction(format!(
            "module {} has dimension {} > {}",
            hw, expected, max_dim
        )));
    }
    let n = rs.rank();
    let simple: Vec<Weight> = (1..=n).map(|i| rs.simple_root(i).labels().clone()).collect();

    let mut spaces: Vec<Space> = vec![Space {
        weight: hw.clone(),
        first: 0,
        gram: vec![vec![BigRational::one()]],
    }];
    let mut space_of_vec: Vec<usize> = vec![0];
    let mut x_img: Vec<Vec<Coords>> = vec![vec![Vec::new(); n]];
    let mut y_img: Vec<Vec<Coords>> = vec![vec![Vec::new(); n]];
    let mut level: Vec<usize> = vec![0];

    while !level.is_empty() {
        // candidates y_i b grouped by target weight
        let mut cands: BTreeMap<Weight, Vec<(usize, usize)>> = BTreeMap::new();
        for &s in &level {
            let sp = &spaces[s];
            for b in sp.first..sp.first + sp.gram.len() {
                for i in 0..n {
                    let target = &sp.weight - &simple[i];
                    cands.entry(target).or_default().push((i, b));
                }
            }
        }
        let mut next_level = Vec::new();
        for (mu, mut list) in cands {
            list.sort();
            // x_j (y_i b) = y_i (x_j b) + δ_ij <wt(b), α_i^∨> b
            let cand_x: Vec<Vec<Coords>> = list
                .iter()
                .map(|&(i, b)| {
                    (0..n)
                        .map(|j| {
                            let mut acc = BTreeMap::new();
                            for (u, c) in &x_img[b][j] {
                                add_into(&mut acc, &y_img[*u][i], c);
                            }
                            if i == j {
                                let lab = spaces[space_of_vec[b]].weight[i];
                                if lab != 0 {
                                    let e = acc.entry(b).or_insert_with(BigRational::zero);
                                    *e += BigRational::from_integer(BigInt::from(lab));
                                }
                            }
                            to_coords(acc)
                        })
                        .collect()
                })
                .collect();
            let m = list.len();
            let mut gram = vec![vec![BigRational::zero(); m]; m];
            for (a, &(ia, ba)) in list.iter().enumerate() {
                let sp = &spaces[space_of_vec[ba]];
                let la = ba - sp.first;
                for (c, row) in cand_x.iter().enumerate() {
                    let mut s = BigRational::zero();
                    for (u, coef) in &row[ia] {
                        s += coef * &sp.gram[la][*u - sp.first];
                    }
                    gram[a][c] = s;
                }
            }
            let piv = pivot_columns(&gram);
            if piv.is_empty() {
                continue;
            }
            let g_pp: Vec<Vec<BigRational>> = piv
                .iter()
                .map(|&p| piv.iter().map(|&q| gram[p][q].clone()).collect())
                .collect();
            let rhs: Vec<Vec<BigRational>> = (0..m)
                .map(|c| piv.iter().map(|&p| gram[p][c].clone()).collect())
                .collect();
            let coords = solve_columns(&g_pp, &rhs).ok_or_else(|| {
                Error::Construction(format!("contravariant form singular on chosen basis at {}", mu))
            })?;
            let first = x_img.len();
            let sidx = spaces.len();
            for &p in &piv {
                x_img.push(cand_x[p].clone());
                y_img.push(vec![Vec::new(); n]);
                space_of_vec.push(sidx);
            }
            for (c, &(i, b)) in list.iter().enumerate() {
                y_img[b][i] = coords[c]
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(k, v)| (first + k, v.clone()))
                    .collect();
            }
            spaces.push(Space {
                weight: mu,
                first,
                gram: g_pp,
            });
            next_level.push(sidx);
            if x_img.len() > max_dim {
                return Err(Error::Construction(format!(
                    "basis exceeded {} vectors",
                    max_dim
                )));
            }
        }
        level = next_level;
    }

    let dim = x_img.len();
    if BigInt::from(dim) != BigInt::from(expected.clone()) {
        return Err(Error::Construction(format!(
            "found {} independent vectors, Weyl dimension is {}",
            dim, expected
        )));
    }
    let mut x = vec![SparseMatrix::zeros(dim, dim); n];
    let mut y = vec![SparseMatrix::zeros(dim, dim); n];
    let mut h = vec![SparseMatrix::zeros(dim, dim); n];
    let mut weights = Vec::with_capacity(dim);
    for v in 0..dim {
        let wt = spaces[space_of_vec[v]].weight.clone();
        for i in 0..n {
            for (u, c) in &x_img[v][i] {
                x[i].set(*u, v, c.clone());
            }
            for (u, c) in &y_img[v][i] {
                y[i].set(*u, v, c.clone());
            }
            h[i].set(v, v, BigRational::from_integer(BigInt::from(wt[i])));
        }
        weights.push(wt);
    }
    Ok(RepMatrices {
        ty: rs.algebra_type(),
        highest_weight: hw.clone(),
        weights,
        x,
        y,
        h,
    })
}

/// The 56-dimensional minuscule module of E7, highest weight `[0^6, 1]`.
pub fn construct_56_rep(e7: &RootSystem) -> Result<RepMatrices> {
    if e7.algebra_type() != AlgebraType::e7() {
        return Err(Error::Invalid(format!(
            "expected E7, got {}",
            e7.algebra_type()
        )));
    }
    let rep = construct_highest_weight_module(e7, &Weight::fundamental(7, 7), 56)?;
    if rep.dim() != 56 {
        return Err(Error::Construction(format!("dimension {} instead of 56", rep.dim())));
    }
    Ok(rep)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RelationFamily {
    /// `[h_i, h_j] = 0`
    CartanCommute,
    /// `[x_i, y_j] = δ_ij h_i`
    RaiseLower,
    /// `[h_j, x_i] = C(i,j) x_i`
    CartanRaise,
    /// `[h_j, y_i] = -C(i,j) y_i`
    CartanLower,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationCheck {
    pub family: RelationFamily,
    pub i: usize,
    pub j: usize,
    pub passed: bool,
}

/// Itemized result of [`verify_canonical_relations`].
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RelationReport {
    pub checks: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &RelationCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn count(&self, family: RelationFamily) -> usize {
        self.checks.iter().filter(|c| c.family == family).count()
    }
}

/// Checks the four families of canonical-generator relations exactly, with
/// 1-based indices in the report.
pub fn verify_canonical_relations(rep: &RepMatrices, cartan: &[Vec<i32>]) -> RelationReport {
    let n = rep.rank();
    let mut checks = Vec::with_capacity(4 * n * n);
    let q = |v: i32| BigRational::from_integer(BigInt::from(v));
    for i in 0..n {
        for j in 0..n {
            let hh = rep.h[i].commutator(&rep.h[j]).is_zero();
            checks.push(RelationCheck {
                family: RelationFamily::CartanCommute,
                i: i + 1,
                j: j + 1,
                passed: hh,
            });
            let xy = rep.x[i].commutator(&rep.y[j]);
            let xy_ok = if i == j { xy == rep.h[i] } else { xy.is_zero() };
            checks.push(RelationCheck {
                family: RelationFamily::RaiseLower,
                i: i + 1,
                j: j + 1,
                passed: xy_ok,
            });
            let c = cartan[i][j];
            let hx = rep.h[j].commutator(&rep.x[i]) == rep.x[i].scale(&q(c));
            checks.push(RelationCheck {
                family: RelationFamily::CartanRaise,
                i: i + 1,
                j: j + 1,
                passed: hx,
            });
            let hy = rep.h[j].commutator(&rep.y[i]) == rep.y[i].scale(&q(-c));
            checks.push(RelationCheck {
                family: RelationFamily::CartanLower,
                i: i + 1,
                j: j + 1,
                passed: hy,
            });
        }
    }
    RelationReport { checks }
}

/// An invariant bilinear form, stored as a dense integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BilinearForm {
    matrix: Vec<Vec<BigInt>>,
    solution_dim: usize,
    rank: usize,
}

impl BilinearForm {
    pub fn matrix(&self) -> &[Vec<BigInt>] {
        &self.matrix
    }

    /// Dimension of the space of invariant antisymmetric forms.
    pub fn solution_dim(&self) -> usize {
        self.solution_dim
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn dim(&self) -> usize {
        self.matrix.len()
    }

    pub fn is_antisymmetric(&self) -> bool {
        let n = self.dim();
        (0..n).all(|a| (0..n).all(|b| self.matrix[a][b] == -&self.matrix[b][a]))
    }

    pub fn to_sparse(&self) -> SparseMatrix {
        let n = self.dim();
        let mut m = SparseMatrix::zeros(n, n);
        for (a, row) in self.matrix.iter().enumerate() {
            for (b, v) in row.iter().enumerate() {
                if !v.is_zero() {
                    m.set(a, b, BigRational::from_integer(v.clone()));
                }
            }
        }
        m
    }

    /// `gᵀM + Mg = 0`
    pub fn is_invariant_under(&self, g: &SparseMatrix) -> bool {
        let m = self.to_sparse();
        g.transpose().mul(&m).add(&m.mul(g)).is_zero()
    }
}

/// Solves `Mᵀ = -M`, `ρ(g)ᵀM = -Mρ(g)` for all raising and lowering
/// generators. The solution space must be one-dimensional and its generator
/// nondegenerate; it is returned as a primitive integer matrix whose first
/// nonzero entry (row-major, upper triangle) is positive.
pub fn invariant_antisymmetric_form(rep: &RepMatrices) -> Result<BilinearForm> {
    let n = rep.dim();
    let var = |a: usize, b: usize| -> (usize, i32) {
        debug_assert_ne!(a, b);
        if a < b {
            (a * n - a * (a + 1) / 2 + (b - a - 1), 1)
        } else {
            (b * n - b * (b + 1) / 2 + (a - b - 1), -1)
        }
    };
    let unknowns = n * (n - 1) / 2;
    let mut system = SparseEchelon::new(unknowns);
    for g in rep.generators() {
        let mut cols: Vec<Vec<(usize, &BigRational)>> = vec![Vec::new(); n];
        for (r, c, v) in g.iter() {
            cols[c].push((r, v));
        }
        // (gᵀM + Mg)_{ab} = Σ_c g_ca M_cb + Σ_c M_ac g_cb
        for a in 0..n {
            for b in a + 1..n {
                let mut row: Vec<(usize, BigRational)> = Vec::new();
                for &(c, v) in &cols[a] {
                    if c != b {
                        let (k, s) = var(c, b);
                        row.push((k, v * BigRational::from_integer(BigInt::from(s))));
                    }
                }
                for &(c, v) in &cols[b] {
                    if c != a {
                        let (k, s) = var(a, c);
                        row.push((k, v * BigRational::from_integer(BigInt::from(s))));
                    }
                }
                if !row.is_empty() {
                    system.insert_rational(&row);
                }
            }
        }
    }
    let solution_dim = system.nullity();
    if solution_dim != 1 {
        return Err(Error::InvariantForm(format!(
            "solution space has dimension {}, expected 1",
            solution_dim
        )));
    }
    let v = primitive_integer_vector(&system.nullspace()[0]);
    let mut matrix = vec![vec![BigInt::zero(); n]; n];
    for a in 0..n {
        for b in a + 1..n {
            let (k, _) = var(a, b);
            matrix[a][b] = v[k].clone();
            matrix[b][a] = -v[k].clone();
        }
    }
    let rank = integer_rank(&matrix);
    if rank != n {
        return Err(Error::InvariantForm(format!("form has rank {} < {}", rank, n)));
    }
    Ok(BilinearForm {
        matrix,
        solution_dim,
        rank,
    })
}

/// Builds the 56 of E7, checks the canonical relations and returns it with
/// its invariant symplectic form.
pub fn build_embedding_data(e7: &RootSystem) -> Result<(RepMatrices, RelationReport, BilinearForm)> {
    let rep = construct_56_rep(e7)?;
    let report = verify_canonical_relations(&rep, e7.cartan());
    if !report.all_passed() {
        return Err(Error::Construction(
            "canonical relations fail on the constructed module".to_string(),
        ));
    }
    let form = invariant_antisymmetric_form(&rep)?;
    Ok((rep, report, form))
}
