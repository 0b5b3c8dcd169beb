//! Cartan matrices, positive roots and the Weyl group action on weights.
//!
//! Conventions: `C(i, j) = <α_i, α_j^∨>`, so `[h_j, x_i] = C(i, j) x_i` and row
//! `i` of the Cartan matrix is the Dynkin-label vector of the simple root
//! `α_i`. Nodes follow Bourbaki. For E7 the chain is 1-3-4-5-6-7 with node 2
//! attached to node 4. For C_n the chain is 1..n with the double edge between
//! `n-1` and `n`, node `n` long, so the defining module `[1, 0^{n-1}]` has
//! dimension `2n`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_rational::Rational64;
use num_traits::{One, Zero};

use crate::{Error, Result, Weight};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

/// A simple Lie algebra type such as `E7` or `C28`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AlgebraType {
    family: Family,
    rank: usize,
}

impl AlgebraType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(AlgebraType { family, rank })
        } else {
            Err(Error::UnsupportedType {
                family: family.letter(),
                rank,
            })
        }
    }

    pub fn e7() -> Self {
        AlgebraType {
            family: Family::E,
            rank: 7,
        }
    }

    pub fn c(rank: usize) -> Result<Self> {
        Self::new(Family::C, rank)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }
}

impl fmt::Display for AlgebraType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for AlgebraType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let letter = chars.next().map(|c| c.to_ascii_uppercase());
        let family = match letter {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => {
                return Err(Error::Invalid(alloc::format!(
                    "unknown algebra `{}`",
                    s
                )))
            }
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::Invalid(alloc::format!("unknown algebra `{}`", s)))?;
        AlgebraType::new(family, rank)
    }
}

/// A positive root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Root {
    coeffs: Vec<i32>,
    labels: Weight,
    // coeff_k * B_kk, pairs against Dynkin labels to give the scaled form.
    dual: Vec<i64>,
    norm: i64,
}

impl Root {
    /// Expansion in simple roots.
    pub fn coeffs(&self) -> &[i32] {
        &self.coeffs
    }

    /// Dynkin-label form.
    pub fn labels(&self) -> &Weight {
        &self.labels
    }

    pub fn height(&self) -> i32 {
        self.coeffs.iter().sum()
    }
}

/// Root datum for one simple type.
#[derive(Debug, Clone)]
pub struct RootSystem {
    ty: AlgebraType,
    cartan: Vec<Vec<i32>>,
    // symmetric Gram matrix of simple roots, short roots have B_ii = 2
    gram: Vec<Vec<i64>>,
    // long roots have B_ii = 2 * norm
    norm: i64,
    cartan_inv: Vec<Vec<Rational64>>,
    inv_den: i64,
    cartan_inv_scaled: Vec<Vec<i64>>,
    positive: Vec<Root>,
    index: BTreeMap<Vec<i32>, usize>,
}

fn simple_root_gram(ty: AlgebraType) -> Vec<Vec<i64>> {
    let n = ty.rank;
    let mut b = vec![vec![0i64; n]; n];
    let mut link = |i: usize, j: usize, v: i64| {
        b[i - 1][j - 1] = v;
        b[j - 1][i - 1] = v;
    };
    match ty.family {
        Family::A => {
            for i in 1..n {
                link(i, i + 1, -1);
            }
        }
        Family::B => {
            for i in 1..n {
                link(i, i + 1, -2);
            }
        }
        Family::C => {
            for i in 1..n - 1 {
                link(i, i + 1, -1);
            }
            link(n - 1, n, -2);
        }
        Family::D => {
            for i in 1..n - 1 {
                link(i, i + 1, -1);
            }
            link(n - 2, n, -1);
        }
        Family::E => {
            link(1, 3, -1);
            link(2, 4, -1);
            for i in 3..n {
                link(i, i + 1, -1);
            }
        }
        Family::F => {
            link(1, 2, -2);
            link(2, 3, -2);
            link(3, 4, -1);
        }
        Family::G => link(1, 2, -3),
    }
    for (i, row) in b.iter_mut().enumerate() {
        let node = i + 1;
        row[i] = match ty.family {
            Family::B if node < n => 4,
            Family::C if node == n => 4,
            Family::F if node <= 2 => 4,
            Family::G if node == 2 => 6,
            _ => 2,
        };
    }
    b
}

fn rational_inverse(m: &[Vec<i32>]) -> Option<Vec<Vec<Rational64>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational64>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<Rational64> = row.iter().map(|&x| Rational64::from(x as i64)).collect();
            r.extend((0..n).map(|j| if i == j { Rational64::one() } else { Rational64::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        let p = a[col][col];
        for x in a[col].iter_mut() {
            *x /= p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                for c in 0..2 * n {
                    let v = a[col][c];
                    a[r][c] -= f * v;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

impl RootSystem {
    /// Builds the root datum; positive roots are generated by closure from
    /// the simple roots using root-string lengths.
    pub fn new(ty: AlgebraType) -> Result<Self> {
        let ty = AlgebraType::new(ty.family, ty.rank)?;
        let n = ty.rank;
        let gram = simple_root_gram(ty);
        let cartan: Vec<Vec<i32>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        debug_assert_eq!((2 * gram[i][j]) % gram[j][j], 0);
                        (2 * gram[i][j] / gram[j][j]) as i32
                    })
                    .collect()
            })
            .collect();
        let norm = gram.iter().enumerate().map(|(i, r)| r[i]).max().unwrap_or(2) / 2;
        let cartan_inv = rational_inverse(&cartan).ok_or(Error::UnsupportedType {
            family: ty.family.letter(),
            rank: n,
        })?;
        let inv_den = cartan_inv
            .iter()
            .flatten()
            .fold(1i64, |acc, q| num_integer::lcm(acc, *q.denom()));
        let cartan_inv_scaled = cartan_inv
            .iter()
            .map(|r| r.iter().map(|q| (q * inv_den).to_integer()).collect())
            .collect();

        let mut rs = RootSystem {
            ty,
            cartan,
            gram,
            norm,
            cartan_inv,
            inv_den,
            cartan_inv_scaled,
            positive: Vec::new(),
            index: BTreeMap::new(),
        };
        rs.generate_positive_roots();
        Ok(rs)
    }

    fn make_root(&self, coeffs: Vec<i32>) -> Root {
        let n = self.rank();
        let mut labels = vec![0i32; n];
        for (k, &c) in coeffs.iter().enumerate() {
            if c != 0 {
                for (l, x) in labels.iter_mut().zip(&self.cartan[k]) {
                    *l += c * x;
                }
            }
        }
        let dual: Vec<i64> = (0..n).map(|k| coeffs[k] as i64 * self.gram[k][k]).collect();
        let norm = dual.iter().zip(&labels).map(|(d, &l)| d * l as i64).sum();
        Root {
            coeffs,
            labels: Weight::new(labels),
            dual,
            norm,
        }
    }

    fn generate_positive_roots(&mut self) {
        let n = self.rank();
        let mut known: BTreeSet<Vec<i32>> = BTreeSet::new();
        let mut roots: Vec<Root> = Vec::new();
        for i in 0..n {
            let mut c = vec![0; n];
            c[i] = 1;
            known.insert(c.clone());
            roots.push(self.make_root(c));
        }
        let mut start = 0;
        loop {
            let end = roots.len();
            let mut next: BTreeSet<Vec<i32>> = BTreeSet::new();
            for r in &roots[start..end] {
                for i in 0..n {
                    // α_i-string through r: p - q = <r, α_i^∨>
                    let mut c = r.coeffs.clone();
                    let mut p = 0;
                    loop {
                        c[i] -= 1;
                        if known.contains(&c) {
                            p += 1;
                        } else {
                            break;
                        }
                    }
                    if p - r.labels[i] > 0 {
                        let mut up = r.coeffs.clone();
                        up[i] += 1;
                        next.insert(up);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            for c in next {
                known.insert(c.clone());
                roots.push(self.make_root(c));
            }
            start = end;
        }
        self.index = roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.coeffs.clone(), i))
            .collect();
        self.positive = roots;
    }

    pub fn algebra_type(&self) -> AlgebraType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.ty.rank
    }

    pub fn cartan(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    /// `C(i, j)` with 1-based indices.
    pub fn cartan_entry(&self, i: usize, j: usize) -> i32 {
        self.cartan[i - 1][j - 1]
    }

    /// Positive roots ordered by height, then by coefficient vector. The
    /// first `rank` entries are the simple roots in node order.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    /// `α_i`, 1-based.
    pub fn simple_root(&self, i: usize) -> &Root {
        &self.positive[i - 1]
    }

    pub fn root_index(&self, coeffs: &[i32]) -> Option<usize> {
        self.index.get(coeffs).copied()
    }

    pub fn is_long(&self, i: usize) -> bool {
        self.gram[i - 1][i - 1] == 2 * self.norm
    }

    pub fn highest_root(&self) -> &Root {
        self.positive.last().expect("root systems are nonempty")
    }

    /// Dimension of the Lie algebra, `rank + 2 |Φ⁺|`.
    pub fn dimension(&self) -> usize {
        self.rank() + 2 * self.positive.len()
    }

    /// The Weyl vector; all Dynkin labels equal one.
    pub fn rho(&self) -> Weight {
        Weight::new(vec![1; self.rank()])
    }

    /// Fundamental weight `ω_i` expanded in simple roots (row `i` of `C⁻¹`).
    pub fn fundamental_weight_in_roots(&self, i: usize) -> &[Rational64] {
        &self.cartan_inv[i - 1]
    }

    pub fn check_rank(&self, w: &Weight) -> Result<()> {
        if w.rank() == self.rank() {
            Ok(())
        } else {
            Err(Error::RankMismatch {
                weight: w.clone(),
                expected: self.rank(),
                got: w.rank(),
            })
        }
    }

    pub fn check_dominant(&self, w: &Weight) -> Result<()> {
        self.check_rank(w)?;
        if w.is_dominant() {
            Ok(())
        } else {
            Err(Error::NotDominant(w.clone()))
        }
    }

    /// Expansion of `w` in simple roots.
    pub fn root_coordinates(&self, w: &[i32]) -> Vec<Rational64> {
        self.scaled_root_coordinates(w)
            .into_iter()
            .map(|c| Rational64::new(c, self.inv_den))
            .collect()
    }

    /// Expansion in simple roots if `w` lies in the root lattice.
    pub fn root_lattice_coordinates(&self, w: &[i32]) -> Option<Vec<i64>> {
        self.scaled_root_coordinates(w)
            .into_iter()
            .map(|c| (c % self.inv_den == 0).then(|| c / self.inv_den))
            .collect()
    }

    fn scaled_root_coordinates(&self, w: &[i32]) -> Vec<i64> {
        let n = self.rank();
        let mut out = vec![0i64; n];
        for (i, &l) in w.iter().enumerate() {
            if l != 0 {
                for (o, x) in out.iter_mut().zip(&self.cartan_inv_scaled[i]) {
                    *o += l as i64 * x;
                }
            }
        }
        out
    }

    /// `<w, ρ^∨>` multiplied by [`RootSystem::level_denominator`]. This is
    /// the height function used to order weights.
    pub fn level_scaled(&self, w: &[i32]) -> i64 {
        self.scaled_root_coordinates(w).iter().sum()
    }

    pub fn level_denominator(&self) -> i64 {
        self.inv_den
    }

    /// `<w, ρ^∨>`, the sum of the simple-root coordinates of `w`.
    pub fn level(&self, w: &[i32]) -> Rational64 {
        Rational64::new(self.level_scaled(w), self.inv_den)
    }

    /// Invariant symmetric form, normalized so long roots have length² 2.
    pub fn inner_product(&self, a: &Weight, b: &Weight) -> Rational64 {
        let ca = self.root_coordinates(a);
        let mut s = Rational64::zero();
        for k in 0..self.rank() {
            s += ca[k] * (self.gram[k][k] * b[k] as i64);
        }
        s / (2 * self.norm)
    }

    /// `2·norm·(root, w)` for the positive root with the given index; an
    /// integer for every integral weight.
    pub(crate) fn root_pairing_scaled(&self, root: usize, w: &[i32]) -> i64 {
        self.positive[root]
            .dual
            .iter()
            .zip(w)
            .map(|(d, &l)| d * l as i64)
            .sum()
    }

    /// `2·norm·(root, root)`.
    pub(crate) fn root_norm_scaled(&self, root: usize) -> i64 {
        self.positive[root].norm
    }

    /// `2·norm·(a, b)` where `a` is given in simple-root coordinates.
    pub(crate) fn pairing_scaled_from_roots(&self, a_roots: &[i64], b: &[i32]) -> i64 {
        (0..self.rank())
            .map(|k| a_roots[k] * self.gram[k][k] * b[k] as i64)
            .sum()
    }

    /// `<w, α^∨>` for the positive root with the given index.
    pub fn coroot_pairing(&self, w: &[i32], root: usize) -> i64 {
        2 * self.root_pairing_scaled(root, w) / self.root_norm_scaled(root)
    }

    /// Simple reflection `s_i(w) = w - w_i α_i`, 1-based `i`.
    pub fn reflect(&self, w: &Weight, i: usize) -> Result<Weight> {
        self.check_rank(w)?;
        if i == 0 || i > self.rank() {
            return Err(Error::NodeOutOfRange {
                index: i,
                rank: self.rank(),
            });
        }
        let mut out = w.clone();
        self.reflect_in_place(out.labels_mut(), i - 1);
        Ok(out)
    }

    #[inline]
    pub(crate) fn reflect_in_place(&self, w: &mut [i32], i0: usize) {
        let k = w[i0];
        if k != 0 {
            for (x, c) in w.iter_mut().zip(&self.cartan[i0]) {
                *x -= k * c;
            }
        }
    }

    /// Moves `w` into the dominant chamber and returns the determinant of the
    /// Weyl element used, `+1` or `-1`.
    ///
    /// The result is shift-agnostic. Callers doing ρ-shifted straightening
    /// pass `w + ρ` and treat a zero label in the result as a vanishing term
    /// (see [`RootSystem::straighten_shifted`]).
    pub fn to_dominant_signed(&self, w: &Weight) -> (Weight, i32) {
        let mut out = w.clone();
        let sign = self.dominate_in_place(out.labels_mut());
        (out, sign)
    }

    pub fn to_dominant(&self, w: &Weight) -> Weight {
        self.to_dominant_signed(w).0
    }

    pub(crate) fn dominate_in_place(&self, w: &mut [i32]) -> i32 {
        let mut sign = 1;
        while let Some(i) = w.iter().position(|&l| l < 0) {
            self.reflect_in_place(w, i);
            sign = -sign;
        }
        sign
    }

    /// Straightens an already ρ-shifted weight: returns `(dominant, sign)`
    /// with sign `0` when the weight lies on a reflecting wall.
    pub fn straighten_shifted(&self, shifted: &Weight) -> (Weight, i32) {
        let (d, s) = self.to_dominant_signed(shifted);
        if d.is_regular_dominant() {
            (d, s)
        } else {
            (d, 0)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn a1_basics() {
        let a1 = rs("A1");
        assert_eq!(a1.cartan(), &[vec![2]]);
        assert_eq!(a1.positive_roots().len(), 1);
        assert_eq!(a1.simple_root(1).coeffs(), &[1]);
        let w = Weight::new(vec![1]);
        assert_eq!(a1.reflect(&w, 1).unwrap().labels(), &[-1]);
        let (d, s) = a1.to_dominant_signed(&Weight::new(vec![-1]));
        assert_eq!((d.labels(), s), (&[1][..], -1));
    }

    #[test]
    fn positive_root_counts() {
        for (name, count) in [
            ("A2", 3),
            ("A5", 15),
            ("B3", 9),
            ("C3", 9),
            ("D4", 12),
            ("D5", 20),
            ("G2", 6),
            ("F4", 24),
            ("E6", 36),
            ("E7", 63),
            ("E8", 120),
            ("C28", 784),
        ] {
            assert_eq!(rs(name).positive_roots().len(), count, "{}", name);
        }
        assert_eq!(rs("E7").dimension(), 133);
        assert_eq!(rs("C28").dimension(), 1596);
    }

    #[test]
    fn e7_node_numbering() {
        let e7 = rs("E7");
        // node 2 hangs off node 4, chain 1-3-4-5-6-7
        let edges: Vec<(usize, usize)> = (1..=7)
            .flat_map(|i| (i + 1..=7).map(move |j| (i, j)))
            .filter(|&(i, j)| e7.cartan_entry(i, j) != 0)
            .collect();
        assert_eq!(edges, vec![(1, 3), (2, 4), (3, 4), (4, 5), (5, 6), (6, 7)]);
        assert_eq!(e7.highest_root().labels().labels(), &[1, 0, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn c_double_edge_orientation() {
        let c28 = rs("C28");
        assert_eq!(c28.cartan_entry(27, 28), -1);
        assert_eq!(c28.cartan_entry(28, 27), -2);
        assert!(c28.is_long(28));
        assert!(!c28.is_long(27));
        assert_eq!(c28.highest_root().labels()[0], 2);
    }

    #[test]
    fn cartan_matrix_axioms() {
        for name in ["A4", "B4", "C4", "D5", "E6", "E7", "E8", "F4", "G2"] {
            let r = rs(name);
            let n = r.rank();
            for i in 0..n {
                assert_eq!(r.cartan[i][i], 2);
                for j in 0..n {
                    if i != j {
                        assert!((-3..=0).contains(&r.cartan[i][j]));
                        assert_eq!(r.cartan[i][j] == 0, r.cartan[j][i] == 0);
                    }
                }
            }
        }
    }

    #[test]
    fn c2_reflection_and_lengths() {
        let c2 = rs("C2");
        let w = Weight::new(vec![1, 0]);
        assert_eq!(c2.reflect(&w, 1).unwrap().labels(), &[-1, 1]);
        let (d, s) = c2.to_dominant_signed(&Weight::new(vec![-1, 1]));
        assert_eq!((d.labels(), s), (&[1, 0][..], -1));
        let a1 = c2.simple_root(1).labels().clone();
        let a2 = c2.simple_root(2).labels().clone();
        assert_eq!(c2.inner_product(&a1, &a1), Rational64::new(1, 1));
        assert_eq!(c2.inner_product(&a2, &a2), Rational64::new(2, 1));
    }

    #[test]
    fn long_roots_have_norm_two_and_rho_pairs_to_one() {
        for name in ["A3", "B3", "C4", "G2", "F4", "E7"] {
            let r = rs(name);
            let rho = r.rho();
            for i in 1..=r.rank() {
                let a = r.simple_root(i).labels().clone();
                if r.is_long(i) {
                    assert_eq!(r.inner_product(&a, &a), Rational64::from(2));
                }
                // <ρ, α_i^∨> = 2(ρ, α_i)/(α_i, α_i)
                let v = r.inner_product(&rho, &a) * 2 / r.inner_product(&a, &a);
                assert_eq!(v, Rational64::one());
                assert_eq!(r.coroot_pairing(&rho, i - 1), 1);
            }
        }
    }

    #[test]
    fn reflect_rejects_bad_node() {
        let c2 = rs("C2");
        let w = Weight::new(vec![1, 0]);
        assert!(matches!(c2.reflect(&w, 0), Err(Error::NodeOutOfRange { .. })));
        assert!(matches!(c2.reflect(&w, 3), Err(Error::NodeOutOfRange { .. })));
        assert!(matches!(
            c2.reflect(&Weight::new(vec![1]), 1),
            Err(Error::RankMismatch { .. })
        ));
    }

    #[test]
    fn unsupported_types() {
        assert!("E9".parse::<AlgebraType>().is_err());
        assert!("C1".parse::<AlgebraType>().is_err());
        assert!("F5".parse::<AlgebraType>().is_err());
        assert!("X3".parse::<AlgebraType>().is_err());
        assert_eq!("c28".parse::<AlgebraType>().unwrap(), AlgebraType::c(28).unwrap());
    }

    #[test]
    fn straighten_shifted_detects_walls() {
        let a2 = rs("A2");
        // ρ + (-1, 0): [0, 1] sits on the α1 wall
        let (_, s) = a2.straighten_shifted(&Weight::new(vec![0, 1]));
        assert_eq!(s, 0);
        let (d, s) = a2.straighten_shifted(&Weight::new(vec![-1, 2]));
        assert_eq!((d.labels(), s), (&[1, 1][..], -1));
    }
}
