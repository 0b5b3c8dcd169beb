//! Dimensions and weight multiplicities of irreducible modules.
//!
//! Multiplicities are computed on the dominant chamber only, by Freudenthal's
//! recursion, and expanded to full Weyl orbits on demand. Orbits are walked by
//! simple reflections level by level; the Weyl group itself is never listed.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::rootkit::{AlgebraType, RootSystem};
use crate::{Error, Result, Weight};

/// A finite multiset of weights. Zero-multiplicity entries are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WeightSystem {
    rank: usize,
    entries: BTreeMap<Weight, BigUint>,
}

impl WeightSystem {
    pub fn new(rank: usize) -> Self {
        WeightSystem {
            rank,
            entries: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Adds `mult` to the multiplicity of `w`.
    pub fn add(&mut self, w: Weight, mult: &BigUint) {
        debug_assert_eq!(w.rank(), self.rank);
        if mult.is_zero() {
            return;
        }
        *self.entries.entry(w).or_default() += mult;
    }

    pub fn get(&self, w: &Weight) -> Option<&BigUint> {
        self.entries.get(w)
    }

    pub fn multiplicity(&self, w: &Weight) -> BigUint {
        self.entries.get(w).cloned().unwrap_or_default()
    }

    pub fn contains(&self, w: &Weight) -> bool {
        self.entries.contains_key(w)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, &BigUint)> {
        self.entries.iter()
    }

    pub fn weights(&self) -> impl Iterator<Item = &Weight> {
        self.entries.keys()
    }

    /// Number of distinct weights.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Sum of all multiplicities.
    pub fn total(&self) -> BigUint {
        self.entries.values().sum()
    }

    pub fn into_entries(self) -> BTreeMap<Weight, BigUint> {
        self.entries
    }
}

impl<'a> IntoIterator for &'a WeightSystem {
    type Item = (&'a Weight, &'a BigUint);
    type IntoIter = alloc::collections::btree_map::Iter<'a, Weight, BigUint>;

    fn into_iter(self) -> Self::IntoIter {
        self.entries.iter()
    }
}

/// An irreducible module, identified by its highest weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Irrep {
    ty: AlgebraType,
    highest_weight: Weight,
    dimension: BigUint,
}

impl Irrep {
    pub fn new(rs: &RootSystem, highest_weight: Weight) -> Result<Self> {
        let dimension = weyl_dimension(rs, &highest_weight)?;
        Ok(Irrep {
            ty: rs.algebra_type(),
            highest_weight,
            dimension,
        })
    }

    pub fn algebra_type(&self) -> AlgebraType {
        self.ty
    }

    pub fn highest_weight(&self) -> &Weight {
        &self.highest_weight
    }

    pub fn dimension(&self) -> &BigUint {
        &self.dimension
    }
}

/// Weyl's dimension formula, `∏_{α>0} (λ+ρ, α) / (ρ, α)`, in exact integers.
pub fn weyl_dimension(rs: &RootSystem, hw: &Weight) -> Result<BigUint> {
    rs.check_dominant(hw)?;
    let shifted = hw + &rs.rho();
    let rho = rs.rho();
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for r in 0..rs.positive_roots().len() {
        let a = rs.root_pairing_scaled(r, &shifted);
        let b = rs.root_pairing_scaled(r, &rho);
        // both strictly positive for dominant hw
        num *= a as u64;
        den *= b as u64;
    }
    let (q, rem) = num_integer::Integer::div_rem(&num, &den);
    debug_assert!(rem.is_zero());
    Ok(q)
}

/// Dominant weights of the irreducible module with highest weight `hw`,
/// ordered by decreasing `<μ, ρ^∨>` with reverse-lexicographic tie-break.
/// The first entry is `hw` itself.
pub fn dominant_weight_support(rs: &RootSystem, hw: &Weight) -> Result<Vec<Weight>> {
    rs.check_dominant(hw)?;
    let mut seen: BTreeSet<Weight> = BTreeSet::new();
    seen.insert(hw.clone());
    let mut frontier = alloc::vec![hw.clone()];
    while let Some(w) = frontier.pop() {
        for root in rs.positive_roots() {
            let mut k = 1;
            loop {
                let next = w.add_scaled(root.labels(), -k);
                if !next.is_dominant() {
                    break;
                }
                if seen.insert(next.clone()) {
                    frontier.push(next);
                }
                k += 1;
            }
        }
    }
    let mut out: Vec<Weight> = seen.into_iter().collect();
    sort_by_level(rs, &mut out);
    Ok(out)
}

pub(crate) fn sort_by_level(rs: &RootSystem, ws: &mut [Weight]) {
    ws.sort_by_cached_key(|w| (core::cmp::Reverse(rs.level_scaled(w)), core::cmp::Reverse(w.clone())));
}

/// Freudenthal multiplicities on the dominant support of `hw`.
pub fn freudenthal_multiplicities(rs: &RootSystem, hw: &Weight) -> Result<WeightSystem> {
    let order: Vec<usize> = (0..rs.positive_roots().len()).collect();
    freudenthal_with_root_order(rs, hw, &order)
}

/// Same as [`freudenthal_multiplicities`], summing over positive roots in the
/// given order.
pub fn freudenthal_with_root_order(
    rs: &RootSystem,
    hw: &Weight,
    root_order: &[usize],
) -> Result<WeightSystem> {
    let support = dominant_weight_support(rs, hw)?;
    let support_set: BTreeSet<&Weight> = support.iter().collect();
    let rho = rs.rho();
    let hw_rho = hw + &rho;
    let mut mult: BTreeMap<Weight, BigUint> = BTreeMap::new();
    mult.insert(hw.clone(), BigUint::one());

    let mut scratch = alloc::vec![0i32; rs.rank()];
    for mu in support.iter().skip(1) {
        let diff = hw - mu;
        let diff_roots = rs.root_lattice_coordinates(&diff).ok_or_else(|| {
            Error::Construction(format!("{} is not below {} in the root lattice", mu, hw))
        })?;
        let sum_shift: Weight = &(&hw_rho + mu) + &rho;
        // 2·norm·((λ+ρ,λ+ρ) - (μ+ρ,μ+ρ))
        let lhs = rs.pairing_scaled_from_roots(&diff_roots, &sum_shift);
        if lhs <= 0 {
            return Err(Error::Construction(format!(
                "non-positive Freudenthal denominator at {}",
                mu
            )));
        }
        let mut acc = BigInt::zero();
        for &r in root_order {
            let alpha = rs.positive_roots()[r].labels();
            let base = rs.root_pairing_scaled(r, mu);
            let step = rs.root_norm_scaled(r);
            let mut k = 1i32;
            loop {
                for ((s, &m), &a) in scratch.iter_mut().zip(mu.labels()).zip(alpha.labels()) {
                    *s = m + k * a;
                }
                rs.dominate_in_place(&mut scratch);
                let dom = Weight::from(&scratch[..]);
                if !support_set.contains(&dom) {
                    break;
                }
                let m = mult.get(&dom).ok_or_else(|| {
                    Error::Construction(format!("multiplicity of {} requested before it was computed", dom))
                })?;
                let pairing = base + k as i64 * step;
                acc += BigInt::from(m.clone()) * pairing;
                k += 1;
            }
        }
        acc *= 2;
        let (q, rem) = num_integer::Integer::div_rem(&acc, &BigInt::from(lhs));
        if !rem.is_zero() || q.is_negative() {
            return Err(Error::Construction(format!(
                "Freudenthal recursion gave a non-integral multiplicity at {}",
                mu
            )));
        }
        if let Some(m) = q.to_biguint().filter(|m| !m.is_zero()) {
            mult.insert(mu.clone(), m);
        } else {
            return Err(Error::Construction(format!(
                "dominant weight {} below {} has zero multiplicity",
                mu, hw
            )));
        }
    }
    Ok(WeightSystem {
        rank: rs.rank(),
        entries: mult,
    })
}

/// Calls `f` once for every element of the Weyl orbit of `w`.
pub fn for_each_orbit_weight(rs: &RootSystem, w: &Weight, mut f: impl FnMut(&Weight)) {
    let start = rs.to_dominant(w);
    let mut level: Vec<Weight> = alloc::vec![start];
    while !level.is_empty() {
        let mut next: BTreeSet<Weight> = BTreeSet::new();
        for v in &level {
            f(v);
            for (i, &l) in v.labels().iter().enumerate() {
                if l > 0 {
                    let mut u = v.clone();
                    rs.reflect_in_place(u.labels_mut(), i);
                    next.insert(u);
                }
            }
        }
        level = next.into_iter().collect();
    }
}

/// The Weyl orbit of `w`, starting from its dominant representative.
pub fn orbit(rs: &RootSystem, w: &Weight) -> Vec<Weight> {
    let mut out = Vec::new();
    for_each_orbit_weight(rs, w, |v| out.push(v.clone()));
    out
}

pub fn orbit_size(rs: &RootSystem, w: &Weight) -> usize {
    let mut n = 0usize;
    for_each_orbit_weight(rs, w, |_| n += 1);
    n
}

/// Replaces every weight by its full orbit at the same multiplicity.
pub fn orbit_expand(rs: &RootSystem, dominant: &WeightSystem) -> WeightSystem {
    let mut out = WeightSystem::new(dominant.rank());
    for (w, m) in dominant {
        for_each_orbit_weight(rs, w, |v| out.add(v.clone(), m));
    }
    out
}

/// All weights of the irreducible module with highest weight `hw`.
pub fn full_weight_system(rs: &RootSystem, hw: &Weight) -> Result<WeightSystem> {
    Ok(orbit_expand(rs, &freudenthal_multiplicities(rs, hw)?))
}

/// `Σ m(μ) |W·μ|` over a dominant character.
pub fn dimension_from_character(rs: &RootSystem, dominant: &WeightSystem) -> BigUint {
    dominant
        .iter()
        .map(|(w, m)| m * BigUint::from(orbit_size(rs, w)))
        .sum()
}

/// Memo of dominant characters keyed by algebra and highest weight.
#[derive(Debug, Default, Clone)]
pub struct RepCache {
    characters: BTreeMap<(AlgebraType, Weight), Arc<WeightSystem>>,
    dimensions: BTreeMap<(AlgebraType, Weight), BigUint>,
}

impl RepCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn dominant_character(&mut self, rs: &RootSystem, hw: &Weight) -> Result<Arc<WeightSystem>> {
        let key = (rs.algebra_type(), hw.clone());
        if let Some(c) = self.characters.get(&key) {
            return Ok(c.clone());
        }
        let c = Arc::new(freudenthal_multiplicities(rs, hw)?);
        self.characters.insert(key, c.clone());
        Ok(c)
    }

    pub fn dimension(&mut self, rs: &RootSystem, hw: &Weight) -> Result<BigUint> {
        let key = (rs.algebra_type(), hw.clone());
        if let Some(d) = self.dimensions.get(&key) {
            return Ok(d.clone());
        }
        let d = weyl_dimension(rs, hw)?;
        self.dimensions.insert(key, d.clone());
        Ok(d)
    }

    pub fn len(&self) -> usize {
        self.characters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.characters.is_empty()
    }
}
