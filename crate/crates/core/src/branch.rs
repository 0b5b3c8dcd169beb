//! Restriction of irreducible modules to a subalgebra, given a projection
//! matrix.
//!
//! The dominant character of the big module is orbit-expanded, every weight
//! is projected, and only images dominant for the subalgebra are kept. The
//! resulting dominant character of the restriction is then peeled: the
//! highest remaining weight (by `<μ, ρ^∨>`, ties broken lexicographically) is
//! a constituent, and its own dominant character is subtracted.

use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};

use crate::embed::ProjectionMatrix;
use crate::repcore::{for_each_orbit_weight, weyl_dimension, RepCache};
use crate::rootkit::RootSystem;
use crate::{Error, Result, Weight};

/// A multiset of irreducible modules, keyed by highest weight.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Decomposition {
    rank: usize,
    parts: BTreeMap<Weight, BigUint>,
}

/// Result of [`branch`]: subalgebra constituents with multiplicities.
pub type BranchingResult = Decomposition;

impl Decomposition {
    pub fn new(rank: usize) -> Self {
        Decomposition {
            rank,
            parts: BTreeMap::new(),
        }
    }

    pub fn single(hw: Weight) -> Self {
        let mut d = Decomposition::new(hw.rank());
        d.add(hw, &BigUint::from(1u32));
        d
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn add(&mut self, hw: Weight, mult: &BigUint) {
        if !mult.is_zero() {
            *self.parts.entry(hw).or_default() += mult;
        }
    }

    pub fn remove(&mut self, hw: &Weight) -> Option<BigUint> {
        self.parts.remove(hw)
    }

    pub fn multiplicity(&self, hw: &Weight) -> BigUint {
        self.parts.get(hw).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, &BigUint)> {
        self.parts.iter()
    }

    /// Number of distinct constituents.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `Σ mult · dim`.
    pub fn total_dimension(&self, rs: &RootSystem) -> Result<BigUint> {
        let mut total = BigUint::zero();
        for (hw, m) in &self.parts {
            total += m * weyl_dimension(rs, hw)?;
        }
        Ok(total)
    }

    /// Constituents with dimensions, largest dimension first.
    pub fn with_dimensions(&self, rs: &RootSystem) -> Result<Vec<(Weight, BigUint, BigUint)>> {
        let mut out = Vec::with_capacity(self.parts.len());
        for (hw, m) in &self.parts {
            out.push((hw.clone(), weyl_dimension(rs, hw)?, m.clone()));
        }
        out.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| b.0.cmp(&a.0)));
        Ok(out)
    }
}

impl<'a> IntoIterator for &'a Decomposition {
    type Item = (&'a Weight, &'a BigUint);
    type IntoIter = alloc::collections::btree_map::Iter<'a, Weight, BigUint>;

    fn into_iter(self) -> Self::IntoIter {
        self.parts.iter()
    }
}

/// Dominant character of the restriction of `V(hw)` along `proj`.
pub fn restricted_dominant_character(
    big: &RootSystem,
    small: &RootSystem,
    proj: &ProjectionMatrix,
    hw: &Weight,
    cache: &mut RepCache,
) -> Result<BTreeMap<Weight, BigInt>> {
    proj.check_shape(big, small)?;
    big.check_dominant(hw)?;
    let character = cache.dominant_character(big, hw)?;
    let mut out: BTreeMap<Weight, BigInt> = BTreeMap::new();
    let mut buf = vec![0i32; small.rank()];
    for (w, m) in character.iter() {
        let mut counts: BTreeMap<Weight, u64> = BTreeMap::new();
        for_each_orbit_weight(big, w, |v| {
            proj.apply_into(v, &mut buf);
            if buf.iter().all(|&l| l >= 0) {
                *counts.entry(Weight::from(&buf[..])).or_default() += 1;
            }
        });
        let m = BigInt::from(m.clone());
        for (img, c) in counts {
            *out.entry(img).or_default() += &m * c;
        }
    }
    Ok(out)
}

/// Branches `V(hw)` of `big` to `small`.
pub fn branch(
    big: &RootSystem,
    small: &RootSystem,
    proj: &ProjectionMatrix,
    hw: &Weight,
) -> Result<BranchingResult> {
    branch_with_cache(big, small, proj, hw, &mut RepCache::new())
}

pub fn branch_with_cache(
    big: &RootSystem,
    small: &RootSystem,
    proj: &ProjectionMatrix,
    hw: &Weight,
    cache: &mut RepCache,
) -> Result<BranchingResult> {
    let mut residual = restricted_dominant_character(big, small, proj, hw, cache)?;
    peel(small, &mut residual, cache)
}

/// Splits a dominant character into irreducible characters by repeatedly
/// removing the highest remaining weight.
pub fn peel(
    rs: &RootSystem,
    residual: &mut BTreeMap<Weight, BigInt>,
    cache: &mut RepCache,
) -> Result<Decomposition> {
    let mut out = Decomposition::new(rs.rank());
    residual.retain(|_, m| !m.is_zero());
    while let Some(top) = residual
        .keys()
        .max_by(|a, b| {
            rs.level_scaled(a)
                .cmp(&rs.level_scaled(b))
                .then_with(|| a.cmp(b))
        })
        .cloned()
    {
        let m = residual[&top].clone();
        if m.is_negative() {
            return Err(Error::NegativeMultiplicity {
                weight: top,
                mult: m.to_string(),
            });
        }
        let character = cache.dominant_character(rs, &top)?;
        for (w, k) in character.iter() {
            let e = residual.entry(w.clone()).or_default();
            *e -= &m * BigInt::from(k.clone());
            if e.is_negative() {
                return Err(Error::NegativeMultiplicity {
                    weight: w.clone(),
                    mult: e.to_string(),
                });
            }
            if e.is_zero() {
                residual.remove(w);
            }
        }
        out.add(top, &m.to_biguint().expect("checked nonnegative"));
    }
    Ok(out)
}

/// Outcome of [`verify_branching`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchingReport {
    pub expected_dimension: BigUint,
    pub total_dimension: BigUint,
    pub non_dominant: Vec<Weight>,
    pub outside_allow_list: Vec<Weight>,
}

impl BranchingReport {
    pub fn dimension_ok(&self) -> bool {
        self.expected_dimension == self.total_dimension
    }

    pub fn passed(&self) -> bool {
        self.dimension_ok() && self.non_dominant.is_empty() && self.outside_allow_list.is_empty()
    }
}

/// Checks dimension conservation and dominance of every constituent, and
/// flags constituents missing from `allow_list` when one is given.
pub fn verify_branching(
    big: &RootSystem,
    small: &RootSystem,
    result: &BranchingResult,
    hw: &Weight,
    allow_list: Option<&[Weight]>,
) -> Result<BranchingReport> {
    let expected_dimension = weyl_dimension(big, hw)?;
    let mut total_dimension = BigUint::zero();
    let mut non_dominant = Vec::new();
    let mut outside_allow_list = Vec::new();
    for (w, m) in result {
        if w.rank() != small.rank() || !w.is_dominant() {
            non_dominant.push(w.clone());
            continue;
        }
        total_dimension += m * weyl_dimension(small, w)?;
        if let Some(allowed) = allow_list {
            if !allowed.contains(w) {
                outside_allow_list.push(w.clone());
            }
        }
    }
    Ok(BranchingReport {
        expected_dimension,
        total_dimension,
        non_dominant,
        outside_allow_list,
    })
}

