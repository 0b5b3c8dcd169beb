//! Tensor product decomposition by ρ-shifted Weyl straightening.
//!
//! `V(λ) ⊗ V(μ) = Σ_ν m_μ(ν) · sign(w) · V(w(λ+ρ+ν) - ρ)`, summed over the
//! weights `ν` of `V(μ)`, where `w` moves `λ+ρ+ν` into the dominant chamber
//! and terms on a wall vanish.

use alloc::collections::BTreeMap;
use alloc::string::ToString;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::branch::Decomposition;
use crate::repcore::{for_each_orbit_weight, RepCache};
use crate::rootkit::RootSystem;
use crate::{Error, Result, Weight};

/// Decomposes `V(a) ⊗ V(b)`. Iterates over the weights of the factor with
/// smaller dimension.
pub fn tensor_decompose(
    rs: &RootSystem,
    a: &Weight,
    b: &Weight,
    cache: &mut RepCache,
) -> Result<Decomposition> {
    rs.check_dominant(a)?;
    rs.check_dominant(b)?;
    let (lambda, source) = if cache.dimension(rs, a)? < cache.dimension(rs, b)? {
        (b, a)
    } else {
        (a, b)
    };
    let rho = rs.rho();
    let lambda_rho = lambda + &rho;
    let character = cache.dominant_character(rs, source)?;
    let mut acc: BTreeMap<Weight, BigInt> = BTreeMap::new();
    for (w, m) in character.iter() {
        let mut local: BTreeMap<Weight, i64> = BTreeMap::new();
        for_each_orbit_weight(rs, w, |nu| {
            let (dom, sign) = rs.straighten_shifted(&(&lambda_rho + nu));
            if sign != 0 {
                *local.entry(&dom - &rho).or_default() += sign as i64;
            }
        });
        let m = BigInt::from(m.clone());
        for (hw, c) in local {
            if c != 0 {
                *acc.entry(hw).or_default() += &m * c;
            }
        }
    }
    let mut out = Decomposition::new(rs.rank());
    for (hw, c) in acc {
        if c.is_zero() {
            continue;
        }
        if c.is_negative() {
            return Err(Error::NegativeMultiplicity {
                weight: hw,
                mult: c.to_string(),
            });
        }
        out.add(hw, &c.to_biguint().expect("positive"));
    }
    Ok(out)
}

/// Decomposes `V(f_1) ⊗ … ⊗ V(f_k)` by folding from the left.
pub fn tensor_fold(rs: &RootSystem, factors: &[Weight], cache: &mut RepCache) -> Result<Decomposition> {
    let (first, rest) = factors
        .split_first()
        .ok_or_else(|| Error::Invalid("tensor product needs at least one factor".to_string()))?;
    rs.check_dominant(first)?;
    let mut current = Decomposition::single(first.clone());
    for f in rest {
        let mut next = Decomposition::new(rs.rank());
        for (hw, m) in &current {
            for (part, k) in &tensor_decompose(rs, hw, f, cache)? {
                next.add(part.clone(), &(m * k));
            }
        }
        current = next;
    }
    Ok(current)
}
