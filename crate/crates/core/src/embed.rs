//! The projection matrix of E7 inside C28.
//!
//! The 56 of E7 carries an invariant symplectic form that pairs opposite
//! weights, so a Cartan subalgebra of E7 sits diagonally inside a Cartan
//! subalgebra of `sp(56)`. Picking one weight `μ_k` from each `±` pair and
//! identifying it with `ε_k` fixes the projection: `A · dynkin(ε_k) = μ_k`.
//! Since `dynkin(ε_k) = e_k - e_{k-1}` in C_n, column `k` of `A` is the
//! partial sum `μ_1 + … + μ_k`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::branch::branch_with_cache;
use crate::repcore::{full_weight_system, RepCache};
use crate::rootkit::{Family, RootSystem};
use crate::{Error, Result, Weight};

/// Integer matrix mapping Dynkin labels of the big algebra to Dynkin labels
/// of the subalgebra: `small = A · big`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProjectionMatrix {
    rows: Vec<Vec<i32>>,
}

impl ProjectionMatrix {
    pub fn new(rows: Vec<Vec<i32>>) -> Result<Self> {
        let cols = rows.first().map(|r| r.len()).unwrap_or(0);
        if rows.is_empty() || cols == 0 || rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Invalid(
                "projection matrix rows must be nonempty and of equal length".to_string(),
            ));
        }
        Ok(ProjectionMatrix { rows })
    }

    pub fn rows(&self) -> &[Vec<i32>] {
        &self.rows
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.rows[0].len()
    }

    pub fn column(&self, j: usize) -> Vec<i32> {
        self.rows.iter().map(|r| r[j]).collect()
    }

    pub fn apply(&self, w: &[i32]) -> Weight {
        Weight::new(
            self.rows
                .iter()
                .map(|r| r.iter().zip(w).map(|(a, b)| a * b).sum())
                .collect(),
        )
    }

    pub(crate) fn apply_into(&self, w: &[i32], out: &mut [i32]) {
        for (o, r) in out.iter_mut().zip(&self.rows) {
            *o = r.iter().zip(w).map(|(a, b)| a * b).sum();
        }
    }

    pub fn check_shape(&self, big: &RootSystem, small: &RootSystem) -> Result<()> {
        if self.nrows() == small.rank() && self.ncols() == big.rank() {
            Ok(())
        } else {
            Err(Error::ProjectionShape {
                rows: self.nrows(),
                cols: self.ncols(),
                expected_rows: small.rank(),
                expected_cols: big.rank(),
            })
        }
    }

    pub fn with_column_negated(&self, j: usize) -> Self {
        let mut rows = self.rows.clone();
        for r in rows.iter_mut() {
            r[j] = -r[j];
        }
        ProjectionMatrix { rows }
    }

    /// Checks that `A` maps the `2n` weights `±ε_k` of the defining module
    /// of `C_n` bijectively onto the weights of `target` (a module of the
    /// subalgebra with simple weights), with `A(-ν) = -A(ν)`.
    pub fn check_defining_image(&self, big: &RootSystem, small: &RootSystem, target: &Weight) -> Result<()> {
        self.check_shape(big, small)?;
        if big.algebra_type().family() != Family::C {
            return Err(Error::Invalid(format!(
                "defining-weight check needs a symplectic ambient algebra, got {}",
                big.algebra_type()
            )));
        }
        let want = full_weight_system(small, target)?;
        let mut got: BTreeMap<Weight, usize> = BTreeMap::new();
        for eps in symplectic_defining_weights(big.rank()) {
            let img = self.apply(&eps);
            let neg = self.apply(&-&eps);
            if neg != -&img {
                return Err(Error::InconsistentProjection(format!(
                    "image of -{} is not the negative of the image of {}",
                    eps, eps
                )));
            }
            *got.entry(img).or_default() += 1;
            *got.entry(neg).or_default() += 1;
        }
        for (w, &count) in &got {
            if count != 1 || !want.contains(w) {
                return Err(Error::InconsistentProjection(format!(
                    "{} is hit {} times but has multiplicity {} in the target module",
                    w,
                    count,
                    want.multiplicity(w)
                )));
            }
        }
        if got.len() != want.len() {
            return Err(Error::InconsistentProjection(format!(
                "image has {} weights, target module has {}",
                got.len(),
                want.len()
            )));
        }
        Ok(())
    }
}

impl fmt::Display for ProjectionMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let mut first = true;
            for v in row {
                if !first {
                    f.write_str(" ")?;
                }
                first = false;
                write!(f, "{}", v)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Dynkin labels of `ε_1, …, ε_n` in `C_n`: `ε_k = ω_k - ω_{k-1}`.
pub fn symplectic_defining_weights(n: usize) -> Vec<Weight> {
    (0..n)
        .map(|k| {
            let mut l = vec![0; n];
            l[k] = 1;
            if k > 0 {
                l[k - 1] = -1;
            }
            Weight::new(l)
        })
        .collect()
}

/// How weights of equal level are ordered when assigning them to `ε_k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TieBreak {
    /// Lexicographically larger labels first.
    LexDescending,
    /// Lexicographically smaller labels first.
    LexAscending,
}

/// Derives the projection matrix for the embedding of `small` into
/// `C_{dim/2}` through the symplectic module with highest weight `target`.
pub fn derive_projection_with(
    big: &RootSystem,
    small: &RootSystem,
    target: &Weight,
    tie: TieBreak,
) -> Result<ProjectionMatrix> {
    let weights = full_weight_system(small, target)?;
    if weights.iter().any(|(_, m)| *m != num_bigint::BigUint::from(1u32)) {
        return Err(Error::Invalid(format!("{} has a weight of multiplicity > 1", target)));
    }
    let n = big.rank();
    if weights.len() != 2 * n {
        return Err(Error::ProjectionShape {
            rows: small.rank(),
            cols: weights.len() / 2,
            expected_rows: small.rank(),
            expected_cols: n,
        });
    }
    // one weight per ± pair: positive level, lexicographic fallback at level 0
    let mut chosen: Vec<(i64, Weight)> = weights
        .weights()
        .filter_map(|w| {
            let lvl = small.level_scaled(w);
            let neg = -w;
            (lvl > 0 || (lvl == 0 && *w > neg)).then(|| (lvl, w.clone()))
        })
        .collect();
    chosen.sort_by(|(la, wa), (lb, wb)| {
        lb.cmp(la).then_with(|| match tie {
            TieBreak::LexDescending => wb.cmp(wa),
            TieBreak::LexAscending => wa.cmp(wb),
        })
    });
    let mut rows = vec![vec![0i32; n]; small.rank()];
    let mut partial = vec![0i32; small.rank()];
    for (k, (_, mu)) in chosen.iter().enumerate() {
        for (p, m) in partial.iter_mut().zip(mu.labels()) {
            *p += m;
        }
        for (r, row) in rows.iter_mut().enumerate() {
            row[k] = partial[r];
        }
    }
    let a = ProjectionMatrix { rows };
    for (k, eps) in symplectic_defining_weights(n).iter().enumerate() {
        if a.apply(eps) != chosen[k].1 {
            return Err(Error::InconsistentProjection(format!(
                "A·ε_{} != {}; retry with another tie-break",
                k + 1,
                chosen[k].1
            )));
        }
    }
    a.check_defining_image(big, small, target)?;
    Ok(a)
}

/// The projection matrix for E7 ⊂ C28 obtained by matching the weights of
/// the 56 of E7 with `±ε_k`, ordered by decreasing `<μ, ρ^∨>`.
pub fn derive_projection_by_weight_matching(c28: &RootSystem, e7: &RootSystem) -> Result<ProjectionMatrix> {
    let target = Weight::fundamental(7, 7);
    derive_projection_with(c28, e7, &target, TieBreak::LexDescending)
        .or_else(|_| derive_projection_with(c28, e7, &target, TieBreak::LexAscending))
}

/// True iff both matrices give identical branchings for every listed
/// highest weight.
pub fn projections_equivalent(
    big: &RootSystem,
    small: &RootSystem,
    a: &ProjectionMatrix,
    b: &ProjectionMatrix,
    highest_weights: &[Weight],
    cache: &mut RepCache,
) -> Result<bool> {
    if a == b {
        return Ok(true);
    }
    for hw in highest_weights {
        big.check_dominant(hw)?;
        let ra = branch_with_cache(big, small, a, hw, cache);
        let rb = branch_with_cache(big, small, b, hw, cache);
        match (ra, rb) {
            (Ok(x), Ok(y)) if x == y => {}
            _ => return Ok(false),
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repcore::orbit;
    use crate::rootkit::AlgebraType;

    #[test]
    fn epsilon_weights_form_the_defining_orbit() {
        let c4 = RootSystem::new(AlgebraType::c(4).unwrap()).unwrap();
        let mut eps: Vec<Weight> = symplectic_defining_weights(4)
            .into_iter()
            .flat_map(|e| [-&e, e])
            .collect();
        eps.sort();
        let mut orb = orbit(&c4, &Weight::fundamental(4, 1));
        orb.sort();
        assert_eq!(eps, orb);
    }

    #[test]
    fn sl2_inside_sp4_via_cubic_module() {
        // the 4-dim module of A1 is symplectic
        let a1 = RootSystem::new("A1".parse().unwrap()).unwrap();
        let c2 = RootSystem::new("C2".parse().unwrap()).unwrap();
        let a = derive_projection_with(&c2, &a1, &Weight::new(vec![3]), TieBreak::LexDescending).unwrap();
        assert_eq!(a.rows(), &[vec![3, 4]]);
        assert!(a.check_defining_image(&c2, &a1, &Weight::new(vec![3])).is_ok());
        assert!(a
            .with_column_negated(0)
            .check_defining_image(&c2, &a1, &Weight::new(vec![3]))
            .is_err());
    }

    #[test]
    fn shape_is_checked() {
        let a1 = RootSystem::new("A1".parse().unwrap()).unwrap();
        let c2 = RootSystem::new("C2".parse().unwrap()).unwrap();
        let a = ProjectionMatrix::new(vec![vec![1, 2, 3]]).unwrap();
        assert!(matches!(a.check_shape(&c2, &a1), Err(Error::ProjectionShape { .. })));
        assert!(ProjectionMatrix::new(vec![vec![1], vec![1, 2]]).is_err());
    }
}
