//! Exact root-system and representation machinery for the special embedding
//! of E7 into the symplectic algebra C28.
//!
//! The crate is `no_std` and needs only `alloc`. Everything is computed with
//! integer or arbitrary-precision rational arithmetic; there are no floats
//! anywhere in the pipeline.
//!
//! * [`rootkit`]: Cartan matrices, positive roots, Weyl reflections.
//! * [`repcore`]: Weyl dimension formula, Freudenthal multiplicities, orbits.
//! * [`minrep`]: explicit highest-weight modules (the 56 of E7) and invariant forms.
//! * [`embed`]: the 7x28 projection matrix for E7 inside C28.
//! * [`branch`]: restriction of C28 irreps to E7.
//! * [`tensorprod`]: tensor product decomposition by Weyl straightening.
//! * [`dioph`]: counting solutions of `sum c_i n_i = N`.

#![no_std]

extern crate alloc;

pub mod branch;
pub mod dioph;
pub mod embed;
mod error;
pub mod linalg;
pub mod minrep;
pub mod repcore;
pub mod rootkit;
pub mod tensorprod;
mod weight;

pub use error::{Error, Result};
pub use weight::{ParseWeightError, Weight};

pub use branch::{branch, verify_branching, BranchingReport, Decomposition};
pub use embed::ProjectionMatrix;
pub use repcore::{Irrep, RepCache, WeightSystem};
pub use rootkit::{AlgebraType, Family, Root, RootSystem};
