//! Exact symbolic engine for small quasireductive Lie superalgebras.
//!
//! The crate implements arithmetic in the universal enveloping algebra
//! `U(g)` over exact coefficient fields (rationals, cyclotomic extensions,
//! univariate rational functions), PBW normal ordering, twisted adjoint
//! actions, Harish-Chandra projections onto Cartan polynomials, ghost
//! elements `v_g` and the spaces `A_phi` they generate, the projectivity
//! polynomial `p_{G,B}`, Vandermonde decompositions of the full ghost
//! centre, and finite-dimensional graded modules (Kac modules) used as a
//! representation-theoretic cross-check.
//!
//! Everything is exact: no floating point is used anywhere. The crate is
//! `no_std` (with `alloc`); IO, file formats and the command-line front end
//! live in the companion `ghostcentre-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod algebra;
pub mod aut;
pub mod borel;
pub mod error;
pub mod families;
pub mod ghost;
pub mod hc;
pub mod linalg;
pub mod module;
pub mod parse;
pub mod pbw;
pub mod poly;
pub mod prng;
pub mod scalar;

pub use algebra::{BasisVector, LieSuperalgebra, Parity, ValidationReport};
pub use aut::GradedAutomorphism;
pub use borel::BorelChoice;
pub use error::CoreError;
pub use ghost::{CosetGhost, GhostElement};
pub use hc::IwasawaPair;
pub use module::GradedModule;
pub use pbw::{GeneratorOrdering, PbwEngine, UEAElement};
pub use poly::SuperPolynomial;
pub use scalar::{FieldKind, FieldScalar, QPoly, Rat};

/// Convenience result type used throughout the crate.
pub type Result<T> = core::result::Result<T, CoreError>;
