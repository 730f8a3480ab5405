//! Exact-arithmetic geometry of star points on smooth projective hypersurfaces.
//!
//! A *star point* of a degree-`d` hypersurface `X ⊂ P^N` is a smooth point
//! `P` such that the intersection of the tangent hyperplane `T_P(X)` with
//! `X` has multiplicity `d` at `P` — equivalently, the tangent hyperplane
//! section is a cone with vertex `P`.  This crate provides the exact
//! arithmetic (rationals, cyclotomic fields, sparse multivariate
//! polynomials, fraction-free linear algebra) needed to test that property,
//! to construct hypersurfaces with prescribed star-point configurations,
//! and to classify those configurations.
//!
//! The crate is `no_std` (it only needs `alloc`), so the exact kernels can
//! be embedded anywhere; IO, parsing and reporting live in the companion
//! CLI crate.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod algebra;
pub mod classify;
pub mod configspace;
pub mod error;
pub mod geometry;
pub mod rng;
pub mod samples;
pub mod starpoint;

pub use error::Error;

/// Convenient result alias used across the crate.
pub type Result<T> = core::result::Result<T, Error>;
