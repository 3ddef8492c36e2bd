//! Finite-group representation theory at desk scale.
//!
//! The crate builds small finite groups as explicit multiplication tables,
//! computes their character tables and Plancherel distributions, and studies
//! the restriction statistic
//!
//! ```text
//! X_H = <Res_H chi_rho, 1>_H / d_rho
//! ```
//!
//! for a subgroup `H` of a direct power `K^n` and a Plancherel-random
//! tensor-product irrep `rho`. `X_H` is the dimension fraction of `rho` fixed
//! pointwise by `H`; whenever it is positive, the average of `rho` over `H`
//! (and hence over any generating set of `H`) is a projection of operator
//! norm 1. The library verifies the exact moment identities E[X_H] = 1/|H|
//! and the class-overlap variance formula, the Chebyshev tail bound, the
//! bucket-compression subgroup-size bound, and cross-checks everything
//! spectrally with explicit unitary irrep matrices.
//!
//! Modules:
//! - [`group`]: multiplication tables, conjugacy classes, subgroup closure.
//! - [`chars`]: character tables, Plancherel measure, restriction
//!   multiplicities.
//! - [`product`]: direct powers `K^n` without materializing them — bucket
//!   compression, compressed closures, exact `X_H`, moment and tail bounds.
//! - [`reps`]: explicit unitary irrep matrices, fixed-space dimensions, and
//!   operator norms of generator averages via implicit Kronecker products.
//! - [`experiments`]: seeded, reproducible Monte Carlo drivers with
//!   machine-readable reports.

pub mod chars;
pub mod error;
pub mod experiments;
pub mod group;
pub mod product;
pub mod reps;

pub use error::Error;
