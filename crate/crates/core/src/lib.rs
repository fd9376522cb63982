//! Exact evaluation and geometry of the `det^{S^2}` map.
//!
//! `det^{S^2}` is the multilinear form on six vectors of a two-dimensional
//! space, indexed by the pairs `{i, j}` of `{1, 2, 3, 4}`, that vanishes
//! whenever the three vectors on some triangle `{i,j}, {i,k}, {j,k}` agree.
//! It vanishes on a configuration exactly when the six vectors are the
//! directions of the sides and diagonals of a (possibly degenerate)
//! quadrilateral.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

mod error;

pub mod config;
pub mod det_s2;
pub mod matrix;
pub mod realizability;
pub mod scalar;
pub mod symmetry;
pub mod universality;

pub use config::{Configuration, Pair, Triple, Vec2};
pub use det_s2::{det_s2, det_s2_direct, det_s2_inner_product, det_s2_via_matrix, has_equal_triple};
pub use error::Error;
pub use matrix::{det_bareiss, rank_and_nullspace, Matrix, RankNullspace};
pub use realizability::{
    build_system_matrix, classify, config_from_angles, config_from_points, reconstruct_quadrilateral,
    LambdaVector, PointQuad, RealizabilityResult,
};
pub use scalar::{normalize_rational, Rational, Scalar};
pub use symmetry::{act_linear_map, act_permutation, permutation_sign, LinearMap2, Permutation};
pub use universality::{
    build_constraint_matrix, canonical_coefficients, solve_uniqueness, CoefficientVector, Uniqueness,
};
