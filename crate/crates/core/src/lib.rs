//! Exact-arithmetic toolkit for lattice geometry driven by an integer Gram form.
//!
//! Everything here is computed over exact rationals: closest-lattice-vector
//! ("station") sets, Delaunay cells and their dual Voronoi faces, the fan
//! obtained by coning the Voronoi tiling at height one, central extensions of
//! `T x Z^r` with loop rotation, tame and Contou-Carrere symbols via Laurent
//! factorization, and semigroup saturation checks. There are no floating-point
//! numbers and no tolerances anywhere in this crate.
//!
//! The scalar type is pluggable: all core types are generic over an integer
//! scalar `I` (see [`Scalar`]) and rationals are `Ratio<I>`. The crate-root
//! aliases [`Int`] and [`Rat`] pin the default arbitrary-precision
//! instantiation used by the CLI and the test suites.

pub mod exprlang;
pub mod extension;
pub mod fan;
pub mod lattice;
mod lp;
mod matrix;
pub mod rng;
pub mod scalar;
pub mod semigroup;
pub mod suites;
pub mod symbols;
pub mod tilings;

pub use scalar::Scalar;

/// Default integer scalar: arbitrary precision.
pub type Int = num_bigint::BigInt;
/// Default exact rational scalar.
pub type Rat = num_rational::Ratio<Int>;
