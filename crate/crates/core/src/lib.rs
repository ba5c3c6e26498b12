//! Exact computations behind the classification of finite symmetries of
//! K3-type 4-manifolds: cyclotomic arithmetic for index-theorem terms, the E8
//! lattice and its signed-permutation subgroup, integral representations of
//! cyclic groups, the Kummer-surface intersection pairing, and the census
//! solvers that combine them.

pub mod census;
pub mod cyclotomic;
pub mod decimal;
pub mod e8;
pub mod index;
pub mod kummer;
pub mod matrix;
pub mod poly;
pub mod reps;
pub mod scalar;
pub mod sgnperm;
pub mod zlattice;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Exact rationals.
pub type Rational = BigRational;
/// Exact cyclotomic numbers.
pub type CycNum = cyclotomic::Cyc<Rational>;
/// Cyclotomic numbers with floating-point coordinates.
pub type CycF64 = cyclotomic::Cyc<f64>;
/// Rational polynomials.
pub type QPoly = poly::Poly<Rational>;
/// Integer polynomials.
pub type ZPoly = poly::Poly<i64>;
/// Rational matrices.
pub type QMatrix = matrix::Matrix<Rational>;
