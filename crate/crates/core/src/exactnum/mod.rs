//! Exact field scalars over Q and Q(i), plus the combinatorial integers
//! (factorials, binomials, rising factorials) that the identities are built from.

mod combinatorics;
mod gaussian;
mod rational;
mod scalar;

pub use combinatorics::{binomial, binomial_convolution, factorial, pochhammer, reciprocal_factorial};
pub use gaussian::GaussianRational;
pub use rational::Rational;
pub use scalar::Scalar;

pub use num_bigint::BigInt;
