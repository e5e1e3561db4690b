//! Exact computation of Apostol-Bernoulli, Apostol-Euler and Apostol-Genocchi
//! polynomials of higher order, the Padé approximants to `e^t`, and exact
//! verifiers for the recurrence and lacunary identities linking them.
//!
//! Everything is computed over Q or Q(i); identities are checked as
//! polynomial identities in `x` with zero tolerance.

pub mod apostol;
pub mod error;
pub mod exactnum;
pub mod grid;
pub mod identities;
pub mod pade;
pub mod poly;
pub mod report;
pub mod series;

pub use apostol::{batch_numbers, batch_polynomials, number, phi_series, polynomial, Family, PolySpec};
pub use error::{Error, Result};
pub use exactnum::{binomial, factorial, pochhammer, reciprocal_factorial, BigInt, GaussianRational, Rational, Scalar};
pub use grid::{run_grid, run_grid_with, GridEntry, GridOutcome, GridSpec, RunOptions, Suite, Summary};
pub use pade::PadeData;
pub use poly::Poly;
pub use report::{Chain, IdentityReport, Params};
pub use series::Series;
