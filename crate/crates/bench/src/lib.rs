//! Shared fixtures for the criterion benchmarks.

use apostol_kit::{Family, GridSpec, Scalar};

/// A grid small enough to run many iterations per second.
pub fn small_grid() -> GridSpec {
    GridSpec {
        families: vec![Family::Bernoulli, Family::Genocchi],
        alpha_max: 1,
        n_max: 2,
        m_max: 2,
        p_max: None,
        s_max: 4,
        lambdas: vec![Scalar::one(), Scalar::from(2)],
        shifts: vec!["1/3".parse().expect("literal")],
        rhos: vec![Scalar::i()],
    }
}

pub fn lambda_half() -> Scalar {
    "1/2".parse().expect("literal")
}
