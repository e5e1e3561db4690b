use serde::{Deserialize, Serialize};

use crate::apostol::Family;
use crate::exactnum::Scalar;
use crate::poly::Poly;

/// Every input that determined a single identity check.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    pub identity: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<Family>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<Scalar>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub y: Option<Scalar>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rho: Option<Scalar>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub extra: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub j_max: Option<usize>,
}

impl Params {
    pub fn new(identity: impl Into<String>) -> Self {
        Params {
            identity: identity.into(),
            ..Params::default()
        }
    }
}

/// The intermediate expression of a two-step chain `lhs = middle = rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Chain {
    pub middle: Poly,
    pub lhs_minus_middle: Poly,
    pub middle_minus_rhs: Poly,
}

/// Both sides of an identity as exact polynomials and their difference.
///
/// `holds` is true exactly when every residual is the zero polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub params: Params,
    pub lhs: Poly,
    pub rhs: Poly,
    pub residual: Poly,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chain: Option<Chain>,
    pub holds: bool,
}

impl IdentityReport {
    pub fn new(params: Params, lhs: Poly, rhs: Poly) -> Self {
        let residual = &lhs - &rhs;
        let holds = residual.is_zero();
        IdentityReport {
            params,
            lhs,
            rhs,
            residual,
            chain: None,
            holds,
        }
    }

    pub fn chained(params: Params, lhs: Poly, middle: Poly, rhs: Poly) -> Self {
        let mut report = IdentityReport::new(params, lhs, rhs);
        let chain = Chain {
            lhs_minus_middle: &report.lhs - &middle,
            middle_minus_rhs: &middle - &report.rhs,
            middle,
        };
        report.holds =
            report.residual.is_zero() && chain.lhs_minus_middle.is_zero() && chain.middle_minus_rhs.is_zero();
        report.chain = Some(chain);
        report
    }
}
