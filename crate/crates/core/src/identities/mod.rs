//! One verifier per identity. Each builds the polynomials it needs from the
//! generating-function expansion and reports the exact residual.

pub mod kernels;

use crate::apostol::{batch_polynomials, Family};
use crate::error::{Error, Result};
use crate::exactnum::Scalar;
use crate::poly::Poly;
use crate::report::{IdentityReport, Params};

fn params(identity: &str, family: Family, alpha: u32, lambda: &Scalar) -> Params {
    Params {
        family: Some(family),
        alpha: Some(alpha),
        lambda: Some(lambda.clone()),
        ..Params::new(identity)
    }
}

fn shifted(seq: &[Poly], y: &Scalar) -> Vec<Poly> {
    seq.iter().map(|p| p.shift(y)).collect()
}

fn theorem1_report(
    identity: &str,
    family: Family,
    alpha: u32,
    lambda: &Scalar,
    (n, m, p): (usize, usize, usize),
    y: &Scalar,
) -> Result<IdentityReport> {
    let at_x = batch_polynomials(family, alpha, lambda, p)?;
    let at_xy = shifted(&at_x, y);
    let (lhs, rhs) = kernels::theorem1(&at_x, &at_xy, n, m, p, y);
    let params = Params {
        n: Some(n),
        m: Some(m),
        p: Some(p),
        y: Some(y.clone()),
        ..params(identity, family, alpha, lambda)
    };
    Ok(IdentityReport::new(params, lhs, rhs))
}

/// Padé-weighted addition theorem for `0 <= p <= m + n`.
pub fn verify_theorem1_low(
    family: Family,
    alpha: u32,
    lambda: &Scalar,
    n: usize,
    m: usize,
    p: usize,
    y: &Scalar,
) -> Result<IdentityReport> {
    if p > n + m {
        return Err(Error::Range(format!(
            "theorem1_low needs p <= n+m, got p={p}, n={n}, m={m}"
        )));
    }
    theorem1_report("theorem1_low", family, alpha, lambda, (n, m, p), y)
}

/// Padé-weighted addition theorem with the supplementary sum, `p >= m + n + 1`.
pub fn verify_theorem1_high(
    family: Family,
    alpha: u32,
    lambda: &Scalar,
    n: usize,
    m: usize,
    p: usize,
    y: &Scalar,
) -> Result<IdentityReport> {
    if p <= n + m {
        return Err(Error::Range(format!(
            "theorem1_high needs p > n+m, got p={p}, n={n}, m={m}"
        )));
    }
    theorem1_report("theorem1_high", family, alpha, lambda, (n, m, p), y)
}

/// `sum_k C(p,k) y^k Lambda_{p-k}(x) = Lambda_p(x+y)`.
pub fn verify_addition_formula(
    family: Family,
    alpha: u32,
    lambda: &Scalar,
    p: usize,
    y: &Scalar,
) -> Result<IdentityReport> {
    let at_x = batch_polynomials(family, alpha, lambda, p)?;
    let at_xy = shifted(&at_x, y);
    let (lhs, rhs) = kernels::addition(&at_x, &at_xy, p, y);
    let params = Params {
        p: Some(p),
        y: Some(y.clone()),
        ..params("addition", family, alpha, lambda)
    };
    Ok(IdentityReport::new(params, lhs, rhs))
}

/// `Lambda_p(x) = sum_k C(p,k) (-y)^k Lambda_{p-k}(x+y)`.
pub fn verify_dual_addition(
    family: Family,
    alpha: u32,
    lambda: &Scalar,
    p: usize,
    y: &Scalar,
) -> Result<IdentityReport> {
    let at_x = batch_polynomials(family, alpha, lambda, p)?;
    let at_xy = shifted(&at_x, y);
    let (lhs, rhs) = kernels::dual_addition(&at_x, &at_xy, p, y);
    let params = Params {
        p: Some(p),
        y: Some(y.clone()),
        ..params("dual_addition", family, alpha, lambda)
    };
    Ok(IdentityReport::new(params, lhs, rhs))
}

/// Orders `alpha` and `alpha + 1`, `Lambda_0 ..= Lambda_len` each.
fn consecutive_orders(family: Family, alpha: u32, lambda: &Scalar, len: usize) -> Result<(Vec<Poly>, Vec<Poly>)> {
    Ok((
        batch_polynomials(family, alpha, lambda, len)?,
        batch_polynomials(family, alpha + 1, lambda, len)?,
    ))
}

pub fn verify_theorem2(
    family: Family,
    alpha: u32,
    lambda: &Scalar,
    n: usize,
    m: usize,
    p: usize,
) -> Result<IdentityReport> {
    let (lower, upper) = consecutive_orders(family, alpha, lambda, p)?;
    let (lhs, rhs) = kernels::theorem2(family, &lower, &upper, lambda, n, m, p);
    let params = Params {
        n: Some(n),
        m: Some(m),
        p: Some(p),
        ..params("theorem2", family, alpha, lambda)
    };
    Ok(IdentityReport::new(params, lhs, rhs))
}

pub fn verify_corollary1(family: Family, lambda: &Scalar, n: usize, m: usize) -> Result<IdentityReport> {
    let order_one = batch_polynomials(family, 1, lambda, n + m)?;
    let (lhs, rhs) = kernels::corollary1(family, &order_one, lambda, n, m);
    let params = Params {
        n: Some(n),
        m: Some(m),
        ..params("corollary1", family, 1, lambda)
    };
    Ok(IdentityReport::new(params, lhs, rhs))
}

pub fn verify_corollary2(
    family: Family,
    alpha: u32,
    lambda: &Scalar,
    n: usize,
    m: usize,
    s: usize,
) -> Result<IdentityReport> {
    if s == 0 || s > n + m {
        return Err(Error::Range(format!(
            "corollary2 needs 1 <= s <= n+m, got s={s}, n={n}, m={m}"
        )));
    }
    let (lower, upper) = consecutive_orders(family, alpha, lambda, n + m)?;
    let (lhs, rhs) = kernels::corollary2(family, &lower, &upper, lambda, n, m, s);
    let params = Params {
        n: Some(n),
        m: Some(m),
        s: Some(s),
        ..params("corollary2", family, alpha, lambda)
    };
    Ok(IdentityReport::new(params, lhs, rhs))
}

pub fn verify_remark_r1(family: Family, alpha: u32, lambda: &Scalar, n: usize, m: usize) -> Result<IdentityReport> {
    let (lower, upper) = consecutive_orders(family, alpha, lambda, n + m + 1)?;
    let (lhs, rhs) = kernels::remark_r1(family, &lower, &upper, lambda, n, m);
    let params = Params {
        n: Some(n),
        m: Some(m),
        ..params("remark_r1", family, alpha, lambda)
    };
    Ok(IdentityReport::new(params, lhs, rhs))
}

/// Checks both links of `weighted sum = binomial sum = shifted closed form`.
pub fn verify_theorem3(family: Family, alpha: u32, lambda: &Scalar, p: usize, rho: &Scalar) -> Result<IdentityReport> {
    if *rho == Scalar::from(-1) {
        return Err(Error::InvalidRho);
    }
    let (lower, upper) = consecutive_orders(family, alpha, lambda, p)?;
    let (lhs, middle, rhs) = kernels::theorem3(family, &lower, &upper, lambda, p, rho)?;
    let params = Params {
        p: Some(p),
        rho: Some(rho.clone()),
        ..params("theorem3", family, alpha, lambda)
    };
    Ok(IdentityReport::chained(params, lhs, middle, rhs))
}

pub fn verify_functional_relation(family: Family, alpha: u32, lambda: &Scalar, p: usize) -> Result<IdentityReport> {
    let (lower, upper) = consecutive_orders(family, alpha, lambda, p)?;
    let (lhs, rhs) = kernels::functional(family, &lower, &upper, lambda, p);
    let params = Params {
        p: Some(p),
        ..params("functional", family, alpha, lambda)
    };
    Ok(IdentityReport::new(params, lhs, rhs))
}

/// Gap-4 recurrences; `lambda` is fixed to 1.
pub fn verify_lacunary(family: Family, alpha: u32, p: usize) -> Result<IdentityReport> {
    let one = Scalar::one();
    let (lower, upper) = consecutive_orders(family, alpha, &one, p)?;
    let (lhs, rhs) = kernels::lacunary(family, &lower, &upper, p);
    let params = Params {
        p: Some(p),
        ..params("lacunary", family, alpha, &one)
    };
    Ok(IdentityReport::new(params, lhs, rhs))
}

/// Direct Q(i) values of `c_0 ..= c_{j_max}` against their residue-class
/// closed forms; index `j` of each side is `c_j`.
pub fn verify_cj_table(j_max: usize) -> IdentityReport {
    let lhs = Poly::new((0..=j_max).map(kernels::cj_direct).collect());
    let rhs = Poly::new((0..=j_max).map(kernels::cj_closed_form).collect());
    let params = Params {
        j_max: Some(j_max),
        ..Params::new("cj_table")
    };
    IdentityReport::new(params, lhs, rhs)
}
