//! Apostol-Bernoulli, -Euler and -Genocchi polynomials of nonnegative integer
//! order, read off the truncated expansion of their generating functions
//! `Phi(t, lambda, alpha) e^{x t} = sum_k Lambda_k(x) t^k / k!`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{binomial, binomial_convolution, reciprocal_factorial, Scalar};
use crate::poly::Poly;
use crate::series::Series;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// `(t / (lambda e^t - 1))^alpha`
    Bernoulli,
    /// `(2 / (lambda e^t + 1))^alpha`
    Euler,
    /// `(2 t / (lambda e^t + 1))^alpha`
    Genocchi,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::Bernoulli, Family::Euler, Family::Genocchi];

    pub fn name(self) -> &'static str {
        match self {
            Family::Bernoulli => "bernoulli",
            Family::Euler => "euler",
            Family::Genocchi => "genocchi",
        }
    }

    /// Euler has no formal expansion at `lambda = -1`; every other value works.
    pub fn check_lambda(self, lambda: &Scalar) -> Result<()> {
        if self == Family::Euler && *lambda == Scalar::from(-1) {
            return Err(Error::InvalidLambda {
                family: self,
                lambda: lambda.to_string(),
            });
        }
        Ok(())
    }

    /// The value of `lambda` at which the kernel's constant term survives
    /// (Bernoulli at 1, Genocchi at -1). Elsewhere the kernel is `O(t)`.
    fn unit_branch(self, lambda: &Scalar) -> bool {
        match self {
            Family::Bernoulli => lambda.is_one(),
            Family::Genocchi => *lambda == Scalar::from(-1),
            Family::Euler => true,
        }
    }

    /// Degree of `Lambda_k^(alpha)(x; lambda)`, or `None` for the zero polynomial.
    pub fn expected_degree(self, k: usize, alpha: u32, lambda: &Scalar) -> Option<usize> {
        if self.unit_branch(lambda) {
            Some(k)
        } else {
            k.checked_sub(alpha as usize)
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bernoulli" => Ok(Family::Bernoulli),
            "euler" => Ok(Family::Euler),
            "genocchi" => Ok(Family::Genocchi),
            _ => Err(Error::Parse {
                kind: "family",
                input: s.to_string(),
            }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolySpec {
    pub family: Family,
    pub k: usize,
    pub alpha: u32,
    pub lambda: Scalar,
}

// Exponential-coefficient arithmetic: a sequence `a` stands for
// `sum a_j t^j / j!`. Working with `a_j` rather than `a_j / j!` keeps the
// rationals small, which matters for large `k`.

fn egf_mul(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    (0..a.len().min(b.len()))
        .map(|k| binomial_convolution(k, 0, a, b))
        .collect()
}

fn egf_inverse(f: &[Scalar]) -> Result<Vec<Scalar>> {
    let g0 = f[0].inv().map_err(|_| Error::NotAUnit)?;
    let neg_g0 = -&g0;
    let mut g = Vec::with_capacity(f.len());
    g.push(g0);
    for k in 1..f.len() {
        let acc = binomial_convolution(k, 1, f, &g);
        g.push(&acc * &neg_g0);
    }
    Ok(g)
}

fn egf_pow(a: &[Scalar], exp: u32) -> Vec<Scalar> {
    let mut acc: Vec<Scalar> = (0..a.len())
        .map(|k| if k == 0 { Scalar::one() } else { Scalar::zero() })
        .collect();
    let mut base = a.to_vec();
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            acc = egf_mul(&acc, &base);
        }
        e >>= 1;
        if e > 0 {
            base = egf_mul(&base, &base);
        }
    }
    acc
}

/// Multiplication by `t`: `(t a)_k = k a_{k-1}`.
fn egf_mul_t(a: &[Scalar]) -> Vec<Scalar> {
    (0..a.len())
        .map(|k| {
            if k == 0 {
                Scalar::zero()
            } else {
                &Scalar::from(k as i64) * &a[k - 1]
            }
        })
        .collect()
}

fn egf_scale(a: Vec<Scalar>, c: i64) -> Vec<Scalar> {
    let c = Scalar::from(c);
    a.into_iter().map(|v| &v * &c).collect()
}

/// `sign (e^t - 1)/t`, whose exponential coefficients are `sign/(j+1)`.
fn exp_quotient(order: usize, sign: i64) -> Result<Vec<Scalar>> {
    (0..=order).map(|j| Scalar::from_ratio(sign, j as i64 + 1)).collect()
}

/// `lambda e^t + c`.
fn affine_exp(order: usize, lambda: &Scalar, c: i64) -> Vec<Scalar> {
    (0..=order)
        .map(|j| {
            if j == 0 {
                lambda + &Scalar::from(c)
            } else {
                lambda.clone()
            }
        })
        .collect()
}

/// The order-one kernel through `t^order`, in exponential coefficients.
fn kernel(family: Family, lambda: &Scalar, order: usize) -> Result<Vec<Scalar>> {
    family.check_lambda(lambda)?;
    let seq = match (family, family.unit_branch(lambda)) {
        (Family::Bernoulli, true) => egf_inverse(&exp_quotient(order, 1)?)?,
        (Family::Bernoulli, false) => egf_mul_t(&egf_inverse(&affine_exp(order, lambda, -1))?),
        (Family::Euler, _) => egf_scale(egf_inverse(&affine_exp(order, lambda, 1))?, 2),
        // 2t/(1 - e^t) = 2 / (-(e^t - 1)/t)
        (Family::Genocchi, true) => egf_scale(egf_inverse(&exp_quotient(order, -1)?)?, 2),
        (Family::Genocchi, false) => egf_scale(egf_mul_t(&egf_inverse(&affine_exp(order, lambda, 1))?), 2),
    };
    Ok(seq)
}

/// `a_j = j! [t^j] Phi` for `j = 0..=k_max`, the values at `x = 0`.
fn values_at_zero(family: Family, alpha: u32, lambda: &Scalar, k_max: usize) -> Result<Vec<Scalar>> {
    family.check_lambda(lambda)?;
    if alpha == 0 {
        return Ok((0..=k_max)
            .map(|k| if k == 0 { Scalar::one() } else { Scalar::zero() })
            .collect());
    }
    Ok(egf_pow(&kernel(family, lambda, k_max)?, alpha))
}

/// Truncated expansion of `Phi(t, lambda, alpha)`; coefficients are constants.
pub fn phi_series(family: Family, alpha: u32, lambda: &Scalar, order: usize) -> Result<Series> {
    let a = values_at_zero(family, alpha, lambda, order)?;
    Ok(Series::from_scalars(
        order,
        a.iter()
            .enumerate()
            .map(|(j, v)| v * &Scalar::from(reciprocal_factorial(j as i64))),
    ))
}

/// `Lambda_k(x) = sum_i C(k, i) a_{k-i} x^i`, the Cauchy product with `e^{x t}`.
fn row(k: usize, a: &[Scalar]) -> Poly {
    Poly::new(
        (0..=k)
            .map(|i| &a[k - i] * &Scalar::from(binomial(k as u64, i as i64)))
            .collect(),
    )
}

/// `Lambda_k^(alpha)(x; lambda) = k! [t^k] Phi e^{x t}`.
pub fn polynomial(spec: &PolySpec) -> Result<Poly> {
    let a = values_at_zero(spec.family, spec.alpha, &spec.lambda, spec.k)?;
    Ok(row(spec.k, &a))
}

/// `Lambda_0 ..= Lambda_{k_max}` from a single series expansion.
pub fn batch_polynomials(family: Family, alpha: u32, lambda: &Scalar, k_max: usize) -> Result<Vec<Poly>> {
    let a = values_at_zero(family, alpha, lambda, k_max)?;
    Ok((0..=k_max).map(|k| row(k, &a)).collect())
}

/// Apostol numbers of order one: `B_k(0; lambda)`, `2^k E_k(1/2; lambda)`, `G_k(0; lambda)`.
pub fn number(family: Family, k: usize, lambda: &Scalar) -> Result<Scalar> {
    let poly = polynomial(&PolySpec {
        family,
        k,
        alpha: 1,
        lambda: lambda.clone(),
    })?;
    Ok(number_from_poly(family, k, &poly))
}

/// Numbers of order `alpha` for `k = 0..=k_max`, normalized as in [`number`].
pub fn batch_numbers(family: Family, alpha: u32, lambda: &Scalar, k_max: usize) -> Result<Vec<Scalar>> {
    Ok(batch_polynomials(family, alpha, lambda, k_max)?
        .iter()
        .enumerate()
        .map(|(k, poly)| number_from_poly(family, k, poly))
        .collect())
}

fn number_from_poly(family: Family, k: usize, poly: &Poly) -> Scalar {
    match family {
        Family::Bernoulli | Family::Genocchi => poly.eval(&Scalar::zero()),
        Family::Euler => {
            let half = Scalar::from_ratio(1, 2).expect("nonzero denominator");
            &Scalar::from(2).powu(k as u32) * &poly.eval(&half)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::factorial;

    fn s(v: &str) -> Scalar {
        v.parse().unwrap()
    }

    fn consts(vals: &[&str]) -> Vec<Poly> {
        vals.iter().map(|v| Poly::constant(s(v))).collect()
    }

    fn p(cs: &[&str]) -> Poly {
        Poly::new(cs.iter().map(|c| s(c)).collect())
    }

    fn spec(family: Family, k: usize, alpha: u32, lambda: &str) -> PolySpec {
        PolySpec {
            family,
            k,
            alpha,
            lambda: s(lambda),
        }
    }

    /// The kernels built directly as ordinary power series.
    fn kernel_by_series(family: Family, lambda: &Scalar, order: usize) -> Series {
        let exp = Series::exp_scaled(order, &Scalar::one());
        let two = Scalar::from(2);
        let affine = |c: i64| exp.scale(lambda).add(&Series::one(order).scale(&Scalar::from(c)));
        match (family, family.unit_branch(lambda)) {
            // divide by t: shift down one place, computing one extra term first
            (Family::Bernoulli, true) | (Family::Genocchi, true) => {
                let sign = if family == Family::Bernoulli { 1 } else { -1 };
                let wide = Series::exp_scaled(order + 1, &Scalar::one())
                    .sub(&Series::one(order + 1))
                    .scale(&Scalar::from(sign));
                let divided = Series::new(order, wide.coeffs()[1..].to_vec()).inverse().unwrap();
                if family == Family::Genocchi {
                    divided.scale(&two)
                } else {
                    divided
                }
            }
            (Family::Bernoulli, false) => affine(-1).inverse().unwrap().mul_t(),
            (Family::Euler, _) => affine(1).inverse().unwrap().scale(&two),
            (Family::Genocchi, false) => affine(1).inverse().unwrap().mul_t().scale(&two),
        }
    }

    #[test]
    fn matches_ordinary_series_construction() {
        for family in Family::ALL {
            for lambda in ["1", "-1", "2", "-3/5", "1+i"] {
                let l = s(lambda);
                if family.check_lambda(&l).is_err() {
                    continue;
                }
                let base = kernel_by_series(family, &l, 12);
                for alpha in 0..4 {
                    let phi = phi_series(family, alpha, &l, 12).unwrap();
                    assert_eq!(phi, base.pow(alpha), "{family} {lambda} a={alpha}");
                    let direct = phi.mul(&Series::exp_xt(12));
                    let batch = batch_polynomials(family, alpha, &l, 12).unwrap();
                    for (k, poly) in batch.iter().enumerate() {
                        let scaled = direct.coeff(k).scale(&Scalar::from(factorial(k as u64)));
                        assert_eq!(poly, &scaled, "{family} {lambda} a={alpha} k={k}");
                    }
                }
            }
        }
    }

    #[test]
    fn order_zero_is_one() {
        for family in Family::ALL {
            for lambda in ["1", "3", "-1/2", "1+i"] {
                assert_eq!(phi_series(family, 0, &s(lambda), 4).unwrap(), Series::one(4));
            }
        }
    }

    #[test]
    fn classical_kernels() {
        let b = phi_series(Family::Bernoulli, 1, &s("1"), 4).unwrap();
        assert_eq!(b.coeffs(), consts(&["1", "-1/2", "1/12", "0", "-1/720"]).as_slice());
        let e = phi_series(Family::Euler, 1, &s("1"), 3).unwrap();
        assert_eq!(e.coeffs(), consts(&["1", "-1/2", "0", "1/24"]).as_slice());
    }

    #[test]
    fn polynomial_examples() {
        for family in Family::ALL {
            let x5 = polynomial(&spec(family, 5, 0, "2/3")).unwrap();
            assert_eq!(x5, Poly::monomial(Scalar::one(), 5));
        }
        assert_eq!(
            polynomial(&spec(Family::Bernoulli, 1, 1, "1")).unwrap(),
            p(&["-1/2", "1"])
        );
        assert_eq!(polynomial(&spec(Family::Bernoulli, 1, 1, "2")).unwrap(), p(&["1"]));
        assert_eq!(polynomial(&spec(Family::Euler, 0, 1, "3")).unwrap(), p(&["1/2"]));
        for lambda in ["1", "2", "-1", "1/3"] {
            assert!(polynomial(&spec(Family::Genocchi, 0, 1, lambda)).unwrap().is_zero() || lambda == "-1");
        }
    }

    #[test]
    fn euler_rejects_minus_one() {
        let err = polynomial(&spec(Family::Euler, 2, 1, "-1")).unwrap_err();
        assert_eq!(err.to_string(), "lambda=-1 invalid for euler");
        assert!(phi_series(Family::Euler, 0, &s("-1"), 2).is_err());
    }

    #[test]
    fn batches_match_single_calls() {
        assert_eq!(
            batch_polynomials(Family::Euler, 0, &s("5"), 0).unwrap(),
            vec![Poly::one()]
        );
        let b = batch_polynomials(Family::Bernoulli, 1, &s("1"), 4).unwrap();
        assert_eq!(b[0], Poly::one());
        assert_eq!(b[1], p(&["-1/2", "1"]));
        assert_eq!(b[2], p(&["1/6", "-1", "1"]));
        let g = batch_polynomials(Family::Genocchi, 1, &s("1"), 2).unwrap();
        assert_eq!(g, vec![Poly::zero(), Poly::one(), p(&["-1", "2"])]);
        for family in Family::ALL {
            for lambda in ["1", "-1", "1/2", "2+1*i"] {
                let Ok(batch) = batch_polynomials(family, 2, &s(lambda), 6) else {
                    continue;
                };
                for (k, poly) in batch.iter().enumerate() {
                    assert_eq!(poly, &polynomial(&spec(family, k, 2, lambda)).unwrap());
                }
            }
        }
    }

    #[test]
    fn numbers() {
        assert_eq!(number(Family::Bernoulli, 2, &s("1")).unwrap(), s("1/6"));
        assert_eq!(number(Family::Euler, 0, &s("1")).unwrap(), s("1"));
        assert_eq!(number(Family::Genocchi, 1, &s("1")).unwrap(), s("1"));
        // classical Euler numbers 1, 0, -1, 0, 5
        let euler: Vec<Scalar> = (0..5).map(|k| number(Family::Euler, k, &s("1")).unwrap()).collect();
        assert_eq!(euler, ["1", "0", "-1", "0", "5"].map(s).to_vec());
    }

    #[test]
    fn degrees() {
        for family in Family::ALL {
            for lambda in ["1", "-1", "2", "1/2", "1+i"] {
                for alpha in 0..4 {
                    let Ok(batch) = batch_polynomials(family, alpha, &s(lambda), 20) else {
                        continue;
                    };
                    for (k, poly) in batch.iter().enumerate() {
                        assert_eq!(
                            poly.degree(),
                            family.expected_degree(k, alpha, &s(lambda)),
                            "{family} {lambda} a={alpha} k={k}"
                        );
                    }
                }
            }
        }
    }
}
