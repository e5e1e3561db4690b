//! The `[n, m]` Padé approximant `P/Q` to `e^t` in closed form, with the
//! remainder coefficients of `e^t Q - P`.

use num_bigint::BigInt;

use crate::exactnum::{binomial, factorial, Rational, Scalar};
use crate::poly::Poly;
use crate::report::{IdentityReport, Params};
use crate::series::Series;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PadeData {
    pub n: usize,
    pub m: usize,
    /// `C(n, j) (n+m-j)!` for `j = 0..=n`.
    pub numer: Vec<BigInt>,
    /// `(-1)^j C(m, j) (n+m-j)!` for `j = 0..=m`.
    pub denom: Vec<BigInt>,
}

impl PadeData {
    pub fn build(n: usize, m: usize) -> Self {
        let numer = (0..=n)
            .map(|j| binomial(n as u64, j as i64) * factorial((n + m - j) as u64))
            .collect();
        let denom = (0..=m)
            .map(|j| {
                let v = binomial(m as u64, j as i64) * factorial((n + m - j) as u64);
                if j % 2 == 1 {
                    -v
                } else {
                    v
                }
            })
            .collect();
        PadeData { n, m, numer, denom }
    }

    /// `gamma_j = (-1)^m n! (m+j)! / ((m+n+1+j)! j!)`.
    pub fn gamma(&self, j: usize) -> Rational {
        let (n, m) = (self.n as u64, self.m as u64);
        let j = j as u64;
        let num = factorial(n) * factorial(m + j);
        let den = factorial(m + n + 1 + j) * factorial(j);
        let g = Rational::new(num, den).expect("factorials are nonzero");
        if self.m % 2 == 1 {
            -g
        } else {
            g
        }
    }

    /// `gamma_0 ..= gamma_len`.
    pub fn remainder_coeffs(&self, len: usize) -> Vec<Rational> {
        (0..=len).map(|j| self.gamma(j)).collect()
    }

    /// `P` as a polynomial (in the formal variable `t`).
    pub fn numerator_poly(&self) -> Poly {
        Poly::new(self.numer.iter().cloned().map(Scalar::from).collect())
    }

    pub fn denominator_poly(&self) -> Poly {
        Poly::new(self.denom.iter().cloned().map(Scalar::from).collect())
    }

    /// Compares `e^t Q - P` against `sum_{j<=extra} gamma_j t^{m+n+1+j}`
    /// through `t^{m+n+1+extra}`.
    pub fn contact_check(&self, extra: usize) -> IdentityReport {
        let order = self.n + self.m + 1 + extra;
        let q = Series::from_scalars(order, self.denom.iter().cloned().map(Scalar::from));
        let p = Series::from_scalars(order, self.numer.iter().cloned().map(Scalar::from));
        let lhs = Series::exp_scaled(order, &Scalar::one()).mul(&q).sub(&p);
        let lhs = Poly::new(lhs.coeffs().iter().map(|c| c.coeff(0)).collect());

        let mut rhs = vec![Scalar::zero(); self.n + self.m + 1];
        rhs.extend(self.remainder_coeffs(extra).into_iter().map(Scalar::from));
        let mut params = Params::new("pade_contact");
        params.n = Some(self.n);
        params.m = Some(self.m);
        params.extra = Some(extra);
        IdentityReport::new(params, lhs, Poly::new(rhs))
    }
}
