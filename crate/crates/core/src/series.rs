//! Truncated formal power series in `t` whose coefficients are polynomials in `x`.

use crate::error::{Error, Result};
use crate::exactnum::{reciprocal_factorial, Scalar};
use crate::poly::Poly;

/// Terms `t^0 ..= t^order` of a formal power series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    order: usize,
    coeffs: Vec<Poly>,
}

impl Series {
    /// Pads with zeros or truncates so exactly `order + 1` coefficients remain.
    pub fn new(order: usize, mut coeffs: Vec<Poly>) -> Self {
        coeffs.resize(order + 1, Poly::zero());
        Series { order, coeffs }
    }

    pub fn from_scalars(order: usize, coeffs: impl IntoIterator<Item = Scalar>) -> Self {
        Series::new(order, coeffs.into_iter().take(order + 1).map(Poly::constant).collect())
    }

    pub fn one(order: usize) -> Self {
        Series::from_scalars(order, [Scalar::one()])
    }

    /// `e^{c t}` with scalar coefficients `c^k / k!`.
    pub fn exp_scaled(order: usize, c: &Scalar) -> Self {
        Series::from_scalars(
            order,
            (0..=order).map(|k| &c.powu(k as u32) * &Scalar::from(reciprocal_factorial(k as i64))),
        )
    }

    /// `e^{x t}`, whose k-th coefficient is the polynomial `x^k / k!`.
    pub fn exp_xt(order: usize) -> Self {
        Series::new(
            order,
            (0..=order)
                .map(|k| Poly::monomial(Scalar::from(reciprocal_factorial(k as i64)), k))
                .collect(),
        )
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &Poly {
        &self.coeffs[k]
    }

    pub fn truncate(&self, order: usize) -> Series {
        Series::new(order.min(self.order), self.coeffs[..=order.min(self.order)].to_vec())
    }

    pub fn scale(&self, c: &Scalar) -> Series {
        Series::new(self.order, self.coeffs.iter().map(|p| p.scale(c)).collect())
    }

    pub fn add(&self, other: &Series) -> Series {
        let order = self.order.min(other.order);
        Series::new(order, (0..=order).map(|k| &self.coeffs[k] + &other.coeffs[k]).collect())
    }

    pub fn sub(&self, other: &Series) -> Series {
        let order = self.order.min(other.order);
        Series::new(order, (0..=order).map(|k| &self.coeffs[k] - &other.coeffs[k]).collect())
    }

    /// Multiplication by `t`, dropping the term pushed past the order.
    pub fn mul_t(&self) -> Series {
        let mut coeffs = Vec::with_capacity(self.order + 1);
        coeffs.push(Poly::zero());
        coeffs.extend(self.coeffs[..self.order].iter().cloned());
        Series::new(self.order, coeffs)
    }

    /// Coefficient `k` of the Cauchy product, without forming the whole product.
    pub fn product_coeff(&self, other: &Series, k: usize) -> Poly {
        (0..=k).fold(Poly::zero(), |acc, j| &acc + &(&self.coeffs[j] * &other.coeffs[k - j]))
    }

    /// Cauchy product truncated to the smaller order.
    pub fn mul(&self, other: &Series) -> Series {
        let order = self.order.min(other.order);
        Series::new(order, (0..=order).map(|k| self.product_coeff(other, k)).collect())
    }

    /// Multiplicative inverse; the constant coefficient must be a nonzero scalar.
    pub fn inverse(&self) -> Result<Series> {
        let a0 = &self.coeffs[0];
        if a0.degree() != Some(0) {
            return Err(Error::NotAUnit);
        }
        let inv0 = a0.coeff(0).inv().map_err(|_| Error::NotAUnit)?;
        let neg_inv0 = -&inv0;
        let mut out: Vec<Poly> = Vec::with_capacity(self.order + 1);
        out.push(Poly::constant(inv0));
        for k in 1..=self.order {
            let acc = (1..=k).fold(Poly::zero(), |acc, j| &acc + &(&self.coeffs[j] * &out[k - j]));
            out.push(acc.scale(&neg_inv0));
        }
        Ok(Series::new(self.order, out))
    }

    /// Power by repeated squaring; `A^0 = 1`.
    pub fn pow(&self, exp: u32) -> Series {
        let mut acc = Series::one(self.order);
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{binomial, factorial};

    fn s(v: &str) -> Scalar {
        v.parse().unwrap()
    }

    fn scalars(order: usize, vals: &[i64]) -> Series {
        Series::from_scalars(order, vals.iter().map(|&v| Scalar::from(v)))
    }

    #[test]
    fn identity_and_difference_of_squares() {
        let a = Series::exp_xt(5);
        assert_eq!(a.mul(&Series::one(5)), a);
        let prod = scalars(2, &[1, 1]).mul(&scalars(2, &[1, -1]));
        assert_eq!(prod, scalars(2, &[1, 0, -1]));
    }

    #[test]
    fn product_of_exponentials_follows_binomial_theorem() {
        // e^{x t} * e^{y t} with x -> x, y -> 2/3: coefficient k is (x + 2/3)^k / k!
        let y = s("2/3");
        let prod = Series::exp_xt(6).mul(&Series::exp_scaled(6, &y));
        for k in 0..=6usize {
            let mut expected = Poly::zero();
            for j in 0..=k {
                let w = Scalar::from(binomial(k as u64, j as i64)) * y.powu((k - j) as u32);
                expected.add_scaled(&w, &Poly::monomial(Scalar::one(), j));
            }
            let expected = expected.scale(&Scalar::from(reciprocal_factorial(k as i64)));
            assert_eq!(prod.coeff(k), &expected, "k={k}");
        }
    }

    #[test]
    fn geometric_inverse() {
        let inv = scalars(4, &[1, -1]).inverse().unwrap();
        assert_eq!(inv, scalars(4, &[1, 1, 1, 1, 1]));
        assert_eq!(inv.inverse().unwrap(), scalars(4, &[1, -1]));
    }

    #[test]
    fn inverse_of_exponential() {
        let e = Series::exp_scaled(5, &Scalar::one());
        let inv = e.inverse().unwrap();
        for k in 0..=5usize {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            let expected = Scalar::from(sign) * Scalar::from(reciprocal_factorial(k as i64));
            assert_eq!(inv.coeff(k), &Poly::constant(expected));
        }
        assert_eq!(e.mul(&inv), Series::one(5));
    }

    #[test]
    fn non_units_are_rejected() {
        assert_eq!(scalars(3, &[0, 1]).inverse(), Err(Error::NotAUnit));
        let poly_head = Series::new(2, vec![Poly::x()]);
        assert_eq!(poly_head.inverse(), Err(Error::NotAUnit));
    }

    #[test]
    fn powers() {
        let a = scalars(3, &[1, 1]);
        assert_eq!(a.pow(0), Series::one(3));
        assert_eq!(a.pow(1), a);
        assert_eq!(a.pow(3), scalars(3, &[1, 3, 3, 1]));
    }

    #[test]
    fn exp_xt_coefficients() {
        assert_eq!(Series::exp_xt(0).coeffs(), &[Poly::one()]);
        let e2 = Series::exp_xt(2);
        assert_eq!(e2.coeff(1), &Poly::x());
        assert_eq!(e2.coeff(2), &Poly::monomial(s("1/2"), 2));
        let c6 = Series::exp_xt(6).coeff(6).clone();
        assert_eq!(
            c6,
            Poly::monomial(
                Scalar::from(num_bigint::BigInt::from(1))
                    .checked_div(&Scalar::from(factorial(6)))
                    .unwrap(),
                6
            )
        );
    }

    #[test]
    fn mul_t_truncates() {
        assert_eq!(scalars(2, &[1, 2, 3]).mul_t(), scalars(2, &[0, 1, 2]));
    }
}
