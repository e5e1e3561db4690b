use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{Rational, Scalar};

pub fn factorial(n: u64) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    // each partial product is itself a binomial coefficient, so the division is exact
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// `sum_{j = lo..=k} C(k, j) a_j b_{k-j}`.
///
/// Over Q the sum is accumulated on a common denominator and reduced once,
/// which is much cheaper than normalizing after every term.
pub fn binomial_convolution(k: usize, lo: usize, a: &[Scalar], b: &[Scalar]) -> Scalar {
    let terms = (lo..=k).map(|j| (&a[j], &b[k - j]));
    let rational: Option<Vec<(&Rational, &Rational)>> = terms
        .clone()
        .map(|(x, y)| Some((x.as_rational()?, y.as_rational()?)))
        .collect();
    let mut c = binomial(k as u64, lo as i64);
    let Some(pairs) = rational else {
        let mut acc = Scalar::zero();
        for (j, (x, y)) in (lo..).zip(terms) {
            acc = acc + &Scalar::from(c.clone()) * &(x * y);
            c = c * (k - j) / (j + 1);
        }
        return acc;
    };
    let (mut num, mut den) = (BigInt::zero(), BigInt::one());
    for (j, (x, y)) in (lo..).zip(pairs) {
        if !x.is_zero() && !y.is_zero() {
            let n = &c * x.numer() * y.numer();
            let d = x.denom() * y.denom();
            let g = den.gcd(&d);
            num = num * (&d / &g) + n * (&den / &g);
            den = den / &g * d;
        }
        c = c * (k - j) / (j + 1);
    }
    Scalar::from(Rational::new(num, den).expect("product of nonzero denominators"))
}

/// Rising factorial `(a)_j = a (a+1) ... (a+j-1)`, with `(a)_0 = 1`.
pub fn pochhammer(a: &Scalar, j: u64) -> Scalar {
    let mut acc = Scalar::one();
    let mut term = a.clone();
    for _ in 0..j {
        acc = &acc * &term;
        term = &term + &Scalar::one();
    }
    acc
}

/// `1/n!`, and exactly zero for negative `n`.
pub fn reciprocal_factorial(n: i64) -> Rational {
    if n < 0 {
        return Rational::zero();
    }
    Rational::new(1, factorial(n as u64)).expect("factorials are nonzero")
}
