use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Result;

use super::{GaussianRational, Rational};

/// A field element of Q or Q(i).
///
/// Values are kept normalized: a Gaussian result with zero imaginary part is
/// stored as `Rational`, so equality is structural across both tags.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(Rational),
    Gaussian(GaussianRational),
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Rational(Rational::zero())
    }

    pub fn one() -> Self {
        Scalar::Rational(Rational::one())
    }

    pub fn i() -> Self {
        Scalar::Gaussian(GaussianRational::i())
    }

    pub fn from_ratio(num: i64, den: i64) -> Result<Self> {
        Ok(Scalar::Rational(Rational::new(num, den)?))
    }

    fn normalize(z: GaussianRational) -> Self {
        if z.im.is_zero() {
            Scalar::Rational(z.re)
        } else {
            Scalar::Gaussian(z)
        }
    }

    pub fn to_gaussian(&self) -> GaussianRational {
        match self {
            Scalar::Rational(r) => GaussianRational::from(r.clone()),
            Scalar::Gaussian(z) => z.clone(),
        }
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Scalar::Rational(r) => Some(r),
            Scalar::Gaussian(_) => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Scalar::Rational(r) if r.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Scalar::Rational(r) if r.is_one())
    }

    pub fn is_real(&self) -> bool {
        matches!(self, Scalar::Rational(_))
    }

    pub fn re(&self) -> Rational {
        match self {
            Scalar::Rational(r) => r.clone(),
            Scalar::Gaussian(z) => z.re.clone(),
        }
    }

    pub fn im(&self) -> Rational {
        match self {
            Scalar::Rational(_) => Rational::zero(),
            Scalar::Gaussian(z) => z.im.clone(),
        }
    }

    pub fn conj(&self) -> Self {
        match self {
            Scalar::Rational(_) => self.clone(),
            Scalar::Gaussian(z) => Scalar::Gaussian(z.conj()),
        }
    }

    pub fn inv(&self) -> Result<Self> {
        match self {
            Scalar::Rational(r) => Ok(Scalar::Rational(r.inv()?)),
            Scalar::Gaussian(z) => Ok(Scalar::normalize(z.inv()?)),
        }
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    /// Integer power. `0^0 = 1`; negative exponents need a nonzero base.
    pub fn pow(&self, exp: i64) -> Result<Self> {
        match self {
            Scalar::Rational(r) => Ok(Scalar::Rational(r.pow(exp)?)),
            Scalar::Gaussian(z) => Ok(Scalar::normalize(z.pow(exp)?)),
        }
    }

    /// Infallible nonnegative power.
    pub fn powu(&self, exp: u32) -> Self {
        self.pow(exp as i64).expect("nonnegative powers always exist")
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Scalar::Rational(r)
    }
}

impl From<GaussianRational> for Scalar {
    fn from(z: GaussianRational) -> Self {
        Scalar::normalize(z)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::Rational(Rational::from(n))
    }
}

impl From<num_bigint::BigInt> for Scalar {
    fn from(n: num_bigint::BigInt) -> Self {
        Scalar::Rational(Rational::from(n))
    }
}

impl Add<&Scalar> for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            _ => Scalar::normalize(&self.to_gaussian() + &rhs.to_gaussian()),
        }
    }
}

impl Sub<&Scalar> for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            _ => Scalar::normalize(&self.to_gaussian() - &rhs.to_gaussian()),
        }
    }
}

impl Mul<&Scalar> for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Rational(a), Scalar::Gaussian(z)) | (Scalar::Gaussian(z), Scalar::Rational(a)) => {
                Scalar::normalize(GaussianRational::new(a * &z.re, a * &z.im))
            }
            (Scalar::Gaussian(a), Scalar::Gaussian(b)) => Scalar::normalize(a * b),
        }
    }
}

macro_rules! scalar_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
    };
}

scalar_owned_binop!(Add, add);
scalar_owned_binop!(Sub, sub);
scalar_owned_binop!(Mul, mul);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Gaussian(z) => Scalar::Gaussian(-z),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => fmt::Display::fmt(r, f),
            Scalar::Gaussian(z) => fmt::Display::fmt(z, f),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Scalar {
    type Err = crate::error::Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(Scalar::normalize(s.parse::<GaussianRational>()?))
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
