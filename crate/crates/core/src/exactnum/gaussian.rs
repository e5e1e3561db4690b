use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use crate::error::{Error, Result};

use super::Rational;

/// An element `re + im*i` of Q(i).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn i() -> Self {
        GaussianRational::new(Rational::zero(), Rational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussianRational::new(self.re.clone(), -&self.im)
    }

    /// `re² + im²`, i.e. `z * conj(z)`.
    pub fn norm(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Result<Self> {
        let norm = self.norm();
        if norm.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let scale = norm.inv()?;
        Ok(GaussianRational::new(&self.re * &scale, -(&self.im * &scale)))
    }

    pub fn checked_div(&self, other: &GaussianRational) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, exp: i64) -> Result<Self> {
        if exp < 0 {
            return self.inv()?.pow(-exp);
        }
        let mut base = self.clone();
        let mut acc = GaussianRational::from(Rational::one());
        let mut e = exp as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }
}

impl From<Rational> for GaussianRational {
    fn from(re: Rational) -> Self {
        GaussianRational::new(re, Rational::zero())
    }
}

impl Add<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-&self.re, -&self.im)
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        // the sign of the imaginary part lives on its numerator: "1/2+-1/3*i"
        write!(f, "{}+{}*i", self.re, self.im)
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Accepts `a`, `a+b*i`, `a-b*i` and `a+-b*i` where `a`, `b` are rationals.
/// The unit coefficient may be omitted (`i`, `-i`, `1+i`).
impl FromStr for GaussianRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::Parse {
            kind: "gaussian rational",
            input: s.to_string(),
        };
        let Some(body) = s.strip_suffix('i') else {
            return Ok(GaussianRational::from(s.parse::<Rational>().map_err(|_| err())?));
        };
        let (body, explicit) = match body.strip_suffix('*') {
            Some(b) => (b, true),
            None => (body, false),
        };
        let split = body.rfind(['+', '-']).filter(|&idx| idx > 0);
        let (re, im) = match split {
            Some(idx) => {
                let re = &body[..idx];
                let re = match body.as_bytes()[idx] {
                    b'-' => re.strip_suffix('+').unwrap_or(re),
                    _ => re,
                };
                (Some(re), &body[idx..])
            }
            None => (None, body),
        };
        let im = im.strip_prefix('+').filter(|_| re.is_some()).unwrap_or(im);
        let im = match im {
            "" if !explicit => Rational::one(),
            "-" if !explicit => -Rational::one(),
            _ => im.parse().map_err(|_| err())?,
        };
        let re = match re {
            Some(r) => r.parse().map_err(|_| err())?,
            None => Rational::zero(),
        };
        Ok(GaussianRational::new(re, im))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(s: &str) -> GaussianRational {
        s.parse().unwrap()
    }

    #[test]
    fn conjugate_product_is_real() {
        assert_eq!(&z("1+1*i") * &z("1-1*i"), z("2"));
        let w = z("3/7+2/5*i");
        let p = &w.conj() * &w;
        assert!(p.im.is_zero());
        assert!(!p.re.is_negative());
    }

    #[test]
    fn inverse_times_self_is_one() {
        let w = z("3/7+2/5*i");
        assert_eq!(&w * &w.inv().unwrap(), z("1"));
        assert_eq!(GaussianRational::default().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn formatting() {
        assert_eq!(z("1/2-1/3*i").to_string(), "1/2+-1/3*i");
        assert_eq!(z("1/2+-1/3*i").to_string(), "1/2+-1/3*i");
        assert_eq!(z("i").to_string(), "0+1*i");
        assert_eq!(z("-i").to_string(), "0+-1*i");
        assert_eq!(z("1+i").to_string(), "1+1*i");
        assert_eq!(z("-2/3*i").to_string(), "0+-2/3*i");
        assert_eq!(z("-3/5").to_string(), "-3/5");
        assert_eq!(z("0+0*i").to_string(), "0");
    }

    #[test]
    fn rejects_garbage() {
        for bad in ["", "*i", "1+*i", "ii", "1+2*j", "1++2*i", "1/0+i", "x"] {
            assert!(bad.parse::<GaussianRational>().is_err(), "{bad:?} parsed");
        }
    }

    #[test]
    fn powers_of_one_plus_i() {
        let w = z("1+i");
        assert_eq!(w.pow(4).unwrap(), z("-4"));
        assert_eq!(w.pow(-2).unwrap(), z("0-1/2*i"));
    }
}
