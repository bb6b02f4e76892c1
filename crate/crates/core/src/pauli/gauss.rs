use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// A Gaussian integer `re + im·i` with arbitrary-precision parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GaussInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussInt {
    pub fn new(re: impl Into<BigInt>, im: impl Into<BigInt>) -> Self {
        GaussInt {
            re: re.into(),
            im: im.into(),
        }
    }

    pub fn zero() -> Self {
        GaussInt::default()
    }

    pub fn one() -> Self {
        GaussInt::new(1, 0)
    }

    pub fn i() -> Self {
        GaussInt::new(0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussInt {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    /// `re² + im²`.
    pub fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    /// One of `1, -1, i, -i`.
    pub fn is_unit(&self) -> bool {
        self.norm().is_one()
    }
}

impl From<i64> for GaussInt {
    fn from(v: i64) -> Self {
        GaussInt::new(v, 0)
    }
}

impl Add for &GaussInt {
    type Output = GaussInt;

    fn add(self, rhs: &GaussInt) -> GaussInt {
        GaussInt {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl AddAssign<&GaussInt> for GaussInt {
    fn add_assign(&mut self, rhs: &GaussInt) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl Sub for &GaussInt {
    type Output = GaussInt;

    fn sub(self, rhs: &GaussInt) -> GaussInt {
        GaussInt {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Mul for &GaussInt {
    type Output = GaussInt;

    fn mul(self, rhs: &GaussInt) -> GaussInt {
        // Short cuts for the unit entries that dominate Pauli words.
        if rhs.im.is_zero() {
            return GaussInt {
                re: &self.re * &rhs.re,
                im: &self.im * &rhs.re,
            };
        }
        if rhs.re.is_zero() {
            return GaussInt {
                re: -(&self.im * &rhs.im),
                im: &self.re * &rhs.im,
            };
        }
        GaussInt {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Neg for &GaussInt {
    type Output = GaussInt;

    fn neg(self) -> GaussInt {
        GaussInt {
            re: -&self.re,
            im: -&self.im,
        }
    }
}

impl Neg for GaussInt {
    type Output = GaussInt;

    fn neg(self) -> GaussInt {
        GaussInt {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl fmt::Display for GaussInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let imag = |f: &mut fmt::Formatter<'_>, v: &BigInt, lead: bool| {
            let sign = if v.is_negative() { "-" } else if lead { "" } else { "+" };
            if v.abs().is_one() {
                write!(f, "{sign}i")
            } else {
                write!(f, "{sign}{}i", v.abs())
            }
        };
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => imag(f, &self.im, true),
            (false, false) => {
                write!(f, "{}", self.re)?;
                imag(f, &self.im, false)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let i = GaussInt::i();
        assert_eq!(&i * &i, GaussInt::from(-1));
        let a = GaussInt::new(2, 3);
        let b = GaussInt::new(-1, 4);
        assert_eq!(&a * &b, GaussInt::new(-14, 5));
        assert_eq!(&a + &b, GaussInt::new(1, 7));
        assert_eq!(&a - &b, GaussInt::new(3, -1));
        assert_eq!(a.conj(), GaussInt::new(2, -3));
        assert_eq!(a.norm(), BigInt::from(13));
        assert!((-i.clone()).is_unit());
        assert!(!a.is_unit());
    }

    #[test]
    fn display() {
        assert_eq!(GaussInt::i().to_string(), "i");
        assert_eq!((-GaussInt::i()).to_string(), "-i");
        assert_eq!(GaussInt::new(2, -3).to_string(), "2-3i");
        assert_eq!(GaussInt::new(-1, 0).to_string(), "-1");
        assert_eq!(GaussInt::zero().to_string(), "0");
    }
}
