use alloc::string::ToString;
use core::fmt;
use core::ops::{Add, Div, Mul, Sub};
use core::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::ArithError;

/// An arbitrary-precision fraction, always held in lowest terms with a
/// positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactRational(BigRational);

impl ExactRational {
    pub fn new(numerator: BigInt, denominator: BigInt) -> Result<Self, ArithError> {
        if denominator.is_zero() {
            return Err(ArithError::ZeroDenominator);
        }
        Ok(ExactRational(BigRational::new(numerator, denominator)))
    }

    pub fn from_ints(numerator: i64, denominator: i64) -> Result<Self, ArithError> {
        Self::new(BigInt::from(numerator), BigInt::from(denominator))
    }

    pub fn from_unsigned(numerator: BigUint, denominator: BigUint) -> Result<Self, ArithError> {
        Self::new(
            BigInt::from_biguint(Sign::Plus, numerator),
            BigInt::from_biguint(Sign::Plus, denominator),
        )
    }

    /// Skips the gcd reduction; the caller guarantees `gcd = 1` and a
    /// positive denominator.
    pub(crate) fn from_coprime(numerator: BigUint, denominator: BigUint) -> Self {
        ExactRational(BigRational::new_raw(
            BigInt::from_biguint(Sign::Plus, numerator),
            BigInt::from_biguint(Sign::Plus, denominator),
        ))
    }

    pub fn integer(value: i64) -> Self {
        ExactRational(BigRational::from_integer(BigInt::from(value)))
    }

    pub fn zero() -> Self {
        ExactRational(BigRational::zero())
    }

    pub fn one() -> Self {
        ExactRational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn abs(&self) -> Self {
        ExactRational(self.0.abs())
    }

    /// Nearest-ish `f64`; diagnostics only.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or_else(|| {
            if self.0.is_negative() {
                f64::NEG_INFINITY
            } else {
                f64::INFINITY
            }
        })
    }

    /// Parses an optionally signed decimal literal such as `-12`, `0.5` or
    /// `3.125` into the exact rational it denotes.
    pub fn from_decimal(text: &str) -> Result<Self, ArithError> {
        let err = |position: usize| ArithError::Parse {
            text: text.to_string(),
            position,
        };
        let bytes = text.as_bytes();
        let mut pos = 0;
        let negative = match bytes.first() {
            Some(b'-') => {
                pos = 1;
                true
            }
            Some(b'+') => {
                pos = 1;
                false
            }
            _ => false,
        };
        let int_start = pos;
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            pos += 1;
        }
        if pos == int_start {
            return Err(err(pos));
        }
        let int_digits = &text[int_start..pos];
        let mut frac_digits = "";
        if pos < bytes.len() {
            if bytes[pos] != b'.' {
                return Err(err(pos));
            }
            pos += 1;
            let frac_start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            if pos == frac_start {
                return Err(err(pos));
            }
            if pos != bytes.len() {
                return Err(err(pos));
            }
            frac_digits = &text[frac_start..pos];
        }
        let mut digits = alloc::string::String::with_capacity(int_digits.len() + frac_digits.len());
        digits.push_str(int_digits);
        digits.push_str(frac_digits);
        let mut numerator = BigInt::from_str(&digits).map_err(|_| err(int_start))?;
        if negative {
            numerator = -numerator;
        }
        let denominator = num_traits::pow(BigInt::from(10u32), frac_digits.len());
        Self::new(numerator, denominator)
    }
}

impl From<BigRational> for ExactRational {
    fn from(value: BigRational) -> Self {
        ExactRational(value)
    }
}

impl From<u64> for ExactRational {
    fn from(value: u64) -> Self {
        ExactRational(BigRational::from_integer(BigInt::from(value)))
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: ExactRational) -> ExactRational {
                ExactRational($trait::$method(self.0, rhs.0))
            }
        }
        impl<'a> $trait<&'a ExactRational> for &'a ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: &'a ExactRational) -> ExactRational {
                ExactRational($trait::$method(&self.0, &rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Div for ExactRational {
    type Output = ExactRational;
    /// Panics on division by zero, like the integer types.
    fn div(self, rhs: ExactRational) -> ExactRational {
        assert!(!rhs.is_zero(), "division by zero rational");
        ExactRational(self.0 / rhs.0)
    }
}

impl<'a> Div<&'a ExactRational> for &'a ExactRational {
    type Output = ExactRational;
    fn div(self, rhs: &'a ExactRational) -> ExactRational {
        assert!(!rhs.is_zero(), "division by zero rational");
        ExactRational(&self.0 / &rhs.0)
    }
}

impl core::iter::Product for ExactRational {
    fn product<I: Iterator<Item = ExactRational>>(iter: I) -> Self {
        iter.fold(ExactRational::one(), |acc, x| acc * x)
    }
}

impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl fmt::Debug for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for ExactRational {
    type Err = ArithError;

    /// Accepts `a/b` or a decimal literal.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.split_once('/') {
            Some((n, d)) => {
                let parse = |t: &str, offset: usize| {
                    BigInt::from_str(t).map_err(|_| ArithError::Parse {
                        text: s.to_string(),
                        position: offset,
                    })
                };
                Self::new(parse(n, 0)?, parse(d, n.len() + 1)?)
            }
            None => Self::from_decimal(s),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> ExactRational {
        ExactRational::from_ints(n, d).unwrap()
    }

    fn reduced(x: &ExactRational) -> bool {
        use num_integer::Integer;
        x.denom().is_positive() && x.numer().gcd(x.denom()).is_one()
    }

    #[test]
    fn decimal_literals() {
        assert_eq!(ExactRational::from_decimal("1").unwrap(), q(1, 1));
        assert_eq!(ExactRational::from_decimal("0.5").unwrap(), q(1, 2));
        assert_eq!(ExactRational::from_decimal("0.8").unwrap(), q(4, 5));
        assert_eq!(ExactRational::from_decimal("-2.25").unwrap(), q(-9, 4));
        assert_eq!(ExactRational::from_decimal("+0.001").unwrap(), q(1, 1000));
        assert_eq!(ExactRational::from_decimal("007").unwrap(), q(7, 1));
    }

    #[test]
    fn malformed_decimals() {
        for bad in [
            "", "-", ".5", "1.", "1.2.3", "abc", "1e5", " 1", "1 ", "0x10", "--1",
        ] {
            assert!(
                matches!(
                    ExactRational::from_decimal(bad),
                    Err(ArithError::Parse { .. })
                ),
                "{bad:?} should not parse"
            );
        }
    }

    #[test]
    fn fraction_syntax() {
        assert_eq!("6/8".parse::<ExactRational>().unwrap(), q(3, 4));
        assert_eq!("3/-6".parse::<ExactRational>().unwrap(), q(-1, 2));
        assert_eq!(
            "1/0".parse::<ExactRational>(),
            Err(ArithError::ZeroDenominator)
        );
        assert!("1/x".parse::<ExactRational>().is_err());
    }

    #[test]
    fn arithmetic_stays_reduced() {
        let a = q(4, 5);
        let b = q(6, 7);
        assert_eq!(&a * &b, q(24, 35));
        assert_eq!(&a + &b, q(58, 35));
        assert_eq!(&a - &a, ExactRational::zero());
        assert_eq!(&a / &b, q(14, 15));
        for x in [&a * &b, &a + &b, &a - &b, &a / &b, q(10, -4)] {
            assert!(reduced(&x), "{x}");
        }
        assert_eq!(q(10, -4).to_string(), "-5/2");
    }

    #[test]
    fn ordering_is_numeric() {
        assert!(q(2048, 4095) > q(1, 2));
        assert!(q(-1, 2) < ExactRational::zero());
        assert_eq!(q(2, 4), q(1, 2));
    }
}
