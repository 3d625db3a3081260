//! Arbitrary-precision rational numbers, the sole numeric carrier.
//!
//! [`Rational`] wraps `num_rational::BigRational` so that every value is
//! stored reduced with a positive denominator and all arithmetic is exact.
//! The textual form is `"p/q"` with the `/q` omitted when the denominator
//! is one, e.g. `"37/385"`, `"-3"`, `"112"`.

use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};
use core::str::FromStr;

use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An exact rational number, always reduced, denominator always positive.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `numer / denom`. Fails on a zero denominator.
    pub fn new(numer: i64, denom: i64) -> Result<Self> {
        if denom == 0 {
            return Err(Error::DivisionByZero(format!("{numer}/0")));
        }
        Ok(Rational(BigRational::new(
            BigInt::from(numer),
            BigInt::from(denom),
        )))
    }

    /// The integer `n` as a rational.
    pub fn from_int(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    /// Exact reciprocal. Fails on zero.
    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero("reciprocal of 0".into()));
        }
        Ok(Rational(self.0.recip()))
    }

    /// Checked division.
    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero(format!("{self} / 0")));
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    pub fn max(self, other: Self) -> Self {
        if self.0 >= other.0 {
            self
        } else {
            other
        }
    }

    pub fn min(self, other: Self) -> Self {
        if self.0 <= other.0 {
            self
        } else {
            other
        }
    }

    /// Total order, used by the tropical instance's `max`/`min`.
    pub fn compare(&self, other: &Self) -> Ordering {
        self.0.cmp(&other.0)
    }

    pub(crate) fn from_big(r: BigRational) -> Self {
        Rational(r)
    }

    pub(crate) fn big(&self) -> &BigRational {
        &self.0
    }
}

/// Parallel sum `a * b / (a + b)`, defined for strictly positive inputs.
///
/// This is the operation that `min` detropicalizes to; it is associative and
/// commutative, and `1/(a || b) = 1/a + 1/b`.
pub fn parallel_sum(a: &Rational, b: &Rational) -> Result<Rational> {
    if !a.is_positive() {
        return Err(Error::NonPositive(format!("parallel sum of {a}")));
    }
    if !b.is_positive() {
        return Err(Error::NonPositive(format!("parallel sum of {b}")));
    }
    Ok(Rational(a.big() * b.big() / (a.big() + b.big())))
}

/// Folds [`parallel_sum`] over a nonempty slice.
pub fn parallel_sum_all(values: &[Rational]) -> Result<Rational> {
    let (first, rest) = values
        .split_first()
        .ok_or_else(|| Error::NonPositive("parallel sum of an empty set".into()))?;
    let mut acc = first.clone();
    for v in rest {
        acc = parallel_sum(&acc, v)?;
    }
    Ok(acc)
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

// Debug mirrors Display; the reduced fraction is the whole state.
impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parse_int = |t: &str| -> Result<BigInt> {
            BigInt::from_str(t).map_err(|_| Error::Parse(s.to_string()))
        };
        match s.split_once('/') {
            Some((p, q)) => {
                let numer = parse_int(p.trim())?;
                let denom = parse_int(q.trim())?;
                if denom.is_zero() {
                    return Err(Error::DivisionByZero(s.to_string()));
                }
                Ok(Rational(BigRational::new(numer, denom)))
            }
            None => Ok(Rational(BigRational::from_integer(parse_int(s)?))),
        }
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_int(n)
    }
}

impl Add for &Rational {
    type Output = Rational;
    fn add(self, rhs: &Rational) -> Rational {
        Rational(&self.0 + &rhs.0)
    }
}

impl Sub for &Rational {
    type Output = Rational;
    fn sub(self, rhs: &Rational) -> Rational {
        Rational(&self.0 - &rhs.0)
    }
}

impl Mul for &Rational {
    type Output = Rational;
    fn mul(self, rhs: &Rational) -> Rational {
        Rational(&self.0 * &rhs.0)
    }
}

/// Panics on division by zero; use [`Rational::checked_div`] where the
/// divisor is not known to be nonzero.
impl Div for &Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        Rational(&self.0 / &rhs.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

/// Sums a sequence of rationals; the empty sum is zero.
pub fn sum<'a>(values: impl IntoIterator<Item = &'a Rational>) -> Rational {
    values
        .into_iter()
        .fold(Rational::zero(), |acc, v| &acc + v)
}

/// Multiplies a sequence of rationals; the empty product is one.
pub fn product<'a>(values: impl IntoIterator<Item = &'a Rational>) -> Rational {
    values.into_iter().fold(Rational::one(), |acc, v| &acc * v)
}

/// Parses a whitespace-free comma list of rationals, handy in tests.
pub fn parse_all(items: &[&str]) -> Result<Vec<Rational>> {
    items.iter().map(|s| s.parse()).collect()
}
