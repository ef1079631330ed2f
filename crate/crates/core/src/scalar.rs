//! Numeric field abstraction.
//!
//! Two modes are supported: exact rationals ([`BigRational`]) and `f64` with a
//! sign tolerance. All sign decisions in the solver go through [`Tolerance`],
//! so both modes share one code path.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Three-way sign classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

/// Which scalar implementation a solve runs in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum NumericMode {
    #[default]
    Rational,
    Float,
}

/// A field element usable as a dictionary entry.
pub trait Scalar: Clone + fmt::Debug + fmt::Display + PartialEq + PartialOrd + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_rational(value: &BigRational) -> Self;
    /// Exact rational image; lossless for both modes.
    fn to_rational(&self) -> BigRational;
    /// Sign under tolerance `eps`. Exact implementations ignore `eps`.
    fn sign_with(&self, eps: f64) -> Sign;
    fn abs(&self) -> Self;
    fn mode() -> NumericMode;

    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    /// Raw quotient. Callers check the divisor's sign first; see
    /// [`Tolerance::checked_div`].
    fn divided_by(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
}

impl Scalar for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn from_rational(value: &BigRational) -> Self {
        value.clone()
    }

    fn to_rational(&self) -> BigRational {
        self.clone()
    }

    fn sign_with(&self, _eps: f64) -> Sign {
        if self.is_negative() {
            Sign::Negative
        } else if self.is_zero() {
            Sign::Zero
        } else {
            Sign::Positive
        }
    }

    fn abs(&self) -> Self {
        Signed::abs(self)
    }

    fn mode() -> NumericMode {
        NumericMode::Rational
    }

    fn plus(&self, other: &Self) -> Self {
        self + other
    }

    fn minus(&self, other: &Self) -> Self {
        self - other
    }

    fn times(&self, other: &Self) -> Self {
        self * other
    }

    fn divided_by(&self, other: &Self) -> Self {
        self / other
    }

    fn negated(&self) -> Self {
        -self
    }
}

impl Scalar for f64 {
    fn zero() -> Self {
        0.0
    }

    fn one() -> Self {
        1.0
    }

    fn from_rational(value: &BigRational) -> Self {
        value.to_f64().unwrap_or(f64::NAN)
    }

    fn to_rational(&self) -> BigRational {
        BigRational::from_f64(*self).unwrap_or_else(|| BigRational::from_integer(BigInt::zero()))
    }

    fn sign_with(&self, eps: f64) -> Sign {
        if *self < -eps {
            Sign::Negative
        } else if *self > eps {
            Sign::Positive
        } else {
            Sign::Zero
        }
    }

    fn abs(&self) -> Self {
        f64::abs(*self)
    }

    fn mode() -> NumericMode {
        NumericMode::Float
    }

    fn plus(&self, other: &Self) -> Self {
        self + other
    }

    fn minus(&self, other: &Self) -> Self {
        self - other
    }

    fn times(&self, other: &Self) -> Self {
        self * other
    }

    fn divided_by(&self, other: &Self) -> Self {
        self / other
    }

    fn negated(&self) -> Self {
        -self
    }
}

/// Sign-classification threshold. Only consulted in float mode.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    eps: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance { eps: 1e-9 }
    }
}

impl Tolerance {
    pub fn new(eps: f64) -> Result<Self> {
        if eps.is_finite() && eps > 0.0 {
            Ok(Tolerance { eps })
        } else {
            Err(Error::InvalidTolerance(eps.to_string()))
        }
    }

    pub fn eps(&self) -> f64 {
        self.eps
    }

    pub fn sign<T: Scalar>(&self, x: &T) -> Sign {
        x.sign_with(self.eps)
    }

    pub fn is_negative<T: Scalar>(&self, x: &T) -> bool {
        self.sign(x) == Sign::Negative
    }

    pub fn is_positive<T: Scalar>(&self, x: &T) -> bool {
        self.sign(x) == Sign::Positive
    }

    pub fn is_zero<T: Scalar>(&self, x: &T) -> bool {
        self.sign(x) == Sign::Zero
    }

    /// `num / den`, refusing divisors classified as zero.
    pub fn checked_div<T: Scalar>(&self, num: &T, den: &T) -> Result<T> {
        if self.is_zero(den) {
            Err(Error::DivisionByZero)
        } else {
            Ok(num.divided_by(den))
        }
    }
}

/// Parses `"p/q"`, `"p"` or a decimal such as `"-1.25"` into an exact rational.
pub fn parse_rational(text: &str) -> Option<BigRational> {
    let text = text.trim();
    if let Some((num, den)) = text.split_once('/') {
        let num: BigInt = num.trim().parse().ok()?;
        let den: BigInt = den.trim().parse().ok()?;
        if den.is_zero() {
            return None;
        }
        return Some(BigRational::new(num, den));
    }
    let (negative, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text.strip_prefix('+').unwrap_or(text)),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits = format!("{int_part}{frac_part}");
    let num: BigInt = if digits.is_empty() {
        BigInt::zero()
    } else {
        digits.parse().ok()?
    };
    let den = num_traits::pow(BigInt::from(10), frac_part.len());
    let value = BigRational::new(num, den);
    Some(if negative { -value } else { value })
}
