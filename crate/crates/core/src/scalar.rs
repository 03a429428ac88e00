//! Scalars: integer coefficients, exact length values, and extended distances.

use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::ops::Add;
use std::str::FromStr;

use ibig::ops::Abs;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

/// Arbitrary-precision integer used for all coefficients and invariant factors.
pub type Int = ibig::IBig;

/// Exact nonnegative length scalar grading metric and normed-group complexes.
///
/// Implemented by exact rationals and unsigned integers. Float types are not
/// `Ord` and so never qualify.
pub trait Length:
    Clone + Ord + Hash + Debug + Display + Zero + One + Add<Output = Self> + Send + Sync + 'static
{
    /// The length `n · 1`.
    fn from_count(n: usize) -> Self {
        (0..n).fold(Self::zero(), |acc, _| acc + Self::one())
    }
}

impl<T> Length for T where
    T: Clone + Ord + Hash + Debug + Display + Zero + One + Add<Output = T> + Send + Sync + 'static
{
}

/// A distance in `[0, ∞]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance<L> {
    Finite(L),
    Infinite,
}

impl<L: Length> Distance<L> {
    pub fn zero() -> Self {
        Distance::Finite(L::zero())
    }

    pub fn finite(&self) -> Option<&L> {
        match self {
            Distance::Finite(l) => Some(l),
            Distance::Infinite => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Distance::Infinite)
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Distance::Finite(l) if l.is_zero())
    }
}

impl<L: Length> Add for Distance<L> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        match (self, rhs) {
            (Distance::Finite(a), Distance::Finite(b)) => Distance::Finite(a + b),
            _ => Distance::Infinite,
        }
    }
}

impl<L: Length> Add for &Distance<L> {
    type Output = Distance<L>;

    fn add(self, rhs: Self) -> Distance<L> {
        match (self, rhs) {
            (Distance::Finite(a), Distance::Finite(b)) => Distance::Finite(a.clone() + b.clone()),
            _ => Distance::Infinite,
        }
    }
}

impl<L: Display> Display for Distance<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(l) => write!(f, "{l}"),
            Distance::Infinite => f.write_str("inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse `{text}` as an exact number: {reason}")]
pub struct ParseNumberError {
    pub text: String,
    pub reason: &'static str,
}

/// Parses an integer, a decimal string such as `"0.25"`, or a fraction `"p/q"` exactly.
pub fn parse_rational(text: &str) -> Result<BigRational, ParseNumberError> {
    let fail = |reason| ParseNumberError { text: text.to_string(), reason };
    let s = text.trim();
    if s.is_empty() {
        return Err(fail("empty"));
    }
    if let Some((num, den)) = s.split_once('/') {
        let num = BigInt::from_str(num.trim()).map_err(|_| fail("bad numerator"))?;
        let den = BigInt::from_str(den.trim()).map_err(|_| fail("bad denominator"))?;
        if den.is_zero() {
            return Err(fail("zero denominator"));
        }
        return Ok(BigRational::new(num, den));
    }
    let (negative, digits) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let (whole, frac) = digits.split_once('.').unwrap_or((digits, ""));
    if whole.is_empty() && frac.is_empty() {
        return Err(fail("no digits"));
    }
    if !whole.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return Err(fail("expected digits"));
    }
    let numerator = BigInt::from_str(&format!("{whole}{frac}")).map_err(|_| fail("bad digits"))?;
    let denominator = num_traits::pow(BigInt::from(10u32), frac.len());
    let value = BigRational::new(numerator, denominator);
    Ok(if negative { -value } else { value })
}

/// Parses a distance: `"inf"` or anything accepted by [`parse_rational`].
pub fn parse_distance(text: &str) -> Result<Distance<BigRational>, ParseNumberError> {
    match text.trim() {
        "inf" | "∞" => Ok(Distance::Infinite),
        other => parse_rational(other).map(Distance::Finite),
    }
}

/// `gcd(a, b)` as a nonnegative integer.
pub fn gcd(a: &Int, b: &Int) -> Int {
    if a.is_zero() && b.is_zero() {
        return Int::zero();
    }
    a.gcd(b)
}

/// Nonnegative `lcm(a, b)`; zero if either argument is zero.
pub fn lcm(a: &Int, b: &Int) -> Int {
    if a.is_zero() || b.is_zero() {
        return Int::zero();
    }
    (a / &gcd(a, b) * b).abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn parses_decimals_exactly() {
        assert_eq!(parse_rational("0.1").unwrap(), q(1, 10));
        assert_eq!(parse_rational("2.50").unwrap(), q(5, 2));
        assert_eq!(parse_rational("3").unwrap(), q(3, 1));
        assert_eq!(parse_rational("-.5").unwrap(), q(-1, 2));
        assert_eq!(parse_rational("2/6").unwrap(), q(1, 3));
        assert!(parse_rational("1e3").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational(".").is_err());
    }

    #[test]
    fn infinity_absorbs() {
        let one: Distance<u64> = Distance::Finite(1);
        assert_eq!(one.clone() + Distance::Infinite, Distance::Infinite);
        assert_eq!(one.clone() + one.clone(), Distance::Finite(2));
        assert!(one < Distance::Infinite);
        assert_eq!(parse_distance("inf").unwrap(), Distance::Infinite);
    }

    #[test]
    fn lcm_and_gcd() {
        let a = Int::from(4);
        let b = Int::from(-6);
        assert_eq!(gcd(&a, &b), Int::from(2));
        assert_eq!(lcm(&a, &b), Int::from(12));
        assert_eq!(gcd(&Int::zero(), &Int::zero()), Int::zero());
    }
}
