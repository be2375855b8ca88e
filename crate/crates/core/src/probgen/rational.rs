//! Exact rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary precision rational, always in lowest terms with a positive
/// denominator. Displays as `p/q`, or as `p` when the denominator is 1.
pub type Rational = num_rational::BigRational;

pub fn ratio(num: u128, den: u128) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn integer(n: u128) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `p/q` or `p`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let bad = || Error::Parse(format!("not a rational: {text:?}"));
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// The spread bound `ceil(1/sigma - 1)`: `1/sigma - 1` when `1/sigma` is an
/// integer and `floor(1/sigma)` otherwise. `None` for `sigma = 0`, where
/// the bound is unbounded.
pub fn spread_bound(sigma: &Rational) -> Option<BigInt> {
    if sigma.is_zero() {
        return None;
    }
    let inv = sigma.recip();
    if inv.is_integer() {
        Some(inv.to_integer() - BigInt::one())
    } else {
        Some(inv.numer().div_floor(inv.denom()))
    }
}

/// Largest entry of a nonempty slice, or zero.
pub(crate) fn max_or_zero<'a>(values: impl IntoIterator<Item = &'a Rational>) -> Rational {
    values
        .into_iter()
        .fold(Rational::zero(), |m, v| if *v > m { v.clone() } else { m })
}
