//! The scalar field every computation runs over.
//!
//! All algorithms in this crate make exact zero / non-zero decisions (rank,
//! membership, independence), so only exact fields implement [`Field`].
//! [`crate::Rational`] is the default; the fixed-width rationals are faster
//! but panic on overflow.

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{Num, Signed};

use crate::error::{Error, Result};

/// An exact field.
pub trait Field:
    Num + Neg<Output = Self> + Signed + PartialOrd + Clone + Debug + Display + Send + Sync + 'static
{
    /// The fraction `numer / denom`. `denom` must be non-zero.
    fn from_ratio(numer: i64, denom: i64) -> Self;

    fn from_int(value: i64) -> Self {
        Self::from_ratio(value, 1)
    }
}

impl Field for BigRational {
    fn from_ratio(numer: i64, denom: i64) -> Self {
        BigRational::new(BigInt::from(numer), BigInt::from(denom))
    }
}

impl Field for Ratio<i64> {
    fn from_ratio(numer: i64, denom: i64) -> Self {
        Ratio::new(numer, denom)
    }
}

impl Field for Ratio<i128> {
    fn from_ratio(numer: i64, denom: i64) -> Self {
        Ratio::new(numer.into(), denom.into())
    }
}

/// Parses the textual rational form: an optional sign, a decimal integer and
/// an optional `/` followed by a positive decimal integer (`-3/7`, `4`, `+2`).
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let invalid = || Error::InvalidRational(text.to_string());
    let (numer, denom) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let digits = numer.strip_prefix(['+', '-']).unwrap_or(numer);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(invalid());
    }
    let numer: BigInt = numer.parse().map_err(|_| invalid())?;
    let denom: BigInt = match denom {
        None => BigInt::from(1),
        Some(d) => {
            if d.is_empty() || !d.bytes().all(|b| b.is_ascii_digit()) {
                return Err(invalid());
            }
            d.parse().map_err(|_| invalid())?
        }
    };
    if denom == BigInt::from(0) {
        return Err(invalid());
    }
    Ok(BigRational::new(numer, denom))
}
