//! Exact scalar types for coordinates and transformation parameters.
//!
//! Everything in the crate is generic over [`Scalar`]. Pattern discovery groups
//! transformations by exact parameter equality, so only exact number types
//! qualify; floating point is deliberately not supported.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, Signed, ToPrimitive};

use crate::error::{Error, Result};

/// An exact, totally ordered number type with a canonical representation.
///
/// `Display` must print integers without a denominator and other values as
/// `p/q`, which is the on-disk syntax of every file format in this crate.
pub trait Scalar:
    Num + Signed + Clone + Ord + Hash + Debug + Display + Send + Sync + 'static
{
    /// Parses a decimal (`3`, `-2.5`) or a quotient (`7/2`).
    fn parse_exact(text: &str) -> Result<Self>;

    fn from_i64(value: i64) -> Self;

    /// Nearest `f64`; only used for human-readable output.
    fn approx_f64(&self) -> f64;
}

impl<T> Scalar for Ratio<T>
where
    T: Clone
        + Integer
        + Signed
        + Hash
        + Debug
        + Display
        + FromPrimitive
        + ToPrimitive
        + Send
        + Sync
        + 'static,
{
    fn parse_exact(text: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("not an exact number: '{text}'"));
        let text = text.trim();
        if let Some((num, den)) = text.split_once('/') {
            let num = parse_integer::<T>(num).ok_or_else(bad)?;
            let den = parse_unsigned::<T>(den).ok_or_else(bad)?;
            if den.is_zero() {
                return Err(Error::InvalidArgument(format!(
                    "zero denominator in '{text}'"
                )));
            }
            return Ok(Ratio::new(num, den));
        }
        let (negative, body) = match text.as_bytes().first() {
            Some(b'-') => (true, &text[1..]),
            Some(b'+') => (false, &text[1..]),
            _ => (false, text),
        };
        let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(bad());
        }
        let mut digits = String::with_capacity(int_part.len() + frac_part.len());
        digits.push_str(int_part);
        digits.push_str(frac_part);
        let mut numer = parse_unsigned::<T>(&digits).ok_or_else(bad)?;
        if negative {
            numer = -numer;
        }
        let ten = T::from_u8(10).ok_or_else(bad)?;
        let denom = num_traits::pow(ten, frac_part.len());
        Ok(Ratio::new(numer, denom))
    }

    fn from_i64(value: i64) -> Self {
        Ratio::from_integer(T::from_i64(value).expect("integer type too narrow for i64 value"))
    }

    fn approx_f64(&self) -> f64 {
        let n = self.numer().to_f64().unwrap_or(f64::NAN);
        let d = self.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    }
}

fn parse_unsigned<T: Num>(text: &str) -> Option<T> {
    if text.is_empty() || !text.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    T::from_str_radix(text, 10).ok()
}

fn parse_integer<T: Num + Signed>(text: &str) -> Option<T> {
    match text.strip_prefix('-') {
        Some(rest) => parse_unsigned::<T>(rest).map(|v| -v),
        None => parse_unsigned(text.strip_prefix('+').unwrap_or(text)),
    }
}
