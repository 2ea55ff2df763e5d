use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Exact fraction, always stored reduced with a positive denominator.
pub type Rational = BigRational;

/// `num / den` reduced. Panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn integer(value: impl Into<BigInt>) -> Rational {
    Rational::from_integer(value.into())
}

pub fn pow10(exp: u32) -> BigInt {
    num_traits::pow(BigInt::from(10u32), exp as usize)
}

/// Bits needed for the larger of numerator and denominator.
pub fn bit_size(x: &Rational) -> u64 {
    x.numer().bits().max(x.denom().bits())
}

/// `floor(x * 10^scale)` as an integer.
pub(crate) fn floor_scaled(x: &Rational, scale: u32) -> BigInt {
    (x.numer() * pow10(scale)).div_floor(x.denom())
}

/// `ceil(x * 10^scale)` as an integer.
pub(crate) fn ceil_scaled(x: &Rational, scale: u32) -> BigInt {
    -((-x.numer() * pow10(scale)).div_floor(x.denom()))
}

pub(crate) fn from_scaled(value: BigInt, scale: u32) -> Rational {
    Rational::new(value, pow10(scale))
}

/// Parses `a`, `-a`, `a/b` or a plain decimal such as `-1.25`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let bad = || Error::Parse(format!("not a rational number: {text:?}"));
    if let Some((num, den)) = text.split_once('/') {
        let num: BigInt = parse_integer(num).ok_or_else(bad)?;
        let den: BigInt = parse_integer(den).ok_or_else(bad)?;
        if den.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {text:?}")));
        }
        return Ok(Rational::new(num, den));
    }
    if let Some((int_part, frac_part)) = text.split_once('.') {
        if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = int_part.starts_with('-');
        let digits = int_part.trim_start_matches(['-', '+']);
        if digits.is_empty()
            || !digits.bytes().all(|b| b.is_ascii_digit())
            || int_part.len() - digits.len() > 1
        {
            return Err(bad());
        }
        let whole = format!("{digits}{frac_part}");
        let mut num: BigInt = whole.parse().map_err(|_| bad())?;
        if negative {
            num = -num;
        }
        let scale = u32::try_from(frac_part.len()).map_err(|_| bad())?;
        return Ok(Rational::new(num, pow10(scale)));
    }
    parse_integer(text).map(Rational::from_integer).ok_or_else(bad)
}

fn parse_integer(text: &str) -> Option<BigInt> {
    let text = text.trim();
    let digits = text.strip_prefix(['-', '+']).unwrap_or(text);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    text.parse().ok()
}

/// True when `multiplier * x` is an integer.
pub(crate) fn scaled_is_integral(multiplier: &BigInt, x: &Rational) -> bool {
    (multiplier * x.numer()).is_multiple_of(x.denom())
}
