use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::interval::RationalInterval;
use super::rational::{pow10, Rational};

/// Fixed-point rendering with `digits` decimals, truncated toward zero.
pub fn to_decimal(x: &Rational, digits: u32) -> String {
    let scaled = (x.numer().abs() * pow10(digits)).div_floor(x.denom());
    let negative = x.is_negative() && !scaled.is_zero();
    render_scaled(&scaled, digits, negative)
}

fn render_scaled(scaled: &BigInt, digits: u32, negative: bool) -> String {
    let text = scaled.to_string();
    let digits = digits as usize;
    let padded = if text.len() <= digits {
        format!("{}{}", "0".repeat(digits + 1 - text.len()), text)
    } else {
        text
    };
    let split = padded.len() - digits;
    let sign = if negative { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{padded}")
    } else {
        format!("{sign}{}.{}", &padded[..split], &padded[split..])
    }
}

/// Renders the decimals both endpoints agree on (at most `digits` of
/// them, truncated toward zero), followed by `±` and the interval width
/// rounded up to `digits` decimals.
pub fn to_decimal_interval(x: &RationalInterval, digits: u32) -> String {
    let mut common = None;
    for d in (0..=digits).rev() {
        let lo = to_decimal(x.lo(), d);
        if lo == to_decimal(x.hi(), d) {
            common = Some(lo);
            break;
        }
    }
    let head = common.unwrap_or_else(|| to_decimal(&x.midpoint(), 0));
    let width = x.width();
    let width_scaled = (width.numer() * pow10(digits)).div_ceil(width.denom());
    format!("{head}±{}", render_scaled(&width_scaled, digits, false))
}

fn log10_big(value: &BigInt) -> f64 {
    let text = value.abs().to_string();
    let lead_len = text.len().min(17);
    let lead: f64 = text[..lead_len].parse().expect("decimal digits");
    lead.log10() + (text.len() - lead_len) as f64
}

/// `log10 |x|` read off the decimal expansions of numerator and
/// denominator (digit count plus leading digits), or `None` for zero.
/// Accurate to roughly 1e-15 relative regardless of the size of `x`.
pub fn log10_abs(x: &Rational) -> Option<f64> {
    if x.is_zero() {
        return None;
    }
    Some(log10_big(x.numer()) - log10_big(x.denom()))
}

/// Natural logarithm of `|x|`, see [`log10_abs`].
pub fn ln_abs(x: &Rational) -> Option<f64> {
    log10_abs(x).map(|l| l * std::f64::consts::LN_10)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn truncates_toward_zero() {
        assert_eq!(to_decimal(&rat(29, 28), 6), "1.035714");
        assert_eq!(to_decimal(&rat(0, 1), 3), "0.000");
        assert_eq!(to_decimal(&rat(-2, 3), 4), "-0.6666");
        assert_eq!(to_decimal(&rat(-1, 10_000), 3), "0.000");
        assert_eq!(to_decimal(&rat(7, 2), 0), "3");
        assert_eq!(to_decimal(&rat(1, 8), 2), "0.12");
    }

    #[test]
    fn interval_keeps_common_digits() {
        let x = RationalInterval::new(rat(103, 100), rat(104, 100)).unwrap();
        assert_eq!(to_decimal_interval(&x, 2), "1.0±0.01");
        let p = RationalInterval::point(rat(1, 4));
        assert_eq!(to_decimal_interval(&p, 3), "0.250±0.000");
        let straddle = RationalInterval::new(rat(-1, 10), rat(1, 10)).unwrap();
        assert_eq!(to_decimal_interval(&straddle, 1), "0±0.2");
    }

    #[test]
    fn logs_of_huge_rationals() {
        let big = Rational::from_integer(pow10(1000) * 3);
        let l = log10_abs(&big).unwrap();
        assert!((l - (1000.0 + 3f64.log10())).abs() < 1e-9);
        let small = Rational::new(1.into(), pow10(500));
        assert!((log10_abs(&small).unwrap() + 500.0).abs() < 1e-12);
        assert!((ln_abs(&rat(42, 1)).unwrap() - 42f64.ln()).abs() < 1e-12);
        assert_eq!(log10_abs(&rat(0, 1)), None);
    }
}
