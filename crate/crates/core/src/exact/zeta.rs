use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::bernoulli::bernoulli_even_table;
use super::interval::RationalInterval;
use super::rational::{from_scaled, pow10, Rational};
use crate::error::{Error, Result};

/// Enclosure of `ζ(s)` of width at most `10^-digits`.
///
/// Euler–Maclaurin with exact rational terms accumulated on a decimal grid
/// with outward rounding. For `x^-s` every derivative has constant sign, so
/// the remainder after the last Bernoulli term is bounded by the first
/// omitted term; both endpoints are widened by it.
///
/// The result is re-centred on the grid `10^-(digits+3)` with radius
/// exactly `10^-digits / 2`, which makes enclosures for increasing `digits`
/// nested.
pub fn zeta_enclosure(s: u32, digits: u32) -> Result<RationalInterval> {
    if s <= 1 {
        return Err(Error::ZetaPole(s));
    }
    let grid = digits + 3;
    let raw = euler_maclaurin(s, grid)?;
    let center = from_scaled(
        (raw.midpoint().numer() * pow10(grid)).div_floor(raw.midpoint().denom()),
        grid,
    );
    let radius = Rational::new(BigInt::one(), pow10(digits) * 2);
    Ok(RationalInterval::ball(&center, &radius))
}

fn decimal_len(x: u64) -> u32 {
    x.checked_ilog10().unwrap_or(0) + 1
}

/// Raw Euler–Maclaurin enclosure of width at most `10^-decimals`.
fn euler_maclaurin(s: u32, decimals: u32) -> Result<RationalInterval> {
    let tail_exp = decimals + 2;
    let tail_limit = Rational::new(BigInt::one(), pow10(tail_exp));
    let mut cutoff: u64 = 64.max(8 * (u64::from(decimals) + 5));
    let mut table_len = 32usize;
    loop {
        match correction_terms(s, cutoff, &tail_limit, &mut table_len)? {
            Some((terms, omitted)) => {
                return Ok(accumulate(s, cutoff, decimals, &terms, &omitted));
            }
            // Asymptotic series turned around before reaching the target.
            None => cutoff *= 2,
        }
    }
}

/// Bernoulli correction terms at cutoff `K` until one drops below
/// `tail_limit`; returns the kept terms and the first omitted one, or
/// `None` if the terms start growing first.
fn correction_terms(
    s: u32,
    cutoff: u64,
    tail_limit: &Rational,
    table_len: &mut usize,
) -> Result<Option<(Vec<Rational>, Rational)>> {
    let k = BigInt::from(cutoff);
    let k_sq = &k * &k;
    let mut bern = bernoulli_even_table(*table_len);
    // rising(s, 2m-1) / (2m)! and K^(s+2m-1), starting at m = 1.
    let mut coef = Rational::new(BigInt::from(s), BigInt::from(2));
    let mut k_pow = num_traits::pow(k.clone(), s as usize + 1);
    let mut terms: Vec<Rational> = Vec::new();
    let mut m = 1usize;
    loop {
        if m >= bern.len() {
            if m > 4 * cutoff as usize + 8 {
                return Ok(None);
            }
            *table_len *= 2;
            bern = bernoulli_even_table(*table_len);
        }
        let term = &bern[m] * &coef / Rational::from_integer(k_pow.clone());
        if term.abs() < *tail_limit {
            return Ok(Some((terms, term)));
        }
        if terms.last().is_some_and(|prev| term.abs() >= prev.abs()) {
            return Ok(None);
        }
        terms.push(term);
        let two_m = 2 * m as u64;
        let s = u64::from(s);
        coef = coef
            * Rational::new(
                BigInt::from((s + two_m - 1) * (s + two_m)),
                BigInt::from((two_m + 1) * (two_m + 2)),
            );
        k_pow *= &k_sq;
        m += 1;
    }
}

fn accumulate(
    s: u32,
    cutoff: u64,
    decimals: u32,
    terms: &[Rational],
    omitted: &Rational,
) -> RationalInterval {
    let work = decimals + 2 + decimal_len(8 * cutoff + terms.len() as u64);
    let scale = pow10(work);
    let mut lo = BigInt::zero();
    let mut hi = BigInt::zero();
    let mut add = |x: &Rational| {
        let (q, r) = (x.numer() * &scale).div_mod_floor(x.denom());
        if !r.is_zero() {
            hi += &q + 1;
        } else {
            hi += &q;
        }
        lo += q;
    };
    for j in 1..=cutoff {
        let denom = num_traits::pow(BigInt::from(j), s as usize);
        add(&Rational::new(BigInt::one(), denom));
    }
    let k = BigInt::from(cutoff);
    let k_pow_s1 = num_traits::pow(k.clone(), s as usize - 1);
    add(&Rational::new(BigInt::one(), &k_pow_s1 * (s - 1)));
    add(&Rational::new(BigInt::from(-1), k_pow_s1 * k * 2));
    for t in terms {
        add(t);
    }
    let slack = (omitted.abs().numer() * &scale).div_ceil(omitted.denom());
    lo -= &slack;
    hi += slack;
    RationalInterval::new(from_scaled(lo, work), from_scaled(hi, work))
        .expect("outward rounding keeps lo <= hi")
}

/// Memo of ζ enclosures for a computation that needs them at several
/// precisions. A finer enclosure answers every coarser request because
/// [`zeta_enclosure`] results are nested.
#[derive(Clone, Debug, Default)]
pub struct ZetaOracle {
    cache: HashMap<u32, (u32, RationalInterval)>,
}

impl ZetaOracle {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&mut self, s: u32, digits: u32) -> Result<RationalInterval> {
        if let Some((have, iv)) = self.cache.get(&s) {
            if *have >= digits {
                return Ok(iv.clone());
            }
        }
        let iv = zeta_enclosure(s, digits)?;
        self.cache.insert(s, (digits, iv.clone()));
        Ok(iv)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{parse_rational, rat};

    // Reference digits (truncated) of the constants.
    const ZETA2_50: &str = "1.64493406684822643647241516664602518921894990120679";
    const ZETA3_50: &str = "1.20205690315959428539973816151144999076498629234049";
    const ZETA5_50: &str = "1.03692775514336992633136548645703416805708091950191";

    fn reference(text: &str) -> RationalInterval {
        let lo = parse_rational(text).unwrap();
        let hi = &lo + Rational::new(BigInt::one(), pow10(50));
        RationalInterval::new(lo, hi).unwrap()
    }

    #[test]
    fn rejects_pole() {
        assert_eq!(zeta_enclosure(1, 5), Err(Error::ZetaPole(1)));
        assert_eq!(zeta_enclosure(0, 5), Err(Error::ZetaPole(0)));
    }

    #[test]
    fn nine_digit_enclosures() {
        let z5 = zeta_enclosure(5, 9).unwrap();
        assert!(z5.contains(&parse_rational("1.036927755").unwrap()));
        assert!(z5.overlaps(&reference(ZETA5_50)));
        let z2 = zeta_enclosure(2, 9).unwrap();
        assert!(z2.overlaps(&reference(ZETA2_50)));
        let z3 = zeta_enclosure(3, 9).unwrap();
        assert!(z3.overlaps(&reference(ZETA3_50)));
        for iv in [&z2, &z3, &z5] {
            assert!(iv.width() <= rat(1, 1_000_000_000));
        }
    }

    /// `sum_{k<=N} k^-2` plus the integral bounds `1/(N+1) <= tail <= 1/N`.
    #[test]
    fn zeta2_agrees_with_partial_sums_and_integral_tail() {
        let n = 2000i64;
        let partial: Rational = (1..=n).map(|k| rat(1, k * k)).sum();
        let bracket =
            RationalInterval::new(&partial + rat(1, n + 1), &partial + rat(1, n)).unwrap();
        let z2 = zeta_enclosure(2, 12).unwrap();
        assert!(bracket.encloses(&z2));
    }

    #[test]
    fn fifty_digits_match_reference() {
        for (s, text) in [(2, ZETA2_50), (3, ZETA3_50), (5, ZETA5_50)] {
            let iv = zeta_enclosure(s, 48).unwrap();
            assert!(iv.overlaps(&reference(text)), "zeta({s})");
        }
    }

    #[test]
    fn increasing_digits_nest() {
        for s in [2, 3, 5, 7] {
            let mut prev = zeta_enclosure(s, 1).unwrap();
            for digits in 2..40 {
                let next = zeta_enclosure(s, digits).unwrap();
                assert!(prev.encloses(&next), "s = {s}, digits = {digits}");
                prev = next;
            }
        }
    }

    #[test]
    fn oracle_reuses_finer_enclosures() {
        let mut oracle = ZetaOracle::new();
        let fine = oracle.get(3, 30).unwrap();
        assert_eq!(oracle.get(3, 10).unwrap(), fine);
        assert!(oracle.get(3, 40).unwrap().width() < fine.width());
    }
}
