//! The very-well-poised hypergeometric series behind both recursions.
//!
//! Each series is `Σ_{k≥1} R(k)` for a rational function `R` with poles of
//! order `e` at `k = 0, −1, …, −n`. Expanding
//! `R(k) = Σ_{j,s} A_{j,s} / (k+j)^s` and summing each layer with
//! `Σ_{k≥1} (k+j)^−s = ζ(s) − H_{j,s}` turns the series into an exact linear
//! form in zeta values. Cross-multiplying two such forms recovers the
//! solutions of the recursions, giving an oracle that shares no code path
//! with the recurrence engine.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{pow10, IntPolynomial, Rational, RationalInterval, ZetaOracle};
use crate::report::VerificationReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// `r_n`: forms in 1, ζ(3), ζ(5).
    R5,
    /// `r̃_n`: forms in 1, ζ(3), ζ(5).
    R5Tilde,
    /// `r′_n`: forms in 1, ζ(2), ζ(3).
    R23,
    /// `r̃′_n`: forms in 1, ζ(2), ζ(3).
    R23Tilde,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::R5, Family::R5Tilde, Family::R23, Family::R23Tilde];

    /// Order of every pole.
    pub fn exponent(self) -> usize {
        match self {
            Family::R5 | Family::R5Tilde => 6,
            Family::R23 | Family::R23Tilde => 3,
        }
    }

    /// Zeta arguments of the `(u, w)` coefficients.
    pub fn zeta_arguments(self) -> (u32, u32) {
        match self {
            Family::R5 | Family::R5Tilde => (5, 3),
            Family::R23 | Family::R23Tilde => (3, 2),
        }
    }

    /// Layers `s` whose coefficient sums must vanish.
    pub fn vanishing_layers(self) -> &'static [usize] {
        match self {
            Family::R5 | Family::R5Tilde => &[1, 2, 4, 6],
            Family::R23 | Family::R23Tilde => &[1],
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::R5 => "r",
            Family::R5Tilde => "r~",
            Family::R23 => "r'",
            Family::R23Tilde => "r~'",
        })
    }
}

/// `R(k) = scalar · ∏ (a·k + b) / ∏_{j=0..n} (k+j)^e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SummandSpec {
    pub family: Family,
    pub n: u64,
    /// Sign and factorial prefactor, with the `1/2` from `k + n/2`.
    pub scalar: Rational,
    /// Linear numerator factors `(a, b)` meaning `a·k + b`.
    pub factors: Vec<(i64, i64)>,
    pub exponent: usize,
}

impl SummandSpec {
    pub fn new(family: Family, n: u64) -> Self {
        let ni = n as i64;
        let factorial: BigInt = (1..=n).map(BigInt::from).product();
        let mut factors = Vec::new();
        let (sign, power, half, lower_from) = match family {
            Family::R5 => (1, 4, true, 1),
            Family::R5Tilde => (-1, 4, true, 0),
            Family::R23 => (-1, 2, false, 1),
            Family::R23Tilde => (1, 2, false, 0),
        };
        if half {
            // k + n/2 = (2k + n)/2
            factors.push((2, ni));
        }
        factors.extend((lower_from..=ni).map(|j| (1, -j)));
        if half {
            factors.extend((lower_from..=ni).map(|j| (1, ni + j)));
        }
        let mut scalar = Rational::from_integer(num_traits::pow(factorial, power) * sign);
        if half {
            scalar /= Rational::from_integer(2.into());
        }
        Self {
            family,
            n,
            scalar,
            factors,
            exponent: family.exponent(),
        }
    }

    pub fn numerator_degree(&self) -> usize {
        self.factors.len()
    }

    pub fn denominator_degree(&self) -> usize {
        self.exponent * (self.n as usize + 1)
    }

    /// Numerator as an integer polynomial in `k` together with its divisor:
    /// `scalar · ∏(a·k + b) = numerator(k) / divisor`.
    pub fn numerator(&self) -> (IntPolynomial, BigInt) {
        let poly = self
            .factors
            .iter()
            .fold(IntPolynomial::constant(1), |acc, &(a, b)| {
                &acc * &IntPolynomial::linear(a, b)
            });
        (poly.scale(self.scalar.numer()), self.scalar.denom().clone())
    }

    pub fn eval(&self, k: i64) -> Rational {
        let num: BigInt = self
            .factors
            .iter()
            .map(|&(a, b)| BigInt::from(a * k + b))
            .product();
        let den: BigInt = (0..=self.n as i64)
            .map(|j| num_traits::pow(BigInt::from(k + j), self.exponent))
            .product();
        &self.scalar * Rational::new(num, den)
    }
}

/// Exact `k`-th term of the series.
pub fn summand(family: Family, n: u64, k: i64) -> Result<Rational> {
    if k < 1 {
        return Err(Error::InvalidArgument(format!("summation index k = {k} < 1")));
    }
    Ok(SummandSpec::new(family, n).eval(k))
}

/// `A_{j,s}` for `j = 0..=n`, `s = 1..=e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PFDecomposition {
    pub family: Family,
    pub n: u64,
    pub exponent: usize,
    coeffs: Vec<Vec<Rational>>,
}

impl PFDecomposition {
    pub fn coeff(&self, j: usize, s: usize) -> &Rational {
        &self.coeffs[j][s - 1]
    }

    /// `Σ_j A_{j,s}`.
    pub fn layer_sum(&self, s: usize) -> Rational {
        self.coeffs.iter().map(|row| &row[s - 1]).sum()
    }

    /// `Σ_{j,s} A_{j,s} / (k+j)^s`.
    pub fn eval(&self, k: i64) -> Rational {
        let mut acc = Rational::zero();
        for (j, row) in self.coeffs.iter().enumerate() {
            let base = Rational::from_integer(BigInt::from(k + j as i64));
            let mut power = base.clone();
            for a in row {
                acc += a / &power;
                power *= &base;
            }
        }
        acc
    }
}

/// Truncated power series in `h`, lowest order first.
type Series = Vec<Rational>;

fn times_linear(series: &mut Series, a: i64, c: i64) {
    let (a, c) = (Rational::from_integer(a.into()), Rational::from_integer(c.into()));
    for t in (0..series.len()).rev() {
        let lower = if t > 0 { &a * &series[t - 1] } else { Rational::zero() };
        series[t] = &c * &series[t] + lower;
    }
}

fn divide_by_shift(series: &mut Series, d: i64) {
    let d = Rational::from_integer(d.into());
    for t in 0..series.len() {
        if t > 0 {
            let prev = series[t - 1].clone();
            series[t] -= prev;
        }
        series[t] /= &d;
    }
}

/// Partial fractions by Taylor-expanding `(k+j)^e · R(k)` around each pole
/// `k = −j`: with `h = k + j`, the coefficient of `h^t` is `A_{j, e−t}`.
pub fn partial_fractions(family: Family, n: u64) -> Result<PFDecomposition> {
    let spec = SummandSpec::new(family, n);
    if spec.numerator_degree() >= spec.denominator_degree() {
        return Err(Error::DegreeViolation {
            numerator: spec.numerator_degree(),
            denominator: spec.denominator_degree(),
        });
    }
    let e = spec.exponent;
    let ni = n as i64;
    let mut coeffs = Vec::with_capacity(n as usize + 1);
    for j in 0..=ni {
        let mut series: Series = vec![Rational::zero(); e];
        series[0] = spec.scalar.clone();
        for &(a, b) in &spec.factors {
            // a·k + b = a·h + (b − a·j)
            times_linear(&mut series, a, b - a * j);
        }
        for i in (0..=ni).filter(|&i| i != j) {
            for _ in 0..e {
                divide_by_shift(&mut series, i - j);
            }
        }
        series.reverse();
        coeffs.push(series);
    }
    Ok(PFDecomposition {
        family,
        n,
        exponent: e,
        coeffs,
    })
}

/// Coefficients of `series = u·ζ(a) + w·ζ(b) − v`, with `(a, b) = (5, 3)`
/// for the R5 families and `(3, 2)` for the R23 families.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearFormCoeffs {
    pub family: Family,
    pub n: u64,
    pub u: Rational,
    pub w: Rational,
    pub v: Rational,
}

impl LinearFormCoeffs {
    /// `u·ζ(a) + w·ζ(b) − v` with ζ enclosures of width `10^-digits`.
    pub fn enclose(&self, oracle: &mut ZetaOracle, digits: u32) -> Result<RationalInterval> {
        let (a, b) = self.family.zeta_arguments();
        let za = oracle.get(a, digits)?;
        let zb = oracle.get(b, digits)?;
        Ok(za.scale(&self.u).add(&zb.scale(&self.w)).add_rational(&-&self.v))
    }
}

pub fn linear_form_coeffs(family: Family, n: u64) -> Result<LinearFormCoeffs> {
    let pf = partial_fractions(family, n)?;
    linear_form_from(&pf)
}

pub fn linear_form_from(pf: &PFDecomposition) -> Result<LinearFormCoeffs> {
    for &s in pf.family.vanishing_layers() {
        let sum = pf.layer_sum(s);
        if !sum.is_zero() {
            return Err(Error::LinearFormViolation {
                family: pf.family.to_string(),
                n: pf.n,
                s,
                sum: sum.to_string(),
            });
        }
    }
    let (a, b) = pf.family.zeta_arguments();
    // v = Σ_{j,s} A_{j,s}·H_{j,s}, H_{j,s} = Σ_{m=1..j} m^−s.
    let mut v = Rational::zero();
    let mut harmonic = vec![Rational::zero(); pf.exponent];
    for j in 0..=pf.n as usize {
        if j > 0 {
            let m = Rational::from_integer(BigInt::from(j));
            let mut power = m.clone();
            for h in harmonic.iter_mut() {
                *h += power.recip();
                power *= &m;
            }
        }
        for s in 1..=pf.exponent {
            v += pf.coeff(j, s) * &harmonic[s - 1];
        }
    }
    Ok(LinearFormCoeffs {
        family: pf.family,
        n: pf.n,
        u: pf.layer_sum(a as usize),
        w: pf.layer_sum(b as usize),
        v,
    })
}

/// `(q, p, p̃)` assembled from two linear forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossProducts {
    pub q: Rational,
    pub p: Rational,
    pub p_tilde: Rational,
}

/// `q = u·w̃ − ũ·w`, `p = w̃·v − w·ṽ`, `p̃ = u·ṽ − ũ·v` from `r_n` and `r̃_n`.
pub fn cross_products(n: u64) -> Result<CrossProducts> {
    let r = linear_form_coeffs(Family::R5, n)?;
    let rt = linear_form_coeffs(Family::R5Tilde, n)?;
    Ok(cross_products_from(&r, &rt))
}

pub fn cross_products_from(r: &LinearFormCoeffs, rt: &LinearFormCoeffs) -> CrossProducts {
    CrossProducts {
        q: &r.u * &rt.w - &rt.u * &r.w,
        p: &rt.w * &r.v - &r.w * &rt.v,
        p_tilde: &r.u * &rt.v - &rt.u * &r.v,
    }
}

/// The ζ(3)/ζ(2) analogue from `r′_n` and `r̃′_n`. With the leading minus
/// of `r′_n` the pattern enters with the opposite sign:
/// `q′ = ũ′·w′ − u′·w̃′`, `p′ = w′·ṽ′ − w̃′·v′`, `p̃′ = ũ′·v′ − u′·ṽ′`.
pub fn cross_products23(n: u64) -> Result<CrossProducts> {
    let r = linear_form_coeffs(Family::R23, n)?;
    let rt = linear_form_coeffs(Family::R23Tilde, n)?;
    Ok(cross_products23_from(&r, &rt))
}

pub fn cross_products23_from(r: &LinearFormCoeffs, rt: &LinearFormCoeffs) -> CrossProducts {
    let c = cross_products_from(r, rt);
    CrossProducts {
        q: -c.q,
        p: -c.p,
        p_tilde: -c.p_tilde,
    }
}

/// Enclosure of the series itself: an exact partial sum over `k ≤ K` on a
/// decimal grid, plus a tail majorant. For `k > K` each numerator factor
/// satisfies `|a·k + b| ≤ k·(|a| + |b|/K)` and the denominator is at least
/// `k^(e(n+1))`, so the tail is at most `C·K^(1−g)/(g−1)` with `g` the
/// degree gap (always ≥ 2).
pub fn series_enclosure(family: Family, n: u64, digits: u32) -> Result<RationalInterval> {
    let spec = SummandSpec::new(family, n);
    let gap = (spec.denominator_degree() - spec.numerator_degree()) as u32;
    debug_assert!(gap >= 2);
    let target = Rational::new(BigInt::one(), pow10(digits));
    let mut cutoff: i64 = 16;
    while cutoff <= 1 << 22 {
        let k = Rational::from_integer(cutoff.into());
        let c = spec.factors.iter().fold(spec.scalar.abs(), |acc, &(a, b)| {
            acc * (Rational::from_integer(a.abs().into())
                + Rational::from_integer(b.abs().into()) / &k)
        });
        let k_pow = num_traits::pow(k.clone(), gap as usize - 1);
        let tail = c / (k_pow * Rational::from_integer((gap - 1).into()));
        if &tail * Rational::from_integer(4.into()) > target {
            cutoff *= 2;
            continue;
        }
        let work = digits + 2 + (cutoff as u64).ilog10() + 1;
        let scale = pow10(work);
        let (mut lo, mut hi) = (BigInt::zero(), BigInt::zero());
        for k in 1..=cutoff {
            let term = spec.eval(k);
            let (q, r) = (term.numer() * &scale).div_mod_floor(term.denom());
            hi += if r.is_zero() { q.clone() } else { &q + 1 };
            lo += q;
        }
        let lo = Rational::new(lo, scale.clone()) - &tail;
        let hi = Rational::new(hi, scale) + &tail;
        let iv = RationalInterval::new(lo, hi)?;
        if iv.width() <= target {
            return Ok(iv);
        }
        cutoff *= 2;
    }
    Err(Error::PrecisionExhausted(format!(
        "{family} n = {n}: tail bound too weak for {digits} digits"
    )))
}

/// `(u_n, w_n, v_n)` for `n = 0..=n_max`.
pub fn coefficient_sequences(family: Family, n_max: u64) -> Result<Vec<LinearFormCoeffs>> {
    (0..=n_max).map(|n| linear_form_coeffs(family, n)).collect()
}

/// `Σ_j A_{j,s} = 0` on every vanishing layer, all four families,
/// `0 ≤ n ≤ n_max`.
pub fn linear_form_structure_check(n_max: u64) -> Result<VerificationReport> {
    let check = "series.linear_form_structure";
    let range = [0, n_max as i64];
    for n in 0..=n_max {
        for family in Family::ALL {
            match linear_form_coeffs(family, n) {
                Ok(_) => {}
                Err(Error::LinearFormViolation { s, sum, .. }) => {
                    return Ok(VerificationReport::fail(
                        check,
                        range,
                        n as i64,
                        format!("{family}: layer s = {s} sums to {sum}"),
                    ))
                }
                Err(e) => return Err(e),
            }
        }
    }
    Ok(VerificationReport::pass(check, range))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{lcm_upto, rat};
    use proptest::prelude::*;

    #[test]
    fn first_summands() {
        assert_eq!(summand(Family::R5, 0, 3).unwrap(), rat(1, 243));
        assert!(summand(Family::R5, 1, 1).unwrap().is_zero());
        assert_eq!(summand(Family::R5Tilde, 0, 2).unwrap(), rat(-1, 8));
        assert!(summand(Family::R5, 2, 0).is_err());
    }

    #[test]
    fn degrees() {
        for n in 0..6 {
            let r5 = SummandSpec::new(Family::R5, n);
            assert_eq!(r5.numerator_degree(), 2 * n as usize + 1);
            assert_eq!(r5.denominator_degree(), 6 * (n as usize + 1));
            let r23 = SummandSpec::new(Family::R23, n);
            assert_eq!(r23.numerator_degree(), n as usize);
        }
    }

    #[test]
    fn trivial_decomposition_at_zero() {
        let pf = partial_fractions(Family::R5, 0).unwrap();
        for s in 1..=6 {
            let expected = if s == 5 { rat(1, 1) } else { rat(0, 1) };
            assert_eq!(*pf.coeff(0, s), expected);
        }
    }

    #[test]
    fn printed_linear_forms() {
        let check = |family, n, u: Rational, w: Rational, v: Rational| {
            let c = linear_form_coeffs(family, n).unwrap();
            assert_eq!((c.u, c.w, c.v), (u, w, v), "{family} n = {n}");
        };
        check(Family::R5, 0, rat(1, 1), rat(0, 1), rat(0, 1));
        check(Family::R5, 1, rat(9, 1), rat(33, 1), rat(49, 1));
        check(Family::R5, 2, rat(469, 1), rat(6125, 4), rat(74463, 32));
        check(Family::R5Tilde, 1, rat(2, 1), rat(12, 1), rat(33, 2));
        check(Family::R5Tilde, 2, rat(552, 1), rat(1764, 1), rat(43085, 16));
        // Taken verbatim from the series definition: r̃₀ = −ζ(3).
        check(Family::R5Tilde, 0, rat(0, 1), rat(-1, 1), rat(0, 1));
        check(Family::R23, 0, rat(-1, 1), rat(0, 1), rat(0, 1));
        check(Family::R23Tilde, 0, rat(0, 1), rat(1, 1), rat(0, 1));
    }

    #[test]
    fn cross_products_reproduce_initial_data() {
        let c0 = cross_products(0).unwrap();
        assert_eq!((c0.q, c0.p, c0.p_tilde), (rat(-1, 1), rat(0, 1), rat(0, 1)));
        let c1 = cross_products(1).unwrap();
        assert_eq!((c1.q, c1.p, c1.p_tilde), (rat(42, 1), rat(87, 2), rat(101, 2)));
        assert_eq!(cross_products(2).unwrap().q, rat(-17934, 1));
        let d1 = cross_products23(1).unwrap();
        assert_eq!((d1.q, d1.p, d1.p_tilde), (rat(14, 1), rat(17, 1), rat(23, 1)));
        let d2 = cross_products23(2).unwrap();
        assert_eq!((d2.q, d2.p, d2.p_tilde), (rat(978, 1), rat(9405, 8), rat(6435, 4)));
    }

    #[test]
    fn inclusions_for_coefficients() {
        for family in [Family::R5, Family::R5Tilde] {
            for n in 1..=8u64 {
                let c = linear_form_coeffs(family, n).unwrap();
                let d = Rational::from_integer(lcm_upto(n).unwrap());
                let two = rat(2, 1);
                assert!((&two * &c.u).is_integer());
                assert!((&two * num_traits::pow(d.clone(), 2) * &c.w).is_integer());
                assert!((&two * num_traits::pow(d, 5) * &c.v).is_integer());
                assert!(c.u.is_positive() && c.w.is_positive() && c.v.is_positive());
            }
        }
    }

    #[test]
    fn enclosures_match_linear_forms() {
        let mut oracle = ZetaOracle::new();
        let z5 = series_enclosure(Family::R5, 0, 8).unwrap();
        assert!(z5.overlaps(&oracle.get(5, 12).unwrap()));
        for family in Family::ALL {
            for n in 1..=3 {
                let numeric = series_enclosure(family, n, 10).unwrap();
                let exact = linear_form_coeffs(family, n).unwrap().enclose(&mut oracle, 30).unwrap();
                assert!(numeric.overlaps(&exact), "{family} n = {n}: {numeric} vs {exact}");
            }
        }
        let r1 = series_enclosure(Family::R5, 1, 6).unwrap();
        assert!(r1.is_positive());
        assert!(series_enclosure(Family::R5Tilde, 1, 6).unwrap().is_negative());
    }

    /// Rational-coefficient polynomial product, lowest order first.
    fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        out
    }

    fn linear_power(j: i64, e: usize) -> Vec<Rational> {
        let mut p = vec![rat(1, 1)];
        for _ in 0..e {
            p = poly_mul(&p, &[rat(j, 1), rat(1, 1)]);
        }
        p
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(16))]

        /// Σ A_{j,s} · Π_i (k+i)^e / (k+j)^s, expanded as a polynomial,
        /// must equal the summand's numerator coefficient by coefficient.
        #[test]
        fn recombination_reproduces_numerator(family_ix in 0usize..4, n in 0u64..=6) {
            let family = Family::ALL[family_ix];
            let spec = SummandSpec::new(family, n);
            let pf = partial_fractions(family, n).unwrap();
            let e = spec.exponent;
            let mut total = vec![Rational::zero(); spec.denominator_degree()];
            for j in 0..=n as i64 {
                let mut others = vec![rat(1, 1)];
                for i in (0..=n as i64).filter(|&i| i != j) {
                    others = poly_mul(&others, &linear_power(i, e));
                }
                for s in 1..=e {
                    let term = poly_mul(&others, &linear_power(j, e - s));
                    for (t, c) in term.iter().enumerate() {
                        total[t] += pf.coeff(j as usize, s) * c;
                    }
                }
            }
            let (num, divisor) = spec.numerator();
            let divisor = Rational::from_integer(divisor);
            for (t, c) in total.iter().enumerate() {
                prop_assert_eq!(c, &(Rational::from_integer(num.coeff(t)) / &divisor), "k^{}", t);
            }
        }

        #[test]
        fn decomposition_evaluates_like_summand(family_ix in 0usize..4, n in 0u64..=8, k in 1i64..40) {
            let family = Family::ALL[family_ix];
            let pf = partial_fractions(family, n).unwrap();
            prop_assert_eq!(pf.eval(k), summand(family, n, k).unwrap());
        }
    }
}
