//! A third-order recursion for simultaneous approximations to ζ(3) and
//! ζ(2): `p′/q′ → ζ(3)` and `p̃′/q′ → ζ(2)`.

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::exact::{
    isolate_real_roots, ln_abs, rat, IntPolynomial, LcmSequence, Rational, RationalInterval,
    ZetaOracle,
};
use crate::recurrence::{self, CoefficientRule, RecurrenceSystem, Window};
use crate::report::VerificationReport;
use crate::series::{self, CrossProducts, Family, LinearFormCoeffs};
use crate::zeta5::{
    certified_form, first_non_integral, form_digits, interval_rate, interval_step_rate, rate,
    step_rate, RateReport,
};

/// `ã₀`, `ã₁`, `ã₂`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Zeta23Coefficients {
    pub a0: IntPolynomial,
    pub a1: IntPolynomial,
    pub a2: IntPolynomial,
}

impl Zeta23Coefficients {
    pub fn printed() -> Self {
        let a1_inner =
            IntPolynomial::from_descending(&[104060, 127710, 12788, -34525, -8482, 3298, 1071]);
        Self {
            a0: IntPolynomial::from_descending(&[946, -731, 153]),
            a1: a1_inner.scale(&BigInt::from(2)),
            a2: IntPolynomial::from_descending(&[3784, -1032, -1925, 853, 328, -184]),
        }
    }

    /// `(n+1)⁴ã₀(n)·q(n+1) − ã₁(n)·q(n) + 4(2n−1)ã₂(n)·q(n−1)
    ///  − 4(n−1)²(2n−1)(2n−3)ã₀(n+1)·q(n−2) = 0`.
    pub fn system(&self) -> RecurrenceSystem {
        let two_n_minus_1 = IntPolynomial::linear(2, -1);
        RecurrenceSystem::new(
            "zeta23",
            CoefficientRule::new(vec![self.a0.clone()]).times(IntPolynomial::linear(1, 1), 4),
            CoefficientRule::constant(-1).times(self.a1.clone(), 1),
            CoefficientRule::constant(4)
                .times(two_n_minus_1.clone(), 1)
                .times(self.a2.clone(), 1),
            CoefficientRule::constant(-4)
                .times(IntPolynomial::linear(1, -1), 2)
                .times(two_n_minus_1, 1)
                .times(IntPolynomial::linear(2, -3), 1)
                .times(self.a0.compose_linear(1, 1), 1),
        )
    }
}

pub fn coeff_atilde(i: usize, n: i64) -> Result<BigInt> {
    let c = Zeta23Coefficients::printed();
    match i {
        0 => Ok(c.a0.eval_i64(n)),
        1 => Ok(c.a1.eval_i64(n)),
        2 => Ok(c.a2.eval_i64(n)),
        _ => Err(Error::InvalidArgument(format!("ã_{i} does not exist"))),
    }
}

/// Initial data `(x₀, x₁, x₂)` for `q′`, `p′`, `p̃′`.
pub fn initial_data23() -> [Window; 3] {
    [
        [rat(1, 1), rat(14, 1), rat(978, 1)],
        [rat(0, 1), rat(17, 1), rat(9405, 8)],
        [rat(0, 1), rat(23, 1), rat(6435, 4)],
    ]
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Zeta23Sequences {
    pub q: Vec<Rational>,
    pub p: Vec<Rational>,
    pub p_tilde: Vec<Rational>,
}

impl Zeta23Sequences {
    pub fn n_max(&self) -> u64 {
        self.q.len() as u64 - 1
    }
}

pub fn sequences23(n_max: u64) -> Result<Zeta23Sequences> {
    sequences23_with(&Zeta23Coefficients::printed(), n_max, None)
}

pub fn sequences23_with(
    coeffs: &Zeta23Coefficients,
    n_max: u64,
    max_bits: Option<u64>,
) -> Result<Zeta23Sequences> {
    let mut seqs = recurrence::sequences(&coeffs.system(), &initial_data23(), n_max, max_bits)?;
    let p_tilde = seqs.pop().unwrap();
    let p = seqs.pop().unwrap();
    let q = seqs.pop().unwrap();
    Ok(Zeta23Sequences { q, p, p_tilde })
}

/// `log₁₀ e^1.3102 ≈ 0.569`, rounded up.
const DECAY_PER_1000: u64 = 570;

/// `p′/q′` and `p̃′/q′` with enclosures of `|ζ(3) − p′/q′|`, `|ζ(2) − p̃′/q′|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Approximation23 {
    pub n: u64,
    pub zeta3: Rational,
    pub zeta2: Rational,
    pub error3: RationalInterval,
    pub error2: RationalInterval,
}

/// `ℓ′ = q′ζ(3) − p′` and `ℓ̃′ = q′ζ(2) − p̃′`, sign-certified or `None`.
fn forms23(
    seqs: &Zeta23Sequences,
    n: u64,
    oracle: &mut ZetaOracle,
) -> Result<(Option<RationalInterval>, Option<RationalInterval>)> {
    let i = n as usize;
    let digits = form_digits(&seqs.q[i], n, DECAY_PER_1000);
    Ok((
        certified_form(oracle, 3, &seqs.q[i], &seqs.p[i], digits)?,
        certified_form(oracle, 2, &seqs.q[i], &seqs.p_tilde[i], digits)?,
    ))
}

pub fn approximation23(
    seqs: &Zeta23Sequences,
    n: u64,
    oracle: &mut ZetaOracle,
) -> Result<Approximation23> {
    if n > seqs.n_max() {
        return Err(Error::InvalidArgument(format!("index {n} beyond {}", seqs.n_max())));
    }
    let i = n as usize;
    let q = &seqs.q[i];
    let (ell, ell_tilde) = forms23(seqs, n, oracle)?;
    let unresolved = || Error::PrecisionExhausted(format!("linear forms at n = {n} unresolved"));
    let inv = q.recip();
    Ok(Approximation23 {
        n,
        zeta3: &seqs.p[i] / q,
        zeta2: &seqs.p_tilde[i] / q,
        error3: ell.ok_or_else(unresolved)?.scale(&inv).abs(),
        error2: ell_tilde.ok_or_else(unresolved)?.scale(&inv).abs(),
    })
}

/// `q′_n`, `p′_n`, `p̃′_n > 0` for `0 ≤ n ≤ n_max` (with `p′₀ = p̃′₀ = 0`
/// allowed).
pub fn positivity_check23(seqs: &Zeta23Sequences, n_max: u64) -> VerificationReport {
    let check = "zeta23.positivity";
    let range = [1, n_max as i64];
    for n in 1..=n_max.min(seqs.n_max()) as usize {
        for (name, seq) in [("q′", &seqs.q), ("p′", &seqs.p), ("p̃′", &seqs.p_tilde)] {
            if !seq[n].is_positive() {
                return VerificationReport::fail(check, range, n as i64, format!("{name}_{n} ≤ 0"));
            }
        }
    }
    VerificationReport::pass(check, range)
}

/// `q′ ∈ ℤ`, `D³p′ ∈ ℤ`, `D²p̃′ ∈ ℤ` for `1 ≤ n ≤ n_max`.
pub fn integrality_check23(seqs: &Zeta23Sequences, n_max: u64) -> VerificationReport {
    let check = "zeta23.integrality";
    let range = [1, n_max as i64];
    for (n, d) in LcmSequence::new().take(n_max.min(seqs.n_max()) as usize) {
        let i = n as usize;
        let d2 = &d * &d;
        let tests = [
            ("q′", BigInt::from(1), &seqs.q[i]),
            ("D³·p′", &d2 * &d, &seqs.p[i]),
            ("D²·p̃′", d2, &seqs.p_tilde[i]),
        ];
        if let Some(detail) = first_non_integral(&tests) {
            return VerificationReport::fail(check, range, n as i64, detail);
        }
    }
    VerificationReport::pass(check, range)
}

/// Series coefficients of `r′_n`, `r̃′_n` and their cross-products.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Oracle23 {
    pub r: LinearFormCoeffs,
    pub r_tilde: LinearFormCoeffs,
    pub cross: CrossProducts,
}

pub fn oracle23(n: u64) -> Result<Oracle23> {
    let r = series::linear_form_coeffs(Family::R23, n)?;
    let r_tilde = series::linear_form_coeffs(Family::R23Tilde, n)?;
    let cross = series::cross_products23_from(&r, &r_tilde);
    Ok(Oracle23 { r, r_tilde, cross })
}

/// Recursion output equals the series cross-products for `0 ≤ n ≤ n_max`.
pub fn oracle_check23(seqs: &Zeta23Sequences, n_max: u64) -> Result<VerificationReport> {
    let check = "zeta23.oracle";
    let range = [0, n_max as i64];
    for n in 0..=n_max.min(seqs.n_max()) {
        let c = oracle23(n)?.cross;
        let i = n as usize;
        for (name, ours, theirs) in [
            ("q′", &seqs.q[i], &c.q),
            ("p′", &seqs.p[i], &c.p),
            ("p̃′", &seqs.p_tilde[i], &c.p_tilde),
        ] {
            if ours != theirs {
                return Ok(VerificationReport::fail(
                    check,
                    range,
                    n as i64,
                    format!("{name}: recursion {ours}, series {theirs}"),
                ));
            }
        }
    }
    Ok(VerificationReport::pass(check, range))
}

/// Real root of `μ³ − 220μ² + 32μ − 16` and the common modulus of the
/// complex pair, `√(16/μ₃)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacteristicRootsMuPrime {
    pub mu3: RationalInterval,
    pub modulus: RationalInterval,
}

pub fn characteristic_polynomial23() -> IntPolynomial {
    IntPolynomial::from_descending(&[1, -220, 32, -16])
}

pub fn char_roots_mu_prime(digits: u32) -> Result<CharacteristicRootsMuPrime> {
    let roots = isolate_real_roots(&characteristic_polynomial23(), digits + 4)?;
    let [mu3]: [RationalInterval; 1] = roots
        .try_into()
        .map_err(|_| Error::InvalidArgument("expected exactly one real root".into()))?;
    let modulus = RationalInterval::point(rat(16, 1)).div(&mu3)?.sqrt(digits + 4)?;
    Ok(CharacteristicRootsMuPrime {
        mu3: mu3.round_outward(digits + 2),
        modulus: modulus.round_outward(digits + 2),
    })
}

/// Printed leading digits of `μ₃` and `log|μ₂|`.
pub const PRINTED_MU3: &str = "219.85478039";
pub const PRINTED_LOG_MU2: &str = "-1.31018925";

/// `μ₃` matches its printed digits and `log|μ₂|` is within `10⁻⁶` of the
/// printed value.
pub fn roots_check23() -> Result<VerificationReport> {
    let check = "zeta23.roots";
    let r = char_roots_mu_prime(16)?;
    if !crate::zeta5::truncation_matches(&r.mu3, PRINTED_MU3) {
        return Ok(VerificationReport::fail(check, [0, 0], 0, format!("μ₃ ⊂ {}", r.mu3.round_outward(12))));
    }
    let log = ln_abs(&r.modulus.midpoint()).unwrap();
    let printed: f64 = PRINTED_LOG_MU2.parse().unwrap();
    if (log - printed).abs() >= 1e-6 {
        return Ok(VerificationReport::fail(check, [0, 0], 0, format!("log|μ₂| = {log:.9}")));
    }
    if !r.modulus.square().mul(&r.mu3).contains(&rat(16, 1)) {
        return Ok(VerificationReport::fail(check, [0, 0], 0, "|μ₂|²·μ₃ excludes 16"));
    }
    Ok(VerificationReport::pass(check, [0, 0]))
}

/// Rates of `ℓ′`, `ℓ̃′`, `q′`, `p′`, `p̃′` against `log|μ₂|`, `log μ₃`.
pub fn rate_report23(seqs: &Zeta23Sequences, n: u64, oracle: &mut ZetaOracle) -> Result<RateReport> {
    if n == 0 || n > seqs.n_max() {
        return Err(Error::InvalidArgument(format!("rate index {n} outside 1..={}", seqs.n_max())));
    }
    let i = n as usize;
    let (ell, ell_tilde) = forms23(seqs, n, oracle)?;
    let (ell_before, _) = forms23(seqs, n - 1, oracle)?;
    let roots = char_roots_mu_prime(12)?;
    Ok(RateReport {
        n,
        ell_step: interval_step_rate(&ell, &ell_before),
        q_step: step_rate(&seqs.q[i], &seqs.q[i - 1]),
        ell: interval_rate(&ell, n),
        ell_tilde: interval_rate(&ell_tilde, n),
        q: rate(&seqs.q[i], n),
        p: rate(&seqs.p[i], n),
        p_tilde: rate(&seqs.p_tilde[i], n),
        target_forms: ln_abs(&roots.modulus.midpoint()).unwrap(),
        target_growth: ln_abs(&roots.mu3.midpoint()).unwrap(),
    })
}

/// Geometric-mean error ratio `(e(n+w)/e(n))^(1/w)` of both approximations
/// lies in `[lo, hi]` for every `n ∈ [from, to − w]`. Single steps are not
/// enough: the complex pair `μ₁,₂` makes the one-step ratio oscillate.
pub fn convergence_ratio_check(
    seqs: &Zeta23Sequences,
    from: u64,
    to: u64,
    window: u64,
    band: (Rational, Rational),
    oracle: &mut ZetaOracle,
) -> Result<VerificationReport> {
    let check = "zeta23.convergence_ratio";
    let range = [from as i64, to as i64];
    if window == 0 || from + window > to || to > seqs.n_max() {
        return Err(Error::InvalidArgument(format!(
            "ratio window {window} does not fit {from}..={to} within 0..={}",
            seqs.n_max()
        )));
    }
    let top = &seqs.q[to as usize];
    oracle.get(3, form_digits(top, to, DECAY_PER_1000))?;
    oracle.get(2, form_digits(top, to, DECAY_PER_1000))?;
    let approximations = (from..=to)
        .map(|n| approximation23(seqs, n, oracle))
        .collect::<Result<Vec<_>>>()?;
    let w = window as usize;
    let lo = num_traits::pow(band.0.clone(), w);
    let hi = num_traits::pow(band.1.clone(), w);
    for (i, pair) in approximations.windows(w + 1).enumerate() {
        let (first, last) = (&pair[0], &pair[w]);
        for (name, e0, e1) in [
            ("ζ(3)", &first.error3, &last.error3),
            ("ζ(2)", &first.error2, &last.error2),
        ] {
            let ratio = e1.div(e0)?;
            let n = (from as usize + i) as i64;
            if ratio.hi() < &lo || ratio.lo() > &hi {
                return Ok(VerificationReport::fail(
                    check,
                    range,
                    n,
                    format!("{name} error ratio over {w} steps ⊂ {}", ratio.round_outward(30)),
                ));
            }
            if ratio.lo() < &lo || ratio.hi() > &hi {
                return Ok(VerificationReport::indeterminate(
                    check,
                    range,
                    n,
                    format!("{name} error ratio over {w} steps straddles the band"),
                ));
            }
        }
    }
    Ok(VerificationReport::pass(check, range))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::parse_rational;

    #[test]
    fn anchors() {
        assert_eq!(coeff_atilde(0, 1).unwrap(), BigInt::from(368));
        assert_eq!(coeff_atilde(1, 0).unwrap(), BigInt::from(2142));
        assert_eq!(coeff_atilde(2, 0).unwrap(), BigInt::from(-184));
        let c = Zeta23Coefficients::printed();
        assert_eq!((c.a0.degree(), c.a1.degree(), c.a2.degree()), (Some(2), Some(6), Some(5)));
    }

    #[test]
    fn first_terms() {
        let s = sequences23(5).unwrap();
        assert_eq!(s.q[3], rat(103820, 1));
        assert_eq!(s.p[3], rat(13478135, 108));
        assert_eq!(s.p_tilde[3], rat(3073987, 18));
        assert!(positivity_check23(&s, 5).passed());
        assert!(integrality_check23(&s, 5).passed());
        assert!(oracle_check23(&s, 5).unwrap().passed());
    }

    #[test]
    fn first_approximation() {
        let s = sequences23(2).unwrap();
        let a = approximation23(&s, 1, &mut ZetaOracle::new()).unwrap();
        assert_eq!(a.zeta3, rat(17, 14));
        let e3 = a.error3.midpoint();
        let e2 = a.error2.midpoint();
        assert!(e3 > rat(121, 10000) && e3 < rat(123, 10000), "{e3}");
        assert!(e2 > rat(20, 10000) && e2 < rat(22, 10000), "{e2}");
    }

    #[test]
    fn oracle_at_small_n() {
        let o = oracle23(0).unwrap();
        assert_eq!((o.r.u.clone(), o.r.w.clone(), o.r.v.clone()), (rat(-1, 1), rat(0, 1), rat(0, 1)));
        let c = oracle23(1).unwrap().cross;
        assert_eq!((c.q, c.p, c.p_tilde), (rat(14, 1), rat(17, 1), rat(23, 1)));
    }

    #[test]
    fn roots() {
        let r = char_roots_mu_prime(10).unwrap();
        let band = RationalInterval::new(
            parse_rational("219.85478039").unwrap(),
            parse_rational("219.85478040").unwrap(),
        )
        .unwrap();
        assert!(band.encloses(&r.mu3));
        let log = ln_abs(&r.modulus.midpoint()).unwrap();
        assert!((log + 1.31018925).abs() < 1e-6);
        assert!(r.modulus.square().mul(&r.mu3).contains(&rat(16, 1)));
    }

    #[test]
    fn ratio_band_on_a_short_range() {
        let s = sequences23(40).unwrap();
        let band = (rat(1, 10000), rat(1, 100));
        let mut oracle = ZetaOracle::new();
        let r = convergence_ratio_check(&s, 20, 40, 5, band.clone(), &mut oracle).unwrap();
        assert!(r.passed(), "{r}");
        let tight = (rat(1, 10000), rat(1, 1000));
        assert!(!convergence_ratio_check(&s, 20, 40, 5, tight, &mut oracle).unwrap().passed());
    }

    #[test]
    fn printed_roots() {
        assert!(roots_check23().unwrap().passed());
    }

    #[test]
    fn rate_at_one() {
        let s = sequences23(3).unwrap();
        let r = rate_report23(&s, 1, &mut ZetaOracle::new()).unwrap();
        assert!((r.q.unwrap() - 14f64.ln()).abs() < 1e-12);
    }
}
