//! The auxiliary recursions satisfied by the series `r_n`, `r̃_n` and their
//! coefficient sequences, with `b` tied to `a` through reflection.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{
    isolate_real_roots, ln_abs, lcm_upto, pow10, IntPolynomial, Rational, RationalInterval,
    ZetaOracle,
};
use crate::recurrence::{self, CoefficientRule, RecurrenceSystem, SolutionTriple};
use crate::report::VerificationReport;
use crate::series::{self, Family, LinearFormCoeffs};
use crate::zeta5::{by_modulus, first_non_integral, CharacteristicRootsMu, Zeta5Coefficients};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuxCoefficients {
    pub b0: IntPolynomial,
    pub b1: IntPolynomial,
    pub b2: IntPolynomial,
    pub bt0: IntPolynomial,
    pub bt1: IntPolynomial,
    pub bt2: IntPolynomial,
}

impl AuxCoefficients {
    pub fn printed() -> Self {
        Self::from_reflection(&Zeta5Coefficients::printed())
    }

    /// `b₀(n) = −a₀(−n)`, `b₁(n) = a₂(−n)`, `b₂(n) = −a₁(−n)`; the tilde
    /// family has no such relation and is transcribed.
    pub fn from_reflection(a: &Zeta5Coefficients) -> Self {
        let bt2_inner = IntPolynomial::from_descending(&[
            48802112, -201803328, 267014032, -69927236, -95912858, 37524471, 30257812, -9523224,
            -8524312, 2138687, 1507490, -398634, -111012, 33408,
        ]);
        Self {
            b0: -&a.a0.compose_linear(-1, 0),
            b1: a.a2.compose_linear(-1, 0),
            b2: -&a.a1.compose_linear(-1, 0),
            bt0: IntPolynomial::from_descending(&[
                41218, 35648, -932, -13190, -5128, 811, 957, 174,
            ]),
            bt1: IntPolynomial::from_descending(&[
                3874492, -14084302, 12425954, 8641603, -15230839, -1369195, 8618417, -623249,
                -2785973, 308165, 495325, -40670, -37632,
            ]),
            bt2: bt2_inner.scale(&BigInt::from(2)),
        }
    }

    /// `n(n+1)⁵b₀(n−1)·u(n+1) − 2n·b₁(n)·u(n) − b₂(n)·u(n−1)
    ///  + 2(n−1)⁵(2n−1)b₀(n)·u(n−2) = 0`.
    pub fn system_8(&self) -> RecurrenceSystem {
        let n = IntPolynomial::linear(1, 0);
        RecurrenceSystem::new(
            "aux8",
            CoefficientRule::new(vec![self.b0.compose_linear(1, -1)])
                .times(n.clone(), 1)
                .times(IntPolynomial::linear(1, 1), 5),
            CoefficientRule::constant(-2).times(n, 1).times(self.b1.clone(), 1),
            CoefficientRule::constant(-1).times(self.b2.clone(), 1),
            CoefficientRule::constant(2)
                .times(IntPolynomial::linear(1, -1), 5)
                .times(IntPolynomial::linear(2, -1), 1)
                .times(self.b0.clone(), 1),
        )
    }

    /// `n³(n+1)³b̃₀(n−1)·u(n+1) − 2n·b̃₁(n)·u(n) − b̃₂(n)·u(n−1)
    ///  + 2n(n−1)⁴(2n−3)b̃₀(n)·u(n−2) = 0`.
    pub fn system_9(&self) -> RecurrenceSystem {
        let n = IntPolynomial::linear(1, 0);
        RecurrenceSystem::new(
            "aux9",
            CoefficientRule::new(vec![self.bt0.compose_linear(1, -1)])
                .times(n.clone(), 3)
                .times(IntPolynomial::linear(1, 1), 3),
            CoefficientRule::constant(-2).times(n.clone(), 1).times(self.bt1.clone(), 1),
            CoefficientRule::constant(-1).times(self.bt2.clone(), 1),
            CoefficientRule::constant(2)
                .times(n, 1)
                .times(IntPolynomial::linear(1, -1), 4)
                .times(IntPolynomial::linear(2, -3), 1)
                .times(self.bt0.clone(), 1),
        )
    }

    fn pick(&self, tilde: bool, i: usize) -> Result<&IntPolynomial> {
        match (tilde, i) {
            (false, 0) => Ok(&self.b0),
            (false, 1) => Ok(&self.b1),
            (false, 2) => Ok(&self.b2),
            (true, 0) => Ok(&self.bt0),
            (true, 1) => Ok(&self.bt1),
            (true, 2) => Ok(&self.bt2),
            _ => Err(Error::InvalidArgument(format!("coefficient index {i} not in 0..=2"))),
        }
    }
}

pub fn coeff_b(i: usize, n: i64) -> Result<BigInt> {
    Ok(AuxCoefficients::printed().pick(false, i)?.eval_i64(n))
}

pub fn coeff_btilde(i: usize, n: i64) -> Result<BigInt> {
    Ok(AuxCoefficients::printed().pick(true, i)?.eval_i64(n))
}

fn family_tag(family: Family) -> (&'static str, &'static str, &'static str) {
    match family {
        Family::R5 => ("u", "w", "v"),
        _ => ("ũ", "w̃", "ṽ"),
    }
}

/// Exact residuals of `sys` on `u`, `w`, `v` for `2 ≤ n ≤ forms.len() − 2`,
/// then interval residuals of `r = u·ζ(5) + w·ζ(3) − v` for
/// `2 ≤ n ≤ interval_n_max`. Each interval residual must contain zero and be
/// narrower than `10⁻¹⁰` times its largest term; ζ precision escalates
/// until it is.
pub fn verify_recursion(
    check: &str,
    sys: &RecurrenceSystem,
    forms: &[LinearFormCoeffs],
    interval_n_max: u64,
    oracle: &mut ZetaOracle,
) -> Result<VerificationReport> {
    if forms.len() < 4 {
        return Err(Error::InvalidArgument("need coefficients for n = 0..=3 at least".into()));
    }
    let n_max = forms.len() as u64 - 2;
    let range = [2, n_max as i64];
    let names = forms.first().map(|f| family_tag(f.family)).unwrap();
    for n in 2..=n_max as usize {
        let window = &forms[n - 2..=n + 1];
        for (name, get) in [
            (names.0, (|f: &LinearFormCoeffs| &f.u) as fn(&LinearFormCoeffs) -> &Rational),
            (names.1, |f| &f.w),
            (names.2, |f| &f.v),
        ] {
            let terms = [get(&window[3]), get(&window[2]), get(&window[1]), get(&window[0])];
            let residual = sys.residual(n as i64, terms);
            if !residual.is_zero() {
                return Ok(VerificationReport::fail(
                    check,
                    range,
                    n as i64,
                    format!("residual {residual} for {name}"),
                ));
            }
        }
    }
    let r_name = if names.0 == "u" { "r" } else { "r̃" };
    for n in 2..=interval_n_max.min(n_max) as usize {
        let mut digits = 40;
        loop {
            let values = forms[n - 2..=n + 1]
                .iter()
                .map(|f| f.enclose(oracle, digits))
                .collect::<Result<Vec<_>>>()?;
            let (residual, largest) =
                sys.residual_interval(n as i64, [&values[3], &values[2], &values[1], &values[0]]);
            if !residual.contains_zero() {
                return Ok(VerificationReport::fail(
                    check,
                    range,
                    n as i64,
                    format!("residual for {r_name} ⊂ {residual} excludes 0"),
                ));
            }
            if residual.width() * Rational::from_integer(pow10(10)) <= largest {
                break;
            }
            if digits >= 1280 {
                return Ok(VerificationReport::indeterminate(
                    check,
                    range,
                    n as i64,
                    format!("residual for {r_name} too wide at {digits} digits"),
                ));
            }
            digits *= 2;
        }
    }
    Ok(VerificationReport::pass(check, range))
}

/// The `b` recursion on the series coefficients for `2 ≤ n ≤ n_max`; interval
/// residuals of `r_n` for `n ≤ 10`.
pub fn verify_recursion_8(n_max: u64, oracle: &mut ZetaOracle) -> Result<VerificationReport> {
    let forms = series::coefficient_sequences(Family::R5, n_max.max(2) + 1)?;
    let sys = AuxCoefficients::printed().system_8();
    verify_recursion("aux.recursion8", &sys, &forms, n_max.min(10), oracle)
}

/// The `b̃` recursion on the tilde coefficients, as [`verify_recursion_8`].
pub fn verify_recursion_9(n_max: u64, oracle: &mut ZetaOracle) -> Result<VerificationReport> {
    let forms = series::coefficient_sequences(Family::R5Tilde, n_max.max(2) + 1)?;
    let sys = AuxCoefficients::printed().system_9();
    verify_recursion("aux.recursion9", &sys, &forms, n_max.min(10), oracle)
}

/// `r_n > 0`, `r̃_n < 0` and all six coefficients positive, `1 ≤ n ≤ n_max`.
pub fn form_signs_check(n_max: u64, oracle: &mut ZetaOracle) -> Result<VerificationReport> {
    let check = "aux.form_signs";
    let range = [1, n_max as i64];
    for n in 1..=n_max {
        for (family, want_positive) in [(Family::R5, true), (Family::R5Tilde, false)] {
            let f = series::linear_form_coeffs(family, n)?;
            let names = family_tag(family);
            for (name, x) in [(names.0, &f.u), (names.1, &f.w), (names.2, &f.v)] {
                if !x.is_positive() {
                    return Ok(VerificationReport::fail(check, range, n as i64, format!("{name} ≤ 0")));
                }
            }
            let value = certified_series(oracle, &f)?;
            let ok = match &value {
                Some(iv) if want_positive => iv.is_positive(),
                Some(iv) => iv.is_negative(),
                None => {
                    return Ok(VerificationReport::indeterminate(
                        check,
                        range,
                        n as i64,
                        format!("sign of {family} unresolved"),
                    ))
                }
            };
            if !ok {
                return Ok(VerificationReport::fail(
                    check,
                    range,
                    n as i64,
                    format!("{family} ⊂ {} has the wrong sign", value.unwrap()),
                ));
            }
        }
    }
    Ok(VerificationReport::pass(check, range))
}

/// `2u`, `2D²w`, `2D⁵v` integral for both families, `1 ≤ n ≤ n_max`.
pub fn inclusions_check(n_max: u64) -> Result<VerificationReport> {
    let check = "aux.inclusions";
    let range = [1, n_max as i64];
    for n in 1..=n_max {
        let d = lcm_upto(n)?;
        let d2 = &d * &d;
        let d5 = &d2 * &d2 * &d;
        for family in [Family::R5, Family::R5Tilde] {
            let f = series::linear_form_coeffs(family, n)?;
            let names = family_tag(family);
            let labels = [format!("2·{}", names.0), format!("2·D²·{}", names.1), format!("2·D⁵·{}", names.2)];
            let tests = [
                (labels[0].as_str(), BigInt::from(2), &f.u),
                (labels[1].as_str(), &d2 * 2, &f.w),
                (labels[2].as_str(), &d5 * 2, &f.v),
            ];
            if let Some(detail) = first_non_integral(&tests) {
                return Ok(VerificationReport::fail(check, range, n as i64, detail));
            }
        }
    }
    Ok(VerificationReport::pass(check, range))
}

/// `r_n` evaluated with enough digits to fix its sign, or `None` if even
/// the finest attempt straddles zero.
fn certified_series(oracle: &mut ZetaOracle, f: &LinearFormCoeffs) -> Result<Option<RationalInterval>> {
    let mut digits = aux_form_digits(f);
    for _ in 0..4 {
        let iv = f.enclose(oracle, digits)?;
        if !iv.contains_zero() {
            return Ok(Some(iv));
        }
        digits = digits * 2 + 10;
    }
    Ok(None)
}

/// `|r_n| ≈ λ₁ⁿ` with `log₁₀(1/λ₁) ≈ 2.772`; the coefficients carry
/// `log₁₀|u|` further digits that cancel.
fn aux_form_digits(f: &LinearFormCoeffs) -> u32 {
    let size = f.u.numer().abs().to_string().len() as u64 + f.v.denom().to_string().len() as u64;
    (size + (f.n * 2772).div_ceil(1000) + 15) as u32
}

/// Real roots of `λ³ − 188λ² − 2368λ + 4`, by increasing modulus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacteristicRootsLambda {
    pub lambda1: RationalInterval,
    pub lambda2: RationalInterval,
    pub lambda3: RationalInterval,
}

impl CharacteristicRootsLambda {
    /// `[λ₁λ₂, λ₁λ₃, λ₂λ₃]`.
    pub fn products(&self) -> [RationalInterval; 3] {
        [
            self.lambda1.mul(&self.lambda2),
            self.lambda1.mul(&self.lambda3),
            self.lambda2.mul(&self.lambda3),
        ]
    }

    /// Whether each `μ_i` enclosure lies inside the matching product.
    pub fn matches(&self, mu: &CharacteristicRootsMu) -> bool {
        let [p1, p2, p3] = self.products();
        p1.encloses(&mu.mu1) && p2.encloses(&mu.mu2) && p3.encloses(&mu.mu3)
    }
}

pub fn lambda_polynomial() -> IntPolynomial {
    IntPolynomial::from_descending(&[1, -188, -2368, 4])
}

pub fn char_roots_lambda(digits: u32) -> Result<CharacteristicRootsLambda> {
    let roots = by_modulus(isolate_real_roots(&lambda_polynomial(), digits)?);
    let [lambda1, lambda2, lambda3]: [RationalInterval; 3] = roots
        .try_into()
        .map_err(|_| Error::InvalidArgument("expected three real roots".into()))?;
    Ok(CharacteristicRootsLambda {
        lambda1,
        lambda2,
        lambda3,
    })
}

/// `μ₁ = λ₁λ₂`, `μ₂ = λ₁λ₃`, `μ₃ = λ₂λ₃` with products narrower than `10⁻¹²`.
pub fn lambda_check() -> Result<VerificationReport> {
    let check = "aux.lambda_products";
    let lambda = char_roots_lambda(16)?;
    let mu = crate::zeta5::char_roots_mu(24)?;
    let limit = Rational::new(1.into(), pow10(12));
    if lambda.products().iter().any(|p| p.width() > limit) {
        return Ok(VerificationReport::indeterminate(check, [0, 0], 0, "products wider than 1e-12"));
    }
    if !lambda.matches(&mu) {
        return Ok(VerificationReport::fail(check, [0, 0], 0, "a μ enclosure escapes its λ product"));
    }
    Ok(VerificationReport::pass(check, [0, 0]))
}

/// `log|x_n|/n` for the auxiliary sequences; `r` and `r_tilde` tend to
/// `log λ₁`, the six coefficients to `log λ₃`.
#[derive(Clone, Debug, PartialEq)]
pub struct AuxRateReport {
    pub n: u64,
    pub u: Option<f64>,
    pub w: Option<f64>,
    pub v: Option<f64>,
    pub u_tilde: Option<f64>,
    pub w_tilde: Option<f64>,
    pub v_tilde: Option<f64>,
    pub r: Option<f64>,
    pub r_tilde: Option<f64>,
    pub target_forms: f64,
    pub target_growth: f64,
}

/// Runs the `b` and `b̃` recursions from the series values at `n = 0, 1, 2` up to `n`.
pub fn coefficients_by_recursion(family: Family, n: u64) -> Result<LinearFormCoeffs> {
    let seeds = series::coefficient_sequences(family, 2)?;
    if n <= 2 {
        return Ok(seeds[n as usize].clone());
    }
    let aux = AuxCoefficients::printed();
    let sys = match family {
        Family::R5 => aux.system_8(),
        Family::R5Tilde => aux.system_9(),
        _ => return Err(Error::InvalidArgument(format!("no auxiliary recursion for {family}"))),
    };
    let window = |get: fn(&LinearFormCoeffs) -> &Rational| {
        [get(&seeds[0]).clone(), get(&seeds[1]).clone(), get(&seeds[2]).clone()]
    };
    let start = SolutionTriple::from_initial(vec![window(|f| &f.u), window(|f| &f.w), window(|f| &f.v)]);
    let end = recurrence::run_to(&sys, &start, n)?;
    Ok(LinearFormCoeffs {
        family,
        n,
        u: end.current(0).clone(),
        w: end.current(1).clone(),
        v: end.current(2).clone(),
    })
}

pub fn rates_aux(n: u64, oracle: &mut ZetaOracle) -> Result<AuxRateReport> {
    if n == 0 {
        return Err(Error::InvalidArgument("rate index must be ≥ 1".into()));
    }
    let f = coefficients_by_recursion(Family::R5, n)?;
    let ft = coefficients_by_recursion(Family::R5Tilde, n)?;
    let rate = |x: &Rational| ln_abs(x).map(|l| l / n as f64);
    let r = certified_series(oracle, &f)?;
    let r_tilde = certified_series(oracle, &ft)?;
    let roots = char_roots_lambda(12)?;
    Ok(AuxRateReport {
        n,
        u: rate(&f.u),
        w: rate(&f.w),
        v: rate(&f.v),
        u_tilde: rate(&ft.u),
        w_tilde: rate(&ft.w),
        v_tilde: rate(&ft.v),
        r: r.and_then(|iv| rate(&iv.midpoint())),
        r_tilde: r_tilde.and_then(|iv| rate(&iv.midpoint())),
        target_forms: ln_abs(&roots.lambda1.midpoint()).unwrap(),
        target_growth: ln_abs(&roots.lambda3.midpoint()).unwrap(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::zeta5::char_roots_mu;

    #[test]
    fn printed_anchor_values() {
        assert_eq!(coeff_b(0, 1).unwrap(), BigInt::from(112558));
        assert_eq!(coeff_btilde(0, 0).unwrap(), BigInt::from(174));
        assert_eq!(coeff_btilde(1, 0).unwrap(), BigInt::from(-37632));
        assert!(coeff_b(3, 0).is_err());
    }

    #[test]
    fn reflection_holds_pointwise() {
        let aux = AuxCoefficients::printed();
        let a = Zeta5Coefficients::printed();
        for n in -10..10 {
            assert_eq!(aux.b0.eval_i64(n), -a.a0.eval_i64(-n));
            assert_eq!(aux.b1.eval_i64(n), a.a2.eval_i64(-n));
            assert_eq!(aux.b2.eval_i64(n), -a.a1.eval_i64(-n));
        }
        assert_eq!(aux.bt0.degree(), Some(7));
        assert_eq!(aux.bt1.degree(), Some(12));
        assert_eq!(aux.bt2.degree(), Some(13));
    }

    #[test]
    fn small_ranges_pass() {
        let mut oracle = ZetaOracle::new();
        assert!(verify_recursion_8(2, &mut oracle).unwrap().passed());
        assert!(verify_recursion_9(6, &mut oracle).unwrap().passed());
    }

    #[test]
    fn zero_sequences_pass() {
        let zero = |n| LinearFormCoeffs {
            family: Family::R5,
            n,
            u: rat(0, 1),
            w: rat(0, 1),
            v: rat(0, 1),
        };
        let forms: Vec<_> = (0..6).map(zero).collect();
        let sys = AuxCoefficients::printed().system_8();
        let r = verify_recursion("zero", &sys, &forms, 4, &mut ZetaOracle::new()).unwrap();
        assert!(r.passed());
    }

    #[test]
    fn perturbed_terms_fail_at_two() {
        let mut oracle = ZetaOracle::new();
        let mut forms = series::coefficient_sequences(Family::R5, 3).unwrap();
        forms[2].u += rat(1, 1);
        let sys = AuxCoefficients::printed().system_8();
        let r = verify_recursion("perturbed", &sys, &forms, 2, &mut oracle).unwrap();
        assert_eq!(r.counterexample.unwrap().n, 2);

        let mut forms = series::coefficient_sequences(Family::R5Tilde, 3).unwrap();
        forms[2].w += rat(1, 1);
        let sys = AuxCoefficients::printed().system_9();
        let r = verify_recursion("perturbed", &sys, &forms, 2, &mut oracle).unwrap();
        assert_eq!(r.counterexample.unwrap().n, 2);
    }

    #[test]
    fn recursion_reproduces_series_coefficients() {
        for family in [Family::R5, Family::R5Tilde] {
            let by_rec = coefficients_by_recursion(family, 7).unwrap();
            assert_eq!(by_rec, series::linear_form_coeffs(family, 7).unwrap());
        }
    }

    #[test]
    fn lambda_products_are_mu() {
        let lambda = char_roots_lambda(16).unwrap();
        assert!(lambda.matches(&char_roots_mu(20).unwrap()));
        for p in lambda.products() {
            assert!(p.width() <= rat(1, 1_000_000_000_000));
        }
        let vieta = lambda.lambda1.mul(&lambda.lambda2).mul(&lambda.lambda3);
        assert!(vieta.contains(&rat(-4, 1)));
    }

    #[test]
    fn lambda_report() {
        assert!(lambda_check().unwrap().passed());
    }

    #[test]
    fn first_signs_and_inclusions() {
        let mut oracle = ZetaOracle::new();
        assert!(form_signs_check(5, &mut oracle).unwrap().passed());
        assert!(inclusions_check(8).unwrap().passed());
    }

    #[test]
    fn rate_at_one_is_log_nine() {
        let r = rates_aux(1, &mut ZetaOracle::new()).unwrap();
        assert!((r.u.unwrap() - 9f64.ln()).abs() < 1e-12);
    }
}
