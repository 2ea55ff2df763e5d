use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::interval::RationalInterval;
use super::poly::IntPolynomial;
use super::rational::{pow10, Rational};
use crate::error::{Error, Result};

type RatPoly = Vec<Rational>;

fn to_rat_poly(p: &IntPolynomial) -> RatPoly {
    p.coeffs()
        .iter()
        .map(|c| Rational::from_integer(c.clone()))
        .collect()
}

fn trim(p: &mut RatPoly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn rem(num: &RatPoly, den: &RatPoly) -> RatPoly {
    let mut r = num.clone();
    let lead = den.last().expect("nonzero divisor");
    while r.len() >= den.len() && !r.is_empty() {
        let shift = r.len() - den.len();
        let factor = r.last().unwrap() / lead;
        for (i, d) in den.iter().enumerate() {
            r[shift + i] -= &factor * d;
        }
        r.pop();
        trim(&mut r);
    }
    r
}

fn eval(p: &RatPoly, x: &Rational) -> Rational {
    p.iter()
        .rev()
        .fold(Rational::zero(), |acc, c| acc * x + c)
}

fn sturm_chain(p: &IntPolynomial) -> Vec<RatPoly> {
    let mut chain = vec![to_rat_poly(p), to_rat_poly(&p.derivative())];
    loop {
        let n = chain.len();
        if chain[n - 1].is_empty() {
            chain.pop();
            break;
        }
        let r: RatPoly = rem(&chain[n - 2], &chain[n - 1])
            .into_iter()
            .map(|c| -c)
            .collect();
        if r.is_empty() {
            break;
        }
        chain.push(r);
    }
    chain
}

fn sign_variations(chain: &[RatPoly], x: &Rational) -> usize {
    let mut count = 0;
    let mut last: Option<bool> = None;
    for p in chain {
        let v = eval(p, x);
        if v.is_zero() {
            continue;
        }
        let positive = v.is_positive();
        if last.is_some_and(|l| l != positive) {
            count += 1;
        }
        last = Some(positive);
    }
    count
}

/// Enclosures of every real root of a squarefree integer polynomial, in
/// ascending order, each of width at most `10^-digits`.
///
/// Roots are separated by Sturm-sequence counting inside the Cauchy bound
/// `1 + max|a_i| / |a_n|`, then refined by bisection. Refinement only ever
/// halves the current bracket, so the enclosures for `digits + 1` lie
/// inside those for `digits`.
pub fn isolate_real_roots(p: &IntPolynomial, digits: u32) -> Result<Vec<RationalInterval>> {
    let Some(degree) = p.degree() else {
        return Err(Error::ZeroPolynomial);
    };
    if degree == 0 {
        return Ok(Vec::new());
    }
    let g = polynomial_gcd(&to_rat_poly(p), &to_rat_poly(&p.derivative()));
    if g.len() > 1 {
        return Err(Error::NotSquarefree(g.len() - 1));
    }
    let chain = sturm_chain(p);
    let lead = Rational::from_integer(p.leading().unwrap().abs());
    let bound = Rational::one() + Rational::from_integer(p.max_abs_coeff()) / lead;
    let tol = Rational::new(BigInt::one(), pow10(digits));
    let two = Rational::from_integer(2.into());
    let count = |a: &Rational, b: &Rational| {
        sign_variations(&chain, a) - sign_variations(&chain, b)
    };

    // Brackets (a, b] holding exactly one root, in ascending order.
    let mut isolated = Vec::new();
    let mut pending = vec![(-&bound, bound.clone())];
    while let Some((a, b)) = pending.pop() {
        match count(&a, &b) {
            0 => {}
            1 => isolated.push((a, b)),
            _ => {
                let mid = (&a + &b) / &two;
                // Pushed right half first so the left half is processed next.
                pending.push((mid.clone(), b));
                pending.push((a, mid));
            }
        }
    }

    let rat_p = to_rat_poly(p);
    let mut out = Vec::with_capacity(isolated.len());
    for (mut a, mut b) in isolated {
        let mut exact = None;
        while &b - &a > tol {
            if eval(&rat_p, &b).is_zero() {
                exact = Some(b.clone());
                break;
            }
            let mid = (&a + &b) / &two;
            if count(&a, &mid) == 1 {
                b = mid;
            } else {
                a = mid;
            }
        }
        if exact.is_none() && eval(&rat_p, &b).is_zero() {
            exact = Some(b.clone());
        }
        out.push(match exact {
            Some(r) => RationalInterval::point(r),
            None => RationalInterval::new(a, b).expect("bisection keeps a < b"),
        });
    }
    out.sort_by(|x, y| x.lo().partial_cmp(y.lo()).unwrap_or(Ordering::Equal));
    Ok(out)
}

fn polynomial_gcd(a: &RatPoly, b: &RatPoly) -> RatPoly {
    let (mut x, mut y) = (a.clone(), b.clone());
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let r = rem(&x, &y);
        x = y;
        y = r;
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::parse_rational;

    fn mu_cubic() -> IntPolynomial {
        IntPolynomial::from_descending(&[1, 2368, -752, -16])
    }

    fn q(text: &str) -> Rational {
        parse_rational(text).unwrap()
    }

    #[test]
    fn three_real_roots_of_mu_cubic() {
        let roots = isolate_real_roots(&mu_cubic(), 8).unwrap();
        assert_eq!(roots.len(), 3);
        let printed = ["-2368.31752213", "-0.02001512", "0.33753726"];
        for (root, text) in roots.iter().zip(printed) {
            // Printed values are truncations, so the root lies within 1e-8
            // of them on the side away from zero.
            let t = q(text);
            let step = Rational::new(BigInt::one(), pow10(8));
            let band = if t.is_negative() {
                RationalInterval::new(&t - &step, t.clone()).unwrap()
            } else {
                RationalInterval::new(t.clone(), &t + &step).unwrap()
            };
            assert!(band.overlaps(root), "{text} vs {root}");
            assert!(root.width() <= step);
        }
        for pair in roots.windows(2) {
            assert!(pair[0].hi() < pair[1].lo());
        }
    }

    #[test]
    fn single_real_root_of_mu_prime_cubic() {
        let p = IntPolynomial::from_descending(&[1, -220, 32, -16]);
        let roots = isolate_real_roots(&p, 8).unwrap();
        assert_eq!(roots.len(), 1);
        let band = RationalInterval::new(q("219.85478039"), q("219.85478040")).unwrap();
        assert!(band.overlaps(&roots[0]));
    }

    #[test]
    fn endpoint_signs_differ_and_refinement_nests() {
        let p = mu_cubic();
        let coarse = isolate_real_roots(&p, 6).unwrap();
        let fine = isolate_real_roots(&p, 7).unwrap();
        for (c, f) in coarse.iter().zip(&fine) {
            assert!(c.encloses(f));
            let lo = p.eval_rational(f.lo());
            let hi = p.eval_rational(f.hi());
            assert!(lo.is_positive() != hi.is_positive());
        }
    }

    #[test]
    fn rational_roots_come_back_exact() {
        // (n - 1)(n + 2)(2n - 1)
        let p = &(&IntPolynomial::linear(1, -1) * &IntPolynomial::linear(1, 2))
            * &IntPolynomial::linear(2, -1);
        let roots = isolate_real_roots(&p, 10).unwrap();
        assert_eq!(roots.len(), 3);
        for (root, expected) in roots.iter().zip(["-2", "1/2", "1"]) {
            assert!(root.contains(&q(expected)), "{root}");
        }
    }

    #[test]
    fn rejects_repeated_roots_and_zero() {
        let square = IntPolynomial::linear(1, -3).pow(2);
        assert_eq!(isolate_real_roots(&square, 4), Err(Error::NotSquarefree(1)));
        assert_eq!(
            isolate_real_roots(&IntPolynomial::zero(), 4),
            Err(Error::ZeroPolynomial)
        );
    }
}
