use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::rational::Rational;
use crate::error::{Error, Result};

/// Tangent numbers `T_1..=T_m` (1, 2, 16, 272, ...) by the integer-only
/// in-place recurrence of Brent and Harvey.
fn tangent_numbers(m: usize) -> Vec<BigInt> {
    let mut t = vec![BigInt::zero(); m + 1];
    if m == 0 {
        return t;
    }
    t[1] = BigInt::one();
    for k in 2..=m {
        t[k] = &t[k - 1] * (k - 1);
    }
    for k in 2..=m {
        for j in k..=m {
            t[j] = &t[j - 1] * (j - k) + &t[j] * (j - k + 2);
        }
    }
    t
}

/// `[B_0, B_2, ..., B_{2m}]`.
pub fn bernoulli_even_table(m: usize) -> Vec<Rational> {
    let tangents = tangent_numbers(m);
    let mut out = Vec::with_capacity(m + 1);
    out.push(Rational::one());
    for (k, tk) in tangents.iter().enumerate().skip(1) {
        let four_k = BigInt::one() << (2 * k);
        let den = &four_k * (&four_k - 1u32);
        let mut b = Rational::new(tk * (2 * k), den);
        if k % 2 == 0 {
            b = -b;
        }
        out.push(b);
    }
    out
}

/// Exact Bernoulli number `B_index` for even `index`.
pub fn bernoulli(index: u32) -> Result<Rational> {
    if index % 2 == 1 {
        return Err(Error::OddBernoulliIndex(index));
    }
    let m = (index / 2) as usize;
    Ok(bernoulli_even_table(m).swap_remove(m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    /// All `B_0..=B_n` from `sum_{k<=m} C(m+1, k) B_k = 0`, independent of
    /// the tangent-number route.
    fn bernoulli_by_binomial_recurrence(n: usize) -> Vec<Rational> {
        let mut b = vec![Rational::one()];
        for m in 1..=n {
            let mut binom = BigInt::one();
            let mut acc = Rational::zero();
            for (k, bk) in b.iter().enumerate() {
                acc += Rational::from_integer(binom.clone()) * bk;
                binom = binom * (m + 1 - k) / (k + 1);
            }
            b.push(-acc / Rational::from_integer(BigInt::from(m + 1)));
        }
        b
    }

    #[test]
    fn first_values() {
        assert_eq!(bernoulli(0).unwrap(), rat(1, 1));
        assert_eq!(bernoulli(2).unwrap(), rat(1, 6));
        assert_eq!(bernoulli(4).unwrap(), rat(-1, 30));
        assert_eq!(bernoulli(12).unwrap(), rat(-691, 2730));
        assert_eq!(bernoulli(3), Err(Error::OddBernoulliIndex(3)));
    }

    #[test]
    fn tangent_route_matches_binomial_recurrence() {
        let reference = bernoulli_by_binomial_recurrence(80);
        let table = bernoulli_even_table(40);
        for (m, b) in table.iter().enumerate() {
            assert_eq!(*b, reference[2 * m], "B_{}", 2 * m);
        }
        for odd in (3..80).step_by(2) {
            assert!(reference[odd].is_zero());
        }
    }
}
