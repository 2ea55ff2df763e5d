//! Gosper's infinite product of upper-triangular 3×3 matrices whose third
//! column tends to `(ζ(5), ζ(3), 1)`, kept as a baseline for comparison.

use std::ops::Mul;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{bit_size, log10_abs, Rational, RationalInterval, ZetaOracle};
use crate::zeta5::{self, Zeta5Sequences};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat3(pub [[Rational; 3]; 3]);

impl Mat3 {
    pub fn identity() -> Self {
        Mat3(std::array::from_fn(|i| {
            std::array::from_fn(|j| if i == j { Rational::one() } else { Rational::zero() })
        }))
    }

    pub fn entry(&self, row: usize, col: usize) -> &Rational {
        &self.0[row][col]
    }

    pub fn is_upper_unitriangular_corner(&self) -> bool {
        self.0[1][0].is_zero()
            && self.0[2][0].is_zero()
            && self.0[2][1].is_zero()
            && self.0[2][2].is_one()
    }

    /// Largest bit size among the numerators and denominators.
    pub fn max_bits(&self) -> u64 {
        self.0.iter().flatten().map(bit_size).max().unwrap_or(0)
    }
}

impl Mul for &Mat3 {
    type Output = Mat3;

    fn mul(self, rhs: &Mat3) -> Mat3 {
        Mat3(std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                (0..3)
                    .filter(|&k| !self.0[i][k].is_zero() && !rhs.0[k][j].is_zero())
                    .map(|k| &self.0[i][k] * &rhs.0[k][j])
                    .sum()
            })
        }))
    }
}

/// The `n`-th factor
/// `[[−n/(2(2n+1)), 1/(2n(2n+1)), 1/n⁴], [0, −n/(2(2n+1)), 5/(4n²)], [0, 0, 1]]`.
pub fn factor(n: u64) -> Result<Mat3> {
    if n == 0 {
        return Err(Error::InvalidArgument("factor index must be ≥ 1".into()));
    }
    let n = n as i64;
    let r = |a: i64, b: i64| Rational::new(a.into(), b.into());
    let diag = r(-n, 2 * (2 * n + 1));
    let z = Rational::zero;
    Ok(Mat3([
        [diag.clone(), r(1, 2 * n * (2 * n + 1)), r(1, n * n * n * n)],
        [z(), diag, r(5, 4 * n * n)],
        [z(), z(), Rational::one()],
    ]))
}

/// `factor(1)·factor(2)···factor(N)`, left to right.
pub fn prefix_product(n_factors: u64) -> Result<Mat3> {
    (1..=n_factors).try_fold(Mat3::identity(), |acc, n| Ok(&acc * &factor(n)?))
}

/// The same product by recursive halving of `lo..=hi`.
pub fn tree_product(lo: u64, hi: u64) -> Result<Mat3> {
    match hi.checked_sub(lo) {
        None => Ok(Mat3::identity()),
        Some(0) => factor(lo),
        Some(_) => {
            let mid = lo + (hi - lo) / 2;
            Ok(&tree_product(lo, mid)? * &tree_product(mid + 1, hi)?)
        }
    }
}

/// Upper bound of `|x − ζ|` over the enclosure of ζ.
pub fn distance(x: &Rational, zeta: &RationalInterval) -> Rational {
    let a = (x - zeta.lo()).abs();
    let b = (x - zeta.hi()).abs();
    a.max(b)
}

/// Digits after the point guaranteed correct, `⌊−log₁₀ err⌋`.
fn correct_digits(err: &Rational) -> i64 {
    match log10_abs(err) {
        Some(l) => (-l).floor() as i64,
        None => i64::MAX,
    }
}

/// Gosper at `N` factors next to the recursion at index `n`.
#[derive(Clone, Debug, PartialEq)]
pub struct Comparison {
    pub n_factors: u64,
    pub recursion_n: u64,
    pub gosper_error5: Rational,
    pub gosper_error3: Rational,
    pub recursion_error5: Rational,
    pub recursion_error3: Rational,
    pub gosper_bits: u64,
    pub recursion_bits: u64,
}

impl Comparison {
    pub fn gosper_digits(&self) -> (i64, i64) {
        (correct_digits(&self.gosper_error5), correct_digits(&self.gosper_error3))
    }

    pub fn recursion_digits(&self) -> (i64, i64) {
        (correct_digits(&self.recursion_error5), correct_digits(&self.recursion_error3))
    }
}

pub fn compare_with_recursion(
    n_factors: u64,
    n: u64,
    oracle: &mut ZetaOracle,
) -> Result<Comparison> {
    let m = prefix_product(n_factors.max(1))?;
    let seqs: Zeta5Sequences = zeta5::sequences(n.max(2))?;
    let i = n as usize;
    let (q, p, pt) = (&seqs.q[i], &seqs.p[i], &seqs.p_tilde[i]);
    let gosper_scale = (n_factors as f64 * 0.61) as u32;
    let recursion_scale = (q.numer().bits() / 3) as u32 + (n as u32 * 2);
    let digits = 30 + gosper_scale.max(recursion_scale);
    let z5 = oracle.get(5, digits)?;
    let z3 = oracle.get(3, digits)?;
    let bits = [q, p, pt].into_iter().map(bit_size).max().unwrap();
    Ok(Comparison {
        n_factors,
        recursion_n: n,
        gosper_error5: distance(m.entry(0, 2), &z5),
        gosper_error3: distance(m.entry(1, 2), &z3),
        recursion_error5: distance(&(p / q), &z5),
        recursion_error3: distance(&(pt / q), &z3),
        gosper_bits: m.max_bits(),
        recursion_bits: bits,
    })
}
