use std::cmp::Ordering;
use std::fmt;

use num_traits::{Signed, Zero};

use super::rational::{ceil_scaled, floor_scaled, from_scaled, Rational};
use crate::error::{Error, Result};

/// Closed interval `[lo, hi]` with exact rational endpoints.
///
/// All arithmetic is outward-conservative: the result contains every
/// pointwise result of the operands.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalInterval {
    lo: Rational,
    hi: Rational,
}

impl RationalInterval {
    pub fn new(lo: Rational, hi: Rational) -> Result<Self> {
        if lo > hi {
            return Err(Error::EmptyInterval);
        }
        Ok(Self { lo, hi })
    }

    pub fn point(x: Rational) -> Self {
        Self {
            lo: x.clone(),
            hi: x,
        }
    }

    /// `[center - radius, center + radius]`; `radius` must be non-negative.
    pub fn ball(center: &Rational, radius: &Rational) -> Self {
        let radius = radius.abs();
        Self {
            lo: center - &radius,
            hi: center + &radius,
        }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(2.into())
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        self.contains(&Rational::zero())
    }

    /// True when `other` lies inside `self`.
    pub fn encloses(&self, other: &RationalInterval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn overlaps(&self, other: &RationalInterval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn intersect(&self, other: &RationalInterval) -> Option<RationalInterval> {
        let lo = (&self.lo).max(&other.lo).clone();
        let hi = (&self.hi).min(&other.hi).clone();
        (lo <= hi).then_some(Self { lo, hi })
    }

    /// Certified sign: `Some(Greater)` if every point is positive,
    /// `Some(Less)` if every point is negative, `Some(Equal)` for `[0, 0]`,
    /// `None` otherwise.
    pub fn sign(&self) -> Option<Ordering> {
        let zero = Rational::zero();
        if self.lo > zero {
            Some(Ordering::Greater)
        } else if self.hi < zero {
            Some(Ordering::Less)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(Ordering::Equal)
        } else {
            None
        }
    }

    pub fn is_positive(&self) -> bool {
        self.sign() == Some(Ordering::Greater)
    }

    pub fn is_negative(&self) -> bool {
        self.sign() == Some(Ordering::Less)
    }

    pub fn neg(&self) -> Self {
        Self {
            lo: -&self.hi,
            hi: -&self.lo,
        }
    }

    pub fn abs(&self) -> Self {
        let zero = Rational::zero();
        if self.lo >= zero {
            self.clone()
        } else if self.hi <= zero {
            self.neg()
        } else {
            let hi = (-&self.lo).max(self.hi.clone());
            Self { lo: zero, hi }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self {
            lo: &self.lo - &other.hi,
            hi: &self.hi - &other.lo,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let products = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let mut lo = products[0].clone();
        let mut hi = products[0].clone();
        for p in &products[1..] {
            if *p < lo {
                lo = p.clone();
            }
            if *p > hi {
                hi = p.clone();
            }
        }
        Self { lo, hi }
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        if other.contains_zero() {
            return Err(Error::IntervalDivisionByZero);
        }
        let reciprocal = Self {
            lo: other.hi.recip(),
            hi: other.lo.recip(),
        };
        Ok(self.mul(&reciprocal))
    }

    /// Multiplication by an exact scalar.
    pub fn scale(&self, factor: &Rational) -> Self {
        let a = &self.lo * factor;
        let b = &self.hi * factor;
        if a <= b {
            Self { lo: a, hi: b }
        } else {
            Self { lo: b, hi: a }
        }
    }

    pub fn add_rational(&self, x: &Rational) -> Self {
        Self {
            lo: &self.lo + x,
            hi: &self.hi + x,
        }
    }

    /// Square of the interval (tighter than `self.mul(self)` across zero).
    pub fn square(&self) -> Self {
        let a = self.abs();
        Self {
            lo: &a.lo * &a.lo,
            hi: &a.hi * &a.hi,
        }
    }

    /// Enclosure of `sqrt` over a non-negative interval, each endpoint
    /// bracketed to within `10^-digits`.
    pub fn sqrt(&self, digits: u32) -> Result<Self> {
        if self.lo.is_negative() {
            return Err(Error::InvalidArgument(
                "square root of an interval with negative points".into(),
            ));
        }
        let tol = Rational::new(1.into(), super::rational::pow10(digits));
        let lo = sqrt_bracket(&self.lo, &tol).0;
        let hi = sqrt_bracket(&self.hi, &tol).1;
        Ok(Self { lo, hi })
    }

    /// Widens the endpoints outward to the decimal grid `10^-decimals`.
    pub fn round_outward(&self, decimals: u32) -> Self {
        Self {
            lo: from_scaled(floor_scaled(&self.lo, decimals), decimals),
            hi: from_scaled(ceil_scaled(&self.hi, decimals), decimals),
        }
    }
}

/// `(a, b)` with `a <= sqrt(x) <= b` and `b - a <= tol`.
fn sqrt_bracket(x: &Rational, tol: &Rational) -> (Rational, Rational) {
    let one = Rational::from_integer(1.into());
    let two = Rational::from_integer(2.into());
    let mut lo = Rational::zero();
    let mut hi = if *x > one { x.clone() } else { one };
    while &hi - &lo > *tol {
        let mid = (&lo + &hi) / &two;
        match (&mid * &mid).cmp(x) {
            Ordering::Greater => hi = mid,
            Ordering::Less => lo = mid,
            Ordering::Equal => return (mid.clone(), mid),
        }
    }
    (lo, hi)
}

impl From<Rational> for RationalInterval {
    fn from(x: Rational) -> Self {
        Self::point(x)
    }
}

impl fmt::Display for RationalInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}
