//! Exact iteration of four-term linear recurrences
//!
//! ```text
//! c₊₁(n)·x(n+1) + c₀(n)·x(n) + c₋₁(n)·x(n−1) + c₋₂(n)·x(n−2) = 0
//! ```
//!
//! with polynomial coefficients, carrying several solutions at once.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{bit_size, IntPolynomial, Rational, RationalInterval};

/// One coefficient of a recurrence, kept as a product of polynomial
/// factors such as `(n+1)^6 · a₀(n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientRule {
    factors: Vec<IntPolynomial>,
}

impl CoefficientRule {
    pub fn new(factors: Vec<IntPolynomial>) -> Self {
        Self { factors }
    }

    pub fn constant(c: i64) -> Self {
        Self::new(vec![IntPolynomial::constant(c)])
    }

    /// Appends `factor^power`.
    pub fn times(mut self, factor: IntPolynomial, power: u32) -> Self {
        for _ in 0..power {
            self.factors.push(factor.clone());
        }
        self
    }

    pub fn eval(&self, n: i64) -> BigInt {
        let x = BigInt::from(n);
        self.factors
            .iter()
            .fold(BigInt::from(1), |acc, f| acc * f.eval(&x))
    }

    pub fn expanded(&self) -> IntPolynomial {
        self.factors
            .iter()
            .fold(IntPolynomial::constant(1), |acc, f| &acc * f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecurrenceSystem {
    name: String,
    /// `[c₊₁, c₀, c₋₁, c₋₂]`
    coefficients: [CoefficientRule; 4],
}

impl RecurrenceSystem {
    pub fn new(
        name: impl Into<String>,
        lead: CoefficientRule,
        current: CoefficientRule,
        previous: CoefficientRule,
        second_previous: CoefficientRule,
    ) -> Self {
        Self {
            name: name.into(),
            coefficients: [lead, current, previous, second_previous],
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rules(&self) -> &[CoefficientRule; 4] {
        &self.coefficients
    }

    /// `[c₊₁(n), c₀(n), c₋₁(n), c₋₂(n)]`.
    pub fn coefficients_at(&self, n: i64) -> [BigInt; 4] {
        [0, 1, 2, 3].map(|i| self.coefficients[i].eval(n))
    }

    /// Left-hand side at `n` for `terms = [x(n+1), x(n), x(n−1), x(n−2)]`.
    pub fn residual(&self, n: i64, terms: [&Rational; 4]) -> Rational {
        self.coefficients_at(n)
            .into_iter()
            .zip(terms)
            .map(|(c, x)| Rational::from_integer(c) * x)
            .sum()
    }

    /// Interval version of [`RecurrenceSystem::residual`]; also returns the
    /// largest term magnitude (upper bound) for scale comparisons.
    pub fn residual_interval(
        &self,
        n: i64,
        terms: [&RationalInterval; 4],
    ) -> (RationalInterval, Rational) {
        let mut acc = RationalInterval::point(Rational::zero());
        let mut largest = Rational::zero();
        for (c, x) in self.coefficients_at(n).into_iter().zip(terms) {
            let term = x.scale(&Rational::from_integer(c));
            let mag = term.abs().hi().clone();
            if mag > largest {
                largest = mag;
            }
            acc = acc.add(&term);
        }
        (acc, largest)
    }
}

/// `(x(n−2), x(n−1), x(n))` for one solution.
pub type Window = [Rational; 3];

/// Exact state of several simultaneous solutions at index `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionTriple {
    n: u64,
    solutions: Vec<Window>,
}

impl SolutionTriple {
    pub fn new(n: u64, solutions: Vec<Window>) -> Self {
        Self { n, solutions }
    }

    /// State at `n = 2` from initial data `(x₀, x₁, x₂)` per solution.
    pub fn from_initial(initial: Vec<Window>) -> Self {
        Self::new(2, initial)
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn solutions(&self) -> &[Window] {
        &self.solutions
    }

    /// `x(n)` of solution `i`.
    pub fn current(&self, i: usize) -> &Rational {
        &self.solutions[i][2]
    }

    pub fn max_bits(&self) -> u64 {
        self.solutions
            .iter()
            .flat_map(|w| w.iter())
            .map(bit_size)
            .max()
            .unwrap_or(0)
    }
}

/// Advances every solution by one index.
pub fn step(sys: &RecurrenceSystem, state: &SolutionTriple) -> Result<SolutionTriple> {
    let n = state.n as i64;
    let [lead, c0, c1, c2] = sys.coefficients_at(n).map(Rational::from_integer);
    if lead.is_zero() {
        return Err(Error::LeadingCoefficientVanishes(n));
    }
    let solutions = state
        .solutions
        .iter()
        .map(|[x2, x1, x0]| {
            let next = -(&c0 * x0 + &c1 * x1 + &c2 * x2) / &lead;
            [x1.clone(), x0.clone(), next]
        })
        .collect();
    Ok(SolutionTriple::new(state.n + 1, solutions))
}

/// Reconstructs the previous state, the inverse of [`step`]. Needs
/// `c₋₂(n−1) ≠ 0`.
pub fn step_back(sys: &RecurrenceSystem, state: &SolutionTriple) -> Result<SolutionTriple> {
    let n = state.n as i64 - 1;
    let [lead, c0, c1, c2] = sys.coefficients_at(n).map(Rational::from_integer);
    if c2.is_zero() {
        return Err(Error::InvalidArgument(format!(
            "{}: c₋₂ vanishes at n = {n}, cannot step back",
            sys.name
        )));
    }
    let solutions = state
        .solutions
        .iter()
        .map(|[x1, x0, next]| {
            let x2 = -(&lead * next + &c0 * x0 + &c1 * x1) / &c2;
            [x2, x1.clone(), x0.clone()]
        })
        .collect();
    Ok(SolutionTriple::new(state.n - 1, solutions))
}

fn check_range(initial: &SolutionTriple, n_max: u64) -> Result<()> {
    if n_max < initial.n {
        return Err(Error::BackwardRange {
            start: initial.n,
            n_max,
        });
    }
    Ok(())
}

/// Every state from `initial` up to index `n_max`.
pub fn run(
    sys: &RecurrenceSystem,
    initial: &SolutionTriple,
    n_max: u64,
) -> Result<Vec<SolutionTriple>> {
    check_range(initial, n_max)?;
    let mut out = vec![initial.clone()];
    while out.last().unwrap().n < n_max {
        let next = step(sys, out.last().unwrap())?;
        out.push(next);
    }
    Ok(out)
}

/// Final state at `n_max` only, in constant memory.
pub fn run_to(sys: &RecurrenceSystem, initial: &SolutionTriple, n_max: u64) -> Result<SolutionTriple> {
    check_range(initial, n_max)?;
    let mut state = initial.clone();
    while state.n < n_max {
        state = step(sys, &state)?;
    }
    Ok(state)
}

/// Full sequences `x₀..=x(n_max)` for each solution, starting from initial
/// data at indices 0, 1, 2. Aborts once any value needs more than
/// `max_bits` bits.
pub fn sequences(
    sys: &RecurrenceSystem,
    initial: &[Window],
    n_max: u64,
    max_bits: Option<u64>,
) -> Result<Vec<Vec<Rational>>> {
    let keep = (n_max + 1).min(3) as usize;
    let mut out: Vec<Vec<Rational>> = initial.iter().map(|w| w[..keep].to_vec()).collect();
    let mut state = SolutionTriple::from_initial(initial.to_vec());
    while state.n < n_max {
        state = step(sys, &state)?;
        if let Some(limit) = max_bits {
            let bits = state.max_bits();
            if bits > limit {
                return Err(Error::BitBudgetExceeded { bits, limit });
            }
        }
        for (seq, w) in out.iter_mut().zip(&state.solutions) {
            seq.push(w[2].clone());
        }
    }
    Ok(out)
}
