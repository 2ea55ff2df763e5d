use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("lcm(1..n) is undefined for n = 0")]
    ZeroLcmIndex,

    #[error("Bernoulli index {0} is odd; only even indices are supported")]
    OddBernoulliIndex(u32),

    #[error("zeta(s) has no finite value for s = {0}")]
    ZetaPole(u32),

    #[error("the zero polynomial has no isolated roots")]
    ZeroPolynomial,

    #[error("polynomial is not squarefree (gcd with derivative has degree {0})")]
    NotSquarefree(usize),

    #[error("empty interval: lower endpoint exceeds upper endpoint")]
    EmptyInterval,

    #[error("interval division by an interval containing zero")]
    IntervalDivisionByZero,

    #[error("leading recurrence coefficient vanishes at n = {0}")]
    LeadingCoefficientVanishes(i64),

    #[error("recurrence cannot be run backwards from n = {n_max} to the initial index {start}")]
    BackwardRange { start: u64, n_max: u64 },

    #[error("summand numerator degree {numerator} is not below denominator degree {denominator}")]
    DegreeViolation { numerator: usize, denominator: usize },

    #[error("{family} n = {n}: the 1/(k+j)^{s} layer does not cancel (sum = {sum})")]
    LinearFormViolation {
        family: String,
        n: u64,
        s: usize,
        sum: String,
    },

    #[error("precision budget exhausted: {0}")]
    PrecisionExhausted(String),

    #[error("big-number size {bits} bits exceeds the configured cap of {limit} bits")]
    BitBudgetExceeded { bits: u64, limit: u64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),
}
