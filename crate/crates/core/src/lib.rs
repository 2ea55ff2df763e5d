//! Exact rational approximations to ζ(5), ζ(3) and ζ(2) from third-order
//! Apéry-like recursions, cross-checked against the very-well-poised
//! hypergeometric series that generate them.
//!
//! Everything that feeds a verdict is computed in exact rational arithmetic.
//! Numerical constants (ζ values, characteristic roots) are carried as
//! rational enclosures, so every sign or bound claim is certified rather
//! than estimated.
//!
//! Module map:
//!
//! * [`exact`]: rationals, intervals, integer polynomials, `lcm(1..n)`,
//!   Bernoulli numbers, the Euler–Maclaurin ζ oracle, root isolation and
//!   decimal rendering.
//! * [`recurrence`]: the generic four-term recurrence engine.
//! * [`zeta5`]: the recursion for ζ(5) together with ζ(3).
//! * [`series`]: the hypergeometric series, their partial fractions and
//!   linear-form coefficients.
//! * [`auxiliary`]: the recursions satisfied by the series coefficients.
//! * [`zeta23`]: the recursion for ζ(3) together with ζ(2).
//! * [`gosper`]: Gosper's matrix product, used as a baseline.
//! * [`report`]: machine-readable verification verdicts.

pub mod auxiliary;
pub mod error;
pub mod exact;
pub mod gosper;
pub mod recurrence;
pub mod report;
pub mod series;
pub mod zeta23;
pub mod zeta5;

pub use error::{Error, Result};
pub use exact::{IntPolynomial, Rational, RationalInterval};
pub use report::{Counterexample, Status, VerificationReport};
