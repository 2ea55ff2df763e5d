//! Exact arithmetic shared by every other module.

mod bernoulli;
mod decimal;
mod interval;
mod lcm;
mod poly;
pub(crate) mod rational;
mod roots;
mod zeta;

pub use bernoulli::{bernoulli, bernoulli_even_table};
pub use decimal::{log10_abs, ln_abs, to_decimal, to_decimal_interval};
pub use interval::RationalInterval;
pub use lcm::{lcm_upto, LcmSequence};
pub use poly::IntPolynomial;
pub use rational::{bit_size, integer, parse_rational, pow10, rat, Rational};
pub use roots::isolate_real_roots;
pub use zeta::{zeta_enclosure, ZetaOracle};
