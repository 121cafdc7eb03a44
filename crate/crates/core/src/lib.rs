//! Exponent bounds, exact error-probability oracles and Monte Carlo
//! simulation for parameter modulation over AWGN channels with a
//! rate-limited helper.
//!
//! The crate is organised in layers:
//!
//! * [`numeric`] — Gaussian tail/expectation primitives, bisection and
//!   golden-section search. Everything above is built on these.
//! * [`power`] — power-limited capacities, sphere-packing bounds,
//!   Ziv–Zakai style converses and achievable exponents.
//! * [`energy`] — energy-limited PPM bounds for every helper scenario
//!   (fixed rate, cribbed transmitter, side channel, two-sided, hybrid)
//!   plus the helper-quantizer parameter calculator.
//! * [`ct`] — continuous-time, unconstrained-bandwidth translations.
//! * [`oracle`] — exact (quadrature) error probabilities and mean
//!   power-α errors for the PPM schemes; ground truth for the simulator.
//! * [`sim`] — reproducible Monte Carlo simulation of the PPM schemes.
//!
//! All rates, budgets and exponents are in nats. Exponents quoted by the
//! analytical modules are exponent-order statements: sub-exponential
//! factors are dropped, which is why the simulator is validated against
//! [`oracle`] and not against the bounds.

// Validation guards are written as `!(x >= 0.0)` on purpose: the negated
// form rejects NaN, the "clean" comparison would let it through.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod ct;
pub mod energy;
mod error;
mod exponent;
pub mod numeric;
pub mod oracle;
pub mod power;
pub mod sim;

pub use error::Error;
pub use exponent::Exponent;
pub use numeric::Tolerance;

/// Crate result alias.
pub type Result<T> = std::result::Result<T, Error>;
