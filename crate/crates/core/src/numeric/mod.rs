//! Shared numeric primitives: Gaussian tail functions, adaptive
//! quadrature of Gaussian expectations, bisection and golden-section
//! search.
//!
//! Everything here is pure and stateless; all routines are safe to call
//! concurrently from any number of threads.

mod gauss;
mod optimize;
mod roots;

pub use gauss::{gauss_expectation, gaussian_cdf, gaussian_pdf, gaussian_tail};
pub use optimize::golden_max;
pub use roots::bisect_root;

/// Convergence control for the iterative routines.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    /// Absolute tolerance; must be positive.
    pub abs_tol: f64,
    /// Relative tolerance; must be non-negative.
    pub rel_tol: f64,
    /// Iteration (or recursion-depth) budget; at least 1.
    pub max_iter: usize,
}

impl Tolerance {
    pub fn new(abs_tol: f64, rel_tol: f64, max_iter: usize) -> crate::Result<Self> {
        if !(abs_tol > 0.0) {
            return Err(crate::Error::domain(format!("abs_tol must be > 0, got {abs_tol}")));
        }
        if !(rel_tol >= 0.0) {
            return Err(crate::Error::domain(format!("rel_tol must be >= 0, got {rel_tol}")));
        }
        if max_iter == 0 {
            return Err(crate::Error::domain("max_iter must be >= 1"));
        }
        Ok(Tolerance { abs_tol, rel_tol, max_iter })
    }

    /// Tightened tolerance for the exact oracles (abs 1e-12).
    pub fn oracle() -> Self {
        Tolerance { abs_tol: 1e-12, rel_tol: 0.0, max_iter: 200 }
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance { abs_tol: 1e-10, rel_tol: 1e-9, max_iter: 200 }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tolerance_rejects_bad_values() {
        assert!(Tolerance::new(0.0, 0.0, 10).is_err());
        assert!(Tolerance::new(1e-9, -1.0, 10).is_err());
        assert!(Tolerance::new(1e-9, 0.0, 0).is_err());
        assert!(Tolerance::new(1e-9, 0.0, 1).is_ok());
    }
}
