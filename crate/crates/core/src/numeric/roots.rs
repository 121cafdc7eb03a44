//! Interval bisection.

use crate::{Error, Result, Tolerance};

/// Finds a root of `f` on `[lo, hi]` by bisection.
///
/// Requires `f(lo)·f(hi) ≤ 0` and continuity; the bracket shrinks
/// monotonically and the returned midpoint is within a bracket of width
/// `abs_tol + rel_tol·|x|`. Bisection also converges to the jump location
/// of a sign-changing discontinuity, which is exactly what the exponent
/// balance equations need when the exponent family drops to zero.
pub fn bisect_root<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, tol: &Tolerance) -> Result<f64> {
    if !(lo < hi) {
        return Err(Error::domain(format!("bisect_root needs lo < hi, got [{lo}, {hi}]")));
    }
    let mut a = lo;
    let mut b = hi;
    let mut fa = f(a);
    let fb = f(b);
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if fa.signum() == fb.signum() {
        return Err(Error::NoSignChange { lo, hi, f_lo: fa, f_hi: fb });
    }
    for _ in 0..tol.max_iter {
        let mid = 0.5 * (a + b);
        if b - a <= tol.abs_tol + tol.rel_tol * mid.abs() {
            return Ok(mid);
        }
        let fm = f(mid);
        if fm == 0.0 {
            return Ok(mid);
        }
        if fm.signum() == fa.signum() {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    Err(Error::MaxIterExceeded { what: "bisect_root", max_iter: tol.max_iter })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_root() {
        let tol = Tolerance::default();
        let r = bisect_root(|x| x - 1.0, 0.0, 2.0, &tol).unwrap();
        assert!((r - 1.0).abs() < 1e-9);
    }

    #[test]
    fn sqrt2_and_ln3() {
        let tol = Tolerance::default();
        let r = bisect_root(|x| x * x - 2.0, 0.0, 2.0, &tol).unwrap();
        assert!((r - std::f64::consts::SQRT_2).abs() < 1e-9);
        let r = bisect_root(|x| x.exp() - 3.0, 0.0, 2.0, &tol).unwrap();
        assert!((r - 3.0f64.ln()).abs() < 1e-9);
    }

    #[test]
    fn rejects_bracket_without_sign_change() {
        let tol = Tolerance::default();
        let err = bisect_root(|x| x * x + 1.0, -1.0, 1.0, &tol).unwrap_err();
        assert!(matches!(err, Error::NoSignChange { .. }));
    }

    #[test]
    fn iteration_budget_is_enforced() {
        let tol = Tolerance { abs_tol: 1e-300, rel_tol: 0.0, max_iter: 5 };
        let err = bisect_root(|x| x - 0.1234, 0.0, 1.0, &tol).unwrap_err();
        assert!(matches!(err, Error::MaxIterExceeded { .. }));
    }
}
