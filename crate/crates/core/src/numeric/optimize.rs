//! Golden-section search.

use crate::{Error, Result, Tolerance};

const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Maximizes a unimodal `f` on `[lo, hi]` by golden-section search.
///
/// Returns `(argmax, max)`. The bracket shrinks to `abs_tol`, but near a
/// smooth maximum the argmax itself is only reliable to about
/// `√ε·|argmax|`: closer than that, function comparisons drown in
/// rounding noise. The max value does not suffer from this (the function
/// is flat there). On non-unimodal input this returns a local maximizer,
/// not necessarily the global one.
pub fn golden_max<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, tol: &Tolerance) -> Result<(f64, f64)> {
    if !(lo < hi) {
        return Err(Error::domain(format!("golden_max needs lo < hi, got [{lo}, {hi}]")));
    }
    let mut a = lo;
    let mut b = hi;
    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    for _ in 0..tol.max_iter {
        if b - a <= tol.abs_tol + tol.rel_tol * (0.5 * (a + b)).abs() {
            let x = 0.5 * (a + b);
            return Ok((x, f(x)));
        }
        if f1 < f2 {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = f(x1);
        }
    }
    Err(Error::MaxIterExceeded { what: "golden_max", max_iter: tol.max_iter })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parabola_peak() {
        let tol = Tolerance::default();
        let (x, v) = golden_max(|x| -(x - 0.3) * (x - 0.3), 0.0, 1.0, &tol).unwrap();
        assert!((x - 0.3).abs() < 1e-7);
        assert!(v.abs() < 1e-14);
    }

    #[test]
    fn sine_peak() {
        // Argmax accuracy is bounded by √ε near a flat maximum; the value
        // itself is exact to full precision.
        let tol = Tolerance::default();
        let (x, v) = golden_max(f64::sin, 0.0, std::f64::consts::PI, &tol).unwrap();
        assert!((x - std::f64::consts::FRAC_PI_2).abs() < 1e-7);
        assert!((v - 1.0).abs() < 1e-12);
    }

    #[test]
    fn product_peak() {
        let tol = Tolerance::default();
        let (x, v) = golden_max(|x| x * (1.0 - x), 0.0, 1.0, &tol).unwrap();
        assert!((x - 0.5).abs() < 1e-7);
        assert!((v - 0.25).abs() < 1e-12);
    }

    #[test]
    fn boundary_maximum_is_found() {
        // Decreasing function: maximum sits at the left endpoint.
        let tol = Tolerance::default();
        let (x, _) = golden_max(|x| -x, 0.0, 1.0, &tol).unwrap();
        assert!(x < 1e-8);
    }
}
