use std::fmt;

/// Value of an error (or distortion) exponent.
///
/// Several bounds in this crate are infinite below the help rate: an
/// arbitrarily large exponent is achievable there, so no finite number is
/// honest. `Unbounded` carries that regime through sweeps and
/// serialization instead of a made-up large constant. `Zero` marks the
/// above-capacity regime where the piecewise definitions pin the exponent
/// to exactly zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Exponent {
    /// The "∞" regime: an arbitrarily large exponent is achievable.
    Unbounded,
    /// Exactly zero (at or above capacity).
    Zero,
    /// A finite, non-negative exponent in nats.
    Finite(f64),
}

impl Exponent {
    /// Wraps a finite value, mapping zero (and sub-rounding negatives
    /// from formulas that are mathematically non-negative) to `Zero`.
    pub fn finite(v: f64) -> Self {
        debug_assert!(v > -1e-9, "exponents are non-negative, got {v}");
        if v <= 0.0 {
            Exponent::Zero
        } else {
            Exponent::Finite(v)
        }
    }

    pub fn is_unbounded(self) -> bool {
        matches!(self, Exponent::Unbounded)
    }

    /// Numeric view: `Unbounded` maps to `f64::INFINITY`.
    pub fn as_f64(self) -> f64 {
        match self {
            Exponent::Unbounded => f64::INFINITY,
            Exponent::Zero => 0.0,
            Exponent::Finite(v) => v,
        }
    }

    /// Finite value, or `None` for the unbounded regime.
    pub fn finite_value(self) -> Option<f64> {
        match self {
            Exponent::Unbounded => None,
            Exponent::Zero => Some(0.0),
            Exponent::Finite(v) => Some(v),
        }
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            // `inf` is the sentinel token used in CSV output as well.
            Exponent::Unbounded => write!(f, "inf"),
            Exponent::Zero => write!(f, "0"),
            Exponent::Finite(v) => write!(f, "{v}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_and_finite_are_distinguished() {
        assert_eq!(Exponent::finite(0.0), Exponent::Zero);
        assert_eq!(Exponent::finite(1.5), Exponent::Finite(1.5));
        assert_eq!(Exponent::Unbounded.as_f64(), f64::INFINITY);
        assert_eq!(Exponent::Zero.as_f64(), 0.0);
        assert_eq!(Exponent::Unbounded.finite_value(), None);
    }

    #[test]
    fn display_uses_inf_sentinel() {
        assert_eq!(Exponent::Unbounded.to_string(), "inf");
        assert_eq!(Exponent::Zero.to_string(), "0");
        assert_eq!(Exponent::Finite(0.25).to_string(), "0.25");
    }
}
