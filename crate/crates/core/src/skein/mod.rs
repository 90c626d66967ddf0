//! Kauffman bracket and Jones polynomial of closed braids.
//!
//! Three evaluators are provided and must agree:
//! * [`bracket_poly`]: exact, memoized recursive smoothing;
//! * [`bracket_state_sum`]: exact, one term per smoothing state;
//! * [`bracket_eval`]: numeric, Temperley–Lieb action at a complex `A`.
//!
//! The bracket is normalized so that a single crossingless circle is `1`.

mod exact;
mod jones;
mod matching;
mod state_sum;
mod temperley_lieb;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::SkeinError;
use crate::link::ClosedBraid;
use crate::poly::LaurentPoly;

pub use jones::{
    jones_eval, jones_from_bracket, jones_from_bracket_capped, jones_value_at_a, skein_residual, verify_jones_skein,
    JonesConvention, JonesPoly, SkeinForm, PINNED_SKEIN_FORM, SKEIN_TOLERANCE,
};
pub use state_sum::{bracket_state_sum, count_loops, states, SmoothingState};

/// Crossing limit for the exact evaluators unless the caller picks another.
pub const DEFAULT_CROSSING_CAP: usize = 24;

/// A complex value of the bracket variable `A` (or of `t`).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EvalPoint(Complex64);

impl EvalPoint {
    pub fn new(value: Complex64) -> Result<Self, SkeinError> {
        if !value.re.is_finite() || !value.im.is_finite() || value.norm() == 0.0 {
            return Err(SkeinError::BadPoint(format!("{value}")));
        }
        Ok(Self(value))
    }

    /// `e^{iθ}`.
    pub fn unit(theta: f64) -> Result<Self, SkeinError> {
        Self::new(Complex64::from_polar(1.0, theta))
    }

    /// `A = e^{iπ/10}`, the Fibonacci-anyon point.
    pub fn fibonacci() -> Self {
        Self(Complex64::from_polar(1.0, std::f64::consts::PI / 10.0))
    }

    pub fn value(self) -> Complex64 {
        self.0
    }
}

fn check_cap(k: &ClosedBraid, cap: usize) -> Result<(), SkeinError> {
    if k.crossing_count() > cap {
        return Err(SkeinError::CrossingCap { crossings: k.crossing_count(), cap });
    }
    Ok(())
}

/// Exact `⟨K⟩ ∈ ℤ[A, A^{-1}]` with the default crossing cap.
pub fn bracket_poly(k: &ClosedBraid) -> Result<LaurentPoly, SkeinError> {
    bracket_poly_capped(k, DEFAULT_CROSSING_CAP)
}

pub fn bracket_poly_capped(k: &ClosedBraid, cap: usize) -> Result<LaurentPoly, SkeinError> {
    check_cap(k, cap)?;
    Ok(exact::bracket_recursive(k))
}

/// `⟨K⟩` evaluated at `A = a`; no crossing cap.
pub fn bracket_eval(k: &ClosedBraid, a: EvalPoint) -> Complex64 {
    temperley_lieb::bracket_tl(k, a.value())
}

/// `f[K] = (-A)^{-3 Wr(K)} ⟨K⟩`.
pub fn kauffman_invariant(k: &ClosedBraid) -> Result<LaurentPoly, SkeinError> {
    kauffman_invariant_capped(k, DEFAULT_CROSSING_CAP)
}

pub fn kauffman_invariant_capped(k: &ClosedBraid, cap: usize) -> Result<LaurentPoly, SkeinError> {
    let bracket = bracket_poly_capped(k, cap)?;
    Ok(writhe_normalize(&bracket, k.writhe()))
}

/// Multiplies a bracket by `(-A)^{-3w}`.
pub fn writhe_normalize(bracket: &LaurentPoly, writhe: i64) -> LaurentPoly {
    let k = i32::try_from(-3 * writhe).expect("writhe fits in i32");
    bracket * &LaurentPoly::neg_var_pow(k)
}
