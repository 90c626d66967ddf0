//! Interference braid and outcome probability at the Fibonacci point.
//!
//! A test strand (or pair) is appended to the right of the system braid `σ`;
//! the test braid `γ` acts on the enlarged strand set and is conjugated,
//! `σ · γ · σ^{-1}`. The plat closure of the result feeds
//!
//! ```text
//! prob(0) = 1/(1+φ²) · (1 + (−1)^{c+Wr} (−A)^{3 Wr} V(A⁴) / φ^{m−2})
//! ```
//!
//! with `φ = [2]₅ = (1+√5)/2` and `A = e^{iπ/10}` by default.

use num_complex::Complex64;
use serde::Serialize;

use crate::braid::BraidWord;
use crate::error::{BraidError, LinkError};
use crate::link::{ClosedBraid, Closure};
use crate::skein::{bracket_eval, jones_value_at_a, EvalPoint};

/// An element `a + b·φ` of `ℤ[φ]`, with `φ² = φ + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Golden {
    pub a: i64,
    pub b: i64,
}

impl Golden {
    pub const ONE: Golden = Golden { a: 1, b: 0 };
    /// `[2]₅ = (1+√5)/2`.
    pub const PHI: Golden = Golden { a: 0, b: 1 };
    /// `φ^{-1} = φ − 1`.
    pub const PHI_INV: Golden = Golden { a: -1, b: 1 };

    /// `φ^k` for any integer `k`.
    pub fn phi_pow(k: i32) -> Golden {
        let base = if k >= 0 { Self::PHI } else { Self::PHI_INV };
        (0..k.unsigned_abs()).fold(Self::ONE, |acc, _| acc * base)
    }

    pub fn to_f64(self) -> f64 {
        self.a as f64 + self.b as f64 * golden_ratio()
    }
}

impl std::ops::Mul for Golden {
    type Output = Golden;

    fn mul(self, rhs: Golden) -> Golden {
        // (a + bφ)(c + dφ) = ac + bd + (ad + bc + bd)φ
        Golden {
            a: self.a * rhs.a + self.b * rhs.b,
            b: self.a * rhs.b + self.b * rhs.a + self.b * rhs.b,
        }
    }
}

impl std::ops::Add for Golden {
    type Output = Golden;

    fn add(self, rhs: Golden) -> Golden {
        Golden { a: self.a + rhs.a, b: self.b + rhs.b }
    }
}

pub fn golden_ratio() -> f64 {
    (1.0 + 5f64.sqrt()) / 2.0
}

/// `1 / (1 + φ²)`.
pub fn outcome_prefactor() -> f64 {
    1.0 / (Golden::ONE + Golden::phi_pow(2)).to_f64()
}

/// `σ · γ · σ^{-1}` with `σ` lifted onto `γ`'s strand count.
pub fn interference_braid(sigma: &BraidWord, gamma: &BraidWord) -> Result<BraidWord, BraidError> {
    if gamma.n_strands() <= sigma.n_strands() {
        return Err(BraidError::StrandMismatch { left: sigma.n_strands(), right: gamma.n_strands() });
    }
    let lifted = sigma.lift(gamma.n_strands())?;
    lifted.compose(&gamma.compose(&lifted.inverse())?)
}

/// `⟨K⟩(a) / φ^{n/2 − 1}` for a plat closure on `n` strands.
pub fn plat_amplitude(k: &ClosedBraid, a: EvalPoint) -> Result<Complex64, LinkError> {
    if k.closure() != Closure::Plat {
        return Err(LinkError::RequiresPlat("plat amplitude"));
    }
    let half = (k.n_strands() / 2) as i32;
    Ok(bracket_eval(k, a) / Golden::phi_pow(half - 1).to_f64())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OutcomeReport {
    /// Value of `A`.
    pub point: Complex64,
    /// `V_L` at `t = A⁴`.
    pub jones_value: Complex64,
    pub components: u32,
    pub minima: u32,
    pub writhe: i64,
    /// `1 + (−1)^{c+Wr}(−A)^{3Wr} V / φ^{m−2}`.
    pub amplitude: Complex64,
    /// Real part of `amplitude / (1 + φ²)`.
    pub probability: f64,
    /// `|Im|` of `amplitude / (1 + φ²)`.
    pub imag_residue: f64,
    /// Set when `probability` falls outside `[0, 1]`; the value is not clamped.
    pub out_of_range: bool,
}

/// Evaluates the outcome formula on given statistics.
pub fn outcome_from_stats(
    jones_value: Complex64,
    components: u32,
    minima: u32,
    writhe: i64,
    a: EvalPoint,
) -> OutcomeReport {
    let av = a.value();
    let w = i32::try_from(writhe).expect("writhe fits in i32");
    let parity = if (i64::from(components) + writhe).rem_euclid(2) == 0 { 1.0 } else { -1.0 };
    let denom = Golden::phi_pow(minima as i32 - 2).to_f64();
    let amplitude = Complex64::new(1.0, 0.0) + parity * (-av).powi(3 * w) * jones_value / denom;
    let full = amplitude * outcome_prefactor();
    OutcomeReport {
        point: av,
        jones_value,
        components,
        minima,
        writhe,
        amplitude,
        probability: full.re,
        imag_residue: full.im.abs(),
        out_of_range: !(0.0..=1.0).contains(&full.re),
    }
}

/// Outcome report for a plat-closed braid. `V_L` is computed through `A`
/// itself, so `t = a⁴` never needs a fourth root taken.
pub fn outcome_probability(k: &ClosedBraid, a: EvalPoint) -> Result<OutcomeReport, LinkError> {
    let minima = k.minima_count()?;
    let stats = k.stats();
    let v = jones_value_at_a(k, a);
    Ok(outcome_from_stats(v, stats.components, minima, stats.writhe, a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::link::{plat_close, trace_close};

    fn w(text: &str) -> BraidWord {
        text.parse().unwrap()
    }

    #[test]
    fn golden_identities() {
        let phi = golden_ratio();
        assert!((phi * phi - (phi + 1.0)).abs() < 1e-12);
        assert_eq!(Golden::phi_pow(2), Golden { a: 1, b: 1 });
        assert_eq!(Golden::phi_pow(-1) * Golden::PHI, Golden::ONE);
        assert_eq!(Golden::phi_pow(5), Golden { a: 3, b: 5 });
        assert!((Golden::phi_pow(-3).to_f64() - phi.powi(-3)).abs() < 1e-12);
        assert!((outcome_prefactor() - (5.0 - 5f64.sqrt()) / 10.0).abs() < 1e-12);
    }

    #[test]
    fn interference_examples() {
        let sigma = w("4: 1 -2 3");
        let empty5 = BraidWord::identity(5).unwrap();
        assert!(interference_braid(&sigma, &empty5).unwrap().free_reduce().is_empty());
        let g = w("5: 4 4 -3");
        assert_eq!(interference_braid(&BraidWord::identity(4).unwrap(), &g).unwrap(), g);
        assert!(interference_braid(&sigma, &w("4: 1")).is_err());
    }

    #[test]
    fn plat_amplitudes() {
        let a = EvalPoint::fibonacci();
        let unknot = plat_close(&w("2:")).unwrap();
        assert!((plat_amplitude(&unknot, a).unwrap() - 1.0).norm() < 1e-12);
        // d = -φ at the Fibonacci point, divided by φ
        let two = plat_close(&w("4:")).unwrap();
        assert!((plat_amplitude(&two, a).unwrap() + 1.0).norm() < 1e-12);
        assert!(plat_amplitude(&trace_close(&w("2:")), a).is_err());
    }

    #[test]
    fn literal_formula_on_probes() {
        let a = EvalPoint::fibonacci();
        let phi = golden_ratio();
        let one = Complex64::new(1.0, 0.0);
        // c + Wr odd: (1 − φ)/(1 + φ²)
        let r = outcome_from_stats(one, 1, 1, 0, a);
        assert!((r.probability - (1.0 - phi) / (1.0 + phi * phi)).abs() < 1e-12);
        assert!((r.probability + 0.170820).abs() < 1e-6);
        assert!(r.out_of_range);
        // m = 2 with c + Wr odd cancels exactly
        let r = outcome_from_stats(one, 1, 2, 0, a);
        assert!(r.probability.abs() < 1e-12);
        // V = 0 leaves the bare prefactor
        let r = outcome_from_stats(Complex64::new(0.0, 0.0), 1, 1, 0, a);
        assert!((r.probability - 1.0 / (1.0 + phi * phi)).abs() < 1e-12);
        // c + Wr even: (1 + φ)/(1 + φ²)
        let r = outcome_from_stats(one, 2, 1, 0, a);
        assert!((r.probability - 0.723607).abs() < 1e-6);
        assert!(!r.out_of_range);
    }

    #[test]
    fn outcome_requires_plat() {
        assert!(outcome_probability(&trace_close(&w("2:")), EvalPoint::fibonacci()).is_err());
    }
}
