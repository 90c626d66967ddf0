//! Jones polynomial from the bracket, `V_K = (-A)^{-3 Wr(K)} ⟨K⟩`.
//!
//! Exponents are kept in units of `t^{1/4}` so that they stay integral.
//! Under the [`JonesConvention::Paper`] substitution `t = A^4` the Jones
//! exponents equal the `A` exponents of the normalized bracket; under
//! [`JonesConvention::Standard`] (`t = A^{-4}`) they are negated.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::braid::{BraidWord, Generator};
use crate::error::SkeinError;
use crate::link::{trace_close, ClosedBraid};
use crate::poly::LaurentPoly;

use super::{bracket_eval, kauffman_invariant_capped, EvalPoint, DEFAULT_CROSSING_CAP};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum JonesConvention {
    /// `t = A^4`.
    #[default]
    Paper,
    /// `t = A^{-4}`, the usual knot-table normalization.
    Standard,
}

impl std::str::FromStr for JonesConvention {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "paper" => Ok(Self::Paper),
            "standard" => Ok(Self::Standard),
            other => Err(format!("unknown convention `{other}` (expected paper or standard)")),
        }
    }
}

impl JonesConvention {
    /// `A` for a given `t`, using the principal fourth root of `t`.
    pub fn a_for_t(self, t: Complex64) -> Complex64 {
        let root = principal_quarter_root(t);
        match self {
            Self::Paper => root,
            Self::Standard => root.inv(),
        }
    }
}

fn principal_quarter_root(t: Complex64) -> Complex64 {
    (t.ln() / 4.0).exp()
}

/// A Jones polynomial with exponents in quarter powers of `t`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JonesPoly {
    pub convention: JonesConvention,
    pub terms: LaurentPoly,
}

impl JonesPoly {
    pub fn eval(&self, t: Complex64) -> Complex64 {
        self.terms.eval(principal_quarter_root(t))
    }

    pub fn to_convention(&self, convention: JonesConvention) -> JonesPoly {
        if convention == self.convention {
            return self.clone();
        }
        JonesPoly { convention, terms: self.terms.mirror() }
    }
}

/// `t^{e/4}` in lowest terms.
fn quarter_power(e: i32) -> String {
    let g = [4, 2, 1].into_iter().find(|g| e % g == 0).expect("1 divides everything");
    match (e / g, 4 / g) {
        (1, 1) => "t".into(),
        (n, 1) => format!("t^{n}"),
        (n, d) => format!("t^({n}/{d})"),
    }
}

impl std::fmt::Display for JonesPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.terms.display_with(quarter_power))
    }
}

pub fn jones_from_bracket(k: &ClosedBraid, convention: JonesConvention) -> Result<JonesPoly, SkeinError> {
    jones_from_bracket_capped(k, convention, DEFAULT_CROSSING_CAP)
}

pub fn jones_from_bracket_capped(
    k: &ClosedBraid,
    convention: JonesConvention,
    cap: usize,
) -> Result<JonesPoly, SkeinError> {
    let paper = JonesPoly { convention: JonesConvention::Paper, terms: kauffman_invariant_capped(k, cap)? };
    Ok(paper.to_convention(convention))
}

/// `V_K` under the paper convention, evaluated through `A` directly
/// (`t = a^4`, `t^{1/4} = a`), which sidesteps the choice of fourth root.
pub fn jones_value_at_a(k: &ClosedBraid, a: EvalPoint) -> Complex64 {
    let a = a.value();
    let w = i32::try_from(k.writhe()).expect("writhe fits in i32");
    (-a).powi(-3 * w) * bracket_eval(k, EvalPoint(a))
}

/// `V_K(t)`, with `A` taken from the principal fourth root of `t`.
pub fn jones_eval(k: &ClosedBraid, t: EvalPoint, convention: JonesConvention) -> Complex64 {
    let a = convention.a_for_t(t.value());
    jones_value_at_a(k, EvalPoint(a))
}

/// The four sign/role arrangements of the oriented skein relation
/// `α V(K_1) + β V(K_2) = (t^{1/2} − t^{−1/2}) V(K_0)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SkeinForm {
    /// `t^{-1} V₊ − t V₋`
    PositiveLeadMinus,
    /// `t^{-1} V₊ + t V₋`
    PositiveLeadPlus,
    /// `t^{-1} V₋ − t V₊`
    NegativeLeadMinus,
    /// `t^{-1} V₋ + t V₊`
    NegativeLeadPlus,
}

impl SkeinForm {
    pub const ALL: [SkeinForm; 4] = [
        SkeinForm::PositiveLeadMinus,
        SkeinForm::PositiveLeadPlus,
        SkeinForm::NegativeLeadMinus,
        SkeinForm::NegativeLeadPlus,
    ];

    /// Same roles, opposite sign on the `t` term.
    pub fn sign_flipped(self) -> SkeinForm {
        match self {
            Self::PositiveLeadMinus => Self::PositiveLeadPlus,
            Self::PositiveLeadPlus => Self::PositiveLeadMinus,
            Self::NegativeLeadMinus => Self::NegativeLeadPlus,
            Self::NegativeLeadPlus => Self::NegativeLeadMinus,
        }
    }

    /// The arrangement that holds identically under `convention`.
    pub fn holding_under(convention: JonesConvention) -> SkeinForm {
        match convention {
            JonesConvention::Paper => SkeinForm::NegativeLeadMinus,
            JonesConvention::Standard => SkeinForm::PositiveLeadMinus,
        }
    }
}

/// Skein arrangement used by [`verify_jones_skein`] (paper convention).
pub const PINNED_SKEIN_FORM: SkeinForm = SkeinForm::NegativeLeadMinus;

pub const SKEIN_TOLERANCE: f64 = 1e-9;

/// Left-hand side minus right-hand side of `form` on the trace-closure
/// triple `K± = w_left·σ_i^{±1}·w_right`, `K₀ = w_left·w_right`.
pub fn skein_residual(
    form: SkeinForm,
    convention: JonesConvention,
    w_left: &BraidWord,
    i: u32,
    w_right: &BraidWord,
    t: EvalPoint,
) -> Result<Complex64, SkeinError> {
    let n = w_left.n_strands();
    let plus = BraidWord::new(n, vec![Generator::new(i, 1)?])?;
    let k_plus = trace_close(&w_left.compose(&plus)?.compose(w_right)?);
    let k_minus = trace_close(&w_left.compose(&plus.inverse())?.compose(w_right)?);
    let k_zero = trace_close(&w_left.compose(w_right)?);

    let v = |k: &ClosedBraid| jones_eval(k, t, convention);
    let (vp, vm, v0) = (v(&k_plus), v(&k_minus), v(&k_zero));
    let tv = t.value();
    let sqrt_t = principal_quarter_root(tv).powi(2);
    let rhs = (sqrt_t - sqrt_t.inv()) * v0;
    let lhs = match form {
        SkeinForm::PositiveLeadMinus => tv.inv() * vp - tv * vm,
        SkeinForm::PositiveLeadPlus => tv.inv() * vp + tv * vm,
        SkeinForm::NegativeLeadMinus => tv.inv() * vm - tv * vp,
        SkeinForm::NegativeLeadPlus => tv.inv() * vm + tv * vp,
    };
    Ok(lhs - rhs)
}

/// Checks the pinned skein relation at `t` on trace closures.
///
/// Trace closures are used because swapping `σ_i` for its inverse or
/// deleting it there is exactly an oriented crossing change or smoothing.
pub fn verify_jones_skein(
    w_left: &BraidWord,
    i: u32,
    w_right: &BraidWord,
    t: EvalPoint,
) -> Result<bool, SkeinError> {
    let r = skein_residual(PINNED_SKEIN_FORM, JonesConvention::Paper, w_left, i, w_right, t)?;
    Ok(r.norm() < SKEIN_TOLERANCE)
}
