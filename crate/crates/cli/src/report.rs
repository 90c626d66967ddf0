use num_complex::Complex64;
use serde::Serialize;
use stockbraid_core::construct::{AuditEntry, StockBraid};
use stockbraid_core::skein::JonesPoly;
use stockbraid_core::{BraidWord, Closure, DiagramStats, JonesConvention, LaurentPoly, OutcomeReport, PriceSeries};

/// Polynomial with its variable and convention tags.
#[derive(Debug, Clone, Serialize)]
pub struct PolyJson {
    pub variable: &'static str,
    pub convention: Option<JonesConvention>,
    pub terms: LaurentPoly,
    pub text: String,
}

impl PolyJson {
    pub fn bracket(p: LaurentPoly) -> Self {
        PolyJson { variable: "A", convention: None, text: p.display_in("A"), terms: p }
    }

    pub fn jones(v: JonesPoly) -> Self {
        PolyJson { variable: "t^{1/4}", convention: Some(v.convention), text: v.to_string(), terms: v.terms }
    }
}

#[derive(Debug, Serialize)]
pub struct InputSummary {
    pub tickers: Vec<String>,
    pub from: String,
    pub to: String,
    pub dates: usize,
}

impl InputSummary {
    pub fn of(series: &PriceSeries) -> Self {
        let dates = series.dates();
        InputSummary {
            tickers: series.tickers().to_vec(),
            from: dates[0].to_string(),
            to: dates[dates.len() - 1].to_string(),
            dates: dates.len(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct BraidOutput {
    pub input: InputSummary,
    pub word: BraidWord,
    pub initial_order: Vec<String>,
    pub crossings: Vec<AuditEntry>,
}

impl BraidOutput {
    pub fn new(series: &PriceSeries, built: StockBraid) -> Self {
        BraidOutput {
            input: InputSummary::of(series),
            word: built.word,
            initial_order: built.initial_order,
            crossings: built.crossings,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct InvariantOutput {
    pub word: BraidWord,
    pub closure: Closure,
    pub stats: DiagramStats,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bracket: Option<PolyJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub jones: Option<PolyJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub point: Option<Complex64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bracket_value: Option<Complex64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub jones_value: Option<Complex64>,
}

#[derive(Debug, Serialize)]
pub struct OutcomeOutput {
    pub sigma: BraidWord,
    pub gamma: BraidWord,
    pub interference: BraidWord,
    pub stats: DiagramStats,
    pub outcome: OutcomeReport,
}

#[derive(Debug, Serialize)]
pub struct ProbeOutput {
    pub jones_value: Complex64,
    pub components: u32,
    pub minima: u32,
    pub writhe: i64,
    pub outcome: OutcomeReport,
}

#[derive(Debug, Serialize)]
pub struct JonesPair {
    pub paper: PolyJson,
    pub standard: PolyJson,
}

#[derive(Debug, Serialize)]
pub struct PipelineReport {
    pub input: InputSummary,
    pub word: BraidWord,
    pub initial_order: Vec<String>,
    pub crossings: Vec<AuditEntry>,
    pub closure: Closure,
    pub stats: DiagramStats,
    pub bracket: PolyJson,
    pub jones: JonesPair,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub outcome: Option<OutcomeOutput>,
}
