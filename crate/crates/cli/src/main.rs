use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use stockbraid_core::anyon::{interference_braid, outcome_from_stats, outcome_probability};
use stockbraid_core::error::SkeinError;
use stockbraid_core::skein::{bracket_poly_capped, jones_from_bracket_capped};
use stockbraid_core::{
    bracket_eval, build_braid, jones_eval, plat_close, BraidWord, ClosedBraid, Closure, EvalPoint, JonesConvention,
};

mod input;
mod render;
mod report;
mod table;

use input::{exact_cap, load_series, parse_point, parse_stats, Source};
use report::{
    BraidOutput, InputSummary, InvariantOutput, JonesPair, OutcomeOutput, PipelineReport, PolyJson, ProbeOutput,
};

/// Braids of daily closing prices and the knot invariants of their closures.
#[derive(Parser)]
#[command(name = "stockbraid", version)]
struct Cli {
    /// Print a key/value table instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Window {
    /// First date of the window (M/D/YYYY or YYYY-MM-DD).
    #[arg(long)]
    from: Option<String>,
    /// Last date of the window.
    #[arg(long)]
    to: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Build the braid word of a price table.
    Braid {
        csv: PathBuf,
        #[command(flatten)]
        window: Window,
        /// Write the crossing audit log (JSON) to this file.
        #[arg(long)]
        audit: Option<PathBuf>,
        /// Print the word together with the audit log as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Diagram statistics, bracket and Jones polynomial of a closed braid.
    Invariant {
        /// Braid word (`4: 1 -2 3`) or path to a price CSV.
        input: String,
        #[command(flatten)]
        window: Window,
        #[arg(long, value_enum, default_value_t = ClosureArg::Plat)]
        closure: ClosureArg,
        #[arg(long)]
        bracket: bool,
        #[arg(long)]
        jones: bool,
        #[arg(long, value_enum, default_value_t = ConventionArg::Paper)]
        convention: ConventionArg,
        /// Evaluate at a point: `re`, `re,im`, `cis(p/q)` or `fib`.
        /// The bracket is evaluated at `A`, the Jones polynomial at `t`.
        #[arg(long, allow_hyphen_values = true)]
        eval: Option<String>,
    },
    /// Outcome probability of the plat-closed interference braid.
    Prob {
        /// Braid word or price CSV; not needed with --stats.
        input: Option<String>,
        #[command(flatten)]
        window: Window,
        /// Test braid; defaults to the empty word on the smallest even
        /// strand count above the input's.
        #[arg(long, allow_hyphen_values = true)]
        gamma: Option<String>,
        /// Value of A.
        #[arg(long, default_value = "fib", allow_hyphen_values = true)]
        point: String,
        /// Evaluate the formula on raw statistics `V,c,m,Wr`.
        #[arg(long, allow_hyphen_values = true)]
        stats: Option<String>,
    },
    /// Draw a braid word.
    Render {
        word: String,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
    },
    /// Full pipeline from a price table.
    Report {
        csv: PathBuf,
        #[command(flatten)]
        window: Window,
        #[arg(long, value_enum, default_value_t = ClosureArg::Plat)]
        closure: ClosureArg,
        /// Include the outcome probability for this test braid.
        #[arg(long, allow_hyphen_values = true)]
        gamma: Option<String>,
        /// Include the outcome probability with the default test braid.
        #[arg(long)]
        outcome: bool,
        #[arg(long, default_value = "fib", allow_hyphen_values = true)]
        point: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ClosureArg {
    Plat,
    Trace,
}

impl From<ClosureArg> for Closure {
    fn from(c: ClosureArg) -> Closure {
        match c {
            ClosureArg::Plat => Closure::Plat,
            ClosureArg::Trace => Closure::Trace,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ConventionArg {
    Paper,
    Standard,
}

impl From<ConventionArg> for JonesConvention {
    fn from(c: ConventionArg) -> JonesConvention {
        match c {
            ConventionArg::Paper => JonesConvention::Paper,
            ConventionArg::Standard => JonesConvention::Standard,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Ascii,
    Svg,
}

fn emit<T: Serialize>(value: &T, pretty: bool) -> Result<String> {
    let json = serde_json::to_value(value)?;
    if pretty {
        return Ok(table::render(&json));
    }
    Ok(format!("{}\n", serde_json::to_string(&json)?))
}

fn default_gamma(sigma: &BraidWord) -> Result<BraidWord> {
    let n = sigma.n_strands() + 1;
    Ok(BraidWord::identity(n + n % 2)?)
}

fn outcome_for(sigma: &BraidWord, gamma: Option<&str>, point: EvalPoint) -> Result<OutcomeOutput> {
    let gamma = match gamma {
        Some(text) => text.parse().with_context(|| format!("bad --gamma `{text}`"))?,
        None => default_gamma(sigma)?,
    };
    let interference = interference_braid(sigma, &gamma)?;
    let k = plat_close(&interference)?;
    let outcome = outcome_probability(&k, point)?;
    Ok(OutcomeOutput { sigma: sigma.clone(), gamma, interference, stats: k.stats(), outcome })
}

/// Over the crossing cap an exact polynomial is dropped when a numeric value
/// was asked for instead of failing the whole command.
fn exact<T>(r: Result<T, SkeinError>, numeric: bool) -> Result<Option<T>, SkeinError> {
    match r {
        Err(SkeinError::CrossingCap { .. }) if numeric => Ok(None),
        other => other.map(Some),
    }
}

fn invariant(
    k: &ClosedBraid,
    want_bracket: bool,
    want_jones: bool,
    convention: JonesConvention,
    eval: Option<EvalPoint>,
) -> Result<InvariantOutput> {
    let cap = exact_cap()?;
    let numeric = eval.is_some();
    let bracket = if want_bracket { exact(bracket_poly_capped(k, cap), numeric)?.map(PolyJson::bracket) } else { None };
    let jones = if want_jones {
        exact(jones_from_bracket_capped(k, convention, cap), numeric)?.map(PolyJson::jones)
    } else {
        None
    };
    Ok(InvariantOutput {
        word: k.braid().clone(),
        closure: k.closure(),
        stats: k.stats(),
        bracket,
        jones,
        point: eval.map(EvalPoint::value),
        bracket_value: eval.filter(|_| want_bracket).map(|a| bracket_eval(k, a)),
        jones_value: eval.filter(|_| want_jones).map(|t| jones_eval(k, t, convention)),
    })
}

fn run(cli: Cli) -> Result<String> {
    let pretty = cli.pretty;
    match cli.command {
        Command::Braid { csv, window, audit, json } => {
            let series = load_series(&csv, window.from.as_deref(), window.to.as_deref())?;
            let built = build_braid(&series)?;
            let out = BraidOutput::new(&series, built);
            if let Some(path) = audit {
                let log = serde_json::to_string_pretty(&out.crossings)? + "\n";
                std::fs::write(&path, log).with_context(|| format!("cannot write {}", path.display()))?;
            }
            if json || pretty {
                return emit(&out, pretty);
            }
            Ok(format!("{}\n", out.word))
        }
        Command::Invariant { input, window, closure, bracket, jones, convention, eval } => {
            let word = Source::load(&input, window.from.as_deref(), window.to.as_deref())?.word()?;
            let k = ClosedBraid::new(word, closure.into())?;
            let eval = eval.as_deref().map(parse_point).transpose()?;
            let want_bracket = bracket || !jones;
            emit(&invariant(&k, want_bracket, jones, convention.into(), eval)?, pretty)
        }
        Command::Prob { input, window, gamma, point, stats } => {
            let point = parse_point(&point)?;
            if let Some(text) = stats {
                if input.is_some() || gamma.is_some() {
                    bail!("--stats takes no braid input or --gamma");
                }
                let s = parse_stats(&text)?;
                let outcome = outcome_from_stats(s.jones_value, s.components, s.minima, s.writhe, point);
                let out = ProbeOutput {
                    jones_value: s.jones_value,
                    components: s.components,
                    minima: s.minima,
                    writhe: s.writhe,
                    outcome,
                };
                return emit(&out, pretty);
            }
            let Some(input) = input else {
                bail!("prob needs a braid word, a CSV path or --stats");
            };
            let sigma = Source::load(&input, window.from.as_deref(), window.to.as_deref())?.word()?;
            emit(&outcome_for(&sigma, gamma.as_deref(), point)?, pretty)
        }
        Command::Render { word, format } => {
            let word: BraidWord = word.parse()?;
            Ok(match format {
                Format::Ascii => render::ascii(&word),
                Format::Svg => render::svg(&word),
            })
        }
        Command::Report { csv, window, closure, gamma, outcome, point } => {
            let series = load_series(&csv, window.from.as_deref(), window.to.as_deref())?;
            let built = build_braid(&series)?;
            let k = ClosedBraid::new(built.word.clone(), closure.into())?;
            let cap = exact_cap()?;
            let paper = jones_from_bracket_capped(&k, JonesConvention::Paper, cap)?;
            let standard = paper.to_convention(JonesConvention::Standard);
            let outcome = if outcome || gamma.is_some() {
                Some(outcome_for(&built.word, gamma.as_deref(), parse_point(&point)?)?)
            } else {
                None
            };
            let report = PipelineReport {
                input: InputSummary::of(&series),
                word: built.word,
                initial_order: built.initial_order,
                crossings: built.crossings,
                closure: k.closure(),
                stats: k.stats(),
                bracket: PolyJson::bracket(bracket_poly_capped(&k, cap)?),
                jones: JonesPair { paper: PolyJson::jones(paper), standard: PolyJson::jones(standard) },
                outcome,
            };
            emit(&report, pretty)
        }
    }
}

fn is_cap_error(err: &anyhow::Error) -> bool {
    err.chain().any(|e| {
        matches!(e.downcast_ref::<SkeinError>(), Some(SkeinError::CrossingCap { .. }))
            || e.downcast_ref::<stockbraid_core::Error>().is_some_and(|e| e.is_cap_exceeded())
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            if is_cap_error(&err) {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
