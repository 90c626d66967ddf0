use std::f64::consts::PI;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use num_complex::Complex64;
use stockbraid_core::market::parse_date;
use stockbraid_core::skein::DEFAULT_CROSSING_CAP;
use stockbraid_core::{parse_csv, BraidWord, EvalPoint, PriceSeries};

pub const CAP_ENV: &str = "STOCKBRAID_EXACT_CAP";

/// Crossing cap for the exact evaluators, from the environment if set.
pub fn exact_cap() -> Result<usize> {
    match std::env::var(CAP_ENV) {
        Ok(text) => text
            .trim()
            .parse()
            .with_context(|| format!("{CAP_ENV} must be a non-negative integer, got `{text}`")),
        Err(_) => Ok(DEFAULT_CROSSING_CAP),
    }
}

pub fn load_series(path: &Path, from: Option<&str>, to: Option<&str>) -> Result<PriceSeries> {
    let text = std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    let series = parse_csv(&text).with_context(|| format!("in {}", path.display()))?;
    if from.is_none() && to.is_none() {
        return Ok(series);
    }
    let date = |text: &str| parse_date(text).ok_or_else(|| anyhow!("bad date `{text}`"));
    let start = match from {
        Some(t) => date(t)?,
        None => series.dates()[0],
    };
    let end = match to {
        Some(t) => date(t)?,
        None => *series.dates().last().expect("parsed series has rows"),
    };
    Ok(series.select_window(start, end)?)
}

/// A braid given on the command line, either as word text or as a CSV path.
pub enum Source {
    Word(BraidWord),
    Series(PriceSeries),
}

impl Source {
    pub fn load(arg: &str, from: Option<&str>, to: Option<&str>) -> Result<Source> {
        let path = Path::new(arg);
        if path.is_file() {
            return Ok(Source::Series(load_series(path, from, to)?));
        }
        if !arg.contains(':') {
            bail!("`{arg}` is neither a readable file nor a braid word like `4: 1 -2 3`");
        }
        if from.is_some() || to.is_some() {
            bail!("--from/--to only apply to CSV input");
        }
        Ok(Source::Word(arg.parse()?))
    }

    pub fn word(&self) -> Result<BraidWord> {
        match self {
            Source::Word(w) => Ok(w.clone()),
            Source::Series(s) => Ok(stockbraid_core::build_braid(s)?.word),
        }
    }
}

/// Parses `re`, `re,im`, `cis(p/q)` (= e^{iπp/q}) or `fib` (= e^{iπ/10}).
pub fn parse_complex(text: &str) -> Result<Complex64> {
    let t = text.trim();
    if t == "fib" {
        return Ok(EvalPoint::fibonacci().value());
    }
    if let Some(inner) = t.strip_prefix("cis(").and_then(|r| r.strip_suffix(')')) {
        let (p, q) = inner.split_once('/').unwrap_or((inner, "1"));
        let p: f64 = p.trim().parse().with_context(|| format!("bad numerator in `{t}`"))?;
        let q: f64 = q.trim().parse().with_context(|| format!("bad denominator in `{t}`"))?;
        if q == 0.0 {
            bail!("zero denominator in `{t}`");
        }
        return Ok(Complex64::from_polar(1.0, PI * p / q));
    }
    let (re, im) = t.split_once(',').unwrap_or((t, "0"));
    let re: f64 = re.trim().parse().with_context(|| format!("bad complex number `{t}`"))?;
    let im: f64 = im.trim().parse().with_context(|| format!("bad complex number `{t}`"))?;
    Ok(Complex64::new(re, im))
}

pub fn parse_point(text: &str) -> Result<EvalPoint> {
    Ok(EvalPoint::new(parse_complex(text)?)?)
}

/// Raw statistics `V,c,m,Wr` for probing the outcome formula.
#[derive(Debug, Clone, Copy)]
pub struct StatsProbe {
    pub jones_value: Complex64,
    pub components: u32,
    pub minima: u32,
    pub writhe: i64,
}

pub fn parse_stats(text: &str) -> Result<StatsProbe> {
    let fields: Vec<&str> = text.split(',').map(str::trim).collect();
    let [v, c, m, wr] = fields[..] else {
        bail!("--stats expects `V,c,m,Wr`, got `{text}`");
    };
    Ok(StatsProbe {
        jones_value: Complex64::new(v.parse().with_context(|| format!("bad V `{v}`"))?, 0.0),
        components: c.parse().with_context(|| format!("bad c `{c}`"))?,
        minima: m.parse().with_context(|| format!("bad m `{m}`"))?,
        writhe: wr.parse().with_context(|| format!("bad Wr `{wr}`"))?,
    })
}
