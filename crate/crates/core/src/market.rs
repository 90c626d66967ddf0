//! Daily closing-price tables.
//!
//! Prices are held as integer cents so that crossing comparisons never see
//! binary floating-point rounding.

use std::collections::HashSet;
use std::fmt;

use chrono::NaiveDate;
use serde::{Deserialize, Serialize};

use crate::error::IngestError;

/// A price in cents.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Cents(pub i64);

impl Cents {
    pub fn abs_diff(self, other: Cents) -> Cents {
        Cents((self.0 - other.0).abs())
    }

    pub fn as_f64(self) -> f64 {
        self.0 as f64 / 100.0
    }

    /// Parses a plain decimal with at most two significant fractional digits.
    pub fn parse(text: &str) -> Option<Cents> {
        let text = text.trim();
        let (negative, digits) = match text.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, text),
        };
        let (int_part, frac_part) = match digits.split_once('.') {
            Some((i, f)) => (i, f),
            None => (digits, ""),
        };
        if int_part.is_empty() && frac_part.is_empty() {
            return None;
        }
        if !int_part.bytes().all(|b| b.is_ascii_digit()) || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        // digits past the cent must be zeros
        if frac_part.len() > 2 && frac_part[2..].bytes().any(|b| b != b'0') {
            return None;
        }
        let whole: i64 = if int_part.is_empty() { 0 } else { int_part.parse().ok()? };
        let mut frac = frac_part.bytes().take(2).fold(0i64, |acc, b| acc * 10 + i64::from(b - b'0'));
        if frac_part.len() == 1 {
            frac *= 10;
        }
        let cents = whole.checked_mul(100)?.checked_add(frac)?;
        Some(Cents(if negative { -cents } else { cents }))
    }
}

impl fmt::Display for Cents {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.0 < 0 { "-" } else { "" };
        let v = self.0.abs();
        write!(f, "{sign}{}.{:02}", v / 100, v % 100)
    }
}

/// Aligned table of closing prices: `prices[d][t]` is ticker `t` on date `d`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PriceSeries {
    tickers: Vec<String>,
    dates: Vec<NaiveDate>,
    prices: Vec<Vec<Cents>>,
}

pub fn parse_date(text: &str) -> Option<NaiveDate> {
    let text = text.trim();
    NaiveDate::parse_from_str(text, "%Y-%m-%d")
        .or_else(|_| NaiveDate::parse_from_str(text, "%m/%d/%Y"))
        .ok()
}

impl PriceSeries {
    /// Validates and normalizes to ascending date order.
    pub fn new(
        tickers: Vec<String>,
        rows: Vec<(NaiveDate, Vec<Cents>)>,
    ) -> Result<Self, IngestError> {
        check_tickers(&tickers)?;
        let mut rows = rows;
        rows.sort_by_key(|(d, _)| *d);
        for (k, (date, row)) in rows.iter().enumerate() {
            if k > 0 && rows[k - 1].0 == *date {
                return Err(IngestError::DuplicateDate { line: 0, date: *date });
            }
            if row.len() != tickers.len() {
                return Err(IngestError::RowLength {
                    line: 0,
                    date: *date,
                    expected: tickers.len() + 1,
                    found: row.len() + 1,
                });
            }
            if let Some(t) = row.iter().position(|p| p.0 <= 0) {
                return Err(IngestError::NonPositivePrice {
                    line: 0,
                    date: *date,
                    ticker: tickers[t].clone(),
                    text: row[t].to_string(),
                });
            }
        }
        let (dates, prices) = rows.into_iter().unzip();
        Ok(Self { tickers, dates, prices })
    }

    pub fn tickers(&self) -> &[String] {
        &self.tickers
    }

    pub fn dates(&self) -> &[NaiveDate] {
        &self.dates
    }

    pub fn prices(&self) -> &[Vec<Cents>] {
        &self.prices
    }

    pub fn len(&self) -> usize {
        self.dates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dates.is_empty()
    }

    pub fn date_index(&self, date: NaiveDate) -> Option<usize> {
        self.dates.binary_search(&date).ok()
    }

    pub fn ticker_index(&self, ticker: &str) -> Option<usize> {
        self.tickers.iter().position(|t| t == ticker)
    }

    pub fn price(&self, date: NaiveDate, ticker: &str) -> Option<Cents> {
        Some(self.prices[self.date_index(date)?][self.ticker_index(ticker)?])
    }

    /// Rows with `start <= date <= end`.
    pub fn select_window(&self, start: NaiveDate, end: NaiveDate) -> Result<PriceSeries, IngestError> {
        if start > end {
            return Err(IngestError::InvertedWindow { start, end });
        }
        let lo = self.dates.partition_point(|d| *d < start);
        let hi = self.dates.partition_point(|d| *d <= end);
        if lo >= hi {
            return Err(IngestError::EmptyWindow { start, end });
        }
        Ok(PriceSeries {
            tickers: self.tickers.clone(),
            dates: self.dates[lo..hi].to_vec(),
            prices: self.prices[lo..hi].to_vec(),
        })
    }

    /// ISO dates, ascending, two-decimal prices.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("Date");
        for t in &self.tickers {
            out.push(',');
            out.push_str(t);
        }
        out.push('\n');
        for (date, row) in self.dates.iter().zip(&self.prices) {
            out.push_str(&date.format("%Y-%m-%d").to_string());
            for p in row {
                out.push(',');
                out.push_str(&p.to_string());
            }
            out.push('\n');
        }
        out
    }
}

fn check_tickers(tickers: &[String]) -> Result<(), IngestError> {
    if tickers.is_empty() {
        return Err(IngestError::BadHeader);
    }
    let mut seen = HashSet::new();
    for (k, t) in tickers.iter().enumerate() {
        if t.is_empty() {
            return Err(IngestError::EmptyTicker { column: k + 2 });
        }
        if !seen.insert(t.as_str()) {
            return Err(IngestError::DuplicateTicker(t.clone()));
        }
    }
    Ok(())
}

/// Parses a `Date,T1,T2,...` document. Rows may come in either date order.
pub fn parse_csv(text: &str) -> Result<PriceSeries, IngestError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());

    let header = reader.headers().map_err(|e| IngestError::Csv(e.to_string()))?.clone();
    if header.len() < 2 {
        return Err(IngestError::BadHeader);
    }
    let tickers: Vec<String> = header.iter().skip(1).map(str::to_owned).collect();
    check_tickers(&tickers)?;

    let mut rows: Vec<(NaiveDate, Vec<Cents>)> = Vec::new();
    let mut seen_dates = HashSet::new();
    for record in reader.records() {
        let record = record.map_err(|e| IngestError::Csv(e.to_string()))?;
        let line = record.position().map_or(0, |p| p.line() as usize);
        if record.iter().all(str::is_empty) {
            continue;
        }
        let date_text = record.get(0).unwrap_or_default();
        let date = parse_date(date_text)
            .ok_or_else(|| IngestError::BadDate { line, text: date_text.to_owned() })?;
        if !seen_dates.insert(date) {
            return Err(IngestError::DuplicateDate { line, date });
        }
        if record.len() > tickers.len() + 1 {
            return Err(IngestError::RowLength {
                line,
                date,
                expected: tickers.len() + 1,
                found: record.len(),
            });
        }
        let mut row = Vec::with_capacity(tickers.len());
        for (t, ticker) in tickers.iter().enumerate() {
            let cell = record.get(t + 1).unwrap_or_default();
            if cell.is_empty() {
                return Err(IngestError::MissingPrice { line, date, ticker: ticker.clone() });
            }
            let price = Cents::parse(cell).ok_or_else(|| IngestError::BadPrice {
                line,
                date,
                ticker: ticker.clone(),
                text: cell.to_owned(),
            })?;
            if price.0 <= 0 {
                return Err(IngestError::NonPositivePrice {
                    line,
                    date,
                    ticker: ticker.clone(),
                    text: cell.to_owned(),
                });
            }
            row.push(price);
        }
        rows.push((date, row));
    }
    PriceSeries::new(tickers, rows)
}
