use chrono::NaiveDate;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IngestError {
    #[error("csv: {0}")]
    Csv(String),
    #[error("header must start with a date column followed by at least one ticker")]
    BadHeader,
    #[error("empty ticker name in header column {column}")]
    EmptyTicker { column: usize },
    #[error("duplicate ticker `{0}`")]
    DuplicateTicker(String),
    #[error("line {line}: unparseable date `{text}` (expected M/D/YYYY or YYYY-MM-DD)")]
    BadDate { line: usize, text: String },
    #[error("line {line}: duplicate date {date}")]
    DuplicateDate { line: usize, date: NaiveDate },
    #[error("line {line} ({date}): expected {expected} cells, found {found}")]
    RowLength { line: usize, date: NaiveDate, expected: usize, found: usize },
    #[error("line {line}: missing price for {ticker} on {date}")]
    MissingPrice { line: usize, date: NaiveDate, ticker: String },
    #[error("line {line}: bad price `{text}` for {ticker} on {date}")]
    BadPrice { line: usize, date: NaiveDate, ticker: String, text: String },
    #[error("line {line}: non-positive price {text} for {ticker} on {date}")]
    NonPositivePrice { line: usize, date: NaiveDate, ticker: String, text: String },
    #[error("window start {start} is after end {end}")]
    InvertedWindow { start: NaiveDate, end: NaiveDate },
    #[error("no trading dates between {start} and {end}")]
    EmptyWindow { start: NaiveDate, end: NaiveDate },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BraidError {
    #[error("a braid needs at least one strand")]
    NoStrands,
    #[error("generator index 0 is not allowed (indices are 1-based)")]
    ZeroIndex,
    #[error("generator exponent must be +1 or -1, got {0}")]
    BadExponent(i8),
    #[error("generator index {index} out of range for {n_strands} strands")]
    IndexOutOfRange { index: u64, n_strands: u32 },
    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: u32, right: u32 },
    #[error("malformed braid word: {0}")]
    Malformed(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructError {
    #[error("a braid of stocks needs at least 2 tickers, got {0}")]
    TooFewTickers(usize),
    #[error("series has no dates")]
    NoDates,
    #[error("date {0} is not in the series")]
    UnknownDate(NaiveDate),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinkError {
    #[error("plat closure requires an even number (2k) of strands, got {0}")]
    OddStrands(u32),
    #[error("{0} is only defined for plat closures")]
    RequiresPlat(&'static str),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SkeinError {
    #[error(
        "{crossings} crossings exceed the exact-evaluation cap of {cap}; use numeric bracket evaluation instead"
    )]
    CrossingCap { crossings: usize, cap: usize },
    #[error("evaluation point must be finite and nonzero, got {0}")]
    BadPoint(String),
    #[error(transparent)]
    Braid(#[from] BraidError),
    #[error(transparent)]
    Link(#[from] LinkError),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error(transparent)]
    Ingest(#[from] IngestError),
    #[error(transparent)]
    Braid(#[from] BraidError),
    #[error(transparent)]
    Construct(#[from] ConstructError),
    #[error(transparent)]
    Link(#[from] LinkError),
    #[error(transparent)]
    Skein(#[from] SkeinError),
}

impl Error {
    /// True when the failure is the exact-path crossing cap rather than bad input.
    pub fn is_cap_exceeded(&self) -> bool {
        matches!(self, Error::Skein(SkeinError::CrossingCap { .. }))
    }
}
