//! Stock crossings and the braid they form.
//!
//! Strand positions are price ranks on a date, position 1 being the cheapest
//! stock. When several ranks change between two consecutive dates the change
//! is decomposed into adjacent transpositions by a left-to-right bubble sort
//! of the earlier ordering.
//!
//! Over/under rule: the stock with the larger absolute price change across
//! the interval passes over the other. The crossing is labelled from the
//! viewpoint of the stock that held the higher rank before the swap: when
//! that (falling) stock passes over the crossing is `Over` (`σ_i`), when the
//! rising stock passes over it is `Under` (`σ_i^{-1}`).

use chrono::NaiveDate;
use serde::Serialize;

use crate::braid::{BraidWord, Generator};
use crate::error::ConstructError;
use crate::market::{Cents, PriceSeries};

/// One adjacent transposition of price ranks between two consecutive dates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossingEvent {
    pub from_date: NaiveDate,
    pub to_date: NaiveDate,
    /// Stock at position `position` before the swap (it moves up one rank).
    pub lower_ticker: String,
    /// Stock at position `position + 1` before the swap (it moves down).
    pub upper_ticker: String,
    /// 1-based strand position of the left strand.
    pub position: u32,
    pub delta_lower: Cents,
    pub delta_upper: Cents,
    /// Prices on `to_date`, kept for the tie-break.
    pub lower_price_after: Cents,
    pub upper_price_after: Cents,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CrossingSign {
    Over,
    Under,
}

impl CrossingSign {
    pub fn exponent(self) -> i8 {
        match self {
            CrossingSign::Over => 1,
            CrossingSign::Under => -1,
        }
    }
}

/// Which stock of a crossing passes in front.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OverStock {
    Lower,
    Upper,
}

/// Decides which stock passes over: larger Δ, then higher price on
/// `to_date`, then the lexicographically smaller ticker.
pub fn over_stock(event: &CrossingEvent) -> OverStock {
    use std::cmp::Ordering::*;
    match event.delta_upper.cmp(&event.delta_lower) {
        Greater => OverStock::Upper,
        Less => OverStock::Lower,
        Equal => match event.upper_price_after.cmp(&event.lower_price_after) {
            Greater => OverStock::Upper,
            Less => OverStock::Lower,
            Equal => {
                if event.upper_ticker < event.lower_ticker {
                    OverStock::Upper
                } else {
                    OverStock::Lower
                }
            }
        },
    }
}

pub fn classify_crossing(event: &CrossingEvent) -> CrossingSign {
    match over_stock(event) {
        OverStock::Upper => CrossingSign::Over,
        OverStock::Lower => CrossingSign::Under,
    }
}

fn order_on_row(series: &PriceSeries, row: usize) -> Vec<usize> {
    let prices = &series.prices()[row];
    let tickers = series.tickers();
    let mut order: Vec<usize> = (0..tickers.len()).collect();
    order.sort_by(|&a, &b| prices[a].cmp(&prices[b]).then_with(|| tickers[a].cmp(&tickers[b])));
    order
}

/// Tickers sorted by ascending price on `date`; ties go to the smaller ticker.
pub fn rank_order(series: &PriceSeries, date: NaiveDate) -> Result<Vec<String>, ConstructError> {
    let row = series.date_index(date).ok_or(ConstructError::UnknownDate(date))?;
    Ok(order_on_row(series, row).into_iter().map(|t| series.tickers()[t].clone()).collect())
}

/// All adjacent rank transpositions, in date order and bubble-sort schedule order.
pub fn detect_crossings(series: &PriceSeries) -> Vec<CrossingEvent> {
    let mut events = Vec::new();
    if series.len() < 2 {
        return events;
    }
    let tickers = series.tickers();
    let n = tickers.len();
    let mut current = order_on_row(series, 0);
    for row in 1..series.len() {
        let before = &series.prices()[row - 1];
        let after = &series.prices()[row];
        let target = order_on_row(series, row);
        let mut rank = vec![0usize; n];
        for (r, &t) in target.iter().enumerate() {
            rank[t] = r;
        }
        loop {
            let mut swapped = false;
            for i in 0..n.saturating_sub(1) {
                let (lo, up) = (current[i], current[i + 1]);
                if rank[lo] > rank[up] {
                    events.push(CrossingEvent {
                        from_date: series.dates()[row - 1],
                        to_date: series.dates()[row],
                        lower_ticker: tickers[lo].clone(),
                        upper_ticker: tickers[up].clone(),
                        position: i as u32 + 1,
                        delta_lower: after[lo].abs_diff(before[lo]),
                        delta_upper: after[up].abs_diff(before[up]),
                        lower_price_after: after[lo],
                        upper_price_after: after[up],
                    });
                    current.swap(i, i + 1);
                    swapped = true;
                }
            }
            if !swapped {
                break;
            }
        }
        debug_assert_eq!(current, target);
    }
    events
}

/// A crossing event together with its classification, as written to audit logs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditEntry {
    #[serde(flatten)]
    pub event: CrossingEvent,
    pub over: OverStock,
    pub sign: CrossingSign,
    pub generator: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StockBraid {
    pub word: BraidWord,
    /// Strand order on the first date, position 1 first.
    pub initial_order: Vec<String>,
    pub crossings: Vec<AuditEntry>,
}

pub fn build_braid(series: &PriceSeries) -> Result<StockBraid, ConstructError> {
    let n = series.tickers().len();
    if n < 2 {
        return Err(ConstructError::TooFewTickers(n));
    }
    if series.is_empty() {
        return Err(ConstructError::NoDates);
    }
    let initial_order = rank_order(series, series.dates()[0])?;
    let crossings: Vec<AuditEntry> = detect_crossings(series)
        .into_iter()
        .map(|event| {
            let sign = classify_crossing(&event);
            let generator = Generator::new(event.position, sign.exponent()).expect("position is 1-based");
            AuditEntry { over: over_stock(&event), sign, generator: generator.signed(), event }
        })
        .collect();
    let generators = crossings
        .iter()
        .map(|c| Generator::from_signed(c.generator).expect("valid generator"))
        .collect();
    let word = BraidWord::new(n as u32, generators).expect("positions are below the strand count");
    Ok(StockBraid { word, initial_order, crossings })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::market::parse_csv;

    fn event(dl: i64, du: i64, pl: i64, pu: i64) -> CrossingEvent {
        let d = NaiveDate::from_ymd_opt(2013, 5, 20).unwrap();
        CrossingEvent {
            from_date: d,
            to_date: d.succ_opt().unwrap(),
            lower_ticker: "AAA".into(),
            upper_ticker: "BBB".into(),
            position: 1,
            delta_lower: Cents(dl),
            delta_upper: Cents(du),
            lower_price_after: Cents(pl),
            upper_price_after: Cents(pu),
        }
    }

    #[test]
    fn larger_delta_passes_over() {
        // stock i (higher rank before the swap) moved 2.00, the other 1.00
        assert_eq!(classify_crossing(&event(100, 200, 5000, 4900)), CrossingSign::Over);
        assert_eq!(classify_crossing(&event(200, 100, 5000, 4900)), CrossingSign::Under);
    }

    #[test]
    fn equal_delta_tie_breaks() {
        // higher price after the interval passes over
        assert_eq!(classify_crossing(&event(50, 50, 5000, 4900)), CrossingSign::Under);
        assert_eq!(classify_crossing(&event(50, 50, 4900, 5000)), CrossingSign::Over);
        // full tie: smaller ticker ("AAA", the lower stock) passes over
        assert_eq!(classify_crossing(&event(50, 50, 5000, 5000)), CrossingSign::Under);
    }

    #[test]
    fn rank_ties_use_ticker_order() {
        let s = parse_csv("Date,ZZ,AA\n2013-05-15,10.00,10.00\n").unwrap();
        let d = s.dates()[0];
        assert_eq!(rank_order(&s, d).unwrap(), vec!["AA", "ZZ"]);
        let missing = NaiveDate::from_ymd_opt(2000, 1, 1).unwrap();
        assert_eq!(rank_order(&s, missing), Err(ConstructError::UnknownDate(missing)));
    }

    #[test]
    fn constant_prices_give_identity() {
        let s = parse_csv("Date,A,B,C\n2013-05-15,1,2,3\n2013-05-16,1,2,3\n2013-05-17,1,2,3\n").unwrap();
        assert!(detect_crossings(&s).is_empty());
        let b = build_braid(&s).unwrap();
        assert_eq!(b.word.to_string(), "3:");
    }

    #[test]
    fn full_reversal_uses_bubble_schedule() {
        let s = parse_csv("Date,A,B,C\n2013-05-15,1,2,3\n2013-05-16,3,2,1\n").unwrap();
        let positions: Vec<u32> = detect_crossings(&s).iter().map(|e| e.position).collect();
        assert_eq!(positions, vec![1, 2, 1]);
    }

    #[test]
    fn too_few_tickers() {
        let s = parse_csv("Date,A\n2013-05-15,1\n").unwrap();
        assert_eq!(build_braid(&s), Err(ConstructError::TooFewTickers(1)));
        let empty = parse_csv("Date,A,B\n").unwrap();
        assert_eq!(build_braid(&empty), Err(ConstructError::NoDates));
    }
}
