//! Braids of stock prices and the knot invariants of their closures.
//!
//! The pipeline runs from a daily closing-price table ([`market`]) to a braid
//! word ([`construct`], [`braid`]), closes it into a link ([`link`]), computes
//! the Kauffman bracket and Jones polynomial ([`skein`]), and evaluates the
//! anyon interference outcome formula ([`anyon`]).

pub mod anyon;
pub mod braid;
pub mod construct;
pub mod error;
pub mod link;
pub mod market;
pub mod poly;
pub mod skein;
pub mod union_find;

pub use anyon::{interference_braid, outcome_probability, plat_amplitude, OutcomeReport};
pub use braid::{BraidWord, Generator, Permutation};
pub use construct::{build_braid, classify_crossing, detect_crossings, rank_order, CrossingEvent, CrossingSign};
pub use error::Error;
pub use link::{plat_close, trace_close, ClosedBraid, Closure, DiagramStats};
pub use market::{parse_csv, Cents, PriceSeries};
pub use poly::LaurentPoly;
pub use skein::{bracket_eval, bracket_poly, jones_eval, jones_from_bracket, kauffman_invariant, EvalPoint, JonesConvention};
pub use union_find::DisjointSet;
