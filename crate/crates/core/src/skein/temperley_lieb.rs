//! Numeric bracket through the Temperley–Lieb action on boundary matchings.
//!
//! `σ_i ↦ A·1 + A^{-1}·e_i` and `σ_i^{-1} ↦ A^{-1}·1 + A·e_i`, where `e_i`
//! caps points `i, i+1` and re-cups them; a capped loop contributes
//! `d = -A² - A^{-2}`. The vector is swept bottom to top and contracted
//! with the closing boundary at the end. Cost is linear in the crossing
//! count for a fixed strand count.

use std::collections::BTreeMap;

use num_complex::Complex64;

use crate::link::ClosedBraid;

use super::matching::{Layout, Matching};

pub(super) fn bracket_tl(k: &ClosedBraid, a: Complex64) -> Complex64 {
    let layout = Layout::new(k);
    let a_inv = a.inv();
    let d = -(a * a) - a_inv * a_inv;

    // BTreeMap keeps the summation order fixed from run to run
    let mut vector: BTreeMap<Matching, Complex64> = BTreeMap::new();
    vector.insert(layout.initial(), Complex64::new(1.0, 0.0));

    for g in k.braid().generators() {
        let (keep, cup) = if g.is_positive() { (a, a_inv) } else { (a_inv, a) };
        let i = g.index() as usize - 1;
        let (x, y) = (layout.top(i), layout.top(i + 1));
        let mut next: BTreeMap<Matching, Complex64> = BTreeMap::new();
        for (m, c) in vector {
            let mut cupped = m.clone();
            let closed = cupped.cap_cup(x, y);
            *next.entry(m).or_default() += c * keep;
            let w = if closed { c * cup * d } else { c * cup };
            *next.entry(cupped).or_default() += w;
        }
        vector = next;
    }

    vector
        .iter()
        .map(|(m, c)| c * d.powi(layout.closing_loops(m) as i32 - 1))
        .sum()
}
