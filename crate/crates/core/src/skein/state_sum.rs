//! Brute-force bracket: one term per smoothing state, loops counted by
//! union-find over arc segments. Exponential in the crossing count; used as
//! the reference evaluator.

use crate::link::{ClosedBraid, Closure};
use crate::poly::LaurentPoly;
use crate::union_find::DisjointSet;

use super::check_cap;
use crate::error::SkeinError;

/// One full smoothing of a diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmoothingState {
    /// `choices[k]` is true when crossing `k` takes the cup-cap smoothing;
    /// false keeps the strands vertical.
    pub choices: Vec<bool>,
    pub loops: usize,
}

impl SmoothingState {
    /// Exponent of `A` carried by this state: (#A-smoothings) − (#B-smoothings).
    pub fn a_exponent(&self, k: &ClosedBraid) -> i32 {
        k.braid()
            .generators()
            .iter()
            .zip(&self.choices)
            .map(|(g, &cupcap)| {
                let e = i32::from(g.exponent());
                if cupcap {
                    -e
                } else {
                    e
                }
            })
            .sum()
    }
}

/// Loops in the smoothing of `k` given by `choices`.
pub fn count_loops(k: &ClosedBraid, choices: &[bool]) -> usize {
    let n = k.n_strands();
    let gens = k.braid().generators();
    let levels = gens.len() + 1;
    let node = |level: usize, pos: usize| level * n + pos;
    let mut ds = DisjointSet::new(levels * n);
    for (level, (g, &cupcap)) in gens.iter().zip(choices).enumerate() {
        let i = g.index() as usize - 1;
        for p in 0..n {
            if p != i && p != i + 1 {
                ds.union(node(level, p), node(level + 1, p));
            }
        }
        if cupcap {
            ds.union(node(level, i), node(level, i + 1));
            ds.union(node(level + 1, i), node(level + 1, i + 1));
        } else {
            ds.union(node(level, i), node(level + 1, i));
            ds.union(node(level, i + 1), node(level + 1, i + 1));
        }
    }
    let top = levels - 1;
    match k.closure() {
        Closure::Plat => {
            for p in (0..n).step_by(2) {
                ds.union(node(0, p), node(0, p + 1));
                ds.union(node(top, p), node(top, p + 1));
            }
        }
        Closure::Trace => {
            for p in 0..n {
                ds.union(node(0, p), node(top, p));
            }
        }
    }
    ds.set_count()
}

/// Every smoothing state of `k`, in binary counting order of the choices.
pub fn states(k: &ClosedBraid) -> impl Iterator<Item = SmoothingState> + '_ {
    let c = k.crossing_count();
    (0u64..1 << c).map(move |mask| {
        let choices: Vec<bool> = (0..c).map(|bit| mask >> bit & 1 == 1).collect();
        let loops = count_loops(k, &choices);
        SmoothingState { choices, loops }
    })
}

/// `Σ_s A^{a(s)} d^{loops(s) − 1}` over all smoothing states.
pub fn bracket_state_sum(k: &ClosedBraid, cap: usize) -> Result<LaurentPoly, SkeinError> {
    check_cap(k, cap)?;
    let d = LaurentPoly::loop_value();
    let max_loops = k.n_strands() + k.crossing_count() + 1;
    let d_pows: Vec<LaurentPoly> = std::iter::successors(Some(LaurentPoly::one()), |p| Some(p * &d))
        .take(max_loops)
        .collect();
    // group by (exponent, loops) first so each d-power is multiplied once
    let mut tally: std::collections::BTreeMap<(i32, usize), i64> = Default::default();
    for s in states(k) {
        *tally.entry((s.a_exponent(k), s.loops)).or_insert(0) += 1;
    }
    let mut total = LaurentPoly::zero();
    for ((a, loops), count) in tally {
        total += &d_pows[loops - 1].shift(a).scale(count);
    }
    Ok(total)
}
