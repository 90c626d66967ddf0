//! Perfect matchings of boundary points, the state space shared by the
//! memoized exact recursion and the Temperley–Lieb evaluator.
//!
//! For a plat closure the points are the `n` current top endpoints; the
//! bottom caps have already been applied. For a trace closure the points are
//! the `n` bottom endpoints (`0..n`) followed by the `n` current top
//! endpoints (`n..2n`).

use crate::link::{ClosedBraid, Closure};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matching(Vec<u16>);

impl Matching {
    pub fn partner(&self, p: usize) -> usize {
        usize::from(self.0[p])
    }

    fn pair(&mut self, a: usize, b: usize) {
        self.0[a] = b as u16;
        self.0[b] = a as u16;
    }

    /// Applies a cap to points `x, y` followed by a fresh cup on them.
    /// Returns true when the cap closed a loop.
    pub fn cap_cup(&mut self, x: usize, y: usize) -> bool {
        if self.partner(x) == y {
            return true;
        }
        let (a, b) = (self.partner(x), self.partner(y));
        self.pair(a, b);
        self.pair(x, y);
        false
    }

    /// Number of cycles in the union of `self` with `other`.
    pub fn loops_with(&self, other: &Matching) -> usize {
        let mut seen = vec![false; self.0.len()];
        let mut loops = 0;
        for start in 0..self.0.len() {
            if seen[start] {
                continue;
            }
            loops += 1;
            let mut p = start;
            loop {
                seen[p] = true;
                let q = self.partner(p);
                seen[q] = true;
                p = other.partner(q);
                if p == start {
                    break;
                }
            }
        }
        loops
    }
}

/// Boundary bookkeeping for one closed braid.
#[derive(Debug, Clone)]
pub struct Layout {
    n: usize,
    closure: Closure,
}

impl Layout {
    pub fn new(k: &ClosedBraid) -> Self {
        Self { n: k.n_strands(), closure: k.closure() }
    }

    fn point_count(&self) -> usize {
        match self.closure {
            Closure::Plat => self.n,
            Closure::Trace => 2 * self.n,
        }
    }

    /// Point index of top strand position `p` (0-based).
    pub fn top(&self, p: usize) -> usize {
        match self.closure {
            Closure::Plat => p,
            Closure::Trace => self.n + p,
        }
    }

    fn adjacent_caps(&self) -> Matching {
        let mut m = Matching(vec![0; self.point_count()]);
        for k in (0..self.n).step_by(2) {
            m.pair(k, k + 1);
        }
        m
    }

    fn straight_through(&self) -> Matching {
        let mut m = Matching(vec![0; self.point_count()]);
        for p in 0..self.n {
            m.pair(p, self.n + p);
        }
        m
    }

    /// State before any crossing: bottom caps, or identity strands.
    pub fn initial(&self) -> Matching {
        match self.closure {
            Closure::Plat => self.adjacent_caps(),
            Closure::Trace => self.straight_through(),
        }
    }

    /// Loops formed when the top boundary is closed off.
    pub fn closing_loops(&self, m: &Matching) -> usize {
        let closer = match self.closure {
            Closure::Plat => self.adjacent_caps(),
            Closure::Trace => self.straight_through(),
        };
        m.loops_with(&closer)
    }
}
