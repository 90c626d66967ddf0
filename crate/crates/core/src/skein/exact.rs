//! Exact bracket by recursive smoothing, crossing by crossing from the
//! bottom, memoized on (level, boundary matching).

use std::collections::HashMap;

use crate::braid::Generator;
use crate::link::ClosedBraid;
use crate::poly::LaurentPoly;

use super::matching::{Layout, Matching};

struct Smoother<'a> {
    generators: &'a [Generator],
    layout: Layout,
    d: LaurentPoly,
    d_pows: Vec<LaurentPoly>,
    memo: HashMap<(usize, Matching), LaurentPoly>,
}

impl Smoother<'_> {
    fn d_pow(&mut self, k: usize) -> LaurentPoly {
        while self.d_pows.len() <= k {
            let next = self.d_pows.last().expect("seeded with d^0") * &self.d;
            self.d_pows.push(next);
        }
        self.d_pows[k].clone()
    }

    /// Bracket contribution of everything above `level`, starting from `m`.
    fn rest(&mut self, level: usize, m: &Matching) -> LaurentPoly {
        if level == self.generators.len() {
            let loops = self.layout.closing_loops(m);
            return self.d_pow(loops - 1);
        }
        let key = (level, m.clone());
        if let Some(hit) = self.memo.get(&key) {
            return hit.clone();
        }
        let g = self.generators[level];
        let e = i32::from(g.exponent());
        let i = g.index() as usize - 1;

        let vertical = self.rest(level + 1, m);
        let mut cupped = m.clone();
        let closed = cupped.cap_cup(self.layout.top(i), self.layout.top(i + 1));
        let mut horizontal = self.rest(level + 1, &cupped);
        if closed {
            horizontal = &horizontal * &self.d;
        }
        let value = &vertical.shift(e) + &horizontal.shift(-e);
        self.memo.insert(key, value.clone());
        value
    }
}

pub(super) fn bracket_recursive(k: &ClosedBraid) -> LaurentPoly {
    let layout = Layout::new(k);
    let start = layout.initial();
    let mut smoother = Smoother {
        generators: k.braid().generators(),
        layout,
        d: LaurentPoly::loop_value(),
        d_pows: vec![LaurentPoly::one()],
        memo: HashMap::new(),
    };
    smoother.rest(0, &start)
}
