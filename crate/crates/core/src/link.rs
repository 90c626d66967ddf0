//! Braid closures and their diagram statistics.
//!
//! Plat closure caps strands `(1,2), (3,4), ...` at both ends; trace closure
//! joins each top endpoint to the bottom endpoint in the same position.
//!
//! Each component carries a canonical orientation: in a trace closure every
//! strand runs upward; in a plat closure the strand with the lowest bottom
//! position in a component runs upward and the rest follow along the
//! component. The diagram writhe is the sum of oriented crossing signs, which
//! equals the exponent sum for trace closures and can differ from it (by an
//! even amount) for plat closures.

use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;
use crate::error::LinkError;
use crate::union_find::DisjointSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Closure {
    Plat,
    Trace,
}

impl std::str::FromStr for Closure {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "plat" => Ok(Closure::Plat),
            "trace" => Ok(Closure::Trace),
            other => Err(format!("unknown closure `{other}` (expected plat or trace)")),
        }
    }
}

/// A link diagram given as a braid plus the way its ends are joined.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ClosedBraid {
    braid: BraidWord,
    closure: Closure,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramStats {
    pub components: u32,
    /// `None` for trace closures.
    pub minima: Option<u32>,
    pub crossings: u32,
    pub writhe: i64,
}

pub fn plat_close(braid: &BraidWord) -> Result<ClosedBraid, LinkError> {
    ClosedBraid::new(braid.clone(), Closure::Plat)
}

pub fn trace_close(braid: &BraidWord) -> ClosedBraid {
    ClosedBraid { braid: braid.clone(), closure: Closure::Trace }
}

impl ClosedBraid {
    pub fn new(braid: BraidWord, closure: Closure) -> Result<Self, LinkError> {
        if closure == Closure::Plat && !braid.n_strands().is_multiple_of(2) {
            return Err(LinkError::OddStrands(braid.n_strands()));
        }
        Ok(Self { braid, closure })
    }

    pub fn braid(&self) -> &BraidWord {
        &self.braid
    }

    pub fn closure(&self) -> Closure {
        self.closure
    }

    pub fn n_strands(&self) -> usize {
        self.braid.n_strands() as usize
    }

    pub fn crossing_count(&self) -> usize {
        self.braid.len()
    }

    /// Same closure applied to another word on the same strands.
    pub fn with_braid(&self, braid: BraidWord) -> Result<Self, LinkError> {
        Self::new(braid, self.closure)
    }

    /// c(K), counted with union-find over the `2n` braid endpoints.
    pub fn component_count(&self) -> u32 {
        let n = self.n_strands();
        let perm = self.braid.permutation();
        let mut ds = DisjointSet::new(2 * n);
        for p in 0..n {
            ds.union(p, n + perm.apply(p));
        }
        match self.closure {
            Closure::Plat => {
                for k in (0..n).step_by(2) {
                    ds.union(k, k + 1);
                    ds.union(n + k, n + k + 1);
                }
            }
            Closure::Trace => {
                for p in 0..n {
                    ds.union(p, n + p);
                }
            }
        }
        ds.set_count() as u32
    }

    /// m(K): `n / 2` for a plat closure.
    pub fn minima_count(&self) -> Result<u32, LinkError> {
        match self.closure {
            Closure::Plat => Ok(self.braid.n_strands() / 2),
            Closure::Trace => Err(LinkError::RequiresPlat("minima count")),
        }
    }

    /// Direction of each strand (indexed by bottom position): `+1` up, `-1` down.
    pub fn strand_orientations(&self) -> Vec<i8> {
        let n = self.n_strands();
        if self.closure == Closure::Trace {
            return vec![1; n];
        }
        let perm = self.braid.permutation();
        let inv = perm.inverse();
        let mut orient = vec![0i8; n];
        for start in 0..n {
            if orient[start] != 0 {
                continue;
            }
            let mut strand = start;
            let mut up = true;
            loop {
                orient[strand] = if up { 1 } else { -1 };
                let next = if up {
                    // over the top cap, then down the strand ending there
                    inv.apply(perm.apply(strand) ^ 1)
                } else {
                    strand ^ 1
                };
                up = !up;
                if next == start {
                    break;
                }
                strand = next;
            }
        }
        orient
    }

    /// Oriented sign of each crossing, in word order.
    pub fn crossing_signs(&self) -> Vec<i8> {
        let orient = self.strand_orientations();
        let mut at: Vec<usize> = (0..self.n_strands()).collect();
        self.braid
            .generators()
            .iter()
            .map(|g| {
                let i = g.index() as usize - 1;
                let sign = g.exponent() * orient[at[i]] * orient[at[i + 1]];
                at.swap(i, i + 1);
                sign
            })
            .collect()
    }

    /// Wr(K) under the canonical orientation.
    pub fn writhe(&self) -> i64 {
        match self.closure {
            Closure::Trace => self.braid.writhe(),
            Closure::Plat => self.crossing_signs().iter().map(|&s| i64::from(s)).sum(),
        }
    }

    pub fn stats(&self) -> DiagramStats {
        DiagramStats {
            components: self.component_count(),
            minima: self.minima_count().ok(),
            crossings: self.crossing_count() as u32,
            writhe: self.writhe(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(text: &str) -> BraidWord {
        text.parse().unwrap()
    }

    #[test]
    fn plat_requires_even_strands() {
        let err = plat_close(&w("3: 1")).unwrap_err();
        assert_eq!(err, LinkError::OddStrands(3));
        assert!(err.to_string().contains("2k"));
    }

    #[test]
    fn plat_examples() {
        assert_eq!(plat_close(&w("4:")).unwrap().component_count(), 2);
        assert_eq!(plat_close(&w("2: 1")).unwrap().component_count(), 1);
        // σ2² links the two caps: Hopf link
        assert_eq!(plat_close(&w("4: 2 2")).unwrap().component_count(), 2);
        // a single σ2 joins them into one circle
        assert_eq!(plat_close(&w("4: 2")).unwrap().component_count(), 1);
    }

    #[test]
    fn trace_examples() {
        assert_eq!(trace_close(&w("5:")).component_count(), 5);
        assert_eq!(trace_close(&w("2: 1")).component_count(), 1);
        assert_eq!(trace_close(&w("2: 1 1 1")).component_count(), 1);
        assert_eq!(trace_close(&w("2: 1 1")).component_count(), 2);
    }

    #[test]
    fn minima() {
        assert_eq!(plat_close(&w("4: 1")).unwrap().minima_count(), Ok(2));
        assert_eq!(plat_close(&w("2:")).unwrap().minima_count(), Ok(1));
        assert_eq!(plat_close(&w("8:")).unwrap().minima_count(), Ok(4));
        assert!(trace_close(&w("2:")).minima_count().is_err());
    }

    #[test]
    fn plat_orientation_flips_cap_twists() {
        // the two strands under one cap run in opposite directions
        let k = plat_close(&w("2: 1")).unwrap();
        assert_eq!(k.strand_orientations(), vec![1, -1]);
        assert_eq!(k.writhe(), -1);
        assert_eq!(k.braid().writhe(), 1);
        // Hopf link from σ2²: the crossing strands run in opposite directions
        let hopf = plat_close(&w("4: 2 2")).unwrap();
        assert_eq!(hopf.strand_orientations(), vec![1, -1, 1, -1]);
        assert_eq!(hopf.writhe(), -2);
    }

    #[test]
    fn trace_writhe_is_exponent_sum() {
        let k = trace_close(&w("3: 1 -2 1 1"));
        assert_eq!(k.writhe(), 2);
        assert_eq!(k.stats(), DiagramStats { components: 1, minima: None, crossings: 4, writhe: 2 });
    }

    #[test]
    fn stats_json_shape() {
        let s = plat_close(&w("4:")).unwrap().stats();
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, r#"{"components":2,"minima":2,"crossings":0,"writhe":0}"#);
    }
}
