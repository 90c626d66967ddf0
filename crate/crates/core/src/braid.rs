//! Braid words over Artin generators.
//!
//! Words are read left to right and applied bottom to top: the first
//! generator sits nearest the bottom of the diagram. Strand positions are
//! 1-based in the public surface (`σ_1 .. σ_{n-1}`).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::BraidError;

/// A single Artin generator `σ_i^{±1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Generator {
    index: u32,
    positive: bool,
}

impl Generator {
    pub fn new(index: u32, exponent: i8) -> Result<Self, BraidError> {
        if index == 0 {
            return Err(BraidError::ZeroIndex);
        }
        match exponent {
            1 => Ok(Self { index, positive: true }),
            -1 => Ok(Self { index, positive: false }),
            e => Err(BraidError::BadExponent(e)),
        }
    }

    pub fn pos(index: u32) -> Self {
        assert!(index > 0, "generator index is 1-based");
        Self { index, positive: true }
    }

    pub fn neg(index: u32) -> Self {
        assert!(index > 0, "generator index is 1-based");
        Self { index, positive: false }
    }

    /// Parses the signed-integer token form (`3`, `-2`).
    pub fn from_signed(value: i64) -> Result<Self, BraidError> {
        let index = u32::try_from(value.unsigned_abs()).map_err(|_| BraidError::IndexOutOfRange {
            index: value.unsigned_abs(),
            n_strands: 0,
        })?;
        Self::new(index, if value < 0 { -1 } else { 1 })
    }

    /// 1-based position of the left strand of the crossing.
    pub fn index(self) -> u32 {
        self.index
    }

    pub fn exponent(self) -> i8 {
        if self.positive {
            1
        } else {
            -1
        }
    }

    pub fn is_positive(self) -> bool {
        self.positive
    }

    pub fn inverse(self) -> Self {
        Self { index: self.index, positive: !self.positive }
    }

    pub fn signed(self) -> i64 {
        i64::from(self.index) * i64::from(self.exponent())
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.signed())
    }
}

/// A braid word on a fixed number of strands.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    n_strands: u32,
    generators: Vec<Generator>,
}

impl BraidWord {
    pub fn identity(n_strands: u32) -> Result<Self, BraidError> {
        Self::new(n_strands, Vec::new())
    }

    pub fn new(n_strands: u32, generators: Vec<Generator>) -> Result<Self, BraidError> {
        if n_strands == 0 {
            return Err(BraidError::NoStrands);
        }
        if let Some(g) = generators.iter().find(|g| g.index >= n_strands) {
            return Err(BraidError::IndexOutOfRange { index: u64::from(g.index), n_strands });
        }
        Ok(Self { n_strands, generators })
    }

    /// Builds a word from signed indices, e.g. `[1, -2, 3]`.
    pub fn from_signed(n_strands: u32, signed: &[i64]) -> Result<Self, BraidError> {
        let generators = signed
            .iter()
            .map(|&s| {
                Generator::from_signed(s).map_err(|e| match e {
                    BraidError::IndexOutOfRange { index, .. } => {
                        BraidError::IndexOutOfRange { index, n_strands }
                    }
                    other => other,
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(n_strands, generators)
    }

    pub fn n_strands(&self) -> u32 {
        self.n_strands
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// Concatenation, `self` first.
    pub fn compose(&self, other: &BraidWord) -> Result<BraidWord, BraidError> {
        if self.n_strands != other.n_strands {
            return Err(BraidError::StrandMismatch { left: self.n_strands, right: other.n_strands });
        }
        let mut generators = Vec::with_capacity(self.len() + other.len());
        generators.extend_from_slice(&self.generators);
        generators.extend_from_slice(&other.generators);
        Ok(BraidWord { n_strands: self.n_strands, generators })
    }

    /// Reverses the word and negates every exponent.
    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            n_strands: self.n_strands,
            generators: self.generators.iter().rev().map(|g| g.inverse()).collect(),
        }
    }

    /// Cancels adjacent `σ_i σ_i^{-1}` pairs until none remain.
    ///
    /// A single stack pass reaches the fixed point: a pair that becomes
    /// adjacent after a cancellation is always seen on top of the stack.
    pub fn free_reduce(&self) -> BraidWord {
        let mut out: Vec<Generator> = Vec::with_capacity(self.len());
        for &g in &self.generators {
            match out.last() {
                Some(&top) if top == g.inverse() => {
                    out.pop();
                }
                _ => out.push(g),
            }
        }
        BraidWord { n_strands: self.n_strands, generators: out }
    }

    /// Same word placed on `n_strands` strands, extra strands added on the right.
    pub fn lift(&self, n_strands: u32) -> Result<BraidWord, BraidError> {
        if n_strands < self.n_strands {
            return Err(BraidError::StrandMismatch { left: self.n_strands, right: n_strands });
        }
        Ok(BraidWord { n_strands, generators: self.generators.clone() })
    }

    /// Sum of exponents: positive crossings minus negative crossings.
    pub fn writhe(&self) -> i64 {
        self.generators.iter().map(|g| i64::from(g.exponent())).sum()
    }

    pub fn permutation(&self) -> Permutation {
        // at[p] = strand (named by its bottom position) currently at position p
        let n = self.n_strands as usize;
        let mut at: Vec<usize> = (0..n).collect();
        for g in &self.generators {
            let i = g.index as usize - 1;
            at.swap(i, i + 1);
        }
        let mut image = vec![0; n];
        for (top, &strand) in at.iter().enumerate() {
            image[strand] = top;
        }
        Permutation { image }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.n_strands)?;
        for g in &self.generators {
            write!(f, " {g}")?;
        }
        Ok(())
    }
}

impl FromStr for BraidWord {
    type Err = BraidError;

    /// Parses `n: g1 g2 ...` where each `g` is a nonzero signed index.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let (head, body) = text
            .split_once(':')
            .ok_or_else(|| BraidError::Malformed("missing `n:` strand-count prefix".into()))?;
        let n_strands: u32 = head
            .trim()
            .parse()
            .map_err(|_| BraidError::Malformed(format!("bad strand count `{}`", head.trim())))?;
        let signed = body
            .split_whitespace()
            .map(|tok| {
                tok.parse::<i64>()
                    .map_err(|_| BraidError::Malformed(format!("bad generator token `{tok}`")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        BraidWord::from_signed(n_strands, &signed)
    }
}

impl Serialize for BraidWord {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BraidWord {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// Permutation of strand positions, stored 0-based: `image[p]` is the top
/// position reached by the strand that starts at bottom position `p`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self { image: (0..n).collect() }
    }

    pub fn from_images(image: Vec<usize>) -> Option<Self> {
        let mut seen = vec![false; image.len()];
        for &p in &image {
            if p >= image.len() || std::mem::replace(&mut seen[p], true) {
                return None;
            }
        }
        Some(Self { image })
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn apply(&self, p: usize) -> usize {
        self.image[p]
    }

    pub fn images(&self) -> &[usize] {
        &self.image
    }

    /// `self` followed by `next`; matches `permutation(a.compose(b))`.
    pub fn then(&self, next: &Permutation) -> Permutation {
        assert_eq!(self.len(), next.len(), "permutation sizes differ");
        Permutation { image: self.image.iter().map(|&p| next.image[p]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut image = vec![0; self.len()];
        for (p, &q) in self.image.iter().enumerate() {
            image[q] = p;
        }
        Permutation { image }
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(p, &q)| p == q)
    }

    pub fn cycle_count(&self) -> usize {
        let mut seen = vec![false; self.len()];
        let mut cycles = 0;
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.image[p];
            }
        }
        cycles
    }
}

impl fmt::Display for Permutation {
    /// One-line 1-based image list, e.g. `[3 1 2]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, p) in self.image.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", p + 1)?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(text: &str) -> BraidWord {
        text.parse().unwrap()
    }

    #[test]
    fn parse_and_format() {
        let word = w("4: 1 -2 3");
        assert_eq!(word.n_strands(), 4);
        assert_eq!(
            word.generators(),
            &[Generator::pos(1), Generator::neg(2), Generator::pos(3)]
        );
        assert_eq!(word.to_string(), "4: 1 -2 3");
        assert_eq!(w("2:").to_string(), "2:");
        assert!(w("2:").is_empty());
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            "3: 5".parse::<BraidWord>(),
            Err(BraidError::IndexOutOfRange { index: 5, n_strands: 3 })
        ));
        assert!(matches!("3: 3".parse::<BraidWord>(), Err(BraidError::IndexOutOfRange { .. })));
        assert!(matches!("3: 0".parse::<BraidWord>(), Err(BraidError::ZeroIndex)));
        assert!(matches!("3: x".parse::<BraidWord>(), Err(BraidError::Malformed(_))));
        assert!(matches!("1 2".parse::<BraidWord>(), Err(BraidError::Malformed(_))));
        assert!(matches!("0:".parse::<BraidWord>(), Err(BraidError::NoStrands)));
    }

    #[test]
    fn compose_examples() {
        let e = BraidWord::identity(3).unwrap();
        let a = w("3: 1 2");
        assert_eq!(e.compose(&a).unwrap(), a);
        assert_eq!(a.compose(&w("3: 2 1")).unwrap(), w("3: 1 2 2 1"));
        let c = w("2: 1").compose(&w("2: -1")).unwrap();
        assert_eq!(c.len(), 2);
        assert!(matches!(
            a.compose(&w("4: 1")),
            Err(BraidError::StrandMismatch { left: 3, right: 4 })
        ));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(w("3:").inverse(), w("3:"));
        assert_eq!(w("3: 1 -2").inverse(), w("3: 2 -1"));
    }

    #[test]
    fn free_reduce_examples() {
        assert!(w("2: 1 -1").free_reduce().is_empty());
        assert_eq!(w("3: 1 2 -2 1").free_reduce(), w("3: 1 1"));
        assert_eq!(w("3: 1 2 -2 -1 2").free_reduce(), w("3: 2"));
        // different indices do not cancel
        assert_eq!(w("4: 1 -3").free_reduce(), w("4: 1 -3"));
    }

    #[test]
    fn permutation_examples() {
        assert!(w("4:").permutation().is_identity());
        assert_eq!(w("2: 1").permutation().images(), &[1, 0]);
        assert_eq!(w("2: -1").permutation().images(), &[1, 0]);
        // strand 1 -> 2 -> 3, strand 2 -> 1, strand 3 -> 2 (the cycle 1->3->2->1)
        assert_eq!(w("3: 1 2").permutation().images(), &[2, 0, 1]);
        assert_eq!(w("3: 1 2").permutation().to_string(), "[3 1 2]");
    }

    #[test]
    fn writhe_examples() {
        assert_eq!(w("3: 1 2 1 -2").writhe(), 2);
        assert_eq!(w("5:").writhe(), 0);
        assert_eq!(w("3: 1 -2 1").writhe(), 1);
    }

    #[test]
    fn permutation_helpers() {
        let p = w("4: 1 2 3").permutation();
        assert!(p.then(&p.inverse()).is_identity());
        assert_eq!(p.cycle_count(), 1);
        assert_eq!(Permutation::identity(3).cycle_count(), 3);
        assert!(Permutation::from_images(vec![0, 0]).is_none());
    }
}
