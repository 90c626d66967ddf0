//! Benchmark fixtures shared by the criterion targets.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use stockbraid_core::{BraidWord, Generator};

/// Deterministic random braid word.
pub fn fixture_braid(n_strands: u32, length: usize, seed: u64) -> BraidWord {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let generators = (0..length)
        .map(|_| {
            let index = rng.gen_range(1..n_strands);
            if rng.gen_bool(0.5) {
                Generator::pos(index)
            } else {
                Generator::neg(index)
            }
        })
        .collect();
    BraidWord::new(n_strands, generators).expect("indices in range")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_are_reproducible() {
        let a = fixture_braid(6, 20, 7);
        assert_eq!(a, fixture_braid(6, 20, 7));
        assert_eq!(a.len(), 20);
        assert_ne!(a, fixture_braid(6, 20, 8));
    }
}
