use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::MAX_REJECTION_DRAWS;
use crate::fuzzy::{FuzzySubset, Grade};
use crate::groupoid::{default_names, ElementSet, HyperGroupoid};
use crate::{Error, Result};

/// Deterministic generator for one instance: ChaCha8 keyed by `seed`, on
/// stream `stream`. Distinct streams never overlap, so instance `i` of a
/// sampled run can be drawn independently of all the others.
#[derive(Clone, Debug)]
pub struct InstanceRng(ChaCha8Rng);

impl InstanceRng {
    pub fn new(seed: u64, stream: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        InstanceRng(rng)
    }
}

/// A table whose cells are uniform over the nonempty subsets.
pub fn random_table(rng: &mut InstanceRng, n: usize) -> HyperGroupoid {
    assert!(n >= 1, "carrier must be nonempty");
    let top = ElementSet::full(n).bits();
    let cells: Vec<_> = (0..n * n)
        .map(|_| ElementSet::from_bits(rng.0.random_range(1..=top)))
        .collect();
    HyperGroupoid::from_table(default_names(n), cells).expect("sampled cells are valid")
}

/// Rejection-samples [`random_table`] until it is a hypersemigroup.
pub fn random_associative_table(rng: &mut InstanceRng, n: usize) -> Result<HyperGroupoid> {
    for _ in 0..MAX_REJECTION_DRAWS {
        let h = random_table(rng, n);
        if h.is_hypersemigroup().holds() {
            return Ok(h);
        }
    }
    Err(Error::SamplingExhausted { attempts: MAX_REJECTION_DRAWS })
}

/// Grades uniform over `{0, 1/k, .., 1}`.
pub fn random_fuzzy_subset(rng: &mut InstanceRng, n: usize, k: u32) -> FuzzySubset {
    assert!(k >= 1, "grade grid needs at least two points");
    FuzzySubset::from_grades((0..n).map(|_| Grade::on_grid(rng.0.random_range(0..=k), k)).collect())
}

/// A random table with one random fuzzy subset, fixed by `(n, k, seed)`.
pub fn random_instance(n: usize, k: u32, seed: u64) -> (HyperGroupoid, FuzzySubset) {
    let mut rng = InstanceRng::new(seed, 0);
    let h = random_table(&mut rng, n);
    let f = random_fuzzy_subset(&mut rng, n, k);
    (h, f)
}
