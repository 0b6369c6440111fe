//! Instance spaces of hypergroupoids and fuzzy subsets, and the harness that
//! cross-checks the two ideal-deciding methods over them.
//!
//! Exhaustive spaces are walked in a fixed canonical order; sampled spaces
//! draw instance `i` from its own ChaCha stream keyed by the scope's seed, so
//! every report is a deterministic function of the scope.

mod canonical;
mod enumerate;
mod sample;
mod scan;
mod search;
mod verify;

use core::fmt;
use core::str::FromStr;

pub use canonical::{canonical_key, relabel, CanonicalKey};
pub use enumerate::{
    enumerate_fuzzy_subsets, enumerate_hypergroupoids, fuzzy_subset_count, hypergroupoid_count,
    FuzzySubsets, HyperGroupoids,
};
pub use sample::{random_associative_table, random_fuzzy_subset, random_instance, random_table, InstanceRng};
pub use search::{find_counterexample, Instance, Property};
pub use verify::{verify_theorem, Disagreement, DisagreementDetail, VerificationReport};

use crate::groupoid::DEFAULT_MAX_SIZE;
use crate::{Error, Result};

/// Ceiling on the number of instances an exhaustive walk may visit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Budget(pub u64);

impl Budget {
    pub const DEFAULT: Budget = Budget(10_000_000);

    pub(crate) fn admit(self, required: u128) -> Result<()> {
        if required <= self.0 as u128 {
            Ok(())
        } else {
            Err(Error::BudgetExceeded { required, budget: self.0 })
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::DEFAULT
    }
}

/// Draws allowed per sample when rejection-sampling associative tables.
pub const MAX_REJECTION_DRAWS: u64 = 1_000_000;

/// The statements the harness can check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Theorem {
    /// Right ideal by definition iff `f∘1 ⪯ f`.
    RightIdeal,
    /// Left ideal by definition iff `1∘f ⪯ f`.
    LeftIdeal,
    /// Quasi-ideal by definition iff `(f∘1) ∧ (1∘f) ⪯ f`.
    QuasiIdeal,
    /// Bi-ideal by definition iff `f∘1∘f ⪯ f`, on hypersemigroups.
    BiIdeal,
    /// Fuzzy composition is associative on hypersemigroups.
    Associativity,
    /// Right or left ideals of a hypersemigroup are bi-ideals.
    OneSidedImpliesBi,
}

impl Theorem {
    pub const ALL: [Theorem; 6] = [
        Theorem::RightIdeal,
        Theorem::LeftIdeal,
        Theorem::QuasiIdeal,
        Theorem::BiIdeal,
        Theorem::Associativity,
        Theorem::OneSidedImpliesBi,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Theorem::RightIdeal => "T4",
            Theorem::LeftIdeal => "T6",
            Theorem::QuasiIdeal => "T8",
            Theorem::BiIdeal => "T11",
            Theorem::Associativity => "P9",
            Theorem::OneSidedImpliesBi => "NOTE",
        }
    }

    /// Whether the statement is only claimed for hypersemigroups.
    pub fn requires_associative(self) -> bool {
        matches!(self, Theorem::BiIdeal | Theorem::Associativity | Theorem::OneSidedImpliesBi)
    }

    /// Fuzzy subsets per instance.
    pub fn arity(self) -> u32 {
        match self {
            Theorem::Associativity => 3,
            _ => 1,
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Theorem {
    type Err = ();

    fn from_str(s: &str) -> core::result::Result<Self, ()> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.id().eq_ignore_ascii_case(s))
            .ok_or(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Exhaustive,
    Sampled { samples: u64, seed: u64 },
}

/// An instance space: carrier size, grade grid `{0, 1/grid, .., 1}`, how it
/// is walked, and whether non-associative tables are skipped.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct VerificationScope {
    pub size: usize,
    pub grid: u32,
    pub mode: Mode,
    pub associative_only: bool,
}

impl VerificationScope {
    pub fn exhaustive(size: usize, grid: u32) -> Self {
        VerificationScope { size, grid, mode: Mode::Exhaustive, associative_only: false }
    }

    pub fn sampled(size: usize, grid: u32, samples: u64, seed: u64) -> Self {
        VerificationScope { size, grid, mode: Mode::Sampled { samples, seed }, associative_only: false }
    }

    pub fn associative_only(mut self) -> Self {
        self.associative_only = true;
        self
    }

    /// Instances an exhaustive walk with `arity` fuzzy subsets per table
    /// visits, before any associativity filtering.
    pub fn exhaustive_count(&self, arity: u32) -> u128 {
        let tables = hypergroupoid_count(self.size);
        let subsets = fuzzy_subset_count(self.size, self.grid);
        (0..arity).fold(tables, |acc, _| acc.saturating_mul(subsets))
    }

    pub(crate) fn validate(&self, arity: u32, budget: Budget) -> Result<()> {
        if self.size == 0 {
            return Err(Error::InvalidScope("carrier size must be at least 1"));
        }
        if self.size > DEFAULT_MAX_SIZE {
            return Err(Error::InvalidScope("carrier size exceeds the supported maximum"));
        }
        if self.grid == 0 {
            return Err(Error::InvalidScope("grade grid must be at least 1"));
        }
        match self.mode {
            Mode::Exhaustive => budget.admit(self.exhaustive_count(arity)),
            Mode::Sampled { samples: 0, .. } => Err(Error::InvalidScope("sample count must be at least 1")),
            Mode::Sampled { samples, .. } => budget.admit(samples as u128),
        }
    }
}
