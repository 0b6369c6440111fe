use alloc::string::String;
use alloc::vec::Vec;

use super::Budget;
use crate::fuzzy::{FuzzySubset, Grade};
use crate::groupoid::{default_names, ElementSet, HyperGroupoid};
use crate::Result;

/// `(2ⁿ − 1)^(n²)`, saturating.
pub fn hypergroupoid_count(n: usize) -> u128 {
    if n >= 64 {
        return u128::MAX;
    }
    let cells = ((1u128 << n) - 1).max(1);
    checked_pow(cells, (n * n) as u32)
}

/// `(k + 1)ⁿ`, saturating.
pub fn fuzzy_subset_count(n: usize, k: u32) -> u128 {
    checked_pow(k as u128 + 1, n as u32)
}

fn checked_pow(base: u128, exp: u32) -> u128 {
    base.checked_pow(exp).unwrap_or(u128::MAX)
}

/// Every hypergroupoid on `n` elements (named `a`, `b`, ..), exactly once.
///
/// Tables come in lexicographic order of their row-major cells, each cell
/// counting through the nonempty subsets in bitmask order; the last cell
/// varies fastest.
pub fn enumerate_hypergroupoids(n: usize, budget: Budget) -> Result<HyperGroupoids> {
    let count = hypergroupoid_count(n);
    budget.admit(count)?;
    Ok(HyperGroupoids {
        names: default_names(n),
        n,
        next: 0,
        end: count as u64,
    })
}

#[derive(Clone, Debug)]
pub struct HyperGroupoids {
    names: Vec<String>,
    n: usize,
    next: u64,
    end: u64,
}

impl HyperGroupoids {
    /// The table at position `index` of the enumeration.
    pub fn table_at(&self, index: u64) -> Option<HyperGroupoid> {
        if index >= self.end {
            return None;
        }
        let radix = (1u64 << self.n) - 1;
        let mut cells = alloc::vec![ElementSet::EMPTY; self.n * self.n];
        let mut rest = index;
        for cell in cells.iter_mut().rev() {
            *cell = ElementSet::from_bits(rest % radix + 1);
            rest /= radix;
        }
        Some(HyperGroupoid::from_table(self.names.clone(), cells).expect("enumerated cells are valid"))
    }

    pub fn position(&self) -> u64 {
        self.next
    }
}

impl Iterator for HyperGroupoids {
    type Item = HyperGroupoid;

    fn next(&mut self) -> Option<HyperGroupoid> {
        let h = self.table_at(self.next)?;
        self.next += 1;
        Some(h)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }

    fn nth(&mut self, skip: usize) -> Option<HyperGroupoid> {
        self.next = self.next.saturating_add(skip as u64).min(self.end);
        self.next()
    }
}

impl ExactSizeIterator for HyperGroupoids {}

/// All `(k + 1)ⁿ` fuzzy subsets of `h` with grades on `{0, 1/k, .., 1}`,
/// lexicographically with the first element most significant. The first is
/// the constant `0`, the last the constant `1`.
pub fn enumerate_fuzzy_subsets(h: &HyperGroupoid, k: u32, budget: Budget) -> Result<FuzzySubsets> {
    fuzzy_subsets_of_size(h.size(), k, budget)
}

pub(crate) fn fuzzy_subsets_of_size(n: usize, k: u32, budget: Budget) -> Result<FuzzySubsets> {
    assert!(k >= 1, "grade grid needs at least two points");
    budget.admit(fuzzy_subset_count(n, k))?;
    Ok(FuzzySubsets {
        grid: Grade::grid(k),
        digits: alloc::vec![0; n],
        done: n == 0,
    })
}

#[derive(Clone, Debug)]
pub struct FuzzySubsets {
    grid: Vec<Grade>,
    digits: Vec<usize>,
    done: bool,
}

impl Iterator for FuzzySubsets {
    type Item = FuzzySubset;

    fn next(&mut self) -> Option<FuzzySubset> {
        if self.done {
            return None;
        }
        let f = FuzzySubset::from_grades(self.digits.iter().map(|&d| self.grid[d]).collect());
        // odometer step, last digit fastest
        self.done = true;
        for d in self.digits.iter_mut().rev() {
            if *d + 1 < self.grid.len() {
                *d += 1;
                self.done = false;
                break;
            }
            *d = 0;
        }
        Some(f)
    }
}
