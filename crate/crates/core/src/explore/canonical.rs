use alloc::string::String;
use alloc::vec::Vec;

use super::Budget;
use crate::groupoid::{default_names, Element, ElementSet, HyperGroupoid};
use crate::Result;

/// Isomorphism-class label of a table: its least relabeling, compared as
/// the row-major sequence of cell bitmasks.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey {
    size: usize,
    cells: Vec<u64>,
}

impl CanonicalKey {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn cells(&self) -> &[u64] {
        &self.cells
    }

    /// The canonical representative, with names `a`, `b`, ...
    pub fn to_table(&self) -> HyperGroupoid {
        HyperGroupoid::from_table(
            default_names(self.size),
            self.cells.iter().map(|&b| ElementSet::from_bits(b)).collect(),
        )
        .expect("canonical keys come from valid tables")
    }
}

/// Relabels element `i` as `perm[i]`, carrying names along.
///
/// # Panics
///
/// If `perm` is not a permutation of `0..h.size()`.
pub fn relabel(h: &HyperGroupoid, perm: &[usize]) -> HyperGroupoid {
    let n = h.size();
    assert!(is_permutation(perm, n), "not a permutation of the carrier");
    let mut names = alloc::vec![String::new(); n];
    for (i, &p) in perm.iter().enumerate() {
        names[p] = h.names()[i].clone();
    }
    HyperGroupoid::from_table(names, relabeled_cells(h, perm)).expect("relabeling preserves validity")
}

fn is_permutation(perm: &[usize], n: usize) -> bool {
    let mut seen = alloc::vec![false; n];
    perm.len() == n && perm.iter().all(|&p| p < n && !core::mem::replace(&mut seen[p], true))
}

fn relabeled_cells(h: &HyperGroupoid, perm: &[usize]) -> Vec<ElementSet> {
    let n = h.size();
    let mut cells = alloc::vec![ElementSet::EMPTY; n * n];
    for x in h.elements() {
        for y in h.elements() {
            let image: ElementSet = h.hyperop(x, y).iter().map(|u| Element::new(perm[u.index()])).collect();
            cells[perm[x.index()] * n + perm[y.index()]] = image;
        }
    }
    cells
}

/// Minimum over all `n!` relabelings; equal keys iff the tables are
/// isomorphic.
pub fn canonical_key(h: &HyperGroupoid, budget: Budget) -> Result<CanonicalKey> {
    let n = h.size();
    budget.admit((1..=n as u128).fold(1u128, |acc, i| acc.saturating_mul(i)))?;

    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<u64>> = None;
    loop {
        let cells: Vec<u64> = relabeled_cells(h, &perm).iter().map(|c| c.bits()).collect();
        if best.as_ref().is_none_or(|b| cells < *b) {
            best = Some(cells);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    Ok(CanonicalKey { size: n, cells: best.expect("at least the identity") })
}

/// Steps to the lexicographically next permutation; `false` after the last.
fn next_permutation(perm: &mut [usize]) -> bool {
    let Some(i) = perm.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = perm.iter().rposition(|&p| p > perm[i]).expect("a larger element follows i");
    perm.swap(i, j);
    perm[i + 1..].reverse();
    true
}
