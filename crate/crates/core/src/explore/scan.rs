use alloc::vec::Vec;
use core::ops::ControlFlow;

use super::enumerate::{enumerate_hypergroupoids, fuzzy_subsets_of_size};
use super::sample::{random_associative_table, random_fuzzy_subset, random_table, InstanceRng};
use super::{Budget, Mode, VerificationScope};
use crate::fuzzy::FuzzySubset;
use crate::groupoid::HyperGroupoid;
use crate::Result;

/// Visits every instance of `scope`: a table plus `arity` fuzzy subsets.
///
/// Exhaustive walks take tables in enumeration order and, per table, all
/// tuples of grid subsets in odometer order; the instance index counts the
/// visited instances. Sampled walks use stream `i` of the scope's seed for
/// sample `i`. Returns the number of instances visited.
pub(crate) fn scan<F>(scope: &VerificationScope, arity: u32, budget: Budget, mut visit: F) -> Result<u64>
where
    F: FnMut(u64, &HyperGroupoid, &[FuzzySubset]) -> ControlFlow<()>,
{
    scope.validate(arity, budget)?;
    let n = scope.size;
    let arity = arity as usize;
    let mut visited = 0u64;

    match scope.mode {
        Mode::Exhaustive => {
            let subsets: Vec<FuzzySubset> = fuzzy_subsets_of_size(n, scope.grid, budget)?.collect();
            let mut tuple = Vec::with_capacity(arity);
            for h in enumerate_hypergroupoids(n, budget)? {
                if scope.associative_only && !h.is_hypersemigroup().holds() {
                    continue;
                }
                let mut digits = alloc::vec![0usize; arity];
                loop {
                    tuple.clear();
                    tuple.extend(digits.iter().map(|&d| subsets[d].clone()));
                    let flow = visit(visited, &h, &tuple);
                    visited += 1;
                    if flow.is_break() {
                        return Ok(visited);
                    }
                    if !advance(&mut digits, subsets.len()) {
                        break;
                    }
                }
            }
        }
        Mode::Sampled { samples, seed } => {
            for i in 0..samples {
                let mut rng = InstanceRng::new(seed, i);
                let h = if scope.associative_only {
                    random_associative_table(&mut rng, n)?
                } else {
                    random_table(&mut rng, n)
                };
                let tuple: Vec<_> = (0..arity)
                    .map(|_| random_fuzzy_subset(&mut rng, n, scope.grid))
                    .collect();
                let flow = visit(i, &h, &tuple);
                visited += 1;
                if flow.is_break() {
                    break;
                }
            }
        }
    }
    Ok(visited)
}

/// Odometer increment; `false` once every digit has wrapped.
fn advance(digits: &mut [usize], radix: usize) -> bool {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < radix {
            return true;
        }
        *d = 0;
    }
    false
}
