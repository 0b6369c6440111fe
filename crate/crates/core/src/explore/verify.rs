use alloc::vec::Vec;
use core::ops::ControlFlow;
use core::time::Duration;

use super::scan::scan;
use super::{Budget, Theorem, VerificationScope};
use crate::fuzzy::{compose, FuzzySubset, Grade};
use crate::groupoid::{Element, HyperGroupoid};
use crate::ideals::{self, IdealKind, Method};
use crate::{Error, Result};

/// Outcome of running one theorem over a scope.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub theorem: Theorem,
    pub scope: VerificationScope,
    pub instances: u64,
    pub disagreements: u64,
    /// Least-indexed disagreement; present iff `disagreements > 0`.
    pub first: Option<Disagreement>,
    /// Wall time, filled in by callers that can measure it.
    pub elapsed: Option<Duration>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.disagreements == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Disagreement {
    pub index: u64,
    pub table: HyperGroupoid,
    pub subsets: Vec<FuzzySubset>,
    pub detail: DisagreementDetail,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DisagreementDetail {
    /// The two decision methods disagree.
    Verdicts { kind: IdealKind, definition: bool, characterization: bool },
    /// A failing verdict carried a witness that does not re-check.
    UnsoundWitness { kind: IdealKind, method: Method },
    /// `(f∘g)∘k` and `f∘(g∘k)` differ at `element`.
    Bracketing { element: Element, left: Grade, right: Grade },
    /// A one-sided ideal that is not a bi-ideal.
    NotBi { one_sided: IdealKind },
}

/// Checks `theorem` on every instance of `scope`, counting disagreements.
///
/// Theorems stated for hypersemigroups need `scope.associative_only`.
pub fn verify_theorem(theorem: Theorem, scope: &VerificationScope, budget: Budget) -> Result<VerificationReport> {
    if theorem.requires_associative() && !scope.associative_only {
        return Err(Error::InvalidScope("this theorem is only claimed for hypersemigroups"));
    }
    let mut disagreements = 0;
    let mut first = None;
    let instances = scan(scope, theorem.arity(), budget, |index, h, fs| {
        if let Some(detail) = check_instance(theorem, h, fs) {
            disagreements += 1;
            if first.is_none() {
                first = Some(Disagreement { index, table: h.clone(), subsets: fs.to_vec(), detail });
            }
        }
        ControlFlow::Continue(())
    })?;
    Ok(VerificationReport { theorem, scope: *scope, instances, disagreements, first, elapsed: None })
}

pub(crate) fn check_instance(theorem: Theorem, h: &HyperGroupoid, fs: &[FuzzySubset]) -> Option<DisagreementDetail> {
    match theorem {
        Theorem::RightIdeal => compare_methods(h, &fs[0], IdealKind::Right),
        Theorem::LeftIdeal => compare_methods(h, &fs[0], IdealKind::Left),
        Theorem::QuasiIdeal => compare_methods(h, &fs[0], IdealKind::Quasi),
        Theorem::BiIdeal => compare_methods(h, &fs[0], IdealKind::Bi),
        Theorem::Associativity => compare_bracketings(h, &fs[0], &fs[1], &fs[2]),
        Theorem::OneSidedImpliesBi => one_sided_implies_bi(h, &fs[0]),
    }
}

fn compare_methods(h: &HyperGroupoid, f: &FuzzySubset, kind: IdealKind) -> Option<DisagreementDetail> {
    let mut verdicts = [false; 2];
    for (slot, method) in verdicts.iter_mut().zip([Method::Definition, Method::Characterization]) {
        let report = ideals::check(h, f, kind, method).expect("scope instances satisfy preconditions");
        if let Some(w) = report.witness {
            if !w.revalidate(h, f) {
                return Some(DisagreementDetail::UnsoundWitness { kind, method });
            }
        }
        *slot = report.holds();
    }
    let [definition, characterization] = verdicts;
    (definition != characterization).then_some(DisagreementDetail::Verdicts { kind, definition, characterization })
}

fn compare_bracketings(h: &HyperGroupoid, f: &FuzzySubset, g: &FuzzySubset, k: &FuzzySubset) -> Option<DisagreementDetail> {
    let left = compose(h, &compose(h, f, g).ok()?, k).ok()?;
    let right = compose(h, f, &compose(h, g, k).ok()?).ok()?;
    h.elements().find(|&a| left[a] != right[a]).map(|element| DisagreementDetail::Bracketing {
        element,
        left: left[element],
        right: right[element],
    })
}

fn one_sided_implies_bi(h: &HyperGroupoid, f: &FuzzySubset) -> Option<DisagreementDetail> {
    let holds = |kind| ideals::check(h, f, kind, Method::Definition).expect("scope instances satisfy preconditions").holds();
    if holds(IdealKind::Bi) {
        return None;
    }
    [IdealKind::Right, IdealKind::Left]
        .into_iter()
        .find(|&k| holds(k))
        .map(|one_sided| DisagreementDetail::NotBi { one_sided })
}
