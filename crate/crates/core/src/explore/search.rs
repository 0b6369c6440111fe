use alloc::vec::Vec;
use core::ops::ControlFlow;

use super::scan::scan;
use super::verify::check_instance;
use super::{Budget, Theorem, VerificationScope};
use crate::fuzzy::FuzzySubset;
use crate::groupoid::HyperGroupoid;
use crate::ideals;
use crate::{Error, Result};

/// Something to look for in an instance space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Property {
    /// A table that is not a hypersemigroup.
    NonAssociative,
    /// On a hypersemigroup, a bi-ideal that is neither a right nor a left
    /// ideal.
    BiNeitherOneSided,
    /// An instance where `theorem` fails to check out.
    Disagreement(Theorem),
    /// On a table that is not a hypersemigroup, an `f` where the pointwise
    /// bi-ideal condition and `((f∘1)∘f) ⪯ f` disagree. Nothing is claimed
    /// about this case; the search only reports what it finds.
    BiOffAssociative,
}

impl Property {
    fn arity(self) -> u32 {
        match self {
            Property::NonAssociative => 0,
            Property::Disagreement(t) => t.arity(),
            Property::BiNeitherOneSided | Property::BiOffAssociative => 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    /// Position in the scope's walk.
    pub index: u64,
    pub table: HyperGroupoid,
    pub subsets: Vec<FuzzySubset>,
}

/// First instance of `scope`, in walk order, that has `property`.
///
/// `None` only says that the searched scope holds no such instance.
pub fn find_counterexample(property: Property, scope: &VerificationScope, budget: Budget) -> Result<Option<Instance>> {
    match property {
        Property::Disagreement(t) if t.requires_associative() && !scope.associative_only => {
            return Err(Error::InvalidScope("this theorem is only claimed for hypersemigroups"))
        }
        Property::NonAssociative | Property::BiOffAssociative if scope.associative_only => {
            return Err(Error::InvalidScope("the property concerns non-associative tables"))
        }
        _ => {}
    }

    let mut found = None;
    scan(scope, property.arity(), budget, |index, h, fs| {
        if has_property(property, h, fs) {
            found = Some(Instance { index, table: h.clone(), subsets: fs.to_vec() });
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok(found)
}

fn has_property(property: Property, h: &HyperGroupoid, fs: &[FuzzySubset]) -> bool {
    match property {
        Property::NonAssociative => !h.is_hypersemigroup().holds(),
        Property::Disagreement(t) => check_instance(t, h, fs).is_some(),
        Property::BiNeitherOneSided => {
            let f = &fs[0];
            let Ok(profile) = ideals::classify(h, f) else { return false };
            profile.bi == Some(true) && !profile.right && !profile.left
        }
        Property::BiOffAssociative => {
            let f = &fs[0];
            if h.is_hypersemigroup().holds() {
                return false;
            }
            let by_definition = ideals::bi_sweep(h, f).is_none();
            let by_inequality = ideals::bi_inequality_left_bracketed(h, f).is_none();
            by_definition != by_inequality
        }
    }
}
