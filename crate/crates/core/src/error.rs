use crate::groupoid::AssociativityWitness;

/// Errors raised by operations on already-built values.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("fuzzy subset has {found} grades but the carrier has {expected} elements")]
    CarrierMismatch { expected: usize, found: usize },

    #[error("the induced product is only defined on nonempty subsets")]
    EmptyOperand,

    #[error("hypergroupoid is not a hypersemigroup (first failing triple {:?})", .0.triple())]
    NotAssociative(AssociativityWitness),

    #[error("instance space of {required} exceeds the budget of {budget}")]
    BudgetExceeded { required: u128, budget: u64 },

    #[error("invalid verification scope: {0}")]
    InvalidScope(&'static str),

    #[error("no associative table found after {attempts} draws")]
    SamplingExhausted { attempts: u64 },
}
