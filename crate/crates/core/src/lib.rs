//! Finite hypergroupoids and the fuzzy-subset algebra over them.
//!
//! A [`HyperGroupoid`] is a finite carrier together with a total table sending
//! every ordered pair to a nonempty subset of the carrier. On top of it this
//! crate provides:
//!
//! * the induced product on nonempty subsets ([`HyperGroupoid::star`]) and the
//!   associativity test that decides whether the table is a hypersemigroup;
//! * exact grades in `[0, 1]` ([`Grade`]) and fuzzy subsets with sup-min
//!   composition, pointwise order and meet ([`fuzzy`]);
//! * fuzzy right, left, quasi- and bi-ideal checks, each decided both from the
//!   pointwise definition and from a composition inequality ([`ideals`]);
//! * enumeration, seeded sampling and a harness that cross-checks the two
//!   decision methods over whole instance spaces ([`explore`]).
//!
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(any(feature = "std", test)), no_std)]

extern crate alloc;

pub mod explore;
pub mod fuzzy;
pub mod groupoid;
pub mod ideals;

mod error;

pub use error::Error;
pub use fuzzy::{FuzzySubset, Grade, GradeError};
pub use groupoid::{
    AssociativityReport, AssociativityWitness, BuildError, Element, ElementSet, HyperGroupoid,
    PairSet,
};
pub use ideals::{IdealKind, IdealProfile, IdealReport, IdealWitness, Method};

pub type Result<T, E = Error> = core::result::Result<T, E>;
