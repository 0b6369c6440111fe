//! Fuzzy right, left, quasi- and bi-ideals.
//!
//! Each property is decided two ways. [`Method::Definition`] sweeps the
//! pointwise condition over the table; [`Method::Characterization`] builds
//! the matching composition with the constant subset `1` and compares it with
//! `f` in the pointwise order. The two routes share nothing beyond table
//! lookups, so their agreement is a genuine cross-check.

use core::fmt;
use core::str::FromStr;

use crate::fuzzy::{self, FuzzySubset, Grade, Hypersemigroup};
use crate::groupoid::{Element, ElementSet, HyperGroupoid};
use crate::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IdealKind {
    Right,
    Left,
    Quasi,
    Bi,
}

impl IdealKind {
    pub const ALL: [IdealKind; 4] = [IdealKind::Right, IdealKind::Left, IdealKind::Quasi, IdealKind::Bi];

    pub fn as_str(self) -> &'static str {
        match self {
            IdealKind::Right => "right",
            IdealKind::Left => "left",
            IdealKind::Quasi => "quasi",
            IdealKind::Bi => "bi",
        }
    }
}

impl fmt::Display for IdealKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for IdealKind {
    type Err = ();

    fn from_str(s: &str) -> core::result::Result<Self, ()> {
        IdealKind::ALL
            .into_iter()
            .find(|k| k.as_str().eq_ignore_ascii_case(s))
            .ok_or(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    /// Sweep of the pointwise condition.
    Definition,
    /// Composition inequality against `f`.
    Characterization,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Definition => "definition",
            Method::Characterization => "characterization",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Counterexample to an ideal property.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdealWitness {
    /// `u ∈ x∘y` with `f(u) < f(x)`.
    Right {
        x: Element,
        y: Element,
        u: Element,
        grade_u: Grade,
        grade_x: Grade,
    },
    /// `u ∈ x∘y` with `f(u) < f(y)`.
    Left {
        x: Element,
        y: Element,
        u: Element,
        grade_u: Grade,
        grade_y: Grade,
    },
    /// `x ∈ b∘s`, `x ∈ t∘c` with `f(x) < min(f(b), f(c))`.
    Quasi {
        x: Element,
        b: Element,
        s: Element,
        t: Element,
        c: Element,
        grade_x: Grade,
        grade_b: Grade,
        grade_c: Grade,
    },
    /// `u ∈ (x∘y)*{z}` with `f(u) < min(f(x), f(z))`.
    Bi {
        x: Element,
        y: Element,
        z: Element,
        u: Element,
        grade_u: Grade,
        grade_x: Grade,
        grade_z: Grade,
    },
    /// The composed side exceeds `f` at `element`.
    Inequality {
        element: Element,
        composed: Grade,
        actual: Grade,
    },
}

impl IdealWitness {
    /// Re-checks the witness against raw table lookups and grade
    /// comparisons. For [`IdealWitness::Inequality`] only the recorded
    /// `f(element)` can be checked without recomposing.
    pub fn revalidate(&self, h: &HyperGroupoid, f: &FuzzySubset) -> bool {
        if f.size() != h.size() {
            return false;
        }
        match *self {
            IdealWitness::Right { x, y, u, grade_u, grade_x } => {
                h.hyperop(x, y).contains(u)
                    && f[u] == grade_u
                    && f[x] == grade_x
                    && grade_u < grade_x
            }
            IdealWitness::Left { x, y, u, grade_u, grade_y } => {
                h.hyperop(x, y).contains(u)
                    && f[u] == grade_u
                    && f[y] == grade_y
                    && grade_u < grade_y
            }
            IdealWitness::Quasi { x, b, s, t, c, grade_x, grade_b, grade_c } => {
                h.hyperop(b, s).contains(x)
                    && h.hyperop(t, c).contains(x)
                    && f[x] == grade_x
                    && f[b] == grade_b
                    && f[c] == grade_c
                    && grade_x < grade_b.min(grade_c)
            }
            IdealWitness::Bi { x, y, z, u, grade_u, grade_x, grade_z } => {
                h.hyperop(x, y).iter().any(|w| h.hyperop(w, z).contains(u))
                    && f[u] == grade_u
                    && f[x] == grade_x
                    && f[z] == grade_z
                    && grade_u < grade_x.min(grade_z)
            }
            IdealWitness::Inequality { element, composed, actual } => {
                f[element] == actual && composed > actual
            }
        }
    }
}

/// Verdict of one ideal check. The property holds iff `witness` is `None`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IdealReport {
    pub kind: IdealKind,
    pub method: Method,
    pub witness: Option<IdealWitness>,
}

impl IdealReport {
    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }
}

pub fn check(h: &HyperGroupoid, f: &FuzzySubset, kind: IdealKind, method: Method) -> Result<IdealReport> {
    match kind {
        IdealKind::Right => check_right_ideal(h, f, method),
        IdealKind::Left => check_left_ideal(h, f, method),
        IdealKind::Quasi => check_quasi_ideal(h, f, method),
        IdealKind::Bi => check_bi_ideal(h, f, method),
    }
}

pub fn check_right_ideal(h: &HyperGroupoid, f: &FuzzySubset, method: Method) -> Result<IdealReport> {
    f.check_carrier(h)?;
    let witness = match method {
        Method::Definition => right_sweep(h, f),
        Method::Characterization => {
            let one = FuzzySubset::constant_one(h);
            inequality(&fuzzy::compose(h, f, &one)?, f)
        }
    };
    Ok(IdealReport { kind: IdealKind::Right, method, witness })
}

pub fn check_left_ideal(h: &HyperGroupoid, f: &FuzzySubset, method: Method) -> Result<IdealReport> {
    f.check_carrier(h)?;
    let witness = match method {
        Method::Definition => left_sweep(h, f),
        Method::Characterization => {
            let one = FuzzySubset::constant_one(h);
            inequality(&fuzzy::compose(h, &one, f)?, f)
        }
    };
    Ok(IdealReport { kind: IdealKind::Left, method, witness })
}

/// Quasi-ideals need no associativity, so any hypergroupoid is accepted.
pub fn check_quasi_ideal(h: &HyperGroupoid, f: &FuzzySubset, method: Method) -> Result<IdealReport> {
    f.check_carrier(h)?;
    let witness = match method {
        Method::Definition => quasi_sweep(h, f),
        Method::Characterization => {
            let one = FuzzySubset::constant_one(h);
            let right = fuzzy::compose(h, f, &one)?;
            let left = fuzzy::compose(h, &one, f)?;
            inequality(&fuzzy::meet(&right, &left)?, f)
        }
    };
    Ok(IdealReport { kind: IdealKind::Quasi, method, witness })
}

/// Both methods refuse tables that are not hypersemigroups.
pub fn check_bi_ideal(h: &HyperGroupoid, f: &FuzzySubset, method: Method) -> Result<IdealReport> {
    f.check_carrier(h)?;
    let s = Hypersemigroup::new(h)?;
    let witness = match method {
        Method::Definition => bi_sweep(h, f),
        Method::Characterization => {
            let one = FuzzySubset::constant_one(h);
            inequality(&s.compose3(f, &one, f)?, f)
        }
    };
    Ok(IdealReport { kind: IdealKind::Bi, method, witness })
}

fn inequality(composed: &FuzzySubset, f: &FuzzySubset) -> Option<IdealWitness> {
    let element = composed.first_excess(f).ok()??;
    Some(IdealWitness::Inequality {
        element,
        composed: composed[element],
        actual: f[element],
    })
}

fn right_sweep(h: &HyperGroupoid, f: &FuzzySubset) -> Option<IdealWitness> {
    for x in h.elements() {
        for y in h.elements() {
            for u in h.hyperop(x, y) {
                if f[u] < f[x] {
                    return Some(IdealWitness::Right { x, y, u, grade_u: f[u], grade_x: f[x] });
                }
            }
        }
    }
    None
}

fn left_sweep(h: &HyperGroupoid, f: &FuzzySubset) -> Option<IdealWitness> {
    for x in h.elements() {
        for y in h.elements() {
            for u in h.hyperop(x, y) {
                if f[u] < f[y] {
                    return Some(IdealWitness::Left { x, y, u, grade_u: f[u], grade_y: f[y] });
                }
            }
        }
    }
    None
}

fn quasi_sweep(h: &HyperGroupoid, f: &FuzzySubset) -> Option<IdealWitness> {
    for x in h.elements() {
        for b in h.elements() {
            for s in h.elements() {
                if !h.hyperop(b, s).contains(x) {
                    continue;
                }
                for t in h.elements() {
                    for c in h.elements() {
                        if h.hyperop(t, c).contains(x) && f[x] < f[b].min(f[c]) {
                            return Some(IdealWitness::Quasi {
                                x,
                                b,
                                s,
                                t,
                                c,
                                grade_x: f[x],
                                grade_b: f[b],
                                grade_c: f[c],
                            });
                        }
                    }
                }
            }
        }
    }
    None
}

/// Pointwise bi-ideal condition over every `u ∈ (x∘y)*{z}`. Mechanically
/// defined on any table; callers decide whether that is meaningful.
pub(crate) fn bi_sweep(h: &HyperGroupoid, f: &FuzzySubset) -> Option<IdealWitness> {
    for x in h.elements() {
        for y in h.elements() {
            let xy = h.hyperop(x, y);
            for z in h.elements() {
                let bound = f[x].min(f[z]);
                for u in h.star_unchecked(xy, ElementSet::singleton(z)) {
                    if f[u] < bound {
                        return Some(IdealWitness::Bi {
                            x,
                            y,
                            z,
                            u,
                            grade_u: f[u],
                            grade_x: f[x],
                            grade_z: f[z],
                        });
                    }
                }
            }
        }
    }
    None
}

/// `((f∘1)∘f) ⪯ f` with the left bracketing fixed, on any table.
pub(crate) fn bi_inequality_left_bracketed(h: &HyperGroupoid, f: &FuzzySubset) -> Option<IdealWitness> {
    let one = FuzzySubset::constant_one(h);
    let f1 = fuzzy::compose_unchecked(h, f, &one);
    inequality(&fuzzy::compose_unchecked(h, &f1, f), f)
}

/// Which ideal properties a fuzzy subset has, decided by definition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IdealProfile {
    pub right: bool,
    pub left: bool,
    pub quasi: bool,
    /// `None` when the table is not a hypersemigroup.
    pub bi: Option<bool>,
    pub associative: bool,
}

impl IdealProfile {
    pub fn get(&self, kind: IdealKind) -> Option<bool> {
        match kind {
            IdealKind::Right => Some(self.right),
            IdealKind::Left => Some(self.left),
            IdealKind::Quasi => Some(self.quasi),
            IdealKind::Bi => self.bi,
        }
    }
}

pub fn classify(h: &HyperGroupoid, f: &FuzzySubset) -> Result<IdealProfile> {
    f.check_carrier(h)?;
    let associative = h.is_hypersemigroup().holds();
    let bi = if associative {
        Some(check_bi_ideal(h, f, Method::Definition)?.holds())
    } else {
        None
    };
    Ok(IdealProfile {
        right: check_right_ideal(h, f, Method::Definition)?.holds(),
        left: check_left_ideal(h, f, Method::Definition)?.holds(),
        quasi: check_quasi_ideal(h, f, Method::Definition)?.holds(),
        bi,
        associative,
    })
}
