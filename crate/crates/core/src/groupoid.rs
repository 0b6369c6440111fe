//! Finite hypergroupoids, the induced product on nonempty subsets and the
//! hypersemigroup test.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// Default ceiling on the carrier size accepted by the constructors.
pub const DEFAULT_MAX_SIZE: usize = 16;

/// Largest carrier an [`ElementSet`] can represent.
pub const HARD_MAX_SIZE: usize = 64;

/// A member of a carrier, identified by its index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Element(u8);

impl Element {
    /// # Panics
    ///
    /// If `index` is not below [`HARD_MAX_SIZE`].
    pub fn new(index: usize) -> Self {
        assert!(index < HARD_MAX_SIZE, "element index {index} out of range");
        Element(index as u8)
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A subset of a carrier, stored as a bitmask over element indices.
///
/// Equal sets have equal representations, so `==` is set equality.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementSet(u64);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        ElementSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn singleton(e: Element) -> Self {
        ElementSet(1 << e.index())
    }

    /// The whole carrier `{0, .., size - 1}`.
    pub fn full(size: usize) -> Self {
        debug_assert!(size <= HARD_MAX_SIZE);
        if size >= 64 {
            ElementSet(u64::MAX)
        } else {
            ElementSet((1u64 << size) - 1)
        }
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, e: Element) -> bool {
        self.0 >> e.index() & 1 == 1
    }

    pub fn insert(&mut self, e: Element) -> bool {
        let fresh = !self.contains(e);
        self.0 |= 1 << e.index();
        fresh
    }

    pub fn union(self, other: ElementSet) -> ElementSet {
        ElementSet(self.0 | other.0)
    }

    pub fn intersection(self, other: ElementSet) -> ElementSet {
        ElementSet(self.0 & other.0)
    }

    pub fn is_subset(self, other: ElementSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Members in ascending index order.
    pub fn iter(self) -> Members {
        Members(self.0)
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(Element::index)).finish()
    }
}

impl core::ops::BitOr for ElementSet {
    type Output = ElementSet;

    fn bitor(self, rhs: ElementSet) -> ElementSet {
        self.union(rhs)
    }
}

impl FromIterator<Element> for ElementSet {
    fn from_iter<I: IntoIterator<Item = Element>>(iter: I) -> Self {
        let mut set = ElementSet::EMPTY;
        for e in iter {
            set.insert(e);
        }
        set
    }
}

impl IntoIterator for ElementSet {
    type Item = Element;
    type IntoIter = Members;

    fn into_iter(self) -> Members {
        self.iter()
    }
}

/// Iterator over the members of an [`ElementSet`].
#[derive(Clone, Debug)]
pub struct Members(u64);

impl Iterator for Members {
    type Item = Element;

    fn next(&mut self) -> Option<Element> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(Element(i as u8))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Members {}

/// The ordered pairs `(y, z)` whose product contains a given element.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PairSet {
    pairs: Vec<(Element, Element)>,
}

impl PairSet {
    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn contains(&self, y: Element, z: Element) -> bool {
        self.pairs.binary_search(&(y, z)).is_ok()
    }

    /// Pairs in lexicographic index order.
    pub fn iter(&self) -> impl Iterator<Item = (Element, Element)> + '_ {
        self.pairs.iter().copied()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BuildError {
    #[error("carrier must contain at least one element")]
    EmptyCarrier,
    #[error("carrier of {size} elements exceeds the limit of {limit}")]
    TooLarge { size: usize, limit: usize },
    #[error("duplicate element name `{0}`")]
    DuplicateName(String),
    #[error("invalid element name `{0}`")]
    InvalidName(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("no cell given for `{0} {1}`")]
    MissingCell(String, String),
    #[error("cell `{0} {1}` given more than once")]
    DuplicateCell(String, String),
    #[error("cell `{0} {1}` is empty")]
    EmptyCell(String, String),
    #[error("cell `{0} {1}` names elements outside the carrier")]
    CellOutOfRange(String, String),
    #[error("table has {found} cells, expected {expected}")]
    TableShape { expected: usize, found: usize },
}

/// Whether `name` can label a carrier element.
///
/// Names are nonempty and free of whitespace and the characters `:`, `{`,
/// `}` and `#`.
pub fn is_valid_name(name: &str) -> bool {
    !name.is_empty()
        && !name
            .chars()
            .any(|c| c.is_whitespace() || matches!(c, ':' | '{' | '}' | '#'))
}

/// Display names `a`, `b`, ... used when a table is generated rather than
/// read.
pub fn default_names(size: usize) -> Vec<String> {
    (0..size)
        .map(|i| {
            if i < 26 {
                char::from(b'a' + i as u8).to_string()
            } else {
                alloc::format!("e{i}")
            }
        })
        .collect()
}

/// A finite hypergroupoid: named carrier plus a total table of nonempty cells.
///
/// Immutable once built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HyperGroupoid {
    names: Vec<String>,
    cells: Vec<ElementSet>,
}

impl HyperGroupoid {
    /// Builds a table from named cells, each ordered pair given exactly once.
    ///
    /// ```
    /// use hyperfuzz_core::HyperGroupoid;
    ///
    /// let h = HyperGroupoid::build(
    ///     &["a", "b"],
    ///     [
    ///         (("a", "a"), vec!["a"]),
    ///         (("a", "b"), vec!["a"]),
    ///         (("b", "a"), vec!["b"]),
    ///         (("b", "b"), vec!["b"]),
    ///     ],
    /// )
    /// .unwrap();
    /// assert!(h.is_hypersemigroup().holds());
    /// ```
    pub fn build<N, T, I, M>(names: &[N], cells: I) -> Result<Self, BuildError>
    where
        N: AsRef<str>,
        T: AsRef<str>,
        I: IntoIterator<Item = ((T, T), M)>,
        M: IntoIterator<Item = T>,
    {
        Self::build_with_limit(names, cells, DEFAULT_MAX_SIZE)
    }

    pub fn build_with_limit<N, T, I, M>(
        names: &[N],
        cells: I,
        max_size: usize,
    ) -> Result<Self, BuildError>
    where
        N: AsRef<str>,
        T: AsRef<str>,
        I: IntoIterator<Item = ((T, T), M)>,
        M: IntoIterator<Item = T>,
    {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        check_names(&names, max_size)?;
        let n = names.len();
        let lookup = |tok: &str| -> Result<usize, BuildError> {
            names
                .iter()
                .position(|s| s == tok)
                .ok_or_else(|| BuildError::UnknownElement(tok.to_string()))
        };

        let mut table: Vec<Option<ElementSet>> = alloc::vec![None; n * n];
        for ((x, y), members) in cells {
            let (xi, yi) = (lookup(x.as_ref())?, lookup(y.as_ref())?);
            let mut set = ElementSet::EMPTY;
            for m in members {
                set.insert(Element::new(lookup(m.as_ref())?));
            }
            let slot = &mut table[xi * n + yi];
            if slot.is_some() {
                return Err(BuildError::DuplicateCell(names[xi].clone(), names[yi].clone()));
            }
            if set.is_empty() {
                return Err(BuildError::EmptyCell(names[xi].clone(), names[yi].clone()));
            }
            *slot = Some(set);
        }

        let mut cells = Vec::with_capacity(n * n);
        for (i, slot) in table.into_iter().enumerate() {
            match slot {
                Some(set) => cells.push(set),
                None => {
                    return Err(BuildError::MissingCell(
                        names[i / n].clone(),
                        names[i % n].clone(),
                    ))
                }
            }
        }
        Ok(HyperGroupoid { names, cells })
    }

    /// Builds a table from row-major cells: `cells[x * n + y]` is `x∘y`.
    pub fn from_table(names: Vec<String>, cells: Vec<ElementSet>) -> Result<Self, BuildError> {
        check_names(&names, DEFAULT_MAX_SIZE)?;
        let n = names.len();
        if cells.len() != n * n {
            return Err(BuildError::TableShape {
                expected: n * n,
                found: cells.len(),
            });
        }
        let carrier = ElementSet::full(n);
        for (i, cell) in cells.iter().enumerate() {
            let (x, y) = (names[i / n].clone(), names[i % n].clone());
            if cell.is_empty() {
                return Err(BuildError::EmptyCell(x, y));
            }
            if !cell.is_subset(carrier) {
                return Err(BuildError::CellOutOfRange(x, y));
            }
        }
        Ok(HyperGroupoid { names, cells })
    }

    /// Like [`from_table`](Self::from_table) with names `a`, `b`, ...
    pub fn with_default_names(cells: Vec<ElementSet>) -> Result<Self, BuildError> {
        let n = (0..).find(|n| n * n >= cells.len()).unwrap_or(0);
        Self::from_table(default_names(n.max(1)), cells)
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, e: Element) -> &str {
        &self.names[e.index()]
    }

    pub fn element(&self, index: usize) -> Option<Element> {
        (index < self.size()).then(|| Element::new(index))
    }

    pub fn element_by_name(&self, name: &str) -> Option<Element> {
        self.names.iter().position(|s| s == name).map(Element::new)
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> + Clone {
        (0..self.size()).map(Element::new)
    }

    /// The whole carrier as a set.
    pub fn carrier(&self) -> ElementSet {
        ElementSet::full(self.size())
    }

    /// Row-major table cells.
    pub fn cells(&self) -> &[ElementSet] {
        &self.cells
    }

    /// The hyperproduct `x∘y`.
    #[inline]
    pub fn hyperop(&self, x: Element, y: Element) -> ElementSet {
        self.cells[x.index() * self.size() + y.index()]
    }

    /// The induced product `A*B`, the union of `a∘b` over `a ∈ A`, `b ∈ B`.
    pub fn star(&self, a: ElementSet, b: ElementSet) -> Result<ElementSet> {
        if a.is_empty() || b.is_empty() {
            return Err(Error::EmptyOperand);
        }
        Ok(self.star_unchecked(a, b))
    }

    pub(crate) fn star_unchecked(&self, a: ElementSet, b: ElementSet) -> ElementSet {
        let mut out = ElementSet::EMPTY;
        for x in a {
            for y in b {
                out = out | self.hyperop(x, y);
            }
        }
        out
    }

    /// All `(y, z)` with `a ∈ y∘z`.
    pub fn preimage_pairs(&self, a: Element) -> PairSet {
        let mut pairs = Vec::new();
        for y in self.elements() {
            for z in self.elements() {
                if self.hyperop(y, z).contains(a) {
                    pairs.push((y, z));
                }
            }
        }
        PairSet { pairs }
    }

    /// Tests `(x∘y)*{z} = {x}*(y∘z)` for every triple, in lexicographic
    /// order, stopping at the first failure.
    pub fn is_hypersemigroup(&self) -> AssociativityReport {
        for x in self.elements() {
            for y in self.elements() {
                let xy = self.hyperop(x, y);
                for z in self.elements() {
                    let left = self.star_unchecked(xy, ElementSet::singleton(z));
                    let right = self.star_unchecked(ElementSet::singleton(x), self.hyperop(y, z));
                    if left != right {
                        return AssociativityReport {
                            witness: Some(AssociativityWitness {
                                x,
                                y,
                                z,
                                left,
                                right,
                            }),
                        };
                    }
                }
            }
        }
        AssociativityReport { witness: None }
    }

    /// Formats a set with this carrier's names, e.g. `{a, b}`.
    pub fn display_set(&self, set: ElementSet) -> DisplaySet<'_> {
        DisplaySet { h: self, set }
    }
}

impl fmt::Debug for HyperGroupoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.size();
        let mut map = f.debug_map();
        for (i, cell) in self.cells.iter().enumerate() {
            map.entry(
                &format_args!("{} {}", self.names[i / n], self.names[i % n]),
                &self.display_set(*cell),
            );
        }
        map.finish()
    }
}

fn check_names(names: &[String], max_size: usize) -> Result<(), BuildError> {
    if names.is_empty() {
        return Err(BuildError::EmptyCarrier);
    }
    let limit = max_size.min(HARD_MAX_SIZE);
    if names.len() > limit {
        return Err(BuildError::TooLarge {
            size: names.len(),
            limit,
        });
    }
    for (i, name) in names.iter().enumerate() {
        if !is_valid_name(name) {
            return Err(BuildError::InvalidName(name.clone()));
        }
        if names[..i].contains(name) {
            return Err(BuildError::DuplicateName(name.clone()));
        }
    }
    Ok(())
}

pub struct DisplaySet<'a> {
    h: &'a HyperGroupoid,
    set: ElementSet,
}

impl fmt::Display for DisplaySet<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.set.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str(self.h.name(e))?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for DisplaySet<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Outcome of [`HyperGroupoid::is_hypersemigroup`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssociativityReport {
    pub witness: Option<AssociativityWitness>,
}

impl AssociativityReport {
    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }
}

/// First triple with `(x∘y)*{z} ≠ {x}*(y∘z)`, with both sides.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AssociativityWitness {
    pub x: Element,
    pub y: Element,
    pub z: Element,
    /// `(x∘y)*{z}`
    pub left: ElementSet,
    /// `{x}*(y∘z)`
    pub right: ElementSet,
}

impl AssociativityWitness {
    pub fn triple(&self) -> (usize, usize, usize) {
        (self.x.index(), self.y.index(), self.z.index())
    }
}
