//! Exact membership grades and the fuzzy-subset algebra: sup-min composition,
//! pointwise order and meet.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use crate::groupoid::{Element, HyperGroupoid};
use crate::{Error, Result};

/// A rational membership grade in `[0, 1]`, kept in lowest terms.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Grade {
    num: u64,
    den: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GradeError {
    #[error("grade must lie in [0, 1]")]
    OutOfRange,
    #[error("grade has a zero denominator")]
    ZeroDenominator,
    #[error("grade must be `0`, `1` or a fraction `p/q`")]
    Malformed,
}

impl Grade {
    pub const ZERO: Grade = Grade { num: 0, den: 1 };
    pub const ONE: Grade = Grade { num: 1, den: 1 };

    /// `p/q` reduced to lowest terms.
    pub fn new(p: i64, q: i64) -> Result<Grade, GradeError> {
        if q == 0 {
            return Err(GradeError::ZeroDenominator);
        }
        // a negative denominator flips the sign of the whole fraction
        let (p, q) = if q < 0 {
            (p.checked_neg(), q.checked_neg())
        } else {
            (Some(p), Some(q))
        };
        match (p, q) {
            (Some(p), Some(q)) if p >= 0 && p <= q => Ok(Self::reduced(p as u64, q as u64)),
            _ => Err(GradeError::OutOfRange),
        }
    }

    fn reduced(num: u64, den: u64) -> Grade {
        let g = gcd(num, den);
        Grade {
            num: num / g,
            den: den / g,
        }
    }

    /// The `i`-th point of the grid `{0, 1/k, .., 1}`.
    pub fn on_grid(i: u32, k: u32) -> Grade {
        assert!(k >= 1 && i <= k, "grid point {i}/{k} out of range");
        Self::reduced(i as u64, k as u64)
    }

    /// The grid `{0, 1/k, 2/k, .., 1}` in ascending order.
    pub fn grid(k: u32) -> Vec<Grade> {
        (0..=k).map(|i| Self::on_grid(i, k)).collect()
    }

    pub fn numerator(self) -> u64 {
        self.num
    }

    pub fn denominator(self) -> u64 {
        self.den
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Ord for Grade {
    fn cmp(&self, other: &Grade) -> Ordering {
        (self.num as u128 * other.den as u128).cmp(&(other.num as u128 * self.den as u128))
    }
}

impl PartialOrd for Grade {
    fn partial_cmp(&self, other: &Grade) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Grade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for Grade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Accepts `p/q` or a bare integer. Decimal literals are rejected.
impl FromStr for Grade {
    type Err = GradeError;

    fn from_str(s: &str) -> Result<Grade, GradeError> {
        let parse = |t: &str| -> Result<i64, GradeError> {
            if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
                // a leading '-' is a well-formed but out-of-range literal
                if let Some(rest) = t.strip_prefix('-') {
                    if !rest.is_empty() && rest.bytes().all(|b| b.is_ascii_digit()) {
                        return Err(GradeError::OutOfRange);
                    }
                }
                return Err(GradeError::Malformed);
            }
            // literals too large for i64 are certainly not in [0, 1] as numerators
            t.parse::<i64>().map_err(|_| GradeError::OutOfRange)
        };
        match s.split_once('/') {
            Some((p, q)) => {
                let (p, q) = (parse(p)?, parse(q)?);
                Grade::new(p, q)
            }
            None => Grade::new(parse(s)?, 1),
        }
    }
}

/// A total map from a carrier to [`Grade`].
///
/// A fuzzy subset is tied to a carrier only through its size; operations
/// taking a [`HyperGroupoid`] reject subsets of any other length with
/// [`Error::CarrierMismatch`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FuzzySubset {
    grades: Vec<Grade>,
}

impl FuzzySubset {
    /// One grade per carrier element, in index order.
    pub fn new(h: &HyperGroupoid, grades: Vec<Grade>) -> Result<Self> {
        if grades.len() != h.size() {
            return Err(Error::CarrierMismatch {
                expected: h.size(),
                found: grades.len(),
            });
        }
        Ok(FuzzySubset { grades })
    }

    /// Builds a subset without a carrier at hand; `grades.len()` is the
    /// carrier size.
    pub fn from_grades(grades: Vec<Grade>) -> Self {
        assert!(!grades.is_empty(), "a carrier is nonempty");
        FuzzySubset { grades }
    }

    pub fn from_fn(h: &HyperGroupoid, mut f: impl FnMut(Element) -> Grade) -> Self {
        FuzzySubset {
            grades: h.elements().map(&mut f).collect(),
        }
    }

    pub fn constant(h: &HyperGroupoid, g: Grade) -> Self {
        FuzzySubset {
            grades: alloc::vec![g; h.size()],
        }
    }

    /// The subset `1`, greatest element of the pointwise order.
    pub fn constant_one(h: &HyperGroupoid) -> Self {
        Self::constant(h, Grade::ONE)
    }

    pub fn constant_zero(h: &HyperGroupoid) -> Self {
        Self::constant(h, Grade::ZERO)
    }

    pub fn size(&self) -> usize {
        self.grades.len()
    }

    pub fn grades(&self) -> &[Grade] {
        &self.grades
    }

    #[inline]
    pub fn grade(&self, e: Element) -> Grade {
        self.grades[e.index()]
    }

    pub fn is_constant(&self) -> bool {
        self.grades.windows(2).all(|w| w[0] == w[1])
    }

    pub(crate) fn check_carrier(&self, h: &HyperGroupoid) -> Result<()> {
        self.check_size(h.size())
    }

    fn check_size(&self, size: usize) -> Result<()> {
        if self.size() == size {
            Ok(())
        } else {
            Err(Error::CarrierMismatch {
                expected: size,
                found: self.size(),
            })
        }
    }

    /// First element where `self(x) > other(x)`, or `None` when
    /// `self ⪯ other`.
    pub fn first_excess(&self, other: &FuzzySubset) -> Result<Option<Element>> {
        other.check_size(self.size())?;
        Ok(self
            .grades
            .iter()
            .zip(&other.grades)
            .position(|(a, b)| a > b)
            .map(Element::new))
    }
}

impl core::ops::Index<Element> for FuzzySubset {
    type Output = Grade;

    fn index(&self, e: Element) -> &Grade {
        &self.grades[e.index()]
    }
}

impl fmt::Debug for FuzzySubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.grades).finish()
    }
}

/// `f ⪯ g`: pointwise `f(x) ≤ g(x)`.
pub fn leq(f: &FuzzySubset, g: &FuzzySubset) -> Result<bool> {
    Ok(f.first_excess(g)?.is_none())
}

/// Pointwise minimum `f ∧ g`.
pub fn meet(f: &FuzzySubset, g: &FuzzySubset) -> Result<FuzzySubset> {
    g.check_size(f.size())?;
    Ok(FuzzySubset {
        grades: f
            .grades
            .iter()
            .zip(&g.grades)
            .map(|(a, b)| *a.min(b))
            .collect(),
    })
}

/// Sup-min composition `f∘g`.
///
/// At `a` this is the maximum of `min(f(y), g(z))` over the pairs `(y, z)`
/// with `a ∈ y∘z`, and `0` when there are none.
pub fn compose(h: &HyperGroupoid, f: &FuzzySubset, g: &FuzzySubset) -> Result<FuzzySubset> {
    f.check_carrier(h)?;
    g.check_carrier(h)?;
    Ok(compose_unchecked(h, f, g))
}

pub(crate) fn compose_unchecked(h: &HyperGroupoid, f: &FuzzySubset, g: &FuzzySubset) -> FuzzySubset {
    FuzzySubset::from_fn(h, |a| {
        h.preimage_pairs(a)
            .iter()
            .map(|(y, z)| f.grade(y).min(g.grade(z)))
            .max()
            .unwrap_or(Grade::ZERO)
    })
}

/// A hypergroupoid known to satisfy the hypersemigroup identity, on which
/// composition of fuzzy subsets is associative.
#[derive(Clone, Copy, Debug)]
pub struct Hypersemigroup<'a> {
    h: &'a HyperGroupoid,
}

impl<'a> Hypersemigroup<'a> {
    pub fn new(h: &'a HyperGroupoid) -> Result<Self> {
        match h.is_hypersemigroup().witness {
            None => Ok(Hypersemigroup { h }),
            Some(w) => Err(Error::NotAssociative(w)),
        }
    }

    pub fn groupoid(&self) -> &'a HyperGroupoid {
        self.h
    }

    /// `f∘g∘k`, computed as `(f∘g)∘k`.
    pub fn compose3(&self, f: &FuzzySubset, g: &FuzzySubset, k: &FuzzySubset) -> Result<FuzzySubset> {
        compose(self.h, &compose(self.h, f, g)?, k)
    }
}

/// `f∘g∘k` on a hypersemigroup; fails with [`Error::NotAssociative`] when
/// the two bracketings are not guaranteed to agree.
pub fn compose3(
    h: &HyperGroupoid,
    f: &FuzzySubset,
    g: &FuzzySubset,
    k: &FuzzySubset,
) -> Result<FuzzySubset> {
    Hypersemigroup::new(h)?.compose3(f, g, k)
}
