use crate::error::{Error, Result};
use std::fmt;
use std::ops::Index;

/// Largest magnitude accepted for dimension-vector entries at input
/// boundaries. Keeps every bilinear form evaluation inside checked i64.
pub const MAX_ENTRY: i64 = 1_000_000;

/// Dimension vector, one entry per vertex. Entries are i64 so that
/// intermediate Euler-form values (which go negative) share a type.
/// Ord is lexicographic and fixes the canonical root ordering.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DimVec(Vec<i64>);

impl DimVec {
    pub fn new(entries: Vec<i64>) -> Self {
        DimVec(entries)
    }

    pub fn zeros(n: usize) -> Self {
        DimVec(vec![0; n])
    }

    /// Standard basis vector at `i` (0-based).
    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        DimVec(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    /// Componentwise `self <= other`.
    pub fn leq(&self, other: &DimVec) -> bool {
        debug_assert_eq!(self.len(), other.len());
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &x)| x != 0)
            .map(|(i, _)| i)
    }

    pub fn checked_add(&self, other: &DimVec) -> Result<DimVec> {
        debug_assert_eq!(self.len(), other.len());
        let mut out = Vec::with_capacity(self.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            out.push(a.checked_add(*b).ok_or(Error::Overflow)?);
        }
        Ok(DimVec(out))
    }

    pub fn checked_sub(&self, other: &DimVec) -> Result<DimVec> {
        debug_assert_eq!(self.len(), other.len());
        let mut out = Vec::with_capacity(self.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            out.push(a.checked_sub(*b).ok_or(Error::Overflow)?);
        }
        Ok(DimVec(out))
    }

    pub fn checked_add_scaled(&self, k: i64, other: &DimVec) -> Result<DimVec> {
        debug_assert_eq!(self.len(), other.len());
        let mut out = Vec::with_capacity(self.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            let t = k.checked_mul(*b).ok_or(Error::Overflow)?;
            out.push(a.checked_add(t).ok_or(Error::Overflow)?);
        }
        Ok(DimVec(out))
    }

    /// Validates an externally supplied vector against a quiver with `n`
    /// vertices: length, non-negativity, entry bound.
    pub fn validate_for(&self, n: usize) -> Result<()> {
        if self.len() != n {
            return Err(Error::LengthMismatch {
                found: self.len(),
                expected: n,
            });
        }
        for (i, &x) in self.0.iter().enumerate() {
            if x < 0 {
                return Err(Error::NegativeEntry {
                    vertex: i + 1,
                    value: x,
                });
            }
            if x > MAX_ENTRY {
                return Err(Error::EntryTooLarge {
                    vertex: i + 1,
                    value: x,
                    bound: MAX_ENTRY,
                });
            }
        }
        Ok(())
    }
}

impl Index<usize> for DimVec {
    type Output = i64;
    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl From<Vec<i64>> for DimVec {
    fn from(v: Vec<i64>) -> Self {
        DimVec(v)
    }
}

impl From<&[i64]> for DimVec {
    fn from(v: &[i64]) -> Self {
        DimVec(v.to_vec())
    }
}

impl fmt::Display for DimVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

// Debug = Display keeps test failure output readable.
impl fmt::Debug for DimVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
