//! Exhaustive enumeration of rings over `Z/m`.

use num_bigint::BigUint;

use super::RingPresentation;
use crate::error::{Error, Result};
use crate::exactalg::IntegersMod;

/// Default upper bound on `m^rank` for exhaustive scans.
pub const DEFAULT_ENUMERATION_CAP: u64 = 1 << 24;

/// Every element of a finite presentation in lexicographic coordinate order
/// (first coordinate most significant).
#[derive(Clone, Debug)]
pub struct Elements {
    modulus: u64,
    rank: usize,
    next: u64,
    count: u64,
}

impl Elements {
    pub fn total(&self) -> u64 {
        self.count
    }

    /// The element with the given lexicographic index.
    pub fn element_at(&self, mut index: u64) -> Vec<u64> {
        let mut v = vec![0u64; self.rank];
        for slot in v.iter_mut().rev() {
            *slot = index % self.modulus;
            index /= self.modulus;
        }
        v
    }
}

impl Iterator for Elements {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        if self.next >= self.count {
            return None;
        }
        let v = self.element_at(self.next);
        self.next += 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.count - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for Elements {}

impl RingPresentation<IntegersMod> {
    /// `m^rank`, or `None` if it does not fit in a `u64`.
    pub fn cardinality(&self) -> Option<u64> {
        let m = self.scalars().modulus();
        (0..self.rank()).try_fold(1u64, |acc, _| acc.checked_mul(m))
    }

    pub fn within_cap(&self, cap: u64) -> bool {
        self.cardinality().is_some_and(|c| c <= cap)
    }

    /// Enumerates all elements, refusing when `m^rank` exceeds `cap`.
    pub fn elements(&self, cap: u64) -> Result<Elements> {
        match self.cardinality() {
            Some(count) if count <= cap => Ok(Elements {
                modulus: self.scalars().modulus(),
                rank: self.rank(),
                next: 0,
                count,
            }),
            _ => Err(Error::CapExceeded {
                count: format!(
                    "{}^{} = {}",
                    self.scalars().modulus(),
                    self.rank(),
                    BigUint::from(self.scalars().modulus()).pow(self.rank() as u32)
                ),
                cap,
            }),
        }
    }
}
