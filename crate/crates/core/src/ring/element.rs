use std::fmt;

use super::RingPresentation;
use crate::error::{Error, Result};
use crate::exactalg::Scalars;

/// An element bound to its presentation; arithmetic checks that both
/// operands live in the same ring.
#[derive(Clone)]
pub struct RingElement<'r, S: Scalars> {
    ring: &'r RingPresentation<S>,
    coords: Vec<S::Elem>,
}

impl<'r, S: Scalars> RingElement<'r, S> {
    pub fn new(ring: &'r RingPresentation<S>, coords: Vec<S::Elem>) -> Result<Self> {
        if coords.len() != ring.rank() {
            return Err(Error::Mismatch(format!(
                "element has {} coordinates, ring {} has rank {}",
                coords.len(),
                ring.name(),
                ring.rank()
            )));
        }
        let s = ring.scalars();
        let coords = coords.into_iter().map(|v| s.normalize(v)).collect();
        Ok(RingElement { ring, coords })
    }

    pub fn ring(&self) -> &'r RingPresentation<S> {
        self.ring
    }

    pub fn coords(&self) -> &[S::Elem] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<S::Elem> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.ring.is_zero(&self.coords)
    }

    fn same_ring(&self, other: &Self) -> Result<()> {
        if std::ptr::eq(self.ring, other.ring) || self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::Mismatch(format!(
                "elements of different rings {} and {}",
                self.ring.name(),
                other.ring.name()
            )))
        }
    }

    fn with(&self, coords: Vec<S::Elem>) -> Self {
        RingElement {
            ring: self.ring,
            coords,
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        Ok(self.with(self.ring.add(&self.coords, &other.coords)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        Ok(self.with(self.ring.sub(&self.coords, &other.coords)))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        Ok(self.with(self.ring.mul(&self.coords, &other.coords)))
    }

    pub fn scalar_mul(&self, c: &S::Elem) -> Self {
        self.with(self.ring.scale(c, &self.coords))
    }

    pub fn neg(&self) -> Self {
        self.with(self.ring.neg(&self.coords))
    }

    /// `[a, b] = ab - ba`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        Ok(self.with(self.ring.commutator(&self.coords, &other.coords)))
    }
}

impl<S: Scalars> PartialEq for RingElement<'_, S> {
    fn eq(&self, other: &Self) -> bool {
        self.same_ring(other).is_ok() && self.coords == other.coords
    }
}

impl<S: Scalars> fmt::Debug for RingElement<'_, S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.ring.scalars();
        let parts: Vec<String> = self.coords.iter().map(|v| s.format(v)).collect();
        write!(f, "{}({})", self.ring.name(), parts.join(", "))
    }
}
