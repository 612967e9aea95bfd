use num_bigint::BigInt;

use super::RingPresentation;
use crate::error::Result;
use crate::exactalg::{Integers, IntegersMod, Rationals, Scalars};

/// The reduction `R -> R/mR` of an integer presentation.
#[derive(Clone, Debug)]
pub struct QuotientMap {
    source: RingPresentation<Integers>,
    target: RingPresentation<IntegersMod>,
}

impl QuotientMap {
    pub fn source(&self) -> &RingPresentation<Integers> {
        &self.source
    }

    pub fn target(&self) -> &RingPresentation<IntegersMod> {
        &self.target
    }

    pub fn modulus(&self) -> u64 {
        self.target.scalars().modulus()
    }

    /// Coordinatewise residues.
    pub fn reduce(&self, x: &[BigInt]) -> Vec<u64> {
        let s = self.target.scalars();
        x.iter().map(|v| s.from_bigint(v)).collect()
    }

    /// Representatives in `[0, m)`.
    pub fn lift(&self, x: &[u64]) -> Vec<BigInt> {
        x.iter().map(|&v| BigInt::from(v)).collect()
    }
}

impl RingPresentation<Integers> {
    /// `R/mR`, with the structure constants reduced mod `m`.
    pub fn quotient_mod(&self, m: u64) -> Result<QuotientMap> {
        let zm = IntegersMod::new(m)?;
        let name = format!("{}/{}", self.name(), m);
        let target = self.map_scalars(zm, name, |v| zm.from_bigint(v));
        Ok(QuotientMap {
            source: self.clone(),
            target,
        })
    }

    /// `Q ⊗ R`: the same constants over the rationals.
    pub fn rationalize(&self) -> RingPresentation<Rationals> {
        let name = format!("Q⊗{}", self.name());
        self.map_scalars(Rationals, name, |v| Rationals.from_bigint(v))
    }
}
