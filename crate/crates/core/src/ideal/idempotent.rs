//! Idempotents of finite rings and lifting modulo nil ideals.

use super::nilpotency_index;
use crate::center::is_central;
use crate::error::{Error, Result};
use crate::exactalg::{IntegersMod, Scalars, Submodule};
use crate::ring::RingPresentation;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Idempotent<E> {
    pub e: Vec<E>,
    pub central: bool,
}

/// Every idempotent of a finite ring, in element order.
pub fn idempotents(ring: &RingPresentation<IntegersMod>, cap: u64) -> Result<Vec<Idempotent<u64>>> {
    Ok(ring
        .elements(cap)?
        .filter(|x| ring.mul(x, x) == *x)
        .map(|e| Idempotent {
            central: is_central(ring, &e),
            e,
        })
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftedIdempotent<E> {
    pub e: Vec<E>,
    pub iterations: usize,
}

const MAX_LIFT_STEPS: usize = 64;

/// Lifts `x`, idempotent modulo the nilpotent ideal `nil`, to an idempotent
/// congruent to it, iterating `e -> 3e^2 - 2e^3`.
pub fn lift_idempotent<S: Scalars>(ring: &RingPresentation<S>, x: &[S::Elem], nil: &Submodule<S>) -> Result<LiftedIdempotent<S::Elem>> {
    let sq = |e: &[S::Elem]| ring.mul(e, e);
    if !nil.contains(&ring.sub(&sq(x), x)) {
        return Err(Error::InvalidArgument("element is not idempotent modulo the ideal".into()));
    }
    if nilpotency_index(ring, nil).is_none() {
        return Err(Error::InvalidArgument("ideal is not nilpotent".into()));
    }
    let s = ring.scalars();
    let (three, two) = (s.from_i64(3), s.from_i64(2));
    let mut e = x.to_vec();
    for iterations in 0..=MAX_LIFT_STEPS {
        let e2 = sq(&e);
        if e2 == e {
            return Ok(LiftedIdempotent { e, iterations });
        }
        let e3 = ring.mul(&e2, &e);
        e = ring.sub(&ring.scale(&three, &e2), &ring.scale(&two, &e3));
    }
    Err(Error::Unsupported("idempotent lifting did not converge".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{ce_matrix, commutative_control, full_matrix, CommutativeControl};
    use crate::ring::RingPresentation;

    fn f(p: u64) -> IntegersMod {
        IntegersMod::new(p).unwrap()
    }

    #[test]
    fn local_ring_has_trivial_idempotents() {
        let r = ce_matrix(7, f(2)).unwrap();
        let ids = idempotents(&r, 1 << 10).unwrap();
        assert_eq!(ids.iter().map(|i| i.e.clone()).collect::<Vec<_>>(), vec![r.zero_coords(), r.one().to_vec()]);
        assert!(ids.iter().all(|i| i.central));
    }

    #[test]
    fn matrix_idempotents() {
        // M_2(F_2): 0, 1 and the six rank-one idempotents
        let r = full_matrix(2, f(2)).unwrap();
        let ids = idempotents(&r, 16).unwrap();
        assert_eq!(ids.len(), 8);
        assert_eq!(ids.iter().filter(|i| i.central).count(), 2);
        let p = commutative_control(CommutativeControl::Product(2), f(2)).unwrap();
        assert_eq!(idempotents(&p, 16).unwrap().len(), 4);
    }

    #[test]
    fn lifts_modulo_nilpotent_ideal() {
        // Z/9 x Z/9 with ideal 3R: 4 = 1 + 3 is idempotent mod 3
        let s = f(9);
        let r = RingPresentation::from_integer_table(
            "Z/9xZ/9",
            s,
            &[1, 1],
            &[vec![vec![1, 0], vec![0, 0]], vec![vec![0, 0], vec![0, 1]]],
        )
        .unwrap();
        let nil = Submodule::new(s, 2, vec![vec![3, 0], vec![0, 3]]);
        let got = lift_idempotent(&r, &[4, 3], &nil).unwrap();
        assert_eq!(got.e, vec![1, 0]);
        assert!(got.iterations >= 1);
        assert!(nil.contains(&r.sub(&got.e, &[4, 3])));
        assert!(lift_idempotent(&r, &[2, 0], &nil).is_err());
        let full = Submodule::full(s, 2);
        assert!(lift_idempotent(&r, &[2, 0], &full).is_err());
    }
}
