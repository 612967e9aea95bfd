//! One- and two-sided ideals as submodules of coordinate space.
//!
//! Essentiality, closedness and complements are decided for right ideals
//! of right Artinian rings (finite rings and algebras over a field); left
//! ideals are handled as right ideals of the opposite ring.

mod idempotent;
mod maximal;
mod radical;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub use idempotent::{idempotents, lift_idempotent, Idempotent, LiftedIdempotent};
pub use maximal::{
    is_quasi_invariant, is_right_invariant, maximal_left_ideals, maximal_right_ideals, minimal_right_ideals, QuasiInvarianceWitness,
};
pub use radical::{
    ciw_radical, jacobson_exhaustive, jacobson_radical, left_annihilator, nilpotency_index, nilradical_tffr, p_height, radical_quotient_socle,
    socle_right, trace_radical, RadicalData,
};

use crate::center::RandomScalar;
use crate::error::{Error, Result};
use crate::exactalg::{Scalars, Submodule};
use crate::ring::{RingPresentation, Side};

/// A submodule closed under multiplication on its declared side.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IdealRep<S: Scalars> {
    pub side: Side,
    pub sub: Submodule<S>,
}

/// `r x` (side `Left`) or `x r` (side `Right`) falls outside the submodule.
#[derive(Clone, Debug, PartialEq)]
pub struct SideWitness<E> {
    pub side: Side,
    pub r: Vec<E>,
    pub x: Vec<E>,
    pub product: Vec<E>,
}

impl<S: Scalars> IdealRep<S> {
    /// Checks closure on the declared side.
    pub fn new(ring: &RingPresentation<S>, side: Side, sub: Submodule<S>) -> Result<Self> {
        if let Some(w) = closure_failure(ring, &sub, side) {
            return Err(Error::InvalidArgument(format!(
                "submodule is not a {side:?} ideal: {} side product with basis vector fails",
                match w.side {
                    Side::Left => "left",
                    _ => "right",
                }
            )));
        }
        Ok(IdealRep { side, sub })
    }

    pub fn revalidate(&self, ring: &RingPresentation<S>) -> bool {
        closure_failure(ring, &self.sub, self.side).is_none()
    }
}

/// First failure of closure on `side`, scanning the canonical basis of
/// `sub` and then the ring basis; left products are tried first.
pub fn closure_failure<S: Scalars>(ring: &RingPresentation<S>, sub: &Submodule<S>, side: Side) -> Option<SideWitness<S::Elem>> {
    let (left, right) = match side {
        Side::Left => (true, false),
        Side::Right => (false, true),
        Side::TwoSided => (true, true),
    };
    for x in sub.basis() {
        for j in 0..ring.rank() {
            let e = ring.basis_coords(j);
            if left {
                let p = ring.mul(&e, x);
                if !sub.contains(&p) {
                    return Some(SideWitness {
                        side: Side::Left,
                        r: e,
                        x: x.clone(),
                        product: p,
                    });
                }
            }
            if right {
                let p = ring.mul(x, &e);
                if !sub.contains(&p) {
                    return Some(SideWitness {
                        side: Side::Right,
                        r: e,
                        x: x.clone(),
                        product: p,
                    });
                }
            }
        }
    }
    None
}

/// Least ideal on `side` containing `gens`, by closing under products with
/// the basis until the submodule stops growing.
pub fn generate<S: Scalars>(ring: &RingPresentation<S>, side: Side, gens: &[Vec<S::Elem>]) -> IdealRep<S> {
    let mut sub = Submodule::new(ring.scalars().clone(), ring.rank(), gens.to_vec());
    loop {
        let mut extra = Vec::new();
        for x in sub.basis() {
            for j in 0..ring.rank() {
                let e = ring.basis_coords(j);
                if side != Side::Right {
                    extra.push(ring.mul(&e, x));
                }
                if side != Side::Left {
                    extra.push(ring.mul(x, &e));
                }
            }
        }
        let next = sub.extend(extra);
        if next == sub {
            return IdealRep { side, sub };
        }
        sub = next;
    }
}

/// `None` when two-sided, otherwise a product leaving the ideal.
pub fn two_sided_witness<S: Scalars>(ring: &RingPresentation<S>, ideal: &IdealRep<S>) -> Option<SideWitness<S::Elem>> {
    closure_failure(ring, &ideal.sub, Side::TwoSided)
}

pub fn is_two_sided<S: Scalars>(ring: &RingPresentation<S>, ideal: &IdealRep<S>) -> bool {
    two_sided_witness(ring, ideal).is_none()
}

/// `r x = 0` implies `x = 0`.
pub fn is_right_regular<S: Scalars>(ring: &RingPresentation<S>, r: &[S::Elem]) -> bool {
    ring.scalars().left_kernel(&ring.left_mult_matrix(r)).is_empty()
}

fn require_artinian<S: Scalars>(s: &S) -> Result<()> {
    if s.is_field() || s.order().is_some() {
        Ok(())
    } else {
        Err(Error::Unsupported(format!(
            "essentiality over {} needs an Artinian ring; rationalize or reduce first",
            s.spec()
        )))
    }
}

/// The ring on which a one-sided ideal is a right ideal.
fn right_view<S: Scalars>(ring: &RingPresentation<S>, side: Side) -> std::borrow::Cow<'_, RingPresentation<S>> {
    match side {
        Side::Left => std::borrow::Cow::Owned(ring.opposite()),
        _ => std::borrow::Cow::Borrowed(ring),
    }
}

/// Essential as a right ideal (left ideals: as a left ideal): contains the socle.
pub fn is_essential<S: Scalars>(ring: &RingPresentation<S>, ideal: &IdealRep<S>) -> Result<bool> {
    require_artinian(ring.scalars())?;
    let r = right_view(ring, ideal.side);
    Ok(socle_right(&r)?.is_subset_of(&ideal.sub))
}

/// `small` is essential in `big` (right ideals, `small ⊆ big`): every
/// simple submodule of `big` lies in `small`.
pub fn is_essential_in<S: Scalars>(ring: &RingPresentation<S>, small: &Submodule<S>, big: &Submodule<S>) -> Result<bool> {
    require_artinian(ring.scalars())?;
    let soc = socle_right(ring)?;
    Ok(big.intersect(&soc)?.is_subset_of(small))
}

/// Outcome of a closedness test.
#[derive(Clone, Debug, PartialEq)]
pub struct ClosedReport<S: Scalars> {
    pub closed: bool,
    /// The complement `K` used by the test.
    pub complement: Submodule<S>,
    /// A maximal essential extension of the ideal; equal to it iff closed.
    pub closure: Submodule<S>,
}

/// A right ideal `I` is closed iff it is a maximal right ideal with zero
/// intersection with one of its complements `K`. The closure is computed by
/// extending `I` maximally inside `R` away from `K`; `I` is essential in it.
pub fn is_closed<S: RandomScalar>(ring: &RingPresentation<S>, ideal: &IdealRep<S>, seed: u64) -> Result<ClosedReport<S>> {
    require_artinian(ring.scalars())?;
    let r = right_view(ring, ideal.side);
    let k = extend_away_from(&r, &zero_like(&ideal.sub), &ideal.sub, seed)?;
    let closure = extend_away_from(&r, &ideal.sub, &k, seed)?;
    Ok(ClosedReport {
        closed: closure == ideal.sub,
        complement: k,
        closure,
    })
}

/// A ∩-complement: a right ideal maximal with zero intersection with the
/// ideal. Basis vectors are tried greedily in index order first.
pub fn cap_complement<S: RandomScalar>(ring: &RingPresentation<S>, ideal: &IdealRep<S>, seed: u64) -> Result<IdealRep<S>> {
    require_artinian(ring.scalars())?;
    let r = right_view(ring, ideal.side);
    let side = if ideal.side == Side::Left { Side::Left } else { Side::Right };
    let sub = extend_away_from(&r, &zero_like(&ideal.sub), &ideal.sub, seed)?;
    Ok(IdealRep { side, sub })
}

/// `K` is maximal with `K ∩ I = 0` iff `(I + K)/K` is essential in `R/K`,
/// i.e. `{x : x J ⊆ K} ⊆ I + K`.
pub fn is_maximal_away_from<S: Scalars>(ring: &RingPresentation<S>, k: &Submodule<S>, other: &Submodule<S>) -> Result<bool> {
    let jac = jacobson_radical(ring)?.jacobson;
    let t = radical_quotient_socle(ring, &jac, k);
    Ok(k.intersect(other)?.is_zero() && t.is_subset_of(&other.sum(k)?))
}

fn zero_like<S: Scalars>(sub: &Submodule<S>) -> Submodule<S> {
    Submodule::zero(sub.scalars().clone(), sub.ambient_rank())
}

/// Enlarges the right ideal `start` to a right ideal maximal among those
/// meeting `other` trivially.
pub fn extend_away_from<S: RandomScalar>(
    ring: &RingPresentation<S>,
    start: &Submodule<S>,
    other: &Submodule<S>,
    seed: u64,
) -> Result<Submodule<S>> {
    let s = ring.scalars();
    let n = ring.rank();
    if !start.intersect(other)?.is_zero() {
        return Err(Error::InvalidArgument("start already meets the other ideal".into()));
    }
    let grow = |cur: &Submodule<S>, x: &[S::Elem]| -> Result<Option<Submodule<S>>> {
        if cur.contains(x) {
            return Ok(None);
        }
        let gens: Vec<Vec<S::Elem>> = cur.basis().iter().cloned().chain([x.to_vec()]).collect();
        let cand = generate(ring, Side::Right, &gens).sub;
        Ok(cand.intersect(other)?.is_zero().then_some(cand))
    };
    let mut cur = start.clone();
    for j in 0..n {
        if let Some(next) = grow(&cur, &ring.basis_coords(j))? {
            cur = next;
        }
    }
    let jac = jacobson_radical(ring)?.jacobson;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let t = radical_quotient_socle(ring, &jac, &cur);
        let both = other.sum(&cur)?;
        if t.is_subset_of(&both) {
            return Ok(cur);
        }
        // Restrict to the part of T/cur whose isotypic components are not
        // already inside `both`: kill it with A = {r : T r ⊆ both}.
        let a = Submodule::preimage(&ring.left_mult_stack(t.basis()), &both.power(t.rank()));
        let v = if a.is_zero() {
            t.clone()
        } else {
            let rows: Vec<Vec<S::Elem>> = t
                .basis()
                .iter()
                .map(|ti| a.basis().iter().flat_map(|al| ring.mul(ti, al)).collect())
                .collect();
            let m = crate::exactalg::Mat::from_rows(rows, n * a.rank());
            let coeffs = Submodule::preimage(&m, &cur.power(a.rank()));
            Submodule::new(s.clone(), n, coeffs.basis().iter().map(|u| t.combination(u)).collect())
        };
        let mut candidates: Vec<Vec<S::Elem>> = Vec::new();
        for b in v.basis() {
            candidates.push(b.clone());
            candidates.extend((0..n).map(|j| ring.mul(b, &ring.basis_coords(j))));
        }
        for _ in 0..64 {
            let c: Vec<S::Elem> = v.basis().iter().map(|_| s.random(&mut rng)).collect();
            let x = v.combination(&c);
            candidates.extend((0..n).map(|j| ring.mul(&x, &ring.basis_coords(j))));
            candidates.push(x);
        }
        let mut grown = None;
        for x in &candidates {
            if let Some(next) = grow(&cur, x)? {
                grown = Some(next);
                break;
            }
        }
        cur = match grown {
            Some(next) => next,
            None => return Err(Error::Unsupported("could not enlarge a non-maximal complement".into())),
        };
    }
}

/// `⋂ M^k`, read off where the descending chain `M ⊇ M^2 ⊇ ...` stops.
#[derive(Clone, Debug, PartialEq)]
pub struct PowerChain<S: Scalars> {
    pub sub: Submodule<S>,
    pub stabilized: bool,
    /// Exponent at which the chain was observed to stabilize (or stopped).
    pub steps: usize,
}

pub fn intersect_powers<S: Scalars>(ring: &RingPresentation<S>, m: &Submodule<S>, cap: usize) -> PowerChain<S> {
    let mut power = m.clone();
    for k in 1..=cap {
        let next = ring.product_span(&power, m);
        if next == power {
            return PowerChain {
                sub: power,
                stabilized: true,
                steps: k,
            };
        }
        power = next;
    }
    PowerChain {
        sub: power,
        stabilized: false,
        steps: cap,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::center::center_basis;
    use crate::constructions::{ce_matrix, full_matrix, grassmann, triangular};
    use crate::exactalg::{IntegersMod, Rationals};

    fn f(p: u64) -> IntegersMod {
        IntegersMod::new(p).unwrap()
    }

    fn span<S: Scalars>(r: &RingPresentation<S>, idx: &[usize]) -> Submodule<S> {
        Submodule::new(r.scalars().clone(), r.rank(), idx.iter().map(|&i| r.basis_coords(i)).collect())
    }

    /// Brute-force essentiality from the definition: every nonzero principal
    /// right ideal meets the ideal.
    fn essential_brute(r: &RingPresentation<IntegersMod>, i: &Submodule<IntegersMod>) -> bool {
        r.elements(1 << 16).unwrap().skip(1).all(|x| {
            let xr = generate(r, Side::Right, &[x]).sub;
            !xr.intersect(i).unwrap().is_zero()
        })
    }

    #[test]
    fn generated_ideals_in_seven_by_seven() {
        let r = ce_matrix(7, crate::exactalg::Integers).unwrap();
        assert_eq!(generate(&r, Side::Right, &[r.basis_coords(2)]).sub, span(&r, &[2, 6]));
        assert!(generate(&r, Side::Right, &[r.one().to_vec()]).sub.is_full());
        let c = generate(&r, Side::TwoSided, &[r.basis_coords(3)]);
        assert_eq!(c.sub, span(&r, &[3]));
        assert!(is_two_sided(&r, &c));
        let i = generate(&r, Side::Right, &[r.basis_coords(2)]);
        let w = two_sided_witness(&r, &i).unwrap();
        assert_eq!((w.side, w.r.clone(), w.product.clone()), (Side::Left, r.basis_coords(1), r.basis_coords(3)));
        assert_eq!(generate(&r, Side::Left, &[r.basis_coords(1)]).sub, span(&r, &[1, 6]));
    }

    #[test]
    fn regular_elements() {
        let r = ce_matrix(7, crate::exactalg::Integers).unwrap();
        assert!(is_right_regular(&r, r.one()));
        assert!(!is_right_regular(&r, &r.basis_coords(1)));
        assert!(is_right_regular(&r, &r.scale(&2.into(), r.one())));
    }

    #[test]
    fn essentiality_matches_brute_force() {
        let rings = vec![ce_matrix(7, f(2)).unwrap(), triangular(2, f(3)).unwrap(), grassmann(3, 2).unwrap()];
        for r in rings {
            for x in r.elements(1 << 16).unwrap().step_by(5) {
                let i = generate(&r, Side::Right, &[x]);
                assert_eq!(is_essential(&r, &i).unwrap(), essential_brute(&r, &i.sub), "{}", r.name());
            }
        }
    }

    #[test]
    fn radical_mod_two_is_essential() {
        let r = ce_matrix(7, f(2)).unwrap();
        let j = jacobson_radical(&r).unwrap().jacobson;
        assert!(is_essential(&r, &IdealRep::new(&r, Side::TwoSided, j).unwrap()).unwrap());
        let c = IdealRep::new(&r, Side::TwoSided, span(&r, &[3])).unwrap();
        assert!(!is_essential(&r, &c).unwrap());
    }

    #[test]
    fn complement_is_maximal_and_disjoint() {
        let r = ce_matrix(7, Rationals).unwrap();
        let i = generate(&r, Side::Right, &[r.basis_coords(2)]);
        let k = cap_complement(&r, &i, 3).unwrap();
        assert!(k.sub.intersect(&i.sub).unwrap().is_zero());
        assert!(span(&r, &[3]).is_subset_of(&k.sub));
        assert!(is_maximal_away_from(&r, &k.sub, &i.sub).unwrap());
        let both = IdealRep::new(&r, Side::Right, k.sub.sum(&i.sub).unwrap()).unwrap();
        assert!(is_essential(&r, &both).unwrap());
    }

    #[test]
    fn closedness_of_principal_right_ideal() {
        // u_d u_a = u_f puts u_b R inside the larger right ideal span{u_b, u_d, u_f},
        // and the only simple piece of that (span{u_f}) is already in u_b R.
        let r = ce_matrix(7, Rationals).unwrap();
        let i = generate(&r, Side::Right, &[r.basis_coords(2)]);
        let rep = is_closed(&r, &i, 1).unwrap();
        assert!(!rep.closed);
        assert!(is_essential_in(&r, &i.sub, &rep.closure).unwrap());
        assert!(i.sub.is_subset_of(&rep.closure));
        let l = span(&r, &[2, 4, 6]);
        assert!(IdealRep::new(&r, Side::Right, l.clone()).is_ok());
        assert!(is_essential_in(&r, &i.sub, &l).unwrap());
    }

    #[test]
    fn complements_are_closed() {
        let r = ce_matrix(7, f(2)).unwrap();
        for x in r.elements(1 << 16).unwrap().skip(1).step_by(7) {
            let i = generate(&r, Side::Right, &[x]);
            let k = cap_complement(&r, &i, 0).unwrap();
            assert!(is_closed(&r, &k, 0).unwrap().closed);
            // a complement of K containing I is I's closure; it is closed too
            let c = is_closed(&r, &i, 0).unwrap().closure;
            assert!(is_closed(&r, &IdealRep::new(&r, Side::Right, c).unwrap(), 0).unwrap().closed);
        }
    }

    #[test]
    fn closed_matches_brute_force_on_small_ring() {
        // closed iff no right ideal L ⊋ I has I essential in L
        let r = triangular(2, f(2)).unwrap();
        let all: Vec<Vec<u64>> = r.elements(64).unwrap().collect();
        let mut ideals: Vec<Submodule<IntegersMod>> = Vec::new();
        for a in &all {
            for b in &all {
                let s = generate(&r, Side::Right, &[a.clone(), b.clone()]).sub;
                if !ideals.contains(&s) {
                    ideals.push(s);
                }
            }
        }
        for i in &ideals {
            let brute = !ideals
                .iter()
                .any(|l| l != i && i.is_subset_of(l) && is_essential_in(&r, i, l).unwrap());
            let rep = is_closed(&r, &IdealRep::new(&r, Side::Right, i.clone()).unwrap(), 0).unwrap();
            assert_eq!(rep.closed, brute);
        }
    }

    #[test]
    fn powers_of_maximal_ideals() {
        let r = ce_matrix(7, f(2)).unwrap();
        let m = span(&r, &[1, 2, 3, 4, 5, 6]);
        let chain = intersect_powers(&r, &m, 10);
        assert!(chain.stabilized);
        assert!(chain.sub.is_zero());
        let mat = full_matrix(2, f(2)).unwrap();
        // E_00 R = span{E_00, E_01}: not two-sided, idempotent generator
        let row = generate(&mat, Side::Right, &[mat.basis_coords(0)]).sub;
        assert_eq!(intersect_powers(&mat, &row, 10).sub, row);
        let full = Submodule::full(f(2), 7);
        assert_eq!(intersect_powers(&r, &full, 10).sub, full);
        assert!(center_basis(&mat).sub.intersect(&row).unwrap().is_zero());
    }
}
