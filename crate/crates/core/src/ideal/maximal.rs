//! Maximal and minimal one-sided ideals of finite algebras over a prime field.

use super::{closure_failure, generate, jacobson_radical, socle_right, SideWitness};
use crate::error::{Error, Result};
use crate::exactalg::{Scalars, Submodule};
use crate::ring::{RingPresentation, Side};

/// Every element of `sub` when the scalars form a finite field, in lex
/// order of the coefficient vector (first coefficient most significant).
pub(crate) fn field_span_elements<S: Scalars>(sub: &Submodule<S>, cap: u64) -> Result<Vec<Vec<S::Elem>>> {
    let s = sub.scalars();
    let q = match (s.is_field(), s.order()) {
        (true, Some(q)) => q,
        _ => return Err(Error::Unsupported(format!("enumeration needs a finite field, not {}", s.spec()))),
    };
    let k = sub.rank() as u32;
    let total = q.checked_pow(k).filter(|t| *t <= cap).ok_or_else(|| Error::CapExceeded {
        count: format!("{q}^{k}"),
        cap,
    })?;
    let mut out = Vec::with_capacity(total as usize);
    let mut coeffs = vec![0u64; k as usize];
    for _ in 0..total {
        let c: Vec<S::Elem> = coeffs.iter().map(|&v| s.from_i64(v as i64)).collect();
        out.push(sub.combination(&c));
        for d in coeffs.iter_mut().rev() {
            *d += 1;
            if *d < q {
                break;
            }
            *d = 0;
        }
    }
    Ok(out)
}

fn keep_extremal<S: Scalars>(mut subs: Vec<Submodule<S>>, maximal: bool) -> Vec<Submodule<S>> {
    subs.sort_by_key(|m| m.rank());
    subs.dedup();
    let mut out: Vec<Submodule<S>> = Vec::new();
    for (i, m) in subs.iter().enumerate() {
        if out.contains(m) {
            continue;
        }
        let beaten = subs.iter().enumerate().any(|(j, o)| {
            j != i && o != m && if maximal { m.is_subset_of(o) } else { o.is_subset_of(m) }
        });
        if !beaten {
            out.push(m.clone());
        }
    }
    out
}

/// All maximal right ideals. Each one contains `J`, and over `R/J` they are
/// the right annihilators `{r : x r ∈ J}` of nonzero `x` outside `J`.
/// A local ring (`J` of codimension 1) is handled over any field.
pub fn maximal_right_ideals<S: Scalars>(ring: &RingPresentation<S>, cap: u64) -> Result<Vec<Submodule<S>>> {
    let s = ring.scalars();
    let n = ring.rank();
    if !s.is_field() {
        return Err(Error::Unsupported(format!("maximal ideals over {}: reduce modulo a prime", s.spec())));
    }
    let jac = jacobson_radical(ring)?.jacobson;
    if jac.rank() + 1 == n {
        return Ok(vec![jac]);
    }
    let pivots: Vec<usize> = jac
        .basis()
        .iter()
        .filter_map(|row| row.iter().position(|c| !s.is_zero(c)))
        .collect();
    let free: Vec<Vec<S::Elem>> = (0..n).filter(|j| !pivots.contains(j)).map(|j| ring.basis_coords(j)).collect();
    let complement = Submodule::new(s.clone(), n, free);
    let mut found = Vec::new();
    for x in field_span_elements(&complement, cap)? {
        if ring.is_zero(&x) {
            continue;
        }
        let m = Submodule::preimage(&ring.left_mult_matrix(&x), &jac);
        if !m.is_full() && !found.contains(&m) {
            found.push(m);
        }
    }
    Ok(keep_extremal(found, true))
}

/// Maximal left ideals, as maximal right ideals of the opposite ring.
pub fn maximal_left_ideals<S: Scalars>(ring: &RingPresentation<S>, cap: u64) -> Result<Vec<Submodule<S>>> {
    maximal_right_ideals(&ring.opposite(), cap)
}

/// All minimal right ideals: the inclusion-minimal `xR` with `x` a nonzero
/// element of the right socle.
pub fn minimal_right_ideals<S: Scalars>(ring: &RingPresentation<S>, cap: u64) -> Result<Vec<Submodule<S>>> {
    let soc = socle_right(ring)?;
    let mut found = Vec::new();
    for x in field_span_elements(&soc, cap)? {
        if ring.is_zero(&x) {
            continue;
        }
        let m = generate(ring, Side::Right, &[x]).sub;
        if !found.contains(&m) {
            found.push(m);
        }
    }
    Ok(keep_extremal(found, false))
}

/// A maximal one-sided ideal that is not two-sided.
#[derive(Clone, Debug, PartialEq)]
pub struct QuasiInvarianceWitness<S: Scalars> {
    /// `Right` for a maximal right ideal, `Left` for a maximal left ideal.
    pub side: Side,
    pub ideal: Submodule<S>,
    pub failure: SideWitness<S::Elem>,
}

/// `None` when every maximal right ideal and every maximal left ideal is two-sided.
pub fn is_quasi_invariant<S: Scalars>(ring: &RingPresentation<S>, cap: u64) -> Result<Option<QuasiInvarianceWitness<S>>> {
    for (side, ideals) in [(Side::Right, maximal_right_ideals(ring, cap)?), (Side::Left, maximal_left_ideals(ring, cap)?)] {
        for m in ideals {
            if let Some(failure) = closure_failure(ring, &m, Side::TwoSided) {
                return Ok(Some(QuasiInvarianceWitness { side, ideal: m, failure }));
            }
        }
    }
    Ok(None)
}

/// First `x` (coordinate lex order, first coordinate most significant) whose
/// principal right ideal `xR` is not two-sided; `None` if the ring is right invariant.
pub fn is_right_invariant<S: Scalars>(ring: &RingPresentation<S>, cap: u64) -> Result<Option<(Vec<S::Elem>, SideWitness<S::Elem>)>> {
    let full = Submodule::full(ring.scalars().clone(), ring.rank());
    let mut elems = field_span_elements(&full, cap)?;
    elems.sort_by_key(|x| lex_key(ring.scalars(), x));
    for x in elems {
        let xr = generate(ring, Side::Right, std::slice::from_ref(&x)).sub;
        if let Some(w) = closure_failure(ring, &xr, Side::TwoSided) {
            return Ok(Some((x, w)));
        }
    }
    Ok(None)
}

fn lex_key<S: Scalars>(s: &S, x: &[S::Elem]) -> Vec<num_bigint::BigInt> {
    x.iter().map(|c| s.lift(c).unwrap_or_default()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{ce_matrix, commutative_control, full_matrix, triangular, CommutativeControl};
    use crate::exactalg::{IntegersMod, Rationals};

    fn f(p: u64) -> IntegersMod {
        IntegersMod::new(p).unwrap()
    }

    /// Every right ideal of a small ring, by closing all pairs of elements.
    fn all_right_ideals(r: &RingPresentation<IntegersMod>) -> Vec<Submodule<IntegersMod>> {
        let all: Vec<Vec<u64>> = r.elements(1 << 10).unwrap().collect();
        let mut out: Vec<Submodule<IntegersMod>> = Vec::new();
        for a in &all {
            for b in &all {
                let s = generate(r, Side::Right, &[a.clone(), b.clone()]).sub;
                if !out.contains(&s) {
                    out.push(s);
                }
            }
        }
        out
    }

    #[test]
    fn maximal_and_minimal_agree_with_brute_force() {
        for r in [full_matrix(2, f(2)).unwrap(), triangular(2, f(3)).unwrap(), triangular(2, f(2)).unwrap()] {
            let ideals = all_right_ideals(&r);
            let proper: Vec<_> = ideals.iter().filter(|m| !m.is_full()).cloned().collect();
            let nonzero: Vec<_> = ideals.iter().filter(|m| !m.is_zero()).cloned().collect();
            let mut brute_max: Vec<_> = proper
                .iter()
                .filter(|m| !proper.iter().any(|o| o != *m && m.is_subset_of(o)))
                .cloned()
                .collect();
            let mut brute_min: Vec<_> = nonzero
                .iter()
                .filter(|m| !nonzero.iter().any(|o| o != *m && o.is_subset_of(m)))
                .cloned()
                .collect();
            let mut got_max = maximal_right_ideals(&r, 1 << 16).unwrap();
            let mut got_min = minimal_right_ideals(&r, 1 << 16).unwrap();
            for v in [&mut brute_max, &mut brute_min, &mut got_max, &mut got_min] {
                v.sort_by_key(|m| format!("{:?}", m.basis()));
            }
            assert_eq!(got_max, brute_max, "{}", r.name());
            assert_eq!(got_min, brute_min, "{}", r.name());
        }
    }

    #[test]
    fn local_rings_have_one_maximal_ideal() {
        let r = ce_matrix(7, Rationals).unwrap();
        let m = maximal_right_ideals(&r, 1).unwrap();
        assert_eq!(m.len(), 1);
        assert_eq!(m[0].rank(), 6);
        assert!(is_quasi_invariant(&r, 1).unwrap().is_none());
    }

    #[test]
    fn matrices_are_not_quasi_invariant() {
        let r = full_matrix(2, f(2)).unwrap();
        assert_eq!(maximal_right_ideals(&r, 1 << 10).unwrap().len(), 3);
        let w = is_quasi_invariant(&r, 1 << 10).unwrap().unwrap();
        assert_eq!(w.side, Side::Right);
        assert!(!w.ideal.contains(&w.failure.product));
        let prod = ring_mul(&r, &w.failure);
        assert_eq!(prod, w.failure.product);
    }

    fn ring_mul(r: &RingPresentation<IntegersMod>, w: &SideWitness<u64>) -> Vec<u64> {
        match w.side {
            Side::Left => r.mul(&w.r, &w.x),
            _ => r.mul(&w.x, &w.r),
        }
    }

    #[test]
    fn right_invariance() {
        let r = commutative_control(CommutativeControl::Truncated(3), f(2)).unwrap();
        assert!(is_right_invariant(&r, 1 << 10).unwrap().is_none());
        let r = ce_matrix(7, f(2)).unwrap();
        let (x, w) = is_right_invariant(&r, 1 << 10).unwrap().unwrap();
        let xr = generate(&r, Side::Right, std::slice::from_ref(&x)).sub;
        assert!(xr.contains(&w.x) && !xr.contains(&w.product));
        assert_eq!(ring_mul(&r, &w), w.product);
        // every earlier element generates a two-sided ideal
        let full = Submodule::full(f(2), 7);
        let mut all = field_span_elements(&full, 1 << 10).unwrap();
        all.sort_by_key(|v| lex_key(&f(2), v));
        for y in all.iter().take_while(|y| **y != x) {
            assert!(closure_failure(&r, &generate(&r, Side::Right, std::slice::from_ref(y)).sub, Side::TwoSided).is_none());
        }
    }

    #[test]
    fn span_enumeration_respects_cap() {
        let full = Submodule::full(f(3), 4);
        assert_eq!(field_span_elements(&full, 81).unwrap().len(), 81);
        assert!(matches!(field_span_elements(&full, 80), Err(Error::CapExceeded { .. })));
        assert!(field_span_elements(&Submodule::full(f(4), 1), 100).is_err());
    }
}
