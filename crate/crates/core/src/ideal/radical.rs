//! Jacobson radical, nilradical and right socle.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactalg::{is_prime, Integers, IntegersMod, Mat, Scalars, Submodule};
use crate::ring::RingPresentation;

/// Radicals of a finite ring or of a finite-dimensional algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct RadicalData<S: Scalars> {
    pub jacobson: Submodule<S>,
    pub nil: Submodule<S>,
    /// Smallest `k` with `J^k = 0`, if `J` is nilpotent.
    pub nilpotency_index: Option<usize>,
}

/// `J(R)` for rings over a field or `Z/p^k`, and the nilradical for rings
/// over `Z` (where it is the largest nil ideal, contained in `J`).
pub fn jacobson_radical<S: Scalars>(ring: &RingPresentation<S>) -> Result<RadicalData<S>> {
    let s = ring.scalars();
    let jac = match (s.characteristic(), s.is_field()) {
        (0, _) => trace_radical(ring),
        (p, true) => ciw_radical(ring, p)?,
        (m, false) => prime_power_radical(ring, m)?,
    };
    let nilpotency_index = nilpotency_index(ring, &jac);
    Ok(RadicalData {
        nil: jac.clone(),
        jacobson: jac,
        nilpotency_index,
    })
}

/// Gram matrix of `(x, y) -> Tr(L_{xy})` on the basis.
fn trace_gram<S: Scalars>(ring: &RingPresentation<S>) -> Mat<S::Elem> {
    let n = ring.rank();
    let rows = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| ring.left_trace(ring.product_of_basis(i, j)))
                .collect()
        })
        .collect();
    Mat::from_rows(rows, n)
}

/// Characteristic 0: `{x : Tr(L_{xy}) = 0 for all y}`. Over `Z` the kernel
/// lattice is saturated, so this is `R ∩ N(Q R)`.
pub fn trace_radical<S: Scalars>(ring: &RingPresentation<S>) -> Submodule<S> {
    let s = ring.scalars();
    Submodule::new(s.clone(), ring.rank(), s.left_kernel(&trace_gram(ring)))
}

/// Nilradical of a ring over `Z`.
pub fn nilradical_tffr(ring: &RingPresentation<Integers>) -> Submodule<Integers> {
    trace_radical(ring)
}

fn int_mat_pow_trace(m: &Mat<BigInt>, e: u64) -> BigInt {
    let mut result = Mat::<BigInt>::identity(m.rows());
    let mut base = m.clone();
    let mut k = e;
    while k > 0 {
        if k & 1 == 1 {
            result = result.mul(&base);
        }
        k >>= 1;
        if k > 0 {
            base = base.mul(&base);
        }
    }
    (0..m.rows()).map(|i| result[(i, i)].clone()).sum()
}

/// Radical over `F_p` by the trace iteration of Cohen, Ivanyos and Wales:
/// `I_{-1} = R` and `I_i = {a ∈ I_{i-1} : g_i(ab) = 0 for all b}` with
/// `g_i(z) = Tr(ẑ^{p^i}) / p^i mod p` on an integer lift of the regular
/// representation; `J = I_l` for `p^l <= n < p^{l+1}`.
pub fn ciw_radical<S: Scalars>(ring: &RingPresentation<S>, p: u64) -> Result<Submodule<S>> {
    let s = ring.scalars();
    let n = ring.rank();
    let mut current = Submodule::full(s.clone(), n);
    let mut pi: u64 = 1;
    let pb = BigInt::from(p);
    loop {
        let g = |z: &[S::Elem]| -> Result<S::Elem> {
            let lifted = ring.left_mult_matrix(z).map(|v| s.lift(v).expect("integer representative"));
            let t = int_mat_pow_trace(&lifted, pi);
            let pib = BigInt::from(pi);
            let (q, r) = t.div_mod_floor(&pib);
            if !r.is_zero() {
                return Err(Error::Unsupported(format!("trace not divisible by {pi} in the radical iteration")));
            }
            Ok(s.from_bigint(&q.mod_floor(&pb)))
        };
        let basis = current.basis().to_vec();
        if basis.is_empty() {
            return Ok(current);
        }
        let mut rows = Vec::with_capacity(basis.len());
        for v in &basis {
            let row = (0..n)
                .map(|j| g(&ring.mul(v, &ring.basis_coords(j))))
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
        }
        let kernel = s.left_kernel(&Mat::from_rows(rows, n));
        current = Submodule::new(s.clone(), n, kernel.iter().map(|t| current.combination(t)).collect());
        match pi.checked_mul(p) {
            Some(next) if next as usize <= n => pi = next,
            _ => return Ok(current),
        }
    }
}

/// Over `Z/p^k`: the preimage of `J(R/pR)`.
fn prime_power_radical<S: Scalars>(ring: &RingPresentation<S>, m: u64) -> Result<Submodule<S>> {
    let p = (2..=m).find(|d| m.is_multiple_of(*d)).expect("m >= 2");
    let mut q = m;
    while q.is_multiple_of(p) {
        q /= p;
    }
    if q != 1 {
        return Err(Error::Unsupported(format!("radical over Z/{m}: modulus is not a prime power")));
    }
    let s = ring.scalars();
    let fp = IntegersMod::new(p)?;
    let reduced = ring.map_scalars(fp, format!("{}/{}", ring.name(), p), |v| {
        fp.from_bigint(&s.lift(v).expect("integer representative"))
    });
    let jp = ciw_radical(&reduced, p)?;
    let n = ring.rank();
    let pe = s.from_i64(p as i64);
    let mut gens: Vec<Vec<S::Elem>> = jp
        .basis()
        .iter()
        .map(|v| v.iter().map(|&c| s.from_i64(c as i64)).collect())
        .collect();
    gens.extend((0..n).map(|i| ring.scale(&pe, &ring.basis_coords(i))));
    Ok(Submodule::new(s.clone(), n, gens))
}

/// Smallest `k` with `I^k = 0`, searching up to `rank + 1`.
pub fn nilpotency_index<S: Scalars>(ring: &RingPresentation<S>, ideal: &Submodule<S>) -> Option<usize> {
    if ideal.is_zero() {
        return Some(1);
    }
    let limit = ring.rank() * bit_length(ring.scalars().characteristic()) + 1;
    let mut power = ideal.clone();
    for k in 2..=limit.max(ring.rank() + 1) {
        power = ring.product_span(&power, ideal);
        if power.is_zero() {
            return Some(k);
        }
    }
    None
}

fn bit_length(m: u64) -> usize {
    if m == 0 {
        1
    } else {
        (64 - m.leading_zeros()) as usize
    }
}

/// Exhaustive radical of a finite ring: the `x` with `x r` nilpotent for
/// every `r`. Requires `|R|^2 <= cap`.
pub fn jacobson_exhaustive(ring: &RingPresentation<IntegersMod>, cap: u64) -> Result<Submodule<IntegersMod>> {
    let size = ring.cardinality().filter(|c| c.checked_mul(*c).is_some_and(|sq| sq <= cap));
    if size.is_none() {
        return Err(Error::CapExceeded {
            count: format!("{}^{} squared", ring.scalars().modulus(), ring.rank()),
            cap,
        });
    }
    let all: Vec<Vec<u64>> = ring.elements(u64::MAX)?.collect();
    let e = (ring.rank() * bit_length(ring.scalars().modulus())) as u64;
    let nilpotent = |z: &[u64]| ring.is_zero(&ring.pow(z, e));
    let members: Vec<Vec<u64>> = all
        .iter()
        .filter(|x| all.iter().all(|r| nilpotent(&ring.mul(x, r))))
        .cloned()
        .collect();
    Ok(Submodule::new(*ring.scalars(), ring.rank(), members))
}

/// Right socle `{x : x J = 0}` of a right Artinian ring.
pub fn socle_right<S: Scalars>(ring: &RingPresentation<S>) -> Result<Submodule<S>> {
    let s = ring.scalars();
    if !(s.is_field() || s.order().is_some()) {
        return Err(Error::Unsupported(format!(
            "right socle over {}: rationalize or reduce the ring first",
            s.spec()
        )));
    }
    let j = jacobson_radical(ring)?.jacobson;
    Ok(left_annihilator(ring, &j))
}

/// `{x : x a = 0 for all a in sub}`.
pub fn left_annihilator<S: Scalars>(ring: &RingPresentation<S>, sub: &Submodule<S>) -> Submodule<S> {
    let s = ring.scalars();
    if sub.is_zero() {
        return Submodule::full(s.clone(), ring.rank());
    }
    let m = ring.right_mult_stack(sub.basis());
    Submodule::new(s.clone(), ring.rank(), s.left_kernel(&m))
}

/// `{x : x J ⊆ target}`.
pub fn radical_quotient_socle<S: Scalars>(ring: &RingPresentation<S>, jac: &Submodule<S>, target: &Submodule<S>) -> Submodule<S> {
    if jac.is_zero() {
        return Submodule::full(ring.scalars().clone(), ring.rank());
    }
    let m = ring.right_mult_stack(jac.basis());
    Submodule::preimage(&m, &target.power(jac.rank()))
}

/// `p`-adic valuation of the gcd of the coordinates; `None` for zero.
pub fn p_height(x: &[BigInt], p: u64) -> Result<Option<u32>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let pb = BigInt::from(p);
    Ok(x.iter()
        .filter(|v| !v.is_zero())
        .map(|v| {
            let mut k = 0u32;
            let mut v = v.clone();
            while (&v % &pb).is_zero() {
                v /= &pb;
                k += 1;
            }
            k
        })
        .min())
}
