//! Centers and the centrally essential property.
//!
//! A ring is centrally essential when every nonzero `a` has central `x` with
//! `a x` central and nonzero, i.e. the center `C` is an essential
//! `C`-submodule of `R`. Three deciders:
//!
//! * exhaustive, for rings over `Z/m` within the enumeration cap;
//! * the socle criterion over a field: `C` is essential in `R_C` iff
//!   `{r : r J(C) = 0} ⊆ C`;
//! * rings over `Z` are decided on `Q ⊗ R`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactalg::{Integers, IntegersMod, Mat, Rationals, Scalars, Submodule};
use crate::ring::{RingPresentation, DEFAULT_ENUMERATION_CAP};

/// The center as a submodule of coordinate space.
#[derive(Clone, Debug, PartialEq)]
pub struct CenterBasis<S: Scalars> {
    pub sub: Submodule<S>,
}

impl<S: Scalars> CenterBasis<S> {
    pub fn rank(&self) -> usize {
        self.sub.rank()
    }

    pub fn contains(&self, x: &[S::Elem]) -> bool {
        self.sub.contains(x)
    }
}

/// Kernel of `x -> ([x, e_1], ..., [x, e_n])`.
pub fn center_basis<S: Scalars>(ring: &RingPresentation<S>) -> CenterBasis<S> {
    let m = ring.commutation_matrix();
    let gens = ring.scalars().left_kernel(&m);
    CenterBasis {
        sub: Submodule::new(ring.scalars().clone(), ring.rank(), gens),
    }
}

/// `[x, e_j] = 0` for every basis vector.
pub fn is_central<S: Scalars>(ring: &RingPresentation<S>, x: &[S::Elem]) -> bool {
    (0..ring.rank()).all(|j| ring.is_zero(&ring.commutator(x, &ring.basis_coords(j))))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Yes,
    No,
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Exhaustive,
    SocleCriterion,
    Rationalized,
    WitnessFamily,
    SamplingRefuted,
}

/// Nonzero central `x` and `y` with `a x = y`.
#[derive(Clone, Debug, PartialEq)]
pub struct CentralityWitness<E> {
    pub a: Vec<E>,
    pub x: Vec<E>,
    pub y: Vec<E>,
}

impl<E: Clone + PartialEq> CentralityWitness<E> {
    /// Rechecks every condition with ring arithmetic alone.
    pub fn revalidate<S: Scalars<Elem = E>>(&self, ring: &RingPresentation<S>) -> bool {
        !ring.is_zero(&self.x)
            && !ring.is_zero(&self.y)
            && is_central(ring, &self.x)
            && is_central(ring, &self.y)
            && ring.mul(&self.a, &self.x) == self.y
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Evidence<E> {
    None,
    Witness(CentralityWitness<E>),
    /// Nonzero `a` with `a C ∩ C = 0`.
    Counterexample(Vec<E>),
}

#[derive(Clone, Debug, PartialEq)]
pub struct CEDecision<E> {
    pub verdict: Verdict,
    pub method: Method,
    pub evidence: Evidence<E>,
    pub note: String,
}

impl<E> CEDecision<E> {
    pub fn is_yes(&self) -> bool {
        self.verdict == Verdict::Yes
    }

    pub fn counterexample(&self) -> Option<&[E]> {
        match &self.evidence {
            Evidence::Counterexample(a) => Some(a),
            _ => None,
        }
    }
}

pub fn format_coords<S: Scalars>(s: &S, v: &[S::Elem]) -> Vec<String> {
    v.iter().map(|x| s.format(x)).collect()
}

impl<E> CEDecision<E> {
    pub fn to_json<S: Scalars<Elem = E>>(&self, s: &S) -> Value {
        let evidence = match &self.evidence {
            Evidence::None => Value::Null,
            Evidence::Witness(w) => json!({
                "a": format_coords(s, &w.a),
                "x": format_coords(s, &w.x),
                "y": format_coords(s, &w.y),
            }),
            Evidence::Counterexample(a) => json!({ "counterexample": format_coords(s, a) }),
        };
        json!({
            "verdict": self.verdict,
            "method": self.method,
            "evidence": evidence,
            "note": self.note,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DecideOptions {
    pub cap: u64,
    pub samples: usize,
    pub seed: u64,
}

impl Default for DecideOptions {
    fn default() -> Self {
        DecideOptions {
            cap: DEFAULT_ENUMERATION_CAP,
            samples: 256,
            seed: 0x5eed,
        }
    }
}

/// Exact test for one element: with `P` the matrix of `t -> a (t · basis of C)`,
/// the `t` with `t P ∈ C` form a submodule `X`, and a witness exists iff
/// `X P ≠ 0`.
pub fn essential_witness<S: Scalars>(
    ring: &RingPresentation<S>,
    center: &CenterBasis<S>,
    a: &[S::Elem],
) -> Option<CentralityWitness<S::Elem>> {
    let gens = center.sub.basis();
    if gens.is_empty() || ring.is_zero(a) {
        return None;
    }
    let p = Mat::from_rows(gens.iter().map(|g| ring.mul(a, g)).collect(), ring.rank());
    let x_sub = Submodule::preimage(&p, &center.sub);
    let s = ring.scalars();
    x_sub.basis().iter().find_map(|t| {
        let y = crate::exactalg::vec_mat(s, t, &p);
        (!ring.is_zero(&y)).then(|| CentralityWitness {
            a: a.to_vec(),
            x: center.sub.combination(t),
            y,
        })
    })
}

/// `a ≠ 0` and `a C ∩ C = 0`, with the center recomputed from scratch.
pub fn is_counterexample<S: Scalars>(ring: &RingPresentation<S>, a: &[S::Elem]) -> bool {
    !ring.is_zero(a) && essential_witness(ring, &center_basis(ring), a).is_none()
}

/// Deciders per scalar kind.
pub trait CentralEssentiality: Scalars {
    fn decide(ring: &RingPresentation<Self>, opts: &DecideOptions) -> CEDecision<Self::Elem>;
}

pub fn is_centrally_essential<S: CentralEssentiality>(ring: &RingPresentation<S>, opts: &DecideOptions) -> CEDecision<S::Elem> {
    S::decide(ring, opts)
}

impl CentralEssentiality for IntegersMod {
    fn decide(ring: &RingPresentation<IntegersMod>, opts: &DecideOptions) -> CEDecision<u64> {
        if let Ok(d) = decide_exhaustive(ring, opts.cap) {
            return d;
        }
        if ring.scalars().is_field() {
            if let Ok(d) = decide_socle(ring, opts.seed) {
                return d;
            }
        }
        refute_by_sampling(ring, opts.samples, opts.seed)
    }
}

impl CentralEssentiality for Rationals {
    fn decide(ring: &RingPresentation<Rationals>, opts: &DecideOptions) -> CEDecision<num_rational::BigRational> {
        decide_socle(ring, opts.seed).expect("the rationals are a field")
    }
}

impl CentralEssentiality for Integers {
    fn decide(ring: &RingPresentation<Integers>, opts: &DecideOptions) -> CEDecision<BigInt> {
        let q = decide_socle(&ring.rationalize(), opts.seed).expect("the rationals are a field");
        let evidence = match q.evidence {
            Evidence::Counterexample(a) => Evidence::Counterexample(clear_denominators(&a)),
            _ => Evidence::None,
        };
        CEDecision {
            verdict: q.verdict,
            method: Method::Rationalized,
            evidence,
            note: format!("decided on Q⊗R: {}", q.note),
        }
    }
}

/// Multiplies by the lcm of the denominators.
pub fn clear_denominators(v: &[num_rational::BigRational]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    v.iter().map(|x| (x * &l).to_integer()).collect()
}

/// Enumerates every nonzero `a` and every central `x`. The first
/// counterexample in lexicographic order is reported.
pub fn decide_exhaustive(ring: &RingPresentation<IntegersMod>, cap: u64) -> Result<CEDecision<u64>> {
    let elements = ring.elements(cap)?;
    let count = elements.total();
    let center = center_basis(ring);
    let cells: Vec<u64> = center_elements(&center.sub)
        .filter(|c| c.iter().any(|&v| v != 0))
        .flatten()
        .collect();
    let n = ring.rank();
    let m = ring.scalars().modulus();
    let test = CentralTest::new(ring);
    let has_witness = |idx: u64| {
        let a = elements.element_at(idx);
        cells.chunks(n).any(|x| {
            let y = ring.mul(&a, x);
            y.iter().any(|&v| v != 0) && test.is_central(&y, m)
        })
    };
    let bad = (1..count).into_par_iter().find_first(|&i| !has_witness(i));
    Ok(match bad {
        None => CEDecision {
            verdict: Verdict::Yes,
            method: Method::Exhaustive,
            evidence: Evidence::None,
            note: format!("all {} nonzero elements have a central witness", count - 1),
        },
        Some(i) => CEDecision {
            verdict: Verdict::No,
            method: Method::Exhaustive,
            evidence: Evidence::Counterexample(elements.element_at(i)),
            note: format!("element {i} in lexicographic order has no central witness"),
        },
    })
}

fn center_elements(sub: &Submodule<IntegersMod>) -> impl Iterator<Item = Vec<u64>> + '_ {
    sub.elements()
}

/// `y` is central iff `y M = 0` for the commutation matrix `M`; only the
/// distinct nonzero columns matter.
struct CentralTest {
    columns: Vec<Vec<u64>>,
}

impl CentralTest {
    fn new(ring: &RingPresentation<IntegersMod>) -> Self {
        let m = ring.commutation_matrix().transpose();
        let mut columns: Vec<Vec<u64>> = m.to_rows().into_iter().filter(|c| c.iter().any(|&v| v != 0)).collect();
        columns.sort();
        columns.dedup();
        CentralTest { columns }
    }

    fn is_central(&self, y: &[u64], m: u64) -> bool {
        self.columns
            .iter()
            .all(|c| c.iter().zip(y).fold(0u64, |acc, (a, b)| (acc + a * b) % m) == 0)
    }
}

/// Radical of the commutative center: trace form in characteristic 0,
/// kernel of a Frobenius power in characteristic `p`.
pub fn center_radical<S: Scalars>(ring: &RingPresentation<S>, center: &CenterBasis<S>) -> Result<Submodule<S>> {
    let s = ring.scalars();
    if !s.is_field() {
        return Err(Error::Unsupported(format!("radical of the center over {}", s.spec())));
    }
    let gens = center.sub.basis();
    let k = gens.len();
    let rows: Vec<Vec<S::Elem>> = match s.characteristic() {
        0 => gens
            .iter()
            .map(|gi| gens.iter().map(|gj| ring.left_trace(&ring.mul(gi, gj))).collect())
            .collect(),
        p => {
            let mut q = p;
            while (q as usize) < k.max(1) {
                q *= p;
            }
            gens.iter().map(|g| ring.pow(g, q)).collect()
        }
    };
    let width = rows.first().map_or(0, Vec::len);
    let kernel = s.left_kernel(&Mat::from_rows(rows, width));
    let rad = kernel.iter().map(|t| center.sub.combination(t)).collect();
    Ok(Submodule::new(s.clone(), ring.rank(), rad))
}

/// `{r : r J(C) = 0}`, the socle of `R` as a module over its center.
pub fn center_module_socle<S: Scalars>(ring: &RingPresentation<S>, center: &CenterBasis<S>) -> Result<Submodule<S>> {
    let rad = center_radical(ring, center)?;
    let s = ring.scalars().clone();
    if rad.is_zero() {
        return Ok(Submodule::full(s, ring.rank()));
    }
    let m = ring.right_mult_stack(rad.basis());
    Ok(Submodule::new(s.clone(), ring.rank(), s.left_kernel(&m)))
}

/// Socle criterion over a field.
pub fn decide_socle<S: Scalars + RandomScalar>(ring: &RingPresentation<S>, seed: u64) -> Result<CEDecision<S::Elem>> {
    let center = center_basis(ring);
    let soc = center_module_socle(ring, &center)?;
    if soc.is_subset_of(&center.sub) {
        return Ok(CEDecision {
            verdict: Verdict::Yes,
            method: Method::SocleCriterion,
            evidence: Evidence::None,
            note: format!("socle over the center (rank {}) lies in the center (rank {})", soc.rank(), center.rank()),
        });
    }
    let a = split_counterexample(ring, &center, &soc, seed)
        .ok_or_else(|| Error::Unsupported("socle criterion failed but no counterexample was isolated".into()))?;
    Ok(CEDecision {
        verdict: Verdict::No,
        method: Method::SocleCriterion,
        evidence: Evidence::Counterexample(a),
        note: format!("socle over the center (rank {}) is not inside the center", soc.rank()),
    })
}

/// Finds `a` in the socle with `a C ∩ C = 0`. Components of the socle that
/// lie wholly in the center are removed first (they are the part killed by
/// nothing in `A = {x ∈ C : Soc x ⊆ C}`), then candidates are tried in
/// basis order and as seeded random combinations.
fn split_counterexample<S: Scalars + RandomScalar>(
    ring: &RingPresentation<S>,
    center: &CenterBasis<S>,
    soc: &Submodule<S>,
    seed: u64,
) -> Option<Vec<S::Elem>> {
    let s = ring.scalars();
    let w = soc.intersect(&center.sub).ok()?;
    let cb = center.sub.basis();
    let sb = soc.basis();
    // t -> (s_1 x, ..., s_m x) for x = t · C
    let rows: Vec<Vec<S::Elem>> = cb.iter().map(|g| sb.iter().flat_map(|si| ring.mul(si, g)).collect()).collect();
    let a_coeffs = Submodule::preimage(&Mat::from_rows(rows, ring.rank() * sb.len()), &w.power(sb.len()));
    let ann: Vec<Vec<S::Elem>> = a_coeffs.basis().iter().map(|t| center.sub.combination(t)).collect();
    let reduced = if ann.is_empty() {
        soc.clone()
    } else {
        let rows: Vec<Vec<S::Elem>> = sb.iter().map(|si| ann.iter().flat_map(|x| ring.mul(si, x)).collect()).collect();
        let k = s.left_kernel(&Mat::from_rows(rows, ring.rank() * ann.len()));
        Submodule::new(s.clone(), ring.rank(), k.iter().map(|u| soc.combination(u)).collect())
    };
    let mut candidates: Vec<Vec<S::Elem>> = reduced.basis().to_vec();
    candidates.extend((0..ring.rank()).map(|j| ring.basis_coords(j)).filter(|e| soc.contains(e)));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..64 {
        let coeffs: Vec<S::Elem> = reduced.basis().iter().map(|_| s.random(&mut rng)).collect();
        candidates.push(reduced.combination(&coeffs));
    }
    candidates
        .into_iter()
        .find(|a| !ring.is_zero(a) && essential_witness(ring, center, a).is_none())
}

/// Small random scalars for seeded searches.
pub trait RandomScalar: Scalars {
    fn random(&self, rng: &mut ChaCha8Rng) -> Self::Elem;
}

impl RandomScalar for IntegersMod {
    fn random(&self, rng: &mut ChaCha8Rng) -> u64 {
        rng.gen_range(0..self.modulus())
    }
}

impl RandomScalar for Rationals {
    fn random(&self, rng: &mut ChaCha8Rng) -> num_rational::BigRational {
        self.from_i64(rng.gen_range(-3..=3))
    }
}

impl RandomScalar for Integers {
    fn random(&self, rng: &mut ChaCha8Rng) -> BigInt {
        BigInt::from(rng.gen_range(-3..=3))
    }
}

pub fn random_element<S: RandomScalar>(ring: &RingPresentation<S>, rng: &mut ChaCha8Rng) -> Vec<S::Elem> {
    (0..ring.rank()).map(|_| ring.scalars().random(rng)).collect()
}

/// Tests random elements with the exact per-element criterion. A failure
/// proves the verdict no; otherwise the answer stays unknown.
pub fn refute_by_sampling<S: RandomScalar>(ring: &RingPresentation<S>, samples: usize, seed: u64) -> CEDecision<S::Elem> {
    let center = center_basis(ring);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut candidates: Vec<Vec<S::Elem>> = (0..ring.rank()).map(|j| ring.basis_coords(j)).collect();
    candidates.extend((0..samples).map(|_| random_element(ring, &mut rng)));
    match candidates
        .into_iter()
        .find(|a| !ring.is_zero(a) && essential_witness(ring, &center, a).is_none())
    {
        Some(a) => CEDecision {
            verdict: Verdict::No,
            method: Method::SamplingRefuted,
            evidence: Evidence::Counterexample(a),
            note: "sampled element has no central witness".into(),
        },
        None => CEDecision {
            verdict: Verdict::Unknown,
            method: Method::SamplingRefuted,
            evidence: Evidence::None,
            note: format!("beyond the enumeration cap and no field criterion applies; {samples} samples found no counterexample"),
        },
    }
}

/// Result of checking a witness formula on random elements.
#[derive(Clone, Debug, PartialEq)]
pub struct FamilyCheck<E> {
    pub checked: usize,
    pub failure: Option<CentralityWitness<E>>,
}

/// Validates `formula` on `samples` random nonzero elements.
pub fn check_witness_family<S: RandomScalar>(
    ring: &RingPresentation<S>,
    samples: usize,
    seed: u64,
    formula: impl Fn(&RingPresentation<S>, &[S::Elem]) -> (Vec<S::Elem>, Vec<S::Elem>),
) -> FamilyCheck<S::Elem> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checked = 0;
    while checked < samples {
        let a = random_element(ring, &mut rng);
        if ring.is_zero(&a) {
            continue;
        }
        let (x, y) = formula(ring, &a);
        let w = CentralityWitness { a, x, y };
        checked += 1;
        if !w.revalidate(ring) {
            return FamilyCheck {
                checked,
                failure: Some(w),
            };
        }
    }
    FamilyCheck { checked, failure: None }
}

/// Decision backed by a witness formula checked on random elements.
pub fn decide_by_family<S: RandomScalar>(
    ring: &RingPresentation<S>,
    samples: usize,
    seed: u64,
    formula: impl Fn(&RingPresentation<S>, &[S::Elem]) -> (Vec<S::Elem>, Vec<S::Elem>),
) -> CEDecision<S::Elem> {
    let fc = check_witness_family(ring, samples, seed, formula);
    match fc.failure {
        None => CEDecision {
            verdict: Verdict::Yes,
            method: Method::WitnessFamily,
            evidence: Evidence::None,
            note: format!("family witness formula revalidated on {} random elements", fc.checked),
        },
        Some(w) => CEDecision {
            verdict: Verdict::Unknown,
            method: Method::WitnessFamily,
            evidence: Evidence::Witness(w),
            note: "family witness formula failed on the recorded element".into(),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{ce_matrix, ce_matrix_witness, commutative_control, full_matrix, grassmann, triangular, CommutativeControl};

    fn f(p: u64) -> IntegersMod {
        IntegersMod::new(p).unwrap()
    }

    /// Brute force straight from the definition: all a, all x.
    fn brute_force_ce(ring: &RingPresentation<IntegersMod>) -> Option<Vec<u64>> {
        let all: Vec<Vec<u64>> = ring.elements(1 << 16).unwrap().collect();
        let central: Vec<&Vec<u64>> = all.iter().filter(|x| is_central(ring, x)).collect();
        all.iter()
            .skip(1)
            .find(|a| {
                !central.iter().any(|x| {
                    let y = ring.mul(a, x);
                    !ring.is_zero(&y) && is_central(ring, &y)
                })
            })
            .cloned()
    }

    #[test]
    fn center_of_seven_by_seven() {
        let r = ce_matrix(7, Integers).unwrap();
        let c = center_basis(&r);
        let expected = Submodule::new(Integers, 7, [0, 3, 4, 5, 6].iter().map(|&i| r.basis_coords(i)).collect());
        assert_eq!(c.sub, expected);
        assert!(is_central(&r, &r.basis_coords(4)));
        assert!(!is_central(&r, &r.basis_coords(1)));
        assert!(c.sub.is_pure());
    }

    #[test]
    fn center_of_matrix_ring_is_scalars() {
        let r = full_matrix(2, f(2)).unwrap();
        let c = center_basis(&r);
        assert_eq!(c.sub, Submodule::new(f(2), 4, vec![r.one().to_vec()]));
    }

    #[test]
    fn center_rank_of_ce_matrix_family() {
        for n in 7..=12 {
            let r = ce_matrix(n, Integers).unwrap();
            assert_eq!(center_basis(&r).rank(), n - 2);
            let q = r.rationalize();
            assert_eq!(center_basis(&q).rank(), center_basis(&r).sub.saturate().rank());
        }
    }

    #[test]
    fn exhaustive_matches_definition_on_small_rings() {
        let rings = vec![
            full_matrix(2, f(2)).unwrap(),
            triangular(2, f(2)).unwrap(),
            triangular(2, f(3)).unwrap(),
            commutative_control(CommutativeControl::Truncated(3), f(2)).unwrap(),
            grassmann(2, 3).unwrap(),
            ce_matrix(7, f(2)).unwrap(),
        ];
        for r in rings {
            let d = decide_exhaustive(&r, 1 << 16).unwrap();
            let bf = brute_force_ce(&r);
            assert_eq!(d.verdict == Verdict::Yes, bf.is_none(), "{}", r.name());
            assert_eq!(d.counterexample().map(<[u64]>::to_vec), bf, "{}", r.name());
        }
    }

    #[test]
    fn socle_agrees_with_exhaustive() {
        let rings = vec![
            full_matrix(2, f(2)).unwrap(),
            full_matrix(2, f(3)).unwrap(),
            triangular(2, f(2)).unwrap(),
            triangular(3, f(2)).unwrap(),
            commutative_control(CommutativeControl::Product(2), f(3)).unwrap(),
            grassmann(3, 3).unwrap(),
            grassmann(3, 2).unwrap(),
            ce_matrix(7, f(2)).unwrap(),
        ];
        for r in rings {
            let ex = decide_exhaustive(&r, 1 << 16).unwrap();
            let so = decide_socle(&r, 1).unwrap();
            assert_eq!(ex.verdict, so.verdict, "{}", r.name());
            if let Some(a) = so.counterexample() {
                assert!(brute_force_counterexample(&r, a), "{}", r.name());
            }
        }
    }

    fn brute_force_counterexample(r: &RingPresentation<IntegersMod>, a: &[u64]) -> bool {
        r.elements(1 << 16).unwrap().all(|x| {
            let y = r.mul(a, &x);
            !is_central(r, &x) || r.is_zero(&y) || !is_central(r, &y)
        })
    }

    #[test]
    fn integer_ring_decided_through_rationals() {
        let r = ce_matrix(7, Integers).unwrap();
        let d = is_centrally_essential(&r, &DecideOptions::default());
        assert_eq!(d.verdict, Verdict::Yes);
        assert_eq!(d.method, Method::Rationalized);

        let t = triangular(2, Integers).unwrap();
        let d = is_centrally_essential(&t, &DecideOptions::default());
        assert_eq!(d.verdict, Verdict::No);
        let a = d.counterexample().unwrap();
        assert!(is_counterexample(&t, a));
    }

    #[test]
    fn witness_family_on_random_elements() {
        for n in 7..=12 {
            let r = ce_matrix(n, Integers).unwrap();
            let fc = check_witness_family(&r, 1000, n as u64, ce_matrix_witness);
            assert_eq!(fc.checked, 1000);
            assert!(fc.failure.is_none(), "n = {n}");
        }
    }

    #[test]
    fn linear_witness_revalidates() {
        let r = grassmann(3, 3).unwrap();
        let c = center_basis(&r);
        for a in r.elements(1 << 16).unwrap().skip(1).step_by(97) {
            let w = essential_witness(&r, &c, &a).expect("grassmann is centrally essential");
            assert!(w.revalidate(&r));
        }
    }

    #[test]
    fn center_radical_of_truncated_polynomials() {
        let q = commutative_control(CommutativeControl::Truncated(3), Rationals).unwrap();
        let c = center_basis(&q);
        let rad = center_radical(&q, &c).unwrap();
        assert_eq!(rad.rank(), 2);
        assert!(!rad.contains(q.one()));
        let f3 = commutative_control(CommutativeControl::Truncated(4), f(3)).unwrap();
        let rad = center_radical(&f3, &center_basis(&f3)).unwrap();
        assert_eq!(rad.rank(), 3);
    }

    #[test]
    fn mod_p_quotients_of_ce_matrix() {
        let r = ce_matrix(7, Integers).unwrap();
        for p in [2u64, 3, 5, 7, 11, 13] {
            let q = r.quotient_mod(p).unwrap();
            let d = is_centrally_essential(q.target(), &DecideOptions::default());
            assert_eq!(d.verdict, Verdict::Yes, "p = {p}");
        }
    }
}
