//! Exact linear algebra over the integers, integers modulo `m`, and the
//! rationals.
//!
//! Vectors are rows and submodules are row spaces throughout. Each scalar
//! kind owns a canonical form for finitely generated row modules:
//!
//! * integers: nonzero rows of the row Hermite normal form;
//! * rationals and prime moduli: reduced row echelon form;
//! * composite moduli: the Hermite form of the full-rank lattice
//!   `S + m Z^n`, reduced mod `m` with the `m e_i` rows dropped. Lattices
//!   containing `m Z^n` correspond one-to-one with submodules of
//!   `(Z/m)^n`, so this form is unique. For prime `m` it coincides with the
//!   reduced echelon form.

pub mod field;
pub mod integer;
pub mod mat;
pub mod submodule;

use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

pub use integer::{hermite_normal_form, invariant_factors, smith_normal_form};
pub use mat::Mat;
pub use submodule::Submodule;

use crate::error::{Error, Result};

/// Coefficient domain of a presentation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ScalarSpec {
    Integer,
    IntegerMod(u64),
    Rational,
}

impl fmt::Display for ScalarSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarSpec::Integer => write!(f, "Z"),
            ScalarSpec::IntegerMod(m) => write!(f, "Z/{m}"),
            ScalarSpec::Rational => write!(f, "Q"),
        }
    }
}

/// Accepts `int`, `integer`, `Z`, `rat`, `rational`, `Q`, and for residues
/// `Z/m`, `mod:m` or `modm`.
impl std::str::FromStr for ScalarSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        match t {
            "int" | "integer" | "Z" => return Ok(ScalarSpec::Integer),
            "rat" | "rational" | "Q" => return Ok(ScalarSpec::Rational),
            _ => {}
        }
        let digits = t
            .strip_prefix("Z/")
            .or_else(|| t.strip_prefix("mod:"))
            .or_else(|| t.strip_prefix("mod"))
            .ok_or_else(|| Error::InvalidArgument(format!("unknown scalar {t:?}; expected int, rat or Z/m")))?;
        let m: u64 = digits
            .parse()
            .map_err(|_| Error::InvalidArgument(format!("bad modulus in scalar {t:?}")))?;
        IntegersMod::new(m)?;
        Ok(ScalarSpec::IntegerMod(m))
    }
}

/// A commutative scalar ring together with the row-module algorithms the
/// rest of the crate needs.
pub trait Scalars: Clone + fmt::Debug + PartialEq + Send + Sync + 'static {
    type Elem: Clone + fmt::Debug + PartialEq + Eq + Hash + Send + Sync + 'static;

    fn spec(&self) -> ScalarSpec;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_bigint(&self, v: &BigInt) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    /// Multiplicative inverse of a unit.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    /// 0 for the integers and rationals.
    fn characteristic(&self) -> u64;
    fn is_field(&self) -> bool;
    /// Number of elements, when finite.
    fn order(&self) -> Option<u64>;

    /// Canonical generators of the row module spanned by `rows`.
    fn canonical_rows(&self, rows: Vec<Vec<Self::Elem>>, width: usize) -> Vec<Vec<Self::Elem>>;
    /// Membership of `x` in the span of rows already in canonical form.
    fn span_contains(&self, canonical: &[Vec<Self::Elem>], x: &[Self::Elem]) -> bool;
    /// Canonical generators of `{x : x * m = 0}`.
    fn left_kernel(&self, m: &Mat<Self::Elem>) -> Vec<Vec<Self::Elem>>;

    fn parse(&self, s: &str) -> Option<Self::Elem>;
    fn format(&self, a: &Self::Elem) -> String;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    /// Brings a raw value into canonical representation.
    fn normalize(&self, a: Self::Elem) -> Self::Elem {
        a
    }

    fn from_i64(&self, v: i64) -> Self::Elem {
        self.from_bigint(&BigInt::from(v))
    }

    /// Integer representative, when the scalar ring is a quotient of `Z`.
    fn lift(&self, _a: &Self::Elem) -> Option<BigInt> {
        None
    }
}

/// The ring of integers, arbitrary precision.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Integers;

impl Scalars for Integers {
    type Elem = BigInt;

    fn spec(&self) -> ScalarSpec {
        ScalarSpec::Integer
    }
    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn from_bigint(&self, v: &BigInt) -> BigInt {
        v.clone()
    }
    fn lift(&self, a: &BigInt) -> Option<BigInt> {
        Some(a.clone())
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn inv(&self, a: &BigInt) -> Option<BigInt> {
        (a.abs().is_one()).then(|| a.clone())
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn is_field(&self) -> bool {
        false
    }
    fn order(&self) -> Option<u64> {
        None
    }
    fn canonical_rows(&self, rows: Vec<Vec<BigInt>>, width: usize) -> Vec<Vec<BigInt>> {
        integer::hnf_rows(rows, width)
    }
    fn span_contains(&self, canonical: &[Vec<BigInt>], x: &[BigInt]) -> bool {
        integer::hnf_contains(canonical, x)
    }
    fn left_kernel(&self, m: &Mat<BigInt>) -> Vec<Vec<BigInt>> {
        integer::left_kernel(m)
    }
    fn parse(&self, s: &str) -> Option<BigInt> {
        s.trim().parse().ok()
    }
    fn format(&self, a: &BigInt) -> String {
        a.to_string()
    }
}

/// Residues modulo `m >= 2`, stored in `[0, m)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct IntegersMod {
    modulus: u64,
    prime: bool,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl IntegersMod {
    pub fn new(modulus: u64) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::InvalidModulus(modulus));
        }
        if modulus > u32::MAX as u64 {
            return Err(Error::Unsupported(format!("modulus {modulus} exceeds 2^32")));
        }
        Ok(IntegersMod {
            modulus,
            prime: is_prime(modulus),
        })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn reduce_i128(&self, v: i128) -> u64 {
        v.rem_euclid(self.modulus as i128) as u64
    }

    /// Hermite form of the lattice `rows + m Z^n` (square, all pivots
    /// dividing `m`).
    pub fn lattice_hnf(&self, rows: &[Vec<u64>], width: usize) -> Vec<Vec<BigInt>> {
        let m = BigInt::from(self.modulus);
        let mut gens: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect();
        for i in 0..width {
            let mut e = vec![BigInt::zero(); width];
            e[i] = m.clone();
            gens.push(e);
        }
        integer::hnf_rows(gens, width)
    }

    fn lift_mat(&self, m: &Mat<u64>) -> Mat<BigInt> {
        m.map(|&v| BigInt::from(v))
    }
}

impl Scalars for IntegersMod {
    type Elem = u64;

    fn spec(&self) -> ScalarSpec {
        ScalarSpec::IntegerMod(self.modulus)
    }
    fn zero(&self) -> u64 {
        0
    }
    fn normalize(&self, a: u64) -> u64 {
        a % self.modulus
    }
    fn one(&self) -> u64 {
        1
    }
    fn lift(&self, a: &u64) -> Option<BigInt> {
        Some(BigInt::from(*a))
    }
    fn from_bigint(&self, v: &BigInt) -> u64 {
        v.mod_floor(&BigInt::from(self.modulus))
            .to_u64()
            .expect("residue fits in u64")
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.modulus {
            s - self.modulus
        } else {
            s
        }
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.modulus - a
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.modulus
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        let (g, s, _) = integer::ext_gcd(&BigInt::from(*a), &BigInt::from(self.modulus));
        g.is_one().then(|| self.from_bigint(&s))
    }
    fn characteristic(&self) -> u64 {
        self.modulus
    }
    fn is_field(&self) -> bool {
        self.prime
    }
    fn order(&self) -> Option<u64> {
        Some(self.modulus)
    }

    fn canonical_rows(&self, rows: Vec<Vec<u64>>, width: usize) -> Vec<Vec<u64>> {
        if self.prime {
            return field::rref(self, rows, width).0;
        }
        let m = BigInt::from(self.modulus);
        self.lattice_hnf(&rows, width)
            .into_iter()
            .filter(|r| !r.contains(&m))
            .map(|r| r.iter().map(|v| v.to_u64().expect("reduced entry")).collect())
            .collect()
    }

    fn span_contains(&self, canonical: &[Vec<u64>], x: &[u64]) -> bool {
        if self.prime {
            return field::rref_contains(self, canonical, x);
        }
        let mut rows = canonical.to_vec();
        rows.push(x.to_vec());
        self.canonical_rows(rows, x.len()) == canonical
    }

    fn left_kernel(&self, m: &Mat<u64>) -> Vec<Vec<u64>> {
        if self.prime {
            return field::left_kernel(self, m);
        }
        // x m = 0 mod q  <=>  (x, y) [m; q I] = 0 over Z for some integer y.
        let (r, c) = (m.rows(), m.cols());
        let mut scaled = Mat::<BigInt>::zeros(c, c);
        for i in 0..c {
            scaled[(i, i)] = BigInt::from(self.modulus);
        }
        let stacked = self.lift_mat(m).vstack(&scaled);
        let gens: Vec<Vec<u64>> = integer::left_kernel(&stacked)
            .into_iter()
            .map(|k| k[..r].iter().map(|v| self.from_bigint(v)).collect())
            .collect();
        self.canonical_rows(gens, r)
    }

    fn parse(&self, s: &str) -> Option<u64> {
        let v: BigInt = s.trim().parse().ok()?;
        Some(self.from_bigint(&v))
    }
    fn format(&self, a: &u64) -> String {
        a.to_string()
    }
}

/// The rational numbers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Rationals;

impl Scalars for Rationals {
    type Elem = BigRational;

    fn spec(&self) -> ScalarSpec {
        ScalarSpec::Rational
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_bigint(&self, v: &BigInt) -> BigRational {
        BigRational::from_integer(v.clone())
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn is_field(&self) -> bool {
        true
    }
    fn order(&self) -> Option<u64> {
        None
    }
    fn canonical_rows(&self, rows: Vec<Vec<BigRational>>, width: usize) -> Vec<Vec<BigRational>> {
        field::rref(self, rows, width).0
    }
    fn span_contains(&self, canonical: &[Vec<BigRational>], x: &[BigRational]) -> bool {
        field::rref_contains(self, canonical, x)
    }
    fn left_kernel(&self, m: &Mat<BigRational>) -> Vec<Vec<BigRational>> {
        field::left_kernel(self, m)
    }
    fn parse(&self, s: &str) -> Option<BigRational> {
        let s = s.trim();
        match s.split_once('/') {
            Some((n, d)) => {
                let d: BigInt = d.trim().parse().ok()?;
                if d.is_zero() {
                    return None;
                }
                Some(BigRational::new(n.trim().parse().ok()?, d))
            }
            None => Some(BigRational::from_integer(s.parse().ok()?)),
        }
    }
    fn format(&self, a: &BigRational) -> String {
        if a.is_integer() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
}

/// Product `v * m` of a row vector with a matrix.
pub fn vec_mat<S: Scalars>(s: &S, v: &[S::Elem], m: &Mat<S::Elem>) -> Vec<S::Elem> {
    let mut out = vec![s.zero(); m.cols()];
    for (i, vi) in v.iter().enumerate() {
        if s.is_zero(vi) {
            continue;
        }
        for (o, mij) in out.iter_mut().zip(m.row(i)) {
            if !s.is_zero(mij) {
                *o = s.add(o, &s.mul(vi, mij));
            }
        }
    }
    out
}

/// Matrix product over a scalar ring.
pub fn mat_mul<S: Scalars>(s: &S, a: &Mat<S::Elem>, b: &Mat<S::Elem>) -> Mat<S::Elem> {
    assert_eq!(a.cols(), b.rows());
    let rows = (0..a.rows()).map(|i| vec_mat(s, a.row(i), b)).collect();
    Mat::from_rows(rows, b.cols())
}

/// `sum_i coeffs[i] * rows[i]`.
pub fn combine<S: Scalars>(s: &S, coeffs: &[S::Elem], rows: &[Vec<S::Elem>], width: usize) -> Vec<S::Elem> {
    let mut out = vec![s.zero(); width];
    for (c, r) in coeffs.iter().zip(rows) {
        if s.is_zero(c) {
            continue;
        }
        for (o, v) in out.iter_mut().zip(r) {
            *o = s.add(o, &s.mul(c, v));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn kernel_mod_four() {
        let zm = IntegersMod::new(4).unwrap();
        let m = Mat::from_rows(vec![vec![2u64]], 1);
        assert_eq!(zm.left_kernel(&m), vec![vec![2u64]]);
    }

    #[test]
    fn kernel_of_identity_is_zero() {
        let m = Mat::<BigInt>::identity(3);
        assert!(Integers.left_kernel(&m).is_empty());
        let q = m.map(|v| Rationals.from_bigint(v));
        assert!(Rationals.left_kernel(&q).is_empty());
    }

    #[test]
    fn kernel_column_of_ones() {
        let m = Mat::from_rows(vec![z(&[1]), z(&[1])], 1);
        assert_eq!(Integers.left_kernel(&m), vec![z(&[1, -1])]);
    }

    #[test]
    fn composite_canonical_form_matches_enumeration() {
        // span{(2, 1)} in (Z/4)^2 has 2 elements: 0 and (2,1), plus 2*(2,1) = (0,2),
        // and 3*(2,1) = (2,3): four elements in total.
        let zm = IntegersMod::new(4).unwrap();
        let rows = zm.canonical_rows(vec![vec![2, 1]], 2);
        let sub = Submodule::new(zm, 2, rows.clone());
        assert_eq!(sub.cardinality(), Some(4));
        assert!(zm.span_contains(&rows, &[0, 2]));
        assert!(zm.span_contains(&rows, &[2, 3]));
        assert!(!zm.span_contains(&rows, &[2, 0]));
        // Generators in another order give identical rows.
        assert_eq!(zm.canonical_rows(vec![vec![2, 3], vec![0, 2]], 2), rows);
    }

    #[test]
    fn prime_modulus_agrees_with_lattice_form() {
        let f5 = IntegersMod::new(5).unwrap();
        let rows = vec![vec![3, 1, 4], vec![1, 0, 2], vec![4, 1, 1]];
        let rref = f5.canonical_rows(rows.clone(), 3);
        let lattice: Vec<Vec<u64>> = f5
            .lattice_hnf(&rows, 3)
            .into_iter()
            .filter(|r| !r.iter().any(|v| *v == BigInt::from(5)))
            .map(|r| r.iter().map(|v| v.to_u64().unwrap()).collect())
            .collect();
        assert_eq!(rref, lattice);
    }

    #[test]
    fn rational_parse_format() {
        let q = Rationals;
        let v = q.parse("-6/4").unwrap();
        assert_eq!(q.format(&v), "-3/2");
        assert_eq!(q.format(&q.parse("7").unwrap()), "7");
        assert!(q.parse("1/0").is_none());
    }

    #[test]
    fn modular_inverse() {
        let z9 = IntegersMod::new(9).unwrap();
        assert_eq!(z9.inv(&3), None);
        assert_eq!(z9.mul(&z9.inv(&7).unwrap(), &7), 1);
    }
}
