//! Builders for the rings used throughout the crate and its checks.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::{is_prime, Integers, IntegersMod, Rationals, ScalarSpec, Scalars};
use crate::ring::{AnyRing, RingPresentation};

/// Square integer matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
struct IntMat {
    n: usize,
    a: Vec<i64>,
}

impl IntMat {
    fn zero(n: usize) -> Self {
        IntMat { n, a: vec![0; n * n] }
    }

    fn identity(n: usize) -> Self {
        let mut m = IntMat::zero(n);
        for i in 0..n {
            m.a[i * n + i] = 1;
        }
        m
    }

    /// Adds the 1-indexed matrix unit `E_ij`.
    fn unit(mut self, i: usize, j: usize) -> Self {
        self.a[(i - 1) * self.n + (j - 1)] += 1;
        self
    }

    fn mul(&self, o: &IntMat) -> IntMat {
        let n = self.n;
        let mut out = IntMat::zero(n);
        for i in 0..n {
            for k in 0..n {
                let v = self.a[i * n + k];
                if v != 0 {
                    for j in 0..n {
                        out.a[i * n + j] += v * o.a[k * n + j];
                    }
                }
            }
        }
        out
    }

    fn first_row(&self) -> &[i64] {
        &self.a[..self.n]
    }
}

/// Basis matrices `1, u_12, ..., u_1n` of the order-`n` matrix ring.
fn ce_matrix_basis(n: usize) -> Vec<IntMat> {
    let z = || IntMat::zero(n);
    let mut basis = vec![IntMat::identity(n)];
    for k in 2..=n {
        let m = match k {
            2 => z().unit(1, 2).unit(n - 2, n),
            3 => z().unit(1, 3).unit(2, 4).unit(n - 1, n),
            k if k == n - 2 => z().unit(1, n - 2).unit(2, n),
            k if k == n - 1 => z().unit(1, n - 1).unit(3, n),
            k => z().unit(1, k),
        };
        basis.push(m);
    }
    basis
}

/// The rank-`n` ring of upper-triangular matrices spanned by `1` and
/// `u_12, ..., u_1n` (see [`ce_matrix_basis`]), over `scalars`.
///
/// The table comes from multiplying the basis matrices: every basis matrix
/// has first row `E_1k`, so a product's coordinates are its first row.
pub fn ce_matrix<S: Scalars>(n: usize, scalars: S) -> Result<RingPresentation<S>> {
    if n < 7 {
        return Err(Error::InvalidArgument(format!("ce-matrix needs n >= 7, got {n}")));
    }
    let basis = ce_matrix_basis(n);
    let mut table = vec![vec![Vec::new(); n]; n];
    for (i, a) in basis.iter().enumerate() {
        for (j, b) in basis.iter().enumerate() {
            let p = a.mul(b);
            let coords = p.first_row().to_vec();
            let mut back = IntMat::zero(n);
            for (k, &c) in coords.iter().enumerate() {
                for (t, v) in back.a.iter_mut().enumerate() {
                    *v += c * basis[k].a[t];
                }
            }
            if back != p {
                return Err(Error::Unsupported(format!("basis of order {n} is not closed under products")));
            }
            table[i][j] = coords;
        }
    }
    let mut one = vec![0; n];
    one[0] = 1;
    let name = format!("ce-matrix({n}) over {}", scalars.spec());
    RingPresentation::from_integer_table(name, scalars, &one, &table)
}

/// Exterior algebra on `d` generators over `F_p`. Basis: subsets of
/// `{1..d}` ordered by size, then lexicographically.
pub fn grassmann(d: usize, p: u64) -> Result<RingPresentation<IntegersMod>> {
    if d == 0 {
        return Err(Error::InvalidArgument("grassmann needs at least one generator".into()));
    }
    if d > 10 {
        return Err(Error::Unsupported(format!("grassmann on {d} generators is too large")));
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let fp = IntegersMod::new(p)?;
    let masks = grassmann_monomials(d);
    let pos = |m: u32| masks.iter().position(|&x| x == m).expect("every subset listed");
    let n = masks.len();
    let mut table = vec![vec![vec![0i64; n]; n]; n];
    for (i, &a) in masks.iter().enumerate() {
        for (j, &b) in masks.iter().enumerate() {
            if a & b != 0 {
                continue;
            }
            // sign of merging the sorted index lists: count pairs (s in a, t in b) with s > t
            let inversions: u32 = (0..d as u32)
                .filter(|&s| a >> s & 1 == 1)
                .map(|s| (b & ((1u32 << s) - 1)).count_ones())
                .sum();
            table[i][j][pos(a | b)] = if inversions.is_multiple_of(2) { 1 } else { -1 };
        }
    }
    let mut one = vec![0; n];
    one[0] = 1;
    RingPresentation::from_integer_table(format!("grassmann({d}, F_{p})"), fp, &one, &table)
}

/// Bitmasks of the Grassmann monomial basis, in basis order.
pub fn grassmann_monomials(d: usize) -> Vec<u32> {
    let mut masks: Vec<u32> = (0..1u32 << d).collect();
    masks.sort_by_key(|&m| {
        let idx: Vec<u32> = (0..d as u32).filter(|&s| m >> s & 1 == 1).collect();
        (m.count_ones(), idx)
    });
    masks
}

/// Index of the matrix unit `E_ij` (0-indexed) in the `k x k` full matrix basis.
pub fn full_matrix_index(k: usize, i: usize, j: usize) -> usize {
    i * k + j
}

fn matrix_units<S: Scalars>(name: String, k: usize, units: &[(usize, usize)], scalars: S) -> Result<RingPresentation<S>> {
    if k == 0 {
        return Err(Error::InvalidArgument("matrix size must be at least 1".into()));
    }
    let n = units.len();
    let mut table = vec![vec![vec![0i64; n]; n]; n];
    for (a, &(i, j)) in units.iter().enumerate() {
        for (b, &(l, m)) in units.iter().enumerate() {
            if j == l {
                let c = units.iter().position(|&u| u == (i, m)).expect("closed set of units");
                table[a][b][c] = 1;
            }
        }
    }
    let one: Vec<i64> = units.iter().map(|&(i, j)| i64::from(i == j)).collect();
    RingPresentation::from_integer_table(name, scalars, &one, &table)
}

/// `M_k` on the matrix-unit basis `E_00, E_01, ..., E_{k-1,k-1}`.
pub fn full_matrix<S: Scalars>(k: usize, scalars: S) -> Result<RingPresentation<S>> {
    let units: Vec<_> = (0..k).flat_map(|i| (0..k).map(move |j| (i, j))).collect();
    let name = format!("M_{k}({})", scalars.spec());
    matrix_units(name, k, &units, scalars)
}

/// Upper-triangular `k x k` matrices, basis `E_ij` with `i <= j` in row order.
pub fn triangular<S: Scalars>(k: usize, scalars: S) -> Result<RingPresentation<S>> {
    let units: Vec<_> = (0..k).flat_map(|i| (i..k).map(move |j| (i, j))).collect();
    let name = format!("T_{k}({})", scalars.spec());
    matrix_units(name, k, &units, scalars)
}

/// Commutative rings used as positive controls.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CommutativeControl {
    /// `S[x]/(x^k)`, basis `1, x, ..., x^{k-1}`.
    Truncated(usize),
    /// `S^k` with componentwise product.
    Product(usize),
    /// Group ring of the cyclic group of order `k`.
    Cyclic(usize),
}

pub fn commutative_control<S: Scalars>(kind: CommutativeControl, scalars: S) -> Result<RingPresentation<S>> {
    let (k, name) = match kind {
        CommutativeControl::Truncated(k) => (k, format!("{}[x]/(x^{k})", scalars.spec())),
        CommutativeControl::Product(k) => (k, format!("{}^{k}", scalars.spec())),
        CommutativeControl::Cyclic(k) => (k, format!("{}[C_{k}]", scalars.spec())),
    };
    if k == 0 {
        return Err(Error::InvalidArgument("control size must be at least 1".into()));
    }
    let mut table = vec![vec![vec![0i64; k]; k]; k];
    let mut one = vec![0i64; k];
    for i in 0..k {
        for j in 0..k {
            match kind {
                CommutativeControl::Truncated(_) if i + j < k => table[i][j][i + j] = 1,
                CommutativeControl::Product(_) if i == j => table[i][j][i] = 1,
                CommutativeControl::Cyclic(_) => table[i][j][(i + j) % k] = 1,
                _ => {}
            }
        }
    }
    match kind {
        CommutativeControl::Product(_) => one.iter_mut().for_each(|v| *v = 1),
        _ => one[0] = 1,
    }
    RingPresentation::from_integer_table(name, scalars, &one, &table)
}

/// The families a ring can be built from by name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    CeMatrix,
    Grassmann,
    FullMatrix,
    Triangular,
    Truncated,
    Product,
    Cyclic,
}

impl Family {
    pub fn parse(s: &str) -> Option<Family> {
        Some(match s {
            "ce-matrix" => Family::CeMatrix,
            "grassmann" => Family::Grassmann,
            "full-matrix" => Family::FullMatrix,
            "triangular" => Family::Triangular,
            "truncated" => Family::Truncated,
            "product" => Family::Product,
            "cyclic" => Family::Cyclic,
            _ => return None,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: Family,
    /// Order, matrix size, number of generators or control size.
    pub n: usize,
    pub scalar: ScalarSpec,
}

impl FamilySpec {
    pub fn new(family: Family, n: usize, scalar: ScalarSpec) -> Self {
        FamilySpec { family, n, scalar }
    }

    pub fn build(&self) -> Result<AnyRing> {
        if self.family == Family::Grassmann {
            return match self.scalar {
                ScalarSpec::IntegerMod(p) => Ok(grassmann(self.n, p)?.into()),
                other => Err(Error::InvalidArgument(format!("grassmann needs a prime field, got {other}"))),
            };
        }
        Ok(match self.scalar {
            ScalarSpec::Integer => self.build_over(Integers)?.into(),
            ScalarSpec::Rational => self.build_over(Rationals)?.into(),
            ScalarSpec::IntegerMod(m) => self.build_over(IntegersMod::new(m)?)?.into(),
        })
    }

    fn build_over<S: Scalars>(&self, s: S) -> Result<RingPresentation<S>> {
        match self.family {
            Family::CeMatrix => ce_matrix(self.n, s),
            Family::FullMatrix => full_matrix(self.n, s),
            Family::Triangular => triangular(self.n, s),
            Family::Truncated => commutative_control(CommutativeControl::Truncated(self.n), s),
            Family::Product => commutative_control(CommutativeControl::Product(self.n), s),
            Family::Cyclic => commutative_control(CommutativeControl::Cyclic(self.n), s),
            Family::Grassmann => unreachable!("handled in build"),
        }
    }
}

/// Central witness for `a` in `ce_matrix(n)`: with `a = α + a₂ u_12 + a₃ u_13 + ...`,
/// `x = a₂ u_{1,n-2} + a₃ u_{1,n-1}` and `a x = α x + (a₂² + a₃²) u_1n`.
/// When `a₂ = a₃ = 0` the element is central and `x = 1`.
pub fn ce_matrix_witness<S: Scalars>(ring: &RingPresentation<S>, a: &[S::Elem]) -> (Vec<S::Elem>, Vec<S::Elem>) {
    let n = ring.rank();
    let s = ring.scalars();
    let x = if s.is_zero(&a[1]) && s.is_zero(&a[2]) {
        ring.one().to_vec()
    } else {
        let mut x = ring.zero_coords();
        x[n - 3] = a[1].clone();
        x[n - 2] = a[2].clone();
        x
    };
    let y = ring.mul(a, &x);
    (x, y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    /// Hand-listed nonzero products among u_12..u_1n (1-indexed k of u_1k).
    fn expected_products(n: usize) -> Vec<((usize, usize), usize)> {
        vec![
            ((2, 3), 4),
            ((2, n - 2), n),
            ((n - 2, 2), n),
            ((3, n - 1), n),
            ((n - 1, 3), n),
        ]
    }

    #[test]
    fn ce_matrix_table_matches_hand_products() {
        for n in 7..=12 {
            let r = ce_matrix(n, Integers).unwrap();
            assert!(r.validate().passed(), "n = {n}");
            let expected = expected_products(n);
            for i in 2..=n {
                for j in 2..=n {
                    let got = r.product_of_basis(i - 1, j - 1);
                    let mut want = vec![BigInt::from(0); n];
                    if let Some((_, k)) = expected.iter().find(|(p, _)| *p == (i, j)) {
                        want[k - 1] = BigInt::from(1);
                    }
                    assert_eq!(got, &want[..], "u_1{i} u_1{j} at n = {n}");
                }
            }
        }
    }

    #[test]
    fn ce_matrix_rejects_small_order() {
        assert!(ce_matrix(6, Integers).is_err());
    }

    #[test]
    fn seven_by_seven_named_products() {
        // basis 1, a, b, c, d, e, f
        let r = ce_matrix(7, Integers).unwrap();
        let e = |i: usize| r.basis_coords(i);
        assert_eq!(r.mul(&e(1), &e(2)), e(3));
        assert!(r.is_zero(&r.mul(&e(2), &e(1))));
        assert_eq!(r.commutator(&e(1), &e(2)), e(3));
        assert!(r.is_zero(&r.commutator(&e(1), &e(4))));
        assert_eq!(r.validate().triples_checked, 343);
        let op = r.opposite();
        assert_eq!(op.mul(&e(2), &e(1)), e(3));
    }

    #[test]
    fn grassmann_relations() {
        let g = grassmann(3, 3).unwrap();
        assert_eq!(g.rank(), 8);
        assert!(g.validate().passed());
        // basis: 1, x1, x2, x3, x12, x13, x23, x123
        assert_eq!(g.mul(&g.basis_coords(1), &g.basis_coords(2)), g.basis_coords(4));
        let mut minus = g.zero_coords();
        minus[4] = 2;
        assert_eq!(g.mul(&g.basis_coords(2), &g.basis_coords(1)), minus);
        for i in 1..=3 {
            assert!(g.is_zero(&g.mul(&g.basis_coords(i), &g.basis_coords(i))));
        }
        assert!(!g.is_commutative());
        assert!(grassmann(3, 2).unwrap().is_commutative());
        assert!(matches!(grassmann(3, 4), Err(Error::NotPrime(4))));
        for d in 1..=4 {
            assert_eq!(grassmann(d, 5).unwrap().rank(), 1 << d);
        }
    }

    #[test]
    fn grassmann_sign_of_longer_monomials() {
        let g = grassmann(3, 5).unwrap();
        // x2 * x13 = x2 x1 x3 = -x123
        let mut want = g.zero_coords();
        want[7] = 4;
        assert_eq!(g.mul(&g.basis_coords(2), &g.basis_coords(5)), want);
        // x13 * x2 = x1 x3 x2 = -x123
        assert_eq!(g.mul(&g.basis_coords(5), &g.basis_coords(2)), want);
        // x1 * x23 = x123
        assert_eq!(g.mul(&g.basis_coords(1), &g.basis_coords(6)), g.basis_coords(7));
    }

    #[test]
    fn matrix_rings_validate() {
        let f2 = IntegersMod::new(2).unwrap();
        for k in 1..=3 {
            assert!(full_matrix(k, f2).unwrap().validate().passed());
            assert!(triangular(k, Integers).unwrap().validate().passed());
        }
        let m = full_matrix(2, f2).unwrap();
        assert_eq!(m.rank(), 4);
        assert_eq!(triangular(2, f2).unwrap().rank(), 3);
    }

    #[test]
    fn controls_are_commutative_rings() {
        for kind in [
            CommutativeControl::Truncated(3),
            CommutativeControl::Product(3),
            CommutativeControl::Cyclic(4),
        ] {
            let r = commutative_control(kind, Integers).unwrap();
            assert!(r.validate().passed());
            assert!(r.is_commutative());
        }
    }

    #[test]
    fn witness_family_formula() {
        let r = ce_matrix(9, Integers).unwrap();
        let a = RingPresentation::coords_from_i64(&[2, 3, -1, 5, 0, 0, 7, 4, 1]);
        let (x, y) = ce_matrix_witness(&r, &a);
        let mut want = r.scale(&BigInt::from(2), &x);
        want[8] += BigInt::from(10);
        assert_eq!(y, want);
    }

    #[test]
    fn family_spec_builds() {
        let r = FamilySpec::new(Family::CeMatrix, 7, ScalarSpec::IntegerMod(2)).build().unwrap();
        assert_eq!(r.rank(), 7);
        assert!(FamilySpec::new(Family::Grassmann, 3, ScalarSpec::Integer).build().is_err());
    }
}
