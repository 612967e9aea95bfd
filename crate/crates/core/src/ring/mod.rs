//! Rings presented by structure constants over a scalar ring.
//!
//! A rank-`n` presentation stores `e_i * e_j` for every pair of basis
//! vectors; products of arbitrary elements are the bilinear extension.

mod element;
mod finite;
pub mod io;
mod quotient;

use num_bigint::BigInt;

pub use element::RingElement;
pub use finite::{Elements, DEFAULT_ENUMERATION_CAP};
pub use io::AnyRing;
pub use quotient::QuotientMap;

use crate::error::{Error, Result};
use crate::exactalg::{Integers, Mat, Scalars, Submodule};

/// Side of a multiplication or of a one-sided ideal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Side {
    Right,
    Left,
    TwoSided,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RingPresentation<S: Scalars> {
    name: String,
    scalars: S,
    rank: usize,
    one: Vec<S::Elem>,
    /// `table[i * n + j]` = coordinates of `e_i * e_j`.
    table: Vec<Vec<S::Elem>>,
    /// Nonzero entries of each table cell.
    sparse: Vec<Vec<(usize, S::Elem)>>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct AssociativityFailure<E> {
    pub triple: (usize, usize, usize),
    /// `(e_i e_j) e_k - e_i (e_j e_k)`.
    pub defect: Vec<E>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct IdentityFailure<E> {
    pub basis: usize,
    /// `Left` when `1 * e_i != e_i`, `Right` when `e_i * 1 != e_i`.
    pub side: Side,
    pub product: Vec<E>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ValidationReport<E> {
    pub triples_checked: usize,
    pub associativity: Vec<AssociativityFailure<E>>,
    pub identity: Vec<IdentityFailure<E>>,
}

impl<E> ValidationReport<E> {
    pub fn passed(&self) -> bool {
        self.associativity.is_empty() && self.identity.is_empty()
    }
}

impl<S: Scalars> RingPresentation<S> {
    /// Builds a presentation from `one` and the `n x n` table of products.
    /// Shapes are checked here; ring axioms are checked by [`validate`].
    ///
    /// [`validate`]: RingPresentation::validate
    pub fn new(name: impl Into<String>, scalars: S, one: Vec<S::Elem>, table: Vec<Vec<Vec<S::Elem>>>) -> Result<Self> {
        let n = one.len();
        let one: Vec<S::Elem> = one.into_iter().map(|v| scalars.normalize(v)).collect();
        if n == 0 {
            return Err(Error::InvalidArgument("rank must be at least 1".into()));
        }
        if table.len() != n {
            return Err(Error::Format {
                field: "table".into(),
                message: format!("expected {n} rows, found {}", table.len()),
            });
        }
        let mut flat = Vec::with_capacity(n * n);
        for (i, row) in table.into_iter().enumerate() {
            if row.len() != n {
                return Err(Error::Format {
                    field: format!("table[{i}]"),
                    message: format!("expected {n} entries, found {}", row.len()),
                });
            }
            for (j, cell) in row.into_iter().enumerate() {
                if cell.len() != n {
                    return Err(Error::Format {
                        field: format!("table[{i}][{j}]"),
                        message: format!("expected {n} coordinates, found {}", cell.len()),
                    });
                }
                flat.push(cell.into_iter().map(|v| scalars.normalize(v)).collect::<Vec<_>>());
            }
        }
        let sparse = flat
            .iter()
            .map(|cell| {
                cell.iter()
                    .enumerate()
                    .filter(|(_, v)| !scalars.is_zero(v))
                    .map(|(k, v)| (k, v.clone()))
                    .collect()
            })
            .collect();
        Ok(RingPresentation {
            name: name.into(),
            scalars,
            rank: n,
            one,
            table: flat,
            sparse,
        })
    }

    /// Presentation whose constants are given as integers, mapped into `scalars`.
    pub fn from_integer_table(name: impl Into<String>, scalars: S, one: &[i64], table: &[Vec<Vec<i64>>]) -> Result<Self> {
        let conv = |v: &[i64]| v.iter().map(|&x| scalars.from_i64(x)).collect::<Vec<_>>();
        let one = conv(one);
        let table = table
            .iter()
            .map(|row| row.iter().map(|c| conv(c)).collect())
            .collect();
        RingPresentation::new(name, scalars.clone(), one, table)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn scalars(&self) -> &S {
        &self.scalars
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn one(&self) -> &[S::Elem] {
        &self.one
    }

    /// Coordinates of `e_i * e_j`.
    pub fn product_of_basis(&self, i: usize, j: usize) -> &[S::Elem] {
        &self.table[i * self.rank + j]
    }

    pub fn element(&self, coords: Vec<S::Elem>) -> Result<RingElement<'_, S>> {
        RingElement::new(self, coords)
    }

    pub fn zero_coords(&self) -> Vec<S::Elem> {
        vec![self.scalars.zero(); self.rank]
    }

    pub fn basis_coords(&self, i: usize) -> Vec<S::Elem> {
        let mut v = self.zero_coords();
        v[i] = self.scalars.one();
        v
    }

    pub fn is_zero(&self, a: &[S::Elem]) -> bool {
        a.iter().all(|v| self.scalars.is_zero(v))
    }

    pub fn add(&self, a: &[S::Elem], b: &[S::Elem]) -> Vec<S::Elem> {
        a.iter().zip(b).map(|(x, y)| self.scalars.add(x, y)).collect()
    }

    pub fn sub(&self, a: &[S::Elem], b: &[S::Elem]) -> Vec<S::Elem> {
        a.iter().zip(b).map(|(x, y)| self.scalars.sub(x, y)).collect()
    }

    pub fn neg(&self, a: &[S::Elem]) -> Vec<S::Elem> {
        a.iter().map(|x| self.scalars.neg(x)).collect()
    }

    pub fn scale(&self, c: &S::Elem, a: &[S::Elem]) -> Vec<S::Elem> {
        a.iter().map(|x| self.scalars.mul(c, x)).collect()
    }

    /// Bilinear extension of the structure constants.
    pub fn mul(&self, a: &[S::Elem], b: &[S::Elem]) -> Vec<S::Elem> {
        debug_assert_eq!(a.len(), self.rank);
        debug_assert_eq!(b.len(), self.rank);
        let s = &self.scalars;
        let n = self.rank;
        let mut out = self.zero_coords();
        for (i, ai) in a.iter().enumerate() {
            if s.is_zero(ai) {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if s.is_zero(bj) {
                    continue;
                }
                let c = s.mul(ai, bj);
                for (k, t) in &self.sparse[i * n + j] {
                    out[*k] = s.add(&out[*k], &s.mul(&c, t));
                }
            }
        }
        out
    }

    /// `ab - ba`.
    pub fn commutator(&self, a: &[S::Elem], b: &[S::Elem]) -> Vec<S::Elem> {
        self.sub(&self.mul(a, b), &self.mul(b, a))
    }

    pub fn pow(&self, a: &[S::Elem], mut k: u64) -> Vec<S::Elem> {
        let mut result = self.one.clone();
        let mut base = a.to_vec();
        while k > 0 {
            if k & 1 == 1 {
                result = self.mul(&result, &base);
            }
            k >>= 1;
            if k > 0 {
                base = self.mul(&base, &base);
            }
        }
        result
    }

    /// Matrix of `x -> a x` acting on row vectors: row `j` is `a e_j`.
    pub fn left_mult_matrix(&self, a: &[S::Elem]) -> Mat<S::Elem> {
        let rows = (0..self.rank).map(|j| self.mul(a, &self.basis_coords(j))).collect();
        Mat::from_rows(rows, self.rank)
    }

    /// Matrix of `x -> x a` acting on row vectors: row `j` is `e_j a`.
    pub fn right_mult_matrix(&self, a: &[S::Elem]) -> Mat<S::Elem> {
        let rows = (0..self.rank).map(|j| self.mul(&self.basis_coords(j), a)).collect();
        Mat::from_rows(rows, self.rank)
    }

    /// Matrix of `x -> (x a_1, ..., x a_m)`.
    pub fn right_mult_stack(&self, elems: &[Vec<S::Elem>]) -> Mat<S::Elem> {
        let rows = (0..self.rank)
            .map(|j| {
                let ej = self.basis_coords(j);
                elems.iter().flat_map(|a| self.mul(&ej, a)).collect()
            })
            .collect();
        Mat::from_rows(rows, self.rank * elems.len())
    }

    /// Matrix of `x -> (a_1 x, ..., a_m x)`.
    pub fn left_mult_stack(&self, elems: &[Vec<S::Elem>]) -> Mat<S::Elem> {
        let rows = (0..self.rank)
            .map(|j| {
                let ej = self.basis_coords(j);
                elems.iter().flat_map(|a| self.mul(a, &ej)).collect()
            })
            .collect();
        Mat::from_rows(rows, self.rank * elems.len())
    }

    /// Trace of `x -> z x`.
    pub fn left_trace(&self, z: &[S::Elem]) -> S::Elem {
        (0..self.rank).fold(self.scalars.zero(), |acc, j| {
            let col = self.mul(z, &self.basis_coords(j));
            self.scalars.add(&acc, &col[j])
        })
    }

    /// The `n x n^2` matrix of `x -> ([x, e_1], ..., [x, e_n])`.
    pub fn commutation_matrix(&self) -> Mat<S::Elem> {
        let n = self.rank;
        let rows = (0..n)
            .map(|i| {
                let ei = self.basis_coords(i);
                (0..n)
                    .flat_map(|j| self.commutator(&ei, &self.basis_coords(j)))
                    .collect()
            })
            .collect();
        Mat::from_rows(rows, n * n)
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.rank).all(|i| (0..i).all(|j| self.product_of_basis(i, j) == self.product_of_basis(j, i)))
    }

    /// Additive span of all products `a b` with `a` in `x`, `b` in `y`.
    pub fn product_span(&self, x: &Submodule<S>, y: &Submodule<S>) -> Submodule<S> {
        let gens = x
            .basis()
            .iter()
            .flat_map(|a| y.basis().iter().map(move |b| self.mul(a, b)))
            .collect();
        Submodule::new(self.scalars.clone(), self.rank, gens)
    }

    /// Exhaustive check of associativity on basis triples and of the
    /// identity on basis vectors.
    pub fn validate(&self) -> ValidationReport<S::Elem> {
        let n = self.rank;
        let mut associativity = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let eij = self.product_of_basis(i, j);
                for k in 0..n {
                    let left = self.mul(eij, &self.basis_coords(k));
                    let right = self.mul(&self.basis_coords(i), self.product_of_basis(j, k));
                    if left != right {
                        associativity.push(AssociativityFailure {
                            triple: (i, j, k),
                            defect: self.sub(&left, &right),
                        });
                    }
                }
            }
        }
        let mut identity = Vec::new();
        for i in 0..n {
            let ei = self.basis_coords(i);
            let l = self.mul(&self.one, &ei);
            if l != ei {
                identity.push(IdentityFailure {
                    basis: i,
                    side: Side::Left,
                    product: l,
                });
            }
            let r = self.mul(&ei, &self.one);
            if r != ei {
                identity.push(IdentityFailure {
                    basis: i,
                    side: Side::Right,
                    product: r,
                });
            }
        }
        ValidationReport {
            triples_checked: n * n * n,
            associativity,
            identity,
        }
    }

    /// Table transposed: `e_i *' e_j = e_j * e_i`.
    pub fn opposite(&self) -> Self {
        let n = self.rank;
        let table = (0..n)
            .map(|i| (0..n).map(|j| self.product_of_basis(j, i).to_vec()).collect())
            .collect();
        let name = match self.name.strip_suffix("^op") {
            Some(base) => base.to_string(),
            None => format!("{}^op", self.name),
        };
        RingPresentation::new(name, self.scalars.clone(), self.one.clone(), table)
            .expect("transposed table keeps its shape")
    }

    /// Same constants read in another scalar ring.
    pub fn map_scalars<T: Scalars>(&self, target: T, name: impl Into<String>, f: impl Fn(&S::Elem) -> T::Elem) -> RingPresentation<T> {
        let n = self.rank;
        let conv = |v: &[S::Elem]| v.iter().map(&f).collect::<Vec<_>>();
        let table = (0..n)
            .map(|i| (0..n).map(|j| conv(self.product_of_basis(i, j))).collect())
            .collect();
        RingPresentation::new(name, target, conv(&self.one), table).expect("shape preserved")
    }
}

impl RingPresentation<Integers> {
    /// Integer presentation from `i64` constants.
    pub fn integer(name: impl Into<String>, one: &[i64], table: &[Vec<Vec<i64>>]) -> Result<Self> {
        RingPresentation::from_integer_table(name, Integers, one, table)
    }

    pub fn coords_from_i64(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::IntegersMod;

    fn dual_numbers() -> RingPresentation<Integers> {
        // Z[x]/(x^2), basis (1, x)
        RingPresentation::integer(
            "Z[x]/(x^2)",
            &[1, 0],
            &[vec![vec![1, 0], vec![0, 1]], vec![vec![0, 1], vec![0, 0]]],
        )
        .unwrap()
    }

    #[test]
    fn commutative_table_validates() {
        let r = dual_numbers();
        let rep = r.validate();
        assert!(rep.passed());
        assert_eq!(rep.triples_checked, 8);
        assert!(r.is_commutative());
        assert_eq!(r.opposite().validate(), rep);
    }

    #[test]
    fn identity_failure_is_reported() {
        // e1 e1 = e2, e2 e1 = e1, everything else zero, one = e1.
        let z = vec![0, 0];
        let r = RingPresentation::integer(
            "broken",
            &[1, 0],
            &[vec![vec![0, 1], z.clone()], vec![vec![1, 0], z.clone()]],
        )
        .unwrap();
        let rep = r.validate();
        assert!(!rep.passed());
        assert!(!rep.identity.is_empty());
        assert!(rep.identity.iter().any(|f| f.basis == 0 && f.side == Side::Left));
    }

    #[test]
    fn non_associative_triple_reported() {
        // e1 e1 = e0 while e1 e0 = 0: (e1 e1) e0 = e0 but e1 (e1 e0) = 0.
        let r = RingPresentation::integer(
            "bad",
            &[1, 0],
            &[vec![vec![1, 0], vec![0, 1]], vec![vec![0, 0], vec![1, 0]]],
        )
        .unwrap();
        let rep = r.validate();
        assert!(rep.associativity.iter().any(|f| f.triple == (1, 1, 0)));
    }

    #[test]
    fn shape_errors() {
        let bad = RingPresentation::integer("x", &[1, 0], &[vec![vec![1, 0]]]);
        assert!(matches!(bad, Err(Error::Format { .. })));
    }

    #[test]
    fn opposite_is_an_involution() {
        let f2 = IntegersMod::new(2).unwrap();
        let r = RingPresentation::from_integer_table(
            "t",
            f2,
            &[1, 0, 1],
            &[
                vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 0]],
                vec![vec![0, 0, 0], vec![0, 0, 0], vec![0, 1, 0]],
                vec![vec![0, 0, 0], vec![0, 0, 0], vec![0, 0, 1]],
            ],
        )
        .unwrap();
        assert!(r.validate().passed());
        assert_eq!(r.opposite().opposite(), r);
        assert_ne!(r.opposite(), r);
    }

    #[test]
    fn pow_and_left_matrix() {
        let r = dual_numbers();
        let x = RingPresentation::coords_from_i64(&[0, 1]);
        assert!(r.is_zero(&r.pow(&x, 2)));
        let a = RingPresentation::coords_from_i64(&[2, 3]);
        let l = r.left_mult_matrix(&a);
        let y = RingPresentation::coords_from_i64(&[5, 7]);
        assert_eq!(crate::exactalg::vec_mat(&Integers, &y, &l), r.mul(&a, &y));
    }
}
