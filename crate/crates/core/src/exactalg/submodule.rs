use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

use super::integer;
use super::mat::Mat;
use super::{combine, IntegersMod, Integers, Scalars};
use crate::error::{Error, Result};

/// A finitely generated submodule of `scalars^ambient`, kept in canonical
/// form so equal submodules compare (and hash) equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Submodule<S: Scalars> {
    scalars: S,
    ambient: usize,
    basis: Vec<Vec<S::Elem>>,
}

impl<S: Scalars> Submodule<S> {
    pub fn new(scalars: S, ambient: usize, gens: Vec<Vec<S::Elem>>) -> Self {
        for g in &gens {
            assert_eq!(g.len(), ambient, "generator length differs from ambient rank");
        }
        let basis = scalars.canonical_rows(gens, ambient);
        Submodule {
            scalars,
            ambient,
            basis,
        }
    }

    pub fn zero(scalars: S, ambient: usize) -> Self {
        Submodule {
            scalars,
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn full(scalars: S, ambient: usize) -> Self {
        let gens = (0..ambient).map(|i| unit(&scalars, ambient, i)).collect();
        Submodule::new(scalars, ambient, gens)
    }

    pub fn scalars(&self) -> &S {
        &self.scalars
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient
    }

    /// Canonical generators.
    pub fn basis(&self) -> &[Vec<S::Elem>] {
        &self.basis
    }

    /// Number of canonical generators (the rank over a field or the integers).
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        *self == Submodule::full(self.scalars.clone(), self.ambient)
    }

    pub fn generator_matrix(&self) -> Mat<S::Elem> {
        Mat::from_rows(self.basis.clone(), self.ambient)
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.ambient != other.ambient || self.scalars != other.scalars {
            return Err(Error::Mismatch(format!(
                "submodules of {:?}^{} and {:?}^{}",
                self.scalars.spec(),
                self.ambient,
                other.scalars.spec(),
                other.ambient
            )));
        }
        Ok(())
    }

    pub fn contains(&self, x: &[S::Elem]) -> bool {
        assert_eq!(x.len(), self.ambient, "vector length differs from ambient rank");
        self.scalars.span_contains(&self.basis, x)
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.basis.iter().all(|b| other.contains(b))
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let gens = self.basis.iter().chain(&other.basis).cloned().collect();
        Ok(Submodule::new(self.scalars.clone(), self.ambient, gens))
    }

    /// Adds extra generators.
    pub fn extend<I: IntoIterator<Item = Vec<S::Elem>>>(&self, gens: I) -> Self {
        let all = self.basis.iter().cloned().chain(gens).collect();
        Submodule::new(self.scalars.clone(), self.ambient, all)
    }

    /// Intersection via the kernel of the stacked generator system: the
    /// vectors `y A` with `y A + z B = 0`.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Submodule::zero(self.scalars.clone(), self.ambient));
        }
        let a = self.generator_matrix();
        let stacked = a.vstack(&other.generator_matrix());
        let k = self.rank();
        let gens = self
            .scalars
            .left_kernel(&stacked)
            .into_iter()
            .map(|row| combine(&self.scalars, &row[..k], &self.basis, self.ambient))
            .collect();
        Ok(Submodule::new(self.scalars.clone(), self.ambient, gens))
    }

    /// `{x : x * m in target}` where `m` has `ambient` rows.
    pub fn preimage(m: &Mat<S::Elem>, target: &Submodule<S>) -> Self {
        let s = target.scalars.clone();
        let r = m.rows();
        assert_eq!(m.cols(), target.ambient);
        let stacked = m.vstack(&target.generator_matrix());
        let gens = s
            .left_kernel(&stacked)
            .into_iter()
            .map(|row| row[..r].to_vec())
            .collect();
        Submodule::new(s, r, gens)
    }

    /// `self^m` inside `scalars^(ambient * m)`, as a block-diagonal sum.
    pub fn power(&self, m: usize) -> Self {
        let n = self.ambient;
        let mut gens = Vec::with_capacity(self.rank() * m);
        for block in 0..m {
            for b in &self.basis {
                let mut v = vec![self.scalars.zero(); n * m];
                v[block * n..(block + 1) * n].clone_from_slice(b);
                gens.push(v);
            }
        }
        Submodule::new(self.scalars.clone(), n * m, gens)
    }

    /// Maps coefficient vectors over the canonical basis to ambient vectors.
    pub fn combination(&self, coeffs: &[S::Elem]) -> Vec<S::Elem> {
        combine(&self.scalars, coeffs, &self.basis, self.ambient)
    }

    /// Image of the submodule under `x -> x * m`.
    pub fn image(&self, m: &Mat<S::Elem>) -> Self {
        let gens = self
            .basis
            .iter()
            .map(|b| super::vec_mat(&self.scalars, b, m))
            .collect();
        Submodule::new(self.scalars.clone(), m.cols(), gens)
    }
}

pub(crate) fn unit<S: Scalars>(s: &S, n: usize, i: usize) -> Vec<S::Elem> {
    let mut v = vec![s.zero(); n];
    v[i] = s.one();
    v
}

impl Submodule<Integers> {
    /// Whether `Z^n / self` is torsion-free: all Smith invariant factors of
    /// the generator matrix equal 1.
    pub fn is_pure(&self) -> bool {
        if self.is_zero() {
            return true;
        }
        integer::invariant_factors(&self.generator_matrix())
            .iter()
            .all(One::is_one)
    }

    /// Smallest pure sublattice containing `self`: `(Q self) ∩ Z^n`, obtained
    /// as the kernel of the kernel.
    pub fn saturate(&self) -> Self {
        let n = self.ambient;
        if self.is_zero() {
            return self.clone();
        }
        // Annihilating vectors v with B v = 0.
        let ann = integer::left_kernel(&self.generator_matrix().transpose());
        if ann.is_empty() {
            return Submodule::full(Integers, n);
        }
        let gens = integer::left_kernel(&Mat::from_rows(ann, n).transpose());
        Submodule::new(Integers, n, gens)
    }
}

impl Submodule<IntegersMod> {
    /// Coefficient ranges `[0, m / pivot)` under which combinations of the
    /// canonical rows enumerate every element exactly once.
    pub fn coefficient_ranges(&self) -> Vec<u64> {
        let m = self.scalars.modulus();
        self.basis
            .iter()
            .map(|r| {
                let pivot = r.iter().find(|v| **v != 0).copied().expect("nonzero row");
                m / pivot
            })
            .collect()
    }

    /// Number of elements, `None` on u64 overflow.
    pub fn cardinality(&self) -> Option<u64> {
        self.coefficient_ranges()
            .iter()
            .try_fold(1u64, |acc, &r| acc.checked_mul(r))
    }

    /// All elements, in odometer order of the canonical coefficients.
    pub fn elements(&self) -> SubmoduleElements<'_> {
        SubmoduleElements {
            sub: self,
            ranges: self.coefficient_ranges(),
            coeffs: vec![0; self.basis.len()],
            done: false,
        }
    }

    /// Full-rank lattice Hermite diagonal, used for cardinality cross-checks.
    pub fn lattice_index(&self) -> BigInt {
        let rows = self.scalars.lattice_hnf(&self.basis, self.ambient);
        rows.iter()
            .enumerate()
            .map(|(i, r)| r[i].clone())
            .fold(BigInt::one(), |a, b| a * b)
    }
}

pub struct SubmoduleElements<'a> {
    sub: &'a Submodule<IntegersMod>,
    ranges: Vec<u64>,
    coeffs: Vec<u64>,
    done: bool,
}

impl Iterator for SubmoduleElements<'_> {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        if self.done {
            return None;
        }
        let s = &self.sub.scalars;
        let v = combine(s, &self.coeffs, &self.sub.basis, self.sub.ambient);
        // advance odometer, last coefficient fastest
        self.done = true;
        for i in (0..self.coeffs.len()).rev() {
            self.coeffs[i] += 1;
            if self.coeffs[i] < self.ranges[i] {
                self.done = false;
                break;
            }
            self.coeffs[i] = 0;
        }
        Some(v)
    }
}

/// Converts an integer vector to `u64` residues; used by tests and the CLI.
pub fn residues(m: u64, v: &[BigInt]) -> Vec<u64> {
    let mb = BigInt::from(m);
    v.iter()
        .map(|x| {
            let r = ((x % &mb) + &mb) % &mb;
            r.to_u64().unwrap_or(0)
        })
        .collect()
}

impl<S: Scalars> Submodule<S> {
    /// Vectors with all coordinates zero.
    pub fn zero_vector(&self) -> Vec<S::Elem> {
        vec![self.scalars.zero(); self.ambient]
    }

    pub fn is_zero_vector(&self, v: &[S::Elem]) -> bool {
        v.iter().all(|x| self.scalars.is_zero(x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zv(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn zsub(rows: &[&[i64]], n: usize) -> Submodule<Integers> {
        Submodule::new(Integers, n, rows.iter().map(|r| zv(r)).collect())
    }

    #[test]
    fn intersections() {
        assert!(zsub(&[&[1, 0]], 2).intersect(&zsub(&[&[0, 1]], 2)).unwrap().is_zero());
        let i = zsub(&[&[2, 0], &[0, 1]], 2).intersect(&zsub(&[&[1, 1]], 2)).unwrap();
        assert_eq!(i, zsub(&[&[2, 2]], 2));
        assert!(!zsub(&[&[2, 0]], 2).contains(&zv(&[1, 0])));
    }

    #[test]
    fn mismatch_is_an_error() {
        assert!(zsub(&[&[1, 0]], 2).sum(&zsub(&[&[1, 0, 0]], 3)).is_err());
    }

    #[test]
    fn purity_and_saturation() {
        assert!(zsub(&[&[1, 0]], 2).is_pure());
        assert!(!zsub(&[&[2, 0]], 2).is_pure());
        assert_eq!(zsub(&[&[2, 0]], 2).saturate(), zsub(&[&[1, 0]], 2));
        assert_eq!(zsub(&[&[2, 2]], 2).saturate(), zsub(&[&[1, 1]], 2));
        let pure = zsub(&[&[1, 3, 0], &[0, 0, 1]], 3);
        assert_eq!(pure.saturate(), pure);
    }

    #[test]
    fn modular_enumeration_counts() {
        let z4 = IntegersMod::new(4).unwrap();
        let s = Submodule::new(z4, 2, vec![vec![2, 1]]);
        let elems: Vec<_> = s.elements().collect();
        assert_eq!(elems.len(), 4);
        let mut dedup = elems.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), 4);
        assert!(elems.iter().all(|e| s.contains(e)));
        // |S| = m^n / index
        assert_eq!(BigInt::from(16) / s.lattice_index(), BigInt::from(4));
    }
}
