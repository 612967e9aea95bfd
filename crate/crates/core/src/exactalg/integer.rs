//! Integer normal forms: row Hermite form, Smith form and the saturated
//! left kernel built from them.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::mat::Mat;

/// Returns `(g, s, t)` with `g = gcd(a, b) >= 0` and `s*a + t*b = g`.
pub fn ext_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_s, mut s) = (BigInt::one(), BigInt::zero());
    let (mut old_t, mut t) = (BigInt::zero(), BigInt::one());
    while !r.is_zero() {
        let q = old_r.div_floor(&r);
        let next_r = &old_r - &q * &r;
        old_r = std::mem::replace(&mut r, next_r);
        let next_s = &old_s - &q * &s;
        old_s = std::mem::replace(&mut s, next_s);
        let next_t = &old_t - &q * &t;
        old_t = std::mem::replace(&mut t, next_t);
    }
    if old_r.is_negative() {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

/// Replaces rows `(i, j)` by `(a*ri + b*rj, c*ri + d*rj)`.
fn combine_rows(m: &mut Mat<BigInt>, i: usize, j: usize, a: &BigInt, b: &BigInt, c: &BigInt, d: &BigInt) {
    for col in 0..m.cols() {
        let x = m[(i, col)].clone();
        let y = m[(j, col)].clone();
        if x.is_zero() && y.is_zero() {
            continue;
        }
        m[(i, col)] = a * &x + b * &y;
        m[(j, col)] = c * &x + d * &y;
    }
}

/// Row `dst += factor * row src`.
fn add_row_multiple(m: &mut Mat<BigInt>, dst: usize, src: usize, factor: &BigInt) {
    if factor.is_zero() {
        return;
    }
    for col in 0..m.cols() {
        if !m[(src, col)].is_zero() {
            let v = factor * &m[(src, col)];
            m[(dst, col)] += v;
        }
    }
}

fn add_col_multiple(m: &mut Mat<BigInt>, dst: usize, src: usize, factor: &BigInt) {
    if factor.is_zero() {
        return;
    }
    for row in 0..m.rows() {
        if !m[(row, src)].is_zero() {
            let v = factor * &m[(row, src)];
            m[(row, dst)] += v;
        }
    }
}

fn negate_row(m: &mut Mat<BigInt>, i: usize) {
    for v in m.row_mut(i) {
        *v = -std::mem::take(v);
    }
}

fn hnf_impl(m: &Mat<BigInt>, track: bool) -> (Mat<BigInt>, Option<Mat<BigInt>>, Vec<usize>) {
    let rows = m.rows();
    let mut h = m.clone();
    let mut u = track.then(|| Mat::identity(rows));
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m.cols() {
        if r == rows {
            break;
        }
        for i in r + 1..rows {
            if h[(i, c)].is_zero() {
                continue;
            }
            let a = h[(r, c)].clone();
            let b = h[(i, c)].clone();
            let (g, s, t) = ext_gcd(&a, &b);
            let (ag, bg) = (&a / &g, &b / &g);
            let nbg = -bg;
            combine_rows(&mut h, r, i, &s, &t, &nbg, &ag);
            if let Some(u) = u.as_mut() {
                combine_rows(u, r, i, &s, &t, &nbg, &ag);
            }
        }
        if h[(r, c)].is_zero() {
            continue;
        }
        if h[(r, c)].is_negative() {
            negate_row(&mut h, r);
            if let Some(u) = u.as_mut() {
                negate_row(u, r);
            }
        }
        let pivot = h[(r, c)].clone();
        for i in 0..r {
            let q = h[(i, c)].div_floor(&pivot);
            if !q.is_zero() {
                let nq = -q;
                add_row_multiple(&mut h, i, r, &nq);
                if let Some(u) = u.as_mut() {
                    add_row_multiple(u, i, r, &nq);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (h, u, pivots)
}

/// Row Hermite normal form `h = transform * m` with `transform` unimodular.
///
/// Pivots are positive, entries above a pivot lie in `[0, pivot)`, and zero
/// rows are collected at the bottom. The nonzero rows depend only on the row
/// lattice of `m`.
pub fn hermite_normal_form(m: &Mat<BigInt>) -> (Mat<BigInt>, Mat<BigInt>) {
    let (h, u, _) = hnf_impl(m, true);
    (h, u.expect("transform tracked"))
}

/// Nonzero rows of the Hermite form of the given generators.
pub fn hnf_rows(rows: Vec<Vec<BigInt>>, width: usize) -> Vec<Vec<BigInt>> {
    if rows.is_empty() {
        return rows;
    }
    let (h, _, pivots) = hnf_impl(&Mat::from_rows(rows, width), false);
    (0..pivots.len()).map(|i| h.row(i).to_vec()).collect()
}

/// Smith normal form `s = left * m * right`, diagonal with `d1 | d2 | ...`,
/// all diagonal entries non-negative.
pub fn smith_normal_form(m: &Mat<BigInt>) -> (Mat<BigInt>, Mat<BigInt>, Mat<BigInt>) {
    let (rows, cols) = (m.rows(), m.cols());
    let mut s = m.clone();
    let mut left = Mat::identity(rows);
    let mut right = Mat::identity(cols);
    for t in 0..rows.min(cols) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    let v = &s[(i, j)];
                    if v.is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(bi, bj)| v.abs() < s[(bi, bj)].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else {
                return (s, left, right);
            };
            s.swap_rows(t, bi);
            left.swap_rows(t, bi);
            s.swap_cols(t, bj);
            right.swap_cols(t, bj);

            let pivot = s[(t, t)].clone();
            let mut clean = true;
            for i in t + 1..rows {
                let q = -(&s[(i, t)] / &pivot);
                add_row_multiple(&mut s, i, t, &q);
                add_row_multiple(&mut left, i, t, &q);
                clean &= s[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                let q = -(&s[(t, j)] / &pivot);
                add_col_multiple(&mut s, j, t, &q);
                add_col_multiple(&mut right, j, t, &q);
                clean &= s[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }
            let offender = (t + 1..rows)
                .find(|&i| (t + 1..cols).any(|j| !(&s[(i, j)] % &pivot).is_zero()));
            match offender {
                Some(i) => {
                    add_row_multiple(&mut s, t, i, &BigInt::one());
                    add_row_multiple(&mut left, t, i, &BigInt::one());
                }
                None => break,
            }
        }
        if s[(t, t)].is_negative() {
            negate_row(&mut s, t);
            negate_row(&mut left, t);
        }
    }
    (s, left, right)
}

/// Nonzero diagonal entries of the Smith form.
pub fn invariant_factors(m: &Mat<BigInt>) -> Vec<BigInt> {
    let (s, _, _) = smith_normal_form(m);
    (0..s.rows().min(s.cols()))
        .map(|i| s[(i, i)].clone())
        .filter(|v| !v.is_zero())
        .collect()
}

/// Basis of `{x in Z^rows : x * m = 0}`, in Hermite form. The result is
/// saturated because it is read off a unimodular transform.
pub fn left_kernel(m: &Mat<BigInt>) -> Vec<Vec<BigInt>> {
    let (_, u, pivots) = hnf_impl(m, true);
    let u = u.expect("transform tracked");
    let gens: Vec<Vec<BigInt>> = (pivots.len()..m.rows()).map(|i| u.row(i).to_vec()).collect();
    hnf_rows(gens, m.rows())
}

/// Reduces `x` against Hermite rows; returns whether `x` lies in their span.
pub fn hnf_contains(basis: &[Vec<BigInt>], x: &[BigInt]) -> bool {
    let mut x = x.to_vec();
    for row in basis {
        let Some(c) = row.iter().position(|v| !v.is_zero()) else {
            continue;
        };
        if x[c].is_zero() {
            continue;
        }
        let (q, rem) = x[c].div_rem(&row[c]);
        if !rem.is_zero() {
            return false;
        }
        for (xi, ri) in x.iter_mut().zip(row) {
            *xi -= &q * ri;
        }
    }
    x.iter().all(Zero::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Mat<BigInt> {
        Mat::from_i64(rows)
    }

    #[test]
    fn hnf_identity_is_fixed() {
        let id = Mat::identity(3);
        let (h, u) = hermite_normal_form(&id);
        assert_eq!(h, id);
        assert_eq!(u, id);
    }

    #[test]
    fn hnf_dependent_rows() {
        let (h, u) = hermite_normal_form(&m(&[&[1, 2], &[2, 4]]));
        assert_eq!(h, m(&[&[1, 2], &[0, 0]]));
        assert_eq!(u.mul(&m(&[&[1, 2], &[2, 4]])), h);
        assert!(u.determinant().abs().is_one());
    }

    #[test]
    fn hnf_already_canonical() {
        let a = m(&[&[2, 0], &[0, 3]]);
        assert_eq!(hermite_normal_form(&a).0, a);
    }

    #[test]
    fn hnf_reduces_above_pivots() {
        let a = m(&[&[3, 5, 1], &[0, 2, 7], &[6, 1, 1]]);
        let (h, u) = hermite_normal_form(&a);
        assert_eq!(u.mul(&a), h);
        assert!(u.determinant().abs().is_one());
        for r in 0..3 {
            let c = (0..3).find(|&c| !h[(r, c)].is_zero()).unwrap();
            assert!(h[(r, c)].is_positive());
            for above in 0..r {
                assert!(!h[(above, c)].is_negative() && h[(above, c)] < h[(r, c)]);
            }
        }
    }

    #[test]
    fn smith_of_diag_two_three() {
        let a = m(&[&[2, 0], &[0, 3]]);
        let (s, l, r) = smith_normal_form(&a);
        assert_eq!(s, m(&[&[1, 0], &[0, 6]]));
        assert_eq!(l.mul(&a).mul(&r), s);
        assert!(l.determinant().abs().is_one());
        assert!(r.determinant().abs().is_one());
    }

    #[test]
    fn smith_trivial_cases() {
        let z = Mat::zeros(2, 3);
        assert_eq!(smith_normal_form(&z).0, z);
        let id = Mat::identity(3);
        assert_eq!(smith_normal_form(&id).0, id);
    }

    #[test]
    fn kernel_of_column_ones() {
        assert_eq!(left_kernel(&m(&[&[1], &[1]])), vec![vec![BigInt::from(1), BigInt::from(-1)]]);
        assert!(left_kernel(&Mat::identity(3)).is_empty());
    }

    #[test]
    fn ext_gcd_signs() {
        for (a, b) in [(0, 0), (0, -5), (-12, 18), (7, 3), (-4, -6)] {
            let (a, b) = (BigInt::from(a), BigInt::from(b));
            let (g, s, t) = ext_gcd(&a, &b);
            assert!(!g.is_negative());
            assert_eq!(&s * &a + &t * &b, g);
            assert_eq!(g, a.gcd(&b));
        }
    }
}
