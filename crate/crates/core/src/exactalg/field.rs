//! Gaussian elimination over fields (the rationals and prime residue fields).

use super::mat::Mat;
use super::Scalars;

/// Reduced row echelon form of the generators; returns the nonzero rows and
/// their pivot columns.
pub fn rref<S: Scalars>(s: &S, mut rows: Vec<Vec<S::Elem>>, width: usize) -> (Vec<Vec<S::Elem>>, Vec<usize>) {
    debug_assert!(s.is_field());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..width {
        let Some(p) = (r..rows.len()).find(|&i| !s.is_zero(&rows[i][c])) else {
            continue;
        };
        rows.swap(r, p);
        let inv = s.inv(&rows[r][c]).expect("nonzero field element is invertible");
        for v in rows[r].iter_mut() {
            *v = s.mul(v, &inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || s.is_zero(&row[c]) {
                continue;
            }
            let f = row[c].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                if !s.is_zero(pv) {
                    *v = s.sub(v, &s.mul(&f, pv));
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    (rows, pivots)
}

/// Whether `x` lies in the span of rows already in reduced echelon form.
pub fn rref_contains<S: Scalars>(s: &S, basis: &[Vec<S::Elem>], x: &[S::Elem]) -> bool {
    let mut x = x.to_vec();
    for row in basis {
        let Some(c) = row.iter().position(|v| !s.is_zero(v)) else {
            continue;
        };
        if s.is_zero(&x[c]) {
            continue;
        }
        let f = x[c].clone();
        for (v, rv) in x.iter_mut().zip(row) {
            if !s.is_zero(rv) {
                *v = s.sub(v, &s.mul(&f, rv));
            }
        }
    }
    x.iter().all(|v| s.is_zero(v))
}

/// Basis of `{x : x * m = 0}` in reduced echelon form.
pub fn left_kernel<S: Scalars>(s: &S, m: &Mat<S::Elem>) -> Vec<Vec<S::Elem>> {
    let (rows, cols) = (m.rows(), m.cols());
    // Eliminate on [m | I]; rows whose m-part vanishes carry kernel vectors.
    let aug: Vec<Vec<S::Elem>> = (0..rows)
        .map(|i| {
            let mut r = m.row(i).to_vec();
            r.extend((0..rows).map(|j| if i == j { s.one() } else { s.zero() }));
            r
        })
        .collect();
    let (red, pivots) = rref(s, aug, cols + rows);
    let gens: Vec<Vec<S::Elem>> = red
        .into_iter()
        .zip(pivots)
        .filter(|&(_, p)| p >= cols)
        .map(|(r, _)| r[cols..].to_vec())
        .collect();
    rref(s, gens, rows).0
}

/// Solves `t * m = v` for `t`, if a solution exists.
pub fn solve_left<S: Scalars>(s: &S, m: &Mat<S::Elem>, v: &[S::Elem]) -> Option<Vec<S::Elem>> {
    // Kernel of [m; -v] with last coordinate 1.
    let mut rows = m.to_rows();
    rows.push(v.iter().map(|x| s.neg(x)).collect());
    let aug = Mat::from_rows(rows, m.cols());
    let ker = left_kernel(s, &aug);
    let last = m.rows();
    let sol = ker.iter().find(|k| !s.is_zero(&k[last]))?;
    let inv = s.inv(&sol[last])?;
    Some(sol[..last].iter().map(|x| s.mul(x, &inv)).collect())
}
