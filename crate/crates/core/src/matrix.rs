//! Exact linear algebra helpers: integer determinants, rational solves and
//! ranks, and the Smith normal form with unimodular transforms.

use crate::scalar::Scalar;
use num_rational::Ratio;
use num_traits::{One, Zero};

/// Determinant of an integer matrix by fraction-free (Bareiss) elimination
/// with row pivoting. All intermediate divisions are exact.
pub fn det_int<I: Scalar>(m: &[Vec<I>]) -> I {
    let n = m.len();
    if n == 0 {
        return I::one();
    }
    let mut a: Vec<Vec<I>> = m.to_vec();
    let mut sign = I::one();
    let mut prev = I::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&p| !a[p][k].is_zero()) {
                Some(p) => {
                    a.swap(k, p);
                    sign = -sign;
                }
                None => return I::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[i][j].clone() * a[k][k].clone() - a[i][k].clone() * a[k][j].clone();
                let (q, r) = num.div_rem(&prev);
                debug_assert!(r.is_zero());
                a[i][j] = q;
            }
            a[i][k] = I::zero();
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

/// Solves the square rational system `a x = b` by Gaussian elimination.
/// Returns `None` when `a` is singular.
pub fn solve_rational<I: Scalar>(a: &[Vec<Ratio<I>>], b: &[Ratio<I>]) -> Option<Vec<Ratio<I>>> {
    let n = a.len();
    debug_assert_eq!(b.len(), n);
    let mut m: Vec<Vec<Ratio<I>>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    for k in 0..n {
        let p = (k..n).find(|&p| !m[p][k].is_zero())?;
        m.swap(k, p);
        let pivot = m[k][k].clone();
        for j in k..=n {
            m[k][j] = m[k][j].clone() / pivot.clone();
        }
        for i in 0..n {
            if i != k && !m[i][k].is_zero() {
                let f = m[i][k].clone();
                for j in k..=n {
                    let sub = f.clone() * m[k][j].clone();
                    m[i][j] = m[i][j].clone() - sub;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n].clone()).collect())
}

/// Rank of a rational matrix (rows may be any length-consistent set).
pub fn rank_rational<I: Scalar>(rows: &[Vec<Ratio<I>>]) -> usize {
    let mut m: Vec<Vec<Ratio<I>>> = rows.to_vec();
    let nrows = m.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = m[0].len();
    let mut rank = 0;
    let mut col = 0;
    while rank < nrows && col < ncols {
        match (rank..nrows).find(|&p| !m[p][col].is_zero()) {
            None => {
                col += 1;
                continue;
            }
            Some(p) => {
                m.swap(rank, p);
                let pivot = m[rank][col].clone();
                for j in col..ncols {
                    m[rank][j] = m[rank][j].clone() / pivot.clone();
                }
                for i in 0..nrows {
                    if i != rank && !m[i][col].is_zero() {
                        let f = m[i][col].clone();
                        for j in col..ncols {
                            let sub = f.clone() * m[rank][j].clone();
                            m[i][j] = m[i][j].clone() - sub;
                        }
                    }
                }
                rank += 1;
                col += 1;
            }
        }
    }
    rank
}

/// Inverse of a square rational matrix, or `None` if singular.
pub fn inverse_rational<I: Scalar>(a: &[Vec<Ratio<I>>]) -> Option<Vec<Vec<Ratio<I>>>> {
    let n = a.len();
    let mut cols = Vec::with_capacity(n);
    for j in 0..n {
        let e: Vec<Ratio<I>> = (0..n)
            .map(|i| if i == j { Ratio::one() } else { Ratio::zero() })
            .collect();
        cols.push(solve_rational(a, &e)?);
    }
    // cols[j] is the j-th column of the inverse.
    Some(
        (0..n)
            .map(|i| (0..n).map(|j| cols[j][i].clone()).collect())
            .collect(),
    )
}

/// Smith normal form `d = u * m * v` with `u`, `v` unimodular.
pub struct Snf<I> {
    pub d: Vec<Vec<I>>,
    #[allow(dead_code)]
    pub u: Vec<Vec<I>>,
    pub v: Vec<Vec<I>>,
}

impl<I: Scalar> Snf<I> {
    /// Diagonal entries `d_1 | d_2 | ...`, including any zeros.
    pub fn diagonal(&self) -> Vec<I> {
        (0..self.d.len().min(self.d.first().map_or(0, Vec::len)))
            .map(|i| self.d[i][i].clone())
            .collect()
    }
}

fn identity<I: Scalar>(n: usize) -> Vec<Vec<I>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { I::one() } else { I::zero() })
                .collect()
        })
        .collect()
}

fn row_op<I: Scalar>(m: &mut [Vec<I>], dst: usize, src: usize, c: &I) {
    let src_row = m[src].clone();
    for (dj, sj) in m[dst].iter_mut().zip(src_row) {
        *dj = dj.clone() + c.clone() * sj;
    }
}

fn col_op<I: Scalar>(m: &mut [Vec<I>], dst: usize, src: usize, c: &I) {
    for row in m.iter_mut() {
        let s = row[src].clone();
        row[dst] = row[dst].clone() + c.clone() * s;
    }
}

/// Smith normal form of an integer matrix, with transforms.
pub fn smith_normal_form<I: Scalar>(m: &[Vec<I>]) -> Snf<I> {
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut a: Vec<Vec<I>> = m.to_vec();
    let mut u = identity::<I>(nrows);
    let mut v = identity::<I>(ncols);

    let rank_bound = nrows.min(ncols);
    for k in 0..rank_bound {
        loop {
            // Pivot: smallest nonzero absolute value in the trailing block.
            let mut pivot: Option<(usize, usize)> = None;
            for i in k..nrows {
                for j in k..ncols {
                    if !a[i][j].is_zero()
                        && pivot
                            .as_ref()
                            .is_none_or(|&(pi, pj)| a[i][j].abs() < a[pi][pj].abs())
                    {
                        pivot = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = pivot else {
                return Snf { d: a, u, v };
            };
            if pi != k {
                a.swap(k, pi);
                u.swap(k, pi);
            }
            if pj != k {
                for row in a.iter_mut() {
                    row.swap(k, pj);
                }
                for row in v.iter_mut() {
                    row.swap(k, pj);
                }
            }
            // Reduce the pivot row and column.
            let mut clean = true;
            for i in k + 1..nrows {
                if !a[i][k].is_zero() {
                    let q = -(a[i][k].div_floor(&a[k][k]));
                    row_op(&mut a, i, k, &q);
                    row_op(&mut u, i, k, &q);
                    if !a[i][k].is_zero() {
                        clean = false;
                    }
                }
            }
            for j in k + 1..ncols {
                if !a[k][j].is_zero() {
                    let q = -(a[k][j].div_floor(&a[k][k]));
                    col_op(&mut a, j, k, &q);
                    col_op(&mut v, j, k, &q);
                    if !a[k][j].is_zero() {
                        clean = false;
                    }
                }
            }
            if !clean {
                continue;
            }
            // Pivot must divide the rest of the block; if not, fold the
            // offending row in and start over.
            let offender = (k + 1..nrows)
                .flat_map(|i| (k + 1..ncols).map(move |j| (i, j)))
                .find(|&(i, j)| !a[i][j].is_rem_zero(&a[k][k]));
            match offender {
                Some((i, _)) => {
                    let one = I::one();
                    row_op(&mut a, k, i, &one);
                    row_op(&mut u, k, i, &one);
                }
                None => break,
            }
        }
        if a[k][k].is_negative() {
            for row in a.iter_mut() {
                row[k] = -row[k].clone();
            }
            for row in v.iter_mut() {
                row[k] = -row[k].clone();
            }
        }
    }
    Snf { d: a, u, v }
}

trait RemZero {
    fn is_rem_zero(&self, d: &Self) -> bool;
}

impl<I: Scalar> RemZero for I {
    fn is_rem_zero(&self, d: &Self) -> bool {
        self.mod_floor(d).is_zero()
    }
}

/// Matrix product over the scalar.
#[cfg(test)]
pub fn mat_mul<I: Scalar>(a: &[Vec<I>], b: &[Vec<I>]) -> Vec<Vec<I>> {
    let n = a.len();
    let inner = b.len();
    let m = b.first().map_or(0, Vec::len);
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| {
                    let mut s = I::zero();
                    for k in 0..inner {
                        s += a[i][k].clone() * b[k][j].clone();
                    }
                    s
                })
                .collect()
        })
        .collect()
}
