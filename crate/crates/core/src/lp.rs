//! Exact linear feasibility over the rationals by Fourier-Motzkin
//! elimination, with back-substitution to produce a concrete witness point.

use crate::scalar::Scalar;
use num_rational::Ratio;
use num_traits::{Signed, Zero};
use std::collections::BTreeSet;

/// One constraint `coeffs . x (<= | =) rhs`.
#[derive(Debug, Clone)]
pub(crate) struct Constraint<I: Scalar> {
    pub coeffs: Vec<Ratio<I>>,
    pub rhs: Ratio<I>,
    pub equality: bool,
}

impl<I: Scalar> Constraint<I> {
    pub fn le(coeffs: Vec<Ratio<I>>, rhs: Ratio<I>) -> Self {
        Constraint {
            coeffs,
            rhs,
            equality: false,
        }
    }

    pub fn eq(coeffs: Vec<Ratio<I>>, rhs: Ratio<I>) -> Self {
        Constraint {
            coeffs,
            rhs,
            equality: true,
        }
    }
}

type Row<I> = (Vec<Ratio<I>>, Ratio<I>);

fn normalize<I: Scalar>(mut row: Row<I>) -> Row<I> {
    if let Some(scale) = row.0.iter().find(|c| !c.is_zero()).map(|c| c.clone().abs()) {
        for c in &mut row.0 {
            *c = c.clone() / scale.clone();
        }
        row.1 = row.1 / scale;
    }
    row
}

/// Returns a rational point satisfying all constraints, or `None` when the
/// system is infeasible.
pub(crate) fn feasible_point<I: Scalar>(
    nvars: usize,
    constraints: &[Constraint<I>],
) -> Option<Vec<Ratio<I>>> {
    // Equalities become inequality pairs.
    let mut rows: Vec<Row<I>> = Vec::new();
    for c in constraints {
        debug_assert_eq!(c.coeffs.len(), nvars);
        rows.push((c.coeffs.clone(), c.rhs.clone()));
        if c.equality {
            rows.push((
                c.coeffs.iter().map(|x| -x.clone()).collect(),
                -c.rhs.clone(),
            ));
        }
    }
    // Eliminate variables from the last to the first, remembering the rows
    // that mention each variable for back-substitution.
    let mut levels: Vec<Vec<Row<I>>> = Vec::with_capacity(nvars);
    for var in (0..nvars).rev() {
        let mut uppers: Vec<Row<I>> = Vec::new();
        let mut lowers: Vec<Row<I>> = Vec::new();
        let mut pass: Vec<Row<I>> = Vec::new();
        for row in rows {
            let c = row.0[var].clone();
            if c.is_zero() {
                pass.push(row);
            } else if c.is_positive() {
                uppers.push(row);
            } else {
                lowers.push(row);
            }
        }
        let mut next: BTreeSet<Row<I>> = BTreeSet::new();
        for row in pass {
            let n = normalize(row);
            if n.0.iter().all(Ratio::is_zero) {
                if n.1.is_negative() {
                    return None;
                }
            } else {
                next.insert(n);
            }
        }
        // Combine each (lower, upper) pair to cancel the variable.
        for up in &uppers {
            for lo in &lowers {
                let a = up.0[var].clone();
                let b = -lo.0[var].clone();
                // b*up + a*lo has zero coefficient on var.
                let coeffs: Vec<Ratio<I>> =
                    up.0.iter()
                        .zip(&lo.0)
                        .map(|(u, l)| b.clone() * u.clone() + a.clone() * l.clone())
                        .collect();
                let rhs = b.clone() * up.1.clone() + a.clone() * lo.1.clone();
                let n = normalize((coeffs, rhs));
                if n.0.iter().all(Ratio::is_zero) {
                    if n.1.is_negative() {
                        return None;
                    }
                } else {
                    next.insert(n);
                }
            }
        }
        let mut bounds = uppers;
        bounds.extend(lowers);
        levels.push(bounds);
        rows = next.into_iter().collect();
    }
    for (coeffs, rhs) in &rows {
        debug_assert!(coeffs.iter().all(Ratio::is_zero));
        if rhs.is_negative() {
            return None;
        }
    }
    // Back-substitute in increasing variable order; levels were pushed in
    // decreasing order.
    let mut point: Vec<Ratio<I>> = vec![Ratio::zero(); nvars];
    for var in 0..nvars {
        let bounds = &levels[nvars - 1 - var];
        let mut lower: Option<Ratio<I>> = None;
        let mut upper: Option<Ratio<I>> = None;
        for (coeffs, rhs) in bounds {
            let mut rest = rhs.clone();
            for (i, c) in coeffs.iter().enumerate() {
                if i != var && !c.is_zero() {
                    debug_assert!(i < var, "bound row mentions an uneliminated variable");
                    rest -= c.clone() * point[i].clone();
                }
            }
            let c = coeffs[var].clone();
            let bound = rest / c.clone();
            if c.is_positive() {
                // x_var <= bound
                if upper.as_ref().is_none_or(|u| bound < *u) {
                    upper = Some(bound);
                }
            } else {
                // x_var >= bound
                if lower.as_ref().is_none_or(|l| bound > *l) {
                    lower = Some(bound);
                }
            }
        }
        point[var] = match (lower, upper) {
            (Some(l), Some(u)) => {
                debug_assert!(l <= u, "back-substitution hit an empty interval");
                (l + u) / Ratio::from_integer(I::from(2))
            }
            (Some(l), None) => l,
            (None, Some(u)) => u,
            (None, None) => Ratio::zero(),
        };
    }
    Some(point)
}

/// Is `x` a nonnegative rational combination of the generators?
pub(crate) fn in_rational_cone<I: Scalar>(x: &[I], generators: &[Vec<I>]) -> bool {
    let d = x.len();
    let k = generators.len();
    let mut cs: Vec<Constraint<I>> = Vec::with_capacity(d + k);
    for row in 0..d {
        let coeffs: Vec<Ratio<I>> = generators
            .iter()
            .map(|g| Ratio::from_integer(g[row].clone()))
            .collect();
        cs.push(Constraint::eq(coeffs, Ratio::from_integer(x[row].clone())));
    }
    for i in 0..k {
        let mut coeffs = vec![Ratio::zero(); k];
        coeffs[i] = -Ratio::from_integer(I::one());
        cs.push(Constraint::le(coeffs, Ratio::zero()));
    }
    feasible_point(k, &cs).is_some()
}

/// A functional `h` with `h . g >= 1` for every generator, if one exists;
/// its existence certifies that the generated cone is pointed.
pub(crate) fn strict_positive_functional<I: Scalar>(
    generators: &[Vec<I>],
    dim: usize,
) -> Option<Vec<Ratio<I>>> {
    let cs: Vec<Constraint<I>> = generators
        .iter()
        .map(|g| {
            Constraint::le(
                g.iter().map(|c| -Ratio::from_integer(c.clone())).collect(),
                -Ratio::from_integer(I::one()),
            )
        })
        .collect();
    feasible_point(dim, &cs)
}
