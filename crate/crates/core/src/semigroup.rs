//! Saturation of affine semigroups and normality of orbit polytopes.
//!
//! `saturation_check` enumerates the lattice points of (group generated) cap
//! (rational cone generated) up to a degree bound and looks for one that is
//! not a nonnegative integer combination of the generators. When the cone is
//! pointed the representability search is exact (a strictly positive
//! functional bounds the coefficients); otherwise it is a bounded closure
//! search, and a clean result means saturated up to the bound.

use crate::lp;
use crate::matrix;
use crate::scalar::Scalar;
use crate::tilings::box_points;
use num_rational::Ratio;
use num_traits::Zero;
use std::collections::HashSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SemigroupError {
    #[error("generator list is empty")]
    ZeroGenerators,
    #[error("generators have inconsistent dimensions")]
    MixedDimensions,
    #[error("character differences do not generate the full lattice")]
    PreconditionFailed,
}

/// Result of a bounded saturation check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SaturationOutcome<I: Scalar> {
    /// No missing point up to the degree bound.
    Saturated,
    /// The first point (by degree, then lexicographically) of the group cap
    /// cone that is not a nonnegative integer combination of the generators.
    Witness(Vec<I>),
}

/// Per-vertex saturation result of an orbit polytope.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexReport<I: Scalar> {
    pub vertex: Vec<I>,
    pub outcome: SaturationOutcome<I>,
}

/// Normality report: normal iff every hull vertex has a saturated local
/// semigroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalityReport<I: Scalar> {
    pub vertex_reports: Vec<VertexReport<I>>,
    pub normal: bool,
}

fn l1_degree<I: Scalar>(x: &[I]) -> I {
    x.iter().fold(I::zero(), |acc, c| acc + c.abs())
}

/// Membership of `x` in the subgroup of `Z^d` generated by the rows.
struct GroupMembership<I: Scalar> {
    v: Vec<Vec<I>>,
    diag: Vec<I>,
    rank: usize,
    dim: usize,
}

impl<I: Scalar> GroupMembership<I> {
    fn new(generators: &[Vec<I>], dim: usize) -> Self {
        let snf = matrix::smith_normal_form(generators);
        let diag = snf.diagonal();
        let rank = diag.iter().filter(|d| !d.is_zero()).count();
        GroupMembership {
            v: snf.v,
            diag,
            rank,
            dim,
        }
    }

    fn contains(&self, x: &[I]) -> bool {
        // x in the row lattice iff x * V = c * D for integer c.
        let y: Vec<I> = (0..self.dim)
            .map(|j| {
                let mut s = I::zero();
                for i in 0..self.dim {
                    s += x[i].clone() * self.v[i][j].clone();
                }
                s
            })
            .collect();
        for (j, yj) in y.iter().enumerate() {
            if j < self.rank {
                if !(yj.clone() % self.diag[j].clone()).is_zero() {
                    return false;
                }
            } else if !yj.is_zero() {
                return false;
            }
        }
        true
    }
}

/// Exact representability when a strictly positive functional exists: each
/// generator consumes at least one unit of `h . x`, so the search tree has
/// exact depth bound `h . x`.
fn representable_pointed<I: Scalar>(
    x: &[I],
    generators: &[Vec<I>],
    h: &[Ratio<I>],
    failed: &mut HashSet<Vec<I>>,
) -> bool {
    if x.iter().all(Zero::is_zero) {
        return true;
    }
    if failed.contains(x) {
        return false;
    }
    let hx: Ratio<I> = h
        .iter()
        .zip(x)
        .map(|(a, c)| a.clone() * Ratio::from_integer(c.clone()))
        .sum();
    for g in generators {
        let hg: Ratio<I> = h
            .iter()
            .zip(g)
            .map(|(a, c)| a.clone() * Ratio::from_integer(c.clone()))
            .sum();
        if hg > hx {
            continue;
        }
        let rest: Vec<I> = x
            .iter()
            .zip(g)
            .map(|(a, c)| a.clone() - c.clone())
            .collect();
        if representable_pointed(&rest, generators, h, failed) {
            return true;
        }
    }
    failed.insert(x.to_vec());
    false
}

/// Bounded closure of the semigroup: all sums reachable without the
/// 1-degree of a partial sum exceeding the cap.
fn reachable_set<I: Scalar>(generators: &[Vec<I>], dim: usize, cap: &I) -> HashSet<Vec<I>> {
    let mut seen: HashSet<Vec<I>> = HashSet::new();
    let mut frontier: Vec<Vec<I>> = vec![vec![I::zero(); dim]];
    seen.insert(frontier[0].clone());
    while let Some(p) = frontier.pop() {
        for g in generators {
            let q: Vec<I> = p
                .iter()
                .zip(g)
                .map(|(a, c)| a.clone() + c.clone())
                .collect();
            if &l1_degree(&q) <= cap && seen.insert(q.clone()) {
                frontier.push(q);
            }
        }
    }
    seen
}

/// Checks saturation of the semigroup generated by `generators` inside its
/// group-cone intersection, up to the 1-degree bound.
pub fn saturation_check<I: Scalar>(
    generators: &[Vec<I>],
    degree_bound: u32,
) -> Result<SaturationOutcome<I>, SemigroupError> {
    if generators.is_empty() {
        return Err(SemigroupError::ZeroGenerators);
    }
    let dim = generators[0].len();
    if generators.iter().any(|g| g.len() != dim) {
        return Err(SemigroupError::MixedDimensions);
    }
    let nonzero: Vec<Vec<I>> = generators
        .iter()
        .filter(|g| !g.iter().all(Zero::is_zero))
        .cloned()
        .collect();
    if nonzero.is_empty() {
        return Ok(SaturationOutcome::Saturated);
    }
    let membership = GroupMembership::new(&nonzero, dim);
    let functional = lp::strict_positive_functional(&nonzero, dim);
    let reachable = if functional.is_none() {
        let max_deg = nonzero
            .iter()
            .map(|g| l1_degree(g))
            .max()
            .expect("nonzero generators exist");
        let cap = I::from(degree_bound as i32) + I::from(2) * max_deg;
        Some(reachable_set(&nonzero, dim, &cap))
    } else {
        None
    };
    let mut failed: HashSet<Vec<I>> = HashSet::new();

    // Candidates in increasing (degree, lex) order.
    let bound = I::from(degree_bound as i32);
    let lo: Vec<I> = vec![-bound.clone(); dim];
    let hi: Vec<I> = vec![bound.clone(); dim];
    let mut candidates: Vec<Vec<I>> = box_points(&lo, &hi)
        .into_iter()
        .map(|v| v.0)
        .filter(|x| l1_degree(x) <= bound)
        .collect();
    candidates.sort_by_key(|x| (l1_degree(x), x.clone()));

    for x in candidates {
        if !membership.contains(&x) || !lp::in_rational_cone(&x, &nonzero) {
            continue;
        }
        let representable = match (&functional, &reachable) {
            (Some(h), _) => representable_pointed(&x, &nonzero, h, &mut failed),
            (None, Some(set)) => set.contains(&x),
            (None, None) => unreachable!(),
        };
        if !representable {
            return Ok(SaturationOutcome::Witness(x));
        }
    }
    Ok(SaturationOutcome::Saturated)
}

/// Is `chars[i]` a vertex of the convex hull of the characters?
fn is_hull_vertex<I: Scalar>(chars: &[Vec<I>], i: usize) -> bool {
    let d = chars[i].len();
    let others: Vec<&Vec<I>> = chars
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != i)
        .map(|(_, c)| c)
        .collect();
    if others.is_empty() {
        return true;
    }
    let k = others.len();
    // Infeasibility of: q >= 0, sum q = 1, sum q[j] * others[j] = chars[i].
    let mut cs: Vec<lp::Constraint<I>> = Vec::new();
    cs.push(lp::Constraint::eq(
        vec![Ratio::from_integer(I::from(1)); k],
        Ratio::from_integer(I::from(1)),
    ));
    for row in 0..d {
        let coeffs: Vec<Ratio<I>> = others
            .iter()
            .map(|c| Ratio::from_integer(c[row].clone()))
            .collect();
        cs.push(lp::Constraint::eq(
            coeffs,
            Ratio::from_integer(chars[i][row].clone()),
        ));
    }
    for j in 0..k {
        let mut coeffs = vec![Ratio::zero(); k];
        coeffs[j] = -Ratio::from_integer(I::from(1));
        cs.push(lp::Constraint::le(coeffs, Ratio::zero()));
    }
    lp::feasible_point(k, &cs).is_none()
}

/// Normality of the orbit polytope of a finite character list: requires the
/// pairwise differences to generate the full lattice, finds the hull
/// vertices exactly, and runs a saturation check on the edge semigroup at
/// every vertex.
pub fn orbit_polytope_normality<I: Scalar>(
    chars: &[Vec<I>],
    degree_bound: u32,
) -> Result<NormalityReport<I>, SemigroupError> {
    if chars.is_empty() {
        return Err(SemigroupError::ZeroGenerators);
    }
    let d = chars[0].len();
    if chars.iter().any(|c| c.len() != d) {
        return Err(SemigroupError::MixedDimensions);
    }
    // Differences must generate Z^d.
    let diffs: Vec<Vec<I>> = chars[1..]
        .iter()
        .map(|c| {
            c.iter()
                .zip(&chars[0])
                .map(|(a, b)| a.clone() - b.clone())
                .collect()
        })
        .collect();
    let snf = matrix::smith_normal_form(&diffs);
    let diag = snf.diagonal();
    let rank = diag.iter().filter(|x| !x.is_zero()).count();
    let full = rank == d && diag.iter().take(rank).all(|x| x.abs().to_i64() == Some(1));
    if !full {
        return Err(SemigroupError::PreconditionFailed);
    }
    let mut vertex_reports = Vec::new();
    let mut normal = true;
    for i in 0..chars.len() {
        if !is_hull_vertex(chars, i) {
            continue;
        }
        let gens: Vec<Vec<I>> = chars
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, c)| {
                c.iter()
                    .zip(&chars[i])
                    .map(|(a, b)| a.clone() - b.clone())
                    .collect()
            })
            .collect();
        let outcome = saturation_check(&gens, degree_bound)?;
        if matches!(outcome, SaturationOutcome::Witness(_)) {
            normal = false;
        }
        vertex_reports.push(VertexReport {
            vertex: chars[i].clone(),
            outcome,
        });
    }
    Ok(NormalityReport {
        vertex_reports,
        normal,
    })
}
