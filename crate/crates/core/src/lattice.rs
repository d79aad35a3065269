//! Gram forms on `Z^r` and exact closest-vector computations.
//!
//! A [`GramForm`] is a symmetric positive-definite integer matrix `B`; the
//! squared distance between rational points is `B(x-y, x-y)`. The central
//! operation is [`stations`], the full set of lattice points closest to a
//! rational point, computed by exact ellipsoid enumeration from a rational
//! `L D L^T` decomposition of `B`. No floating point, no tolerances.

use crate::matrix;
use crate::scalar::{round_to_int, Scalar};
use crate::Int;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LatticeError {
    #[error("dimension must be positive")]
    EmptyDimension,
    #[error("matrix is not square at row {0}")]
    NotSquare(usize),
    #[error("matrix is not symmetric at ({0},{1})")]
    NotSymmetric(usize, usize),
    #[error("not positive definite: leading {k}x{k} minor is {minor}")]
    NotPositiveDefinite { k: usize, minor: String },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("no global minimum: the linear coefficient requires n > 0")]
    NonPositiveN,
}

/// A lattice point, coordinates in `Z^r`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticeVector<I: Scalar = Int>(pub Vec<I>);

/// A rational point of the ambient space.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RationalVector<I: Scalar = Int>(pub Vec<Ratio<I>>);

/// An integer covector `B(lambda, -)`, i.e. the image of a lattice vector
/// under the form.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DualCovector<I: Scalar = Int>(pub Vec<I>);

impl<I: Scalar> LatticeVector<I> {
    pub fn zero(r: usize) -> Self {
        LatticeVector(vec![I::zero(); r])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn to_rational(&self) -> RationalVector<I> {
        RationalVector(
            self.0
                .iter()
                .map(|c| Ratio::from_integer(c.clone()))
                .collect(),
        )
    }

    pub fn neg(&self) -> Self {
        LatticeVector(self.0.iter().map(|c| -c.clone()).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        LatticeVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        LatticeVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        )
    }

    pub fn from_i32(coords: &[i32]) -> Self {
        LatticeVector(coords.iter().map(|&c| I::from(c)).collect())
    }
}

impl<I: Scalar> RationalVector<I> {
    pub fn zero(r: usize) -> Self {
        RationalVector(vec![Ratio::zero(); r])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn neg(&self) -> Self {
        RationalVector(self.0.iter().map(|c| -c.clone()).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        RationalVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        RationalVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        )
    }

    pub fn add_lattice(&self, other: &LatticeVector<I>) -> Self {
        RationalVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.clone() + Ratio::from_integer(b.clone()))
                .collect(),
        )
    }

    pub fn scale(&self, c: &Ratio<I>) -> Self {
        RationalVector(self.0.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Componentwise nearest lattice point, ties away from zero.
    pub fn round(&self) -> LatticeVector<I> {
        LatticeVector(self.0.iter().map(round_to_int).collect())
    }

    /// Exact integer point, if every coordinate is integral.
    pub fn as_lattice(&self) -> Option<LatticeVector<I>> {
        if self.0.iter().all(|c| c.denom().is_one()) {
            Some(LatticeVector(
                self.0.iter().map(|c| c.numer().clone()).collect(),
            ))
        } else {
            None
        }
    }
}

impl<I: Scalar> From<&LatticeVector<I>> for RationalVector<I> {
    fn from(v: &LatticeVector<I>) -> Self {
        v.to_rational()
    }
}

/// Symmetric positive-definite integer inner product on `Z^r`.
///
/// Construction validates symmetry and positive-definiteness exactly (all
/// leading principal minors strictly positive) and caches the rational
/// `L D L^T` decomposition used by the ellipsoid enumerator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GramForm<I: Scalar = Int> {
    r: usize,
    entries: Vec<Vec<I>>,
    ldl_lower: Vec<Vec<Ratio<I>>>,
    ldl_diag: Vec<Ratio<I>>,
}

impl<I: Scalar> GramForm<I> {
    /// Validates and builds a Gram form. This is the single entry point for
    /// form construction; all downstream geometry assumes it succeeded.
    pub fn new(entries: Vec<Vec<I>>) -> Result<Self, LatticeError> {
        let r = entries.len();
        if r == 0 {
            return Err(LatticeError::EmptyDimension);
        }
        for (i, row) in entries.iter().enumerate() {
            if row.len() != r {
                return Err(LatticeError::NotSquare(i));
            }
        }
        for i in 0..r {
            for j in i + 1..r {
                if entries[i][j] != entries[j][i] {
                    return Err(LatticeError::NotSymmetric(i, j));
                }
            }
        }
        // L D L^T by rational elimination; the k-th leading minor is the
        // product of the first k pivots, so a non-positive pivot pins down
        // the failing minor exactly.
        let mut lower: Vec<Vec<Ratio<I>>> = (0..r).map(|_| vec![Ratio::zero(); r]).collect();
        let mut diag: Vec<Ratio<I>> = vec![Ratio::zero(); r];
        let mut minor = Ratio::<I>::one();
        for j in 0..r {
            let mut d = Ratio::from_integer(entries[j][j].clone());
            for k in 0..j {
                d -= lower[j][k].clone() * lower[j][k].clone() * diag[k].clone();
            }
            minor *= d.clone();
            if !d.is_positive() {
                debug_assert!(minor.denom().is_one());
                return Err(LatticeError::NotPositiveDefinite {
                    k: j + 1,
                    minor: minor.numer().to_string(),
                });
            }
            diag[j] = d;
            lower[j][j] = Ratio::one();
            for i in j + 1..r {
                let mut x = Ratio::from_integer(entries[i][j].clone());
                for k in 0..j {
                    x -= lower[i][k].clone() * lower[j][k].clone() * diag[k].clone();
                }
                lower[i][j] = x / diag[j].clone();
            }
        }
        Ok(GramForm {
            r,
            entries,
            ldl_lower: lower,
            ldl_diag: diag,
        })
    }

    pub fn from_i32(entries: &[&[i32]]) -> Result<Self, LatticeError> {
        Self::new(
            entries
                .iter()
                .map(|row| row.iter().map(|&x| I::from(x)).collect())
                .collect(),
        )
    }

    pub fn rank(&self) -> usize {
        self.r
    }

    pub fn entries(&self) -> &Vec<Vec<I>> {
        &self.entries
    }

    pub fn det(&self) -> I {
        matrix::det_int(&self.entries)
    }

    fn check_dim(&self, got: usize) -> Result<(), LatticeError> {
        if got != self.r {
            Err(LatticeError::DimensionMismatch {
                expected: self.r,
                got,
            })
        } else {
            Ok(())
        }
    }

    /// Exact pairing `u^T B v` of rational points.
    pub fn pairing(
        &self,
        u: &RationalVector<I>,
        v: &RationalVector<I>,
    ) -> Result<Ratio<I>, LatticeError> {
        self.check_dim(u.dim())?;
        self.check_dim(v.dim())?;
        let mut acc = Ratio::zero();
        for i in 0..self.r {
            for j in 0..self.r {
                acc += u.0[i].clone()
                    * Ratio::from_integer(self.entries[i][j].clone())
                    * v.0[j].clone();
            }
        }
        Ok(acc)
    }

    /// Integer pairing `u^T B v` of lattice points.
    pub fn pairing_int(
        &self,
        u: &LatticeVector<I>,
        v: &LatticeVector<I>,
    ) -> Result<I, LatticeError> {
        self.check_dim(u.dim())?;
        self.check_dim(v.dim())?;
        let mut acc = I::zero();
        for i in 0..self.r {
            for j in 0..self.r {
                acc += u.0[i].clone() * self.entries[i][j].clone() * v.0[j].clone();
            }
        }
        Ok(acc)
    }

    /// Squared length `B(x, x)` of a rational point.
    pub fn norm2(&self, x: &RationalVector<I>) -> Result<Ratio<I>, LatticeError> {
        self.pairing(x, x)
    }

    /// Squared length `B(v, v)` of a lattice point.
    pub fn norm2_int(&self, v: &LatticeVector<I>) -> Result<I, LatticeError> {
        self.pairing_int(v, v)
    }

    /// The covector `lambda -> B(lambda)`, i.e. the matrix-vector product.
    pub fn dual_map(&self, lambda: &LatticeVector<I>) -> Result<DualCovector<I>, LatticeError> {
        self.check_dim(lambda.dim())?;
        Ok(DualCovector(
            (0..self.r)
                .map(|i| {
                    let mut s = I::zero();
                    for j in 0..self.r {
                        s += self.entries[i][j].clone() * lambda.0[j].clone();
                    }
                    s
                })
                .collect(),
        ))
    }

    fn ldl(&self) -> (&Vec<Vec<Ratio<I>>>, &Vec<Ratio<I>>) {
        (&self.ldl_lower, &self.ldl_diag)
    }
}

/// All lattice points `v` with `B(x - v, x - v) <= radius2`, enumerated
/// exactly through the `L D L^T` box bounds. Sorted lexicographically.
pub fn lattice_points_in_ellipsoid<I: Scalar>(
    b: &GramForm<I>,
    center: &RationalVector<I>,
    radius2: &Ratio<I>,
) -> Result<Vec<LatticeVector<I>>, LatticeError> {
    if center.dim() != b.rank() {
        return Err(LatticeError::DimensionMismatch {
            expected: b.rank(),
            got: center.dim(),
        });
    }
    if radius2.is_negative() {
        return Ok(Vec::new());
    }
    let (lower, diag) = b.ldl();
    let r = b.rank();
    let mut out = Vec::new();
    let mut coords: Vec<I> = vec![I::zero(); r];
    // Levels are processed from the last coordinate down; the quadratic form
    // splits as sum_i d_i (y_i + sum_{j>i} L_ji y_j)^2 with y = x - v.
    fn recurse<I: Scalar>(
        b: &GramForm<I>,
        lower: &[Vec<Ratio<I>>],
        diag: &[Ratio<I>],
        center: &RationalVector<I>,
        level: isize,
        used: Ratio<I>,
        radius2: &Ratio<I>,
        coords: &mut Vec<I>,
        out: &mut Vec<LatticeVector<I>>,
    ) {
        if level < 0 {
            out.push(LatticeVector(coords.clone()));
            return;
        }
        let i = level as usize;
        // m = x_i + sum_{j>i} L_ji (x_j - v_j): the real center at this level.
        let mut m = center.0[i].clone();
        for j in i + 1..b.rank() {
            let yj = center.0[j].clone() - Ratio::from_integer(coords[j].clone());
            m += lower[j][i].clone() * yj;
        }
        let budget = radius2.clone() - used.clone();
        // Walk outward from the nearest integer; the per-level term is
        // monotone in |v_i - m|, so the first failure in a direction ends it.
        let start = round_to_int(&m);
        for dir in 0..2 {
            let mut vi = if dir == 0 {
                start.clone()
            } else {
                start.clone() - I::one()
            };
            loop {
                let dev = Ratio::from_integer(vi.clone()) - m.clone();
                let term = diag[i].clone() * dev.clone() * dev;
                if term > budget {
                    break;
                }
                coords[i] = vi.clone();
                recurse(
                    b,
                    lower,
                    diag,
                    center,
                    level - 1,
                    used.clone() + term,
                    radius2,
                    coords,
                    out,
                );
                if dir == 0 {
                    vi += I::one();
                } else {
                    vi -= I::one();
                }
            }
        }
    }
    recurse(
        b,
        lower,
        diag,
        center,
        r as isize - 1,
        Ratio::zero(),
        radius2,
        &mut coords,
        &mut out,
    );
    out.sort();
    Ok(out)
}

/// The stations of `x`: the full set of lattice points at exactly minimal
/// `B`-distance from `x`, together with that squared distance.
pub fn stations_with_distance<I: Scalar>(
    b: &GramForm<I>,
    x: &RationalVector<I>,
) -> Result<(Vec<LatticeVector<I>>, Ratio<I>), LatticeError> {
    if x.dim() != b.rank() {
        return Err(LatticeError::DimensionMismatch {
            expected: b.rank(),
            got: x.dim(),
        });
    }
    let seed = x.round();
    let rho2 = b.norm2(&x.sub(&seed.to_rational()))?;
    let candidates = lattice_points_in_ellipsoid(b, x, &rho2)?;
    let mut best: Option<Ratio<I>> = None;
    let mut arg: Vec<LatticeVector<I>> = Vec::new();
    for v in candidates {
        let d = b.norm2(&x.sub(&v.to_rational()))?;
        match &best {
            Some(m) if d > *m => {}
            Some(m) if d == *m => arg.push(v),
            _ => {
                best = Some(d);
                arg = vec![v];
            }
        }
    }
    let dist = best.expect("ellipsoid around rounded point is never empty");
    arg.sort();
    Ok((arg, dist))
}

/// The stations of `x` (see [`stations_with_distance`]).
pub fn stations<I: Scalar>(
    b: &GramForm<I>,
    x: &RationalVector<I>,
) -> Result<Vec<LatticeVector<I>>, LatticeError> {
    stations_with_distance(b, x).map(|(s, _)| s)
}

/// Lattice minimizers of `f(mu) = (n/2) B(mu,mu) + B(mu,lambda)`.
///
/// Completing the square gives `f(mu) = (n/2) B(mu + lambda/n, mu + lambda/n)
/// - B(lambda,lambda)/(2n)`, so for `n > 0` the minimizer set is exactly
/// `stations(B, -lambda/n)`. For `n <= 0` there is no global minimum.
pub fn min_quadratic<I: Scalar>(
    b: &GramForm<I>,
    n: &I,
    lambda: &LatticeVector<I>,
) -> Result<Vec<LatticeVector<I>>, LatticeError> {
    if !n.is_positive() {
        return Err(LatticeError::NonPositiveN);
    }
    if lambda.dim() != b.rank() {
        return Err(LatticeError::DimensionMismatch {
            expected: b.rank(),
            got: lambda.dim(),
        });
    }
    let scale = -Ratio::new(I::one(), n.clone());
    let target = RationalVector(
        lambda
            .0
            .iter()
            .map(|c| Ratio::from_integer(c.clone()) * scale.clone())
            .collect(),
    );
    stations(b, &target)
}
