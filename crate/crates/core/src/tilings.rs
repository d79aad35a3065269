//! Delaunay cells, dual Voronoi faces, and windowed enumeration of the tiling.
//!
//! The top-dimensional Voronoi cell of the origin is cut out by the relevant
//! vectors; every other Voronoi face is a face of a translate of it, and the
//! dual Delaunay cell of a face is the intersection of the station sets of
//! its vertices. Everything is exact: vertices are rational, halfspaces have
//! integer normals and rational offsets, and all comparisons are decidable.

use crate::lattice::{
    lattice_points_in_ellipsoid, stations, GramForm, LatticeError, LatticeVector, RationalVector,
};
use crate::matrix;
use crate::scalar::Scalar;
use crate::Int;
use num_rational::Ratio;
use num_traits::Signed;
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TilingError {
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("cell is not realized as the station set of any point")]
    UnrealizedCell,
    #[error("window contains no top-dimensional cell")]
    WindowTooSmall,
}

/// Convex hull of the station set of some point, stored by its sorted
/// lattice vertices and exact affine dimension.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DelaunayCell<I: Scalar = Int> {
    vertices: Vec<LatticeVector<I>>,
    dim: usize,
}

impl<I: Scalar> DelaunayCell<I> {
    pub(crate) fn from_vertices(mut vertices: Vec<LatticeVector<I>>) -> Self {
        vertices.sort();
        vertices.dedup();
        let dim = affine_rank_lattice(&vertices);
        DelaunayCell { vertices, dim }
    }

    pub fn vertices(&self) -> &[LatticeVector<I>] {
        &self.vertices
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn translate(&self, t: &LatticeVector<I>) -> Self {
        DelaunayCell {
            vertices: self.vertices.iter().map(|v| v.add(t)).collect(),
            dim: self.dim,
        }
    }

    /// The translation-class representative: the cell shifted so its
    /// lexicographically smallest vertex is the origin.
    pub fn class_representative(&self) -> (Self, LatticeVector<I>) {
        let shift = self.vertices[0].clone();
        (self.translate(&shift.neg()), shift)
    }

    pub fn contains_vertex(&self, v: &LatticeVector<I>) -> bool {
        self.vertices.binary_search(v).is_ok()
    }

    /// Set inclusion of vertex sets.
    pub fn is_subcell_of(&self, other: &Self) -> bool {
        self.vertices.iter().all(|v| other.contains_vertex(v))
    }
}

/// Closed halfspace `normal . x <= offset` with integer normal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Halfspace<I: Scalar = Int> {
    pub normal: Vec<I>,
    pub offset: Ratio<I>,
}

impl<I: Scalar> Halfspace<I> {
    fn normalized(mut self) -> Self {
        let mut g = I::zero();
        for c in &self.normal {
            g = g.gcd(c);
        }
        if !g.is_zero() && !g.is_one() {
            for c in &mut self.normal {
                *c = c.clone() / g.clone();
            }
            self.offset = self.offset / Ratio::from_integer(g);
        }
        self
    }

    pub fn eval(&self, x: &RationalVector<I>) -> Ratio<I> {
        self.normal
            .iter()
            .zip(&x.0)
            .map(|(n, c)| Ratio::from_integer(n.clone()) * c.clone())
            .sum()
    }

    pub fn contains(&self, x: &RationalVector<I>) -> bool {
        self.eval(x) <= self.offset
    }

    pub fn is_tight_at(&self, x: &RationalVector<I>) -> bool {
        self.eval(x) == self.offset
    }

    fn translate(&self, t: &LatticeVector<I>) -> Self {
        let shift: Ratio<I> = self
            .normal
            .iter()
            .zip(&t.0)
            .map(|(n, c)| Ratio::from_integer(n.clone() * c.clone()))
            .sum();
        Halfspace {
            normal: self.normal.clone(),
            offset: self.offset.clone() + shift,
        }
    }

    fn reversed(&self) -> Self {
        Halfspace {
            normal: self.normal.iter().map(|c| -c.clone()).collect(),
            offset: -self.offset.clone(),
        }
    }
}

/// A face of the Voronoi tiling: the closed set of points whose stations
/// include the vertices of the dual Delaunay cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VoronoiFace<I: Scalar = Int> {
    pub dual: DelaunayCell<I>,
    pub vertices: Vec<RationalVector<I>>,
    pub halfspaces: Vec<Halfspace<I>>,
    pub dim: usize,
}

impl<I: Scalar> VoronoiFace<I> {
    pub fn translate(&self, t: &LatticeVector<I>) -> Self {
        VoronoiFace {
            dual: self.dual.translate(t),
            vertices: self.vertices.iter().map(|v| v.add_lattice(t)).collect(),
            halfspaces: self.halfspaces.iter().map(|h| h.translate(t)).collect(),
            dim: self.dim,
        }
    }

    /// Membership in the closed face.
    pub fn contains(&self, x: &RationalVector<I>) -> bool {
        self.halfspaces.iter().all(|h| h.contains(x))
    }

    /// Average of the face vertices: an exact relative-interior point.
    pub fn interior_point(&self) -> RationalVector<I> {
        let k = I::from(self.vertices.len() as i32);
        let mut acc = RationalVector::zero(self.vertices[0].dim());
        for v in &self.vertices {
            acc = acc.add(v);
        }
        acc.scale(&Ratio::new(I::one(), k))
    }
}

/// The nonzero lattice vectors whose bisectors support facets of the
/// top-dimensional Voronoi cell. Closed under negation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelevantVectorSet<I: Scalar = Int> {
    pub vectors: Vec<LatticeVector<I>>,
}

/// Per-coordinate inclusive integer box.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Window<I: Scalar = Int> {
    pub lo: Vec<I>,
    pub hi: Vec<I>,
}

impl<I: Scalar> Window<I> {
    pub fn new(lo: Vec<I>, hi: Vec<I>) -> Self {
        assert_eq!(lo.len(), hi.len());
        Window { lo, hi }
    }

    pub fn from_i32(ranges: &[(i32, i32)]) -> Self {
        Window {
            lo: ranges.iter().map(|&(a, _)| I::from(a)).collect(),
            hi: ranges.iter().map(|&(_, b)| I::from(b)).collect(),
        }
    }

    pub fn dims(&self) -> usize {
        self.lo.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lo.is_empty() || self.lo.iter().zip(&self.hi).any(|(a, b)| a > b)
    }

    pub fn contains(&self, v: &LatticeVector<I>) -> bool {
        v.0.len() == self.dims()
            && v.0
                .iter()
                .zip(self.lo.iter().zip(&self.hi))
                .all(|(c, (a, b))| a <= c && c <= b)
    }

    /// Grows the box by `pad` in every direction.
    pub fn padded(&self, pad: &I) -> Self {
        Window {
            lo: self.lo.iter().map(|a| a.clone() - pad.clone()).collect(),
            hi: self.hi.iter().map(|b| b.clone() + pad.clone()).collect(),
        }
    }
}

/// Translation class of Delaunay cells, keyed by the representative whose
/// lexicographically smallest vertex is the origin.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TranslationClass<I: Scalar = Int> {
    pub representative: DelaunayCell<I>,
    pub face: VoronoiFace<I>,
    pub members_in_window: usize,
}

/// Result of [`enumerate_cells`]: all dual pairs with Delaunay vertices in
/// the window, plus the translation-class quotient.
#[derive(Debug, Clone)]
pub struct CellComplex<I: Scalar = Int> {
    pub pairs: Vec<(DelaunayCell<I>, VoronoiFace<I>)>,
    pub classes: Vec<TranslationClass<I>>,
}

fn affine_rank_lattice<I: Scalar>(pts: &[LatticeVector<I>]) -> usize {
    if pts.len() <= 1 {
        return 0;
    }
    let base = &pts[0];
    let rows: Vec<Vec<Ratio<I>>> = pts[1..]
        .iter()
        .map(|p| p.sub(base).0.into_iter().map(Ratio::from_integer).collect())
        .collect();
    matrix::rank_rational(&rows)
}

fn affine_rank_rational<I: Scalar>(pts: &[RationalVector<I>]) -> usize {
    if pts.len() <= 1 {
        return 0;
    }
    let base = &pts[0];
    let rows: Vec<Vec<Ratio<I>>> = pts[1..].iter().map(|p| p.sub(base).0).collect();
    matrix::rank_rational(&rows)
}

/// The relevant vectors of `B`: scans the `2^r - 1` nonzero classes of
/// `Z^r / 2Z^r` and keeps the classes whose norm-minimal representatives form
/// a single `+-` pair.
pub fn relevant_vectors<I: Scalar>(b: &GramForm<I>) -> Result<RelevantVectorSet<I>, LatticeError> {
    let r = b.rank();
    assert!(r <= 16, "relevant-vector scan is limited to small rank");
    let mut out: Vec<LatticeVector<I>> = Vec::new();
    for mask in 1u32..(1u32 << r) {
        let rep = LatticeVector::<I>((0..r).map(|i| I::from(((mask >> i) & 1) as i32)).collect());
        // Minimal-norm members of the class rep + 2 Z^r: with w = rep + 2 mu,
        // B(w,w) = 4 B(mu + rep/2, mu + rep/2), so the minimizing mu are the
        // stations of -rep/2.
        let center = RationalVector::<I>(
            rep.0
                .iter()
                .map(|c| -Ratio::new(c.clone(), I::from(2)))
                .collect(),
        );
        let mins = stations(b, &center)?;
        if mins.len() == 2 {
            for mu in mins {
                let w = LatticeVector(
                    rep.0
                        .iter()
                        .zip(&mu.0)
                        .map(|(c, m)| c.clone() + I::from(2) * m.clone())
                        .collect(),
                );
                out.push(w);
            }
        }
    }
    out.sort();
    Ok(RelevantVectorSet { vectors: out })
}

/// Intersects `r`-subsets of halfspace boundaries and keeps the feasible
/// solutions: the exact vertex set of the (bounded) intersection.
fn vertices_from_halfspaces<I: Scalar>(
    halfspaces: &[Halfspace<I>],
    r: usize,
) -> Vec<RationalVector<I>> {
    let n = halfspaces.len();
    let mut found: BTreeSet<RationalVector<I>> = BTreeSet::new();
    if n < r {
        return Vec::new();
    }
    let mut idx: Vec<usize> = (0..r).collect();
    loop {
        let rows: Vec<Vec<Ratio<I>>> = idx
            .iter()
            .map(|&i| {
                halfspaces[i]
                    .normal
                    .iter()
                    .cloned()
                    .map(Ratio::from_integer)
                    .collect()
            })
            .collect();
        let rhs: Vec<Ratio<I>> = idx.iter().map(|&i| halfspaces[i].offset.clone()).collect();
        if let Some(sol) = matrix::solve_rational(&rows, &rhs) {
            let pt = RationalVector(sol);
            if halfspaces.iter().all(|h| h.contains(&pt)) {
                found.insert(pt);
            }
        }
        // Next r-combination of {0..n}.
        let mut i = r;
        let mut done = false;
        loop {
            if i == 0 {
                done = true;
                break;
            }
            i -= 1;
            if idx[i] != i + n - r {
                idx[i] += 1;
                for j in i + 1..r {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
        if done {
            return found.into_iter().collect();
        }
    }
}

/// The top-dimensional Voronoi cell of the lattice point `lambda`, with
/// exact rational vertices and the facet halfspaces cut out by the relevant
/// vectors.
pub fn voronoi_cell_of_vertex<I: Scalar>(
    b: &GramForm<I>,
    lambda: &LatticeVector<I>,
) -> Result<VoronoiFace<I>, TilingError> {
    let v0 = origin_cell(b)?;
    Ok(v0.translate(lambda))
}

fn origin_cell<I: Scalar>(b: &GramForm<I>) -> Result<VoronoiFace<I>, TilingError> {
    let r = b.rank();
    let rel = relevant_vectors(b)?;
    let halfspaces: Vec<Halfspace<I>> = rel
        .vectors
        .iter()
        .map(|v| {
            let normal = b.dual_map(v)?.0;
            let offset = Ratio::new(b.norm2_int(v)?, I::from(2));
            Ok(Halfspace { normal, offset }.normalized())
        })
        .collect::<Result<_, LatticeError>>()?;
    let vertices = vertices_from_halfspaces(&halfspaces, r);
    debug_assert!(!vertices.is_empty());
    Ok(VoronoiFace {
        dual: DelaunayCell::from_vertices(vec![LatticeVector::zero(r)]),
        vertices,
        halfspaces,
        dim: r,
    })
}

/// The Delaunay cell of `x`: the convex hull of its stations.
pub fn delaunay_cell<I: Scalar>(
    b: &GramForm<I>,
    x: &RationalVector<I>,
) -> Result<DelaunayCell<I>, LatticeError> {
    Ok(DelaunayCell::from_vertices(stations(b, x)?))
}

/// The Voronoi face dual to a Delaunay cell: the intersection of the vertex
/// Voronoi cells of all its vertices. Errors with `UnrealizedCell` when no
/// point has exactly this station set.
pub fn voronoi_face<I: Scalar>(
    b: &GramForm<I>,
    sigma: &DelaunayCell<I>,
) -> Result<VoronoiFace<I>, TilingError> {
    if sigma.vertices.is_empty() {
        return Err(TilingError::UnrealizedCell);
    }
    let v0 = origin_cell(b)?;
    let mut halfspaces: Vec<Halfspace<I>> = Vec::new();
    for v in &sigma.vertices {
        for h in &v0.halfspaces {
            let t = h.translate(v);
            if !halfspaces.contains(&t) {
                halfspaces.push(t);
            }
        }
    }
    let vertices = vertices_from_halfspaces(&halfspaces, b.rank());
    if vertices.is_empty() {
        return Err(TilingError::UnrealizedCell);
    }
    let face = VoronoiFace {
        dual: sigma.clone(),
        vertices,
        halfspaces,
        dim: 0,
    };
    let probe = face.interior_point();
    let realized = stations(b, &probe)?;
    if realized != sigma.vertices {
        return Err(TilingError::UnrealizedCell);
    }
    let dim = affine_rank_rational(&face.vertices);
    Ok(VoronoiFace { dim, ..face })
}

/// All translation classes of Delaunay cells, each paired with the Voronoi
/// face of the representative. Derived from the face lattice of the origin
/// cell: every class has a member containing the origin.
pub(crate) fn translation_classes<I: Scalar>(
    b: &GramForm<I>,
) -> Result<Vec<(DelaunayCell<I>, VoronoiFace<I>)>, TilingError> {
    let r = b.rank();
    let v0 = origin_cell(b)?;
    let nfacets = v0.halfspaces.len();
    assert!(nfacets <= 64, "facet bitmask limited to small rank");
    let tight: Vec<u64> = v0
        .vertices
        .iter()
        .map(|p| {
            let mut mask = 0u64;
            for (i, h) in v0.halfspaces.iter().enumerate() {
                if h.is_tight_at(p) {
                    mask |= 1 << i;
                }
            }
            mask
        })
        .collect();
    // Face lattice: the facet sets of faces are the closures of the vertex
    // tight-sets under intersection, plus the empty set for the whole cell.
    let mut masks: BTreeSet<u64> = tight.iter().copied().collect();
    masks.insert(0);
    loop {
        let mut added = false;
        let snapshot: Vec<u64> = masks.iter().copied().collect();
        for (i, &a) in snapshot.iter().enumerate() {
            for &bm in &snapshot[i + 1..] {
                if masks.insert(a & bm) {
                    added = true;
                }
            }
        }
        if !added {
            break;
        }
    }
    // Collect faces as distinct vertex subsets.
    let mut faces: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
    for &m in &masks {
        let w: Vec<usize> = (0..v0.vertices.len())
            .filter(|&i| tight[i] & m == m)
            .collect();
        if w.is_empty() {
            continue;
        }
        let facetset = w.iter().fold(!0u64, |acc, &i| acc & tight[i]);
        faces.entry(w).or_insert(facetset);
    }
    // Station sets of the cell vertices, computed once.
    let vertex_stations: Vec<Vec<LatticeVector<I>>> = v0
        .vertices
        .iter()
        .map(|p| stations(b, p))
        .collect::<Result<_, LatticeError>>()?;
    let mut seen: BTreeSet<DelaunayCell<I>> = BTreeSet::new();
    let mut out: Vec<(DelaunayCell<I>, VoronoiFace<I>)> = Vec::new();
    for (w, facetset) in faces {
        // Dual Delaunay cell: stations common to every vertex of the face.
        let mut common = vertex_stations[w[0]].clone();
        for &i in &w[1..] {
            common.retain(|v| vertex_stations[i].binary_search(v).is_ok());
        }
        let sigma = DelaunayCell::from_vertices(common);
        let (rep, shift) = sigma.class_representative();
        if !seen.insert(rep.clone()) {
            continue;
        }
        let mut halfspaces = v0.halfspaces.clone();
        for i in 0..nfacets {
            if facetset & (1 << i) != 0 {
                halfspaces.push(v0.halfspaces[i].reversed());
            }
        }
        let verts: Vec<RationalVector<I>> = w.iter().map(|&i| v0.vertices[i].clone()).collect();
        let dim = affine_rank_rational(&verts);
        debug_assert_eq!(rep.dim() + dim, r);
        let face = VoronoiFace {
            dual: sigma,
            vertices: verts,
            halfspaces,
            dim,
        }
        .translate(&shift.neg());
        out.push((rep, face));
    }
    out.sort_by(|a, b2| (a.0.dim(), &a.0).cmp(&(b2.0.dim(), &b2.0)));
    Ok(out)
}

/// Enumerates every Delaunay cell with all vertices inside the window,
/// paired with its Voronoi face, together with the translation-class
/// quotient of the cells that appear.
pub fn enumerate_cells<I: Scalar>(
    b: &GramForm<I>,
    window: &Window<I>,
) -> Result<CellComplex<I>, TilingError> {
    let r = b.rank();
    if window.dims() != r {
        return Err(LatticeError::DimensionMismatch {
            expected: r,
            got: window.dims(),
        }
        .into());
    }
    if window.is_empty() {
        return Err(TilingError::WindowTooSmall);
    }
    let classes = translation_classes(b)?;
    let mut pairs: Vec<(DelaunayCell<I>, VoronoiFace<I>)> = Vec::new();
    let mut class_list: Vec<TranslationClass<I>> = Vec::new();
    for (rep, face) in classes {
        // Translates t with rep + t inside the box: per-coordinate ranges.
        let mut lo = Vec::with_capacity(r);
        let mut hi = Vec::with_capacity(r);
        let mut empty = false;
        for i in 0..r {
            let coords: Vec<&I> = rep.vertices.iter().map(|v| &v.0[i]).collect();
            let min = coords.iter().min().unwrap();
            let max = coords.iter().max().unwrap();
            let a = window.lo[i].clone() - (*min).clone();
            let z = window.hi[i].clone() - (*max).clone();
            if a > z {
                empty = true;
                break;
            }
            lo.push(a);
            hi.push(z);
        }
        if empty {
            continue;
        }
        let translates = box_points::<I>(&lo, &hi);
        class_list.push(TranslationClass {
            representative: rep.clone(),
            face: face.clone(),
            members_in_window: translates.len(),
        });
        for t in translates {
            pairs.push((rep.translate(&t), face.translate(&t)));
        }
    }
    if !pairs.iter().any(|(d, _)| d.dim() == r) {
        return Err(TilingError::WindowTooSmall);
    }
    pairs.sort_by(|a, b2| (a.0.dim(), &a.0).cmp(&(b2.0.dim(), &b2.0)));
    Ok(CellComplex {
        pairs,
        classes: class_list,
    })
}

/// All integer points of the inclusive box `[lo, hi]`.
pub(crate) fn box_points<I: Scalar>(lo: &[I], hi: &[I]) -> Vec<LatticeVector<I>> {
    let r = lo.len();
    let mut out = Vec::new();
    if lo.iter().zip(hi).any(|(a, b)| a > b) {
        return out;
    }
    let mut cur: Vec<I> = lo.to_vec();
    loop {
        out.push(LatticeVector(cur.clone()));
        let mut i = 0;
        loop {
            if i == r {
                return out;
            }
            cur[i] += I::one();
            if cur[i] <= hi[i] {
                break;
            }
            cur[i] = lo[i].clone();
            i += 1;
        }
    }
}

/// Max sup-norm over the origin-cell vertices, rounded up: any station of a
/// point `x` is within this many unit steps of `x` in every coordinate.
pub fn covering_pad<I: Scalar>(b: &GramForm<I>) -> Result<I, TilingError> {
    let v0 = origin_cell(b)?;
    let mut pad = I::zero();
    for v in &v0.vertices {
        for c in &v.0 {
            let k = c.abs().ceil().to_integer();
            if k > pad {
                pad = k;
            }
        }
    }
    Ok(pad)
}

/// Checks the defining property of a relevant vector directly.
pub fn is_relevant<I: Scalar>(b: &GramForm<I>, v: &LatticeVector<I>) -> Result<bool, LatticeError> {
    let half = RationalVector::<I>(
        v.0.iter()
            .map(|c| Ratio::new(c.clone(), I::from(2)))
            .collect(),
    );
    let s = stations(b, &half)?;
    Ok(s.len() == 2 && s.contains(&LatticeVector::zero(b.rank())) && s.contains(v))
}

/// All lattice points of norm at most `bound`.
pub fn short_vectors<I: Scalar>(
    b: &GramForm<I>,
    bound: &Ratio<I>,
) -> Result<Vec<LatticeVector<I>>, LatticeError> {
    lattice_points_in_ellipsoid(b, &RationalVector::zero(b.rank()), bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};
    use crate::Int;

    fn hex() -> GramForm<Int> {
        GramForm::from_i32(&[&[2, -1], &[-1, 2]]).unwrap()
    }

    fn lv(coords: &[i32]) -> LatticeVector<Int> {
        LatticeVector::from_i32(coords)
    }

    fn rv(coords: &[(i32, i32)]) -> RationalVector<Int> {
        RationalVector(coords.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    #[test]
    fn relevant_vectors_examples() {
        let id2 = GramForm::<Int>::from_i32(&[&[1, 0], &[0, 1]]).unwrap();
        let r = relevant_vectors(&id2).unwrap();
        assert_eq!(
            r.vectors,
            vec![lv(&[-1, 0]), lv(&[0, -1]), lv(&[0, 1]), lv(&[1, 0])]
        );

        let r = relevant_vectors(&hex()).unwrap();
        assert_eq!(
            r.vectors,
            vec![
                lv(&[-1, -1]),
                lv(&[-1, 0]),
                lv(&[0, -1]),
                lv(&[0, 1]),
                lv(&[1, 0]),
                lv(&[1, 1])
            ]
        );

        let b1 = GramForm::<Int>::from_i32(&[&[1]]).unwrap();
        let r = relevant_vectors(&b1).unwrap();
        assert_eq!(r.vectors, vec![lv(&[-1]), lv(&[1])]);
    }

    #[test]
    fn relevant_vectors_satisfy_defining_property() {
        for b in [hex(), GramForm::from_i32(&[&[3, 1], &[1, 2]]).unwrap()] {
            let rel = relevant_vectors(&b).unwrap();
            for v in &rel.vectors {
                assert!(is_relevant(&b, v).unwrap());
            }
            let doubled = rel.vectors[0].add(&rel.vectors[0]);
            assert!(!is_relevant(&b, &doubled).unwrap());
        }
    }

    #[test]
    fn hexagonal_origin_cell() {
        let cell = voronoi_cell_of_vertex(&hex(), &lv(&[0, 0])).unwrap();
        let expect: Vec<RationalVector<Int>> = vec![
            rv(&[(-2, 3), (-1, 3)]),
            rv(&[(-1, 3), (-2, 3)]),
            rv(&[(-1, 3), (1, 3)]),
            rv(&[(1, 3), (-1, 3)]),
            rv(&[(1, 3), (2, 3)]),
            rv(&[(2, 3), (1, 3)]),
        ];
        assert_eq!(cell.vertices, expect);
        assert_eq!(cell.dim, 2);
        assert_eq!(cell.halfspaces.len(), 6);
        for v in &cell.vertices {
            assert!(cell.vertices.contains(&v.neg()));
        }
    }

    #[test]
    fn rank_one_and_square_cells() {
        let b1 = GramForm::<Int>::from_i32(&[&[1]]).unwrap();
        let cell = voronoi_cell_of_vertex(&b1, &lv(&[0])).unwrap();
        assert_eq!(cell.vertices, vec![rv(&[(-1, 2)]), rv(&[(1, 2)])]);

        let id2 = GramForm::<Int>::from_i32(&[&[1, 0], &[0, 1]]).unwrap();
        let cell = voronoi_cell_of_vertex(&id2, &lv(&[0, 0])).unwrap();
        assert_eq!(cell.vertices.len(), 4);
        for v in &cell.vertices {
            assert!(v.0.iter().all(|c| c.clone().abs() == rat(1, 2)));
        }

        let shifted = voronoi_cell_of_vertex(&id2, &lv(&[2, -1])).unwrap();
        assert!(shifted.vertices.contains(&rv(&[(5, 2), (-3, 2)])));
        let interior = shifted.interior_point();
        assert_eq!(interior, rv(&[(2, 1), (-1, 1)]));
        assert!(shifted.contains(&interior));
    }

    #[test]
    fn delaunay_cell_examples() {
        let b = hex();
        let c = delaunay_cell(&b, &rv(&[(2, 3), (1, 3)])).unwrap();
        assert_eq!(c.vertices(), &[lv(&[0, 0]), lv(&[1, 0]), lv(&[1, 1])]);
        assert_eq!(c.dim(), 2);

        let c = delaunay_cell(&b, &rv(&[(4, 1), (-2, 1)])).unwrap();
        assert_eq!(c.vertices(), &[lv(&[4, -2])]);
        assert_eq!(c.dim(), 0);

        let b1 = GramForm::<Int>::from_i32(&[&[1]]).unwrap();
        let c = delaunay_cell(&b1, &rv(&[(1, 2)])).unwrap();
        assert_eq!(c.vertices(), &[lv(&[0]), lv(&[1])]);
        assert_eq!(c.dim(), 1);
    }

    #[test]
    fn voronoi_face_examples() {
        let b = hex();
        let triangle = DelaunayCell::from_vertices(vec![lv(&[0, 0]), lv(&[1, 0]), lv(&[1, 1])]);
        let f = voronoi_face(&b, &triangle).unwrap();
        assert_eq!(f.vertices, vec![rv(&[(2, 3), (1, 3)])]);
        assert_eq!(f.dim, 0);

        let point = DelaunayCell::from_vertices(vec![lv(&[0, 0])]);
        let f = voronoi_face(&b, &point).unwrap();
        assert_eq!(f.dim, 2);
        assert_eq!(f.vertices.len(), 6);

        let b1 = GramForm::<Int>::from_i32(&[&[1]]).unwrap();
        let edge = DelaunayCell::from_vertices(vec![lv(&[0]), lv(&[1])]);
        let f = voronoi_face(&b1, &edge).unwrap();
        assert_eq!(f.vertices, vec![rv(&[(1, 2)])]);
        assert_eq!(f.dim, 0);
    }

    #[test]
    fn unrealized_cells_are_rejected() {
        let b = hex();
        // The triangle with the wrong orientation for this form.
        let bad = DelaunayCell::from_vertices(vec![lv(&[0, 0]), lv(&[1, 0]), lv(&[0, 1])]);
        assert_eq!(
            voronoi_face(&b, &bad).unwrap_err(),
            TilingError::UnrealizedCell
        );
        // A distant pair can never be a common station set.
        let far = DelaunayCell::from_vertices(vec![lv(&[0, 0]), lv(&[3, 0])]);
        assert_eq!(
            voronoi_face(&b, &far).unwrap_err(),
            TilingError::UnrealizedCell
        );
    }

    #[test]
    fn hexagonal_translation_classes() {
        let complex = enumerate_cells(&hex(), &Window::from_i32(&[(-1, 2), (-1, 2)])).unwrap();
        let counts: Vec<usize> = [0usize, 1, 2]
            .iter()
            .map(|&d| {
                complex
                    .classes
                    .iter()
                    .filter(|c| c.representative.dim() == d)
                    .count()
            })
            .collect();
        assert_eq!(counts, vec![1, 3, 2]);
        for class in &complex.classes {
            assert_eq!(class.representative.vertices()[0], lv(&[0, 0]));
            assert_eq!(class.representative.dim() + class.face.dim, 2);
        }
    }

    #[test]
    fn rank_one_window_classes() {
        let b1 = GramForm::<Int>::from_i32(&[&[1]]).unwrap();
        let complex = enumerate_cells(&b1, &Window::from_i32(&[(0, 3)])).unwrap();
        assert_eq!(complex.classes.len(), 2);
        assert_eq!(complex.classes[0].representative.dim(), 0);
        assert_eq!(complex.classes[0].members_in_window, 4);
        assert_eq!(complex.classes[1].representative.dim(), 1);
        assert_eq!(complex.classes[1].members_in_window, 3);
        assert_eq!(complex.pairs.len(), 7);
    }

    #[test]
    fn window_errors() {
        let b = hex();
        let empty = Window::<Int>::from_i32(&[(1, 0), (0, 1)]);
        assert_eq!(
            enumerate_cells(&b, &empty).unwrap_err(),
            TilingError::WindowTooSmall
        );
        let tiny = Window::<Int>::from_i32(&[(0, 0), (0, 0)]);
        assert_eq!(
            enumerate_cells(&b, &tiny).unwrap_err(),
            TilingError::WindowTooSmall
        );
    }

    #[test]
    fn duality_and_round_trip_in_window() {
        for b in [hex(), GramForm::from_i32(&[&[1, 0], &[0, 1]]).unwrap()] {
            let complex = enumerate_cells(&b, &Window::from_i32(&[(-1, 1), (-1, 1)])).unwrap();
            for (sigma, face) in &complex.pairs {
                assert_eq!(sigma.dim() + face.dim, 2);
                let p = face.interior_point();
                let back = delaunay_cell(&b, &p).unwrap();
                assert_eq!(&back, sigma);
                for v in &face.vertices {
                    let s = stations(&b, v).unwrap();
                    for u in sigma.vertices() {
                        assert!(s.contains(u));
                    }
                }
            }
        }
    }

    #[test]
    fn voronoi_cells_tile_the_window() {
        let b = hex();
        let complex = enumerate_cells(&b, &Window::from_i32(&[(-2, 2), (-2, 2)])).unwrap();
        let tops: Vec<&VoronoiFace<Int>> = complex
            .pairs
            .iter()
            .filter(|(d, _)| d.dim() == 0)
            .map(|(_, f)| f)
            .collect();
        for (num, den) in [(1, 3), (-2, 5), (3, 7), (0, 1)] {
            for (num2, den2) in [(1, 7), (-1, 2), (2, 5)] {
                let p = rv(&[(num, den), (num2, den2)]);
                let hits = tops.iter().filter(|f| f.contains(&p)).count();
                assert!(hits >= 1);
                let s = stations(&b, &p).unwrap();
                if s.len() == 1
                    && complex
                        .pairs
                        .iter()
                        .any(|(d, _)| d.vertices() == s.as_slice())
                {
                    assert_eq!(hits, 1);
                }
            }
        }
    }

    #[test]
    fn covering_pad_hex() {
        assert_eq!(covering_pad(&hex()).unwrap(), int::<Int>(1));
    }
}
