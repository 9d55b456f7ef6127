//! Rational polytopes with exact V- and H-representations.
//!
//! A `Polytope` is built from points by `convex_hull`: the facet system
//! comes from the polar dual (vertex enumeration of the dual's
//! H-representation), the affine hull is kept as explicit equalities, and
//! every derived quantity is exact. Membership and the signed squared
//! distance to the boundary are the primitives the stability layer runs on.

use std::collections::HashMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::hull::{dd_vertices, vertices_of};
use crate::hyperplane::{Halfspace, Hyperplane};
use crate::linalg::{project_onto_affine, rank_of, reject_from_span, QMatrix};
use crate::qvec::QVec;
use crate::rat::{rat, sign, Rat};

/// Exact location of a point relative to a polytope.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Membership {
    Outside,
    OnBoundary,
    /// Strictly inside the affine hull of the polytope, but the polytope is
    /// lower-dimensional than the reference space.
    RelativeInteriorOnly,
    InteriorFullDim,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polytope {
    ambient_dim: usize,
    affine_dim: usize,
    vertices: Vec<QVec>,
    hull_equalities: Vec<Hyperplane>,
    facets: Vec<Halfspace>,
}

impl Polytope {
    /// Convex hull of a nonempty point set: irredundant sorted vertices,
    /// affine-hull equalities, and facet halfspaces valid within the hull.
    pub fn convex_hull(points: &[QVec]) -> Result<Polytope> {
        if points.is_empty() {
            return Err(Error::EmptyInput("convex hull needs at least one point"));
        }
        let dim = points[0].dim();
        for p in points {
            p.check_dim(dim)?;
        }
        let mut pts = points.to_vec();
        pts.sort();
        pts.dedup();
        let v0 = pts[0].clone();

        // affine basis of the direction space
        let mut basis: Vec<QVec> = Vec::new();
        for p in &pts[1..] {
            let d = p.sub(&v0);
            let mut cand = basis.clone();
            cand.push(d.clone());
            if rank_of(&cand) > basis.len() {
                basis.push(d);
            }
        }
        let k = basis.len();

        let mut hull_equalities: Vec<Hyperplane> = if k == dim {
            Vec::new()
        } else if k == 0 {
            (0..dim)
                .map(|j| Hyperplane::new(QVec::unit(dim, j), v0[j].clone()))
                .collect()
        } else {
            QMatrix::from_rows(&basis)
                .null_space()
                .iter()
                .map(|n| Hyperplane::new(n.clone(), n.dot(&v0)))
                .collect()
        };
        hull_equalities.sort();

        if k == 0 {
            return Ok(Polytope {
                ambient_dim: dim,
                affine_dim: 0,
                vertices: vec![v0],
                hull_equalities,
                facets: Vec::new(),
            });
        }

        // coordinates within the hull: p = v0 + B t
        let b_mat = QMatrix::from_rows(&basis).transpose();
        let ts: Vec<QVec> = pts
            .iter()
            .map(|p| {
                b_mat
                    .solve(&p.sub(&v0))
                    .expect("input points lie in their own affine hull")
            })
            .collect();
        let count = rat(ts.len() as i64);
        let mut c_t = QVec::zero(k);
        for t in &ts {
            c_t = c_t.add(t);
        }
        c_t = c_t.scale(&(rat(1) / count));

        // polar dual around the centroid; dual vertices are primal facets
        let duals: Vec<(QVec, Rat)> = ts.iter().map(|t| (t.sub(&c_t), rat(1))).collect();
        let dual_vertices = dd_vertices(k, &duals)?;
        debug_assert!(!dual_vertices.is_empty());

        let mut gram = QMatrix::zero(k, k);
        for i in 0..k {
            for j in 0..k {
                gram.set(i, j, basis[i].dot(&basis[j]));
            }
        }
        let hull_rref = hull_reduction_rows(&hull_equalities, dim);
        let mut facets: Vec<Halfspace> = Vec::new();
        for y in &dual_vertices {
            let z = gram.solve(y).expect("affine basis Gram matrix is invertible");
            let mut n_amb = QVec::zero(dim);
            for (j, b) in basis.iter().enumerate() {
                n_amb = n_amb.add(&b.scale(&z[j]));
            }
            let off = n_amb.dot(&v0) + y.dot(&c_t) + rat(1);
            let (rn, ro) = reduce_mod_hull(&n_amb, &off, &hull_rref);
            facets.push(Halfspace::new(rn, ro));
        }
        facets.sort();
        facets.dedup();

        let mut vertices: Vec<QVec> = Vec::new();
        for (p, t) in pts.iter().zip(ts.iter()) {
            let q = t.sub(&c_t);
            let tight: Vec<QVec> = dual_vertices
                .iter()
                .filter(|y| y.dot(&q) == rat(1))
                .cloned()
                .collect();
            if rank_of(&tight) == k {
                vertices.push(p.clone());
            }
        }
        vertices.sort();
        debug_assert!(vertices.len() > k);

        let poly = Polytope {
            ambient_dim: dim,
            affine_dim: k,
            vertices,
            hull_equalities,
            facets,
        };
        debug_assert!(poly
            .vertices
            .iter()
            .all(|v| poly.facets.iter().all(|f| f.satisfied_by(v))
                && poly.hull_equalities.iter().all(|h| h.contains(v))));
        Ok(poly)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn affine_dim(&self) -> usize {
        self.affine_dim
    }

    pub fn vertices(&self) -> &[QVec] {
        &self.vertices
    }

    pub fn hull_equalities(&self) -> &[Hyperplane] {
        &self.hull_equalities
    }

    pub fn facets(&self) -> &[Halfspace] {
        &self.facets
    }

    pub fn contains(&self, p: &QVec) -> bool {
        p.dim() == self.ambient_dim
            && self.hull_equalities.iter().all(|h| h.contains(p))
            && self.facets.iter().all(|f| f.satisfied_by(p))
    }

    /// Membership with "full-dimensional" measured against the ambient space.
    pub fn membership(&self, p: &QVec) -> Result<Membership> {
        self.membership_rel(p, self.ambient_dim)
    }

    /// Membership with "full-dimensional" measured against a reference
    /// dimension (for polytopes living in a fixed affine slice).
    pub fn membership_rel(&self, p: &QVec, reference_dim: usize) -> Result<Membership> {
        p.check_dim(self.ambient_dim)?;
        if self.hull_equalities.iter().any(|h| !h.contains(p)) {
            return Ok(Membership::Outside);
        }
        let mut on_facet = false;
        for f in &self.facets {
            match sign(&f.slack(p)) {
                -1 => return Ok(Membership::Outside),
                0 => on_facet = true,
                _ => {}
            }
        }
        Ok(if on_facet {
            Membership::OnBoundary
        } else if self.affine_dim == reference_dim {
            Membership::InteriorFullDim
        } else {
            Membership::RelativeInteriorOnly
        })
    }

    /// Signed squared distance from `p` to the boundary: `(+1, d^2)` outside
    /// (distance to the nearest point of the polytope), `(0, d^2)` on the
    /// boundary or inside a lower-dimensional polytope (distance to the
    /// relative boundary), `(-1, d^2)` in the full-dimensional interior.
    /// Squares keep everything rational; the sign alone decides stability.
    pub fn signed_sq_distance_to_boundary(&self, p: &QVec) -> Result<(i8, Rat)> {
        self.signed_sq_distance_rel(p, self.ambient_dim)
    }

    pub fn signed_sq_distance_rel(&self, p: &QVec, reference_dim: usize) -> Result<(i8, Rat)> {
        match self.membership_rel(p, reference_dim)? {
            Membership::Outside => {
                let (_, d) = self.nearest_point(p)?;
                Ok((1, d))
            }
            Membership::OnBoundary => Ok((0, Rat::zero())),
            Membership::RelativeInteriorOnly => Ok((0, self.relative_boundary_sq_dist(p))),
            Membership::InteriorFullDim => Ok((-1, self.relative_boundary_sq_dist(p))),
        }
    }

    /// Distance to the relative boundary for a point in the relative
    /// interior: minimum over facet hyperplanes, measured within the affine
    /// hull. Zero when the polytope is a single point.
    fn relative_boundary_sq_dist(&self, p: &QVec) -> Rat {
        let hull_normals: Vec<QVec> = self
            .hull_equalities
            .iter()
            .map(|h| h.normal().clone())
            .collect();
        let mut best: Option<Rat> = None;
        for f in &self.facets {
            let n_proj = reject_from_span(f.normal(), &hull_normals);
            debug_assert!(!n_proj.is_zero(), "facet hyperplane cannot contain the hull");
            let s = f.slack(p);
            let d = &s * &s / n_proj.norm_sq();
            if best.as_ref().is_none_or(|b| d < *b) {
                best = Some(d);
            }
        }
        best.unwrap_or_else(Rat::zero)
    }

    /// Nearest point of the polytope and the squared distance to it. The
    /// returned point satisfies the variational inequality
    /// `<p - q, v - q> <= 0` for every vertex `v`.
    pub fn nearest_point(&self, p: &QVec) -> Result<(QVec, Rat)> {
        p.check_dim(self.ambient_dim)?;
        let mut memo: HashMap<Vec<QVec>, (QVec, Rat)> = HashMap::new();
        Ok(nearest_on(self, p, &mut memo))
    }

    /// Vertex-index pairs forming edges (1-faces).
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let hull_normals: Vec<QVec> = self
            .hull_equalities
            .iter()
            .map(|h| h.normal().clone())
            .collect();
        let mut out = Vec::new();
        if self.affine_dim == 0 {
            return out;
        }
        for i in 0..self.vertices.len() {
            for j in i + 1..self.vertices.len() {
                let common: Vec<QVec> = self
                    .facets
                    .iter()
                    .filter(|f| {
                        f.active_at(&self.vertices[i]) && f.active_at(&self.vertices[j])
                    })
                    .map(|f| reject_from_span(f.normal(), &hull_normals))
                    .collect();
                if rank_of(&common) == self.affine_dim - 1 {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Vertices lying on a given facet.
    pub fn facet_vertices(&self, facet: &Halfspace) -> Vec<QVec> {
        self.vertices
            .iter()
            .filter(|v| facet.active_at(v))
            .cloned()
            .collect()
    }

    /// The polytope scaled by a positive rational factor about the origin.
    pub fn scale(&self, k: &Rat) -> Polytope {
        assert!(sign(k) > 0, "scale factor must be positive");
        let scaled: Vec<QVec> = self.vertices.iter().map(|v| v.scale(k)).collect();
        Polytope::convex_hull(&scaled).expect("scaling preserves hull validity")
    }

    /// Re-derives the vertex set from the H-representation alone (LP-driven
    /// vertex enumeration); used to cross-check the two representations.
    pub fn vertices_from_hrep(&self) -> Result<Vec<QVec>> {
        vertices_of(self.ambient_dim, &self.hull_equalities, &self.facets)
    }

    /// Expresses a halfspace in the same canonical form facets use: the
    /// normal is reduced modulo the affine-hull equalities, so halfspaces
    /// that agree on the hull compare equal.
    pub fn canonical_halfspace(&self, normal: QVec, offset: Rat) -> Halfspace {
        let rows = hull_reduction_rows(&self.hull_equalities, self.ambient_dim);
        let (n, c) = reduce_mod_hull(&normal, &offset, &rows);
        Halfspace::new(n, c)
    }
}

/// Augmented RREF rows `(normal, offset, pivot)` of the hull equalities.
fn hull_reduction_rows(
    equalities: &[Hyperplane],
    dim: usize,
) -> Vec<(QVec, Rat, usize)> {
    if equalities.is_empty() {
        return Vec::new();
    }
    let mut aug = QMatrix::zero(equalities.len(), dim + 1);
    for (i, h) in equalities.iter().enumerate() {
        for j in 0..dim {
            aug.set(i, j, h.normal()[j].clone());
        }
        aug.set(i, dim, h.offset().clone());
    }
    let pivots = aug.rref();
    pivots
        .iter()
        .enumerate()
        .map(|(r, &p)| {
            debug_assert!(p < dim);
            let row = aug.row(r);
            (
                QVec::new(row.coords()[..dim].to_vec()),
                row[dim].clone(),
                p,
            )
        })
        .collect()
}

/// Unique coset representative of `(normal, offset)` modulo the span of the
/// hull equalities: entries at the hull pivot coordinates become zero.
fn reduce_mod_hull(
    normal: &QVec,
    offset: &Rat,
    rows: &[(QVec, Rat, usize)],
) -> (QVec, Rat) {
    let mut n = normal.clone();
    let mut c = offset.clone();
    for (rn, rc, p) in rows {
        let f = n[*p].clone();
        if f.is_zero() {
            continue;
        }
        n = n.sub(&rn.scale(&f));
        c -= &f * rc;
    }
    (n, c)
}

fn nearest_on(
    poly: &Polytope,
    p: &QVec,
    memo: &mut HashMap<Vec<QVec>, (QVec, Rat)>,
) -> (QVec, Rat) {
    if let Some(hit) = memo.get(poly.vertices()) {
        return hit.clone();
    }
    let result = if poly.contains(p) {
        (p.clone(), Rat::zero())
    } else {
        let normals: Vec<QVec> = poly
            .hull_equalities
            .iter()
            .map(|h| h.normal().clone())
            .collect();
        let offsets: Vec<Rat> = poly
            .hull_equalities
            .iter()
            .map(|h| h.offset().clone())
            .collect();
        let q = project_onto_affine(p, &normals, &offsets);
        if poly.contains(&q) {
            let d = p.sub(&q).norm_sq();
            (q, d)
        } else {
            // the nearest point lies on a facet whose inequality the
            // projected query violates (its offset direction spans the
            // normal cone there), so other facets can be skipped
            let mut best: Option<(QVec, Rat)> = None;
            for f in &poly.facets {
                if sign(&f.slack(&q)) >= 0 {
                    continue;
                }
                let fv = poly.facet_vertices(f);
                debug_assert!(!fv.is_empty());
                let sub = Polytope::convex_hull(&fv).expect("facet hull");
                let cand = nearest_on(&sub, p, memo);
                if best.as_ref().is_none_or(|(_, d)| cand.1 < *d) {
                    best = Some(cand);
                }
            }
            best.expect("a point outside violates some facet")
        }
    };
    memo.insert(poly.vertices().to_vec(), result.clone());
    result
}
