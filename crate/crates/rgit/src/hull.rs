//! Vertex enumeration for bounded rational polyhedra.
//!
//! The core is a double-description sweep on the homogenization cone,
//! seeded with a simplex that strictly contains the target polytope (its
//! size comes from exact LP bounds). Rays are primitive integer vectors;
//! adjacency uses the standard combinatorial zero-set test, which is exact
//! here because the cone stays pointed inside the seed simplex.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::hyperplane::{Halfspace, Hyperplane};
use crate::linalg::QMatrix;
use crate::lp::{lp_maximize, Constraint, LpOutcome};
use crate::qvec::QVec;
use crate::rat::{rat, Rat};

#[derive(Clone, PartialEq, Eq)]
struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    fn new(bits: usize) -> Self {
        BitSet {
            words: vec![0; bits.div_ceil(64)],
        }
    }

    fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1u64 << (i % 64);
    }

    fn intersect(&self, other: &BitSet) -> BitSet {
        BitSet {
            words: self
                .words
                .iter()
                .zip(other.words.iter())
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    fn is_subset(&self, other: &BitSet) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & !b == 0)
    }
}

struct Ray {
    coords: Vec<BigInt>,
    zero: BitSet,
}

fn primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let mut g = BigInt::zero();
    for c in &v {
        g = g.gcd(c);
    }
    if !g.is_zero() && !g.is_one() {
        for c in &mut v {
            *c = &*c / &g;
        }
    }
    v
}

/// Clears denominators of `(coeffs..., constant)` into a primitive integer
/// vector, preserving sign.
fn integral_row(coeffs: &[Rat]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for c in coeffs {
        lcm = lcm.lcm(c.denom());
    }
    primitive(
        coeffs
            .iter()
            .map(|c| (c * Rat::from_integer(lcm.clone())).to_integer())
            .collect(),
    )
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b.iter()).map(|(x, y)| x * y).sum()
}

/// Vertices of the bounded polyhedron `{x in R^k : <a_i, x> <= b_i}`.
/// Returns the empty list when the system is infeasible, an error when it
/// is unbounded.
pub fn dd_vertices(dim: usize, halfspaces: &[(QVec, Rat)]) -> Result<Vec<QVec>> {
    assert!(dim >= 1);
    let constraints: Vec<Constraint> = halfspaces
        .iter()
        .map(|(a, b)| Constraint::le(a.clone(), b.clone()))
        .collect();

    // exact coordinate bounds give the seed simplex size
    let mut bound = rat(1);
    for j in 0..dim {
        for dir in [rat(1), rat(-1)] {
            let obj = QVec::unit(dim, j).scale(&dir);
            match lp_maximize(&obj, &constraints)? {
                LpOutcome::Optimal { value, .. } => {
                    if value > bound {
                        bound = value;
                    }
                }
                LpOutcome::Infeasible { .. } => return Ok(Vec::new()),
                LpOutcome::Unbounded => {
                    return Err(Error::InvalidInput(
                        "vertex enumeration needs a bounded polyhedron".to_string(),
                    ))
                }
            }
        }
    }
    let m_big = (bound + rat(2)).ceil().to_integer();

    let n_constraints = dim + 1 + halfspaces.len();
    // seed rays: lifted vertices of {x_j >= -M, sum x <= dim*M}
    let mut rays: Vec<Ray> = Vec::with_capacity(dim + 1);
    {
        // apex (-M, ..., -M): tight on all lower bounds (constraints 0..dim)
        let mut coords: Vec<BigInt> = vec![-m_big.clone(); dim];
        coords.push(BigInt::one());
        let mut zero = BitSet::new(n_constraints);
        for c in 0..dim {
            zero.insert(c);
        }
        rays.push(Ray {
            coords: primitive(coords),
            zero,
        });
        for j in 0..dim {
            let mut coords: Vec<BigInt> = vec![-m_big.clone(); dim];
            coords[j] = BigInt::from(2 * dim as i64 - 1) * &m_big;
            coords.push(BigInt::one());
            let mut zero = BitSet::new(n_constraints);
            for c in 0..dim {
                if c != j {
                    zero.insert(c);
                }
            }
            zero.insert(dim); // the sum facet
            rays.push(Ray {
                coords: primitive(coords),
                zero,
            });
        }
    }

    // insert each halfspace <a, x> <= b as homogeneous <(-a, b), ray> >= 0
    for (hs_idx, (a, b)) in halfspaces.iter().enumerate() {
        a.check_dim(dim)?;
        let ci = dim + 1 + hs_idx;
        let mut row: Vec<Rat> = a.iter().map(|c| -c.clone()).collect();
        row.push(b.clone());
        let h = integral_row(&row);

        let vals: Vec<BigInt> = rays.iter().map(|r| dot(&h, &r.coords)).collect();
        let has_neg = vals.iter().any(|v| v.is_negative());
        if !has_neg {
            for (r, v) in rays.iter_mut().zip(vals.iter()) {
                if v.is_zero() {
                    r.zero.insert(ci);
                }
            }
            continue;
        }

        let pos: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_negative()).collect();
        let mut next: Vec<Ray> = Vec::new();
        for (i, r) in rays.iter().enumerate() {
            if vals[i].is_negative() {
                continue;
            }
            let mut nr = Ray {
                coords: r.coords.clone(),
                zero: r.zero.clone(),
            };
            if vals[i].is_zero() {
                nr.zero.insert(ci);
            }
            next.push(nr);
        }
        for &p in &pos {
            for &n in &neg {
                let common = rays[p].zero.intersect(&rays[n].zero);
                let adjacent = rays.iter().enumerate().all(|(i, r)| {
                    i == p || i == n || !common.is_subset(&r.zero)
                });
                if !adjacent {
                    continue;
                }
                let vp = &vals[p];
                let vn = &vals[n];
                let coords: Vec<BigInt> = rays[p]
                    .coords
                    .iter()
                    .zip(rays[n].coords.iter())
                    .map(|(cp, cn)| vp * cn - vn * cp)
                    .collect();
                let mut zero = common.clone();
                zero.insert(ci);
                next.push(Ray {
                    coords: primitive(coords),
                    zero,
                });
            }
        }
        rays = next;
        if rays.is_empty() {
            return Ok(Vec::new());
        }
    }

    let mut vertices: Vec<QVec> = rays
        .iter()
        .map(|r| {
            let t = &r.coords[dim];
            assert!(t.is_positive(), "bounded polytope has no rays at infinity");
            let tq = Rat::from_integer(t.clone());
            QVec::new(
                r.coords[..dim]
                    .iter()
                    .map(|c| Rat::from_integer(c.clone()) / &tq)
                    .collect(),
            )
        })
        .collect();
    vertices.sort();
    vertices.dedup();
    Ok(vertices)
}

/// Vertices of the bounded set `{x : equalities hold, halfspaces hold}` in
/// ambient dimension `dim`, by eliminating the equalities first.
pub fn vertices_of(
    dim: usize,
    equalities: &[Hyperplane],
    halfspaces: &[Halfspace],
) -> Result<Vec<QVec>> {
    if equalities.is_empty() {
        let hs: Vec<(QVec, Rat)> = halfspaces
            .iter()
            .map(|h| (h.normal().clone(), h.offset().clone()))
            .collect();
        return dd_vertices(dim, &hs);
    }
    let e_mat = QMatrix::from_rows(
        &equalities
            .iter()
            .map(|h| h.normal().clone())
            .collect::<Vec<_>>(),
    );
    let f = QVec::new(equalities.iter().map(|h| h.offset().clone()).collect());
    let Some(x0) = e_mat.solve(&f) else {
        return Ok(Vec::new());
    };
    let null = e_mat.null_space();
    if null.is_empty() {
        if halfspaces.iter().all(|h| h.satisfied_by(&x0)) {
            return Ok(vec![x0]);
        }
        return Ok(Vec::new());
    }
    let k = null.len();
    let mut reduced: Vec<(QVec, Rat)> = Vec::new();
    for h in halfspaces {
        let coeffs = QVec::new(null.iter().map(|n| h.normal().dot(n)).collect());
        let rhs = h.offset() - h.normal().dot(&x0);
        if coeffs.is_zero() {
            if rhs < Rat::zero() {
                return Ok(Vec::new());
            }
            continue;
        }
        reduced.push((coeffs, rhs));
    }
    let inner = dd_vertices(k, &reduced)?;
    let mut out: Vec<QVec> = inner
        .iter()
        .map(|s| {
            let mut x = x0.clone();
            for (j, n) in null.iter().enumerate() {
                x = x.add(&n.scale(&s[j]));
            }
            x
        })
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::ratio;

    #[test]
    fn square_vertices() {
        let hs = vec![
            (QVec::from_ints(&[1, 0]), rat(1)),
            (QVec::from_ints(&[-1, 0]), rat(1)),
            (QVec::from_ints(&[0, 1]), rat(1)),
            (QVec::from_ints(&[0, -1]), rat(1)),
        ];
        let vs = dd_vertices(2, &hs).unwrap();
        assert_eq!(vs.len(), 4);
        assert!(vs.contains(&QVec::from_ints(&[1, 1])));
        assert!(vs.contains(&QVec::from_ints(&[-1, -1])));
    }

    #[test]
    fn triangle_with_rational_vertex() {
        // x >= 0, y >= 0, 2x + 3y <= 1
        let hs = vec![
            (QVec::from_ints(&[-1, 0]), rat(0)),
            (QVec::from_ints(&[0, -1]), rat(0)),
            (QVec::from_ints(&[2, 3]), rat(1)),
        ];
        let vs = dd_vertices(2, &hs).unwrap();
        assert_eq!(vs.len(), 3);
        assert!(vs.contains(&QVec::new(vec![ratio(1, 2), rat(0)])));
        assert!(vs.contains(&QVec::new(vec![rat(0), ratio(1, 3)])));
    }

    #[test]
    fn empty_and_point() {
        let hs = vec![
            (QVec::from_ints(&[1]), rat(0)),
            (QVec::from_ints(&[-1]), rat(-1)),
        ];
        assert!(dd_vertices(1, &hs).unwrap().is_empty());
        let pt = vec![
            (QVec::from_ints(&[1]), rat(2)),
            (QVec::from_ints(&[-1]), rat(-2)),
        ];
        assert_eq!(dd_vertices(1, &pt).unwrap(), vec![QVec::from_ints(&[2])]);
    }

    #[test]
    fn unbounded_is_an_error() {
        let hs = vec![(QVec::from_ints(&[1, 0]), rat(0))];
        assert!(dd_vertices(2, &hs).is_err());
    }

    #[test]
    fn degenerate_octahedron_vertices() {
        // |x|+|y|+|z| <= 1: 8 facets, 6 vertices, every vertex on 4 facets
        let mut hs = Vec::new();
        for sx in [-1i64, 1] {
            for sy in [-1i64, 1] {
                for sz in [-1i64, 1] {
                    hs.push((QVec::from_ints(&[sx, sy, sz]), rat(1)));
                }
            }
        }
        let vs = dd_vertices(3, &hs).unwrap();
        assert_eq!(vs.len(), 6);
        assert!(vs.contains(&QVec::from_ints(&[0, 0, 1])));
        assert!(vs.contains(&QVec::from_ints(&[-1, 0, 0])));
    }

    #[test]
    fn equalities_reduce_dimension() {
        // slice the unit cube by x+y+z = 3/2
        let eqs = vec![Hyperplane::new(QVec::from_ints(&[1, 1, 1]), ratio(3, 2))];
        let mut hs = Vec::new();
        for i in 0..3 {
            hs.push(Halfspace::new(QVec::unit(3, i), rat(1)));
            hs.push(Halfspace::new(QVec::unit(3, i).neg(), rat(0)));
        }
        let vs = vertices_of(3, &eqs, &hs).unwrap();
        // hexagonal slice
        assert_eq!(vs.len(), 6);
        for v in &vs {
            assert_eq!(v.coord_sum(), ratio(3, 2));
        }
    }
}
