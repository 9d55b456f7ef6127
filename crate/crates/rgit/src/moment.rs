//! Moment-polytope models: hypersimplices, Plücker coordinates of point
//! configurations, matroid polytopes of torus-orbit closures, weight
//! polytopes, and linear pushforwards.

use std::collections::BTreeSet;

use itertools::Itertools;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::QMatrix;
use crate::polytope::Polytope;
use crate::qvec::QVec;
use crate::rat::{rat, Rat};

/// Characters of a torus, as lattice (or rational) points of the character
/// space.
#[derive(Clone, Debug)]
pub struct WeightSet {
    characters: Vec<QVec>,
    rank: usize,
}

impl WeightSet {
    pub fn new(characters: Vec<QVec>) -> Result<Self> {
        let rank = characters
            .first()
            .ok_or(Error::EmptyInput("weight set"))?
            .dim();
        for c in &characters {
            c.check_dim(rank)?;
        }
        Ok(WeightSet { characters, rank })
    }

    pub fn characters(&self) -> &[QVec] {
        &self.characters
    }

    pub fn rank(&self) -> usize {
        self.rank
    }
}

/// Plücker coordinates of an `n`-plane in `C^m`, indexed by the `n`-subsets
/// of `{0..m-1}` in lexicographic order. Always produced from a matrix, so
/// the Plücker relations hold by construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PluckerVector {
    m: usize,
    n: usize,
    entries: Vec<(Vec<usize>, Rat)>,
}

impl PluckerVector {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// All `(subset, minor)` pairs in lexicographic subset order.
    pub fn entries(&self) -> &[(Vec<usize>, Rat)] {
        &self.entries
    }

    pub fn entry(&self, subset: &[usize]) -> Option<&Rat> {
        self.entries
            .iter()
            .find(|(j, _)| j == subset)
            .map(|(_, v)| v)
    }

    /// Subsets with nonvanishing minor: the bases of the induced matroid.
    pub fn support(&self) -> Vec<Vec<usize>> {
        self.entries
            .iter()
            .filter(|(_, v)| !v.is_zero())
            .map(|(j, _)| j.clone())
            .collect()
    }
}

/// Ground set, rank, and bases of a matroid; the exchange axiom is checked
/// on construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatroidData {
    pub m: usize,
    pub n: usize,
    pub bases: BTreeSet<Vec<usize>>,
}

impl MatroidData {
    pub fn new(m: usize, n: usize, bases: BTreeSet<Vec<usize>>) -> Result<Self> {
        if bases.is_empty() {
            return Err(Error::EmptyInput("matroid bases"));
        }
        for b in &bases {
            if b.len() != n || b.iter().any(|&i| i >= m) || !b.windows(2).all(|w| w[0] < w[1]) {
                return Err(Error::InvalidInput(format!("bad basis {b:?}")));
            }
        }
        let data = MatroidData { m, n, bases };
        if !data.exchange_holds() {
            return Err(Error::InvalidInput(
                "basis exchange axiom fails".to_string(),
            ));
        }
        Ok(data)
    }

    fn exchange_holds(&self) -> bool {
        for a in &self.bases {
            for b in &self.bases {
                for &x in a.iter().filter(|x| !b.contains(x)) {
                    let found = b.iter().filter(|y| !a.contains(y)).any(|&y| {
                        let mut c: Vec<usize> =
                            a.iter().copied().filter(|&e| e != x).chain([y]).collect();
                        c.sort_unstable();
                        self.bases.contains(&c)
                    });
                    if !found {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Integer matrix acting on character lattices (the codifferential of a
/// torus homomorphism).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeMap {
    rows: Vec<Vec<i64>>,
    cols: usize,
}

impl LatticeMap {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        let cols = rows.first().ok_or(Error::EmptyInput("lattice map"))?.len();
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::InvalidInput("ragged lattice map".to_string()));
        }
        Ok(LatticeMap { rows, cols })
    }

    pub fn identity(dim: usize) -> Self {
        LatticeMap {
            rows: (0..dim)
                .map(|i| (0..dim).map(|j| i64::from(i == j)).collect())
                .collect(),
            cols: dim,
        }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn apply(&self, v: &QVec) -> Result<QVec> {
        v.check_dim(self.cols)?;
        Ok(QVec::new(
            self.rows
                .iter()
                .map(|r| {
                    r.iter()
                        .zip(v.iter())
                        .map(|(&a, x)| rat(a) * x)
                        .sum::<Rat>()
                })
                .collect(),
        ))
    }
}

/// The hypersimplex `conv{e_J : |J| = n}` = `{0 <= a_i <= 1, sum a = n}`,
/// with `C(m, n)` vertices.
pub fn hypersimplex(m: usize, n: usize) -> Result<Polytope> {
    if n == 0 || n >= m {
        return Err(Error::InvalidInput(format!(
            "hypersimplex needs 1 <= n < m, got ({m}, {n})"
        )));
    }
    let points: Vec<QVec> = (0..m)
        .combinations(n)
        .map(|c| QVec::indicator(m, &c))
        .collect();
    Polytope::convex_hull(&points)
}

/// Plücker coordinates of an `n x m` matrix of full row rank `n`: the entry
/// at `J` is the determinant of the column submatrix `J`, with columns taken
/// in increasing order.
pub fn plucker(config: &QMatrix) -> Result<PluckerVector> {
    let n = config.rows();
    let m = config.cols();
    if n == 0 || m < n {
        return Err(Error::InvalidInput("need an n x m matrix, n <= m".to_string()));
    }
    if config.rank() < n {
        return Err(Error::RankDeficient);
    }
    let mut entries = Vec::new();
    for subset in (0..m).combinations(n) {
        let mut minor = QMatrix::zero(n, n);
        for (jj, &col) in subset.iter().enumerate() {
            for i in 0..n {
                minor.set(i, jj, config.get(i, col).clone());
            }
        }
        entries.push((subset, minor.det()));
    }
    Ok(PluckerVector { m, n, entries })
}

/// Matroid of a Plücker vector: bases are the subsets with nonzero minors.
pub fn matroid_data(pv: &PluckerVector) -> MatroidData {
    let bases: BTreeSet<Vec<usize>> = pv.support().into_iter().collect();
    MatroidData::new(pv.m, pv.n, bases)
        .expect("a representable matroid satisfies basis exchange")
}

/// The matroid polytope `conv{e_J : p_J != 0}`: the moment image of the
/// torus-orbit closure through the Plücker point. Equals the hypersimplex
/// exactly when every minor is nonzero.
pub fn matroid_polytope(pv: &PluckerVector) -> Polytope {
    let points: Vec<QVec> = pv
        .support()
        .iter()
        .map(|j| QVec::indicator(pv.m, j))
        .collect();
    Polytope::convex_hull(&points).expect("plucker vectors are never identically zero")
}

/// Convex hull of the characters supported at a point.
pub fn weight_polytope(support: &[usize], chars: &WeightSet) -> Result<Polytope> {
    if support.is_empty() {
        return Err(Error::EmptyInput("weight polytope support"));
    }
    let points: Vec<QVec> = support
        .iter()
        .map(|&i| {
            chars
                .characters()
                .get(i)
                .cloned()
                .ok_or_else(|| Error::InvalidInput(format!("support index {i} out of range")))
        })
        .collect::<Result<_>>()?;
    Polytope::convex_hull(&points)
}

/// Image of a polytope under a lattice map: `conv{f(v)}`.
pub fn pushforward(p: &Polytope, f: &LatticeMap) -> Result<Polytope> {
    let images: Vec<QVec> = p
        .vertices()
        .iter()
        .map(|v| f.apply(v))
        .collect::<Result<_>>()?;
    Polytope::convex_hull(&images)
}

/// Weight polytope of the fractional pair linearization: the Minkowski sum
/// `base + (1/n) fiber`. Converges to `base` vertex-wise as `n` grows.
pub fn tensor_linearization(base: &Polytope, fiber: &Polytope, n: u32) -> Result<Polytope> {
    if base.ambient_dim() != fiber.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: base.ambient_dim(),
            got: fiber.ambient_dim(),
        });
    }
    if n == 0 {
        return Err(Error::InvalidInput("tensor power must be positive".to_string()));
    }
    let inv = rat(1) / rat(i64::from(n));
    let mut sums = Vec::with_capacity(base.vertices().len() * fiber.vertices().len());
    for b in base.vertices() {
        for f in fiber.vertices() {
            sums.push(b.add(&f.scale(&inv)));
        }
    }
    Polytope::convex_hull(&sums)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::ratio;

    #[test]
    fn hypersimplex_examples() {
        let h42 = hypersimplex(4, 2).unwrap();
        assert_eq!(h42.vertices().len(), 6);
        assert_eq!(h42.affine_dim(), 3);
        assert_eq!(h42.facets().len(), 8);

        // (m, 1) is the standard simplex
        let s = hypersimplex(5, 1).unwrap();
        assert_eq!(s.vertices().len(), 5);
        assert_eq!(s.affine_dim(), 4);

        assert_eq!(hypersimplex(5, 2).unwrap().vertices().len(), 10);
        assert!(hypersimplex(3, 0).is_err());
        assert!(hypersimplex(3, 3).is_err());

        // a middle rank: C(6,3) vertices and both facet families
        let h63 = hypersimplex(6, 3).unwrap();
        assert_eq!(h63.vertices().len(), 20);
        assert_eq!(h63.affine_dim(), 5);
        assert_eq!(h63.facets().len(), 12);
    }

    #[test]
    fn plucker_hand_minors() {
        let cfg = QMatrix::from_int_rows(&[vec![1, 0, 1, 1], vec![0, 1, 1, 2]]);
        let pv = plucker(&cfg).unwrap();
        let expect = [
            (vec![0, 1], 1),
            (vec![0, 2], 1),
            (vec![0, 3], 2),
            (vec![1, 2], -1),
            (vec![1, 3], -1),
            (vec![2, 3], 1),
        ];
        for (j, v) in expect {
            assert_eq!(pv.entry(&j).unwrap(), &rat(v), "minor {j:?}");
        }
    }

    #[test]
    fn plucker_equal_columns_kill_minor() {
        let cfg = QMatrix::from_int_rows(&[vec![1, 1, 0], vec![0, 0, 1]]);
        let pv = plucker(&cfg).unwrap();
        assert_eq!(pv.entry(&[0, 1]).unwrap(), &rat(0));
        assert_eq!(pv.entry(&[0, 2]).unwrap(), &rat(1));
        assert_eq!(pv.entry(&[1, 2]).unwrap(), &rat(1));
    }

    #[test]
    fn plucker_identity_and_rank_errors() {
        let id = QMatrix::from_int_rows(&[vec![1, 0], vec![0, 1]]);
        assert_eq!(plucker(&id).unwrap().entry(&[0, 1]).unwrap(), &rat(1));
        let degenerate = QMatrix::from_int_rows(&[vec![1, 2, 3], vec![2, 4, 6]]);
        assert_eq!(plucker(&degenerate).unwrap_err(), Error::RankDeficient);
    }

    #[test]
    fn matroid_polytope_cases() {
        let cfg = QMatrix::from_int_rows(&[vec![1, 0, 1, 1], vec![0, 1, 1, 2]]);
        let p = matroid_polytope(&plucker(&cfg).unwrap());
        assert_eq!(p, hypersimplex(4, 2).unwrap());

        // proportional columns 1 and 2 delete the vertex e_{12}
        let cfg2 = QMatrix::from_int_rows(&[vec![1, 2, 1, 1], vec![1, 2, 2, 3]]);
        let p2 = matroid_polytope(&plucker(&cfg2).unwrap());
        assert_eq!(p2.vertices().len(), 5);
        assert!(!p2
            .vertices()
            .contains(&QVec::indicator(4, &[0, 1])));

        let md = matroid_data(&plucker(&cfg2).unwrap());
        assert_eq!(md.bases.len(), 5);

        // a single nonzero entry collapses the polytope to one vertex
        let id = QMatrix::from_int_rows(&[vec![1, 0], vec![0, 1]]);
        let point = matroid_polytope(&plucker(&id).unwrap());
        assert_eq!(point.vertices(), &[QVec::from_ints(&[1, 1])]);
        assert_eq!(point.affine_dim(), 0);
    }

    #[test]
    fn weight_polytope_cases() {
        let chars = WeightSet::new(vec![
            QVec::from_ints(&[1, 0]),
            QVec::from_ints(&[0, 1]),
            QVec::from_ints(&[1, 1]),
        ])
        .unwrap();
        let seg = weight_polytope(&[0, 1], &chars).unwrap();
        assert_eq!(seg.affine_dim(), 1);
        assert_eq!(seg.vertices().len(), 2);
        let pt = weight_polytope(&[2], &chars).unwrap();
        assert_eq!(pt.affine_dim(), 0);
        assert!(weight_polytope(&[], &chars).is_err());
    }

    #[test]
    fn pushforward_cases() {
        let h = hypersimplex(4, 2).unwrap();
        // project to the first coordinate: range [0, 1]
        let proj = LatticeMap::new(vec![vec![1, 0, 0, 0]]).unwrap();
        let seg = pushforward(&h, &proj).unwrap();
        assert_eq!(
            seg.vertices(),
            &[QVec::from_ints(&[0]), QVec::from_ints(&[1])]
        );
        // identity is a no-op
        assert_eq!(pushforward(&h, &LatticeMap::identity(4)).unwrap(), h);
        // a1 + a2 has range [0, 2] with extremes at e_{12} and e_{34}
        let sum12 = LatticeMap::new(vec![vec![1, 1, 0, 0]]).unwrap();
        let seg2 = pushforward(&h, &sum12).unwrap();
        assert_eq!(
            seg2.vertices(),
            &[QVec::from_ints(&[0]), QVec::from_ints(&[2])]
        );
    }

    #[test]
    fn tensor_linearization_cases() {
        let pt = Polytope::convex_hull(&[QVec::from_ints(&[3])]).unwrap();
        let unit = Polytope::convex_hull(&[QVec::from_ints(&[0]), QVec::from_ints(&[1])]).unwrap();
        let shifted = tensor_linearization(&pt, &unit, 2).unwrap();
        assert_eq!(
            shifted.vertices(),
            &[QVec::from_ints(&[3]), QVec::new(vec![ratio(7, 2)])]
        );
        let sum = tensor_linearization(&unit, &unit, 1).unwrap();
        assert_eq!(
            sum.vertices(),
            &[QVec::from_ints(&[0]), QVec::from_ints(&[2])]
        );
        // slab of thickness 1/10 over a segment
        let seg = Polytope::convex_hull(&[QVec::from_ints(&[0, 0]), QVec::from_ints(&[1, 0])])
            .unwrap();
        let square = Polytope::convex_hull(&[
            QVec::from_ints(&[0, 0]),
            QVec::from_ints(&[1, 0]),
            QVec::from_ints(&[0, 1]),
            QVec::from_ints(&[1, 1]),
        ])
        .unwrap();
        let slab = tensor_linearization(&seg, &square, 10).unwrap();
        assert_eq!(slab.affine_dim(), 2);
        assert!(slab.vertices().contains(&QVec::new(vec![rat(0), ratio(1, 10)])));
        assert!(slab.vertices().contains(&QVec::new(vec![ratio(11, 10), ratio(1, 10)])));
    }

    #[test]
    fn exchange_axiom_rejected_on_bad_bases() {
        // {1,2} and {3,4} alone violate exchange
        let bad: BTreeSet<Vec<usize>> = [vec![0, 1], vec![2, 3]].into_iter().collect();
        assert!(MatroidData::new(4, 2, bad).is_err());
        let good: BTreeSet<Vec<usize>> = [vec![0, 1], vec![0, 2], vec![1, 2]].into_iter().collect();
        assert!(MatroidData::new(3, 2, good).is_ok());
    }
}
