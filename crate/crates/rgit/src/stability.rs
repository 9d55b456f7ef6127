//! Stability classification for torus actions (membership of the shifted
//! origin in a weight polytope) and for SL(n) acting on configurations of
//! points in projective space (the cluster/subspace inequalities), together
//! with the correspondence check identifying the two models and an
//! independent one-parameter-subgroup oracle.

use itertools::Itertools;
use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::{rank_of, reject_from_span, QMatrix};
use crate::moment::{matroid_polytope, plucker, WeightSet};
use crate::partitions::SetPartition;
use crate::polytope::{Membership, Polytope};
use crate::qvec::QVec;
use crate::rat::{rat, sign, Rat};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StabilityClass {
    Stable,
    StrictlySemistable,
    Unstable,
}

impl StabilityClass {
    pub fn is_semistable(self) -> bool {
        self != StabilityClass::Unstable
    }

    pub fn as_str(self) -> &'static str {
        match self {
            StabilityClass::Stable => "stable",
            StabilityClass::StrictlySemistable => "strictly_semistable",
            StabilityClass::Unstable => "unstable",
        }
    }
}

/// Classification outcome: the class, the sign and squared magnitude of the
/// numerical function, and the critical or violating index sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilityVerdict {
    pub class: StabilityClass,
    pub numerical: (i8, Rat),
    pub witnesses: Vec<Vec<usize>>,
}

impl StabilityVerdict {
    fn new(class: StabilityClass, numerical: (i8, Rat), witnesses: Vec<Vec<usize>>) -> Self {
        debug_assert_eq!(
            numerical.0,
            match class {
                StabilityClass::Stable => -1,
                StabilityClass::StrictlySemistable => 0,
                StabilityClass::Unstable => 1,
            },
            "sign must match the class"
        );
        StabilityVerdict {
            class,
            numerical,
            witnesses,
        }
    }

    pub fn is_semistable(&self) -> bool {
        self.class.is_semistable()
    }
}

/// A linearization point: `alpha` of length `m` with `sum(alpha) = n`
/// exactly. Effectivity (`0 <= alpha_i <= 1`) is a separate predicate so
/// that non-effective linearizations can still be classified as unstable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightVector {
    alpha: QVec,
    n: u32,
}

impl WeightVector {
    pub fn new(alpha: QVec, n: u32) -> Result<Self> {
        if alpha.coord_sum() != rat(i64::from(n)) {
            return Err(Error::InvalidInput(format!(
                "weight coordinates must sum to {n}"
            )));
        }
        Ok(WeightVector { alpha, n })
    }

    pub fn parse(s: &str, n: u32) -> Result<Self> {
        WeightVector::new(QVec::parse(s)?, n)
    }

    pub fn alpha(&self) -> &QVec {
        &self.alpha
    }

    pub fn m(&self) -> usize {
        self.alpha.dim()
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// True when `0 <= alpha_i <= 1` for all `i` (the effectivity box).
    pub fn is_effective(&self) -> bool {
        self.alpha
            .iter()
            .all(|a| sign(a) >= 0 && *a <= rat(1))
    }

    pub fn permute(&self, perm: &[usize]) -> WeightVector {
        WeightVector {
            alpha: self.alpha.permute(perm),
            n: self.n,
        }
    }
}

/// Points of `(P^1)^m` up to coincidence: the partition is the complete
/// stability invariant; explicit coordinates, when given, must induce it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConfigurationP1 {
    partition: SetPartition,
    coords: Option<Vec<(Rat, Rat)>>,
}

impl ConfigurationP1 {
    pub fn from_partition(partition: SetPartition) -> Self {
        ConfigurationP1 {
            partition,
            coords: None,
        }
    }

    pub fn from_coords(coords: Vec<(Rat, Rat)>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::EmptyInput("configuration"));
        }
        for (a, b) in &coords {
            if a.is_zero() && b.is_zero() {
                return Err(Error::InvalidInput(
                    "projective point cannot be (0:0)".to_string(),
                ));
            }
        }
        let m = coords.len();
        let mut labels: Vec<Option<usize>> = vec![None; m];
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for i in 0..m {
            if labels[i].is_some() {
                continue;
            }
            let mut block = vec![i];
            labels[i] = Some(blocks.len());
            for j in i + 1..m {
                if labels[j].is_none() && projectively_equal(&coords[i], &coords[j]) {
                    labels[j] = Some(blocks.len());
                    block.push(j);
                }
            }
            blocks.push(block);
        }
        Ok(ConfigurationP1 {
            partition: SetPartition::new(m, blocks)?,
            coords: Some(coords),
        })
    }

    pub fn new(partition: SetPartition, coords: Vec<(Rat, Rat)>) -> Result<Self> {
        let derived = ConfigurationP1::from_coords(coords)?;
        if derived.partition != partition {
            return Err(Error::InvalidInput(
                "coordinates do not realize the stated coincidence partition".to_string(),
            ));
        }
        Ok(ConfigurationP1 {
            partition,
            coords: derived.coords,
        })
    }

    pub fn partition(&self) -> &SetPartition {
        &self.partition
    }

    pub fn coords(&self) -> Option<&[(Rat, Rat)]> {
        self.coords.as_deref()
    }

    pub fn m(&self) -> usize {
        self.partition.m()
    }
}

fn projectively_equal(p: &(Rat, Rat), q: &(Rat, Rat)) -> bool {
    (&p.0 * &q.1 - &p.1 * &q.0).is_zero()
}

/// An `n x m` matrix of homogeneous coordinates of `m` points in `P^{n-1}`;
/// columns are nonzero, and all operations are invariant under column
/// scaling. The proper flats of the column matroid are computed once and
/// cached, since they depend only on the matrix.
#[derive(Clone, Debug)]
pub struct SLnConfig {
    matrix: QMatrix,
    flats: std::sync::OnceLock<Vec<(Vec<usize>, usize)>>,
}

impl PartialEq for SLnConfig {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}

impl Eq for SLnConfig {}

impl SLnConfig {
    pub fn new(matrix: QMatrix) -> Result<Self> {
        if matrix.rows() == 0 || matrix.cols() == 0 {
            return Err(Error::EmptyInput("configuration matrix"));
        }
        for j in 0..matrix.cols() {
            if matrix.col(j).is_zero() {
                return Err(Error::InvalidInput(format!("column {} is zero", j + 1)));
            }
        }
        Ok(SLnConfig {
            matrix,
            flats: std::sync::OnceLock::new(),
        })
    }

    pub fn matrix(&self) -> &QMatrix {
        &self.matrix
    }

    pub fn n(&self) -> usize {
        self.matrix.rows()
    }

    pub fn m(&self) -> usize {
        self.matrix.cols()
    }

    /// A rank-2 matrix realizing a coincidence partition on `P^1`: block `b`
    /// becomes the point `(1 : b)`. Needs at least two blocks.
    pub fn realize_partition(p: &SetPartition) -> Result<SLnConfig> {
        if p.blocks().len() < 2 {
            return Err(Error::RankDeficient);
        }
        let rgs = p.to_rgs();
        let mut matrix = QMatrix::zero(2, p.m());
        for (i, &b) in rgs.iter().enumerate() {
            matrix.set(0, i, rat(1));
            matrix.set(1, i, rat(b as i64));
        }
        SLnConfig::new(matrix)
    }

    fn column_rank(&self, cols: &[usize]) -> usize {
        rank_of(&cols.iter().map(|&j| self.matrix.col(j)).collect::<Vec<_>>())
    }

    /// Proper flats of the column matroid: closed column subsets of rank
    /// strictly below `n`, each the full set of columns inside its span.
    pub fn proper_flats(&self) -> &[(Vec<usize>, usize)] {
        self.flats.get_or_init(|| compute_proper_flats(self))
    }
}

/// Torus classification of `mu` against a weight polytope, with
/// full-dimensionality measured against the polytope's ambient space.
pub fn torus_classify(p: &Polytope, mu: &QVec) -> Result<StabilityVerdict> {
    torus_classify_in(p, mu, p.ambient_dim())
}

/// Torus classification inside an effective character space of dimension
/// `effective_dim` (for the hypersimplex world this is the sum-slice,
/// dimension `m - 1`): interior of a full-dimensional weight polytope is
/// stable, boundary or a lower-dimensional polytope is strictly semistable,
/// outside is unstable. The numerical value is the signed squared distance
/// to the boundary.
pub fn torus_classify_in(
    p: &Polytope,
    mu: &QVec,
    effective_dim: usize,
) -> Result<StabilityVerdict> {
    let numerical = p.signed_sq_distance_rel(mu, effective_dim)?;
    let class = match numerical.0 {
        -1 => StabilityClass::Stable,
        0 => StabilityClass::StrictlySemistable,
        _ => StabilityClass::Unstable,
    };
    Ok(StabilityVerdict::new(class, numerical, Vec::new()))
}

/// Class only, skipping distance computations; used by bulk checks.
pub fn torus_class_in(p: &Polytope, mu: &QVec, effective_dim: usize) -> Result<StabilityClass> {
    Ok(match p.membership_rel(mu, effective_dim)? {
        Membership::InteriorFullDim => StabilityClass::Stable,
        Membership::OnBoundary | Membership::RelativeInteriorOnly => {
            StabilityClass::StrictlySemistable
        }
        Membership::Outside => StabilityClass::Unstable,
    })
}

/// Wall data of a cluster: `sum_B alpha - 1` per coincidence block, plus
/// effectivity-facet violations for negative coordinates.
struct ClusterScan {
    violated: Vec<(Vec<usize>, Rat)>,
    critical: Vec<Vec<usize>>,
    /// squared wall distances of all blocks (and violated facets)
    all_sq: Vec<Rat>,
    violated_sq: Vec<Rat>,
}

fn scan_clusters(blocks: &[Vec<usize>], alpha: &QVec) -> ClusterScan {
    let mut scan = ClusterScan {
        violated: Vec::new(),
        critical: Vec::new(),
        all_sq: Vec::new(),
        violated_sq: Vec::new(),
    };
    for (i, a) in alpha.iter().enumerate() {
        if sign(a) < 0 {
            scan.violated.push((vec![i], a * a));
            scan.violated_sq.push(a * a);
        }
    }
    for b in blocks {
        let s: Rat = b.iter().map(|&i| alpha[i].clone()).sum::<Rat>() - rat(1);
        let sq = &s * &s / rat(b.len() as i64);
        scan.all_sq.push(sq.clone());
        match sign(&s) {
            1 => {
                scan.violated.push((b.clone(), sq.clone()));
                scan.violated_sq.push(sq);
            }
            0 => scan.critical.push(b.clone()),
            _ => {}
        }
    }
    scan
}

fn verdict_from_scan(scan: ClusterScan) -> StabilityVerdict {
    if !scan.violated.is_empty() {
        let mag = scan.violated_sq.iter().min().cloned().unwrap_or_default();
        let witnesses = scan.violated.into_iter().map(|(w, _)| w).collect();
        return StabilityVerdict::new(StabilityClass::Unstable, (1, mag), witnesses);
    }
    if !scan.critical.is_empty() {
        return StabilityVerdict::new(
            StabilityClass::StrictlySemistable,
            (0, Rat::zero()),
            scan.critical,
        );
    }
    let mag = scan.all_sq.iter().min().cloned().unwrap_or_default();
    StabilityVerdict::new(StabilityClass::Stable, (-1, mag), Vec::new())
}

/// SL(2) classification of a configuration on `P^1`: semistable when every
/// coincidence block `B` satisfies `sum_B alpha <= 1`, stable when all
/// inequalities are strict. The numerical field reports the squared
/// distance to the nearest violated or critical cluster wall.
pub fn sl2_classify(cfg: &ConfigurationP1, w: &WeightVector) -> Result<StabilityVerdict> {
    if w.n() != 2 {
        return Err(Error::InvalidInput("sl2 classification needs n = 2".to_string()));
    }
    if w.m() != cfg.m() {
        return Err(Error::DimensionMismatch {
            expected: cfg.m(),
            got: w.m(),
        });
    }
    Ok(verdict_from_scan(scan_clusters(
        cfg.partition().blocks(),
        w.alpha(),
    )))
}

/// Class-only SL(2) fast path over a bare partition.
pub fn sl2_class(partition: &SetPartition, alpha: &QVec) -> StabilityClass {
    if alpha.iter().any(|a| sign(a) < 0) {
        return StabilityClass::Unstable;
    }
    let mut critical = false;
    for b in partition.blocks() {
        let s: Rat = b.iter().map(|&i| alpha[i].clone()).sum();
        match sign(&(s - rat(1))) {
            1 => return StabilityClass::Unstable,
            0 => critical = true,
            _ => {}
        }
    }
    if critical {
        StabilityClass::StrictlySemistable
    } else {
        StabilityClass::Stable
    }
}

/// SL(n) classification by subspace weights: semistable when every column
/// subset spanning a proper subspace of dimension `d` carries weight at most
/// `d`, stable when all such inequalities are strict. Enumerates the flats
/// of the column matroid (closed subsets), so witnesses are maximal.
/// Exponential in `m`; intended for m up to about 10.
pub fn sln_classify(cfg: &SLnConfig, w: &WeightVector) -> Result<StabilityVerdict> {
    let n = cfg.n();
    let m = cfg.m();
    if w.n() as usize != n {
        return Err(Error::InvalidInput(format!(
            "weight target rank {} does not match configuration rank {n}",
            w.n()
        )));
    }
    if w.m() != m {
        return Err(Error::DimensionMismatch {
            expected: m,
            got: w.m(),
        });
    }
    if cfg.matrix.rank() < n {
        return Err(Error::RankDeficient);
    }
    let alpha = w.alpha();
    let mut scan = ClusterScan {
        violated: Vec::new(),
        critical: Vec::new(),
        all_sq: Vec::new(),
        violated_sq: Vec::new(),
    };
    for (i, a) in alpha.iter().enumerate() {
        if sign(a) < 0 {
            scan.violated.push((vec![i], a * a));
            scan.violated_sq.push(a * a);
        }
    }
    for (subset, d) in cfg.proper_flats() {
        let s: Rat =
            subset.iter().map(|&i| alpha[i].clone()).sum::<Rat>() - rat(*d as i64);
        let sq = &s * &s / rat(subset.len() as i64);
        scan.all_sq.push(sq.clone());
        match sign(&s) {
            1 => {
                scan.violated.push((subset.clone(), sq.clone()));
                scan.violated_sq.push(sq);
            }
            0 => scan.critical.push(subset.clone()),
            _ => {}
        }
    }
    Ok(verdict_from_scan(scan))
}

fn compute_proper_flats(cfg: &SLnConfig) -> Vec<(Vec<usize>, usize)> {
    let m = cfg.m();
    let n = cfg.n();
    let mut flats = Vec::new();
    for size in 1..=m {
        for subset in (0..m).combinations(size) {
            let d = cfg.column_rank(&subset);
            if d >= n {
                continue;
            }
            // closure test: no outside column lies in the span
            let closed = (0..m)
                .filter(|j| !subset.contains(j))
                .all(|j| {
                    let mut ext = subset.clone();
                    ext.push(j);
                    cfg.column_rank(&ext) > d
                });
            if closed {
                flats.push((subset, d));
            }
        }
    }
    flats
}

/// Cross-validation of the two models: the SL(n) classification of a
/// configuration agrees with the torus classification of its Plücker
/// matroid polytope at the same weights, inside the sum-slice.
pub fn gm_check(cfg: &SLnConfig, w: &WeightVector) -> Result<bool> {
    let direct = sln_classify(cfg, w)?.class;
    let pv = plucker(cfg.matrix())?;
    let poly = matroid_polytope(&pv);
    let via_torus = torus_class_in(&poly, w.alpha(), w.m() - 1)?;
    Ok(direct == via_torus)
}

/// Brute-force Hilbert–Mumford oracle: classify `mu` against the convex
/// hull of a weight set by pairing candidate one-parameter-subgroup
/// directions (facet normals, hull normals, pairwise differences) with the
/// shifted weights and taking the extremal sign. `slice_normals` restricts
/// directions to an effective subtorus (empty for the full ambient torus).
pub fn oracle_1ps(
    weights: &WeightSet,
    mu: &QVec,
    slice_normals: &[QVec],
) -> Result<StabilityVerdict> {
    Ok(oracle_1ps_with_direction(weights, mu, slice_normals)?.0)
}

/// As `oracle_1ps`, also returning a separating direction when unstable.
pub fn oracle_1ps_with_direction(
    weights: &WeightSet,
    mu: &QVec,
    slice_normals: &[QVec],
) -> Result<(StabilityVerdict, Option<QVec>)> {
    mu.check_dim(weights.rank())?;
    let hull = Polytope::convex_hull(weights.characters())?;
    let project = |v: &QVec| reject_from_span(v, slice_normals);

    let mut candidates: Vec<QVec> = Vec::new();
    let mut push = |v: QVec| {
        if !v.is_zero() {
            candidates.push(v.neg());
            candidates.push(v);
        }
    };
    for f in hull.facets() {
        push(project(f.normal()));
    }
    for h in hull.hull_equalities() {
        push(project(h.normal()));
    }
    let chars = weights.characters();
    for i in 0..chars.len() {
        push(project(&chars[i].sub(mu)));
        for j in i + 1..chars.len() {
            push(project(&chars[i].sub(&chars[j])));
        }
    }
    candidates.sort();
    candidates.dedup();

    let mut best_unstable: Option<(Rat, QVec)> = None;
    let mut any_zero = false;
    let mut min_stable_sq: Option<Rat> = None;
    for lambda in &candidates {
        let pairing = chars
            .iter()
            .map(|c| c.sub(mu).dot(lambda))
            .min()
            .expect("weight set is nonempty");
        let sq = &pairing * &pairing / lambda.norm_sq();
        match sign(&pairing) {
            1 => {
                if best_unstable.as_ref().is_none_or(|(b, _)| sq > *b) {
                    best_unstable = Some((sq, lambda.clone()));
                }
            }
            0 => any_zero = true,
            _ => {
                if min_stable_sq.as_ref().is_none_or(|b| sq < *b) {
                    min_stable_sq = Some(sq);
                }
            }
        }
    }

    if let Some((sq, dir)) = best_unstable {
        let v = StabilityVerdict::new(StabilityClass::Unstable, (1, sq), Vec::new());
        return Ok((v, Some(dir)));
    }
    if any_zero {
        return Ok((
            StabilityVerdict::new(
                StabilityClass::StrictlySemistable,
                (0, Rat::zero()),
                Vec::new(),
            ),
            None,
        ));
    }
    let mag = min_stable_sq.unwrap_or_default();
    Ok((
        StabilityVerdict::new(StabilityClass::Stable, (-1, mag), Vec::new()),
        None,
    ))
}

/// Classifies many partitions at one weight vector, in input order.
pub fn classify_partitions(
    partitions: &[SetPartition],
    alpha: &QVec,
) -> Vec<StabilityClass> {
    partitions
        .par_iter()
        .map(|p| sl2_class(p, alpha))
        .collect()
}

/// Classification along a specified deformation direction: the class at
/// `alpha + t * direction` for infinitesimal positive `t`, decided by
/// lexicographic signs. This resolves configurations sitting on walls when
/// a path is prescribed; no default direction is ever chosen.
pub fn sl2_class_perturbed(
    partition: &SetPartition,
    alpha: &QVec,
    direction: &QVec,
) -> StabilityClass {
    let lex = |value: Rat, rate: Rat| -> i8 {
        match sign(&value) {
            0 => sign(&rate),
            s => s,
        }
    };
    for (i, a) in alpha.iter().enumerate() {
        if lex(a.clone(), direction[i].clone()) < 0 {
            return StabilityClass::Unstable;
        }
    }
    let mut critical = false;
    for b in partition.blocks() {
        let value: Rat = b.iter().map(|&i| alpha[i].clone()).sum::<Rat>() - rat(1);
        let rate: Rat = b.iter().map(|&i| direction[i].clone()).sum();
        match lex(value, rate) {
            1 => return StabilityClass::Unstable,
            0 => critical = true,
            _ => {}
        }
    }
    if critical {
        StabilityClass::StrictlySemistable
    } else {
        StabilityClass::Stable
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moment::hypersimplex;
    use crate::partitions::all_partitions;
    use crate::rat::ratio;

    fn wv(coords: &[(i64, i64)], n: u32) -> WeightVector {
        WeightVector::new(
            QVec::new(coords.iter().map(|&(a, b)| ratio(a, b)).collect()),
            n,
        )
        .unwrap()
    }

    fn half4() -> WeightVector {
        wv(&[(1, 2), (1, 2), (1, 2), (1, 2)], 2)
    }

    #[test]
    fn weight_vector_validation() {
        assert!(WeightVector::parse("1/2,1/2,1/2,1/2", 2).is_ok());
        assert!(WeightVector::parse("1/2,1/2", 2).is_err());
        let outside = WeightVector::parse("9/8,1/2,1/8,1/4", 2).unwrap();
        assert!(!outside.is_effective());
    }

    #[test]
    fn torus_classify_hypersimplex_cases() {
        let h = hypersimplex(4, 2).unwrap();
        let center = QVec::new(vec![ratio(1, 2); 4]);
        // in the sum-slice the hypersimplex is full-dimensional
        let v = torus_classify_in(&h, &center, 3).unwrap();
        assert_eq!(v.class, StabilityClass::Stable);
        assert_eq!(v.numerical.0, -1);

        let vertex = QVec::from_ints(&[1, 1, 0, 0]);
        let v = torus_classify_in(&h, &vertex, 3).unwrap();
        assert_eq!(v.class, StabilityClass::StrictlySemistable);
        assert_eq!(v.numerical, (0, Rat::zero()));

        let outside = QVec::new(vec![ratio(9, 8), ratio(1, 2), ratio(1, 8), ratio(1, 4)]);
        let v = torus_classify_in(&h, &outside, 3).unwrap();
        assert_eq!(v.class, StabilityClass::Unstable);

        // ambient semantics: the center is only relative-interior
        assert_eq!(
            torus_classify(&h, &center).unwrap().class,
            StabilityClass::StrictlySemistable
        );
    }

    #[test]
    fn sl2_classify_cases() {
        let distinct = ConfigurationP1::from_partition(SetPartition::discrete(4));
        let v = sl2_classify(&distinct, &half4()).unwrap();
        assert_eq!(v.class, StabilityClass::Stable);

        let pair = ConfigurationP1::from_partition(SetPartition::parse("12|3|4", 4).unwrap());
        let v = sl2_classify(&pair, &half4()).unwrap();
        assert_eq!(v.class, StabilityClass::StrictlySemistable);
        assert_eq!(v.witnesses, vec![vec![0, 1]]);

        let triple = ConfigurationP1::from_partition(SetPartition::parse("123|4", 4).unwrap());
        let v = sl2_classify(&triple, &half4()).unwrap();
        assert_eq!(v.class, StabilityClass::Unstable);
        assert_eq!(v.witnesses, vec![vec![0, 1, 2]]);
        assert_eq!(v.numerical, (1, ratio(1, 12))); // (3/2 - 1)^2 / 3
    }

    #[test]
    fn sl2_rejects_negative_weights() {
        let w = WeightVector::parse("-1/2,1/2,1,1", 2).unwrap();
        let distinct = ConfigurationP1::from_partition(SetPartition::discrete(4));
        let v = sl2_classify(&distinct, &w).unwrap();
        assert_eq!(v.class, StabilityClass::Unstable);
        assert_eq!(v.witnesses[0], vec![0]);
    }

    #[test]
    fn sln_classify_cases() {
        // n=2, all columns pairwise independent
        let cfg = SLnConfig::new(QMatrix::from_int_rows(&[
            vec![1, 0, 1, 1],
            vec![0, 1, 1, 2],
        ]))
        .unwrap();
        let v = sln_classify(&cfg, &half4()).unwrap();
        assert_eq!(v.class, StabilityClass::Stable);

        // columns 1 and 2 coincide
        let cfg2 = SLnConfig::new(QMatrix::from_int_rows(&[
            vec![1, 1, 1, 1],
            vec![0, 0, 1, 2],
        ]))
        .unwrap();
        let v = sln_classify(&cfg2, &half4()).unwrap();
        assert_eq!(v.class, StabilityClass::StrictlySemistable);
        assert_eq!(v.witnesses, vec![vec![0, 1]]);

        // n=3, m=4 generic with weights 3/4 each
        let cfg3 = SLnConfig::new(QMatrix::from_int_rows(&[
            vec![1, 0, 0, 1],
            vec![0, 1, 0, 1],
            vec![0, 0, 1, 1],
        ]))
        .unwrap();
        let w3 = wv(&[(3, 4), (3, 4), (3, 4), (3, 4)], 3);
        let v = sln_classify(&cfg3, &w3).unwrap();
        assert_eq!(v.class, StabilityClass::Stable);

        let flat = SLnConfig::new(QMatrix::from_int_rows(&[vec![1, 1], vec![1, 1]]));
        assert_eq!(
            sln_classify(&flat.unwrap(), &wv(&[(1, 1), (1, 1)], 2)).unwrap_err(),
            Error::RankDeficient
        );
    }

    #[test]
    fn gm_check_basic_cases() {
        let generic = SLnConfig::new(QMatrix::from_int_rows(&[
            vec![1, 0, 1, 1],
            vec![0, 1, 1, 2],
        ]))
        .unwrap();
        assert!(gm_check(&generic, &half4()).unwrap());

        let pair = SLnConfig::realize_partition(&SetPartition::parse("12|3|4", 4).unwrap())
            .unwrap();
        assert!(gm_check(&pair, &half4()).unwrap());

        // weights outside the hypersimplex: both models say unstable
        let w = WeightVector::parse("9/8,1/2,1/8,1/4", 2).unwrap();
        assert!(gm_check(&generic, &w).unwrap());
        let wneg = WeightVector::parse("-1/4,3/4,3/4,3/4", 2).unwrap();
        assert!(gm_check(&generic, &wneg).unwrap());
    }

    #[test]
    fn gm_check_exhaustive_m4() {
        let weights = [
            half4(),
            wv(&[(1, 3), (1, 3), (2, 3), (2, 3)], 2),
            wv(&[(1, 6), (1, 2), (2, 3), (2, 3)], 2),
            wv(&[(4, 5), (2, 5), (2, 5), (2, 5)], 2),
            wv(&[(1, 1), (1, 3), (1, 3), (1, 3)], 2),
        ];
        for p in all_partitions(4) {
            if p.blocks().len() < 2 {
                continue; // no rank-2 realization
            }
            let cfg = SLnConfig::realize_partition(&p).unwrap();
            for w in &weights {
                assert!(gm_check(&cfg, w).unwrap(), "partition {p} at {:?}", w.alpha());
            }
        }
    }

    #[test]
    fn oracle_matches_torus_on_hypersimplex() {
        let h = hypersimplex(4, 2).unwrap();
        let weights = WeightSet::new(h.vertices().to_vec()).unwrap();
        let ones = vec![QVec::from_ints(&[1, 1, 1, 1])];
        let cases = [
            QVec::new(vec![ratio(1, 2); 4]),
            QVec::from_ints(&[1, 1, 0, 0]),
            QVec::new(vec![ratio(9, 8), ratio(1, 2), ratio(1, 8), ratio(1, 4)]),
        ];
        for mu in &cases {
            let direct = torus_classify_in(&h, mu, 3).unwrap();
            let (oracle, dir) = oracle_1ps_with_direction(&weights, mu, &ones).unwrap();
            assert_eq!(direct.class, oracle.class, "mu = {mu}");
            if oracle.class == StabilityClass::Unstable {
                let lambda = dir.expect("separating direction");
                let min_pairing = weights
                    .characters()
                    .iter()
                    .map(|c| c.sub(mu).dot(&lambda))
                    .min()
                    .unwrap();
                assert!(sign(&min_pairing) > 0);
            }
            if direct.class == StabilityClass::Stable {
                assert_eq!(direct.numerical, oracle.numerical);
            }
        }
    }

    #[test]
    fn scale_invariance_of_class() {
        let h = hypersimplex(4, 2).unwrap();
        let mu = QVec::new(vec![ratio(1, 3), ratio(1, 3), ratio(2, 3), ratio(2, 3)]);
        let k = ratio(7, 3);
        let base = torus_classify_in(&h, &mu, 3).unwrap();
        let scaled = torus_classify_in(&h.scale(&k), &mu.scale(&k), 3).unwrap();
        assert_eq!(base.class, scaled.class);
        assert_eq!(&base.numerical.1 * &k * &k, scaled.numerical.1);
    }

    #[test]
    fn refinement_monotonicity_m4() {
        let weights = [
            half4(),
            wv(&[(1, 6), (1, 2), (2, 3), (2, 3)], 2),
            wv(&[(4, 5), (2, 5), (2, 5), (2, 5)], 2),
        ];
        let parts = all_partitions(4);
        for coarse in &parts {
            for fine in &parts {
                if !fine.refines(coarse) {
                    continue;
                }
                for w in &weights {
                    let c = sl2_class(coarse, w.alpha());
                    let f = sl2_class(fine, w.alpha());
                    if c.is_semistable() {
                        assert!(f.is_semistable());
                    }
                    if c == StabilityClass::Stable {
                        assert_eq!(f, StabilityClass::Stable);
                    }
                }
            }
        }
    }

    #[test]
    fn permutation_equivariance() {
        let w = wv(&[(1, 6), (1, 2), (2, 3), (2, 3)], 2);
        let p = SetPartition::parse("12|34", 4).unwrap();
        let perm = [2usize, 0, 3, 1];
        let v1 = sl2_classify(&ConfigurationP1::from_partition(p.clone()), &w).unwrap();
        let v2 = sl2_classify(
            &ConfigurationP1::from_partition(p.permute(&perm)),
            &w.permute(&perm),
        )
        .unwrap();
        assert_eq!(v1.class, v2.class);
        assert_eq!(v1.numerical, v2.numerical);
    }

    #[test]
    fn column_scaling_is_a_symmetry() {
        let w = wv(&[(1, 2), (1, 2), (1, 2), (1, 2)], 2);
        let base = SLnConfig::new(QMatrix::from_int_rows(&[
            vec![1, 1, 1, 1],
            vec![0, 0, 1, 2],
        ]))
        .unwrap();
        let mut scaled_rows = QMatrix::zero(2, 4);
        let scales = [ratio(3, 7), ratio(-2, 1), ratio(1, 5), ratio(4, 1)];
        for i in 0..2 {
            for (j, k) in scales.iter().enumerate() {
                scaled_rows.set(i, j, base.matrix().get(i, j) * k);
            }
        }
        let scaled = SLnConfig::new(scaled_rows).unwrap();
        assert_eq!(
            sln_classify(&base, &w).unwrap(),
            sln_classify(&scaled, &w).unwrap()
        );
    }

    #[test]
    fn perturbed_classification_resolves_wall_points() {
        // the pair {1,2} sits exactly on its wall at the democratic weight
        let alpha = QVec::new(vec![ratio(1, 2); 4]);
        let pair = SetPartition::parse("12|3|4", 4).unwrap();
        assert_eq!(sl2_class(&pair, &alpha), StabilityClass::StrictlySemistable);
        // deform the weight off the wall in both directions
        let toward = QVec::from_ints(&[1, 1, -1, -1]);
        assert_eq!(
            sl2_class_perturbed(&pair, &alpha, &toward),
            StabilityClass::Unstable
        );
        assert_eq!(
            sl2_class_perturbed(&pair, &alpha, &toward.neg()),
            StabilityClass::Stable
        );
        // a partition off every wall ignores the direction
        let distinct = SetPartition::discrete(4);
        assert_eq!(
            sl2_class_perturbed(&distinct, &alpha, &toward),
            StabilityClass::Stable
        );
    }

    #[test]
    fn coords_induce_partition() {
        let cfg = ConfigurationP1::from_coords(vec![
            (rat(1), rat(0)),
            (rat(2), rat(0)),
            (rat(0), rat(1)),
            (rat(1), rat(1)),
        ])
        .unwrap();
        assert_eq!(cfg.partition(), &SetPartition::parse("12|3|4", 4).unwrap());
        assert!(ConfigurationP1::from_coords(vec![(rat(0), rat(0))]).is_err());
        assert!(ConfigurationP1::new(
            SetPartition::discrete(2),
            vec![(rat(1), rat(0)), (rat(2), rat(0))],
        )
        .is_err());
    }
}
