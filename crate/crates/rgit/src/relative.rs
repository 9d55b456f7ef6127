//! Relative stability: combining a fiberwise oracle with a base oracle for
//! pair linearizations over an equivariant fibration, the boundary (limit)
//! linearization, and the concrete instances on forgetful and facet maps of
//! point configurations on the projective line.

use num_traits::Zero;

use crate::chambers::{locate, walls, Wall};
use crate::error::{Error, Result};
use crate::partitions::{all_partitions, SetPartition};
use crate::qvec::QVec;
use crate::rat::{rat, sign, Rat};
use crate::stability::{sl2_class, StabilityClass, WeightVector};

/// Pair linearization mode: an explicit finite tensor power, or the
/// boundary limit of the family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LinearizationMode {
    Finite(u32),
    Limit,
}

/// A base linearization together with a fiber linearization and the mode.
#[derive(Clone, Debug)]
pub struct PairLinearization<L, M> {
    pub base: L,
    pub fiber: M,
    pub mode: LinearizationMode,
}

/// Deterministic stability oracle for base points under a base
/// linearization.
pub type BaseOracle<L> = Box<dyn Fn(usize, &L) -> StabilityClass + Sync + Send>;
/// Deterministic stability oracle for total points under a fiber
/// linearization.
pub type FiberOracle<M> = Box<dyn Fn(usize, &M) -> StabilityClass + Sync + Send>;

/// Finite combinatorial model of an equivariant fibration: base and total
/// point sets, the projection, and the two stability oracles.
pub struct FiberedModel<L, M> {
    base_count: usize,
    projection: Vec<usize>,
    base_oracle: BaseOracle<L>,
    fiber_oracle: FiberOracle<M>,
}

impl<L, M> FiberedModel<L, M> {
    pub fn new(
        base_count: usize,
        projection: Vec<usize>,
        base_oracle: BaseOracle<L>,
        fiber_oracle: FiberOracle<M>,
    ) -> Result<Self> {
        if projection.iter().any(|&b| b >= base_count) {
            return Err(Error::InvalidInput(
                "projection hits a base point out of range".to_string(),
            ));
        }
        Ok(FiberedModel {
            base_count,
            projection,
            base_oracle,
            fiber_oracle,
        })
    }

    pub fn total_count(&self) -> usize {
        self.projection.len()
    }

    pub fn base_count(&self) -> usize {
        self.base_count
    }
}

/// Three-valued combined class: determined by the comparison theorems, or
/// left open when only the inclusion bounds apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CombinedClass {
    Determined(StabilityClass),
    Undetermined,
}

#[derive(Clone, Debug)]
pub struct RelativePointVerdict {
    pub total_index: usize,
    pub base_index: usize,
    pub fiber_class: StabilityClass,
    pub base_class: StabilityClass,
    pub combined: CombinedClass,
}

#[derive(Clone, Debug)]
pub struct RelativeVerdict {
    pub mode: LinearizationMode,
    /// True when no base point is strictly semistable, so the equality form
    /// of the comparison theorem applies and every point is determined.
    pub equality_mode: bool,
    pub points: Vec<RelativePointVerdict>,
}

impl RelativeVerdict {
    pub fn semistable_set(&self) -> Vec<usize> {
        self.points
            .iter()
            .filter(|p| {
                matches!(
                    p.combined,
                    CombinedClass::Determined(c) if c.is_semistable()
                )
            })
            .map(|p| p.total_index)
            .collect()
    }

    pub fn stable_set(&self) -> Vec<usize> {
        self.points
            .iter()
            .filter(|p| matches!(p.combined, CombinedClass::Determined(StabilityClass::Stable)))
            .map(|p| p.total_index)
            .collect()
    }

    pub fn undetermined_set(&self) -> Vec<usize> {
        self.points
            .iter()
            .filter(|p| p.combined == CombinedClass::Undetermined)
            .map(|p| p.total_index)
            .collect()
    }
}

/// Combined classification of every total point under a pair linearization.
///
/// Finite mode with a strictly-semistable-free base applies the equality
/// form: semistable means fiberwise semistable over a stable base point,
/// stable means fiberwise stable over a stable base point. With strictly
/// semistable base points only the inclusion bounds are asserted: fiber- or
/// base-unstable points are unstable, fiber-stable points over stable base
/// points are stable, everything else is left undetermined. Limit mode
/// ignores the fiber oracle, sets semistable = stable = the preimage of the
/// base semistable locus, and refuses ambiguous bases.
pub fn relative_classify<L, M>(
    model: &FiberedModel<L, M>,
    lin: &PairLinearization<L, M>,
) -> Result<RelativeVerdict> {
    let base_classes: Vec<StabilityClass> = (0..model.base_count)
        .map(|b| (model.base_oracle)(b, &lin.base))
        .collect();
    let base_has_sss = base_classes.contains(&StabilityClass::StrictlySemistable);

    if lin.mode == LinearizationMode::Limit && base_has_sss {
        return Err(Error::BoundaryAmbiguous);
    }

    let points = model
        .projection
        .iter()
        .enumerate()
        .map(|(y, &b)| {
            let fiber_class = (model.fiber_oracle)(y, &lin.fiber);
            let base_class = base_classes[b];
            let combined = match lin.mode {
                LinearizationMode::Limit => CombinedClass::Determined(match base_class {
                    StabilityClass::Stable => StabilityClass::Stable,
                    _ => StabilityClass::Unstable,
                }),
                LinearizationMode::Finite(_) => {
                    if base_has_sss {
                        match (base_class, fiber_class) {
                            (StabilityClass::Unstable, _) | (_, StabilityClass::Unstable) => {
                                CombinedClass::Determined(StabilityClass::Unstable)
                            }
                            (StabilityClass::Stable, StabilityClass::Stable) => {
                                CombinedClass::Determined(StabilityClass::Stable)
                            }
                            _ => CombinedClass::Undetermined,
                        }
                    } else {
                        CombinedClass::Determined(match (base_class, fiber_class) {
                            (StabilityClass::Stable, StabilityClass::Stable) => {
                                StabilityClass::Stable
                            }
                            (StabilityClass::Stable, StabilityClass::StrictlySemistable) => {
                                StabilityClass::StrictlySemistable
                            }
                            _ => StabilityClass::Unstable,
                        })
                    }
                }
            };
            RelativePointVerdict {
                total_index: y,
                base_index: b,
                fiber_class,
                base_class,
                combined,
            }
        })
        .collect();

    Ok(RelativeVerdict {
        mode: lin.mode,
        equality_mode: !base_has_sss,
        points,
    })
}

/// The constraint a deformation path hits first.
#[derive(Clone, Debug, PartialEq)]
pub enum CrossedConstraint {
    Wall(Wall),
    /// Exit through the effectivity facet `alpha_i = 0` (1-based index in
    /// reports).
    EffectivityFacet(usize),
}

fn base_index(total: usize, forget: usize) -> Option<usize> {
    match total.cmp(&forget) {
        std::cmp::Ordering::Less => Some(total),
        std::cmp::Ordering::Equal => None,
        std::cmp::Ordering::Greater => Some(total - 1),
    }
}

/// Requires `alpha` to be strictly interior to the effective slice and off
/// every wall; this is the hypothesis of the forgetful-map product theorem.
fn require_wall_free(alpha: &WeightVector) -> Result<()> {
    let (_, on_walls) = locate(alpha)?;
    if !on_walls.is_empty() {
        return Err(Error::WallBase);
    }
    if alpha.alpha().iter().any(|a| a.is_zero()) {
        return Err(Error::WallBase);
    }
    Ok(())
}

/// The displayed deformation of a base weight under the forgetful map:
/// insert `eps` at position `insert_at` and shave `eps/(m-1)` off every
/// other entry, landing back in the `sum = 2` slice.
pub fn forgetful_weights(
    base_alpha: &WeightVector,
    insert_at: usize,
    eps: &Rat,
) -> Result<WeightVector> {
    let m = base_alpha.m() + 1;
    if insert_at >= m {
        return Err(Error::InvalidInput(format!(
            "insert position {insert_at} out of range for m = {m}"
        )));
    }
    let share = eps / rat((m - 1) as i64);
    let coords: Vec<Rat> = (0..m)
        .map(|t| match base_index(t, insert_at) {
            None => eps.clone(),
            Some(j) => base_alpha.alpha()[j].clone() - &share,
        })
        .collect();
    WeightVector::new(QVec::new(coords), 2)
}

/// The exact supremum of deformation parameters below which the deformed
/// weight stays inside one fixed chamber: the minimum positive crossing of
/// the affine path against every relevant wall and every effectivity facet.
pub fn epsilon_threshold(base_alpha: &WeightVector, insert_at: usize) -> Result<Rat> {
    Ok(threshold_with_constraint(base_alpha, insert_at)?.0)
}

fn threshold_with_constraint(
    base_alpha: &WeightVector,
    insert_at: usize,
) -> Result<(Rat, CrossedConstraint)> {
    if base_alpha.n() != 2 {
        return Err(Error::InvalidInput(
            "forgetful instances need n = 2".to_string(),
        ));
    }
    require_wall_free(base_alpha)?;
    let m = base_alpha.m() + 1;
    if insert_at >= m {
        return Err(Error::InvalidInput(format!(
            "insert position {insert_at} out of range for m = {m}"
        )));
    }
    let mut best: Option<(Rat, CrossedConstraint)> = None;
    let mut consider = |eps: Rat, what: CrossedConstraint| {
        if sign(&eps) > 0 && best.as_ref().is_none_or(|(b, _)| eps < *b) {
            best = Some((eps, what));
        }
    };
    // wall crossings along eps -> alpha_tilde(eps), which is affine in eps
    for wall in walls(m, 2)?.into_iter().filter(|w| w.is_relevant()) {
        let contains_insert = wall.indices().contains(&insert_at);
        let base_part: Rat = wall
            .indices()
            .iter()
            .filter_map(|&t| base_index(t, insert_at))
            .map(|j| base_alpha.alpha()[j].clone())
            .sum();
        let s0 = base_part - rat(1);
        let others = wall.indices().len() - usize::from(contains_insert);
        let slope = rat(i64::from(contains_insert)) - rat(others as i64) / rat((m - 1) as i64);
        if slope.is_zero() {
            continue;
        }
        consider(-s0 / slope, CrossedConstraint::Wall(wall));
    }
    // effectivity exits: shaved entries reach zero, the inserted entry
    // reaches the facet wall at eps = 1 (covered by the singleton wall only
    // when it exists; include it explicitly)
    for j in 0..base_alpha.m() {
        let total = if j < insert_at { j } else { j + 1 };
        consider(
            base_alpha.alpha()[j].clone() * rat((m - 1) as i64),
            CrossedConstraint::EffectivityFacet(total + 1),
        );
    }
    consider(rat(1), CrossedConstraint::EffectivityFacet(insert_at + 1));
    Ok(best.expect("a wall-free base has a positive threshold"))
}

/// Verification report for one forgetful-map instance.
#[derive(Clone, Debug)]
pub struct ForgetfulReport {
    pub m: usize,
    pub forget_index: usize,
    pub eps: Rat,
    pub threshold: Rat,
    pub alpha_tilde: WeightVector,
    /// Semistable = stable = pullback of the base stable locus.
    pub equality_verified: bool,
    /// First constraint crossed, reported when `eps >= threshold`.
    pub violated: Option<CrossedConstraint>,
    pub semistable: Vec<SetPartition>,
    pub stable: Vec<SetPartition>,
    pub base_stable_pullback: Vec<SetPartition>,
}

/// Classifies every coincidence partition at the deformed weight and checks
/// the product theorem at the level of loci: below the threshold the
/// semistable and stable sets coincide with the preimage of the base stable
/// partitions under forgetting point `forget_index`.
pub fn forgetful_instance(
    m: usize,
    forget_index: usize,
    base_alpha: &WeightVector,
    eps: &Rat,
) -> Result<ForgetfulReport> {
    if base_alpha.m() + 1 != m {
        return Err(Error::DimensionMismatch {
            expected: m - 1,
            got: base_alpha.m(),
        });
    }
    if sign(eps) <= 0 {
        return Err(Error::InvalidInput("eps must be positive".to_string()));
    }
    let (threshold, crossed) = threshold_with_constraint(base_alpha, forget_index)?;
    let alpha_tilde = forgetful_weights(base_alpha, forget_index, eps)?;

    let total_parts = all_partitions(m);
    let mut semistable = Vec::new();
    let mut stable = Vec::new();
    for p in &total_parts {
        match sl2_class(p, alpha_tilde.alpha()) {
            StabilityClass::Stable => {
                stable.push(p.clone());
                semistable.push(p.clone());
            }
            StabilityClass::StrictlySemistable => semistable.push(p.clone()),
            StabilityClass::Unstable => {}
        }
    }
    let base_stable: Vec<SetPartition> = all_partitions(m - 1)
        .into_iter()
        .filter(|p| sl2_class(p, base_alpha.alpha()) == StabilityClass::Stable)
        .collect();
    let base_stable_pullback: Vec<SetPartition> = total_parts
        .iter()
        .filter(|p| base_stable.contains(&p.forget(forget_index)))
        .cloned()
        .collect();

    let equality_verified =
        semistable == stable && semistable == base_stable_pullback;
    let violated = (*eps >= threshold).then_some(crossed);
    Ok(ForgetfulReport {
        m,
        forget_index,
        eps: eps.clone(),
        threshold,
        alpha_tilde,
        equality_verified,
        violated,
        semistable,
        stable,
        base_stable_pullback,
    })
}

/// Verification report for a facet weight (`alpha_i = 1`).
#[derive(Clone, Debug)]
pub struct FacetReport {
    pub m: usize,
    pub facet_index: usize,
    pub table: Vec<(SetPartition, StabilityClass)>,
    /// No partition is stable: the block containing `i` always carries
    /// weight at least one.
    pub no_stable_partition: bool,
    /// Every partition gluing `i` to another point is unstable.
    pub coincidence_with_index_unstable: bool,
}

/// Classification table over an interior facet weight: the combinatorial
/// signature of the quotient collapsing to a point.
pub fn facet_instance(m: usize, facet_index: usize, alpha: &WeightVector) -> Result<FacetReport> {
    if alpha.m() != m {
        return Err(Error::DimensionMismatch {
            expected: m,
            got: alpha.m(),
        });
    }
    if facet_index >= m || alpha.n() != 2 {
        return Err(Error::InvalidInput("bad facet index or rank".to_string()));
    }
    if !alpha.is_effective() {
        return Err(Error::NotEffective);
    }
    if alpha.alpha()[facet_index] != rat(1) {
        return Err(Error::InvalidInput(format!(
            "alpha_{} must equal 1 on the facet",
            facet_index + 1
        )));
    }
    for (j, a) in alpha.alpha().iter().enumerate() {
        if j != facet_index && (a.is_zero() || *a == rat(1)) {
            return Err(Error::InvalidInput(
                "alpha must be interior to the facet".to_string(),
            ));
        }
    }
    let table: Vec<(SetPartition, StabilityClass)> = all_partitions(m)
        .into_iter()
        .map(|p| {
            let c = sl2_class(&p, alpha.alpha());
            (p, c)
        })
        .collect();
    let no_stable_partition = table.iter().all(|(_, c)| *c != StabilityClass::Stable);
    let coincidence_with_index_unstable = table.iter().all(|(p, c)| {
        let glued = p
            .blocks()
            .iter()
            .any(|b| b.contains(&facet_index) && b.len() >= 2);
        !glued || *c == StabilityClass::Unstable
    });
    Ok(FacetReport {
        m,
        facet_index,
        table,
        no_stable_partition,
        coincidence_with_index_unstable,
    })
}

/// Weights of the genuine finite pair linearization on the forgetful
/// family, normalized to the `sum = 2` slice: the straight segment from the
/// doubled vertex at the inserted point to the base weight.
pub fn tensor_path_weights(
    base_alpha: &WeightVector,
    insert_at: usize,
    n: u32,
) -> Result<WeightVector> {
    if n == 0 {
        return Err(Error::InvalidInput("tensor power must be positive".to_string()));
    }
    let m = base_alpha.m() + 1;
    if insert_at >= m {
        return Err(Error::InvalidInput(format!(
            "insert position {insert_at} out of range for m = {m}"
        )));
    }
    let denom = rat(2 * i64::from(n) + 1);
    let coords: Vec<Rat> = (0..m)
        .map(|t| match base_index(t, insert_at) {
            None => rat(2) / &denom,
            Some(j) => base_alpha.alpha()[j].clone() * rat(2 * i64::from(n)) / &denom,
        })
        .collect();
    WeightVector::new(QVec::new(coords), 2)
}

/// The stabilization bound: the smallest tensor power past every wall
/// crossing of the finite-linearization path, so the semistable locus is
/// constant for all larger powers.
pub fn tensor_stabilization_bound(base_alpha: &WeightVector, insert_at: usize) -> Result<u32> {
    if base_alpha.n() != 2 {
        return Err(Error::InvalidInput(
            "forgetful instances need n = 2".to_string(),
        ));
    }
    require_wall_free(base_alpha)?;
    let m = base_alpha.m() + 1;
    let mut last_crossing: Option<Rat> = None;
    for wall in walls(m, 2)?.into_iter().filter(|w| w.is_relevant()) {
        let contains_insert = wall.indices().contains(&insert_at);
        let s: Rat = wall
            .indices()
            .iter()
            .filter_map(|&t| base_index(t, insert_at))
            .map(|j| base_alpha.alpha()[j].clone())
            .sum();
        // solve (2n s + 2[i in J]) / (2n + 1) = 1 for n
        let denom = rat(2) * &s - rat(2);
        if denom.is_zero() {
            continue;
        }
        let n = (rat(1) - rat(2 * i64::from(contains_insert))) / denom;
        if sign(&n) > 0 && last_crossing.as_ref().is_none_or(|b| n > *b) {
            last_crossing = Some(n);
        }
    }
    let bound = match last_crossing {
        None => 1,
        Some(n) => {
            let f = n.floor().to_integer() + num_bigint::BigInt::from(1);
            u32::try_from(&f).map_err(|_| {
                Error::InvalidInput("stabilization bound overflows u32".to_string())
            })?
        }
    };
    Ok(bound.max(1))
}

/// The forgetful-map fibration as a finite model: base points are the
/// partitions of the remaining labels, total points the partitions of all
/// labels, the fiber group is trivial so the fiber oracle accepts
/// everything.
pub fn forgetful_model(
    m: usize,
    forget_index: usize,
) -> (FiberedModel<WeightVector, ()>, Vec<SetPartition>, Vec<SetPartition>) {
    let base_parts = all_partitions(m - 1);
    let total_parts = all_partitions(m);
    let projection: Vec<usize> = total_parts
        .iter()
        .map(|p| {
            let img = p.forget(forget_index);
            base_parts
                .iter()
                .position(|q| *q == img)
                .expect("forgetful image is a partition of m-1 labels")
        })
        .collect();
    let base_for_oracle = base_parts.clone();
    let model = FiberedModel::new(
        base_parts.len(),
        projection,
        Box::new(move |b, alpha: &WeightVector| {
            sl2_class(&base_for_oracle[b], alpha.alpha())
        }),
        Box::new(|_, _: &()| StabilityClass::Stable),
    )
    .expect("projection indices are valid by construction");
    (model, base_parts, total_parts)
}
