//! Wall-and-chamber structure of the effective cone slice.
//!
//! Walls are the hyperplanes `sum_{i in J} alpha_i = d` inside the
//! hypersimplex; chambers are the connected components of its interior
//! minus the relevant walls. Chamber enumeration is incremental wall
//! insertion with exact LP pruning; the naive all-sign-vectors method stays
//! available as an independent oracle.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::lp::{strict_witness, Constraint};
use crate::partitions::{all_partitions, SetPartition};
use crate::qvec::QVec;
use crate::rat::{rat, sign, Rat};
use crate::stability::{classify_partitions, StabilityClass, WeightVector};

/// A wall `sum_{i in J} alpha_i = d` of the effective cone slice, in the
/// canonical representation where `J` is the side containing index 0 (the
/// complement with level `n - d` is the same hyperplane on the slice).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Wall {
    indices: Vec<usize>,
    level: u32,
    relevant: bool,
    facet: bool,
}

impl Wall {
    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    /// Meets the relative interior of the hypersimplex.
    pub fn is_relevant(&self) -> bool {
        self.relevant
    }

    /// Coincides with a facet `alpha_i = 1` of the hypersimplex.
    pub fn is_facet(&self) -> bool {
        self.facet
    }

    /// `sum_{i in J} alpha_i - d`; its sign locates a point.
    pub fn eval(&self, alpha: &QVec) -> Rat {
        self.indices
            .iter()
            .map(|&i| alpha[i].clone())
            .sum::<Rat>()
            - rat(i64::from(self.level))
    }

    /// Key used in signatures and JSON: 1-based indices concatenated, e.g.
    /// `"12"`; levels above 1 are suffixed as `"123:2"`.
    pub fn key(&self) -> String {
        let digits: String = self
            .indices
            .iter()
            .map(|i| (i + 1).to_string())
            .collect();
        if self.level == 1 {
            digits
        } else {
            format!("{digits}:{}", self.level)
        }
    }

    /// The indicator coefficient vector of `J` in dimension `m`.
    pub fn coefficients(&self, m: usize) -> QVec {
        QVec::indicator(m, &self.indices)
    }
}

/// All canonical walls of the `(m, n)` slice, deduplicated against
/// complements, with relevance decided by exact LP. Results are memoized;
/// the wall system is pure data.
pub fn walls(m: usize, n: u32) -> Result<Vec<Wall>> {
    if n == 0 || n as usize >= m {
        return Err(Error::InvalidInput(format!(
            "walls need 1 <= n < m, got ({m}, {n})"
        )));
    }
    type WallCache = Mutex<HashMap<(usize, u32), Vec<Wall>>>;
    static CACHE: OnceLock<WallCache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(ws) = cache.lock().expect("wall cache lock").get(&(m, n)) {
        return Ok(ws.clone());
    }
    let mut out = Vec::new();
    // canonical J always contains index 0; one (J, d) per complement pair
    for mask in 0..(1u32 << (m - 1)) {
        let mut indices = vec![0usize];
        for i in 1..m {
            if mask & (1 << (i - 1)) != 0 {
                indices.push(i);
            }
        }
        if indices.len() == m {
            continue;
        }
        for d in 1..n {
            let relevant = wall_meets_interior(m, n, &indices, d)?;
            let facet = (indices.len() == 1 && d == 1)
                || (indices.len() == m - 1 && d == n - 1);
            out.push(Wall {
                indices: indices.clone(),
                level: d,
                relevant,
                facet,
            });
        }
    }
    out.sort_by_key(|w| (w.indices.len(), w.indices.clone(), w.level));
    cache
        .lock()
        .expect("wall cache lock")
        .insert((m, n), out.clone());
    Ok(out)
}

fn wall_meets_interior(m: usize, n: u32, indices: &[usize], d: u32) -> Result<bool> {
    let (strict, mut weak) = box_constraints(m, n);
    weak.push(Constraint::eq(
        QVec::indicator(m, indices),
        rat(i64::from(d)),
    ));
    Ok(strict_witness(m, &strict, &weak)?.is_some())
}

/// Strict box constraints `0 < alpha_i < 1` and the weak slice equality.
fn box_constraints(m: usize, n: u32) -> (Vec<Constraint>, Vec<Constraint>) {
    let mut strict = Vec::with_capacity(2 * m);
    for i in 0..m {
        strict.push(Constraint::ge(QVec::unit(m, i), rat(0)));
        strict.push(Constraint::le(QVec::unit(m, i), rat(1)));
    }
    let weak = vec![Constraint::eq(
        QVec::new(vec![rat(1); m]),
        rat(i64::from(n)),
    )];
    (strict, weak)
}

/// Sign pattern of a linearization over the relevant walls.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ChamberSignature {
    signs: BTreeMap<String, i8>,
}

impl ChamberSignature {
    pub fn signs(&self) -> &BTreeMap<String, i8> {
        &self.signs
    }

    pub fn sign_of(&self, wall: &Wall) -> Option<i8> {
        self.signs.get(&wall.key()).copied()
    }
}

/// An open chamber: its signature, an exact interior witness, and the full
/// classification table over coincidence partitions at that witness.
#[derive(Clone, Debug)]
pub struct Chamber {
    pub signature: ChamberSignature,
    pub witness: QVec,
    pub classification_table: Vec<(SetPartition, StabilityClass)>,
}

/// Locates a weight vector against the wall system: exact wall signs plus
/// the list of walls it lies on (including facet walls). Errors with
/// `NotEffective` outside the effective slice.
pub fn locate(w: &WeightVector) -> Result<(ChamberSignature, Vec<Wall>)> {
    if !w.is_effective() {
        return Err(Error::NotEffective);
    }
    let all = walls(w.m(), w.n())?;
    let mut signs = BTreeMap::new();
    let mut on_walls = Vec::new();
    for wall in &all {
        let s = sign(&wall.eval(w.alpha()));
        if wall.is_relevant() {
            signs.insert(wall.key(), s);
        }
        if s == 0 {
            on_walls.push(wall.clone());
        }
    }
    Ok((ChamberSignature { signs }, on_walls))
}

fn chamber_system(
    m: usize,
    n: u32,
    rel_walls: &[Wall],
    signs: &[i8],
) -> (Vec<Constraint>, Vec<Constraint>) {
    let (mut strict, weak) = box_constraints(m, n);
    for (wall, &s) in rel_walls.iter().zip(signs.iter()) {
        let coeffs = wall.coefficients(m);
        let rhs = rat(i64::from(wall.level()));
        strict.push(if s > 0 {
            Constraint::ge(coeffs, rhs)
        } else {
            Constraint::le(coeffs, rhs)
        });
    }
    (strict, weak)
}

/// Exact interior witness of a sign vector, or `None` if infeasible.
pub fn sign_vector_witness(
    m: usize,
    n: u32,
    rel_walls: &[Wall],
    signs: &[i8],
) -> Result<Option<QVec>> {
    let (strict, weak) = chamber_system(m, n, rel_walls, signs);
    strict_witness(m, &strict, &weak)
}

fn build_chamber(m: usize, rel_walls: &[Wall], signs: &[i8], witness: QVec) -> Chamber {
    let signature = ChamberSignature {
        signs: rel_walls
            .iter()
            .zip(signs.iter())
            .map(|(w, &s)| (w.key(), s))
            .collect(),
    };
    let partitions = all_partitions(m);
    let classes = classify_partitions(&partitions, &witness);
    Chamber {
        signature,
        witness,
        classification_table: partitions.into_iter().zip(classes).collect(),
    }
}

/// All open chambers of the `(m, 2)` slice by incremental wall insertion
/// with LP pruning. Every chamber carries an interior witness and its
/// classification table, and the list is sorted by sign vector.
pub fn enumerate_chambers(m: usize, n: u32) -> Result<Vec<Chamber>> {
    if n != 2 {
        return Err(Error::InvalidInput(
            "chamber enumeration is implemented for n = 2".to_string(),
        ));
    }
    if !(3..=7).contains(&m) {
        return Err(Error::InvalidInput(
            "chamber enumeration supports 3 <= m <= 7".to_string(),
        ));
    }
    let rel_walls: Vec<Wall> = walls(m, n)?
        .into_iter()
        .filter(|w| w.is_relevant())
        .collect();
    // the empty prefix is witnessed by the barycenter; a witness sitting
    // exactly on a wall simply forfeits the reuse shortcut below
    let center = QVec::new(vec![crate::rat::ratio(n as i64, m as i64); m]);
    let mut partial: Vec<(Vec<i8>, QVec)> = vec![(Vec::new(), center)];
    for k in 0..rel_walls.len() {
        let prefix = &rel_walls[..=k];
        let wall = &rel_walls[k];
        let extended: Vec<Vec<(Vec<i8>, QVec)>> = partial
            .par_iter()
            .map(|(sig, witness)| {
                let mut out = Vec::new();
                // the carried witness already sits strictly on one side
                let here = sign(&wall.eval(witness));
                for s in [-1i8, 1i8] {
                    let mut cand = sig.clone();
                    cand.push(s);
                    if s == here {
                        out.push((cand, witness.clone()));
                        continue;
                    }
                    if let Ok(Some(w)) = sign_vector_witness(m, n, prefix, &cand) {
                        out.push((cand, w));
                    }
                }
                out
            })
            .collect();
        partial = extended.into_iter().flatten().collect();
    }
    partial.sort_by(|a, b| a.0.cmp(&b.0));
    let chambers: Vec<Chamber> = partial
        .par_iter()
        .map(|(signs, witness)| build_chamber(m, &rel_walls, signs, witness.clone()))
        .collect();
    Ok(chambers)
}

/// Independent oracle: tries every sign vector over the relevant walls with
/// one strict LP each. Exponential; meant for m <= 5 cross-checks.
pub fn chamber_count_naive(m: usize, n: u32) -> Result<usize> {
    let rel_walls: Vec<Wall> = walls(m, n)?
        .into_iter()
        .filter(|w| w.is_relevant())
        .collect();
    let r = rel_walls.len();
    let count = (0u64..(1 << r))
        .into_par_iter()
        .filter(|&mask| {
            let signs: Vec<i8> = (0..r)
                .map(|j| if mask & (1 << j) != 0 { 1 } else { -1 })
                .collect();
            sign_vector_witness(m, n, &rel_walls, &signs)
                .map(|w| w.is_some())
                .unwrap_or(false)
        })
        .count();
    Ok(count)
}

/// Crosses one wall: the chamber with `wall`'s sign flipped and all other
/// signs kept, or `None` when that signature is infeasible. Flipping twice
/// returns to the original chamber.
pub fn adjacent(m: usize, n: u32, chamber: &Chamber, wall: &Wall) -> Result<Option<Chamber>> {
    if !wall.is_relevant() {
        return Err(Error::InvalidInput(format!(
            "wall {} is not relevant",
            wall.key()
        )));
    }
    let rel_walls: Vec<Wall> = walls(m, n)?
        .into_iter()
        .filter(|w| w.is_relevant())
        .collect();
    let mut signs = Vec::with_capacity(rel_walls.len());
    for w in &rel_walls {
        let s = chamber
            .signature
            .sign_of(w)
            .ok_or_else(|| Error::InvalidInput(format!("signature misses wall {}", w.key())))?;
        signs.push(if w == wall { -s } else { s });
    }
    if signs.contains(&0) {
        return Err(Error::InvalidInput(
            "chamber signatures must be strict".to_string(),
        ));
    }
    match sign_vector_witness(m, n, &rel_walls, &signs)? {
        Some(witness) => Ok(Some(build_chamber(m, &rel_walls, &signs, witness))),
        None => Ok(None),
    }
}
