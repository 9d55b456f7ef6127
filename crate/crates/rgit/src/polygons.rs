//! Polygon-space front end: side-length vectors map to weight vectors on
//! the effective slice, existence of closed spatial polygons is the
//! effectivity test, degenerations sit on walls, and deformations of side
//! lengths report their wall-crossing sequence.

use std::collections::BTreeMap;

use crate::chambers::{locate, walls, ChamberSignature, Wall};
use crate::error::{Error, Result};
use crate::qvec::QVec;
use crate::rat::{rat, sign, Rat};
use crate::stability::WeightVector;

/// Positive side lengths of an m-gon, m >= 3.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SideLengths {
    r: Vec<Rat>,
}

impl SideLengths {
    pub fn new(r: Vec<Rat>) -> Result<Self> {
        if r.len() < 3 {
            return Err(Error::InvalidInput(
                "a polygon needs at least three sides".to_string(),
            ));
        }
        if r.iter().any(|x| sign(x) <= 0) {
            return Err(Error::InvalidInput(
                "side lengths must be positive".to_string(),
            ));
        }
        Ok(SideLengths { r })
    }

    pub fn parse(s: &str) -> Result<Self> {
        SideLengths::new(QVec::parse(s)?.coords().to_vec())
    }

    pub fn m(&self) -> usize {
        self.r.len()
    }

    pub fn lengths(&self) -> &[Rat] {
        &self.r
    }

    /// The normalized weight vector `2 r / sum(r)` on the `sum = 2` slice.
    pub fn weights(&self) -> WeightVector {
        let total: Rat = self.r.iter().sum();
        let coords: Vec<Rat> = self.r.iter().map(|x| rat(2) * x / &total).collect();
        WeightVector::new(QVec::new(coords), 2).expect("normalization lands on the slice")
    }
}

/// Existence, degeneracy, and moduli data of the polygon space with the
/// given side lengths.
#[derive(Clone, Debug)]
pub struct PolygonReport {
    pub exists: bool,
    /// Some closed configuration lies on a line.
    pub degenerate: bool,
    pub alpha: WeightVector,
    pub signature: Option<ChamberSignature>,
    pub on_walls: Vec<Wall>,
    /// Complex dimension of the moduli space, reported only off walls.
    pub moduli_dim: Option<usize>,
    pub notes: Vec<String>,
}

/// Analyzes side lengths: a closed spatial polygon exists exactly when no
/// side is longer than the sum of the others, i.e. the normalized weights
/// are effective; lined polygons exist exactly on walls (including the
/// facet walls).
pub fn analyze(r: &SideLengths) -> Result<PolygonReport> {
    let alpha = r.weights();
    let exists = alpha.is_effective();
    let mut report = PolygonReport {
        exists,
        degenerate: false,
        alpha: alpha.clone(),
        signature: None,
        on_walls: Vec::new(),
        moduli_dim: None,
        notes: vec![
            "moduli of closed spatial polygons with fixed side lengths, up to orientation-preserving isometry".to_string(),
            "real points: disjoint double cover of the planar linkage moduli".to_string(),
        ],
    };
    if !exists {
        return Ok(report);
    }
    let (signature, on_walls) = locate(&alpha)?;
    report.degenerate = !on_walls.is_empty();
    report.moduli_dim = on_walls.is_empty().then(|| r.m() - 3);
    report.signature = Some(signature);
    report.on_walls = on_walls;
    Ok(report)
}

/// One crossing event of the straight-line deformation: parameter,
/// coincident walls, and the chamber signatures on both sides.
#[derive(Clone, Debug)]
pub struct PathCrossing {
    pub t: Rat,
    pub walls: Vec<Wall>,
    pub signature_before: ChamberSignature,
    pub signature_after: ChamberSignature,
}

/// Exact crossing sequence of the straight path between two wall-free side
/// length vectors, in increasing parameter order; simultaneous crossings
/// are grouped.
pub fn wall_crossing_path(start: &SideLengths, end: &SideLengths) -> Result<Vec<PathCrossing>> {
    if start.m() != end.m() {
        return Err(Error::DimensionMismatch {
            expected: start.m(),
            got: end.m(),
        });
    }
    let a0 = start.weights();
    let a1 = end.weights();
    for a in [&a0, &a1] {
        if !a.is_effective() {
            return Err(Error::NotEffective);
        }
        let (_, on) = locate(a)?;
        if !on.is_empty() {
            return Err(Error::WallBase);
        }
    }
    let m = start.m();
    let mut by_t: BTreeMap<Rat, Vec<Wall>> = BTreeMap::new();
    for wall in walls(m, 2)?.into_iter().filter(|w| w.is_relevant()) {
        let s0 = wall.eval(a0.alpha());
        let s1 = wall.eval(a1.alpha());
        if sign(&s0) * sign(&s1) < 0 {
            let t = &s0 / (&s0 - &s1);
            by_t.entry(t).or_default().push(wall);
        }
    }
    let at = |t: &Rat| -> Result<ChamberSignature> {
        let p = a0.alpha().scale(&(rat(1) - t)).add(&a1.alpha().scale(t));
        let w = WeightVector::new(p, 2).expect("segment stays on the slice");
        Ok(locate(&w)?.0)
    };
    let ts: Vec<Rat> = by_t.keys().cloned().collect();
    let mut out = Vec::new();
    for (i, t) in ts.iter().enumerate() {
        let before_t = if i == 0 {
            rat(0)
        } else {
            (&ts[i - 1] + t) / rat(2)
        };
        let after_t = if i + 1 == ts.len() {
            rat(1)
        } else {
            (t + &ts[i + 1]) / rat(2)
        };
        out.push(PathCrossing {
            t: t.clone(),
            walls: by_t[t].clone(),
            signature_before: at(&before_t)?,
            signature_after: at(&after_t)?,
        });
    }
    Ok(out)
}
