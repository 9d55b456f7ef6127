//! JSON encodings of the public data types. Rationals serialize as the
//! strings `"p/q"` (or `"p"`), vectors as arrays of such strings, and index
//! sets are 1-based on the wire. All maps are ordered, so output bytes are
//! deterministic.

use serde_json::{json, Map, Value};

use crate::chambers::{Chamber, ChamberSignature, Wall};
use crate::error::{Error, Result};
use crate::linalg::QMatrix;
use crate::moment::PluckerVector;
use crate::partitions::SetPartition;
use crate::polygons::{PathCrossing, PolygonReport};
use crate::qvec::QVec;
use crate::rat::{rat_from_str, rat_to_string, Rat};
use crate::relative::{
    CombinedClass, CrossedConstraint, FacetReport, ForgetfulReport, LinearizationMode,
    RelativeVerdict,
};
use crate::stability::{StabilityClass, StabilityVerdict};

pub fn rat_json(x: &Rat) -> Value {
    Value::String(rat_to_string(x))
}

pub fn qvec_json(v: &QVec) -> Value {
    Value::Array(v.iter().map(rat_json).collect())
}

pub fn qvec_from_json(v: &Value) -> Result<QVec> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::InvalidInput("expected an array of rationals".to_string()))?;
    if arr.is_empty() {
        return Err(Error::EmptyInput("vector"));
    }
    Ok(QVec::new(
        arr.iter()
            .map(|x| {
                x.as_str()
                    .ok_or_else(|| {
                        Error::InvalidInput("rationals serialize as strings".to_string())
                    })
                    .and_then(rat_from_str)
            })
            .collect::<Result<_>>()?,
    ))
}

/// Row-major matrix of rational strings.
pub fn matrix_from_json(v: &Value) -> Result<QMatrix> {
    let rows = v
        .as_array()
        .ok_or_else(|| Error::InvalidInput("expected an array of rows".to_string()))?;
    let parsed: Vec<QVec> = rows.iter().map(qvec_from_json).collect::<Result<_>>()?;
    if parsed.is_empty() {
        return Err(Error::EmptyInput("matrix"));
    }
    let cols = parsed[0].dim();
    if parsed.iter().any(|r| r.dim() != cols) {
        return Err(Error::InvalidInput("ragged matrix".to_string()));
    }
    Ok(QMatrix::from_rows(&parsed))
}

pub fn matrix_json(m: &QMatrix) -> Value {
    Value::Array((0..m.rows()).map(|i| qvec_json(&m.row(i))).collect())
}

fn indices_1based(set: &[usize]) -> Value {
    Value::Array(set.iter().map(|&i| json!(i + 1)).collect())
}

pub fn class_json(c: StabilityClass) -> Value {
    Value::String(c.as_str().to_string())
}

pub fn verdict_json(v: &StabilityVerdict) -> Value {
    json!({
        "class": class_json(v.class),
        "sign": v.numerical.0,
        "sq_magnitude": rat_json(&v.numerical.1),
        "witnesses": Value::Array(v.witnesses.iter().map(|w| indices_1based(w)).collect()),
    })
}

pub fn wall_json(w: &Wall) -> Value {
    json!({
        "J": indices_1based(w.indices()),
        "d": w.level(),
        "relevant": w.is_relevant(),
        "facet": w.is_facet(),
    })
}

fn sign_char(s: i8) -> &'static str {
    match s {
        1 => "+",
        -1 => "-",
        _ => "0",
    }
}

pub fn signature_json(sig: &ChamberSignature) -> Value {
    let mut map = Map::new();
    for (k, &s) in sig.signs() {
        map.insert(k.clone(), Value::String(sign_char(s).to_string()));
    }
    Value::Object(map)
}

pub fn partition_json(p: &SetPartition) -> Value {
    Value::Array(p.blocks().iter().map(|b| indices_1based(b)).collect())
}

pub fn partition_from_json(v: &Value, m: usize) -> Result<SetPartition> {
    match v {
        Value::String(s) => SetPartition::parse(s, m),
        Value::Array(blocks) => {
            let parsed: Vec<Vec<usize>> = blocks
                .iter()
                .map(|b| {
                    b.as_array()
                        .ok_or_else(|| {
                            Error::InvalidInput("partition blocks are arrays".to_string())
                        })?
                        .iter()
                        .map(|x| {
                            let i = x.as_u64().ok_or_else(|| {
                                Error::InvalidInput("1-based integer labels".to_string())
                            })? as usize;
                            if i == 0 || i > m {
                                return Err(Error::InvalidInput(format!(
                                    "label {i} out of 1..={m}"
                                )));
                            }
                            Ok(i - 1)
                        })
                        .collect()
                })
                .collect::<Result<_>>()?;
            SetPartition::new(m, parsed)
        }
        _ => Err(Error::InvalidInput(
            "partition must be a string or an array of blocks".to_string(),
        )),
    }
}

pub fn chamber_json(c: &Chamber) -> Value {
    json!({
        "signature": signature_json(&c.signature),
        "witness": qvec_json(&c.witness),
        "classification_table": Value::Array(
            c.classification_table
                .iter()
                .map(|(p, cls)| json!([p.to_string(), cls.as_str()]))
                .collect(),
        ),
    })
}

pub fn plucker_json(pv: &PluckerVector) -> Value {
    let mut map = Map::new();
    for (subset, val) in pv.entries() {
        let key: String = subset.iter().map(|i| (i + 1).to_string()).collect();
        map.insert(key, rat_json(val));
    }
    Value::Object(map)
}

pub fn mode_json(mode: LinearizationMode) -> Value {
    match mode {
        LinearizationMode::Finite(n) => json!({"mode": "finite", "n": n}),
        LinearizationMode::Limit => json!({"mode": "limit"}),
    }
}

pub fn mode_from_json(v: &Value) -> Result<LinearizationMode> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::InvalidInput("mode payload must be an object".to_string()))?;
    for k in obj.keys() {
        if k != "mode" && k != "n" {
            return Err(Error::InvalidInput(format!("unknown field `{k}`")));
        }
    }
    match obj.get("mode").and_then(|m| m.as_str()) {
        Some("limit") => {
            if obj.contains_key("n") {
                return Err(Error::InvalidInput(
                    "limit mode takes no tensor power".to_string(),
                ));
            }
            Ok(LinearizationMode::Limit)
        }
        Some("finite") => {
            let n = obj
                .get("n")
                .and_then(|n| n.as_u64())
                .ok_or_else(|| Error::InvalidInput("finite mode needs `n`".to_string()))?;
            if n == 0 || n > u64::from(u32::MAX) {
                return Err(Error::InvalidInput("tensor power out of range".to_string()));
            }
            Ok(LinearizationMode::Finite(n as u32))
        }
        _ => Err(Error::InvalidInput(
            "mode must be `finite` or `limit`".to_string(),
        )),
    }
}

pub fn crossed_json(c: &CrossedConstraint) -> Value {
    match c {
        CrossedConstraint::Wall(w) => json!({"wall": wall_json(w)}),
        CrossedConstraint::EffectivityFacet(i) => json!({"effectivity_facet": i}),
    }
}

fn partitions_json(list: &[SetPartition]) -> Value {
    Value::Array(
        list.iter()
            .map(|p| Value::String(p.to_string()))
            .collect(),
    )
}

pub fn forgetful_report_json(r: &ForgetfulReport) -> Value {
    json!({
        "m": r.m,
        "forget": r.forget_index + 1,
        "eps": rat_json(&r.eps),
        "threshold": rat_json(&r.threshold),
        "alpha_tilde": qvec_json(r.alpha_tilde.alpha()),
        "equality_verified": r.equality_verified,
        "violated": r.violated.as_ref().map(crossed_json).unwrap_or(Value::Null),
        "semistable": partitions_json(&r.semistable),
        "stable": partitions_json(&r.stable),
        "base_stable_pullback": partitions_json(&r.base_stable_pullback),
    })
}

pub fn facet_report_json(r: &FacetReport) -> Value {
    json!({
        "m": r.m,
        "facet_index": r.facet_index + 1,
        "no_stable_partition": r.no_stable_partition,
        "coincidence_with_index_unstable": r.coincidence_with_index_unstable,
        "table": Value::Array(
            r.table
                .iter()
                .map(|(p, c)| json!([p.to_string(), c.as_str()]))
                .collect(),
        ),
    })
}

/// Relative verdict with total points labeled by the caller.
pub fn relative_verdict_json(v: &RelativeVerdict, labels: Option<&[String]>) -> Value {
    let points: Vec<Value> = v
        .points
        .iter()
        .map(|p| {
            let combined = match p.combined {
                CombinedClass::Determined(c) => Value::String(c.as_str().to_string()),
                CombinedClass::Undetermined => Value::String("undetermined".to_string()),
            };
            let mut obj = Map::new();
            if let Some(ls) = labels {
                obj.insert("point".to_string(), json!(ls[p.total_index]));
            } else {
                obj.insert("point".to_string(), json!(p.total_index));
            }
            obj.insert("base_class".to_string(), class_json(p.base_class));
            obj.insert("fiber_class".to_string(), class_json(p.fiber_class));
            obj.insert("combined".to_string(), combined);
            Value::Object(obj)
        })
        .collect();
    let name = |ix: &[usize]| -> Value {
        Value::Array(
            ix.iter()
                .map(|&i| match labels {
                    Some(ls) => json!(ls[i]),
                    None => json!(i),
                })
                .collect(),
        )
    };
    json!({
        "mode": mode_json(v.mode),
        "equality_mode": v.equality_mode,
        "semistable": name(&v.semistable_set()),
        "stable": name(&v.stable_set()),
        "undetermined": name(&v.undetermined_set()),
        "points": Value::Array(points),
    })
}

pub fn polygon_report_json(r: &PolygonReport) -> Value {
    json!({
        "exists": r.exists,
        "degenerate": r.degenerate,
        "alpha": qvec_json(r.alpha.alpha()),
        "signature": r.signature.as_ref().map(signature_json).unwrap_or(Value::Null),
        "on_walls": Value::Array(r.on_walls.iter().map(wall_json).collect()),
        "moduli_dim": r.moduli_dim.map(|d| json!(d)).unwrap_or(Value::Null),
        "notes": r.notes,
    })
}

pub fn crossings_json(list: &[PathCrossing]) -> Value {
    Value::Array(
        list.iter()
            .map(|c| {
                json!({
                    "t": rat_json(&c.t),
                    "walls": Value::Array(c.walls.iter().map(wall_json).collect()),
                    "signature_before": signature_json(&c.signature_before),
                    "signature_after": signature_json(&c.signature_after),
                })
            })
            .collect(),
    )
}
