//! JSON interchange formats: NGCM files, snapshot exports, ray-set inputs.
//!
//! NGCM files look like
//! `{"rank": 3, "tower": "rational", "entries": [["2", "-1", ...], ...]}`
//! with entries encoded per tower: rationals as `"p/q"` strings, `quad5`
//! elements as `{"a": "p/q", "b": "p/q", "d": 5}`, Laurent polynomials as
//! `{"<exponent>": "coeff", ...}` maps.

use serde_json::{json, Value};
use thiserror::Error;

use crate::coxeter::{validate_ngcm, Ngcm, NgcmViolation};
use crate::rootsys::{abstract_transfer, RayEntry, RefKey, RootDatum, Snapshot};
use crate::scalars::{LaurentPoly, Quad5, Rational, Scalar, ScalarParseError, Tower};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("io: {0}")]
    File(#[from] std::io::Error),
    #[error("scalar: {0}")]
    Scalar(#[from] ScalarParseError),
    #[error("malformed {what}: {detail}")]
    Malformed { what: String, detail: String },
    #[error("invalid NGCM: {0:?}")]
    InvalidNgcm(Vec<NgcmViolation>),
    #[error("snapshot witness {index} fails re-verification")]
    BadWitness { index: usize },
}

fn malformed(what: &str, detail: impl ToString) -> IoError {
    IoError::Malformed {
        what: what.to_string(),
        detail: detail.to_string(),
    }
}

/// An NGCM in whichever exact tower the file declares.
#[derive(Debug, Clone)]
pub enum AnyNgcm {
    Rational(Ngcm<Rational>),
    Quad5(Ngcm<Quad5>),
    Laurent(Ngcm<LaurentPoly>),
}

impl AnyNgcm {
    pub fn tower(&self) -> Tower {
        match self {
            AnyNgcm::Rational(_) => Tower::Rational,
            AnyNgcm::Quad5(_) => Tower::Quad5,
            AnyNgcm::Laurent(_) => Tower::Laurent,
        }
    }

    pub fn rank(&self) -> usize {
        match self {
            AnyNgcm::Rational(n) => n.rank(),
            AnyNgcm::Quad5(n) => n.rank(),
            AnyNgcm::Laurent(n) => n.rank(),
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            AnyNgcm::Rational(n) => ngcm_json(n),
            AnyNgcm::Quad5(n) => ngcm_json(n),
            AnyNgcm::Laurent(n) => ngcm_json(n),
        }
    }
}

pub fn ngcm_json<K: Scalar>(ngcm: &Ngcm<K>) -> Value {
    json!({
        "rank": ngcm.rank(),
        "tower": K::tower(),
        "entries": ngcm
            .entries()
            .iter()
            .map(|row| row.iter().map(Scalar::to_json).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
    })
}

fn parse_entries<K: Scalar>(raw: &Value) -> Result<Vec<Vec<K>>, IoError> {
    let rows = raw
        .as_array()
        .ok_or_else(|| malformed("entries", "expected an array of rows"))?;
    rows.iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| malformed("entries", "expected an array row"))?
                .iter()
                .map(|v| K::from_json(v).map_err(IoError::from))
                .collect()
        })
        .collect()
}

/// Parse and validate an NGCM document.
pub fn parse_ngcm(doc: &Value) -> Result<AnyNgcm, IoError> {
    let tower = doc
        .get("tower")
        .and_then(Value::as_str)
        .unwrap_or("rational");
    let entries = doc
        .get("entries")
        .ok_or_else(|| malformed("ngcm", "missing entries"))?;
    let built = match tower {
        "rational" => AnyNgcm::Rational(
            validate_ngcm(parse_entries::<Rational>(entries)?).map_err(IoError::InvalidNgcm)?,
        ),
        "quad5" => AnyNgcm::Quad5(
            validate_ngcm(parse_entries::<Quad5>(entries)?).map_err(IoError::InvalidNgcm)?,
        ),
        "laurent" => AnyNgcm::Laurent(
            validate_ngcm(parse_entries::<LaurentPoly>(entries)?).map_err(IoError::InvalidNgcm)?,
        ),
        other => {
            return Err(malformed(
                "tower",
                format!("unsupported tower {other:?} (use rational, quad5, or laurent)"),
            ))
        }
    };
    if let Some(rank) = doc.get("rank").and_then(Value::as_u64) {
        if rank as usize != built.rank() {
            return Err(malformed(
                "rank",
                format!("declared {rank} but entries are {}x{}", built.rank(), built.rank()),
            ));
        }
    }
    Ok(built)
}

pub fn read_ngcm(path: &std::path::Path) -> Result<AnyNgcm, IoError> {
    let text = std::fs::read_to_string(path)?;
    let doc: Value = serde_json::from_str(&text)?;
    parse_ngcm(&doc)
}

const REFERENCE_CONVENTION: &str = "symmetric-in-tower reference: m=3 -> -1, m=4 -> (-2,-1), \
     m=5 -> -tau, m=6 -> (-3,-1), infinity -> -2; abstract keys are canonical positive rays there";

fn ref_key_json(key: &RefKey) -> (Value, Tower) {
    match key {
        RefKey::Q(v) => (
            Value::Array(v.iter().map(Scalar::to_json).collect()),
            Tower::Rational,
        ),
        RefKey::Q5(v) => (
            Value::Array(v.iter().map(Scalar::to_json).collect()),
            Tower::Quad5,
        ),
    }
}

/// Snapshot export: rays with coordinates, coroots, witness words, depths,
/// and abstract transfer keys under the recorded reference convention.
pub fn snapshot_json<K: Scalar>(snapshot: &Snapshot<K>) -> Result<Value, IoError> {
    let keys = abstract_transfer(snapshot)
        .map_err(|e| malformed("snapshot", format!("abstract transfer: {e}")))?;
    let rays: Vec<Value> = snapshot
        .rays()
        .iter()
        .zip(&keys)
        .map(|(e, a)| {
            let (key, tower) = ref_key_json(&a.key);
            json!({
                "coords": e.rep.iter().map(Scalar::to_json).collect::<Vec<_>>(),
                "coroot": e.coroot.iter().map(Scalar::to_json).collect::<Vec<_>>(),
                "word": e.word,
                "base": e.base,
                "negated": e.negated,
                "depth": e.depth,
                "abstract_key": key,
                "abstract_tower": tower,
            })
        })
        .collect();
    Ok(json!({
        "tower": K::tower(),
        "ngcm": ngcm_json(snapshot.datum().ngcm()),
        "depth": snapshot.depth(),
        "complete": snapshot.complete(),
        "reference": REFERENCE_CONVENTION,
        "rays": rays,
    }))
}

fn parse_ray<K: Scalar>(v: &Value, idx: usize) -> Result<RayEntry<K>, IoError> {
    let coords = v
        .get("coords")
        .and_then(Value::as_array)
        .ok_or_else(|| malformed("ray", format!("missing coords at {idx}")))?
        .iter()
        .map(|c| K::from_json(c).map_err(IoError::from))
        .collect::<Result<Vec<_>, _>>()?;
    let coroot = v
        .get("coroot")
        .and_then(Value::as_array)
        .ok_or_else(|| malformed("ray", format!("missing coroot at {idx}")))?
        .iter()
        .map(|c| K::from_json(c).map_err(IoError::from))
        .collect::<Result<Vec<_>, _>>()?;
    let word = v
        .get("word")
        .and_then(Value::as_array)
        .ok_or_else(|| malformed("ray", format!("missing word at {idx}")))?
        .iter()
        .map(|w| {
            w.as_u64()
                .map(|x| x as usize)
                .ok_or_else(|| malformed("ray", format!("bad word letter at {idx}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let base = v
        .get("base")
        .and_then(Value::as_u64)
        .ok_or_else(|| malformed("ray", format!("missing base at {idx}")))? as usize;
    let negated = v.get("negated").and_then(Value::as_bool).unwrap_or(false);
    let depth = v
        .get("depth")
        .and_then(Value::as_u64)
        .ok_or_else(|| malformed("ray", format!("missing depth at {idx}")))? as usize;
    Ok(RayEntry {
        rep: coords,
        coroot,
        word,
        base,
        negated,
        depth,
    })
}

/// A snapshot in whichever tower the file declares.
#[derive(Debug, Clone)]
pub enum AnySnapshot {
    Rational(Snapshot<Rational>),
    Quad5(Snapshot<Quad5>),
    Laurent(Snapshot<LaurentPoly>),
}

impl AnySnapshot {
    pub fn len(&self) -> usize {
        match self {
            AnySnapshot::Rational(s) => s.len(),
            AnySnapshot::Quad5(s) => s.len(),
            AnySnapshot::Laurent(s) => s.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

fn load_snapshot<K: Scalar>(doc: &Value, ngcm: Ngcm<K>) -> Result<Snapshot<K>, IoError> {
    let depth = doc
        .get("depth")
        .and_then(Value::as_u64)
        .ok_or_else(|| malformed("snapshot", "missing depth"))? as usize;
    let complete = doc.get("complete").and_then(Value::as_bool).unwrap_or(false);
    let rays = doc
        .get("rays")
        .and_then(Value::as_array)
        .ok_or_else(|| malformed("snapshot", "missing rays"))?
        .iter()
        .enumerate()
        .map(|(i, v)| parse_ray::<K>(v, i))
        .collect::<Result<Vec<_>, _>>()?;
    let datum = RootDatum::new(ngcm);
    Snapshot::from_parts(datum, depth, complete, rays)
        .map_err(|index| IoError::BadWitness { index })
}

/// Parse a snapshot export, re-verifying every witness word on load.
pub fn parse_snapshot(doc: &Value) -> Result<AnySnapshot, IoError> {
    let ngcm = parse_ngcm(
        doc.get("ngcm")
            .ok_or_else(|| malformed("snapshot", "missing ngcm"))?,
    )?;
    match ngcm {
        AnyNgcm::Rational(n) => Ok(AnySnapshot::Rational(load_snapshot(doc, n)?)),
        AnyNgcm::Quad5(n) => Ok(AnySnapshot::Quad5(load_snapshot(doc, n)?)),
        AnyNgcm::Laurent(n) => Ok(AnySnapshot::Laurent(load_snapshot(doc, n)?)),
    }
}

pub fn read_snapshot(path: &std::path::Path) -> Result<AnySnapshot, IoError> {
    let text = std::fs::read_to_string(path)?;
    let doc: Value = serde_json::from_str(&text)?;
    parse_snapshot(&doc)
}

/// Ray-set inputs for closure commands: `{"rays": [0, 3, 5]}` or a bare
/// JSON array of indices.
pub fn parse_ray_set(doc: &Value, len: usize) -> Result<Vec<usize>, IoError> {
    let arr = match doc {
        Value::Array(a) => a,
        Value::Object(o) => o
            .get("rays")
            .and_then(Value::as_array)
            .ok_or_else(|| malformed("set", "expected {\"rays\": [..]} or a bare array"))?,
        other => return Err(malformed("set", format!("unexpected {other}"))),
    };
    let mut out = Vec::with_capacity(arr.len());
    for v in arr {
        let idx = v
            .as_u64()
            .ok_or_else(|| malformed("set", format!("bad index {v}")))? as usize;
        if idx >= len {
            return Err(malformed(
                "set",
                format!("index {idx} out of range for {len} rays"),
            ));
        }
        out.push(idx);
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}
