//! JSON wire formats.
//!
//! Labelings travel as `{"r":2,"s":3,"labels":{"1,1":"2","2,2":"7",...}}`
//! with every value a `"p/q"` rational string. Chain-sum profiles are
//! `{"r":..,"s":..,"rows":{"u,v":...},"cols":{"u,v":...}}` where `rows`
//! holds the maximal-chain weights of the row bands `[u,v] x [s]` and
//! `cols` those of the column bands `[r] x [u,v]`. All maps serialize with
//! sorted keys, so identical inputs produce byte-identical output.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use rowmotion_core::dynamics::Labeling;
use rowmotion_core::minors::MinorArray;
use rowmotion_core::poset::{Cell, Rect};
use rowmotion_core::rsk::ChainSumProfile;
use rowmotion_core::Rational;

/// Errors from parsing or validating wire data.
#[derive(Debug)]
pub struct JsonError(pub String);

impl std::fmt::Display for JsonError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for JsonError {}

fn err(msg: impl Into<String>) -> JsonError {
    JsonError(msg.into())
}

/// The labeling schema.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LabelingJson {
    pub r: usize,
    pub s: usize,
    pub labels: BTreeMap<String, String>,
}

fn parse_pair(key: &str) -> Result<(usize, usize), JsonError> {
    let (a, b) = key
        .split_once(',')
        .ok_or_else(|| err(format!("key `{key}` is not of the form `i,j`")))?;
    let i = a.trim().parse().map_err(|_| err(format!("bad index in `{key}`")))?;
    let j = b.trim().parse().map_err(|_| err(format!("bad index in `{key}`")))?;
    Ok((i, j))
}

pub fn labeling_to_json(x: &Labeling) -> LabelingJson {
    let rect = x.rect();
    let labels = rect
        .cells()
        .map(|c| (format!("{},{}", c.i, c.j), x.get(c).to_string()))
        .collect();
    LabelingJson {
        r: rect.rows(),
        s: rect.cols(),
        labels,
    }
}

pub fn labeling_from_json(data: &LabelingJson) -> Result<Labeling, JsonError> {
    if data.r < 1 || data.s < 1 {
        return Err(err("rectangle needs r >= 1 and s >= 1"));
    }
    let rect = Rect::new(data.r, data.s);
    let mut values: Vec<Option<Rational>> = vec![None; rect.cell_count()];
    for (key, value) in &data.labels {
        let (i, j) = parse_pair(key)?;
        let cell = Cell::new(i, j);
        if !rect.contains(cell) {
            return Err(err(format!("cell `{key}` outside [{}] x [{}]", data.r, data.s)));
        }
        let parsed: Rational = value
            .parse()
            .map_err(|e| err(format!("label `{key}`: {e}")))?;
        let slot = &mut values[rect.index(cell)];
        if slot.is_some() {
            return Err(err(format!("cell `{key}` given twice")));
        }
        *slot = Some(parsed);
    }
    let values: Option<Vec<Rational>> = values.into_iter().collect();
    let values = values.ok_or_else(|| err("a cell is missing a label"))?;
    Labeling::from_row_major(rect, values).map_err(|e| err(e.to_string()))
}

/// Parses a labeling from raw JSON text.
pub fn labeling_from_str(text: &str) -> Result<Labeling, JsonError> {
    let data: LabelingJson =
        serde_json::from_str(text).map_err(|e| err(format!("malformed labeling JSON: {e}")))?;
    labeling_from_json(&data)
}

/// The chain-sum profile schema.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ProfileJson {
    pub r: usize,
    pub s: usize,
    pub rows: BTreeMap<String, String>,
    pub cols: BTreeMap<String, String>,
}

pub fn profile_to_json(profile: &ChainSumProfile) -> ProfileJson {
    let band = |map: &BTreeMap<(usize, usize), Rational>| {
        map.iter()
            .map(|(&(u, v), w)| (format!("{u},{v}"), w.to_string()))
            .collect()
    };
    ProfileJson {
        r: profile.rect.rows(),
        s: profile.rect.cols(),
        rows: band(&profile.rows),
        cols: band(&profile.cols),
    }
}

pub fn profile_from_json(data: &ProfileJson) -> Result<ChainSumProfile, JsonError> {
    if data.r < 1 || data.s < 1 {
        return Err(err("rectangle needs r >= 1 and s >= 1"));
    }
    let rect = Rect::new(data.r, data.s);
    let parse_band = |raw: &BTreeMap<String, String>,
                      max: usize,
                      what: &str|
     -> Result<BTreeMap<(usize, usize), Rational>, JsonError> {
        let mut out = BTreeMap::new();
        for (key, value) in raw {
            let (u, v) = parse_pair(key)?;
            if u < 1 || u > v || v > max {
                return Err(err(format!("{what} band `{key}` out of range")));
            }
            let parsed: Rational = value
                .parse()
                .map_err(|e| err(format!("{what} band `{key}`: {e}")))?;
            out.insert((u, v), parsed);
        }
        for u in 1..=max {
            for v in u..=max {
                if !out.contains_key(&(u, v)) {
                    return Err(err(format!("{what} band `{u},{v}` missing")));
                }
            }
        }
        Ok(out)
    };
    Ok(ChainSumProfile {
        rect,
        rows: parse_band(&data.rows, data.r, "row")?,
        cols: parse_band(&data.cols, data.s, "column")?,
    })
}

pub fn profile_from_str(text: &str) -> Result<ChainSumProfile, JsonError> {
    let data: ProfileJson =
        serde_json::from_str(text).map_err(|e| err(format!("malformed profile JSON: {e}")))?;
    profile_from_json(&data)
}

/// Map view of a labeling's values, `"i,j" -> "p/q"`.
pub fn labels_map(x: &Labeling) -> BTreeMap<String, String> {
    labeling_to_json(x).labels
}

/// Stored support of a minor array as `"i,j,k" -> "p/q"`.
pub fn minor_dump(w: &MinorArray) -> BTreeMap<String, String> {
    w.stored_entries()
        .map(|(i, j, k, value)| (format!("{i},{j},{k}"), value.to_string()))
        .collect()
}
