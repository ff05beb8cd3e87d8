//! Topology text and JSON formats.
//!
//! Text form, one topology per line:
//!
//! ```text
//! n=<k>; opens=<hex>,<hex>,...
//! ```
//!
//! Each mask is lowercase hexadecimal without prefix, bit `i` standing for
//! point `i`. Whitespace around tokens is ignored, masks may appear in any
//! order on input and are written sorted. Blank lines and lines starting
//! with `#` are skipped.
//!
//! JSON form mirrors the text form: `{"n":2,"opens":["0","1","3"]}`. A file
//! may hold one object, an array of objects, or one object per line.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::{TopoError, Topology};
use crate::PointSet;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TopologyJson {
    pub n: usize,
    pub opens: Vec<String>,
}

impl From<&Topology> for TopologyJson {
    fn from(t: &Topology) -> Self {
        TopologyJson {
            n: t.n(),
            opens: t.opens().iter().map(|o| format!("{:x}", o.mask())).collect(),
        }
    }
}

impl TryFrom<TopologyJson> for Topology {
    type Error = TopoError;

    fn try_from(j: TopologyJson) -> Result<Topology, TopoError> {
        let opens = j
            .opens
            .iter()
            .map(|s| parse_mask(s))
            .collect::<Result<Vec<_>, _>>()?;
        Topology::new(j.n, opens)
    }
}

pub(crate) fn write_text(f: &mut fmt::Formatter<'_>, n: usize, opens: &[PointSet]) -> fmt::Result {
    write!(f, "n={n}; opens=")?;
    for (i, o) in opens.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{:x}", o.mask())?;
    }
    Ok(())
}

fn parse_mask(s: &str) -> Result<PointSet, TopoError> {
    let s = s.trim();
    let digits = s.strip_prefix("0x").unwrap_or(s);
    u32::from_str_radix(digits, 16)
        .map(PointSet::from_mask)
        .map_err(|_| TopoError::Parse(format!("bad hex mask `{s}`")))
}

/// Parses one line of the text format.
pub fn parse_text(line: &str) -> Result<Topology, TopoError> {
    let mut n = None;
    let mut opens = None;
    for part in line.split(';') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let (key, value) = part
            .split_once('=')
            .ok_or_else(|| TopoError::Parse(format!("expected key=value, got `{part}`")))?;
        match key.trim() {
            "n" => {
                n = Some(
                    value
                        .trim()
                        .parse::<usize>()
                        .map_err(|_| TopoError::Parse(format!("bad point count `{value}`")))?,
                )
            }
            "opens" => {
                opens = Some(
                    value
                        .split(',')
                        .filter(|s| !s.trim().is_empty())
                        .map(parse_mask)
                        .collect::<Result<Vec<_>, _>>()?,
                )
            }
            other => return Err(TopoError::Parse(format!("unknown key `{other}`"))),
        }
    }
    let n = n.ok_or_else(|| TopoError::Parse("missing `n=`".into()))?;
    let opens = opens.ok_or_else(|| TopoError::Parse("missing `opens=`".into()))?;
    Topology::new(n, opens)
}

pub fn to_json(t: &Topology) -> String {
    serde_json::to_string(&TopologyJson::from(t)).expect("plain struct serializes")
}

pub fn parse_json(s: &str) -> Result<Topology, TopoError> {
    let j: TopologyJson =
        serde_json::from_str(s).map_err(|e| TopoError::Parse(format!("json: {e}")))?;
    j.try_into()
}

/// Parses a whole file in either format, detected from the first
/// non-blank character.
pub fn parse_topologies(input: &str) -> Result<Vec<Topology>, TopoError> {
    let trimmed = input.trim_start();
    if trimmed.starts_with('[') {
        let list: Vec<TopologyJson> = serde_json::from_str(trimmed)
            .map_err(|e| TopoError::Parse(format!("json: {e}")))?;
        return list.into_iter().map(Topology::try_from).collect();
    }
    let json = trimmed.starts_with('{');
    input
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| if json { parse_json(l) } else { parse_text(l) })
        .collect()
}
