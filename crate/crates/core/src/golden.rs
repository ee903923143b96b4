//! Reference tables transcribed from the literature, embedded at build time.
//!
//! Setting `TRIQUAD_GOLDEN_DIR` makes the loaders read `divisorial.csv`,
//! `intermediate.csv` and `rank_one.csv` from that directory instead.

use std::path::{Path, PathBuf};

use serde::Deserialize;

use crate::chow::{Coeff, CurveClass, DivisorClass};
use crate::error::{Error, Result};

pub const GOLDEN_DIR_ENV: &str = "TRIQUAD_GOLDEN_DIR";

const DIVISORIAL: &str = include_str!("../golden/divisorial.csv");
const INTERMEDIATE: &str = include_str!("../golden/intermediate.csv");
const RANK_ONE: &str = include_str!("../golden/rank_one.csv");

/// One printed row of the table of cases with nonzero divisorial part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoldenDivisorialRow {
    pub alpha: DivisorClass,
    pub delta: DivisorClass,
    pub e: u8,
    pub beta: CurveClass,
    pub class_e: CurveClass,
    pub verdict: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoldenIntermediateRow {
    pub label: String,
    pub alpha: DivisorClass,
    pub beta: CurveClass,
    pub deg: Coeff,
    pub pa: Coeff,
    pub verdict: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Golden {
    pub divisorial: Vec<GoldenDivisorialRow>,
    pub intermediate: Vec<GoldenIntermediateRow>,
    /// The printed list of initialized aCM line bundles, duplicates kept.
    pub rank_one: Vec<DivisorClass>,
    pub source: String,
}

#[derive(Deserialize)]
struct DivisorialRecord {
    a1: Coeff,
    a2: Coeff,
    a3: Coeff,
    d1: Coeff,
    d2: Coeff,
    d3: Coeff,
    e: u8,
    b1: Coeff,
    b2: Coeff,
    b3: Coeff,
    #[serde(rename = "cE1")]
    ce1: Coeff,
    #[serde(rename = "cE2")]
    ce2: Coeff,
    #[serde(rename = "cE3")]
    ce3: Coeff,
    verdict: String,
}

#[derive(Deserialize)]
struct IntermediateRecord {
    label: String,
    a1: Coeff,
    a2: Coeff,
    a3: Coeff,
    b1: Coeff,
    b2: Coeff,
    b3: Coeff,
    deg: Coeff,
    pa: Coeff,
    verdict: String,
}

#[derive(Deserialize)]
struct RankOneRecord {
    d1: Coeff,
    d2: Coeff,
    d3: Coeff,
}

fn parse<T: for<'de> Deserialize<'de>>(name: &str, text: &str) -> Result<Vec<T>> {
    csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes())
        .deserialize()
        .enumerate()
        .map(|(i, r)| r.map_err(|e| Error::Golden(format!("{name} record {}: {e}", i + 1))))
        .collect()
}

impl Golden {
    pub fn parse(divisorial: &str, intermediate: &str, rank_one: &str, source: &str) -> Result<Self> {
        let divisorial = parse::<DivisorialRecord>("divisorial.csv", divisorial)?
            .into_iter()
            .map(|r| GoldenDivisorialRow {
                alpha: DivisorClass::new(r.a1, r.a2, r.a3),
                delta: DivisorClass::new(r.d1, r.d2, r.d3),
                e: r.e,
                beta: CurveClass::new(r.b1, r.b2, r.b3),
                class_e: CurveClass::new(r.ce1, r.ce2, r.ce3),
                verdict: r.verdict,
            })
            .collect();
        let intermediate = parse::<IntermediateRecord>("intermediate.csv", intermediate)?
            .into_iter()
            .map(|r| GoldenIntermediateRow {
                label: r.label,
                alpha: DivisorClass::new(r.a1, r.a2, r.a3),
                beta: CurveClass::new(r.b1, r.b2, r.b3),
                deg: r.deg,
                pa: r.pa,
                verdict: r.verdict,
            })
            .collect();
        let rank_one = parse::<RankOneRecord>("rank_one.csv", rank_one)?
            .into_iter()
            .map(|r| DivisorClass::new(r.d1, r.d2, r.d3))
            .collect();
        Ok(Golden {
            divisorial,
            intermediate,
            rank_one,
            source: source.to_string(),
        })
    }

    pub fn embedded() -> Self {
        Golden::parse(DIVISORIAL, INTERMEDIATE, RANK_ONE, "embedded").expect("embedded golden data parses")
    }

    pub fn from_dir(dir: &Path) -> Result<Self> {
        let read = |name: &str| {
            std::fs::read_to_string(dir.join(name))
                .map_err(|e| Error::Golden(format!("{}: {e}", dir.join(name).display())))
        };
        Golden::parse(
            &read("divisorial.csv")?,
            &read("intermediate.csv")?,
            &read("rank_one.csv")?,
            &dir.display().to_string(),
        )
    }

    /// The directory named by `TRIQUAD_GOLDEN_DIR` if set, else the embedded
    /// copy.
    pub fn load() -> Result<Self> {
        match std::env::var_os(GOLDEN_DIR_ENV) {
            Some(dir) if !dir.is_empty() => Golden::from_dir(&PathBuf::from(dir)),
            _ => Ok(Golden::embedded()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_tables_parse() {
        let g = Golden::embedded();
        assert_eq!(g.divisorial.len(), 52);
        assert_eq!(g.intermediate.len(), 11);
        assert_eq!(g.rank_one.len(), 13);
        assert_eq!(g.intermediate[0].label, "L");
        assert_eq!(g.divisorial[6].class_e, CurveClass::new(-1, 0, 0));
    }

    #[test]
    fn malformed_cell_is_reported() {
        let bad = DIVISORIAL.replacen("0,0,1,0,0,1,1", "0,0,x,0,0,1,1", 1);
        let err = Golden::parse(&bad, INTERMEDIATE, RANK_ONE, "test").unwrap_err();
        assert!(matches!(err, Error::Golden(msg) if msg.contains("divisorial.csv record 1")));
    }
}
