//! Serializable report shapes. Field order is fixed by the struct
//! declarations so identical inputs serialize to identical bytes.

use serde::{Deserialize, Serialize};

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct Summand {
    pub root: Vec<i64>,
    pub mult: i64,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct Checks {
    pub sum: bool,
    pub ext_free: bool,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct DiscrepancyEntry {
    pub interval: [usize; 2],
    pub verbatim: i64,
    pub corrected: i64,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug)]
pub struct DecomposeReport {
    pub quiver: String,
    pub d: Vec<i64>,
    pub summands: Vec<Summand>,
    pub checks: Checks,
    pub discrepancies: Vec<DiscrepancyEntry>,
}

#[derive(Serialize, Debug)]
pub struct RootsReport {
    pub quiver: String,
    pub count: usize,
    pub roots: Vec<Vec<i64>>,
}

#[derive(Serialize, Debug)]
pub struct RankRow {
    pub i: usize,
    pub j: usize,
    pub target: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub path: Option<i64>,
}

#[derive(Serialize, Debug)]
pub struct RanksReport {
    pub quiver: String,
    pub d: Vec<i64>,
    pub rows: Vec<RankRow>,
}

#[derive(Serialize, Debug)]
pub struct SuiteReport {
    pub name: String,
    pub cases: usize,
    pub failures: Vec<String>,
}

#[derive(Serialize, Debug)]
pub struct VerifyReport {
    pub command: String,
    pub seed: u64,
    pub samples: usize,
    pub max_total_dim: i64,
    pub field: String,
    pub suites: Vec<SuiteReport>,
    pub ok: bool,
    pub elapsed_ms: u128,
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serialization");
    s.push('\n');
    s
}
