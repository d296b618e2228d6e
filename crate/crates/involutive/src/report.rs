//! Machine-readable run reports.

use serde::{Deserialize, Serialize};

/// Counters named after the columns of the benchmark tables. Counters that do
/// not apply to a command are `None`; `hd` is never produced.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Stats {
    pub c1: Option<usize>,
    pub c2: Option<usize>,
    pub hd: Option<usize>,
    pub cover: Option<usize>,
    pub syz: Option<usize>,
    pub redz: Option<usize>,
    pub lin: Option<usize>,
    pub deg: Option<u32>,
    pub dim: Option<usize>,
    pub queue_peak: Option<usize>,
    /// Seconds; only filled when timing is requested.
    pub wall_time: Option<f64>,
}

/// Syzygies as dense coordinate vectors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SyzygyBlock {
    /// `"basis"` or `"input"`: the generators the coordinates refer to.
    pub over: String,
    pub elements: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub system: Option<String>,
    pub ring: Vec<String>,
    pub order: String,
    pub division: Option<String>,
    pub seed: u64,
    pub input: Vec<String>,
    /// Monic, sorted by increasing leading monomial.
    pub basis: Vec<String>,
    pub syzygies: Option<SyzygyBlock>,
    /// Matrix of the coordinate change `x -> M x`, row by row.
    pub phi: Option<Vec<Vec<String>>>,
    /// Leading module monomials of syzygies, rendered as `m*e_i` (1-based).
    pub syz_lms: Option<Vec<String>>,
    pub stats: Stats,
}

impl RunReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> serde_json::Result<RunReport> {
        serde_json::from_str(s)
    }
}

/// Output of `bench`: one report per system and algorithm.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchReport {
    pub seed: u64,
    pub runs: Vec<BenchRun>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchRun {
    pub system: String,
    pub algorithm: String,
    /// Reference values attached to the system file.
    pub expected: std::collections::BTreeMap<String, i64>,
    pub report: Option<RunReport>,
    pub error: Option<String>,
    /// Reference values that differ from the run, as `key: expected -> got`.
    pub mismatches: Vec<String>,
}
