//! Exhaustive census over all small graphs.
//!
//! `compute_g(k)` takes the maximum number of minimal u,v-separators over
//! every graph on `k + 2` vertices and every vertex pair; `compute_c(n)`
//! the maximum number of minimal vertex cuts over every graph on `n`
//! vertices. Both walk one representative per isomorphism class (from
//! [`generate_graphs`]), record every maximizing witness, and are
//! deterministic regardless of how many workers share the load.
//!
//! Degenerate instances follow the library's literal definitions: a
//! disconnected (graph, pair) configuration counts 1 (the empty set is
//! its unique minimal separator), so maxima are over all graphs, not just
//! connected ones.

pub mod canon;
mod generate;
mod run;

pub use canon::{
    canonical_code, canonical_form, graph_from_code, is_canonical, triangle_code,
    MAX_CENSUS_VERTICES,
};
pub use generate::{generate_graphs, generate_graphs_bruteforce, GraphGenerator};
pub use run::{census_run, CensusConfig};

use crate::bounds;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

/// Tolerance above `3^(1/3)` before a census root is flagged.
pub const CONJECTURE_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Error)]
pub enum CensusError {
    #[error("{what} {value} out of range (max {max})")]
    SizeOutOfRange {
        what: &'static str,
        value: usize,
        max: usize,
    },
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("refusing to resume from checkpoint: {0}")]
    Checkpoint(String),
    #[error("worker pool: {0}")]
    Pool(String),
}

/// Which maximum a census computes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CensusKind {
    /// Max minimal u,v-separator count over graphs on `size + 2` vertices
    /// and all vertex pairs.
    #[serde(rename = "g-census")]
    G,
    /// Max minimal vertex cut count over graphs on `size` vertices.
    #[serde(rename = "c-census")]
    C,
}

impl CensusKind {
    pub(crate) fn total_vertices(self, size: usize) -> usize {
        match self {
            CensusKind::G => size + 2,
            CensusKind::C => size,
        }
    }

    /// Validates a census size against the generation cap.
    pub fn check_size(self, size: usize) -> Result<(), CensusError> {
        match self {
            CensusKind::G => {
                if size == 0 || size + 2 > MAX_CENSUS_VERTICES {
                    return Err(CensusError::SizeOutOfRange {
                        what: "interior vertex count",
                        value: size,
                        max: MAX_CENSUS_VERTICES - 2,
                    });
                }
            }
            CensusKind::C => {
                if !(3..=MAX_CENSUS_VERTICES).contains(&size) {
                    return Err(CensusError::SizeOutOfRange {
                        what: "vertex count",
                        value: size,
                        max: MAX_CENSUS_VERTICES,
                    });
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for CensusKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CensusKind::G => write!(f, "g-census"),
            CensusKind::C => write!(f, "c-census"),
        }
    }
}

impl FromStr for CensusKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "g" | "g-census" => Ok(CensusKind::G),
            "c" | "c-census" => Ok(CensusKind::C),
            other => Err(format!("unknown census kind {other:?} (expected g or c)")),
        }
    }
}

/// Result of one census size: the exact maximum, every witness achieving
/// it, and run statistics.
///
/// Witnesses are graph6 lines, with `" u v"` appended for the g-census,
/// sorted lexicographically. `root` is `value^(1/size)`;
/// `conjecture_flag` is set when the root exceeds `3^(1/3)` beyond
/// [`CONJECTURE_TOLERANCE`] — for a g-census that would refute the
/// conjectured growth rate, for a c-census it carries no such weight at
/// finite sizes (cycles already exceed it).
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct CensusRecord {
    pub kind: CensusKind,
    pub size: usize,
    pub value: u64,
    pub witnesses: Vec<String>,
    pub graphs_examined: u64,
    pub elapsed: f64,
    pub root: f64,
    pub conjecture_flag: bool,
}

impl CensusRecord {
    pub(crate) fn finalize(
        kind: CensusKind,
        size: usize,
        value: u64,
        mut witnesses: Vec<String>,
        graphs_examined: u64,
        elapsed: f64,
    ) -> CensusRecord {
        witnesses.sort_unstable();
        witnesses.dedup();
        let root = (value as f64).powf(1.0 / size as f64);
        CensusRecord {
            kind,
            size,
            value,
            witnesses,
            graphs_examined,
            elapsed,
            root,
            conjecture_flag: root > bounds::growth_lower_bound() + CONJECTURE_TOLERANCE,
        }
    }

    /// Equality up to wall-clock time; the determinism contract for
    /// resumed and multi-worker runs.
    pub fn same_result(&self, other: &CensusRecord) -> bool {
        self.kind == other.kind
            && self.size == other.size
            && self.value == other.value
            && self.witnesses == other.witnesses
            && self.graphs_examined == other.graphs_examined
            && self.root == other.root
            && self.conjecture_flag == other.conjecture_flag
    }
}

/// `g(k)`: the exact maximum of the minimal u,v-separator count over all
/// graphs on `k + 2` vertices and all vertex pairs, `1 <= k <= 9`.
pub fn compute_g(k: usize) -> Result<CensusRecord, CensusError> {
    CensusKind::G.check_size(k)?;
    run::census_size(CensusKind::G, k)
}

/// `c(n)`: the exact maximum of the minimal vertex cut count over all
/// graphs on `n` vertices, `3 <= n <= 11`.
pub fn compute_c(n: usize) -> Result<CensusRecord, CensusError> {
    CensusKind::C.check_size(n)?;
    run::census_size(CensusKind::C, n)
}

/// One size of the conjecture check: `g(k)` against both `3^floor(k/3)`
/// (the construction lower bound) and the cube-root growth ceiling.
#[derive(Clone, Debug, Serialize)]
pub struct ConjectureRow {
    pub k: usize,
    pub value: u64,
    pub root: f64,
    pub lower_construction: u64,
    pub upper_sum: u64,
    /// `root > 3^(1/3) + tolerance`: evidence against the conjecture.
    pub violation: bool,
    /// Witness configurations, populated only for violations.
    pub witnesses: Vec<String>,
}

/// Report of [`verify_conjecture`].
#[derive(Clone, Debug, Serialize)]
pub struct ConjectureReport {
    pub threshold: f64,
    pub rows: Vec<ConjectureRow>,
}

impl ConjectureReport {
    pub fn violations(&self) -> usize {
        self.rows.iter().filter(|r| r.violation).count()
    }
}

/// Exhaustively checks `g(k)^(1/k) <= 3^(1/3)` for every `k <= k_max`.
/// A violation is reported with its witnesses, never suppressed: it
/// would be evidence against the conjectured growth rate, not a bug.
pub fn verify_conjecture(k_max: usize) -> Result<ConjectureReport, CensusError> {
    CensusKind::G.check_size(k_max)?;
    let threshold = bounds::growth_lower_bound() + CONJECTURE_TOLERANCE;
    let mut rows = Vec::with_capacity(k_max);
    for k in 1..=k_max {
        let record = compute_g(k)?;
        let violation = record.root > threshold;
        let lower = 3u64.pow((k / 3) as u32);
        let upper_sum = bounds::upper_bound_counts(k as u64)
            .0
            .try_into()
            .expect("upper bound fits u64 at census sizes");
        rows.push(ConjectureRow {
            k,
            value: record.value,
            root: record.root,
            lower_construction: lower,
            upper_sum,
            violation,
            witnesses: if violation { record.witnesses } else { Vec::new() },
        });
    }
    Ok(ConjectureReport { threshold, rows })
}
