//! Exhaustive breadth-first census of a board's Cayley graph.

mod bfs;
mod file;
mod projected;
pub mod rank;

use serde::{Deserialize, Serialize};

pub use bfs::{
    bfs_census, bfs_census_with, distance_of, unique_solution_count, CensusOptions, DistanceTable,
};
pub use file::TableHeader;
pub use projected::{projected_census, projected_distances};
pub use rank::{rank, unrank};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusReport {
    /// Number of states at each distance from the identity.
    pub histogram: Vec<u64>,
    pub diameter: u32,
    /// States other than the identity with exactly one geodesic; `None` when
    /// geodesics were not tracked.
    pub unique_count: Option<u64>,
    pub total: u64,
}

impl CensusReport {
    pub(crate) fn from_histogram(histogram: Vec<u64>, unique_count: Option<u64>) -> Self {
        let total = histogram.iter().sum();
        Self {
            diameter: histogram.len().saturating_sub(1) as u32,
            histogram,
            unique_count,
            total,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
