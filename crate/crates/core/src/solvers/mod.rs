//! Width minimization by ruled shelf packing, exact exhaustive oracles, and
//! the multi-machine extension.

mod bins;
mod exact;
mod ffdh;

use serde::{Deserialize, Serialize};

pub use bins::{pack_bins, sub_instance, BinResult};
pub use exact::{brute_force_min_width, find_schedule, solve_with_windows, MinWidth};
pub use ffdh::{ffdh_ruled, Shelf, StripResult};

/// Default cap on the number of raw assignments an exhaustive search may span.
pub const DEFAULT_ORACLE_BUDGET: u64 = 10_000_000;

/// How a job picks among the open shelves.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ShelfMode {
    /// Scan every open shelf in creation order.
    #[default]
    FirstFit,
    /// Only the most recently opened shelf is a candidate.
    NextFit,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolverConfig {
    pub shelf_mode: ShelfMode,
    pub oracle_budget: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub machine_width: Option<u64>,
    /// Rejects jobs wider than this in [`ffdh_ruled`].
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub width_cap: Option<u64>,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            shelf_mode: ShelfMode::FirstFit,
            oracle_budget: DEFAULT_ORACLE_BUDGET,
            machine_width: None,
            width_cap: None,
        }
    }
}
