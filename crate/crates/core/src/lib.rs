//! Nonextensive local structure entropy of complex networks.
//!
//! Every node is scored by the Tsallis entropy of the degree shares inside its
//! ego network (the node plus its direct neighbors). At `q = 0` the score is
//! the node degree, at `q = 1` it is the Shannon local structure entropy, and
//! past a network-specific threshold the induced ranking stops changing.
//!
//! ```
//! use lse_core::{datasets, rank, score_all, EntropicIndex};
//!
//! let g = datasets::karate_club();
//! let ranking = rank(&g, &score_all(&g, EntropicIndex::ZERO));
//! assert_eq!(ranking.labels(&g)[..3], ["34", "1", "33"]);
//! ```

pub mod datasets;
pub mod entropy;
pub mod error;
pub mod graph;
pub mod grid;
pub mod ranking;
pub mod sweep;

pub use entropy::{
    local_degree_distribution, local_structure_entropy, q_log, shannon_entropy, tsallis_entropy,
    EntropicIndex, ProbabilityVector,
};
pub use error::{Error, Result};
pub use graph::{
    load_edge_list, parse_edge_list, EgoNetwork, Graph, GraphBuilder, LoadStats, NodeId,
};
pub use grid::{QGrid, DEFAULT_GRID_SPEC};
pub use ranking::{
    compare_orders, compare_rankings, rank, score_all, RankComparison, Ranking, ScoreTable,
};
pub use sweep::{
    detect_threshold, detect_threshold_with, refine_threshold, sweep, three_states,
    three_states_from_sweep, Stability, SweepResult, ThreeStates, ThresholdReport,
    DEFAULT_RELAXED_TAU, MAX_RELAXED_TAU, REFINE_STEPS_PER_UNIT,
};
