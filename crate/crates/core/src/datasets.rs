//! Bundled reference networks.

use crate::graph::{parse_edge_list, Graph};

/// Zachary's karate club: 34 members, 78 ties, labelled `1` to `34`.
pub const KARATE_EDGE_LIST: &str = include_str!("../data/karate.edgelist");

pub fn karate_club() -> Graph {
    parse_edge_list(KARATE_EDGE_LIST).expect("bundled karate edge list parses")
}
