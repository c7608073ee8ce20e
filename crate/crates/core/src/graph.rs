//! Immutable undirected simple graphs and ego networks.
//!
//! Nodes carry arbitrary string labels that are interned to dense ids in
//! first-appearance order. Self-loops are dropped and parallel edges are
//! collapsed on construction, so every graph is simple.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt::Write as _;
use std::io::BufRead;

use crate::error::{Error, Result};

/// Dense 0-based node index.
pub type NodeId = usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    adjacency: Vec<Vec<NodeId>>,
    degrees: Vec<usize>,
    edge_count: usize,
    /// Position of each node in the canonical label order used for tie-breaks.
    label_rank: Vec<usize>,
}

impl Graph {
    /// Builds a graph over nodes labelled `"0".."n-1"`.
    pub fn from_edges(node_count: usize, edges: &[(NodeId, NodeId)]) -> Result<Self> {
        let mut builder = GraphBuilder::new();
        for i in 0..node_count {
            builder.add_node(&i.to_string());
        }
        for &(u, v) in edges {
            for id in [u, v] {
                if id >= node_count {
                    return Err(Error::NodeOutOfRange { id, node_count });
                }
            }
            builder.add_edge_ids(u, v);
        }
        builder.build()
    }

    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn label(&self, id: NodeId) -> &str {
        &self.labels[id]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn node_id(&self, label: &str) -> Option<NodeId> {
        self.labels.iter().position(|l| l == label)
    }

    /// Sorted neighbor ids of `id`.
    pub fn neighbors(&self, id: NodeId) -> &[NodeId] {
        &self.adjacency[id]
    }

    pub fn degree(&self, id: NodeId) -> usize {
        self.degrees[id]
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn nodes(&self) -> std::ops::Range<NodeId> {
        0..self.node_count()
    }

    pub(crate) fn label_rank(&self, id: NodeId) -> usize {
        self.label_rank[id]
    }

    pub fn check_node(&self, id: NodeId) -> Result<()> {
        if id < self.node_count() {
            Ok(())
        } else {
            Err(Error::NodeOutOfRange {
                id,
                node_count: self.node_count(),
            })
        }
    }

    /// The center together with all of its direct neighbors.
    pub fn ego_network(&self, center: NodeId) -> Result<EgoNetwork> {
        self.check_node(center)?;
        let neighbors = &self.adjacency[center];
        let mut members = Vec::with_capacity(neighbors.len() + 1);
        let split = neighbors.partition_point(|&n| n < center);
        members.extend_from_slice(&neighbors[..split]);
        members.push(center);
        members.extend_from_slice(&neighbors[split..]);
        let member_degrees = members.iter().map(|&m| self.degrees[m]).collect();
        Ok(EgoNetwork {
            center,
            members,
            member_degrees,
        })
    }

    /// Writes the graph as an edge list that [`load_edge_list`] turns back
    /// into an identical graph, provided every node has at least one edge.
    ///
    /// Edges are grouped by their larger endpoint so that nodes first appear
    /// in id order.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        let mut seen = vec![false; self.node_count()];
        for j in self.nodes() {
            let lower: Vec<NodeId> = self.adjacency[j]
                .iter()
                .copied()
                .take_while(|&i| i < j)
                .collect();
            // A node with no lower neighbors was introduced together with
            // its successor; that pair has to come first.
            let mut ordered = Vec::with_capacity(lower.len());
            if j > 0 && !seen[j - 1] && lower.last() == Some(&(j - 1)) {
                ordered.push(j - 1);
            }
            ordered.extend(
                lower
                    .iter()
                    .copied()
                    .filter(|&i| !(i == j - 1 && !seen[j - 1])),
            );
            for i in ordered {
                let _ = writeln!(out, "{} {}", self.labels[i], self.labels[j]);
                seen[i] = true;
                seen[j] = true;
            }
        }
        out
    }
}

/// A node's local network: the center plus its direct neighbors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EgoNetwork {
    pub center: NodeId,
    /// Sorted ascending; includes the center.
    pub members: Vec<NodeId>,
    /// Degree of each member in the whole graph, aligned with `members`.
    pub member_degrees: Vec<usize>,
}

impl EgoNetwork {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn total_degree(&self) -> usize {
        self.member_degrees.iter().sum()
    }
}

/// Counts of input records discarded while building a graph.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct LoadStats {
    pub self_loops: usize,
    pub duplicate_edges: usize,
}

#[derive(Debug, Default)]
pub struct GraphBuilder {
    labels: Vec<String>,
    index: HashMap<String, NodeId>,
    adjacency: Vec<Vec<NodeId>>,
    stats: LoadStats,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// Interns `label`, returning its id. Existing labels keep their id.
    pub fn add_node(&mut self, label: &str) -> NodeId {
        if let Some(&id) = self.index.get(label) {
            return id;
        }
        let id = self.labels.len();
        self.labels.push(label.to_owned());
        self.index.insert(label.to_owned(), id);
        self.adjacency.push(Vec::new());
        id
    }

    pub fn add_edge(&mut self, a: &str, b: &str) {
        if a == b {
            // a label seen only in self-loops must not become an isolated node
            self.stats.self_loops += 1;
            return;
        }
        let u = self.add_node(a);
        let v = self.add_node(b);
        self.add_edge_ids(u, v);
    }

    fn add_edge_ids(&mut self, u: NodeId, v: NodeId) {
        if u == v {
            self.stats.self_loops += 1;
            return;
        }
        self.adjacency[u].push(v);
        self.adjacency[v].push(u);
    }

    pub fn stats(&self) -> LoadStats {
        let mut stats = self.stats;
        let raw: usize = self.adjacency.iter().map(Vec::len).sum::<usize>() / 2;
        let mut unique = 0;
        for list in &self.adjacency {
            let mut sorted = list.clone();
            sorted.sort_unstable();
            sorted.dedup();
            unique += sorted.len();
        }
        stats.duplicate_edges = raw - unique / 2;
        stats
    }

    pub fn build(self) -> Result<Graph> {
        if self.labels.is_empty() {
            return Err(Error::EmptyGraph);
        }
        let mut adjacency = self.adjacency;
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        let degrees: Vec<usize> = adjacency.iter().map(Vec::len).collect();
        let edge_count = degrees.iter().sum::<usize>() / 2;
        let label_rank = label_ranks(&self.labels);
        Ok(Graph {
            labels: self.labels,
            adjacency,
            degrees,
            edge_count,
            label_rank,
        })
    }
}

/// Parses a whitespace-separated edge list.
///
/// Blank lines and lines starting with `#` are skipped. Every other line must
/// hold exactly two labels.
pub fn load_edge_list<R: BufRead>(reader: R) -> Result<(Graph, LoadStats)> {
    let mut builder = GraphBuilder::new();
    let mut edges = 0usize;
    for (idx, line) in reader.lines().enumerate() {
        let line_no = idx + 1;
        let line = line.map_err(|e| Error::Parse {
            line: line_no,
            message: e.to_string(),
        })?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(Error::Parse {
                line: line_no,
                message: format!("expected 2 node labels, found {}", tokens.len()),
            });
        }
        builder.add_edge(tokens[0], tokens[1]);
        edges += 1;
    }
    let stats = builder.stats();
    if edges == stats.self_loops {
        return Err(Error::EmptyInput);
    }
    Ok((builder.build()?, stats))
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    load_edge_list(text.as_bytes()).map(|(g, _)| g)
}

/// Integer labels first in numeric order, then all other labels
/// lexicographically. Integer labels that compare equal (`"07"`, `"7"`) fall
/// back to their text.
pub fn compare_labels(a: &str, b: &str) -> Ordering {
    match (a.parse::<i64>(), b.parse::<i64>()) {
        (Ok(x), Ok(y)) => x.cmp(&y).then_with(|| a.cmp(b)),
        (Ok(_), Err(_)) => Ordering::Less,
        (Err(_), Ok(_)) => Ordering::Greater,
        (Err(_), Err(_)) => a.cmp(b),
    }
}

fn label_ranks(labels: &[String]) -> Vec<usize> {
    let mut order: Vec<NodeId> = (0..labels.len()).collect();
    order.sort_by(|&x, &y| compare_labels(&labels[x], &labels[y]));
    let mut rank = vec![0; labels.len()];
    for (pos, id) in order.into_iter().enumerate() {
        rank[id] = pos;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn path_graph() {
        let g = parse_edge_list("a b\nb c").unwrap();
        assert_eq!(g.node_count(), 3);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.degrees(), &[1, 2, 1]);
        assert_eq!(g.labels(), &["a", "b", "c"]);
    }

    #[test]
    fn duplicates_collapse() {
        let (g, stats) = load_edge_list("a b\na b\nb a".as_bytes()).unwrap();
        assert_eq!(g.node_count(), 2);
        assert_eq!(g.edge_count(), 1);
        assert_eq!(stats.duplicate_edges, 2);
    }

    #[test]
    fn self_loops_dropped_and_counted() {
        let (g, stats) = load_edge_list("a a\na b\nb b\n".as_bytes()).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(stats.self_loops, 2);
        assert_eq!(g.degrees(), &[1, 1]);
    }

    #[test]
    fn comments_and_blank_lines() {
        let g = parse_edge_list("# header\n\n  \n1 2\n# 3 4\n2\t3\n").unwrap();
        assert_eq!(g.node_count(), 3);
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn malformed_line_reports_line_number() {
        let err = parse_edge_list("a b\n# ok\nc d e\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err:?}");
        let err = parse_edge_list("a b\nlonely\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }

    #[test]
    fn empty_inputs() {
        assert_eq!(parse_edge_list("").unwrap_err(), Error::EmptyInput);
        assert_eq!(
            parse_edge_list("# nothing\n\n").unwrap_err(),
            Error::EmptyInput
        );
        assert_eq!(parse_edge_list("x x\n").unwrap_err(), Error::EmptyInput);
    }

    #[test]
    fn ego_network_of_star_center() {
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let ego = g.ego_network(0).unwrap();
        assert_eq!(ego.members, vec![0, 1, 2, 3, 4]);
        assert_eq!(ego.member_degrees, vec![4, 1, 1, 1, 1]);
    }

    #[test]
    fn ego_network_of_isolated_node() {
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        let ego = g.ego_network(2).unwrap();
        assert_eq!(ego.members, vec![2]);
        assert_eq!(ego.member_degrees, vec![0]);
    }

    #[test]
    fn ego_network_keeps_members_sorted() {
        let g = Graph::from_edges(5, &[(2, 0), (2, 4), (2, 1)]).unwrap();
        let ego = g.ego_network(2).unwrap();
        assert_eq!(ego.members, vec![0, 1, 2, 4]);
        assert_eq!(ego.member_degrees, vec![1, 1, 3, 1]);
    }

    #[test]
    fn ego_network_out_of_range() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(
            g.ego_network(2).unwrap_err(),
            Error::NodeOutOfRange {
                id: 2,
                node_count: 2
            }
        );
    }

    #[test]
    fn from_edges_rejects_bad_ids() {
        assert!(Graph::from_edges(2, &[(0, 2)]).is_err());
        assert_eq!(Graph::from_edges(0, &[]).unwrap_err(), Error::EmptyGraph);
    }

    #[test]
    fn label_order_is_numeric_aware() {
        let mut labels = vec!["b", "10", "2", "a", "1", "-3"];
        labels.sort_by(|a, b| compare_labels(a, b));
        assert_eq!(labels, vec!["-3", "1", "2", "10", "a", "b"]);
    }

    #[test]
    fn canonical_edge_list_handles_pairs_introduced_together() {
        let g = parse_edge_list("a b\nc d\nb d\n").unwrap();
        let text = g.to_edge_list();
        assert_eq!(parse_edge_list(&text).unwrap(), g);
    }

    fn edge_lists() -> impl Strategy<Value = Vec<(u8, u8)>> {
        prop::collection::vec((0u8..12, 0u8..12), 1..40)
    }

    proptest! {
        #[test]
        fn graph_invariants(edges in edge_lists()) {
            let text: String = edges.iter().map(|(a, b)| format!("n{a} n{b}\n")).collect();
            let Ok(g) = parse_edge_list(&text) else {
                // only self-loops
                prop_assert!(edges.iter().all(|(a, b)| a == b));
                return Ok(());
            };
            let mut degree_sum = 0;
            for i in g.nodes() {
                let adj = g.neighbors(i);
                prop_assert_eq!(adj.len(), g.degree(i));
                prop_assert!(adj.windows(2).all(|w| w[0] < w[1]));
                prop_assert!(!adj.contains(&i));
                for &j in adj {
                    prop_assert!(g.neighbors(j).contains(&i));
                }
                degree_sum += g.degree(i);

                let ego = g.ego_network(i).unwrap();
                prop_assert_eq!(ego.len(), g.degree(i) + 1);
                prop_assert!(ego.members.contains(&i));
                prop_assert_eq!(&ego, &g.ego_network(i).unwrap());
            }
            prop_assert_eq!(degree_sum, 2 * g.edge_count());
        }

        #[test]
        fn edge_list_round_trip(edges in edge_lists()) {
            let text: String = edges.iter().map(|(a, b)| format!("{a} {b}\n")).collect();
            if let Ok(g) = parse_edge_list(&text) {
                let canonical = g.to_edge_list();
                let reloaded = parse_edge_list(&canonical).unwrap();
                prop_assert_eq!(&reloaded, &g);
                prop_assert_eq!(reloaded.to_edge_list(), canonical);
            }
        }
    }
}
