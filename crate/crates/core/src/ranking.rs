//! Network-wide scores and deterministic influence rankings.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt::Display;
use std::hash::Hash;

use rayon::prelude::*;

use crate::entropy::{local_structure_entropy, EntropicIndex};
use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};

/// Cut-offs reported by [`compare_rankings`].
pub const TOP_K: [usize; 2] = [5, 10];

/// Local structure entropy of every node at one `q`.
#[derive(Debug, Clone, PartialEq)]
pub struct ScoreTable {
    pub q: EntropicIndex,
    /// Indexed by node id.
    pub scores: Vec<f64>,
}

/// Node ids ordered from most to least influential.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ranking {
    order: Vec<NodeId>,
}

impl Ranking {
    pub fn order(&self) -> &[NodeId] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn top(&self, k: usize) -> &[NodeId] {
        &self.order[..k.min(self.order.len())]
    }

    /// 0-based position of every node, indexed by node id.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.order.len()];
        for (p, &id) in self.order.iter().enumerate() {
            pos[id] = p;
        }
        pos
    }

    pub fn labels<'g>(&self, g: &'g Graph) -> Vec<&'g str> {
        self.order.iter().map(|&id| g.label(id)).collect()
    }
}

/// Scores every node. Nodes are evaluated in parallel on the current rayon
/// pool; each score is computed independently, so the table does not depend
/// on the number of threads.
pub fn score_all(g: &Graph, q: EntropicIndex) -> ScoreTable {
    let scores = (0..g.node_count())
        .into_par_iter()
        .map(|i| local_structure_entropy(g, i, q).expect("node id in range"))
        .collect();
    ScoreTable { q, scores }
}

/// Sorts by descending score, breaking ties by ascending label (numeric when
/// both labels are integers).
pub fn rank(g: &Graph, table: &ScoreTable) -> Ranking {
    assert_eq!(
        table.scores.len(),
        g.node_count(),
        "score table does not match graph"
    );
    let mut order: Vec<NodeId> = g.nodes().collect();
    order.sort_by(|&a, &b| {
        table.scores[b]
            .total_cmp(&table.scores[a])
            .then_with(|| g.label_rank(a).cmp(&g.label_rank(b)))
    });
    Ranking { order }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RankComparison {
    pub kendall_tau: f64,
    /// Keyed by requested `k`; the denominator is capped at the node count.
    pub top_k_overlap: BTreeMap<usize, f64>,
}

pub fn compare_rankings(a: &Ranking, b: &Ranking) -> Result<RankComparison> {
    compare_orders(a.order(), b.order())
}

/// Compares two orderings of the same item set.
///
/// Both inputs must be permutations of one another. Since neither ordering has
/// ties, Kendall's tau-b reduces to `(C - D) / (n (n - 1) / 2)`.
pub fn compare_orders<T>(a: &[T], b: &[T]) -> Result<RankComparison>
where
    T: Eq + Hash + Clone + Display,
{
    let pos_b: HashMap<&T, usize> = b.iter().enumerate().map(|(i, x)| (x, i)).collect();
    let set_a: HashSet<&T> = a.iter().collect();
    if set_a.len() != a.len()
        || pos_b.len() != b.len()
        || set_a.len() != pos_b.len()
        || a.iter().any(|x| !pos_b.contains_key(x))
    {
        return Err(mismatch(a, b));
    }

    let n = a.len();
    let sequence: Vec<usize> = a.iter().map(|x| pos_b[x]).collect();
    let pairs = n * n.saturating_sub(1) / 2;
    let kendall_tau = if pairs == 0 {
        1.0
    } else {
        let discordant = count_inversions(sequence);
        let concordant = pairs - discordant;
        (concordant as f64 - discordant as f64) / pairs as f64
    };

    let top_k_overlap = TOP_K
        .iter()
        .map(|&k| {
            let k_eff = k.min(n);
            if k_eff == 0 {
                return (k, 1.0);
            }
            let head: HashSet<&T> = a[..k_eff].iter().collect();
            let shared = b[..k_eff].iter().filter(|x| head.contains(x)).count();
            (k, shared as f64 / k_eff as f64)
        })
        .collect();

    Ok(RankComparison {
        kendall_tau,
        top_k_overlap,
    })
}

fn mismatch<T: Eq + Hash + Display>(a: &[T], b: &[T]) -> Error {
    const SHOWN: usize = 10;
    let set_a: HashSet<&T> = a.iter().collect();
    let set_b: HashSet<&T> = b.iter().collect();
    let only = |xs: &[T], other: &HashSet<&T>| -> Vec<String> {
        let mut seen = HashSet::new();
        xs.iter()
            .filter(|x| !other.contains(x) && seen.insert(*x))
            .take(SHOWN)
            .map(ToString::to_string)
            .collect()
    };
    let mut only_in_a = only(a, &set_b);
    let mut only_in_b = only(b, &set_a);
    if only_in_a.is_empty() && only_in_b.is_empty() {
        // Same members but repeated entries.
        only_in_a.push(format!("<{} entries, {} distinct>", a.len(), set_a.len()));
        only_in_b.push(format!("<{} entries, {} distinct>", b.len(), set_b.len()));
    }
    Error::NodeSetMismatch {
        only_in_a,
        only_in_b,
    }
}

/// Number of pairs `i < j` with `seq[i] > seq[j]`, by merge sort.
fn count_inversions(mut seq: Vec<usize>) -> usize {
    let mut buf = vec![0; seq.len()];
    merge_count(&mut seq, &mut buf)
}

fn merge_count(seq: &mut [usize], buf: &mut [usize]) -> usize {
    let n = seq.len();
    if n < 2 {
        return 0;
    }
    let mid = n / 2;
    let mut count = merge_count(&mut seq[..mid], &mut buf[..mid]);
    count += merge_count(&mut seq[mid..], &mut buf[mid..]);
    let (mut i, mut j, mut k) = (0, mid, 0);
    while i < mid && j < n {
        if seq[i] <= seq[j] {
            buf[k] = seq[i];
            i += 1;
        } else {
            buf[k] = seq[j];
            count += mid - i;
            j += 1;
        }
        k += 1;
    }
    buf[k..k + mid - i].copy_from_slice(&seq[i..mid]);
    k += mid - i;
    buf[k..k + n - j].copy_from_slice(&seq[j..n]);
    seq.copy_from_slice(&buf[..n]);
    count
}
