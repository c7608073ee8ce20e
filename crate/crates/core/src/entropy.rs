//! q-logarithm, Tsallis entropy and the nonextensive local structure entropy.
//!
//! The Boltzmann constant is taken to be 1 and logarithms are natural, so
//! values are in nats. Within [`Q_ONE_EPS`] of `q = 1` every function switches
//! to its Shannon form instead of evaluating the `0/0`-prone Tsallis formula.

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};

/// Distance from 1 below which `q` is treated as exactly 1.
pub const Q_ONE_EPS: f64 = 1e-9;

/// Absolute tolerance on the total mass of a [`ProbabilityVector`].
pub const SUM_TOLERANCE: f64 = 1e-12;

/// Distributions longer than this are summed with Neumaier compensation.
pub const COMPENSATED_SUM_THRESHOLD: usize = 1000;

/// The nonextensivity parameter `q`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct EntropicIndex(f64);

impl EntropicIndex {
    pub const ZERO: EntropicIndex = EntropicIndex(0.0);
    pub const ONE: EntropicIndex = EntropicIndex(1.0);

    pub fn new(q: f64) -> Result<Self> {
        if q.is_finite() && q >= 0.0 {
            Ok(EntropicIndex(q))
        } else {
            Err(Error::InvalidEntropicIndex(q))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }

    /// True when the Shannon branch applies.
    pub fn is_shannon(self) -> bool {
        (self.0 - 1.0).abs() <= Q_ONE_EPS
    }
}

impl TryFrom<f64> for EntropicIndex {
    type Error = Error;

    fn try_from(q: f64) -> Result<Self> {
        EntropicIndex::new(q)
    }
}

/// A strictly positive distribution that sums to one.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbabilityVector(Vec<f64>);

impl ProbabilityVector {
    pub fn new(probs: Vec<f64>) -> Result<Self> {
        if probs.is_empty() {
            return Err(Error::InvalidDistribution("no entries".into()));
        }
        if let Some(bad) = probs
            .iter()
            .find(|p| !(p.is_finite() && **p > 0.0 && **p <= 1.0))
        {
            return Err(Error::InvalidDistribution(format!(
                "entry {bad} outside (0, 1]"
            )));
        }
        let total = sum(&probs);
        if (total - 1.0).abs() > SUM_TOLERANCE {
            return Err(Error::InvalidDistribution(format!(
                "entries sum to {total}"
            )));
        }
        Ok(ProbabilityVector(probs))
    }

    /// Normalizes positive integer weights, dividing each by the exact total.
    pub fn from_weights(weights: &[usize]) -> Result<Self> {
        if weights.contains(&0) {
            return Err(Error::InvalidDistribution("zero weight".into()));
        }
        let total: usize = weights.iter().sum();
        let total = total as f64;
        Self::new(weights.iter().map(|&w| w as f64 / total).collect())
    }

    pub fn probs(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Deformed logarithm `(x^(1-q) - 1) / (1 - q)`, `ln x` at `q = 1`.
pub fn q_log(x: f64, q: EntropicIndex) -> Result<f64> {
    if x.is_nan() || x <= 0.0 {
        return Err(Error::NonPositiveArgument(x));
    }
    if q.is_shannon() {
        return Ok(x.ln());
    }
    let one_minus_q = 1.0 - q.value();
    Ok((x.powf(one_minus_q) - 1.0) / one_minus_q)
}

/// `-sum p ln p`.
pub fn shannon_entropy(p: &ProbabilityVector) -> f64 {
    let terms: Vec<f64> = canonical_order(p.probs())
        .into_iter()
        .map(|pi| -pi * pi.ln())
        .collect();
    clamp_non_negative(sum(&terms))
}

/// Tsallis entropy `(1 - sum p^q) / (q - 1)` with unit constant.
///
/// Entries are summed in ascending order, so the result depends only on the
/// multiset of probabilities.
pub fn tsallis_entropy(p: &ProbabilityVector, q: EntropicIndex) -> f64 {
    if q.is_shannon() {
        return shannon_entropy(p);
    }
    let q = q.value();
    let powers: Vec<f64> = canonical_order(p.probs())
        .into_iter()
        .map(|pi| pi.powf(q))
        .collect();
    clamp_non_negative((1.0 - sum(&powers)) / (q - 1.0))
}

/// Degree shares over the ego network of `center`, in member order.
pub fn local_degree_distribution(g: &Graph, center: NodeId) -> Result<ProbabilityVector> {
    let ego = g.ego_network(center)?;
    if g.degree(center) == 0 {
        return Err(Error::IsolatedNode(center));
    }
    ProbabilityVector::from_weights(&ego.member_degrees)
}

/// Nonextensive local structure entropy of one node. Isolated nodes score 0.
pub fn local_structure_entropy(g: &Graph, center: NodeId, q: EntropicIndex) -> Result<f64> {
    match local_degree_distribution(g, center) {
        Ok(p) => Ok(tsallis_entropy(&p, q)),
        Err(Error::IsolatedNode(_)) => Ok(0.0),
        Err(e) => Err(e),
    }
}

// Also maps -0.0 to 0.0.
fn clamp_non_negative(v: f64) -> f64 {
    if v > 0.0 {
        v
    } else {
        0.0
    }
}

fn canonical_order(probs: &[f64]) -> Vec<f64> {
    let mut sorted = probs.to_vec();
    sorted.sort_by(f64::total_cmp);
    sorted
}

fn sum(values: &[f64]) -> f64 {
    if values.len() > COMPENSATED_SUM_THRESHOLD {
        neumaier_sum(values)
    } else {
        values.iter().sum()
    }
}

fn neumaier_sum(values: &[f64]) -> f64 {
    let mut total = 0.0f64;
    let mut compensation = 0.0f64;
    for &v in values {
        let t = total + v;
        if total.abs() >= v.abs() {
            compensation += (total - t) + v;
        } else {
            compensation += (v - t) + total;
        }
        total = t;
    }
    total + compensation
}
