//! Sweeps over the entropic index and detection of the stable ranking regime.
//!
//! As `q` grows the ranking settles into a fixed order. The nonextensive
//! threshold is the first grid point of the longest grid suffix on which all
//! rankings agree.

use rayon::prelude::*;

use crate::entropy::EntropicIndex;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::grid::QGrid;
use crate::ranking::{compare_rankings, rank, score_all, Ranking, ScoreTable};

/// Default Kendall tau slack for [`Stability::Relaxed`].
pub const DEFAULT_RELAXED_TAU: f64 = 0.005;

/// Largest accepted relaxed tolerance.
pub const MAX_RELAXED_TAU: f64 = 0.05;

/// Grid spacing used when refining a threshold between grid points.
pub const REFINE_STEPS_PER_UNIT: u32 = 10;

#[derive(Debug, Clone)]
pub struct SweepResult {
    pub grid: QGrid,
    pub rankings: Vec<Ranking>,
    pub score_tables: Vec<ScoreTable>,
}

/// Ranks the graph at every grid point. Grid points run in parallel; output
/// order follows the grid.
pub fn sweep(g: &Graph, grid: &QGrid) -> SweepResult {
    let evaluated: Vec<(ScoreTable, Ranking)> = grid
        .indices()
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|q| {
            let table = score_all(g, q);
            let ranking = rank(g, &table);
            (table, ranking)
        })
        .collect();
    let (score_tables, rankings) = evaluated.into_iter().unzip();
    SweepResult {
        grid: grid.clone(),
        rankings,
        score_tables,
    }
}

/// How two rankings must relate to count as the same stable order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Stability {
    /// Identical orders.
    Exact,
    /// Kendall tau of at least `1 - tau_tol` between every pair in the suffix.
    Relaxed { tau_tol: f64 },
}

impl Stability {
    pub fn relaxed(tau_tol: f64) -> Result<Self> {
        if tau_tol > 0.0 && tau_tol <= MAX_RELAXED_TAU {
            Ok(Stability::Relaxed { tau_tol })
        } else {
            Err(Error::InvalidTolerance(tau_tol))
        }
    }

    fn agree(self, a: &Ranking, b: &Ranking) -> bool {
        match self {
            Stability::Exact => a == b,
            Stability::Relaxed { tau_tol } => {
                a == b
                    || compare_rankings(a, b)
                        .map(|c| c.kendall_tau >= 1.0 - tau_tol)
                        .unwrap_or(false)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ThresholdReport {
    pub p_value: Option<f64>,
    /// Present iff `p_value` is. In relaxed mode this is the ranking at the
    /// last grid point.
    pub stable_ranking: Option<Ranking>,
    /// Grid points in the agreeing suffix (1 when nothing agrees).
    pub suffix_length: usize,
}

pub fn detect_threshold(s: &SweepResult) -> ThresholdReport {
    detect_threshold_with(s, Stability::Exact)
}

/// Finds the smallest grid `q*` such that every ranking at `q >= q*` agrees
/// under `mode`, requiring at least two grid points in that suffix.
pub fn detect_threshold_with(s: &SweepResult, mode: Stability) -> ThresholdReport {
    let n = s.rankings.len();
    if n == 0 {
        return ThresholdReport {
            p_value: None,
            stable_ranking: None,
            suffix_length: 0,
        };
    }
    // Agreement over a suffix only shrinks as the suffix grows, so scan back
    // from the end until a ranking disagrees with something already accepted.
    let mut start = n - 1;
    while start > 0 {
        let candidate = &s.rankings[start - 1];
        let fits = match mode {
            Stability::Exact => candidate == &s.rankings[start],
            Stability::Relaxed { .. } => {
                s.rankings[start..].iter().all(|r| mode.agree(candidate, r))
            }
        };
        if !fits {
            break;
        }
        start -= 1;
    }
    let suffix_length = n - start;
    if suffix_length < 2 {
        return ThresholdReport {
            p_value: None,
            stable_ranking: None,
            suffix_length,
        };
    }
    ThresholdReport {
        p_value: Some(s.grid.values()[start]),
        stable_ranking: Some(s.rankings[n - 1].clone()),
        suffix_length,
    }
}

/// Narrows a detected threshold to a finer lattice of `1 / steps_per_unit`
/// between the last unstable grid point and the reported `p_value`.
///
/// Bisection assumes rankings stay stable once they first match the stable
/// order inside that interval. Returns `None` when no threshold was detected.
pub fn refine_threshold(
    g: &Graph,
    s: &SweepResult,
    report: &ThresholdReport,
    mode: Stability,
    steps_per_unit: u32,
) -> Option<f64> {
    let p_value = report.p_value?;
    let stable = report.stable_ranking.as_ref()?;
    let idx = s.grid.position(p_value)?;
    if idx == 0 {
        return Some(p_value);
    }
    let scale = steps_per_unit as f64;
    let lower = s.grid.values()[idx - 1];
    // lattice indices: `lo` is known unstable, `hi` known stable
    let mut lo = (lower * scale + 1e-9).floor() as u64;
    let mut hi = (p_value * scale - 1e-9).ceil() as u64;
    let at = |k: u64| k as f64 / scale;
    let is_stable = |k: u64| {
        let q = EntropicIndex::new(at(k)).expect("lattice point is non-negative");
        let ranking = rank(g, &score_all(g, q));
        mode.agree(&ranking, stable)
    };
    if hi <= lo {
        return Some(p_value);
    }
    if at(hi) != p_value && !is_stable(hi) {
        // p_value sits between lattice points and the next point up is
        // already known to be stable.
        return Some(p_value);
    }
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if is_stable(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Some(at(hi))
}

/// Rankings at `q = 0`, `q = 1` and in the stable regime.
#[derive(Debug, Clone, PartialEq)]
pub struct ThreeStates {
    pub order_q0: Ranking,
    pub order_q1: Ranking,
    pub order_stable: Option<Ranking>,
    pub threshold: ThresholdReport,
}

pub fn three_states(g: &Graph, grid: &QGrid, mode: Stability) -> Result<ThreeStates> {
    for required in [0.0, 1.0] {
        if !grid.contains(required) {
            return Err(Error::MissingGridPoint(required));
        }
    }
    three_states_from_sweep(&sweep(g, grid), mode)
}

pub fn three_states_from_sweep(s: &SweepResult, mode: Stability) -> Result<ThreeStates> {
    let at = |q: f64| {
        s.grid
            .position(q)
            .map(|i| s.rankings[i].clone())
            .ok_or(Error::MissingGridPoint(q))
    };
    let order_q0 = at(0.0)?;
    let order_q1 = at(1.0)?;
    let threshold = detect_threshold_with(s, mode);
    Ok(ThreeStates {
        order_q0,
        order_q1,
        order_stable: threshold.stable_ranking.clone(),
        threshold,
    })
}
