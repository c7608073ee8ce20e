//! One function per subcommand. Each returns a report that can be rendered
//! as CSV or JSON.

use lse_core::{
    compare_orders, detect_threshold_with, rank, refine_threshold, score_all, sweep,
    three_states_from_sweep, EntropicIndex, Graph, QGrid, RankComparison, Stability,
    REFINE_STEPS_PER_UNIT,
};
use serde::Serialize;

/// Rows shown in the threshold report's stable ranking.
pub const STABLE_TOP: usize = 10;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RankRow {
    pub label: String,
    pub degree: usize,
    pub entropy: f64,
    pub rank: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RankReport {
    pub q: f64,
    pub rows: Vec<RankRow>,
}

pub fn cmd_rank(g: &Graph, q: EntropicIndex) -> RankReport {
    let table = score_all(g, q);
    let ranking = rank(g, &table);
    let rows = ranking
        .order()
        .iter()
        .enumerate()
        .map(|(pos, &id)| RankRow {
            label: g.label(id).to_owned(),
            degree: g.degree(id),
            entropy: table.scores[id],
            rank: pos + 1,
        })
        .collect();
    RankReport { q: q.value(), rows }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRow {
    pub q: f64,
    pub label: String,
    pub entropy: f64,
    pub rank: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepReport {
    pub grid: Vec<f64>,
    pub rows: Vec<SweepRow>,
}

/// Long-form table: q ascending, then rank ascending.
pub fn cmd_sweep(g: &Graph, grid: &QGrid) -> SweepReport {
    let result = sweep(g, grid);
    let mut rows = Vec::with_capacity(grid.len() * g.node_count());
    for ((q, table), ranking) in grid
        .values()
        .iter()
        .zip(&result.score_tables)
        .zip(&result.rankings)
    {
        for (pos, &id) in ranking.order().iter().enumerate() {
            rows.push(SweepRow {
                q: *q,
                label: g.label(id).to_owned(),
                entropy: table.scores[id],
                rank: pos + 1,
            });
        }
    }
    SweepReport {
        grid: grid.values().to_vec(),
        rows,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ThresholdOutput {
    pub mode: String,
    pub p_value: Option<f64>,
    /// Only present when refinement was requested.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub refined_p_value: Option<Option<f64>>,
    pub suffix_length: usize,
    pub stable_top10: Vec<String>,
}

pub fn cmd_threshold(g: &Graph, grid: &QGrid, mode: Stability, refine: bool) -> ThresholdOutput {
    let result = sweep(g, grid);
    let report = detect_threshold_with(&result, mode);
    let refined_p_value =
        refine.then(|| refine_threshold(g, &result, &report, mode, REFINE_STEPS_PER_UNIT));
    let stable_top10 = report
        .stable_ranking
        .as_ref()
        .map(|r| {
            r.top(STABLE_TOP)
                .iter()
                .map(|&id| g.label(id).to_owned())
                .collect()
        })
        .unwrap_or_default();
    ThresholdOutput {
        mode: mode_name(mode),
        p_value: report.p_value,
        refined_p_value,
        suffix_length: report.suffix_length,
        stable_top10,
    }
}

fn mode_name(mode: Stability) -> String {
    match mode {
        Stability::Exact => "exact".into(),
        Stability::Relaxed { tau_tol } => format!("relaxed({tau_tol})"),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StateLine {
    pub state: &'static str,
    /// `None` when no stable regime was found.
    pub order: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StatesReport {
    pub p_value: Option<f64>,
    pub states: Vec<StateLine>,
}

pub fn cmd_states(g: &Graph, grid: &QGrid, mode: Stability) -> lse_core::Result<StatesReport> {
    for required in [0.0, 1.0] {
        if !grid.contains(required) {
            return Err(lse_core::Error::MissingGridPoint(required));
        }
    }
    let states = three_states_from_sweep(&sweep(g, grid), mode)?;
    let labels = |r: &lse_core::Ranking| r.labels(g).into_iter().map(str::to_owned).collect();
    Ok(StatesReport {
        p_value: states.threshold.p_value,
        states: vec![
            StateLine {
                state: "Order_q0",
                order: Some(labels(&states.order_q0)),
            },
            StateLine {
                state: "Order_q1",
                order: Some(labels(&states.order_q1)),
            },
            StateLine {
                state: "Order_stable",
                order: states.order_stable.as_ref().map(labels),
            },
        ],
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CompareReport {
    pub kendall_tau: f64,
    pub top_k_overlap: std::collections::BTreeMap<usize, f64>,
}

pub fn cmd_compare(a: &[String], b: &[String]) -> lse_core::Result<CompareReport> {
    let RankComparison {
        kendall_tau,
        top_k_overlap,
    } = compare_orders(a, b)?;
    Ok(CompareReport {
        kendall_tau,
        top_k_overlap,
    })
}
