//! Batch front-end for nonextensive local structure entropy analysis.
//!
//! [`run`] executes one [`RunConfig`] and returns the rendered output; the
//! `lse` binary only parses arguments and decides where the text goes.

pub mod commands;
pub mod config;
pub mod output;
pub mod rankfile;

use std::fs::File;
use std::io::{BufReader, Write};
use std::path::Path;

use anyhow::{bail, Context, Result};
use lse_core::{load_edge_list, EntropicIndex, Graph, QGrid, Stability};

pub use config::{CommandKind, OutputFormat, RunConfig, StateRow};

pub fn load_graph(path: &Path, diag: &mut (dyn Write + Send)) -> Result<Graph> {
    let file = File::open(path).with_context(|| format!("cannot open {}", path.display()))?;
    let (graph, stats) =
        load_edge_list(BufReader::new(file)).with_context(|| format!("{}", path.display()))?;
    if stats.self_loops > 0 {
        writeln!(diag, "warning: dropped {} self-loop(s)", stats.self_loops)?;
    }
    if stats.duplicate_edges > 0 {
        writeln!(
            diag,
            "warning: collapsed {} duplicate edge(s)",
            stats.duplicate_edges
        )?;
    }
    Ok(graph)
}

pub fn parse_grid(spec: Option<&str>) -> Result<QGrid> {
    match spec {
        None | Some("default") => Ok(QGrid::default_grid()),
        Some(s) => Ok(s.parse()?),
    }
}

pub fn stability(relaxed_tau: Option<f64>) -> Result<Stability> {
    Ok(match relaxed_tau {
        None => Stability::Exact,
        Some(t) => Stability::relaxed(t)?,
    })
}

/// Runs one command, writing warnings to `diag` and returning the output text.
pub fn run(cfg: &RunConfig, diag: &mut (dyn Write + Send)) -> Result<String> {
    match cfg.threads {
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .context("cannot start worker threads")?;
            pool.install(|| dispatch(cfg, diag))
        }
        None => dispatch(cfg, diag),
    }
}

fn dispatch(cfg: &RunConfig, diag: &mut (dyn Write + Send)) -> Result<String> {
    if cfg.command == CommandKind::Compare {
        let [a, b] = cfg.compare_paths.as_slice() else {
            bail!("compare needs exactly two ranking files");
        };
        let read = |p: &Path| -> Result<Vec<String>> {
            let text = std::fs::read_to_string(p)
                .with_context(|| format!("cannot read {}", p.display()))?;
            rankfile::read_ranking(&text, cfg.state).with_context(|| format!("{}", p.display()))
        };
        let report = commands::cmd_compare(&read(a)?, &read(b)?)?;
        return output::render(&report, cfg);
    }

    let Some(input) = cfg.input_path.as_deref() else {
        bail!("--input is required for {}", cfg.command);
    };
    let graph = load_graph(input, diag)?;
    let grid = || parse_grid(cfg.grid_spec.as_deref());
    match cfg.command {
        CommandKind::Rank => {
            let q = EntropicIndex::new(cfg.q.unwrap_or(1.0))?;
            output::render(&commands::cmd_rank(&graph, q), cfg)
        }
        CommandKind::Sweep => output::render(&commands::cmd_sweep(&graph, &grid()?), cfg),
        CommandKind::Threshold => {
            let grid = grid()?;
            if grid.len() < 2 {
                bail!("threshold detection needs at least two grid points");
            }
            let report =
                commands::cmd_threshold(&graph, &grid, stability(cfg.relaxed_tau)?, cfg.refine);
            output::render(&report, cfg)
        }
        CommandKind::States => {
            let report = commands::cmd_states(&graph, &grid()?, stability(cfg.relaxed_tau)?)?;
            output::render(&report, cfg)
        }
        CommandKind::Compare => unreachable!("handled above"),
    }
}
