use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use lse_cli::{run, CommandKind, OutputFormat, RunConfig, StateRow};

/// Rank network nodes by nonextensive (Tsallis) local structure entropy.
#[derive(Debug, Parser)]
#[command(name = "lse", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "csv")]
    format: OutputFormat,

    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Worker threads (defaults to one per core). Output does not depend on it.
    #[arg(long, global = true)]
    threads: Option<usize>,
}

#[derive(Debug, Args)]
struct GridArgs {
    /// Edge list: two whitespace-separated labels per line, `#` comments.
    #[arg(long)]
    input: PathBuf,

    /// q grid as comma-separated values and start:stop:step ranges, or `default`.
    #[arg(long, default_value = "default")]
    grid: String,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Score and rank every node at one q.
    Rank {
        #[arg(long)]
        input: PathBuf,
        /// Entropic index (>= 0).
        #[arg(long)]
        q: f64,
    },
    /// Score and rank every node at every grid point.
    Sweep {
        #[command(flatten)]
        grid: GridArgs,
    },
    /// Detect the q beyond which the ranking no longer changes.
    Threshold {
        #[command(flatten)]
        grid: GridArgs,
        /// Bisect between grid points down to a q resolution of 0.1.
        #[arg(long)]
        refine: bool,
        /// Accept suffix rankings whose pairwise Kendall tau is at least 1 - t.
        #[arg(long)]
        relaxed_tau: Option<f64>,
    },
    /// Rankings at q = 0, q = 1 and in the stable regime.
    States {
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long)]
        relaxed_tau: Option<f64>,
    },
    /// Kendall tau and top-k overlap between two rank or states CSV files.
    Compare {
        a: PathBuf,
        b: PathBuf,
        /// Row to use from states files.
        #[arg(long, value_enum)]
        state: Option<StateRow>,
    },
}

impl Cli {
    fn into_config(self) -> RunConfig {
        let kind = match &self.command {
            Command::Rank { .. } => CommandKind::Rank,
            Command::Sweep { .. } => CommandKind::Sweep,
            Command::Threshold { .. } => CommandKind::Threshold,
            Command::States { .. } => CommandKind::States,
            Command::Compare { .. } => CommandKind::Compare,
        };
        let mut cfg = RunConfig::new(kind);
        cfg.output_format = self.format;
        cfg.output_path = self.output;
        cfg.threads = self.threads;
        match self.command {
            Command::Rank { input, q } => {
                cfg.input_path = Some(input);
                cfg.q = Some(q);
            }
            Command::Sweep { grid } => {
                cfg.input_path = Some(grid.input);
                cfg.grid_spec = Some(grid.grid);
            }
            Command::Threshold {
                grid,
                refine,
                relaxed_tau,
            } => {
                cfg.input_path = Some(grid.input);
                cfg.grid_spec = Some(grid.grid);
                cfg.refine = refine;
                cfg.relaxed_tau = relaxed_tau;
            }
            Command::States { grid, relaxed_tau } => {
                cfg.input_path = Some(grid.input);
                cfg.grid_spec = Some(grid.grid);
                cfg.relaxed_tau = relaxed_tau;
            }
            Command::Compare { a, b, state } => {
                cfg.compare_paths = vec![a, b];
                cfg.state = state;
            }
        }
        cfg
    }
}

fn main() -> ExitCode {
    let cfg = Cli::parse().into_config();
    let mut stderr = std::io::stderr();
    let result = run(&cfg, &mut stderr).and_then(|text| match &cfg.output_path {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| anyhow::anyhow!("cannot write {}: {e}", path.display())),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
            Ok(())
        }
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
