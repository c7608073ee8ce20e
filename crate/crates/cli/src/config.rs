use std::fmt;
use std::path::PathBuf;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CommandKind {
    Rank,
    Sweep,
    Threshold,
    States,
    Compare,
}

impl fmt::Display for CommandKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            CommandKind::Rank => "rank",
            CommandKind::Sweep => "sweep",
            CommandKind::Threshold => "threshold",
            CommandKind::States => "states",
            CommandKind::Compare => "compare",
        };
        f.write_str(name)
    }
}

/// Which row of a `states` file to read when comparing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum StateRow {
    Q0,
    Q1,
    Stable,
}

impl StateRow {
    pub fn row_name(self) -> &'static str {
        match self {
            StateRow::Q0 => "Order_q0",
            StateRow::Q1 => "Order_q1",
            StateRow::Stable => "Order_stable",
        }
    }
}

/// Everything one invocation needs. Serialized verbatim as the `config` echo
/// of JSON output, so fields that must not affect output (thread count) are
/// skipped.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunConfig {
    pub command: CommandKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input_path: Option<PathBuf>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub compare_paths: Vec<PathBuf>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<f64>,
    /// Grid spec as given, or `"default"`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub grid_spec: Option<String>,
    pub output_format: OutputFormat,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub output_path: Option<PathBuf>,
    pub refine: bool,
    pub relaxed_tau: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub state: Option<StateRow>,
    #[serde(skip)]
    pub threads: Option<usize>,
}

impl RunConfig {
    pub fn new(command: CommandKind) -> Self {
        RunConfig {
            command,
            input_path: None,
            compare_paths: Vec::new(),
            q: None,
            grid_spec: None,
            output_format: OutputFormat::Csv,
            output_path: None,
            refine: false,
            relaxed_tau: None,
            state: None,
            threads: None,
        }
    }
}
