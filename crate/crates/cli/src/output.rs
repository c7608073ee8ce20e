//! CSV and JSON rendering.
//!
//! CSV is UTF-8 with a header row and LF line endings; entropies carry six
//! decimals. JSON keeps full precision and echoes the run configuration.

use anyhow::Result;
use serde::Serialize;

use crate::commands::{CompareReport, RankReport, StatesReport, SweepReport, ThresholdOutput};
use crate::config::{OutputFormat, RunConfig};

pub trait Report: Serialize {
    fn write_csv(&self, w: &mut csv::Writer<Vec<u8>>) -> csv::Result<()>;
}

pub fn render<R: Report>(report: &R, cfg: &RunConfig) -> Result<String> {
    match cfg.output_format {
        OutputFormat::Csv => {
            let mut w = csv::WriterBuilder::new()
                .terminator(csv::Terminator::Any(b'\n'))
                .from_writer(Vec::new());
            report.write_csv(&mut w)?;
            let bytes = w.into_inner().map_err(|e| anyhow::anyhow!(e.to_string()))?;
            Ok(String::from_utf8(bytes)?)
        }
        OutputFormat::Json => {
            #[derive(Serialize)]
            struct Envelope<'a, R> {
                command: String,
                config: &'a RunConfig,
                #[serde(flatten)]
                report: &'a R,
            }
            let mut text = serde_json::to_string_pretty(&Envelope {
                command: cfg.command.to_string(),
                config: cfg,
                report,
            })?;
            text.push('\n');
            Ok(text)
        }
    }
}

pub fn fmt_entropy(v: f64) -> String {
    format!("{v:.6}")
}

fn fmt_optional(v: Option<f64>) -> String {
    v.map_or_else(|| "none".to_owned(), |x| x.to_string())
}

impl Report for RankReport {
    fn write_csv(&self, w: &mut csv::Writer<Vec<u8>>) -> csv::Result<()> {
        w.write_record(["label", "degree", "entropy", "rank"])?;
        for row in &self.rows {
            w.write_record([
                row.label.clone(),
                row.degree.to_string(),
                fmt_entropy(row.entropy),
                row.rank.to_string(),
            ])?;
        }
        Ok(())
    }
}

impl Report for SweepReport {
    fn write_csv(&self, w: &mut csv::Writer<Vec<u8>>) -> csv::Result<()> {
        w.write_record(["q", "label", "entropy", "rank"])?;
        for row in &self.rows {
            w.write_record([
                row.q.to_string(),
                row.label.clone(),
                fmt_entropy(row.entropy),
                row.rank.to_string(),
            ])?;
        }
        Ok(())
    }
}

impl Report for ThresholdOutput {
    fn write_csv(&self, w: &mut csv::Writer<Vec<u8>>) -> csv::Result<()> {
        let mut header = vec!["mode", "p_value"];
        let mut record = vec![self.mode.clone(), fmt_optional(self.p_value)];
        if let Some(refined) = self.refined_p_value {
            header.push("refined_p_value");
            record.push(fmt_optional(refined));
        }
        header.extend(["suffix_length", "stable_top10"]);
        record.push(self.suffix_length.to_string());
        record.push(if self.stable_top10.is_empty() {
            "none".to_owned()
        } else {
            self.stable_top10.join(",")
        });
        w.write_record(header)?;
        w.write_record(record)
    }
}

impl Report for StatesReport {
    fn write_csv(&self, w: &mut csv::Writer<Vec<u8>>) -> csv::Result<()> {
        w.write_record(["state", "order"])?;
        for line in &self.states {
            let order = line
                .order
                .as_ref()
                .map_or_else(|| "none".to_owned(), |o| o.join(","));
            w.write_record([line.state, order.as_str()])?;
        }
        Ok(())
    }
}

impl Report for CompareReport {
    fn write_csv(&self, w: &mut csv::Writer<Vec<u8>>) -> csv::Result<()> {
        let mut header = vec!["kendall_tau".to_owned()];
        let mut record = vec![fmt_entropy(self.kendall_tau)];
        for (k, v) in &self.top_k_overlap {
            header.push(format!("top{k}_overlap"));
            record.push(fmt_entropy(*v));
        }
        w.write_record(header)?;
        w.write_record(record)
    }
}
