//! Reads label orderings back from `rank` and `states` CSV output.

use anyhow::{anyhow, bail, Context, Result};

use crate::config::StateRow;

/// Extracts a most-influential-first label sequence.
///
/// `rank` files are ordered by their `rank` column; `states` files yield the
/// row selected by `state` (`Order_q0` when unset).
pub fn read_ranking(text: &str, state: Option<StateRow>) -> Result<Vec<String>> {
    let mut reader = csv::ReaderBuilder::new().from_reader(text.as_bytes());
    let headers = reader.headers().context("missing CSV header")?.clone();
    let column = |name: &str| headers.iter().position(|h| h == name);

    if let (Some(label_col), Some(rank_col)) = (column("label"), column("rank")) {
        if column("q").is_some() {
            bail!("sweep tables hold one ranking per q; extract a single q block first");
        }
        let mut rows = Vec::new();
        for (i, record) in reader.records().enumerate() {
            let record = record.with_context(|| format!("line {}", i + 2))?;
            let label = record.get(label_col).unwrap_or_default().to_owned();
            let rank: usize = record
                .get(rank_col)
                .unwrap_or_default()
                .parse()
                .with_context(|| format!("line {}: rank is not an integer", i + 2))?;
            rows.push((rank, label));
        }
        rows.sort_by_key(|(rank, _)| *rank);
        return Ok(rows.into_iter().map(|(_, label)| label).collect());
    }

    if let (Some(state_col), Some(order_col)) = (column("state"), column("order")) {
        let wanted = state.unwrap_or(StateRow::Q0).row_name();
        for record in reader.records() {
            let record = record?;
            if record.get(state_col) == Some(wanted) {
                let order = record.get(order_col).unwrap_or_default();
                if order == "none" {
                    bail!("{wanted} is `none`: no stable ranking was detected");
                }
                return Ok(order.split(',').map(str::to_owned).collect());
            }
        }
        return Err(anyhow!("no {wanted} row"));
    }

    bail!(
        "unrecognised ranking file (header `{}`); expected rank or states output",
        headers.iter().collect::<Vec<_>>().join(",")
    )
}
