use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

use lse_cli::{run, CommandKind, OutputFormat, RunConfig, StateRow};
use tempfile::TempDir;

fn karate() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/data/karate.edgelist")
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path
}

fn config(command: CommandKind, input: &Path) -> RunConfig {
    let mut cfg = RunConfig::new(command);
    cfg.input_path = Some(input.to_path_buf());
    cfg
}

fn exec(cfg: &RunConfig) -> String {
    run(cfg, &mut std::io::sink()).unwrap()
}

fn lse(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_lse"))
        .args(args)
        .output()
        .unwrap()
}

fn complete_graph(n: usize) -> String {
    let mut text = String::new();
    for u in 1..=n {
        for v in u + 1..=n {
            text += &format!("{u} {v}\n");
        }
    }
    text
}

#[test]
fn rank_karate_q0_leads_with_node_34() {
    let mut cfg = config(CommandKind::Rank, &karate());
    cfg.q = Some(0.0);
    let out = exec(&cfg);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("label,degree,entropy,rank"));
    assert_eq!(lines.next(), Some("34,17,17.000000,1"));
    assert_eq!(lines.next(), Some("1,16,16.000000,2"));
    assert_eq!(out.lines().count(), 35);
    assert!(!out.contains('\r'));
}

#[test]
fn rank_karate_q1_matches_committed_shannon_oracle() {
    let oracle_text = include_str!("data/karate_q1_shannon.csv");
    let oracle: std::collections::HashMap<&str, f64> = oracle_text
        .lines()
        .skip(1)
        .map(|l| {
            let (label, h) = l.split_once(',').unwrap();
            (label, h.parse().unwrap())
        })
        .collect();

    let mut cfg = config(CommandKind::Rank, &karate());
    cfg.q = Some(1.0);
    cfg.output_format = OutputFormat::Json;
    let json: serde_json::Value = serde_json::from_str(&exec(&cfg)).unwrap();
    let rows = json["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 34);
    for row in rows {
        let label = row["label"].as_str().unwrap();
        let entropy = row["entropy"].as_f64().unwrap();
        assert!(
            (entropy - oracle[label]).abs() <= 1e-9,
            "{label}: {entropy} vs {}",
            oracle[label]
        );
    }
    assert_eq!(json["command"], "rank");
    assert_eq!(json["config"]["q"], 1.0);
}

#[test]
fn rank_triangle_ties_ordered_by_label() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "tri.txt", "3 1\n1 2\n2 3\n");
    let mut cfg = config(CommandKind::Rank, &path);
    cfg.q = Some(1.0);
    let out = exec(&cfg);
    let h = format!("{:.6}", 3f64.ln());
    assert_eq!(
        out,
        format!("label,degree,entropy,rank\n1,2,{h},1\n2,2,{h},2\n3,2,{h},3\n")
    );
}

#[test]
fn sweep_row_counts_and_order() {
    let out = exec(&config(CommandKind::Sweep, &karate()));
    assert_eq!(out.lines().count(), 1 + 43 * 34);

    let mut cfg = config(CommandKind::Sweep, &karate());
    cfg.grid_spec = Some("0,1".into());
    let out = exec(&cfg);
    let q0: Vec<&str> = out
        .lines()
        .skip(1)
        .filter(|l| l.starts_with("0,"))
        .map(|l| l.split(',').nth(1).unwrap())
        .collect();
    assert_eq!(q0.len(), 34);
    assert_eq!(q0[..5], ["34", "1", "33", "3", "2"]);
    // q ascending then rank ascending
    let keys: Vec<(f64, usize)> = out
        .lines()
        .skip(1)
        .map(|l| {
            let f: Vec<&str> = l.split(',').collect();
            (f[0].parse().unwrap(), f[3].parse().unwrap())
        })
        .collect();
    assert!(keys.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn sweep_single_edge() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "edge.txt", "x y\n");
    let mut cfg = config(CommandKind::Sweep, &path);
    cfg.grid_spec = Some("0,1,2".into());
    let out = exec(&cfg);
    let rows: Vec<Vec<String>> = out
        .lines()
        .skip(1)
        .map(|l| l.split(',').map(str::to_owned).collect())
        .collect();
    assert_eq!(rows.len(), 6);
    for pair in rows.chunks(2) {
        assert_eq!(pair[0][0], pair[1][0]);
        assert_eq!(pair[0][2], pair[1][2]);
        assert_eq!((pair[0][1].as_str(), pair[1][1].as_str()), ("x", "y"));
    }
    assert_eq!(rows[0][2], "1.000000");
    assert_eq!(rows[2][2], format!("{:.6}", 2f64.ln()));
    assert_eq!(rows[4][2], "0.500000");
}

#[test]
fn threshold_karate_is_finite() {
    let out = exec(&config(CommandKind::Threshold, &karate()));
    let mut lines = out.lines();
    assert_eq!(
        lines.next(),
        Some("mode,p_value,suffix_length,stable_top10")
    );
    let record = lines.next().unwrap();
    let p: f64 = record.split(',').nth(1).unwrap().parse().unwrap();
    assert!(p.is_finite());
}

#[test]
fn threshold_symmetric_graphs_zero() {
    let dir = TempDir::new().unwrap();
    let k5 = write(&dir, "k5.txt", &complete_graph(5));
    let star = write(&dir, "star.txt", "c 1\nc 2\nc 3\nc 4\nc 5\nc 6\n");
    for path in [k5, star] {
        let mut cfg = config(CommandKind::Threshold, &path);
        cfg.output_format = OutputFormat::Json;
        let json: serde_json::Value = serde_json::from_str(&exec(&cfg)).unwrap();
        assert_eq!(json["p_value"], 0.0, "{}", path.display());
        assert_eq!(json["suffix_length"], 43);
    }
}

#[test]
fn threshold_reports_null_when_undetected() {
    let mut cfg = config(CommandKind::Threshold, &karate());
    cfg.grid_spec = Some("0,1".into());
    cfg.refine = true;
    let csv = exec(&cfg);
    assert_eq!(
        csv,
        "mode,p_value,refined_p_value,suffix_length,stable_top10\nexact,none,none,1,none\n"
    );
    cfg.output_format = OutputFormat::Json;
    let json: serde_json::Value = serde_json::from_str(&exec(&cfg)).unwrap();
    assert!(json["p_value"].is_null());
    assert!(json["refined_p_value"].is_null());
    assert_eq!(json["stable_top10"].as_array().unwrap().len(), 0);
}

#[test]
fn threshold_refine_lands_on_tenth_lattice() {
    let mut cfg = config(CommandKind::Threshold, &karate());
    cfg.refine = true;
    cfg.output_format = OutputFormat::Json;
    let json: serde_json::Value = serde_json::from_str(&exec(&cfg)).unwrap();
    let p = json["p_value"].as_f64().unwrap();
    let refined = json["refined_p_value"].as_f64().unwrap();
    assert!(refined <= p);
    assert!(((refined * 10.0).round() - refined * 10.0).abs() < 1e-9);
    assert!(refined > 8.0, "previous grid point 8.0 is unstable");
}

#[test]
fn relaxed_tau_validated() {
    let mut cfg = config(CommandKind::Threshold, &karate());
    cfg.relaxed_tau = Some(0.2);
    assert!(run(&cfg, &mut std::io::sink()).is_err());
    cfg.relaxed_tau = Some(0.01);
    assert!(exec(&cfg).contains("relaxed(0.01)"));
}

#[test]
fn states_tables() {
    let out = exec(&config(CommandKind::States, &karate()));
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "state,order");
    assert!(lines[1].starts_with("Order_q0,\"34,1,33,3,2,"));
    assert!(lines[2].starts_with("Order_q1,\""));
    assert!(lines[3].starts_with("Order_stable,\""));

    let dir = TempDir::new().unwrap();
    let p3 = write(&dir, "p3.txt", "a b\nb c\n");
    let out = exec(&config(CommandKind::States, &p3));
    for line in out.lines().skip(1) {
        assert!(
            line.split_once(',').unwrap().1.starts_with("\"b,"),
            "{line}"
        );
    }

    let k5 = write(&dir, "k5.txt", &complete_graph(5));
    let out = exec(&config(CommandKind::States, &k5));
    let orders: Vec<&str> = out
        .lines()
        .skip(1)
        .map(|l| l.split_once(',').unwrap().1)
        .collect();
    assert_eq!(orders, vec!["\"1,2,3,4,5\""; 3]);
}

#[test]
fn states_without_stable_regime() {
    let mut cfg = config(CommandKind::States, &karate());
    cfg.grid_spec = Some("0,1".into());
    let out = exec(&cfg);
    assert!(out.ends_with("Order_stable,none\n"));
    cfg.grid_spec = Some("0,2".into());
    assert!(run(&cfg, &mut std::io::sink()).is_err());
}

fn compare(a: &Path, b: &Path, state: Option<StateRow>) -> serde_json::Value {
    let mut cfg = RunConfig::new(CommandKind::Compare);
    cfg.compare_paths = vec![a.to_path_buf(), b.to_path_buf()];
    cfg.state = state;
    cfg.output_format = OutputFormat::Json;
    serde_json::from_str(&exec(&cfg)).unwrap()
}

#[test]
fn compare_round_trips_rank_and_states_output() {
    let dir = TempDir::new().unwrap();
    let mut cfg = config(CommandKind::Rank, &karate());
    cfg.q = Some(0.0);
    let q0 = write(&dir, "q0.csv", &exec(&cfg));
    cfg.q = Some(1.0);
    let q1 = write(&dir, "q1.csv", &exec(&cfg));
    let states = write(
        &dir,
        "states.csv",
        &exec(&config(CommandKind::States, &karate())),
    );

    let same = compare(&q0, &q0, None);
    assert_eq!(same["kendall_tau"], 1.0);
    assert_eq!(same["top_k_overlap"]["5"], 1.0);
    assert_eq!(same["top_k_overlap"]["10"], 1.0);

    // reversed copy of the q0 ranking
    let text = fs::read_to_string(&q0).unwrap();
    let mut rows: Vec<&str> = text.lines().skip(1).collect();
    rows.reverse();
    let reversed: String = std::iter::once("label,degree,entropy,rank".to_owned())
        .chain(rows.iter().enumerate().map(|(i, r)| {
            let f: Vec<&str> = r.split(',').collect();
            format!("{},{},{},{}", f[0], f[1], f[2], i + 1)
        }))
        .collect::<Vec<_>>()
        .join("\n");
    let rev = write(&dir, "rev.csv", &(reversed + "\n"));
    assert_eq!(compare(&q0, &rev, None)["kendall_tau"], -1.0);

    // states rows agree with the rank files they summarise
    assert_eq!(
        compare(&states, &q0, Some(StateRow::Q0))["kendall_tau"],
        1.0
    );
    assert_eq!(
        compare(&states, &q1, Some(StateRow::Q1))["kendall_tau"],
        1.0
    );

    // Kendall tau by explicit pair enumeration
    let labels = |p: &Path| -> Vec<String> {
        fs::read_to_string(p)
            .unwrap()
            .lines()
            .skip(1)
            .map(|l| l.split(',').next().unwrap().to_owned())
            .collect()
    };
    let (a, b) = (labels(&q0), labels(&q1));
    let pos = |v: &[String], x: &str| v.iter().position(|y| y == x).unwrap();
    let (mut c, mut d) = (0i64, 0i64);
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            if pos(&b, &a[i]) < pos(&b, &a[j]) {
                c += 1;
            } else {
                d += 1;
            }
        }
    }
    let expected = (c - d) as f64 / (c + d) as f64;
    let got = compare(&q0, &q1, None)["kendall_tau"].as_f64().unwrap();
    assert!((got - expected).abs() < 1e-12);
}

#[test]
fn binary_streams_and_exit_codes() {
    let k = karate();
    let k = k.to_str().unwrap();

    let ok = lse(&["rank", "--input", k, "--q", "0"]);
    assert!(ok.status.success());
    assert!(String::from_utf8_lossy(&ok.stdout).starts_with("label,degree,entropy,rank\n34,17,"));
    assert!(ok.stderr.is_empty());

    let dir = TempDir::new().unwrap();
    let dup = write(&dir, "dup.txt", "a b\nb a\nc c\nb c\n");
    let warned = lse(&["rank", "--input", dup.to_str().unwrap(), "--q", "1"]);
    assert!(warned.status.success());
    let stderr = String::from_utf8_lossy(&warned.stderr);
    assert!(stderr.contains("1 self-loop"), "{stderr}");
    assert!(stderr.contains("1 duplicate"), "{stderr}");
    assert_eq!(String::from_utf8_lossy(&warned.stdout).lines().count(), 4);

    let bad = write(&dir, "bad.txt", "a b\n# fine\na b c\n");
    let failed = lse(&["rank", "--input", bad.to_str().unwrap(), "--q", "1"]);
    assert!(!failed.status.success());
    assert!(failed.stdout.is_empty());
    assert!(String::from_utf8_lossy(&failed.stderr).contains("line 3"));

    let missing = lse(&["sweep", "--input", "/nonexistent/graph.txt"]);
    assert!(!missing.status.success());

    let bad_grid = lse(&["sweep", "--input", k, "--grid", "1,0.5"]);
    assert!(!bad_grid.status.success());
    assert!(String::from_utf8_lossy(&bad_grid.stderr).contains("strictly increasing"));

    let out_path = dir.path().join("out.json");
    let to_file = lse(&[
        "--format",
        "json",
        "--output",
        out_path.to_str().unwrap(),
        "states",
        "--input",
        k,
    ]);
    assert!(to_file.status.success());
    assert!(to_file.stdout.is_empty());
    let json: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&out_path).unwrap()).unwrap();
    assert_eq!(json["states"][0]["order"][0], "34");
}

#[test]
fn compare_rejects_different_label_sets() {
    let dir = TempDir::new().unwrap();
    let a = write(
        &dir,
        "a.csv",
        "label,degree,entropy,rank\nx,1,1.0,1\ny,1,1.0,2\nz,1,1.0,3\n",
    );
    let b = write(
        &dir,
        "b.csv",
        "label,degree,entropy,rank\nx,1,1.0,1\ny,1,1.0,2\nw,1,1.0,3\n",
    );
    let out = lse(&["compare", a.to_str().unwrap(), b.to_str().unwrap()]);
    assert!(!out.status.success());
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(
        stderr.contains("only in first: [z]") && stderr.contains("only in second: [w]"),
        "{stderr}"
    );
}
