//! End-to-end tests of the command-line interface: output formats, exit
//! codes, the verification flows, and the report cache.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};
use std::sync::atomic::{AtomicU32, Ordering};

use brieskorn::correction::apply_ordering;

mod common;
use common::{brieskorn_graph, figure_ordering};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_brieskorn"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 output")
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("utf-8 output")
}

static COUNTER: AtomicU32 = AtomicU32::new(0);

/// A fresh path under the system temp dir; unique per test invocation.
fn scratch_path(name: &str) -> PathBuf {
    let id = COUNTER.fetch_add(1, Ordering::Relaxed);
    std::env::temp_dir().join(format!(
        "brieskorn-cli-{}-{id}-{name}",
        std::process::id()
    ))
}

#[test]
fn info_renders_json_reports() {
    let output = run(&["info", "2", "3", "5", "--json"]);
    assert!(output.status.success(), "stderr: {}", stderr(&output));
    let report: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(report["manifold"], "Sigma(2,3,5)");
    assert_eq!(report["euler"], "-1/30");
    assert_eq!(report["h1"], 1);
    assert_eq!(report["negative_definite"], true);
    assert_eq!(report["fillable_count"], 1);
    assert_eq!(report["d"], "2");
    assert_eq!(report["d_certification"], "exhaustive");
    assert_eq!(report["d3"], serde_json::Value::Null);
}

#[test]
fn info_prints_the_graph_on_request() {
    let output = run(&["info", "2", "3", "5", "--graph"]);
    assert!(output.status.success());
    let text = stdout(&output);
    // the Poincare sphere plumbing is the E8 star: center plus legs 1, 2, 4
    assert!(text.contains("\n0 -2 -1\n"), "missing center row:\n{text}");
    assert_eq!(text.lines().filter(|l| l.ends_with(" -1")).count(), 1);
    assert_eq!(text.lines().filter(|l| l.starts_with(|c: char| c.is_ascii_digit())).count(), 8);
}

#[test]
fn d3_prints_values_and_cited_labels() {
    let output = run(&["d3", "4", "5", "9"]);
    assert!(output.status.success());
    assert_eq!(stdout(&output), "d3 = -6\n");

    // e0 = -1 inputs carry the value from prior literature
    let output = run(&["d3", "2", "3", "7"]);
    assert!(output.status.success());
    assert_eq!(stdout(&output), "d3 = 0 (cited)\n");

    // no -3 vertex: not computed, reported as a failure
    let output = run(&["d3", "2", "3", "5"]);
    assert_eq!(output.status.code(), Some(1));
    assert!(stderr(&output).contains("error:"));
}

#[test]
fn dinv_reports_certification_and_reversal() {
    let output = run(&["dinv", "2", "3", "11"]);
    assert!(output.status.success());
    assert_eq!(stdout(&output), "d(Sigma(2,3,11)) = 2 (exhaustive)\n");

    let output = run(&["dinv", "2", "3", "11", "--reversed"]);
    assert!(output.status.success());
    assert_eq!(
        stdout(&output),
        "d(-Sigma(2,3,11)) = -2 (exhaustive; reversed orientation)\n"
    );
}

#[test]
fn count_prints_fillable_structures() {
    let output = run(&["count", "2", "7", "11"]);
    assert!(output.status.success());
    assert_eq!(stdout(&output), "fillable structures: 2\n");

    // the count formula does not apply at center framing -1
    let output = run(&["count", "2", "3", "7"]);
    assert_eq!(output.status.code(), Some(1));
    assert!(stderr(&output).contains("blow-downs"));
}

#[test]
fn rejects_invalid_exponents() {
    let output = run(&["info", "2", "4", "6"]);
    assert_eq!(output.status.code(), Some(1));
    assert!(stderr(&output).contains("error:"));
}

#[test]
fn verify_accepts_published_vectors_in_figure_coordinates() {
    // the witness for Sigma(3,7,10) as printed: center first, then the legs
    // in figure order, which is construction order permuted by (1, 0, 2)
    let vector_path = scratch_path("witness.txt");
    let ordering_path = scratch_path("ordering.txt");
    fs::write(
        &vector_path,
        "# published candidate vector\n(0, -1, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0)\n",
    )
    .unwrap();
    let graph = brieskorn_graph(&[3, 7, 10]);
    let ordering = figure_ordering(&graph, [1, 0, 2]);
    let rendered: Vec<String> = ordering.iter().map(|v| v.to_string()).collect();
    fs::write(&ordering_path, rendered.join(" ")).unwrap();

    let output = run(&[
        "dinv",
        "3",
        "7",
        "10",
        "--verify",
        vector_path.to_str().unwrap(),
        "--ordering",
        ordering_path.to_str().unwrap(),
    ]);
    assert!(output.status.success(), "stderr: {}", stderr(&output));
    let text = stdout(&output);
    assert!(text.contains("ends correctly"));
    assert!(text.contains("verified: a supplied vector certifies d = 2"));
    assert!(text.contains("d(Sigma(3,7,10)) = 2 (exhaustive)"));

    // sanity: the ordering really moves coordinates around
    let entries = vec![0, -1, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0];
    assert_ne!(apply_ordering(&entries, &ordering).unwrap(), entries);

    fs::remove_file(&vector_path).ok();
    fs::remove_file(&ordering_path).ok();
}

#[test]
fn verify_rejects_vectors_that_do_not_certify() {
    let vector_path = scratch_path("bad-witness.txt");
    // ends correctly but grades 0, not the correction term 2
    fs::write(&vector_path, "0 -1 0 0 0 0 0 0 0 0 0 0\n").unwrap();
    let output = run(&[
        "dinv",
        "3",
        "5",
        "7",
        "--verify",
        vector_path.to_str().unwrap(),
    ]);
    assert_eq!(output.status.code(), Some(2));
    assert!(stderr(&output).contains("verification mismatch"));
    fs::remove_file(&vector_path).ok();
}

#[test]
fn table_check_passes_and_prints_row_status() {
    let output = run(&["table1", "--kmax", "2"]);
    assert!(output.status.success());
    let text = stdout(&output);
    assert!(text.contains("16/16 rows match the catalog"));
    assert!(text.lines().filter(|l| l.starts_with("PASS")).count() == 16);
    assert!(text.contains("Sigma(2,3,7,41)"));
}

#[test]
fn search_lists_catalog_members_below_the_bound() {
    let output = run(&["search", "--max-product", "120"]);
    assert!(output.status.success());
    let text = stdout(&output);
    assert!(text.contains("product <= 120: 4"));
    for hit in ["Sigma(2,3,11)", "Sigma(2,3,17)", "Sigma(2,5,9)", "Sigma(3,5,7)"] {
        assert!(text.contains(hit), "missing {hit} in:\n{text}");
    }
}

#[test]
fn diophantine_subcommands_agree_with_oracles() {
    let output = run(&["dioph", "quadruples", "--oracle", "--bound", "100"]);
    assert!(output.status.success());
    let text = stdout(&output);
    assert!(text.contains("2\t3\t7\t41\n"));
    assert!(text.contains("2\t3\t11\t13\n"));
    assert!(text.contains("oracle agreement"));

    let output = run(&["dioph", "no-solution", "--bound", "60"]);
    assert!(output.status.success());
    assert!(stdout(&output).contains("no solutions"));

    // the hidden alias preserves the older subcommand spelling
    let output = run(&["dioph", "prop-new", "--bound", "60"]);
    assert!(output.status.success());

    let output = run(&["dioph", "triples", "--oracle", "--bound", "10"]);
    assert!(output.status.success());
    let text = stdout(&output);
    assert!(text.contains("5\t7\t2\t2\t3\t15"));
    assert!(text.contains("FAMILY\t2\t3\t6\t2\t11\t7"));
    assert!(text.contains("oracle agreement"));
}

#[test]
fn cache_reuses_previous_reports() {
    let cache_path = scratch_path("cache.jsonl");
    let cache = cache_path.to_str().unwrap();

    let output = run(&["--cache", cache, "dinv", "2", "3", "13"]);
    assert!(output.status.success());
    let first = fs::read_to_string(&cache_path).unwrap();
    assert_eq!(first.lines().count(), 1);
    assert!(first.contains("\"manifold\":\"Sigma(2,3,13)\""));

    // a cached report with a correction term satisfies both commands, so
    // nothing new is appended
    let output = run(&["--cache", cache, "info", "2", "3", "13"]);
    assert!(output.status.success());
    assert!(stdout(&output).contains("d:                  0 (exhaustive)"));
    let output = run(&["--cache", cache, "count", "2", "7", "11"]);
    assert!(output.status.success());
    let after = fs::read_to_string(&cache_path).unwrap();
    assert_eq!(after.lines().count(), 2, "info reused, count appended");

    // a second count run now hits the cache for the new manifold too
    let output = run(&["--cache", cache, "count", "2", "7", "11"]);
    assert!(output.status.success());
    assert_eq!(fs::read_to_string(&cache_path).unwrap().lines().count(), 2);

    fs::remove_file(&cache_path).ok();
}
