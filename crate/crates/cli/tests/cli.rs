use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::NamedTempFile;

const COUNT_KEYS: [&str; 17] = [
    "graph",
    "n",
    "m",
    "degeneracy",
    "d_max",
    "command",
    "pattern",
    "k",
    "h",
    "mode",
    "samples",
    "nonzero_samples",
    "normalizer",
    "estimate",
    "low_confidence",
    "seed",
    "elapsed_seconds",
];

fn edge_file(text: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn run(file: &NamedTempFile, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nearclique"))
        .arg("--input")
        .arg(file.path())
        .args(args)
        .output()
        .unwrap()
}

fn json(out: &Output) -> serde_json::Map<String, Value> {
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    match serde_json::from_slice(&out.stdout).unwrap() {
        Value::Object(map) => map,
        other => panic!("not an object: {other}"),
    }
}

/// Two disjoint K5s joined by a path, with one K5 edge removed.
fn small_graph() -> NamedTempFile {
    let mut text = String::from("# two dense blocks\n");
    for base in [0, 10] {
        for a in 0..5 {
            for b in a + 1..5 {
                if (base, a, b) != (10, 0, 4) {
                    text.push_str(&format!("{} {}\n", base + a, base + b));
                }
            }
        }
    }
    text.push_str("4 7\n7 10\n");
    edge_file(&text)
}

#[test]
fn triangle_count_is_exactly_one() {
    let f = edge_file("1 2\n2 3\n3 1\n");
    for mode in ["inverse-ts", "peanuts"] {
        let report = json(&run(
            &f,
            &[
                "--command",
                "count",
                "--k",
                "3",
                "--mode",
                mode,
                "--samples",
                "1000",
            ],
        ));
        assert_eq!(report["estimate"], 1.0);
        assert_eq!(report["low_confidence"], true);
        assert_eq!(report["mode"], mode);
    }
}

#[test]
fn count_report_has_the_fixed_schema() {
    let f = small_graph();
    let report = json(&run(
        &f,
        &[
            "--command",
            "count",
            "--pattern",
            "k1",
            "--k",
            "5",
            "--samples",
            "2000",
        ],
    ));
    let keys: Vec<&str> = report.keys().map(String::as_str).collect();
    assert_eq!(keys, COUNT_KEYS);
    assert_eq!(report["n"], 11);
    assert_eq!(report["m"], 21);
    assert_eq!(report["h"], 4);
    assert_eq!(report["samples"], 2000);
}

#[test]
fn c4_exact_reports_one_type2_instance() {
    let f = edge_file("0 1\n1 2\n2 3\n3 0\n");
    let report = json(&run(&f, &["--command", "exact", "--k", "4"]));
    assert_eq!(report["k2_type2"], 1);
    assert_eq!(report["kclique"], 0);
    assert_eq!(report["k1"], 0);
    assert_eq!(report["k2_type1"], 0);
    assert!(!report.contains_key("estimate"));
    assert_eq!(report["seed"], Value::Null);
    assert_eq!(report.len(), 20);
}

#[test]
fn exact_counts_on_the_small_graph() {
    let f = small_graph();
    let report = json(&run(&f, &["--command", "exact", "--k", "5"]));
    assert_eq!(report["kclique"], 1);
    assert_eq!(report["k1"], 1);
}

#[test]
fn same_seed_gives_identical_reports() {
    let f = small_graph();
    let args = [
        "--command",
        "count",
        "--pattern",
        "k2t1",
        "--k",
        "5",
        "--samples",
        "5000",
        "--seed",
        "31",
    ];
    let strip = |out: Output| {
        assert!(out.status.success());
        let text = String::from_utf8(out.stdout).unwrap();
        assert!(text.contains("\"elapsed_seconds\""));
        text.lines()
            .filter(|l| !l.contains("\"elapsed_seconds\""))
            .collect::<Vec<_>>()
            .join("\n")
    };
    assert_eq!(strip(run(&f, &args)), strip(run(&f, &args)));
    let threaded = [&args[..], &["--threads", "3"]].concat();
    assert_eq!(strip(run(&f, &threaded)), strip(run(&f, &threaded)));
}

#[test]
fn omitted_seed_is_echoed() {
    let f = small_graph();
    let report = json(&run(
        &f,
        &["--command", "count", "--k", "4", "--samples", "100"],
    ));
    assert!(report["seed"].is_u64());
}

#[test]
fn csv_is_one_header_and_one_row() {
    let f = small_graph();
    let out = run(
        &f,
        &[
            "--command",
            "count",
            "--k",
            "4",
            "--samples",
            "100",
            "--seed",
            "1",
            "--output",
            "csv",
        ],
    );
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[0], COUNT_KEYS.join(","));
    assert_eq!(lines[1].split(',').count(), 17);
}

#[test]
fn list_prints_original_labels() {
    let f = small_graph();
    let out = run(
        &f,
        &[
            "--command",
            "list",
            "--pattern",
            "k1",
            "--k",
            "5",
            "--samples",
            "20000",
            "--seed",
            "2",
        ],
    );
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text, "[10,11,12,13,14]\n");
    let out = run(
        &f,
        &[
            "--command",
            "list",
            "--k",
            "5",
            "--seed",
            "2",
            "--output",
            "csv",
        ],
    );
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "0,1,2,3,4\n");
}

#[test]
fn stats_reports_phi_and_ratios() {
    let f = small_graph();
    let report = json(&run(
        &f,
        &[
            "--command",
            "stats",
            "--pattern",
            "k1",
            "--k",
            "5",
            "--with-exact",
        ],
    ));
    assert!(report["phi"].as_f64().unwrap() >= 1.0);
    assert_eq!(report["k1_ratio"], 1.0);
    let report = json(&run(&f, &["--command", "stats", "--k", "5"]));
    assert_eq!(report["kclique"], Value::Null);
}

#[test]
fn exit_codes() {
    let f = small_graph();
    let code = |out: Output| out.status.code().unwrap();
    assert_eq!(
        code(run(
            &f,
            &["--command", "count", "--k", "5", "--samples", "10"]
        )),
        0
    );
    assert_eq!(
        code(run(
            &f,
            &["--command", "count", "--pattern", "k2t2", "--k", "3"]
        )),
        1
    );
    assert_eq!(
        code(run(
            &f,
            &["--command", "count", "--k", "5", "--samples", "0"]
        )),
        1
    );
    assert_eq!(code(run(&f, &["--command", "nope", "--k", "5"])), 1);
    assert_eq!(code(run(&f, &["--command", "count"])), 1);
    assert_eq!(
        code(run(
            &f,
            &["--command", "count", "--k", "5", "--mode", "fast"]
        )),
        1
    );
    let bad = edge_file("0 1\n1 two\n");
    let out = run(&bad, &["--command", "count", "--k", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    let missing = Command::new(env!("CARGO_BIN_EXE_nearclique"))
        .args([
            "--input",
            "/definitely/not/here.txt",
            "--command",
            "exact",
            "--k",
            "4",
        ])
        .output()
        .unwrap();
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn messy_input_is_accepted() {
    let messy = edge_file("% header\n# comment\n\n0 1\n1 0\n0 1\n2 2\n1 2\t9\n\n2 0\n");
    let report = json(&run(&messy, &["--command", "exact", "--k", "3"]));
    assert_eq!(report["n"], 3);
    assert_eq!(report["m"], 3);
    assert_eq!(report["kclique"], 1);
    assert_eq!(report["k2_type1"], Value::Null);
}

#[test]
fn low_confidence_runs_advise_on_stderr() {
    let f = small_graph();
    let out = run(
        &f,
        &[
            "--command",
            "count",
            "--k",
            "5",
            "--samples",
            "100",
            "--seed",
            "4",
        ],
    );
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--mode peanuts"));
    assert_eq!(json(&out)["low_confidence"], true);
}
