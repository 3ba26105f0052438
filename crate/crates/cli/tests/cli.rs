//! Integration tests for the command-line tool: exit codes, config
//! precedence, JSON round-trip, CSV series shape, and determinism.

use std::process::{Command, Output};

use warped_spectra::classifier::classify_rotsym;
use warped_spectra::model::{BoundaryData, DegreePair, SpectrumDescription, WarpedMetric};
use warped_spectra::scalar::Value;

fn wspec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wspec"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

#[test]
fn usage_errors_exit_1_without_partial_output() {
    for args in [
        &["classify", "--n=3"][..],                     // missing a, b
        &["classify", "--a=-1", "--b=x", "--n=3"],      // malformed number
        &["reduce", "--a=-1", "--b=-1", "--n=3"],       // missing p
        &["solve", "--a=0", "--b=1", "--n=3", "--p=0"], // incomplete metric
        &["frobnicate"],                                // unknown subcommand
    ] {
        let out = wspec(args);
        assert_eq!(out.status.code(), Some(1), "args {args:?}");
        assert!(
            out.stdout.is_empty(),
            "partial stdout for {args:?}: {}",
            stdout(&out)
        );
    }
}

#[test]
fn help_exits_0() {
    assert_eq!(wspec(&["--help"]).status.code(), Some(0));
}

#[test]
fn classify_json_round_trips() {
    let out = wspec(&[
        "classify", "--a=-1", "--b=-1", "--n=3", "--p=all", "--sphere", "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    assert_eq!(doc["schema"], 1);
    assert_eq!(doc["command"], "classify");

    let metric = WarpedMetric::exponential(Value::int(-1), Value::int(-1), 1.0).unwrap();
    let boundary = BoundaryData::sphere_with_eigenvalues(3, 12);
    let rows = doc["results"].as_array().expect("results array");
    assert_eq!(rows.len(), 4);
    for row in rows {
        let p = row["p"].as_u64().unwrap() as u32;
        let parsed: SpectrumDescription =
            serde_json::from_value(row["spectrum"].clone()).expect("spectrum deserializes");
        let direct = classify_rotsym(&metric, &DegreePair::new(3, p).unwrap(), &boundary)
            .unwrap()
            .spectrum;
        assert_eq!(parsed, direct, "round-trip mismatch at p={p}");
    }
}

#[test]
fn machine_output_is_deterministic() {
    let args = [
        "verify",
        "--a=-1",
        "--b=-1",
        "--n=3",
        "--p=1",
        "--lambda=0,2",
        "--json",
    ];
    let first = wspec(&args);
    assert_eq!(first.status.code(), Some(0));
    let mut again = args.to_vec();
    again.extend(["--jobs", "3"]);
    let second = wspec(&again);
    assert_eq!(second.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout, "outputs differ between runs");
}

#[test]
fn config_file_feeds_defaults_and_flags_win() {
    let dir = std::env::temp_dir().join(format!("wspec-config-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let config = dir.join("case.conf");
    std::fs::write(
        &config,
        "# sample configuration\na = -1\nb = -1\nn = 3\np = 0\nsphere = true\n",
    )
    .unwrap();
    let cfg = config.to_str().unwrap();

    let from_file = wspec(&["classify", "--config", cfg]);
    assert_eq!(from_file.status.code(), Some(0));
    assert!(
        stdout(&from_file).contains("[1, ∞)"),
        "got: {}",
        stdout(&from_file)
    );

    // flag overrides the file's p
    let overridden = wspec(&["classify", "--config", cfg, "--p=1"]);
    assert_eq!(overridden.status.code(), Some(0));
    assert!(
        stdout(&overridden).contains("[0, ∞)"),
        "got: {}",
        stdout(&overridden)
    );

    let malformed = dir.join("broken.conf");
    std::fs::write(&malformed, "a: -1\n").unwrap();
    let bad = wspec(&["classify", "--config", malformed.to_str().unwrap()]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(bad.stdout.is_empty());
}

#[test]
fn reduce_series_is_monotone_and_finite() {
    let dir = std::env::temp_dir().join(format!("wspec-series-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out_path = dir.join("series.csv");
    let out = wspec(&[
        "reduce",
        "--a=-1",
        "--b=-1",
        "--n=3",
        "--p=0",
        "--lambda=1",
        "--type=1",
        "--grid-points=50",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(
        stdout(&out).contains("V(t) = 1 + 1·exp(-2t)"),
        "got: {}",
        stdout(&out)
    );

    let text = std::fs::read_to_string(&out_path).unwrap();
    let mut prev = f64::NEG_INFINITY;
    let mut rows = 0;
    for line in text.lines() {
        let (x, v) = line.split_once(',').expect("two columns");
        let x: f64 = x.parse().unwrap();
        let v: f64 = v.parse().unwrap();
        assert!(x > prev, "abscissae not monotone");
        assert!(v.is_finite(), "non-finite value");
        prev = x;
        rows += 1;
    }
    assert_eq!(rows, 50);
}

#[test]
fn coupled_reduce_rejects_zero_eigenvalue() {
    let out = wspec(&[
        "reduce",
        "--a=-1",
        "--b=-1",
        "--n=3",
        "--p=1",
        "--type=3",
        "--lambda=0",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let msg = String::from_utf8_lossy(&out.stderr).to_string();
    assert!(
        msg.contains("nonzero cross-section eigenvalue"),
        "got: {msg}"
    );
}

#[test]
fn zero_budget_verify_exits_0() {
    // an explicit case list with no applicable components is an empty
    // report, not an error
    let out = wspec(&[
        "verify", "--a=-1", "--b=-1", "--n=3", "--p=0", "--type=3", "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["rows"].as_array().unwrap().len(), 0);
    assert_eq!(doc["passed"], 0);
}

#[test]
fn solve_reports_empty_spectrum_for_growing_potential() {
    let out = wspec(&[
        "solve",
        "--a=-1",
        "--b=1",
        "--n=4",
        "--p=1",
        "--lambda=3",
        "--type=1",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["purely_discrete"], true);
    assert!(doc["bottom_symbolic"].is_null());
    assert!(doc["bottom_numeric"].is_null());
}
