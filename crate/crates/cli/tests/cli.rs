//! End-to-end tests of the report pipeline and the exit-status contract.

use clap::Parser;
use covosc_cli::config::FileConfig;
use covosc_cli::report::OutputFormat;
use covosc_cli::{build_report, execute, Cli};
use std::path::PathBuf;
use std::process::Command;

fn tmp_path(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn parse(args: &[&str]) -> Cli {
    Cli::try_parse_from(std::iter::once("covosc").chain(args.iter().copied())).unwrap()
}

#[test]
fn formfactor_csv_starts_at_unity() {
    let out = tmp_path("formfactor_unity.csv");
    let cli = parse(&[
        "--output",
        out.to_str().unwrap(),
        "formfactor",
        "--q2-max",
        "100",
        "--samples",
        "50",
    ]);
    assert_eq!(execute(cli), 0);
    let text = std::fs::read_to_string(&out).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "q2,g,f,g_nonrel");
    assert_eq!(
        lines.next().unwrap(),
        "0.0000000000000000e0,1.0000000000000000e0,1.0000000000000000e0,1.0000000000000000e0"
    );
    assert_eq!(text.lines().count(), 51);
}

#[test]
fn identical_configs_produce_identical_files() {
    let first = tmp_path("repro_a.csv");
    let second = tmp_path("repro_b.csv");
    for out in [&first, &second] {
        let cli = parse(&[
            "--output",
            out.to_str().unwrap(),
            "formfactor",
            "--q2-max",
            "40",
            "--samples",
            "17",
            "--mass",
            "1.5",
        ]);
        assert_eq!(execute(cli), 0);
    }
    let a = std::fs::read(&first).unwrap();
    let b = std::fs::read(&second).unwrap();
    assert_eq!(a, b);
}

#[test]
fn algebra_json_reports_all_pairs() {
    let out = tmp_path("algebra.json");
    let cli = parse(&[
        "--format",
        "json",
        "--output",
        out.to_str().unwrap(),
        "algebra",
        "--truncation",
        "8",
    ]);
    assert_eq!(execute(cli), 0);
    let doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(doc["command"], "algebra");
    let rows = doc["rows"].as_array().unwrap();
    // 45 pairs per representation.
    assert_eq!(rows.len(), 90);
    assert!(rows.iter().all(|r| r[4] == serde_json::json!(true)));
    assert_eq!(doc["pass"], true);
    let checks = doc["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 4);
    assert!(checks.iter().all(|c| c["pass"] == serde_json::json!(true)));
}

#[test]
fn impossible_tolerance_fails_with_exit_one() {
    let out = tmp_path("algebra_tight.json");
    let cli = parse(&[
        "--format",
        "json",
        "--output",
        out.to_str().unwrap(),
        "algebra",
        "--truncation",
        "6",
        "--tolerance",
        "1e-18",
    ]);
    assert_eq!(execute(cli), 1);
    let doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(doc["pass"], false);
}

#[test]
fn invalid_parameters_exit_two() {
    let cli = parse(&["algebra", "--truncation", "2"]);
    assert_eq!(execute(cli), 2);
    let cli = parse(&["expansion", "--eta", "0.5", "--max-n", "30", "--truncation", "10"]);
    assert_eq!(execute(cli), 2);
    let cli = parse(&["wavefunction", "--eta", "0", "--step", "0"]);
    assert_eq!(execute(cli), 2);
}

#[test]
fn wavefunction_center_cell_is_ground_state_peak() {
    let report = build_report(
        &parse(&["wavefunction", "--eta", "0", "--grid", "2", "--step", "0.5"]).command,
        &FileConfig::default(),
    )
    .unwrap();
    // 9x9 grid; the center row has z = t = 0.
    assert_eq!(report.rows.len(), 81);
    let center = &report.rows[40];
    let psi = match center[2] {
        covosc_cli::report::Cell::Num(x) => x,
        _ => panic!("psi cell should be numeric"),
    };
    assert!((psi - 1.0 / std::f64::consts::PI.sqrt()).abs() < 1e-14);
    assert!(report.pass());
}

#[test]
fn expansion_report_matches_squeeze() {
    let report = build_report(
        &parse(&["expansion", "--eta", "0.5", "--max-n", "15"]).command,
        &FileConfig::default(),
    )
    .unwrap();
    assert_eq!(report.rows.len(), 16);
    assert!(report.pass());
}

#[test]
fn strong_squeeze_outgrows_default_truncation() {
    // At η = 2 the squeezed state leaks past a 40-quantum truncation, so the
    // default squeeze-match tolerance honestly fails ...
    let out = tmp_path("expansion_strong.json");
    let cli = parse(&[
        "--format",
        "json",
        "--output",
        out.to_str().unwrap(),
        "expansion",
        "--eta",
        "2",
    ]);
    assert_eq!(execute(cli), 1);
    // ... and a relaxed tolerance accepts the truncated model.
    let cli = parse(&[
        "--output",
        tmp_path("expansion_relaxed.csv").to_str().unwrap(),
        "expansion",
        "--eta",
        "2",
        "--tolerance",
        "0.1",
    ]);
    assert_eq!(execute(cli), 0);
}

#[test]
fn uncertainty_report_is_invariant() {
    let report = build_report(
        &parse(&["uncertainty", "--etas", "0,0.5,1,2"]).command,
        &FileConfig::default(),
    )
    .unwrap();
    assert_eq!(report.rows.len(), 4);
    assert!(report.pass());
}

#[test]
fn contract_report_passes() {
    let report = build_report(
        &parse(&["contract"]).command,
        &FileConfig::default(),
    )
    .unwrap();
    // Four contracted generators times four epsilons.
    assert_eq!(report.rows.len(), 16);
    assert!(report.pass());
}

#[test]
fn config_file_supplies_defaults_and_flags_override() {
    let config_path = tmp_path("defaults.conf");
    std::fs::write(&config_path, "format = json\ntruncation = 6\n").unwrap();

    let out = tmp_path("from_config.json");
    let cli = parse(&[
        "--config",
        config_path.to_str().unwrap(),
        "--output",
        out.to_str().unwrap(),
        "algebra",
    ]);
    assert_eq!(execute(cli), 0);
    let doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    let truncation = doc["parameters"]
        .as_array()
        .unwrap()
        .iter()
        .find(|p| p["name"] == "truncation")
        .unwrap()["value"]
        .clone();
    assert_eq!(truncation, "6");

    // A flag beats the config value.
    let out2 = tmp_path("flag_wins.json");
    let cli = parse(&[
        "--config",
        config_path.to_str().unwrap(),
        "--output",
        out2.to_str().unwrap(),
        "algebra",
        "--truncation",
        "5",
    ]);
    assert_eq!(execute(cli), 0);
    let doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&out2).unwrap()).unwrap();
    let truncation = doc["parameters"]
        .as_array()
        .unwrap()
        .iter()
        .find(|p| p["name"] == "truncation")
        .unwrap()["value"]
        .clone();
    assert_eq!(truncation, "5");
}

#[test]
fn bad_config_file_exits_two() {
    let config_path = tmp_path("broken.conf");
    std::fs::write(&config_path, "flux_capacitor = on\n").unwrap();
    let cli = parse(&["--config", config_path.to_str().unwrap(), "contract"]);
    assert_eq!(execute(cli), 2);
}

#[test]
fn binary_honors_output_dir_environment() {
    let dir = tmp_path("env_dir");
    std::fs::create_dir_all(&dir).unwrap();
    let status = Command::new(env!("CARGO_BIN_EXE_covosc"))
        .args(["algebra", "--truncation", "4"])
        .env(covosc_cli::OUTPUT_DIR_ENV, &dir)
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(0));
    assert!(dir.join("algebra.csv").exists());
}

#[test]
fn binary_smoke_test_stdout() {
    let output = Command::new(env!("CARGO_BIN_EXE_covosc"))
        .args(["--format", "json", "uncertainty", "--etas", "0,1"])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&output.stdout).unwrap();
    assert_eq!(doc["command"], "uncertainty");
    assert_eq!(doc["pass"], true);
}

#[test]
fn committed_examples_match_the_frozen_schema() {
    // The column orders and JSON layout documented in docs/examples are a
    // compatibility contract; regenerating a report must keep them stable.
    let docs = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../docs/examples");

    let frozen = std::fs::read_to_string(docs.join("formfactor.csv")).unwrap();
    let report = build_report(
        &parse(&["formfactor", "--q2-max", "8", "--samples", "5"]).command,
        &FileConfig::default(),
    )
    .unwrap();
    assert_eq!(frozen.lines().next().unwrap(), report.columns.join(","));
    assert_eq!(frozen.lines().count() - 1, report.rows.len());
    assert_eq!(report.to_csv(), frozen);

    let frozen: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(docs.join("algebra.json")).unwrap()).unwrap();
    let report = build_report(
        &parse(&["algebra", "--truncation", "4"]).command,
        &FileConfig::default(),
    )
    .unwrap();
    let fresh: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
    let keys = |v: &serde_json::Value| -> Vec<String> {
        v.as_object().unwrap().keys().cloned().collect()
    };
    assert_eq!(keys(&frozen), keys(&fresh));
    assert_eq!(frozen["columns"], fresh["columns"]);
    assert_eq!(keys(&frozen["checks"][0]), keys(&fresh["checks"][0]));
    assert_eq!(frozen["rows"].as_array().unwrap().len(), fresh["rows"].as_array().unwrap().len());
}

#[test]
fn output_format_parses_from_config_strings() {
    assert_eq!("csv".parse::<OutputFormat>().unwrap(), OutputFormat::Csv);
    assert_eq!("json".parse::<OutputFormat>().unwrap(), OutputFormat::Json);
    assert!("yaml".parse::<OutputFormat>().is_err());
}
