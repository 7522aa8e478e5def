//! End-to-end runs of the binary: golden reports, determinism, exit codes.

use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hn-codes"))
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn data(name: &str) -> String {
    format!("tests/data/{name}")
}

const GOLDEN: &[(&str, &str, &str)] = &[
    ("unstable_9_7.semistable", "semistable", "unstable_9_7.code"),
    ("unstable_9_7.filtration", "filtration", "unstable_9_7.code"),
    ("stable_5_2.semistable", "semistable", "stable_5_2.code"),
    ("stable_5_2_square.semistable", "semistable", "stable_5_2_square.code"),
    ("even_weight_3_2.semistable", "semistable", "even_weight_3_2.code"),
    ("even_weight_3_2.weights", "weights", "even_weight_3_2.code"),
    ("simplex_7_3.weights", "weights", "simplex_7_3.code"),
];

#[test]
fn reports_match_golden_files() {
    for (golden, cmd, file) in GOLDEN {
        let out = run(&[cmd, &data(file)]);
        assert_eq!(out.status.code(), Some(0));
        let path = Path::new(env!("CARGO_MANIFEST_DIR")).join(format!("tests/golden/{golden}.json"));
        let expected = std::fs::read(&path).expect("golden file present");
        assert!(out.stdout == expected, "{golden} differs from its golden file");
    }
}

#[test]
fn golden_reports_state_the_worked_examples() {
    let r = &json(&["semistable", &data("unstable_9_7.code")])["results"];
    assert_eq!(r["semistable"], false);
    assert_eq!(r["rate"], "7/9");
    assert_eq!(r["witness"]["support"]["elements"], serde_json::json!([5, 6, 7, 8, 9]));
    assert_eq!(r["witness"]["dim"], 4);
    assert_eq!(r["witness"]["rate"], "4/5");

    let r = &json(&["semistable", &data("stable_5_2.code")])["results"];
    assert_eq!(r["stable"], true);
    let r = &json(&["semistable", &data("stable_5_2_square.code")])["results"];
    assert_eq!(r["semistable"], false);
    assert_eq!((r["witness"]["dim"].as_u64(), r["witness"]["weight"].as_u64()), (Some(1), Some(1)));

    let r = &json(&["semistable", &data("even_weight_3_2.code")])["results"];
    assert_eq!(r["stable"], true);
    let r = &json(&["weights", &data("simplex_7_3.code")])["results"];
    assert_eq!(r["weight_hierarchy"], serde_json::json!([0, 4, 6, 7]));
    let r = &json(&["weights", &data("full_space_3.code")])["results"];
    assert_eq!(r["weight_hierarchy"], serde_json::json!([0, 1, 2, 3]));
}

#[test]
fn output_is_byte_identical_across_runs() {
    let cases: Vec<Vec<String>> = vec![
        vec!["weights".into(), data("gf4_5_2.code")],
        vec!["polygon".into(), data("unstable_9_7.code"), "--side".into(), "subset".into()],
        vec!["filtration".into(), data("unstable_9_7.code")],
        vec!["dual".into(), data("gf4_5_2.code")],
        vec!["rr".into(), data("stable_5_2.code"), "--all".into()],
        vec!["tensor".into(), data("even_weight_3_2.code"), data("stable_5_2.code")],
        vec!["matroid".into(), data("simplex.matroid")],
        vec!["--format".into(), "csv".into(), "dual".into(), data("unstable_9_7.code")],
        vec!["selftest".into()],
    ];
    for args in cases {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let (a, b) = (run(&args), run(&args));
        assert_eq!(a.status.code(), Some(0), "{args:?}");
        assert!(a.stdout == b.stdout, "{args:?} is not deterministic");
    }
}

#[test]
fn report_envelope() {
    let v = json(&["weights", &data("stable_5_2.code")]);
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["schema", "version", "command", "inputs", "results_sha256", "results"]);
    assert_eq!(v["schema"], "hn-codes/1");
    assert_eq!(v["command"]["name"], "weights");
    let bytes = std::fs::read(Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data/stable_5_2.code")).unwrap();
    assert_eq!(v["inputs"][0]["sha256"], hn_codes_cli::report::sha256_hex(&bytes));
    let compact = serde_json::to_string(&v["results"]).unwrap();
    assert_eq!(v["results_sha256"], hn_codes_cli::report::sha256_hex(compact.as_bytes()));
}

#[test]
fn timing_stays_outside_the_results() {
    let plain = json(&["semistable", &data("unstable_9_7.code")]);
    let timed = json(&["--timing", "semistable", &data("unstable_9_7.code")]);
    assert!(plain.get("timing").is_none());
    assert!(timed["timing"]["elapsed_ms"].is_number());
    assert_eq!(plain["results"], timed["results"]);
    assert_eq!(plain["results_sha256"], timed["results_sha256"]);
}

#[test]
fn rationals_are_strings() {
    let r = &json(&["filtration", &data("unstable_9_7.code")])["results"];
    assert_eq!(r["polygon"]["vertices"][2]["degree"], "0/1");
    assert_eq!(r["polygon"]["slopes"], serde_json::json!(["-5/4", "-4/3"]));
    assert_eq!(r["steps"][1]["slope"], "-5/4");
}

#[test]
fn svg_only_when_requested() {
    let dir = std::env::temp_dir().join(format!("hn-codes-svg-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("p.svg");
    let before = std::fs::read_dir(&dir).unwrap().count();
    json(&["polygon", &data("unstable_9_7.code")]);
    assert_eq!(std::fs::read_dir(&dir).unwrap().count(), before);
    json(&["polygon", &data("unstable_9_7.code"), "--svg", path.to_str().unwrap()]);
    let svg = std::fs::read_to_string(&path).unwrap();
    assert!(svg.starts_with("<svg") && svg.contains("<polyline"));
    assert!(svg.contains(">(4, 4)</text>"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| run(args).status.code();
    assert_eq!(code(&["weights", &data("malformed.code")]), Some(2));
    assert_eq!(code(&["weights", "tests/data/missing.code"]), Some(2));
    assert_eq!(code(&["rr", &data("stable_5_2.code"), "--J", "32"]), Some(2));
    assert_eq!(code(&["weights", &data("not_full_rank.code")]), Some(3));
    assert_eq!(code(&["dual", &data("full_space_3.code")]), Some(3));
    assert_eq!(code(&["weights", &data("long_22.code")]), Some(4));
    let err = String::from_utf8(run(&["weights", &data("long_22.code")]).stderr).unwrap();
    assert!(err.contains("20") && err.contains("--max-enum"), "{err}");
    let out = run(&["--max-enum", "22", "weights", &data("long_22.code")]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stderr).unwrap().contains("warning"));
    assert_eq!(code(&["tensor", &data("simplex_7_3.code"), &data("simplex_7_3.code")]), Some(4));
    assert_eq!(code(&["tensor", &data("gf4_5_2.code"), &data("stable_5_2.code")]), Some(3));
}

#[test]
fn rr_for_one_subset() {
    let r = &json(&["rr", &data("stable_5_2.code"), "--J", "5"])["results"];
    let e = &r["entries"][0];
    assert_eq!(e["J"]["elements"], serde_json::json!([1, 3]));
    assert_eq!((e["h0"].as_u64(), e["h1"].as_u64()), (Some(0), Some(1)));
    assert_eq!(e["riemann_roch"], true);
    assert_eq!(e["serre"], true);
    let all = &json(&["rr", &data("stable_5_2.code"), "--all"])["results"];
    assert_eq!(all["entries"].as_array().unwrap().len(), 32);
    assert_eq!(all["identity_failures"], 0);
}

#[test]
fn dual_reports_the_slope_map() {
    let r = &json(&["dual", &data("stable_5_2.code")])["results"];
    assert_eq!(r["slope_map"]["applicable"], true);
    assert_eq!(r["slope_map"]["predicted"], r["slope_map"]["actual"]);
    assert_eq!(r["slope_map"]["actual"], serde_json::json!(["-5/3"]));
    let r = &json(&["dual", &data("stable_5_2_square.code")])["results"];
    assert_eq!(r["slope_map"]["applicable"], false);
}

#[test]
fn tensor_and_matroid_commands() {
    let r = &json(&["tensor", &data("even_weight_3_2.code"), &data("even_weight_3_2.code")])["results"];
    assert_eq!(r["product"]["weight_hierarchy"], serde_json::json!([0, 4, 6, 8, 9]));
    assert_eq!(r["product"]["semistable"], true);
    assert_eq!(r["chained_check"]["passed"], true);
    let r = &json(&["matroid", &data("uniform_2_4.matroid")])["results"];
    assert_eq!(r["gaps"], serde_json::json!([1, 2]));
    assert_eq!(r["weight_hierarchy"], serde_json::json!([0, 3, 4]));
    let v = json(&["matroid", &data("simplex.matroid")]);
    assert_eq!(v["inputs"].as_array().unwrap().len(), 2);
    assert_eq!(v["results"]["weight_hierarchy"], serde_json::json!([0, 4, 6, 7]));
}

#[test]
fn selftest_passes() {
    let r = &json(&["selftest"])["results"];
    assert_eq!(r["passed"], true);
    assert_eq!(r["examples"].as_array().unwrap().len(), 4);
}

#[test]
fn csv_output() {
    let out = run(&["--format", "csv", "weights", &data("simplex_7_3.code")]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("key,value\n"));
    assert!(text.contains("results.weight_hierarchy.1,4\n"));
}
