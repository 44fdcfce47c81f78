//! End-to-end tests for the `crn` binary: JSON shapes, exit codes and
//! rerun stability on the bundled fixture networks.

use std::io::Write;
use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
}

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn crn(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_crn"))
        .args(args)
        .output()
        .expect("binary runs");
    Run {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).expect("utf-8 stdout"),
        stderr: String::from_utf8(out.stderr).expect("utf-8 stderr"),
    }
}

fn crn_on(verb_args: &[&str], name: &str) -> Run {
    let path = fixture(name);
    let mut args: Vec<&str> = vec![verb_args[0], path.to_str().unwrap()];
    args.extend(&verb_args[1..]);
    crn(&args)
}

fn json(run: &Run) -> Value {
    serde_json::from_str(&run.stdout).expect("stdout is JSON")
}

fn strip_timings(report: &mut Value) {
    report["manifest"]["timings_ms"] = Value::Null;
}

#[test]
fn parse_reports_network_and_manifest() {
    let run = crn_on(&["parse"], "minimal_acr.crn");
    assert_eq!(run.code, 0);
    let v = json(&run);
    assert_eq!(v["verb"], "parse");
    assert_eq!(v["result"]["network"]["species"], serde_json::json!(["B", "A"]));
    assert_eq!(v["result"]["num_reactions"], 2);
    assert_eq!(v["result"]["conservation_laws"][0], serde_json::json!(["1", "1"]));
    let manifest = &v["manifest"];
    assert_eq!(manifest["version"], env!("CARGO_PKG_VERSION"));
    assert_eq!(manifest["input_sha256"].as_str().unwrap().len(), 64);
    assert!(manifest["timings_ms"]["total"].is_number());
    assert!(manifest["seed"].is_null());
}

#[test]
fn odes_prints_mass_action_polynomials() {
    let run = crn_on(&["odes"], "minimal_acr.crn");
    assert_eq!(run.code, 0);
    let v = json(&run);
    assert_eq!(v["result"]["odes"][0], "B*A^2 - B");
    assert_eq!(v["result"]["odes"][1], "-B*A^2 + B");
}

#[test]
fn gb_honors_a_named_lex_order() {
    let run = crn_on(&["gb", "--order", "lex:B,C,D,A"], "three_candidates.crn");
    assert_eq!(run.code, 0);
    let v = json(&run);
    let elements: Vec<&str> = v["result"]["elements"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e.as_str().unwrap())
        .collect();
    assert_eq!(
        elements,
        vec![
            "A^2*D - 4*A*D + 3*D",
            "A^2*C - 3*A*C + 2*C",
            "A*C*D - C*D",
            "B - C",
        ]
    );
}

#[test]
fn gb_rejects_unknown_orders_and_species() {
    let run = crn_on(&["gb", "--order", "weird"], "minimal_acr.crn");
    assert_eq!(run.code, 1);
    assert!(run.stderr.contains("unknown order"));
    let run = crn_on(&["gb", "--order", "lex:A,Q"], "minimal_acr.crn");
    assert_eq!(run.code, 1);
    assert!(run.stderr.contains("unknown species 'Q'"));
}

#[test]
fn saturate_drops_boundary_components() {
    let run = crn_on(&["saturate"], "minimal_acr.crn");
    assert_eq!(run.code, 0);
    let v = json(&run);
    assert_eq!(v["result"]["elements"], serde_json::json!(["A^2 - 1"]));
}

#[test]
fn eliminate_keeps_named_species() {
    let run = crn_on(&["eliminate", "--keep", "A"], "univariate_candidates.crn");
    assert_eq!(run.code, 0);
    let v = json(&run);
    assert_eq!(v["result"]["elements"], serde_json::json!(["A^2 - 4*A + 3"]));

    // A's projection is dense here, so the elimination ideal is zero.
    let run = crn_on(&["eliminate", "--keep", "A"], "three_candidates.crn");
    let v = json(&run);
    assert_eq!(v["result"]["elements"], serde_json::json!([]));
}

#[test]
fn acr_exit_code_tracks_conclusiveness() {
    // B is free on the positive steady-state set, so the full report is
    // inconclusive, while A alone has a conclusive verdict.
    let run = crn_on(&["acr"], "minimal_acr.crn");
    assert_eq!(run.code, 2);
    let run = crn_on(&["acr", "--species", "A"], "minimal_acr.crn");
    assert_eq!(run.code, 0);
    let v = json(&run);
    let verdict = &v["result"]["verdicts"][0];
    assert_eq!(verdict["species"], "A");
    assert_eq!(verdict["status"], "ZERO_DIVISOR_ACR");
    assert_eq!(verdict["value"]["exact"], "1");
}

#[test]
fn acr_reports_interval_values_with_bounds() {
    let run = crn_on(&["acr", "--species", "A"], "sqrt2_acr.crn");
    assert_eq!(run.code, 0);
    let v = json(&run);
    let value = &v["result"]["verdicts"][0]["value"];
    assert!(value["exact"].is_null());
    let lo: f64 = value["approx"].as_f64().unwrap();
    assert!((lo - 2f64.sqrt()).abs() < 1e-4);
}

#[test]
fn candidates_lists_values_and_vacuity_hint() {
    let run = crn_on(&["candidates"], "three_candidates.crn");
    assert_eq!(run.code, 0);
    let v = json(&run);
    let values: Vec<&str> = v["result"]["candidates"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["value"]["exact"].as_str().unwrap())
        .collect();
    assert_eq!(values, vec!["1", "2", "3"]);
    assert_eq!(v["result"]["vacuous_hint"], false);

    let run = crn_on(&["candidates"], "no_positive_states.crn");
    let v = json(&run);
    assert_eq!(v["result"]["vacuous_hint"], true);
}

#[test]
fn cacr_reports_complex_robustness() {
    let run = crn_on(&["cacr"], "multistationary_cacr.crn");
    assert_eq!(run.code, 0);
    let v = json(&run);
    let verdicts = v["result"]["verdicts"].as_array().unwrap();
    assert_eq!(verdicts[0]["species"], "A");
    assert_eq!(verdicts[0]["status"], "CACR");
    assert_eq!(verdicts[0]["value"], "2");
    assert_eq!(verdicts[1]["status"], "NO_CACR");
}

#[test]
fn jideal_augments_an_isolated_positive_point() {
    let run = crn_on(
        &[
            "jideal",
            "--component",
            "A^2 - 2*A + B^2 - 4*B + 5",
            "--dim",
            "1",
            "--augment",
        ],
        "minimal_acr.crn",
    );
    assert_eq!(run.code, 0);
    let v = json(&run);
    let basis: Vec<&str> = v["result"]["groebner"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e.as_str().unwrap())
        .collect();
    assert!(basis.contains(&"A - 1"));
    assert!(basis.contains(&"B - 2"));

    let run = crn_on(&["jideal", "--augment"], "minimal_acr.crn");
    assert_eq!(run.code, 1);
    assert!(run.stderr.contains("--augment requires --dim"));
}

#[test]
fn witness_reports_points_with_seed() {
    let run = crn_on(&["witness", "--dim", "2", "--seed", "7"], "envz_ompr.crn");
    assert_eq!(run.code, 0);
    let v = json(&run);
    assert_eq!(v["manifest"]["seed"], 7);
    assert_eq!(v["result"]["dimension"], 2);
    assert!(v["result"]["n_paths"].as_u64().unwrap() > 0);
    let points = v["result"]["points"].as_array().unwrap();
    assert!(!points.is_empty());
    for p in points {
        assert!(p["residual"].as_f64().unwrap() < 1e-8);
        assert_eq!(p["coords"].as_array().unwrap().len(), 7);
    }
}

#[test]
fn numerical_acr_pins_the_robust_coordinate() {
    let run = crn_on(&["acr", "--numerical", "--seed", "3"], "envz_ompr.crn");
    assert_eq!(run.code, 0);
    let v = json(&run);
    let verdicts = v["result"]["verdicts"].as_array().unwrap();
    let yp = verdicts.iter().find(|w| w["species"] == "Yp").unwrap();
    assert_eq!(yp["status"], "NUMERICAL_ACR");
    assert!((yp["value"].as_f64().unwrap() - 2.0).abs() < 1e-6);
    assert_eq!(v["result"]["surviving"][0], v["result"]["surviving"][1]);
}

#[test]
fn preclude_is_inconclusive_when_a_coordinate_agrees() {
    let run = crn_on(
        &["preclude", "--box", "0.5,3", "--max-rounds", "2"],
        "minimal_acr.crn",
    );
    assert_eq!(run.code, 2);
    let v = json(&run);
    assert_eq!(v["result"]["status"], "Inconclusive");
    assert!(v["result"]["reason"].as_str().unwrap().contains("agrees"));
}

#[test]
fn sample_is_byte_stable_for_a_fixed_seed() {
    let args = &["sample", "--box", "0.5,3", "--max-rounds", "2", "--seed", "5"];
    let a = crn_on(args, "minimal_acr.crn");
    let b = crn_on(args, "minimal_acr.crn");
    assert_eq!(a.code, 0);
    let mut ja = json(&a);
    let mut jb = json(&b);
    strip_timings(&mut ja);
    strip_timings(&mut jb);
    assert_eq!(ja, jb);
    assert!(ja["result"]["count"].as_u64().unwrap() >= 1);
}

#[test]
fn box_bounds_are_validated() {
    let run = crn_on(&["sample", "--box", "1,2,3"], "minimal_acr.crn");
    assert_eq!(run.code, 1);
    assert!(run.stderr.contains("--box"));
    let run = crn_on(&["preclude", "--box", "0,2"], "minimal_acr.crn");
    assert_eq!(run.code, 1);
}

#[test]
fn symbolic_rates_are_refused_with_guidance() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "A -> B ; k1").unwrap();
    writeln!(file, "B -> A ; 1").unwrap();
    let run = crn(&["acr", file.path().to_str().unwrap()]);
    assert_eq!(run.code, 1);
    assert!(run.stderr.contains("specialize symbolic rate constants"));
}

#[test]
fn missing_files_exit_with_an_error() {
    let run = crn(&["parse", "no_such_file.crn"]);
    assert_eq!(run.code, 1);
    assert!(run.stderr.contains("cannot read"));
}

#[test]
fn pretty_output_is_plain_text() {
    let run = crn_on(&["acr", "--species", "A", "--pretty"], "minimal_acr.crn");
    assert_eq!(run.code, 0);
    assert!(run.stdout.starts_with("A: ZERO_DIVISOR_ACR value=1"));
    assert!(serde_json::from_str::<Value>(&run.stdout).is_err());
}
