use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::NamedTempFile;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_theta-lab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn file(contents: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

fn path(f: &NamedTempFile) -> &str {
    f.path().to_str().unwrap()
}

fn parse_complex(s: &str) -> (f64, f64) {
    let body = s.strip_suffix('i').unwrap();
    let cut = body.rfind(['+', '-']).filter(|&k| k > 0 && !body[..k].ends_with('e')).unwrap();
    (body[..cut].parse().unwrap(), body[cut..].parse().unwrap())
}

#[test]
fn parity_census_in_genus_three() {
    let out = run(&["chars", "count", "--genus", "3"]);
    assert!(out.status.success());
    let v = json_of(&out);
    assert_eq!((v["even"].as_u64(), v["odd"].as_u64()), (Some(36), Some(28)));
}

#[test]
fn theta_eval_matches_a_direct_sum() {
    let tau = file(r#"{"genus":1,"entries":[[{"re":0.1,"im":0.9}]]}"#);
    let out = run(&["theta", "eval", "--tau", path(&tau), "--char", "0/1", "--z", "0.2-0.1i"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stdout));
    let (re, im) = parse_complex(json_of(&out)["value"].as_str().unwrap());

    // theta[0;1/2](z) = sum_n exp(i pi n^2 tau + 2 pi i n (z + 1/2))
    let (t, z) = ((0.1f64, 0.9f64), (0.2f64, -0.1f64));
    let pi = std::f64::consts::PI;
    let (mut sr, mut si) = (0.0, 0.0);
    for n in -30i32..=30 {
        let n = n as f64;
        let arg_re = -pi * n * n * t.1 - 2.0 * pi * n * z.1;
        let arg_im = pi * n * n * t.0 + 2.0 * pi * n * (z.0 + 0.5);
        sr += arg_re.exp() * arg_im.cos();
        si += arg_re.exp() * arg_im.sin();
    }
    assert!((re - sr).abs() < 1e-12 && (im - si).abs() < 1e-12, "{re}+{im}i vs {sr}+{si}i");
}

#[test]
fn seven_point_curve_has_one_vanishing_even_null() {
    let curve = file(r#"{"genus":3,"branch_points":[0,1,2.5,3,4.2,7,9]}"#);
    let out = run(&["curve", "vanishing", "--input", path(&curve)]);
    assert!(out.status.success());
    let v = json_of(&out);
    assert_eq!(v["vanishing"].as_array().unwrap().len(), 1);
    assert_eq!(v["pass"], Value::Bool(true));
}

#[test]
fn thomae_report_has_the_documented_fields() {
    let curve = file(r#"{"genus":2,"branch_points":[0,1,2,3,5]}"#);
    let out = run(&["curve", "thomae", "--input", path(&curve), "--samples", "6", "--seed", "3"]);
    assert!(out.status.success());
    let v = json_of(&out);
    for key in ["max_rel_err", "worst_case", "tolerance", "pass"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["seed"], 3);
}

#[test]
fn repeated_runs_are_byte_identical() {
    let args = ["identities", "verify", "--genus", "2", "--samples", "2", "--seed", "11"];
    let (a, b) = (run(&args), run(&args));
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn identities_render_as_latex() {
    let out = run(&["--format", "latex", "identities", "generate", "--genus", "1"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("\\theta") && text.lines().count() > 1);
}

#[test]
fn goepel_counts_match_the_closed_form() {
    let out = run(&["goepel", "enumerate", "--genus", "2", "--rank", "2"]);
    assert!(out.status.success());
    let v = json_of(&out);
    assert_eq!(v["count"], 15);
    assert_eq!(v["count"], v["expected_count"]);
}

#[test]
fn errors_are_json_objects_with_exit_codes() {
    let tau = file(r#"{"genus":1,"entries":[[{"re":0,"im":1}]]}"#);
    let bad_tol = run(&["theta", "eval", "--tau", path(&tau), "--tol", "0.5"]);
    assert_eq!(bad_tol.status.code(), Some(2));
    assert_eq!(json_of(&bad_tol)["error"]["kind"], "usage");

    let not_json = file("{ nope");
    let out = run(&["theta", "eval", "--tau", path(&not_json)]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json_of(&out)["error"]["kind"], "malformed_input");

    let lower = file(r#"{"genus":1,"entries":[[{"re":0,"im":-1}]]}"#);
    let out = run(&["theta", "eval", "--tau", path(&lower)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(json_of(&out)["error"]["message"].is_string());

    let out = run(&["theta", "eval", "--tau", "/nonexistent/tau.json"]);
    assert_eq!(json_of(&out)["error"]["kind"], "io");

    let out = run(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json_of(&out)["error"]["kind"], "usage");
}

#[test]
fn detect_on_a_curve_with_an_elliptic_involution() {
    let mut pts: Vec<f64> = [-4.0f64, -3.0, -2.0, -1.0, 1.0, 2.0, 3.0].iter().map(|x| 1.0 / (4.0 - x)).collect();
    pts.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let curve = file(&serde_json::json!({"genus": 3, "branch_points": pts}).to_string());
    let out = run(&["detect", "--input", path(&curve)]);
    assert!(out.status.success());
    let v = json_of(&out);
    assert_eq!(v["hyperelliptic"], true);
    assert_eq!(v["c2_criteria_agree"], true);
    let c2 = v["cases"].as_array().unwrap().iter().find(|c| c["case"] == "c2").unwrap();
    assert_eq!(c2["detected"], true);

    let single = json_of(&run(&["detect", "--input", path(&curve), "--case", "C3"]));
    assert_eq!(single["case"], "c3");
}

#[test]
fn detect_rejects_other_genera() {
    let tau = file(r#"{"genus":1,"entries":[[{"re":0,"im":1}]]}"#);
    let out = run(&["detect", "--tau", path(&tau)]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn thread_count_must_be_positive() {
    let out = Command::new(env!("CARGO_BIN_EXE_theta-lab"))
        .args(["chars", "count", "--genus", "1"])
        .env("THETA_LAB_THREADS", "0")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
