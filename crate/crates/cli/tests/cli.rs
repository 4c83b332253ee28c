use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Stdio};

use serde_json::Value;

struct Run {
    stdout: String,
    stderr: String,
    code: i32,
}

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "fixtures", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn run_with_stdin(args: &[&str], stdin: Option<&str>) -> Run {
    let mut child = Command::new(env!("CARGO_BIN_EXE_hypertoric"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    let out = child.wait_with_output().unwrap();
    Run {
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
        code: out.status.code().unwrap_or(-1),
    }
}

fn run(args: &[&str]) -> Run {
    run_with_stdin(args, None)
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let r = run(&full);
    (serde_json::from_str(&r.stdout).expect("stdout is one JSON document"), r.code)
}

fn without_timing(mut v: Value) -> Value {
    v.as_object_mut().unwrap().remove("elapsed_ms");
    v
}

fn field<'a>(text: &'a str, key: &str) -> &'a str {
    text.lines()
        .find_map(|l| l.strip_prefix(key).and_then(|r| r.strip_prefix(": ")))
        .unwrap_or_else(|| panic!("no '{key}' line in:\n{text}"))
}

#[test]
fn resolutions_of_omin_221() {
    let r = run(&["resolutions", &fixture("omin_221.mat")]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert_eq!(field(&r.stdout, "resolutions"), "6");
    assert_eq!(field(&r.stdout, "r(H_A)"), "24");
    assert_eq!(field(&r.stdout, "|W_B|"), "4");
}

#[test]
fn er_333_coefficients() {
    // t^2 (t-1)(t-5)(t-7)(t^4 - 23t^3 + 200t^2 - 784t + 1188), expanded
    let expected = [1i64, -36, 546, -4500, 21585, -59292, 83276, -41580, 0, 0];
    let (doc, code) = json(&["chi", "--er", "3", "3", "3"]);
    assert_eq!(code, 0);
    let got: Vec<i64> = doc["result"]["coefficients"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_i64().unwrap())
        .collect();
    assert_eq!(got, expected);
    assert_eq!(doc["input"]["er"], serde_json::json!([3, 3, 3]));
}

#[test]
fn validate_identity() {
    let r = run(&["validate", &fixture("identity3.mat")]);
    assert_eq!(r.code, 0);
    assert_eq!(field(&r.stdout, "surjective"), "yes");
    assert_eq!(field(&r.stdout, "unimodular"), "yes");
    let r = run(&["validate", &fixture("not_unimodular.mat")]);
    assert_eq!(r.code, 0);
    assert_eq!(field(&r.stdout, "surjective"), "yes");
    assert_eq!(field(&r.stdout, "unimodular"), "no");
}

#[test]
fn gale_output_round_trips() {
    for name in ["omin_221.mat", "omin_111.json", "surface_a2.mat", "identity3.mat"] {
        let a = fixture(name);
        let g = run(&["gale", &a]);
        assert_eq!(g.code, 0, "{name}: {}", g.stderr);
        let mut file = tempfile::NamedTempFile::new().unwrap();
        file.write_all(g.stdout.as_bytes()).unwrap();
        let b = file.path().to_str().unwrap();
        let r = run(&["iso", &a, b, "--gale-second"]);
        assert_eq!(r.code, 0, "{name}: {}", r.stderr);
        assert_eq!(field(&r.stdout, "isomorphic"), "yes", "{name}");
        // and back again through the A side
        let back = run(&["gale", "--gale", b]);
        assert_eq!(back.code, 0);
        let mut file2 = tempfile::NamedTempFile::new().unwrap();
        file2.write_all(back.stdout.as_bytes()).unwrap();
        let r = run(&["iso", &a, file2.path().to_str().unwrap()]);
        assert_eq!(field(&r.stdout, "isomorphic"), "yes", "{name}");
    }
}

#[test]
fn json_is_stable_across_threads_and_reruns() {
    let a = fixture("omin_221.mat");
    let base = without_timing(json(&["chi", &a, "--method", "ffield"]).0);
    for t in ["1", "2", "3", "8"] {
        let doc = without_timing(json(&["--threads", t, "chi", &a, "--method", "ffield"]).0);
        assert_eq!(doc, base, "threads {t}");
        let doc = without_timing(json(&["--threads", t, "chi", &a, "--method", "ffield", "--prime", "13"]).0);
        assert_eq!(doc["result"]["count"], serde_json::json!(13 * 13 * 13 - 6 * 13 * 13 + 11 * 13 - 6));
    }
    let s1 = without_timing(json(&["--seed", "11", "selfcheck", "--cases", "8"]).0);
    let s2 = without_timing(json(&["--seed", "11", "selfcheck", "--cases", "8"]).0);
    assert_eq!(s1, s2);
    let keys: Vec<String> = json(&["classify", &a]).0.as_object().unwrap().keys().cloned().collect();
    assert_eq!(keys, ["command", "elapsed_ms", "input", "result", "warnings"]);
}

#[test]
fn methods_agree_on_fixtures() {
    for name in ["omin_221.mat", "omin_111.json", "surface_a2.mat", "identity3.mat"] {
        let a = fixture(name);
        let coeffs = |m: &str| json(&["chi", &a, "--method", m]).0["result"]["coefficients"].clone();
        let poset = coeffs("poset");
        assert_eq!(coeffs("delres"), poset, "{name}");
        assert_eq!(coeffs("ffield"), poset, "{name}");
        assert_eq!(coeffs("auto"), poset, "{name}");
    }
}

#[test]
fn parse_errors_carry_positions() {
    let r = run(&["validate", &fixture("float.mat")]);
    assert_eq!(r.code, 1);
    assert!(r.stderr.contains("float.mat:3:3:"), "{}", r.stderr);
    let (doc, code) = json(&["validate", &fixture("float.mat")]);
    assert_eq!(code, 1);
    assert_eq!(doc["error"]["line"], 3);
    assert_eq!(doc["error"]["column"], 3);
    let r = run_with_stdin(&["validate", "-"], Some("2 2\n1 0\n0 x\n"));
    assert_eq!(r.code, 1);
    assert!(r.stderr.contains("-:3:3:"), "{}", r.stderr);
    let r = run_with_stdin(&["validate", "-"], Some("{\"rows\": [[1, 0],\n[0, 0.5]]}"));
    assert_eq!(r.code, 1);
    assert!(r.stderr.contains("-:2:"), "{}", r.stderr);
    let r = run_with_stdin(&["quiver-iso", "-", &fixture("triangle.graph")], Some("0 1\n3 3\n"));
    assert_eq!(r.code, 1);
    assert!(r.stderr.contains("-:2:1: self-loop"), "{}", r.stderr);
}

#[test]
fn exit_codes() {
    let r = run(&["resolutions", &fixture("not_unimodular.mat")]);
    assert_eq!(r.code, 1);
    let r = run(&["chi", "--er", "3", "3", "3", "--method", "ffield"]);
    assert_eq!(r.code, 3, "{}", r.stderr);
    let r = run(&["chi", &fixture("identity3.mat"), "--prime", "5"]);
    assert_eq!(r.code, 1);
    let r = run(&["chi"]);
    assert_eq!(r.code, 1);
    let r = run(&["--help"]);
    assert_eq!(r.code, 0);
    let r = run(&["classify", "/nonexistent/file.mat"]);
    assert_eq!(r.code, 1);
}

#[test]
fn small_prime_is_flagged() {
    let (doc, code) = json(&["chi", &fixture("omin_221.mat"), "--method", "ffield", "--prime", "2"]);
    assert_eq!(code, 0);
    assert_eq!(doc["result"]["prime_too_small"], true);
    assert_eq!(doc["warnings"].as_array().unwrap().len(), 1);
}

#[test]
fn ring_generators_of_omin_111() {
    let (doc, code) = json(&["ring-gens", &fixture("omin_111.json"), "--degree-bound", "2"]);
    assert_eq!(code, 0);
    let mut got: Vec<String> = doc["result"]["generators"]
        .as_array()
        .unwrap()
        .iter()
        .map(|g| g["monomial"].as_str().unwrap().to_owned())
        .collect();
    got.sort();
    let mut expected: Vec<String> = (1..=3)
        .flat_map(|i| (1..=3).map(move |j| format!("z{i}w{j}")))
        .collect();
    expected.sort();
    assert_eq!(got, expected);
}

#[test]
fn classification_and_orbit_test() {
    let r = run(&["classify", &fixture("omin_221.mat")]);
    assert_eq!(field(&r.stdout, "class"), "OminTriple{2,2,1}");
    let r = run(&["nilpotent-test", &fixture("omin_111.json")]);
    assert_eq!(field(&r.stdout, "result"), "{2}");
    let r = run(&["nilpotent-test", &fixture("omin_221.mat")]);
    assert_eq!(field(&r.stdout, "result"), "absent");
    let (doc, _) = json(&["classify", &fixture("identity3.mat")]);
    assert_eq!(doc["result"]["kind"], "Other");
    assert_eq!(doc["result"]["dimension"], 0);
}

#[test]
fn info_report() {
    let (doc, code) = json(&["info", &fixture("omin_221.mat")]);
    assert_eq!(code, 0);
    let res = &doc["result"];
    assert_eq!(res["dimension"], 4);
    assert_eq!(res["weyl"]["order"], 4);
    assert_eq!(res["weyl"]["multiplicities"], serde_json::json!([2, 2, 1]));
    assert_eq!(res["codim2_slices"].as_array().unwrap().len(), 2);
    assert_eq!(res["strata"].as_array().unwrap().len(), 5);
    let (doc, code) = json(&["info", "--graph", &fixture("triangle.graph")]);
    assert_eq!(code, 0);
    assert_eq!(doc["result"]["dimension"], 4);
    assert_eq!(doc["result"]["weyl"]["order"], 2);
}

#[test]
fn quiver_iso_and_witness() {
    let r = run(&["quiver-iso", &fixture("triangle.graph"), &fixture("triangle_relabeled.graph")]);
    assert_eq!(field(&r.stdout, "isomorphic"), "yes");
    let r = run(&["quiver-iso", &fixture("triangle.graph"), &fixture("path.graph")]);
    assert_eq!(field(&r.stdout, "isomorphic"), "no");
    let (doc, code) = json(&["iso", &fixture("omin_221.mat"), &fixture("omin_221_mixed.mat"), "--witness"]);
    assert_eq!(code, 0);
    assert_eq!(doc["result"]["isomorphic"], true);
    assert!(doc["result"]["witness"]["P"].is_array());
    let (doc, code) = json(&["iso", &fixture("omin_221.mat"), &fixture("surface_a2.mat"), "--witness"]);
    assert_eq!(code, 0);
    assert_eq!(doc["result"]["isomorphic"], false);
    assert!(doc["result"]["witness"].is_null());
}

#[test]
fn selfcheck_passes() {
    let r = run(&["--seed", "3", "selfcheck", "--cases", "25"]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    assert!(!r.stdout.contains("first failure"));
}
