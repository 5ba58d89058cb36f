use std::path::PathBuf;
use std::process::{Command, Output};

use borcherds_magnus::lie::LieJson;
use borcherds_magnus::models::{build_monster, Caps, CoefficientTable};
use borcherds_magnus::semidirect::GroupElementJson;
use borcherds_magnus::verify::{Sampler, SuiteReport};

fn bmg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bmg")).args(args).output().expect("bmg runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).trim().to_string()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("bmg-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, contents).unwrap();
    p
}

#[test]
fn coeffs_prints_series() {
    let o = bmg(&["coeffs", "j", "3"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "1, 0, 196884, 21493760, 864299970");
    assert_eq!(stdout(&bmg(&["coeffs", "partition", "10"])), "1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(bmg(&["build", "fricke"]).status.code(), Some(2));
    assert_eq!(bmg(&["verify", "monster", "no-such-suite"]).status.code(), Some(2));
    assert_eq!(bmg(&["mul", "/nonexistent/spec.json", "a", "b"]).status.code(), Some(2));
    assert_eq!(bmg(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn inapplicable_suite_is_a_domain_error() {
    let o = bmg(&["verify", "h3", "root-sets"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("does not apply"));
}

#[test]
fn verify_emits_parseable_reports() {
    let o = bmg(&["verify", "monster", "model", "--format", "json"]);
    assert!(o.status.success());
    let r: SuiteReport = serde_json::from_slice(&o.stdout).unwrap();
    assert!(r.passed && r.suite == "model" && r.model == "monster");
    let text = stdout(&bmg(&["verify", "monster", "derivation-transfer", "--seed", "5"]));
    assert!(text.starts_with("PASS derivation-transfer on monster (seed 5"), "{text}");
}

#[test]
fn build_writes_a_loadable_spec() {
    let dir = std::env::temp_dir().join(format!("bmg-build-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("monster.json");
    let o = bmg(&["build", "monster", "--max-block", "2", "--format", "json", "--out", out.to_str().unwrap()]);
    assert!(o.status.success());
    let o = bmg(&["verify", out.to_str().unwrap(), "model"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stdout));
    let text = stdout(&bmg(&["build", "h3"]));
    assert!(text.contains("model h3") && text.contains("consistency ok"), "{text}");
}

#[test]
fn fricke_reads_json_and_csv_tables() {
    let json = scratch("j.json", &CoefficientTable::identity_class(4).to_json_string());
    let o = bmg(&["build", "fricke", "--N", "1", "--table", json.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let csv = scratch("j.csv", "exponent,coefficient\n-1,1\n0,0\n1,196884\n2,21493760\n3,864299970\n");
    let from_csv = bmg(&["build", "fricke", "--N", "1", "--table", csv.to_str().unwrap()]);
    assert!(from_csv.status.success(), "{}", String::from_utf8_lossy(&from_csv.stderr));
    assert_eq!(stdout(&o), stdout(&from_csv));
    let wrong = bmg(&["build", "fricke", "--N", "2", "--table", json.to_str().unwrap()]);
    assert_eq!(wrong.status.code(), Some(1));
}

#[test]
fn mul_and_inv_agree_with_the_library() {
    let m = build_monster(Caps { max_block: Some(2), ..Caps::monster() }).unwrap();
    let spec = scratch("m2.json", &m.to_json_string());
    let g = m.group().unwrap();
    let mut s = Sampler::new(11);
    let a = s.retry(|s| s.element(&g)).unwrap();
    let b = s.retry(|s| s.element(&g)).unwrap();
    let (ja, jb) = (serde_json::to_string(&g.to_json(&a)).unwrap(), serde_json::to_string(&g.to_json(&b)).unwrap());
    let spec = spec.to_str().unwrap();

    let o = bmg(&["mul", spec, &ja, &jb, "--format", "json"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let got: GroupElementJson = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(got, g.to_json(&g.mul(&a, &b).unwrap()));

    let o = bmg(&["inv", spec, &ja, "--format", "json"]);
    let got: GroupElementJson = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(got, g.to_json(&g.inv(&a).unwrap()));

    let lie = serde_json::to_string(&b.n.log().to_json()).unwrap();
    let word = serde_json::to_string(&a.g).unwrap();
    let o = bmg(&["act", spec, &word, &lie, "--format", "json"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let got: LieJson = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(got, g.ad(&a.g, b.n.log()).unwrap().to_json());

    let bad = bmg(&["inv", spec, "{\"schema_version\": 1}"]);
    assert_eq!(bad.status.code(), Some(1));
}
