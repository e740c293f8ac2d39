use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

use admissible::cli;
use admissible::Error;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
        .display()
        .to_string()
}

fn run(args: &[&str]) -> (i32, String, String) {
    let mut argv = vec!["admissible".to_string()];
    argv.extend(args.iter().map(|s| s.to_string()));
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = cli::main_with(&argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let (code, out, err) = run(&full);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn ia_table_lists_every_round() {
    let (code, out, _) = run(&["ia", &fixture("example1.json")]);
    assert_eq!(code, 0);
    for line in [
        "S^1    {u,m}×{l,r}",
        "S^2    {u,m}×{l}",
        "S^3    {m}×{l}",
        "S^∞    {m}×{l}",
    ] {
        assert!(out.contains(line), "{out}");
    }
}

#[test]
fn output_is_byte_stable() {
    for args in [
        vec!["ia", "boss.json"],
        vec!["sas", "enumerate", "example1.json"],
        vec!["stahl", "boss.json"],
        vec!["epistemic", "iterate", "exampleD1.json"],
    ] {
        let mut args: Vec<String> = args.iter().map(|s| s.to_string()).collect();
        let last = args.pop().unwrap();
        args.push(fixture(&last));
        let refs: Vec<&str> = args.iter().map(String::as_str).collect();
        for format in ["json", "table", "latex"] {
            let mut full = vec!["--format", format];
            full.extend_from_slice(&refs);
            assert_eq!(run(&full), run(&full));
        }
    }
}

#[test]
fn parallel_enumeration_matches_sequential() {
    let g = fixture("boss.json");
    assert_eq!(
        run(&["sas", "enumerate", &g]),
        run(&["--parallel", "sas", "enumerate", &g])
    );
}

#[test]
fn sas_check_reports_failed_condition() {
    let g = fixture("example1.json");
    let v = json(&["sas", "check", &g, "--set", "a=u;b=l,r"]);
    assert_eq!(v["holds"], true);
    let v = json(&["sas", "check", &g, "--set", "a=d;b=r"]);
    assert_eq!(v["holds"], false);
    assert!(!v["failures"].as_array().unwrap().is_empty());
}

#[test]
fn latex_emits_payoff_and_result_tables() {
    let (code, out, _) = run(&["--format", "latex", "ia", &fixture("example1.json")]);
    assert_eq!(code, 0);
    assert_eq!(out.matches("\\begin{tabular}").count(), 2);
    assert!(out.contains("$3,1$"));
}

#[test]
fn rhat_iteration_on_the_three_type_example() {
    let v = json(&["epistemic", "iterate", &fixture("exampleD1.json"), "--mode", "rhat"]);
    assert_eq!(v["projection"], "{u}×{r}");
}

#[test]
fn built_structures_round_trip_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let lemma = dir.path().join("lemma.json");
    let sas = dir.path().join("sas.json");
    let phi = dir.path().join("phi.json");
    let g = fixture("example1.json");
    let (code, _, err) = run(&["struct", "build-lemma1", &g, "-o", lemma.to_str().unwrap()]);
    assert_eq!(code, 0, "{err}");
    let (code, _, err) = run(&[
        "struct",
        "build-sas",
        &g,
        "--sas",
        "a=u;b=l,r",
        "-o",
        sas.to_str().unwrap(),
    ]);
    assert_eq!(code, 0, "{err}");

    let v = json(&["epistemic", "iterate", lemma.to_str().unwrap()]);
    assert_eq!(v["projection"], "{m}×{l}");
    let v = json(&["epistemic", "iterate", sas.to_str().unwrap(), "--mode", "rhat"]);
    assert_eq!(v["projection"], "{u}×{l,r}");

    // identity morphism on the witness structure
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&lemma).unwrap()).unwrap();
    let mut maps = serde_json::Map::new();
    for (p, names) in doc["types"].as_object().unwrap() {
        let m: serde_json::Map<String, Value> = names
            .as_array()
            .unwrap()
            .iter()
            .map(|t| (t.as_str().unwrap().to_string(), t.clone()))
            .collect();
        maps.insert(p.clone(), Value::Object(m));
    }
    std::fs::write(&phi, Value::Object(maps).to_string()).unwrap();
    let l = lemma.to_str().unwrap();
    let v = json(&["morphism", "verify", l, l, phi.to_str().unwrap()]);
    assert_eq!(v["passed"], true);
}

#[test]
fn lps_check_notions() {
    let f = fixture("example2_lps.json");
    let v = json(&["lps-check", &f, "--event", "s1", "--notion", "cautious"]);
    assert_eq!(v["result"], 1);
    let v = json(&["lps-check", &f, "--event", "s1;s2|t", "--notion", "cautious"]);
    assert_eq!(v["result"], Value::Null);
    let v = json(&["lps-check", &f, "--event", "s1;s2", "--notion", "weak"]);
    assert_eq!(v["result"], true);
    let v = json(&["lps-check", &f, "--event", "s1;s2;s3", "--notion", "certain"]);
    assert_eq!(v["result"], true);
}

#[test]
fn validation_errors_exit_one() {
    let (code, _, err) = run(&["ia", "/nonexistent/game.json"]);
    assert_eq!(code, 1);
    assert!(err.starts_with("error:"));
    let (code, _, _) = run(&[
        "lps-check",
        &fixture("example2_lps.json"),
        "--event",
        "zz",
        "--notion",
        "weak",
    ]);
    assert_eq!(code, 1);
    let (code, _, _) = run(&["sas", "check", &fixture("example1.json"), "--set", "a=q"]);
    assert_eq!(code, 1);
    let (code, _, _) = run(&["no-such-command"]);
    assert_eq!(code, 1);
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("verify-paper"));
}

#[test]
fn size_guard_needs_force() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("big.json");
    let rows: Vec<String> = (0..9).map(|k| format!("r{k}")).collect();
    let cols: Vec<String> = (0..8).map(|k| format!("c{k}")).collect();
    let mut payoffs = serde_json::Map::new();
    for (a, r) in rows.iter().enumerate() {
        for (b, c) in cols.iter().enumerate() {
            payoffs.insert(format!("{r},{c}"), serde_json::json!([(a * b) % 5, (a + b) % 3]));
        }
    }
    let doc = serde_json::json!({"players": ["a", "b"], "strategies": {"a": rows, "b": cols}, "payoffs": payoffs});
    std::fs::write(&path, doc.to_string()).unwrap();
    let p = path.to_str().unwrap();
    let (code, _, err) = run(&["sas", "enumerate", p]);
    assert_eq!(code, 1);
    assert!(err.contains("--force"), "{err}");
}

#[test]
fn internal_errors_exit_two() {
    assert_eq!(Error::internal("broken invariant").exit_code(), 2);
    assert_eq!(Error::invalid("bad input").exit_code(), 1);
}

#[test]
fn verify_paper_exit_reflects_items() {
    let v = json_any(&["--format", "json", "verify-paper"]);
    let items = v.1["items"].as_array().unwrap();
    let any_fail = items.iter().any(|it| it["status"] == "FAIL");
    assert_eq!(v.0, if any_fail { 1 } else { 0 });
    let names: Vec<&str> = items.iter().map(|it| it["name"].as_str().unwrap()).collect();
    assert!(names.contains(&"Theorem 5"));
    assert!(names.contains(&"Supplementary Theorems D.2–D.3"));
}

fn json_any(args: &[&str]) -> (i32, Value) {
    let (code, out, _) = run(args);
    (code, serde_json::from_str(&out).unwrap())
}

#[test]
fn binary_reports_status_codes() {
    let bin = env!("CARGO_BIN_EXE_admissible");
    let ok = Command::new(bin).args(["ia", &fixture("boss.json")]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("{u,m,d}×{c,r}"));
    let bad = Command::new(bin).args(["ia", "missing.json"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(1));
}
