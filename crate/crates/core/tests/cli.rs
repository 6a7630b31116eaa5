use contact_duality::cli::run_with;
use serde_json::{json, Value};

fn run(args: &[&str]) -> (i32, Value, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("contact-duality").chain(args.iter().copied());
    let code = run_with(argv, &mut out, &mut err);
    let text = String::from_utf8(out).unwrap();
    let value = serde_json::from_str(&text).unwrap_or(Value::Null);
    (code, value, String::from_utf8(err).unwrap())
}

const PATH3: &str = r#"{"atoms":3,"contact_pairs":[[0,1],[1,2]]}"#;
const OVERLAP2: &str = r#"{"atoms":2}"#;
const OVERLAP3: &str = r#"{"atoms":3}"#;

#[test]
fn clusters_of_path() {
    let (code, v, _) = run(&["clusters", "--contact", PATH3]);
    assert_eq!(code, 0);
    let mut clans: Vec<Value> = v["clans"].as_array().unwrap().clone();
    let mut expected = vec![json!([0]), json!([1]), json!([2]), json!([0, 1]), json!([1, 2])];
    clans.sort_by_key(|c| c.to_string());
    expected.sort_by_key(|c| c.to_string());
    assert_eq!(clans, expected);
    assert_eq!(v["clusters"], json!([[0, 1], [1, 2]]));
}

#[test]
fn dual_of_one_point_space() {
    let (code, v, _) = run(&["dual", "--space", r#"{"points":["x"],"opens":[[],["x"]]}"#]);
    assert_eq!(code, 0);
    assert_eq!(v["regular_closed"], json!([[], ["x"]]));
    assert_eq!(v["standard_lca"]["atoms"], json!(1));
}

#[test]
fn dual_of_finite_lca_and_interval() {
    let (code, v, _) = run(&["dual", "--contact", OVERLAP3]);
    assert_eq!(code, 0);
    assert_eq!(v["gamma"].as_array().unwrap().len(), 3);
    assert_eq!(v["W"]["Z"], json!("all"));
    let (code, v, _) = run(&["dual", "--contact", "interval", "--samples", "100"]);
    assert_eq!(code, 0);
    assert_eq!(v["two_point_fibers"], json!(true));
    // A contact relation that is not an LCA has no dual.
    assert_eq!(run(&["dual", "--contact", PATH3]).0, 2);
}

#[test]
fn verify_single_suite() {
    let (code, v, err) = run(&["verify", "--suite", "prop-4.1", "--max-size", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["pass"], json!(true));
    assert_eq!(v["seed"], json!(0xD0B0));
    assert!(err.contains("prop-4.1"));
    let (code, v, _) = run(&["verify", "--suite", "lemma-2.14a", "--seed", "0x1", "--max-size", "200"]);
    assert_eq!(code, 1);
    assert_eq!(v["seed"], json!(1));
    assert_eq!(run(&["verify", "--suite", "no-such-suite"]).0, 2);
    assert_eq!(run(&["verify", "--suite", "prop-4.1", "--max-size", "99"]).0, 2);
}

#[test]
fn verify_criterion() {
    let (code, v, _) = run(&["verify", "--criterion", "roeper-roundtrip"]);
    assert_eq!(code, 0);
    assert_eq!(v["criterion"], json!("roeper-roundtrip"));
}

#[test]
fn check_contact_reports() {
    let (code, v, _) = run(&["check", "--contact", OVERLAP3]);
    assert_eq!(code, 0);
    assert_eq!(v["local_contact_algebra"], json!(true));
    let (code, v, _) = run(&["check", "--contact", PATH3]);
    assert_eq!(code, 1);
    assert_eq!(v["contact_algebra"], json!(true));
    assert_eq!(v["local_contact_algebra"], json!(false));
    let (code, _, _) = run(&["check", "--contact", "interval", "--samples", "100"]);
    assert_eq!(code, 0);
}

#[test]
fn check_space_and_map() {
    let s = r#"{"points":["a","b"],"opens":[[],["a"],["a","b"]]}"#;
    let (code, v, _) = run(&["check", "--space", s]);
    assert_eq!(code, 0);
    assert_eq!(v["regular_closed"], json!([[], ["a", "b"]]));
    let one = r#"{"points":["y"],"opens":[[],["y"]]}"#;
    let (code, v, _) = run(&["check", "--map", r#"{"map":{"a":"y","b":"y"}}"#, "--dom", s, "--cod", one]);
    assert_eq!(code, 0);
    assert_eq!(v["predicates"]["continuous"], json!(true));
    assert_eq!(run(&["check", "--map", r#"{"map":{"a":"y"}}"#, "--dom", s, "--cod", one]).0, 2);
    assert_eq!(run(&["check", "--map", r#"{"map":{"a":"y","b":"y"}}"#]).0, 2);
}

#[test]
fn check_morphisms() {
    let (code, _, _) = run(&["check", "--hom", r#"{"dual_map":[0,1,1]}"#, "--source", OVERLAP2, "--target", OVERLAP3]);
    assert_eq!(code, 0);
    let id = r#"{"table":{"[]":"[]","[0]":"[0]","[1]":"[1]","[0,1]":"[0,1]"}}"#;
    assert_eq!(run(&["check", "--clca", id, "--source", OVERLAP2, "--target", OVERLAP2]).0, 0);
    let bad = r#"{"table":{"[]":"[0]","[0]":"[0]","[1]":"[1]","[0,1]":"[0,1]"}}"#;
    let (code, v, _) = run(&["check", "--clca", bad, "--source", OVERLAP2, "--target", OVERLAP2]);
    assert_eq!(code, 1);
    assert!(v["report"]["entries"].as_array().unwrap().iter().any(|e| e["axiom"] == "CLC1" && e["status"] == "fail"));
    let shift = r#"{"breakpoints":[],"slopes":["1/1"],"offsets":["1/1"]}"#;
    let (code, _, _) =
        run(&["check", "--hom", shift, "--source", "interval", "--target", "interval", "--samples", "100"]);
    assert_eq!(code, 0);
}

#[test]
fn check_comma_objects() {
    let good = r#"{"algebra":{"atoms":2},"Z":"all","p":{"classes":[["u0"],["u1"]]}}"#;
    assert_eq!(run(&["check", "--comma", good]).0, 0);
    let glued = r#"{"algebra":{"atoms":2},"Z":"all","p":{"classes":[["u0","u1"]]}}"#;
    let (code, v, _) = run(&["check", "--comma", glued]);
    assert_eq!(code, 1);
    assert_eq!(v["first_failure"], json!("irreducible"));
}

#[test]
fn compose_ops() {
    // Over overlap contact b ≪ a iff b ≤ a, so rounding takes joins over
    // lower sets.
    let f = r#"{"table":{"[]":"[]","[0]":"[1]","[1]":"[0]","[0,1]":"[]"}}"#;
    let (code, v, _) = run(&["compose", "--op", "round", "--source", OVERLAP2, "--table", f]);
    assert_eq!(code, 0);
    assert_eq!(v["table"], json!({"[]": "[]", "[0]": "[1]", "[1]": "[0]", "[0,1]": "[0,1]"}));
    let (code, v, _) =
        run(&["compose", "--op", "v", "--source", OVERLAP2, "--target", OVERLAP3, "--hom", r#"{"dual_map":[0,1,1]}"#]);
    assert_eq!(code, 0);
    assert_eq!(v["table"]["[1]"], json!("[1,2]"));
    let id2 = r#"{"table":{"[]":"[]","[0]":"[0]","[1]":"[1]","[0,1]":"[0,1]"}}"#;
    let (code, v, _) = run(&[
        "compose", "--op", "diamond", "--source", OVERLAP2, "--middle", OVERLAP2, "--target", OVERLAP2, "--phi", id2,
        "--psi", id2,
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["table"], serde_json::from_str::<Value>(id2).unwrap()["table"]);
    let g = r#"{"breakpoints":[],"slopes":["2/1"],"offsets":["0/1"]}"#;
    let (code, v, _) = run(&["compose", "--op", "round", "--source", "interval", "--hom", g, "--samples", "100"]);
    assert_eq!(code, 0);
    assert_eq!(v, serde_json::from_str::<Value>(g).unwrap());
}

#[test]
fn absolute_of_discrete_space() {
    let (code, v, _) = run(&["absolute", "--space", r#"{"points":["a","b"],"opens":[[],["a"],["b"],["a","b"]]}"#]);
    assert_eq!(code, 0);
    assert_eq!(v["EX"]["points"].as_array().unwrap().len(), 2);
    assert_eq!(v["predicates"]["irreducible"], json!(true));
    assert_eq!(run(&["absolute", "--space", r#"{"points":["a","b"],"opens":[[],["a","b"]]}"#]).0, 2);
}

#[test]
fn malformed_input_reports_position() {
    let (code, v, err) = run(&["clusters", "--contact", "{\"atoms\":\n 3,, }"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"], json!("input"));
    assert!(err.contains("line 2, column"), "{err}");
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&["check"]).0, 2);
    assert_eq!(run(&["verify", "--all", "--seed", "0xnope"]).0, 2);
}

#[test]
fn file_inputs() {
    let path = std::env::temp_dir().join(format!("cd-cli-{}.json", std::process::id()));
    std::fs::write(&path, PATH3).unwrap();
    let (code, v, _) = run(&["clusters", "--contact", &format!("@{}", path.display())]);
    std::fs::remove_file(&path).unwrap();
    assert_eq!(code, 0);
    assert_eq!(v["clusters"], json!([[0, 1], [1, 2]]));
}

/// Emitted JSON re-parses to an equal value and, where it describes an
/// input object, feeds back into the verbs unchanged.
#[test]
fn emitted_json_round_trips() {
    let (_, dual, _) = run(&["dual", "--space", r#"{"points":["p","q"],"opens":[[],["p"],["q"],["p","q"]]}"#]);
    let std_lca = dual["standard_lca"].to_string();
    assert_eq!(serde_json::from_str::<Value>(&std_lca).unwrap(), dual["standard_lca"]);
    let (code, again, _) = run(&["check", "--contact", &std_lca]);
    assert_eq!(code, 0);
    assert_eq!(again["local_contact_algebra"], json!(true));

    let (_, abs, _) = run(&["absolute", "--space", r#"{"points":["a","b"],"opens":[[],["a"],["b"],["a","b"]]}"#]);
    let (code, sp, _) = run(&["check", "--space", &abs["EX"].to_string()]);
    assert_eq!(code, 0);
    assert_eq!(sp["predicates"]["discrete"], json!(true));

    let (_, w, _) = run(&["dual", "--contact", OVERLAP2]);
    assert_eq!(run(&["check", "--comma", &w["W"].to_string()]).0, 0);

    let (_, v, _) = run(&["compose", "--op", "v", "--source", OVERLAP2, "--target", OVERLAP3, "--hom", r#"{"dual_map":[0,1,1]}"#]);
    let table = json!({"table": v["table"]}).to_string();
    assert_eq!(run(&["check", "--clca", &table, "--source", OVERLAP2, "--target", OVERLAP3]).0, 0);
}

#[test]
fn verify_all_reflects_the_refuted_suite() {
    let (code, v, err) = run(&["verify", "--all"]);
    assert_eq!(code, 1);
    assert_eq!(v["pass"], json!(false));
    let red: Vec<&str> = v["criteria"]
        .as_array()
        .unwrap()
        .iter()
        .flat_map(|c| c["suites"].as_array().unwrap())
        .filter(|s| s["pass"] == json!(false))
        .map(|s| s["suite"].as_str().unwrap())
        .collect();
    assert_eq!(red, vec!["lemma-2.14a"]);
    assert_eq!(err.lines().count(), 25);
}

#[test]
fn standard_lca_of_a_non_hausdorff_space_is_not_local() {
    let x3 = r#"{"points":["p","q","r"],"opens":[[],["p"],["r"],["p","r"],["p","q","r"]]}"#;
    let (_, dual, _) = run(&["dual", "--space", x3]);
    assert_eq!(dual["standard_lca"]["contact_pairs"], json!([[0, 1]]));
    let (code, v, _) = run(&["check", "--contact", &dual["standard_lca"].to_string()]);
    assert_eq!(code, 1);
    assert_eq!(v["contact_algebra"], json!(true));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_contact-duality");
    let status = |args: &[&str]| std::process::Command::new(bin).args(args).output().unwrap();
    let ok = status(&["clusters", "--contact", PATH3]);
    assert_eq!(ok.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&ok.stdout).unwrap();
    assert_eq!(v["clusters"], json!([[0, 1], [1, 2]]));
    assert_eq!(status(&["check", "--contact", PATH3]).status.code(), Some(1));
    assert_eq!(status(&["clusters", "--contact", "{"]).status.code(), Some(2));
}
