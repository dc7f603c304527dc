use assert_cmd::Command;
use serde_json::Value;

fn deltacat() -> Command {
    Command::cargo_bin("deltacat").unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = deltacat().args(args).assert().success().get_output().stdout.clone();
    String::from_utf8(out).unwrap()
}

#[test]
fn small_values() {
    assert_eq!(stdout(&["catrise", "--alpha", "1,1", "--k", "0", "--ell", "0"]), "q\n");
    assert_eq!(stdout(&["coeff", "--alpha", "2", "--k", "0", "--ell", "0"]), "t\n");
    assert_eq!(stdout(&["cat", "--n", "2", "--eval", "q=1,t=1,z=1,w=1"]), "4\n");
    assert_eq!(stdout(&["cat", "--n", "2", "--method", "product"]), "q + t + z + w\n");
    assert_eq!(stdout(&["htilde", "--mu", "2"]), "s[2] + q*s[1,1]\n");
}

#[test]
fn structured_outputs() {
    let v: Value = serde_json::from_str(&stdout(&["--format", "json", "cat", "--n", "2"])).unwrap();
    assert_eq!(v["vars"], serde_json::json!(["q", "t", "z", "w"]));
    assert_eq!(v["terms"].as_array().unwrap().len(), 4);
    let v: Value = serde_json::from_str(&stdout(&["paths", "--n", "3", "--format", "json"])).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 5);
    let v: Value = serde_json::from_str(&stdout(&["paths", "--n", "3", "--decorated", "--format", "json"])).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 20);
    let csv = stdout(&["htilde", "--mu", "1,1", "--format", "csv"]);
    assert_eq!(csv, "lambda,coeff\n(2),1\n\"(1,1)\",t\n");
}

#[test]
fn verify_report_schema_and_exit_code() {
    let text = stdout(&["verify", "main", "--max-n", "3", "--format", "json"]);
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["suite"], "main");
    assert_eq!(v["params"]["maxN"], 3);
    assert!(v["toolVersion"].is_string());
    let cases = v["cases"].as_array().unwrap();
    assert_eq!(v["summary"]["total"].as_u64().unwrap() as usize, cases.len());
    assert_eq!(v["summary"]["failed"], 0);
    for c in cases {
        for key in ["caseId", "lhs", "rhs", "pass", "ms"] {
            assert!(c.get(key).is_some(), "missing {key}");
        }
    }
    assert_eq!(cases[0]["caseId"], "catrise alpha=(1) k=0 ell=0");
}

#[test]
fn reports_are_reproducible() {
    let args = ["--jobs", "1", "verify", "comb", "--max-n", "4", "--no-timings", "--format", "json"];
    assert_eq!(stdout(&args), stdout(&args));
    let parallel = ["--jobs", "4", "verify", "comb", "--max-n", "4", "--no-timings", "--format", "json"];
    assert_eq!(stdout(&args), stdout(&parallel));
}

#[test]
fn cache_directory_is_populated() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().to_str().unwrap();
    stdout(&["--cache-dir", path, "verify", "sf", "--max-n", "3", "--format", "csv"]);
    assert!(dir.path().join("manifest.json").exists());
    assert!(dir.path().join("htilde_3.json").exists());
    stdout(&["--cache-dir", path, "htilde", "--mu", "2,1"]);
}

#[test]
fn usage_errors_exit_with_two() {
    deltacat().assert().code(2);
    deltacat().args(["bogus"]).assert().code(2);
    deltacat().args(["catrise", "--alpha", "1,0", "--k", "0", "--ell", "0"]).assert().code(2);
    deltacat().args(["htilde", "--mu", "1,2"]).assert().code(2);
    deltacat().args(["cat", "--n", "2", "--eval", "q=1"]).assert().code(2);
    deltacat().args(["verify", "main", "--max-n", "0"]).assert().code(2);
    deltacat().args(["--format", "xml", "cat", "--n", "1"]).assert().code(2);
}
