use serde_json::Value;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_isojac"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("json output")
}

fn text(args: &[&str]) -> String {
    let mut all = vec!["--output", "text"];
    all.extend_from_slice(args);
    let out = run(&all);
    String::from_utf8(out.stdout).unwrap()
}

fn strings(v: &Value) -> Vec<String> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_str().unwrap().to_string())
        .collect()
}

#[test]
fn family_gen_deg3_at_one() {
    let v = json(&["family", "gen", "--family", "deg3", "--t", "1"]);
    assert_eq!(v["family"], "deg3");
    assert_eq!(v["twist"], "560");
    assert_eq!(
        strings(&v["sextic"]),
        ["-16", "0", "-352", "0", "-1648", "0", "16"]
    );
    assert_eq!(v["field"]["p"], "0");
    assert_eq!(
        text(&["family", "gen", "--family", "deg3", "--t", "1"]).trim(),
        "560*y^2 = 16*x^6 - 1648*x^4 - 352*x^2 - 16"
    );
}

#[test]
fn family_gen_reduces_mod_p() {
    let v = json(&[
        "family", "gen", "--family", "deg3", "--t", "1", "--p", "101",
    ]);
    let want: Vec<String> = [-16i64, 0, -352, 0, -1648, 0, 16]
        .iter()
        .map(|c| c.rem_euclid(101).to_string())
        .collect();
    assert_eq!(strings(&v["sextic"]), want);
    assert_eq!(v["twist"], (560 % 101).to_string());
    // rational parameters are reduced as fractions
    let a = json(&[
        "family", "gen", "--family", "deg7", "--t", "3/2", "--p", "101",
    ]);
    let b = json(&[
        "family", "gen", "--family", "deg7", "--t", "52", "--p", "101",
    ]);
    assert_eq!(a, b);
}

#[test]
fn prime_support_deg7() {
    let v = json(&["distinct", "prime-support", "--family", "deg7"]);
    let ps: Vec<u64> = v["primeSupport"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_u64().unwrap())
        .filter(|&p| p > 5)
        .collect();
    assert_eq!(ps, [7, 13, 17, 19, 41, 167, 571603]);
}

#[test]
fn charp_and_scan() {
    let v = json(&["distinct", "charp", "--family", "deg4", "--p", "23"]);
    assert_eq!(v["status"], "exceptional");
    let v = json(&[
        "distinct", "scan", "--family", "howe2", "--p", "11", "--ext", "2",
    ]);
    assert_eq!(v["positives"].as_array().unwrap().len(), 4);
    assert_eq!(v["matchesLocus"], true);
}

#[test]
fn obstruction_degree_16() {
    let v = json(&["obstruction", "verify", "--degree", "16"]);
    let found: Vec<(String, String)> = v["points"]["found"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| {
            (
                p[0].as_str().unwrap().to_string(),
                p[1].as_str().unwrap().to_string(),
            )
        })
        .collect();
    let want = [("-4", "0"), ("-2", "0"), ("0", "0")].map(|(x, y)| (x.to_string(), y.to_string()));
    assert_eq!(found, want);
    assert_eq!(v["points"]["claimVerified"], false);
}

#[test]
fn obstruction_degree_5_reports_printed_class() {
    let v = json(&["obstruction", "verify", "--degree", "5"]);
    assert_eq!(v["squareCondition"]["printedRelation"], "missingS");
    assert_eq!(v["squareCondition"]["jRelation"], "equal");
}

#[test]
fn glue_and_igusa() {
    let v = json(&["glue", "--family", "deg3", "--p", "101", "--t", "3"]);
    assert_eq!(v["match"], true);
    assert_eq!(v["family"], "deg3");
    let q = json(&["igusa", "--sextic", "x^6-1"]);
    let p = json(&["igusa", "--sextic", "x^6-1", "--p", "101"]);
    for k in ["J2", "J4", "J6", "J8", "J10"] {
        let a: i64 = q[k].as_str().unwrap().parse().unwrap();
        assert_eq!(p[k].as_str().unwrap(), a.rem_euclid(101).to_string(), "{k}");
    }
    assert_eq!(p["field"]["p"], "101");
}

#[test]
fn text_mode_repeats_json_values() {
    let v = json(&["distinct", "charp", "--family", "deg7", "--p", "13"]);
    let t = text(&["distinct", "charp", "--family", "deg7", "--p", "13"]);
    assert!(t.contains(&format!("locus: {}", v["locus"].as_str().unwrap())));
    assert!(t.contains(&format!("status: {}", v["status"].as_str().unwrap())));
    let v = json(&["igusa", "--sextic", "x^5-x"]);
    let t = text(&["igusa", "--sextic", "x^5-x"]);
    assert!(t.contains(&format!("J10 = {}", v["J10"].as_str().unwrap())));
}

#[test]
fn reproduce_single_criterion() {
    let v = json(&["--threads", "1", "reproduce", "--criterion", "9"]);
    assert_eq!(v["passed"], 1);
    assert_eq!(v["criteria"][0]["id"], 9);
    let t = text(&["reproduce", "--criterion", "2"]);
    assert!(t.starts_with("criterion 2 [PASS]"), "{t}");
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| run(args).status.code();
    assert_eq!(
        code(&["family", "gen", "--family", "deg3", "--t", "1", "--bogus"]),
        Some(2)
    );
    assert_eq!(
        code(&["family", "gen", "--family", "deg9", "--t", "1"]),
        Some(2)
    );
    assert_eq!(
        code(&["family", "gen", "--family", "deg3", "--t", "x"]),
        Some(2)
    );
    assert_eq!(
        code(&["distinct", "charp", "--family", "deg3", "--p", "9"]),
        Some(2)
    );
    assert_eq!(
        code(&["distinct", "scan", "--family", "deg3", "--p", "101", "--ext", "2"]),
        Some(2)
    );
    assert_eq!(code(&["obstruction", "verify", "--degree", "7"]), Some(2));
    assert_eq!(code(&["reproduce"]), Some(2));
    assert_eq!(code(&["reproduce", "--criterion", "10"]), Some(2));
    // outside the validity locus: 560 = 0 mod 7
    assert_eq!(
        code(&["family", "gen", "--family", "deg3", "--t", "1", "--p", "7"]),
        Some(2)
    );
    // a bound too small for the listed points -8, -9 on O_6 is an expectation mismatch
    let out = run(&["obstruction", "verify", "--degree", "6", "--bound", "5"]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["points"]["superset"], false);
}
