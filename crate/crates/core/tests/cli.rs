use std::path::Path;
use std::process::{Command, Output};

fn g2(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_g2"))
        .args(args)
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .output()
        .expect("g2 runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

#[test]
fn roots() {
    let o = g2(&["roots", "G2"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["roots"].as_array().unwrap().len(), 12);
    assert_eq!(v["weyl_order"], "12");
    assert_eq!(code(&g2(&["roots", "Z9"])), 2);
}

#[test]
fn classify() {
    let o = g2(&["classify", "tests/data/omega0.json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!((v["orbit"].as_str(), v["signature"].clone()), (Some("split"), serde_json::json!([4, 3])));
    let o = g2(&["classify", "--witness", "tests/data/omega1.json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["orbit"], "compact");
    assert_eq!(v["residual"], "0");
    let o = g2(&["classify", "tests/data/e123.json"]);
    assert!(String::from_utf8_lossy(&o.stdout).contains("not-generic"));
    assert_eq!(code(&g2(&["classify", "tests/data/missing.json"])), 2);
    assert_eq!(code(&g2(&["classify", "Cargo.toml"])), 2);
}

#[test]
fn precision_exhaustion_exits_3() {
    let o = g2(&["classify", "--witness", "--precision", "4", "tests/data/pulled_omega0.json"]);
    assert_eq!(code(&o), 3, "{}", String::from_utf8_lossy(&o.stderr));
    let o = g2(&["classify", "--witness", "tests/data/pulled_omega0.json"]);
    assert_eq!(code(&o), 0);
}

#[test]
fn tables() {
    let o = g2(&["table", "fano"]);
    assert!(String::from_utf8_lossy(&o.stdout).contains("\"lhs\": \"e1*e4\",\n      \"rhs\": \"e7\""));
    assert_eq!(code(&g2(&["table", "g2-structure-constants"])), 0);
    assert_eq!(code(&g2(&["table", "cube"])), 2);
    assert_eq!(code(&g2(&["nope"])), 2);
}

#[test]
fn check_is_reproducible() {
    let a = g2(&["check", "--seed", "7", "--filter", "octonion.moufang"]);
    let b = g2(&["check", "--seed", "7", "--filter", "octonion.moufang"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(code(&g2(&["check", "--filter", "no.such.check"])), 2);
}

#[test]
fn check_report_file() {
    let out = Path::new(env!("CARGO_TARGET_TMPDIR")).join("report.json");
    let o = g2(&["check", "--filter", "threeform.*", "--out", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stdout));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(out).unwrap()).unwrap();
    assert_eq!(v["pass"], true);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["id"].as_str().unwrap().starts_with("threeform.")));
}
