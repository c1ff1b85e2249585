//! End-to-end checks of the command-line interface: exit codes, schema
//! handling, and report envelopes.

use std::fs;
use std::path::PathBuf;
use std::process::Command;

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_supercoh")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("supercoh-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn validate_preset_succeeds() {
    let out = Command::new(bin())
        .args(["validate", "--algebra", "sl2", "--subalgebra", "cartan"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["command"], "validate");
    assert!(v["input_sha256"].as_str().unwrap().len() == 64);
}

#[test]
fn broken_bracket_exits_one() {
    // e11 paired with itself to a nonzero even bracket violates antisymmetry
    let path = scratch("broken.json");
    fs::write(
        &path,
        r#"{
            "basis": [{"name": "x", "parity": 0}, {"name": "y", "parity": 0}],
            "brackets": [{"i": 0, "j": 0, "coeffs": {"1": "1"}}]
        }"#,
    )
    .unwrap();
    let out = Command::new(bin())
        .args(["validate", "--algebra", path.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1), "{out:?}");
    assert!(!out.stderr.is_empty());
}

#[test]
fn malformed_json_exits_two() {
    let path = scratch("garbage.json");
    fs::write(&path, "{ not json").unwrap();
    let out = Command::new(bin())
        .args(["cohomology", "--algebra", path.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2), "{out:?}");
}

#[test]
fn degree_cap_exits_two() {
    let out = Command::new(bin())
        .args(["cohomology", "--algebra", "gl11", "--max-degree", "40"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2), "{out:?}");
}

#[test]
fn unknown_preset_exits_two() {
    let out = Command::new(bin())
        .args(["cohomology", "--algebra", "so5"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2), "{out:?}");
}

#[test]
fn cohomology_report_shape() {
    let out = Command::new(bin())
        .args(["cohomology", "--algebra", "gl11", "--subalgebra", "g0", "--max-degree", "4"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let dims: Vec<u64> = v["report"]["degrees"]
        .as_array()
        .unwrap()
        .iter()
        .map(|d| d["dim"].as_u64().unwrap())
        .collect();
    assert_eq!(dims, vec![1, 0, 1, 0, 1]);
}

#[test]
fn text_format_is_available() {
    let out = Command::new(bin())
        .args(["cohomology", "--algebra", "gl11", "--format", "text"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let s = String::from_utf8(out.stdout).unwrap();
    assert!(s.contains("command"));
    assert!(serde_json::from_str::<serde_json::Value>(&s).is_err());
}

#[test]
fn even_hom_only_restricts_dimensions() {
    let full = Command::new(bin())
        .args(["cohomology", "--algebra", "gl11", "--subalgebra", "center", "--max-degree", "2"])
        .output()
        .unwrap();
    let even = Command::new(bin())
        .args([
            "cohomology", "--algebra", "gl11", "--subalgebra", "center", "--max-degree", "2",
            "--even-hom-only",
        ])
        .output()
        .unwrap();
    assert_eq!(full.status.code(), Some(0));
    assert_eq!(even.status.code(), Some(0));
    let f: serde_json::Value = serde_json::from_slice(&full.stdout).unwrap();
    let e: serde_json::Value = serde_json::from_slice(&even.stdout).unwrap();
    for (df, de) in f["report"]["degrees"]
        .as_array()
        .unwrap()
        .iter()
        .zip(e["report"]["degrees"].as_array().unwrap())
    {
        assert!(de["dim"].as_u64().unwrap() <= df["dim"].as_u64().unwrap());
        assert_eq!(de["dim"].as_u64().unwrap(), df["dim_even"].as_u64().unwrap());
    }
}
