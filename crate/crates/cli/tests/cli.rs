use std::path::PathBuf;
use std::process::{Command, Output};

fn torgen(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_torgen"))
        .args(args)
        .output()
        .expect("torgen runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn write_temp(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("torgen-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn todd_genus_of_cp3() {
    let out = torgen(&["genus", "--input", "builtin:cp3:eps=---", "--genus", "todd"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "genus_value: -z^3");
}

#[test]
fn flag_manifold_passes_conner_floyd() {
    let out = torgen(&[
        "check-cf", "--input", "builtin:flag3", "--genus", "hurewicz", "--order", "4",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("pass: true"));
}

#[test]
fn s6_is_krichever_rigid() {
    let out = torgen(&[
        "check-rigidity", "--input", "builtin:s6", "--genus", "krichever", "--order", "4",
    ]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn json_report_shape() {
    let out = torgen(&[
        "check-cf", "--input", "builtin:cp2:eps=--", "--genus", "todd", "--order", "3",
        "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["pass"], true);
    assert!(v["first_violation"].is_null());
    assert_eq!(v["genus_value"], "z^2");
    let cf = v["cf"].as_array().unwrap();
    assert_eq!(cf.len(), 6);
    assert_eq!(cf[0]["l"], 0);
}

#[test]
fn flipped_sign_is_a_violation() {
    let data = r#"{"type":"fixed_points","n":3,"k":2,"points":[
        {"sign":1,"weights":[[1,0],[0,1],[-1,-1]]},
        {"sign":-1,"weights":[[-1,0],[0,-1],[1,1]]}]}"#;
    let path = write_temp("s6-flipped.json", data);
    let out = torgen(&[
        "check-cf", "--input", path.to_str().unwrap(), "--genus", "hurewicz", "--order", "2",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).contains("pass: false"));
}

#[test]
fn invalid_pair_reports_violation() {
    let data = r#"{"type":"quasitoric","polytope":{"n":2,"m":3,
        "vertices":[[1,2],[2,3],[1,3]]},
        "lambda":[[1,0,2],[0,1,1]]}"#;
    let path = write_temp("bad-pair.json", data);
    let out = torgen(&["validate", "--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).contains("violation"));
}

#[test]
fn malformed_json_names_location() {
    let path = write_temp("broken.json", "{\"type\": \"fixed_points\",\n  \"n\": }");
    let out = torgen(&["genus", "--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 2"), "{err}");
}

#[test]
fn fixed_points_of_cp2() {
    let out = torgen(&["fixed-points", "--input", "builtin:cp2:eps=--"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().count(), 3);
}

#[test]
fn list_builtins_mentions_every_family() {
    let out = torgen(&["list-builtins"]);
    let text = stdout(&out);
    for id in ["cp{n}", "square", "s6", "flag3", "cp1"] {
        assert!(text.contains(id), "{id} missing");
    }
}

#[test]
fn pairing_search_finds_vanishing_blocks() {
    let out = torgen(&["pairing", "--input", "builtin:square:eps=-1,-1:delta=1,0", "--search-pairings"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("=> vanishes"));
}
