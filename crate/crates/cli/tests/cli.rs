use std::process::{Command, Output};

use hlkit::format::{expansion_from_json, xpoly_from_json};
use hlkit::hall_littlewood::{add_one, aleph, qprime_schur};
use hlkit::partition::part;

fn hlkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hlkit"))
        .args(args)
        .env_remove("HLKIT_DEG")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn qprime_text() {
    let o = hlkit(&["qprime", "2,1", "--basis", "S"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "S[2,1] + t*S[3]\n");
    let o = hlkit(&["qprime", "0,2", "--basis", "Qp"]);
    assert_eq!(stdout(&o), "(-1+t)*Q'[1,1] + t*Q'[2]\n");
}

#[test]
fn aleph_matches_library() {
    let o = hlkit(&["aleph", "4,4,3,2,2,2,1", "2,2,1,1"]);
    assert_eq!(o.status.code(), Some(0));
    let expected = aleph(&part(&[4, 4, 3, 2, 2, 2, 1]), &part(&[2, 2, 1, 1]));
    assert_eq!(stdout(&o).trim(), expected.to_string());
}

#[test]
fn trivial_two_alphabet_identity() {
    let o = hlkit(&["verify", "warnaar", "--nx", "1", "--ny", "1", "--deg", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().any(|l| l == "1 = 1"));
}

#[test]
fn degree_cap_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_hlkit"))
        .args(["verify", "sigmaxy", "--nx", "1", "--ny", "1"])
        .env("HLKIT_DEG", "3")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("degree <= 3"));
    let o = hlkit(&["verify", "sigmaxy", "--nx", "1", "--ny", "1"]);
    assert!(stdout(&o).contains("degree <= 6"));
}

#[test]
fn json_round_trips() {
    let o = hlkit(&["--format", "json", "addone", "2,2,1"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(expansion_from_json(&v).unwrap(), add_one(&part(&[2, 2, 1])));

    let o = hlkit(&["qprime", "3,1,1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(expansion_from_json(&v).unwrap(), qprime_schur(&part(&[3, 1, 1])));

    let o = hlkit(&["pp-expand", "2,1", "-n", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let f = xpoly_from_json(&v).unwrap();
    assert_eq!(f.to_string(), "t*x1^3 + (1+t)*x1^2*x2 + (1+t)*x1*x2^2 + t*x2^3");
}

#[test]
fn out_file_holds_json() {
    let dir = std::env::temp_dir().join(format!("hlkit-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("q.json");
    let o = hlkit(&["qprime", "2,1", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(expansion_from_json(&v).unwrap(), qprime_schur(&part(&[2, 1])));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(hlkit(&["qprime", "2,x"]).status.code(), Some(2));
    assert_eq!(hlkit(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(hlkit(&["aleph", "1,2", "1"]).status.code(), Some(2));
    assert_eq!(hlkit(&["qprime", "2,1", "--basis", "P"]).status.code(), Some(2));
}

#[test]
fn other_verbs() {
    assert_eq!(stdout(&hlkit(&["charge", "2,1,1,3"])), "1\n");
    let o = hlkit(&["tableaux", "2,1,1"]);
    assert_eq!(stdout(&o).lines().count(), 5);
    let o = hlkit(&["tableaux", "2,1", "--shape", "3"]);
    assert_eq!(stdout(&o), "1 1 2  charge 1\n");
    let o = hlkit(&["scalar", "2,1", "2,1", "-n", "3"]);
    assert_eq!(stdout(&o), "1 - 2*t + t^2\n");
    let o = hlkit(&["scalar", "2,1", "1,1,1", "-n", "3"]);
    assert_eq!(stdout(&o), "0\n");
    let o = hlkit(&["scalar", "2,1", "2,1", "-n", "3", "--kind", "theta"]);
    assert_eq!(stdout(&o), "t^-3\n");
    for args in [
        &["factor-check", "2,2,1,1", "-n", "2"][..],
        &["verify", "factor", "--lambda", "2,2,1,1", "-n", "2", "-r", "0"],
        &["verify", "theta-scalar", "--l", "2,1", "--m", "2,1", "-n", "3"],
        &["verify", "defq-note"],
        &["verify", "prodx", "-n", "2", "--deg", "4"],
        &["verify", "prodx", "-n", "1", "--family", "unit", "--deg", "3"],
        &["verify", "warnaar3", "--lambda", "2,1", "-n", "2", "--deg", "5"],
        &["subone", "2,2"],
    ] {
        assert_eq!(hlkit(args).status.code(), Some(0), "{args:?}");
    }
}

#[test]
fn acceptance_suite_passes() {
    let o = hlkit(&["verify", "all", "--small"]);
    let text = stdout(&o);
    assert_eq!(o.status.code(), Some(0), "{text}");
    assert_eq!(text.lines().filter(|l| l.contains(": PASS")).count(), 13);
}
