use std::process::{Command, Output};

fn wbideg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wbideg"))
        .args(args)
        .env_remove("WBIDEG_MAX_DEGREE")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON")
}

#[test]
fn wdeg_prints_the_degree() {
    let o = wbideg(&["wdeg", "-w", "2,3", "x^3+x*y+y^2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "6\n");
}

#[test]
fn member_reports_the_branch() {
    let o = wbideg(&["member", "-w", "2,3", "3", "2", "--output", "json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["branch"], "exceptional");
    // A non-member is still a successful query.
    let o = wbideg(&["member", "-w", "2,3", "4", "6", "--output", "json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        json(&o),
        serde_json::json!({"verdict": "non-member", "branch": null, "failed": ["divisibility"]})
    );
}

#[test]
fn realize_prints_a_word_with_the_requested_bidegree() {
    let o = wbideg(&["realize", "-w", "2,3", "8", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let factors: Vec<wbideg::json::FactorJson> = serde_json::from_slice(&o.stdout).unwrap();
    let word = wbideg::json::decode_word(&factors).unwrap();
    let w = wbideg_core::Weight::new(2, 3).unwrap();
    assert_eq!(
        word.evaluate().unwrap().wmdeg(w),
        wbideg_core::Bidegree::new(8, 2)
    );
}

#[test]
fn realize_rejects_non_members() {
    let o = wbideg(&["realize", "-w", "2,3", "5", "7"]);
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn decompose_and_length() {
    let o = wbideg(&["decompose", "--f1", "x", "--f2", "y + x^2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["length"], 1);
    let o = wbideg(&["length", "--f1", "x + (y + x^2)^2", "--f2", "y + x^2"]);
    assert_eq!(o.status.code(), Some(2), "the grammar has no parentheses");
    let o = wbideg(&["length", "--f1", "x + y^2 + 2x^2y + x^4", "--f2", "y + x^2"]);
    assert_eq!(stdout(&o), "2\n");
}

#[test]
fn non_automorphisms_exit_three() {
    for cmd in ["decompose", "length", "invert"] {
        let o = wbideg(&[cmd, "--f1", "x^2", "--f2", "y"]);
        assert_eq!(o.status.code(), Some(3), "{cmd}");
        assert_eq!(
            stdout(&o),
            "not an automorphism: leading-forms-not-proportional\n"
        );
    }
}

#[test]
fn invert_prints_the_inverse() {
    let o = wbideg(&["invert", "--f1", "x + y^3", "--f2", "y", "--output", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["f1"], "-y^3 + x");
    assert_eq!(v["f2"], "y");
}

#[test]
fn environment_caps_the_degree() {
    let o = Command::new(env!("CARGO_BIN_EXE_wbideg"))
        .args([
            "decompose",
            "--f1",
            "x + y^2 + 2x^3y + x^6",
            "--f2",
            "y + x^3",
        ])
        .env("WBIDEG_MAX_DEGREE", "4")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(5));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(wbideg(&["wdeg", "x^"]).status.code(), Some(2));
    assert_eq!(
        wbideg(&["member", "-w", "0,1", "1", "1"]).status.code(),
        Some(2)
    );
    assert_eq!(wbideg(&[]).status.code(), Some(2));
}

#[test]
fn verify_and_roundtrip_pass() {
    let o = wbideg(&["verify", "-w", "2,3", "--bound", "12"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("pass\n"));
    let o = wbideg(&[
        "roundtrip",
        "--samples",
        "30",
        "--seed",
        "7",
        "--output",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["pass"], true);
    assert_eq!(v["words_checked"], 30);
    assert_eq!(v["seed"], 7);
}

#[test]
fn text_and_json_agree() {
    let text = wbideg(&["enumerate", "-w", "2,3", "--bound", "9"]);
    let json = json(&wbideg(&[
        "enumerate",
        "-w",
        "2,3",
        "--bound",
        "9",
        "--output",
        "json",
    ]));
    let from_json: Vec<String> = json
        .as_array()
        .unwrap()
        .iter()
        .map(|d| format!("({}, {})", d[0], d[1]))
        .collect();
    let from_text: Vec<String> = stdout(&text).lines().map(String::from).collect();
    assert_eq!(from_text, from_json);
}
