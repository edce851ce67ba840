use assert_cmd::Command;
use serde_json::Value;

fn distcalc() -> Command {
    Command::cargo_bin("distcalc").expect("binary builds")
}

#[test]
fn table_json_matches_the_golden_file() {
    let golden = include_str!("../../core/tests/golden/table.json");
    let assert = distcalc()
        .args(["table", "--format", "json"])
        .assert()
        .success();
    let stdout = String::from_utf8_lossy(&assert.get_output().stdout).to_string();
    assert_eq!(stdout.trim_end(), golden.trim_end());
}

#[test]
fn table_text_contains_the_pinned_rows() {
    let assert = distcalc().arg("table").assert().success();
    let stdout = String::from_utf8_lossy(&assert.get_output().stdout).to_string();
    let normalize = |s: &str| s.split_whitespace().collect::<Vec<_>>().join(" ");
    let lines: Vec<String> = stdout.lines().map(normalize).collect();
    assert!(
        lines.contains(&"D | E x(1) | E' x(2)".to_string()),
        "{stdout}"
    );
    assert!(
        lines.contains(&"OC' | OC x(6) | OC' o(5)".to_string()),
        "{stdout}"
    );
    assert_eq!(
        lines.iter().filter(|l| l.contains('|')).count(),
        15,
        "14 rows + header"
    );
}

#[test]
fn infer_reports_the_prop1_discontinuity() {
    let assert = distcalc()
        .args(["infer", "(phi:D) * (f:E)", "--format", "json"])
        .assert()
        .success();
    let v: Value = serde_json::from_slice(&assert.get_output().stdout).unwrap();
    assert_eq!(v["space"], "D");
    assert_eq!(v["verdict"], "discontinuous");
    assert_eq!(v["ref"], "Prop 1");
    assert!(v["trace"].as_array().unwrap().len() >= 3);
}

#[test]
fn infer_hypocontinuous_fallback_names_the_blanket_reference() {
    // a pair with no proved verdict at its natural target
    let assert = distcalc()
        .args(["infer", "(f:S) * (g:OC)", "--format", "json"])
        .assert()
        .success();
    let v: Value = serde_json::from_slice(&assert.get_output().stdout).unwrap();
    assert_eq!(v["verdict"], "hypocontinuous-only-known");
    assert_eq!(v["ref"], "hypocontinuous (blanket)");
}

#[test]
fn inadmissible_pairs_exit_with_the_domain_code() {
    distcalc()
        .args(["infer", "(S:S') conv (T:D')"])
        .assert()
        .code(1)
        .stderr(predicates::str::contains(
            "no multiplier or convolutor condition",
        ));
}

#[test]
fn usage_errors_exit_with_code_two() {
    distcalc().arg("frobnicate").assert().code(2);
    distcalc().args(["classify", "D", "E"]).assert().code(2);
}

#[test]
fn classify_supports_explicit_targets() {
    let assert = distcalc()
        .args(["classify", "D", "E'", "conv", "E'", "--format", "json"])
        .assert()
        .success();
    let v: Value = serde_json::from_slice(&assert.get_output().stdout).unwrap();
    assert_eq!(v["verdict"], "continuous");
    assert_eq!(v["ref"], "Remark 5 item 2");
    // the same pair into its natural result space is the Prop 2 regularization
    let assert = distcalc()
        .args(["classify", "D", "E'", "conv", "--format", "json"])
        .assert()
        .success();
    let v: Value = serde_json::from_slice(&assert.get_output().stdout).unwrap();
    assert_eq!(v["target"], "D");
    assert_eq!(v["verdict"], "discontinuous");
    assert_eq!(v["ref"], "Prop 2");
}

#[test]
fn audit_counts_five_of_fourteen() {
    let assert = distcalc()
        .args(["audit-ehrenpreis", "--format", "json"])
        .assert()
        .success();
    let v: Value = serde_json::from_slice(&assert.get_output().stdout).unwrap();
    assert_eq!(v["continuous"], 5);
    assert_eq!(v["total"], 14);
    assert_eq!(v["maps"].as_array().unwrap().len(), 14);
    let text = distcalc().arg("audit-ehrenpreis").assert().success();
    let stdout = String::from_utf8_lossy(&text.get_output().stdout).to_string();
    assert!(stdout.contains("5 of 14 continuous"), "{stdout}");
}

#[test]
fn witness_json_round_trips_and_is_deterministic() {
    let run = || {
        let assert = distcalc()
            .args(["witness", "D", "E'", "conv", "--steps", "4", "--json"])
            .assert()
            .success();
        String::from_utf8_lossy(&assert.get_output().stdout).to_string()
    };
    let first = run();
    let second = run();
    assert_eq!(first, second, "witness output must be deterministic");
    let v: Value = serde_json::from_str(&first).unwrap();
    assert_eq!(v["family"], "W_Prop2_scaling");
    assert_eq!(v["verdict"], "diverges");
    assert_eq!(v["params"].as_array().unwrap().len(), 4);
    assert_eq!(
        v["numerators"].as_array().unwrap().len(),
        v["denominators"].as_array().unwrap().len()
    );
}

#[test]
fn witness_rejects_continuous_pairs() {
    distcalc()
        .args(["witness", "OM", "OM", "mul"])
        .assert()
        .code(1)
        .stderr(predicates::str::contains("no known witness"));
}

#[test]
fn seminorm_evaluates_function_and_dual_literals() {
    let assert = distcalc()
        .args(["seminorm", "pS(0,2)", "gauss(1)"])
        .assert()
        .success();
    let stdout = String::from_utf8_lossy(&assert.get_output().stdout).to_string();
    let v: f64 = stdout.trim().parse().unwrap();
    assert!((v - (-1.0f64).exp()).abs() < 1e-4, "{v}");
    let assert = distcalc()
        .args(["seminorm", "pB(gauss(1))", "d[2]dirac(0)"])
        .assert()
        .success();
    let stdout = String::from_utf8_lossy(&assert.get_output().stdout).to_string();
    let v: f64 = stdout.trim().parse().unwrap();
    assert!((v - 2.0).abs() < 1e-9, "{v}");
}

#[test]
fn seminorm_respects_grid_flags() {
    // halving the radius removes the support of a wide bump: domain error
    distcalc()
        .args([
            "seminorm",
            "pD(0,1)",
            "translate(bump(1), 7)",
            "--radius",
            "4",
        ])
        .assert()
        .code(1)
        .stderr(predicates::str::contains("support radius"));
}

#[test]
fn membership_answers_with_a_reason() {
    let assert = distcalc()
        .args(["membership", "chirp", "OC", "--format", "json"])
        .assert()
        .success();
    let v: Value = serde_json::from_slice(&assert.get_output().stdout).unwrap();
    assert_eq!(v["member"], false);
    assert!(v["reason"].as_str().unwrap().contains("derivative"));
    distcalc()
        .args(["membership", "chirp", "S'"])
        .assert()
        .code(1)
        .stderr(predicates::str::contains("distribution space"));
}

#[test]
fn check_bound_reports_zero_violations() {
    let assert = distcalc()
        .args([
            "check-bound",
            "OM",
            "OM",
            "mul",
            "OM",
            "--trials",
            "20",
            "--seed",
            "7",
            "--format",
            "json",
        ])
        .assert()
        .success();
    let v: Value = serde_json::from_slice(&assert.get_output().stdout).unwrap();
    assert_eq!(v["violations"], 0);
}
