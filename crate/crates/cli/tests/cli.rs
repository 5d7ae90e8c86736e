use std::process::{Command, Output};

use serde_json::Value;

fn cocal7(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cocal7"))
        .args(args)
        .env_remove("COCAL7_FORMAT")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = cocal7(&all);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn parse_reports_nilpotency_and_center() {
    let out = cocal7(&["parse", "(0,0,0,e^{12},e^{13},e^{23})"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("jacobi: true\n"));
    assert!(text.contains("lower central series: [6, 3, 0]\n"));
    assert!(text.contains("center: [E_4, E_5, E_6]\n"));

    let report = json(&["parse", "(0,0,0)"]);
    assert_eq!(report["schema"], 1);
    assert_eq!(report["result"]["abelian"], true);
    assert_eq!(
        report["result"]["center"],
        serde_json::json!(["E_1", "E_2", "E_3"])
    );
}

#[test]
fn parse_errors_carry_positions() {
    let out = cocal7(&["parse", "(0,e^{99})"]);
    assert!(!out.status.success());
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("position 3"), "{err}");
    let out = cocal7(&["parse", "(0,0,e^{1 2)"]);
    assert!(!out.status.success());
}

#[test]
fn non_jacobi_literal_is_reported_not_rejected() {
    let report = json(&["parse", "(0,0,e^{12},e^{34})"]);
    assert_eq!(report["result"]["jacobi"], false);
    assert_eq!(report["result"]["jacobi_witness"]["index"], 4);
    assert_eq!(report["result"]["jacobi_witness"]["d(de^i)"], "e^{124}");
    let out = cocal7(&["--strict", "parse", "(0,0,e^{12},e^{34})"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn catalog_listing_and_entries() {
    let report = json(&["catalog"]);
    let entries = report["result"]["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 6);
    let two_b = entries.iter().find(|e| e["name"] == "2B").unwrap();
    assert_eq!(two_b["status"], "flagged");
    assert_eq!(two_b["literal"], "(0, 0, e^{12}, e^{23}, e^{14+35})");
    assert_eq!(two_b["flags"][0], "entry count 5, expected 6");
    assert!(entries
        .iter()
        .filter(|e| e["name"] != "2B")
        .all(|e| e["status"] == "valid"));

    let one_a = json(&["catalog", "1a"]);
    assert_eq!(one_a["result"]["name"], "1A");
    assert_eq!(
        one_a["result"]["lower_central_series"],
        serde_json::json!([6, 3, 0])
    );

    let out = cocal7(&["catalog", "9Z"]);
    assert!(!out.status.success());
    assert_eq!(cocal7(&["--strict", "catalog"]).status.code(), Some(3));
    assert!(cocal7(&["catalog"]).status.success());
}

#[test]
fn psi_mode_on_one_a() {
    let report = json(&[
        "solve",
        "1A",
        "--mode",
        "psi",
        "--omega",
        "e^{12}+e^{34}+e^{56}",
    ]);
    let r = &report["result"];
    assert_eq!(r["unknowns"], 20);
    assert_eq!(r["equations"], 15);
    assert_eq!(r["consistent"], false);
    assert_eq!(r["d_omega_wedge_omega"], "-e^{12356}");

    let report = json(&[
        "solve",
        "1A",
        "--mode",
        "psi",
        "--omega",
        "e^{16}-e^{25}+e^{34}",
    ]);
    let r = &report["result"];
    assert_eq!(r["consistent"], true);
    assert_eq!(r["nullity"], 16);
    assert_eq!(r["particular_solution"], "-e^{456}");
    assert_eq!(r["particular_verified"], true);
    assert_eq!(r["half_flat_scalar"], "1/2");
    assert_eq!(r["homogeneous_basis_verified"], true);
    assert_eq!(r["d_omega_wedge_omega"], "0");
}

#[test]
fn phi_mode_on_abelian_algebra() {
    let report = json(&[
        "solve",
        "(0,0,0,0,0,0,0)",
        "--mode",
        "phi",
        "--theta",
        "e^{7}",
    ]);
    let r = &report["result"];
    assert_eq!(r["unknowns"], 35);
    assert_eq!(r["equations"], 21);
    assert_eq!(r["nullity"], 20);
    assert_eq!(r["claim_verdict"], "no");
    let solutions = r["solutions"].as_array().unwrap();
    assert_eq!(solutions.len(), 20);
    assert!(solutions
        .iter()
        .all(|s| s["theta_wedge_phi_nonzero"] == false && s["substitution_verified"] == true));

    let text = stdout(&cocal7(&[
        "solve", "1A", "--mode", "phi", "--extend", "--theta", "e^{7}",
    ]));
    assert!(
        text.contains("non-degenerate L.C.CC solution exists: yes\n"),
        "{text}"
    );
}

#[test]
fn solve_preconditions() {
    let cases: &[&[&str]] = &[
        &["solve", "1A", "--mode", "phi", "--theta", "e^{7}"],
        &["solve", "1A", "--mode", "psi"],
        &["solve", "1A", "--mode", "phi", "--extend"],
        &[
            "solve", "1A", "--mode", "phi", "--extend", "--theta", "e^{4}",
        ],
        &[
            "solve", "2B", "--mode", "phi", "--extend", "--theta", "e^{7}",
        ],
        &[
            "solve",
            "(0,0,e^{12},e^{34})",
            "--mode",
            "psi",
            "--omega",
            "e^{12}",
        ],
    ];
    for args in cases {
        assert!(!cocal7(args).status.success(), "{args:?}");
    }
}

#[test]
fn verify_examples() {
    let phi = "-e^{1256}+e^{1346}-e^{2345}-e^{4567}";
    let report = json(&["verify", "1A", "--extend", "--phi", phi, "--theta", "e^{7}"]);
    assert_eq!(report["result"]["verdict"], "L.C.CC");
    assert_eq!(report["result"]["half_flat_scalar"], "1/2");
    assert_eq!(report["result"]["decomposition"]["psi_minus"], "-e^{456}");
    assert_eq!(
        report["result"]["decomposition"]["d psi_minus = sigma"],
        true
    );

    let report = json(&[
        "verify",
        "(0,0,0,0,0,0,0)",
        "--phi",
        "e^{1234}",
        "--theta",
        "e^{7}",
    ]);
    assert_eq!(report["result"]["verdict"], "cocalibrated");
    assert_eq!(report["result"]["conformal_factor"], "0");

    let report = json(&[
        "verify",
        "(0,0,0,0,0,0,0)",
        "--phi",
        "e^{1234}",
        "--theta",
        "e^{1}+e^{7}",
        "--x",
        "E_7",
    ]);
    assert_eq!(report["result"]["decomposition"]["psi_minus"], "0");

    let report = json(&[
        "verify",
        "(0,0,0,0,0,0,0)",
        "--phi",
        "e^{1234}",
        "--theta",
        "0",
    ]);
    assert_eq!(report["result"]["verdict"], "rejected: vanishing Lee form");

    let report = json(&[
        "verify",
        "(0,0,0,0,0,0,0)",
        "--phi",
        "e^{1234}",
        "--theta",
        "e^{7}",
        "--x",
        "2*E_7",
    ]);
    assert_eq!(report["result"]["x"], "E_7");
    assert!(report["diagnostics"][0]
        .as_str()
        .unwrap()
        .contains("rescaled"));

    let out = cocal7(&[
        "verify",
        "(0,0,0,0,0,0,0)",
        "--phi",
        "e^{1234}",
        "--theta",
        "e^{1}",
        "--x",
        "E_7",
    ]);
    assert!(!out.status.success());
}

#[test]
fn file_arguments_and_environment_format() {
    let dir = std::env::temp_dir().join(format!("cocal7-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("one_a.txt");
    std::fs::write(&path, "(0,0,0,e^{12},e^{13},e^{23})\n").unwrap();
    let arg = format!("@{}", path.display());
    let from_file = json(&["parse", &arg]);
    let inline = json(&["parse", "(0,0,0,e^{12},e^{13},e^{23})"]);
    assert_eq!(from_file["input_digest"], inline["input_digest"]);
    assert_eq!(from_file["result"], inline["result"]);
    assert!(!cocal7(&["parse", "@/nonexistent/cocal7"]).status.success());
    std::fs::remove_dir_all(&dir).unwrap();

    let out = Command::new(env!("CARGO_BIN_EXE_cocal7"))
        .args(["parse", "(0,0)"])
        .env("COCAL7_FORMAT", "json")
        .output()
        .unwrap();
    let value: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["schema"], 1);
}

#[test]
fn text_and_json_carry_the_same_values() {
    let args = [
        "solve", "3A", "--mode", "phi", "--extend", "--theta", "e^{7}",
    ];
    let report = json(&args);
    let text = stdout(&cocal7(&args));
    for key in ["rank", "nullity", "claim_verdict"] {
        let value = &report["result"][key];
        let rendered = value
            .as_str()
            .map(str::to_string)
            .unwrap_or_else(|| value.to_string());
        assert!(
            text.contains(&format!("{}: {rendered}\n", key.replace('_', " "))),
            "{key}"
        );
    }
    for s in report["result"]["solutions"].as_array().unwrap() {
        assert!(text.contains(s["phi"].as_str().unwrap()));
    }
}
