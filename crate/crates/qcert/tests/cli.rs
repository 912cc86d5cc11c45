use std::process::{Command, Output};

fn qcert(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qcert"))
        .args(args)
        .env_remove("QCERT_PREC")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_all_passes() {
    let o = qcert(&["verify", "--all", "--prec", "200"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.lines().filter(|l| l.starts_with("PASS")).count() >= 20);
    assert!(!out.contains("FAIL"));
}

#[test]
fn verify_single_check_json() {
    let o = qcert(&[
        "verify",
        "--check",
        "theorem-S",
        "--prec",
        "300",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let records = v.as_array().unwrap();
    assert_eq!(records.len(), 1);
    assert_eq!(records[0]["check"], "theorem-S");
    assert_eq!(records[0]["prec"], 300);
    assert_eq!(records[0]["status"], "pass");
    assert!(records[0]["first_failure"].is_null());
}

#[test]
fn verify_csv_header() {
    let o = qcert(&[
        "verify",
        "--check",
        "B-lerch-form",
        "--check",
        "R-D",
        "--prec",
        "100",
        "--format",
        "csv",
    ]);
    let out = stdout(&o);
    let lines: Vec<_> = out.lines().collect();
    assert_eq!(
        lines[0],
        "check,prec,status,first_failure_exponent,elapsed_ms"
    );
    assert!(lines[1].starts_with("B-lerch-form,100,pass,,"));
    assert!(lines[2].starts_with("R-D,25,pass,,"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(qcert(&["verify", "--check", "nope"]).status.code(), Some(2));
    assert_eq!(qcert(&["verify"]).status.code(), Some(2));
    assert_eq!(
        qcert(&["coeff", "--series", "S", "--n", "5", "--prec", "5"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        qcert(&["coeff", "--series", "Z", "--n", "1"]).status.code(),
        Some(2)
    );
    assert_eq!(
        qcert(&["scan", "--target", "discover"]).status.code(),
        Some(2)
    );
    assert_eq!(
        qcert(&["scan", "--target", "nowhere"]).status.code(),
        Some(2)
    );
    assert_eq!(
        qcert(&["dissect", "--series", "B", "--mod", "0"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn coefficients() {
    for (series, n, expected) in [
        ("S", "1", "0"),
        ("omega", "3", "4"),
        ("C", "0", "0"),
        ("C_2", "1", "1"),
    ] {
        let o = qcert(&["coeff", "--series", series, "--n", n]);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout(&o).trim(), expected, "{series}[{n}]");
    }
}

#[test]
fn dissect_outputs() {
    let theta = stdout(&qcert(&[
        "dissect", "--series", "theta", "--mod", "4", "--prec", "200", "--format", "json",
    ]));
    let v: serde_json::Value = serde_json::from_str(&theta).unwrap();
    for j in [2, 3] {
        assert!(v["components"][j]["leading"]
            .as_array()
            .unwrap()
            .iter()
            .all(|c| c == "0"));
    }
    let b = stdout(&qcert(&[
        "dissect", "--series", "B", "--mod", "4", "--prec", "40",
    ]));
    assert!(b.lines().nth(1).unwrap().starts_with("F_0 (prec 10): 1,"));
    let csv = stdout(&qcert(&[
        "dissect", "--series", "A", "--mod", "2", "--prec", "10", "--format", "csv",
    ]));
    assert!(csv.starts_with("component,exponent,coefficient\n0,0,1\n"));
}

#[test]
fn dissect_omega_matches_closed_components() {
    let prec = "160";
    let dissected = stdout(&qcert(&[
        "dissect", "--series", "omega", "--mod", "4", "--prec", prec, "--terms", "40", "--format",
        "json",
    ]));
    let v: serde_json::Value = serde_json::from_str(&dissected).unwrap();
    for (j, name) in [(0, "omega0"), (1, "omega1")] {
        let leading = v["components"][j]["leading"].as_array().unwrap();
        for (n, c) in leading.iter().enumerate().take(5) {
            let direct = stdout(&qcert(&["coeff", "--series", name, "--n", &n.to_string()]));
            assert_eq!(c.as_str().unwrap(), direct.trim(), "{name}[{n}]");
        }
    }
}

#[test]
fn scans() {
    let openq = qcert(&["scan", "--target", "openq", "--prec", "1200"]);
    assert_eq!(openq.status.code(), Some(0));
    assert!(stdout(&openq).contains("PASS C-32n+23-mod8"));

    let family = qcert(&[
        "scan", "--target", "family", "--kmax", "2", "--prec", "1200", "--format", "json",
    ]);
    assert_eq!(family.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&family.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 9);

    let found = qcert(&[
        "scan", "--target", "discover", "--series", "S", "--mmax", "8", "--prec", "400",
    ]);
    assert_eq!(found.status.code(), Some(0));
    assert!(stdout(&found).contains("PASS S-4n+1-exact"));
    assert!(String::from_utf8_lossy(&found.stderr).contains("empirical"));
}

#[test]
fn prec_env_override() {
    let o = Command::new(env!("CARGO_BIN_EXE_qcert"))
        .args(["verify", "--check", "theorem-S", "--format", "csv"])
        .env("QCERT_PREC", "77")
        .output()
        .unwrap();
    assert!(stdout(&o).contains("theorem-S,77,pass"));
}

#[test]
fn list_names_everything() {
    let out = stdout(&qcert(&["list"]));
    assert!(
        out.contains("theorem-S") && out.contains("q-transformation-8") && out.contains("B_lerch")
    );
}
