use std::path::PathBuf;
use std::process::{Command, Output};

fn homalg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_homalg"))
        .args(args)
        .env_remove("HOMALG_BOUND_H")
        .env_remove("HOMALG_BOUND_A")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn tmp(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name)
}

#[test]
fn act_examples() {
    assert_eq!(stdout(&homalg(&["act", "X", "y"])), "x\n");
    assert_eq!(stdout(&homalg(&["act", "X", "y", "--deformed"])), "q^2*x\n");
    assert_eq!(stdout(&homalg(&["act", "1", "x^2"])), "x^2\n");
    assert_eq!(
        stdout(&homalg(&["act", "Z", "x^2*y", "--deformed", "--q-value", "1/2"])),
        "1/32*x^2*y\n"
    );
    assert_eq!(
        stdout(&homalg(&["act", "Y X", "x*y"])),
        stdout(&homalg(&["act", "X Y - Z", "x*y"]))
    );
}

#[test]
fn verify_sl2_q_passes_at_default_bounds() {
    let o = homalg(&["verify", "sl2-q", "--bound-h", "3", "--bound-a", "4"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let out = stdout(&o);
    assert!(out.starts_with("scenario: sl2-q bound_h=3 bound_a=4 q=formal\n"));
    assert!(out.contains("PASS module-hom-algebra"));
    assert!(out.ends_with("all 16 checks passed (24684 cases)\n"));
}

#[test]
fn negative_control_fails_with_the_expected_counterexample() {
    let path = tmp("negative.json");
    let o = homalg(&[
        "verify",
        "sl2-q",
        "--bound-h",
        "2",
        "--bound-a",
        "2",
        "--negative-control",
        "--report",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 1);
    let doc: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc["passed"], false);
    assert_eq!(doc["scenario"]["negative_control"], true);
    let reports = doc["reports"].as_array().unwrap();
    let mha = reports.iter().find(|r| r["axiom"] == "module-hom-algebra").unwrap();
    assert_eq!(mha["status"], "fail");
    let hit = mha["counterexamples"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["inputs"] == serde_json::json!(["X", "x", "y"]))
        .expect("(X, x, y) is reported");
    assert_eq!(
        (hit["lhs"].as_str(), hit["rhs"].as_str()),
        (Some("q^8*x^2"), Some("q^9*x^2"))
    );
    // Every other check in the suite still passes.
    assert!(reports
        .iter()
        .filter(|r| r["status"] == "fail")
        .all(|r| r["axiom"] == "module-hom-algebra" || r["axiom"] == "mu-module-morphism"));
}

#[test]
fn verify_builtin_finite_scenario() {
    let path = tmp("m2.json");
    let o = homalg(&[
        "verify",
        "finalg",
        "--file",
        "m2-example",
        "--report",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let doc: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc["passed"], true);
    assert_eq!(doc["scenario"]["alpha"], "inner a");
    assert_eq!(doc["reports"].as_array().unwrap().len(), 13);
}

#[test]
fn finite_scenario_with_unfixed_element_is_rejected() {
    let text = homalg::finalg::M2_EXAMPLE.replace("element a = 2*e11 + 3*e22", "element a = e11 + e12 + e22");
    let path = tmp("unfixed.txt");
    std::fs::write(&path, text).unwrap();
    let o = homalg(&["verify", "finalg", "--file", path.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("phi does not fix"));
}

#[test]
fn twist_tables() {
    let out = stdout(&homalg(&["twist", "sl2-q"]));
    assert!(out.contains("\nΔ_α(X) = q*(1⊗X + X⊗1)\n"));
    assert!(out.contains("\nμ_α(X, Y) = X Y\n"));
    assert!(out.contains("\nμ_α(Y, X) = -Z + X Y\n"));
    assert!(out.contains("\nμ_α(X, X) = q^2*X^2\n"));

    let id = stdout(&homalg(&["twist", "sl2-q", "--identity"]));
    assert!(!id.contains('q'), "identity twist has no q: {id}");
    assert!(id.contains("\nΔ_α(X) = 1⊗X + X⊗1\n"));

    let fin = stdout(&homalg(&["twist", "finalg", "--file", "m2-example"]));
    assert!(fin.contains("\nα(e12) = 2/3*e12\n"));
    assert!(fin.contains("\nΔ(phi) = phi⊗phi\n"));
    let fin_id = stdout(&homalg(&["twist", "finalg", "--file", "m2-example", "--identity"]));
    assert!(fin_id.contains("\nμ_α(e12, e21) = e11\n"));
}

#[test]
fn output_is_deterministic() {
    let (a, b) = (tmp("det-a.json"), tmp("det-b.json"));
    let args = |p: &PathBuf| {
        vec![
            "verify".to_string(),
            "sl2-q".into(),
            "--bound-h".into(),
            "2".into(),
            "--bound-a".into(),
            "3".into(),
            "--negative-control".into(),
            "--report".into(),
            p.to_str().unwrap().into(),
        ]
    };
    let run = |p: &PathBuf| homalg(&args(p).iter().map(String::as_str).collect::<Vec<_>>());
    let (oa, ob) = (run(&a), run(&b));
    assert_eq!(oa.stdout, ob.stdout);
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(
        stdout(&homalg(&["twist", "sl2-q", "--bound", "2"])),
        stdout(&homalg(&["twist", "sl2-q", "--bound", "2"]))
    );
}

#[test]
fn exit_codes() {
    assert_eq!(code(&homalg(&["verify", "sl2-q", "--axiom", "not-an-axiom"])), 2);
    assert_eq!(code(&homalg(&["verify", "sl2-q", "--bound-h", "0"])), 2);
    assert_eq!(code(&homalg(&["act", "X", "y^"])), 2);
    assert_eq!(code(&homalg(&["act", "X", "y", "--q-value", "0"])), 2);
    assert_eq!(
        code(&homalg(&["verify", "finalg", "--file", "/nonexistent/scenario.txt"])),
        2
    );
    let escape = homalg(&[
        "verify",
        "custom",
        "--alpha-x",
        "x^2",
        "--bound-h",
        "1",
        "--bound-a",
        "2",
    ]);
    assert_eq!(code(&escape), 3);
    assert!(String::from_utf8_lossy(&escape.stderr).contains("outside the enumerated range"));
    let swap = homalg(&["verify", "custom", "--alpha-lx", "Y", "--alpha-ly", "X"]);
    assert_eq!(code(&swap), 1);
    assert!(stdout(&swap).contains("(X, Y): Z ≠ -Z"));
}

#[test]
fn custom_scenario_reproduces_the_builtin_twist() {
    let custom = homalg(&[
        "verify",
        "custom",
        "--bound-h",
        "2",
        "--bound-a",
        "2",
        "--alpha-x",
        "q^2*x",
        "--alpha-y",
        "q*y",
        "--alpha-lx",
        "q*X",
        "--alpha-ly",
        "q^-1*Y",
    ]);
    assert_eq!(code(&custom), 0);
    let builtin = homalg(&["verify", "sl2-q", "--bound-h", "2", "--bound-a", "2"]);
    let body = |o: &Output| stdout(o).lines().skip(1).collect::<Vec<_>>().join("\n");
    assert_eq!(body(&custom), body(&builtin));
}

#[test]
fn axiom_selection_and_environment_defaults() {
    let o = Command::new(env!("CARGO_BIN_EXE_homalg"))
        .args(["verify", "sl2-q", "--axiom", "hom-associativity"])
        .env("HOMALG_BOUND_H", "1")
        .env("HOMALG_BOUND_A", "2")
        .output()
        .unwrap();
    let out = stdout(&o);
    assert!(out.starts_with("scenario: sl2-q bound_h=1 bound_a=2"));
    assert_eq!(out.lines().filter(|l| l.starts_with("PASS")).count(), 1);
    assert!(out.contains("checked 216"));

    let flag_wins = Command::new(env!("CARGO_BIN_EXE_homalg"))
        .args(["verify", "sl2-q", "--bound-a", "1", "--axiom", "hom-associativity"])
        .env("HOMALG_BOUND_H", "1")
        .env("HOMALG_BOUND_A", "2")
        .output()
        .unwrap();
    assert!(stdout(&flag_wins).contains("checked 27"));

    assert_eq!(
        code(&homalg(&[
            "verify",
            "finalg",
            "--file",
            "m2-example",
            "--axiom",
            "hom-jacobi"
        ])),
        2
    );
    assert!(stdout(&homalg(&["axioms"])).contains("module-hom-algebra"));
}
