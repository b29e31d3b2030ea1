//! End-to-end tests of the `mvlab` binary: the exit-code contract (0
//! success, 1 expectation/claim failure, 2 usage or input error), output
//! shapes, stdin handling, and the logic-definition round trip.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn mvlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mvlab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn mvlab_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_mvlab"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary starts");
    child.stdin.as_mut().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().expect("binary exits")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn stderr(output: &Output) -> String {
    String::from_utf8_lossy(&output.stderr).into_owned()
}

fn code(output: &Output) -> i32 {
    output.status.code().expect("exit code")
}

#[test]
fn eval_prints_the_value() {
    let out = mvlab(&["eval", "M3V", "A > B", "A=T", "B=B"]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert_eq!(stdout(&out).trim(), "F");

    let out = mvlab(&["eval", "cP2", "A & B", "A=B", "B=B"]);
    assert_eq!(stdout(&out).trim(), "T");

    let out = mvlab(&["eval", "M3V", "A", "A=T"]);
    assert_eq!(stdout(&out).trim(), "T");
}

#[test]
fn eval_rejects_bad_input_with_exit_2() {
    let out = mvlab(&["eval", "M3V", "A >", "A=T"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("unexpected end"), "{}", stderr(&out));

    let out = mvlab(&["eval", "M3V", "A", "A=X"]);
    assert_eq!(code(&out), 2);

    let out = mvlab(&["eval", "M3V", "A & B", "A=T"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("no assigned value"), "{}", stderr(&out));

    let out = mvlab(&["eval", "NoSuchLogic", "A", "A=T"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn check_reports_status_and_witness() {
    let out = mvlab(&["check", "M3V", "valid", "~(A > ~A)"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "valid-sometimes-false (false at A=B)");

    let out = mvlab(&["check", "cCSL3", "valid", "-(A > B)"]);
    assert_eq!(stdout(&out).trim(), "valid-just-true");

    let out = mvlab(&["check", "CSL3", "consequence", "A, -A | B => B"]);
    assert_eq!(stdout(&out).trim(), "invalid (countermodel: A=B B=F)");
}

#[test]
fn check_expectation_drives_the_exit_code() {
    let out = mvlab(&["check", "M3V", "valid", "~(A > ~A)", "--expect", "valid"]);
    assert_eq!(code(&out), 0);
    let out = mvlab(&["check", "M3V", "valid", "~(A > ~A)", "--expect", "valid-just-true"]);
    assert_eq!(code(&out), 1);
    let out = mvlab(&["check", "M3V", "valid", "~(A > ~A)", "--expect", "nonsense"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn check_rejects_foreign_symbols_with_position() {
    let out = mvlab(&["check", "cCSL3", "valid", "-(A > ~A)"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("unknown symbol `~`"), "{}", stderr(&out));
}

#[test]
fn check_reads_formula_lists_from_stdin() {
    let out = mvlab_stdin(
        &["check", "M3V", "valid", "-", "--expect", "valid"],
        "~(A > ~A)\n~(~A > A)\n\n(A > B) > ~(A > ~B)\n",
    );
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert_eq!(stdout(&out).lines().count(), 3);

    // One refuted formula flips the exit code.
    let out = mvlab_stdin(
        &["check", "M3V", "valid", "-", "--expect", "valid"],
        "~(A > ~A)\n(A > B) > (B > A)\n",
    );
    assert_eq!(code(&out), 1);

    let out = mvlab_stdin(&["check", "M3V", "valid", "-"], "\n\n");
    assert_eq!(code(&out), 2);
}

#[test]
fn check_machine_output_is_json() {
    let out = mvlab(&["check", "M3V", "valid", "~(A > B)", "--format", "machine"]);
    let doc: serde_json::Value = serde_json::from_str(stdout(&out).trim()).expect("json line");
    assert_eq!(doc["status"], "valid-sometimes-false");
    assert_eq!(doc["witness"], "A=T B=T");
    assert_eq!(doc["logic"], "M3V");
}

#[test]
fn consequence_flavors_are_selectable() {
    let out = mvlab(&["check", "M3V", "consequence", "A => A > A", "--flavor", "truth"]);
    assert_eq!(stdout(&out).trim(), "valid-just-true");
    let out = mvlab(&["check", "M3V", "consequence", "A => A > A", "--flavor", "exact-truth"]);
    assert!(stdout(&out).starts_with("invalid"));
    let out = mvlab(&["check", "M3V", "consequence", "A => A > A", "--flavor", "non-falsity"]);
    assert!(stdout(&out).starts_with("invalid"));
    let out = mvlab(&["check", "M3V", "consequence", "A => A", "--flavor", "bogus"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn classify_and_stability_render() {
    let out = mvlab(&["classify", "M3V", "--neg", "~", "--cond", ">"]);
    let text = stdout(&out);
    assert!(text.contains("connexive        true"), "{text}");
    assert!(text.contains("hyper-connexive  false"), "{text}");
    assert!(text.contains("ultra-Abelardian true"), "{text}");

    let out = mvlab(&["stability", "toolbox", "--cond", ">w"]);
    let text = stdout(&out);
    assert!(text.contains("connexively stable: false"), "{text}");
    assert!(text.contains("fails"), "{text}");

    let out = mvlab(&["stability", "M3V", "--cond", ">"]);
    assert!(stdout(&out).contains("connexively stable: true"));

    let out = mvlab(&["classify", "M3V", "--neg", "nope", "--cond", ">"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn classify_and_stability_machine_output() {
    let out = mvlab(&["classify", "cCSL3", "--neg", "-", "--cond", ">", "--format", "machine"]);
    let doc: serde_json::Value = serde_json::from_str(stdout(&out).trim()).expect("json");
    assert_eq!(doc["connexive"], true);
    assert_eq!(doc["hyper_connexive"], false);
    assert_eq!(doc["theses"]["AT"], "valid-just-true");

    let out = mvlab(&["stability", "toolbox", "--cond", ">bl", "--format", "machine"]);
    let doc: serde_json::Value = serde_json::from_str(stdout(&out).trim()).expect("json");
    assert_eq!(doc["stable"], false);
    let entries = doc["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 2);
}

#[test]
fn definable_prints_the_witness() {
    let out = mvlab(&["definable", "M3V", "--target", "consistency"]);
    assert!(stdout(&out).starts_with("no:"), "{}", stdout(&out));

    let out = mvlab(&["definable", "M3V", "--extend", "toolbox:circ", "--target", "CSL3:neg"]);
    let text = stdout(&out);
    assert!(text.starts_with("yes:"), "{text}");
    assert!(text.contains("x1"), "{text}");
}

#[test]
fn enumerate_counts_tables() {
    let out = mvlab(&["enumerate", "CSL3", "--constraint", "detachment"]);
    assert!(stdout(&out).contains("2187 binary table(s)"), "{}", stdout(&out));

    let out = mvlab(&["enumerate", "CSL3", "--constraint", "detachment", "--constraint", "classical-tf"]);
    assert!(stdout(&out).contains("81 binary table(s)"), "{}", stdout(&out));

    let out = mvlab(&["enumerate", "CSL3", "--constraint", "bogus"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn export_logic_round_trips_through_eval() {
    let dir = std::env::temp_dir().join(format!("mvlab-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("m3v.json");
    let out = mvlab(&["export-logic", "M3V", "--output", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));

    // The exported file acts as a logic reference and answers like the
    // built-in.
    let out = mvlab(&["check", path.to_str().unwrap(), "valid", "~(A > ~A)"]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert_eq!(stdout(&out).trim(), "valid-sometimes-false (false at A=B)");

    let out = mvlab(&["eval", path.to_str().unwrap(), "A > B", "A=T", "B=B"]);
    assert_eq!(stdout(&out).trim(), "F");
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn report_passes_on_the_builtin_manifest() {
    let out = mvlab(&["report"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("0 failed"), "{text}");
    assert!(!text.contains("FAIL"), "{text}");
}

#[test]
fn report_machine_output_is_schema_stable() {
    let out = mvlab(&["report", "--format", "machine"]);
    assert_eq!(code(&out), 0);
    let doc: serde_json::Value = serde_json::from_str(stdout(&out).trim()).expect("json");
    assert_eq!(doc["format_version"], 1);
    let claims = doc["claims"].as_array().expect("claims array");
    assert!(!claims.is_empty());
    for claim in claims {
        assert!(claim["id"].is_string());
        assert!(claim["locus"].is_string());
        assert!(claim["pass"].is_boolean());
        assert!(claim["detail"].is_string());
    }
    assert_eq!(doc["summary"]["failed"], 0);
    assert_eq!(doc["summary"]["total"], claims.len());
}

#[test]
fn report_rejects_bad_manifests_with_exit_2() {
    let dir = std::env::temp_dir().join(format!("mvlab-manifest-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();

    let empty = dir.join("empty.json");
    std::fs::write(&empty, r#"{"format_version": 1, "claims": []}"#).unwrap();
    let out = mvlab(&["report", empty.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("no claims"), "{}", stderr(&out));

    let garbled = dir.join("garbled.json");
    std::fs::write(&garbled, "{").unwrap();
    let out = mvlab(&["report", garbled.to_str().unwrap()]);
    assert_eq!(code(&out), 2);

    let out = mvlab(&["report", dir.join("missing.json").to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn report_fails_on_a_wrong_expectation_with_exit_1() {
    let dir = std::env::temp_dir().join(format!("mvlab-wrong-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("wrong.json");
    std::fs::write(
        &path,
        r#"{
          "format_version": 1,
          "claims": [
            { "id": "good", "locus": "detachment holds",
              "kind": "consequence", "logic": "M3V", "sequent": "A, A > B => B", "expect": "valid" },
            { "id": "deliberately-wrong", "locus": "a negated conditional is not just true in M3V",
              "kind": "valid", "logic": "M3V", "formula": "~(A > B)", "expect": "valid-just-true" }
          ]
        }"#,
    )
    .unwrap();
    let out = mvlab(&["report", path.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    let text = stdout(&out);
    assert!(text.contains("PASS good"), "{text}");
    assert!(text.contains("FAIL deliberately-wrong"), "{text}");
    assert!(text.contains("1 passed, 1 failed"), "{text}");
    std::fs::remove_dir_all(&dir).ok();
}
