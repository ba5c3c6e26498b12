use std::process::{Command, Output};

use k3sym::census::Report;
use k3sym::kummer::Generator;

fn k3sym(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_k3sym")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).expect("utf-8")
}

#[test]
fn lemma_6_4_prints_the_polynomial() {
    let o = k3sym(&["verify", "lemma-6.4"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("t^2 - 4*t - 1"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(k3sym(&["verify", "lemma-9.9"]).status.code(), Some(2));
    assert_eq!(k3sym(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(k3sym(&["defect-table", "--digits", "zero"]).status.code(), Some(2));
    assert_eq!(k3sym(&["defect-table", "--format", "yaml"]).status.code(), Some(2));
    assert_eq!(k3sym(&["verify", "lemma-4.2", "--pairing-table", "/nonexistent/table"]).status.code(), Some(2));
}

#[test]
fn corrupted_pairing_table_names_the_pair() {
    let a = Generator::Exceptional([1, 1, -1, -1]).index();
    let b = Generator::Exceptional([1, 1, -1, 1]).index();
    let dir = std::env::temp_dir().join(format!("k3sym-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("pairing.txt");
    std::fs::write(&path, format!("# one flipped entry\n{a} {b} 1\n")).unwrap();
    let o = k3sym(&["verify", "lemma-4.2", "--pairing-table", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let err = stderr(&o);
    assert!(err.contains("first failure"), "{err}");
    assert!(err.contains("pairing of f1 and f4"), "{err}");

    std::fs::write(&path, "0 1\n").unwrap();
    let o = k3sym(&["verify", "lemma-4.2", "--pairing-table", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn small_budget_fails_the_search() {
    let o = k3sym(&["verify", "theorem-1.7", "--budget", "1000"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("Q8 search"));
}

#[test]
fn json_is_deterministic_and_round_trips() {
    let a = k3sym(&["census", "p5", "--format", "json"]);
    let b = k3sym(&["census", "p5", "--format", "json"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    let report: Report = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string_pretty(&report).unwrap() + "\n", text);
    assert!(report.timings.is_empty());
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    for key in ["command", "inputs", "candidates", "filters", "survivors", "timings"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(report.survivors.len(), 4);
}

#[test]
fn timings_are_opt_in() {
    let o = k3sym(&["census", "q8", "--format", "json", "--timings"]);
    let report: Report = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(report.timings.contains_key("total_ms"));
}

#[test]
fn out_flag_writes_the_report() {
    let path = std::env::temp_dir().join(format!("k3sym-out-{}.json", std::process::id()));
    let o = k3sym(&["census", "involution", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let report: Report = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report.command, "census involution");
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn p7_census_has_one_ten_point_survivor() {
    let o = k3sym(&["census", "p7", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let report: Report = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report.survivors, vec!["2×(1,1) 4×(1,5) 2×(2,3) 2×(2,4)".to_string()]);
}

#[test]
fn every_verify_target_passes() {
    for t in ["lemma-4.5", "lemma-5.1", "lemma-5.2", "lemma-5.3", "lemma-6.3", "lemma-6.5", "remark-4.7", "theorem-1.7"] {
        let o = k3sym(&["verify", t]);
        assert_eq!(o.status.code(), Some(0), "{t}: {}", stderr(&o));
    }
    for args in [&["census", "q8"][..], &["defect-table"][..]] {
        assert_eq!(k3sym(args).status.code(), Some(0));
    }
}
