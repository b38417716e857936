use std::io::Write;
use std::process::{Command, Stdio};

fn cfm(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_cfm"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

fn summary_value(out: &str, key: &str) -> f64 {
    out.lines()
        .find_map(|l| l.strip_prefix(&format!("# {key}=")))
        .unwrap_or_else(|| panic!("no {key} in {out}"))
        .parse()
        .unwrap()
}

#[test]
fn help_everywhere() {
    for args in
        [&["--help"][..], &["lattice", "--help"], &["identify", "--help"], &["stream", "--help"], &["gen", "--help"]]
    {
        let (code, out, err) = cfm(args, "");
        assert_eq!(code, 0, "{args:?}");
        assert!(out.contains("Usage"));
        assert!(err.is_empty());
    }
}

#[test]
fn lattice_from_file_both_formats() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("example3.json");
    let (code, _, _) = cfm(&["gen", "--example", "3", "--out", path.to_str().unwrap()], "");
    assert_eq!(code, 0);

    let (code, table, err) = cfm(&["lattice", path.to_str().unwrap()], "");
    assert_eq!(code, 0, "{err}");
    assert!(table.starts_with("subset,size,cf\n"));
    assert!(table.lines().any(|l| l == "x1+x4,2,0.833333"));
    assert!(table.lines().any(|l| l == "x2+x3,2,0.500000"));

    let (code, json, _) = cfm(&["lattice", "--format", "structured", path.to_str().unwrap()], "");
    assert_eq!(code, 0);
    let doc: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(doc["entries"].as_array().unwrap().len(), 15);
}

#[test]
fn identify_reports_checks() {
    let (_, scn, _) = cfm(&["gen", "--example", "1"], "");
    let (code, out, _) = cfm(&["identify"], &scn);
    assert_eq!(code, 0);
    assert!(out.contains("x1,0.312500\n"), "{out}");
    assert!(out.contains("argmax: x1\n"));
    assert!(out.contains("normal: minimal_ok=true max_value=0.562500 attains_one=false\n"));
    assert!(out.contains("monotone: true (0 violations)\n"));

    let witness = r#"{"name": "w", "sources": [{"id": 1, "lo": 0, "hi": 10}, {"id": 2, "lo": 20, "hi": 30}, {"id": 3, "lo": 0, "hi": 30}]}"#;
    let (_, out, _) = cfm(&["identify"], witness);
    assert!(out.contains("violation: x1+x2 (0.666667) > x1+x2+x3 (0.444444)"), "{out}");
}

#[test]
fn stream_drift_subset_is_more_stable() {
    let (code, csv, _) = cfm(&["gen", "--drift"], "");
    assert_eq!(code, 0);
    assert!(csv.starts_with("time,s1,s2,s3,s4\n"));
    assert_eq!(csv.lines().count(), 91);

    let (code, all, err) = cfm(&["stream", "--window", "5", "--summary"], &csv);
    assert_eq!(code, 0, "{err}");
    let (code, rest, _) = cfm(&["stream", "--window", "5", "--subset", "x2,x3,x4", "--summary"], &csv);
    assert_eq!(code, 0);
    assert!(all.starts_with("time,cf\n5,"));
    assert_eq!(all.lines().filter(|l| !l.starts_with('#')).count(), 87);
    assert!(summary_value(&rest, "variance") < summary_value(&all, "variance"));

    let (_, secs, _) = cfm(&["stream", "--window-seconds", "5", "--summary"], &csv);
    assert_eq!(secs, all);
}

#[test]
fn validation_errors_exit_one_without_data_on_stderr() {
    let (code, out, err) = cfm(&["stream", "--window", "2"], "time,s1\n1,0\n1,0\n");
    assert_eq!(code, 1);
    assert!(out.is_empty());
    assert!(err.contains("line 3"), "{err}");

    let (code, _, err) = cfm(&["stream", "--window", "9"], "time,s1\n1,0\n2,0\n");
    assert_eq!(code, 1);
    assert!(err.contains("exceeds"));

    let (code, _, err) = cfm(&["lattice"], r#"{"name": "x", "sources": []}"#);
    assert_eq!(code, 1);
    assert!(err.contains("no sources"));

    let (code, _, _) = cfm(&["gen", "--drift", "--drifting-sensor", "9"], "");
    assert_eq!(code, 1);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(cfm(&[], "").0, 2);
    assert_eq!(cfm(&["gen", "--example", "4"], "").0, 2);
    assert_eq!(cfm(&["gen", "--example", "1", "--drift"], "").0, 2);
    assert_eq!(cfm(&["stream"], "time,s1\n1,0\n").0, 2);
    assert_eq!(cfm(&["stream", "--window", "2", "--window-seconds", "2"], "").0, 2);
}
