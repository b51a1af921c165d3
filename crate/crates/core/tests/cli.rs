use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use ringlab::catalog::builtin;
use ringlab::format::load_ring;

fn ringlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ringlab"))
        .args(args)
        .env_remove("RINGLAB_MCCOY_BOUND")
        .output()
        .expect("run ringlab")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn exit_codes() {
    assert_eq!(
        ringlab(&["validate", "--ring", "builtin:Z6"]).status.code(),
        Some(0)
    );
    assert_eq!(
        ringlab(&["validate", "--ring", "builtin:Z300"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        ringlab(&["check", "--ring", "no/such/file.ring"])
            .status
            .code(),
        Some(1)
    );
    let strict = ringlab(&[
        "check",
        "--ring",
        "builtin:U2Z2",
        "--property",
        "commutative",
        "--strict",
    ]);
    assert_eq!(strict.status.code(), Some(2));
    let lax = ringlab(&[
        "check",
        "--ring",
        "builtin:U2Z2",
        "--property",
        "commutative",
    ]);
    assert_eq!(lax.status.code(), Some(0));
    let bad_pair = ringlab(&[
        "annihilate",
        "--ring",
        "builtin:Z8",
        "--f",
        "2,4",
        "--g",
        "1",
    ]);
    assert_eq!(bad_pair.status.code(), Some(1));
}

#[test]
fn induction_stall_exits_with_three() {
    let out = ringlab(&[
        "annihilate",
        "--ring",
        "builtin:Z4[t]/(t^2)",
        "--f",
        "4,2",
        "--g",
        "4,6,2",
        "--variant",
        "induction",
    ]);
    assert_eq!(out.status.code(), Some(3));
    let text = stdout(&out);
    assert!(text.contains("fallback_oracle"), "{text}");
    assert!(text.ends_with("result 8\n"));
    let alt = ringlab(&[
        "annihilate",
        "--ring",
        "builtin:Z4[t]/(t^2)",
        "--f",
        "4,2",
        "--g",
        "4,6,2",
    ]);
    assert_eq!(alt.status.code(), Some(0));
}

#[test]
fn env_bound_applies_unless_flag_given() {
    let run = |env: Option<&str>, flag: Option<&str>| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_ringlab"));
        cmd.args(["check", "--ring", "builtin:Z4", "--property", "mccoy"]);
        cmd.env_remove("RINGLAB_MCCOY_BOUND");
        if let Some(v) = env {
            cmd.env("RINGLAB_MCCOY_BOUND", v);
        }
        if let Some(v) = flag {
            cmd.args(["--mccoy-bound", v]);
        }
        stdout(&cmd.output().unwrap())
    };
    assert!(run(None, None).contains("holds_up_to(2,2)"));
    assert!(run(Some("1,1"), None).contains("holds_up_to(1,1)"));
    assert!(run(Some("1,1"), Some("2,1")).contains("holds_up_to(2,1)"));
}

#[test]
fn annihilate_then_replay() {
    let dir = tempfile::tempdir().unwrap();
    let trace = dir.path().join("trace.txt");
    let trace_s = trace.to_str().unwrap();
    let out = ringlab(&[
        "annihilate",
        "--ring",
        "builtin:Z8",
        "--f",
        "2,4",
        "--g",
        "4,4",
        "--method",
        "right-duo",
        "--output",
        trace_s,
    ]);
    assert_eq!(out.status.code(), Some(0));
    let ok = ringlab(&["replay", "--ring", "builtin:Z8", "--trace", trace_s]);
    assert_eq!(
        ok.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&ok.stderr)
    );
    assert!(stdout(&ok).starts_with("replay ok"));

    let text = fs::read_to_string(&trace).unwrap();
    let last = text.lines().last().unwrap();
    let tampered = text.replace(last, "result 1");
    fs::write(&trace, tampered).unwrap();
    let bad = ringlab(&["replay", "--ring", "builtin:Z8", "--trace", trace_s]);
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn export_validate_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m2.ring");
    let out = ringlab(&[
        "export",
        "--ring",
        "builtin:M2Z2",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let loaded = load_ring(&path).unwrap();
    let original = builtin("M2Z2").unwrap();
    assert_eq!(loaded.add_table(), original.add_table());
    assert_eq!(loaded.mul_table(), original.mul_table());
    let valid = ringlab(&["validate", "--ring", path.to_str().unwrap()]);
    assert_eq!(stdout(&valid), "valid ring M2Z2 order 16 one 9\n");
}

fn ring_files(dir: &Path) -> Vec<String> {
    let mut names: Vec<String> = fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().file_name().to_string_lossy().into_owned())
        .collect();
    names.sort();
    names
}

#[test]
fn enumerate_writes_a_usable_corpus() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("order4");
    let out = ringlab(&[
        "enumerate",
        "--order",
        "4",
        "--output",
        target.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let files = ring_files(&target);
    assert_eq!(files.len(), 4);
    for f in &files {
        assert!(f.ends_with(".ring"));
        let v = ringlab(&["validate", "--ring", target.join(f).to_str().unwrap()]);
        assert_eq!(v.status.code(), Some(0));
    }
    let diagram = ringlab(&[
        "diagram",
        "--corpus",
        target.to_str().unwrap(),
        "--mccoy-bound",
        "1,1",
    ]);
    assert_eq!(diagram.status.code(), Some(0));
    assert!(stdout(&diagram).contains("violated=0"));
}

#[test]
fn outputs_are_deterministic() {
    let runs = [
        vec![
            "diagram",
            "--corpus",
            "builtin",
            "--mccoy-bound",
            "1,1",
            "--hunt",
        ],
        vec!["check", "--ring", "builtin:M2Z2", "--mccoy-bound", "1,1"],
        vec![
            "annihilate",
            "--ring",
            "builtin:Z12",
            "--f",
            "6,6",
            "--g",
            "2,4",
            "--method",
            "oracle",
        ],
    ];
    for args in runs {
        let a = ringlab(&args);
        let b = ringlab(&args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert_eq!(a.status.code(), b.status.code());
    }
}

#[test]
fn diagram_csv() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("m.csv");
    let out = ringlab(&[
        "diagram",
        "--mccoy-bound",
        "1,1",
        "--csv",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = fs::read_to_string(csv).unwrap();
    let rows: Vec<&str> = text.lines().collect();
    assert!(rows[0].starts_with("ring,"));
    assert_eq!(rows.len(), 1 + ringlab::catalog::builtin_corpus().len());
}

#[test]
fn documented_examples() {
    let out = ringlab(&[
        "annihilate",
        "--ring",
        "builtin:Z4",
        "--f",
        "2,2",
        "--g",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).ends_with("result 2\n"));
    let out = ringlab(&[
        "annihilate",
        "--ring",
        "builtin:Z4",
        "--f",
        "2,2",
        "--g",
        "2",
        "--method",
        "right-power",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("formula b0^2 value=0 is_zero=true"));
    let out = ringlab(&["annihilate", "--ring", "builtin:Z6", "--f", "1", "--g", "2"]);
    assert_eq!(out.status.code(), Some(1));
    let out = ringlab(&[
        "check",
        "--ring",
        "builtin:M2Z2",
        "--property",
        "semicommutative",
    ]);
    assert!(stdout(&out).contains("verdict fails witness"));
    let out = ringlab(&[
        "check",
        "--ring",
        "builtin:Z4",
        "--all",
        "--mccoy-bound",
        "2,2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().count(), 18);
}
