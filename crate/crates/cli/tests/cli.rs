use std::path::PathBuf;
use std::process::{Command, Output};

fn grrforge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_grrforge"))
        .args(args)
        .env_remove("GRRFORGE_CAP")
        .env_remove("RUST_LOG")
        .output()
        .expect("run grrforge")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const HELP_PATHS: &[&[&str]] = &[
    &[],
    &["ppd"],
    &["verify"],
    &["verify", "lemma8"],
    &["verify", "lemma9"],
    &["verify", "lemma10"],
    &["verify", "zsigmondy"],
    &["verify", "table2"],
    &["verify", "table5"],
    &["verify", "table8"],
    &["group"],
    &["group", "info"],
    &["sample"],
    &["sample", "ppd-element"],
    &["sample", "involution"],
    &["grr"],
    &["grr", "check"],
    &["grr", "exhaust"],
    &["estimate"],
    &["sweep"],
];

/// Set `UPDATE_GOLDEN=1` to rewrite the files under `tests/golden`.
#[test]
fn help_matches_golden() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    let mut mismatched = Vec::new();
    for path in HELP_PATHS {
        let mut args = path.to_vec();
        args.push("--help");
        let out = grrforge(&args);
        assert!(out.status.success(), "{args:?}");
        let name = if path.is_empty() {
            "help.txt".to_string()
        } else {
            format!("help-{}.txt", path.join("-"))
        };
        let file = dir.join(&name);
        let got = stdout(&out);
        if update {
            std::fs::create_dir_all(&dir).unwrap();
            std::fs::write(&file, &got).unwrap();
        } else if std::fs::read_to_string(&file).ok().as_deref() != Some(got.as_str()) {
            mismatched.push(name);
        }
    }
    assert!(
        mismatched.is_empty(),
        "help output changed: {mismatched:?} (rerun with UPDATE_GOLDEN=1)"
    );
}

#[test]
fn ppd_prints_json() {
    let out = grrforge(&["ppd", "--base", "2", "--exp", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["ppd"], serde_json::json!([]));
    let out = grrforge(&["ppd", "--base", "3", "--exp", "4"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["ppd"], serde_json::json!([5]));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(grrforge(&["ppd", "--base", "2"]).status.code(), Some(2));
    assert_eq!(grrforge(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        grrforge(&["group", "info", "--family", "psl", "--n", "2", "--q", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        grrforge(&["group", "info", "--family", "psl", "--n", "3", "--q", "6"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        grrforge(&["sweep", "--n-min", "9", "--n-max", "5"])
            .status
            .code(),
        Some(2)
    );
    let out = grrforge(&["estimate", "--family", "psl", "--n", "2", "--q", "7"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("ppd"));
}

#[test]
fn violated_bound_exits_one() {
    // PSp₄(3) has 45 + 270 involutions, below the tabulated 3⁶/2
    let out = grrforge(&[
        "verify", "table2", "--family", "psp", "--n", "4", "--q", "3",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("315\t729/2\tfalse"));
    let out = grrforge(&[
        "verify", "table2", "--family", "psl", "--n", "2", "--q", "7",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("21\t49/8\ttrue"));
}

#[test]
fn config_file_and_cap_env() {
    let dir = std::env::temp_dir().join(format!("grrforge-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.conf");
    std::fs::write(&bad, "trails = 3\n").unwrap();
    let out = grrforge(&[
        "--config",
        bad.to_str().unwrap(),
        "ppd",
        "--base",
        "2",
        "--exp",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown key 'trails'"));

    let good = dir.join("good.conf");
    std::fs::write(&good, "seed = 5\ntrials = 40\n").unwrap();
    let args = [
        "--config",
        good.to_str().unwrap(),
        "estimate",
        "--family",
        "psl",
        "--n",
        "2",
        "--q",
        "4",
    ];
    let out = grrforge(&args);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let row: Vec<&str> = text.lines().nth(1).unwrap().split(',').collect();
    assert_eq!(row[5], "40");
    assert_eq!(row[12], "5");

    let capped = Command::new(env!("CARGO_BIN_EXE_grrforge"))
        .args([
            "sample",
            "involution",
            "--family",
            "psl",
            "--n",
            "2",
            "--q",
            "4",
            "--mode",
            "uniform",
        ])
        .env("GRRFORGE_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(2));
    let junk = Command::new(env!("CARGO_BIN_EXE_grrforge"))
        .args(["ppd", "--base", "2", "--exp", "3"])
        .env("GRRFORGE_CAP", "lots")
        .output()
        .unwrap();
    assert_eq!(junk.status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn grr_check_reports_psl27_verdict() {
    let dir = std::env::temp_dir().join(format!("grrforge-export-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let edges = dir.join("g.txt");
    let out = grrforge(&[
        "grr",
        "check",
        "--family",
        "psl",
        "--n",
        "2",
        "--q",
        "7",
        "--x-order",
        "7",
        "--seed",
        "3",
        "--export",
        edges.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["verdict"]["is_grr"], serde_json::json!(false));
    let text = std::fs::read_to_string(&edges).unwrap();
    assert!(text.starts_with("p cubic 168 252"));
    assert_eq!(text.lines().count(), 253);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn sample_is_reproducible() {
    let args = [
        "sample",
        "ppd-element",
        "--family",
        "psl",
        "--n",
        "3",
        "--q",
        "3",
        "--seed",
        "11",
    ];
    let a = grrforge(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&grrforge(&args)));
    let v: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(v["element"]["order"], serde_json::json!(13));
}
