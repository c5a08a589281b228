use std::path::Path;
use std::process::{Command, Output};

fn charclass(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_charclass"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut a = vec!["--format", "json"];
    a.extend_from_slice(args);
    let o = charclass(&a);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    serde_json::from_slice(&o.stdout).unwrap()
}

fn table_value(report: &serde_json::Value, caption: &str, key: &str) -> String {
    let t = report["tables"]
        .as_array()
        .unwrap()
        .iter()
        .find(|t| t["caption"] == caption)
        .unwrap();
    let row = t["rows"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r[0] == key)
        .unwrap();
    row[1].as_str().unwrap().to_string()
}

#[test]
fn exit_codes() {
    assert_eq!(charclass(&["invariants", "cubic4"]).status.code(), Some(0));
    assert_eq!(charclass(&["invariants", "nosuch"]).status.code(), Some(2));
    assert_eq!(
        charclass(&["compare", "k3", "cubic4"]).status.code(),
        Some(2)
    );
    assert_eq!(
        charclass(&["deduce", "no-such-pipeline"]).status.code(),
        Some(2)
    );
    assert_eq!(
        charclass(&["deduce", "ricci-flat-exclusion", "k3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(charclass(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(charclass(&["report-all"]).status.code(), Some(0));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["report-all"][..],
        &["invariants", "hilb2_k3"],
        &["--format", "json", "deduce", "hk-pipeline"],
    ] {
        assert_eq!(charclass(args).stdout, charclass(args).stdout, "{args:?}");
    }
}

#[test]
fn formats_carry_the_same_values() {
    let j = json(&["invariants", "cubic4"]);
    let md = stdout(&charclass(&["invariants", "cubic4"]));
    for (caption, key, want) in [
        ("Betti numbers", "b4", "23"),
        ("Betti numbers", "euler", "27"),
        ("Chern numbers", "c4", "27"),
    ] {
        let v = table_value(&j, caption, key);
        assert_eq!(v, want);
        assert!(md.contains(&format!("| {key} | {v} |")), "{key}");
    }
}

#[test]
fn compare_reports_the_first_obstruction() {
    let j = json(&["compare", "cubic4", "hilb2_k3"]);
    assert_eq!(j["verdict"], "obstructed (b2: 1 vs 23)");
    let j = json(&["compare", "k3", "kodaira_w_surface"]);
    assert_eq!(
        j["verdict"],
        "no obstruction found among computed invariants"
    );
}

#[test]
fn out_flag_writes_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.md");
    let o = charclass(&[
        "--out",
        path.to_str().unwrap(),
        "deduce",
        "cy-hk",
        "--n",
        "3",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text, stdout(&charclass(&["deduce", "cy-hk", "--n", "3"])));
    assert!(text.contains("Pinned verdict: match"));
}

#[test]
fn wrong_pin_fails() {
    let dir = tempfile::tempdir().unwrap();
    let pins = dir.path().join("pins.toml");
    std::fs::write(
        &pins,
        "[[verdict]]\npipeline = \"general-type-index\"\ntarget = \"cubic4\"\nsummary = \"any general-type partner has K_Y = 4·L_Y\"\n",
    )
    .unwrap();
    let p = pins.to_str().unwrap();
    let o = charclass(&["--pin", p, "deduce", "general-type-index", "cubic4"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("Pinned verdict: mismatch"));
    assert_eq!(
        charclass(&["--pin", p, "report-all"]).status.code(),
        Some(1)
    );
    assert_eq!(
        charclass(&["--pin", p, "deduce", "general-type-index", "quadric4"])
            .status
            .code(),
        Some(0)
    );
}

fn write_record(dir: &Path, name: &str) -> String {
    let r = charclass::catalog::build_builtin(name).unwrap();
    let text = charclass::catalog::record_to_toml(&r).unwrap();
    std::fs::write(dir.join(format!("{name}.toml")), &text).unwrap();
    text
}

#[test]
fn catalog_directory() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    write_record(dir.path(), "k3");
    let renamed = write_record(dir.path(), "quadric4")
        .replace("name = \"quadric4\"", "name = \"my_quadric\"");
    std::fs::write(dir.path().join("my_quadric.toml"), renamed).unwrap();

    let o = charclass(&["--catalog", d, "invariants", "my_quadric"]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    assert!(stdout(&o).contains("my_quadric"));
    assert_eq!(
        charclass(&["--catalog", d, "report-all"]).status.code(),
        Some(0)
    );

    let bad = write_record(dir.path(), "cubic4").replace("c4 = \"27\"", "c4 = \"28\"");
    std::fs::write(dir.path().join("cubic4.toml"), bad).unwrap();
    let o = charclass(&["--catalog", d, "report-all"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    let fail = out
        .lines()
        .find(|l| l.contains("cubic4.toml"))
        .expect("row for the file");
    assert!(
        fail.ends_with("| fail |") && fail.contains("stored 28"),
        "{fail}"
    );
}
