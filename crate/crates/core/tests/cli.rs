use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_delpezzo"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    serde_json::from_str(&stdout(args)).unwrap()
}

#[test]
fn cohom_examples() {
    assert_eq!(json(&["cohom", "F", "-2", "2"])["h"], serde_json::json!([0, 3, 0, 0]));
    assert_eq!(
        json(&["cohom", "Phi", "1", "1"])["h"],
        serde_json::json!([9, 0, 0, 0, 0])
    );
    assert_eq!(json(&["cohom", "F", "0", "0"])["h"], serde_json::json!([1, 0, 0, 0]));
}

#[test]
fn cohom_over_a_twist_range() {
    let v = json(&["cohom", "F", "0", "2", "--from", "-4", "--to", "0"]);
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 5);
    // O(-4, -2) has only h^3 = -(-3)(-1)(-4)/2
    assert_eq!(rows[0]["twist"], -4);
    assert_eq!(rows[0]["table"]["h"], serde_json::json!([0, 0, 0, 6]));
    let csv = stdout(&["cohom", "F", "0", "2", "--from", "-1", "--to", "1", "--format", "csv"]);
    assert_eq!(csv.lines().count(), 4);
    assert!(csv.starts_with("twist,bundle,h0,h1,h2,h3"));
}

#[test]
fn line_bundle_and_chow() {
    let v = json(&["line-bundle", "F", "0", "2"]);
    assert_eq!(v["is_ulrich"], true);
    assert_eq!(v["h0"], 6);
    let v = json(&["chow", "F", "(h1+h2)^3"]);
    assert_eq!(v["degree"], 6);
    let v = json(&["chow", "Phi", "-eta1*eta2"]);
    assert_eq!(v["normal_form"], "-eta1*eta2");
}

#[test]
fn regions_render() {
    let svg = stdout(&["regions"]);
    assert!(svg.contains(r#"data-x1="3" data-x2="2" data-region="H0""#));
    assert!(svg.contains(r#"data-x1="-7" data-x2="2" data-region="H2_upper""#));
    for caption in ["x1+x2+1=0", "x1=-2", "x2=-2", "x1+x2+3=0"] {
        assert!(svg.contains(caption));
    }
    let ascii = stdout(&["regions", "--format", "ascii", "--min", "-3", "--max", "3"]);
    assert_eq!(ascii.lines().next().unwrap().trim_start(), "3 11.0000");
}

#[test]
fn tables() {
    let md = stdout(&["table", "section4", "--format", "markdown"]);
    assert_eq!(md.lines().count(), 2 + 9);
    let v = json(&["table", "theoremB-F", "--format", "json"]);
    let alphas: Vec<_> = v["rows"]["entries"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["alpha"].clone())
        .collect();
    assert_eq!(
        alphas,
        serde_json::json!([[0, 0], [0, 1], [1, 2], [2, 2]])
            .as_array()
            .unwrap()
            .clone()
    );
    let emb = stdout(&["table", "embeddings"]);
    assert!(emb.contains("| F1 |") && emb.contains("| Q |"));
}

#[test]
fn verify_scopes() {
    let out = stdout(&["verify", "--scope", "cohomology"]);
    assert!(out.contains("serre-duality: pass"));
    assert!(out.contains("bott-uniqueness: pass"));
    let out = stdout(&["verify", "--scope", "classify"]);
    assert!(out.contains("lemma-lvanishing-unique: pass"));
    let v = json(&["verify", "--scope", "chern", "--format", "json"]);
    assert_eq!(v["overall"], true);
}

#[test]
fn out_flag_writes_a_file() {
    let dir = std::env::temp_dir().join(format!("delpezzo-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("t.csv");
    let out = run(&["table", "ulrichF", "--format", "csv", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap().lines().count(), 4);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["cohom", "F", "x", "2"][..],
        &["cohom", "G", "0", "0"],
        &["table", "nope"],
        &["table", "section4", "--format", "svg"],
        &["regions", "--min", "-101"],
        &["regions", "--format", "json"],
        &["chow", "F", "h1 +"],
        &["verify", "--scope", "everything"],
        &["cohom", "F", "0", "0", "--from", "2", "--to", "1"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}
