use std::path::PathBuf;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = symf_cli::run(std::iter::once("symf").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn stdout(args: &[&str]) -> String {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "symf {args:?}: {err}");
    out
}

fn golden(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    std::fs::read_to_string(path).unwrap()
}

#[test]
fn golden_outputs() {
    assert_eq!(stdout(&["chartable", "5"]), golden("chartable_5.txt"));
    assert_eq!(stdout(&["youngs-rule", "3,2,1"]), golden("youngs-rule_3,2,1.txt"));
    assert_eq!(stdout(&["kostka", "3,2", "2,2,1"]), golden("kostka_3,2_2,2,1.txt"));
}

#[test]
fn json_is_stable_and_parseable() {
    let commands: [&[&str]; 6] = [
        &["chartable", "4"],
        &["youngs-rule", "3,2,1"],
        &["convert", "s:2,1", "--to", "m"],
        &["coproduct", "h:2"],
        &["rep", "standard:3", "--perm", "2 1 3"],
        &["kostka", "3,2", "2,2,1", "--list"],
    ];
    for args in commands {
        let json: Vec<&str> = ["--format", "json"].into_iter().chain(args.iter().copied()).collect();
        let first = stdout(&json);
        assert_eq!(stdout(&json), first);
        serde_json::from_str::<serde_json::Value>(&first).unwrap_or_else(|e| panic!("{args:?}: {e}"));
    }
}

#[test]
fn exact_values() {
    assert_eq!(stdout(&["convert", "s:2,1", "--to", "m"]).trim(), "m[2,1] + 2*m[1,1,1]");
    assert_eq!(stdout(&["--format", "json", "kostka", "3,2", "2,2,1"]).trim(), "\"2\"");
    assert_eq!(stdout(&["lr", "3,2,1", "2,1", "2,1"]).trim(), "2");
    assert_eq!(stdout(&["partitions", "4"]), "4\n3,1\n2,2\n2,1,1\n1,1,1,1\n");
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["--format", "json", "convert", "s:2,1", "--to", "m"])).unwrap();
    assert_eq!(v["basis"], "m");
    assert_eq!(v["terms"][1]["coeff"], "2");
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["--format", "json", "rep", "standard:3", "--perm", "2 1 3"])).unwrap();
    assert_eq!(v["matrix"], serde_json::json!([["-1", "-1"], ["0", "1"]]));
}

#[test]
fn induction_with_explicit_transversal() {
    let out = stdout(&[
        "--format",
        "json",
        "induce",
        "--subgroup",
        "1 2 3;1 3 2",
        "--transversal",
        "1 2 3;2 1 3;3 2 1",
        "--perm",
        "2 1 3",
    ]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["matrix"], serde_json::json!([["0", "1", "0"], ["1", "0", "0"], ["0", "0", "1"]]));
}

#[test]
fn exit_codes() {
    let (code, out, err) = run(&["kostka", "3,2", "2,x"]);
    assert_eq!(code, 1);
    assert!(out.is_empty());
    assert!(err.starts_with("error: ") && err.trim_end().lines().count() == 1, "{err}");
    // mismatched sizes give a zero coefficient, not an error
    assert_eq!(stdout(&["lr", "3,2", "2", "2"]).trim(), "0");
    assert_eq!(run(&["dominates", "3,2", "2,2"]).0, 1);
    assert_eq!(run(&["rep", "specht:6"]).0, 1);
    assert_eq!(run(&["bogus"]).0, 2);
    assert_eq!(run(&["kostka"]).0, 2);
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("chartable"));
}

#[test]
fn caps_come_from_flags() {
    assert_eq!(run(&["rep", "specht:6"]).0, 1);
    assert_eq!(run(&["--module-cap", "6", "decompose", "specht:3,2,1"]).0, 0);
}
