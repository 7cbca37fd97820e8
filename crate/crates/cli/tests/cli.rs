use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn toricg(args: &[&str]) -> Output {
    toricg_env(args, &[])
}

fn toricg_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_toricg"));
    cmd.args(args).env_remove("TORICG_THREADS");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("toricg runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("toricg-cli-tests-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn enumerate_counts() {
    for (object, expected) in [
        ("dyck", "5"),
        ("parking_functions_123", "11"),
        ("parking_trees", "36"),
    ] {
        let out = toricg(&["enumerate", object, "3", "--count-only"]);
        assert!(out.status.success(), "{object}: {}", stderr(&out));
        assert_eq!(stdout(&out).trim(), expected, "{object}");
    }
}

#[test]
fn enumerate_lists_one_object_per_line() {
    let out = toricg(&["enumerate", "dyck", "3"]);
    assert_eq!(
        stdout(&out).lines().collect::<Vec<_>>(),
        ["UUUDDD", "UUDUDD", "UUDDUD", "UDUUDD", "UDUDUD"]
    );
    let out = toricg(&["enumerate", "b_perms", "2", "--family", "permutahedron"]);
    assert_eq!(stdout(&out).lines().count(), 6);
    let out = toricg(&["enumerate", "b_perms", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn csv_pads_with_empty_cells() {
    let out = toricg(&["table", "--family", "associahedron", "--max", "4"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "n,g0,g1,g2\n1,1,,\n2,1,2,\n3,1,10,\n4,1,37,10\n"
    );
}

#[test]
fn json_table_is_versioned() {
    let out = toricg(&[
        "table",
        "--family",
        "permutahedron",
        "--max",
        "4",
        "--format",
        "json",
    ]);
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["schema"], "toricg/1");
    assert_eq!(doc["rows"][3]["n"], 4);
    assert_eq!(doc["rows"][3]["g"], serde_json::json!([1, 115, 40]));
}

#[test]
fn large_coefficients_become_strings_in_json() {
    let out = toricg(&[
        "table",
        "--family",
        "permutahedron",
        "--max",
        "30",
        "--format",
        "json",
        "--unsafe-max",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    let row = &doc["rows"][29]["g"];
    assert!(row[0].is_number());
    assert!(row.as_array().unwrap().iter().any(Value::is_string));
}

#[test]
fn route_all_matches_gamma() {
    for family in [
        "cube",
        "associahedron",
        "cyclohedron",
        "permutahedron",
        "stanley_pitman",
        "interpolation:2",
    ] {
        let all = toricg(&["table", "--family", family, "--max", "5", "--route", "all"]);
        let gamma = toricg(&[
            "table", "--family", family, "--max", "5", "--route", "gamma",
        ]);
        assert!(all.status.success(), "{family}: {}", stderr(&all));
        assert_eq!(all.stdout, gamma.stdout, "{family}");
    }
}

#[test]
fn output_is_independent_of_thread_count() {
    let runs: &[&[&str]] = &[
        &[
            "table",
            "--family",
            "cyclohedron",
            "--max",
            "6",
            "--route",
            "all",
        ],
        &["verify", "nestohedra", "5"],
        &["enumerate", "parking_trees", "3"],
    ];
    for args in runs {
        let one = toricg_env(args, &[("TORICG_THREADS", "1")]);
        let four = toricg_env(args, &[("TORICG_THREADS", "4")]);
        assert!(one.status.success(), "{args:?}: {}", stderr(&one));
        assert_eq!(one.stdout, four.stdout, "{args:?}");
        assert_eq!(one.stdout, toricg(args).stdout, "{args:?}");
    }
    let bad = toricg_env(
        &["table", "--family", "cube", "--max", "2"],
        &[("TORICG_THREADS", "0")],
    );
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn verify_reports_json() {
    let out = toricg(&["verify", "series", "6"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["schema"], "toricg/1");
    assert_eq!(doc["suite"], "series");
    assert_eq!(doc["passed"], true);
    assert!(doc["checks"].as_array().unwrap().len() >= 7);

    let out = toricg(&["verify", "conjectures", "6"]);
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    let probes = doc["checks"][0]["outcomes"].as_array().unwrap();
    assert!(probes.iter().any(|o| o["subject"] == "g(6,3)"));

    assert_eq!(
        toricg(&["verify", "everything", "3"]).status.code(),
        Some(2)
    );
}

#[test]
fn building_set_files() {
    let path = temp_file(
        "path.json",
        r#"{"ground_size": 4, "sets": [[1], [2], [3], [4], [1, 2], [2, 3], [3, 4], [1, 2, 3], [2, 3, 4], [1, 2, 3, 4]]}"#,
    );
    let out = toricg(&[
        "table",
        "--building-set",
        path.to_str().unwrap(),
        "--route",
        "all",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert_eq!(stdout(&out), "n,g0,g1\n3,1,10\n");

    let broken = temp_file("broken.json", "{\"ground_size\": 3,\n \"sets\": [[1], [2]");
    let out = toricg(&["table", "--building-set", broken.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 2"), "{}", stderr(&out));

    let cycle = temp_file(
        "cycle.json",
        r#"{"ground_size": 4, "sets": [[1], [2], [3], [4], [1, 2], [2, 3], [3, 4], [1, 4],
            [1, 2, 3], [2, 3, 4], [1, 2, 4], [1, 3, 4], [1, 2, 3, 4]]}"#,
    );
    let out = toricg(&["table", "--building-set", cycle.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("not chordal"));

    let missing = toricg(&["table", "--building-set", "/nonexistent/bs.json"]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn capacity_errors_exit_3() {
    let runs: &[&[&str]] = &[
        &["table", "--family", "associahedron", "--max", "13"],
        &[
            "table",
            "--family",
            "permutahedron",
            "--max",
            "7",
            "--route",
            "direct",
        ],
        &["enumerate", "parking_trees", "8", "--count-only"],
        &["verify", "bijections", "9"],
    ];
    for args in runs {
        let out = toricg(args);
        assert_eq!(out.status.code(), Some(3), "{args:?}");
        assert!(stderr(&out).contains("capacity"), "{args:?}");
    }
    let lifted = toricg(&[
        "table",
        "--family",
        "associahedron",
        "--max",
        "13",
        "--unsafe-max",
    ]);
    assert!(lifted.status.success());
}

#[test]
fn usage_errors_exit_2() {
    let runs: &[&[&str]] = &[
        &[],
        &["table", "--family", "dodecahedron", "--max", "3"],
        &["table", "--family", "cube"],
        &[
            "table", "--family", "cube", "--max", "3", "--route", "fastest",
        ],
        &["table", "--family", "cube", "--max", "3", "--format", "xml"],
        &[
            "table",
            "--family",
            "cyclohedron",
            "--max",
            "3",
            "--route",
            "direct",
            "--format",
            "csv",
            "--building-set",
            "x.json",
        ],
        &["enumerate", "catalan", "3"],
    ];
    for args in runs {
        assert_eq!(toricg(args).status.code(), Some(2), "{args:?}");
    }
}
