//! End-to-end tests of the command-line binary: output shapes, exit
//! codes, and determinism across repeated runs.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_permcycle"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn field_prime_text() {
    let out = run(&["field", "--q", "13"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("q = 13 = 13^1"), "{text}");
    assert!(text.contains("generator encoding: 2"), "{text}");
    assert!(text.contains("q-1 = 12 with factors [(2, 2), (3, 1)]"), "{text}");
}

#[test]
fn field_extension_default_modulus() {
    let out = run(&["field", "--p", "11", "--k", "2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["field"]["q"], 121);
    assert_eq!(v["field"]["modulus"], serde_json::json!([1, 0, 1]));
}

#[test]
fn field_even_order_rejected() {
    let out = run(&["field", "--q", "8"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).starts_with("error: "), "{}", stderr(&out));
}

#[test]
fn field_composite_order_rejected() {
    let out = run(&["field", "--q", "15"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn construct_binomial_example() {
    let out = run(&[
        "construct", "--q", "13", "--family", "bin", "--m", "3", "--units", "3,9",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["poly_text"], "3x^7+6x");
    assert_eq!(v["predicted_cycle_type"], "1+3^4");
    assert_eq!(v["verified"], true);
}

#[test]
fn construct_units_in_generator_power_notation() {
    // g = 2 in F_13, so g^4 = 3 and g^8 = 9
    let a = run(&[
        "construct", "--q", "13", "--family", "bin", "--m", "3", "--units", "g^4,g^8",
    ]);
    let b = run(&[
        "construct", "--q", "13", "--family", "bin", "--m", "3", "--units", "3,9",
    ]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn construct_trinomial_and_geom_sum_examples() {
    let out = run(&[
        "construct", "--q", "13", "--family", "tri", "--m", "4", "--units", "5,8,5",
        "--format", "text",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("poly: 3x^9+9x^5+6x"), "{}", stdout(&out));

    let out = run(&[
        "construct", "--q", "13", "--family", "geomsum", "--m", "3", "--units", "3,9",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["poly_text"], "5x^10+5x^7+5x^4+x");
}

#[test]
fn construct_equal_units_is_usage_error() {
    let out = run(&[
        "construct", "--q", "13", "--family", "bin", "--m", "3", "--units", "3,3",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("EqualUnits"), "{}", stderr(&out));
}

#[test]
fn verify_permutation_and_non_permutation() {
    let out = run(&["verify", "--q", "13", "--poly", "3x^7+6x"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["is_permutation"], true);
    assert_eq!(v["cycle_type"], "1+3^4");

    let out = run(&["verify", "--q", "13", "--poly", "x"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["cycle_type"], "1^13");

    let out = run(&["verify", "--q", "13", "--poly", "x^2"]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["is_permutation"], false);
    assert_eq!(v["cycle_type"], serde_json::Value::Null);
}

#[test]
fn verify_bad_syntax_is_usage_error() {
    let out = run(&["verify", "--q", "13", "--poly", "3y+1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn enumerate_streams_members_then_summary() {
    let out = run(&["enumerate", "--q", "13", "--family", "bin", "--m", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    for line in &lines[..2] {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["family"], "bin");
        assert_eq!(v["m"], 3);
        assert_eq!(v["d"], 4);
    }
    let summary: serde_json::Value = serde_json::from_str(lines[2]).unwrap();
    assert_eq!(summary["count"], 2);
    assert_eq!(summary["closed_form"], 2);
    assert_eq!(summary["verified"], true);
}

#[test]
fn enumerate_bad_subgroup_order() {
    let out = run(&["enumerate", "--q", "13", "--family", "bin", "--m", "5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn enumerate_distinct_count() {
    let out = run(&[
        "enumerate", "--q", "13", "--family", "bin", "--m", "3", "--distinct",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let last = stdout(&out);
    let summary: serde_json::Value =
        serde_json::from_str(last.lines().last().unwrap()).unwrap();
    assert_eq!(summary["distinct"], 2);
}

#[test]
fn table_empty_field_prints_header_only() {
    let out = run(&["table", "--q", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "family\tm\td\tcycle_type\tcount\tverified\n");
}

#[test]
fn table_f89_rows() {
    let out = run(&["table", "--q", "89", "--verify-all"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("bin\t11\t8\t1+11^8\t90\ttrue"), "{text}");
    assert!(text.contains("bin\t22\t4\t1+22^4\t90\ttrue"), "{text}");
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["table", "--q", "89"],
        vec!["enumerate", "--q", "49", "--family", "tri", "--m", "8"],
        vec!["field", "--p", "3", "--k", "4", "--format", "json"],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert_eq!(a.status.code(), Some(0), "{args:?}");
        assert_eq!(stdout(&a), stdout(&b), "{args:?}");
    }
}
