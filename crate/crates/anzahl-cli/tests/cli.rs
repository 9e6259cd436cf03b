//! End-to-end tests driving the built binary: exact stdout for the worked
//! examples, the exit-code contract, table completeness, and determinism.

use std::process::{Command, Output};

use anzahl::counting::{rho, FormType, ProfileParams};
use anzahl::qseries::gauss_binomial;
use anzahl::verify::formula_poly;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_anzahl"))
        .args(args)
        .output()
        .expect("binary spawns")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn eval_prints_the_conic_point_count() {
    let out = run(&["eval", "alpha", "--i", "1", "--j", "1", "--delta", "1", "--n", "3", "--eps", "0"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out), "q + 1\n");
}

#[test]
fn eval_prints_symbolic_and_numeric_when_q_is_given() {
    let out = run(&[
        "eval", "gamma", "--i", "0", "--j", "3", "--delta", "0", "--lambda", "-1", "--n", "5",
        "--eps", "0", "--k", "2", "--zeta", "1", "--eta", "0", "--q", "3",
    ]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out), "1/2*q^6 - 1/2*q^4 = 324\n");
}

#[test]
fn eval_beta_nu_splits_by_intersection_type() {
    let out = run(&[
        "eval", "beta_nu", "--i", "0", "--j", "3", "--delta", "0", "--n", "6", "--eps", "1",
        "--k", "5", "--zeta", "0", "--nu", "1", "--q", "3",
    ]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out), "1/2*q^2 + 1/2*q = 6\n");
}

#[test]
fn eval_rho_agrees_with_the_library_ratio() {
    let out = run(&[
        "eval", "rho", "--j", "2", "--delta", "1", "--k", "2", "--zeta", "1", "--n", "4",
        "--eps", "1", "--eta", "1", "--q", "3",
    ]);
    assert_eq!(exit_code(&out), 0);
    let expected = rho(
        2,
        FormType::Hyperbolic,
        2,
        FormType::Hyperbolic,
        4,
        FormType::Hyperbolic,
        FormType::Hyperbolic,
    );
    let line = stdout(&out);
    assert!(line.ends_with(&format!(" = {}\n", expected.value_at(3))), "got {line}");
}

#[test]
fn eval_rejects_an_undefined_perp_type_with_exit_2() {
    let out = run(&[
        "eval", "alpha", "--i", "0", "--j", "1", "--delta", "0", "--n", "4", "--eps", "1",
        "--lambda", "1",
    ]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr(&out).contains("perp type not defined: n(j-i) even"), "{}", stderr(&out));
}

#[test]
fn malformed_input_exits_3() {
    // missing a required flag
    let out = run(&["eval", "beta", "--i", "0", "--j", "2", "--delta", "1", "--n", "4", "--eps", "1"]);
    assert_eq!(exit_code(&out), 3);
    assert!(stderr(&out).contains("--k"), "{}", stderr(&out));
    // a flag from the wrong family
    let out = run(&[
        "eval", "alpha", "--i", "1", "--j", "1", "--delta", "1", "--n", "3", "--eps", "0",
        "--k", "2",
    ]);
    assert_eq!(exit_code(&out), 3);
    // a type outside {-1, 0, 1}
    let out = run(&["eval", "alpha", "--i", "1", "--j", "1", "--delta", "2", "--n", "3", "--eps", "0"]);
    assert_eq!(exit_code(&out), 3);
    // q that is not an odd prime power
    let out = run(&[
        "eval", "alpha", "--i", "1", "--j", "1", "--delta", "1", "--n", "3", "--eps", "0",
        "--q", "15",
    ]);
    assert_eq!(exit_code(&out), 3);
    // an unknown subcommand is a clap error, remapped to the same code
    let out = run(&["frobnicate"]);
    assert_eq!(exit_code(&out), 3);
}

#[test]
fn help_and_version_exit_0() {
    assert_eq!(exit_code(&run(&["--help"])), 0);
    assert_eq!(exit_code(&run(&["--version"])), 0);
    assert_eq!(exit_code(&run(&["eval", "--help"])), 0);
}

#[test]
fn alpha_table_rows_sum_to_the_subspace_totals() {
    let out = run(&["table", "alpha", "--n", "5", "--q", "3"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    let mut rows = 0usize;
    let mut sums = [0i64; 6];
    for line in text.lines().skip(1) {
        let cells: Vec<&str> = line.split(',').collect();
        rows += 1;
        let j: usize = cells[5].parse().unwrap();
        sums[j] += cells[14].parse::<i64>().unwrap();
    }
    assert_eq!(rows, 14);
    for j in 1..=5i64 {
        let total = gauss_binomial(5, j).eval_at_int(3).unwrap();
        assert_eq!(sums[j as usize].to_string(), total.to_string(), "j = {j}");
    }
}

#[test]
fn gamma_table_contains_both_conic_plane_counts() {
    let out = run(&["table", "gamma", "--n", "5", "--q", "3"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    // the two perp-type classes of conic planes, extended by secant lines
    assert!(text.contains("gamma,3,5,0,0,3,0,-1,2,1,,,0,1/2*q^6 - 1/2*q^4,324"), "{text}");
    assert!(text.contains("gamma,3,5,0,0,3,0,1,2,1,,,0,1/2*q^6 - 1/2*q^4 + q^2,333"), "{text}");
}

#[test]
fn empty_table_is_header_only_and_exits_0() {
    let out = run(&["table", "alpha", "--n", "0"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out).lines().count(), 1);
    // parity-impossible ambient type: no valid profiles either
    let out = run(&["table", "alpha", "--n", "4", "--eps", "0"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out).lines().count(), 1);
}

#[test]
fn table_json_rows_round_trip_through_the_library() {
    let out = run(&["table", "beta", "--n", "4", "--q", "5", "--format", "json", "--no-timestamp"]);
    assert_eq!(exit_code(&out), 0);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(doc["meta"]["command"], "table");
    let reports = doc["reports"].as_array().unwrap();
    assert!(!reports.is_empty());
    let form = |v: &serde_json::Value| FormType::from_sign(v.as_i64().unwrap()).unwrap();
    let opt_form = |v: &serde_json::Value| v.as_i64().map(|s| FormType::from_sign(s).unwrap());
    for row in reports {
        let p = ProfileParams::beta(
            row["i"].as_i64().unwrap(),
            row["j"].as_i64().unwrap(),
            form(&row["delta"]),
            opt_form(&row["lambda"]),
            row["n"].as_i64().unwrap(),
            form(&row["eps"]),
            row["k"].as_i64().unwrap(),
            form(&row["zeta"]),
            opt_form(&row["nu"]),
        );
        let poly = formula_poly(anzahl::counting::Family::Beta, &p);
        assert_eq!(poly.to_string(), row["symbolic"].as_str().unwrap());
        assert_eq!(
            poly.eval_at_int(5).unwrap().to_string(),
            row["numeric"].as_str().unwrap(),
            "row {row}"
        );
    }
}

#[test]
fn identical_invocations_are_byte_identical() {
    let a = run(&["table", "gamma", "--n", "4", "--q", "3"]);
    let b = run(&["table", "gamma", "--n", "4", "--q", "3"]);
    assert_eq!(stdout(&a), stdout(&b));
    let a = run(&["table", "gamma", "--n", "4", "--format", "json", "--no-timestamp"]);
    let b = run(&["table", "gamma", "--n", "4", "--format", "json", "--no-timestamp"]);
    assert_eq!(stdout(&a), stdout(&b));
    // without the flag a timestamp is present
    let out = run(&["table", "gamma", "--n", "4", "--format", "json"]);
    assert!(stdout(&out).contains("timestamp"));
}

#[test]
fn verify_identities_passes_and_reports_check_counts() {
    let out = run(&["verify", "identities", "--n-max", "4"]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout(&out).contains("identities (n <= 4):"), "{}", stdout(&out));
    assert!(stdout(&out).contains("0 mismatches"));
}

#[test]
fn verify_oracle_passes_on_small_dimensions() {
    let out = run(&["verify", "oracle", "--n-max", "3", "--primes", "3,5", "--jobs", "2"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    for family in ["alpha", "beta", "gamma", "rho"] {
        assert!(text.contains(&format!("oracle {family}:")), "{text}");
    }
    assert!(text.contains("0 mismatches"));
}

#[test]
fn verify_rejects_an_even_modulus_with_exit_3() {
    let out = run(&["verify", "oracle", "--primes", "4"]);
    assert_eq!(exit_code(&out), 3);
    assert!(stderr(&out).contains("odd prime"), "{}", stderr(&out));
}

#[test]
fn verify_csv_reports_cover_both_kinds() {
    let out = run(&[
        "verify", "all", "--n-max", "2", "--primes", "3", "--format", "csv",
    ]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "kind,id,params,q,lhs,rhs,status,reason");
    assert!(text.lines().any(|l| l.starts_with("identity,")));
    assert!(text.lines().any(|l| l.starts_with("sweep,alpha,")));
    assert!(!text.contains(",mismatch,"));
}
