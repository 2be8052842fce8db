use std::process::{Command, Output};

use motivic_core::combinatorics::partitions_of;
use motivic_core::motivic::gl_polynomial;
use motivic_core::{LaurentPolynomial, MultiSeries};
use num_bigint::BigInt;
use serde_json::Value;

fn motivic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_motivic")).args(args).env_remove("MOTIVIC_DEPTH").output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = motivic(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    motivic(args).status.code().expect("exited")
}

#[test]
fn class_examples() {
    assert_eq!(stdout(&["class", "--cn", "2"]), "L^6 + L^5 - L^3\n");
    assert_eq!(stdout(&["class", "--calpha", "1,1"]), "L^6\n");
    assert_eq!(stdout(&["class", "--cn", "1"]), "L^2\n");
    assert_eq!(stdout(&["class", "--dims", "1,1"]), "L^3 + L^2 - L\n");
    let json: Value = serde_json::from_str(&stdout(&["class", "--calpha", "2", "--json"])).unwrap();
    assert_eq!(json["class"], "L^5 - L^3");
    assert_eq!(json["terms"][1]["exp"], 3);
    assert_eq!(json["terms"][1]["coeff"], "-1");
}

#[test]
fn trivial_series() {
    assert_eq!(stdout(&["series", "--theorem", "feit-fine", "--order", "0"]), "1\n");
}

#[test]
fn euler_series_matches_partition_counts() {
    let json: Value =
        serde_json::from_str(&stdout(&["series", "--theorem", "euler", "--order", "3", "--depth", "10", "--json"]))
            .unwrap();
    let s: MultiSeries = serde_json::from_value(json["series"].clone()).unwrap();
    // 1/((1-q)...(1-q^n)) counts partitions of j into parts of size at most n
    for n in 1..=3u32 {
        let c = s.coeff(&[n]).unwrap();
        assert!(c.window_low() <= -10);
        for j in 0..=10u32 {
            let count = partitions_of(j).iter().filter(|p| p.parts().iter().all(|&x| x <= n)).count();
            assert_eq!(c.coeff(-i64::from(j)), Some(BigInt::from(count)), "t^{n} L^-{j}");
        }
    }
    let text = stdout(&["series", "--theorem", "euler", "--order", "3", "--depth", "10"]);
    assert_eq!(text.lines().count(), 4);
    assert!(text.lines().nth(1).unwrap().ends_with(")*t"));
}

#[test]
fn cyclic_series_coefficient_collapses() {
    let json: Value =
        serde_json::from_str(&stdout(&["series", "--theorem", "cyclic", "--r", "2", "--order", "2", "--json"]))
            .unwrap();
    assert_eq!(json["r"], 2);
    let s: MultiSeries = serde_json::from_value(json["series"].clone()).unwrap();
    let gl = &gl_polynomial(1) * &gl_polynomial(1);
    let class = gl.mul_class(s.coeff(&[1, 1]).unwrap()).to_laurent_polynomial(3).unwrap();
    assert_eq!(class, LaurentPolynomial::from_terms([(3, 1), (2, 1), (1, -1)]));
}

#[test]
fn verify_examples() {
    let json: Value =
        serde_json::from_str(&stdout(&["verify", "--commuting", "--n", "2", "--q", "2,3", "--json"])).unwrap();
    assert_eq!(json["pass"], true);
    let observed: Vec<&str> =
        json["checks"].as_array().unwrap().iter().map(|c| c["observed"].as_str().unwrap()).collect();
    assert_eq!(observed, ["88", "945"]);
    assert!(json["checks"][0]["ms"].is_u64());

    let text = stdout(&["verify", "--cyclic", "--dims", "1,1", "--q", "2"]);
    assert!(text.contains("expected 10, observed 10"), "{text}");
    assert!(text.ends_with("PASS\n"));

    let json: Value = serde_json::from_str(&stdout(&["verify", "--jordan", "--n", "2", "--q", "2", "--json"])).unwrap();
    assert_eq!(json["target"]["classes"]["[C(1,1)]"], "L^6");
    let observed: Vec<&str> =
        json["checks"].as_array().unwrap().iter().map(|c| c["observed"].as_str().unwrap()).collect();
    assert_eq!(observed, ["24", "64"]);

    let json: Value =
        serde_json::from_str(&stdout(&["verify", "--axioms", "--trials", "20", "--order", "6", "--json"])).unwrap();
    assert_eq!(json["pass"], true);
    assert_eq!(json["checks"].as_array().unwrap().len(), 140);
}

#[test]
fn identities_pass() {
    let text = stdout(&["verify", "--identities", "--order", "4", "--no-timing"]);
    assert!(text.ends_with("PASS\n"));
    assert!(!text.contains("[FAIL]"));
    assert!(!text.contains(" ms)"));
}

#[test]
fn output_is_stable_across_threads() {
    let base = ["verify", "--commuting", "--n", "3", "--q", "2,3", "--json", "--no-timing"];
    let one = stdout(&[&base[..], &["--threads", "1"]].concat());
    let four = stdout(&[&base[..], &["--threads", "4"]].concat());
    assert_eq!(one, four);
    let json: Value = serde_json::from_str(&one).unwrap();
    assert!(json["checks"].as_array().unwrap().iter().all(|c| c["ms"] == 0));
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["verify", "--commuting", "--n", "4", "--q", "3", "--budget", "1000"]), 3);
    assert_eq!(code(&["verify", "--commuting", "--n", "2", "--q", "4"]), 2);
    assert_eq!(code(&["series", "--theorem", "cyclic", "--order", "2"]), 2);
    assert_eq!(code(&["series", "--theorem", "euler", "--order", "2", "--r", "2"]), 2);
    assert_eq!(code(&["series", "--theorem", "euler", "--order", "2", "--depth", "4"]), 2);
    assert_eq!(code(&["class", "--cn", "7"]), 2);
    assert_eq!(code(&["class", "--cn", "2", "--calpha", "2"]), 2);
    assert_eq!(code(&["class", "--cn", "3", "--depth", "10"]), 2);
    assert_eq!(code(&["verify", "--commuting"]), 2);
    assert_eq!(code(&["bogus"]), 2);
    assert_eq!(code(&["--help"]), 0);
}

#[test]
fn depth_from_environment() {
    let run = |depth: &str| {
        Command::new(env!("CARGO_BIN_EXE_motivic"))
            .args(["class", "--cn", "2"])
            .env("MOTIVIC_DEPTH", depth)
            .output()
            .unwrap()
    };
    assert_eq!(run("10").status.code(), Some(2));
    let ok = run("30");
    assert!(ok.status.success());
    assert_eq!(String::from_utf8(ok.stdout).unwrap(), "L^6 + L^5 - L^3\n");
}
