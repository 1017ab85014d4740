use std::process::{Command, Output};

use serde_json::Value;
use symrank_core::cubic::hessian;
use symrank_core::parse::{infer_names, names_from_list, parse_poly, parse_rational_poly};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symrank"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid json")
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().expect("exit code")
}

fn reparses(text: &str, original: &str) {
    let names = infer_names(original).unwrap();
    let a = parse_poly(original, names.as_deref(), None).unwrap();
    let b = parse_poly(text, Some(&a.names), None).unwrap();
    assert_eq!(a.poly, b.poly, "{text} vs {original}");
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["bounds", "--poly", "x0^2 + x1"]), 2);
    assert_eq!(code(&["bounds", "--poly", "x0^2 + (1/2"]), 2);
    assert_eq!(code(&["bounds", "--poly", "x*y", "--vars", "x"]), 2);
    assert_eq!(code(&["frobnicate"]), 2);
    assert_eq!(code(&["binary-rank", "--poly", "x*y*z"]), 3);
    assert_eq!(code(&["cubic-classify", "--poly", "x^2*y"]), 3);
    assert_eq!(code(&["cubic-classify", "--poly", "i*x^3 + y^3 + z^3"]), 3);
    assert_eq!(
        code(&["limit-plane", "--normal-form", "r3.fermat", "--degree", "2"]),
        3
    );
    assert_eq!(code(&["detperm-table", "--max-n", "17"]), 4);
    assert_eq!(
        code(&[
            "detperm-table",
            "--verify-flattenings",
            "--max-verify-n",
            "5"
        ]),
        4
    );
    assert_eq!(code(&["verify-decomp", "--catalog", "nope"]), 3);
    assert_eq!(code(&["flatten-rank", "--poly", "x*y", "--s", "3"]), 3);
}

#[test]
fn polynomials_round_trip() {
    for p in [
        "x*y^2 - 3/2*y^3",
        "x^2*u + y^2*v + x*y*z",
        "x0*x1*x2 + (2+1/3i)*x2^3",
        "a*b*c + 7*c^3",
    ] {
        let v = json(&["bounds", "--poly", p]);
        reparses(v["poly"].as_str().unwrap(), p);
    }
    let v = json(&["cubic-classify", "--poly", "x^3 + x*y*z"]);
    let names = names_from_list("x,y,z");
    let f = parse_rational_poly("x^3 + x*y*z", Some(&names), None).unwrap();
    let h = parse_rational_poly(v["hessian"].as_str().unwrap(), Some(&names), None).unwrap();
    assert_eq!(h, hessian(&f).unwrap());
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["bounds", "--poly", "x^2*u + y^2*v + x*y*z"][..],
        &["paper-tables", "--which", "cubics"],
        &["limit-plane", "--five-curve"],
    ] {
        assert_eq!(run(args).stdout, run(args).stdout);
    }
}

#[test]
fn every_number_has_provenance() {
    let v = json(&["bounds", "--poly", "x1*y1*z1 + x2*y2*z2"]);
    for key in ["rank_lower", "rank_upper", "border_lower", "border_upper"] {
        assert!(
            !v[key]["provenance"].as_array().unwrap().is_empty(),
            "{key}"
        );
    }
    for c in v["contributions"].as_array().unwrap() {
        assert!(!c["provenance"].as_str().unwrap().is_empty());
    }
}

#[test]
fn flatten_rank_reports_each_s() {
    let v = json(&["flatten-rank", "--poly", "x0^2*x1^2*x2^2"]);
    let ranks: Vec<u64> = v["ranks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["rank"].as_u64().unwrap())
        .collect();
    assert_eq!(ranks, [3, 6, 7, 6, 3]);
    assert_eq!(v["border_lower"]["value"], 7);
}

#[test]
fn binary_rank_of_reducible_span() {
    let v = json(&[
        "binary-rank",
        "--poly",
        "x^3 + 3*x^2*y + 3*x*y^2 + y^3 + z^3 - z^3",
    ]);
    assert_eq!(v["rank"], 1);
    // (x+z)^2*y has a two-dimensional span
    let v = json(&["binary-rank", "--poly", "x^2*y + 2*x*y*z + y*z^2"]);
    assert_eq!(
        (v["rank"].as_u64(), v["border_rank"].as_u64()),
        (Some(3), Some(2))
    );
    assert_eq!(v["reduced_coordinates"].as_array().unwrap().len(), 2);
}

#[test]
fn decomposition_file() {
    let dir = std::env::temp_dir().join(format!("symrank-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let good = dir.join("good.txt");
    // x*y = ((x+y)^2 - (x-y)^2)/4
    std::fs::write(&good, "# x*y\n1/4 | 1, 1\n\n-1/4 | 1, -1\n").unwrap();
    let v = json(&[
        "verify-decomp",
        "--target",
        "x*y",
        "--decomp",
        good.to_str().unwrap(),
    ]);
    assert_eq!(v["verdict"]["kind"], "exact_match");
    assert_eq!(v["terms"], 2);

    let bad = dir.join("bad.txt");
    std::fs::write(&bad, "1/4 | 1, 1\n1/4 | 1, -1\n").unwrap();
    let v = json(&[
        "verify-decomp",
        "--target",
        "x*y",
        "--decomp",
        bad.to_str().unwrap(),
    ]);
    assert_eq!(v["verdict"]["kind"], "mismatch");

    let gauss = dir.join("gauss.txt");
    // x^2 - y^2 = ((x+iy)^2 + (x-iy)^2)/2
    std::fs::write(&gauss, "1/2 | 1, i\n1/2 | 1, -i\n").unwrap();
    let v = json(&[
        "verify-decomp",
        "--target",
        "x^2 - y^2",
        "--decomp",
        gauss.to_str().unwrap(),
    ]);
    assert_eq!(v["verdict"]["kind"], "exact_match");

    let malformed = dir.join("malformed.txt");
    std::fs::write(&malformed, "1/4 | 1\n").unwrap();
    assert_eq!(
        code(&[
            "verify-decomp",
            "--target",
            "x*y",
            "--decomp",
            malformed.to_str().unwrap()
        ]),
        2
    );
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn limit_plane_outputs() {
    let v = json(&["limit-plane", "--monomial", "2,1,1"]);
    assert_eq!(v["dimension"], 4);
    assert_eq!(v["contains_target"], true);
    assert_eq!(v["expected_span_match"], true);
    let v = json(&[
        "limit-plane",
        "--normal-form",
        "r4.third_order",
        "--degree",
        "5",
    ]);
    assert_eq!(v["certified"], true);
    assert_eq!(v["contains_target"], false);
    assert!(v["scaled_member"].is_string());
}
