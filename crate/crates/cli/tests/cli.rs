//! End-to-end tests of the `antiassoc` binary: report fields, exit codes,
//! determinism, and the discrepancy warnings.

use antiassoc::cohomology::delta1;
use antiassoc::fixtures;
use antiassoc::io::{algebra_to_json, map_to_json};
use antiassoc::matrix::Matrix;
use antiassoc::rat::rint;
use serde_json::Value;
use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_antiassoc"))
}

fn fixtures_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn faa1_path() -> String {
    fixtures_dir().join("faa1.alg").display().to_string()
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn run_json(args: &[&str], expect_code: i32) -> Value {
    let out = run(args);
    assert_eq!(
        out.status.code(),
        Some(expect_code),
        "args {args:?}; stdout:\n{}",
        String::from_utf8_lossy(&out.stdout)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn ok(args: &[&str]) -> Value {
    run_json(args, 0)
}

#[test]
fn check_reports_the_anti_associative_identity_on_the_shipped_fixture() {
    let doc = ok(&["check", &faa1_path(), "--identity", "anti-associative"]);
    assert_eq!(doc["command"], "check");
    assert_eq!(doc["results"]["identities"][0]["identity"], "anti-associative");
    assert_eq!(doc["results"]["identities"][0]["holds"], true);
    assert_eq!(doc["results"]["nilindex"], 4);
    // without --identity all nine identities are checked
    let all = ok(&["check", &faa1_path()]);
    assert_eq!(all["results"]["identities"].as_array().unwrap().len(), 9);
}

#[test]
fn free_aa_reports_the_dimension_and_is_byte_deterministic() {
    let doc = ok(&["free-aa", "-k", "2"]);
    assert_eq!(doc["results"]["dim"], 14);
    assert_eq!(doc["results"]["component_dims"], serde_json::json!([2, 4, 8]));
    let a = run(&["free-aa", "-k", "2"]);
    let b = run(&["free-aa", "-k", "2"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn free_builders_enforce_generator_guards() {
    let doc = run_json(&["free-aa", "-k", "5"], 1);
    assert_eq!(doc["error"]["kind"], "guard-exceeded");
    assert_eq!(run(&["free-comm", "-p", "13"]).status.code(), Some(1));
    assert_eq!(run(&["free-anticomm", "-p", "9"]).status.code(), Some(1));
}

#[test]
fn free_jj_dim_reports_components_and_guards_the_degree() {
    let doc = ok(&["free-jj-dim", "-p", "2", "-d", "2"]);
    assert_eq!(doc["results"]["dim"], 3);
    let deg4 = ok(&["free-jj-dim", "-p", "2", "-d", "4"]);
    assert_eq!(deg4["results"]["nested_stage_dim"], 4);
    let doc = run_json(&["free-jj-dim", "-p", "2", "-d", "7"], 1);
    assert_eq!(doc["error"]["kind"], "guard-exceeded");
}

#[test]
fn derivation_spaces_of_the_free_one_generator_algebra() {
    let doc = ok(&["derivations", &faa1_path()]);
    assert_eq!(doc["results"]["dim"], 3);
    assert_eq!(doc["results"]["space"], "derivations");
    let anti = ok(&["derivations", &faa1_path(), "--anti"]);
    assert_eq!(anti["results"]["dim"], 3);
    let inner = ok(&["derivations", &faa1_path(), "--anti", "--inner"]);
    assert_eq!(inner["results"]["dim"], 1);
    // --inner without --anti is not a defined space
    assert_eq!(
        run(&["derivations", &faa1_path(), "--inner"]).status.code(),
        Some(1)
    );
}

#[test]
fn homology_surfaces_the_kernel_discrepancy_warnings() {
    let doc = ok(&["homology", &faa1_path(), "--degree", "1"]);
    assert_eq!(doc["results"]["ker_dim"], 5);
    assert_eq!(doc["results"]["im_dim"], 4);
    assert_eq!(doc["results"]["homology_dim"], 1);
    assert_eq!(doc["results"]["containment_holds"], true);
    let warnings = doc["warnings"].as_array().unwrap();
    assert_eq!(warnings.len(), 2);
    assert!(warnings.iter().any(|w| w.as_str().unwrap().contains("e1^e3")));
}

#[test]
fn cohomology_dims_and_the_degree_three_falsification_flags() {
    let doc = ok(&["cohomology", &faa1_path()]);
    assert_eq!(doc["results"]["h1"], 3);
    assert_eq!(doc["results"]["h2"], 0);
    assert_eq!(doc["results"]["z3"], 60);
    let d3 = ok(&["cohomology", &faa1_path(), "--degree", "3"]);
    assert_eq!(
        d3["results"]["delta3_after_delta2_vanishes"],
        serde_json::json!([true, true, false, true])
    );
    assert_eq!(d3["warnings"].as_array().unwrap().len(), 1);
}

#[test]
fn jacobi_jordan_cohomology_paths() {
    let jj3 = fixtures_dir().join("jj-dim3.alg").display().to_string();
    let doc = ok(&["cohomology", &jj3, "--jj"]);
    assert_eq!(doc["results"]["cocycle_dim"], 7);
    let d3 = ok(&["cohomology", &jj3, "--jj", "--degree", "3"]);
    assert_eq!(
        d3["results"]["delta3_after_delta2_vanishes"],
        serde_json::json!([true, true, true, false])
    );
    assert_eq!(d3["warnings"].as_array().unwrap().len(), 1);
    // the Jacobi-Jordan complex needs a commutative algebra
    assert_eq!(
        run(&["cohomology", &faa1_path(), "--jj"]).status.code(),
        Some(1)
    );
}

#[test]
fn operad_presets_report_dims_and_reference_discrepancies() {
    let aass = ok(&["operad", "--preset", "aass"]);
    assert_eq!(aass["results"]["dims"], serde_json::json!([1, 2, 6, 0, 0]));
    assert!(aass["warnings"].as_array().unwrap().is_empty());

    let jajo = ok(&["operad", "--preset", "jajo"]);
    assert_eq!(jajo["results"]["dims"], serde_json::json!([1, 1, 2, 5, 15]));
    let warnings = jajo["warnings"].as_array().unwrap();
    assert_eq!(warnings.len(), 1);
    assert!(warnings[0].as_str().unwrap().contains("23"));
    assert_eq!(jajo["results"]["reference_dims"]["5"], 23);

    let dual = ok(&["operad", "--preset", "jajo-dual"]);
    assert_eq!(dual["results"]["dims"], serde_json::json!([1, 1, 1, 0, 0]));
    assert!(dual["warnings"].as_array().unwrap().is_empty());
}

#[test]
fn operad_accepts_a_custom_presentation_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("aass.json");
    std::fs::write(
        &path,
        r#"{
          "symmetry": "non-symmetric",
          "relations": [[
            {"coeff": "1", "tree": [1, [2, 3]]},
            {"coeff": "1", "tree": [[1, 2], 3]}
          ]]
        }"#,
    )
    .unwrap();
    let doc = ok(&["operad", "--relations", &path.display().to_string()]);
    assert_eq!(doc["results"]["dims"], serde_json::json!([1, 2, 6, 0, 0]));
    // preset and relations together are rejected
    assert_eq!(
        run(&["operad", "--preset", "aass", "--relations", &path.display().to_string()])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn koszul_reports_the_sign_obstructions() {
    let jajo = ok(&["koszul", "--preset", "jajo", "--order", "7"]);
    assert_eq!(jajo["results"]["verdict"]["koszul"], "not-koszul");
    assert_eq!(jajo["results"]["verdict"]["order"], 6);
    assert_eq!(jajo["results"]["verdict"]["implied_dim"], "-35");
    let coeffs = jajo["results"]["inverse"]["coeffs"].as_array().unwrap();
    assert_eq!(coeffs[6], "-7/144");
    assert_eq!(coeffs[7], "13/72");
    // the obstruction sits above the certified arity range, so a warning
    // spells out the zero-extension assumption
    assert_eq!(jajo["warnings"].as_array().unwrap().len(), 1);

    let aass = ok(&["koszul", "--preset", "aass", "--order", "9"]);
    assert_eq!(aass["results"]["verdict"]["order"], 5);
    assert_eq!(aass["results"]["verdict"]["implied_dim"], "-480");
    assert_eq!(aass["results"]["obstruction_within_certified"], true);
    assert!(aass["warnings"].as_array().unwrap().is_empty());
    let coeffs = aass["results"]["inverse"]["coeffs"].as_array().unwrap();
    assert_eq!(coeffs[5], "4");
    assert_eq!(coeffs[9], "-55");
}

#[test]
fn series_invert_matches_the_reference_tails() {
    let doc = ok(&["series-invert", "--coeffs", "-1,1,-1", "--order", "9"]);
    let coeffs = doc["results"]["inverse"]["coeffs"].as_array().unwrap();
    let expected = ["0", "-1", "1", "-1", "0", "4", "-14", "30", "-33", "-55"];
    for (c, e) in coeffs.iter().zip(expected) {
        assert_eq!(c, e);
    }
    assert_eq!(doc["results"]["defining_equation_holds"], true);

    let dims = ok(&["series-invert", "--dims", "1,1,1", "--order", "7"]);
    let coeffs = dims["results"]["inverse"]["coeffs"].as_array().unwrap();
    assert_eq!(coeffs[6], "-7/144");

    // exactly one of --coeffs/--dims
    assert_eq!(
        run(&["series-invert", "--order", "5"]).status.code(),
        Some(1)
    );
}

#[test]
fn malformed_inputs_exit_with_code_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.alg");
    std::fs::write(
        &path,
        r#"{"dim": 1, "basis": ["e1"], "table": [[["1/0"]]]}"#,
    )
    .unwrap();
    let doc = run_json(&["check", &path.display().to_string()], 2);
    assert_eq!(doc["error"]["kind"], "malformed-rational");

    let doc = run_json(&["check", "/nonexistent/nowhere.alg"], 2);
    assert_eq!(doc["error"]["kind"], "malformed-input");

    let doc = run_json(&["koszul", "--preset", "nope"], 2);
    assert_eq!(doc["error"]["kind"], "malformed-input");
}

#[test]
fn catalog_round_trips_and_writes_the_fixture_files() {
    let doc = ok(&["catalog"]);
    assert_eq!(doc["results"]["round_trip"], true);
    let names: Vec<&str> = doc["results"]["fixtures"]
        .as_array()
        .unwrap()
        .iter()
        .map(|f| f["name"].as_str().unwrap())
        .collect();
    assert!(names.contains(&"dim2-aa"));
    assert!(names.contains(&"faa1"));
    // every fixture carries a provenance string
    for f in doc["results"]["fixtures"].as_array().unwrap() {
        assert!(!f["provenance"].as_str().unwrap().is_empty());
    }
    // written files agree byte-for-byte with the committed fixtures
    let dir = tempfile::tempdir().unwrap();
    ok(&["catalog", "--write-dir", &dir.path().display().to_string()]);
    let fresh = std::fs::read(dir.path().join("faa1.alg")).unwrap();
    let committed = std::fs::read(fixtures_dir().join("faa1.alg")).unwrap();
    assert_eq!(fresh, committed);
}

#[test]
fn polarize_reports_the_identity_checks() {
    let doc = ok(&["polarize", &faa1_path()]);
    let checks = doc["results"]["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 4);
    // the cyclic bracket-of-products identity fails as printed on free
    // anti-associative algebras; that finding must surface as a warning
    for c in checks {
        let expected = c["name"] != "bracket-of-products-cyclic";
        assert_eq!(c["holds"], expected, "check {}", c["name"]);
    }
    let warnings = doc["warnings"].as_array().unwrap();
    assert_eq!(warnings.len(), 1);
    assert!(warnings[0]
        .as_str()
        .unwrap()
        .contains("bracket-of-products-cyclic"));
    assert_eq!(doc["results"]["rho"]["arity"], 2);
}

#[test]
fn deform_accepts_a_coboundary_and_reports_zero_residual() {
    let a = fixtures::fixture("faa1").unwrap().algebra;
    let f = Matrix::from_i64(&[&[1, 0, 0], &[0, 2, 0], &[0, 0, 3]]);
    let phi1 = delta1(&a, &f).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let phi_path = dir.path().join("phi1.json");
    std::fs::write(&phi_path, map_to_json(&phi1)).unwrap();
    let doc = ok(&[
        "deform",
        &faa1_path(),
        "--phi",
        &phi_path.display().to_string(),
        "--order",
        "2",
    ]);
    let residuals = doc["results"]["residuals"].as_array().unwrap();
    assert_eq!(residuals.len(), 2);
    assert_eq!(residuals[0]["zero"], true);
}

#[test]
fn anti_poisson_accepts_a_classical_limit() {
    let heis = fixtures::fixture("anticomm-dim3").unwrap().algebra;
    // the quantization witness: phi_1(e1,e1) = e2 solves the order-one
    // condition and its classical limit satisfies the anti-Poisson axioms
    let mut phi1 = antiassoc::multilinear::MultilinearMap::zero(2, 3);
    phi1.set_coeff(&[0, 0], 1, rint(1));
    let triple = antiassoc::polar::classical_limit(&heis, &phi1).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let psi_path = dir.path().join("psi.json");
    let rho_path = dir.path().join("rho.json");
    std::fs::write(&psi_path, map_to_json(&triple.psi)).unwrap();
    std::fs::write(&rho_path, map_to_json(&triple.rho)).unwrap();
    let doc = ok(&[
        "anti-poisson",
        "--psi",
        &psi_path.display().to_string(),
        "--rho",
        &rho_path.display().to_string(),
    ]);
    assert_eq!(doc["results"]["holds"], true);
}

#[test]
fn human_flag_appends_a_summary_after_the_json() {
    let out = run(&["free-aa", "-k", "1", "--human"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let json_end = text.rfind('}').unwrap();
    assert!(text[json_end..].contains("free-aa on 1 generator"));
}

#[test]
fn out_dir_env_var_redirects_relative_output_paths() {
    let dir = tempfile::tempdir().unwrap();
    let out = bin()
        .args(["free-aa", "-k", "1", "--out", "sub/one.alg"])
        .env("ANTIASSOC_OUT_DIR", dir.path())
        .output()
        .unwrap();
    assert!(out.status.success());
    let written = dir.path().join("sub/one.alg");
    assert!(written.exists());
    let a = fixtures::fixture("faa1").unwrap().algebra;
    assert_eq!(std::fs::read_to_string(written).unwrap(), algebra_to_json(&a));
}
