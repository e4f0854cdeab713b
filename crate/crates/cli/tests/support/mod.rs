//! Golden-file cases shared by the golden and acceptance test targets.
//!
//! Each case runs the built binary from the crate directory and compares stdout with
//! `tests/golden/<name>.out`. The `schema_version` value is masked before comparing. Set
//! `UPDATE_GOLDEN=1` to rewrite the expected files.

#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;

pub struct Case {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub code: i32,
    /// Substring expected on stderr.
    pub stderr: Option<&'static str>,
}

const fn case(name: &'static str, args: &'static [&'static str], code: i32) -> Case {
    Case { name, args, code, stderr: None }
}

const fn failing(name: &'static str, args: &'static [&'static str], code: i32, stderr: &'static str) -> Case {
    Case { name, args, code, stderr: Some(stderr) }
}

pub const CASES: &[Case] = &[
    case("check_boundary", &["check", "--group", "free:2", "4 + x + y"], 0),
    case("check_boundary_json", &["check", "--group", "free:2", "4 + x + y", "--json"], 0),
    case("check_inconclusive", &["check", "--group", "free:2", "1 + x + y"], 2),
    case("check_torsion", &["check", "--group", "cyclic:2", "1 - g1"], 3),
    case("check_torsion_json", &["check", "--group", "cyclic:2", "1 - g1", "--json"], 3),
    case("check_undecided", &["check", "--group", "free:1", "--precision-cap", "16", "(1+i) + 99/70*x"], 4),
    case("check_leading_minus", &["check", "--group", "free:1", "-3/2 - 3*x - 1/3*x^-2"], 2),
    case("check_zero", &["check", "--group", "free:2", "x - x"], 5),
    case("check_family_three", &["check", "--group", "free:3", "9 + x + y + z"], 0),
    case("check_irrational_json", &["check", "--group", "free:1", "(1+i) + x", "--json"], 0),
    case("check_laurent", &["check", "--group", "abelian:2", "1 + x + y", "--json"], 2),
    case("check_cayley", &["check", "--group", "cayley:tests/golden/fixtures/s3.json", "e - a"], 3),
    case("certify_boundary_json", &["certify", "--group", "free:2", "4+x+y", "--json"], 0),
    case("certify_binomial", &["certify", "--group", "free:1", "1+x"], 0),
    case("certify_inconclusive", &["certify", "--group", "free:2", "1+x+y"], 2),
    case("certify_inconclusive_json", &["certify", "--group", "free:2", "1+x+y", "--json"], 2),
    case("certify_unavailable_json", &["certify", "--group", "free:1", "(1+i) + x", "--json"], 6),
    case("certify_torsion", &["certify", "--group", "cyclic:3", "2 + g1"], 3),
    case("verify_valid", &["verify", "tests/golden/fixtures/boundary_cert.json"], 0),
    failing("verify_negative_constant", &["verify", "tests/golden/fixtures/negative_constant.json"], 7, "negative constant"),
    failing("verify_dropped_factor", &["verify", "tests/golden/fixtures/dropped_factor.json"], 7, "reconstruction mismatch"),
    failing("verify_truncated", &["verify", "tests/golden/fixtures/truncated.json"], 1, "invalid certificate"),
    failing("verify_unknown_field", &["verify", "tests/golden/fixtures/unknown_field.json"], 1, "bogus"),
    case("mul_binomials", &["mul", "--group", "free:1", "1+x", "1-x"], 0),
    case("mul_free_json", &["mul", "--group", "free:2", "x + y", "x^-1 - y^-1", "--json"], 0),
    case("norms_boundary", &["norms", "--group", "free:2", "4+x+y"], 0),
    case("norms_self_adjoint", &["norms", "--group", "free:1", "5 + 2x + 2x^-1"], 0),
    case("norms_irrational_json", &["norms", "--group", "free:1", "(1+i) + x", "--json"], 0),
    case("oracle_cyclic", &["oracle", "--group", "cyclic:3", "1+g1+g2"], 0),
    case("oracle_cyclic_json", &["oracle", "--group", "cyclic:3", "1+g1+g2", "--json"], 0),
    case("oracle_laurent", &["oracle", "--group", "abelian:2", "1 + x + y"], 0),
    case("oracle_free", &["oracle", "--group", "free:2", "1 + x + y"], 0),
    case("support_abelian", &["support", "--group", "abelian:1", "1 + x^2"], 0),
    case("support_free", &["support", "--group", "free:2", "4+x+y"], 0),
    case("support_scalar_json", &["support", "--group", "abelian:2", "3", "--json"], 0),
    failing("error_parse", &["check", "--group", "free:2", "1 + + x"], 1, "position 4"),
    failing("error_missing_group", &["check", "1 + x"], 1, "--group is required"),
    failing("error_bad_group", &["check", "--group", "dihedral:3", "1"], 1, "invalid group spec"),
    failing("error_unknown_generator", &["check", "--group", "free:1", "1 + y"], 1, "parse error"),
    failing("error_support_zero", &["support", "--group", "abelian:1", "0"], 1, "zero element"),
];

pub fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

pub fn mask_schema_version(text: &str) -> String {
    text.lines()
        .map(|line| match line.find("\"schema_version\": ") {
            Some(k) => format!("{}\"schema_version\": _{}", &line[..k], if line.trim_end().ends_with(',') { "," } else { "" }),
            None => line.to_string(),
        })
        .collect::<Vec<_>>()
        .join("\n")
}

/// Runs a case; returns a description of the first mismatch.
pub fn run_case(case: &Case) -> Result<(), String> {
    let output = Command::new(env!("CARGO_BIN_EXE_groupring"))
        .args(case.args)
        .current_dir(crate_dir())
        .output()
        .map_err(|e| format!("cannot run binary: {e}"))?;
    let stdout = String::from_utf8(output.stdout).map_err(|_| "stdout is not UTF-8".to_string())?;
    let stderr = String::from_utf8_lossy(&output.stderr);
    let path = golden_path(case.name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &stdout).unwrap();
    }
    let code = output.status.code();
    if code != Some(case.code) {
        return Err(format!("{}: exit {:?}, expected {} (stderr: {stderr})", case.name, code, case.code));
    }
    if let Some(needle) = case.stderr {
        if !stderr.contains(needle) {
            return Err(format!("{}: stderr {stderr:?} lacks {needle:?}", case.name));
        }
    }
    let expected = std::fs::read_to_string(&path).map_err(|e| format!("{}: {}: {e}", case.name, path.display()))?;
    if mask_schema_version(&expected) != mask_schema_version(&stdout) {
        return Err(format!("{}: stdout differs from {}\n--- got ---\n{stdout}", case.name, path.display()));
    }
    Ok(())
}

pub fn golden_path(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(format!("{name}.out"))
}

