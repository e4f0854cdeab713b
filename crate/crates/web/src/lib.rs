//! Browser bindings for the regularity checker.
//!
//! Every export takes and returns strings; results are JSON documents. The plain functions
//! in [`api`] do the work so they can be tested natively.

use wasm_bindgen::prelude::*;

pub mod api {
    use std::sync::Arc;

    use groupring::oracle::run_oracle;
    use groupring::regularity::{
        certify_regular, criterion_check, verify_certificate, CertificateDoc, CertifyError, VerdictReport,
    };
    use groupring::scalars::{parse_rational, GaussianRational, RadicalSum, Rational, DEFAULT_PRECISION_CAP};
    use groupring::{parse_element, AlgebraElement, GroupSpec};
    use serde::Serialize;
    use serde_json::json;

    /// Points allowed in one curve request.
    pub const MAX_STEPS: u32 = 400;

    fn group(descriptor: &str) -> Result<Arc<GroupSpec>, String> {
        if descriptor.trim_start().starts_with("cayley:") {
            return Err("Cayley files are not available in the browser".into());
        }
        GroupSpec::parse(descriptor).map(Arc::new).map_err(|e| e.to_string())
    }

    fn element(spec: &Arc<GroupSpec>, expr: &str) -> Result<AlgebraElement, String> {
        parse_element(spec, expr).map_err(|e| e.to_string())
    }

    fn pretty<T: Serialize>(value: &T) -> String {
        serde_json::to_string_pretty(value).expect("reports serialize")
    }

    fn approx(s: &RadicalSum) -> f64 {
        s.to_decimal(15).parse().expect("decimal text")
    }

    pub fn check(group_desc: &str, expr: &str) -> Result<String, String> {
        let spec = group(group_desc)?;
        let alpha = element(&spec, expr)?;
        let verdict = criterion_check(&alpha, DEFAULT_PRECISION_CAP);
        let oracle = matches!(*spec, GroupSpec::Finite(_)).then(|| run_oracle(&alpha));
        Ok(pretty(&VerdictReport::new(&alpha, &verdict, oracle)))
    }

    /// Certificate plus the outcome of re-verifying it, or the reason none exists.
    pub fn certify(group_desc: &str, expr: &str) -> Result<String, String> {
        let spec = group(group_desc)?;
        let alpha = element(&spec, expr)?;
        let value = match certify_regular(&alpha, DEFAULT_PRECISION_CAP) {
            Ok(cert) => {
                let verified = verify_certificate(&cert, DEFAULT_PRECISION_CAP);
                json!({
                    "status": "certified",
                    "verified": verified.is_ok(),
                    "certificate": CertificateDoc::from(&cert),
                })
            }
            Err(CertifyError::NotRegular(v)) => json!({
                "status": "not-regular",
                "verdict": v.outcome,
                "reason": format!("criterion verdict is {}", v.outcome),
            }),
            Err(CertifyError::Unavailable { verdict, reason }) => json!({
                "status": "unavailable",
                "verdict": verdict.outcome,
                "reason": reason,
            }),
        };
        Ok(pretty(&value))
    }

    pub fn mul(group_desc: &str, left: &str, right: &str) -> Result<String, String> {
        let spec = group(group_desc)?;
        let product = element(&spec, left)?.mul(&element(&spec, right)?).expect("same group");
        Ok(product.to_string())
    }

    #[derive(Serialize)]
    struct CurvePoint {
        c: String,
        verdict: String,
        gap_sign: String,
        /// Exact gap when rational.
        gap: Option<String>,
        gap_approx: f64,
    }

    #[derive(Serialize)]
    struct Curve {
        rest: String,
        group: String,
        /// Smallest `c ≥ 0` with a nonnegative gap, for plotting only.
        threshold_approx: f64,
        points: Vec<CurvePoint>,
    }

    /// Gap of `c + rest` for `steps + 1` evenly spaced rational `c` in `[c_min, c_max]`.
    ///
    /// `rest` must have no identity term. For `c ≥ 0` the gap is
    /// `c² − 2c·‖rest‖₁ + 2‖rest‖₂² − ‖rest‖₁²`, whose larger root is the threshold.
    pub fn gap_curve(group_desc: &str, rest_expr: &str, c_min: &str, c_max: &str, steps: u32) -> Result<String, String> {
        let spec = group(group_desc)?;
        let rest = element(&spec, rest_expr)?;
        if !rest.identity_coeff().is_zero() {
            return Err("the varying part must not have an identity term".into());
        }
        let lo = parse_rational(c_min.trim()).map_err(|e| e.to_string())?;
        let hi = parse_rational(c_max.trim()).map_err(|e| e.to_string())?;
        if hi < lo || steps == 0 || steps > MAX_STEPS {
            return Err(format!("need c_min <= c_max and 1 <= steps <= {MAX_STEPS}"));
        }
        let r1 = approx(&rest.norm1());
        let r2 = approx(&RadicalSum::from_rational(rest.norm2_squared()));
        let threshold_approx = r1 + (2.0 * (r1 * r1 - r2)).max(0.0).sqrt();
        let step = (&hi - &lo) / Rational::from_integer(steps.into());
        let mut points = Vec::with_capacity(steps as usize + 1);
        for k in 0..=steps {
            let c = &lo + &step * Rational::from_integer(k.into());
            let alpha = rest
                .add(&AlgebraElement::scalar(&spec, GaussianRational::real(c.clone())))
                .expect("same group");
            let v = criterion_check(&alpha, DEFAULT_PRECISION_CAP);
            points.push(CurvePoint {
                c: c.to_string(),
                verdict: v.outcome.to_string(),
                gap_sign: v.gap_sign.as_str().to_string(),
                gap: v.norm1_squared.as_rational().map(|n| (v.two_norm2_squared() - n).to_string()),
                gap_approx: approx(&RadicalSum::from_rational(v.two_norm2_squared())) - approx(&v.norm1_squared),
            });
        }
        Ok(pretty(&Curve { rest: rest.to_string(), group: spec.descriptor(), threshold_approx, points }))
    }
}

#[wasm_bindgen]
pub fn check(group: &str, expr: &str) -> Result<String, JsError> {
    api::check(group, expr).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn certify(group: &str, expr: &str) -> Result<String, JsError> {
    api::certify(group, expr).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn mul(group: &str, left: &str, right: &str) -> Result<String, JsError> {
    api::mul(group, left, right).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn gap_curve(group: &str, rest: &str, c_min: &str, c_max: &str, steps: u32) -> Result<String, JsError> {
    api::gap_curve(group, rest, c_min, c_max, steps).map_err(|e| JsError::new(&e))
}
