use serde::{Deserialize, Serialize};

use super::{Outcome, Verdict};
use crate::algebra::AlgebraElement;
use crate::oracle::OracleReport;
use crate::scalars::{parse_rational, RadicalSum, ScalarParseError};

/// `{"constant": "...", "radicals": [["m", "q"], ...]}` with exact rational strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RadicalSumDoc {
    pub constant: String,
    pub radicals: Vec<[String; 2]>,
}

impl From<&RadicalSum> for RadicalSumDoc {
    fn from(s: &RadicalSum) -> Self {
        RadicalSumDoc {
            constant: s.constant().to_string(),
            radicals: s.terms().map(|(m, q)| [m.to_string(), q.to_string()]).collect(),
        }
    }
}

impl RadicalSumDoc {
    pub fn to_radical_sum(&self) -> Result<RadicalSum, ScalarParseError> {
        let mut out = RadicalSum::from_rational(parse_rational(self.constant.trim())?);
        for [m, q] in &self.radicals {
            let m = parse_rational(m.trim())?;
            let q = parse_rational(q.trim())?;
            if m <= num_traits::Zero::zero() || q < num_traits::Zero::zero() {
                return Err(ScalarParseError { input: format!("[{m}, {q}]"), expected: "positive multiplier and nonnegative radicand" });
            }
            out.push_term(m, &q);
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GapReport {
    pub two_norm2_sq: String,
    pub one_norm: RadicalSumDoc,
    pub one_norm_sq: RadicalSumDoc,
    pub sign: String,
}

/// JSON form of a criterion verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerdictReport {
    pub element: String,
    pub group: String,
    pub torsion_free: bool,
    pub verdict: Outcome,
    pub gap: GapReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleReport>,
    pub schema_version: u32,
}

impl VerdictReport {
    pub fn new(alpha: &AlgebraElement, verdict: &Verdict, oracle: Option<OracleReport>) -> Self {
        VerdictReport {
            element: alpha.to_string(),
            group: alpha.spec().descriptor(),
            torsion_free: verdict.torsion_free,
            verdict: verdict.outcome,
            gap: GapReport {
                two_norm2_sq: verdict.two_norm2_squared().to_string(),
                one_norm: (&verdict.norm1).into(),
                one_norm_sq: (&verdict.norm1_squared).into(),
                sign: verdict.gap_sign.as_str().to_string(),
            },
            oracle,
            schema_version: super::SCHEMA_VERSION,
        }
    }
}
