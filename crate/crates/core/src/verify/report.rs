//! Machine-readable verification reports. Passed cases store hashes of the
//! two sides to bound report size; failed cases embed the serialized values
//! so a counterexample is self-contained.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CaseOutcome {
    pub input: serde_json::Value,
    pub equal: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub lhs: Option<serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub rhs: Option<serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub lhs_hash: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub rhs_hash: Option<String>,
}

fn hash_value(v: &serde_json::Value) -> String {
    let mut hasher = Sha256::new();
    hasher.update(v.to_string().as_bytes());
    hex::encode(hasher.finalize())
}

impl CaseOutcome {
    pub fn new<L: Serialize, R: Serialize>(
        input: serde_json::Value,
        lhs: &L,
        rhs: &R,
        equal: bool,
    ) -> Self {
        let lhs = serde_json::to_value(lhs).expect("values serialize");
        let rhs = serde_json::to_value(rhs).expect("values serialize");
        if equal {
            CaseOutcome {
                input,
                equal,
                lhs: None,
                rhs: None,
                lhs_hash: Some(hash_value(&lhs)),
                rhs_hash: Some(hash_value(&rhs)),
            }
        } else {
            CaseOutcome {
                input,
                equal,
                lhs: Some(lhs),
                rhs: Some(rhs),
                lhs_hash: None,
                rhs_hash: None,
            }
        }
    }

    /// For predicate-style cases (a rule that either holds or does not):
    /// both sides are the boolean verdict.
    pub fn predicate(input: serde_json::Value, holds: bool) -> Self {
        CaseOutcome::new(input, &holds, &true, holds)
    }
}

#[derive(Clone, Debug, Default, Serialize, Deserialize, PartialEq, Eq)]
pub struct ResolvedVariants {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub linear_region: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub schur_reading: Option<String>,
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerificationReport {
    pub theorem: String,
    pub parameters: serde_json::Value,
    pub cases: Vec<CaseOutcome>,
    pub resolved_variants: ResolvedVariants,
    pub summary: Summary,
    pub wall_time_ms: u64,
}

impl VerificationReport {
    pub fn assemble(
        theorem: impl Into<String>,
        parameters: serde_json::Value,
        cases: Vec<CaseOutcome>,
        resolved_variants: ResolvedVariants,
        wall_time_ms: u64,
    ) -> Self {
        let passed = cases.iter().filter(|c| c.equal).count();
        let summary = Summary {
            total: cases.len(),
            passed,
            failed: cases.len() - passed,
        };
        VerificationReport {
            theorem: theorem.into(),
            parameters,
            cases,
            resolved_variants,
            summary,
            wall_time_ms,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }
}
