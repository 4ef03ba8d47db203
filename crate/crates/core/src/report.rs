//! Machine-readable outputs: run reports and transversal files.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::cover::Color;
use crate::discharge::{AuditReport, ChargeLedger, LemmaReport, RuleSet, SpecialVertexRecord};
use crate::graph::{HypothesisReport, Profile, ReducibleConfiguration, VertexId};
use crate::hunt::HuntReport;
use crate::solver::{OrderedTransversal, SolverError, Transversal};

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

/// `{"colors": {"0": 1, ...}, "order": [...]}`; `order` is optional.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransversalFile {
    pub colors: BTreeMap<VertexId, Color>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<Vec<VertexId>>,
}

impl TransversalFile {
    pub fn from_transversal(t: &Transversal) -> Self {
        TransversalFile {
            colors: t.colors.iter().copied().enumerate().collect(),
            order: None,
        }
    }

    pub fn from_ordered(ot: &OrderedTransversal) -> Self {
        TransversalFile {
            order: Some(ot.order.clone()),
            ..Self::from_transversal(&ot.transversal)
        }
    }

    /// Dense transversal over `0..n`; every vertex must have a color.
    pub fn transversal(&self, n: usize) -> Result<Transversal, SolverError> {
        if self.colors.len() != n || self.colors.keys().any(|&v| v >= n) {
            return Err(SolverError::WrongLength {
                got: self.colors.len(),
                expected: n,
            });
        }
        Ok(Transversal::new(self.colors.values().copied().collect()))
    }

    pub fn ordered(&self, n: usize) -> Result<Option<OrderedTransversal>, SolverError> {
        let transversal = self.transversal(n)?;
        Ok(self.order.clone().map(|order| OrderedTransversal { transversal, order }))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveSection {
    pub mode: String,
    pub k: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub defects: Option<Vec<usize>>,
    pub cover: String,
    pub verdict: String,
    pub nodes: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub transversal: Option<TransversalFile>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifySection {
    pub mode: String,
    pub pass: bool,
    pub details: serde_json::Value,
}

/// Everything one command invocation produced. No timestamps or paths, so
/// repeated runs on the same input are byte-identical.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub tool: String,
    pub version: String,
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input_sha256: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub profile: Option<Profile>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rules: Option<RuleSet>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub exit_code: i32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hypotheses: Option<HypothesisReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reducible: Option<Vec<ReducibleConfiguration>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lemmas: Option<LemmaReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub special: Option<Vec<SpecialVertexRecord>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ledger: Option<ChargeLedger>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub audit: Option<AuditReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub solve: Option<SolveSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verify: Option<VerifySection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hunt: Option<HuntReport>,
}

impl RunReport {
    pub fn new(command: impl Into<String>) -> Self {
        RunReport {
            tool: env!("CARGO_PKG_NAME").to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            command: command.into(),
            input_sha256: None,
            profile: None,
            rules: None,
            seed: None,
            exit_code: 0,
            hypotheses: None,
            reducible: None,
            lemmas: None,
            special: None,
            ledger: None,
            audit: None,
            solve: None,
            verify: None,
            hunt: None,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}
