//! JSON report structures emitted by the CLI; the shipped schema files
//! under `schemas/` describe exactly these shapes.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::code::CodeStats;
use crate::groups::{HomogeneityReport, OrderIdentityReport, ReductionReport, TransitivityReport};

#[derive(Clone, Debug, Serialize)]
pub struct SizesReport {
    pub n: usize,
    pub size: u64,
    pub rank: u32,
    pub kernel: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityJson {
    pub sym: u64,
    pub tr: u64,
    pub rot: u64,
    pub ker: u64,
    pub identity_holds: bool,
    pub chain_holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReductionJson {
    pub base_code_len: usize,
    pub final_code_len: usize,
    pub hypotheses: Vec<String>,
    pub base_transitive: bool,
    pub conclusion: String,
}

/// The unified check report.
#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub code_id: String,
    pub sizes: SizesReport,
    pub transitive: Option<bool>,
    pub homogeneous: Option<bool>,
    pub witnesses: Vec<String>,
    pub failing_translators: Vec<String>,
    pub method_notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub identity: Option<IdentityJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reduction: Option<ReductionJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weight_distribution: Option<BTreeMap<u32, u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min_distance: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub perfect: Option<bool>,
}

impl CheckReport {
    pub fn new(code_id: &str, stats: &CodeStats) -> CheckReport {
        CheckReport {
            code_id: code_id.to_string(),
            sizes: SizesReport {
                n: stats.n,
                size: stats.size,
                rank: stats.rank,
                kernel: stats.kernel_size,
            },
            transitive: None,
            homogeneous: None,
            witnesses: Vec::new(),
            failing_translators: Vec::new(),
            method_notes: stats.method_notes.clone(),
            identity: None,
            reduction: None,
            weight_distribution: None,
            min_distance: None,
            perfect: None,
        }
    }

    pub fn with_stats_detail(mut self, stats: &CodeStats) -> CheckReport {
        self.weight_distribution = Some(stats.weight_distribution.clone());
        self.min_distance = Some(stats.min_distance);
        self.perfect = Some(stats.is_perfect);
        self
    }

    pub fn with_transitivity(mut self, rep: &TransitivityReport) -> CheckReport {
        self.transitive = Some(rep.transitive);
        self.failing_translators =
            rep.failing.iter().map(|w| w.support_string()).collect();
        self.method_notes.push(rep.method.clone());
        self
    }

    pub fn with_homogeneity(mut self, rep: &HomogeneityReport) -> CheckReport {
        self.homogeneous = Some(rep.homogeneous);
        self.witnesses = rep
            .witnesses
            .iter()
            .map(|(z, p)| format!("{} -> {:?}", z.support_string(), p))
            .collect();
        self.method_notes.push(format!(
            "homogeneity over {} ({} representatives)",
            rep.method, rep.representatives_checked
        ));
        self
    }

    pub fn with_identity(mut self, rep: &OrderIdentityReport) -> CheckReport {
        self.identity = Some(IdentityJson {
            sym: rep.sym,
            tr: rep.tr,
            rot: rep.rot,
            ker: rep.ker,
            identity_holds: rep.identity_holds,
            chain_holds: rep.chain_holds,
        });
        self.method_notes.extend(rep.notes.iter().cloned());
        self
    }

    pub fn with_reduction(mut self, rep: &ReductionReport) -> CheckReport {
        self.failing_translators =
            rep.failing_base_words.iter().map(|w| w.support_string()).collect();
        self.method_notes.extend(rep.hypotheses.iter().cloned());
        self.method_notes.extend(rep.piercing_evidence.iter().cloned());
        self.reduction = Some(ReductionJson {
            base_code_len: rep.base_code_len,
            final_code_len: rep.final_code_len,
            hypotheses: rep.hypotheses.clone(),
            base_transitive: rep.base_transitive,
            conclusion: rep.conclusion.clone(),
        });
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// One row of the reproduction run.
#[derive(Clone, Debug, Serialize)]
pub struct ReproRow {
    pub id: String,
    pub passed: bool,
    pub seconds: f64,
    pub detail: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReproReport {
    pub rows: Vec<ReproRow>,
    pub all_passed: bool,
}
