//! Structured outcomes of verification runs.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    OverBudget,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::OverBudget => "over-budget",
        })
    }
}

/// First failing case of a run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub lambda: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub operator: Option<String>,
    /// Residual polynomial or offending monomial, in canonical text.
    pub detail: String,
}

/// Outcome of one theorem or identity check. A failing report always
/// carries a counterexample.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub theorem: String,
    pub params: BTreeMap<String, usize>,
    pub degree: usize,
    pub status: Status,
    pub checks_run: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub counterexample: Option<Counterexample>,
    /// Omitted unless timing was requested, so reports stay byte-stable.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub wall_time_ms: Option<u64>,
}

impl VerificationReport {
    pub fn new(theorem: impl Into<String>, params: &[(&str, usize)], degree: usize) -> Self {
        VerificationReport {
            theorem: theorem.into(),
            params: params.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
            degree,
            status: Status::Pass,
            checks_run: 0,
            counterexample: None,
            wall_time_ms: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Records one check; the first failure is kept.
    pub fn record(&mut self, ok: bool, failure: impl FnOnce() -> Counterexample) {
        self.checks_run += 1;
        if !ok && self.status == Status::Pass {
            self.status = Status::Fail;
            self.counterexample = Some(failure());
        }
    }

    pub fn over_budget(&mut self, detail: String) {
        if self.status == Status::Pass {
            self.status = Status::OverBudget;
            self.counterexample = Some(Counterexample {
                lambda: None,
                operator: None,
                detail,
            });
        }
    }

    /// One line `theorem params degree status checks`.
    pub fn summary_line(&self) -> String {
        let params = self
            .params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ");
        format!(
            "{:<28} {:<24} deg<={:<3} {:<11} {} checks",
            self.theorem, params, self.degree, self.status, self.checks_run
        )
    }
}
