//! Serializable command results. JSON is canonical; the text form shows
//! the same fields.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::Path;

use serde::Serialize;

use superhowe::algebra::format_poly;
use superhowe::hwv::Relation;
use superhowe::operators::WeightVector;
use superhowe::{Partition, Status, SuperPolynomial, VerificationReport, VERSION};

pub trait Output {
    fn status(&self) -> Status;
    fn to_json(&self) -> String;
    fn to_text(&self) -> String;
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

fn params_text(params: &BTreeMap<String, usize>) -> String {
    params.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" ")
}

#[derive(Serialize)]
pub struct HwvOutput {
    version: &'static str,
    command: &'static str,
    model: &'static str,
    params: BTreeMap<String, usize>,
    lambda: String,
    terms: usize,
    vector: String,
    weight: WeightVector,
    expected_weight: WeightVector,
    highest: bool,
    status: Status,
}

impl HwvOutput {
    pub fn new(
        model: &'static str,
        params: &[(&str, usize)],
        lambda: &Partition,
        vector: &SuperPolynomial,
        weight: WeightVector,
        expected_weight: WeightVector,
        highest: bool,
    ) -> Self {
        let ok = highest && !vector.is_zero() && weight == expected_weight;
        HwvOutput {
            version: VERSION,
            command: "hwv",
            model,
            params: params.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
            lambda: lambda.to_string(),
            terms: vector.len(),
            vector: format_poly(vector),
            weight,
            expected_weight,
            highest,
            status: if ok { Status::Pass } else { Status::Fail },
        }
    }
}

impl Output for HwvOutput {
    fn status(&self) -> Status {
        self.status
    }

    fn to_json(&self) -> String {
        json(self)
    }

    fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "model     {} ({})", self.model, params_text(&self.params));
        let _ = writeln!(s, "lambda    {}", self.lambda);
        let _ = writeln!(s, "vector    {}", self.vector);
        let _ = writeln!(s, "terms     {}", self.terms);
        let _ = writeln!(s, "weight    {}", self.weight);
        let _ = writeln!(s, "expected  {}", self.expected_weight);
        let _ = writeln!(s, "highest   {}", if self.highest { "yes" } else { "no" });
        let _ = writeln!(s, "status    {}", self.status);
        s
    }
}

#[derive(Serialize)]
pub struct ReportsOutput {
    version: &'static str,
    command: &'static str,
    status: Status,
    reports: Vec<VerificationReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub relation: Option<Relation>,
}

impl ReportsOutput {
    pub fn new(command: &'static str, reports: Vec<VerificationReport>) -> Self {
        let status = if reports.iter().any(|r| r.status == Status::Fail) {
            Status::Fail
        } else if reports.iter().any(|r| r.status == Status::OverBudget) {
            Status::OverBudget
        } else {
            Status::Pass
        };
        ReportsOutput {
            version: VERSION,
            command,
            status,
            reports,
            relation: None,
        }
    }
}

impl Output for ReportsOutput {
    fn status(&self) -> Status {
        self.status
    }

    fn to_json(&self) -> String {
        json(self)
    }

    fn to_text(&self) -> String {
        let mut s = String::new();
        for r in &self.reports {
            let _ = write!(s, "{}", r.summary_line());
            if let Some(ms) = r.wall_time_ms {
                let _ = write!(s, " {ms} ms");
            }
            s.push('\n');
            if let Some(c) = &r.counterexample {
                let mut head = Vec::new();
                if let Some(l) = &c.lambda {
                    head.push(format!("lambda={l}"));
                }
                if let Some(o) = &c.operator {
                    head.push(o.clone());
                }
                let _ = writeln!(s, "    {}: {}", head.join(" "), c.detail);
            }
        }
        if let Some(rel) = &self.relation {
            let side = |ls: &[Partition]| ls.iter().map(|l| format!("v({l})")).collect::<Vec<_>>().join(" ");
            let _ = writeln!(s, "relation  {} = {} * {}", side(&rel.lhs), rel.scalar, side(&rel.rhs));
            let _ = writeln!(s, "weight    {}", rel.weight);
        }
        let count = match self.reports.len() {
            1 => "1 report".to_string(),
            k => format!("{k} reports"),
        };
        let _ = writeln!(s, "overall   {} ({count}, superhowe {})", self.status, self.version);
        s
    }
}

/// Writes to `path`, or stdout when absent.
pub fn emit(text: &str, path: Option<&Path>) -> std::io::Result<()> {
    match path {
        Some(p) => std::fs::write(p, text),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()
        }
    }
}
