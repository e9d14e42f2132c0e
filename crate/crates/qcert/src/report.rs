//! Machine-readable verification reports.

use qcert_core::verify::{CheckReport, ExploreRow, Status, Summary};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessJson {
    pub n: usize,
    pub value: String,
    pub expected: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportJson {
    pub id: String,
    pub statement: String,
    pub category: String,
    pub kind: String,
    pub engine: String,
    pub order: usize,
    pub bound: Option<usize>,
    pub checked: usize,
    /// `PASS`, `FAIL`, `SKIPPED`, `ERROR`, with a `CONJECTURE-` prefix for conjectures.
    pub status: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub ms: u64,
}

impl From<&CheckReport> for ReportJson {
    fn from(r: &CheckReport) -> Self {
        let (witness, reason) = match &r.status {
            Status::Fail(w) => (
                Some(WitnessJson {
                    n: w.n,
                    value: w.value.clone(),
                    expected: w.expected.clone(),
                }),
                None,
            ),
            Status::Skipped(s) | Status::Error(s) => (None, Some(s.clone())),
            Status::Pass => (None, None),
        };
        ReportJson {
            id: r.id.clone(),
            statement: r.statement.clone(),
            category: r.category.name().into(),
            kind: r.kind.name().into(),
            engine: r.engine.clone(),
            order: r.order,
            bound: r.bound,
            checked: r.checked,
            status: r.label(),
            witness,
            reason,
            note: r.note.clone(),
            ms: r.ms,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummaryJson {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    pub errors: usize,
    pub theorem_failures: usize,
    pub conjecture_failures: usize,
}

impl From<&Summary> for SummaryJson {
    fn from(s: &Summary) -> Self {
        SummaryJson {
            total: s.pass + s.fail + s.skipped + s.errors,
            pass: s.pass,
            fail: s.fail,
            skipped: s.skipped,
            errors: s.errors,
            theorem_failures: s.theorem_failures,
            conjecture_failures: s.conjecture_failures,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExploreJson {
    pub group: String,
    pub residue: u32,
    /// Unclaimed classes are informational only.
    pub claimed: bool,
    pub first_failure: Option<usize>,
}

impl From<&ExploreRow> for ExploreJson {
    fn from(r: &ExploreRow) -> Self {
        ExploreJson {
            group: r.group.clone(),
            residue: r.residue,
            claimed: r.claimed,
            first_failure: r.first_failure,
        }
    }
}

/// Everything one `verify` or `crosscheck` invocation produced.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunDocument {
    pub filter: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub summary: SummaryJson,
    pub reports: Vec<ReportJson>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub exploratory: Vec<ExploreJson>,
}

impl RunDocument {
    pub fn new(filter: &str, seed: Option<u64>, reports: &[CheckReport]) -> Self {
        RunDocument {
            filter: filter.into(),
            seed,
            summary: (&Summary::of(reports)).into(),
            reports: reports.iter().map(ReportJson::from).collect(),
            exploratory: Vec::new(),
        }
    }

    pub fn to_json(&self) -> anyhow::Result<String> {
        Ok(serde_json::to_string_pretty(self)? + "\n")
    }

    /// One row per check.
    pub fn to_csv(&self) -> anyhow::Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record([
            "id",
            "category",
            "kind",
            "engine",
            "order",
            "bound",
            "checked",
            "status",
            "witness_n",
            "ms",
        ])?;
        for r in &self.reports {
            w.write_record([
                r.id.clone(),
                r.category.clone(),
                r.kind.clone(),
                r.engine.clone(),
                r.order.to_string(),
                r.bound.map(|b| b.to_string()).unwrap_or_default(),
                r.checked.to_string(),
                r.status.clone(),
                r.witness
                    .as_ref()
                    .map(|w| w.n.to_string())
                    .unwrap_or_default(),
                r.ms.to_string(),
            ])?;
        }
        Ok(String::from_utf8(w.into_inner()?)?)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.reports {
            let bound = r.bound.map(|b| format!("n<={b}")).unwrap_or_default();
            out += &format!(
                "{:<16} {:<16} {:<12} order {:<4} {:<6} {:>6} ms\n",
                r.status, r.id, r.engine, r.order, bound, r.ms
            );
            if let Some(w) = &r.witness {
                out += &format!(
                    "    witness n = {}: got {}, expected {}\n",
                    w.n, w.value, w.expected
                );
            }
            if let Some(reason) = &r.reason {
                out += &format!("    {reason}\n");
            }
        }
        for e in &self.exploratory {
            let tag = if e.claimed {
                "claimed"
            } else {
                "informational"
            };
            let result = match e.first_failure {
                Some(n) => format!("fails at n = {n}"),
                None => "holds".into(),
            };
            out += &format!(
                "explore {:<10} residue {:<3} {:<14} {result}\n",
                e.group, e.residue, tag
            );
        }
        let s = &self.summary;
        out += &format!(
            "{} checks: {} pass, {} fail ({} conjecture), {} skipped, {} errors\n",
            s.total, s.pass, s.fail, s.conjecture_failures, s.skipped, s.errors
        );
        out
    }

    /// A copy with every timing field zeroed.
    pub fn without_timing(&self) -> Self {
        let mut d = self.clone();
        for r in &mut d.reports {
            r.ms = 0;
        }
        d
    }
}
