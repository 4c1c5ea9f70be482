//! Serialisation of audit results.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{registered_claims, ClaimResult, Section, Status};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub n: i64,
    pub computed: String,
    pub predicted: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub n_max: i64,
    pub t_samples: Vec<i64>,
    pub claims: Vec<ClaimResult>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
    Text,
}

impl FromStr for ReportFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            "text" | "txt" => Ok(ReportFormat::Text),
            other => Err(format!("unknown report format {other:?}")),
        }
    }
}

impl Report {
    pub fn count(&self, status: Status) -> usize {
        self.claims.iter().filter(|c| c.status == status).count()
    }

    pub fn get(&self, id: &str) -> Option<&ClaimResult> {
        self.claims.iter().find(|c| c.id == id)
    }

    pub fn emit(&self, format: ReportFormat) -> String {
        match format {
            ReportFormat::Json => self.to_json(),
            ReportFormat::Csv => self.to_csv(),
            ReportFormat::Text => self.to_text(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialises");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> Result<Report, serde_json::Error> {
        serde_json::from_str(s)
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record([
            "id",
            "anchor",
            "status",
            "minimal_m",
            "first_counterexample",
        ])
        .expect("in-memory write");
        for c in &self.claims {
            let first = c
                .counterexamples
                .first()
                .map(|x| {
                    format!(
                        "n={}: computed {} predicted {}",
                        x.n, x.computed, x.predicted
                    )
                })
                .unwrap_or_default();
            let m = c.minimal_m.map(|m| m.to_string()).unwrap_or_default();
            w.write_record([c.id.as_str(), &c.anchor, c.status.as_str(), &m, &first])
                .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
    }

    /// Human-readable report grouped by the section each claim belongs to.
    pub fn to_text(&self) -> String {
        let sections: BTreeMap<String, Section> = registered_claims()
            .into_iter()
            .map(|c| (c.id, c.section))
            .collect();
        let mut groups: BTreeMap<Option<Section>, Vec<&ClaimResult>> = BTreeMap::new();
        for c in &self.claims {
            groups
                .entry(sections.get(&c.id).copied())
                .or_default()
                .push(c);
        }

        let mut out = String::new();
        let _ = writeln!(
            out,
            "claims audit: n_max={} t_samples={:?}",
            self.n_max, self.t_samples
        );
        let _ = writeln!(
            out,
            "{} claims: {} verified, {} verified from m, {} mismatch",
            self.claims.len(),
            self.count(Status::Verified),
            self.count(Status::VerifiedFromM),
            self.count(Status::Mismatch)
        );
        for (section, claims) in groups {
            let title = section.map_or("Other", Section::title);
            let _ = writeln!(out, "\n== {title} ==");
            for c in claims {
                match c.status {
                    Status::Verified => {
                        let _ = writeln!(out, "  VERIFIED         {}", c.id);
                    }
                    Status::VerifiedFromM => {
                        let _ = writeln!(
                            out,
                            "  VERIFIED_FROM_M  {} (m={})",
                            c.id,
                            c.minimal_m.unwrap_or_default()
                        );
                    }
                    Status::Mismatch => {
                        let _ = writeln!(out, "  MISMATCH         {}", c.id);
                        let _ = writeln!(out, "      quote: {}", c.anchor);
                    }
                }
                if c.status != Status::Verified {
                    for x in &c.counterexamples {
                        let _ = writeln!(
                            out,
                            "      n={}: computed {} | predicted {}",
                            x.n, x.computed, x.predicted
                        );
                    }
                }
            }
        }
        out
    }
}
