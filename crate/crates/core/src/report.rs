//! Check records and residual excerpts.

use std::fmt;

use serde::Serialize;

use crate::matrix::SpectralMatrix;
use crate::nc::NCPoly;
use crate::scalar::CPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        })
    }
}

/// One line of output. Serializes as
/// `{"check", "status", "residual_terms", "elapsed_ms", "detail"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    #[serde(rename = "check")]
    pub check_name: String,
    pub status: Status,
    pub residual_terms: usize,
    pub elapsed_ms: u64,
    pub detail: Option<String>,
}

impl CheckReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    /// Human-readable form; failing details are indented below.
    pub fn to_text(&self) -> String {
        let mut s = format!(
            "{}  {}  ({} terms, {} ms)",
            self.status, self.check_name, self.residual_terms, self.elapsed_ms
        );
        if let Some(d) = &self.detail {
            for line in d.lines() {
                s.push_str("\n      ");
                s.push_str(line);
            }
        }
        s
    }
}

/// Anything a check can return as its residual.
pub trait Residual {
    fn residual_terms(&self) -> usize;
    /// Canonical text of at most `max_terms` leading terms.
    fn excerpt(&self, max_terms: usize) -> String;
}

fn more(total: usize, shown: usize) -> String {
    if total > shown {
        format!(" + ... ({} more terms)", total - shown)
    } else {
        String::new()
    }
}

impl Residual for CPoly {
    fn residual_terms(&self) -> usize {
        self.len()
    }

    fn excerpt(&self, max_terms: usize) -> String {
        let mut head = CPoly::zero();
        for (m, c) in self.terms().rev().take(max_terms) {
            head.add_term(*m, c.clone());
        }
        format!("{head}{}", more(self.len(), head.len()))
    }
}

impl Residual for NCPoly {
    fn residual_terms(&self) -> usize {
        self.len()
    }

    fn excerpt(&self, max_terms: usize) -> String {
        let mut head = NCPoly::zero();
        for (w, c) in self.terms().rev().take(max_terms) {
            head.add_term(w.clone(), c.clone());
        }
        format!("{head}{}", more(self.len(), head.len()))
    }
}

impl Residual for SpectralMatrix {
    fn residual_terms(&self) -> usize {
        self.term_count()
    }

    fn excerpt(&self, max_terms: usize) -> String {
        let dim = self.dim();
        let mut budget = max_terms;
        let mut lines = Vec::new();
        for i in 0..dim {
            for j in 0..dim {
                let p = self.get(i, j);
                if p.is_zero() {
                    continue;
                }
                if budget == 0 {
                    lines.push("...".to_string());
                    return lines.join("\n");
                }
                lines.push(format!("[{i},{j}] = {}", p.excerpt(budget)));
                budget = budget.saturating_sub(p.len());
            }
        }
        lines.join("\n")
    }
}

/// A list of named residuals, e.g. the commutators of a centrality check.
impl<R: Residual> Residual for Vec<(String, R)> {
    fn residual_terms(&self) -> usize {
        self.iter().map(|(_, r)| r.residual_terms()).sum()
    }

    fn excerpt(&self, max_terms: usize) -> String {
        self.iter()
            .filter(|(_, r)| r.residual_terms() > 0)
            .map(|(n, r)| format!("{n}: {}", r.excerpt(max_terms)))
            .collect::<Vec<_>>()
            .join("\n")
    }
}
