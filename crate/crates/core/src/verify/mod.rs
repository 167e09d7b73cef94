//! Closed-form predictions and inequality audits checked against computed invariants.

pub mod audit;
pub mod classify;
pub mod sreg;
pub mod thm32;

use std::fmt;

pub use audit::{descent_audit, thm510_audit, Claim, SurfaceData};
pub use classify::{thm63_classify, CaseTag, H2Shape, Thm63Signature};
pub use sreg::{sreg_estimate, SregEstimate};
pub use thm32::{thm32_check, thm32_predict, Thm32Prediction, UValue, VValue};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Holds,
    Violated,
    /// The hypothesis is not met, so nothing is asserted.
    Vacuous,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Holds
        } else {
            Status::Violated
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Holds => "PASS",
            Status::Violated => "FAIL",
            Status::Vacuous => "VACUOUS",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReportItem {
    pub label: String,
    pub status: Status,
    pub detail: String,
}

/// A list of checked items with a heading.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub title: String,
    pub items: Vec<ReportItem>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report { title: title.into(), items: Vec::new() }
    }

    pub fn push(&mut self, label: impl Into<String>, status: Status, detail: impl Into<String>) {
        self.items.push(ReportItem { label: label.into(), status, detail: detail.into() });
    }

    pub fn check(&mut self, label: impl Into<String>, ok: bool, detail: impl Into<String>) {
        self.push(label, Status::from_bool(ok), detail);
    }

    pub fn passed(&self) -> bool {
        self.items.iter().all(|it| it.status != Status::Violated)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ReportItem> {
        self.items.iter().filter(|it| it.status == Status::Violated)
    }

    /// One `STATUS label: detail` line per item.
    pub fn format_lines(&self) -> String {
        let mut out = String::new();
        for it in &self.items {
            out.push_str(&format!("{} {}: {}\n", it.status, it.label, it.detail));
        }
        out
    }

    pub fn format_text(&self) -> String {
        let verdict = if self.passed() { "all checks hold" } else { "VIOLATIONS FOUND" };
        format!("# {} ({verdict})\n{}", self.title, self.format_lines())
    }
}
