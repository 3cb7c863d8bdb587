//! Itemized check reports with pass/fail/inconclusive verdicts.

use std::fmt;

/// Outcome of a verification run. A report fails iff it contains at least
/// one violation item; inconclusive items alone downgrade a pass.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Inconclusive => "inconclusive",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ItemStatus {
    Ok,
    Violation,
    Inconclusive,
    Skipped,
    Note,
}

impl ItemStatus {
    fn as_str(self) -> &'static str {
        match self {
            ItemStatus::Ok => "ok",
            ItemStatus::Violation => "VIOLATION",
            ItemStatus::Inconclusive => "inconclusive",
            ItemStatus::Skipped => "skipped",
            ItemStatus::Note => "note",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportItem {
    pub status: ItemStatus,
    pub detail: String,
}

impl ReportItem {
    pub fn ok(detail: String) -> ReportItem {
        ReportItem { status: ItemStatus::Ok, detail }
    }
    pub fn violation(detail: String) -> ReportItem {
        ReportItem { status: ItemStatus::Violation, detail }
    }
    pub fn inconclusive(detail: String) -> ReportItem {
        ReportItem { status: ItemStatus::Inconclusive, detail }
    }
    pub fn skipped(detail: String) -> ReportItem {
        ReportItem { status: ItemStatus::Skipped, detail }
    }
    pub fn note(detail: String) -> ReportItem {
        ReportItem { status: ItemStatus::Note, detail }
    }
}

/// A named check with itemized evidence lines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub name: String,
    pub items: Vec<ReportItem>,
}

impl Report {
    pub fn new(name: &str) -> Report {
        Report { name: name.to_string(), items: Vec::new() }
    }

    pub fn push(&mut self, item: ReportItem) {
        self.items.push(item);
    }

    pub fn verdict(&self) -> Verdict {
        if self.items.iter().any(|i| i.status == ItemStatus::Violation) {
            Verdict::Fail
        } else if self.items.iter().any(|i| i.status == ItemStatus::Inconclusive) {
            Verdict::Inconclusive
        } else {
            Verdict::Pass
        }
    }

    pub fn count(&self, status: ItemStatus) -> usize {
        self.items.iter().filter(|i| i.status == status).count()
    }

    /// Plain-text rendering: a header line and one line per item.
    pub fn render(&self) -> String {
        let mut out = format!("{}: {}\n", self.name, self.verdict());
        for item in &self.items {
            out.push_str(&format!("  [{}] {}\n", item.status.as_str(), item.detail));
        }
        out
    }
}
