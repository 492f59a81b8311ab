//! Structured results of exhaustive law checking.

use std::fmt;

use crate::linalg::{vec_display, Rat};

/// Cap on stored failure details per report. Failure counts stay exact; only
/// the rendered details are truncated.
pub const DETAIL_CAP: usize = 10;

/// One failing instance of a law: which basis tuple, and both sides.
#[derive(Clone, Debug)]
pub struct FailureDetail {
    pub indices: Vec<usize>,
    pub lhs: String,
    pub rhs: String,
}

/// Aggregate result for a single named law.
#[derive(Clone, Debug)]
pub struct CheckItem {
    pub label: String,
    pub instances: usize,
    pub failures: usize,
    pub details: Vec<FailureDetail>,
}

impl CheckItem {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Itemized record of a verification run.
///
/// Each law gets one [`CheckItem`] with exact instance and failure counts;
/// details of the first [`DETAIL_CAP`] failures across the whole report are
/// kept for display.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    title: String,
    items: Vec<CheckItem>,
    details_kept: usize,
}

impl VerificationReport {
    pub fn new(title: impl Into<String>) -> Self {
        VerificationReport { title: title.into(), items: Vec::new(), details_kept: 0 }
    }

    pub fn title(&self) -> &str {
        &self.title
    }

    pub fn items(&self) -> &[CheckItem] {
        &self.items
    }

    pub fn passed(&self) -> bool {
        self.items.iter().all(CheckItem::passed)
    }

    pub fn total_instances(&self) -> usize {
        self.items.iter().map(|i| i.instances).sum()
    }

    pub fn total_failures(&self) -> usize {
        self.items.iter().map(|i| i.failures).sum()
    }

    pub fn item(&self, label: &str) -> Option<&CheckItem> {
        self.items.iter().find(|i| i.label == label)
    }

    fn entry(&mut self, label: &str) -> &mut CheckItem {
        if let Some(pos) = self.items.iter().position(|i| i.label == label) {
            return &mut self.items[pos];
        }
        self.items.push(CheckItem {
            label: label.to_string(),
            instances: 0,
            failures: 0,
            details: Vec::new(),
        });
        self.items.last_mut().unwrap()
    }

    /// Records one instance of `label`, failing when `ok` is false.
    pub fn check(&mut self, label: &str, indices: &[usize], ok: bool, lhs: &str, rhs: &str) {
        let keep = self.details_kept < DETAIL_CAP;
        let item = self.entry(label);
        item.instances += 1;
        if ok {
            return;
        }
        item.failures += 1;
        if keep {
            item.details.push(FailureDetail {
                indices: indices.to_vec(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
            self.details_kept += 1;
        }
    }

    /// Records an instance comparing two vectors for exact equality.
    pub fn check_vecs(&mut self, label: &str, indices: &[usize], lhs: &[Rat], rhs: &[Rat]) {
        let ok = lhs == rhs;
        let (l, r) = if ok {
            (String::new(), String::new())
        } else {
            (vec_display(lhs), vec_display(rhs))
        };
        self.check(label, indices, ok, &l, &r);
    }

    /// Records an instance comparing two scalars for exact equality.
    pub fn check_scalars(&mut self, label: &str, indices: &[usize], lhs: &Rat, rhs: &Rat) {
        let ok = lhs == rhs;
        let (l, r) =
            if ok { (String::new(), String::new()) } else { (lhs.to_string(), rhs.to_string()) };
        self.check(label, indices, ok, &l, &r);
    }

    /// Appends all items of another report, keeping its label set intact.
    pub fn absorb(&mut self, other: VerificationReport) {
        for item in other.items {
            let keep = DETAIL_CAP.saturating_sub(self.details_kept);
            let kept = item.details.len().min(keep);
            self.details_kept += kept;
            let mut item = item;
            item.details.truncate(kept);
            self.items.push(item);
        }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}: {}", self.title, if self.passed() { "pass" } else { "FAIL" })?;
        for item in &self.items {
            if item.passed() {
                writeln!(f, "  [ ok ] {} ({} instances)", item.label, item.instances)?;
            } else {
                writeln!(
                    f,
                    "  [FAIL] {} ({} of {} instances failed)",
                    item.label, item.failures, item.instances
                )?;
                for d in &item.details {
                    writeln!(f, "         at {:?}: lhs = {}; rhs = {}", d.indices, d.lhs, d.rhs)?;
                }
            }
        }
        Ok(())
    }
}
