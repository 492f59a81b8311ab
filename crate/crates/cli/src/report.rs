//! Deterministic line-oriented run reports.
//!
//! A report is a sequence of `key: value` lines in a fixed order: the
//! command name, one digest line per input file, result keys in the order
//! the command computes them, an exact failure count, and one `fail:` line
//! per failing check. Identical input files yield byte-identical output,
//! which makes golden-file and determinism tests plain string comparisons.

use std::fmt::Display;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use sha2::{Digest, Sha256};
use wharf_core::VerificationReport;

pub struct RunReport {
    lines: Vec<(String, String)>,
    failures: Vec<String>,
}

impl RunReport {
    pub fn new(command: &str) -> Self {
        RunReport { lines: vec![("command".into(), command.into())], failures: Vec::new() }
    }

    /// Appends a result line.
    pub fn push(&mut self, key: &str, value: impl Display) {
        self.lines.push((key.to_string(), value.to_string()));
    }

    /// Appends a boolean result that the governing theorem guarantees;
    /// `false` counts as a failure.
    pub fn expect(&mut self, key: &str, ok: bool) {
        self.push(key, ok);
        if !ok {
            self.failures.push(format!("{key}: expected true"));
        }
    }

    /// Records an input file as its name and SHA-256 digest.
    pub fn input(&mut self, path: &Path) -> std::io::Result<()> {
        let bytes = fs::read(path)?;
        let mut hex = String::with_capacity(64);
        for byte in Sha256::digest(&bytes) {
            write!(hex, "{byte:02x}").expect("writing to a string");
        }
        let name = match path.file_name() {
            Some(name) => name.to_string_lossy().into_owned(),
            None => path.display().to_string(),
        };
        self.push("input", format!("{name} sha256:{hex}"));
        Ok(())
    }

    /// Summarizes a verification suite under `key`, itemizing each failing
    /// law as its own `fail:` line.
    pub fn suite(&mut self, key: &str, rep: &VerificationReport) {
        if rep.passed() {
            self.push(key, format!("pass ({} instances)", rep.total_instances()));
            return;
        }
        self.push(
            key,
            format!("fail ({} of {} instances)", rep.total_failures(), rep.total_instances()),
        );
        for item in rep.items() {
            if !item.passed() {
                self.failures.push(format!(
                    "{key}: {} ({} of {} instances)",
                    item.label, item.failures, item.instances
                ));
            }
        }
    }

    /// Records a hard error (load failure, rejected precondition) as both a
    /// result line and a failure.
    pub fn error(&mut self, key: &str, message: impl Display) {
        self.push(key, format!("error: {message}"));
        self.failures.push(format!("{key}: {message}"));
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for (key, value) in &self.lines {
            out.push_str(key);
            out.push_str(": ");
            out.push_str(value);
            out.push('\n');
        }
        writeln!(out, "failures: {}", self.failures.len()).expect("writing to a string");
        for failure in &self.failures {
            out.push_str("fail: ");
            out.push_str(failure);
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rendering_is_ordered_and_counts_failures() {
        let mut rep = RunReport::new("demo");
        rep.push("dim", 4);
        rep.expect("holds", true);
        rep.expect("breaks", false);
        rep.error("load", "no such file");
        let text = rep.render();
        assert_eq!(
            text,
            "command: demo\ndim: 4\nholds: true\nbreaks: false\nload: error: no such file\n\
             failures: 2\nfail: breaks: expected true\nfail: load: no such file\n"
        );
        assert!(!rep.passed());
    }

    #[test]
    fn suites_itemize_failing_laws_only() {
        let mut suite = VerificationReport::new("laws");
        suite.check("good law", &[0], true, "", "");
        suite.check("bad law", &[1], false, "0", "1");
        let mut rep = RunReport::new("demo");
        rep.suite("checks", &suite);
        let text = rep.render();
        assert!(text.contains("checks: fail (1 of 2 instances)"), "{text}");
        assert!(text.contains("fail: checks: bad law (1 of 1 instances)"), "{text}");
        assert!(!text.contains("good law"), "{text}");
    }
}
