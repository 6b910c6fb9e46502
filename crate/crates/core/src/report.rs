//! Structured check results.

use std::collections::BTreeSet;
use std::fmt;

use crate::scalar::Field;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Failure {
    pub check: String,
    pub index: Vec<usize>,
    /// Nonzero residual coordinates as `k:num/den`, or a free-form message.
    pub residual: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    Inapplicable,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Inapplicable => "inapplicable",
        })
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub subject: String,
    pub checks: Vec<String>,
    pub failures: Vec<Failure>,
    pub inapplicable: Option<String>,
}

impl Report {
    pub fn new(subject: impl Into<String>) -> Self {
        Report {
            subject: subject.into(),
            ..Default::default()
        }
    }

    pub fn inapplicable(subject: impl Into<String>, reason: impl Into<String>) -> Self {
        Report {
            subject: subject.into(),
            inapplicable: Some(reason.into()),
            ..Default::default()
        }
    }

    pub fn ran(&mut self, check: &str) {
        if !self.checks.iter().any(|c| c == check) {
            self.checks.push(check.to_string());
        }
    }

    pub fn fail_vec<F: Field>(&mut self, check: &str, index: Vec<usize>, residual: &[F]) {
        self.ran(check);
        self.failures.push(Failure {
            check: check.to_string(),
            index,
            residual: render_sparse(residual),
        });
    }

    pub fn fail_msg(&mut self, check: &str, index: Vec<usize>, message: impl Into<String>) {
        self.ran(check);
        self.failures.push(Failure {
            check: check.to_string(),
            index,
            residual: vec![message.into()],
        });
    }

    /// Runs `check` and records a message failure when it returns false.
    pub fn expect(&mut self, check: &str, ok: bool, message: impl Into<String>) {
        self.ran(check);
        if !ok {
            self.fail_msg(check, vec![], message);
        }
    }

    pub fn absorb(&mut self, other: Report) {
        for c in other.checks {
            self.ran(&c);
        }
        self.failures.extend(other.failures);
        if self.inapplicable.is_none() {
            self.inapplicable = other.inapplicable;
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict() == Verdict::Pass
    }

    pub fn verdict(&self) -> Verdict {
        if self.inapplicable.is_some() {
            Verdict::Inapplicable
        } else if self.failures.is_empty() {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn failed_checks(&self) -> BTreeSet<&str> {
        self.failures.iter().map(|f| f.check.as_str()).collect()
    }

    pub fn sort(&mut self) {
        self.failures.sort();
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}: {}", self.subject, self.verdict())?;
        if let Some(reason) = &self.inapplicable {
            writeln!(f, "  inapplicable: {reason}")?;
        }
        let failed = self.failed_checks();
        for c in &self.checks {
            let mark = if failed.contains(c.as_str()) { "FAIL" } else { "ok" };
            writeln!(f, "  [{mark}] {c}")?;
        }
        for fl in &self.failures {
            let idx: Vec<String> = fl.index.iter().map(ToString::to_string).collect();
            writeln!(
                f,
                "    {} ({}): {}",
                fl.check,
                idx.join(","),
                fl.residual.join(" ")
            )?;
        }
        Ok(())
    }
}

pub fn render_sparse<F: Field>(v: &[F]) -> Vec<String> {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(k, x)| format!("{k}:{}", x.to_fraction_string()))
        .collect()
}
