use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Duration;

use maninforge::report::Verdict;
use maninforge::Report;
use serde::Serialize;

/// What a command produced: an optional document and an optional report.
#[derive(Default)]
pub struct Outcome {
    pub text: String,
    pub report: Option<Report>,
    pub details: BTreeMap<String, String>,
}

impl Outcome {
    pub fn document(text: String) -> Self {
        Outcome { text, ..Outcome::default() }
    }

    pub fn detail(mut self, key: &str, value: impl ToString) -> Self {
        self.details.insert(key.to_string(), value.to_string());
        self
    }

    pub fn verdict(&self) -> Verdict {
        self.report.as_ref().map_or(Verdict::Pass, Report::verdict)
    }
}

#[derive(Serialize)]
struct JsonFailure<'a> {
    check: &'a str,
    index: &'a [usize],
    residual: &'a [String],
}

#[derive(Serialize)]
struct JsonReport<'a> {
    command: &'a [String],
    subject: Option<&'a str>,
    verdict: String,
    inapplicable: Option<&'a str>,
    checks: Vec<&'a str>,
    failures: Vec<JsonFailure<'a>>,
    details: &'a BTreeMap<String, String>,
    output: &'a str,
    timing_ms: u64,
}

pub fn render_json(argv: &[String], out: &Outcome, elapsed: Duration) -> String {
    let rep = out.report.as_ref();
    let json = JsonReport {
        command: argv,
        subject: rep.map(|r| r.subject.as_str()),
        verdict: out.verdict().to_string(),
        inapplicable: rep.and_then(|r| r.inapplicable.as_deref()),
        checks: rep.map_or_else(Vec::new, |r| r.checks.iter().map(String::as_str).collect()),
        failures: rep.map_or_else(Vec::new, |r| {
            r.failures
                .iter()
                .map(|f| JsonFailure {
                    check: &f.check,
                    index: &f.index,
                    residual: &f.residual,
                })
                .collect()
        }),
        details: &out.details,
        output: &out.text,
        timing_ms: elapsed.as_millis() as u64,
    };
    serde_json::to_string_pretty(&json).expect("plain data serializes") + "\n"
}

/// The document verbatim, then details and report; the trailer is commented
/// out when a document precedes it so the output still parses.
pub fn render_text(out: &Outcome) -> String {
    let mut s = out.text.clone();
    let prefix = if out.text.is_empty() { "" } else { "# " };
    for (k, v) in &out.details {
        let _ = writeln!(s, "{prefix}{k}: {v}");
    }
    if let Some(rep) = &out.report {
        for line in rep.to_string().lines() {
            let _ = writeln!(s, "{prefix}{line}");
        }
    }
    s
}
