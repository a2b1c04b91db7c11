//! Text and JSON renderings of suite results.

use std::fmt::Write as _;

use serde::Serialize;

use crate::suite::{find_check, CheckResult, Status};

#[derive(Serialize)]
struct Report<'a> {
    results: &'a [CheckResult],
}

/// `{"results":[...]}`, pretty-printed, newline-terminated.
pub fn to_json(results: &[CheckResult]) -> String {
    let mut out = serde_json::to_string_pretty(&Report { results }).expect("report serializes");
    out.push('\n');
    out
}

/// One row per check, followed by the note and witness of each check that
/// has them.
pub fn to_text(results: &[CheckResult], timings: bool) -> String {
    let width = results.iter().map(|r| r.id.len()).max().unwrap_or(2).max(2);
    let mut out = String::new();
    let _ = write!(out, "{:<width$}  STATUS  MAX_N", "ID");
    if timings {
        out.push_str("        MS");
    }
    out.push('\n');
    for r in results {
        let _ = write!(out, "{:<width$}  {:<6}  {:>5}", r.id, r.status.to_string(), r.max_n);
        if timings {
            let _ = write!(out, "  {:>8}", r.ms);
        }
        out.push('\n');
        if let Some(note) = find_check(&r.id).and_then(|c| c.note) {
            let _ = writeln!(out, "{:width$}  note: {note}", "");
        }
        if let Some(w) = &r.witness {
            let _ = writeln!(out, "{:width$}  witness: {w}", "");
        }
    }
    let failed = results.iter().filter(|r| r.status == Status::Fail).count();
    let _ = writeln!(out, "{} checks, {} failed", results.len(), failed);
    out
}
