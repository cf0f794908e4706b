//! Parallel suite runner and report rendering.

use std::io::Write;

use hypercauchy_core::verification::{suite_checks, CheckReport, Suite, ToleranceMode};
use rayon::prelude::*;

use crate::format::fmt_g;

/// Runs the checks of `suite` on the current rayon pool, keeping suite order.
pub fn run_parallel(suite: Suite) -> Vec<CheckReport> {
    let checks = suite_checks(suite);
    let nested: Vec<Vec<CheckReport>> = checks.par_iter().map(|c| c.run()).collect();
    nested.into_iter().flatten().collect()
}

pub fn all_passed(reports: &[CheckReport]) -> bool {
    reports.iter().all(CheckReport::passed)
}

/// Tab-separated table, one line per check, then a summary line.
pub fn write_table<W: Write>(reports: &[CheckReport], mut out: W) -> std::io::Result<()> {
    writeln!(out, "status\tcheck\tmeasured\texpected\ttolerance\tdetail")?;
    for r in reports {
        let tol = match r.mode() {
            ToleranceMode::Absolute => fmt_g(r.tolerance()),
            ToleranceMode::Relative => format!("{} rel", fmt_g(r.tolerance())),
        };
        writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}\t{}",
            if r.passed() { "PASS" } else { "FAIL" },
            r.check_name(),
            fmt_g(r.measured()),
            fmt_g(r.expected()),
            tol,
            r.detail()
        )?;
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    writeln!(out, "# {} checks, {} passed, {} failed", reports.len(), reports.len() - failed, failed)?;
    out.flush()
}

pub fn write_json<W: Write>(reports: &[CheckReport], mut out: W) -> std::io::Result<()> {
    serde_json::to_writer_pretty(&mut out, reports)?;
    writeln!(out)?;
    out.flush()
}
