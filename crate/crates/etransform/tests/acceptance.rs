//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails. Details of failures and discrepancies follow the lines.

use std::process::ExitCode;

use etransform::verify::{self, VerifyOptions};

fn main() -> ExitCode {
    let report = verify::run(&VerifyOptions::default());
    for c in &report.criteria {
        println!("{}", c.line());
    }
    for c in &report.criteria {
        if c.discrepancies.is_empty() {
            continue;
        }
        println!("\n[{}] {} ({} entries)", c.id, c.name, c.discrepancies.len());
        for d in c.discrepancies.iter().take(12) {
            println!("  {d}");
        }
        if c.discrepancies.len() > 12 {
            println!("  ... {} more", c.discrepancies.len() - 12);
        }
    }
    let failed = report.criteria.iter().filter(|c| !c.passed).count();
    println!("\n{} of {} criteria passed", report.criteria.len() - failed, report.criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
