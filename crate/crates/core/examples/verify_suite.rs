//! Runs the full verification suite and prints failing checks.

use chi_lie::analysis::run_verifications;

fn main() {
    let report = run_verifications(3);
    for check in report.failures() {
        println!("FAIL {} {} {}", check.name, check.params, check.value);
    }
    println!("{} checks, passed: {}", report.checks.len(), report.passed);
}
