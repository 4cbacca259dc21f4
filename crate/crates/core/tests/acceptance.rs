//! Runs the nine reproduction criteria and prints one line per criterion.

use isojac::reproduce::{run_all, CRITERIA};
use std::process::ExitCode;

fn main() -> ExitCode {
    let outcomes = run_all();
    assert_eq!(outcomes.len(), CRITERIA.len());
    for o in &outcomes {
        println!("{}", o.line());
    }
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    println!(
        "acceptance: {} passed, {failed} failed",
        outcomes.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
