//! The eight acceptance criteria on the fixed seed 0, one `[PASS]`/`[FAIL]`
//! line each. Runs without the libtest harness so the lines always show; an
//! optional argument selects criteria by number or name substring.

use std::process::ExitCode;
use std::time::Instant;

use convexval::suite::{self, CRITERIA};

const SEED: u64 = 0;

fn main() -> ExitCode {
    let filters: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let selected: Vec<u8> = CRITERIA
        .iter()
        .filter(|(id, name)| {
            filters.is_empty()
                || filters.iter().any(|f| f == &id.to_string() || format!("criterion_{id}_{name}").contains(f.as_str()))
        })
        .map(|&(id, _)| id)
        .collect();
    let start = Instant::now();
    let outcomes = if selected.len() == CRITERIA.len() {
        suite::run_all(SEED)
    } else {
        selected.iter().map(|&id| suite::run(id, SEED).expect("known criterion")).collect()
    };
    let mut failed = 0;
    for o in &outcomes {
        println!("{}", o.line());
        for f in &o.failures {
            println!("    {f}");
        }
        failed += usize::from(!o.passed());
    }
    println!(
        "acceptance: {} passed, {failed} failed, seed {SEED}, {:.1}s",
        outcomes.len() - failed,
        start.elapsed().as_secs_f64()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
