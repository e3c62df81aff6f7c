//! Prints one line per acceptance criterion and fails if any criterion fails.

use morsify::acceptance::run_all;

fn main() {
    let only: Vec<String> = std::env::args().skip(1).filter(|a| a.starts_with('P')).collect();
    let outcomes: Vec<_> = if only.is_empty() {
        run_all()
    } else {
        only.iter().filter_map(|id| morsify::acceptance::run_one(id)).collect()
    };
    let mut failed = 0;
    for o in &outcomes {
        let mark = if o.passed { "PASS" } else { "FAIL" };
        println!("{} {} ({:.3?}): {}", o.id, mark, o.elapsed, o.detail);
        if !o.passed {
            failed += 1;
        }
    }
    println!("{} of {} criteria passed", outcomes.len() - failed, outcomes.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
