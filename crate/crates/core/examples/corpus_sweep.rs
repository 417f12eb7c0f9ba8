//! Runs the built-in corpus and prints one line per entry.

use leafbound::corpus::run_corpus;

fn main() {
    let filter = std::env::args().nth(1);
    let outcomes = run_corpus(filter.as_deref(), 0);
    for o in &outcomes {
        let verdicts = o.report.as_ref().map_or(0, |r| r.verdicts.iter().filter(|v| v.holds == Some(true)).count());
        println!("{:<32} {} ({verdicts} verdicts hold)", o.name, if o.passed { "pass" } else { "FAIL" });
    }
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    println!("{} entries, {failed} failed", outcomes.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
