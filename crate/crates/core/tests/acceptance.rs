//! The ten acceptance criteria, one pass/fail line each.

use macdaha::suite::{run_criterion, RunConfig};

fn main() {
    let cfg = RunConfig::default();
    let mut all = true;
    for id in 1..=10 {
        let r = run_criterion(id, &cfg);
        let status = if r.passed() { "PASS" } else { "FAIL" };
        println!("criterion {:2} {} {} ({} checks, {:.1}s)", r.id, status, r.name, r.checked, r.seconds);
        for f in r.failures.iter().take(5) {
            println!("    {}", f);
        }
        all &= r.passed();
    }
    if !all {
        std::process::exit(1);
    }
}
