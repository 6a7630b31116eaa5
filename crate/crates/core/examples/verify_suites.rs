//! Run every acceptance criterion and print one line per suite.
//!
//! `cargo run --release --example verify_suites -- lemma-2.13` runs one suite.

use contact_duality::harness::{run_suite, DEFAULT_SEED, SUITES};

fn main() -> contact_duality::Result<()> {
    let only: Vec<String> = std::env::args().skip(1).collect();
    for s in SUITES.iter().filter(|s| only.is_empty() || only.iter().any(|o| o == s.name)) {
        let r = run_suite(s.name, DEFAULT_SEED, None)?;
        println!(
            "{:<28} {:<4} checked={:<9} failures={:<4} {}",
            r.suite,
            if r.pass { "PASS" } else { "FAIL" },
            r.instances_checked,
            r.failure_count,
            r.failures.first().map(|f| f.to_string()).unwrap_or_default()
        );
    }
    Ok(())
}
