//! Runs every registered identity and counterexample search and prints the
//! suite report as JSON.
//!
//! Run with `cargo run --release --example identity_suite -- [count] [exact|float]`.

use recsym::checker::{run_suite, SampleConfig};
use recsym::Backend;

fn main() {
    let mut args = std::env::args().skip(1);
    let count = args.next().and_then(|s| s.parse().ok()).unwrap_or(200);
    let backend: Backend = args.next().and_then(|s| s.parse().ok()).unwrap_or(Backend::Exact);
    let cfg = SampleConfig { count, backend, ..SampleConfig::default() };

    let suite = run_suite(&cfg);
    for r in &suite.identities {
        eprintln!("{} {:<26} worst rel {:.2e}", if r.passed { "PASS" } else { "FAIL" }, r.identity_id, r.worst_rel_residual);
    }
    for s in &suite.searches {
        let found = s.witness.as_ref().map_or("none".to_string(), |w| format!("at {}", w.stream_position));
        eprintln!("{} {:<26} witness {found}", if s.matches_expectation { "OK  " } else { "FAIL" }, s.property_id);
    }
    println!("{}", serde_json::to_string_pretty(&suite.summary).expect("serializable"));
    std::process::exit(if suite.summary.all_ok { 0 } else { 1 });
}
