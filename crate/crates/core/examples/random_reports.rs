//! Seeded random instances checked with every applicable check; prints one
//! JSON report per line, as the `verify` subcommand does.
//!
//!     cargo run --release --example random_reports -- 42

use hstar_decomp::harness::{random_instances, verify_each, Check, HarnessConfig, InstanceKind};

fn main() {
    let seed: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(0);
    let mut instances = random_instances(InstanceKind::Graph, 6, 3, seed, 0.5);
    instances.extend(random_instances(InstanceKind::Poset, 7, 3, seed, 1.0 / 3.0));
    let config = HarnessConfig {
        all_witnesses: true,
        ..HarnessConfig::default()
    };
    let summary = verify_each(&instances, &Check::ALL, &config, |report| {
        println!("{}", serde_json::to_string(&report).expect("reports serialize"));
    });
    eprintln!("{summary}");
}
