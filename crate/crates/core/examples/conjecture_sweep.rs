//! Exhaustive sweep of the conjectured decompositions over all labeled graphs
//! and posets up to a given size (default 5), in parallel.
//!
//!     cargo run --release --example conjecture_sweep -- 5

use std::time::Instant;

use hstar_decomp::harness::{
    enumerate_labeled_graphs, enumerate_labeled_posets, verify_all, Check, HarnessConfig, Instance,
};

fn main() -> hstar_decomp::Result<()> {
    let max: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(5);
    let config = HarnessConfig::default();
    for d in 1..=max {
        let start = Instant::now();
        let graphs: Vec<Instance> = enumerate_labeled_graphs(d, max)?.map(Instance::Graph).collect();
        let posets: Vec<Instance> = enumerate_labeled_posets(d, max)?.map(Instance::Poset).collect();
        let (_, g) = verify_all(&graphs, &[Check::Conj61, Check::Conj64], &config);
        let (_, p) = verify_all(&posets, &[Check::Conj62], &config);
        println!(
            "d = {d}: graphs {g}; posets {p} ({:.2} s)",
            start.elapsed().as_secs_f64()
        );
    }
    Ok(())
}
