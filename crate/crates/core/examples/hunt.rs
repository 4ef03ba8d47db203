//! Seeded counterexample hunt over catalog graphs.
//!
//! cargo run --release --example hunt

use planar_dp::catalog::{generate, STANDARD};
use planar_dp::graph::Profile;
use planar_dp::hunt::{hunt, replay, HuntConfig};

fn main() {
    let graphs: Vec<_> = STANDARD.iter().map(|n| (n.to_string(), generate(n).unwrap())).collect();
    for profile in [Profile::No48, Profile::No46] {
        let cfg = HuntConfig {
            profile,
            k: 3,
            seeds: 0..25,
            node_limit: 5_000_000,
            threads: None,
        };
        let r = hunt(&graphs, &cfg);
        println!(
            "{profile}: {} graphs, {} runs, {} found, {} candidates, {} skipped",
            r.graphs.len(),
            r.runs,
            r.found,
            r.candidates.len(),
            r.skipped.len()
        );
        for c in &r.candidates {
            println!("  candidate {} seed {}: replay {}", c.graph, c.seed, replay(c, 5_000_000).verdict());
        }
    }
}
