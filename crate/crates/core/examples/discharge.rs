//! Exact discharging ledgers and their audit.
//!
//! cargo run --example discharge

use planar_dp::catalog::generate;
use planar_dp::discharge::rational::format;
use planar_dp::discharge::{audit, run_rules, RuleSet};

fn main() {
    for (name, rules) in [("dodecahedron", RuleSet::Rs48), ("cube", RuleSet::Rs46), ("figure1", RuleSet::Rs48)] {
        let g = generate(name).unwrap();
        let ledger = run_rules(&g, rules).unwrap();
        let a = audit(&g, &ledger);
        println!(
            "{name} [{rules}]: {} transfers, Σμ = {}, Σμ* = {}, audit clean = {}",
            ledger.transfers.len(),
            format(&a.initial_sum),
            format(&a.final_sum),
            a.clean()
        );
        for t in ledger.transfers.iter().take(3) {
            println!("  {} → {} {} ({:?})", t.source, t.target, format(&t.amount), t.rule);
        }
        for n in a.negatives.iter().take(3) {
            println!(
                "  negative {} = {}: {} reducible nearby, unmet {:?}",
                n.element,
                format(&n.final_charge),
                n.reducible.len(),
                n.hypothesis_failures
            );
        }
    }
}
