//! Structural lemma checks with witnesses and hypothesis tracking.
//!
//! cargo run --example lemmas

use planar_dp::catalog::generate;
use planar_dp::discharge::{check_structural_lemmas, Verdict};
use planar_dp::graph::Profile;

fn main() {
    for name in ["dodecahedron", "theta:2,3,3", "cycle:3"] {
        let g = generate(name).unwrap();
        let report = check_structural_lemmas(&g, Profile::No48);
        println!("{name}: sound = {}", report.sound());
        for item in &report.items {
            let status = match &item.verdict {
                Verdict::Holds => "holds".to_string(),
                Verdict::Violated { witness } => format!("violated: {}", witness.note),
                Verdict::HypothesisNotMet { conclusion_holds, witness, .. } => format!(
                    "hypotheses unmet, conclusion {}{}",
                    if *conclusion_holds { "holds" } else { "fails" },
                    witness
                        .as_ref()
                        .and_then(|w| w.cycle.as_ref())
                        .map(|c| format!(", witness {}-cycle {c:?}", c.len()))
                        .unwrap_or_default()
                ),
            };
            println!("  {:?}: {status}", item.item);
        }
    }
}
