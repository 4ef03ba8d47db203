//! DP-(d1,…,dk)-colorings: exact search plus independent verification.
//!
//! cargo run --example defective

use planar_dp::catalog::generate;
use planar_dp::cover::Cover;
use planar_dp::solver::{find_defective_dp, verify_defective, Outcome};

fn main() {
    let k4 = generate("k4").unwrap();
    for (label, cover) in [
        ("identity", Cover::identity(&k4, 3)),
        ("random seed 5", Cover::random(&k4, 3, 5, true)),
    ] {
        for d in [[0, 0, 0], [0, 2, 2], [1, 1, 1]] {
            let search = find_defective_dp(&cover, &d, 1_000_000).unwrap();
            print!("K4 {label} d={d:?}: {} after {} nodes", search.outcome.verdict(), search.nodes);
            if let Outcome::Found(t) = &search.outcome {
                let report = verify_defective(&cover, t, &d).unwrap();
                print!(", colors {:?}, verified {}", t.colors, report.pass);
            }
            println!();
        }
    }
}
