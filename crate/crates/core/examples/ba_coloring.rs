//! DP-B_A-colorings: ordered transversals, the verifier and both finders.
//!
//! cargo run --example ba_coloring

use planar_dp::catalog::generate;
use planar_dp::cover::{Cover, Matching, Provenance};
use planar_dp::solver::{find_ba, find_ba_order, structure_of_transversal, verify_ba, Transversal};

fn main() {
    let cube = generate("cube").unwrap();
    let cover = Cover::random(&cube, 3, 1, true);
    let search = find_ba(&cover, 1_000_000).unwrap();
    let ot = search.outcome.found().expect("the cube is B_A-colorable here").clone();
    println!("cube: colors {:?}, order {:?}", ot.transversal.colors, ot.order);
    let report = verify_ba(&cover, &ot).unwrap();
    let shape = structure_of_transversal(&cover, &ot.transversal).unwrap();
    println!(
        "  verified {}, H[T] linear forest {}, color-1 class independent {}",
        report.pass, shape.is_linear_forest, shape.color1_independent
    );

    // x–y–z with (x,1)(y,2) and (y,2)(z,1) matched: T = {(x,1),(y,2),(z,1)}
    // meets both necessary conditions but has no valid order.
    let example = Cover::new(
        3,
        3,
        vec![(0, 1), (1, 2)],
        vec![vec![1, 2, 3]; 3],
        vec![
            Matching { edge: (0, 1), pairs: vec![(1, 2)] },
            Matching { edge: (1, 2), pairs: vec![(2, 1)] },
        ],
        Provenance::Manual,
    );
    let t = Transversal::new(vec![1, 2, 1]);
    let fixed = find_ba_order(&example, &t, 1_000).unwrap();
    println!("three-node example, fixed T: {}", fixed.outcome.verdict());
    let any = find_ba(&example, 1_000).unwrap();
    println!("three-node example, any T: {}", any.outcome.verdict());
}
