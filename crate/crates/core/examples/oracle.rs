//! Cross-checking the finders against the brute-force oracle.
//!
//! cargo run --release --example oracle

use planar_dp::catalog::generate;
use planar_dp::cover::Cover;
use planar_dp::solver::oracle::{brute_oracle, Mode};
use planar_dp::solver::{find_ba, find_defective_dp};

fn main() {
    let g = generate("k4").unwrap();
    let mut agree = 0;
    for seed in 0..100 {
        let cover = Cover::random(&g, 3, seed, seed % 2 == 0);
        let ba = find_ba(&cover, 1_000_000).unwrap().outcome.is_found();
        let d = find_defective_dp(&cover, &[0, 0, 0], 1_000_000).unwrap().outcome.is_found();
        let oracle_ba = brute_oracle(&cover, &Mode::Ba).unwrap().is_found();
        let oracle_d = brute_oracle(&cover, &Mode::Defective(vec![0, 0, 0])).unwrap().is_found();
        assert_eq!((ba, d), (oracle_ba, oracle_d), "seed {seed}");
        agree += 1;
    }
    println!("K4: finders and oracle agree on {agree} covers");
}
