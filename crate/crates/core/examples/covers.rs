//! Building covers: identity, seeded random, exhaustive enumeration, JSON.
//!
//! cargo run --example covers

use planar_dp::catalog::generate;
use planar_dp::cover::{enumerate_covers, Cover};
use planar_dp::graph::PlaneGraph;

fn main() {
    let c5 = generate("cycle:5").unwrap();
    let identity = Cover::identity(&c5, 3);
    println!("identity cover of C5: {} cover edges", identity.cover_edge_count());

    let random = Cover::random(&c5, 3, 42, true);
    assert_eq!(random, Cover::random(&c5, 3, 42, true), "same seed, same cover");
    for m in random.matchings() {
        println!("  M{:?} = {:?}", m.edge, m.pairs);
    }
    let json = serde_json::to_string(&random).unwrap();
    let back: Cover = serde_json::from_str(&json).unwrap();
    assert_eq!(back, random);
    println!("  JSON round trip ok ({} bytes)", json.len());

    let edge = PlaneGraph::from_coordinates(&[(0.0, 0.0), (1.0, 0.0)], &[(0, 1)]).unwrap();
    let all = enumerate_covers(&edge, 3, 3).unwrap();
    println!("covers of a single edge with k = 3: {}", all.count());
}
