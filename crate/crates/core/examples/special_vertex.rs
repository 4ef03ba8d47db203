//! The neighbourhood of a special 3-vertex (incident with a 3-, 5- and 6-face).
//!
//! cargo run --example special_vertex

use planar_dp::catalog::generate;
use planar_dp::discharge::special_vertex_analysis;

fn main() {
    let g = generate("figure1").unwrap();
    for r in special_vertex_analysis(&g) {
        println!(
            "v{}: f1 = f{}, f2 = f{}, f3 = f{}, labels {:?}",
            r.vertex, r.triangle, r.five_face, r.six_face, r.labels
        );
        for (name, c) in [
            ("v4 = v7", &r.identification),
            ("[v4 v5 v6] not a face", &r.outer_triangle_open),
            ("one 3-face on f2", &r.one_triangle_on_five_face),
            ("unique", &r.unique),
        ] {
            println!("  {name}: {} — {}", c.holds, c.detail);
        }
        for failure in &r.hypothesis_failures {
            println!("  unmet: {failure}");
        }
    }
}
