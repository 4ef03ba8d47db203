//! Face tracing, face adjacency and vertex classes on a small plane graph.
//!
//! cargo run --example faces

use planar_dp::catalog::generate;
use planar_dp::graph::PlaneGraph;

fn main() {
    // Two triangles glued along an edge, drawn with straight lines.
    let diamond = PlaneGraph::from_coordinates(
        &[(0.0, 1.0), (-1.0, 0.0), (1.0, 0.0), (0.0, -1.0)],
        &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)],
    )
    .expect("drawing is plane");
    println!(
        "diamond: V={} E={} F={}",
        diamond.vertex_count(),
        diamond.edge_count(),
        diamond.face_count()
    );
    for f in diamond.faces() {
        println!("  f{} degree {} walk {:?} simple={}", f.id, f.degree(), f.walk, f.simple);
    }
    for a in 0..diamond.face_count() {
        for b in a + 1..diamond.face_count() {
            let adj = diamond.face_adjacency(a, b);
            println!("  f{a}–f{b}: {:?}, shared edges {:?}", adj.kind, adj.shared_edges);
        }
    }

    let g = generate("figure1").unwrap();
    let classes = g.classify_vertices();
    println!("figure1 vertex classes:");
    for v in 0..g.vertex_count() {
        let info = classes.info(v);
        println!(
            "  v{v}: degree {} {:?}{}",
            info.degree,
            info.kind,
            if info.special { " special" } else { "" }
        );
    }
}
