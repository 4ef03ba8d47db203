//! One local configuration per case of the final-charge analyses, with the
//! focal element's expected final charge.

use planar_dp::cover::{Cover, Matching, Provenance};
use planar_dp::discharge::rational::q;
use planar_dp::discharge::{Element, Rational, RuleSet};
use planar_dp::graph::{FaceId, PlaneGraph};

use super::{face_with_vertices, Drawing, Polygon, Wheel};

#[derive(Debug, Clone)]
pub struct ElementCase {
    pub name: &'static str,
    pub rules: RuleSet,
    pub graph: PlaneGraph,
    pub element: Element,
    pub expected: Rational,
}

/// Centre vertex with faces `faces`; spoke degrees are padded to `spokes`.
fn wheel_case(
    name: &'static str,
    rules: RuleSet,
    faces: &[usize],
    spokes: &[usize],
    expected: Rational,
) -> ElementCase {
    let mut w = Wheel::new(faces);
    for (i, &t) in spokes.iter().enumerate() {
        let s = w.spokes[i];
        w.drawing.pad_to(s, t);
    }
    ElementCase {
        name,
        rules,
        graph: w.drawing.build(),
        element: Element::Vertex(w.center),
        expected,
    }
}

fn polygon_case(
    name: &'static str,
    rules: RuleSet,
    caps: &[Option<usize>],
    degrees: &[usize],
    expected: Rational,
) -> ElementCase {
    let p = Polygon::new(caps.len(), caps).with_degrees(degrees);
    let graph = p.drawing.build();
    let f = face_with_vertices(&graph, &p.ring);
    ElementCase {
        name,
        rules,
        graph,
        element: Element::Face(f),
        expected,
    }
}

/// A 5-face `[v s1 a b s2]` at a special 3-vertex `v` (faces 3, 5, 6), with
/// one more good 3-vertex `a` on it.
pub fn beta_case_two_good() -> (PlaneGraph, FaceId) {
    let mut w = Wheel::new(&[3, 5, 6]);
    for i in 0..3 {
        let s = w.spokes[i];
        w.drawing.pad_to(s, 4);
    }
    let a = w.arcs[1][0];
    w.drawing.pad(a, &[1]);
    let g = w.drawing.build();
    let f = face_with_vertices(&g, &w.face_vertices(1));
    (g, f)
}

/// Same shape with three 3-vertices on the 5-face: `v` good, `a` and `b` a
/// bad pair, each with two 5⁺-neighbours.
pub fn beta_case_three() -> (PlaneGraph, FaceId) {
    let mut w = Wheel::new(&[3, 5, 6]);
    for i in 0..3 {
        let s = w.spokes[i];
        w.drawing.pad_to(s, 5);
    }
    let (a, b) = (w.arcs[1][0], w.arcs[1][1]);
    w.drawing.pad(a, &[6]);
    w.drawing.pad(b, &[6]);
    let g = w.drawing.build();
    let f = face_with_vertices(&g, &w.face_vertices(1));
    (g, f)
}

/// Two cycles sharing the cut vertex 0; their common outer face walks both.
/// `left` and `right` are the cycle lengths, `pads[i]` the number of leaves
/// pushed into the interior at the i-th non-shared vertex (left cycle first).
fn joined_cycles(left: usize, right: usize, pads: &[usize]) -> (PlaneGraph, FaceId) {
    let mut d = Drawing::default();
    let c = d.point((0.0, 0.0));
    let mut ring = vec![c];
    let cycle = |d: &mut Drawing, len: usize, side: f64, ring: &mut Vec<usize>| {
        // Regular polygon through the origin, centred at (side * r, 0).
        let r = 1.0;
        let cx = side * r;
        let mut prev = c;
        let mut interior = Vec::new();
        for j in 1..len {
            let a = std::f64::consts::PI * (if side < 0.0 { 0.0 } else { 1.0 })
                + std::f64::consts::TAU * j as f64 / len as f64;
            let v = d.point((cx + r * a.cos(), r * a.sin()));
            d.edge(prev, v);
            prev = v;
            interior.push((v, (cx, 0.0)));
            ring.push(v);
        }
        d.edge(prev, c);
        interior
    };
    let mut inner = cycle(&mut d, left, -1.0, &mut ring);
    inner.extend(cycle(&mut d, right, 1.0, &mut ring));
    for (i, &(v, (cx, cy))) in inner.iter().enumerate() {
        let n = pads.get(i).copied().unwrap_or(0);
        if n > 0 {
            let (x, y) = d.points[v];
            d.pad_toward(v, (cy - y).atan2(cx - x), &vec![1; n]);
        }
    }
    let g = d.build();
    let f = face_with_vertices(&g, &ring);
    (g, f)
}

fn joined_case(
    name: &'static str,
    rules: RuleSet,
    left: usize,
    right: usize,
    pads: &[usize],
    expected: Rational,
) -> ElementCase {
    let (graph, f) = joined_cycles(left, right, pads);
    ElementCase {
        name,
        rules,
        graph,
        element: Element::Face(f),
        expected,
    }
}

pub fn element_cases() -> Vec<ElementCase> {
    use RuleSet::{Rs46, Rs48};
    let s = Some;
    let mut cases = vec![
        // --- vertices, rs48 ---
        wheel_case("rs48 good 3-vertex on 3,6,6", Rs48, &[3, 6, 6], &[4, 4, 4], q(0, 1)),
        wheel_case("rs48 good 3-vertex on 6,6,6", Rs48, &[6, 6, 6], &[4, 4, 4], q(1, 2)),
        wheel_case("rs48 good 3-vertex on 5,6,7", Rs48, &[5, 6, 7], &[4, 4, 4], q(1, 6)),
        wheel_case("rs48 good 3-vertex on 3,5,8", Rs48, &[3, 5, 8], &[4, 4, 4], q(0, 1)),
        wheel_case("rs48 good 3-vertex on 3,5,9", Rs48, &[3, 5, 9], &[4, 4, 4], q(0, 1)),
        wheel_case("rs48 bad 3-vertex on 3,6,6", Rs48, &[3, 6, 6], &[5, 5, 3], q(0, 1)),
        wheel_case("rs48 bad 3-vertex on 6,5,6", Rs48, &[6, 5, 6], &[5, 5, 3], q(1, 12)),
        wheel_case("rs48 bad 3-vertex on 3,5,8", Rs48, &[3, 5, 8], &[5, 5, 3], q(0, 1)),
        wheel_case("rs48 bad special 3-vertex", Rs48, &[3, 5, 6], &[5, 5, 3], q(1, 3)),
        wheel_case("rs48 4-vertex", Rs48, &[5, 6, 5, 6], &[4, 4, 4, 4], q(0, 1)),
        wheel_case("rs48 5-vertex with four bad 3-neighbours", Rs48, &[3; 5], &[3, 3, 3, 3, 4], q(0, 1)),
        wheel_case("rs48 6-vertex with six bad 3-neighbours", Rs48, &[3; 6], &[3; 6], q(1, 2)),
        // --- faces, rs48 ---
        polygon_case("rs48 3-face", Rs48, &[s(5), s(6), s(8)], &[4, 4, 4], q(0, 1)),
        polygon_case(
            "rs48 5-face, two 3-faces, two good 3-vertices",
            Rs48,
            &[None, s(3), None, s(3), None],
            &[4, 3, 4, 3, 4],
            q(0, 1),
        ),
        polygon_case(
            "rs48 5-face, two 3-faces, three 3-vertices",
            Rs48,
            &[None, s(3), None, s(3), None],
            &[3, 3, 4, 3, 4],
            q(0, 1),
        ),
        polygon_case(
            "rs48 6-face, one 3-face, three 3-vertices",
            Rs48,
            &[s(3), None, None, None, None, None],
            &[3, 4, 3, 4, 3, 4],
            q(1, 6),
        ),
        polygon_case(
            "rs48 6-face, one 3-face, four bad 3-vertices",
            Rs48,
            &[s(3), None, None, None, None, None],
            &[3, 3, 4, 3, 3, 4],
            q(2, 3),
        ),
        polygon_case(
            "rs48 7-face, four 3-vertices",
            Rs48,
            &[None; 7],
            &[3, 4, 3, 4, 3, 3, 4],
            q(3, 2),
        ),
        polygon_case(
            "rs48 8-face, two 3-faces, four good 3-vertices",
            Rs48,
            &[s(3), None, None, None, s(3), None, None, None],
            &[3, 4, 3, 4, 3, 4, 3, 4],
            q(0, 1),
        ),
        polygon_case(
            "rs48 8-face, two 3-faces, five 3-vertices",
            Rs48,
            &[s(3), None, None, None, s(3), None, None, None],
            &[3, 3, 4, 3, 3, 4, 3, 4],
            q(5, 6),
        ),
        joined_case(
            "rs48 8-face bounded by a 3-cycle and a 5-cycle",
            Rs48,
            3,
            5,
            &[0, 0, 1, 1, 0, 1],
            q(2, 1),
        ),
        polygon_case(
            "rs48 9-face, five 3-faces, four good 3-vertices",
            Rs48,
            &[s(3), None, s(3), None, s(3), None, s(3), None, s(3)],
            &[4, 3, 4, 3, 4, 3, 4, 3, 4],
            q(0, 1),
        ),
        polygon_case(
            "rs48 9-face, three good 3-vertices",
            Rs48,
            &[None; 9],
            &[3, 3, 4, 3, 4, 3, 4, 3, 4],
            q(5, 3),
        ),
        polygon_case(
            "rs48 10-face, five 3-faces, five good 3-vertices",
            Rs48,
            &[s(3), None, s(3), None, s(3), None, s(3), None, s(3), None],
            &[4, 3, 4, 3, 4, 3, 4, 3, 4, 3],
            q(1, 6),
        ),
        // --- vertices, rs46 ---
        wheel_case("rs46 good 3-vertex on 5,5,5", Rs46, &[5, 5, 5], &[4, 4, 4], q(0, 1)),
        wheel_case("rs46 good 3-vertex on 3,7,7", Rs46, &[3, 7, 7], &[4, 4, 4], q(0, 1)),
        wheel_case("rs46 bad 3-vertex on 5,5,5", Rs46, &[5, 5, 5], &[5, 5, 3], q(0, 1)),
        wheel_case("rs46 bad 3-vertex on 3,7,7", Rs46, &[3, 7, 7], &[5, 5, 3], q(0, 1)),
        wheel_case("rs46 4-vertex", Rs46, &[5, 7, 5, 7], &[4, 4, 4, 4], q(0, 1)),
        wheel_case("rs46 5-vertex with four bad 3-neighbours", Rs46, &[3; 5], &[3, 3, 3, 3, 4], q(0, 1)),
        wheel_case("rs46 6-vertex with six bad 3-neighbours", Rs46, &[3; 6], &[3; 6], q(1, 2)),
        // --- faces, rs46 ---
        polygon_case("rs46 3-face", Rs46, &[s(5), s(7), s(9)], &[4, 4, 4], q(0, 1)),
        polygon_case(
            "rs46 5-face, two good 3-vertices",
            Rs46,
            &[None; 5],
            &[3, 4, 3, 4, 4],
            q(1, 3),
        ),
        polygon_case(
            "rs46 5-face, three 3-vertices",
            Rs46,
            &[None; 5],
            &[3, 3, 4, 3, 4],
            q(1, 3),
        ),
        joined_case("rs46 6-face on two triangles, four bad 3-vertices", Rs46, 3, 3, &[1, 1, 1, 1], q(1, 1)),
        joined_case("rs46 6-face on two triangles, three 3-vertices", Rs46, 3, 3, &[1, 1, 1, 0], q(1, 1)),
        polygon_case(
            "rs46 7-face, two 3-faces, three good 3-vertices",
            Rs46,
            &[s(3), None, None, s(3), None, None, None],
            &[3, 4, 4, 3, 4, 3, 4],
            q(5, 6),
        ),
        polygon_case(
            "rs46 8-face, four 3-faces, four good 3-vertices",
            Rs46,
            &[s(3), None, s(3), None, s(3), None, s(3), None],
            &[4, 3, 4, 3, 4, 3, 4, 3],
            q(2, 3),
        ),
    ];
    let (g, _) = beta_case_two_good();
    cases.push(ElementCase {
        name: "rs48 good special 3-vertex, β = 1/3 (two good 3-vertices)",
        rules: Rs48,
        element: Element::Vertex(0),
        expected: q(0, 1),
        graph: g,
    });
    let (g, _) = beta_case_three();
    cases.push(ElementCase {
        name: "rs48 good special 3-vertex, β = 1/3 (three 3-vertices)",
        rules: Rs48,
        element: Element::Vertex(0),
        expected: q(0, 1),
        graph: g,
    });
    cases
}

/// The 3-vertex path x–y–z with lists {1,2,3} whose only cover edges are
/// (x,1)(y,2) and (y,2)(z,1); as vertex ids x = 0, y = 1, z = 2.
pub fn three_node_example() -> Cover {
    Cover::new(
        3,
        3,
        vec![(0, 1), (1, 2)],
        vec![vec![1, 2, 3]; 3],
        vec![
            Matching {
                edge: (0, 1),
                pairs: vec![(1, 2)],
            },
            Matching {
                edge: (1, 2),
                pairs: vec![(2, 1)],
            },
        ],
        Provenance::Manual,
    )
}

/// The generator behind the β property: a special 3-vertex `v = 0` on faces
/// 3, 5, 6 with spokes padded to `spokes`, and pendants `pa`, `pb` (given by
/// their degrees) on the two free vertices of the 5-face.
pub fn beta_configuration(spokes: [usize; 3], pa: &[usize], pb: &[usize]) -> (PlaneGraph, FaceId) {
    let mut w = Wheel::new(&[3, 5, 6]);
    for (i, t) in spokes.into_iter().enumerate() {
        let s = w.spokes[i];
        w.drawing.pad_to(s, t);
    }
    let (a, b) = (w.arcs[1][0], w.arcs[1][1]);
    w.drawing.pad(a, pa);
    w.drawing.pad(b, pb);
    let g = w.drawing.build();
    let f = face_with_vertices(&g, &w.face_vertices(1));
    (g, f)
}

/// The local hypotheses behind the β bound: every vertex of `f` has degree
/// at least 3 and no reducible configuration is anchored on `f`.
pub fn beta_hypotheses_hold(g: &PlaneGraph, f: FaceId) -> bool {
    let face = g.face(f);
    face.vertices.iter().all(|&v| g.degree(v) >= 3)
        && g
            .find_reducible()
            .iter()
            .all(|r| !face.contains_vertex(r.vertex()))
}
