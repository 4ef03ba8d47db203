//! Shared fixtures: straight-line drawings with pendant padding, and the two
//! local configurations used by the per-element and β suites.

#![allow(dead_code)]

use std::f64::consts::TAU;

use planar_dp::graph::{FaceId, PlaneGraph, VertexId};

#[derive(Debug, Clone, Default)]
pub struct Drawing {
    pub points: Vec<(f64, f64)>,
    pub edges: Vec<(VertexId, VertexId)>,
}

impl Drawing {
    pub fn point(&mut self, p: (f64, f64)) -> VertexId {
        self.points.push(p);
        self.points.len() - 1
    }

    pub fn edge(&mut self, a: VertexId, b: VertexId) {
        self.edges.push((a, b));
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// Attaches one pendant per entry of `degrees`, fanned around direction
    /// `dir` (radians). A pendant of degree d carries d − 1 leaves of its own.
    pub fn pad_toward(&mut self, v: VertexId, dir: f64, degrees: &[usize]) {
        let (x, y) = self.points[v];
        let m = degrees.len() as f64;
        for (j, &d) in degrees.iter().enumerate() {
            assert!(d >= 1);
            let a = dir + 0.5 * (j as f64 - (m - 1.0) / 2.0);
            let p = self.point((x + 0.12 * a.cos(), y + 0.12 * a.sin()));
            self.edge(v, p);
            let leaves = (d - 1) as f64;
            for l in 0..d - 1 {
                let b = a + 0.12 * (l as f64 - (leaves - 1.0) / 2.0);
                let (px, py) = self.points[p];
                let q = self.point((px + 0.06 * b.cos(), py + 0.06 * b.sin()));
                self.edge(p, q);
            }
        }
    }

    /// Pads `v` radially away from the origin.
    pub fn pad(&mut self, v: VertexId, degrees: &[usize]) {
        let (x, y) = self.points[v];
        self.pad_toward(v, y.atan2(x), degrees);
    }

    /// Plain leaves until `v` reaches `target` degree.
    pub fn pad_to(&mut self, v: VertexId, target: usize) {
        let have = self.degree(v);
        assert!(have <= target, "vertex {v} already has degree {have} > {target}");
        self.pad(v, &vec![1; target - have]);
    }

    pub fn build(&self) -> PlaneGraph {
        PlaneGraph::from_coordinates(&self.points, &self.edges).expect("fixture drawing is plane")
    }
}

fn polar(r: f64, a: f64) -> (f64, f64) {
    (r * a.cos(), r * a.sin())
}

/// A centre vertex whose incident faces have the given degrees, in
/// counterclockwise order. Face `i` lies between `spokes[i]` and
/// `spokes[i + 1]`, with `arcs[i]` the boundary vertices strictly between
/// them. Everything else is the outer face.
#[derive(Debug, Clone)]
pub struct Wheel {
    pub drawing: Drawing,
    pub center: VertexId,
    pub spokes: Vec<VertexId>,
    pub arcs: Vec<Vec<VertexId>>,
}

impl Wheel {
    pub fn new(face_degrees: &[usize]) -> Self {
        let d = face_degrees.len();
        assert!(d >= 3);
        let mut drawing = Drawing::default();
        let center = drawing.point((0.0, 0.0));
        let step = TAU / d as f64;
        let spokes: Vec<VertexId> = (0..d)
            .map(|i| drawing.point(polar(1.0, TAU / 4.0 + step * i as f64)))
            .collect();
        let mut arcs = Vec::new();
        for (i, &deg) in face_degrees.iter().enumerate() {
            assert!(deg >= 3);
            let inner = deg - 3;
            let start = TAU / 4.0 + step * i as f64;
            let arc: Vec<VertexId> = (1..=inner)
                .map(|j| drawing.point(polar(1.0, start + step * j as f64 / (inner + 1) as f64)))
                .collect();
            arcs.push(arc);
        }
        for i in 0..d {
            drawing.edge(center, spokes[i]);
            let mut path = vec![spokes[i]];
            path.extend(&arcs[i]);
            path.push(spokes[(i + 1) % d]);
            for w in path.windows(2) {
                drawing.edge(w[0], w[1]);
            }
        }
        Wheel {
            drawing,
            center,
            spokes,
            arcs,
        }
    }

    /// Boundary vertices of face `i`, starting at the centre.
    pub fn face_vertices(&self, i: usize) -> Vec<VertexId> {
        let d = self.spokes.len();
        let mut vs = vec![self.center, self.spokes[i]];
        vs.extend(&self.arcs[i]);
        vs.push(self.spokes[(i + 1) % d]);
        vs
    }
}

/// A k-gon face `ring[0..k]`; `caps[i] = Some(d)` closes edge
/// `ring[i] ring[i+1]` off with a d-face on the outside.
#[derive(Debug, Clone)]
pub struct Polygon {
    pub drawing: Drawing,
    pub ring: Vec<VertexId>,
}

impl Polygon {
    pub fn new(k: usize, caps: &[Option<usize>]) -> Self {
        assert_eq!(caps.len(), k);
        let mut drawing = Drawing::default();
        let step = TAU / k as f64;
        let ring: Vec<VertexId> = (0..k)
            .map(|i| drawing.point(polar(1.0, TAU / 4.0 + step * i as f64)))
            .collect();
        for i in 0..k {
            let (a, b) = (ring[i], ring[(i + 1) % k]);
            drawing.edge(a, b);
            if let Some(d) = caps[i] {
                assert!(d >= 3);
                let start = TAU / 4.0 + step * i as f64;
                let mut path = vec![a];
                for j in 1..=d - 2 {
                    path.push(drawing.point(polar(1.6, start + step * j as f64 / (d - 1) as f64)));
                }
                path.push(b);
                for w in path.windows(2) {
                    drawing.edge(w[0], w[1]);
                }
            }
        }
        Polygon { drawing, ring }
    }

    /// Pads every ring vertex with leaves up to `targets[i]`.
    pub fn with_degrees(mut self, targets: &[usize]) -> Self {
        for (i, &t) in targets.iter().enumerate() {
            let v = self.ring[i];
            self.drawing.pad_to(v, t);
        }
        self
    }
}

/// The face whose distinct vertices are exactly `vertices`.
pub fn face_with_vertices(g: &PlaneGraph, vertices: &[VertexId]) -> FaceId {
    let mut want = vertices.to_vec();
    want.sort_unstable();
    want.dedup();
    g.faces()
        .iter()
        .find(|f| f.vertices == want)
        .unwrap_or_else(|| panic!("no face on {want:?}"))
        .id
}

/// The 2-vertex path as a plane graph.
pub fn single_edge() -> PlaneGraph {
    PlaneGraph::from_coordinates(&[(0.0, 0.0), (1.0, 0.0)], &[(0, 1)]).unwrap()
}

pub fn path3() -> PlaneGraph {
    PlaneGraph::from_coordinates(&[(0.0, 0.0), (1.0, 0.0), (2.0, 0.5)], &[(0, 1), (1, 2)]).unwrap()
}

/// Two triangles sharing an edge.
pub fn diamond() -> PlaneGraph {
    PlaneGraph::from_coordinates(
        &[(0.0, 1.0), (-1.0, 0.0), (1.0, 0.0), (0.0, -1.0)],
        &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)],
    )
    .unwrap()
}
pub mod elements;
