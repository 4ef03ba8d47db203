//! Embedded plane graphs given by rotation systems.
//!
//! A [`PlaneGraph`] stores, for every vertex, the cyclic order of its
//! neighbors. From that order the graph derives its darts (directed edges),
//! traces its faces and validates the embedding against Euler's formula.
//!
//! Face tracing uses one fixed convention: the successor of the dart
//! `u -> v` is `v -> w`, where `w` immediately follows `u` in the rotation
//! of `v`. With counterclockwise rotations this walks every bounded face
//! clockwise and the outer face counterclockwise.

mod classify;
mod cycles;
mod profile;

pub use classify::{DegreeClass, ReducibleConfiguration, ThreeKind, VertexClasses, VertexInfo};
pub use cycles::CycleList;
pub use profile::{ForbiddenCycleStatus, HypothesisFailure, HypothesisReport, Profile};

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type VertexId = usize;
pub type FaceId = usize;
pub type DartId = usize;
pub type EdgeId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has no vertices")]
    Empty,
    #[error("vertex {vertex} lists neighbor {neighbor}, outside 0..{count}")]
    NeighborOutOfRange {
        vertex: VertexId,
        neighbor: VertexId,
        count: usize,
    },
    #[error("vertex {vertex} lists itself (loop)")]
    Loop { vertex: VertexId },
    #[error("vertex {vertex} lists neighbor {neighbor} more than once")]
    RepeatedNeighbor { vertex: VertexId, neighbor: VertexId },
    #[error("asymmetric rotation: vertex {u} lists {v} but vertex {v} does not list {u}")]
    Asymmetric { u: VertexId, v: VertexId },
    #[error(
        "embedding violates Euler's formula on the component of vertex {root}: \
         {vertices} - {edges} + {faces} != 2"
    )]
    EulerViolation {
        root: VertexId,
        vertices: usize,
        edges: usize,
        faces: usize,
    },
    #[error("straight-line edges {a:?} and {b:?} cross")]
    Crossing {
        a: (VertexId, VertexId),
        b: (VertexId, VertexId),
    },
    #[error("edge {edge:?} references a vertex outside 0..{count}")]
    EdgeOutOfRange { edge: (VertexId, VertexId), count: usize },
}

/// A face of a plane graph, described by its boundary walk.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Face {
    pub id: FaceId,
    /// Boundary walk as darts; a cut edge contributes both of its darts.
    pub darts: Vec<DartId>,
    /// Tail vertex of each dart of the walk, in walk order.
    pub walk: Vec<VertexId>,
    /// Distinct incident vertices, sorted.
    pub vertices: Vec<VertexId>,
    /// Distinct boundary edges, sorted.
    pub edges: Vec<EdgeId>,
    /// True iff the boundary walk is a cycle.
    pub simple: bool,
}

impl Face {
    /// Length of the boundary walk, d(f).
    pub fn degree(&self) -> usize {
        self.darts.len()
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn contains_edge(&self, e: EdgeId) -> bool {
        self.edges.binary_search(&e).is_ok()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AdjacencyKind {
    Disjoint,
    VertexOnly,
    Adjacent,
    NormallyAdjacent,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceAdjacency {
    pub kind: AdjacencyKind,
    pub shared_edges: Vec<EdgeId>,
    pub shared_vertices: Vec<VertexId>,
}

impl FaceAdjacency {
    pub fn is_adjacent(&self) -> bool {
        matches!(
            self.kind,
            AdjacencyKind::Adjacent | AdjacencyKind::NormallyAdjacent
        )
    }
}

/// An immutable plane graph: a simple graph together with a rotation system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneGraph {
    rotations: Vec<Vec<VertexId>>,
    sorted_neighbors: Vec<Vec<VertexId>>,
    offsets: Vec<usize>,
    dart_tail: Vec<VertexId>,
    dart_head: Vec<VertexId>,
    dart_rev: Vec<DartId>,
    dart_next: Vec<DartId>,
    dart_face: Vec<FaceId>,
    dart_edge: Vec<EdgeId>,
    edges: Vec<(VertexId, VertexId)>,
    faces: Vec<Face>,
    component: Vec<usize>,
    component_count: usize,
}

impl PlaneGraph {
    /// Builds and validates a plane graph from per-vertex cyclic neighbor lists.
    ///
    /// Disconnected inputs are accepted (and reported by [`Self::is_connected`]);
    /// Euler's formula is checked on every component that has an edge.
    pub fn from_rotations(rotations: Vec<Vec<VertexId>>) -> Result<Self, GraphError> {
        let n = rotations.len();
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut sorted_neighbors = Vec::with_capacity(n);
        for (v, rot) in rotations.iter().enumerate() {
            let mut sorted = rot.clone();
            for &w in rot {
                if w >= n {
                    return Err(GraphError::NeighborOutOfRange {
                        vertex: v,
                        neighbor: w,
                        count: n,
                    });
                }
                if w == v {
                    return Err(GraphError::Loop { vertex: v });
                }
            }
            sorted.sort_unstable();
            if let Some(w) = sorted.windows(2).find(|p| p[0] == p[1]) {
                return Err(GraphError::RepeatedNeighbor {
                    vertex: v,
                    neighbor: w[0],
                });
            }
            sorted_neighbors.push(sorted);
        }
        for (v, rot) in rotations.iter().enumerate() {
            for &w in rot {
                if sorted_neighbors[w].binary_search(&v).is_err() {
                    return Err(GraphError::Asymmetric { u: v, v: w });
                }
            }
        }

        let mut offsets = Vec::with_capacity(n + 1);
        let mut total = 0;
        for rot in &rotations {
            offsets.push(total);
            total += rot.len();
        }
        offsets.push(total);

        let mut dart_tail = Vec::with_capacity(total);
        let mut dart_head = Vec::with_capacity(total);
        for (v, rot) in rotations.iter().enumerate() {
            for &w in rot {
                dart_tail.push(v);
                dart_head.push(w);
            }
        }
        let position = |v: VertexId, w: VertexId| -> usize {
            rotations[v]
                .iter()
                .position(|&x| x == w)
                .expect("symmetry checked")
        };
        let mut dart_rev = vec![0; total];
        let mut dart_next = vec![0; total];
        for d in 0..total {
            let (u, v) = (dart_tail[d], dart_head[d]);
            let back = position(v, u);
            dart_rev[d] = offsets[v] + back;
            dart_next[d] = offsets[v] + (back + 1) % rotations[v].len();
        }

        let mut edges = Vec::with_capacity(total / 2);
        let mut dart_edge = vec![usize::MAX; total];
        for d in 0..total {
            if dart_edge[d] == usize::MAX {
                let id = edges.len();
                let (a, b) = (dart_tail[d], dart_head[d]);
                edges.push((a.min(b), a.max(b)));
                dart_edge[d] = id;
                dart_edge[dart_rev[d]] = id;
            }
        }
        // Edge ids follow sorted endpoint order so that iteration is canonical.
        let mut order: Vec<EdgeId> = (0..edges.len()).collect();
        order.sort_by_key(|&e| edges[e]);
        let mut relabel = vec![0; edges.len()];
        for (new, &old) in order.iter().enumerate() {
            relabel[old] = new;
        }
        let edges: Vec<(VertexId, VertexId)> = order.iter().map(|&e| edges[e]).collect();
        for e in dart_edge.iter_mut() {
            *e = relabel[*e];
        }

        let mut dart_face = vec![usize::MAX; total];
        let mut faces = Vec::new();
        for start in 0..total {
            if dart_face[start] != usize::MAX {
                continue;
            }
            let id = faces.len();
            let mut darts = Vec::new();
            let mut d = start;
            loop {
                dart_face[d] = id;
                darts.push(d);
                d = dart_next[d];
                if d == start {
                    break;
                }
            }
            faces.push(make_face(id, darts, &dart_tail, &dart_edge));
        }

        let (component, component_count) = components(&sorted_neighbors);

        if total == 0 && n == 1 {
            // A lone vertex still bounds the single (empty) face of the plane.
            faces.push(Face {
                id: 0,
                darts: Vec::new(),
                walk: Vec::new(),
                vertices: Vec::new(),
                edges: Vec::new(),
                simple: false,
            });
        }

        let graph = PlaneGraph {
            rotations,
            sorted_neighbors,
            offsets,
            dart_tail,
            dart_head,
            dart_rev,
            dart_next,
            dart_face,
            dart_edge,
            edges,
            faces,
            component,
            component_count,
        };
        graph.check_euler()?;
        Ok(graph)
    }

    /// Builds a plane graph from a straight-line drawing: rotations are the
    /// neighbors sorted counterclockwise by angle. Crossing segments are rejected.
    pub fn from_coordinates(
        points: &[(f64, f64)],
        edges: &[(VertexId, VertexId)],
    ) -> Result<Self, GraphError> {
        let n = points.len();
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(GraphError::EdgeOutOfRange {
                    edge: (a, b),
                    count: n,
                });
            }
        }
        for (i, &(a, b)) in edges.iter().enumerate() {
            for &(c, d) in &edges[i + 1..] {
                if segments_cross(points[a], points[b], points[c], points[d], [a, b, c, d]) {
                    return Err(GraphError::Crossing {
                        a: (a, b),
                        b: (c, d),
                    });
                }
            }
        }
        let mut rotations = vec![Vec::new(); n];
        for &(a, b) in edges {
            rotations[a].push(b);
            rotations[b].push(a);
        }
        for (v, rot) in rotations.iter_mut().enumerate() {
            let (x, y) = points[v];
            rot.sort_by(|&p, &q| {
                let ap = (points[p].1 - y).atan2(points[p].0 - x);
                let aq = (points[q].1 - y).atan2(points[q].0 - x);
                ap.total_cmp(&aq)
            });
        }
        Self::from_rotations(rotations)
    }

    fn check_euler(&self) -> Result<(), GraphError> {
        let mut vertices = vec![0usize; self.component_count];
        let mut edges = vec![0usize; self.component_count];
        let mut faces = vec![0usize; self.component_count];
        for v in 0..self.vertex_count() {
            vertices[self.component[v]] += 1;
        }
        for &(a, _) in &self.edges {
            edges[self.component[a]] += 1;
        }
        for f in &self.faces {
            if let Some(&v) = f.walk.first() {
                faces[self.component[v]] += 1;
            }
        }
        for c in 0..self.component_count {
            if edges[c] == 0 {
                continue;
            }
            if vertices[c] + faces[c] != edges[c] + 2 {
                let root = self.component.iter().position(|&x| x == c).unwrap_or(0);
                return Err(GraphError::EulerViolation {
                    root,
                    vertices: vertices[c],
                    edges: edges[c],
                    faces: faces[c],
                });
            }
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.rotations.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn dart_count(&self) -> usize {
        self.dart_tail.len()
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.rotations[v].len()
    }

    /// Neighbors of `v` in rotation (cyclic) order.
    pub fn rotation(&self, v: VertexId) -> &[VertexId] {
        &self.rotations[v]
    }

    pub fn rotations(&self) -> &[Vec<VertexId>] {
        &self.rotations
    }

    /// Neighbors of `v` in ascending id order.
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.sorted_neighbors[v]
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.sorted_neighbors[u].binary_search(&v).is_ok()
    }

    /// Edges as `(min, max)` pairs in ascending order; the index is the edge id.
    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn edge_id(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, f: FaceId) -> &Face {
        &self.faces[f]
    }

    pub fn dart_tail(&self, d: DartId) -> VertexId {
        self.dart_tail[d]
    }

    pub fn dart_head(&self, d: DartId) -> VertexId {
        self.dart_head[d]
    }

    pub fn dart_reverse(&self, d: DartId) -> DartId {
        self.dart_rev[d]
    }

    pub fn dart_next(&self, d: DartId) -> DartId {
        self.dart_next[d]
    }

    pub fn dart_face(&self, d: DartId) -> FaceId {
        self.dart_face[d]
    }

    pub fn dart_edge(&self, d: DartId) -> EdgeId {
        self.dart_edge[d]
    }

    /// Darts leaving `v`, in rotation order.
    pub fn out_darts(&self, v: VertexId) -> std::ops::Range<DartId> {
        self.offsets[v]..self.offsets[v + 1]
    }

    /// The face at each corner of `v`, one entry per outgoing dart, in
    /// rotation order. A face meeting `v` at several corners repeats.
    pub fn corner_faces(&self, v: VertexId) -> Vec<FaceId> {
        self.out_darts(v).map(|d| self.dart_face[d]).collect()
    }

    /// Distinct faces incident with `v`, sorted.
    pub fn incident_faces(&self, v: VertexId) -> Vec<FaceId> {
        let mut faces = self.corner_faces(v);
        faces.sort_unstable();
        faces.dedup();
        faces
    }

    /// The faces on the two sides of edge `e` (equal for a cut edge).
    pub fn edge_faces(&self, e: EdgeId) -> (FaceId, FaceId) {
        let (a, b) = self.edges[e];
        let d = self.offsets[a]
            + self.rotations[a]
                .iter()
                .position(|&x| x == b)
                .expect("edge endpoints are adjacent");
        (self.dart_face[d], self.dart_face[self.dart_rev[d]])
    }

    pub fn is_connected(&self) -> bool {
        self.component_count == 1
    }

    pub fn component_count(&self) -> usize {
        self.component_count
    }

    pub fn component_of(&self, v: VertexId) -> usize {
        self.component[v]
    }

    /// Minimum degree together with the smallest vertex attaining it.
    pub fn min_degree(&self) -> (usize, VertexId) {
        (0..self.vertex_count())
            .map(|v| (self.degree(v), v))
            .min()
            .expect("graph is non-empty")
    }

    pub fn max_degree(&self) -> usize {
        self.rotations.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Classifies how two distinct faces meet.
    ///
    /// Adjacent means at least one shared edge; normally adjacent additionally
    /// requires both faces simple and exactly two shared vertices.
    pub fn face_adjacency(&self, f1: FaceId, f2: FaceId) -> FaceAdjacency {
        debug_assert_ne!(f1, f2, "face_adjacency needs two distinct faces");
        let (a, b) = (&self.faces[f1], &self.faces[f2]);
        let shared_edges = sorted_intersection(&a.edges, &b.edges);
        let shared_vertices = sorted_intersection(&a.vertices, &b.vertices);
        let kind = if !shared_edges.is_empty() {
            if a.simple && b.simple && shared_vertices.len() == 2 {
                AdjacencyKind::NormallyAdjacent
            } else {
                AdjacencyKind::Adjacent
            }
        } else if !shared_vertices.is_empty() {
            AdjacencyKind::VertexOnly
        } else {
            AdjacencyKind::Disjoint
        };
        FaceAdjacency {
            kind,
            shared_edges,
            shared_vertices,
        }
    }

    /// Faces sharing at least one edge with `f`, sorted, excluding `f` itself.
    pub fn adjacent_faces(&self, f: FaceId) -> Vec<FaceId> {
        let mut out: Vec<FaceId> = self.faces[f]
            .darts
            .iter()
            .map(|&d| self.dart_face[self.dart_rev[d]])
            .filter(|&g| g != f)
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Number of distinct edges shared by two faces.
    pub fn shared_edge_count(&self, f1: FaceId, f2: FaceId) -> usize {
        sorted_intersection(&self.faces[f1].edges, &self.faces[f2].edges).len()
    }
}

fn make_face(id: FaceId, darts: Vec<DartId>, tails: &[VertexId], dart_edge: &[EdgeId]) -> Face {
    let walk: Vec<VertexId> = darts.iter().map(|&d| tails[d]).collect();
    let mut vertices = walk.clone();
    vertices.sort_unstable();
    vertices.dedup();
    let mut edges: Vec<EdgeId> = darts.iter().map(|&d| dart_edge[d]).collect();
    edges.sort_unstable();
    edges.dedup();
    let simple = walk.len() >= 3 && vertices.len() == walk.len();
    Face {
        id,
        darts,
        walk,
        vertices,
        edges,
        simple,
    }
}

fn components(adj: &[Vec<VertexId>]) -> (Vec<usize>, usize) {
    let mut comp = vec![usize::MAX; adj.len()];
    let mut count = 0;
    let mut stack = Vec::new();
    for s in 0..adj.len() {
        if comp[s] != usize::MAX {
            continue;
        }
        comp[s] = count;
        stack.push(s);
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if comp[w] == usize::MAX {
                    comp[w] = count;
                    stack.push(w);
                }
            }
        }
        count += 1;
    }
    (comp, count)
}

pub(crate) fn sorted_intersection(a: &[usize], b: &[usize]) -> Vec<usize> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

fn segments_cross(
    p1: (f64, f64),
    p2: (f64, f64),
    p3: (f64, f64),
    p4: (f64, f64),
    ids: [VertexId; 4],
) -> bool {
    let orient = |a: (f64, f64), b: (f64, f64), c: (f64, f64)| {
        (b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0)
    };
    let shares_endpoint = ids[0] == ids[2] || ids[0] == ids[3] || ids[1] == ids[2] || ids[1] == ids[3];
    let d1 = orient(p3, p4, p1);
    let d2 = orient(p3, p4, p2);
    let d3 = orient(p1, p2, p3);
    let d4 = orient(p1, p2, p4);
    if shares_endpoint {
        // Segments meeting at a common endpoint only cross if they overlap.
        let all_collinear = d1 == 0.0 && d2 == 0.0;
        if !all_collinear {
            return false;
        }
        let dot = |a: (f64, f64), b: (f64, f64), c: (f64, f64)| {
            (b.0 - a.0) * (c.0 - a.0) + (b.1 - a.1) * (c.1 - a.1)
        };
        let (common, x, y) = if ids[0] == ids[2] {
            (p1, p2, p4)
        } else if ids[0] == ids[3] {
            (p1, p2, p3)
        } else if ids[1] == ids[2] {
            (p2, p1, p4)
        } else {
            (p2, p1, p3)
        };
        return dot(common, x, y) > 0.0;
    }
    ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0))
        && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0))
        || (d1 == 0.0 && on_segment(p3, p4, p1))
        || (d2 == 0.0 && on_segment(p3, p4, p2))
        || (d3 == 0.0 && on_segment(p1, p2, p3))
        || (d4 == 0.0 && on_segment(p1, p2, p4))
}

fn on_segment(a: (f64, f64), b: (f64, f64), p: (f64, f64)) -> bool {
    p.0 >= a.0.min(b.0) && p.0 <= a.0.max(b.0) && p.1 >= a.1.min(b.1) && p.1 <= a.1.max(b.1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> PlaneGraph {
        PlaneGraph::from_rotations(vec![vec![1, 2], vec![2, 0], vec![0, 1]]).unwrap()
    }

    #[test]
    fn triangle_has_two_three_faces() {
        let g = triangle();
        assert_eq!((g.vertex_count(), g.edge_count(), g.face_count()), (3, 3, 2));
        assert!(g.faces().iter().all(|f| f.degree() == 3 && f.simple));
    }

    #[test]
    fn single_edge_has_one_face_of_degree_two() {
        let g = PlaneGraph::from_rotations(vec![vec![1], vec![0]]).unwrap();
        assert_eq!(g.face_count(), 1);
        assert_eq!(g.face(0).degree(), 2);
        assert!(!g.face(0).simple);
    }

    #[test]
    fn lone_vertex_has_empty_face() {
        let g = PlaneGraph::from_rotations(vec![vec![]]).unwrap();
        assert_eq!(g.face_count(), 1);
        assert_eq!(g.face(0).degree(), 0);
        assert!(g.is_connected());
    }

    #[test]
    fn rejects_loops_repeats_and_asymmetry() {
        assert_eq!(
            PlaneGraph::from_rotations(vec![vec![0]]),
            Err(GraphError::Loop { vertex: 0 })
        );
        assert_eq!(
            PlaneGraph::from_rotations(vec![vec![1, 1], vec![0]]),
            Err(GraphError::RepeatedNeighbor {
                vertex: 0,
                neighbor: 1
            })
        );
        assert_eq!(
            PlaneGraph::from_rotations(vec![vec![1], vec![]]),
            Err(GraphError::Asymmetric { u: 0, v: 1 })
        );
        assert!(matches!(
            PlaneGraph::from_rotations(vec![vec![3], vec![0]]),
            Err(GraphError::NeighborOutOfRange { .. })
        ));
        assert_eq!(PlaneGraph::from_rotations(vec![]), Err(GraphError::Empty));
    }

    #[test]
    fn rejects_non_planar_rotation() {
        // K4 with a twisted rotation at one vertex is a torus embedding.
        let bad = vec![vec![1, 2, 3], vec![0, 2, 3], vec![0, 1, 3], vec![0, 1, 2]];
        assert!(matches!(
            PlaneGraph::from_rotations(bad),
            Err(GraphError::EulerViolation { .. })
        ));
    }

    #[test]
    fn disconnected_input_is_flagged() {
        let g = PlaneGraph::from_rotations(vec![vec![1], vec![0], vec![3], vec![2]]).unwrap();
        assert!(!g.is_connected());
        assert_eq!(g.component_count(), 2);
        assert_eq!(g.face_count(), 2);
    }

    #[test]
    fn triangle_faces_are_adjacent_not_normal() {
        let g = triangle();
        let adj = g.face_adjacency(0, 1);
        assert_eq!(adj.kind, AdjacencyKind::Adjacent);
        assert_eq!(adj.shared_edges.len(), 3);
        assert_eq!(adj.shared_vertices.len(), 3);
    }

    #[test]
    fn coordinates_reject_crossings() {
        let pts = [(0.0, 0.0), (1.0, 1.0), (1.0, 0.0), (0.0, 1.0)];
        assert!(matches!(
            PlaneGraph::from_coordinates(&pts, &[(0, 1), (2, 3)]),
            Err(GraphError::Crossing { .. })
        ));
    }

    #[test]
    fn coordinates_build_square_with_diagonal() {
        let pts = [(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)];
        let g = PlaneGraph::from_coordinates(&pts, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
            .unwrap();
        let mut degrees: Vec<usize> = g.faces().iter().map(Face::degree).collect();
        degrees.sort();
        assert_eq!(degrees, vec![3, 3, 4]);
    }

    #[test]
    fn edge_faces_of_cut_edge_coincide() {
        let g = PlaneGraph::from_rotations(vec![vec![1], vec![0, 2], vec![1]]).unwrap();
        let (a, b) = g.edge_faces(0);
        assert_eq!(a, b);
    }
}
