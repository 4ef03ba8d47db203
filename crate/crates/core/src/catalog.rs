//! Curated embedded graphs with known cycle spectra.
//!
//! Names: `cycle:N` (N ≥ 3), `k4`, `cube`, `dodecahedron`, `theta:a,b,c`
//! (two poles joined by internally disjoint paths with a, b, c edges) and
//! `figure1`, the special 3-vertex configuration on vertices
//! `v, v1, v2, v3, v4, v5, v6, v8` (ids 0..=7 in that order).

use std::f64::consts::TAU;

use thiserror::Error;

use crate::graph::{GraphError, PlaneGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown catalog graph `{0}`")]
    UnknownName(String),
    #[error("bad parameter for `{name}`: {reason}")]
    BadParameter { name: String, reason: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Catalog entries exercised by the test and acceptance suites.
pub const STANDARD: &[&str] = &[
    "cycle:3",
    "cycle:5",
    "cycle:7",
    "cycle:9",
    "k4",
    "cube",
    "dodecahedron",
    "figure1",
    "theta:1,2,2",
    "theta:2,2,3",
    "theta:2,3,3",
    "theta:1,4,6",
    "theta:2,3,6",
];

/// Vertex ids of the `figure1` entry, named after their roles.
pub mod figure1 {
    pub const V: usize = 0;
    pub const V1: usize = 1;
    pub const V2: usize = 2;
    pub const V3: usize = 3;
    pub const V4: usize = 4;
    pub const V5: usize = 5;
    pub const V6: usize = 6;
    pub const V8: usize = 7;
}

pub fn generate(name: &str) -> Result<PlaneGraph, CatalogError> {
    let (base, param) = match name.split_once(':') {
        Some((b, p)) => (b, Some(p)),
        None => (name, None),
    };
    let bad = |reason: &str| CatalogError::BadParameter {
        name: name.to_string(),
        reason: reason.to_string(),
    };
    match (base, param) {
        ("cycle", Some(p)) => {
            let n: usize = p.trim().parse().map_err(|_| bad("expected an integer"))?;
            if n < 3 {
                return Err(bad("a cycle needs at least 3 vertices"));
            }
            Ok(cycle(n)?)
        }
        ("theta", Some(p)) => {
            let parts: Result<Vec<usize>, _> = p.split(',').map(|s| s.trim().parse()).collect();
            let parts = parts.map_err(|_| bad("expected three integers a,b,c"))?;
            let [a, b, c] = parts[..] else {
                return Err(bad("expected three integers a,b,c"));
            };
            if a == 0 || b == 0 || c == 0 {
                return Err(bad("path lengths must be positive"));
            }
            if [a, b, c].iter().filter(|&&x| x == 1).count() > 1 {
                return Err(bad("at most one path may be a single edge"));
            }
            Ok(theta(a, b, c)?)
        }
        ("k4", None) => Ok(PlaneGraph::from_coordinates(
            &[(0.0, 2.0), (-2.0, -1.0), (2.0, -1.0), (0.0, 0.0)],
            &[(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3)],
        )?),
        ("cube", None) => {
            let mut pts = Vec::new();
            for r in [2.0, 1.0] {
                for i in 0..4 {
                    let a = TAU * (i as f64) / 4.0 + TAU / 8.0;
                    pts.push((r * a.cos(), r * a.sin()));
                }
            }
            let mut edges = Vec::new();
            for i in 0..4 {
                edges.push((i, (i + 1) % 4));
                edges.push((4 + i, 4 + (i + 1) % 4));
                edges.push((i, 4 + i));
            }
            Ok(PlaneGraph::from_coordinates(&pts, &edges)?)
        }
        ("dodecahedron", None) => Ok(dodecahedron()?),
        ("figure1", None) => Ok(PlaneGraph::from_rotations(vec![
            vec![2, 1, 5],
            vec![7, 0, 2],
            vec![1, 0, 3],
            vec![2, 4],
            vec![7, 3, 5, 6],
            vec![0, 6, 4],
            vec![4, 5],
            vec![4, 1],
        ])?),
        ("cycle" | "theta", None) => Err(bad("missing parameter")),
        _ => Err(CatalogError::UnknownName(name.to_string())),
    }
}

fn polar(r: f64, turns: f64) -> (f64, f64) {
    let a = TAU * turns;
    (r * a.cos(), r * a.sin())
}

fn cycle(n: usize) -> Result<PlaneGraph, GraphError> {
    let pts: Vec<_> = (0..n).map(|i| polar(1.0, i as f64 / n as f64)).collect();
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    PlaneGraph::from_coordinates(&pts, &edges)
}

fn theta(a: usize, b: usize, c: usize) -> Result<PlaneGraph, GraphError> {
    // A single-edge path, if present, runs along the axis between the poles.
    let mut lengths = [a, b, c];
    if let Some(i) = lengths.iter().position(|&x| x == 1) {
        lengths.swap(i, 1);
    }
    let mut pts = vec![(-1.0, 0.0), (1.0, 0.0)];
    let mut edges = Vec::new();
    for (slot, &len) in lengths.iter().enumerate() {
        let height = slot as f64 - 1.0;
        let mut prev = 0;
        for j in 1..len {
            let x = -1.0 + 2.0 * j as f64 / len as f64;
            pts.push((x, height));
            let id = pts.len() - 1;
            edges.push((prev, id));
            prev = id;
        }
        edges.push((prev, 1));
    }
    PlaneGraph::from_coordinates(&pts, &edges)
}

fn dodecahedron() -> Result<PlaneGraph, GraphError> {
    // Schlegel diagram: outer pentagon a, middle decagon b/c, inner pentagon d.
    let mut pts = Vec::new();
    for i in 0..5 {
        pts.push(polar(3.0, 0.25 + i as f64 / 5.0));
    }
    for i in 0..5 {
        pts.push(polar(2.0, 0.25 + i as f64 / 5.0));
    }
    for i in 0..5 {
        pts.push(polar(2.0, 0.25 + (i as f64 + 0.5) / 5.0));
    }
    for i in 0..5 {
        pts.push(polar(1.0, 0.25 + (i as f64 + 0.5) / 5.0));
    }
    let (a, b, c, d) = (0, 5, 10, 15);
    let mut edges = Vec::new();
    for i in 0..5 {
        let j = (i + 1) % 5;
        edges.push((a + i, a + j));
        edges.push((a + i, b + i));
        edges.push((b + i, c + i));
        edges.push((c + i, b + j));
        edges.push((c + i, d + i));
        edges.push((d + i, d + j));
    }
    PlaneGraph::from_coordinates(&pts, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn degrees(g: &PlaneGraph) -> Vec<usize> {
        let mut d: Vec<usize> = g.faces().iter().map(|f| f.degree()).collect();
        d.sort_unstable();
        d
    }

    #[test]
    fn every_standard_entry_builds_connected() {
        for name in STANDARD {
            let g = generate(name).unwrap_or_else(|e| panic!("{name}: {e}"));
            assert!(g.is_connected(), "{name}");
        }
    }

    #[test]
    fn figure1_shape() {
        let g = generate("figure1").unwrap();
        assert_eq!((g.vertex_count(), g.edge_count(), g.face_count()), (8, 11, 5));
        assert_eq!(degrees(&g), vec![3, 3, 5, 5, 6]);
    }

    #[test]
    fn solids() {
        let cube = generate("cube").unwrap();
        assert_eq!((cube.vertex_count(), cube.edge_count()), (8, 12));
        assert_eq!(degrees(&cube), vec![4; 6]);
        let dodeca = generate("dodecahedron").unwrap();
        assert_eq!((dodeca.vertex_count(), dodeca.edge_count()), (20, 30));
        assert_eq!(degrees(&dodeca), vec![5; 12]);
        let k4 = generate("k4").unwrap();
        assert_eq!(degrees(&k4), vec![3; 4]);
    }

    #[test]
    fn theta_faces() {
        let g = generate("theta:2,3,6").unwrap();
        assert_eq!(g.vertex_count(), 10);
        assert_eq!(degrees(&g), vec![5, 8, 9]);
        let g = generate("theta:2,1,4").unwrap();
        assert_eq!(degrees(&g), vec![3, 5, 6]);
    }

    #[test]
    fn bad_names() {
        assert!(matches!(generate("cycle:2"), Err(CatalogError::BadParameter { .. })));
        assert!(matches!(generate("theta:1,1,3"), Err(CatalogError::BadParameter { .. })));
        assert!(matches!(generate("cycle"), Err(CatalogError::BadParameter { .. })));
        assert!(matches!(generate("petersen"), Err(CatalogError::UnknownName(_))));
    }
}
