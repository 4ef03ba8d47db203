//! Transversals of covers: verification and exact search for defective
//! (d₁,…,d_k)-colorings and B_A-colorings.

pub mod ba;
mod defective;
pub mod oracle;

pub use ba::{find_ba, find_ba_order, verify_ba, BaNode, BaReport, BaViolation};
pub use defective::{find_defective_dp, verify_defective, DefectReport, NodeDefect};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cover::{Color, Cover};
use crate::graph::VertexId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("transversal has {got} entries but the cover has {expected} vertices")]
    WrongLength { got: usize, expected: usize },
    #[error("color {color} is not in the list of vertex {vertex}")]
    ColorNotInList { vertex: VertexId, color: Color },
    #[error("defect vector has length {got}, expected k = {expected}")]
    DefectLength { got: usize, expected: usize },
    #[error("color {color} of vertex {vertex} has rank {rank}, beyond the defect vector")]
    NoBudget {
        vertex: VertexId,
        color: Color,
        rank: usize,
    },
    #[error("placement order is not a permutation of the vertices")]
    InvalidOrder,
    #[error("brute-force oracle is limited to {limit} vertices, cover has {got}")]
    TooLarge { got: usize, limit: usize },
}

/// One chosen color per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Transversal {
    pub colors: Vec<Color>,
}

impl Transversal {
    pub fn new(colors: Vec<Color>) -> Self {
        Transversal { colors }
    }

    /// List positions of the chosen colors, checking that this is a
    /// transversal of `cover`.
    pub fn positions(&self, cover: &Cover) -> Result<Vec<usize>, SolverError> {
        if self.colors.len() != cover.vertex_count() {
            return Err(SolverError::WrongLength {
                got: self.colors.len(),
                expected: cover.vertex_count(),
            });
        }
        self.colors
            .iter()
            .enumerate()
            .map(|(v, &c)| {
                cover
                    .position(v, c)
                    .ok_or(SolverError::ColorNotInList { vertex: v, color: c })
            })
            .collect()
    }
}

/// A transversal with a left-to-right placement order over its nodes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrderedTransversal {
    pub transversal: Transversal,
    /// Vertices from left to right.
    pub order: Vec<VertexId>,
}

impl OrderedTransversal {
    /// Position of every vertex in the order, or an error if `order` is not
    /// a permutation of `0..n`.
    pub fn indices(&self, n: usize) -> Result<Vec<usize>, SolverError> {
        if self.order.len() != n {
            return Err(SolverError::InvalidOrder);
        }
        let mut index = vec![usize::MAX; n];
        for (i, &v) in self.order.iter().enumerate() {
            if v >= n || index[v] != usize::MAX {
                return Err(SolverError::InvalidOrder);
            }
            index[v] = i;
        }
        Ok(index)
    }
}

/// Outcome of an exact search: a solution, a proof that none exists, or
/// the node budget ran out first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", content = "solution", rename_all = "kebab-case")]
pub enum Outcome<T> {
    Found(T),
    NoneExists,
    BudgetExhausted,
}

impl<T> Outcome<T> {
    pub fn is_found(&self) -> bool {
        matches!(self, Outcome::Found(_))
    }

    pub fn is_none_exists(&self) -> bool {
        matches!(self, Outcome::NoneExists)
    }

    pub fn is_definitive(&self) -> bool {
        !matches!(self, Outcome::BudgetExhausted)
    }

    pub fn found(&self) -> Option<&T> {
        match self {
            Outcome::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn verdict(&self) -> &'static str {
        match self {
            Outcome::Found(_) => "found",
            Outcome::NoneExists => "none",
            Outcome::BudgetExhausted => "budget-exhausted",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Search<T> {
    pub outcome: Outcome<T>,
    /// Number of (vertex, color) placements tried.
    pub nodes: u64,
}

/// Shape of the induced cover subgraph H[T].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransversalStructure {
    /// H[T] is acyclic with maximum degree at most 2.
    pub is_linear_forest: bool,
    /// No cover edge joins two chosen rank-1 nodes.
    pub color1_independent: bool,
    pub max_degree: usize,
    pub edge_count: usize,
}

/// Edges of H[T] as vertex pairs `(u, v)` with `u < v`.
pub fn induced_edges(cover: &Cover, positions: &[usize]) -> Vec<(VertexId, VertexId)> {
    let mut out = Vec::new();
    for (v, &p) in positions.iter().enumerate() {
        for &(w, q) in cover.node_neighbors(v, p) {
            if v < w && positions[w] == q {
                out.push((v, w));
            }
        }
    }
    out
}

pub fn structure_of_transversal(
    cover: &Cover,
    t: &Transversal,
) -> Result<TransversalStructure, SolverError> {
    let positions = t.positions(cover)?;
    let edges = induced_edges(cover, &positions);
    let n = positions.len();
    let mut degree = vec![0usize; n];
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut acyclic = true;
    let mut color1_independent = true;
    for &(u, v) in &edges {
        degree[u] += 1;
        degree[v] += 1;
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a == b {
            acyclic = false;
        } else {
            parent[a] = b;
        }
        if positions[u] == 0 && positions[v] == 0 {
            color1_independent = false;
        }
    }
    let max_degree = degree.into_iter().max().unwrap_or(0);
    Ok(TransversalStructure {
        is_linear_forest: acyclic && max_degree <= 2,
        color1_independent,
        max_degree,
        edge_count: edges.len(),
    })
}

/// Graph adjacency recovered from the cover's edge list.
pub(crate) fn graph_adjacency(cover: &Cover) -> Vec<Vec<VertexId>> {
    let mut adj = vec![Vec::new(); cover.vertex_count()];
    for &(u, v) in cover.graph_edges() {
        if u < adj.len() && v < adj.len() && u != v {
            adj[u].push(v);
            adj[v].push(u);
        }
    }
    for nbrs in adj.iter_mut() {
        nbrs.sort_unstable();
        nbrs.dedup();
    }
    adj
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::generate;
    use crate::cover::{Matching, Provenance};
    use crate::graph::PlaneGraph;

    #[test]
    fn three_node_example_meets_necessary_conditions() {
        let path = PlaneGraph::from_rotations(vec![vec![1], vec![0, 2], vec![1]]).unwrap();
        let cover = Cover::new(
            3,
            3,
            path.edges().to_vec(),
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
        );
        let s = structure_of_transversal(&cover, &Transversal::new(vec![1, 2, 1])).unwrap();
        assert!(s.is_linear_forest && s.color1_independent);
        assert_eq!(s.edge_count, 2);
    }

    #[test]
    fn triangle_all_ones_is_not_color1_independent() {
        let g = generate("cycle:3").unwrap();
        let cover = Cover::identity(&g, 3);
        let s = structure_of_transversal(&cover, &Transversal::new(vec![1, 1, 1])).unwrap();
        assert!(!s.color1_independent);
        assert!(!s.is_linear_forest);
        let proper = structure_of_transversal(&cover, &Transversal::new(vec![1, 2, 3])).unwrap();
        assert!(proper.is_linear_forest && proper.color1_independent);
        assert_eq!(proper.edge_count, 0);
    }

    #[test]
    fn transversal_errors() {
        let g = generate("cycle:3").unwrap();
        let cover = Cover::identity(&g, 3);
        assert!(matches!(
            Transversal::new(vec![1, 2]).positions(&cover),
            Err(SolverError::WrongLength { .. })
        ));
        assert_eq!(
            Transversal::new(vec![1, 2, 4]).positions(&cover),
            Err(SolverError::ColorNotInList { vertex: 2, color: 4 })
        );
        let ot = OrderedTransversal {
            transversal: Transversal::new(vec![1, 2, 3]),
            order: vec![0, 0, 1],
        };
        assert_eq!(ot.indices(3), Err(SolverError::InvalidOrder));
    }
}
