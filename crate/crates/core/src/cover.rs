//! Covers of a graph: list assignments plus one matching per edge.
//!
//! The cover graph H has a node `(v, c)` for every vertex `v` and color
//! `c ∈ L(v)`; its edges are the union of the per-edge matchings. A color's
//! *rank* is its 1-based position in `L(v)`; rank 1 is the distinguished
//! color of the B_A conditions and rank `i` carries defect budget `d_i`.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{PlaneGraph, VertexId};

pub type Color = u32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoverError {
    #[error("graph has {edges} edges, above the enumeration budget of {budget}")]
    BudgetExceeded { edges: usize, budget: usize },
    #[error("k must be at least 1")]
    ZeroK,
}

/// How a cover was produced; carried along for replay.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Provenance {
    Identity,
    Random { seed: u64, full: bool },
    Enumerated { index: u64 },
    Manual,
}

/// Matching `M_uv` for the vertex pair `edge = (u, v)`; each pair is
/// `(color at u, color at v)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Matching {
    pub edge: (VertexId, VertexId),
    pub pairs: Vec<(Color, Color)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct CoverData {
    vertices: usize,
    k: usize,
    edges: Vec<(VertexId, VertexId)>,
    lists: Vec<Vec<Color>>,
    matchings: Vec<Matching>,
    provenance: Provenance,
}

/// A cover H of a graph G. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "CoverData", into = "CoverData")]
pub struct Cover {
    data: CoverData,
    /// `adjacency[v][p]` lists the cover neighbors `(w, q)` of the node at
    /// list position `p` of `v`.
    adjacency: Vec<Vec<Vec<(VertexId, usize)>>>,
}

impl From<CoverData> for Cover {
    fn from(data: CoverData) -> Self {
        let mut adjacency: Vec<Vec<Vec<(VertexId, usize)>>> = (0..data.vertices)
            .map(|v| vec![Vec::new(); data.lists.get(v).map_or(0, Vec::len)])
            .collect();
        let position = |v: VertexId, c: Color| -> Option<usize> {
            data.lists.get(v)?.iter().position(|&x| x == c)
        };
        for m in &data.matchings {
            let (u, v) = m.edge;
            if u >= data.vertices || v >= data.vertices || u == v {
                continue;
            }
            for &(cu, cv) in &m.pairs {
                if let (Some(p), Some(q)) = (position(u, cu), position(v, cv)) {
                    adjacency[u][p].push((v, q));
                    adjacency[v][q].push((u, p));
                }
            }
        }
        for lists in adjacency.iter_mut() {
            for nbrs in lists.iter_mut() {
                nbrs.sort_unstable();
                nbrs.dedup();
            }
        }
        Cover { data, adjacency }
    }
}

impl From<Cover> for CoverData {
    fn from(c: Cover) -> Self {
        c.data
    }
}

impl Cover {
    /// Assembles a cover from raw parts without validating it; see
    /// [`Cover::validate`]. Pairs naming colors outside the lists or
    /// vertices outside the graph contribute no cover edge.
    pub fn new(
        vertices: usize,
        k: usize,
        edges: Vec<(VertexId, VertexId)>,
        lists: Vec<Vec<Color>>,
        matchings: Vec<Matching>,
        provenance: Provenance,
    ) -> Self {
        CoverData {
            vertices,
            k,
            edges,
            lists,
            matchings,
            provenance,
        }
        .into()
    }

    /// The cover whose independent transversals are exactly the proper
    /// colorings of `graph` from lists `1..=k`.
    pub fn identity(graph: &PlaneGraph, k: usize) -> Self {
        let matchings = graph
            .edges()
            .iter()
            .map(|&edge| Matching {
                edge,
                pairs: (1..=k as Color).map(|c| (c, c)).collect(),
            })
            .collect();
        Self::new(
            graph.vertex_count(),
            k,
            graph.edges().to_vec(),
            default_lists(graph.vertex_count(), k),
            matchings,
            Provenance::Identity,
        )
    }

    /// A deterministic pseudo-random cover with lists `1..=k`. With `full`
    /// every matching is perfect (a seeded permutation); otherwise each
    /// matching is drawn uniformly from all matchings between two k-sets.
    pub fn random(graph: &PlaneGraph, k: usize, seed: u64, full: bool) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let weights = matching_size_weights(k);
        let total: u64 = weights.iter().sum();
        let matchings = graph
            .edges()
            .iter()
            .map(|&edge| {
                let size = if full {
                    k
                } else {
                    let mut ticket = rng.gen_range(0..total);
                    let mut j = 0;
                    while ticket >= weights[j] {
                        ticket -= weights[j];
                        j += 1;
                    }
                    j
                };
                let mut left: Vec<Color> = (1..=k as Color).collect();
                let mut right = left.clone();
                left.shuffle(&mut rng);
                right.shuffle(&mut rng);
                let mut pairs: Vec<(Color, Color)> =
                    left.into_iter().zip(right).take(size).collect();
                pairs.sort_unstable();
                Matching { edge, pairs }
            })
            .collect();
        Self::new(
            graph.vertex_count(),
            k,
            graph.edges().to_vec(),
            default_lists(graph.vertex_count(), k),
            matchings,
            Provenance::Random { seed, full },
        )
    }

    pub fn vertex_count(&self) -> usize {
        self.data.vertices
    }

    pub fn k(&self) -> usize {
        self.data.k
    }

    pub fn graph_edges(&self) -> &[(VertexId, VertexId)] {
        &self.data.edges
    }

    pub fn list(&self, v: VertexId) -> &[Color] {
        &self.data.lists[v]
    }

    pub fn lists(&self) -> &[Vec<Color>] {
        &self.data.lists
    }

    pub fn matchings(&self) -> &[Matching] {
        &self.data.matchings
    }

    pub fn provenance(&self) -> &Provenance {
        &self.data.provenance
    }

    /// List position (0-based) of color `c` at `v`.
    pub fn position(&self, v: VertexId, c: Color) -> Option<usize> {
        self.data.lists.get(v)?.iter().position(|&x| x == c)
    }

    /// 1-based rank of color `c` at `v`.
    pub fn rank(&self, v: VertexId, c: Color) -> Option<usize> {
        self.position(v, c).map(|p| p + 1)
    }

    /// Cover neighbors `(w, position)` of node `(v, list[v][pos])`.
    pub fn node_neighbors(&self, v: VertexId, pos: usize) -> &[(VertexId, usize)] {
        &self.adjacency[v][pos]
    }

    /// Whether nodes `(v, list[v][p])` and `(w, list[w][q])` are joined in H.
    pub fn adjacent(&self, v: VertexId, p: usize, w: VertexId, q: usize) -> bool {
        self.adjacency[v][p].contains(&(w, q))
    }

    pub fn cover_edge_count(&self) -> usize {
        self.data.matchings.iter().map(|m| m.pairs.len()).sum()
    }

    /// Checks the list-assignment invariants and both cover conditions.
    pub fn validate(&self) -> CoverValidation {
        let d = &self.data;
        let mut violations = Vec::new();
        if d.lists.len() != d.vertices {
            violations.push(CoverViolation::ListCount {
                lists: d.lists.len(),
                vertices: d.vertices,
            });
        }
        for (v, list) in d.lists.iter().enumerate() {
            if list.len() < d.k {
                violations.push(CoverViolation::ListTooShort {
                    vertex: v,
                    len: list.len(),
                    k: d.k,
                });
            }
            let mut seen = BTreeSet::new();
            for &c in list {
                if c == 0 {
                    violations.push(CoverViolation::ZeroColor { vertex: v });
                }
                if !seen.insert(c) {
                    violations.push(CoverViolation::RepeatedColor { vertex: v, color: c });
                }
            }
        }
        let edge_set: BTreeSet<(VertexId, VertexId)> =
            d.edges.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
        let mut keyed = BTreeSet::new();
        for m in &d.matchings {
            let (u, v) = m.edge;
            let key = (u.min(v), u.max(v));
            if !edge_set.contains(&key) {
                violations.push(CoverViolation::NotAnEdge { edge: m.edge });
            }
            if !keyed.insert(key) {
                violations.push(CoverViolation::DuplicateMatching { edge: m.edge });
            }
            let mut used_u = BTreeSet::new();
            let mut used_v = BTreeSet::new();
            for &(cu, cv) in &m.pairs {
                for (x, c) in [(u, cu), (v, cv)] {
                    if d.lists.get(x).is_none_or(|l| !l.contains(&c)) {
                        violations.push(CoverViolation::ColorNotInList {
                            edge: m.edge,
                            vertex: x,
                            color: c,
                        });
                    }
                }
                if !used_u.insert(cu) {
                    violations.push(CoverViolation::NotAMatching {
                        edge: m.edge,
                        vertex: u,
                        color: cu,
                    });
                }
                if !used_v.insert(cv) {
                    violations.push(CoverViolation::NotAMatching {
                        edge: m.edge,
                        vertex: v,
                        color: cv,
                    });
                }
            }
        }
        CoverValidation {
            valid: violations.is_empty(),
            violations,
        }
    }
}

fn default_lists(n: usize, k: usize) -> Vec<Vec<Color>> {
    vec![(1..=k as Color).collect(); n]
}

/// `C(k, j)^2 * j!` for `j = 0..=k`: the number of matchings of size `j`
/// between two k-sets.
pub fn matching_size_weights(k: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(k + 1);
    for j in 0..=k {
        let mut binom: u64 = 1;
        for i in 0..j {
            binom = binom * (k - i) as u64 / (i + 1) as u64;
        }
        let fact: u64 = (1..=j as u64).product();
        out.push(binom * binom * fact);
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum CoverViolation {
    ListCount { lists: usize, vertices: usize },
    ListTooShort { vertex: VertexId, len: usize, k: usize },
    ZeroColor { vertex: VertexId },
    RepeatedColor { vertex: VertexId, color: Color },
    /// A matching between lists of non-adjacent vertices.
    NotAnEdge { edge: (VertexId, VertexId) },
    DuplicateMatching { edge: (VertexId, VertexId) },
    ColorNotInList {
        edge: (VertexId, VertexId),
        vertex: VertexId,
        color: Color,
    },
    /// A cover node used twice within one `M_uv`.
    NotAMatching {
        edge: (VertexId, VertexId),
        vertex: VertexId,
        color: Color,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverValidation {
    pub valid: bool,
    pub violations: Vec<CoverViolation>,
}

/// Every matching between two copies of `1..=k`, in a fixed order.
pub fn all_matchings(k: usize) -> Vec<Vec<(Color, Color)>> {
    fn go(
        i: usize,
        k: usize,
        used: &mut Vec<bool>,
        cur: &mut Vec<(Color, Color)>,
        out: &mut Vec<Vec<(Color, Color)>>,
    ) {
        if i == k {
            out.push(cur.clone());
            return;
        }
        go(i + 1, k, used, cur, out);
        for j in 0..k {
            if !used[j] {
                used[j] = true;
                cur.push((i as Color + 1, j as Color + 1));
                go(i + 1, k, used, cur, out);
                cur.pop();
                used[j] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(0, k, &mut vec![false; k], &mut Vec::new(), &mut out);
    out
}

/// Streams every cover of a graph with lists `1..=k`, each exactly once.
pub struct CoverEnumerator {
    vertices: usize,
    k: usize,
    edges: Vec<(VertexId, VertexId)>,
    matchings: Vec<Vec<(Color, Color)>>,
    odometer: Vec<usize>,
    index: u64,
    done: bool,
}

impl CoverEnumerator {
    /// Total number of covers the stream yields.
    pub fn total(&self) -> Option<u64> {
        (self.matchings.len() as u64).checked_pow(self.edges.len() as u32)
    }
}

impl Iterator for CoverEnumerator {
    type Item = Cover;

    fn next(&mut self) -> Option<Cover> {
        if self.done {
            return None;
        }
        let matchings = self
            .edges
            .iter()
            .zip(&self.odometer)
            .map(|(&edge, &i)| Matching {
                edge,
                pairs: self.matchings[i].clone(),
            })
            .collect();
        let cover = Cover::new(
            self.vertices,
            self.k,
            self.edges.clone(),
            default_lists(self.vertices, self.k),
            matchings,
            Provenance::Enumerated { index: self.index },
        );
        self.index += 1;
        let mut pos = 0;
        loop {
            if pos == self.odometer.len() {
                self.done = true;
                break;
            }
            self.odometer[pos] += 1;
            if self.odometer[pos] < self.matchings.len() {
                break;
            }
            self.odometer[pos] = 0;
            pos += 1;
        }
        Some(cover)
    }
}

pub fn enumerate_covers(
    graph: &PlaneGraph,
    k: usize,
    edge_budget: usize,
) -> Result<CoverEnumerator, CoverError> {
    if k == 0 {
        return Err(CoverError::ZeroK);
    }
    if graph.edge_count() > edge_budget {
        return Err(CoverError::BudgetExceeded {
            edges: graph.edge_count(),
            budget: edge_budget,
        });
    }
    Ok(CoverEnumerator {
        vertices: graph.vertex_count(),
        k,
        edges: graph.edges().to_vec(),
        matchings: all_matchings(k),
        odometer: vec![0; graph.edge_count()],
        index: 0,
        done: false,
    })
}
