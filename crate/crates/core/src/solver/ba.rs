use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use super::{graph_adjacency, OrderedTransversal, Outcome, Search, SolverError, Transversal};
use crate::cover::{Color, Cover};
use crate::graph::VertexId;

/// Memoization of dead search states is only used up to this many vertices.
pub const MEMO_VERTEX_LIMIT: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BaNode {
    pub vertex: VertexId,
    pub color: Color,
    pub rank: usize,
    /// Index in the left-to-right order, starting at 0.
    pub position: usize,
    /// Chosen nodes to the left that are adjacent in H.
    pub left_neighbors: Vec<VertexId>,
    /// For a unique left neighbor w: how many chosen nodes left of this
    /// node are adjacent to w.
    pub neighbor_left_count: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BaViolation {
    /// 1: a rank-1 node has a left neighbor; 2: any other node has two
    /// left neighbors, or its left neighbor already has two.
    pub condition: u8,
    pub vertex: VertexId,
    pub position: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BaReport {
    pub pass: bool,
    /// In placement order.
    pub nodes: Vec<BaNode>,
    pub violation: Option<BaViolation>,
}

pub fn verify_ba(cover: &Cover, ot: &OrderedTransversal) -> Result<BaReport, SolverError> {
    let positions = ot.transversal.positions(cover)?;
    let index = ot.indices(cover.vertex_count())?;
    let mut nodes = Vec::with_capacity(positions.len());
    let mut violation = None;
    for (i, &v) in ot.order.iter().enumerate() {
        let p = positions[v];
        let left: Vec<VertexId> = cover
            .node_neighbors(v, p)
            .iter()
            .filter(|&&(w, q)| index[w] < i && positions[w] == q)
            .map(|&(w, _)| w)
            .collect();
        let neighbor_left_count = match left[..] {
            [w] => Some(
                cover
                    .node_neighbors(w, positions[w])
                    .iter()
                    .filter(|&&(x, q)| index[x] < i && positions[x] == q)
                    .count(),
            ),
            _ => None,
        };
        let failed = if p == 0 {
            (!left.is_empty()).then_some(1)
        } else {
            (left.len() > 1 || neighbor_left_count.is_some_and(|c| c > 1)).then_some(2)
        };
        if let (Some(condition), None) = (failed, violation) {
            violation = Some(BaViolation {
                condition,
                vertex: v,
                position: i,
            });
        }
        nodes.push(BaNode {
            vertex: v,
            color: ot.transversal.colors[v],
            rank: p + 1,
            position: i,
            left_neighbors: left,
            neighbor_left_count,
        });
    }
    Ok(BaReport {
        pass: violation.is_none(),
        nodes,
        violation,
    })
}

struct BaSearch<'a> {
    cover: &'a Cover,
    adj: Vec<Vec<VertexId>>,
    /// Candidate list positions per vertex.
    allowed: Vec<Vec<usize>>,
    placed: Vec<Option<usize>>,
    /// Placed H[T]-neighbors of each placed node.
    count: Vec<usize>,
    order: Vec<VertexId>,
    dead: Option<HashSet<Vec<u8>>>,
    nodes: u64,
    limit: u64,
}

enum Step {
    Found,
    Dead,
    Exhausted,
}

impl BaSearch<'_> {
    /// Placed vertices whose chosen node is adjacent to `(v, p)`.
    fn left_of(&self, v: VertexId, p: usize) -> impl Iterator<Item = VertexId> + '_ {
        self.cover
            .node_neighbors(v, p)
            .iter()
            .filter(|&&(w, q)| self.placed[w] == Some(q))
            .map(|&(w, _)| w)
    }

    fn feasible(&self, v: VertexId, p: usize) -> bool {
        let mut left = self.left_of(v, p);
        match (left.next(), left.next()) {
            (None, _) => true,
            (Some(_), _) if p == 0 => false,
            (Some(w), None) => self.count[w] <= 1,
            (Some(_), Some(_)) => false,
        }
    }

    fn key(&self) -> Vec<u8> {
        let n = self.placed.len();
        let mut key = Vec::with_capacity(n);
        for v in 0..n {
            key.push(match self.placed[v] {
                None => 0,
                Some(p) if self.adj[v].iter().any(|&w| self.placed[w].is_none()) => {
                    2 + (p as u8) * 3 + self.count[v].min(2) as u8
                }
                Some(_) => 1,
            });
        }
        key
    }

    fn run(&mut self) -> Step {
        let n = self.placed.len();
        if self.order.len() == n {
            return Step::Found;
        }
        // Every condition can only get harder as more nodes are placed, so a
        // vertex with no feasible color kills the whole subtree.
        let mut candidates: Vec<(usize, VertexId, Vec<usize>)> = Vec::new();
        for v in (0..n).filter(|&v| self.placed[v].is_none()) {
            let colors: Vec<usize> = self.allowed[v]
                .iter()
                .copied()
                .filter(|&p| self.feasible(v, p))
                .collect();
            if colors.is_empty() {
                return Step::Dead;
            }
            candidates.push((colors.len(), v, colors));
        }
        let key = self.dead.as_ref().map(|_| self.key());
        if let (Some(dead), Some(key)) = (&self.dead, &key) {
            if dead.contains(key) {
                return Step::Dead;
            }
        }
        candidates.sort();
        for (_, v, colors) in candidates {
            for p in colors {
                if self.nodes >= self.limit {
                    return Step::Exhausted;
                }
                self.nodes += 1;
                let left: Vec<VertexId> = self.left_of(v, p).collect();
                for &w in &left {
                    self.count[w] += 1;
                }
                self.count[v] = left.len();
                self.placed[v] = Some(p);
                self.order.push(v);
                match self.run() {
                    Step::Found => return Step::Found,
                    Step::Exhausted => return Step::Exhausted,
                    Step::Dead => {}
                }
                self.order.pop();
                self.placed[v] = None;
                self.count[v] = 0;
                for &w in &left {
                    self.count[w] -= 1;
                }
            }
        }
        if let (Some(dead), Some(key)) = (&mut self.dead, key) {
            dead.insert(key);
        }
        Step::Dead
    }
}

/// Depth-first search for a B_A-coloring. The placement sequence is the
/// left-to-right order; since each condition only looks at the prefix, a
/// placed node is never invalidated later.
pub fn find_ba(cover: &Cover, node_limit: u64) -> Result<Search<OrderedTransversal>, SolverError> {
    let allowed = (0..cover.vertex_count())
        .map(|v| (0..cover.list(v).len()).collect())
        .collect();
    search(cover, allowed, node_limit)
}

/// Searches only for a left-to-right order of the fixed transversal `t`.
pub fn find_ba_order(
    cover: &Cover,
    t: &Transversal,
    node_limit: u64,
) -> Result<Search<OrderedTransversal>, SolverError> {
    let allowed = t.positions(cover)?.into_iter().map(|p| vec![p]).collect();
    search(cover, allowed, node_limit)
}

fn search(
    cover: &Cover,
    allowed: Vec<Vec<usize>>,
    node_limit: u64,
) -> Result<Search<OrderedTransversal>, SolverError> {
    let n = cover.vertex_count();
    let mut search = BaSearch {
        cover,
        adj: graph_adjacency(cover),
        allowed,
        placed: vec![None; n],
        count: vec![0; n],
        order: Vec::with_capacity(n),
        dead: (n <= MEMO_VERTEX_LIMIT).then(HashSet::new),
        nodes: 0,
        limit: node_limit,
    };
    let outcome = match search.run() {
        Step::Found => {
            let colors = search
                .placed
                .iter()
                .enumerate()
                .map(|(v, p)| cover.list(v)[p.expect("complete placement")])
                .collect();
            let ot = OrderedTransversal {
                transversal: Transversal::new(colors),
                order: search.order.clone(),
            };
            assert!(
                verify_ba(cover, &ot)?.pass,
                "B_A search returned an invalid ordered transversal"
            );
            Outcome::Found(ot)
        }
        Step::Dead => Outcome::NoneExists,
        Step::Exhausted => Outcome::BudgetExhausted,
    };
    Ok(Search {
        outcome,
        nodes: search.nodes,
    })
}
