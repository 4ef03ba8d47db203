use serde::{Deserialize, Serialize};

use super::{graph_adjacency, Outcome, Search, SolverError, Transversal};
use crate::cover::{Color, Cover};
use crate::graph::VertexId;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeDefect {
    pub vertex: VertexId,
    pub color: Color,
    pub rank: usize,
    /// Degree of the node in H[T].
    pub degree: usize,
    pub budget: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DefectReport {
    pub pass: bool,
    pub nodes: Vec<NodeDefect>,
    /// Vertices whose node exceeds its budget.
    pub violators: Vec<VertexId>,
}

fn budgets_for(cover: &Cover, defects: &[usize]) -> Result<(), SolverError> {
    if defects.len() != cover.k() {
        return Err(SolverError::DefectLength {
            got: defects.len(),
            expected: cover.k(),
        });
    }
    Ok(())
}

/// Checks that every chosen node `(v, c)` of rank `i` has degree at most
/// `defects[i - 1]` in H[T].
pub fn verify_defective(
    cover: &Cover,
    t: &Transversal,
    defects: &[usize],
) -> Result<DefectReport, SolverError> {
    budgets_for(cover, defects)?;
    let positions = t.positions(cover)?;
    let mut nodes = Vec::with_capacity(positions.len());
    let mut violators = Vec::new();
    for (v, &p) in positions.iter().enumerate() {
        let rank = p + 1;
        let budget = *defects.get(p).ok_or(SolverError::NoBudget {
            vertex: v,
            color: t.colors[v],
            rank,
        })?;
        let degree = cover
            .node_neighbors(v, p)
            .iter()
            .filter(|&&(w, q)| positions[w] == q)
            .count();
        if degree > budget {
            violators.push(v);
        }
        nodes.push(NodeDefect {
            vertex: v,
            color: t.colors[v],
            rank,
            degree,
            budget,
        });
    }
    Ok(DefectReport {
        pass: violators.is_empty(),
        nodes,
        violators,
    })
}

struct DefectSearch<'a> {
    cover: &'a Cover,
    defects: &'a [usize],
    adj: Vec<Vec<VertexId>>,
    order: Vec<VertexId>,
    assigned: Vec<Option<usize>>,
    degree: Vec<usize>,
    nodes: u64,
    limit: u64,
}

enum Step {
    Found,
    Dead,
    Exhausted,
}

impl DefectSearch<'_> {
    fn budget(&self, p: usize) -> usize {
        self.defects[p]
    }

    /// Assigned cover neighbors that node `(v, p)` would join in H[T].
    fn hits(&self, v: VertexId, p: usize) -> impl Iterator<Item = VertexId> + '_ {
        self.cover
            .node_neighbors(v, p)
            .iter()
            .filter(|&&(w, q)| self.assigned[w] == Some(q))
            .map(|&(w, _)| w)
    }

    fn can_place(&self, v: VertexId, p: usize) -> bool {
        let mut count = 0;
        for w in self.hits(v, p) {
            count += 1;
            let q = self.assigned[w].expect("hit is assigned");
            if self.degree[w] + 1 > self.budget(q) {
                return false;
            }
        }
        count <= self.budget(p)
    }

    /// Domain emptiness plus committed-plus-forced defect check over the
    /// unassigned frontier.
    fn consistent(&self) -> bool {
        let n = self.assigned.len();
        let mut forced = vec![0usize; n];
        for x in 0..n {
            if self.assigned[x].is_some() || !self.adj[x].iter().any(|&w| self.assigned[w].is_some())
            {
                continue;
            }
            let feasible: Vec<usize> = (0..self.defects.len().min(self.cover.list(x).len()))
                .filter(|&r| self.can_place(x, r))
                .collect();
            if feasible.is_empty() {
                return false;
            }
            for &u in &self.adj[x] {
                let Some(q) = self.assigned[u] else { continue };
                if feasible.iter().all(|&r| self.cover.adjacent(x, r, u, q)) {
                    forced[u] += 1;
                }
            }
        }
        (0..n).all(|u| match self.assigned[u] {
            Some(q) => self.degree[u] + forced[u] <= self.budget(q),
            None => true,
        })
    }

    fn run(&mut self, depth: usize) -> Step {
        if depth == self.order.len() {
            return Step::Found;
        }
        let v = self.order[depth];
        let choices = self.defects.len().min(self.cover.list(v).len());
        for p in 0..choices {
            if self.nodes >= self.limit {
                return Step::Exhausted;
            }
            self.nodes += 1;
            if !self.can_place(v, p) {
                continue;
            }
            let hits: Vec<VertexId> = self.hits(v, p).collect();
            for &w in &hits {
                self.degree[w] += 1;
            }
            self.degree[v] = hits.len();
            self.assigned[v] = Some(p);
            let step = if self.consistent() {
                self.run(depth + 1)
            } else {
                Step::Dead
            };
            match step {
                Step::Found => return Step::Found,
                Step::Exhausted => return Step::Exhausted,
                Step::Dead => {}
            }
            self.assigned[v] = None;
            self.degree[v] = 0;
            for &w in &hits {
                self.degree[w] -= 1;
            }
        }
        Step::Dead
    }
}

/// Backtracking search for a DP-(d₁,…,d_k)-coloring.
///
/// Vertices are colored highest degree first (ties by id); colors are tried
/// in rank order. Every returned transversal is re-verified.
pub fn find_defective_dp(
    cover: &Cover,
    defects: &[usize],
    node_limit: u64,
) -> Result<Search<Transversal>, SolverError> {
    budgets_for(cover, defects)?;
    let n = cover.vertex_count();
    let adj = graph_adjacency(cover);
    let mut order: Vec<VertexId> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(adj[v].len()), v));
    let mut search = DefectSearch {
        cover,
        defects,
        adj,
        order,
        assigned: vec![None; n],
        degree: vec![0; n],
        nodes: 0,
        limit: node_limit,
    };
    let outcome = match search.run(0) {
        Step::Found => {
            let colors = search
                .assigned
                .iter()
                .enumerate()
                .map(|(v, p)| cover.list(v)[p.expect("complete assignment")])
                .collect();
            let t = Transversal::new(colors);
            let report = verify_defective(cover, &t, defects)?;
            assert!(report.pass, "defective search returned an invalid transversal");
            Outcome::Found(t)
        }
        Step::Dead => Outcome::NoneExists,
        Step::Exhausted => Outcome::BudgetExhausted,
    };
    Ok(Search {
        outcome,
        nodes: search.nodes,
    })
}
