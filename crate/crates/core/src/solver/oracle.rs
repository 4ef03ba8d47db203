//! Exhaustive reference solver for small covers. Shares no search code with
//! the finders: adjacency is rebuilt from the raw matchings and every
//! transversal (and, for B_A, every placement order) is tried.

use std::collections::HashSet;

use super::{OrderedTransversal, Outcome, SolverError, Transversal};
use crate::cover::{Color, Cover};
use crate::graph::VertexId;

pub const ORACLE_VERTEX_LIMIT: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Mode {
    Defective(Vec<usize>),
    Ba,
    /// Orders of one fixed transversal only.
    BaOrder(Transversal),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleOutcome {
    Defective(Outcome<Transversal>),
    Ba(Outcome<OrderedTransversal>),
}

impl OracleOutcome {
    pub fn is_found(&self) -> bool {
        match self {
            OracleOutcome::Defective(o) => o.is_found(),
            OracleOutcome::Ba(o) => o.is_found(),
        }
    }
}

type Node = (VertexId, Color);

struct Edges(HashSet<(Node, Node)>);

impl Edges {
    fn of(cover: &Cover) -> Self {
        let mut set = HashSet::new();
        for m in cover.matchings() {
            let (u, v) = m.edge;
            for &(a, b) in &m.pairs {
                set.insert(((u, a), (v, b)));
                set.insert(((v, b), (u, a)));
            }
        }
        Edges(set)
    }

    fn joined(&self, x: Node, y: Node) -> bool {
        self.0.contains(&(x, y))
    }
}

pub fn brute_oracle(cover: &Cover, mode: &Mode) -> Result<OracleOutcome, SolverError> {
    let n = cover.vertex_count();
    if n > ORACLE_VERTEX_LIMIT {
        return Err(SolverError::TooLarge {
            got: n,
            limit: ORACLE_VERTEX_LIMIT,
        });
    }
    if let Mode::Defective(d) = mode {
        if d.len() != cover.k() {
            return Err(SolverError::DefectLength {
                got: d.len(),
                expected: cover.k(),
            });
        }
    }
    let edges = Edges::of(cover);
    let lists: Vec<&[Color]> = (0..n).map(|v| cover.list(v)).collect();
    if let Mode::BaOrder(t) = mode {
        t.positions(cover)?;
        return Ok(OracleOutcome::Ba(match ba_order(&edges, &lists, &t.colors) {
            Some(order) => Outcome::Found(OrderedTransversal {
                transversal: t.clone(),
                order,
            }),
            None => Outcome::NoneExists,
        }));
    }
    let mut digits = vec![0usize; n];
    loop {
        let colors: Vec<Color> = (0..n).map(|v| lists[v][digits[v]]).collect();
        match mode {
            Mode::Defective(d) => {
                if defective_ok(&edges, &lists, &colors, d) {
                    return Ok(OracleOutcome::Defective(Outcome::Found(Transversal::new(colors))));
                }
            }
            Mode::Ba | Mode::BaOrder(_) => {
                if let Some(order) = ba_order(&edges, &lists, &colors) {
                    return Ok(OracleOutcome::Ba(Outcome::Found(OrderedTransversal {
                        transversal: Transversal::new(colors),
                        order,
                    })));
                }
            }
        }
        // Odometer step; done once every digit has wrapped.
        let mut i = 0;
        while i < n {
            digits[i] += 1;
            if digits[i] < lists[i].len() {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
    }
    Ok(match mode {
        Mode::Defective(_) => OracleOutcome::Defective(Outcome::NoneExists),
        Mode::Ba | Mode::BaOrder(_) => OracleOutcome::Ba(Outcome::NoneExists),
    })
}

fn rank(lists: &[&[Color]], v: VertexId, c: Color) -> usize {
    lists[v].iter().position(|&x| x == c).expect("color from list") + 1
}

fn defective_ok(edges: &Edges, lists: &[&[Color]], colors: &[Color], d: &[usize]) -> bool {
    let n = colors.len();
    (0..n).all(|v| {
        let r = rank(lists, v, colors[v]);
        if r > d.len() {
            return false;
        }
        let deg = (0..n)
            .filter(|&w| w != v && edges.joined((v, colors[v]), (w, colors[w])))
            .count();
        deg <= d[r - 1]
    })
}

fn order_ok(edges: &Edges, lists: &[&[Color]], colors: &[Color], order: &[VertexId]) -> bool {
    let node = |v: VertexId| (v, colors[v]);
    for (i, &v) in order.iter().enumerate() {
        let earlier = &order[..i];
        let left: Vec<VertexId> = earlier
            .iter()
            .copied()
            .filter(|&w| edges.joined(node(v), node(w)))
            .collect();
        if rank(lists, v, colors[v]) == 1 {
            if !left.is_empty() {
                return false;
            }
        } else {
            match left[..] {
                [] => {}
                [w] => {
                    let c = earlier
                        .iter()
                        .filter(|&&x| x != w && edges.joined(node(w), node(x)))
                        .count();
                    if c > 1 {
                        return false;
                    }
                }
                _ => return false,
            }
        }
    }
    true
}

/// Tries every permutation (Heap's algorithm).
fn ba_order(edges: &Edges, lists: &[&[Color]], colors: &[Color]) -> Option<Vec<VertexId>> {
    let n = colors.len();
    let mut perm: Vec<VertexId> = (0..n).collect();
    if order_ok(edges, lists, colors, &perm) {
        return Some(perm);
    }
    let mut c = vec![0usize; n];
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            if order_ok(edges, lists, colors, &perm) {
                return Some(perm);
            }
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::generate;
    use crate::cover::enumerate_covers;
    use crate::graph::PlaneGraph;
    use crate::solver::{find_ba, find_defective_dp, verify_ba, verify_defective};

    #[test]
    fn agrees_on_every_single_edge_cover() {
        let edge = PlaneGraph::from_rotations(vec![vec![1], vec![0]]).unwrap();
        let covers: Vec<Cover> = enumerate_covers(&edge, 3, 10).unwrap().collect();
        assert_eq!(covers.len(), 34);
        for cover in &covers {
            for d in [vec![0, 0, 0], vec![0, 2, 2]] {
                let found = find_defective_dp(cover, &d, 10_000).unwrap().outcome;
                let oracle = brute_oracle(cover, &Mode::Defective(d.clone())).unwrap();
                assert_eq!(found.is_found(), oracle.is_found());
                if let OracleOutcome::Defective(Outcome::Found(t)) = oracle {
                    assert!(verify_defective(cover, &t, &d).unwrap().pass);
                }
            }
            let ba = find_ba(cover, 10_000).unwrap().outcome;
            let oracle = brute_oracle(cover, &Mode::Ba).unwrap();
            assert_eq!(ba.is_found(), oracle.is_found());
            if let OracleOutcome::Ba(Outcome::Found(ot)) = oracle {
                assert!(verify_ba(cover, &ot).unwrap().pass);
            }
        }
    }

    #[test]
    fn c5_identity_found() {
        let c5 = Cover::identity(&generate("cycle:5").unwrap(), 3);
        assert!(brute_oracle(&c5, &Mode::Ba).unwrap().is_found());
    }

    #[test]
    fn size_guard() {
        let cube = Cover::identity(&generate("cube").unwrap(), 3);
        assert!(matches!(
            brute_oracle(&cube, &Mode::Ba),
            Err(SolverError::TooLarge { got: 8, .. })
        ));
    }
}
