use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use super::{PlaneGraph, VertexId};

/// Longest cycle length the enumerator accepts.
pub const MAX_CYCLE_LENGTH: usize = 12;

/// All cycles of one length, each in canonical rotation: it starts at its
/// smallest vertex and the second vertex is smaller than the last.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleList {
    pub length: usize,
    pub cycles: Vec<Vec<VertexId>>,
}

impl CycleList {
    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }
}

impl PlaneGraph {
    /// Exhaustive, duplicate-free list of the `k`-cycles.
    ///
    /// # Panics
    /// If `k` is outside `3..=12`.
    pub fn cycles_of_length(&self, k: usize) -> CycleList {
        let mut cycles = Vec::new();
        self.walk_cycles(k, &mut |c| {
            cycles.push(c.to_vec());
            ControlFlow::Continue(())
        });
        CycleList { length: k, cycles }
    }

    /// The lexicographically first `k`-cycle, if any.
    pub fn find_cycle_of_length(&self, k: usize) -> Option<Vec<VertexId>> {
        let mut found = None;
        self.walk_cycles(k, &mut |c| {
            found = Some(c.to_vec());
            ControlFlow::Break(())
        });
        found
    }

    /// True iff `cycle` lists `k ≥ 3` distinct vertices with consecutive
    /// (cyclically) pairs adjacent.
    pub fn is_cycle(&self, cycle: &[VertexId]) -> bool {
        if cycle.len() < 3 || cycle.iter().any(|&v| v >= self.vertex_count()) {
            return false;
        }
        let mut seen = cycle.to_vec();
        seen.sort_unstable();
        seen.dedup();
        seen.len() == cycle.len()
            && (0..cycle.len()).all(|i| self.has_edge(cycle[i], cycle[(i + 1) % cycle.len()]))
    }

    fn walk_cycles(
        &self,
        k: usize,
        visit: &mut dyn FnMut(&[VertexId]) -> ControlFlow<()>,
    ) {
        assert!(
            (3..=MAX_CYCLE_LENGTH).contains(&k),
            "cycle length {k} outside 3..={MAX_CYCLE_LENGTH}"
        );
        let n = self.vertex_count();
        let mut on_path = vec![false; n];
        let mut path = Vec::with_capacity(k);
        for start in 0..n {
            path.clear();
            path.push(start);
            on_path[start] = true;
            let flow = self.extend(start, k, &mut path, &mut on_path, visit);
            on_path[start] = false;
            if flow.is_break() {
                return;
            }
        }
    }

    fn extend(
        &self,
        start: VertexId,
        k: usize,
        path: &mut Vec<VertexId>,
        on_path: &mut [bool],
        visit: &mut dyn FnMut(&[VertexId]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        let last = *path.last().expect("path starts non-empty");
        if path.len() == k {
            if path[1] < path[k - 1] && self.has_edge(last, start) {
                return visit(path);
            }
            return ControlFlow::Continue(());
        }
        for &w in self.neighbors(last) {
            if w <= start || on_path[w] {
                continue;
            }
            on_path[w] = true;
            path.push(w);
            let flow = self.extend(start, k, path, on_path, visit);
            path.pop();
            on_path[w] = false;
            flow?;
        }
        ControlFlow::Continue(())
    }
}
