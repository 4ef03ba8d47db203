mod common;

use proptest::prelude::*;

use common::elements::{beta_configuration, beta_hypotheses_hold};
use planar_dp::catalog::generate;
use planar_dp::cover::Cover;
use planar_dp::discharge::beta;
use planar_dp::discharge::rational::q;
use planar_dp::graph::PlaneGraph;
use planar_dp::solver::{
    find_ba, find_defective_dp, structure_of_transversal, verify_ba, verify_defective,
    OrderedTransversal, Transversal,
};

const SMALL: &[&str] = &["cycle:3", "cycle:5", "cycle:7", "k4", "cube", "figure1", "theta:1,2,2", "theta:2,3,3"];

/// 3×3 grid with one diagonal per square; `mask` selects the edges.
fn grid_graph(mask: u16) -> PlaneGraph {
    let mut points = Vec::new();
    for y in 0..3 {
        for x in 0..3 {
            points.push((x as f64, y as f64));
        }
    }
    let id = |x: usize, y: usize| y * 3 + x;
    let mut all = Vec::new();
    for y in 0..3 {
        for x in 0..3 {
            if x < 2 {
                all.push((id(x, y), id(x + 1, y)));
            }
            if y < 2 {
                all.push((id(x, y), id(x, y + 1)));
            }
            if x < 2 && y < 2 {
                all.push((id(x, y), id(x + 1, y + 1)));
            }
        }
    }
    assert_eq!(all.len(), 16);
    let edges: Vec<_> = all
        .into_iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, e)| e)
        .collect();
    PlaneGraph::from_coordinates(&points, &edges).unwrap()
}

/// Number of k-edge subsets that form a single cycle.
fn brute_cycle_count(g: &PlaneGraph, k: usize) -> usize {
    let edges = g.edges();
    let m = edges.len();
    let mut count = 0;
    let mut choose = vec![0usize; k];
    fn rec(
        edges: &[(usize, usize)],
        n: usize,
        start: usize,
        depth: usize,
        choose: &mut Vec<usize>,
        count: &mut usize,
    ) {
        if depth == choose.len() {
            let mut deg = vec![0usize; n];
            for &i in choose.iter() {
                deg[edges[i].0] += 1;
                deg[edges[i].1] += 1;
            }
            if deg.iter().any(|&d| d != 0 && d != 2) {
                return;
            }
            // Connected: walk from one edge.
            let mut seen = vec![false; choose.len()];
            let mut stack = vec![0];
            seen[0] = true;
            while let Some(i) = stack.pop() {
                let (a, b) = edges[choose[i]];
                for (j, &e) in choose.iter().enumerate() {
                    let (c, d) = edges[e];
                    if !seen[j] && (a == c || a == d || b == c || b == d) {
                        seen[j] = true;
                        stack.push(j);
                    }
                }
            }
            if seen.iter().all(|&s| s) {
                *count += 1;
            }
            return;
        }
        for i in start..edges.len() {
            choose[depth] = i;
            rec(edges, n, i + 1, depth + 1, choose, count);
        }
    }
    if k <= m {
        rec(edges, g.vertex_count(), 0, 0, &mut choose, &mut count);
    }
    count
}

fn proper_coloring_exists(g: &PlaneGraph, k: u32) -> bool {
    fn go(g: &PlaneGraph, v: usize, colors: &mut Vec<u32>, k: u32) -> bool {
        if v == colors.len() {
            return true;
        }
        for c in 1..=k {
            if g.neighbors(v).iter().all(|&w| w >= v || colors[w] != c) {
                colors[v] = c;
                if go(g, v + 1, colors, k) {
                    return true;
                }
            }
        }
        false
    }
    go(g, 0, &mut vec![0; g.vertex_count()], k)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn accepted_orders_give_linear_forests(
        gi in 0..SMALL.len(),
        seed in any::<u64>(),
        full in any::<bool>(),
        picks in prop::collection::vec(
            (prop::collection::vec(1u32..=3, 8), Just((0..8).collect::<Vec<usize>>()).prop_shuffle()),
            8,
        ),
    ) {
        let g = generate(SMALL[gi]).unwrap();
        let n = g.vertex_count();
        let cover = Cover::random(&g, 3, seed, full);
        let mut candidates: Vec<OrderedTransversal> = picks
            .into_iter()
            .map(|(colors, order)| OrderedTransversal {
                transversal: Transversal::new(colors[..n].to_vec()),
                order: order.into_iter().filter(|&v| v < n).collect(),
            })
            .collect();
        if let Some(ot) = find_ba(&cover, 1_000_000).unwrap().outcome.found() {
            candidates.push(ot.clone());
        }
        for ot in candidates {
            if verify_ba(&cover, &ot).unwrap().pass {
                let s = structure_of_transversal(&cover, &ot.transversal).unwrap();
                prop_assert!(s.is_linear_forest && s.color1_independent);
            }
        }
    }

    #[test]
    fn beta_is_at_least_one_third(
        spokes in [3usize..=6, 3usize..=6, 3usize..=6],
        pa in prop::collection::vec(prop::sample::select(vec![1usize, 4, 5, 6]), 1..=2),
        pb in prop::collection::vec(prop::sample::select(vec![1usize, 4, 5, 6]), 1..=2),
    ) {
        let (g, f) = beta_configuration(spokes, &pa, &pb);
        prop_assume!(beta_hypotheses_hold(&g, f));
        prop_assert!(g.classify_vertices().is_special(0));
        prop_assert!(beta(&g, f).unwrap() >= q(1, 3));
    }

    #[test]
    fn cycle_enumeration_matches_subsets(mask in any::<u16>()) {
        let g = grid_graph(mask);
        for k in 3..=9 {
            let list = g.cycles_of_length(k);
            prop_assert_eq!(list.len(), brute_cycle_count(&g, k), "k = {}", k);
            for c in &list.cycles {
                prop_assert!(g.is_cycle(c));
            }
            prop_assert_eq!(g.find_cycle_of_length(k).is_some(), !list.is_empty());
        }
    }

    #[test]
    fn identity_cover_is_proper_coloring(mask in any::<u16>(), k in 1usize..=3) {
        let g = grid_graph(mask);
        let cover = Cover::identity(&g, k);
        let s = find_defective_dp(&cover, &vec![0; k], 1_000_000).unwrap();
        prop_assert!(s.outcome.is_definitive());
        prop_assert_eq!(s.outcome.is_found(), proper_coloring_exists(&g, k as u32));
        if let Some(t) = s.outcome.found() {
            for &(u, v) in g.edges() {
                prop_assert_ne!(t.colors[u], t.colors[v]);
            }
            prop_assert!(verify_defective(&cover, t, &vec![0; k]).unwrap().pass);
        }
    }

    #[test]
    fn random_covers_are_reproducible(gi in 0..SMALL.len(), seed in any::<u64>(), full in any::<bool>()) {
        let g = generate(SMALL[gi]).unwrap();
        let a = Cover::random(&g, 3, seed, full);
        prop_assert_eq!(&a, &Cover::random(&g, 3, seed, full));
        prop_assert!(a.validate().valid);
        if full {
            prop_assert!(a.matchings().iter().all(|m| m.pairs.len() == 3));
        }
        let back: Cover = serde_json::from_str(&serde_json::to_string(&a).unwrap()).unwrap();
        prop_assert_eq!(back, a);
    }
}
