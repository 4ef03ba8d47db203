//! Empirical falsification loop: random full-matching covers of graphs that
//! meet a profile's cycle conditions, each searched for a B_A-coloring.

use std::ops::Range;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cover::Cover;
use crate::graph::{HypothesisFailure, PlaneGraph, Profile};
use crate::solver::{find_ba, find_defective_dp, Outcome};

/// Environment variable selecting the default worker count.
pub const THREADS_ENV: &str = "PLANAR_DP_THREADS";

#[derive(Debug, Clone)]
pub struct HuntConfig {
    pub profile: Profile,
    pub k: usize,
    pub seeds: Range<u64>,
    pub node_limit: u64,
    /// Worker threads; `None` reads the environment, then falls back to
    /// rayon's default.
    pub threads: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkippedGraph {
    pub graph: String,
    pub reasons: Vec<HypothesisFailure>,
}

/// A definitive "none" from the B_A search, with everything needed to replay it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Candidate {
    pub graph: String,
    pub seed: u64,
    pub cover: Cover,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeedRun {
    pub graph: String,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HuntReport {
    pub profile: Profile,
    pub k: usize,
    pub seed_start: u64,
    pub seed_end: u64,
    pub graphs: Vec<String>,
    pub skipped: Vec<SkippedGraph>,
    pub runs: usize,
    pub found: usize,
    pub candidates: Vec<Candidate>,
    pub exhausted: Vec<SeedRun>,
    /// Runs where a B_A-coloring exists but the (0,2,2) search did not
    /// succeed (only checked for k = 3).
    pub defect_022_failures: Vec<SeedRun>,
}

enum RunResult {
    Found { defect_022_ok: bool },
    None(Cover),
    Exhausted,
}

fn run_one(g: &PlaneGraph, cfg: &HuntConfig, seed: u64) -> RunResult {
    let cover = Cover::random(g, cfg.k, seed, true);
    let search = find_ba(&cover, cfg.node_limit).expect("random covers are well-formed");
    match search.outcome {
        Outcome::Found(_) => {
            let defect_022_ok = cfg.k != 3
                || find_defective_dp(&cover, &[0, 2, 2], cfg.node_limit)
                    .expect("defect vector matches k")
                    .outcome
                    .is_found();
            RunResult::Found { defect_022_ok }
        }
        Outcome::NoneExists => RunResult::None(cover),
        Outcome::BudgetExhausted => RunResult::Exhausted,
    }
}

pub fn resolve_threads(explicit: Option<usize>) -> Option<usize> {
    explicit
        .or_else(|| std::env::var(THREADS_ENV).ok()?.trim().parse().ok())
        .filter(|&n| n > 0)
}

/// Runs every (graph, seed) pair. Output order is by input graph, then seed,
/// whatever the thread count.
pub fn hunt(graphs: &[(String, PlaneGraph)], cfg: &HuntConfig) -> HuntReport {
    let mut skipped = Vec::new();
    let mut eligible = Vec::new();
    for (name, g) in graphs {
        let report = g.check_profile(cfg.profile);
        if report.cycles_ok() {
            eligible.push((name, g));
        } else {
            skipped.push(SkippedGraph {
                graph: name.clone(),
                reasons: report.cycle_failures(),
            });
        }
    }
    let jobs: Vec<(usize, u64)> = (0..eligible.len())
        .flat_map(|i| cfg.seeds.clone().map(move |s| (i, s)))
        .collect();
    let work = || -> Vec<RunResult> {
        jobs.par_iter()
            .map(|&(i, seed)| run_one(eligible[i].1, cfg, seed))
            .collect()
    };
    let results = match resolve_threads(cfg.threads) {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .expect("thread pool")
            .install(work),
        None => work(),
    };

    let mut report = HuntReport {
        profile: cfg.profile,
        k: cfg.k,
        seed_start: cfg.seeds.start,
        seed_end: cfg.seeds.end,
        graphs: eligible.iter().map(|(n, _)| n.to_string()).collect(),
        skipped,
        runs: jobs.len(),
        found: 0,
        candidates: Vec::new(),
        exhausted: Vec::new(),
        defect_022_failures: Vec::new(),
    };
    for (&(i, seed), result) in jobs.iter().zip(results) {
        let run = || SeedRun {
            graph: eligible[i].0.clone(),
            seed,
        };
        match result {
            RunResult::Found { defect_022_ok } => {
                report.found += 1;
                if !defect_022_ok {
                    report.defect_022_failures.push(run());
                }
            }
            RunResult::None(cover) => report.candidates.push(Candidate {
                graph: eligible[i].0.clone(),
                seed,
                cover,
            }),
            RunResult::Exhausted => report.exhausted.push(run()),
        }
    }
    report
}

/// Re-runs the B_A search on a recorded cover.
pub fn replay(candidate: &Candidate, node_limit: u64) -> Outcome<crate::solver::OrderedTransversal> {
    find_ba(&candidate.cover, node_limit)
        .expect("recorded covers are well-formed")
        .outcome
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::generate;

    fn inputs(names: &[&str]) -> Vec<(String, PlaneGraph)> {
        names.iter().map(|n| (n.to_string(), generate(n).unwrap())).collect()
    }

    #[test]
    fn odd_cycles_never_fail() {
        let cfg = HuntConfig {
            profile: Profile::No46,
            k: 3,
            seeds: 0..50,
            node_limit: 100_000,
            threads: Some(2),
        };
        let r = hunt(&inputs(&["cycle:5", "cycle:7", "k4"]), &cfg);
        assert_eq!(r.graphs, vec!["cycle:5", "cycle:7"]);
        assert_eq!(r.skipped.len(), 1);
        assert_eq!((r.runs, r.found), (100, 100));
        assert!(r.candidates.is_empty() && r.exhausted.is_empty() && r.defect_022_failures.is_empty());
    }

    #[test]
    fn deterministic_across_thread_counts() {
        let mut cfg = HuntConfig {
            profile: Profile::No48,
            k: 3,
            seeds: 0..20,
            node_limit: 100_000,
            threads: Some(1),
        };
        let g = inputs(&["cycle:9", "theta:2,3,3"]);
        let a = hunt(&g, &cfg);
        cfg.threads = Some(3);
        assert_eq!(a, hunt(&g, &cfg));
    }
}
