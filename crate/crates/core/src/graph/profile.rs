use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{PlaneGraph, VertexId};

/// Forbidden-cycle hypothesis: the two excluded cycle lengths.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Profile {
    /// Without 4- and 8-cycles.
    No48,
    /// Without 4- and 6-cycles.
    No46,
}

impl Profile {
    pub fn forbidden_lengths(self) -> [usize; 2] {
        match self {
            Profile::No48 => [4, 8],
            Profile::No46 => [4, 6],
        }
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Profile::No48 => "no48",
            Profile::No46 => "no46",
        })
    }
}

impl FromStr for Profile {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "no48" => Ok(Profile::No48),
            "no46" => Ok(Profile::No46),
            other => Err(format!("unknown profile `{other}` (expected no48 or no46)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForbiddenCycleStatus {
    pub length: usize,
    /// First cycle of this length found, if any.
    pub witness: Option<Vec<VertexId>>,
}

/// One unmet hypothesis, with its witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum HypothesisFailure {
    Disconnected { components: usize },
    MinDegree { vertex: VertexId, degree: usize },
    ForbiddenCycle { length: usize, cycle: Vec<VertexId> },
}

impl fmt::Display for HypothesisFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HypothesisFailure::Disconnected { components } => {
                write!(f, "graph is disconnected ({components} components)")
            }
            HypothesisFailure::MinDegree { vertex, degree } => {
                write!(f, "minimum degree below 3: vertex {vertex} has degree {degree}")
            }
            HypothesisFailure::ForbiddenCycle { length, cycle } => {
                write!(f, "{length}-cycle present: {cycle:?}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypothesisReport {
    pub profile: Profile,
    pub connected: bool,
    pub components: usize,
    pub min_degree: usize,
    pub min_degree_vertex: VertexId,
    pub forbidden: Vec<ForbiddenCycleStatus>,
}

impl HypothesisReport {
    /// True iff none of the profile's forbidden cycle lengths occur.
    pub fn cycles_ok(&self) -> bool {
        self.forbidden.iter().all(|s| s.witness.is_none())
    }

    pub fn min_degree_ok(&self) -> bool {
        self.min_degree >= 3
    }

    pub fn cycle_failures(&self) -> Vec<HypothesisFailure> {
        self.forbidden
            .iter()
            .filter_map(|s| {
                s.witness.as_ref().map(|c| HypothesisFailure::ForbiddenCycle {
                    length: s.length,
                    cycle: c.clone(),
                })
            })
            .collect()
    }

    pub fn min_degree_failure(&self) -> Option<HypothesisFailure> {
        (!self.min_degree_ok()).then_some(HypothesisFailure::MinDegree {
            vertex: self.min_degree_vertex,
            degree: self.min_degree,
        })
    }

    /// Every unmet hypothesis: connectivity, δ ≥ 3 and the forbidden cycles.
    pub fn failures(&self) -> Vec<HypothesisFailure> {
        let mut out = Vec::new();
        if !self.connected {
            out.push(HypothesisFailure::Disconnected {
                components: self.components,
            });
        }
        out.extend(self.min_degree_failure());
        out.extend(self.cycle_failures());
        out
    }
}

impl PlaneGraph {
    pub fn check_profile(&self, profile: Profile) -> HypothesisReport {
        let (min_degree, min_degree_vertex) = self.min_degree();
        HypothesisReport {
            profile,
            connected: self.is_connected(),
            components: self.component_count(),
            min_degree,
            min_degree_vertex,
            forbidden: profile
                .forbidden_lengths()
                .iter()
                .map(|&length| ForbiddenCycleStatus {
                    length,
                    witness: self.find_cycle_of_length(length),
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pentagon_passes_cycle_conditions_but_not_degree() {
        let g = PlaneGraph::from_rotations((0..5).map(|i| vec![(i + 1) % 5, (i + 4) % 5]).collect())
            .unwrap();
        let r = g.check_profile(Profile::No46);
        assert!(r.cycles_ok());
        assert_eq!(r.min_degree, 2);
        assert_eq!(r.failures().len(), 1);
    }

    #[test]
    fn profile_parses() {
        assert_eq!("NO48".parse::<Profile>(), Ok(Profile::No48));
        assert!("no47".parse::<Profile>().is_err());
    }
}
