use serde::{Deserialize, Serialize};

use super::{PlaneGraph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DegreeClass {
    /// Degree 2 or less; carries the exact degree.
    Low(usize),
    Three,
    Four,
    Five,
    SixPlus,
}

impl DegreeClass {
    pub fn of(degree: usize) -> Self {
        match degree {
            0..=2 => DegreeClass::Low(degree),
            3 => DegreeClass::Three,
            4 => DegreeClass::Four,
            5 => DegreeClass::Five,
            _ => DegreeClass::SixPlus,
        }
    }
}

/// Kind of a 3-vertex: bad when it has a neighbor of degree exactly 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ThreeKind {
    Good,
    Bad,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexInfo {
    pub degree: usize,
    pub class: DegreeClass,
    /// Set for 3-vertices only.
    pub kind: Option<ThreeKind>,
    /// A 3-vertex whose three corners lie on a 3-face, a 5-face and a 6-face.
    pub special: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexClasses {
    pub vertices: Vec<VertexInfo>,
}

impl VertexClasses {
    pub fn info(&self, v: VertexId) -> &VertexInfo {
        &self.vertices[v]
    }

    pub fn is_bad(&self, v: VertexId) -> bool {
        self.vertices[v].kind == Some(ThreeKind::Bad)
    }

    pub fn is_good(&self, v: VertexId) -> bool {
        self.vertices[v].kind == Some(ThreeKind::Good)
    }

    pub fn is_special(&self, v: VertexId) -> bool {
        self.vertices[v].special
    }

    pub fn special_vertices(&self) -> Vec<VertexId> {
        (0..self.vertices.len()).filter(|&v| self.is_special(v)).collect()
    }
}

/// A local structure that cannot occur in a minimal non-colorable graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum ReducibleConfiguration {
    /// A vertex of degree at most 2.
    LowDegree { vertex: VertexId, degree: usize },
    /// A 3-vertex with a 3-neighbor but fewer than two 5⁺-neighbors.
    MissingHeavyNeighbors {
        vertex: VertexId,
        three_neighbor: VertexId,
        heavy_neighbors: usize,
    },
    /// A 3-vertex with a 3-neighbor and a 5-neighbor that has no 4⁺-neighbor.
    FiveNeighborWithoutFourPlus {
        vertex: VertexId,
        five_neighbor: VertexId,
    },
}

impl ReducibleConfiguration {
    /// The vertex the record is anchored at.
    pub fn vertex(&self) -> VertexId {
        match *self {
            ReducibleConfiguration::LowDegree { vertex, .. }
            | ReducibleConfiguration::MissingHeavyNeighbors { vertex, .. }
            | ReducibleConfiguration::FiveNeighborWithoutFourPlus { vertex, .. } => vertex,
        }
    }

    /// Every vertex the configuration mentions.
    pub fn vertices(&self) -> Vec<VertexId> {
        match *self {
            ReducibleConfiguration::LowDegree { vertex, .. } => vec![vertex],
            ReducibleConfiguration::MissingHeavyNeighbors {
                vertex,
                three_neighbor,
                ..
            } => vec![vertex, three_neighbor],
            ReducibleConfiguration::FiveNeighborWithoutFourPlus {
                vertex,
                five_neighbor,
            } => vec![vertex, five_neighbor],
        }
    }
}

impl PlaneGraph {
    pub fn classify_vertices(&self) -> VertexClasses {
        let vertices = (0..self.vertex_count())
            .map(|v| {
                let degree = self.degree(v);
                let kind = (degree == 3).then(|| {
                    if self.neighbors(v).iter().any(|&w| self.degree(w) == 3) {
                        ThreeKind::Bad
                    } else {
                        ThreeKind::Good
                    }
                });
                let special = degree == 3 && {
                    let mut ds: Vec<usize> = self
                        .corner_faces(v)
                        .into_iter()
                        .map(|f| self.face(f).degree())
                        .collect();
                    ds.sort_unstable();
                    ds == [3, 5, 6]
                };
                VertexInfo {
                    degree,
                    class: DegreeClass::of(degree),
                    kind,
                    special,
                }
            })
            .collect();
        VertexClasses { vertices }
    }

    /// Every occurrence of the reducible configurations, ordered by vertex.
    pub fn find_reducible(&self) -> Vec<ReducibleConfiguration> {
        let mut out = Vec::new();
        for u in 0..self.vertex_count() {
            let degree = self.degree(u);
            if degree <= 2 {
                out.push(ReducibleConfiguration::LowDegree { vertex: u, degree });
                continue;
            }
            if degree != 3 {
                continue;
            }
            let Some(&three) = self.neighbors(u).iter().find(|&&w| self.degree(w) == 3) else {
                continue;
            };
            let heavy = self
                .neighbors(u)
                .iter()
                .filter(|&&w| self.degree(w) >= 5)
                .count();
            if heavy < 2 {
                out.push(ReducibleConfiguration::MissingHeavyNeighbors {
                    vertex: u,
                    three_neighbor: three,
                    heavy_neighbors: heavy,
                });
            }
            for &x in self.neighbors(u) {
                if self.degree(x) == 5 && !self.neighbors(x).iter().any(|&y| self.degree(y) >= 4) {
                    out.push(ReducibleConfiguration::FiveNeighborWithoutFourPlus {
                        vertex: u,
                        five_neighbor: x,
                    });
                }
            }
        }
        out
    }
}
