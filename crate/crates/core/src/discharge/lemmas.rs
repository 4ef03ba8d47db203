//! Mechanical checks of the structural facts the discharging argument relies
//! on. Each item is evaluated on the graph even when its hypotheses fail, so
//! hypothesis-violating graphs double as contrapositive tests.

use serde::{Deserialize, Serialize};

use super::rational::q;
use super::{beta, special_vertex_analysis};
use crate::graph::{
    AdjacencyKind, FaceId, HypothesisFailure, HypothesisReport, PlaneGraph, Profile, ReducibleConfiguration,
    VertexId,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LemmaItemId {
    NoAdjacentTriangles,
    TriangleFiveFaceNormal,
    TriangleSixFaceNormal,
    NoTriangleOnSevenFace,
    NoAdjacentFiveFaces,
    FiveFaceAtMostTwoTriangles,
    SixFaceAtMostOneTriangle,
    SpecialVertexShape,
    SpecialVertexUnique,
    BetaAtLeastThird,
    NoTriangleOnFiveFace,
    NoTriangleOnSixFace,
    SevenFacesChordless,
    TriangleSevenFaceNormal,
}

impl LemmaItemId {
    pub fn statement(self) -> &'static str {
        use LemmaItemId::*;
        match self {
            NoAdjacentTriangles => "no two 3-faces share an edge",
            TriangleFiveFaceNormal => "a 3-face adjacent to a 5-face is normally adjacent to it",
            TriangleSixFaceNormal => "a 3-face adjacent to a 6-face is normally adjacent to it",
            NoTriangleOnSevenFace => "no 7-face is adjacent to a 3-face",
            NoAdjacentFiveFaces => "no two 5-faces share an edge",
            FiveFaceAtMostTwoTriangles => "every 5-face is adjacent to at most two 3-faces",
            SixFaceAtMostOneTriangle => "every 6-face is adjacent to at most one 3-face",
            SpecialVertexShape => {
                "each special 3-vertex has v4 = v7, [v4 v5 v6] is not a face, and its 5-face touches only one 3-face"
            }
            SpecialVertexUnique => "no other special 3-vertex lies on the 5-face or 6-face of a special 3-vertex",
            BetaAtLeastThird => "every 5-face at a special 3-vertex keeps at least 1/3 after R1-R5",
            NoTriangleOnFiveFace => "no 3-face is adjacent to a 5-face",
            NoTriangleOnSixFace => "no 3-face is adjacent to a 6-face",
            SevenFacesChordless => "every 7-face is bounded by a 7-cycle and every 7-cycle is chordless",
            TriangleSevenFaceNormal => "a 3-face adjacent to a 7-face is normally adjacent to it",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Hypothesis {
    NoForbiddenCycles,
    MinDegreeThree,
    NoReducibleConfiguration,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum UnmetHypothesis {
    Graph { failure: HypothesisFailure },
    Reducible { configuration: ReducibleConfiguration },
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Witness {
    pub faces: Vec<FaceId>,
    pub vertices: Vec<VertexId>,
    /// A cycle assembled from the failing configuration, when one exists.
    pub cycle: Option<Vec<VertexId>>,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum Verdict {
    Holds,
    Violated {
        witness: Witness,
    },
    HypothesisNotMet {
        unmet: Vec<UnmetHypothesis>,
        conclusion_holds: bool,
        witness: Option<Witness>,
    },
}

impl Verdict {
    pub fn is_violated(&self) -> bool {
        matches!(self, Verdict::Violated { .. })
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::Holds => None,
            Verdict::Violated { witness } => Some(witness),
            Verdict::HypothesisNotMet { witness, .. } => witness.as_ref(),
        }
    }

    pub fn conclusion_holds(&self) -> bool {
        match self {
            Verdict::Holds => true,
            Verdict::Violated { .. } => false,
            Verdict::HypothesisNotMet { conclusion_holds, .. } => *conclusion_holds,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaItem {
    pub item: LemmaItemId,
    pub statement: String,
    pub hypotheses: Vec<Hypothesis>,
    #[serde(flatten)]
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaReport {
    pub profile: Profile,
    pub hypotheses: HypothesisReport,
    pub items: Vec<LemmaItem>,
}

impl LemmaReport {
    pub fn item(&self, id: LemmaItemId) -> Option<&LemmaItem> {
        self.items.iter().find(|i| i.item == id)
    }

    /// True iff no item is violated with its hypotheses satisfied.
    pub fn sound(&self) -> bool {
        self.items.iter().all(|i| !i.verdict.is_violated())
    }
}

/// Path from `a` to `b` along a face walk, avoiding the edge `ab`.
fn around(walk: &[VertexId], a: VertexId, b: VertexId) -> Option<Vec<VertexId>> {
    let n = walk.len();
    let i = walk.iter().position(|&x| x == a)?;
    let step: usize = if walk[(i + 1) % n] == b {
        n - 1
    } else if walk[(i + n - 1) % n] == b {
        1
    } else {
        return None;
    };
    let mut path = vec![a];
    let mut j = i;
    loop {
        j = (j + step) % n;
        path.push(walk[j]);
        if walk[j] == b {
            return Some(path);
        }
        if path.len() > n {
            return None;
        }
    }
}

/// The cycle b(f1) ∪ b(f2) minus their common edge, for simple faces
/// sharing exactly one edge and its two endpoints.
pub fn merged_cycle(g: &PlaneGraph, f1: FaceId, f2: FaceId) -> Option<Vec<VertexId>> {
    let adj = g.face_adjacency(f1, f2);
    if adj.kind != AdjacencyKind::NormallyAdjacent || adj.shared_edges.len() != 1 {
        return None;
    }
    let (a, b) = g.edges()[adj.shared_edges[0]];
    let mut cycle = around(&g.face(f1).walk, a, b)?;
    let back = around(&g.face(f2).walk, b, a)?;
    cycle.extend_from_slice(&back[1..back.len() - 1]);
    g.is_cycle(&cycle).then_some(cycle)
}

/// The boundary of a simple face with every edge shared with one of the
/// given 3-faces replaced by the path through that triangle's apex.
pub fn detour_cycle(g: &PlaneGraph, f: FaceId, triangles: &[FaceId]) -> Option<Vec<VertexId>> {
    let face = g.face(f);
    if !face.simple {
        return None;
    }
    let n = face.walk.len();
    let mut cycle = Vec::new();
    for i in 0..n {
        let (a, b) = (face.walk[i], face.walk[(i + 1) % n]);
        cycle.push(a);
        let e = g.edge_id(a, b)?;
        if let Some(&t) = triangles.iter().find(|&&t| g.face(t).contains_edge(e)) {
            let apex = g.face(t).vertices.iter().copied().find(|&x| x != a && x != b)?;
            cycle.push(apex);
        }
    }
    g.is_cycle(&cycle).then_some(cycle)
}

fn faces_of_degree(g: &PlaneGraph, d: usize) -> impl Iterator<Item = FaceId> + '_ {
    g.faces().iter().filter(move |f| f.degree() == d).map(|f| f.id)
}

fn triangles_on(g: &PlaneGraph, f: FaceId) -> Vec<FaceId> {
    g.adjacent_faces(f)
        .into_iter()
        .filter(|&t| g.face(t).degree() == 3)
        .collect()
}

fn pair_witness(g: &PlaneGraph, a: FaceId, b: FaceId, note: &str) -> Witness {
    let adj = g.face_adjacency(a, b);
    Witness {
        faces: vec![a, b],
        vertices: adj.shared_vertices,
        cycle: merged_cycle(g, a, b),
        note: note.to_string(),
    }
}

/// First pair (triangle, face of degree `d`) sharing an edge, optionally
/// restricted to pairs that are not normally adjacent.
fn triangle_pairs(g: &PlaneGraph, d: usize, only_abnormal: bool) -> Option<Witness> {
    for t in faces_of_degree(g, 3) {
        for f in g.adjacent_faces(t) {
            if g.face(f).degree() != d {
                continue;
            }
            let kind = g.face_adjacency(t, f).kind;
            if only_abnormal && kind == AdjacencyKind::NormallyAdjacent {
                continue;
            }
            let note = if only_abnormal {
                format!("3-face {t} and {d}-face {f} share an edge but are not normally adjacent")
            } else {
                format!("3-face {t} is adjacent to {d}-face {f}")
            };
            return Some(pair_witness(g, t, f, &note));
        }
    }
    None
}

fn adjacent_same(g: &PlaneGraph, d: usize) -> Option<Witness> {
    for a in faces_of_degree(g, d) {
        if let Some(b) = g
            .adjacent_faces(a)
            .into_iter()
            .find(|&b| b > a && g.face(b).degree() == d)
        {
            return Some(pair_witness(g, a, b, &format!("{d}-faces {a} and {b} share an edge")));
        }
    }
    None
}

fn too_many_triangles(g: &PlaneGraph, d: usize, max: usize) -> Option<Witness> {
    for f in faces_of_degree(g, d) {
        let ts = triangles_on(g, f);
        if ts.len() > max {
            let cycle = detour_cycle(g, f, &ts);
            let note = format!("{d}-face {f} is adjacent to {} 3-faces", ts.len());
            let mut faces = vec![f];
            faces.extend(ts);
            return Some(Witness {
                faces,
                vertices: Vec::new(),
                cycle,
                note,
            });
        }
    }
    None
}

fn seven_faces_chordless(g: &PlaneGraph) -> Option<Witness> {
    if let Some(f) = faces_of_degree(g, 7).find(|&f| !g.face(f).simple) {
        return Some(Witness {
            faces: vec![f],
            vertices: g.face(f).walk.clone(),
            cycle: None,
            note: format!("7-face {f} is not bounded by a cycle"),
        });
    }
    for c in g.cycles_of_length(7).cycles {
        for i in 0..7 {
            for j in i + 2..7 {
                if i == 0 && j == 6 {
                    continue;
                }
                if g.has_edge(c[i], c[j]) {
                    // The chord splits the 7-cycle into two shorter cycles.
                    let part: Vec<VertexId> = c[i..=j].to_vec();
                    let (short, long): (Vec<VertexId>, Vec<VertexId>) = {
                        let mut rest: Vec<VertexId> = c[j..].to_vec();
                        rest.extend_from_slice(&c[..=i]);
                        if part.len() <= rest.len() {
                            (part, rest)
                        } else {
                            (rest, part)
                        }
                    };
                    return Some(Witness {
                        faces: Vec::new(),
                        vertices: vec![c[i], c[j]],
                        cycle: Some(if short.len() == 4 { short } else { long }),
                        note: format!("7-cycle {c:?} has chord {}-{}", c[i], c[j]),
                    });
                }
            }
        }
    }
    None
}

fn special_shape(g: &PlaneGraph) -> Option<Witness> {
    let r = special_vertex_analysis(g).into_iter().find(|r| {
        !(r.identification.holds && r.outer_triangle_open.holds && r.one_triangle_on_five_face.holds)
    })?;
    let failed: Vec<&str> = [
        (&r.identification, "identification"),
        (&r.outer_triangle_open, "outer triangle"),
        (&r.one_triangle_on_five_face, "triangles on f2"),
    ]
    .iter()
    .filter(|(c, _)| !c.holds)
    .map(|(c, _)| c.detail.as_str())
    .collect();
    let mut faces = vec![r.triangle, r.five_face, r.six_face];
    faces.extend(r.five_face_triangles.iter().filter(|&&t| t != r.triangle));
    Some(Witness {
        faces,
        vertices: vec![r.vertex],
        cycle: None,
        note: format!("special vertex {}: {}", r.vertex, failed.join("; ")),
    })
}

fn special_unique(g: &PlaneGraph) -> Option<Witness> {
    let r = special_vertex_analysis(g).into_iter().find(|r| !r.unique.holds)?;
    let mut vertices = vec![r.vertex];
    vertices.extend(&r.other_specials);
    Some(Witness {
        faces: vec![r.five_face, r.six_face],
        vertices,
        cycle: None,
        note: r.unique.detail,
    })
}

fn beta_bound(g: &PlaneGraph) -> Option<Witness> {
    if !g.is_connected() {
        return None;
    }
    for v in g.classify_vertices().special_vertices() {
        let f = super::five_face_of(g, v).expect("special vertex has a 5-face");
        let b = beta(g, f).expect("connected graph, 5-face");
        if b < q(1, 3) {
            return Some(Witness {
                faces: vec![f],
                vertices: vec![v],
                cycle: None,
                note: format!("β(f{f}) = {}", super::rational::format(&b)),
            });
        }
    }
    None
}

pub fn check_structural_lemmas(g: &PlaneGraph, profile: Profile) -> LemmaReport {
    use Hypothesis::*;
    use LemmaItemId::*;
    let report = g.check_profile(profile);
    let reducible = g.find_reducible();
    let unmet = |hyps: &[Hypothesis]| -> Vec<UnmetHypothesis> {
        let mut out = Vec::new();
        for h in hyps {
            match h {
                NoForbiddenCycles => out.extend(
                    report
                        .cycle_failures()
                        .into_iter()
                        .map(|failure| UnmetHypothesis::Graph { failure }),
                ),
                MinDegreeThree => out.extend(
                    report
                        .min_degree_failure()
                        .map(|failure| UnmetHypothesis::Graph { failure }),
                ),
                NoReducibleConfiguration => out.extend(
                    reducible
                        .iter()
                        .cloned()
                        .map(|configuration| UnmetHypothesis::Reducible { configuration }),
                ),
            }
        }
        out
    };
    let base: &[Hypothesis] = &[NoForbiddenCycles];
    let min3: &[Hypothesis] = &[NoForbiddenCycles, MinDegreeThree];
    let all: &[Hypothesis] = &[NoForbiddenCycles, MinDegreeThree, NoReducibleConfiguration];
    type Check = fn(&PlaneGraph) -> Option<Witness>;
    let plan: Vec<(LemmaItemId, &[Hypothesis], Check)> = match profile {
        Profile::No48 => vec![
            (NoAdjacentTriangles, base, |g| adjacent_same(g, 3)),
            (TriangleFiveFaceNormal, base, |g| triangle_pairs(g, 5, true)),
            (TriangleSixFaceNormal, min3, |g| triangle_pairs(g, 6, true)),
            (NoTriangleOnSevenFace, min3, |g| triangle_pairs(g, 7, false)),
            (NoAdjacentFiveFaces, min3, |g| adjacent_same(g, 5)),
            (FiveFaceAtMostTwoTriangles, min3, |g| too_many_triangles(g, 5, 2)),
            (SixFaceAtMostOneTriangle, min3, |g| too_many_triangles(g, 6, 1)),
            (SpecialVertexShape, min3, special_shape),
            (SpecialVertexUnique, min3, special_unique),
            (BetaAtLeastThird, all, beta_bound),
        ],
        Profile::No46 => vec![
            (NoAdjacentTriangles, base, |g| adjacent_same(g, 3)),
            (NoTriangleOnFiveFace, base, |g| triangle_pairs(g, 5, false)),
            (NoTriangleOnSixFace, min3, |g| triangle_pairs(g, 6, false)),
            (SevenFacesChordless, base, seven_faces_chordless),
            (TriangleSevenFaceNormal, base, |g| triangle_pairs(g, 7, true)),
        ],
    };
    let items = plan
        .into_iter()
        .map(|(item, hyps, check)| {
            let failures = unmet(hyps);
            let witness = check(g);
            let verdict = match (failures.is_empty(), witness) {
                (true, None) => Verdict::Holds,
                (true, Some(witness)) => Verdict::Violated { witness },
                (false, witness) => Verdict::HypothesisNotMet {
                    unmet: failures,
                    conclusion_holds: witness.is_none(),
                    witness,
                },
            };
            LemmaItem {
                item,
                statement: item.statement().to_string(),
                hypotheses: hyps.to_vec(),
                verdict,
            }
        })
        .collect();
    LemmaReport {
        profile,
        hypotheses: report,
        items,
    }
}
