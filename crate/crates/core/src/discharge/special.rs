use serde::{Deserialize, Serialize};

use crate::graph::{FaceId, HypothesisFailure, PlaneGraph, Profile, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Clause {
    pub holds: bool,
    pub detail: String,
}

impl Clause {
    fn new(holds: bool, detail: impl Into<String>) -> Self {
        Clause {
            holds,
            detail: detail.into(),
        }
    }
}

/// The neighbourhood of one special 3-vertex v, labelled as
/// f1 = [v v1 v2], f2 = [v v2 v3 v4 v5], f3 = [v v5 v6 v7 v8 v1].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecialVertexRecord {
    pub vertex: VertexId,
    pub triangle: FaceId,
    pub five_face: FaceId,
    pub six_face: FaceId,
    /// `[v, v1, …, v8]`, when both f2 and f3 are simple and fit the pattern.
    pub labels: Option<[VertexId; 9]>,
    /// v4 and v7 coincide and are the only common vertex of f2 and f3 apart
    /// from v and v5.
    pub identification: Clause,
    /// [v4 v5 v6] is not a 3-face.
    pub outer_triangle_open: Clause,
    /// 3-faces sharing an edge with f2.
    pub five_face_triangles: Vec<FaceId>,
    pub one_triangle_on_five_face: Clause,
    /// Other special vertices on f2 or f3.
    pub other_specials: Vec<VertexId>,
    pub unique: Clause,
    /// Unmet hypotheses (δ ≥ 3, no 4- or 8-cycles), reported whenever a
    /// clause fails.
    pub hypothesis_failures: Vec<HypothesisFailure>,
}

impl SpecialVertexRecord {
    pub fn all_hold(&self) -> bool {
        [
            &self.identification,
            &self.outer_triangle_open,
            &self.one_triangle_on_five_face,
            &self.unique,
        ]
        .iter()
        .all(|c| c.holds)
    }
}

/// The face walk rotated to start at `start` and continue to `next`.
fn walk_from(walk: &[VertexId], start: VertexId, next: VertexId) -> Option<Vec<VertexId>> {
    let n = walk.len();
    let i = walk.iter().position(|&x| x == start)?;
    let fwd: Vec<VertexId> = (0..n).map(|k| walk[(i + k) % n]).collect();
    if fwd.get(1) == Some(&next) {
        return Some(fwd);
    }
    let back: Vec<VertexId> = (0..n).map(|k| walk[(i + n - k) % n]).collect();
    (back.get(1) == Some(&next)).then_some(back)
}

fn label(g: &PlaneGraph, v: VertexId, f1: FaceId, f2: FaceId, f3: FaceId) -> Option<[VertexId; 9]> {
    let (t, p, h) = (g.face(f1), g.face(f2), g.face(f3));
    if !(p.simple && h.simple) {
        return None;
    }
    let others: Vec<VertexId> = t.vertices.iter().copied().filter(|&x| x != v).collect();
    let &v2 = others.iter().find(|&&x| p.contains_vertex(x))?;
    let &v1 = others.iter().find(|&&x| x != v2)?;
    let five = walk_from(&p.walk, v, v2)?;
    let six = walk_from(&h.walk, v, five[4])?;
    if six[5] != v1 {
        return None;
    }
    Some([v, v1, v2, five[2], five[3], five[4], six[2], six[3], six[4]])
}

pub fn special_vertex_analysis(g: &PlaneGraph) -> Vec<SpecialVertexRecord> {
    let classes = g.classify_vertices();
    let specials = classes.special_vertices();
    let hypothesis_failures: Vec<HypothesisFailure> = {
        let r = g.check_profile(Profile::No48);
        r.min_degree_failure().into_iter().chain(r.cycle_failures()).collect()
    };
    let face_of = |v: VertexId, d: usize| {
        g.corner_faces(v)
            .into_iter()
            .find(|&f| g.face(f).degree() == d)
            .expect("special vertex has faces of degree 3, 5 and 6")
    };
    specials
        .iter()
        .map(|&v| {
            let (f1, f2, f3) = (face_of(v, 3), face_of(v, 5), face_of(v, 6));
            let labels = label(g, v, f1, f2, f3);

            let identification = match labels {
                Some(l) => {
                    let mut common: Vec<VertexId> = crate::graph::sorted_intersection(
                        &g.face(f2).vertices,
                        &g.face(f3).vertices,
                    );
                    common.retain(|&x| x != v && x != l[5]);
                    let holds = l[4] == l[7] && common == [l[4]];
                    Clause::new(
                        holds,
                        format!(
                            "v4 = {}, v7 = {}, other common vertices of f2 and f3: {:?}",
                            l[4], l[7], common
                        ),
                    )
                }
                None => Clause::new(false, "f2/f3 do not fit the labelled pattern"),
            };

            let outer_triangle_open = match labels {
                Some(l) => {
                    let mut tri = [l[4], l[5], l[6]];
                    tri.sort_unstable();
                    let bound = g
                        .faces()
                        .iter()
                        .find(|f| f.degree() == 3 && f.vertices == tri);
                    match bound {
                        Some(f) => Clause::new(false, format!("[v4 v5 v6] bounds 3-face {}", f.id)),
                        None => Clause::new(true, "[v4 v5 v6] bounds no 3-face"),
                    }
                }
                None => Clause::new(false, "labels unavailable"),
            };

            let five_face_triangles: Vec<FaceId> = g
                .adjacent_faces(f2)
                .into_iter()
                .filter(|&f| g.face(f).degree() == 3)
                .collect();
            let one_triangle_on_five_face = Clause::new(
                five_face_triangles == [f1],
                format!("3-faces adjacent to f2: {five_face_triangles:?}"),
            );

            let mut other_specials: Vec<VertexId> = specials
                .iter()
                .copied()
                .filter(|&x| x != v && (g.face(f2).contains_vertex(x) || g.face(f3).contains_vertex(x)))
                .collect();
            other_specials.sort_unstable();
            let unique = Clause::new(
                other_specials.is_empty(),
                format!("other special vertices on f2 or f3: {other_specials:?}"),
            );

            let mut record = SpecialVertexRecord {
                vertex: v,
                triangle: f1,
                five_face: f2,
                six_face: f3,
                labels,
                identification,
                outer_triangle_open,
                five_face_triangles,
                one_triangle_on_five_face,
                other_specials,
                unique,
                hypothesis_failures: Vec::new(),
            };
            if !record.all_hold() {
                record.hypothesis_failures = hypothesis_failures.clone();
            }
            record
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{figure1 as fig, generate};

    #[test]
    fn figure1_labels_match_names() {
        let g = generate("figure1").unwrap();
        let records = special_vertex_analysis(&g);
        let r = records.iter().find(|r| r.vertex == fig::V).unwrap();
        assert_eq!(
            r.labels,
            Some([fig::V, fig::V1, fig::V2, fig::V3, fig::V4, fig::V5, fig::V6, fig::V4, fig::V8])
        );
        assert!(r.identification.holds);
    }

    #[test]
    fn figure1_failed_clauses_cite_min_degree() {
        // With exactly these eleven edges [v4 v5 v6] is forced to be a face.
        let g = generate("figure1").unwrap();
        let r = special_vertex_analysis(&g)
            .into_iter()
            .find(|r| r.vertex == fig::V)
            .unwrap();
        assert!(!r.outer_triangle_open.holds);
        assert_eq!(r.five_face_triangles.len(), 2);
        assert_eq!(r.other_specials, vec![fig::V1, fig::V5]);
        assert!(r
            .hypothesis_failures
            .iter()
            .any(|h| matches!(h, HypothesisFailure::MinDegree { degree: 2, .. })));
    }

    #[test]
    fn dodecahedron_has_none() {
        assert!(special_vertex_analysis(&generate("dodecahedron").unwrap()).is_empty());
    }
}
