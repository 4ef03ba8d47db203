//! Charge accounting: initial charges d(x) − 4, the two rule sets, and an
//! independent audit of the resulting ledger.

mod audit;
pub mod lemmas;
pub mod rational;
mod special;

pub use audit::{audit, AuditReport, NegativeElement};
pub use lemmas::{check_structural_lemmas, LemmaItem, LemmaItemId, LemmaReport, Verdict, Witness};
pub use rational::Rational;
pub use special::{special_vertex_analysis, Clause, SpecialVertexRecord};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::graph::{FaceId, PlaneGraph, ThreeKind, VertexClasses, VertexId};
use rational::{int, q};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DischargeError {
    #[error("discharging needs a connected graph, got {components} components")]
    Disconnected { components: usize },
    #[error("face {face} has degree {degree}, not 5")]
    NotFiveFace { face: FaceId, degree: usize },
    #[error("face {face} does not exist")]
    NoSuchFace { face: FaceId },
}

/// A vertex or a face; written `v3` / `f7` in reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    Vertex(VertexId),
    Face(FaceId),
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Vertex(v) => write!(f, "v{v}"),
            Element::Face(x) => write!(f, "f{x}"),
        }
    }
}

impl FromStr for Element {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || format!("bad element `{s}` (expected v<id> or f<id>)");
        let (kind, id) = s.split_at_checked(1).ok_or_else(bad)?;
        let id: usize = id.parse().map_err(|_| bad())?;
        match kind {
            "v" => Ok(Element::Vertex(id)),
            "f" => Ok(Element::Face(id)),
            _ => Err(bad()),
        }
    }
}

impl Serialize for Element {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Element {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RuleSet {
    /// R1–R6, for graphs without 4- and 8-cycles.
    Rs48,
    /// R.1–R.4, for graphs without 4- and 6-cycles.
    Rs46,
}

impl fmt::Display for RuleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RuleSet::Rs48 => "rs48",
            RuleSet::Rs46 => "rs46",
        })
    }
}

impl FromStr for RuleSet {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "rs48" => Ok(RuleSet::Rs48),
            "rs46" => Ok(RuleSet::Rs46),
            other => Err(format!("unknown rule set `{other}` (expected rs48 or rs46)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Rule {
    R1,
    R2,
    R3,
    R4,
    R5,
    R6,
    #[serde(rename = "R.1")]
    Rd1,
    #[serde(rename = "R.2")]
    Rd2,
    #[serde(rename = "R.3")]
    Rd3,
    #[serde(rename = "R.4")]
    Rd4,
}

impl Rule {
    /// Amounts a single transfer of this rule may carry. R6 carries a
    /// computed β and has no fixed constant.
    pub fn constants(self) -> &'static [(i64, i64)] {
        match self {
            Rule::R1 | Rule::Rd1 => &[(1, 4)],
            Rule::R2 | Rule::Rd2 => &[(1, 3)],
            Rule::R3 => &[(1, 6), (1, 12)],
            Rule::R4 | Rule::Rd4 => &[(1, 2), (1, 4)],
            Rule::R5 => &[(5, 6), (5, 12)],
            Rule::Rd3 => &[(1, 3), (1, 6)],
            Rule::R6 => &[],
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Rule::R1 => "R1",
            Rule::R2 => "R2",
            Rule::R3 => "R3",
            Rule::R4 => "R4",
            Rule::R5 => "R5",
            Rule::R6 => "R6",
            Rule::Rd1 => "R.1",
            Rule::Rd2 => "R.2",
            Rule::Rd3 => "R.3",
            Rule::Rd4 => "R.4",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Transfer {
    pub source: Element,
    pub target: Element,
    #[serde(with = "rational::as_str")]
    pub amount: Rational,
    pub rule: Rule,
    pub phase: u8,
}

/// Situations where a rule was applied with a caveat or not at all.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum RuleIssue {
    /// A 3-face shares more than one edge with a 5⁺-face; R2 transferred
    /// once for the pair.
    MultiEdgeAdjacency {
        triangle: FaceId,
        face: FaceId,
        shared_edges: usize,
    },
    /// Several special vertices claim the same 5-face; R6 skipped for it.
    ContestedFiveFace {
        face: FaceId,
        claimants: Vec<VertexId>,
    },
    /// R6 sent β(f) although β(f) < 1/3.
    SmallBeta {
        face: FaceId,
        vertex: VertexId,
        #[serde(with = "rational::as_str")]
        beta: Rational,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementCharge {
    pub element: Element,
    pub degree: usize,
    #[serde(with = "rational::as_str")]
    pub initial: Rational,
    #[serde(rename = "final", with = "rational::as_str")]
    pub final_charge: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChargeLedger {
    pub rules: Option<RuleSet>,
    pub vertex_count: usize,
    /// Vertices first, then faces.
    pub elements: Vec<ElementCharge>,
    pub transfers: Vec<Transfer>,
    pub issues: Vec<RuleIssue>,
}

impl ChargeLedger {
    fn slot(&self, e: Element) -> usize {
        match e {
            Element::Vertex(v) => v,
            Element::Face(f) => self.vertex_count + f,
        }
    }

    pub fn charge(&self, e: Element) -> &ElementCharge {
        &self.elements[self.slot(e)]
    }

    pub fn initial(&self, e: Element) -> Rational {
        self.charge(e).initial
    }

    pub fn final_charge(&self, e: Element) -> Rational {
        self.charge(e).final_charge
    }

    pub fn initial_sum(&self) -> Rational {
        self.elements.iter().map(|c| c.initial).sum()
    }

    pub fn final_sum(&self) -> Rational {
        self.elements.iter().map(|c| c.final_charge).sum()
    }

    pub fn outflow(&self, e: Element) -> Rational {
        self.transfers.iter().filter(|t| t.source == e).map(|t| t.amount).sum()
    }

    pub fn inflow(&self, e: Element) -> Rational {
        self.transfers.iter().filter(|t| t.target == e).map(|t| t.amount).sum()
    }

    pub fn transfers_touching(&self, e: Element) -> impl Iterator<Item = &Transfer> {
        self.transfers
            .iter()
            .filter(move |t| t.source == e || t.target == e)
    }

    fn push(&mut self, source: Element, target: Element, amount: Rational, rule: Rule, phase: u8) {
        let (s, t) = (self.slot(source), self.slot(target));
        self.elements[s].final_charge -= amount;
        self.elements[t].final_charge += amount;
        self.transfers.push(Transfer {
            source,
            target,
            amount,
            rule,
            phase,
        });
    }
}

/// μ(x) = d(x) − 4 for every vertex and face; no transfers.
pub fn initial_charges(g: &PlaneGraph) -> Result<ChargeLedger, DischargeError> {
    if !g.is_connected() {
        return Err(DischargeError::Disconnected {
            components: g.component_count(),
        });
    }
    let vertices = (0..g.vertex_count()).map(|v| (Element::Vertex(v), g.degree(v)));
    let faces = g.faces().iter().map(|f| (Element::Face(f.id), f.degree()));
    let elements = vertices
        .chain(faces)
        .map(|(element, degree)| {
            let mu = int(degree as i64 - 4);
            ElementCharge {
                element,
                degree,
                initial: mu,
                final_charge: mu,
            }
        })
        .collect();
    Ok(ChargeLedger {
        rules: None,
        vertex_count: g.vertex_count(),
        elements,
        transfers: Vec::new(),
        issues: Vec::new(),
    })
}

/// Amounts a face of degree `d` gives to incident good and bad 3-vertices.
fn face_to_vertex(rules: RuleSet, d: usize) -> Option<(Rule, Rational, Rational)> {
    match (rules, d) {
        (RuleSet::Rs48, 5) => Some((Rule::R3, q(1, 6), q(1, 12))),
        (RuleSet::Rs48, 6 | 7) => Some((Rule::R4, q(1, 2), q(1, 4))),
        (RuleSet::Rs48, d) if d >= 8 => Some((Rule::R5, q(5, 6), q(5, 12))),
        (RuleSet::Rs46, 5) => Some((Rule::Rd3, q(1, 3), q(1, 6))),
        (RuleSet::Rs46, d) if d >= 6 => Some((Rule::Rd4, q(1, 2), q(1, 4))),
        _ => None,
    }
}

fn apply_local_rules(g: &PlaneGraph, classes: &VertexClasses, rules: RuleSet, ledger: &mut ChargeLedger) {
    let (r1, r2) = match rules {
        RuleSet::Rs48 => (Rule::R1, Rule::R2),
        RuleSet::Rs46 => (Rule::Rd1, Rule::Rd2),
    };
    for v in 0..g.vertex_count() {
        if g.degree(v) < 5 {
            continue;
        }
        for &u in g.neighbors(v) {
            if classes.is_bad(u) {
                ledger.push(Element::Vertex(v), Element::Vertex(u), q(1, 4), r1, 1);
            }
        }
    }
    for f in g.faces() {
        if f.degree() < 5 {
            continue;
        }
        for t in g.adjacent_faces(f.id) {
            if g.face(t).degree() != 3 {
                continue;
            }
            let shared = g.shared_edge_count(f.id, t);
            if shared > 1 {
                ledger.issues.push(RuleIssue::MultiEdgeAdjacency {
                    triangle: t,
                    face: f.id,
                    shared_edges: shared,
                });
            }
            ledger.push(Element::Face(f.id), Element::Face(t), q(1, 3), r2, 1);
        }
    }
    for f in g.faces() {
        let Some((rule, good, bad)) = face_to_vertex(rules, f.degree()) else {
            continue;
        };
        for &v in &f.vertices {
            let amount = match classes.info(v).kind {
                Some(ThreeKind::Good) => good,
                Some(ThreeKind::Bad) => bad,
                None => continue,
            };
            ledger.push(Element::Face(f.id), Element::Vertex(v), amount, rule, 1);
        }
    }
}

/// The 5-face at a special vertex's corners.
pub(crate) fn five_face_of(g: &PlaneGraph, v: VertexId) -> Option<FaceId> {
    g.corner_faces(v).into_iter().find(|&f| g.face(f).degree() == 5)
}

/// Applies a rule set. For RS48, R1–R5 run first and each 5-face's charge
/// after that phase is its β, which R6 then forwards to its special vertex.
pub fn run_rules(g: &PlaneGraph, rules: RuleSet) -> Result<ChargeLedger, DischargeError> {
    let mut ledger = initial_charges(g)?;
    ledger.rules = Some(rules);
    let classes = g.classify_vertices();
    apply_local_rules(g, &classes, rules, &mut ledger);
    if rules == RuleSet::Rs48 {
        let mut claims: Vec<(FaceId, Vec<VertexId>)> = Vec::new();
        for v in classes.special_vertices() {
            let f = five_face_of(g, v).expect("special vertex has a 5-face");
            match claims.iter_mut().find(|(x, _)| *x == f) {
                Some((_, vs)) => vs.push(v),
                None => claims.push((f, vec![v])),
            }
        }
        claims.sort();
        let betas: Vec<(FaceId, Rational)> = claims
            .iter()
            .map(|(f, _)| (*f, ledger.final_charge(Element::Face(*f))))
            .collect();
        for ((f, claimants), (_, beta)) in claims.into_iter().zip(betas) {
            if let [v] = claimants[..] {
                if beta < q(1, 3) {
                    ledger.issues.push(RuleIssue::SmallBeta { face: f, vertex: v, beta });
                }
                ledger.push(Element::Face(f), Element::Vertex(v), beta, Rule::R6, 2);
            } else {
                ledger.issues.push(RuleIssue::ContestedFiveFace { face: f, claimants });
            }
        }
    }
    Ok(ledger)
}

/// Charge of the 5-face `f` after R1–R5.
pub fn beta(g: &PlaneGraph, f: FaceId) -> Result<Rational, DischargeError> {
    if f >= g.face_count() {
        return Err(DischargeError::NoSuchFace { face: f });
    }
    let degree = g.face(f).degree();
    if degree != 5 {
        return Err(DischargeError::NotFiveFace { face: f, degree });
    }
    let mut ledger = initial_charges(g)?;
    let classes = g.classify_vertices();
    apply_local_rules(g, &classes, RuleSet::Rs48, &mut ledger);
    Ok(ledger.final_charge(Element::Face(f)))
}
