use serde::{Deserialize, Serialize};

use super::rational::{self, int, q, Rational};
use super::{ChargeLedger, Element, Rule, RuleSet};
use crate::graph::{HypothesisFailure, PlaneGraph, Profile, ReducibleConfiguration, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NegativeElement {
    pub element: Element,
    #[serde(rename = "final", with = "rational::as_str")]
    pub final_charge: Rational,
    /// Reducible configurations on or next to the element.
    pub reducible: Vec<ReducibleConfiguration>,
    /// Unmet hypotheses of the profile matching the rule set.
    pub hypothesis_failures: Vec<HypothesisFailure>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditReport {
    #[serde(with = "rational::as_str")]
    pub initial_sum: Rational,
    #[serde(with = "rational::as_str")]
    pub final_sum: Rational,
    /// Σμ = −8.
    pub euler_ok: bool,
    /// Σμ* = Σμ.
    pub conserved: bool,
    /// Every μ* equals μ − outflow + inflow, recomputed from the transfers.
    pub balances_ok: bool,
    /// Every initial charge equals d(x) − 4.
    pub initial_ok: bool,
    /// Indices of transfers whose amount is not a constant of their rule
    /// (or, for R6, not the source face's charge after phase 1).
    pub bad_amounts: Vec<usize>,
    pub negatives: Vec<NegativeElement>,
}

impl AuditReport {
    pub fn clean(&self) -> bool {
        self.euler_ok && self.conserved && self.balances_ok && self.initial_ok && self.bad_amounts.is_empty()
    }
}

fn nearby(g: &PlaneGraph, e: Element) -> Vec<VertexId> {
    let mut vs: Vec<VertexId> = match e {
        Element::Vertex(v) => std::iter::once(v).chain(g.neighbors(v).iter().copied()).collect(),
        Element::Face(f) => g.face(f).vertices.clone(),
    };
    vs.sort_unstable();
    vs.dedup();
    vs
}

pub fn audit(g: &PlaneGraph, ledger: &ChargeLedger) -> AuditReport {
    let n = ledger.elements.len();
    let mut balance: Vec<Rational> = ledger.elements.iter().map(|c| c.initial).collect();
    let mut phase_one = balance.clone();
    for t in &ledger.transfers {
        let (s, d) = (ledger.slot(t.source), ledger.slot(t.target));
        balance[s] -= t.amount;
        balance[d] += t.amount;
        if t.phase == 1 {
            phase_one[s] -= t.amount;
            phase_one[d] += t.amount;
        }
    }
    let balances_ok = (0..n).all(|i| balance[i] == ledger.elements[i].final_charge);
    let initial_ok = ledger
        .elements
        .iter()
        .all(|c| c.initial == int(c.degree as i64 - 4));
    let bad_amounts = ledger
        .transfers
        .iter()
        .enumerate()
        .filter(|(_, t)| {
            let ok = match t.rule {
                Rule::R6 => t.amount == phase_one[ledger.slot(t.source)],
                rule => rule.constants().iter().any(|&(a, b)| t.amount == q(a, b)),
            };
            !ok
        })
        .map(|(i, _)| i)
        .collect();

    let profile = match ledger.rules {
        Some(RuleSet::Rs46) => Profile::No46,
        _ => Profile::No48,
    };
    let hypotheses = g.check_profile(profile).failures();
    let reducible = g.find_reducible();
    let negatives = ledger
        .elements
        .iter()
        .filter(|c| c.final_charge < int(0))
        .map(|c| {
            let near = nearby(g, c.element);
            NegativeElement {
                element: c.element,
                final_charge: c.final_charge,
                reducible: reducible
                    .iter()
                    .filter(|r| r.vertices().iter().any(|v| near.binary_search(v).is_ok()))
                    .cloned()
                    .collect(),
                hypothesis_failures: hypotheses.clone(),
            }
        })
        .collect();
    let initial_sum = ledger.initial_sum();
    let final_sum = ledger.final_sum();
    AuditReport {
        initial_sum,
        final_sum,
        euler_ok: initial_sum == int(-8),
        conserved: initial_sum == final_sum,
        balances_ok,
        initial_ok,
        bad_amounts,
        negatives,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::generate;
    use crate::discharge::run_rules;

    #[test]
    fn dodecahedron_negatives_are_explained() {
        let g = generate("dodecahedron").unwrap();
        let a = audit(&g, &run_rules(&g, RuleSet::Rs48).unwrap());
        assert!(a.clean());
        assert_eq!(a.negatives.len(), 20);
        for neg in &a.negatives {
            let Element::Vertex(v) = neg.element else { panic!("face went negative") };
            assert!(neg
                .reducible
                .iter()
                .any(|r| matches!(r, ReducibleConfiguration::MissingHeavyNeighbors { vertex, .. } if *vertex == v)));
            assert!(neg
                .hypothesis_failures
                .iter()
                .any(|h| matches!(h, HypothesisFailure::ForbiddenCycle { length: 8, .. })));
        }
    }

    #[test]
    fn tampering_is_detected() {
        let g = generate("figure1").unwrap();
        let mut l = run_rules(&g, RuleSet::Rs48).unwrap();
        assert!(audit(&g, &l).clean());
        l.transfers[0].amount = q(1, 5);
        let a = audit(&g, &l);
        assert_eq!(a.bad_amounts, vec![0]);
        assert!(!a.balances_ok);
    }

    #[test]
    fn figure1_negatives_cite_min_degree() {
        let g = generate("figure1").unwrap();
        let a = audit(&g, &run_rules(&g, RuleSet::Rs48).unwrap());
        assert!(!a.negatives.is_empty());
        for neg in &a.negatives {
            assert!(neg
                .hypothesis_failures
                .iter()
                .any(|h| matches!(h, HypothesisFailure::MinDegree { degree: 2, .. })));
        }
    }
}
