//! Registry of checkable statements: each pairs a premise filter with a
//! conclusion predicate. A conclusion returns `None` when it holds and the
//! name of the failed sub-check otherwise.

use serde::{Deserialize, Serialize};

use crate::blowup::ReplacementKind;
use crate::error::{Error, Result};
use crate::graph::{MultiGraph, Vertex};
use crate::harness::corpus::parse_family_name;
use crate::harness::subject::{has_four_cycle, Subject};
use crate::invariants::{berge_tutte_deficiency, bipartition, degree_params, is_independent_set, Extended};
use crate::iso::are_isomorphic;
use crate::named::{complete_bipartite, p14, p16, petersen, NamedGraph};
use crate::oracle::{first_triangle, is_collapsible, is_reduced, is_supereulerian};
use crate::reduction::{list_induced_four_cycles, pi_reduce, reduce};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StatementKind {
    Theorem,
    Conjecture,
}

type Premise = fn(&Subject) -> Result<bool>;
type Conclusion = fn(&Subject) -> Result<Option<String>>;

pub struct Statement {
    pub id: &'static str,
    pub kind: StatementKind,
    /// The checked implication, in plain terms.
    pub claim: &'static str,
    premise: Premise,
    conclusion: Conclusion,
}

impl Statement {
    pub fn premise(&self, s: &Subject) -> Result<bool> {
        (self.premise)(s)
    }

    pub fn conclusion(&self, s: &Subject) -> Result<Option<String>> {
        (self.conclusion)(s)
    }
}

fn fail(msg: impl Into<String>) -> Result<Option<String>> {
    Ok(Some(msg.into()))
}

fn held() -> Result<Option<String>> {
    Ok(None)
}

fn connected_reduced(s: &Subject) -> Result<bool> {
    Ok(s.connected() && s.is_reduced()?)
}

fn is_k1_or_k2(g: &MultiGraph) -> bool {
    g.order() == 1 || (g.order() == 2 && g.size() == 1)
}

fn contract_class(g: &MultiGraph, class: &[Vertex]) -> Result<MultiGraph> {
    Ok(g.contract_induced(class)?.0)
}

fn a_a_conclusion(s: &Subject) -> Result<Option<String>> {
    let g = s.graph;
    let red = s.reduction()?;
    let cg = is_collapsible(g, s.limits)?.answer;
    if cg != (red.graph.order() == 1) {
        return fail("collapsible(G) differs from [reduction is K1]");
    }
    for class in red.nontrivial_preimages() {
        let h = g.induced_subgraph(&class)?;
        if !is_collapsible(&h, s.limits)?.answer {
            return fail(format!("preimage {class:?} is not collapsible"));
        }
        if is_collapsible(&contract_class(g, &class)?, s.limits)?.answer != cg {
            return fail(format!("collapsible(G/H) differs from collapsible(G) for H = {class:?}"));
        }
    }
    held()
}

fn a_b_conclusion(s: &Subject) -> Result<Option<String>> {
    let g = s.graph;
    let red = s.reduction()?;
    let sg = is_supereulerian(g, s.limits)?.answer;
    if is_supereulerian(&red.graph, s.limits)?.answer != sg {
        return fail("supereulerian(G) differs from supereulerian(reduction)");
    }
    for class in red.nontrivial_preimages() {
        if is_supereulerian(&contract_class(g, &class)?, s.limits)?.answer != sg {
            return fail(format!("supereulerian(G/H) differs from supereulerian(G) for H = {class:?}"));
        }
    }
    held()
}

fn is_k2t(s: &Subject) -> Result<bool> {
    let n = s.n();
    Ok(n >= 3 && are_isomorphic(s.graph, &complete_bipartite(2, n - 2), s.limits)?.is_some())
}

/// Checks every induced 4-cycle: the order and size bookkeeping of the
/// π-step, then `prop(G/π) -> prop(G)`.
fn pi_soundness(s: &Subject, prop: fn(&MultiGraph, &Subject) -> Result<bool>, label: &str) -> Result<Option<String>> {
    let g = s.graph;
    let mut whole: Option<bool> = None;
    for cycle in list_induced_four_cycles(g) {
        let step = pi_reduce(g, cycle)?;
        if step.graph.order() + 2 != g.order() || step.graph.size() + 3 != g.size() {
            return fail(format!("order/size bookkeeping on cycle {cycle:?}"));
        }
        if prop(&step.graph, s)? {
            let holds = match whole {
                Some(v) => v,
                None => *whole.insert(prop(g, s)?),
            };
            if !holds {
                return fail(format!("{label}(G/pi) but not {label}(G) on cycle {cycle:?}"));
            }
        }
    }
    held()
}

fn lemma_2_1_conclusion(s: &Subject) -> Result<Option<String>> {
    let g = s.graph;
    for cycle in list_induced_four_cycles(g) {
        let step = pi_reduce(g, cycle)?;
        let red = reduce(&step.graph, s.limits)?;
        let classes = red.nontrivial_preimages();
        if classes.len() > 2 {
            return fail(format!("{} nontrivial collapsible subgraphs after pi on {cycle:?}", classes.len()));
        }
        for class in classes {
            let hits = [step.x, step.y].iter().filter(|v| class.contains(v)).count();
            if hits != 1 {
                return fail(format!("class {class:?} meets {{x, y}} in {hits} vertices on {cycle:?}"));
            }
            let h0 = step.graph.induced_subgraph(&class)?;
            let excess = 2 * h0.order() as i64 - h0.size() as i64;
            let phi = NamedGraph::Phi(h0.order() - 1).build()?;
            let is_phi = are_isomorphic(&h0, &phi, s.limits)?.is_some();
            if !((is_phi && excess == 2) || excess >= 3) {
                return fail(format!("class {class:?} has 2|V|-|E| = {excess} on {cycle:?}"));
            }
        }
    }
    held()
}

/// Vertex sets `X` (as bitmasks) with `|X| <= |Y|`, `|X| <= max_x`, where
/// every vertex of `Y = V - X` has at least three neighbors in `X`.
fn bipartite_splits(s: &Subject, max_x: usize) -> Result<Vec<u64>> {
    let g = s.graph;
    let n = g.order();
    if n > s.limits.max_subset_n.min(63) {
        return Err(Error::limit("split enumeration order", n as u64, s.limits.max_subset_n as u64));
    }
    let mut out = Vec::new();
    for x in 0u64..(1 << n) {
        let size = x.count_ones() as usize;
        if size == 0 || size > max_x || 2 * size > n {
            continue;
        }
        let ok = (0..n as Vertex).filter(|&v| x >> v & 1 == 0).all(|v| {
            g.neighbors(v)
                .iter()
                .filter(|&&(w, _)| x >> w & 1 == 1)
                .map(|&(_, m)| m as usize)
                .sum::<usize>()
                >= 3
        });
        if ok {
            out.push(x);
        }
    }
    Ok(out)
}

/// The spanning bipartite subgraph of all edges between `X` and its
/// complement.
fn cross_subgraph(g: &MultiGraph, x: u64) -> Result<MultiGraph> {
    let edges: Vec<(Vertex, Vertex)> = g
        .edges()
        .iter()
        .copied()
        .filter(|&(u, v)| (x >> u & 1) != (x >> v & 1))
        .collect();
    MultiGraph::from_edges(g.order(), &edges)
}

fn lemma_3_2_max_x(n: usize) -> usize {
    (n + 5) / 3
}

fn lemma_3_2_premise(s: &Subject) -> Result<bool> {
    Ok(connected_reduced(s)? && !bipartite_splits(s, lemma_3_2_max_x(s.n()))?.is_empty())
}

fn lemma_3_2_conclusion(s: &Subject) -> Result<Option<String>> {
    for x in bipartite_splits(s, lemma_3_2_max_x(s.n()))? {
        let h = cross_subgraph(s.graph, x)?;
        if h.size() != s.graph.size() {
            return fail(format!("G != H for X = {:?}", bits(x)));
        }
    }
    if s.deficiency_of_reduced()? != 3 {
        return fail("F(G) != 3");
    }
    held()
}

fn bits(x: u64) -> Vec<Vertex> {
    (0..64).filter(|&v| x >> v & 1 == 1).collect()
}

/// Orientations `(X, Y)` of a connected reduced bipartite graph meeting the
/// size and degree conditions; empty when the graph does not qualify.
fn bipartite_orientations(s: &Subject) -> Result<Vec<(Vec<Vertex>, Vec<Vertex>)>> {
    let g = s.graph;
    if !g.is_connected() || g.order() < 2 {
        return Ok(vec![]);
    }
    let Some((a, b)) = bipartition(g) else {
        return Ok(vec![]);
    };
    if !s.is_reduced()? {
        return Ok(vec![]);
    }
    Ok([(a.clone(), b.clone()), (b, a)]
        .into_iter()
        .filter(|(x, y)| x.len() <= 7 && y.len() >= x.len() && y.iter().all(|&v| g.degree(v) >= 3))
        .collect())
}

fn on_four_cycle(g: &MultiGraph, x: Vertex) -> bool {
    g.vertices().any(|w| {
        w != x
            && g
                .neighbors(x)
                .iter()
                .filter(|&&(c, _)| c != w && g.adjacent(c, w))
                .count()
                >= 2
    })
}

fn thm_3_3_a_conclusion(s: &Subject) -> Result<Option<String>> {
    let g = s.graph;
    for (x, y) in bipartite_orientations(s)? {
        let rich = x.iter().any(|&v| g.degree(v) >= 4 && on_four_cycle(g, v));
        if !rich && !(y.len() == x.len() && s.supereulerian()?) {
            return fail(format!("no 4-cycle through a degree>=4 vertex of X = {x:?}, and not (|Y| = |X| and SL)"));
        }
    }
    held()
}

fn thm_3_3_b_premise(s: &Subject) -> Result<bool> {
    Ok(bipartite_orientations(s)?
        .iter()
        .any(|(x, y)| x.len() == y.len() && x.len() <= 6))
}

fn thm_3_3_c_splits(s: &Subject) -> Result<Vec<u64>> {
    let mut out = Vec::new();
    for x in bipartite_splits(s, 7)? {
        let h = cross_subgraph(s.graph, x)?;
        if h.is_connected() && is_reduced(&h, s.limits)?.answer {
            out.push(x);
        }
    }
    Ok(out)
}

fn thm_h_conclusion(s: &Subject) -> Result<Option<String>> {
    let g = s.graph;
    let matching = crate::invariants::maximum_matching(g);
    let mut used = vec![false; g.order()];
    for &(u, v) in &matching {
        if !g.adjacent(u, v) {
            return fail(format!("matching edge ({u}, {v}) is not an edge"));
        }
        if std::mem::replace(&mut used[u as usize], true) || std::mem::replace(&mut used[v as usize], true) {
            return fail("matching edges share a vertex");
        }
    }
    let (t, sep, q) = berge_tutte_deficiency(g, s.limits)?;
    if q as i64 - sep.len() as i64 != t as i64 {
        return fail("separator does not attain the deficiency");
    }
    if 2 * matching.len() + t != g.order() {
        return fail(format!(
            "2*{} + {t} != n = {}",
            matching.len(),
            g.order()
        ));
    }
    held()
}

fn extremal_conclusion(s: &Subject) -> Result<Option<String>> {
    let g = s.graph;
    let (base_name, rep) = parse_family_name(g.name().unwrap_or("")).expect("premise parsed the name");
    let base = match base_name.as_str() {
        "petersen" => petersen(),
        "p14" => p14(),
        _ => p16(),
    };
    if are_isomorphic(&s.reduction()?.graph, &base, s.limits)?.is_none() {
        return fail(format!("reduction is not isomorphic to {base_name}"));
    }
    if s.supereulerian()? {
        return fail("graph is supereulerian");
    }
    if !s.edge_connected_at_least(3) {
        return fail("edge connectivity below 3");
    }
    let sigma = degree_params(g, &[])?.sigma2_bar;
    let n = g.order() as u64;
    let p = base.order() as u64;
    if rep.kind == ReplacementKind::Complete {
        let lower = 2 * n / p - 2;
        if rep.size >= 5 && sigma != Extended::Finite(lower) {
            return fail(format!("sigma2_bar = {sigma}, expected 2n/{p} - 2 = {lower}"));
        }
        if sigma < Extended::Finite(lower) {
            return fail(format!("sigma2_bar = {sigma} below 2(n/{p} - 1) = {lower}"));
        }
    }
    held()
}

fn extremal_premise(s: &Subject) -> Result<bool> {
    Ok(s.graph
        .name()
        .and_then(parse_family_name)
        .is_some_and(|(base, _)| matches!(base.as_str(), "petersen" | "p14" | "p16")))
}

static REGISTRY: &[Statement] = &[
    Statement {
        id: "A-a",
        kind: StatementKind::Theorem,
        claim: "for a connected graph with a nontrivial collapsible subgraph H: G is collapsible iff G/H is, iff its reduction is K1; each preimage is collapsible",
        premise: |s| Ok(s.connected() && !s.is_reduced()?),
        conclusion: a_a_conclusion,
    },
    Statement {
        id: "A-b",
        kind: StatementKind::Theorem,
        claim: "for a connected graph with a nontrivial collapsible subgraph H: G is supereulerian iff G/H is, iff its reduction is",
        premise: |s| Ok(s.connected() && !s.is_reduced()?),
        conclusion: a_b_conclusion,
    },
    Statement {
        id: "E-a",
        kind: StatementKind::Theorem,
        claim: "a connected reduced graph is simple, triangle-free, and has minimum degree at most 3",
        premise: connected_reduced,
        conclusion: |s| {
            if !s.graph.is_simple() {
                return fail("not simple");
            }
            if let Some(t) = first_triangle(s.graph) {
                return fail(format!("triangle {t:?}"));
            }
            if s.graph.min_degree() > 3 {
                return fail("minimum degree above 3");
            }
            held()
        },
    },
    Statement {
        id: "E-b",
        kind: StatementKind::Theorem,
        claim: "a connected reduced graph has F(G) = 2|V| - |E| - 2, with F computed by partition enumeration",
        premise: connected_reduced,
        conclusion: |s| {
            let big_f = s.deficiency()? as i64;
            let f = s.f()?;
            if big_f != f {
                return fail(format!("F = {big_f} but 2n - m - 2 = {f}"));
            }
            held()
        },
    },
    Statement {
        id: "E-c",
        kind: StatementKind::Theorem,
        claim: "a connected reduced graph with F(G) <= 2 is K1, K2 or K_{2,t} with t >= 1",
        premise: |s| Ok(connected_reduced(s)? && s.deficiency_of_reduced()? <= 2),
        conclusion: |s| {
            if is_k1_or_k2(s.graph) || is_k2t(s)? {
                held()
            } else {
                fail("not K1, K2 or K_{2,t}")
            }
        },
    },
    Statement {
        id: "E-d",
        kind: StatementKind::Theorem,
        claim: "a connected reduced graph with minimum degree >= 3 has matching number >= (n + 4)/3",
        premise: |s| Ok(connected_reduced(s)? && s.graph.min_degree() >= 3),
        conclusion: |s| {
            let a = s.matching_number();
            if 3 * a < s.n() + 4 {
                return fail(format!("matching number {a} below (n + 4)/3 with n = {}", s.n()));
            }
            held()
        },
    },
    Statement {
        id: "F-a",
        kind: StatementKind::Theorem,
        claim: "a connected simple graph with n <= 7, minimum degree >= 2 and at most two degree-2 vertices (|D2| <= 2) is not reduced and reduces to K1 or K2",
        premise: |s| {
            Ok(s.connected()
                && s.graph.is_simple()
                && s.n() <= 7
                && s.graph.min_degree() >= 2
                && s.count_degree(2) <= 2)
        },
        conclusion: |s| {
            if s.is_reduced()? {
                return fail("graph is reduced");
            }
            if !is_k1_or_k2(&s.reduction()?.graph) {
                return fail("reduction is not K1 or K2");
            }
            held()
        },
    },
    Statement {
        id: "F-b",
        kind: StatementKind::Theorem,
        claim: "a 3-edge-connected simple graph with n <= 14 is supereulerian or reduces to P or P14",
        premise: |s| {
            Ok(s.connected()
                && s.graph.is_simple()
                && s.graph.min_degree() >= 2
                && s.n() <= 14
                && s.edge_connected_at_least(3))
        },
        conclusion: |s| {
            if s.supereulerian()? || s.reduction_in(&["petersen", "p14"])? {
                held()
            } else {
                fail("not supereulerian and reduction not in {P, P14}")
            }
        },
    },
    Statement {
        id: "F-c",
        kind: StatementKind::Theorem,
        claim: "a 3-edge-connected simple non-supereulerian graph with n = 15 whose reduction is not P or P14 is reduced, has girth >= 5, degrees in {3, 4}, and exactly three degree-4 vertices forming an independent set",
        premise: |s| {
            Ok(s.connected()
                && s.graph.is_simple()
                && s.n() == 15
                && s.edge_connected_at_least(3)
                && !s.supereulerian()?
                && !s.reduction_in(&["petersen", "p14"])?)
        },
        conclusion: |s| {
            let g = s.graph;
            if !s.is_reduced()? {
                return fail("not reduced");
            }
            if s.girth() < Extended::Finite(5) {
                return fail("girth below 5");
            }
            if g.degrees().iter().any(|&d| d != 3 && d != 4) {
                return fail("a degree outside {3, 4}");
            }
            let d4 = crate::invariants::degree_class(g, 4);
            if d4.len() != 3 {
                return fail(format!("|D4| = {}", d4.len()));
            }
            if !is_independent_set(g, &d4)? {
                return fail("D4 is not independent");
            }
            held()
        },
    },
    Statement {
        id: "G-a",
        kind: StatementKind::Theorem,
        claim: "for a connected graph and any induced 4-cycle: G/pi has two fewer vertices and three fewer edges, and G/pi collapsible implies G collapsible",
        premise: |s| Ok(s.connected() && !list_induced_four_cycles(s.graph).is_empty()),
        conclusion: |s| pi_soundness(s, |h, s| Ok(is_collapsible(h, s.limits)?.answer), "collapsible"),
    },
    Statement {
        id: "G-b",
        kind: StatementKind::Theorem,
        claim: "for a connected graph and any induced 4-cycle: G/pi has two fewer vertices and three fewer edges, and G/pi supereulerian implies G supereulerian",
        premise: |s| Ok(s.connected() && !list_induced_four_cycles(s.graph).is_empty()),
        conclusion: |s| pi_soundness(s, |h, s| Ok(is_supereulerian(h, s.limits)?.answer), "supereulerian"),
    },
    Statement {
        id: "lemma-2.1",
        kind: StatementKind::Theorem,
        claim: "for a connected reduced graph with minimum degree >= 3 and a 4-cycle: G/pi has at most two nontrivial maximal collapsible subgraphs, each containing exactly one of x, y and either a doubled star with 2|V|-|E| = 2 or with 2|V|-|E| >= 3",
        premise: |s| {
            Ok(connected_reduced(s)?
                && s.graph.min_degree() >= 3
                && !list_induced_four_cycles(s.graph).is_empty())
        },
        conclusion: lemma_2_1_conclusion,
    },
    Statement {
        id: "thm-3.1",
        kind: StatementKind::Theorem,
        claim: "a connected reduced non-supereulerian graph with F(G) = 3 and minimum degree >= 3 has no 4-cycle",
        premise: |s| {
            Ok(connected_reduced(s)?
                && s.graph.min_degree() >= 3
                && s.deficiency_of_reduced()? == 3
                && !s.supereulerian()?)
        },
        conclusion: |s| {
            if has_four_cycle(s.graph) {
                fail("graph has a 4-cycle")
            } else {
                held()
            }
        },
    },
    Statement {
        id: "lemma-3.2",
        kind: StatementKind::Theorem,
        claim: "a connected reduced graph with a split V = X + Y, |Y| >= |X|, |X| <= (n + 5)/3 and every Y vertex with >= 3 neighbors in X has no edge inside X or Y and F(G) = 3; H is taken as all X-Y edges",
        premise: lemma_3_2_premise,
        conclusion: lemma_3_2_conclusion,
    },
    Statement {
        id: "thm-3.3-a",
        kind: StatementKind::Theorem,
        claim: "a connected reduced bipartite graph with |X| <= 7, |Y| >= |X| and every Y vertex of degree >= 3 has a 4-cycle through a degree >= 4 vertex of X, or has |Y| = |X| and is supereulerian",
        premise: |s| Ok(!bipartite_orientations(s)?.is_empty()),
        conclusion: thm_3_3_a_conclusion,
    },
    Statement {
        id: "thm-3.3-b",
        kind: StatementKind::Theorem,
        claim: "a connected reduced bipartite graph with |Y| = |X| <= 6 and every Y vertex of degree >= 3 has a 4-cycle",
        premise: thm_3_3_b_premise,
        conclusion: |s| {
            if has_four_cycle(s.graph) {
                held()
            } else {
                fail("no 4-cycle")
            }
        },
    },
    Statement {
        id: "thm-3.3-c",
        kind: StatementKind::Theorem,
        claim: "a 3-edge-connected reduced graph with a spanning connected reduced bipartite subgraph (|X| <= 7, |Y| >= |X|, Y degrees >= 3; H = all X-Y edges) is supereulerian",
        premise: |s| {
            Ok(connected_reduced(s)?
                && s.edge_connected_at_least(3)
                && !thm_3_3_c_splits(s)?.is_empty())
        },
        conclusion: |s| {
            if s.supereulerian()? {
                held()
            } else {
                fail("not supereulerian")
            }
        },
    },
    Statement {
        id: "thm-H",
        kind: StatementKind::Theorem,
        claim: "matching number = (n - t)/2 where t = max over S of (odd components of G - S) - |S|",
        premise: |s| Ok(s.n() <= s.limits.max_matching_n),
        conclusion: thm_h_conclusion,
    },
    Statement {
        id: "thm-3.4",
        kind: StatementKind::Theorem,
        claim: "a 3-edge-connected reduced non-supereulerian graph with n <= 17 has matching number >= (n - 1)/2",
        premise: |s| {
            Ok(s.n() <= 17
                && s.n() >= 2
                && s.edge_connected_at_least(3)
                && s.is_reduced()?
                && !s.supereulerian()?)
        },
        conclusion: |s| {
            let a = s.matching_number();
            if 2 * a + 1 < s.n() {
                return fail(format!("matching number {a} below (n - 1)/2"));
            }
            held()
        },
    },
    Statement {
        id: "thm-4.1-extremal",
        kind: StatementKind::Theorem,
        claim: "uniform blow-ups of P, P14, P16 by K_s or K_s - e reduce to the base, are not supereulerian and are 3-edge-connected; with K_s, sigma2_bar >= 2(n/p - 1) for base order p, with equality once s >= 5",
        premise: extremal_premise,
        conclusion: extremal_conclusion,
    },
    Statement {
        id: "conj-A",
        kind: StatementKind::Conjecture,
        claim: "a 3-edge-connected nontrivial reduced graph with F(G) = 3 is the Petersen graph",
        premise: |s| {
            Ok(s.n() >= 2
                && s.edge_connected_at_least(3)
                && s.is_reduced()?
                && s.deficiency_of_reduced()? == 3)
        },
        conclusion: |s| {
            if s.isomorphic_to(&petersen())? {
                held()
            } else {
                fail("not isomorphic to the Petersen graph")
            }
        },
    },
    Statement {
        id: "conj-B",
        kind: StatementKind::Conjecture,
        claim: "a 3-edge-connected simple graph with n <= 17 is supereulerian or reduces to P, P14 or P16",
        premise: |s| Ok(s.graph.is_simple() && s.n() <= 17 && s.edge_connected_at_least(3)),
        conclusion: |s| {
            if s.supereulerian()? || s.reduction_in(&["petersen", "p14", "p16"])? {
                held()
            } else {
                fail("not supereulerian and reduction not in {P, P14, P16}")
            }
        },
    },
];

pub fn registry() -> &'static [Statement] {
    REGISTRY
}

pub fn registry_ids() -> Vec<&'static str> {
    REGISTRY.iter().map(|s| s.id).collect()
}

pub fn lookup(id: &str) -> Result<&'static Statement> {
    REGISTRY
        .iter()
        .find(|s| s.id == id)
        .ok_or_else(|| Error::UnknownStatement {
            id: id.to_string(),
            registry: registry_ids().join(", "),
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::limits::Limits;
    use crate::named::cycle;

    #[test]
    fn registry_is_complete() {
        assert_eq!(
            registry_ids(),
            vec![
                "A-a", "A-b", "E-a", "E-b", "E-c", "E-d", "F-a", "F-b", "F-c", "G-a", "G-b",
                "lemma-2.1", "thm-3.1", "lemma-3.2", "thm-3.3-a", "thm-3.3-b", "thm-3.3-c", "thm-H",
                "thm-3.4", "thm-4.1-extremal", "conj-A", "conj-B"
            ]
        );
        assert!(matches!(lookup("nope"), Err(Error::UnknownStatement { .. })));
    }

    #[test]
    fn petersen_meets_thm_3_1() {
        let l = Limits::default();
        let p = petersen();
        let s = Subject::new(&p, &l);
        let st = lookup("thm-3.1").unwrap();
        assert!(st.premise(&s).unwrap());
        assert_eq!(st.conclusion(&s).unwrap(), None);
    }

    #[test]
    fn c4_is_k2t() {
        let l = Limits::default();
        let c4 = cycle(4).unwrap();
        let s = Subject::new(&c4, &l);
        let st = lookup("E-c").unwrap();
        assert!(st.premise(&s).unwrap());
        assert_eq!(st.conclusion(&s).unwrap(), None);
        assert!(!lookup("conj-B").unwrap().premise(&s).unwrap());
    }
}
