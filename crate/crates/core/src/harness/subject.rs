use std::cell::OnceCell;

use crate::error::{Error, Result};
use crate::graph::{MultiGraph, Vertex};
use crate::invariants::{edge_connectivity, girth, maximum_matching, Extended};
use crate::iso::are_isomorphic;
use crate::limits::Limits;
use crate::named::{p14, p16, petersen};
use crate::reduction::{f_value, is_supereulerian_exact, reduce, tree_packing_deficiency, ReductionResult};

/// One graph under examination, with the expensive facts computed at most
/// once and shared between premise and conclusion.
pub struct Subject<'a> {
    pub graph: &'a MultiGraph,
    pub limits: &'a Limits,
    reduction: OnceCell<Result<ReductionResult>>,
    supereulerian: OnceCell<Result<bool>>,
    kappa: OnceCell<Extended>,
    deficiency: OnceCell<Result<u64>>,
    matching: OnceCell<usize>,
}

fn shared<T>(cell: &OnceCell<Result<T>>, f: impl FnOnce() -> Result<T>) -> Result<&T> {
    match cell.get_or_init(f) {
        Ok(v) => Ok(v),
        Err(e) => Err(e.clone()),
    }
}

impl<'a> Subject<'a> {
    pub fn new(graph: &'a MultiGraph, limits: &'a Limits) -> Self {
        Subject {
            graph,
            limits,
            reduction: OnceCell::new(),
            supereulerian: OnceCell::new(),
            kappa: OnceCell::new(),
            deficiency: OnceCell::new(),
            matching: OnceCell::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.graph.order()
    }

    pub fn connected(&self) -> bool {
        self.graph.is_connected()
    }

    pub fn reduction(&self) -> Result<&ReductionResult> {
        shared(&self.reduction, || reduce(self.graph, self.limits))
    }

    pub fn is_reduced(&self) -> Result<bool> {
        Ok(self.reduction()?.steps.is_empty())
    }

    /// Exact oracle, falling back to the reduction above the cycle-space
    /// budget.
    pub fn supereulerian(&self) -> Result<bool> {
        shared(&self.supereulerian, || is_supereulerian_exact(self.graph, self.limits)).copied()
    }

    pub fn edge_connectivity(&self) -> Extended {
        *self.kappa.get_or_init(|| edge_connectivity(self.graph))
    }

    pub fn edge_connected_at_least(&self, k: u64) -> bool {
        self.edge_connectivity() >= Extended::Finite(k)
    }

    pub fn f(&self) -> Result<i64> {
        f_value(self.graph)
    }

    /// `F(G)` by partition enumeration.
    pub fn deficiency(&self) -> Result<u64> {
        shared(&self.deficiency, || tree_packing_deficiency(self.graph, self.limits)).copied()
    }

    /// `F(G)` for a reduced graph: the partition enumeration within its
    /// budget, the closed form `2n - m - 2` beyond it.
    pub fn deficiency_of_reduced(&self) -> Result<i64> {
        match self.deficiency() {
            Ok(v) => Ok(v as i64),
            Err(e) if e.is_resource_limit() => self.f(),
            Err(e) => Err(e),
        }
    }

    pub fn matching_number(&self) -> usize {
        *self.matching.get_or_init(|| maximum_matching(self.graph).len())
    }

    pub fn girth(&self) -> Extended {
        girth(self.graph)
    }

    pub fn count_degree(&self, d: usize) -> usize {
        self.graph.degrees().iter().filter(|&&x| x == d).count()
    }

    pub fn isomorphic_to(&self, other: &MultiGraph) -> Result<bool> {
        Ok(are_isomorphic(self.graph, other, self.limits)?.is_some())
    }

    /// Whether the reduction is isomorphic to one of P, P14, P16 (only the
    /// listed names are tried).
    pub fn reduction_in(&self, names: &[&str]) -> Result<bool> {
        let red = &self.reduction()?.graph;
        for &name in names {
            let target = match name {
                "petersen" => petersen(),
                "p14" => p14(),
                "p16" => p16(),
                other => return Err(Error::UnknownName(other.to_string())),
            };
            if are_isomorphic(red, &target, self.limits)?.is_some() {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// A 4-cycle in the underlying simple graph: two vertices with two common
/// neighbors.
pub fn has_four_cycle(g: &MultiGraph) -> bool {
    let n = g.order() as Vertex;
    for u in 0..n {
        for v in u + 1..n {
            let common = g
                .neighbors(u)
                .iter()
                .filter(|&&(w, _)| w != v && g.adjacent(w, v))
                .count();
            if common >= 2 {
                return true;
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::{complete, cycle};

    #[test]
    fn four_cycles() {
        assert!(has_four_cycle(&cycle(4).unwrap()));
        assert!(has_four_cycle(&complete(4).unwrap()));
        assert!(!has_four_cycle(&petersen()));
        assert!(has_four_cycle(&p14()));
        assert!(!has_four_cycle(&cycle(5).unwrap()));
    }

    #[test]
    fn cached_facts() {
        let l = Limits::default();
        let p = petersen();
        let s = Subject::new(&p, &l);
        assert!(s.is_reduced().unwrap());
        assert!(!s.supereulerian().unwrap());
        assert_eq!(s.deficiency_of_reduced().unwrap(), 3);
        assert!(s.reduction_in(&["petersen"]).unwrap());
        assert!(!s.reduction_in(&["p14", "p16"]).unwrap());
        let big = p16();
        let s = Subject::new(&big, &l);
        assert_eq!(s.deficiency_of_reduced().unwrap(), 6);
    }
}
