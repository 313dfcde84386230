//! Reduction to the reduced graph, π-reduction on induced 4-cycles, and the
//! two-spanning-tree deficiency.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::edgeset::EdgeSubset;
use crate::error::{Error, Result};
use crate::graph::{ContractionMap, MultiGraph, Vertex};
use crate::io::dot_id;
use crate::limits::Limits;
use crate::oracle::{
    find_collapsible_subset, first_parallel_pair, first_triangle, is_supereulerian,
    OracleVerdict, Witness,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Rule {
    /// Two vertices joined by parallel edges.
    ParallelPair,
    Triangle,
    /// A collapsible induced subgraph found by exhaustive search.
    Oracle,
}

/// One contraction: `vertex_set` is in the ids of the graph the step was
/// applied to; `preimage` is the same set in original ids.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionStep {
    pub rule: Rule,
    pub vertex_set: Vec<Vertex>,
    pub preimage: Vec<Vertex>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionResult {
    pub graph: MultiGraph,
    pub map: ContractionMap,
    pub steps: Vec<ReductionStep>,
    pub oracle_states: u64,
}

impl ReductionResult {
    fn start(g: &MultiGraph) -> Self {
        ReductionResult {
            graph: g.clone(),
            map: ContractionMap::identity(g.order()),
            steps: Vec::new(),
            oracle_states: 0,
        }
    }

    /// Original vertices contracted into `v`.
    pub fn preimage(&self, v: Vertex) -> &[Vertex] {
        self.map.preimage(v)
    }

    /// Preimages with more than one vertex: the nontrivial maximal
    /// collapsible subgraphs, as vertex sets of the original graph.
    pub fn nontrivial_preimages(&self) -> Vec<Vec<Vertex>> {
        self.map
            .classes()
            .iter()
            .filter(|c| c.len() > 1)
            .cloned()
            .collect()
    }

    fn apply(&mut self, rule: Rule, set: Vec<Vertex>) -> Result<()> {
        let (h, m) = self.graph.contract_induced(&set)?;
        let mut preimage: Vec<Vertex> = set
            .iter()
            .flat_map(|&v| self.map.preimage(v).iter().copied())
            .collect();
        preimage.sort_unstable();
        self.steps.push(ReductionStep {
            rule,
            vertex_set: set,
            preimage,
        });
        self.map = self.map.then(&m);
        self.graph = h;
        Ok(())
    }

    /// Serializable log of the contraction steps.
    pub fn log(&self) -> ReductionLog {
        ReductionLog {
            original_order: self.map.original_order(),
            steps: self.steps.clone(),
            preimages: self.map.classes().to_vec(),
        }
    }

    /// Graphviz rendering of the original graph with one cluster per
    /// nontrivial preimage.
    pub fn to_dot(&self, original: &MultiGraph) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "graph {} {{", dot_id(original.name().unwrap_or("G")));
        for (i, class) in self.map.classes().iter().enumerate() {
            if class.len() > 1 {
                let _ = writeln!(s, "  subgraph cluster_{i} {{");
                let _ = writeln!(s, "    label=\"v{i}\";");
                for v in class {
                    let _ = writeln!(s, "    {v};");
                }
                s.push_str("  }\n");
            } else {
                let _ = writeln!(s, "  {};", class[0]);
            }
        }
        for &(u, v) in original.edges() {
            let _ = writeln!(s, "  {u} -- {v};");
        }
        s.push_str("}\n");
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionLog {
    pub original_order: usize,
    pub steps: Vec<ReductionStep>,
    pub preimages: Vec<Vec<Vertex>>,
}

impl ReductionLog {
    /// Re-applies the steps to `g` with plain contractions.
    pub fn replay(&self, g: &MultiGraph) -> Result<(MultiGraph, ContractionMap)> {
        let mut cur = g.clone();
        let mut map = ContractionMap::identity(g.order());
        for step in &self.steps {
            let (h, m) = cur.contract_induced(&step.vertex_set)?;
            map = map.then(&m);
            cur = h;
        }
        Ok((cur, map))
    }
}

/// Outcome of a reduction that may have stopped early on a budget.
pub struct ReductionOutcome {
    /// Everything contracted so far (the full reduction when `error` is `None`).
    pub result: ReductionResult,
    pub error: Option<Error>,
}

fn fast_rules(r: &mut ReductionResult) -> Result<()> {
    loop {
        if let Some(set) = first_parallel_pair(&r.graph) {
            r.apply(Rule::ParallelPair, set)?;
        } else if let Some(set) = first_triangle(&r.graph) {
            r.apply(Rule::Triangle, set)?;
        } else {
            return Ok(());
        }
    }
}

/// Contracts parallel pairs and triangles until none remain.
pub fn fast_collapse_pass(g: &MultiGraph) -> (MultiGraph, ContractionMap) {
    let mut r = ReductionResult::start(g);
    fast_rules(&mut r).expect("sets come from the graph itself");
    (r.graph, r.map)
}

/// Computes the reduction, keeping whatever was done if a budget runs out.
pub fn reduce_with_log(g: &MultiGraph, limits: &Limits) -> ReductionOutcome {
    let mut r = ReductionResult::start(g);
    let error = loop {
        if let Err(e) = fast_rules(&mut r) {
            break Some(e);
        }
        match find_collapsible_subset(&r.graph, limits) {
            Ok((Some(set), states)) => {
                r.oracle_states += states;
                if let Err(e) = r.apply(Rule::Oracle, set) {
                    break Some(e);
                }
            }
            Ok((None, states)) => {
                r.oracle_states += states;
                break None;
            }
            Err(e) => break Some(e),
        }
    };
    ReductionOutcome { result: r, error }
}

/// Contracts collapsible subgraphs until the graph is reduced: fast rules
/// first, then smallest-first exhaustive search.
pub fn reduce(g: &MultiGraph, limits: &Limits) -> Result<ReductionResult> {
    let out = reduce_with_log(g, limits);
    match out.error {
        Some(e) => Err(e),
        None => Ok(out.result),
    }
}

/// Supereulerian test that falls back to the reduction when the cycle space
/// of `g` is over budget: `G` is supereulerian iff its reduction is.
pub fn is_supereulerian_exact(g: &MultiGraph, limits: &Limits) -> Result<bool> {
    match is_supereulerian(g, limits) {
        Ok(v) => Ok(v.answer),
        Err(e) if e.is_resource_limit() => {
            let red = reduce(g, limits)?;
            Ok(is_supereulerian(&red.graph, limits)?.answer)
        }
        Err(e) => Err(e),
    }
}

/// Result of one π-reduction on the induced 4-cycle `u v z w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiStep {
    pub cycle: [Vertex; 4],
    pub graph: MultiGraph,
    pub map: ContractionMap,
    /// Image of `u` and `z`.
    pub x: Vertex,
    /// Image of `v` and `w`.
    pub y: Vertex,
}

impl PiStep {
    pub fn e_pi(&self) -> (Vertex, Vertex) {
        (self.x.min(self.y), self.x.max(self.y))
    }
}

/// Deletes the cycle edges `uv, vz, zw, wu`, identifies `u` with `z` and `v`
/// with `w`, and adds one edge between the two new vertices.
pub fn pi_reduce(g: &MultiGraph, cycle: [Vertex; 4]) -> Result<PiStep> {
    let [u, v, z, w] = cycle;
    for &a in &cycle {
        g.check_vertex(a)?;
    }
    let mut distinct = cycle.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    if distinct.len() != 4 {
        return Err(Error::NotInducedFourCycle("vertices are not distinct".into()));
    }
    for (a, b) in [(u, v), (v, z), (z, w), (w, u)] {
        if !g.adjacent(a, b) {
            return Err(Error::NotInducedFourCycle(format!("missing cycle edge ({a}, {b})")));
        }
    }
    for (a, b) in [(u, z), (v, w)] {
        if g.adjacent(a, b) {
            return Err(Error::NotInducedFourCycle(format!("chord ({a}, {b})")));
        }
    }
    let mut edges = g.edges().to_vec();
    for (a, b) in [(u, v), (v, z), (z, w), (w, u)] {
        let key = (a.min(b), a.max(b));
        let pos = edges.iter().position(|&e| e == key).expect("checked above");
        edges.remove(pos);
    }
    let stripped = MultiGraph::from_edges(g.order(), &edges)?;
    let (merged, map) = stripped.merge_vertex_sets(&[vec![u, z], vec![v, w]])?;
    let image = map.image_of_all();
    let (x, y) = (image[u as usize], image[v as usize]);
    let mut edges = merged.edges().to_vec();
    edges.push((x, y));
    let graph = MultiGraph::from_edges(merged.order(), &edges)?;
    Ok(PiStep {
        cycle,
        graph,
        map,
        x,
        y,
    })
}

/// Every induced 4-cycle once, as `(a, b, c, d)` with `a` the smallest
/// vertex and `b < d` its two cycle neighbors.
pub fn list_induced_four_cycles(g: &MultiGraph) -> Vec<[Vertex; 4]> {
    let mut out = Vec::new();
    for a in g.vertices() {
        let nbrs: Vec<Vertex> = g.neighbors(a).iter().map(|&(w, _)| w).filter(|&w| w > a).collect();
        for (i, &b) in nbrs.iter().enumerate() {
            for &d in &nbrs[i + 1..] {
                if g.adjacent(b, d) {
                    continue;
                }
                for &(c, _) in g.neighbors(b) {
                    if c > a && c != d && g.adjacent(c, d) && !g.adjacent(a, c) {
                        out.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    out
}

/// `2|V| - |E| - 2` for a connected graph; negative for dense graphs.
pub fn f_value(g: &MultiGraph) -> Result<i64> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(2 * g.order() as i64 - g.size() as i64 - 2)
}

/// Fewest extra edges after which the graph has two edge-disjoint spanning
/// trees, as `max over partitions Q of (2(|Q| - 1) - e(Q))`, where `e(Q)`
/// counts edges between different parts. Enumerates all set partitions.
pub fn tree_packing_deficiency(g: &MultiGraph, limits: &Limits) -> Result<u64> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.order();
    if n > limits.max_partition_n {
        return Err(Error::limit("partition order", n as u64, limits.max_partition_n as u64));
    }
    // Edges to earlier vertices, with multiplicity.
    let back: Vec<Vec<(usize, i64)>> = (0..n)
        .map(|v| {
            g.neighbors(v as Vertex)
                .iter()
                .filter(|&&(w, _)| (w as usize) < v)
                .map(|&(w, m)| (w as usize, m as i64))
                .collect()
        })
        .collect();
    let m = g.size() as i64;
    let mut block = vec![0usize; n];
    let mut best = 0i64;
    fn walk(
        v: usize,
        blocks: usize,
        internal: i64,
        back: &[Vec<(usize, i64)>],
        block: &mut [usize],
        m: i64,
        best: &mut i64,
    ) {
        if v == back.len() {
            let crossing = m - internal;
            *best = (*best).max(2 * (blocks as i64 - 1) - crossing);
            return;
        }
        for b in 0..=blocks {
            let add: i64 = back[v]
                .iter()
                .filter(|&&(w, _)| block[w] == b)
                .map(|&(_, k)| k)
                .sum();
            block[v] = b;
            let next_blocks = if b == blocks { blocks + 1 } else { blocks };
            walk(v + 1, next_blocks, internal + add, back, block, m, best);
        }
    }
    walk(0, 0, 0, &back, &mut block, m, &mut best);
    Ok(best.max(0) as u64)
}

/// Two edge-disjoint forests of maximum total size, grown by matroid-union
/// augmenting paths (shortest paths, found breadth-first).
pub fn max_two_forest_packing(g: &MultiGraph) -> (EdgeSubset, EdgeSubset) {
    let m = g.size();
    let n = g.order();
    let edges = g.edges();
    let mut owner: Vec<Option<u8>> = vec![None; m];

    // Tree path between a and b in forest i, or None when they are apart.
    let forest_path = |owner: &[Option<u8>], i: u8, a: Vertex, b: Vertex| -> Option<Vec<usize>> {
        let mut adj: Vec<Vec<(Vertex, usize)>> = vec![Vec::new(); n];
        for (e, &(u, v)) in edges.iter().enumerate() {
            if owner[e] == Some(i) {
                adj[u as usize].push((v, e));
                adj[v as usize].push((u, e));
            }
        }
        let mut via: Vec<Option<usize>> = vec![None; n];
        let mut seen = vec![false; n];
        seen[a as usize] = true;
        let mut queue = std::collections::VecDeque::from([a]);
        while let Some(x) = queue.pop_front() {
            if x == b {
                break;
            }
            for &(y, e) in &adj[x as usize] {
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    via[y as usize] = Some(e);
                    queue.push_back(y);
                }
            }
        }
        if !seen[b as usize] {
            return None;
        }
        let mut path = Vec::new();
        let mut cur = b;
        while cur != a {
            let e = via[cur as usize].expect("reached");
            path.push(e);
            let (u, v) = edges[e];
            cur = if u == cur { v } else { u };
        }
        Some(path)
    };

    for start in 0..m {
        let mut parent: Vec<Option<(usize, u8)>> = vec![None; m];
        let mut visited = vec![false; m];
        visited[start] = true;
        let mut queue = std::collections::VecDeque::from([start]);
        'search: while let Some(x) = queue.pop_front() {
            for i in 0..2u8 {
                if owner[x] == Some(i) {
                    continue;
                }
                let (a, b) = edges[x];
                match forest_path(&owner, i, a, b) {
                    None => {
                        let (mut cur, mut forest) = (x, i);
                        loop {
                            let prev = parent[cur];
                            owner[cur] = Some(forest);
                            match prev {
                                Some((p, pf)) => {
                                    cur = p;
                                    forest = pf;
                                }
                                None => break,
                            }
                        }
                        break 'search;
                    }
                    Some(path) => {
                        for y in path {
                            if !visited[y] {
                                visited[y] = true;
                                parent[y] = Some((x, i));
                                queue.push_back(y);
                            }
                        }
                    }
                }
            }
        }
    }
    let pick = |i: u8| EdgeSubset::from_indices(m, (0..m).filter(|&e| owner[e] == Some(i)));
    (pick(0), pick(1))
}

/// Exact test for two edge-disjoint spanning trees; the witness holds both
/// trees.
pub fn has_two_edge_disjoint_spanning_trees(g: &MultiGraph) -> OracleVerdict {
    let (a, b) = max_two_forest_packing(g);
    let states = g.size() as u64;
    let target = g.order() - 1;
    if a.count() == target && b.count() == target && g.is_connected() {
        OracleVerdict {
            answer: true,
            witness: Some(Witness::Trees(a, b)),
            failing_odd_set: None,
            states_examined: states,
        }
    } else {
        OracleVerdict {
            answer: false,
            witness: None,
            failing_odd_set: None,
            states_examined: states,
        }
    }
}

/// Independent check that an edge set is a spanning tree.
pub fn is_spanning_tree(g: &MultiGraph, s: &EdgeSubset) -> bool {
    let mut dsu = crate::graph::Dsu::new(g.order());
    let mut count = 0;
    for (u, v) in s.pairs(g) {
        if !dsu.union(u as usize, v as usize) {
            return false;
        }
        count += 1;
    }
    count + 1 == g.order()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blowup::{blow_up, BlowUpSpec, Replacement};
    use crate::named::{complete, complete_bipartite, cycle, petersen, NamedGraph};

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn reduce_k4_to_point() {
        let r = reduce(&complete(4).unwrap(), &lim()).unwrap();
        assert_eq!(r.graph.order(), 1);
        assert_eq!(r.preimage(0), &[0, 1, 2, 3]);
    }

    #[test]
    fn c4_is_its_own_reduction() {
        let c4 = cycle(4).unwrap();
        let r = reduce(&c4, &lim()).unwrap();
        assert_eq!(r.graph, c4);
        assert!(r.steps.is_empty());
    }

    #[test]
    fn fast_pass_examples() {
        let (g, _) = fast_collapse_pass(&cycle(2).unwrap());
        assert_eq!(g.order(), 1);
        let (g, _) = fast_collapse_pass(&complete(5).unwrap());
        assert_eq!(g.order(), 1);
        let p = petersen();
        let (g, map) = fast_collapse_pass(&p);
        assert_eq!(g, p);
        assert_eq!(map, ContractionMap::identity(10));
    }

    #[test]
    fn blow_up_of_petersen_reduces_to_petersen_classes() {
        let spec = BlowUpSpec::uniform(petersen(), Replacement::complete(3));
        let g = blow_up(&spec).unwrap();
        let r = reduce(&g, &lim()).unwrap();
        assert_eq!(r.graph.order(), 10);
        assert_eq!(r.graph.edges(), petersen().edges());
        for class in r.map.classes() {
            assert_eq!(class.len(), 3);
        }
    }

    #[test]
    fn log_replays() {
        let g = NamedGraph::K33MinusEdge.build().unwrap();
        let r = reduce(&g, &lim()).unwrap();
        let (h, map) = r.log().replay(&g).unwrap();
        assert_eq!(h, r.graph);
        assert_eq!(map, r.map);
    }

    #[test]
    fn pi_on_c4_gives_k2() {
        let s = pi_reduce(&cycle(4).unwrap(), [0, 1, 2, 3]).unwrap();
        assert_eq!((s.graph.order(), s.graph.size()), (2, 1));
        assert_eq!(s.e_pi(), (0, 1));
    }

    #[test]
    fn pi_on_k23() {
        // Parts {0,1} and {2,3,4}; cycle 2-0-3-1.
        let g = complete_bipartite(2, 3);
        let s = pi_reduce(&g, [2, 0, 3, 1]).unwrap();
        assert_eq!((s.graph.order(), s.graph.size()), (3, 3));
        let w = s.map.image_of_all()[4];
        assert_eq!(s.graph.multiplicity(s.y, w), 2);
        assert_eq!(s.graph.multiplicity(s.x, s.y), 1);
        assert_eq!(s.graph.multiplicity(s.x, w), 0);
    }

    #[test]
    fn pi_rejects_chords_and_non_cycles() {
        let k4 = complete(4).unwrap();
        match pi_reduce(&k4, [0, 1, 2, 3]) {
            Err(Error::NotInducedFourCycle(msg)) => assert!(msg.contains("chord (0, 2)")),
            other => panic!("{other:?}"),
        }
        let p = NamedGraph::Path(4).build().unwrap();
        assert!(pi_reduce(&p, [0, 1, 2, 3]).is_err());
    }

    #[test]
    fn induced_four_cycle_counts() {
        assert_eq!(list_induced_four_cycles(&cycle(4).unwrap()).len(), 1);
        assert!(list_induced_four_cycles(&petersen()).is_empty());
        assert_eq!(list_induced_four_cycles(&complete_bipartite(2, 3)).len(), 3);
        assert!(list_induced_four_cycles(&complete(4).unwrap()).is_empty());
    }

    #[test]
    fn f_values() {
        assert_eq!(f_value(&petersen()).unwrap(), 3);
        for t in 1..6 {
            assert_eq!(f_value(&complete_bipartite(2, t)).unwrap(), 2);
        }
        assert_eq!(f_value(&complete(2).unwrap()).unwrap(), 1);
        assert_eq!(f_value(&complete(6).unwrap()).unwrap(), -5);
        let two = MultiGraph::empty(2).unwrap();
        assert_eq!(f_value(&two).unwrap_err(), Error::Disconnected);
    }

    #[test]
    fn packing_deficiency_examples() {
        let p3 = NamedGraph::Path(3).build().unwrap();
        assert_eq!(tree_packing_deficiency(&p3, &lim()).unwrap(), 2);
        assert_eq!(tree_packing_deficiency(&complete(4).unwrap(), &lim()).unwrap(), 0);
        assert_eq!(tree_packing_deficiency(&petersen(), &lim()).unwrap(), 3);
        assert_eq!(tree_packing_deficiency(&complete(1).unwrap(), &lim()).unwrap(), 0);
        let big = cycle(13).unwrap();
        assert!(tree_packing_deficiency(&big, &lim()).unwrap_err().is_resource_limit());
    }

    #[test]
    fn two_tree_examples() {
        let v = has_two_edge_disjoint_spanning_trees(&cycle(2).unwrap());
        assert!(v.answer);
        assert!(!has_two_edge_disjoint_spanning_trees(&NamedGraph::Path(5).build().unwrap()).answer);
        let k4 = complete(4).unwrap();
        let v = has_two_edge_disjoint_spanning_trees(&k4);
        match v.witness {
            Some(Witness::Trees(a, b)) => {
                assert!(is_spanning_tree(&k4, &a) && is_spanning_tree(&k4, &b));
                assert!(a.iter().all(|e| !b.contains(e)));
            }
            other => panic!("{other:?}"),
        }
        assert!(!has_two_edge_disjoint_spanning_trees(&petersen()).answer);
    }
}
