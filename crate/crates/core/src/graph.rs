//! Loopless multigraphs with dense vertex ids, plus contraction that keeps
//! track of which original vertices each new vertex absorbed.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A vertex id. Ids are dense: a graph of order `n` uses `0..n`.
pub type Vertex = u32;

/// A finite loopless multigraph.
///
/// Edges are stored normalized (`u < v`) and sorted, one entry per parallel
/// copy, so the edge order is canonical for a given edge multiset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiGraph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    adj: Vec<Vec<(Vertex, u32)>>,
    name: Option<String>,
}

impl MultiGraph {
    /// Builds a graph from `(u, v, multiplicity)` triples.
    pub fn from_edge_list(n: usize, edges: &[(Vertex, Vertex, u32)]) -> Result<Self> {
        let mut flat = Vec::with_capacity(edges.iter().map(|e| e.2 as usize).sum());
        for &(u, v, mult) in edges {
            for _ in 0..mult {
                flat.push((u, v));
            }
        }
        Self::from_edges(n, &flat)
    }

    /// Builds a graph from a list of edges, one entry per parallel copy.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut norm = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            for w in [u, v] {
                if w as usize >= n {
                    return Err(Error::UnknownVertex { vertex: w, order: n });
                }
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            norm.push((u.min(v), u.max(v)));
        }
        norm.sort_unstable();
        Ok(Self::from_sorted(n, norm))
    }

    fn from_sorted(n: usize, edges: Vec<(Vertex, Vertex)>) -> Self {
        let mut adj: Vec<Vec<(Vertex, u32)>> = vec![Vec::new(); n];
        for &(u, v) in &edges {
            bump(&mut adj[u as usize], v);
            bump(&mut adj[v as usize], u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        MultiGraph {
            n,
            edges,
            adj,
            name: None,
        }
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        Self::from_edges(n, &[])
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges, counted with multiplicity.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        0..self.n as Vertex
    }

    /// Edges in canonical order, one entry per parallel copy.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    /// Distinct neighbors of `v` with edge multiplicities, sorted by neighbor.
    pub fn neighbors(&self, v: Vertex) -> &[(Vertex, u32)] {
        &self.adj[v as usize]
    }

    /// Degree of `v`, counting parallel edges.
    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v as usize].iter().map(|&(_, m)| m as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.vertices().map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> usize {
        self.degrees().into_iter().min().unwrap_or(0)
    }

    pub fn multiplicity(&self, u: Vertex, v: Vertex) -> u32 {
        match self.adj[u as usize].binary_search_by_key(&v, |&(w, _)| w) {
            Ok(i) => self.adj[u as usize][i].1,
            Err(_) => 0,
        }
    }

    pub fn adjacent(&self, u: Vertex, v: Vertex) -> bool {
        self.multiplicity(u, v) > 0
    }

    /// True when the graph has no parallel edges.
    pub fn is_simple(&self) -> bool {
        self.edges.windows(2).all(|w| w[0] != w[1])
    }

    /// `(u, v, multiplicity)` triples in canonical order.
    pub fn edge_multiset(&self) -> Vec<(Vertex, Vertex, u32)> {
        let mut out: Vec<(Vertex, Vertex, u32)> = Vec::new();
        for &(u, v) in &self.edges {
            match out.last_mut() {
                Some(last) if last.0 == u && last.1 == v => last.2 += 1,
                _ => out.push((u, v, 1)),
            }
        }
        out
    }

    /// Adjacency bitmasks; only valid for graphs of order at most 64.
    pub(crate) fn neighbor_masks(&self) -> Vec<u64> {
        debug_assert!(self.n <= 64);
        self.adj
            .iter()
            .map(|list| list.iter().fold(0u64, |m, &(w, _)| m | (1 << w)))
            .collect()
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if (v as usize) < self.n {
            Ok(())
        } else {
            Err(Error::UnknownVertex {
                vertex: v,
                order: self.n,
            })
        }
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s as Vertex];
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for &(w, _) in &self.adj[v as usize] {
                    if !seen[w as usize] {
                        seen[w as usize] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Vertices of odd degree.
    pub fn odd_vertices(&self) -> Vec<Vertex> {
        self.vertices().filter(|&v| self.degree(v) % 2 == 1).collect()
    }

    /// The subgraph induced by `s`, relabeled densely in increasing id order.
    pub fn induced_subgraph(&self, s: &[Vertex]) -> Result<MultiGraph> {
        Ok(self.induced_subgraph_with_map(s)?.0)
    }

    /// Like [`MultiGraph::induced_subgraph`], also returning the original id
    /// of each new vertex.
    pub fn induced_subgraph_with_map(&self, s: &[Vertex]) -> Result<(MultiGraph, Vec<Vertex>)> {
        let mut keep: Vec<Vertex> = s.to_vec();
        keep.sort_unstable();
        keep.dedup();
        for &v in &keep {
            self.check_vertex(v)?;
        }
        if keep.is_empty() {
            return Err(Error::EmptyGraph);
        }
        let mut index = vec![u32::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            index[v as usize] = i as Vertex;
        }
        let edges: Vec<_> = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u as usize] != u32::MAX && index[v as usize] != u32::MAX)
            .map(|&(u, v)| (index[u as usize], index[v as usize]))
            .collect();
        let g = MultiGraph::from_edges(keep.len(), &edges)?;
        Ok((g, keep))
    }

    /// Applies a vertex relabeling: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[Vertex]) -> Result<MultiGraph> {
        if perm.len() != self.n {
            return Err(Error::InvalidParameter(format!(
                "permutation has length {}, graph has order {}",
                perm.len(),
                self.n
            )));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p as usize >= self.n || std::mem::replace(&mut seen[p as usize], true) {
                return Err(Error::InvalidParameter("not a permutation".into()));
            }
        }
        let edges: Vec<_> = self
            .edges
            .iter()
            .map(|&(u, v)| (perm[u as usize], perm[v as usize]))
            .collect();
        let mut g = MultiGraph::from_edges(self.n, &edges)?;
        g.name = self.name.clone();
        Ok(g)
    }

    /// Contracts the listed edges: identifies their ends and deletes the
    /// resulting loops. Parallel edges between different classes remain.
    ///
    /// Each listed pair must be an edge of the graph; listing one copy of a
    /// parallel edge merges its ends, which turns every copy into a loop.
    pub fn contract(&self, edges: &[(Vertex, Vertex)]) -> Result<(MultiGraph, ContractionMap)> {
        let mut dsu = Dsu::new(self.n);
        for &(u, v) in edges {
            self.check_vertex(u)?;
            self.check_vertex(v)?;
            if !self.adjacent(u, v) {
                return Err(Error::MissingEdge(u, v));
            }
            dsu.union(u as usize, v as usize);
        }
        Ok(self.quotient(&mut dsu))
    }

    /// Identifies all vertices inside each given set (sets need not be
    /// connected) and deletes the resulting loops.
    pub fn merge_vertex_sets(&self, sets: &[Vec<Vertex>]) -> Result<(MultiGraph, ContractionMap)> {
        let mut dsu = Dsu::new(self.n);
        for set in sets {
            for &v in set {
                self.check_vertex(v)?;
            }
            for w in set.windows(2) {
                dsu.union(w[0] as usize, w[1] as usize);
            }
        }
        Ok(self.quotient(&mut dsu))
    }

    /// Contracts the subgraph induced by `set`, i.e. `G / G[set]`. When the
    /// induced subgraph is connected the set becomes a single vertex.
    pub fn contract_induced(&self, set: &[Vertex]) -> Result<(MultiGraph, ContractionMap)> {
        let mut member = vec![false; self.n];
        for &v in set {
            self.check_vertex(v)?;
            member[v as usize] = true;
        }
        let inner: Vec<_> = self
            .edges
            .iter()
            .copied()
            .filter(|&(u, v)| member[u as usize] && member[v as usize])
            .collect();
        self.contract(&inner)
    }

    fn quotient(&self, dsu: &mut Dsu) -> (MultiGraph, ContractionMap) {
        // New ids follow the smallest original member of each class.
        let mut root_id = vec![u32::MAX; self.n];
        let mut classes: Vec<Vec<Vertex>> = Vec::new();
        for v in 0..self.n {
            let r = dsu.find(v);
            if root_id[r] == u32::MAX {
                root_id[r] = classes.len() as Vertex;
                classes.push(Vec::new());
            }
            classes[root_id[r] as usize].push(v as Vertex);
        }
        let mut edges = Vec::with_capacity(self.edges.len());
        for &(u, v) in &self.edges {
            let a = root_id[dsu.find(u as usize)];
            let b = root_id[dsu.find(v as usize)];
            if a != b {
                edges.push((a.min(b), a.max(b)));
            }
        }
        edges.sort_unstable();
        let g = MultiGraph::from_sorted(classes.len(), edges);
        (g, ContractionMap { classes })
    }
}

fn bump(list: &mut Vec<(Vertex, u32)>, w: Vertex) {
    if let Some(entry) = list.iter_mut().find(|e| e.0 == w) {
        entry.1 += 1;
    } else {
        list.push((w, 1));
    }
}

/// For each vertex of a contracted graph, the nonempty set of original
/// vertices it absorbed. The sets partition the original vertex set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContractionMap {
    classes: Vec<Vec<Vertex>>,
}

impl ContractionMap {
    pub fn identity(n: usize) -> Self {
        ContractionMap {
            classes: (0..n as Vertex).map(|v| vec![v]).collect(),
        }
    }

    /// Builds a map from explicit classes; they must partition `0..original_order`.
    pub fn from_classes(classes: Vec<Vec<Vertex>>, original_order: usize) -> Result<Self> {
        let mut seen = vec![false; original_order];
        let mut count = 0;
        for class in &classes {
            if class.is_empty() {
                return Err(Error::InvalidParameter("empty preimage class".into()));
            }
            for &v in class {
                if v as usize >= original_order || std::mem::replace(&mut seen[v as usize], true) {
                    return Err(Error::InvalidParameter(format!(
                        "vertex {v} repeated or out of range in contraction map"
                    )));
                }
                count += 1;
            }
        }
        if count != original_order {
            return Err(Error::InvalidParameter(
                "contraction classes do not cover the original vertex set".into(),
            ));
        }
        let mut classes = classes;
        for class in &mut classes {
            class.sort_unstable();
        }
        Ok(ContractionMap { classes })
    }

    /// Original vertices absorbed into `v`.
    pub fn preimage(&self, v: Vertex) -> &[Vertex] {
        &self.classes[v as usize]
    }

    pub fn classes(&self) -> &[Vec<Vertex>] {
        &self.classes
    }

    /// Number of vertices in the contracted graph.
    pub fn image_order(&self) -> usize {
        self.classes.len()
    }

    pub fn original_order(&self) -> usize {
        self.classes.iter().map(Vec::len).sum()
    }

    /// Image of each original vertex.
    pub fn image_of_all(&self) -> Vec<Vertex> {
        let mut out = vec![0; self.original_order()];
        for (i, class) in self.classes.iter().enumerate() {
            for &v in class {
                out[v as usize] = i as Vertex;
            }
        }
        out
    }

    /// Composes `self` (original -> middle) with `later` (middle -> final).
    pub fn then(&self, later: &ContractionMap) -> ContractionMap {
        let classes = later
            .classes
            .iter()
            .map(|mid| {
                let mut c: Vec<Vertex> = mid
                    .iter()
                    .flat_map(|&m| self.classes[m as usize].iter().copied())
                    .collect();
                c.sort_unstable();
                c
            })
            .collect();
        ContractionMap { classes }
    }

    /// The partition as a sorted list of sorted classes, for comparisons that
    /// ignore the labeling of the contracted graph.
    pub fn partition(&self) -> Vec<Vec<Vertex>> {
        let mut p = self.classes.clone();
        p.sort();
        p
    }
}

/// Union-find with path halving.
#[derive(Clone, Debug)]
pub(crate) struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    pub(crate) fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn reset(&mut self) {
        for (i, p) in self.parent.iter_mut().enumerate() {
            *p = i;
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when `a` and `b` were already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if ra < rb {
            self.parent[rb] = ra;
        } else {
            self.parent[ra] = rb;
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(n: u32) -> MultiGraph {
        let mut e = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                e.push((u, v));
            }
        }
        MultiGraph::from_edges(n as usize, &e).unwrap()
    }

    fn cycle(n: u32) -> MultiGraph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        MultiGraph::from_edges(n as usize, &e).unwrap()
    }

    #[test]
    fn two_cycle_from_doubled_edge() {
        let g = MultiGraph::from_edges(2, &[(0, 1), (0, 1)]).unwrap();
        assert_eq!((g.order(), g.size()), (2, 2));
        assert_eq!(g.multiplicity(0, 1), 2);
        assert!(!g.is_simple());
        assert_eq!(g.edge_multiset(), vec![(0, 1, 2)]);
    }

    #[test]
    fn k1_and_c4() {
        let k1 = MultiGraph::from_edges(1, &[]).unwrap();
        assert_eq!((k1.order(), k1.size()), (1, 0));
        let c4 = MultiGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(c4.degrees(), vec![2, 2, 2, 2]);
    }

    #[test]
    fn rejects_loops_and_unknown_vertices() {
        assert_eq!(
            MultiGraph::from_edges(3, &[(1, 1)]).unwrap_err(),
            Error::LoopEdge(1)
        );
        assert!(matches!(
            MultiGraph::from_edges(3, &[(0, 3)]).unwrap_err(),
            Error::UnknownVertex { vertex: 3, .. }
        ));
        assert_eq!(MultiGraph::from_edges(0, &[]).unwrap_err(), Error::EmptyGraph);
    }

    #[test]
    fn contract_triangle_edge_gives_two_cycle() {
        let (g, map) = k(3).contract(&[(0, 1)]).unwrap();
        assert_eq!((g.order(), g.size()), (2, 2));
        assert_eq!(g.multiplicity(0, 1), 2);
        assert_eq!(map.preimage(0), &[0, 1]);
        assert_eq!(map.preimage(1), &[2]);
    }

    #[test]
    fn contract_c4_edge_gives_triangle() {
        let (g, _) = cycle(4).contract(&[(0, 1)]).unwrap();
        assert_eq!(g, k(3));
    }

    #[test]
    fn contract_rejects_missing_edge() {
        assert_eq!(
            cycle(4).contract(&[(0, 2)]).unwrap_err(),
            Error::MissingEdge(0, 2)
        );
    }

    #[test]
    fn contract_everything_gives_k1() {
        let g = k(5);
        let (h, map) = g.contract(g.edges()).unwrap();
        assert_eq!((h.order(), h.size()), (1, 0));
        assert_eq!(map.preimage(0), &[0, 1, 2, 3, 4]);
    }

    #[test]
    fn composition_of_contractions() {
        let g = cycle(6);
        let (g1, m1) = g.contract(&[(0, 1)]).unwrap();
        let (g2, m2) = g1.contract(&[(2, 3)]).unwrap();
        let composed = m1.then(&m2);
        assert_eq!(composed.original_order(), 6);
        assert_eq!(g2.order(), 4);
        assert_eq!(composed.partition(), vec![vec![0, 1], vec![2], vec![3, 4], vec![5]]);
    }

    #[test]
    fn induced_subgraphs() {
        assert_eq!(k(4).induced_subgraph(&[0, 2, 3]).unwrap(), k(3));
        let c4 = cycle(4);
        assert_eq!(c4.induced_subgraph(&[0, 1, 2, 3]).unwrap(), c4);
        assert!(c4.induced_subgraph(&[0, 9]).is_err());
    }

    #[test]
    fn odd_vertex_sets() {
        assert!(cycle(4).odd_vertices().is_empty());
        let p3 = MultiGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.odd_vertices(), vec![0, 2]);
    }
}
