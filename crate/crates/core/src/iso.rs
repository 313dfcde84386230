//! Isomorphism testing for multigraphs and canonical codes for small simple
//! graphs.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{MultiGraph, Vertex};
use crate::limits::Limits;

/// Color refinement run jointly on both graphs so that colors are
/// comparable. Colors are ranks of sorted signatures, hence invariant.
fn refine(graphs: &[&MultiGraph]) -> Vec<Vec<usize>> {
    let mut colors: Vec<Vec<usize>> = graphs
        .iter()
        .map(|g| g.vertices().map(|v| g.degree(v)).collect())
        .collect();
    let count = |c: &[Vec<usize>]| {
        let mut all: Vec<usize> = c.iter().flatten().copied().collect();
        all.sort_unstable();
        all.dedup();
        all.len()
    };
    let mut classes = count(&colors);
    loop {
        let sigs: Vec<Vec<(usize, Vec<(usize, u32)>)>> = graphs
            .iter()
            .zip(&colors)
            .map(|(g, col)| {
                g.vertices()
                    .map(|v| {
                        let mut nb: Vec<(usize, u32)> =
                            g.neighbors(v).iter().map(|&(w, m)| (col[w as usize], m)).collect();
                        nb.sort_unstable();
                        (col[v as usize], nb)
                    })
                    .collect()
            })
            .collect();
        let mut sorted: Vec<&(usize, Vec<(usize, u32)>)> = sigs.iter().flatten().collect();
        sorted.sort();
        sorted.dedup();
        let rank: HashMap<&(usize, Vec<(usize, u32)>), usize> =
            sorted.iter().enumerate().map(|(i, s)| (*s, i)).collect();
        let next: Vec<Vec<usize>> = sigs
            .iter()
            .map(|s| s.iter().map(|x| rank[x]).collect())
            .collect();
        let next_classes = count(&next);
        colors = next;
        if next_classes == classes {
            return colors;
        }
        classes = next_classes;
    }
}

/// Triangles of the underlying simple graph.
fn triangles(g: &MultiGraph) -> usize {
    let mut count = 0;
    for u in g.vertices() {
        for &(v, _) in g.neighbors(u) {
            if v <= u {
                continue;
            }
            for &(w, _) in g.neighbors(v) {
                if w > v && g.adjacent(u, w) {
                    count += 1;
                }
            }
        }
    }
    count
}

/// A multiplicity-preserving bijection `a -> b` (as `map[v_a] = v_b`) when
/// the graphs are isomorphic.
pub fn are_isomorphic(a: &MultiGraph, b: &MultiGraph, limits: &Limits) -> Result<Option<Vec<Vertex>>> {
    let n = a.order();
    if n.max(b.order()) > limits.max_iso_n {
        return Err(Error::limit("isomorphism order", n.max(b.order()) as u64, limits.max_iso_n as u64));
    }
    if n != b.order() || a.size() != b.size() {
        return Ok(None);
    }
    let mut da = a.degrees();
    let mut db = b.degrees();
    da.sort_unstable();
    db.sort_unstable();
    if da != db || triangles(a) != triangles(b) {
        return Ok(None);
    }
    let colors = refine(&[a, b]);
    let (ca, cb) = (&colors[0], &colors[1]);
    let mut ha = ca.clone();
    let mut hb = cb.clone();
    ha.sort_unstable();
    hb.sort_unstable();
    if ha != hb {
        return Ok(None);
    }
    // Map vertices in BFS order over `a`, rarest color class first.
    let mut freq: HashMap<usize, usize> = HashMap::new();
    for &c in ca {
        *freq.entry(c).or_default() += 1;
    }
    let mut order: Vec<Vertex> = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    while order.len() < n {
        let seed = (0..n as Vertex)
            .filter(|&v| !placed[v as usize])
            .min_by_key(|&v| (freq[&ca[v as usize]], v))
            .expect("vertices remain");
        placed[seed as usize] = true;
        let mut i = order.len();
        order.push(seed);
        while i < order.len() {
            let u = order[i];
            let mut nb: Vec<Vertex> = a
                .neighbors(u)
                .iter()
                .map(|&(w, _)| w)
                .filter(|&w| !placed[w as usize])
                .collect();
            nb.sort_by_key(|&w| (freq[&ca[w as usize]], w));
            for w in nb {
                placed[w as usize] = true;
                order.push(w);
            }
            i += 1;
        }
    }
    let mut map = vec![Vertex::MAX; n];
    let mut used = vec![false; n];

    fn extend(
        k: usize,
        order: &[Vertex],
        a: &MultiGraph,
        b: &MultiGraph,
        ca: &[usize],
        cb: &[usize],
        map: &mut [Vertex],
        used: &mut [bool],
    ) -> bool {
        if k == order.len() {
            return true;
        }
        let v = order[k];
        for w in 0..b.order() as Vertex {
            if used[w as usize] || cb[w as usize] != ca[v as usize] {
                continue;
            }
            let consistent = order[..k].iter().all(|&u| {
                a.multiplicity(u, v) == b.multiplicity(map[u as usize], w)
            });
            if !consistent {
                continue;
            }
            map[v as usize] = w;
            used[w as usize] = true;
            if extend(k + 1, order, a, b, ca, cb, map, used) {
                return true;
            }
            used[w as usize] = false;
        }
        map[v as usize] = Vertex::MAX;
        false
    }

    if extend(0, &order, a, b, ca, cb, &mut map, &mut used) {
        Ok(Some(map))
    } else {
        Ok(None)
    }
}

/// Checks that `map` carries `a` onto `b` with multiplicities.
pub fn is_isomorphism(a: &MultiGraph, b: &MultiGraph, map: &[Vertex]) -> bool {
    if a.order() != b.order() || map.len() != a.order() || a.size() != b.size() {
        return false;
    }
    let mut seen = vec![false; b.order()];
    for &w in map {
        if w as usize >= b.order() || std::mem::replace(&mut seen[w as usize], true) {
            return false;
        }
    }
    a.edge_multiset()
        .iter()
        .all(|&(u, v, m)| b.multiplicity(map[u as usize], map[v as usize]) == m)
}

/// Canonical code of a simple graph with at most 11 vertices: the least
/// upper-triangle bit string over relabelings that respect the refined
/// coloring. Equal codes iff isomorphic.
pub fn canonical_code(g: &MultiGraph) -> Result<(usize, u64)> {
    let n = g.order();
    if n > 11 {
        return Err(Error::limit("canonical code order", n as u64, 11));
    }
    if !g.is_simple() {
        return Err(Error::NotSimple);
    }
    let colors = refine(&[g]).remove(0);
    let mut classes: Vec<(usize, Vec<Vertex>)> = Vec::new();
    let mut sorted: Vec<Vertex> = g.vertices().collect();
    sorted.sort_by_key(|&v| colors[v as usize]);
    for v in sorted {
        match classes.last_mut() {
            Some((c, members)) if *c == colors[v as usize] => members.push(v),
            _ => classes.push((colors[v as usize], vec![v])),
        }
    }
    let adj: Vec<u32> = g
        .vertices()
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &(w, _)| m | 1 << w))
        .collect();
    // position -> original vertex; positions are filled class by class.
    let mut slots: Vec<Vertex> = Vec::with_capacity(n);
    let mut best = u64::MAX;

    fn code(slots: &[Vertex], adj: &[u32]) -> u64 {
        let mut c = 0u64;
        for j in 1..slots.len() {
            for i in 0..j {
                c = (c << 1) | ((adj[slots[i] as usize] >> slots[j]) & 1) as u64;
            }
        }
        c
    }

    fn permute(
        ci: usize,
        classes: &mut [(usize, Vec<Vertex>)],
        k: usize,
        slots: &mut Vec<Vertex>,
        adj: &[u32],
        best: &mut u64,
    ) {
        if ci == classes.len() {
            *best = (*best).min(code(slots, adj));
            return;
        }
        let len = classes[ci].1.len();
        if k == len {
            permute(ci + 1, classes, 0, slots, adj, best);
            return;
        }
        for i in k..len {
            classes[ci].1.swap(k, i);
            slots.push(classes[ci].1[k]);
            permute(ci, classes, k + 1, slots, adj, best);
            slots.pop();
            classes[ci].1.swap(k, i);
        }
    }

    permute(0, &mut classes, 0, &mut slots, &adj, &mut best);
    Ok((n, best))
}

/// Rebuilds a graph from its canonical code.
pub fn from_canonical_code(code: (usize, u64)) -> Result<MultiGraph> {
    let (n, c) = code;
    let bits = n * n.saturating_sub(1) / 2;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if c >> (bits - 1 - k) & 1 == 1 {
                edges.push((i as Vertex, j as Vertex));
            }
            k += 1;
        }
    }
    MultiGraph::from_edges(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::{cycle, p14, petersen, NamedGraph};

    #[test]
    fn shuffled_petersen() {
        let p = petersen();
        let perm: Vec<Vertex> = vec![3, 7, 1, 9, 0, 4, 8, 2, 6, 5];
        let q = p.relabel(&perm).unwrap();
        let map = are_isomorphic(&p, &q, &Limits::default()).unwrap().unwrap();
        assert!(is_isomorphism(&p, &q, &map));
    }

    #[test]
    fn non_isomorphic_pairs() {
        let l = Limits::default();
        let c4 = cycle(4).unwrap();
        let p4 = NamedGraph::Path(4).build().unwrap();
        assert_eq!(are_isomorphic(&c4, &p4, &l).unwrap(), None);
        assert_eq!(are_isomorphic(&petersen(), &NamedGraph::Cycle(10).build().unwrap(), &l).unwrap(), None);
        assert_eq!(are_isomorphic(&p14(), &petersen(), &l).unwrap(), None);
    }

    #[test]
    fn multiplicity_matters() {
        let a = MultiGraph::from_edge_list(3, &[(0, 1, 2), (1, 2, 1)]).unwrap();
        let b = MultiGraph::from_edge_list(3, &[(0, 1, 1), (1, 2, 2)]).unwrap();
        let c = MultiGraph::from_edge_list(3, &[(0, 1, 1), (0, 2, 2)]).unwrap();
        let l = Limits::default();
        assert!(are_isomorphic(&a, &b, &l).unwrap().is_some());
        assert!(are_isomorphic(&a, &c, &l).unwrap().is_some());
        let d = MultiGraph::from_edge_list(3, &[(0, 1, 1), (1, 2, 1), (0, 2, 1)]).unwrap();
        assert!(are_isomorphic(&a, &d, &l).unwrap().is_none());
    }

    #[test]
    fn canonical_codes_agree_on_relabelings() {
        let p = petersen();
        let q = p.relabel(&[9, 8, 7, 6, 5, 4, 3, 2, 1, 0]).unwrap();
        assert_eq!(canonical_code(&p).unwrap(), canonical_code(&q).unwrap());
        let c = canonical_code(&p).unwrap();
        let back = from_canonical_code(c).unwrap();
        assert!(are_isomorphic(&p, &back, &Limits::default()).unwrap().is_some());
        assert_ne!(
            canonical_code(&cycle(4).unwrap()).unwrap(),
            canonical_code(&NamedGraph::Path(4).build().unwrap()).unwrap()
        );
    }
}
