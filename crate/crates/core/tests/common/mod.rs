//! Independent brute-force references and graph strategies.
#![allow(dead_code)]

use proptest::prelude::*;
use supereuler::{MultiGraph, Vertex};

/// Largest edge count the subset enumerations below accept.
pub const BRUTE_MAX_EDGES: usize = 12;

fn pair(n: usize, a: usize, k: usize) -> (Vertex, Vertex) {
    let u = a % n;
    let v = (u + 1 + k % (n - 1)) % n;
    (u as Vertex, v as Vertex)
}

/// Any loopless multigraph with `n <= max_n` and at most `max_m` edges.
pub fn any_graph(max_n: usize, max_m: usize) -> impl Strategy<Value = MultiGraph> {
    (1..=max_n).prop_flat_map(move |n| {
        let m = if n == 1 { 0..=0 } else { 0..=max_m };
        prop::collection::vec((0..n, 0..n), m).prop_map(move |raw| {
            let edges: Vec<_> = raw.into_iter().map(|(a, k)| pair(n, a, k)).collect();
            MultiGraph::from_edges(n, &edges).unwrap()
        })
    })
}

/// Connected multigraphs: a random spanning tree plus extra edges.
pub fn connected_graph(max_n: usize, max_m: usize) -> impl Strategy<Value = MultiGraph> {
    (1..=max_n).prop_flat_map(move |n| {
        let extra = if n == 1 { 0..=0 } else { 0..=max_m.saturating_sub(n - 1) };
        (
            prop::collection::vec(any::<prop::sample::Index>(), n - 1),
            prop::collection::vec((0..n, 0..n), extra),
        )
            .prop_map(move |(parents, raw)| {
                let mut edges: Vec<(Vertex, Vertex)> = parents
                    .iter()
                    .enumerate()
                    .map(|(i, p)| (p.index(i + 1) as Vertex, (i + 1) as Vertex))
                    .collect();
                edges.extend(raw.into_iter().map(|(a, k)| pair(n, a, k)));
                MultiGraph::from_edges(n, &edges).unwrap()
            })
    })
}

/// Connected simple graphs given by a spanning tree plus a random edge mask.
pub fn connected_simple(max_n: usize) -> impl Strategy<Value = MultiGraph> {
    (1..=max_n).prop_flat_map(|n| {
        (
            prop::collection::vec(any::<prop::sample::Index>(), n - 1),
            prop::collection::vec(any::<bool>(), n * (n - 1) / 2),
        )
            .prop_map(move |(parents, mask)| {
                let mut adj = vec![vec![false; n]; n];
                for (i, p) in parents.iter().enumerate() {
                    let (u, v) = (p.index(i + 1), i + 1);
                    adj[u][v] = true;
                    adj[v][u] = true;
                }
                let mut k = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if mask[k] {
                            adj[u][v] = true;
                            adj[v][u] = true;
                        }
                        k += 1;
                    }
                }
                let edges: Vec<_> = (0..n)
                    .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                    .filter(|&(u, v)| adj[u][v])
                    .map(|(u, v)| (u as Vertex, v as Vertex))
                    .collect();
                MultiGraph::from_edges(n, &edges).unwrap()
            })
    })
}

pub fn find(p: &mut [usize], x: usize) -> usize {
    let mut x = x;
    while p[x] != x {
        p[x] = p[p[x]];
        x = p[x];
    }
    x
}

/// Does the edge set (as indices into `g.edges()`) touch and connect every
/// vertex?
pub fn spans_connected(g: &MultiGraph, chosen: impl Iterator<Item = usize>) -> bool {
    let n = g.order();
    let mut p: Vec<usize> = (0..n).collect();
    let mut parts = n;
    let mut touched = vec![false; n];
    for i in chosen {
        let (u, v) = g.edges()[i];
        touched[u as usize] = true;
        touched[v as usize] = true;
        let (a, b) = (find(&mut p, u as usize), find(&mut p, v as usize));
        if a != b {
            p[a] = b;
            parts -= 1;
        }
    }
    n == 1 || (parts == 1 && touched.iter().all(|&t| t))
}

fn odd_mask(g: &MultiGraph, subset: u32) -> u32 {
    let mut odd = 0u32;
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        if subset >> i & 1 == 1 {
            odd ^= 1 << u;
            odd ^= 1 << v;
        }
    }
    odd
}

/// Raw `2^|E|` search for a spanning connected subgraph with odd set `r`.
pub fn brute_odd_set(g: &MultiGraph, r: u32) -> bool {
    let m = g.size();
    assert!(m <= BRUTE_MAX_EDGES);
    (0u32..1 << m).any(|s| odd_mask(g, s) == r && spans_connected(g, (0..m).filter(|i| s >> i & 1 == 1)))
}

pub fn brute_supereulerian(g: &MultiGraph) -> bool {
    brute_odd_set(g, 0)
}

pub fn brute_collapsible(g: &MultiGraph) -> bool {
    even_sets(g.order()).all(|r| brute_odd_set(g, r))
}

pub fn even_sets(n: usize) -> impl Iterator<Item = u32> {
    (0u32..1 << n).filter(|r| r.count_ones() % 2 == 0)
}

pub fn mask_to_vec(mask: u32) -> Vec<Vertex> {
    (0..32).filter(|i| mask >> i & 1 == 1).collect()
}

/// Minimum number of edges leaving a nonempty proper vertex subset.
pub fn brute_edge_connectivity(g: &MultiGraph) -> Option<u64> {
    let n = g.order();
    if n == 1 {
        return None;
    }
    (1u32..(1 << n) - 1)
        .map(|s| {
            g.edges()
                .iter()
                .filter(|&&(u, v)| (s >> u & 1) != (s >> v & 1))
                .count() as u64
        })
        .min()
}

/// Maximum matching size by exhaustive recursion.
pub fn brute_matching(g: &MultiGraph) -> usize {
    fn go(edges: &[(Vertex, Vertex)], used: u32) -> usize {
        match edges.split_first() {
            None => 0,
            Some((&(u, v), rest)) => {
                let skip = go(rest, used);
                if used >> u & 1 == 0 && used >> v & 1 == 0 {
                    skip.max(1 + go(rest, used | 1 << u | 1 << v))
                } else {
                    skip
                }
            }
        }
    }
    go(g.edges(), 0)
}

/// Shortest-path distances in the underlying simple graph.
pub fn distances(g: &MultiGraph) -> Vec<Vec<Option<usize>>> {
    let n = g.order();
    (0..n)
        .map(|s| {
            let mut d = vec![None; n];
            d[s] = Some(0);
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &(w, _) in g.neighbors(u as Vertex) {
                    if d[w as usize].is_none() {
                        d[w as usize] = Some(d[u].unwrap() + 1);
                        queue.push_back(w as usize);
                    }
                }
            }
            d
        })
        .collect()
}
