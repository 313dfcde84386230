//! Degree parameters, edge connectivity, girth, matchings with a
//! Berge-Tutte certificate, and small structural predicates.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{MultiGraph, Vertex};
use crate::limits::Limits;
use crate::oracle::reach;

/// A nonnegative integer or the `∞` sentinel used when a parameter has no
/// qualifying pair or set. Serialized as a number or the string `"inf"`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Extended {
    Finite(u64),
    Infinite,
}

impl Extended {
    pub fn finite(self) -> Option<u64> {
        match self {
            Extended::Finite(k) => Some(k),
            Extended::Infinite => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Extended::Finite(_))
    }

    fn from_min(v: Option<u64>) -> Self {
        v.map_or(Extended::Infinite, Extended::Finite)
    }
}

impl fmt::Display for Extended {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extended::Finite(k) => write!(f, "{k}"),
            Extended::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Extended {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Extended::Finite(k) => s.serialize_u64(*k),
            Extended::Infinite => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Extended {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Num(u64),
            Str(String),
        }
        match Repr::deserialize(d)? {
            Repr::Num(k) => Ok(Extended::Finite(k)),
            Repr::Str(s) if s == "inf" => Ok(Extended::Infinite),
            Repr::Str(s) => Err(serde::de::Error::custom(format!("expected a number or \"inf\", got {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeProfile {
    pub delta: u64,
    pub sigma2: Extended,
    /// `σ_t` for each requested `t`.
    pub sigma_t: BTreeMap<usize, Extended>,
    pub delta_f: Extended,
    pub sigma2_bar: Extended,
    pub delta_l: Extended,
}

/// All degree parameters; degrees count multiplicity, adjacency ignores it.
pub fn degree_params(g: &MultiGraph, t_values: &[usize]) -> Result<DegreeProfile> {
    if let Some(&t) = t_values.iter().find(|&&t| t < 2) {
        return Err(Error::InvalidParameter(format!("sigma_t needs t >= 2, got {t}")));
    }
    let d: Vec<u64> = g.degrees().into_iter().map(|x| x as u64).collect();
    let n = g.order() as Vertex;
    let mut sigma2 = None::<u64>;
    let mut delta_f = None::<u64>;
    for u in 0..n {
        for v in u + 1..n {
            if g.adjacent(u, v) {
                continue;
            }
            let s = d[u as usize] + d[v as usize];
            sigma2 = Some(sigma2.map_or(s, |b| b.min(s)));
            if common_neighbor(g, u, v) {
                let mx = d[u as usize].max(d[v as usize]);
                delta_f = Some(delta_f.map_or(mx, |b| b.min(mx)));
            }
        }
    }
    let mut sigma2_bar = None::<u64>;
    let mut delta_l = None::<u64>;
    for &(u, v) in g.edges() {
        let (a, b) = (d[u as usize], d[v as usize]);
        sigma2_bar = Some(sigma2_bar.map_or(a + b, |x| x.min(a + b)));
        delta_l = Some(delta_l.map_or(a.max(b), |x| x.min(a.max(b))));
    }
    let sigma_t = t_values
        .iter()
        .map(|&t| (t, sigma_t(g, t)))
        .collect();
    Ok(DegreeProfile {
        delta: d.iter().copied().min().unwrap_or(0),
        sigma2: Extended::from_min(sigma2),
        sigma_t,
        delta_f: Extended::from_min(delta_f),
        sigma2_bar: Extended::from_min(sigma2_bar),
        delta_l: Extended::from_min(delta_l),
    })
}

fn common_neighbor(g: &MultiGraph, u: Vertex, v: Vertex) -> bool {
    g.neighbors(u).iter().any(|&(w, _)| g.adjacent(w, v))
}

/// Least degree sum over independent `t`-sets, by branch and bound over
/// vertices in increasing degree order.
fn sigma_t(g: &MultiGraph, t: usize) -> Extended {
    let mut order: Vec<Vertex> = g.vertices().collect();
    order.sort_by_key(|&v| (g.degree(v), v));
    let deg: Vec<u64> = order.iter().map(|&v| g.degree(v) as u64).collect();
    let mut best: Option<u64> = None;
    let mut chosen: Vec<Vertex> = Vec::with_capacity(t);

    fn go(
        g: &MultiGraph,
        order: &[Vertex],
        deg: &[u64],
        t: usize,
        from: usize,
        sum: u64,
        chosen: &mut Vec<Vertex>,
        best: &mut Option<u64>,
    ) {
        if chosen.len() == t {
            *best = Some(best.map_or(sum, |b| b.min(sum)));
            return;
        }
        let need = (t - chosen.len()) as u64;
        for i in from..order.len() {
            if order.len() - i < need as usize {
                return;
            }
            if let Some(b) = *best {
                if sum + need * deg[i] >= b {
                    return;
                }
            }
            let v = order[i];
            if chosen.iter().any(|&c| g.adjacent(c, v)) {
                continue;
            }
            chosen.push(v);
            go(g, order, deg, t, i + 1, sum + deg[i], chosen, best);
            chosen.pop();
        }
    }
    go(g, &order, &deg, t, 0, 0, &mut chosen, &mut best);
    Extended::from_min(best)
}

/// Minimum edge cut, with parallel edges counted; `∞` for a single vertex.
pub fn edge_connectivity(g: &MultiGraph) -> Extended {
    let n = g.order();
    if n == 1 {
        return Extended::Infinite;
    }
    if !g.is_connected() {
        return Extended::Finite(0);
    }
    let mut cap = vec![vec![0i64; n]; n];
    for &(u, v) in g.edges() {
        cap[u as usize][v as usize] += 1;
        cap[v as usize][u as usize] += 1;
    }
    let mut best = g.min_degree() as i64;
    for t in 1..n {
        best = best.min(max_flow(&cap, 0, t, best));
    }
    Extended::Finite(best as u64)
}

/// Edmonds-Karp, stopping once the flow reaches `cutoff`.
fn max_flow(cap: &[Vec<i64>], s: usize, t: usize, cutoff: i64) -> i64 {
    let n = cap.len();
    let mut res: Vec<Vec<i64>> = cap.to_vec();
    let mut flow = 0;
    while flow < cutoff {
        let mut prev = vec![usize::MAX; n];
        prev[s] = s;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            if x == t {
                break;
            }
            for y in 0..n {
                if res[x][y] > 0 && prev[y] == usize::MAX {
                    prev[y] = x;
                    queue.push_back(y);
                }
            }
        }
        if prev[t] == usize::MAX {
            break;
        }
        let mut y = t;
        while y != s {
            let x = prev[y];
            res[x][y] -= 1;
            res[y][x] += 1;
            y = x;
        }
        flow += 1;
    }
    flow
}

/// Shortest cycle length; a parallel pair is a 2-cycle; `∞` for forests.
pub fn girth(g: &MultiGraph) -> Extended {
    if !g.is_simple() {
        return Extended::Finite(2);
    }
    let n = g.order();
    let mut best: Option<u64> = None;
    for root in g.vertices() {
        let mut dist = vec![u64::MAX; n];
        let mut parent = vec![Vertex::MAX; n];
        dist[root as usize] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &(w, _) in g.neighbors(u) {
                if dist[w as usize] == u64::MAX {
                    dist[w as usize] = dist[u as usize] + 1;
                    parent[w as usize] = u;
                    queue.push_back(w);
                } else if parent[u as usize] != w {
                    let len = dist[u as usize] + dist[w as usize] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    Extended::from_min(best)
}

/// A maximum matching by Edmonds' blossom algorithm.
pub fn maximum_matching(g: &MultiGraph) -> Vec<(Vertex, Vertex)> {
    const NONE: usize = usize::MAX;
    let n = g.order();
    let adj: Vec<Vec<usize>> = g
        .vertices()
        .map(|v| g.neighbors(v).iter().map(|&(w, _)| w as usize).collect())
        .collect();
    let mut mate = vec![NONE; n];
    let mut p = vec![NONE; n];
    let mut base: Vec<usize> = (0..n).collect();
    let mut used = vec![false; n];
    let mut blossom = vec![false; n];

    fn lca(mate: &[usize], base: &[usize], p: &[usize], mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; mate.len()];
        loop {
            a = base[a];
            seen[a] = true;
            if mate[a] == NONE {
                break;
            }
            a = p[mate[a]];
        }
        loop {
            b = base[b];
            if seen[b] {
                return b;
            }
            b = p[mate[b]];
        }
    }

    fn mark_path(
        mate: &[usize],
        base: &[usize],
        p: &mut [usize],
        blossom: &mut [bool],
        mut v: usize,
        b: usize,
        mut child: usize,
    ) {
        while base[v] != b {
            blossom[base[v]] = true;
            blossom[base[mate[v]]] = true;
            p[v] = child;
            child = mate[v];
            v = p[mate[v]];
        }
    }

    for root in 0..n {
        if mate[root] != NONE {
            continue;
        }
        p.fill(NONE);
        used.fill(false);
        for (i, b) in base.iter_mut().enumerate() {
            *b = i;
        }
        used[root] = true;
        let mut queue = VecDeque::from([root]);
        let mut end = NONE;
        'bfs: while let Some(v) = queue.pop_front() {
            for &to in &adj[v] {
                if base[v] == base[to] || mate[v] == to {
                    continue;
                }
                if to == root || (mate[to] != NONE && p[mate[to]] != NONE) {
                    let cur = lca(&mate, &base, &p, v, to);
                    blossom.fill(false);
                    mark_path(&mate, &base, &mut p, &mut blossom, v, cur, to);
                    mark_path(&mate, &base, &mut p, &mut blossom, to, cur, v);
                    for i in 0..n {
                        if blossom[base[i]] {
                            base[i] = cur;
                            if !used[i] {
                                used[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if p[to] == NONE {
                    p[to] = v;
                    if mate[to] == NONE {
                        end = to;
                        break 'bfs;
                    }
                    used[mate[to]] = true;
                    queue.push_back(mate[to]);
                }
            }
        }
        let mut v = end;
        while v != NONE {
            let pv = p[v];
            let ppv = mate[pv];
            mate[v] = pv;
            mate[pv] = v;
            v = ppv;
        }
    }
    (0..n)
        .filter(|&v| mate[v] != NONE && v < mate[v])
        .map(|v| (v as Vertex, mate[v] as Vertex))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchingCertificate {
    pub matching_number: usize,
    pub matching: Vec<(Vertex, Vertex)>,
    /// `max over S of q(G - S) - |S|`.
    pub deficiency: usize,
    /// The lexicographically least maximizing `S`.
    pub separator: Vec<Vertex>,
    /// Odd components of `G - separator`.
    pub odd_components: usize,
}

/// Number of odd components of `G - S`, with `S` and the graph as bitmasks.
fn odd_components(masks: &[u64], removed: u64) -> usize {
    let n = masks.len();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut left = all & !removed;
    let alive: Vec<u64> = masks.iter().map(|m| m & !removed).collect();
    let mut odd = 0;
    while left != 0 {
        let start = left & left.wrapping_neg();
        let comp = reach(&alive, start);
        if comp.count_ones() % 2 == 1 {
            odd += 1;
        }
        left &= !comp;
    }
    odd
}

/// Berge-Tutte deficiency by scanning every vertex subset.
pub fn berge_tutte_deficiency(g: &MultiGraph, limits: &Limits) -> Result<(usize, Vec<Vertex>, usize)> {
    let n = g.order();
    if n > limits.max_matching_n || n > 63 {
        return Err(Error::limit("matching scan order", n as u64, limits.max_matching_n as u64));
    }
    let masks = g.neighbor_masks();
    let mut best: Option<(i64, Vec<Vertex>, usize)> = None;
    for s in 0u64..(1u64 << n) {
        let q = odd_components(&masks, s);
        let val = q as i64 - s.count_ones() as i64;
        let better = match &best {
            None => true,
            Some((b, set, _)) => {
                val > *b || (val == *b && bits(s).as_slice() < set.as_slice())
            }
        };
        if better {
            best = Some((val, bits(s), q));
        }
    }
    let (val, set, q) = best.expect("the empty set is scanned");
    Ok((val.max(0) as usize, set, q))
}

fn bits(mut s: u64) -> Vec<Vertex> {
    let mut out = Vec::with_capacity(s.count_ones() as usize);
    while s != 0 {
        out.push(s.trailing_zeros());
        s &= s - 1;
    }
    out
}

/// Maximum matching together with a Berge-Tutte separator; fails with a
/// certificate error if `2α' + t != n`.
pub fn matching_number(g: &MultiGraph, limits: &Limits) -> Result<MatchingCertificate> {
    let (deficiency, separator, odd) = berge_tutte_deficiency(g, limits)?;
    let matching = maximum_matching(g);
    let size = matching.len();
    if 2 * size + deficiency != g.order() {
        return Err(Error::Certificate(format!(
            "matching of size {size} and deficiency {deficiency} do not satisfy 2a' + t = n = {}",
            g.order()
        )));
    }
    Ok(MatchingCertificate {
        matching_number: size,
        matching,
        deficiency,
        separator,
        odd_components: odd,
    })
}

pub fn is_independent_set(g: &MultiGraph, s: &[Vertex]) -> Result<bool> {
    for &v in s {
        g.check_vertex(v)?;
    }
    Ok(s.iter()
        .enumerate()
        .all(|(i, &u)| s[i + 1..].iter().all(|&v| u != v && !g.adjacent(u, v))))
}

/// Vertices of degree exactly `i`.
pub fn degree_class(g: &MultiGraph, i: usize) -> Vec<Vertex> {
    g.vertices().filter(|&v| g.degree(v) == i).collect()
}

/// A 2-coloring `(X, Y)` with the least vertex of each component in `X`.
pub fn bipartition(g: &MultiGraph) -> Option<(Vec<Vertex>, Vec<Vertex>)> {
    let n = g.order();
    let mut side: Vec<Option<bool>> = vec![None; n];
    for root in g.vertices() {
        if side[root as usize].is_some() {
            continue;
        }
        side[root as usize] = Some(false);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let su = side[u as usize].expect("colored");
            for &(w, _) in g.neighbors(u) {
                match side[w as usize] {
                    None => {
                        side[w as usize] = Some(!su);
                        queue.push_back(w);
                    }
                    Some(sw) if sw == su => return None,
                    Some(_) => {}
                }
            }
        }
    }
    let x = g.vertices().filter(|&v| side[v as usize] == Some(false)).collect();
    let y = g.vertices().filter(|&v| side[v as usize] == Some(true)).collect();
    Some((x, y))
}
