use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{MultiGraph, Vertex};
use crate::invariants::{edge_connectivity, Extended};
use crate::iso::{canonical_code, from_canonical_code};

/// Largest order accepted by [`enumerate_small_graphs`].
pub const MAX_ENUMERATION_ORDER: usize = 7;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationFilter {
    pub connected: bool,
    pub min_degree: usize,
    /// Upper bound on the number of degree-2 vertices.
    pub max_d2_count: Option<usize>,
    pub edge_connectivity_min: Option<u64>,
}

impl EnumerationFilter {
    pub fn connected() -> Self {
        EnumerationFilter {
            connected: true,
            ..Default::default()
        }
    }

    pub fn accepts(&self, g: &MultiGraph) -> bool {
        if self.connected && !g.is_connected() {
            return false;
        }
        if g.min_degree() < self.min_degree {
            return false;
        }
        if let Some(k) = self.max_d2_count {
            if g.degrees().iter().filter(|&&d| d == 2).count() > k {
                return false;
            }
        }
        if let Some(k) = self.edge_connectivity_min {
            if edge_connectivity(g) < Extended::Finite(k) {
                return false;
            }
        }
        true
    }
}

/// Canonical codes of all simple graphs on `n` vertices, by adding one
/// vertex at a time and deduplicating with canonical codes.
fn all_codes(n: usize) -> Result<BTreeSet<(usize, u64)>> {
    let mut level: BTreeSet<(usize, u64)> = BTreeSet::from([canonical_code(&MultiGraph::empty(1)?)?]);
    for k in 2..=n {
        let mut next = BTreeSet::new();
        for &code in &level {
            let base = from_canonical_code(code)?;
            let new = (k - 1) as Vertex;
            for mask in 0u32..(1 << (k - 1)) {
                let mut edges = base.edges().to_vec();
                edges.extend((0..new).filter(|&v| mask >> v & 1 == 1).map(|v| (v, new)));
                next.insert(canonical_code(&MultiGraph::from_edges(k, &edges)?)?);
            }
        }
        level = next;
    }
    Ok(level)
}

/// Every simple graph on `n` vertices passing `filter`, one per isomorphism
/// class, in canonical-code order.
pub fn enumerate_small_graphs(n: usize, filter: &EnumerationFilter) -> Result<Vec<MultiGraph>> {
    if n == 0 || n > MAX_ENUMERATION_ORDER {
        return Err(Error::InvalidParameter(format!(
            "enumeration supports 1 <= n <= {MAX_ENUMERATION_ORDER}, got {n}; load larger graphs from a corpus file"
        )));
    }
    let mut out = Vec::new();
    for code in all_codes(n)? {
        let g = from_canonical_code(code)?.with_name(format!("n{}-{:x}", code.0, code.1));
        if filter.accepts(&g) {
            out.push(g);
        }
    }
    Ok(out)
}

/// [`enumerate_small_graphs`] for every order from 1 to `n_max`.
pub fn enumerate_up_to(n_max: usize, filter: &EnumerationFilter) -> Result<Vec<MultiGraph>> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        out.extend(enumerate_small_graphs(n, filter)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn connected_counts() {
        let counts: Vec<usize> = (1..=6)
            .map(|n| enumerate_small_graphs(n, &EnumerationFilter::connected()).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn total_counts() {
        let counts: Vec<usize> = (1..=6)
            .map(|n| enumerate_small_graphs(n, &EnumerationFilter::default()).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn order_limit() {
        assert!(enumerate_small_graphs(8, &EnumerationFilter::default()).is_err());
        assert!(enumerate_small_graphs(0, &EnumerationFilter::default()).is_err());
    }

    #[test]
    fn filters() {
        let f = EnumerationFilter {
            connected: true,
            min_degree: 3,
            ..Default::default()
        };
        // K_4 is the only connected graph on 4 vertices with minimum degree 3.
        assert_eq!(enumerate_small_graphs(4, &f).unwrap().len(), 1);
        let f = EnumerationFilter {
            connected: true,
            edge_connectivity_min: Some(3),
            ..Default::default()
        };
        assert_eq!(enumerate_small_graphs(5, &f).unwrap().len(), 3);
    }
}
