use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::graph::{MultiGraph, Vertex};

/// A subset of a graph's edges, as a bit vector over the canonical edge order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EdgeSubset {
    words: Vec<u64>,
    len: usize,
}

impl EdgeSubset {
    pub fn empty(len: usize) -> Self {
        EdgeSubset {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub fn full(len: usize) -> Self {
        let mut s = Self::empty(len);
        for i in 0..len {
            s.insert(i);
        }
        s
    }

    pub fn from_indices(len: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(len);
        for i in indices {
            s.insert(i);
        }
        s
    }

    /// Number of edges in the ambient graph.
    pub fn universe(&self) -> usize {
        self.len
    }

    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < self.len, "edge index {i} out of range");
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn toggle(&mut self, i: usize) {
        assert!(i < self.len, "edge index {i} out of range");
        self.words[i / 64] ^= 1 << (i % 64);
    }

    /// In-place symmetric difference.
    pub fn xor_with(&mut self, other: &EdgeSubset) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn symmetric_difference(&self, other: &EdgeSubset) -> EdgeSubset {
        let mut out = self.clone();
        out.xor_with(other);
        out
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + b)
            })
        })
    }

    /// Odd-degree vertices of the spanning subgraph with these edges.
    pub fn odd_vertices(&self, g: &MultiGraph) -> Vec<Vertex> {
        let mut parity = vec![false; g.order()];
        for i in self.iter() {
            let (u, v) = g.edges()[i];
            parity[u as usize] ^= true;
            parity[v as usize] ^= true;
        }
        (0..g.order() as Vertex).filter(|&v| parity[v as usize]).collect()
    }

    /// The edges as vertex pairs.
    pub fn pairs(&self, g: &MultiGraph) -> Vec<(Vertex, Vertex)> {
        self.iter().map(|i| g.edges()[i]).collect()
    }
}

impl Serialize for EdgeSubset {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            universe: usize,
            edges: Vec<usize>,
        }
        Repr {
            universe: self.len,
            edges: self.iter().collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for EdgeSubset {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            universe: usize,
            edges: Vec<usize>,
        }
        let r = Repr::deserialize(d)?;
        if let Some(&bad) = r.edges.iter().find(|&&i| i >= r.universe) {
            return Err(serde::de::Error::custom(format!("edge index {bad} out of range")));
        }
        Ok(EdgeSubset::from_indices(r.universe, r.edges))
    }
}
