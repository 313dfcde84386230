//! Blow-ups: every base vertex is replaced by a small dense graph and every
//! base edge becomes one cross edge between designated attachment vertices.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{ContractionMap, MultiGraph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ReplacementKind {
    Single,
    /// `K_s`.
    Complete,
    /// `K_s` minus the edge between its last two vertices.
    CompleteMinusEdge,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Replacement {
    pub kind: ReplacementKind,
    pub size: usize,
}

impl Replacement {
    pub fn single() -> Self {
        Replacement {
            kind: ReplacementKind::Single,
            size: 1,
        }
    }

    pub fn complete(size: usize) -> Self {
        Replacement {
            kind: ReplacementKind::Complete,
            size,
        }
    }

    pub fn complete_minus_edge(size: usize) -> Self {
        Replacement {
            kind: ReplacementKind::CompleteMinusEdge,
            size,
        }
    }

    fn validate(&self) -> Result<()> {
        let ok = match self.kind {
            ReplacementKind::Single => self.size == 1,
            ReplacementKind::Complete => self.size >= 1,
            ReplacementKind::CompleteMinusEdge => self.size >= 2,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidParameter(format!(
                "replacement {:?} of size {} is not allowed",
                self.kind, self.size
            )))
        }
    }

    fn local_edges(&self) -> Vec<(Vertex, Vertex)> {
        let s = self.size as Vertex;
        let mut e = Vec::new();
        if self.kind == ReplacementKind::Single {
            return e;
        }
        for u in 0..s {
            for v in u + 1..s {
                e.push((u, v));
            }
        }
        if self.kind == ReplacementKind::CompleteMinusEdge {
            e.retain(|&x| x != (s - 2, s - 1));
        }
        e
    }
}

/// A base graph with one replacement per vertex.
///
/// `attachments[v][k]` is the local vertex (inside the replacement of `v`)
/// carrying the `k`-th base edge incident to `v`, where incident edges are
/// taken in the base graph's canonical edge order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlowUpSpec {
    pub base: MultiGraph,
    pub replacements: Vec<Replacement>,
    pub attachments: Vec<Vec<Vertex>>,
}

impl BlowUpSpec {
    /// Same replacement everywhere, attachments assigned round-robin.
    pub fn uniform(base: MultiGraph, replacement: Replacement) -> Self {
        let replacements = vec![replacement; base.order()];
        Self::with_round_robin(base, replacements)
    }

    /// Per-vertex replacements, attachments assigned round-robin so that
    /// distinct base edges use distinct local vertices whenever possible.
    /// In `K_s - e` the two endpoints of the missing edge are used first.
    pub fn with_round_robin(base: MultiGraph, replacements: Vec<Replacement>) -> Self {
        let attachments = base
            .vertices()
            .map(|v| {
                let r = replacements.get(v as usize).copied().unwrap_or_else(Replacement::single);
                let s = r.size.max(1);
                let order: Vec<Vertex> = if r.kind == ReplacementKind::CompleteMinusEdge && s >= 2 {
                    (s - 2..s).chain(0..s - 2).map(|x| x as Vertex).collect()
                } else {
                    (0..s as Vertex).collect()
                };
                (0..base.degree(v)).map(|k| order[k % s]).collect()
            })
            .collect();
        BlowUpSpec {
            base,
            replacements,
            attachments,
        }
    }
}

/// Builds the blow-up graph.
pub fn blow_up(spec: &BlowUpSpec) -> Result<MultiGraph> {
    Ok(blow_up_with_classes(spec)?.0)
}

/// Builds the blow-up and the map sending each base vertex to the vertices
/// of its replacement.
pub fn blow_up_with_classes(spec: &BlowUpSpec) -> Result<(MultiGraph, ContractionMap)> {
    let base = &spec.base;
    if spec.replacements.len() != base.order() || spec.attachments.len() != base.order() {
        return Err(Error::InvalidParameter(
            "blow-up needs one replacement and one attachment list per base vertex".into(),
        ));
    }
    let mut offset = Vec::with_capacity(base.order());
    let mut total = 0usize;
    for r in &spec.replacements {
        r.validate()?;
        offset.push(total as Vertex);
        total += r.size;
    }
    for v in base.vertices() {
        let att = &spec.attachments[v as usize];
        if att.len() != base.degree(v) {
            return Err(Error::InvalidParameter(format!(
                "vertex {v} has degree {} but {} attachments",
                base.degree(v),
                att.len()
            )));
        }
        let s = spec.replacements[v as usize].size as Vertex;
        if let Some(&bad) = att.iter().find(|&&a| a >= s) {
            return Err(Error::InvalidParameter(format!(
                "attachment {bad} lies outside the replacement of vertex {v} (size {s})"
            )));
        }
    }
    let mut edges = Vec::new();
    for v in base.vertices() {
        let o = offset[v as usize];
        for (a, b) in spec.replacements[v as usize].local_edges() {
            edges.push((o + a, o + b));
        }
    }
    let mut used = vec![0usize; base.order()];
    for &(u, v) in base.edges() {
        let au = spec.attachments[u as usize][used[u as usize]];
        let av = spec.attachments[v as usize][used[v as usize]];
        used[u as usize] += 1;
        used[v as usize] += 1;
        edges.push((offset[u as usize] + au, offset[v as usize] + av));
    }
    let g = MultiGraph::from_edges(total, &edges)?;
    let classes = base
        .vertices()
        .map(|v| {
            let o = offset[v as usize];
            (o..o + spec.replacements[v as usize].size as Vertex).collect()
        })
        .collect();
    let map = ContractionMap::from_classes(classes, total)?;
    Ok((g, map))
}
