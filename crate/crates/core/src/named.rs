//! Named graph constructors.
//!
//! `P14` and `P16` are transcribed from the coordinates of the original
//! line drawings. Both are 3-regular and contract onto the Petersen graph by
//! collapsing one gadget (the 5-vertex `K_{2,3}` for `P14`, the 7-vertex cube
//! minus a vertex for `P16`); `harness::validate_canonical` checks the full
//! property list before either is trusted.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{MultiGraph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NamedGraph {
    Petersen,
    P14,
    P16,
    /// Complete graph `K_n`.
    Complete(usize),
    /// Complete bipartite graph `K_{2,t}`.
    K2t(usize),
    /// Cycle `C_n`; `C_2` is a doubled edge.
    Cycle(usize),
    /// Path on `n` vertices.
    Path(usize),
    /// Star `K_{1,t}` with every edge doubled.
    Phi(usize),
    /// Star `K_{1,t}`.
    Star(usize),
    /// `K_{3,3}` minus one edge.
    K33MinusEdge,
}

impl NamedGraph {
    pub fn build(self) -> Result<MultiGraph> {
        let g = match self {
            NamedGraph::Petersen => petersen(),
            NamedGraph::P14 => p14(),
            NamedGraph::P16 => p16(),
            NamedGraph::Complete(n) => complete(n)?,
            NamedGraph::K2t(t) => {
                at_least("k2t", t, 1)?;
                complete_bipartite(2, t)
            }
            NamedGraph::Cycle(n) => cycle(n)?,
            NamedGraph::Path(n) => {
                at_least("path", n, 1)?;
                let e: Vec<_> = (1..n as Vertex).map(|i| (i - 1, i)).collect();
                MultiGraph::from_edges(n, &e)?
            }
            NamedGraph::Phi(t) => {
                at_least("phi", t, 1)?;
                let e: Vec<_> = (1..=t as Vertex).map(|i| (0, i, 2)).collect();
                MultiGraph::from_edge_list(t + 1, &e)?
            }
            NamedGraph::Star(t) => {
                at_least("star", t, 1)?;
                complete_bipartite(1, t)
            }
            NamedGraph::K33MinusEdge => {
                let mut e = complete_bipartite(3, 3).edges().to_vec();
                e.retain(|&x| x != (0, 3));
                MultiGraph::from_edges(6, &e)?
            }
        };
        Ok(g.with_name(self.to_string()))
    }
}

fn at_least(what: &str, value: usize, min: usize) -> Result<()> {
    if value < min {
        return Err(Error::InvalidParameter(format!(
            "{what} needs a parameter of at least {min}, got {value}"
        )));
    }
    Ok(())
}

impl fmt::Display for NamedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedGraph::Petersen => write!(f, "petersen"),
            NamedGraph::P14 => write!(f, "p14"),
            NamedGraph::P16 => write!(f, "p16"),
            NamedGraph::Complete(n) => write!(f, "k({n})"),
            NamedGraph::K2t(t) => write!(f, "k2t({t})"),
            NamedGraph::Cycle(n) => write!(f, "cycle({n})"),
            NamedGraph::Path(n) => write!(f, "path({n})"),
            NamedGraph::Phi(t) => write!(f, "phi({t})"),
            NamedGraph::Star(t) => write!(f, "star({t})"),
            NamedGraph::K33MinusEdge => write!(f, "k33e"),
        }
    }
}

impl FromStr for NamedGraph {
    type Err = Error;

    /// Accepts `petersen`, `p14`, `p16`, `k33e`, and `name(param)` /
    /// `name:param` for `k`, `k2t`, `cycle`, `path`, `phi`, `star`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        let (head, param) = match s.find(['(', ':']) {
            Some(i) => {
                let raw = s[i + 1..].trim_end_matches(')');
                let p: usize = raw
                    .trim()
                    .parse()
                    .map_err(|_| Error::InvalidParameter(format!("bad parameter in `{s}`")))?;
                (&s[..i], Some(p))
            }
            None => (s.as_str(), None),
        };
        let need = || param.ok_or_else(|| Error::InvalidParameter(format!("`{head}` needs a parameter")));
        Ok(match head {
            "petersen" | "p" => NamedGraph::Petersen,
            "p14" => NamedGraph::P14,
            "p16" => NamedGraph::P16,
            "k33e" | "k33-e" => NamedGraph::K33MinusEdge,
            "k" | "complete" => NamedGraph::Complete(need()?),
            "k2t" => NamedGraph::K2t(need()?),
            "cycle" | "c" => NamedGraph::Cycle(need()?),
            "path" => NamedGraph::Path(need()?),
            "phi" => NamedGraph::Phi(need()?),
            "star" => NamedGraph::Star(need()?),
            _ => return Err(Error::UnknownName(s.clone())),
        })
    }
}

/// Parses and builds a named graph.
pub fn construct_named(name: &str) -> Result<MultiGraph> {
    name.parse::<NamedGraph>()?.build()
}

pub fn petersen() -> MultiGraph {
    let mut e = Vec::with_capacity(15);
    for i in 0..5 {
        e.push((i, (i + 1) % 5));
        e.push((i, i + 5));
        e.push((5 + i, 5 + (i + 2) % 5));
    }
    MultiGraph::from_edges(10, &e)
        .expect("static edge list")
        .with_name("petersen")
}

/// Ids 10 and 11 are the two hubs of the `K_{2,3}` gadget, 3/8/9 its
/// three attachment vertices.
pub fn p14() -> MultiGraph {
    const E: [(Vertex, Vertex); 21] = [
        (0, 1),
        (10, 8),
        (10, 3),
        (10, 9),
        (11, 3),
        (11, 9),
        (11, 8),
        (13, 8),
        (2, 3),
        (0, 5),
        (0, 4),
        (12, 4),
        (6, 12),
        (12, 7),
        (6, 2),
        (1, 7),
        (1, 2),
        (7, 13),
        (5, 6),
        (5, 13),
        (4, 9),
    ];
    MultiGraph::from_edges(14, &E)
        .expect("static edge list")
        .with_name("p14")
}

/// Ids 9..=15 form the cube-minus-a-vertex gadget; 0..=8 are the Petersen
/// remnant.
pub fn p16() -> MultiGraph {
    const E: [(Vertex, Vertex); 24] = [
        (0, 3),
        (0, 1),
        (0, 8),
        (1, 2),
        (1, 6),
        (3, 5),
        (3, 4),
        (4, 6),
        (4, 9),
        (5, 7),
        (5, 2),
        (7, 8),
        (7, 6),
        (9, 10),
        (9, 15),
        (11, 2),
        (11, 12),
        (11, 10),
        (13, 8),
        (13, 12),
        (13, 15),
        (14, 12),
        (14, 10),
        (14, 15),
    ];
    MultiGraph::from_edges(16, &E)
        .expect("static edge list")
        .with_name("p16")
}

pub fn complete(n: usize) -> Result<MultiGraph> {
    at_least("k", n, 1)?;
    let mut e = Vec::new();
    for u in 0..n as Vertex {
        for v in u + 1..n as Vertex {
            e.push((u, v));
        }
    }
    MultiGraph::from_edges(n, &e)
}

/// `K_{a,b}` with the `a` side first.
pub fn complete_bipartite(a: usize, b: usize) -> MultiGraph {
    let mut e = Vec::new();
    for u in 0..a as Vertex {
        for v in 0..b as Vertex {
            e.push((u, a as Vertex + v));
        }
    }
    MultiGraph::from_edges(a + b, &e).expect("valid ids")
}

pub fn cycle(n: usize) -> Result<MultiGraph> {
    at_least("cycle", n, 2)?;
    let e: Vec<_> = (0..n as Vertex)
        .map(|i| (i, (i + 1) % n as Vertex))
        .collect();
    MultiGraph::from_edges(n, &e)
}
