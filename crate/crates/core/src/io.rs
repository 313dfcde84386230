//! graph6 for simple graphs and a JSON edge-list format that carries
//! multiplicities.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{MultiGraph, Vertex};

const GRAPH6_HEADER: &str = ">>graph6<<";

/// Parses one graph6 line (an optional `>>graph6<<` header is accepted).
pub fn parse_graph6(line: &str) -> Result<MultiGraph> {
    let line = line.trim_end_matches(['\n', '\r']);
    let (skip, body) = match line.strip_prefix(GRAPH6_HEADER) {
        Some(rest) => (GRAPH6_HEADER.len(), rest.as_bytes()),
        None => (0, line.as_bytes()),
    };
    let err = |offset: usize, reason: &str| Error::Graph6 {
        offset: skip + offset,
        reason: reason.to_string(),
    };
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(i, "byte outside the printable range 63..=126"));
        }
    }
    let (n, mut pos) = match body {
        [] => return Err(err(0, "empty line")),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(err(2, "truncated 36-bit vertex count"));
            }
            (rest[..6].iter().fold(0usize, |a, &b| (a << 6) | (b - 63) as usize), 8)
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(err(1, "truncated 18-bit vertex count"));
            }
            (rest[..3].iter().fold(0usize, |a, &b| (a << 6) | (b - 63) as usize), 4)
        }
        [b, ..] => ((b - 63) as usize, 1),
    };
    if n == 0 {
        return Err(err(0, "graph with zero vertices"));
    }
    let bits = n * (n - 1) / 2;
    let need = bits.div_ceil(6);
    if body.len() != pos + need {
        return Err(err(
            body.len().min(pos + need),
            &format!("expected {need} adjacency bytes, found {}", body.len().saturating_sub(pos)),
        ));
    }
    let mut edges = Vec::new();
    let mut k = 0usize;
    'outer: for j in 1..n {
        for i in 0..j {
            let byte = body[pos + k / 6] - 63;
            if byte & (1 << (5 - k % 6)) != 0 {
                edges.push((i as Vertex, j as Vertex));
            }
            k += 1;
            if k == bits {
                break 'outer;
            }
        }
    }
    pos += need;
    if bits % 6 != 0 {
        let last = body[pos - 1] - 63;
        if last & ((1 << (6 - bits % 6)) - 1) != 0 {
            return Err(err(pos - 1, "nonzero padding bits"));
        }
    }
    MultiGraph::from_edges(n, &edges)
}

/// Encodes a simple graph as one graph6 line (no trailing newline).
pub fn emit_graph6(g: &MultiGraph) -> Result<String> {
    if !g.is_simple() {
        return Err(Error::NotSimple);
    }
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n as Vertex {
        for i in 0..j {
            acc = (acc << 1) | g.adjacent(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 is ASCII"))
}

/// JSON multigraph record: `{"n": 4, "edges": [[0, 1, 2], ...], "name": "..."}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonGraph {
    pub n: usize,
    pub edges: Vec<(Vertex, Vertex, u32)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

impl From<&MultiGraph> for JsonGraph {
    fn from(g: &MultiGraph) -> Self {
        JsonGraph {
            n: g.order(),
            edges: g.edge_multiset(),
            name: g.name().map(str::to_string),
        }
    }
}

impl JsonGraph {
    pub fn to_graph(&self) -> Result<MultiGraph> {
        if let Some(&(u, v, _)) = self.edges.iter().find(|e| e.2 == 0) {
            return Err(Error::Json(format!("edge ({u}, {v}) has multiplicity 0")));
        }
        let g = MultiGraph::from_edge_list(self.n, &self.edges)?;
        Ok(match &self.name {
            Some(name) => g.with_name(name.clone()),
            None => g,
        })
    }
}

pub fn to_json(g: &MultiGraph) -> String {
    serde_json::to_string(&JsonGraph::from(g)).expect("plain data serializes")
}

pub fn parse_json(text: &str) -> Result<MultiGraph> {
    let rec: JsonGraph = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
    rec.to_graph()
}

/// Parses a line in either format: JSON when it starts with `{`, graph6 otherwise.
pub fn parse_any(line: &str) -> Result<MultiGraph> {
    let t = line.trim();
    if t.starts_with('{') {
        parse_json(t)
    } else {
        parse_graph6(t)
    }
}

/// graph6 when the graph is simple, JSON otherwise.
pub fn encode_any(g: &MultiGraph) -> String {
    emit_graph6(g).unwrap_or_else(|_| to_json(g))
}

/// Graphviz rendering; parallel edges are drawn individually.
pub fn to_dot(g: &MultiGraph) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "graph {} {{", dot_id(g.name().unwrap_or("G")));
    for v in g.vertices() {
        let _ = writeln!(s, "  {v};");
    }
    for &(u, v) in g.edges() {
        let _ = writeln!(s, "  {u} -- {v};");
    }
    s.push_str("}\n");
    s
}

pub(crate) fn dot_id(raw: &str) -> String {
    format!("\"{}\"", raw.replace('"', "\\\""))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::{cycle, petersen};

    #[test]
    fn c4_round_trip() {
        let c4 = cycle(4).unwrap();
        let line = emit_graph6(&c4).unwrap();
        assert_eq!(line, "Cl");
        let back = parse_graph6(&line).unwrap();
        assert_eq!(back.edges(), c4.edges());
        assert_eq!(emit_graph6(&back).unwrap(), line);
    }

    #[test]
    fn k1() {
        let g = parse_graph6("@").unwrap();
        assert_eq!((g.order(), g.size()), (1, 0));
        assert_eq!(emit_graph6(&g).unwrap(), "@");
    }

    #[test]
    fn known_petersen_line() {
        // Relabeled Petersen as commonly distributed.
        let g = parse_graph6("IheA@GUAo").unwrap();
        assert_eq!((g.order(), g.size()), (10, 15));
        assert!(g.degrees().iter().all(|&d| d == 3));
        let p = emit_graph6(&petersen()).unwrap();
        assert_eq!(parse_graph6(&p).unwrap().edges(), petersen().edges());
    }

    #[test]
    fn header_is_accepted() {
        let g = parse_graph6(">>graph6<<Cl").unwrap();
        assert_eq!(g.size(), 4);
    }

    #[test]
    fn multigraph_emit_is_rejected() {
        let c2 = cycle(2).unwrap();
        assert_eq!(emit_graph6(&c2).unwrap_err(), Error::NotSimple);
        assert!(encode_any(&c2).starts_with('{'));
    }

    #[test]
    fn malformed_lines_report_offsets() {
        match parse_graph6("C l") {
            Err(Error::Graph6 { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("unexpected {other:?}"),
        }
        match parse_graph6("Cll") {
            Err(Error::Graph6 { .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("~").is_err());
    }

    #[test]
    fn json_round_trip_keeps_multiplicity() {
        let g = MultiGraph::from_edge_list(3, &[(0, 1, 2), (1, 2, 1)])
            .unwrap()
            .with_name("x");
        let text = to_json(&g);
        assert_eq!(text, r#"{"n":3,"edges":[[0,1,2],[1,2,1]],"name":"x"}"#);
        assert_eq!(parse_json(&text).unwrap(), g);
        assert!(parse_json(r#"{"n":2,"edges":[[0,0,1]]}"#).is_err());
        assert!(parse_json(r#"{"n":2,"edges":[[0,1,0]]}"#).is_err());
    }
}
