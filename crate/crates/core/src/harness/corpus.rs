use std::fs::File;
use std::io::{BufRead, BufReader, Read};
use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::blowup::{blow_up, BlowUpSpec, Replacement, ReplacementKind};
use crate::error::Result;
use crate::graph::{MultiGraph, Vertex};
use crate::harness::enumerate::{enumerate_up_to, EnumerationFilter};
use crate::io::parse_any;
use crate::named::{p14, p16, petersen};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusItem {
    pub graph: MultiGraph,
    /// Where the graph came from: a file line, an enumeration, a seed.
    pub provenance: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusDefect {
    pub line: usize,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CorpusEntry {
    Graph(CorpusItem),
    Defect(CorpusDefect),
}

/// Lazily parses one graph per line (graph6 or JSON); blank lines and lines
/// starting with `#` are skipped, malformed lines become defects.
pub fn ingest_reader<R: Read>(reader: R, source: &str) -> impl Iterator<Item = CorpusEntry> {
    let source = source.to_string();
    BufReader::new(reader)
        .lines()
        .enumerate()
        .filter_map(move |(i, line)| {
            let line_no = i + 1;
            let line = match line {
                Ok(l) => l,
                Err(e) => {
                    return Some(CorpusEntry::Defect(CorpusDefect {
                        line: line_no,
                        reason: e.to_string(),
                    }))
                }
            };
            let t = line.trim();
            if t.is_empty() || t.starts_with('#') {
                return None;
            }
            Some(match parse_any(t) {
                Ok(graph) => CorpusEntry::Graph(CorpusItem {
                    graph,
                    provenance: format!("{source}:{line_no}"),
                }),
                Err(e) => CorpusEntry::Defect(CorpusDefect {
                    line: line_no,
                    reason: e.to_string(),
                }),
            })
        })
}

pub fn ingest_corpus(path: &Path) -> Result<impl Iterator<Item = CorpusEntry>> {
    let file = File::open(path)?;
    Ok(ingest_reader(file, &path.display().to_string()))
}

/// A finite, ordered corpus with a descriptor for reports.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Corpus {
    pub descriptor: String,
    pub items: Vec<CorpusItem>,
    pub defects: Vec<CorpusDefect>,
    pub seed: Option<u64>,
}

impl Corpus {
    pub fn new(descriptor: impl Into<String>) -> Self {
        Corpus {
            descriptor: descriptor.into(),
            ..Default::default()
        }
    }

    pub fn push(&mut self, graph: MultiGraph, provenance: impl Into<String>) {
        self.items.push(CorpusItem {
            graph,
            provenance: provenance.into(),
        });
    }

    /// Appends another corpus, joining descriptors with `+`.
    pub fn extend(&mut self, other: Corpus) {
        if self.descriptor.is_empty() {
            self.descriptor = other.descriptor;
        } else {
            self.descriptor = format!("{}+{}", self.descriptor, other.descriptor);
        }
        self.items.extend(other.items);
        self.defects.extend(other.defects);
        self.seed = self.seed.or(other.seed);
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn from_graphs(descriptor: impl Into<String>, graphs: Vec<MultiGraph>) -> Self {
        let mut c = Corpus::new(descriptor);
        for g in graphs {
            let prov = g.name().map_or_else(|| format!("#{}", c.len()), str::to_string);
            c.push(g, prov);
        }
        c
    }

    pub fn from_entries(descriptor: impl Into<String>, entries: impl IntoIterator<Item = CorpusEntry>) -> Self {
        let mut c = Corpus::new(descriptor);
        for e in entries {
            match e {
                CorpusEntry::Graph(item) => c.items.push(item),
                CorpusEntry::Defect(d) => c.defects.push(d),
            }
        }
        c
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        Ok(Self::from_entries(path.display().to_string(), ingest_corpus(path)?))
    }

    /// All graphs with `1 <= n <= n_max` passing `filter`.
    pub fn enumerated(n_max: usize, filter: &EnumerationFilter) -> Result<Self> {
        let graphs = enumerate_up_to(n_max, filter)?;
        let mut desc = format!("enumerate(n<={n_max}");
        if filter.connected {
            desc.push_str(",connected");
        }
        if filter.min_degree > 0 {
            desc.push_str(&format!(",min_degree>={}", filter.min_degree));
        }
        if let Some(k) = filter.max_d2_count {
            desc.push_str(&format!(",|D2|<={k}"));
        }
        if let Some(k) = filter.edge_connectivity_min {
            desc.push_str(&format!(",edge_connectivity>={k}"));
        }
        desc.push(')');
        Ok(Self::from_graphs(desc, graphs))
    }

    /// Seeded random graphs: order uniform in `n_range`, then each edge
    /// independently with a probability drawn uniformly from `p_range`.
    pub fn random(
        count: usize,
        n_range: (usize, usize),
        p_range: (f64, f64),
        connected_only: bool,
        seed: u64,
    ) -> Result<Self> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut c = Corpus::new(format!(
            "random(count={count},n={}..={},p={}..={}{})",
            n_range.0,
            n_range.1,
            p_range.0,
            p_range.1,
            if connected_only { ",connected" } else { "" }
        ));
        c.seed = Some(seed);
        let mut draws = 0u64;
        while c.len() < count {
            draws += 1;
            let n = rng.gen_range(n_range.0..=n_range.1);
            let p = rng.gen_range(p_range.0..=p_range.1);
            let mut edges = Vec::new();
            for v in 1..n as Vertex {
                for u in 0..v {
                    if rng.gen_bool(p) {
                        edges.push((u, v));
                    }
                }
            }
            let g = MultiGraph::from_edges(n, &edges)?;
            if connected_only && !g.is_connected() {
                continue;
            }
            c.push(g, format!("seed={seed},draw={draws}"));
        }
        Ok(c)
    }

    /// Uniform blow-ups of P, P14 and P16: complete replacements of size
    /// 3, 4, 5 and complete-minus-an-edge replacements of size 4 and 5.
    pub fn blow_up_families() -> Result<Self> {
        let mut c = Corpus::new("blow-up families");
        for (base_name, base) in [("petersen", petersen()), ("p14", p14()), ("p16", p16())] {
            for rep in [
                Replacement::complete(3),
                Replacement::complete(4),
                Replacement::complete(5),
                Replacement::complete_minus_edge(4),
                Replacement::complete_minus_edge(5),
            ] {
                let spec = BlowUpSpec::uniform(base.clone(), rep);
                let name = family_name(base_name, rep);
                c.push(blow_up(&spec)?.with_name(name.clone()), name);
            }
        }
        Ok(c)
    }

    /// P, P14, P16, the blow-up families, Petersen with a single vertex blown
    /// up, and all 3-edge-connected graphs with `n <= 7`.
    pub fn bundled() -> Result<Self> {
        let mut c = Corpus::from_graphs("named(petersen,p14,p16)", vec![petersen(), p14(), p16()]);
        c.extend(Self::blow_up_families()?);
        let mut single = Corpus::new("petersen single-vertex blow-ups");
        for rep in [Replacement::complete(3), Replacement::complete(4), Replacement::complete_minus_edge(4)] {
            let mut reps = vec![Replacement::single(); 10];
            reps[0] = rep;
            let g = blow_up(&BlowUpSpec::with_round_robin(petersen(), reps))?;
            let name = format!("petersen[0->{}]", rep_label(rep));
            single.push(g.with_name(name.clone()), name);
        }
        c.extend(single);
        c.extend(Self::enumerated(
            7,
            &EnumerationFilter {
                connected: true,
                edge_connectivity_min: Some(3),
                ..Default::default()
            },
        )?);
        c.descriptor = "bundled".to_string();
        Ok(c)
    }

    /// Connected bipartite graphs with parts `X` (size `x`) and `Y` (size
    /// `y`) in which every `Y` vertex has exactly three neighbors in `X`.
    /// Exhaustive when `count` is `None`, otherwise a seeded sample.
    pub fn bipartite_cubic_y(x: usize, y: usize, count: Option<usize>, seed: u64) -> Result<Self> {
        let triples: Vec<[usize; 3]> = (0..x)
            .flat_map(|a| (a + 1..x).flat_map(move |b| (b + 1..x).map(move |c| [a, b, c])))
            .collect();
        let build = |choice: &[usize]| -> Result<MultiGraph> {
            let mut edges = Vec::new();
            for (j, &t) in choice.iter().enumerate() {
                for &a in &triples[t] {
                    edges.push((a as Vertex, (x + j) as Vertex));
                }
            }
            MultiGraph::from_edges(x + y, &edges)
        };
        let mut c = Corpus::new(format!(
            "bipartite(|X|={x},|Y|={y},deg_Y=3{})",
            count.map_or(String::new(), |k| format!(",sample={k}"))
        ));
        match count {
            None => {
                // Nondecreasing choice sequences: multisets of triples.
                let mut choice = vec![0usize; y];
                loop {
                    let g = build(&choice)?;
                    if g.is_connected() {
                        let tag = format!("X={x},Y={y},triples={choice:?}");
                        c.push(g.with_name(tag.clone()), tag);
                    }
                    let mut i = y;
                    loop {
                        if i == 0 {
                            return Ok(c);
                        }
                        i -= 1;
                        if choice[i] + 1 < triples.len() {
                            choice[i] += 1;
                            let v = choice[i];
                            for slot in &mut choice[i + 1..] {
                                *slot = v;
                            }
                            break;
                        }
                    }
                }
            }
            Some(k) => {
                c.seed = Some(seed);
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let mut draws = 0u64;
                while c.len() < k {
                    draws += 1;
                    let choice: Vec<usize> = (0..y).map(|_| rng.gen_range(0..triples.len())).collect();
                    let g = build(&choice)?;
                    if g.is_connected() {
                        c.push(g, format!("seed={seed},draw={draws}"));
                    }
                }
                Ok(c)
            }
        }
    }
}

fn rep_label(rep: Replacement) -> String {
    match rep.kind {
        ReplacementKind::Single => "K1".to_string(),
        ReplacementKind::Complete => format!("K{}", rep.size),
        ReplacementKind::CompleteMinusEdge => format!("K{}-e", rep.size),
    }
}

/// Name of a uniform blow-up: `blowup:<base>:<replacement>`.
pub fn family_name(base: &str, rep: Replacement) -> String {
    format!("blowup:{base}:{}", rep_label(rep))
}

/// Inverse of [`family_name`].
pub fn parse_family_name(name: &str) -> Option<(String, Replacement)> {
    let rest = name.strip_prefix("blowup:")?;
    let (base, rep) = rest.split_once(':')?;
    let rep = rep.strip_prefix('K')?;
    let replacement = match rep.strip_suffix("-e") {
        Some(s) => Replacement::complete_minus_edge(s.parse().ok()?),
        None => Replacement::complete(rep.parse().ok()?),
    };
    Some((base.to_string(), replacement))
}
