//! JSON and graph6 formats.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::cc::{EdgeMapping, SearchOutcome};
use crate::constructions::{named_graph, Attachment, EdgeProvenance, TreeSnarkGraph, TreeTemplate};
use crate::error::{Error, Result};
use crate::graph::MultiGraph;

/// Labels as written: either a plain array, or an object keyed by vertex
/// index (missing vertices get empty labels).
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum LabelsJson {
    List(Vec<String>),
    Map(BTreeMap<String, String>),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<LabelsJson>,
}

impl GraphJson {
    pub fn from_graph(g: &MultiGraph) -> Self {
        GraphJson {
            n: g.vertex_count(),
            edges: g.edges().iter().map(|&(u, v)| [u, v]).collect(),
            labels: g.labels().map(|l| LabelsJson::List(l.to_vec())),
        }
    }

    pub fn to_graph(&self) -> Result<MultiGraph> {
        let g = MultiGraph::new(self.n, self.edges.iter().map(|&[u, v]| (u, v)).collect())?;
        match &self.labels {
            None => Ok(g),
            Some(LabelsJson::List(l)) => g.with_labels(l.clone()),
            Some(LabelsJson::Map(m)) => {
                let mut l = vec![String::new(); self.n];
                for (k, v) in m {
                    let i: usize = k
                        .parse()
                        .map_err(|_| Error::Parse(format!("label key {k:?} is not an index")))?;
                    if i >= self.n {
                        return Err(Error::VertexOutOfRange { vertex: i, vertex_count: self.n });
                    }
                    l[i] = v.clone();
                }
                g.with_labels(l)
            }
        }
    }
}

fn json_err(e: serde_json::Error) -> Error {
    Error::Parse(e.to_string())
}

pub fn graph_to_json(g: &MultiGraph) -> String {
    serde_json::to_string(&GraphJson::from_graph(g)).expect("graph json")
}

pub fn graph_from_json(s: &str) -> Result<MultiGraph> {
    serde_json::from_str::<GraphJson>(s).map_err(json_err)?.to_graph()
}

/// Reads one graph in graph6. The header `>>graph6<<` is accepted;
/// sparse6 and digraph6 are refused. Edges come out in graph6 bit order:
/// `(i, j)` with `i < j`, by `j` and then `i`.
pub fn parse_graph6(s: &str) -> Result<MultiGraph> {
    let s = s.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    if s.starts_with(":") || s.starts_with(">>sparse6<<") {
        return Err(Error::Parse(
            "sparse6 encodes multigraphs, which graph6 import does not accept".into(),
        ));
    }
    if s.starts_with('&') || s.starts_with(">>digraph6<<") {
        return Err(Error::Parse("digraph6 is not supported".into()));
    }
    let bytes = s.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Parse(format!("byte {b:#x} is outside the graph6 range")));
    }
    let take = |k: usize, from: usize| -> Result<usize> {
        let chunk = bytes
            .get(from..from + k)
            .ok_or_else(|| Error::Parse("truncated graph6 size".into()))?;
        Ok(chunk.iter().fold(0, |acc, &b| (acc << 6) | (b - 63) as usize))
    };
    let (n, mut pos) = match bytes {
        [] => return Err(Error::Parse("empty graph6 string".into())),
        [126, 126, ..] => (take(6, 2)?, 8),
        [126, ..] => (take(3, 1)?, 4),
        _ => (take(1, 0)?, 1),
    };
    let pairs = n * n.saturating_sub(1) / 2;
    let need = pairs.div_ceil(6);
    if bytes.len() - pos != need {
        return Err(Error::Parse(format!(
            "graph6 body has {} bytes, expected {need} for n = {n}",
            bytes.len() - pos
        )));
    }
    let mut edges = Vec::new();
    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[pos + bit / 6] - 63;
            if byte >> (5 - bit % 6) & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    pos += need;
    debug_assert_eq!(pos, bytes.len());
    MultiGraph::new(n, edges)
}

/// Writes a simple graph in graph6. Loops and parallel edges are refused.
pub fn to_graph6(g: &MultiGraph) -> Result<String> {
    if !g.is_simple() {
        return Err(Error::Parse(
            "graph6 holds simple graphs only; this graph has loops or parallel edges".into(),
        ));
    }
    let n = g.vertex_count();
    let mut out: Vec<u8> = Vec::new();
    let push_bits = |x: usize, k: usize, out: &mut Vec<u8>| {
        for i in (0..k).rev() {
            out.push(((x >> (6 * i)) & 63) as u8 + 63);
        }
    };
    if n <= 62 {
        push_bits(n, 1, &mut out);
    } else if n <= 258_047 {
        out.push(126);
        push_bits(n, 3, &mut out);
    } else {
        out.extend([126, 126]);
        push_bits(n, 6, &mut out);
    }
    let mut adj = vec![false; n * n];
    for &(u, v) in g.edges() {
        adj[u * n + v] = true;
        adj[v * n + u] = true;
    }
    let mut cur = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            cur = (cur << 1) | adj[i * n + j] as u8;
            filled += 1;
            if filled == 6 {
                out.push(cur + 63);
                cur = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((cur << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("ascii"))
}

/// Names a graph by fingerprint, with an optional human name.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphRef {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub fingerprint: String,
}

impl GraphRef {
    pub fn of(g: &MultiGraph, name: Option<&str>) -> Self {
        GraphRef {
            name: name.map(str::to_owned),
            fingerprint: g.fingerprint(),
        }
    }

    pub fn check(&self, g: &MultiGraph) -> Result<()> {
        if self.fingerprint != g.fingerprint() {
            return Err(Error::Precondition(format!(
                "graph fingerprint {} does not match certificate {}",
                g.fingerprint(),
                self.fingerprint
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MappingCertificate {
    pub source: GraphRef,
    pub target: GraphRef,
    pub map: Vec<usize>,
}

impl MappingCertificate {
    pub fn new(f: &EdgeMapping, g: &MultiGraph, h: &MultiGraph, names: (Option<&str>, Option<&str>)) -> Self {
        MappingCertificate {
            source: GraphRef::of(g, names.0),
            target: GraphRef::of(h, names.1),
            map: f.images().to_vec(),
        }
    }

    /// Checks both fingerprints and rebuilds the mapping. Whether it is cc
    /// is left to the caller.
    pub fn to_mapping(&self, g: &MultiGraph, h: &MultiGraph) -> Result<EdgeMapping> {
        self.source.check(g)?;
        self.target.check(h)?;
        EdgeMapping::new(g, h, self.map.clone())
    }
}

pub fn certificate_from_json(s: &str) -> Result<MappingCertificate> {
    serde_json::from_str(s).map_err(json_err)
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SearchOutcomeJson {
    pub status: crate::cc::SearchStatus,
    pub mode: crate::cc::SearchMode,
    pub count: u64,
    pub nodes: u64,
    pub elapsed_secs: f64,
    pub profile_used: crate::cc::Profile,
    pub mappings: Vec<Vec<usize>>,
}

impl From<&SearchOutcome> for SearchOutcomeJson {
    fn from(o: &SearchOutcome) -> Self {
        SearchOutcomeJson {
            status: o.status,
            mode: o.mode,
            count: o.count,
            nodes: o.nodes,
            elapsed_secs: o.elapsed.as_secs_f64(),
            profile_used: o.profile_used,
            mappings: o.mappings.iter().map(|f| f.images().to_vec()).collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TreeTemplateJson {
    pub tree_vertex_count: usize,
    pub tree_edges: Vec<[usize; 2]>,
    pub colors: Vec<usize>,
    pub gadgets: Vec<GraphJson>,
    pub attachments: Vec<Vec<Attachment>>,
}

impl TreeTemplateJson {
    pub fn from_template(t: &TreeTemplate) -> Self {
        TreeTemplateJson {
            tree_vertex_count: t.tree_vertex_count,
            tree_edges: t.tree_edges.iter().map(|&(a, b)| [a, b]).collect(),
            colors: t.colors.clone(),
            gadgets: t.gadgets.iter().map(GraphJson::from_graph).collect(),
            attachments: t.attachments.clone(),
        }
    }

    pub fn to_template(&self) -> Result<TreeTemplate> {
        let t = TreeTemplate {
            tree_vertex_count: self.tree_vertex_count,
            tree_edges: self.tree_edges.iter().map(|&[a, b]| (a, b)).collect(),
            colors: self.colors.clone(),
            gadgets: self.gadgets.iter().map(GraphJson::to_graph).collect::<Result<_>>()?,
            attachments: self.attachments.clone(),
        };
        t.validate()?;
        Ok(t)
    }
}

/// Side table for a tree-snark graph: the template it came from and the
/// origin of every edge.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ProvenanceJson {
    pub fingerprint: String,
    pub template: TreeTemplateJson,
    pub provenance: Vec<EdgeProvenance>,
}

impl ProvenanceJson {
    pub fn of(h: &TreeSnarkGraph) -> Self {
        ProvenanceJson {
            fingerprint: h.graph.fingerprint(),
            template: TreeTemplateJson::from_template(&h.template),
            provenance: h.provenance.clone(),
        }
    }

    /// Rebuilds the tree snark and checks it matches the recorded graph.
    pub fn rebuild(&self) -> Result<TreeSnarkGraph> {
        let h = crate::constructions::tree_snark(&self.template.to_template()?)?;
        if h.graph.fingerprint() != self.fingerprint || h.provenance != self.provenance {
            return Err(Error::Precondition(
                "side table does not rebuild the recorded graph".into(),
            ));
        }
        Ok(h)
    }
}

/// A graph given either by one of the built-in names or by a path to Graph
/// JSON (or graph6, for files ending in `.g6`).
pub fn load_graph(spec: &str) -> Result<MultiGraph> {
    if let Ok(g) = named_graph(spec) {
        return Ok(g);
    }
    let text = std::fs::read_to_string(spec)
        .map_err(|e| Error::Parse(format!("cannot read {spec}: {e}")))?;
    if spec.ends_with(".g6") {
        parse_graph6(&text)
    } else {
        graph_from_json(&text)
    }
}
