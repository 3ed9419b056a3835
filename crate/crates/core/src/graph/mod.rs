//! Vertex-indexed multigraphs with loops and parallel edges.
//!
//! Edges are identified by their position in the edge list, never by their
//! endpoint pair: parallel edges are distinct objects. Every edit returns a
//! fresh graph together with an [`EdgeTranslation`] describing where each old
//! edge and vertex went, so provenance can be chained across multi-step
//! constructions.

mod props;
mod symmetry;

pub use props::{
    cycles_of_length, cyclic_edge_connectivity, girth, is_bridgeless, shortest_distances,
};
pub use symmetry::{
    automorphisms, automorphisms_with, has_ordered_star_transitivity, is_edge_transitive,
    is_isomorphic, is_isomorphic_with, Automorphism, SymmetryConfig,
};

use std::collections::BTreeSet;
use std::fmt;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

pub type VertexId = usize;
pub type EdgeId = usize;

/// Content-derived identity of a graph (vertex count and edge list).
///
/// Two graphs with identical structure share an id; labels do not take part.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GraphId(u64);

impl fmt::Debug for GraphId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GraphId({:016x})", self.0)
    }
}

#[derive(Clone, Debug)]
pub struct MultiGraph {
    vertex_count: usize,
    edges: Vec<(VertexId, VertexId)>,
    labels: Option<Vec<String>>,
    // Incident edge ids per vertex, ascending; a loop is listed twice.
    incidence: Vec<Vec<EdgeId>>,
    digest: [u8; 32],
}

impl PartialEq for MultiGraph {
    fn eq(&self, other: &Self) -> bool {
        self.vertex_count == other.vertex_count && self.edges == other.edges
    }
}

impl Eq for MultiGraph {}

impl MultiGraph {
    /// Builds a graph from endpoint pairs; edge `i` is the `i`-th pair.
    pub fn new(vertex_count: usize, edges: Vec<(VertexId, VertexId)>) -> Result<Self> {
        for &(u, v) in &edges {
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(Error::VertexOutOfRange {
                        vertex: w,
                        vertex_count,
                    });
                }
            }
        }
        let mut incidence = vec![Vec::new(); vertex_count];
        for (e, &(u, v)) in edges.iter().enumerate() {
            incidence[u].push(e);
            incidence[v].push(e);
        }
        let mut hasher = Sha256::new();
        hasher.update((vertex_count as u64).to_le_bytes());
        for &(u, v) in &edges {
            hasher.update((u as u64).to_le_bytes());
            hasher.update((v as u64).to_le_bytes());
        }
        let digest = hasher.finalize().into();
        Ok(MultiGraph {
            vertex_count,
            edges,
            labels: None,
            incidence,
            digest,
        })
    }

    /// Attaches provenance labels, one per vertex.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.vertex_count {
            return Err(Error::Precondition(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.vertex_count
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn id(&self) -> GraphId {
        let mut word = [0u8; 8];
        word.copy_from_slice(&self.digest[..8]);
        GraphId(u64::from_le_bytes(word))
    }

    /// Hex SHA-256 of the structure, used in certificates.
    pub fn fingerprint(&self) -> String {
        self.digest.iter().map(|b| format!("{b:02x}")).collect()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: VertexId) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    pub fn is_loop(&self, e: EdgeId) -> bool {
        let (u, v) = self.edges[e];
        u == v
    }

    /// The endpoint of `e` that is not `v` (or `v` itself for a loop).
    pub fn other_end(&self, e: EdgeId, v: VertexId) -> VertexId {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    /// Degree with loops counted twice.
    pub fn degree(&self, v: VertexId) -> usize {
        self.incidence[v].len()
    }

    /// Incident edge ids, ascending, loops listed twice.
    pub fn incident(&self, v: VertexId) -> &[EdgeId] {
        &self.incidence[v]
    }

    /// The elementary cut δ({v}): incident non-loop edges, ascending.
    pub fn star(&self, v: VertexId) -> Vec<EdgeId> {
        self.incidence[v]
            .iter()
            .copied()
            .filter(|&e| !self.is_loop(e))
            .collect()
    }

    pub fn loop_count(&self, v: VertexId) -> usize {
        self.incidence[v].iter().filter(|&&e| self.is_loop(e)).count() / 2
    }

    pub fn has_loops(&self) -> bool {
        self.edges.iter().any(|&(u, v)| u == v)
    }

    /// Neighbours through non-loop edges, with repetition for parallel edges.
    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.incidence[v]
            .iter()
            .filter(move |&&e| !self.is_loop(e))
            .map(move |&e| self.other_end(e, v))
    }

    /// Number of edges joining `u` and `v` (loops at `u` when `u == v`).
    pub fn multiplicity(&self, u: VertexId, v: VertexId) -> usize {
        let hits = self.incidence[u]
            .iter()
            .filter(|&&e| {
                let (a, b) = self.edges[e];
                (a == u && b == v) || (a == v && b == u)
            })
            .count();
        if u == v {
            hits / 2
        } else {
            hits
        }
    }

    pub fn is_cubic(&self) -> bool {
        (0..self.vertex_count).all(|v| self.degree(v) == 3)
    }

    pub fn is_simple(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.edges
            .iter()
            .all(|&(u, v)| u != v && seen.insert((u.min(v), u.max(v))))
    }

    /// Component index per vertex, numbered in order of lowest vertex.
    pub fn components(&self) -> (usize, Vec<usize>) {
        let mut comp = vec![usize::MAX; self.vertex_count];
        let mut count = 0;
        let mut stack = Vec::new();
        for s in 0..self.vertex_count {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = count;
            stack.push(s);
            while let Some(u) = stack.pop() {
                for w in self.neighbors(u) {
                    if comp[w] == usize::MAX {
                        comp[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        (count, comp)
    }

    pub fn component_count(&self) -> usize {
        self.components().0
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    fn check_edge(&self, e: EdgeId) -> Result<()> {
        if e >= self.edges.len() {
            return Err(Error::EdgeOutOfRange {
                edge: e,
                edge_count: self.edges.len(),
            });
        }
        Ok(())
    }

    fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v >= self.vertex_count {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                vertex_count: self.vertex_count,
            });
        }
        Ok(())
    }

    fn rebuild(
        vertex_count: usize,
        edges: Vec<(VertexId, VertexId)>,
        labels: Option<Vec<String>>,
    ) -> MultiGraph {
        let g = MultiGraph::new(vertex_count, edges).expect("edit produced valid endpoints");
        match labels {
            Some(l) => g.with_labels(l).expect("label count preserved"),
            None => g,
        }
    }

    fn keep_labels(&self, vertex_forward: &[Option<VertexId>], n: usize) -> Option<Vec<String>> {
        self.labels.as_ref().map(|labels| {
            let mut out = vec![String::new(); n];
            for (old, new) in vertex_forward.iter().enumerate() {
                if let Some(new) = *new {
                    if out[new].is_empty() {
                        out[new] = labels[old].clone();
                    }
                }
            }
            out
        })
    }

    /// `G − e`.
    pub fn delete_edge(&self, e: EdgeId) -> Result<(MultiGraph, EdgeTranslation)> {
        self.check_edge(e)?;
        Ok(self.delete_edges(&[e]))
    }

    /// Deletes a set of edges; out-of-range ids are ignored.
    pub fn delete_edges(&self, doomed: &[EdgeId]) -> (MultiGraph, EdgeTranslation) {
        let doomed: BTreeSet<EdgeId> = doomed.iter().copied().collect();
        let mut forward = vec![None; self.edges.len()];
        let mut origin = Vec::new();
        let mut edges = Vec::new();
        for (e, &pair) in self.edges.iter().enumerate() {
            if !doomed.contains(&e) {
                forward[e] = Some(edges.len());
                origin.push(vec![e]);
                edges.push(pair);
            }
        }
        let vertex_forward = (0..self.vertex_count).map(Some).collect();
        let g = Self::rebuild(self.vertex_count, edges, self.labels.clone());
        let t = EdgeTranslation::from_parts(forward, origin, vertex_forward);
        (g, t)
    }

    /// `G/e`: identifies the endpoints of `e` and erases `e`; other edges
    /// parallel to `e` become loops and are kept. Contracting a loop only
    /// removes it.
    pub fn contract_edge(&self, e: EdgeId) -> Result<(MultiGraph, EdgeTranslation)> {
        self.check_edge(e)?;
        Ok(self.contract_edges(&[e]))
    }

    /// Contracts every edge in `set` at once. Each class of identified
    /// vertices is represented by its lowest old index; surviving vertices
    /// keep their relative order.
    pub fn contract_edges(&self, set: &[EdgeId]) -> (MultiGraph, EdgeTranslation) {
        let contracted: BTreeSet<EdgeId> = set
            .iter()
            .copied()
            .filter(|&e| e < self.edges.len())
            .collect();
        let mut parent: Vec<usize> = (0..self.vertex_count).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for &e in &contracted {
            let (u, v) = self.edges[e];
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru != rv {
                let (lo, hi) = (ru.min(rv), ru.max(rv));
                parent[hi] = lo;
            }
        }
        let mut new_index = vec![usize::MAX; self.vertex_count];
        let mut n = 0;
        for v in 0..self.vertex_count {
            if find(&mut parent, v) == v {
                new_index[v] = n;
                n += 1;
            }
        }
        let vertex_forward: Vec<Option<VertexId>> = (0..self.vertex_count)
            .map(|v| Some(new_index[find(&mut parent, v)]))
            .collect();
        let mut forward = vec![None; self.edges.len()];
        let mut origin = Vec::new();
        let mut edges = Vec::new();
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            if contracted.contains(&e) {
                continue;
            }
            forward[e] = Some(edges.len());
            origin.push(vec![e]);
            edges.push((vertex_forward[u].unwrap(), vertex_forward[v].unwrap()));
        }
        let labels = self.keep_labels(&vertex_forward, n);
        let g = Self::rebuild(n, edges, labels);
        (g, EdgeTranslation::from_parts(forward, origin, vertex_forward))
    }

    /// Removes `v` with its incident edges; remaining vertices are compacted.
    pub fn delete_vertex(&self, v: VertexId) -> Result<(MultiGraph, EdgeTranslation)> {
        self.check_vertex(v)?;
        let vertex_forward: Vec<Option<VertexId>> = (0..self.vertex_count)
            .map(|w| match w.cmp(&v) {
                std::cmp::Ordering::Less => Some(w),
                std::cmp::Ordering::Equal => None,
                std::cmp::Ordering::Greater => Some(w - 1),
            })
            .collect();
        let mut forward = vec![None; self.edges.len()];
        let mut origin = Vec::new();
        let mut edges = Vec::new();
        for (e, &(a, b)) in self.edges.iter().enumerate() {
            if a == v || b == v {
                continue;
            }
            forward[e] = Some(edges.len());
            origin.push(vec![e]);
            edges.push((vertex_forward[a].unwrap(), vertex_forward[b].unwrap()));
        }
        let n = self.vertex_count - 1;
        let labels = self.keep_labels(&vertex_forward, n);
        let g = Self::rebuild(n, edges, labels);
        Ok((g, EdgeTranslation::from_parts(forward, origin, vertex_forward)))
    }

    /// Suppresses degree-2 vertices until none remain that can be removed.
    ///
    /// A degree-2 vertex with two distinct incident edges is deleted and its
    /// edges merged. A cycle made only of degree-2 vertices ends as a single
    /// vertex carrying one loop. Every old edge of a merged chain maps to the
    /// merged edge; [`EdgeTranslation::origin`] lists the chain.
    pub fn suppress_degree_two(&self) -> (MultiGraph, EdgeTranslation) {
        struct Work {
            ends: (VertexId, VertexId),
            chain: Vec<EdgeId>,
            alive: bool,
        }
        let mut work: Vec<Work> = self
            .edges
            .iter()
            .enumerate()
            .map(|(e, &ends)| Work {
                ends,
                chain: vec![e],
                alive: true,
            })
            .collect();
        let mut inc: Vec<Vec<usize>> = self.incidence.clone();
        let mut alive_v = vec![true; self.vertex_count];

        fn drop_one(list: &mut Vec<usize>, item: usize) {
            if let Some(pos) = list.iter().position(|&x| x == item) {
                list.remove(pos);
            }
        }

        loop {
            let pick = (0..self.vertex_count)
                .find(|&w| alive_v[w] && inc[w].len() == 2 && inc[w][0] != inc[w][1]);
            let Some(w) = pick else { break };
            let (e1, e2) = (inc[w][0], inc[w][1]);
            let far = |e: usize| {
                let (a, b) = work[e].ends;
                if a == w {
                    b
                } else {
                    a
                }
            };
            let (x, y) = (far(e1), far(e2));
            let mut chain = std::mem::take(&mut work[e1].chain);
            chain.extend(std::mem::take(&mut work[e2].chain));
            work[e1].alive = false;
            work[e2].alive = false;
            let id = work.len();
            work.push(Work {
                ends: (x, y),
                chain,
                alive: true,
            });
            drop_one(&mut inc[x], e1);
            drop_one(&mut inc[y], e2);
            inc[x].push(id);
            inc[y].push(id);
            inc[w].clear();
            alive_v[w] = false;
        }

        let mut vertex_forward = vec![None; self.vertex_count];
        let mut n = 0;
        for v in 0..self.vertex_count {
            if alive_v[v] {
                vertex_forward[v] = Some(n);
                n += 1;
            }
        }
        let mut survivors: Vec<&Work> = work.iter().filter(|w| w.alive).collect();
        survivors.sort_by_key(|w| *w.chain.iter().min().unwrap());
        let mut forward = vec![None; self.edges.len()];
        let mut origin = Vec::with_capacity(survivors.len());
        let mut edges = Vec::with_capacity(survivors.len());
        for w in survivors {
            let new = edges.len();
            for &old in &w.chain {
                forward[old] = Some(new);
            }
            origin.push(w.chain.clone());
            let (a, b) = w.ends;
            edges.push((vertex_forward[a].unwrap(), vertex_forward[b].unwrap()));
        }
        let labels = self.keep_labels(&vertex_forward, n);
        let g = Self::rebuild(n, edges, labels);
        (g, EdgeTranslation::from_parts(forward, origin, vertex_forward))
    }

    /// Disjoint union; `other`'s vertices and edges are shifted after ours.
    pub fn disjoint_union(&self, other: &MultiGraph) -> MultiGraph {
        let shift = self.vertex_count;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        MultiGraph::new(self.vertex_count + other.vertex_count, edges)
            .expect("union endpoints in range")
    }
}

/// Where the edges and vertices of a graph went under an edit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeTranslation {
    forward: Vec<Option<EdgeId>>,
    origin: Vec<Vec<EdgeId>>,
    removed: Vec<EdgeId>,
    vertex_forward: Vec<Option<VertexId>>,
}

impl EdgeTranslation {
    fn from_parts(
        forward: Vec<Option<EdgeId>>,
        origin: Vec<Vec<EdgeId>>,
        vertex_forward: Vec<Option<VertexId>>,
    ) -> Self {
        let removed = forward
            .iter()
            .enumerate()
            .filter(|(_, t)| t.is_none())
            .map(|(e, _)| e)
            .collect();
        EdgeTranslation {
            forward,
            origin,
            removed,
            vertex_forward,
        }
    }

    /// New id of an old edge, `None` if it was removed.
    pub fn edge(&self, old: EdgeId) -> Option<EdgeId> {
        self.forward.get(old).copied().flatten()
    }

    /// New id of an old vertex, `None` if it was removed.
    pub fn vertex(&self, old: VertexId) -> Option<VertexId> {
        self.vertex_forward.get(old).copied().flatten()
    }

    /// Old edges a new edge was made from (more than one after suppression).
    pub fn origin(&self, new: EdgeId) -> &[EdgeId] {
        &self.origin[new]
    }

    pub fn removed(&self) -> &[EdgeId] {
        &self.removed
    }

    pub fn old_edge_count(&self) -> usize {
        self.forward.len()
    }

    pub fn new_edge_count(&self) -> usize {
        self.origin.len()
    }

    /// Old edges whose new edge absorbed more than one old edge.
    pub fn merged_chains(&self) -> impl Iterator<Item = (EdgeId, &[EdgeId])> {
        self.origin
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .map(|(e, c)| (e, c.as_slice()))
    }

    /// Translation of `self` followed by `next`.
    pub fn then(&self, next: &EdgeTranslation) -> EdgeTranslation {
        let forward = self
            .forward
            .iter()
            .map(|t| t.and_then(|mid| next.edge(mid)))
            .collect();
        let origin = next
            .origin
            .iter()
            .map(|mids| {
                mids.iter()
                    .flat_map(|&mid| self.origin[mid].iter().copied())
                    .collect()
            })
            .collect();
        let vertex_forward = self
            .vertex_forward
            .iter()
            .map(|t| t.and_then(|mid| next.vertex(mid)))
            .collect();
        EdgeTranslation::from_parts(forward, origin, vertex_forward)
    }
}
