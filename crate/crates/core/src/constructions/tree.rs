use std::collections::HashMap;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::named::{blanusa2_ab, named_graph};
use crate::cc::EdgeMapping;
use crate::error::{Error, Result};
use crate::graph::{automorphisms, EdgeId, MultiGraph, VertexId};

/// Which gadget vertex of tree vertex `v` faces tree neighbour `neighbor`,
/// and the order in which its three edges are split into stubs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Attachment {
    pub neighbor: usize,
    pub vertex: VertexId,
    pub ordering: [EdgeId; 3],
}

/// A coloured tree with gadgets and attachment data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeTemplate {
    pub tree_vertex_count: usize,
    pub tree_edges: Vec<(usize, usize)>,
    /// Gadget index of each tree vertex.
    pub colors: Vec<usize>,
    pub gadgets: Vec<MultiGraph>,
    /// One entry per tree neighbour, for each tree vertex.
    pub attachments: Vec<Vec<Attachment>>,
}

fn bad(msg: String) -> Error {
    Error::Precondition(msg)
}

impl TreeTemplate {
    pub fn validate(&self) -> Result<()> {
        let n = self.tree_vertex_count;
        if n == 0 {
            return Err(bad("tree has no vertices".into()));
        }
        let tree = MultiGraph::new(n, self.tree_edges.clone())
            .map_err(|e| bad(format!("tree edges: {e}")))?;
        if self.tree_edges.len() + 1 != n || !tree.is_connected() {
            return Err(bad("tree edges do not form a tree".into()));
        }
        if self.colors.len() != n || self.attachments.len() != n {
            return Err(bad("colors and attachments need one entry per tree vertex".into()));
        }
        for (i, g) in self.gadgets.iter().enumerate() {
            if !g.is_cubic() {
                return Err(bad(format!("gadget {i} is not cubic")));
            }
        }
        for v in 0..n {
            let c = self.colors[v];
            let gadget = self
                .gadgets
                .get(c)
                .ok_or_else(|| bad(format!("color {c} of tree vertex {v} has no gadget")))?;
            let mut want: Vec<usize> = tree.neighbors(v).collect();
            want.sort_unstable();
            let mut got: Vec<usize> = self.attachments[v].iter().map(|a| a.neighbor).collect();
            got.sort_unstable();
            if want != got {
                return Err(bad(format!(
                    "tree vertex {v}: attachments name {got:?}, neighbours are {want:?}"
                )));
            }
            let atts = &self.attachments[v];
            for (i, a) in atts.iter().enumerate() {
                if a.vertex >= gadget.vertex_count() {
                    return Err(bad(format!("tree vertex {v}: attachment vertex out of range")));
                }
                let mut star = gadget.star(a.vertex);
                if star.len() != 3 {
                    return Err(bad(format!(
                        "tree vertex {v}: attachment {} needs three non-loop edges",
                        a.vertex
                    )));
                }
                let mut ord = a.ordering.to_vec();
                ord.sort_unstable();
                star.sort_unstable();
                if ord != star {
                    return Err(bad(format!(
                        "tree vertex {v}: ordering {:?} is not the star of {}",
                        a.ordering, a.vertex
                    )));
                }
                for b in &atts[i + 1..] {
                    if b.vertex == a.vertex || gadget.multiplicity(a.vertex, b.vertex) > 0 {
                        return Err(bad(format!(
                            "tree vertex {v}: attachment set is not independent"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn gadget_of(&self, v: usize) -> &MultiGraph {
        &self.gadgets[self.colors[v]]
    }
}

/// Origin of an edge of a tree-of-snarks graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum EdgeProvenance {
    /// An edge of the copy at `tree_vertex` with no end in the attachment set.
    Copy { tree_vertex: usize, gadget_edge: EdgeId },
    /// Connecting edge `index` of tree edge `tree_edge`.
    Connecting { tree_edge: usize, index: usize },
}

/// A graph of the tree-of-snarks family together with its provenance.
#[derive(Clone, Debug)]
pub struct TreeSnarkGraph {
    pub graph: MultiGraph,
    pub template: TreeTemplate,
    pub provenance: Vec<EdgeProvenance>,
    /// `inclusions[v]` is the natural inclusion of the gadget of `v`.
    pub inclusions: Vec<EdgeMapping>,
}

impl TreeSnarkGraph {
    /// Edges of the copy at `v`, its own edges and the connecting edges
    /// around it, ascending.
    pub fn copy_edges(&self, v: usize) -> Vec<EdgeId> {
        let mut e = self.inclusions[v].images().to_vec();
        e.sort_unstable();
        e
    }

    /// The three connecting edges of tree edge `t`, by index.
    pub fn connecting(&self, t: usize) -> [EdgeId; 3] {
        let mut out = [0; 3];
        for (e, p) in self.provenance.iter().enumerate() {
            if let EdgeProvenance::Connecting { tree_edge, index } = *p {
                if tree_edge == t {
                    out[index] = e;
                }
            }
        }
        out
    }

    /// Tree vertices whose copy contains edge `e`.
    pub fn copies_containing(&self, e: EdgeId) -> Vec<usize> {
        match self.provenance[e] {
            EdgeProvenance::Copy { tree_vertex, .. } => vec![tree_vertex],
            EdgeProvenance::Connecting { tree_edge, .. } => {
                let (a, b) = self.template.tree_edges[tree_edge];
                vec![a.min(b), a.max(b)]
            }
        }
    }
}

/// Builds the tree-of-snarks graph of `template`.
///
/// Each attachment vertex is split into three stubs following its edge
/// ordering, stub `i` on one side of a tree edge is identified with stub `i`
/// on the other, and the resulting degree-2 vertices are suppressed. The
/// result is assembled directly: vertices are the non-attachment gadget
/// vertices, tree vertex by tree vertex; edges are the copy edges in the same
/// order, then connecting edges by tree edge and index.
pub fn tree_snark(template: &TreeTemplate) -> Result<TreeSnarkGraph> {
    template.validate()?;
    let n_tree = template.tree_vertex_count;
    let mut attached: Vec<HashMap<VertexId, &Attachment>> = vec![HashMap::new(); n_tree];
    for v in 0..n_tree {
        for a in &template.attachments[v] {
            attached[v].insert(a.vertex, a);
        }
    }
    let mut vmap: Vec<Vec<Option<VertexId>>> = Vec::with_capacity(n_tree);
    let mut next = 0;
    let mut labels = Vec::new();
    for v in 0..n_tree {
        let g = template.gadget_of(v);
        let row = (0..g.vertex_count())
            .map(|w| {
                if attached[v].contains_key(&w) {
                    None
                } else {
                    labels.push(format!("{v}:{w}"));
                    next += 1;
                    Some(next - 1)
                }
            })
            .collect();
        vmap.push(row);
    }

    let mut edges = Vec::new();
    let mut provenance = Vec::new();
    let mut inc: Vec<Vec<EdgeId>> = (0..n_tree)
        .map(|v| vec![usize::MAX; template.gadget_of(v).edge_count()])
        .collect();
    for v in 0..n_tree {
        let g = template.gadget_of(v);
        for (e, &(a, b)) in g.edges().iter().enumerate() {
            if let (Some(x), Some(y)) = (vmap[v][a], vmap[v][b]) {
                inc[v][e] = edges.len();
                edges.push((x, y));
                provenance.push(EdgeProvenance::Copy {
                    tree_vertex: v,
                    gadget_edge: e,
                });
            }
        }
    }
    let far_end = |v: usize, a: &Attachment, i: usize| {
        let g = template.gadget_of(v);
        vmap[v][g.other_end(a.ordering[i], a.vertex)].expect("independent attachment set")
    };
    for (t, &(u, v)) in template.tree_edges.iter().enumerate() {
        let au = template.attachments[u].iter().find(|a| a.neighbor == v).expect("validated");
        let av = template.attachments[v].iter().find(|a| a.neighbor == u).expect("validated");
        for i in 0..3 {
            inc[u][au.ordering[i]] = edges.len();
            inc[v][av.ordering[i]] = edges.len();
            edges.push((far_end(u, au, i), far_end(v, av, i)));
            provenance.push(EdgeProvenance::Connecting {
                tree_edge: t,
                index: i,
            });
        }
    }
    let graph = MultiGraph::new(next, edges)?.with_labels(labels)?;
    let inclusions = (0..n_tree)
        .map(|v| EdgeMapping::new(template.gadget_of(v), &graph, inc[v].clone()))
        .collect::<Result<Vec<_>>>()?;
    Ok(TreeSnarkGraph {
        graph,
        template: template.clone(),
        provenance,
        inclusions,
    })
}

/// `H` with every edge outside the copy at `v` contracted.
pub fn bar_copy(h: &TreeSnarkGraph, v: usize) -> Result<MultiGraph> {
    if v >= h.template.tree_vertex_count {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            vertex_count: h.template.tree_vertex_count,
        });
    }
    let mut inside = vec![false; h.graph.edge_count()];
    for &e in h.inclusions[v].images() {
        inside[e] = true;
    }
    let outside: Vec<EdgeId> = (0..h.graph.edge_count()).filter(|&e| !inside[e]).collect();
    Ok(h.graph.contract_edges(&outside).0)
}

/// Template for a single gadget with no attachments.
pub fn single_template(gadget: MultiGraph) -> TreeTemplate {
    TreeTemplate {
        tree_vertex_count: 1,
        tree_edges: Vec::new(),
        colors: vec![0],
        gadgets: vec![gadget],
        attachments: vec![Vec::new()],
    }
}

fn ascending_star(g: &MultiGraph, w: VertexId) -> [EdgeId; 3] {
    let s = g.star(w);
    [s[0], s[1], s[2]]
}

/// Template of a path `0 – 1 – … – (len−1)` where `attach(v, neighbor)` picks
/// the attachment vertex; edge orderings are ascending edge ids.
pub(crate) fn path_template(
    gadgets: Vec<MultiGraph>,
    colors: Vec<usize>,
    attach: impl Fn(usize, usize) -> VertexId,
) -> TreeTemplate {
    let len = colors.len();
    let attachments = (0..len)
        .map(|v| {
            let mut nbrs = Vec::new();
            if v > 0 {
                nbrs.push(v - 1);
            }
            if v + 1 < len {
                nbrs.push(v + 1);
            }
            nbrs.into_iter()
                .map(|u| {
                    let w = attach(v, u);
                    Attachment {
                        neighbor: u,
                        vertex: w,
                        ordering: ascending_star(&gadgets[colors[v]], w),
                    }
                })
                .collect()
        })
        .collect();
    TreeTemplate {
        tree_vertex_count: len,
        tree_edges: (1..len).map(|v| (v - 1, v)).collect(),
        colors,
        gadgets,
        attachments,
    }
}

/// Vertex at which the last copy of `Hₙ` attaches: the lowest vertex of B₁
/// outside the automorphism orbit of vertex 0.
///
/// With both ends attached in the same orbit, the two B₁ copies of `H₁` can
/// be folded onto a single B₁ copy of any `Hₙ`, so `H₁` would map to every
/// other member.
pub fn antichain_far_end() -> VertexId {
    static END: OnceLock<VertexId> = OnceLock::new();
    *END.get_or_init(|| {
        let b1 = named_graph("blanusa1").expect("fixed graph");
        let orbit: Vec<VertexId> = automorphisms(&b1)
            .expect("small group")
            .iter()
            .map(|a| a.vertex_map[0])
            .collect();
        (0..b1.vertex_count())
            .find(|v| !orbit.contains(v))
            .expect("blanusa1 is not vertex-transitive")
    })
}

/// Template of `Hₙ`: the path `0..=n` colored B₁, B₂, …, B₂, B₁ (gadget
/// indices 0 and 1).
///
/// Internal vertices attach toward `v−1` at `a` and toward `v+1` at `b`,
/// with `(a, b)` from [`blanusa2_ab`]. Copy 0 attaches at vertex 0 of B₁ and
/// copy `n` at [`antichain_far_end`]. All edge orderings are ascending edge
/// ids.
pub fn antichain_template(n: usize) -> Result<TreeTemplate> {
    antichain_template_with_ends(n, 0, antichain_far_end())
}

/// [`antichain_template`] with explicit attachment vertices for the two B₁
/// ends.
pub fn antichain_template_with_ends(
    n: usize,
    first: VertexId,
    last: VertexId,
) -> Result<TreeTemplate> {
    if n == 0 {
        return Err(Error::Precondition("antichain member needs n >= 1".into()));
    }
    let gadgets = vec![named_graph("blanusa1")?, named_graph("blanusa2")?];
    let colors = (0..=n).map(|v| usize::from(v != 0 && v != n)).collect();
    let (a, b) = blanusa2_ab();
    let t = path_template(gadgets, colors, |v, u| {
        if v == 0 {
            first
        } else if v == n {
            last
        } else if u + 1 == v {
            a
        } else {
            b
        }
    });
    t.validate()?;
    Ok(t)
}

pub fn antichain_member(n: usize) -> Result<TreeSnarkGraph> {
    tree_snark(&antichain_template(n)?)
}
