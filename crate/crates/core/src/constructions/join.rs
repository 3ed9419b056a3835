use serde::{Deserialize, Serialize};

use crate::cc::EdgeMapping;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, MultiGraph, VertexId};

/// Where an edge of a joined graph comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum JoinEdgeOrigin {
    First(EdgeId),
    Second(EdgeId),
    /// One of the added edges, by position.
    Connecting(usize),
}

/// The 2-join of `G₁` and `G₂` along `e₁ = x₁y₁` and `e₂ = x₂y₂`.
///
/// Vertices of `G₁` keep their indices and those of `G₂` follow. Edges are
/// `G₁ − e₁` in order, then `G₂ − e₂`, then `x₁x₂` and `y₁y₂`, where `xᵢ` is
/// the first-listed endpoint of `eᵢ`.
#[derive(Clone, Debug)]
pub struct TwoJoin {
    pub graph: MultiGraph,
    pub edges: [EdgeId; 2],
    pub origin: Vec<JoinEdgeOrigin>,
    /// Natural inclusions `Gᵢ → G`, sending `eᵢ` to `x₁x₂`.
    pub inclusions: [EdgeMapping; 2],
}

impl TwoJoin {
    pub fn connecting(&self) -> [EdgeId; 2] {
        let m = self.graph.edge_count();
        [m - 2, m - 1]
    }
}

pub fn two_join(g1: &MultiGraph, e1: EdgeId, g2: &MultiGraph, e2: EdgeId) -> Result<TwoJoin> {
    for (g, e) in [(g1, e1), (g2, e2)] {
        if e >= g.edge_count() {
            return Err(Error::EdgeOutOfRange {
                edge: e,
                edge_count: g.edge_count(),
            });
        }
        if g.is_loop(e) {
            return Err(Error::Precondition(format!("edge {e} is a loop")));
        }
    }
    let n1 = g1.vertex_count();
    let mut edges = Vec::new();
    let mut origin = Vec::new();
    let mut inc1 = vec![0; g1.edge_count()];
    let mut inc2 = vec![0; g2.edge_count()];
    for (e, &(u, v)) in g1.edges().iter().enumerate() {
        if e != e1 {
            inc1[e] = edges.len();
            edges.push((u, v));
            origin.push(JoinEdgeOrigin::First(e));
        }
    }
    for (e, &(u, v)) in g2.edges().iter().enumerate() {
        if e != e2 {
            inc2[e] = edges.len();
            edges.push((u + n1, v + n1));
            origin.push(JoinEdgeOrigin::Second(e));
        }
    }
    let (x1, y1) = g1.endpoints(e1);
    let (x2, y2) = g2.endpoints(e2);
    inc1[e1] = edges.len();
    inc2[e2] = edges.len();
    edges.push((x1, x2 + n1));
    edges.push((y1, y2 + n1));
    origin.push(JoinEdgeOrigin::Connecting(0));
    origin.push(JoinEdgeOrigin::Connecting(1));
    let graph = MultiGraph::new(n1 + g2.vertex_count(), edges)?;
    let inclusions = [
        EdgeMapping::new(g1, &graph, inc1)?,
        EdgeMapping::new(g2, &graph, inc2)?,
    ];
    Ok(TwoJoin {
        graph,
        edges: [e1, e2],
        origin,
        inclusions,
    })
}

/// The 3-join of `G₁` and `G₂` at `u₁`, `u₂`.
///
/// Let `sᵢ` be the star of `uᵢ` in ascending edge order. Connecting edge `k`
/// joins the far end of `s₁[k]` to the far end of `s₂[matching[k]]`.
/// Vertices are those of `G₁ − u₁` then `G₂ − u₂`, order preserved; edges are
/// the surviving `G₁` edges, the surviving `G₂` edges, then the three
/// connecting edges.
#[derive(Clone, Debug)]
pub struct ThreeJoin {
    pub graph: MultiGraph,
    pub vertices: [VertexId; 2],
    pub matching: [usize; 3],
    pub origin: Vec<JoinEdgeOrigin>,
    /// Natural inclusions `Gᵢ → G`, sending the star of `uᵢ` onto the
    /// connecting edges along the matching.
    pub inclusions: [EdgeMapping; 2],
}

impl ThreeJoin {
    pub fn connecting(&self) -> [EdgeId; 3] {
        let m = self.graph.edge_count();
        [m - 3, m - 2, m - 1]
    }
}

fn three_star(g: &MultiGraph, u: VertexId) -> Result<[EdgeId; 3]> {
    if u >= g.vertex_count() {
        return Err(Error::VertexOutOfRange {
            vertex: u,
            vertex_count: g.vertex_count(),
        });
    }
    if g.degree(u) != 3 || g.loop_count(u) > 0 {
        return Err(Error::Precondition(format!(
            "vertex {u} must have degree 3 and no loop"
        )));
    }
    let s = g.star(u);
    let mut nbrs: Vec<_> = s.iter().map(|&e| g.other_end(e, u)).collect();
    nbrs.sort_unstable();
    nbrs.dedup();
    if nbrs.len() != 3 {
        return Err(Error::Precondition(format!(
            "vertex {u} must have three distinct neighbours"
        )));
    }
    Ok([s[0], s[1], s[2]])
}

pub fn three_join(
    g1: &MultiGraph,
    u1: VertexId,
    g2: &MultiGraph,
    u2: VertexId,
    matching: [usize; 3],
) -> Result<ThreeJoin> {
    let mut seen = [false; 3];
    for &k in &matching {
        if k > 2 || std::mem::replace(&mut seen[k], true) {
            return Err(Error::Precondition(format!(
                "matching {matching:?} is not a permutation of 0..3"
            )));
        }
    }
    let s1 = three_star(g1, u1)?;
    let s2 = three_star(g2, u2)?;
    let n1 = g1.vertex_count() - 1;
    let v1 = |v: VertexId| if v < u1 { v } else { v - 1 };
    let v2 = |v: VertexId| n1 + if v < u2 { v } else { v - 1 };
    let mut edges = Vec::new();
    let mut origin = Vec::new();
    let mut inc1 = vec![0; g1.edge_count()];
    let mut inc2 = vec![0; g2.edge_count()];
    for (e, &(a, b)) in g1.edges().iter().enumerate() {
        if a != u1 && b != u1 {
            inc1[e] = edges.len();
            edges.push((v1(a), v1(b)));
            origin.push(JoinEdgeOrigin::First(e));
        }
    }
    for (e, &(a, b)) in g2.edges().iter().enumerate() {
        if a != u2 && b != u2 {
            inc2[e] = edges.len();
            edges.push((v2(a), v2(b)));
            origin.push(JoinEdgeOrigin::Second(e));
        }
    }
    for k in 0..3 {
        let (a, b) = (s1[k], s2[matching[k]]);
        inc1[a] = edges.len();
        inc2[b] = edges.len();
        edges.push((v1(g1.other_end(a, u1)), v2(g2.other_end(b, u2))));
        origin.push(JoinEdgeOrigin::Connecting(k));
    }
    let graph = MultiGraph::new(n1 + g2.vertex_count() - 1, edges)?;
    let inclusions = [
        EdgeMapping::new(g1, &graph, inc1)?,
        EdgeMapping::new(g2, &graph, inc2)?,
    ];
    Ok(ThreeJoin {
        graph,
        vertices: [u1, u2],
        matching,
        origin,
        inclusions,
    })
}

/// All six matchings in lexicographic order.
pub fn all_matchings() -> [[usize; 3]; 6] {
    [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cc::{verify_cc, VerifyMode};
    use crate::constructions::named_graph;
    use crate::graph::{is_bridgeless, is_isomorphic};

    #[test]
    fn two_join_of_k4s() {
        let k4 = named_graph("k4").unwrap();
        let j = two_join(&k4, 0, &k4, 5).unwrap();
        assert_eq!((j.graph.vertex_count(), j.graph.edge_count()), (8, 12));
        assert!(j.graph.is_cubic());
        assert!(is_bridgeless(&j.graph));
        for (i, g) in [&k4, &k4].into_iter().enumerate() {
            assert!(verify_cc(g, &j.graph, &j.inclusions[i], VerifyMode::Both).unwrap());
        }
        let lp = MultiGraph::new(1, vec![(0, 0)]).unwrap();
        assert!(two_join(&k4, 0, &lp, 0).is_err());
    }

    #[test]
    fn three_join_of_k4s_is_always_the_prism() {
        let k4 = named_graph("k4").unwrap();
        let prism = named_graph("prism").unwrap();
        for m in all_matchings() {
            let j = three_join(&k4, 0, &k4, 3, m).unwrap();
            assert_eq!((j.graph.vertex_count(), j.graph.edge_count()), (6, 9));
            assert!(is_isomorphic(&j.graph, &prism).unwrap().is_some());
            for i in 0..2 {
                assert!(verify_cc(&k4, &j.graph, &j.inclusions[i], VerifyMode::Both).unwrap());
            }
        }
    }

    #[test]
    fn three_join_preconditions() {
        let k4 = named_graph("k4").unwrap();
        let k23 = named_graph("k2_3").unwrap();
        assert!(three_join(&k4, 0, &k23, 0, [0, 1, 2]).is_err());
        assert!(three_join(&k4, 0, &k4, 0, [0, 0, 2]).is_err());
        assert!(three_join(&k4, 9, &k4, 0, [0, 1, 2]).is_err());
    }
}
