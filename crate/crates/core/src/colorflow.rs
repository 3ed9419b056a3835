//! 3-edge-colorings, nowhere-zero 4-flows, and the snark predicates.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cc::{search_cc, EdgeMapping, SearchConfig};
use crate::constructions::named_graph;
use crate::error::{Error, Result};
use crate::gf2::cycle_space_basis;
use crate::graph::{is_bridgeless, EdgeId, MultiGraph};

/// Largest cycle-space dimension [`four_nzf_exists`] will enumerate.
pub const NZF_DIMENSION_GUARD: usize = 22;

/// An assignment of colors `0..3` to the edges of a graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeColoring {
    pub colors: Vec<u8>,
}

impl EdgeColoring {
    /// No two edges at a vertex share a color, and no edge is a loop.
    pub fn is_proper(&self, g: &MultiGraph) -> bool {
        if self.colors.len() != g.edge_count() || self.colors.iter().any(|&c| c > 2) {
            return false;
        }
        (0..g.vertex_count()).all(|v| {
            let mut seen = [false; 3];
            g.incident(v).iter().all(|&e| {
                !g.is_loop(e) && !std::mem::replace(&mut seen[self.colors[e] as usize], true)
            })
        })
    }

    /// Reads a map into K₂³ as a coloring (edge `i` of K₂³ is color `i`).
    pub fn from_k23_map(f: &EdgeMapping) -> Self {
        EdgeColoring {
            colors: f.images().iter().map(|&x| x as u8).collect(),
        }
    }
}

fn require_cubic(g: &MultiGraph) -> Result<()> {
    if !g.is_cubic() || g.has_loops() {
        return Err(Error::NotCubic("expected a loopless cubic graph".into()));
    }
    Ok(())
}

/// A proper 3-edge-coloring of a loopless cubic graph, if one exists.
///
/// Edges are colored along the search vertex order; whenever two edges at a
/// vertex are colored the third is forced. The star of the first vertex is
/// fixed to colors 0, 1, 2, which loses nothing since colors can be permuted.
pub fn three_edge_coloring(g: &MultiGraph) -> Result<Option<EdgeColoring>> {
    require_cubic(g)?;
    if g.edge_count() == 0 {
        return Ok(Some(EdgeColoring { colors: Vec::new() }));
    }
    let mut order = Vec::with_capacity(g.edge_count());
    let mut placed = vec![false; g.edge_count()];
    for v in crate::cc::vertex_order(g) {
        for &e in g.incident(v) {
            if !std::mem::replace(&mut placed[e], true) {
                order.push(e);
            }
        }
    }
    let mut colors = vec![u8::MAX; g.edge_count()];
    let v0 = crate::cc::vertex_order(g)[0];
    let mut st = Colorer { g, colors: &mut colors };
    for (c, &e) in g.incident(v0).iter().enumerate() {
        if !st.set(e, c as u8) {
            return Ok(None);
        }
    }
    if st.extend(&order, 0) {
        Ok(Some(EdgeColoring { colors }))
    } else {
        Ok(None)
    }
}

struct Colorer<'a> {
    g: &'a MultiGraph,
    colors: &'a mut Vec<u8>,
}

impl Colorer<'_> {
    fn free_at(&self, v: usize, c: u8) -> bool {
        self.g.incident(v).iter().all(|&e| self.colors[e] != c)
    }

    /// Colors `e` and propagates forced colors; on conflict the partial
    /// assignment is left for the caller to undo via a snapshot.
    fn set(&mut self, e: EdgeId, c: u8) -> bool {
        let mut stack = vec![(e, c)];
        while let Some((e, c)) = stack.pop() {
            if self.colors[e] == c {
                continue;
            }
            if self.colors[e] != u8::MAX {
                return false;
            }
            let (a, b) = self.g.endpoints(e);
            if !self.free_at(a, c) || !self.free_at(b, c) {
                return false;
            }
            self.colors[e] = c;
            for v in [a, b] {
                let inc = self.g.incident(v);
                let open: Vec<EdgeId> =
                    inc.iter().copied().filter(|&x| self.colors[x] == u8::MAX).collect();
                if open.len() == 1 {
                    let used: u8 = inc
                        .iter()
                        .filter(|&&x| self.colors[x] != u8::MAX)
                        .map(|&x| 1u8 << self.colors[x])
                        .fold(0, |acc, bit| acc | bit);
                    let left = (!used & 0b111).trailing_zeros() as u8;
                    if left > 2 {
                        return false;
                    }
                    stack.push((open[0], left));
                }
            }
        }
        true
    }

    fn extend(&mut self, order: &[EdgeId], from: usize) -> bool {
        let Some(i) = (from..order.len()).find(|&i| self.colors[order[i]] == u8::MAX) else {
            return true;
        };
        let e = order[i];
        for c in 0..3u8 {
            let snapshot = self.colors.clone();
            if self.set(e, c) && self.extend(order, i + 1) {
                return true;
            }
            *self.colors = snapshot;
        }
        false
    }
}

/// Whether the edge set is the union of two cycles, which is equivalent to
/// a nowhere-zero 4-flow.
///
/// For each cycle `C₁` in turn (Gray-code order over the cycle basis), the
/// rest `E ∖ C₁` lies in some cycle exactly when it can be completed by
/// edges of `C₁`, i.e. when every component of `(V, C₁)` holds an even
/// number of odd-degree vertices of `G`.
pub fn four_nzf_exists(g: &MultiGraph) -> Result<bool> {
    let basis = cycle_space_basis(g);
    let d = basis.dimension();
    if d > NZF_DIMENSION_GUARD {
        return Err(Error::SizeGuard(format!(
            "cycle space dimension {d} exceeds {NZF_DIMENSION_GUARD}"
        )));
    }
    let odd: Vec<bool> = (0..g.vertex_count()).map(|v| g.degree(v) % 2 == 1).collect();
    let rows: Vec<Vec<EdgeId>> = basis.rows().iter().map(|r| r.to_vec()).collect();
    let mut in_c1 = vec![false; g.edge_count()];
    let mut parent: Vec<usize> = Vec::with_capacity(g.vertex_count());
    for step in 0u64..(1u64 << d) {
        if step > 0 {
            for &e in &rows[step.trailing_zeros() as usize] {
                in_c1[e] ^= true;
            }
        }
        parent.clear();
        parent.extend(0..g.vertex_count());
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            if in_c1[e] {
                let (a, b) = (find(&mut parent, u), find(&mut parent, v));
                parent[a] = b;
            }
        }
        let mut parity = vec![false; g.vertex_count()];
        for v in 0..g.vertex_count() {
            if odd[v] {
                let r = find(&mut parent, v);
                parity[r] ^= true;
            }
        }
        if parity.iter().all(|&p| !p) {
            return Ok(true);
        }
    }
    Ok(false)
}

fn find(parent: &mut [usize], mut v: usize) -> usize {
    while parent[v] != v {
        parent[v] = parent[parent[v]];
        v = parent[v];
    }
    v
}

/// Whether `G` has a cc map to K₂³, decided by every applicable route:
/// the two-cycle cover (when the cycle space is small enough), a
/// 3-edge-coloring of the graph with degree-2 vertices suppressed (when that
/// is loopless and cubic), and exhaustive search against K₂³. The routes must
/// agree.
pub fn cc_to_k23_exists(g: &MultiGraph) -> Result<bool> {
    let k23 = named_graph("k2_3")?;
    let out = search_cc(g, &k23, &SearchConfig::default())?;
    let by_search = out.exists().ok_or_else(|| {
        Error::Disagreement("unbudgeted search did not complete".into())
    })?;
    let mut verdicts = vec![("search", by_search)];
    match four_nzf_exists(g) {
        Ok(v) => verdicts.push(("two-cycle cover", v)),
        Err(Error::SizeGuard(_)) => {}
        Err(e) => return Err(e),
    }
    let (s, _) = g.suppress_degree_two();
    if s.is_cubic() && !s.has_loops() {
        verdicts.push(("coloring", three_edge_coloring(&s)?.is_some()));
    }
    if verdicts.iter().any(|&(_, v)| v != by_search) {
        return Err(Error::Disagreement(format!(
            "routes to K2^3 disagree: {verdicts:?}"
        )));
    }
    Ok(by_search)
}

/// Cubic, connected, bridgeless, and without a cc map to K₂³.
pub fn is_snark(g: &MultiGraph) -> Result<bool> {
    if !g.is_cubic() || !g.is_connected() || !is_bridgeless(g) {
        return Ok(false);
    }
    Ok(!cc_to_k23_exists(g)?)
}

/// Whether every edge deletion of the snark `G` maps to K₂³. Each edge is
/// also contracted and the two verdicts must agree.
pub fn is_critical_snark(g: &MultiGraph) -> Result<bool> {
    if !is_snark(g)? {
        return Err(Error::Precondition("input is not a snark".into()));
    }
    let verdicts = (0..g.edge_count())
        .into_par_iter()
        .map(|e| {
            let del = cc_to_k23_exists(&g.delete_edge(e)?.0)?;
            let con = cc_to_k23_exists(&g.contract_edge(e)?.0)?;
            if del != con {
                return Err(Error::Disagreement(format!(
                    "edge {e}: deletion says {del}, contraction says {con}"
                )));
            }
            Ok(del)
        })
        .collect::<Result<Vec<bool>>>()?;
    Ok(verdicts.into_iter().all(|v| v))
}
