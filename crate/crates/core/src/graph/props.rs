use std::collections::{BTreeSet, VecDeque};

use super::{EdgeId, MultiGraph, VertexId};
use crate::gf2;

/// BFS distances from `source`; `usize::MAX` marks unreachable vertices.
pub fn shortest_distances(g: &MultiGraph, source: VertexId) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.vertex_count()];
    let mut queue = VecDeque::from([source]);
    dist[source] = 0;
    while let Some(u) = queue.pop_front() {
        for w in g.neighbors(u) {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

fn reaches_without(g: &MultiGraph, from: VertexId, to: VertexId, skip: EdgeId) -> bool {
    let mut seen = vec![false; g.vertex_count()];
    let mut stack = vec![from];
    seen[from] = true;
    while let Some(u) = stack.pop() {
        if u == to {
            return true;
        }
        for &e in g.incident(u) {
            if e == skip {
                continue;
            }
            let w = g.other_end(e, u);
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    false
}

/// True when no single edge is a cut.
pub fn is_bridgeless(g: &MultiGraph) -> bool {
    (0..g.edge_count()).all(|e| {
        let (u, v) = g.endpoints(e);
        u == v || reaches_without(g, u, v, e)
    })
}

/// Length of a shortest cycle; loops have length 1 and digons length 2.
/// `None` stands for infinite girth (a forest).
pub fn girth(g: &MultiGraph) -> Option<usize> {
    if g.has_loops() {
        return Some(1);
    }
    let n = g.vertex_count();
    let mut best: Option<usize> = None;
    for root in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut via = vec![usize::MAX; n];
        let mut queue = VecDeque::from([root]);
        dist[root] = 0;
        while let Some(u) = queue.pop_front() {
            if best.is_some_and(|b| 2 * dist[u] + 1 >= b) {
                break;
            }
            for &e in g.incident(u) {
                if e == via[u] {
                    continue;
                }
                let w = g.other_end(e, u);
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    via[w] = e;
                    queue.push_back(w);
                } else {
                    let len = dist[u] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

/// All cycles of exactly `len` edges, each as an ascending edge-id list.
pub fn cycles_of_length(g: &MultiGraph, len: usize) -> Vec<Vec<EdgeId>> {
    let mut found: BTreeSet<Vec<EdgeId>> = BTreeSet::new();
    match len {
        0 => {}
        1 => {
            for e in 0..g.edge_count() {
                if g.is_loop(e) {
                    found.insert(vec![e]);
                }
            }
        }
        _ => {
            for start in 0..g.vertex_count() {
                let mut path_v = vec![start];
                let mut path_e = Vec::new();
                extend_cycle(g, len, start, &mut path_v, &mut path_e, &mut found);
            }
        }
    }
    found.into_iter().collect()
}

fn extend_cycle(
    g: &MultiGraph,
    len: usize,
    start: VertexId,
    path_v: &mut Vec<VertexId>,
    path_e: &mut Vec<EdgeId>,
    found: &mut BTreeSet<Vec<EdgeId>>,
) {
    let u = *path_v.last().unwrap();
    for &e in g.incident(u) {
        if g.is_loop(e) || path_e.contains(&e) {
            continue;
        }
        let w = g.other_end(e, u);
        if path_e.len() + 1 == len {
            if w == start {
                let mut cyc = path_e.clone();
                cyc.push(e);
                cyc.sort_unstable();
                found.insert(cyc);
            }
        } else if w > start && !path_v.contains(&w) {
            path_v.push(w);
            path_e.push(e);
            extend_cycle(g, len, start, path_v, path_e, found);
            path_v.pop();
            path_e.pop();
        }
    }
}

/// Number of components of `g − removed` that contain a cycle.
fn cyclic_components_without(g: &MultiGraph, removed: &[bool]) -> usize {
    let n = g.vertex_count();
    let mut comp = vec![usize::MAX; n];
    let mut cyclic = 0;
    let mut stack = Vec::new();
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        comp[s] = s;
        stack.push(s);
        let (mut verts, mut edge_ends) = (0usize, 0usize);
        while let Some(u) = stack.pop() {
            verts += 1;
            for &e in g.incident(u) {
                if removed[e] {
                    continue;
                }
                edge_ends += 1;
                let w = g.other_end(e, u);
                if comp[w] == usize::MAX {
                    comp[w] = s;
                    stack.push(w);
                }
            }
        }
        if edge_ends / 2 >= verts {
            cyclic += 1;
        }
    }
    cyclic
}

fn vertex_set_splits(g: &MultiGraph, inside: &[bool]) -> Option<usize> {
    let crossing: Vec<bool> = g.edges().iter().map(|&(u, v)| inside[u] != inside[v]).collect();
    let side_cyclic = |keep: bool| cyclic_components_restricted(g, &crossing, inside, keep) > 0;
    if side_cyclic(true) && side_cyclic(false) {
        Some(crossing.iter().filter(|&&c| c).count())
    } else {
        None
    }
}

fn cyclic_components_restricted(
    g: &MultiGraph,
    removed: &[bool],
    inside: &[bool],
    keep: bool,
) -> usize {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut count = 0;
    for s in 0..n {
        if seen[s] || inside[s] != keep {
            continue;
        }
        seen[s] = true;
        let mut stack = vec![s];
        let (mut verts, mut ends) = (0usize, 0usize);
        while let Some(u) = stack.pop() {
            verts += 1;
            for &e in g.incident(u) {
                if removed[e] {
                    continue;
                }
                ends += 1;
                let w = g.other_end(e, u);
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        if ends / 2 >= verts {
            count += 1;
        }
    }
    count
}

/// Cheap upper bound from balls and short closed walks around each vertex.
fn candidate_bound(g: &MultiGraph) -> Option<usize> {
    let n = g.vertex_count();
    let mut best: Option<usize> = None;
    let mut consider = |inside: &[bool]| {
        if let Some(k) = vertex_set_splits(g, inside) {
            best = Some(best.map_or(k, |b| b.min(k)));
        }
    };
    for v in 0..n {
        let dist = shortest_distances(g, v);
        let radius = dist.iter().filter(|&&d| d != usize::MAX).max().copied();
        for r in 0..=radius.unwrap_or(0) {
            let inside: Vec<bool> = dist.iter().map(|&d| d <= r).collect();
            consider(&inside);
        }
        if let Some(walk) = short_cycle_vertices(g, v) {
            let mut inside = vec![false; n];
            for w in walk {
                inside[w] = true;
            }
            consider(&inside);
        }
    }
    best
}

/// Vertex set of a shortest closed walk through the BFS tree rooted at `root`.
fn short_cycle_vertices(g: &MultiGraph, root: VertexId) -> Option<Vec<VertexId>> {
    let n = g.vertex_count();
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut via = vec![usize::MAX; n];
    let mut queue = VecDeque::from([root]);
    dist[root] = 0;
    let mut best: Option<(usize, VertexId, VertexId)> = None;
    while let Some(u) = queue.pop_front() {
        for &e in g.incident(u) {
            if e == via[u] {
                continue;
            }
            let w = g.other_end(e, u);
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                parent[w] = u;
                via[w] = e;
                queue.push_back(w);
            } else {
                let len = dist[u] + dist[w] + 1;
                if best.map_or(true, |(b, _, _)| len < b) {
                    best = Some((len, u, w));
                }
            }
        }
    }
    let (_, a, b) = best?;
    let mut verts = Vec::new();
    for mut x in [a, b] {
        loop {
            verts.push(x);
            if x == root {
                break;
            }
            x = parent[x];
        }
    }
    verts.sort_unstable();
    verts.dedup();
    Some(verts)
}

/// Minimum size of an edge cut leaving two components that both contain a
/// cycle; `None` for infinity (no such cut exists, as in K₂³).
///
/// Candidate cuts from balls and short cycles give an upper bound; every
/// cut-space vector of smaller weight is then checked. Without any candidate,
/// graphs up to 20 vertices are settled by scanning all vertex bipartitions.
pub fn cyclic_edge_connectivity(g: &MultiGraph) -> Option<usize> {
    let n = g.vertex_count();
    let bound = candidate_bound(g);
    let limit = match bound {
        Some(b) => b.saturating_sub(1),
        None if n <= 20 => return exhaustive_cyclic_connectivity(g),
        None => g.edge_count(),
    };
    if limit == 0 {
        return bound;
    }
    let cuts = gf2::enumerate_small_cut_vectors_unbounded(g, limit);
    let mut removed = vec![false; g.edge_count()];
    for cut in &cuts {
        for e in cut.iter() {
            removed[e] = true;
        }
        let split = cyclic_components_without(g, &removed) >= 2;
        for e in cut.iter() {
            removed[e] = false;
        }
        if split {
            return Some(cut.weight());
        }
    }
    bound
}

fn exhaustive_cyclic_connectivity(g: &MultiGraph) -> Option<usize> {
    let n = g.vertex_count();
    if n < 2 {
        return None;
    }
    let mut best: Option<usize> = None;
    // Vertex 0 stays outside to visit each bipartition once.
    for mask in 1u64..(1u64 << (n - 1)) {
        let inside: Vec<bool> = (0..n).map(|v| v > 0 && mask >> (v - 1) & 1 == 1).collect();
        if let Some(k) = vertex_set_splits(g, &inside) {
            best = Some(best.map_or(k, |b| b.min(k)));
        }
    }
    best
}
