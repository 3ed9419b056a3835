//! Automorphisms and isomorphisms of multigraphs.
//!
//! An isomorphism is an incidence-preserving pair of bijections (vertices,
//! edges). The vertex part is found by backtracking; candidates are pruned
//! by degree, loop count and BFS distance profile, and every new pair must
//! agree on pairwise distances and edge multiplicities with the pairs already
//! fixed. Parallel edges between the same pair of vertices are then matched
//! in every possible way (automorphisms) or in index order (a witness).

use std::collections::{BTreeMap, BTreeSet};

use super::{props::shortest_distances, EdgeId, MultiGraph, VertexId};
use crate::error::{Error, Result};

/// A pair of bijections preserving incidence. Between two different graphs
/// the same type serves as an isomorphism witness.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Automorphism {
    pub vertex_map: Vec<VertexId>,
    pub edge_map: Vec<EdgeId>,
}

impl Automorphism {
    pub fn identity(g: &MultiGraph) -> Self {
        Automorphism {
            vertex_map: (0..g.vertex_count()).collect(),
            edge_map: (0..g.edge_count()).collect(),
        }
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &Automorphism) -> Automorphism {
        Automorphism {
            vertex_map: self.vertex_map.iter().map(|&v| next.vertex_map[v]).collect(),
            edge_map: self.edge_map.iter().map(|&e| next.edge_map[e]).collect(),
        }
    }

    pub fn inverse(&self) -> Automorphism {
        let mut vertex_map = vec![0; self.vertex_map.len()];
        for (v, &w) in self.vertex_map.iter().enumerate() {
            vertex_map[w] = v;
        }
        let mut edge_map = vec![0; self.edge_map.len()];
        for (e, &f) in self.edge_map.iter().enumerate() {
            edge_map[f] = e;
        }
        Automorphism {
            vertex_map,
            edge_map,
        }
    }

    /// Checks bijectivity and incidence preservation from `g` to `h`.
    pub fn is_valid(&self, g: &MultiGraph, h: &MultiGraph) -> bool {
        if self.vertex_map.len() != g.vertex_count()
            || self.edge_map.len() != g.edge_count()
            || g.vertex_count() != h.vertex_count()
            || g.edge_count() != h.edge_count()
        {
            return false;
        }
        let vs: BTreeSet<_> = self.vertex_map.iter().copied().collect();
        let es: BTreeSet<_> = self.edge_map.iter().copied().collect();
        if vs.len() != h.vertex_count()
            || es.len() != h.edge_count()
            || vs.iter().any(|&v| v >= h.vertex_count())
            || es.iter().any(|&e| e >= h.edge_count())
        {
            return false;
        }
        g.edges().iter().enumerate().all(|(e, &(u, v))| {
            let (a, b) = h.endpoints(self.edge_map[e]);
            let (pu, pv) = (self.vertex_map[u], self.vertex_map[v]);
            (a == pu && b == pv) || (a == pv && b == pu)
        })
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SymmetryConfig {
    pub max_vertices: usize,
    pub max_automorphisms: usize,
}

impl Default for SymmetryConfig {
    fn default() -> Self {
        SymmetryConfig {
            max_vertices: 160,
            max_automorphisms: 1_000_000,
        }
    }
}

struct Profile {
    n: usize,
    dist: Vec<usize>,
    mult: Vec<u32>,
    invariant: Vec<Vec<usize>>,
}

impl Profile {
    fn new(g: &MultiGraph) -> Self {
        let n = g.vertex_count();
        let mut dist = Vec::with_capacity(n * n);
        let mut invariant = Vec::with_capacity(n);
        for v in 0..n {
            let d = shortest_distances(g, v);
            let mut inv = vec![g.degree(v), g.loop_count(v)];
            let mut layer = vec![0usize; n + 1];
            for &x in &d {
                layer[x.min(n)] += 1;
            }
            inv.extend(layer);
            let mut nd: Vec<usize> = g.neighbors(v).map(|w| g.degree(w)).collect();
            nd.sort_unstable();
            inv.extend(nd);
            invariant.push(inv);
            dist.extend(d);
        }
        let mut mult = vec![0u32; n * n];
        for &(u, v) in g.edges() {
            mult[u * n + v] += 1;
            if u != v {
                mult[v * n + u] += 1;
            }
        }
        Profile {
            n,
            dist,
            mult,
            invariant,
        }
    }

    fn d(&self, u: usize, v: usize) -> usize {
        self.dist[u * self.n + v]
    }

    fn m(&self, u: usize, v: usize) -> u32 {
        self.mult[u * self.n + v]
    }
}

fn guard(g: &MultiGraph, cfg: &SymmetryConfig) -> Result<()> {
    if g.vertex_count() > cfg.max_vertices {
        return Err(Error::SizeGuard(format!(
            "{} vertices exceeds symmetry limit {}",
            g.vertex_count(),
            cfg.max_vertices
        )));
    }
    Ok(())
}

/// Search order: BFS from the vertex with the rarest invariant, per component.
fn search_order(g: &MultiGraph, p: &Profile) -> Vec<VertexId> {
    let n = g.vertex_count();
    let mut class_size: BTreeMap<&Vec<usize>, usize> = BTreeMap::new();
    for inv in &p.invariant {
        *class_size.entry(inv).or_default() += 1;
    }
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        let start = (0..n)
            .filter(|&v| !placed[v])
            .min_by_key(|&v| (class_size[&p.invariant[v]], v))
            .unwrap();
        placed[start] = true;
        let mut head = order.len();
        order.push(start);
        while head < order.len() {
            let u = order[head];
            head += 1;
            let mut next: Vec<VertexId> = g.neighbors(u).filter(|&w| !placed[w]).collect();
            next.sort_by_key(|&w| (class_size[&p.invariant[w]], w));
            next.dedup();
            for w in next {
                if !placed[w] {
                    placed[w] = true;
                    order.push(w);
                }
            }
        }
    }
    order
}

fn vertex_bijections(g: &MultiGraph, h: &MultiGraph, first_only: bool, limit: usize) -> Vec<Vec<VertexId>> {
    let n = g.vertex_count();
    if n != h.vertex_count() || g.edge_count() != h.edge_count() {
        return Vec::new();
    }
    let pg = Profile::new(g);
    let ph = Profile::new(h);
    let mut ig = pg.invariant.clone();
    let mut ih = ph.invariant.clone();
    ig.sort();
    ih.sort();
    if ig != ih {
        return Vec::new();
    }
    let order = search_order(g, &pg);
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let mut out = Vec::new();

    struct Ctx<'a> {
        pg: &'a Profile,
        ph: &'a Profile,
        order: &'a [VertexId],
        first_only: bool,
        limit: usize,
    }

    fn rec(
        ctx: &Ctx,
        depth: usize,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) -> bool {
        if depth == ctx.order.len() {
            out.push(map.clone());
            return ctx.first_only || out.len() >= ctx.limit;
        }
        let v = ctx.order[depth];
        for w in 0..ctx.ph.n {
            if used[w] || ctx.pg.invariant[v] != ctx.ph.invariant[w] {
                continue;
            }
            if ctx.pg.m(v, v) != ctx.ph.m(w, w) {
                continue;
            }
            let consistent = ctx.order[..depth].iter().all(|&x| {
                let y = map[x];
                ctx.pg.d(x, v) == ctx.ph.d(y, w) && ctx.pg.m(x, v) == ctx.ph.m(y, w)
            });
            if !consistent {
                continue;
            }
            map[v] = w;
            used[w] = true;
            let stop = rec(ctx, depth + 1, map, used, out);
            used[w] = false;
            map[v] = usize::MAX;
            if stop {
                return true;
            }
        }
        false
    }

    let ctx = Ctx {
        pg: &pg,
        ph: &ph,
        order: &order,
        first_only,
        limit,
    };
    rec(&ctx, 0, &mut map, &mut used, &mut out);
    out
}

fn edge_classes(g: &MultiGraph) -> BTreeMap<(VertexId, VertexId), Vec<EdgeId>> {
    let mut classes: BTreeMap<(VertexId, VertexId), Vec<EdgeId>> = BTreeMap::new();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        classes.entry((u.min(v), u.max(v))).or_default().push(e);
    }
    classes
}

/// For a vertex bijection, the target class of each source edge class.
fn paired_classes(
    g: &MultiGraph,
    h: &MultiGraph,
    vmap: &[VertexId],
) -> Vec<(Vec<EdgeId>, Vec<EdgeId>)> {
    let hc = edge_classes(h);
    edge_classes(g)
        .into_iter()
        .map(|((u, v), es)| {
            let (a, b) = (vmap[u], vmap[v]);
            let target = hc[&(a.min(b), a.max(b))].clone();
            (es, target)
        })
        .collect()
}

fn permutations(items: &[EdgeId]) -> Vec<Vec<EdgeId>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

/// Full automorphism group, sorted by (vertex map, edge map).
pub fn automorphisms(g: &MultiGraph) -> Result<Vec<Automorphism>> {
    automorphisms_with(g, &SymmetryConfig::default())
}

pub fn automorphisms_with(g: &MultiGraph, cfg: &SymmetryConfig) -> Result<Vec<Automorphism>> {
    guard(g, cfg)?;
    let vmaps = vertex_bijections(g, g, false, cfg.max_automorphisms + 1);
    if vmaps.len() > cfg.max_automorphisms {
        return Err(Error::SizeGuard("automorphism count".into()));
    }
    let mut out = Vec::new();
    for vmap in vmaps {
        let mut partial = vec![vec![usize::MAX; g.edge_count()]];
        for (src, dst) in paired_classes(g, g, &vmap) {
            let perms = permutations(&dst);
            let mut next = Vec::with_capacity(partial.len() * perms.len());
            for base in &partial {
                for p in &perms {
                    let mut em = base.clone();
                    for (&s, &d) in src.iter().zip(p) {
                        em[s] = d;
                    }
                    next.push(em);
                }
            }
            partial = next;
            if partial.len() > cfg.max_automorphisms {
                return Err(Error::SizeGuard("automorphism count".into()));
            }
        }
        out.extend(partial.into_iter().map(|edge_map| Automorphism {
            vertex_map: vmap.clone(),
            edge_map,
        }));
        if out.len() > cfg.max_automorphisms {
            return Err(Error::SizeGuard("automorphism count".into()));
        }
    }
    out.sort();
    Ok(out)
}

/// An isomorphism witness from `g` to `h`, or `None`.
pub fn is_isomorphic(g: &MultiGraph, h: &MultiGraph) -> Result<Option<Automorphism>> {
    is_isomorphic_with(g, h, &SymmetryConfig::default())
}

pub fn is_isomorphic_with(
    g: &MultiGraph,
    h: &MultiGraph,
    cfg: &SymmetryConfig,
) -> Result<Option<Automorphism>> {
    guard(g, cfg)?;
    guard(h, cfg)?;
    let Some(vmap) = vertex_bijections(g, h, true, 1).into_iter().next() else {
        return Ok(None);
    };
    let mut edge_map = vec![usize::MAX; g.edge_count()];
    for (src, dst) in paired_classes(g, h, &vmap) {
        for (s, d) in src.into_iter().zip(dst) {
            edge_map[s] = d;
        }
    }
    Ok(Some(Automorphism {
        vertex_map: vmap,
        edge_map,
    }))
}

/// The automorphism group acts transitively on edges.
pub fn is_edge_transitive(g: &MultiGraph) -> Result<bool> {
    if g.edge_count() == 0 {
        return Ok(true);
    }
    let group = automorphisms(g)?;
    let orbit: BTreeSet<EdgeId> = group.iter().map(|a| a.edge_map[0]).collect();
    Ok(orbit.len() == g.edge_count())
}

/// For a cubic graph: any vertex with any ordering of its incident edges can
/// be carried onto any other vertex with any ordering of its incident edges.
pub fn has_ordered_star_transitivity(g: &MultiGraph) -> Result<bool> {
    if !g.is_cubic() {
        return Err(Error::NotCubic(
            "ordered-star transitivity is defined for cubic graphs".into(),
        ));
    }
    if g.vertex_count() == 0 {
        return Ok(true);
    }
    let all: BTreeSet<(VertexId, Vec<EdgeId>)> = (0..g.vertex_count())
        .flat_map(|u| permutations(g.incident(u)).into_iter().map(move |p| (u, p)))
        .collect();
    let base = g.incident(0).to_vec();
    let group = automorphisms(g)?;
    let orbit: BTreeSet<(VertexId, Vec<EdgeId>)> = group
        .iter()
        .map(|a| (a.vertex_map[0], base.iter().map(|&e| a.edge_map[e]).collect()))
        .collect();
    Ok(orbit == all)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::named_graph;

    fn brute_force_automorphism_count(g: &MultiGraph) -> usize {
        // Every vertex permutation times edge bijections within classes.
        fn perms(n: usize) -> Vec<Vec<usize>> {
            permutations(&(0..n).collect::<Vec<_>>())
        }
        let mut count = 0;
        for p in perms(g.vertex_count()) {
            let mut ok = true;
            let mut ways = 1;
            for u in 0..g.vertex_count() {
                for v in u..g.vertex_count() {
                    let m = g.multiplicity(u, v);
                    if m != g.multiplicity(p[u], p[v]) {
                        ok = false;
                    }
                    ways *= (1..=m).product::<usize>();
                }
            }
            if ok {
                count += ways;
            }
        }
        count
    }

    #[test]
    fn k23_has_twelve() {
        let g = named_graph("k2_3").unwrap();
        let auts = automorphisms(&g).unwrap();
        assert_eq!(auts.len(), 12);
        assert_eq!(brute_force_automorphism_count(&g), 12);
        assert!(auts.iter().all(|a| a.is_valid(&g, &g)));
    }

    #[test]
    fn single_loop_has_one() {
        let g = MultiGraph::new(1, vec![(0, 0)]).unwrap();
        assert_eq!(automorphisms(&g).unwrap().len(), 1);
    }

    #[test]
    fn small_graphs_match_brute_force() {
        for name in ["k4", "prism", "k3_3"] {
            let g = named_graph(name).unwrap();
            assert_eq!(
                automorphisms(&g).unwrap().len(),
                brute_force_automorphism_count(&g),
                "{name}"
            );
        }
    }

    #[test]
    fn petersen_group() {
        let g = named_graph("petersen").unwrap();
        assert_eq!(automorphisms(&g).unwrap().len(), 120);
        assert!(is_edge_transitive(&g).unwrap());
        assert!(has_ordered_star_transitivity(&g).unwrap());
    }

    #[test]
    fn k23_transitivity() {
        let g = named_graph("k2_3").unwrap();
        assert!(is_edge_transitive(&g).unwrap());
        assert!(has_ordered_star_transitivity(&g).unwrap());
    }

    #[test]
    fn prism_not_edge_transitive() {
        let g = named_graph("prism").unwrap();
        assert!(!is_edge_transitive(&g).unwrap());
        let path = MultiGraph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        assert!(has_ordered_star_transitivity(&path).is_err());
    }

    #[test]
    fn isomorphism_witness_is_valid() {
        let g = named_graph("petersen").unwrap();
        // Relabel by reversing the vertex order.
        let n = g.vertex_count();
        let h = MultiGraph::new(
            n,
            g.edges().iter().rev().map(|&(u, v)| (n - 1 - v, n - 1 - u)).collect(),
        )
        .unwrap();
        let w = is_isomorphic(&g, &h).unwrap().unwrap();
        assert!(w.is_valid(&g, &h));
        assert!(w.inverse().is_valid(&h, &g));
        let k23 = named_graph("k2_3").unwrap();
        let tri = MultiGraph::new(3, vec![(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(is_isomorphic(&k23, &tri).unwrap().is_none());
    }

    #[test]
    fn size_guard() {
        let g = MultiGraph::new(10, vec![]).unwrap();
        let cfg = SymmetryConfig {
            max_vertices: 5,
            ..Default::default()
        };
        assert!(matches!(automorphisms_with(&g, &cfg), Err(Error::SizeGuard(_))));
    }
}
