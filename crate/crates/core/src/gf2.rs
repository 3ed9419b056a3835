//! Linear algebra over GF(2) on the edge space of a multigraph.
//!
//! A *cycle* is an edge set meeting every vertex an even number of times
//! (loops count twice, so they never matter for parity); a *cut* is a set of
//! the form δ(U). Over GF(2) the cycles form the null space of the
//! vertex–edge incidence matrix and the cuts form its row space. A loop has
//! an all-zero incidence column: it is a cycle by itself and lies in no cut.
//!
//! Rows are bit-packed into `u64` words so that sums are word-parallel XORs.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, GraphId, MultiGraph};

/// Default cap on the number of vectors returned by
/// [`enumerate_small_cut_vectors`].
pub const DEFAULT_CUT_VECTOR_LIMIT: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) struct Bits {
    words: Vec<u64>,
    len: usize,
}

impl Bits {
    pub(crate) fn zeros(len: usize) -> Self {
        Bits {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub(crate) fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub(crate) fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub(crate) fn flip(&mut self, i: usize) {
        self.words[i / 64] ^= 1 << (i % 64);
    }

    pub(crate) fn xor_assign(&mut self, other: &Bits) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub(crate) fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub(crate) fn lowest_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub(crate) fn and_parity(&self, other: &Bits) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum::<u32>()
            % 2
            == 1
    }

    pub(crate) fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + t)
            })
        })
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }
}

/// A subset of the edges of one particular graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EdgeSet {
    owner: GraphId,
    bits: Bits,
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl EdgeSet {
    pub fn empty(g: &MultiGraph) -> Self {
        EdgeSet {
            owner: g.id(),
            bits: Bits::zeros(g.edge_count()),
        }
    }

    pub fn full(g: &MultiGraph) -> Self {
        let mut s = Self::empty(g);
        for e in 0..g.edge_count() {
            s.bits.set(e);
        }
        s
    }

    /// Builds a set; listing an edge twice toggles it back out.
    pub fn from_edges(g: &MultiGraph, edges: impl IntoIterator<Item = EdgeId>) -> Result<Self> {
        let mut s = Self::empty(g);
        for e in edges {
            if e >= g.edge_count() {
                return Err(Error::EdgeOutOfRange {
                    edge: e,
                    edge_count: g.edge_count(),
                });
            }
            s.bits.flip(e);
        }
        Ok(s)
    }

    /// The elementary cut δ({v}).
    pub fn star(g: &MultiGraph, v: usize) -> Self {
        Self::from_edges(g, g.star(v)).expect("star edges in range")
    }

    fn from_bits(owner: GraphId, bits: Bits) -> Self {
        EdgeSet { owner, bits }
    }

    pub fn owner(&self) -> GraphId {
        self.owner
    }

    /// Size of the edge universe.
    pub fn universe(&self) -> usize {
        self.bits.len
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        e < self.bits.len && self.bits.get(e)
    }

    pub fn toggle(&mut self, e: EdgeId) {
        self.bits.flip(e);
    }

    pub fn weight(&self) -> usize {
        self.bits.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_zero()
    }

    /// Edge ids in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.bits.iter_ones()
    }

    pub fn to_vec(&self) -> Vec<EdgeId> {
        self.iter().collect()
    }

    /// Symmetric difference, the group operation of the edge space.
    pub fn sym_diff(&self, other: &EdgeSet) -> Result<EdgeSet> {
        if self.owner != other.owner {
            return Err(Error::OwnerMismatch);
        }
        let mut bits = self.bits.clone();
        bits.xor_assign(&other.bits);
        Ok(EdgeSet::from_bits(self.owner, bits))
    }

    /// Parity of `|self ∩ other|`.
    pub fn meets_oddly(&self, other: &EdgeSet) -> Result<bool> {
        if self.owner != other.owner {
            return Err(Error::OwnerMismatch);
        }
        Ok(self.bits.and_parity(&other.bits))
    }
}

/// A subspace of the edge space in reduced row echelon form: each row's
/// pivot is its lowest edge id, and no other row has that bit set.
#[derive(Clone, Debug)]
pub struct Gf2Basis {
    owner: GraphId,
    width: usize,
    rows: Vec<Bits>,
    pivots: Vec<usize>,
}

impl Gf2Basis {
    pub fn new(g: &MultiGraph) -> Self {
        Gf2Basis {
            owner: g.id(),
            width: g.edge_count(),
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    /// Adds a generator; returns false if it was already in the span.
    pub fn insert(&mut self, set: &EdgeSet) -> Result<bool> {
        if set.owner != self.owner {
            return Err(Error::OwnerMismatch);
        }
        Ok(self.insert_bits(set.bits.clone()))
    }

    fn insert_bits(&mut self, mut v: Bits) -> bool {
        self.reduce(&mut v);
        let Some(p) = v.lowest_one() else {
            return false;
        };
        for row in &mut self.rows {
            if row.get(p) {
                row.xor_assign(&v);
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        true
    }

    fn reduce(&self, v: &mut Bits) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v.get(p) {
                v.xor_assign(row);
            }
        }
    }

    pub fn owner(&self) -> GraphId {
        self.owner
    }

    pub fn dimension(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn rows(&self) -> Vec<EdgeSet> {
        self.rows
            .iter()
            .map(|r| EdgeSet::from_bits(self.owner, r.clone()))
            .collect()
    }

    pub(crate) fn raw_rows(&self) -> &[Bits] {
        &self.rows
    }

    /// Membership in the spanned subspace.
    pub fn contains(&self, set: &EdgeSet) -> Result<bool> {
        if set.owner != self.owner {
            return Err(Error::OwnerMismatch);
        }
        let mut v = set.bits.clone();
        self.reduce(&mut v);
        Ok(v.is_zero())
    }

    /// The member of the span whose pivot coordinates are given by `coeffs`.
    pub fn combine(&self, coeffs: impl IntoIterator<Item = bool>) -> EdgeSet {
        let mut acc = Bits::zeros(self.width);
        for (row, take) in self.rows.iter().zip(coeffs) {
            if take {
                acc.xor_assign(row);
            }
        }
        EdgeSet::from_bits(self.owner, acc)
    }
}

/// Membership of `set` in the span of `basis`.
pub fn in_span(basis: &Gf2Basis, set: &EdgeSet) -> Result<bool> {
    basis.contains(set)
}

/// Fundamental cycles of a BFS spanning forest (vertices in index order),
/// one per non-tree edge; each loop is its own fundamental cycle.
pub fn fundamental_cycles(g: &MultiGraph) -> Vec<EdgeSet> {
    let n = g.vertex_count();
    let mut parent_edge = vec![usize::MAX; n];
    let mut depth = vec![usize::MAX; n];
    let mut tree = vec![false; g.edge_count()];
    for root in 0..n {
        if depth[root] != usize::MAX {
            continue;
        }
        depth[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &e in g.incident(u) {
                let w = g.other_end(e, u);
                if depth[w] == usize::MAX {
                    depth[w] = depth[u] + 1;
                    parent_edge[w] = e;
                    tree[e] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    let mut out = Vec::new();
    for e in 0..g.edge_count() {
        if tree[e] {
            continue;
        }
        let mut cyc = EdgeSet::empty(g);
        cyc.toggle(e);
        let (mut a, mut b) = g.endpoints(e);
        while a != b {
            if depth[a] < depth[b] {
                std::mem::swap(&mut a, &mut b);
            }
            let pe = parent_edge[a];
            cyc.toggle(pe);
            a = g.other_end(pe, a);
        }
        out.push(cyc);
    }
    out
}

/// Basis of the cycle space; dimension `m − n + c`.
pub fn cycle_space_basis(g: &MultiGraph) -> Gf2Basis {
    let mut b = Gf2Basis::new(g);
    for c in fundamental_cycles(g) {
        b.insert_bits(c.bits);
    }
    b
}

/// Basis of the cut space (spanned by the vertex stars); dimension `n − c`.
pub fn cut_space_basis(g: &MultiGraph) -> Gf2Basis {
    let mut b = Gf2Basis::new(g);
    for v in 0..g.vertex_count() {
        b.insert_bits(EdgeSet::star(g, v).bits);
    }
    b
}

fn check_owner(g: &MultiGraph, set: &EdgeSet) -> Result<()> {
    if set.owner != g.id() || set.universe() != g.edge_count() {
        return Err(Error::OwnerMismatch);
    }
    Ok(())
}

/// Every vertex meets `set` in an even number of non-loop edges.
pub fn is_cycle(g: &MultiGraph, set: &EdgeSet) -> Result<bool> {
    check_owner(g, set)?;
    Ok(even_everywhere(g, set.iter()))
}

pub(crate) fn even_everywhere(g: &MultiGraph, edges: impl Iterator<Item = EdgeId>) -> bool {
    let mut parity = vec![false; g.vertex_count()];
    for e in edges {
        let (u, v) = g.endpoints(e);
        if u != v {
            parity[u] ^= true;
            parity[v] ^= true;
        }
    }
    parity.iter().all(|&p| !p)
}

/// `set` has the form δ(U) for some vertex set U (the empty set included).
pub fn is_cut(g: &MultiGraph, set: &EdgeSet) -> Result<bool> {
    check_owner(g, set)?;
    cut_space_basis(g).contains(set)
}

/// Both edge-space bases of one graph plus per-edge syndromes.
///
/// The syndrome of an edge records which cycle-basis rows contain it. A set
/// is a cut exactly when the XOR of its syndromes vanishes, because the cut
/// space is the orthogonal complement of the cycle space.
#[derive(Clone, Debug)]
pub struct EdgeSpaces {
    pub cycles: Gf2Basis,
    pub cuts: Gf2Basis,
    syndromes: Vec<Bits>,
}

impl EdgeSpaces {
    pub fn new(g: &MultiGraph) -> Self {
        let cycles = cycle_space_basis(g);
        let cuts = cut_space_basis(g);
        let d = cycles.dimension();
        let mut syndromes = vec![Bits::zeros(d); g.edge_count()];
        for (i, row) in cycles.raw_rows().iter().enumerate() {
            for e in row.iter_ones() {
                syndromes[e].set(i);
            }
        }
        EdgeSpaces {
            cycles,
            cuts,
            syndromes,
        }
    }

    pub(crate) fn syndrome(&self, e: EdgeId) -> &Bits {
        &self.syndromes[e]
    }

    pub(crate) fn syndrome_words(&self) -> usize {
        self.cycles.dimension().div_ceil(64)
    }

    /// Cut membership through syndromes.
    pub fn is_cut_by_syndrome(&self, edges: impl IntoIterator<Item = EdgeId>) -> bool {
        let mut acc = Bits::zeros(self.cycles.dimension());
        for e in edges {
            acc.xor_assign(&self.syndromes[e]);
        }
        acc.is_zero()
    }
}

/// All nonzero cut-space vectors of weight at most `k`, ordered by weight
/// and then lexicographically by edge ids.
///
/// The search walks ascending edge subsets of size below `k` keeping the XOR
/// of their syndromes, and closes each subset with one lookup of the edges
/// whose syndrome equals that XOR. Fails once more than `limit` vectors have
/// been produced.
pub fn enumerate_small_cut_vectors(
    g: &MultiGraph,
    k: usize,
    limit: usize,
) -> Result<Vec<EdgeSet>> {
    let spaces = EdgeSpaces::new(g);
    let mut out = Vec::new();
    let ok = small_cuts_into(g, &spaces, k, limit, &mut out);
    if !ok {
        return Err(Error::SizeGuard(format!(
            "more than {limit} cut vectors of weight <= {k}"
        )));
    }
    Ok(finish(g, out))
}

pub(crate) fn enumerate_small_cut_vectors_unbounded(g: &MultiGraph, k: usize) -> Vec<EdgeSet> {
    let spaces = EdgeSpaces::new(g);
    let mut out = Vec::new();
    small_cuts_into(g, &spaces, k, usize::MAX, &mut out);
    finish(g, out)
}

fn finish(g: &MultiGraph, mut raw: Vec<Vec<EdgeId>>) -> Vec<EdgeSet> {
    raw.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    raw.into_iter()
        .map(|es| EdgeSet::from_edges(g, es).expect("in range"))
        .collect()
}

fn small_cuts_into(
    g: &MultiGraph,
    spaces: &EdgeSpaces,
    k: usize,
    limit: usize,
    out: &mut Vec<Vec<EdgeId>>,
) -> bool {
    let m = g.edge_count();
    if k == 0 || m == 0 {
        return true;
    }
    let mut by_syndrome: HashMap<&Bits, Vec<EdgeId>> = HashMap::new();
    for e in 0..m {
        by_syndrome.entry(spaces.syndrome(e)).or_default().push(e);
    }

    struct Walk<'a> {
        spaces: &'a EdgeSpaces,
        by_syndrome: HashMap<&'a Bits, Vec<EdgeId>>,
        m: usize,
        k: usize,
        limit: usize,
    }

    fn step(
        w: &Walk,
        start: usize,
        acc: &mut Bits,
        prefix: &mut Vec<EdgeId>,
        out: &mut Vec<Vec<EdgeId>>,
    ) -> bool {
        if let Some(closers) = w.by_syndrome.get(&*acc) {
            for &e in closers.iter().filter(|&&e| e >= start) {
                let mut s = prefix.clone();
                s.push(e);
                out.push(s);
                if out.len() > w.limit {
                    return false;
                }
            }
        }
        if prefix.len() + 1 >= w.k {
            return true;
        }
        for e in start..w.m {
            acc.xor_assign(w.spaces.syndrome(e));
            prefix.push(e);
            let ok = step(w, e + 1, acc, prefix, out);
            prefix.pop();
            acc.xor_assign(w.spaces.syndrome(e));
            if !ok {
                return false;
            }
        }
        true
    }

    let walk = Walk {
        spaces,
        by_syndrome: std::mem::take(&mut by_syndrome),
        m,
        k,
        limit,
    };
    let mut acc = Bits::zeros(spaces.cycles.dimension());
    let mut prefix = Vec::new();
    step(&walk, 0, &mut acc, &mut prefix, out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::named_graph;

    fn triangle() -> MultiGraph {
        MultiGraph::new(3, vec![(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    #[test]
    fn dimensions() {
        let k23 = named_graph("k2_3").unwrap();
        assert_eq!(cycle_space_basis(&k23).dimension(), 2);
        assert_eq!(cut_space_basis(&k23).dimension(), 1);
        assert_eq!(cut_space_basis(&k23).rows()[0].to_vec(), vec![0, 1, 2]);

        let lp = MultiGraph::new(1, vec![(0, 0)]).unwrap();
        let cyc = cycle_space_basis(&lp);
        assert_eq!(cyc.dimension(), 1);
        assert_eq!(cyc.rows()[0].to_vec(), vec![0]);
        assert_eq!(cut_space_basis(&lp).dimension(), 0);

        let pt = named_graph("petersen").unwrap();
        assert_eq!(cut_space_basis(&pt).dimension(), 9);
        assert_eq!(cycle_space_basis(&pt).dimension(), 6);
        let b1 = named_graph("blanusa1").unwrap();
        assert_eq!(cycle_space_basis(&b1).dimension(), 10);
    }

    #[test]
    fn triangle_cycle_and_cut() {
        let g = triangle();
        let all = EdgeSet::full(&g);
        assert!(is_cycle(&g, &all).unwrap());
        assert!(!is_cut(&g, &all).unwrap());
        for pair in [[0, 1], [1, 2], [0, 2]] {
            let s = EdgeSet::from_edges(&g, pair).unwrap();
            assert!(is_cut(&g, &s).unwrap());
            assert!(!is_cycle(&g, &s).unwrap());
        }
        assert!(is_cut(&g, &EdgeSet::empty(&g)).unwrap());
    }

    #[test]
    fn owner_mismatch() {
        let g = triangle();
        let k23 = named_graph("k2_3").unwrap();
        let s = EdgeSet::full(&k23);
        assert_eq!(is_cycle(&g, &s), Err(Error::OwnerMismatch));
        assert_eq!(cut_space_basis(&g).contains(&s), Err(Error::OwnerMismatch));
    }

    #[test]
    fn basis_is_reduced() {
        let g = named_graph("blanusa2").unwrap();
        for b in [cycle_space_basis(&g), cut_space_basis(&g)] {
            for (i, row) in b.raw_rows().iter().enumerate() {
                assert_eq!(row.lowest_one(), Some(b.pivots()[i]));
                for (j, other) in b.raw_rows().iter().enumerate() {
                    if i != j {
                        assert!(!other.get(b.pivots()[i]));
                    }
                }
            }
        }
    }

    #[test]
    fn small_cuts_of_petersen_are_stars() {
        let g = named_graph("petersen").unwrap();
        let cuts = enumerate_small_cut_vectors(&g, 3, DEFAULT_CUT_VECTOR_LIMIT).unwrap();
        assert_eq!(cuts.len(), 10);
        let mut stars: Vec<Vec<EdgeId>> = (0..10).map(|v| g.star(v)).collect();
        stars.sort();
        let mut got: Vec<Vec<EdgeId>> = cuts.iter().map(|c| c.to_vec()).collect();
        got.sort();
        assert_eq!(got, stars);
    }

    #[test]
    fn small_cuts_of_k23() {
        let g = named_graph("k2_3").unwrap();
        let cuts = enumerate_small_cut_vectors(&g, 3, 10).unwrap();
        assert_eq!(cuts.len(), 1);
        assert_eq!(cuts[0].to_vec(), vec![0, 1, 2]);
        assert!(enumerate_small_cut_vectors(&g, 3, 0).is_err());
    }

    #[test]
    fn syndrome_route_agrees_with_basis() {
        let g = named_graph("blanusa1").unwrap();
        let spaces = EdgeSpaces::new(&g);
        for v in 0..g.vertex_count() {
            assert!(spaces.is_cut_by_syndrome(g.star(v)));
        }
        assert!(!spaces.is_cut_by_syndrome([0]));
    }
}
