//! Exhaustive backtracking search for cc mappings.
//!
//! Source vertices are visited in a fixed order. At each vertex the images of
//! its not-yet-assigned star edges are chosen so that the odd-image of the
//! whole star is a cut of the target, which by the dual criterion is exactly
//! cycle-continuity once every star is closed. Cut membership is tested with
//! cycle-space syndromes: a multiset of target edges is a cut iff the XOR of
//! their syndromes vanishes, so the last free edge of a star is looked up
//! instead of enumerated.
//!
//! When the target has no bridge, a star of three distinct edges can only go
//! bijectively onto a weight-3 cut vector (two equal images would leave a
//! single edge as the odd-image, and a single edge is a cut only if it is a
//! bridge). Such stars take their images from a precomputed table of those
//! vectors.
//!
//! Source loops never affect the odd-image of a star, so they are free and
//! are filled in after the search.

use std::collections::{HashMap, HashSet};
use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::EdgeMapping;
use crate::error::{Error, Result};
use crate::gf2::{enumerate_small_cut_vectors, EdgeSpaces, DEFAULT_CUT_VECTOR_LIMIT};
use crate::graph::{EdgeId, MultiGraph, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SearchMode {
    /// Stop at the first mapping in search order.
    First,
    /// Collect every mapping, sorted lexicographically by image sequence.
    All,
    /// Count mappings without storing them.
    Count,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Profile {
    General,
    /// Three-edge stars may only go onto vertex stars of the target. Used
    /// only when the target is bridgeless and each of its weight-3 cut
    /// vectors is a vertex star; otherwise the search falls back to
    /// `General` and says so in [`SearchOutcome::profile_used`].
    StarLocal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchStatus {
    /// The search space was exhausted; the result is exact.
    Complete,
    /// A budget ran out; found mappings are genuine but the list may be
    /// incomplete.
    BudgetExhausted,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub mode: SearchMode,
    pub time_budget: Option<Duration>,
    pub node_budget: Option<u64>,
    pub workers: usize,
    pub profile: Profile,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            mode: SearchMode::First,
            time_budget: None,
            node_budget: None,
            workers: 1,
            profile: Profile::General,
        }
    }
}

impl SearchConfig {
    pub fn mode(mode: SearchMode) -> Self {
        SearchConfig {
            mode,
            ..Self::default()
        }
    }

    fn validate(&self) -> Result<()> {
        if self.workers == 0 {
            return Err(Error::Precondition("workers must be positive".into()));
        }
        if self.time_budget == Some(Duration::ZERO) || self.node_budget == Some(0) {
            return Err(Error::Precondition("budgets must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    pub mode: SearchMode,
    /// Found mappings: at most one for `First`, all of them (sorted) for
    /// `All`, none for `Count`.
    pub mappings: Vec<EdgeMapping>,
    /// Number of mappings found; saturates at `u64::MAX`.
    pub count: u64,
    pub nodes: u64,
    pub elapsed: Duration,
    pub profile_used: Profile,
}

impl SearchOutcome {
    pub fn is_complete(&self) -> bool {
        self.status == SearchStatus::Complete
    }

    /// `Some(answer)` when existence has been settled either way.
    pub fn exists(&self) -> Option<bool> {
        if self.count > 0 {
            Some(true)
        } else if self.is_complete() {
            Some(false)
        } else {
            None
        }
    }
}

struct Step {
    star: Vec<EdgeId>,
    fixed: Vec<usize>,
    free: Vec<usize>,
    later_neighbors: Vec<VertexId>,
    triple: bool,
}

struct Triples {
    ordered: Vec<[EdgeId; 3]>,
    sets: Vec<[EdgeId; 3]>,
    by_edge: Vec<Vec<usize>>,
    pairs: HashMap<(EdgeId, EdgeId), Vec<EdgeId>>,
    lookup: HashSet<[EdgeId; 3]>,
}

impl Triples {
    fn new(sets: Vec<[EdgeId; 3]>, m: usize) -> Self {
        let mut ordered = Vec::with_capacity(sets.len() * 6);
        let mut by_edge = vec![Vec::new(); m];
        let mut pairs: HashMap<(EdgeId, EdgeId), Vec<EdgeId>> = HashMap::new();
        for (i, s) in sets.iter().enumerate() {
            let [x, y, z] = *s;
            ordered.extend([[x, y, z], [x, z, y], [y, x, z], [y, z, x], [z, x, y], [z, y, x]]);
            for &e in s {
                by_edge[e].push(i);
            }
            pairs.entry((x, y)).or_default().push(z);
            pairs.entry((x, z)).or_default().push(y);
            pairs.entry((y, z)).or_default().push(x);
        }
        ordered.sort_unstable();
        for v in pairs.values_mut() {
            v.sort_unstable();
        }
        let lookup = sets.iter().copied().collect();
        Triples {
            ordered,
            sets,
            by_edge,
            pairs,
            lookup,
        }
    }
}

struct Plan {
    source_edges: usize,
    target_edges: usize,
    steps: Vec<Step>,
    stars: Vec<Vec<EdgeId>>,
    triple_vertex: Vec<bool>,
    loops: Vec<EdgeId>,
    words: usize,
    syndromes: Vec<u64>,
    by_syndrome: HashMap<Vec<u64>, Vec<EdgeId>>,
    triples: Option<Triples>,
}

/// Fixed visiting order: repeatedly take the unvisited vertex with the most
/// star edges into visited vertices, then the highest degree, then the
/// lowest index.
pub fn vertex_order(g: &MultiGraph) -> Vec<VertexId> {
    let n = g.vertex_count();
    let mut visited = vec![false; n];
    let mut into_visited = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !visited[v])
            .max_by_key(|&v| (into_visited[v], g.degree(v), std::cmp::Reverse(v)))
            .expect("unvisited vertex");
        visited[v] = true;
        order.push(v);
        for e in g.star(v) {
            into_visited[g.other_end(e, v)] += 1;
        }
    }
    order
}

impl Plan {
    fn new(g: &MultiGraph, h: &MultiGraph, profile: Profile) -> Result<(Self, Profile)> {
        let spaces = EdgeSpaces::new(h);
        let words = spaces.syndrome_words().max(1);
        let mut syndromes = vec![0u64; h.edge_count() * words];
        let mut by_syndrome: HashMap<Vec<u64>, Vec<EdgeId>> = HashMap::new();
        for x in 0..h.edge_count() {
            let mut w = spaces.syndrome(x).words().to_vec();
            w.resize(words, 0);
            syndromes[x * words..(x + 1) * words].copy_from_slice(&w);
            by_syndrome.entry(w).or_default().push(x);
        }
        let bridgeless = !by_syndrome.contains_key(&vec![0u64; words]);

        let stars: Vec<Vec<EdgeId>> = (0..g.vertex_count()).map(|v| g.star(v)).collect();
        let any_triple = stars.iter().any(|s| s.len() == 3);
        let mut profile_used = Profile::General;
        let triples = if bridgeless && any_triple {
            let cuts = enumerate_small_cut_vectors(h, 3, DEFAULT_CUT_VECTOR_LIMIT)?;
            let sets: Vec<[EdgeId; 3]> = cuts
                .iter()
                .filter(|c| c.weight() == 3)
                .map(|c| {
                    let v = c.to_vec();
                    [v[0], v[1], v[2]]
                })
                .collect();
            if profile == Profile::StarLocal {
                let vertex_stars: HashSet<Vec<EdgeId>> =
                    (0..h.vertex_count()).map(|v| h.star(v)).collect();
                if sets.iter().all(|s| vertex_stars.contains(&s.to_vec())) {
                    profile_used = Profile::StarLocal;
                }
            }
            Some(Triples::new(sets, h.edge_count()))
        } else {
            None
        };
        let triple_vertex: Vec<bool> = stars
            .iter()
            .map(|s| triples.is_some() && s.len() == 3)
            .collect();

        let order = vertex_order(g);
        let mut pos = vec![0; g.vertex_count()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let steps = order
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                let star = stars[v].clone();
                let (fixed, free): (Vec<usize>, Vec<usize>) =
                    (0..star.len()).partition(|&p| pos[g.other_end(star[p], v)] < i);
                let mut later: Vec<VertexId> = star
                    .iter()
                    .map(|&e| g.other_end(e, v))
                    .filter(|&u| pos[u] > i)
                    .collect();
                later.sort_unstable();
                later.dedup();
                Step {
                    triple: triple_vertex[v],
                    star,
                    fixed,
                    free,
                    later_neighbors: later,
                }
            })
            .collect();
        let loops = (0..g.edge_count()).filter(|&e| g.is_loop(e)).collect();
        Ok((
            Plan {
                source_edges: g.edge_count(),
                target_edges: h.edge_count(),
                steps,
                stars,
                triple_vertex,
                loops,
                words,
                syndromes,
                by_syndrome,
                triples,
            },
            profile_used,
        ))
    }

    fn syndrome(&self, x: EdgeId) -> &[u64] {
        &self.syndromes[x * self.words..(x + 1) * self.words]
    }

    /// Number of full mappings each search leaf stands for.
    fn loop_multiplier(&self) -> u64 {
        (self.target_edges as u64)
            .checked_pow(self.loops.len() as u32)
            .unwrap_or(u64::MAX)
    }
}

const UNSET: EdgeId = usize::MAX;

struct Shared {
    mode: SearchMode,
    start: Instant,
    time_budget: Option<Duration>,
    node_budget: Option<u64>,
    nodes: AtomicU64,
    out_of_budget: AtomicBool,
    best_branch: AtomicUsize,
}

struct Worker<'a> {
    plan: &'a Plan,
    shared: &'a Shared,
    branch: usize,
    img: Vec<EdgeId>,
    bufs: Vec<Vec<EdgeId>>,
    scratch: Vec<u64>,
    pending_nodes: u64,
    found: Vec<Vec<EdgeId>>,
    count: u64,
    stop: bool,
    cut_short: bool,
}

const NODE_BATCH: u64 = 64;

impl<'a> Worker<'a> {
    fn new(plan: &'a Plan, shared: &'a Shared, branch: usize) -> Self {
        Worker {
            plan,
            shared,
            branch,
            img: vec![UNSET; plan.source_edges],
            bufs: vec![Vec::new(); plan.steps.len()],
            scratch: vec![0; plan.words],
            pending_nodes: 0,
            found: Vec::new(),
            count: 0,
            stop: false,
            cut_short: false,
        }
    }

    fn flush_nodes(&mut self) {
        if self.pending_nodes > 0 {
            self.shared.nodes.fetch_add(self.pending_nodes, Ordering::Relaxed);
            self.pending_nodes = 0;
        }
    }

    /// Counts one node; returns false if the search must stop.
    fn tick(&mut self) -> bool {
        self.pending_nodes += 1;
        if self.pending_nodes >= NODE_BATCH || self.shared.node_budget.is_some() {
            let total = self.shared.nodes.fetch_add(self.pending_nodes, Ordering::Relaxed)
                + self.pending_nodes;
            self.pending_nodes = 0;
            let over_nodes = self.shared.node_budget.is_some_and(|b| total >= b);
            let over_time = self
                .shared
                .time_budget
                .is_some_and(|b| self.shared.start.elapsed() >= b);
            if over_nodes || over_time {
                self.shared.out_of_budget.store(true, Ordering::Relaxed);
            }
        }
        if self.shared.out_of_budget.load(Ordering::Relaxed) {
            self.cut_short = true;
            self.stop = true;
        } else if self.shared.mode == SearchMode::First
            && self.shared.best_branch.load(Ordering::Relaxed) < self.branch
        {
            self.stop = true;
        }
        !self.stop
    }

    /// Writes candidate images for the free edges of `step` into `buf`,
    /// `step.free.len()` entries per candidate; returns the candidate count.
    fn candidates(&mut self, step: &Step, buf: &mut Vec<EdgeId>) -> usize {
        buf.clear();
        if step.triple {
            self.triple_candidates(step, buf)
        } else {
            self.general_candidates(step, buf)
        }
    }

    fn triple_candidates(&self, step: &Step, buf: &mut Vec<EdgeId>) -> usize {
        let t = self.plan.triples.as_ref().expect("triple table");
        let fixed: Vec<EdgeId> = step.fixed.iter().map(|&p| self.img[step.star[p]]).collect();
        match fixed.len() {
            0 => {
                for o in &t.ordered {
                    buf.extend_from_slice(o);
                }
                t.ordered.len()
            }
            1 => {
                let x = fixed[0];
                let mut n = 0;
                for &i in &t.by_edge[x] {
                    let rest: Vec<EdgeId> = t.sets[i].iter().copied().filter(|&y| y != x).collect();
                    buf.extend_from_slice(&[rest[0], rest[1], rest[1], rest[0]]);
                    n += 2;
                }
                n
            }
            2 => {
                let (x, y) = (fixed[0].min(fixed[1]), fixed[0].max(fixed[1]));
                if x == y {
                    return 0;
                }
                match t.pairs.get(&(x, y)) {
                    Some(zs) => {
                        buf.extend_from_slice(zs);
                        zs.len()
                    }
                    None => 0,
                }
            }
            _ => {
                let mut s = [fixed[0], fixed[1], fixed[2]];
                s.sort_unstable();
                usize::from(t.lookup.contains(&s))
            }
        }
    }

    fn general_candidates(&mut self, step: &Step, buf: &mut Vec<EdgeId>) -> usize {
        let plan = self.plan;
        let mut acc = std::mem::take(&mut self.scratch);
        acc.iter_mut().for_each(|w| *w = 0);
        for &p in &step.fixed {
            xor_into(&mut acc, plan.syndrome(self.img[step.star[p]]));
        }
        let k = step.free.len();
        let n = if k == 0 {
            usize::from(acc.iter().all(|&w| w == 0))
        } else {
            let mut prefix = vec![0; k - 1];
            let mut n = 0;
            self.odometer(&mut prefix, 0, &mut acc, buf, &mut n);
            n
        };
        self.scratch = acc;
        n
    }

    fn odometer(
        &self,
        prefix: &mut [EdgeId],
        depth: usize,
        acc: &mut [u64],
        buf: &mut Vec<EdgeId>,
        n: &mut usize,
    ) {
        let plan = self.plan;
        if depth == prefix.len() {
            if let Some(closers) = plan.by_syndrome.get(&*acc) {
                for &z in closers {
                    buf.extend_from_slice(prefix);
                    buf.push(z);
                    *n += 1;
                }
            }
            return;
        }
        for x in 0..plan.target_edges {
            xor_into(acc, plan.syndrome(x));
            prefix[depth] = x;
            self.odometer(prefix, depth + 1, acc, buf, n);
            xor_into(acc, plan.syndrome(x));
        }
    }

    /// Whether vertex `u` can still be completed given the current images.
    fn feasible(&mut self, u: VertexId) -> bool {
        let plan = self.plan;
        let star = &plan.stars[u];
        if plan.triple_vertex[u] {
            let t = plan.triples.as_ref().expect("triple table");
            let mut got = [UNSET; 3];
            let mut k = 0;
            for &e in star {
                if self.img[e] != UNSET {
                    got[k] = self.img[e];
                    k += 1;
                }
            }
            match k {
                0 => true,
                1 => !t.by_edge[got[0]].is_empty(),
                2 => {
                    let (x, y) = (got[0].min(got[1]), got[0].max(got[1]));
                    x != y && t.pairs.contains_key(&(x, y))
                }
                _ => {
                    got.sort_unstable();
                    t.lookup.contains(&got)
                }
            }
        } else {
            let mut open = 0;
            let mut acc = std::mem::take(&mut self.scratch);
            acc.iter_mut().for_each(|w| *w = 0);
            for &e in star {
                if self.img[e] == UNSET {
                    open += 1;
                } else {
                    xor_into(&mut acc, plan.syndrome(self.img[e]));
                }
            }
            let ok = match open {
                0 => acc.iter().all(|&w| w == 0),
                1 => plan.by_syndrome.contains_key(&acc),
                _ => true,
            };
            self.scratch = acc;
            ok
        }
    }

    fn assign(&mut self, step: &Step, cand: &[EdgeId]) -> bool {
        for (&p, &x) in step.free.iter().zip(cand) {
            self.img[step.star[p]] = x;
        }
        step.later_neighbors.iter().all(|&u| self.feasible(u))
    }

    fn unassign(&mut self, step: &Step) {
        for &p in &step.free {
            self.img[step.star[p]] = UNSET;
        }
    }

    fn dfs(&mut self, depth: usize) {
        let plan = self.plan;
        if depth == plan.steps.len() {
            self.record();
            return;
        }
        let step = &plan.steps[depth];
        let mut buf = std::mem::take(&mut self.bufs[depth]);
        let n = self.candidates(step, &mut buf);
        let stride = step.free.len();
        for c in 0..n {
            if !self.tick() {
                break;
            }
            let cand = &buf[c * stride..(c + 1) * stride];
            if self.assign(step, cand) {
                self.dfs(depth + 1);
            }
            self.unassign(step);
            if self.stop {
                break;
            }
        }
        self.bufs[depth] = buf;
    }

    fn record(&mut self) {
        let plan = self.plan;
        let mult = plan.loop_multiplier();
        self.count = self.count.saturating_add(mult);
        match self.shared.mode {
            SearchMode::Count => {}
            SearchMode::First => {
                let mut map = self.img.clone();
                for &e in &plan.loops {
                    map[e] = 0;
                }
                self.found.push(map);
                self.stop = true;
                self.shared.best_branch.fetch_min(self.branch, Ordering::Relaxed);
            }
            SearchMode::All => {
                let mut map = self.img.clone();
                let mut digits = vec![0; plan.loops.len()];
                loop {
                    for (&e, &d) in plan.loops.iter().zip(&digits) {
                        map[e] = d;
                    }
                    self.found.push(map.clone());
                    let mut i = digits.len();
                    loop {
                        if i == 0 {
                            return;
                        }
                        i -= 1;
                        digits[i] += 1;
                        if digits[i] < plan.target_edges {
                            break;
                        }
                        digits[i] = 0;
                    }
                }
            }
        }
    }
}

fn xor_into(acc: &mut [u64], s: &[u64]) {
    for (a, b) in acc.iter_mut().zip(s) {
        *a ^= b;
    }
}

struct BranchResult {
    found: Vec<Vec<EdgeId>>,
    count: u64,
    cut_short: bool,
}

/// Searches for cc mappings `g → h`.
///
/// Results do not depend on the worker count: `All` output is sorted
/// lexicographically, and `First` returns the first mapping of the
/// sequential search order even when branches run in parallel.
pub fn search_cc(g: &MultiGraph, h: &MultiGraph, config: &SearchConfig) -> Result<SearchOutcome> {
    config.validate()?;
    let start = Instant::now();
    let (plan, profile_used) = Plan::new(g, h, config.profile)?;
    let shared = Shared {
        mode: config.mode,
        start,
        time_budget: config.time_budget,
        node_budget: config.node_budget,
        nodes: AtomicU64::new(0),
        out_of_budget: AtomicBool::new(false),
        best_branch: AtomicUsize::new(usize::MAX),
    };

    let results: Vec<BranchResult> = if g.edge_count() > 0 && h.edge_count() == 0 {
        Vec::new()
    } else if plan.steps.is_empty() {
        let mut w = Worker::new(&plan, &shared, 0);
        w.dfs(0);
        vec![BranchResult {
            found: w.found,
            count: w.count,
            cut_short: false,
        }]
    } else {
        let first = &plan.steps[0];
        let mut root = Worker::new(&plan, &shared, 0);
        let mut buf = Vec::new();
        let n = root.candidates(first, &mut buf);
        let stride = first.free.len();
        let run = |b: usize| {
            let mut w = Worker::new(&plan, &shared, b);
            if w.tick() && w.assign(first, &buf[b * stride..(b + 1) * stride]) {
                w.dfs(1);
            }
            w.flush_nodes();
            BranchResult {
                found: w.found,
                count: w.count,
                cut_short: w.cut_short,
            }
        };
        if config.workers > 1 {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(config.workers)
                .build()
                .map_err(|e| Error::Precondition(format!("thread pool: {e}")))?;
            pool.install(|| (0..n).into_par_iter().map(run).collect())
        } else {
            let mut out = Vec::with_capacity(n);
            for b in 0..n {
                let r = run(b);
                let done = config.mode == SearchMode::First && !r.found.is_empty();
                out.push(r);
                if done || shared.out_of_budget.load(Ordering::Relaxed) {
                    break;
                }
            }
            out
        }
    };

    let mut status = SearchStatus::Complete;
    let mut maps: Vec<Vec<EdgeId>> = Vec::new();
    let mut count = 0u64;
    if config.mode == SearchMode::First {
        match results.iter().position(|r| !r.found.is_empty()) {
            Some(b) => {
                if results[..b].iter().any(|r| r.cut_short) {
                    status = SearchStatus::BudgetExhausted;
                }
                maps.push(results[b].found[0].clone());
                count = 1;
            }
            None => {
                if shared.out_of_budget.load(Ordering::Relaxed) {
                    status = SearchStatus::BudgetExhausted;
                }
            }
        }
    } else {
        if shared.out_of_budget.load(Ordering::Relaxed) {
            status = SearchStatus::BudgetExhausted;
        }
        for r in results {
            count = count.saturating_add(r.count);
            maps.extend(r.found);
        }
        maps.sort_unstable();
    }
    let mappings = maps
        .into_iter()
        .map(|m| EdgeMapping::new(g, h, m))
        .collect::<Result<Vec<_>>>()?;
    Ok(SearchOutcome {
        status,
        mode: config.mode,
        mappings,
        count,
        nodes: shared.nodes.load(Ordering::Relaxed),
        elapsed: start.elapsed(),
        profile_used,
    })
}

/// Convenience wrapper: existence under `config` with the mode forced to
/// `First`.
pub fn exists_cc(g: &MultiGraph, h: &MultiGraph, config: &SearchConfig) -> Result<SearchOutcome> {
    let cfg = SearchConfig {
        mode: SearchMode::First,
        ..config.clone()
    };
    search_cc(g, h, &cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cc::{brute_force_cc, verify_cc, VerifyMode};
    use crate::constructions::named_graph;

    fn all(g: &MultiGraph, h: &MultiGraph) -> SearchOutcome {
        search_cc(g, h, &SearchConfig::mode(SearchMode::All)).unwrap()
    }

    #[test]
    fn matches_brute_force_on_small_pairs() {
        let graphs = [
            MultiGraph::new(3, vec![(0, 1), (1, 2), (2, 0)]).unwrap(),
            MultiGraph::new(2, vec![(0, 1)]).unwrap(),
            MultiGraph::new(1, vec![(0, 0)]).unwrap(),
            MultiGraph::new(2, vec![(0, 1), (0, 1), (1, 1)]).unwrap(),
            named_graph("k2_3").unwrap(),
        ];
        for g in &graphs {
            for h in &graphs {
                let want = brute_force_cc(g, h, 1_000_000).unwrap();
                let got = all(g, h);
                assert!(got.is_complete());
                assert_eq!(got.mappings, want, "{:?} -> {:?}", g.edges(), h.edges());
                assert_eq!(got.count as usize, want.len());
            }
        }
    }

    #[test]
    fn petersen_has_no_map_to_k23() {
        let pt = named_graph("petersen").unwrap();
        let k23 = named_graph("k2_3").unwrap();
        let out = search_cc(&pt, &k23, &SearchConfig::default()).unwrap();
        assert!(out.is_complete());
        assert!(out.mappings.is_empty());
        assert_eq!(out.exists(), Some(false));
    }

    #[test]
    fn k4_maps_to_k23_six_ways_per_coloring() {
        let k4 = named_graph("k4").unwrap();
        let k23 = named_graph("k2_3").unwrap();
        let out = search_cc(&k4, &k23, &SearchConfig::mode(SearchMode::Count)).unwrap();
        // K4 has exactly one 1-factorization, which 3! color permutations
        // label.
        assert_eq!(out.count, 6);
    }

    #[test]
    fn workers_do_not_change_results() {
        let g = named_graph("prism").unwrap();
        let h = named_graph("k2_3").unwrap();
        let one = search_cc(&g, &h, &SearchConfig::mode(SearchMode::All)).unwrap();
        let four = search_cc(
            &g,
            &h,
            &SearchConfig {
                workers: 4,
                ..SearchConfig::mode(SearchMode::All)
            },
        )
        .unwrap();
        assert_eq!(one.mappings, four.mappings);
        let f1 = search_cc(&g, &h, &SearchConfig::default()).unwrap();
        let f4 = search_cc(&g, &h, &SearchConfig { workers: 4, ..SearchConfig::default() }).unwrap();
        assert_eq!(f1.mappings, f4.mappings);
        assert!(one.mappings.contains(&f1.mappings[0]));
    }

    #[test]
    fn node_budget_is_reported() {
        let pt = named_graph("petersen").unwrap();
        let k23 = named_graph("k2_3").unwrap();
        let out = search_cc(
            &pt,
            &k23,
            &SearchConfig {
                node_budget: Some(5),
                ..SearchConfig::default()
            },
        )
        .unwrap();
        assert_eq!(out.status, SearchStatus::BudgetExhausted);
        assert_eq!(out.exists(), None);
    }

    #[test]
    fn petersen_automorphisms_by_search() {
        let pt = named_graph("petersen").unwrap();
        let out = search_cc(
            &pt,
            &pt,
            &SearchConfig {
                profile: Profile::StarLocal,
                ..SearchConfig::mode(SearchMode::All)
            },
        )
        .unwrap();
        assert_eq!(out.profile_used, Profile::StarLocal);
        assert_eq!(out.mappings.len(), 120);
        for f in &out.mappings {
            assert!(verify_cc(&pt, &pt, f, VerifyMode::Both).unwrap());
        }
    }

    #[test]
    fn zero_budget_rejected() {
        let g = named_graph("k4").unwrap();
        let cfg = SearchConfig {
            node_budget: Some(0),
            ..SearchConfig::default()
        };
        assert!(search_cc(&g, &g, &cfg).is_err());
    }
}
