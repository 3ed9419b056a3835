use std::fmt;
use std::str::FromStr;

use super::named::{blanusa2_ab, named_graph};
use super::tree::{path_template, tree_snark, TreeSnarkGraph};
use crate::cc::EdgeMapping;
use crate::error::{Error, Result};
use crate::graph::VertexId;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Dir {
    /// Edge `i` runs from path vertex `i` to `i + 1`.
    F,
    /// Edge `i` runs from path vertex `i + 1` to `i`.
    B,
}

/// An oriented path on vertices `0..=m`, given by a nonempty word over
/// `{F, B}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DirectedPath {
    word: Vec<Dir>,
}

impl DirectedPath {
    pub fn new(word: Vec<Dir>) -> Result<Self> {
        if word.is_empty() {
            return Err(Error::Parse("directed path word must be nonempty".into()));
        }
        Ok(DirectedPath { word })
    }

    pub fn edge_count(&self) -> usize {
        self.word.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.word.len() + 1
    }

    pub fn word(&self) -> &[Dir] {
        &self.word
    }

    /// `(tail, head)` of edge `i`.
    pub fn arc(&self, i: usize) -> (VertexId, VertexId) {
        match self.word[i] {
            Dir::F => (i, i + 1),
            Dir::B => (i + 1, i),
        }
    }

    /// The edge from `t` to `h`, if there is one.
    pub fn arc_index(&self, t: VertexId, h: VertexId) -> Option<usize> {
        let i = t.min(h);
        (t.abs_diff(h) == 1 && i < self.word.len() && self.arc(i) == (t, h)).then_some(i)
    }

    /// Every word of length `1..=max_len`, shorter first, then
    /// lexicographic with `F < B`.
    pub fn all_up_to(max_len: usize) -> Vec<DirectedPath> {
        let mut out = Vec::new();
        for len in 1..=max_len {
            for bits in 0..(1u32 << len) {
                let word = (0..len)
                    .map(|i| if bits >> (len - 1 - i) & 1 == 0 { Dir::F } else { Dir::B })
                    .collect();
                out.push(DirectedPath { word });
            }
        }
        out
    }
}

impl FromStr for DirectedPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let word = s
            .chars()
            .map(|c| match c {
                'F' | 'f' => Ok(Dir::F),
                'B' | 'b' => Ok(Dir::B),
                other => Err(Error::Parse(format!("unexpected {other:?} in path word"))),
            })
            .collect::<Result<Vec<_>>>()?;
        DirectedPath::new(word)
    }
}

impl fmt::Display for DirectedPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in &self.word {
            f.write_str(match d {
                Dir::F => "F",
                Dir::B => "B",
            })?;
        }
        Ok(())
    }
}

/// The graph `m(P)`: one copy of B₂ per path edge, glued along the path.
///
/// Copy `i` faces the tail of edge `i` with `a` and its head with `b`, where
/// `(a, b)` comes from [`blanusa2_ab`]; orderings at `a` and `b` are
/// ascending edge ids for every path.
pub fn poset_path_graph(p: &DirectedPath) -> Result<TreeSnarkGraph> {
    let (a, b) = blanusa2_ab();
    let template = path_template(
        vec![named_graph("blanusa2")?],
        vec![0; p.edge_count()],
        |i, j| {
            // Copies i and j share path vertex max(i, j).
            let shared = i.max(j);
            if p.arc(i).0 == shared {
                a
            } else {
                b
            }
        },
    );
    tree_snark(&template)
}

/// Every homomorphism `P → Q` (vertex maps sending arcs to arcs), in
/// lexicographic order.
pub fn path_hom_enumerate(p: &DirectedPath, q: &DirectedPath) -> Vec<Vec<VertexId>> {
    let n = p.vertex_count();
    let k = q.vertex_count();
    // ok[i][x]: the map on vertices i..n can be completed with vertex i ↦ x.
    let mut ok = vec![vec![false; k]; n];
    ok[n - 1] = vec![true; k];
    for i in (0..n - 1).rev() {
        for x in 0..k {
            ok[i][x] = (0..k).any(|y| ok[i + 1][y] && step_ok(p, q, i, x, y));
        }
    }
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn walk(
        p: &DirectedPath,
        q: &DirectedPath,
        ok: &[Vec<bool>],
        cur: &mut Vec<VertexId>,
        out: &mut Vec<Vec<VertexId>>,
    ) {
        let i = cur.len();
        if i == ok.len() {
            out.push(cur.clone());
            return;
        }
        for y in 0..ok[i].len() {
            if ok[i][y] && (i == 0 || step_ok(p, q, i - 1, cur[i - 1], y)) {
                cur.push(y);
                walk(p, q, ok, cur, out);
                cur.pop();
            }
        }
    }
    walk(p, q, &ok, &mut cur, &mut out);
    out
}

/// Edge `i` of `p` is respected when vertex `i ↦ x` and `i + 1 ↦ y`.
fn step_ok(p: &DirectedPath, q: &DirectedPath, i: usize, x: VertexId, y: VertexId) -> bool {
    let (t, h) = if p.arc(i).0 == i { (x, y) } else { (y, x) };
    q.arc_index(t, h).is_some()
}

fn check_hom(hom: &[VertexId], p: &DirectedPath, q: &DirectedPath) -> Result<Vec<usize>> {
    if hom.len() != p.vertex_count() || hom.iter().any(|&x| x >= q.vertex_count()) {
        return Err(Error::Precondition("vertex map has the wrong shape".into()));
    }
    (0..p.edge_count())
        .map(|i| {
            let (t, h) = p.arc(i);
            q.arc_index(hom[t], hom[h])
                .ok_or_else(|| Error::Precondition(format!("edge {i} is not sent to an edge")))
        })
        .collect()
}

/// The edge map `m(h): m(P) → m(Q)`: each copy of B₂ goes identically onto
/// the copy of the edge it is sent to.
pub fn induced_cc_from_hom(
    hom: &[VertexId],
    p: &DirectedPath,
    q: &DirectedPath,
    mp: &TreeSnarkGraph,
    mq: &TreeSnarkGraph,
) -> Result<EdgeMapping> {
    let edge_map = check_hom(hom, p, q)?;
    let mut map = vec![usize::MAX; mp.graph.edge_count()];
    for (i, &j) in edge_map.iter().enumerate() {
        let src = mp.inclusions[i].images();
        let dst = mq.inclusions[j].images();
        for (g, (&x, &y)) in src.iter().zip(dst).enumerate() {
            if map[x] != usize::MAX && map[x] != y {
                return Err(Error::Disagreement(format!(
                    "edge {x} (gadget edge {g} of copy {i}) has images {} and {y}",
                    map[x]
                )));
            }
            map[x] = y;
        }
    }
    EdgeMapping::new(&mp.graph, &mq.graph, map)
}

/// Recovers the vertex homomorphism from a map on path edges (tree
/// vertices): tails go to tails and heads to heads.
pub fn path_hom_from_guide(
    guide: &[usize],
    p: &DirectedPath,
    q: &DirectedPath,
) -> Result<Vec<VertexId>> {
    if guide.len() != p.edge_count() {
        return Err(Error::Precondition("guide needs one entry per path edge".into()));
    }
    let mut hom = vec![usize::MAX; p.vertex_count()];
    for (i, &j) in guide.iter().enumerate() {
        if j >= q.edge_count() {
            return Err(Error::Precondition(format!("guide sends {i} to missing edge {j}")));
        }
        let (t, h) = p.arc(i);
        let (t2, h2) = q.arc(j);
        for (v, w) in [(t, t2), (h, h2)] {
            if hom[v] != usize::MAX && hom[v] != w {
                return Err(Error::Disagreement(format!(
                    "path vertex {v} is sent to both {} and {w}",
                    hom[v]
                )));
            }
            hom[v] = w;
        }
    }
    check_hom(&hom, p, q)?;
    Ok(hom)
}
