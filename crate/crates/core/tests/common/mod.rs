#![allow(dead_code)]

use ccmap::constructions::{named_graph, Attachment, TreeTemplate};
use ccmap::graph::MultiGraph;
use rand::seq::SliceRandom;
use rand::Rng;

/// Configuration model on `n` vertices (n even), retried until loopless,
/// and simple when asked. Connectivity is not enforced.
pub fn random_cubic<R: Rng>(rng: &mut R, n: usize, simple: bool) -> MultiGraph {
    assert!(n % 2 == 0 && n >= 2);
    loop {
        let mut stubs: Vec<usize> = (0..3 * n).map(|i| i / 3).collect();
        stubs.shuffle(rng);
        let edges: Vec<(usize, usize)> = stubs.chunks(2).map(|c| (c[0], c[1])).collect();
        if edges.iter().any(|&(u, v)| u == v) {
            continue;
        }
        let g = MultiGraph::new(n, edges).unwrap();
        if simple && !g.is_simple() {
            continue;
        }
        return g;
    }
}

pub fn random_connected_cubic<R: Rng>(rng: &mut R, n: usize, simple: bool) -> MultiGraph {
    loop {
        let g = random_cubic(rng, n, simple);
        if g.is_connected() {
            return g;
        }
    }
}

/// Any multigraph with loops and parallel edges allowed.
pub fn random_multigraph<R: Rng>(rng: &mut R, max_n: usize, max_m: usize) -> MultiGraph {
    let n = rng.gen_range(1..=max_n);
    let m = rng.gen_range(0..=max_m);
    let edges = (0..m)
        .map(|_| (rng.gen_range(0..n), rng.gen_range(0..n)))
        .collect();
    MultiGraph::new(n, edges).unwrap()
}

/// A random tree of 1 to `max_vertices` gadgets drawn from the prism,
/// Petersen and random cubic graphs, with random independent attachment
/// vertices and random stub orderings.
pub fn random_tree_template<R: Rng>(rng: &mut R, max_vertices: usize) -> TreeTemplate {
    let gadgets = vec![
        named_graph("prism").unwrap(),
        named_graph("petersen").unwrap(),
        random_connected_cubic(rng, 10, true),
    ];
    'retry: loop {
        let k = rng.gen_range(1..=max_vertices);
        let tree_edges: Vec<(usize, usize)> =
            (1..k).map(|v| (rng.gen_range(0..v), v)).collect();
        let colors: Vec<usize> = (0..k).map(|_| rng.gen_range(0..gadgets.len())).collect();
        let mut attachments = vec![Vec::new(); k];
        for v in 0..k {
            let g = &gadgets[colors[v]];
            let nbrs: Vec<usize> = tree_edges
                .iter()
                .filter_map(|&(a, b)| {
                    if a == v {
                        Some(b)
                    } else if b == v {
                        Some(a)
                    } else {
                        None
                    }
                })
                .collect();
            let mut chosen: Vec<usize> = Vec::new();
            let mut pool: Vec<usize> = (0..g.vertex_count()).collect();
            pool.shuffle(rng);
            for w in pool {
                if chosen.len() == nbrs.len() {
                    break;
                }
                if chosen.iter().all(|&c| g.multiplicity(c, w) == 0) {
                    chosen.push(w);
                }
            }
            if chosen.len() < nbrs.len() {
                continue 'retry;
            }
            for (&nb, &w) in nbrs.iter().zip(&chosen) {
                let mut star = g.star(w);
                star.shuffle(rng);
                attachments[v].push(Attachment {
                    neighbor: nb,
                    vertex: w,
                    ordering: [star[0], star[1], star[2]],
                });
            }
        }
        let t = TreeTemplate {
            tree_vertex_count: k,
            tree_edges,
            colors,
            gadgets: gadgets.clone(),
            attachments,
        };
        t.validate().unwrap();
        return t;
    }
}
