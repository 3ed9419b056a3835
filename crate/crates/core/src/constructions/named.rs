use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::graph::{cycles_of_length, MultiGraph, VertexId};

/// Names accepted by [`named_graph`].
pub const NAMES: &[&str] = &[
    "k2_3", "petersen", "blanusa1", "blanusa2", "k4", "prism", "k3_3",
];

// Both Blanuša snarks are two Petersen graphs with a vertex pair removed,
// glued along the exposed ends; the two differ in how the ends cross.
const BLANUSA1: [(usize, usize); 27] = [
    (0, 1), (0, 5), (0, 11), (1, 2), (1, 6), (2, 7), (2, 8), (3, 5), (3, 6),
    (3, 9), (4, 6), (4, 7), (4, 16), (5, 7), (8, 12), (8, 13), (9, 10), (9, 14),
    (10, 11), (10, 15), (11, 12), (12, 17), (13, 15), (13, 16), (14, 16),
    (14, 17), (15, 17),
];

const BLANUSA2: [(usize, usize); 27] = [
    (0, 1), (0, 5), (0, 10), (1, 2), (1, 6), (2, 7), (2, 8), (3, 5), (3, 6),
    (3, 9), (4, 6), (4, 7), (4, 11), (5, 7), (8, 12), (8, 13), (9, 10), (9, 14),
    (10, 15), (11, 12), (11, 16), (12, 17), (13, 15), (13, 16), (14, 16),
    (14, 17), (15, 17),
];

/// One of the fixed graphs in [`NAMES`].
///
/// Edge lists:
/// - `k2_3`: three copies of `(0,1)`.
/// - `petersen`: outer cycle `i–(i+1)%5`, spokes `i–(i+5)`, inner pentagram
///   `(5+i)–(5+(i+2)%5)`.
/// - `k4`: all pairs of `0..4` in lexicographic order.
/// - `prism`: triangles `0,1,2` and `3,4,5` with spokes `i–(i+3)`.
/// - `k3_3`: `i–j` for `i < 3 ≤ j`, lexicographic.
pub fn named_graph(name: &str) -> Result<MultiGraph> {
    let (n, edges): (usize, Vec<(usize, usize)>) = match name {
        "k2_3" => (2, vec![(0, 1); 3]),
        "petersen" => {
            let mut e = Vec::with_capacity(15);
            for i in 0..5 {
                e.push((i, (i + 1) % 5));
            }
            for i in 0..5 {
                e.push((i, i + 5));
            }
            for i in 0..5 {
                e.push((5 + i, 5 + (i + 2) % 5));
            }
            (10, e)
        }
        "blanusa1" => (18, BLANUSA1.to_vec()),
        "blanusa2" => (18, BLANUSA2.to_vec()),
        "k4" => (4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
        "prism" => (
            6,
            vec![(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)],
        ),
        "k3_3" => {
            let mut e = Vec::with_capacity(9);
            for i in 0..3 {
                for j in 3..6 {
                    e.push((i, j));
                }
            }
            (6, e)
        }
        other => return Err(Error::UnknownName(other.to_string())),
    };
    MultiGraph::new(n, edges)
}

/// Distinguished vertices `(a, b)` of a girth-5 cubic graph: `b` is the
/// lowest vertex incident with an edge lying on no 5-cycle, and `a` is the
/// lowest vertex incident with no such edge and not adjacent to `b`.
///
/// Intended for `blanusa2`; on other graphs it may succeed or fail.
pub fn select_ab(g: &MultiGraph) -> Result<(VertexId, VertexId)> {
    let mut on_five = vec![false; g.edge_count()];
    for c in cycles_of_length(g, 5) {
        for e in c {
            on_five[e] = true;
        }
    }
    let touches_bare =
        |v: VertexId| g.incident(v).iter().any(|&e| !on_five[e]);
    let b = (0..g.vertex_count())
        .find(|&v| touches_bare(v))
        .ok_or_else(|| Error::Precondition("every edge lies on a 5-cycle".into()))?;
    let a = (0..g.vertex_count())
        .find(|&v| v != b && !touches_bare(v) && g.multiplicity(v, b) == 0)
        .ok_or_else(|| Error::Precondition("no admissible vertex a".into()))?;
    Ok((a, b))
}

/// [`select_ab`] on `blanusa2`, computed once.
pub fn blanusa2_ab() -> (VertexId, VertexId) {
    static AB: OnceLock<(VertexId, VertexId)> = OnceLock::new();
    *AB.get_or_init(|| {
        let b2 = named_graph("blanusa2").expect("fixed graph");
        select_ab(&b2).expect("blanusa2 has a distinguished pair")
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{automorphisms, girth, is_isomorphic};

    #[test]
    fn sizes() {
        for (name, n, m) in [
            ("k2_3", 2, 3),
            ("petersen", 10, 15),
            ("blanusa1", 18, 27),
            ("blanusa2", 18, 27),
            ("k4", 4, 6),
            ("prism", 6, 9),
            ("k3_3", 6, 9),
        ] {
            let g = named_graph(name).unwrap();
            assert_eq!((g.vertex_count(), g.edge_count()), (n, m), "{name}");
            assert!(g.is_cubic(), "{name}");
        }
        assert!(matches!(named_graph("k5"), Err(Error::UnknownName(_))));
    }

    #[test]
    fn blanusa_shape() {
        let b1 = named_graph("blanusa1").unwrap();
        let b2 = named_graph("blanusa2").unwrap();
        assert_eq!(girth(&b1), Some(5));
        assert_eq!(girth(&b2), Some(5));
        assert!(is_isomorphic(&b1, &b2).unwrap().is_none());
        assert_eq!(automorphisms(&b1).unwrap().len(), 8);
        assert_eq!(automorphisms(&b2).unwrap().len(), 4);
    }

    #[test]
    fn ab_pair() {
        let b2 = named_graph("blanusa2").unwrap();
        let (a, b) = blanusa2_ab();
        assert_eq!((a, b), select_ab(&b2).unwrap());
        assert_ne!(a, b);
        assert_eq!(b2.multiplicity(a, b), 0);
        for aut in automorphisms(&b2).unwrap() {
            assert_ne!(aut.vertex_map[a], b);
        }
    }
}
