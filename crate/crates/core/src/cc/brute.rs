use super::verify::{Verifier, VerifyMode};
use super::EdgeMapping;
use crate::error::{Error, Result};
use crate::graph::MultiGraph;

/// Default cap on `|E(h)|^|E(g)|` for [`brute_force_cc`].
pub const DEFAULT_BRUTE_FORCE_BOUND: u128 = 100_000_000;

/// Every cc mapping `g → h`, found by trying all total functions in
/// lexicographic order of `(f(e₀), f(e₁), …)`.
pub fn brute_force_cc(g: &MultiGraph, h: &MultiGraph, bound: u128) -> Result<Vec<EdgeMapping>> {
    let m = g.edge_count();
    let k = h.edge_count();
    let total = (k as u128).checked_pow(m as u32).unwrap_or(u128::MAX);
    if total > bound {
        return Err(Error::SizeGuard(format!(
            "{k}^{m} functions exceed the bound {bound}"
        )));
    }
    if total == 0 {
        return Ok(Vec::new());
    }
    let verifier = Verifier::new(g, h);
    let mut out = Vec::new();
    let mut map = vec![0; m];
    loop {
        if verifier.run(&map, VerifyMode::Both)?.is_none() {
            out.push(EdgeMapping::new(g, h, map.clone())?);
        }
        let mut i = m;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            map[i] += 1;
            if map[i] < k {
                break;
            }
            map[i] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tri() -> MultiGraph {
        MultiGraph::new(3, vec![(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    #[test]
    fn triangle_to_itself() {
        let g = tri();
        let maps = brute_force_cc(&g, &g, DEFAULT_BRUTE_FORCE_BOUND).unwrap();
        // The only nonempty cycle is the whole triangle, whose preimage is
        // everything, so all 27 functions qualify.
        assert_eq!(maps.len(), 27);
        let mut sorted = maps.clone();
        sorted.sort();
        assert_eq!(maps, sorted);
    }

    #[test]
    fn small_cases() {
        let k2 = MultiGraph::new(2, vec![(0, 1)]).unwrap();
        assert_eq!(brute_force_cc(&tri(), &k2, 100).unwrap().len(), 1);
        assert!(brute_force_cc(&k2, &tri(), 100).unwrap().is_empty());
        let empty = MultiGraph::new(0, vec![]).unwrap();
        assert_eq!(brute_force_cc(&empty, &tri(), 100).unwrap().len(), 1);
        assert!(brute_force_cc(&tri(), &tri(), 10).is_err());
    }
}
