use super::verify::{verify_cc, VerifyMode};
use super::EdgeMapping;
use crate::constructions::{JoinEdgeOrigin, ThreeJoin, TwoJoin};
use crate::error::{Error, Result};
use crate::graph::{automorphisms, cyclic_edge_connectivity, has_ordered_star_transitivity, MultiGraph};

fn require_cc(g: &MultiGraph, k: &MultiGraph, f: &EdgeMapping, which: &str) -> Result<()> {
    if !verify_cc(g, k, f, VerifyMode::Both)? {
        return Err(Error::Precondition(format!("{which} factor map is not cycle-continuous")));
    }
    Ok(())
}

fn glue(
    origin: &[JoinEdgeOrigin],
    f1: &EdgeMapping,
    f2: &[usize],
    connecting: impl Fn(usize) -> usize,
) -> Vec<usize> {
    origin
        .iter()
        .map(|o| match *o {
            JoinEdgeOrigin::First(e) => f1.image(e),
            JoinEdgeOrigin::Second(e) => f2[e],
            JoinEdgeOrigin::Connecting(i) => connecting(i),
        })
        .collect()
}

fn check_result(join: &MultiGraph, k: &MultiGraph, f: &EdgeMapping) -> Result<()> {
    if !verify_cc(join, k, f, VerifyMode::Both)? {
        return Err(Error::Disagreement("glued map failed verification".into()));
    }
    Ok(())
}

/// Glues cc maps `f₁: G₁ → K` and `f₂: G₂ → K` into a cc map from their
/// 2-join, first moving `f₂` by an automorphism of `K` so that the two
/// deleted edges have the same image. Both connecting edges go to `f₁(e₁)`.
pub fn compose_two_join_maps(
    g1: &MultiGraph,
    f1: &EdgeMapping,
    g2: &MultiGraph,
    f2: &EdgeMapping,
    join: &TwoJoin,
    k: &MultiGraph,
) -> Result<EdgeMapping> {
    require_cc(g1, k, f1, "first")?;
    require_cc(g2, k, f2, "second")?;
    let [e1, e2] = join.edges;
    let want = f1.image(e1);
    let from = f2.image(e2);
    let sigma = automorphisms(k)?
        .into_iter()
        .find(|a| a.edge_map[from] == want)
        .ok_or_else(|| {
            Error::Precondition("no automorphism of K aligns the deleted edges".into())
        })?;
    let moved: Vec<usize> = f2.images().iter().map(|&x| sigma.edge_map[x]).collect();
    let f = EdgeMapping::new(&join.graph, k, glue(&join.origin, f1, &moved, |_| want))?;
    check_result(&join.graph, k, &f)?;
    Ok(f)
}

/// Glues cc maps `f₁: G₁ → K` and `f₂: G₂ → K` into a cc map from their
/// 3-join. Each `fᵢ` sends the star of `uᵢ` onto a vertex star of `K`; an
/// automorphism of `K` is chosen that carries the image of `s₂[matching[k]]`
/// to the image of `s₁[k]` for every `k`, and connecting edge `k` goes to
/// `f₁(s₁[k])`.
///
/// `K` must be cubic, cyclically 4-edge-connected (or have no
/// cycle-separating cut at all) and transitive on ordered stars.
pub fn compose_three_join_maps(
    g1: &MultiGraph,
    f1: &EdgeMapping,
    g2: &MultiGraph,
    f2: &EdgeMapping,
    join: &ThreeJoin,
    k: &MultiGraph,
) -> Result<EdgeMapping> {
    if !k.is_cubic() {
        return Err(Error::Precondition("K must be cubic".into()));
    }
    if cyclic_edge_connectivity(k).is_some_and(|c| c < 4) {
        return Err(Error::Precondition("K must be cyclically 4-edge-connected".into()));
    }
    if !has_ordered_star_transitivity(k)? {
        return Err(Error::Precondition("K must be transitive on ordered stars".into()));
    }
    require_cc(g1, k, f1, "first")?;
    require_cc(g2, k, f2, "second")?;
    let [u1, u2] = join.vertices;
    let s1 = g1.star(u1);
    let s2 = g2.star(u2);
    let want: Vec<usize> = (0..3).map(|i| f1.image(s1[i])).collect();
    let from: Vec<usize> = (0..3).map(|i| f2.image(s2[join.matching[i]])).collect();
    let sigma = automorphisms(k)?
        .into_iter()
        .find(|a| (0..3).all(|i| a.edge_map[from[i]] == want[i]))
        .ok_or_else(|| {
            Error::Precondition("no automorphism of K aligns the two star images".into())
        })?;
    let moved: Vec<usize> = f2.images().iter().map(|&x| sigma.edge_map[x]).collect();
    let f = EdgeMapping::new(&join.graph, k, glue(&join.origin, f1, &moved, |i| want[i]))?;
    check_result(&join.graph, k, &f)?;
    Ok(f)
}
