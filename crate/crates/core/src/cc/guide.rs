use super::local::is_vertex_local;
use super::EdgeMapping;
use crate::constructions::TreeSnarkGraph;
use crate::error::{Error, Result};
use crate::graph::{Automorphism, EdgeId, VertexId};

/// `g ∘ ι_v` written as `ι_{v'} ∘ φ` with `φ` an automorphism of the gadget.
#[derive(Clone, Debug)]
pub struct CopyFactor {
    pub target_vertex: usize,
    pub iso: Automorphism,
}

fn loud(msg: String) -> Error {
    Error::Disagreement(msg)
}

/// Locates the copy of the target that receives the copy at `v` under `g`
/// and returns the gadget automorphism relating the two inclusions.
pub fn factor_through_copy(
    g: &EdgeMapping,
    src: &TreeSnarkGraph,
    v: usize,
    dst: &TreeSnarkGraph,
) -> Result<CopyFactor> {
    g.check(&src.graph, &dst.graph)?;
    let comp = src.inclusions[v].then(g)?;
    let mut candidates: Option<Vec<usize>> = None;
    for &x in comp.images() {
        let here = dst.copies_containing(x);
        candidates = Some(match candidates {
            None => here,
            Some(c) => c.into_iter().filter(|u| here.contains(u)).collect(),
        });
    }
    let mut image: Vec<EdgeId> = comp.images().to_vec();
    image.sort_unstable();
    let target_vertex = candidates
        .unwrap_or_default()
        .into_iter()
        .find(|&u| dst.copy_edges(u) == image)
        .ok_or_else(|| loud(format!("image of copy {v} is not exactly one target copy")))?;
    if src.template.colors[v] != dst.template.colors[target_vertex] {
        return Err(loud(format!(
            "copy {v} lands on copy {target_vertex} of a different color"
        )));
    }
    let gadget = src.template.gadget_of(v);
    let back = dst.inclusions[target_vertex].images();
    let mut inverse = vec![usize::MAX; dst.graph.edge_count()];
    for (e, &x) in back.iter().enumerate() {
        inverse[x] = e;
    }
    let phi: Vec<EdgeId> = comp.images().iter().map(|&x| inverse[x]).collect();
    let phi_map = EdgeMapping::new(gadget, gadget, phi.clone())?;
    let vertex_map = is_vertex_local(gadget, gadget, &phi_map)?
        .ok_or_else(|| loud(format!("copy {v} is not mapped star to star")))?;
    let iso = Automorphism {
        vertex_map,
        edge_map: phi,
    };
    if !iso.is_valid(gadget, gadget) {
        return Err(loud(format!("copy {v} is not mapped by an automorphism")));
    }
    Ok(CopyFactor { target_vertex, iso })
}

/// The tree map guiding a cc map `g: H₁ → H₂` between tree-of-snarks graphs.
///
/// Fails loudly if some copy is not carried onto a single copy of the same
/// color by an automorphism, or if a tree edge is neither kept nor collapsed.
pub fn extract_guiding_hom(
    g: &EdgeMapping,
    src: &TreeSnarkGraph,
    dst: &TreeSnarkGraph,
) -> Result<Vec<VertexId>> {
    let f: Vec<usize> = (0..src.template.tree_vertex_count)
        .map(|v| factor_through_copy(g, src, v, dst).map(|c| c.target_vertex))
        .collect::<Result<_>>()?;
    for (t, &(u, v)) in src.template.tree_edges.iter().enumerate() {
        if f[u] == f[v] {
            continue;
        }
        let t2 = dst
            .template
            .tree_edges
            .iter()
            .position(|&(a, b)| (a, b) == (f[u], f[v]) || (b, a) == (f[u], f[v]))
            .ok_or_else(|| loud(format!("tree edge {u}-{v} is torn apart")))?;
        let mut got: Vec<EdgeId> = src.connecting(t).iter().map(|&e| g.image(e)).collect();
        let mut want = dst.connecting(t2).to_vec();
        got.sort_unstable();
        want.sort_unstable();
        if got != want {
            return Err(loud(format!("connecting edges of tree edge {t} are misplaced")));
        }
    }
    Ok(f)
}
