use super::EdgeMapping;
use crate::error::Result;
use crate::graph::{MultiGraph, VertexId};

/// The vertex map of a vertex-local mapping, if `f` is one.
///
/// `f` is vertex-local when each source star (non-loop incident edges) goes
/// bijectively onto the star of one target vertex of the same size. Where two
/// target vertices have the same star (as in K₂³) the lower index is
/// reported. Source vertices with an empty star make the answer `None`.
pub fn is_vertex_local(g: &MultiGraph, h: &MultiGraph, f: &EdgeMapping) -> Result<Option<Vec<VertexId>>> {
    f.check(g, h)?;
    let mut out = Vec::with_capacity(g.vertex_count());
    for v in 0..g.vertex_count() {
        let star = g.star(v);
        let Some(&e0) = star.first() else {
            return Ok(None);
        };
        let mut images: Vec<_> = star.iter().map(|&e| f.image(e)).collect();
        images.sort_unstable();
        if images.windows(2).any(|w| w[0] == w[1]) {
            return Ok(None);
        }
        let (a, b) = h.endpoints(f.image(e0));
        let hit = [a.min(b), a.max(b)].into_iter().find(|&w| h.star(w) == images);
        match hit {
            Some(w) => out.push(w),
            None => return Ok(None),
        }
    }
    Ok(Some(out))
}
