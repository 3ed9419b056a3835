use crate::error::{Error, Result};
use crate::graph::{EdgeId, GraphId, MultiGraph};

/// A total function from the edges of a source graph to the edges of a
/// target graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeMapping {
    source: GraphId,
    target: GraphId,
    map: Vec<EdgeId>,
}

impl EdgeMapping {
    pub fn new(g: &MultiGraph, h: &MultiGraph, map: Vec<EdgeId>) -> Result<Self> {
        if map.len() != g.edge_count() {
            return Err(Error::MalformedMapping(format!(
                "map has {} entries, source has {} edges",
                map.len(),
                g.edge_count()
            )));
        }
        if let Some((e, &x)) = map.iter().enumerate().find(|(_, &x)| x >= h.edge_count()) {
            return Err(Error::MalformedMapping(format!(
                "edge {e} maps to {x}, target has {} edges",
                h.edge_count()
            )));
        }
        Ok(EdgeMapping {
            source: g.id(),
            target: h.id(),
            map,
        })
    }

    pub fn identity(g: &MultiGraph) -> Self {
        EdgeMapping {
            source: g.id(),
            target: g.id(),
            map: (0..g.edge_count()).collect(),
        }
    }

    pub fn source(&self) -> GraphId {
        self.source
    }

    pub fn target(&self) -> GraphId {
        self.target
    }

    pub fn images(&self) -> &[EdgeId] {
        &self.map
    }

    pub fn image(&self, e: EdgeId) -> EdgeId {
        self.map[e]
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// `self` followed by `next`; the target of `self` must be the source
    /// of `next`.
    pub fn then(&self, next: &EdgeMapping) -> Result<EdgeMapping> {
        if self.target != next.source {
            return Err(Error::MalformedMapping(
                "composed mappings do not share a middle graph".into(),
            ));
        }
        Ok(EdgeMapping {
            source: self.source,
            target: next.target,
            map: self.map.iter().map(|&x| next.map[x]).collect(),
        })
    }

    /// Confirms that the mapping was built for this pair of graphs.
    pub fn check(&self, g: &MultiGraph, h: &MultiGraph) -> Result<()> {
        if self.source != g.id() || self.target != h.id() || self.map.len() != g.edge_count() {
            return Err(Error::MalformedMapping(
                "mapping does not belong to the given graphs".into(),
            ));
        }
        Ok(())
    }
}
