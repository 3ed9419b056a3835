use serde::{Deserialize, Serialize};

use super::EdgeMapping;
use crate::error::{Error, Result};
use crate::gf2::{even_everywhere, EdgeSpaces};
use crate::graph::{EdgeId, MultiGraph, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VerifyMode {
    /// Preimages of the target's cycle basis are cycles.
    Primal,
    /// The odd-image of every source vertex star is a target cut.
    Dual,
    /// Both, and they must agree.
    Both,
}

/// A certificate that a mapping is not cycle-continuous.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Violation {
    /// `cycle` is a target cycle whose preimage `preimage` is not a cycle.
    Primal {
        cycle: Vec<EdgeId>,
        preimage: Vec<EdgeId>,
    },
    /// The odd-image of the star at `vertex` is not a cut.
    Dual {
        vertex: VertexId,
        odd_image: Vec<EdgeId>,
    },
}

/// Precomputed target data for checking many mappings between one pair.
pub(crate) struct Verifier<'a> {
    g: &'a MultiGraph,
    stars: Vec<Vec<EdgeId>>,
    cycle_rows: Vec<Vec<bool>>,
    spaces: EdgeSpaces,
}

impl<'a> Verifier<'a> {
    pub(crate) fn new(g: &'a MultiGraph, h: &MultiGraph) -> Self {
        let spaces = EdgeSpaces::new(h);
        let cycle_rows = spaces
            .cycles
            .rows()
            .iter()
            .map(|r| (0..h.edge_count()).map(|e| r.contains(e)).collect())
            .collect();
        Verifier {
            g,
            stars: (0..g.vertex_count()).map(|v| g.star(v)).collect(),
            cycle_rows,
            spaces,
        }
    }

    pub(crate) fn primal(&self, map: &[EdgeId]) -> Option<Violation> {
        for row in &self.cycle_rows {
            let pre = (0..map.len()).filter(|&e| row[map[e]]);
            if !even_everywhere(self.g, pre.clone()) {
                return Some(Violation::Primal {
                    cycle: (0..row.len()).filter(|&x| row[x]).collect(),
                    preimage: pre.collect(),
                });
            }
        }
        None
    }

    pub(crate) fn dual(&self, map: &[EdgeId]) -> Option<Violation> {
        for (v, star) in self.stars.iter().enumerate() {
            if !self.spaces.is_cut_by_syndrome(star.iter().map(|&e| map[e])) {
                let mut odd: Vec<EdgeId> = Vec::new();
                for &e in star {
                    match odd.iter().position(|&x| x == map[e]) {
                        Some(i) => {
                            odd.swap_remove(i);
                        }
                        None => odd.push(map[e]),
                    }
                }
                odd.sort_unstable();
                return Some(Violation::Dual {
                    vertex: v,
                    odd_image: odd,
                });
            }
        }
        None
    }

    pub(crate) fn run(&self, map: &[EdgeId], mode: VerifyMode) -> Result<Option<Violation>> {
        Ok(match mode {
            VerifyMode::Primal => self.primal(map),
            VerifyMode::Dual => self.dual(map),
            VerifyMode::Both => {
                let p = self.primal(map);
                let d = self.dual(map);
                if p.is_some() != d.is_some() {
                    return Err(Error::Disagreement(format!(
                        "primal says {}, dual says {} for map {map:?}",
                        p.is_none(),
                        d.is_none()
                    )));
                }
                p
            }
        })
    }
}

/// Whether `f: E(g) → E(h)` is cycle-continuous.
pub fn verify_cc(g: &MultiGraph, h: &MultiGraph, f: &EdgeMapping, mode: VerifyMode) -> Result<bool> {
    Ok(find_violation(g, h, f, mode)?.is_none())
}

/// Like [`verify_cc`], returning a witness on failure. In `Both` mode the
/// primal witness is reported.
pub fn find_violation(
    g: &MultiGraph,
    h: &MultiGraph,
    f: &EdgeMapping,
    mode: VerifyMode,
) -> Result<Option<Violation>> {
    f.check(g, h)?;
    Verifier::new(g, h).run(f.images(), mode)
}
