//! Named graphs and the join, tree-of-snarks and path constructions.

mod join;
mod named;
mod poset;
mod tree;

pub use join::{all_matchings, three_join, two_join, JoinEdgeOrigin, ThreeJoin, TwoJoin};
pub use named::{blanusa2_ab, named_graph, select_ab, NAMES};
pub use poset::{
    induced_cc_from_hom, path_hom_enumerate, path_hom_from_guide, poset_path_graph, Dir,
    DirectedPath,
};
pub use tree::{
    antichain_far_end, antichain_member, antichain_template, antichain_template_with_ends, bar_copy, single_template, tree_snark, Attachment,
    EdgeProvenance, TreeSnarkGraph, TreeTemplate,
};
