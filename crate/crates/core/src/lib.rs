pub mod cc;
pub mod colorflow;
pub mod constructions;
pub mod error;
pub mod gf2;
pub mod graph;
pub mod io;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/spaces.md")]
    mod spaces {}
    #[doc = include_str!("../../../book/src/cc-maps.md")]
    mod cc_maps {}
    #[doc = include_str!("../../../book/src/search.md")]
    mod search {}
    #[doc = include_str!("../../../book/src/snarks.md")]
    mod snarks {}
    #[doc = include_str!("../../../book/src/constructions.md")]
    mod constructions {}
    #[doc = include_str!("../../../book/src/posets.md")]
    mod posets {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
