pub mod algebra;
pub mod arrays;
pub mod cycle_systems;
pub mod current_graphs;
pub mod derived;
mod error;
pub mod graph;
pub mod orderings;
pub mod perm;
mod report;
pub mod search;
pub mod surface_maps;
mod text;

pub use error::{Error, Result};
pub use report::{Location, ValidationReport, Violation, ViolationKind};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/intro.md")]
    mod intro {}
    #[doc = include_str!("../../../book/src/arrays.md")]
    mod arrays {}
    #[doc = include_str!("../../../book/src/orderings.md")]
    mod orderings {}
    #[doc = include_str!("../../../book/src/cycle_systems.md")]
    mod cycle_systems {}
    #[doc = include_str!("../../../book/src/current_graphs.md")]
    mod current_graphs {}
    #[doc = include_str!("../../../book/src/faces.md")]
    mod faces {}
    #[doc = include_str!("../../../book/src/derived.md")]
    mod derived {}
    #[doc = include_str!("../../../book/src/signed.md")]
    mod signed {}
    #[doc = include_str!("../../../book/src/search.md")]
    mod search {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
