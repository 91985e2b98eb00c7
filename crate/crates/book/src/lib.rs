//! The guide under `book/` is plain mdbook, which cannot resolve crate
//! dependencies when testing snippets. Each chapter is pulled in as the docs
//! of an empty module instead, so `cargo test --doc` compiles and runs every
//! Rust block against the library.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/harmonic.md")]
pub mod harmonic {}
#[doc = include_str!("../../../book/src/invariants.md")]
pub mod invariants {}
#[doc = include_str!("../../../book/src/strata.md")]
pub mod strata {}
#[doc = include_str!("../../../book/src/second_order.md")]
pub mod second_order {}
#[doc = include_str!("../../../book/src/classify.md")]
pub mod classify {}
#[doc = include_str!("../../../book/src/tables.md")]
pub mod tables {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
