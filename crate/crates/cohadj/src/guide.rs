//! The book chapters, compiled as doc-tests.
//!
//! Each module's documentation is a chapter of the mdbook guide under
//! `book/src`, so `cargo test --doc` runs every code block the book shows
//! and the two can never drift apart.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/squiggles.md")]
pub mod squiggles {}

#[doc = include_str!("../../../book/src/simplicial-action.md")]
pub mod simplicial_action {}

#[doc = include_str!("../../../book/src/computads.md")]
pub mod computads {}

#[doc = include_str!("../../../book/src/fillable.md")]
pub mod fillable_filtration {}

#[doc = include_str!("../../../book/src/ordinals.md")]
pub mod ordinals {}

#[doc = include_str!("../../../book/src/monad-lab.md")]
pub mod monad_lab {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
