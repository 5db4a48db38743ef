//! Clique-width expressions for (C4, P6)-free atoms.
//!
//! The crate decomposes graphs along clique cutsets, builds explicit clique-width
//! expressions with at most 18 labels for every (C4, P6)-free atom, colours graphs by
//! dynamic programming over those expressions, and generates the list-colouring
//! hardness gadget for complete split graphs. Every structural step is checked at
//! runtime; a failed check yields a forbidden-subgraph or clique-cutset certificate.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod atoms;
pub mod bits;
pub mod builders;
pub mod canon;
pub mod colouring;
pub mod cwx;
pub mod generators;
pub mod graph;
pub mod hardness;
pub mod search;
pub mod structure;

pub use bits::Bits;
pub use builders::{build_atom_expr, BuildError, BuildOutcome, Case, StructureFault};
pub use cwx::{CwExpr, Label};
pub use graph::{Graph, GraphError, TwinPartition};
pub use search::{Embedding, Pattern};
