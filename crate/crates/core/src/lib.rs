//! Constructive `⌈5ω/4⌉`-coloring of (P5, gem)-free graphs.
//!
//! The pipeline: detect class membership, split into components, color
//! perfect pieces exactly, otherwise decompose into a clique expansion of one
//! of ten basic graphs or into the seven-set class H, reduce cograph bags to
//! cliques, color with one of four tools and lift back.

pub mod basic;
pub mod coloring;
pub mod decompose;
pub mod detect;
pub mod engine;
pub mod generators;
pub mod graph;
pub mod oracles;
pub mod reduce;

pub use coloring::Coloring;
pub use graph::{Graph, VertexSet};
