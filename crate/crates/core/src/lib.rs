//! Swap-robust almost-supermagic edge labelings of complete graphs.
//!
//! Edges of `K_n` model stored items, vertices model servers and a label is
//! the popularity rank of an item. A vertex's label sum is its load. The crate
//! builds labelings whose loads are nearly equal, certifies them, and measures
//! how far loads can drift when every rank moves by at most `p`.

pub mod constructions;
pub mod error;
pub mod graph;
pub mod io;
pub mod robustness;
pub mod sim;
pub mod squares;
pub mod verification;

pub use error::{Error, Result};
pub use graph::{
    alpha_of, edge_index, edge_pair, vertex_sums, CompleteGraph, Edge, EdgeLabeling, Label,
    SwapRecord, Vertex,
};
