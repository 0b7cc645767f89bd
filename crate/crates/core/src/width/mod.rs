//! Treewidth, tree-cut decompositions and screewidth, subcubic embeddings
//! and vertex congestion, and the inequalities linking them.

mod chain;
mod embedding;
mod tcd;
mod treewidth;

pub use chain::{bound_chain_check, ChainCheck, ChainInputs, ChainReport, CheckStatus};
pub use embedding::{congestion, embedding_to_tcd, vertex_congestion_exact, SubcubicEmbedding};
pub use tcd::{screewidth_exact, tcd_width, TcdWidth, TreeCutDecomposition};
pub use treewidth::treewidth_exact;
