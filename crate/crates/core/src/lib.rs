//! Graph functionality and its companion parameters.
//!
//! The crate computes `fun(y)`, `fun(G)`, the symmetric-difference parameter
//! `sd`, degeneracy and the VC-dimension of closed neighbourhoods, generates
//! the graph families those parameters are studied on, and extracts small,
//! re-verifiable witness sets for the bounded-functionality classes.

pub mod bitset;
pub mod error;
pub mod families;
pub mod functionality;
pub mod graph;
pub mod hyper3;
pub mod io;
pub mod kexpr;
pub mod oracle;
pub mod params;
pub mod rng;
mod subsets;
pub mod symdiff;
pub mod verify;
pub mod witnesses;

pub use bitset::VertexSet;
pub use error::{Error, Result};
pub use functionality::{FunResult, GraphFunResult, WitnessFunction};
pub use graph::Graph;
pub use subsets::MAX_EXACT;
