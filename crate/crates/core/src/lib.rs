//! Graph embeddings as graph-encoded maps.
//!
//! This crate represents 2-cell embeddings of connected graphs in surfaces
//! by their gems: connected, properly 3-edge-coloured cubic graphs whose
//! red-blue bigons are 4-cycles. On top of that representation it provides
//!
//! * conversion between rotation systems (with edge signatures) and gems,
//! * partial geometric duality and partial Petrie duality, with the full
//!   per-edge colour-group action on jewels,
//! * closed 2-cell detection through bad vertex/face pairs,
//! * the local / midrange / global conditions that decide whether a
//!   partial dual is closed 2-cell without constructing it,
//! * separating-feature obstructions that rule out every partial dual, and
//! * exhaustive search over edge subsets with a cross-checking harness.
//!
//! The `gembed` binary exposes all of it on the command line.

pub mod c2c;
pub mod cli;
pub mod conditions;
pub mod corner;
pub mod cuts;
pub mod duality;
pub mod gem;
pub mod io;
pub mod iso;
pub mod rotation;
pub mod search;
pub mod separation;
pub mod subset;
pub mod trace;

pub use gem::{CandidateGem, Colour, ColourPair, EmbeddingSummary, Gem, ValidationReport};
pub use rotation::{gem_from_rotation, rotation_from_gem, RotationEmbedding};
pub use subset::EdgeSubset;
