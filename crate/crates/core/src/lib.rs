//! Heterochromatic (rainbow) tree partitions of edge-colored graphs.
//!
//! * [`coloring`] and [`io`]: the data model and its text formats.
//! * [`formula`]: the closed-form partition number of `K_n`.
//! * [`canonical`]: the extremal coloring attaining it.
//! * [`rainbow`]: maximum rainbow forests by matroid intersection.
//! * [`solver`]: exact minimum partitions for small graphs.
//! * [`constructive`]: a polynomial partition algorithm for complete graphs.
//! * [`verify`]: campaigns that check all of the above against each other.

pub mod canonical;
pub mod coloring;
pub mod constructive;
pub mod error;
pub mod formula;
pub mod io;
pub mod rainbow;
pub mod solver;
pub mod verify;

pub use coloring::{
    check_partition, choose2, is_partition_valid, merge_colors, restrict, validate, Color, Edge,
    EdgeColoring, PartitionViolation, RawColoring, Restriction, Tree, TreePartition, Vertex,
    Violation,
};
pub use error::{Error, Result};
