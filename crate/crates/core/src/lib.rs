//! Constructive partitions of 2-edge-coloured complete bipartite graphs
//! `K_{n,n}` into at most four vertex-disjoint monochromatic cycles.
//!
//! Every edge of the complete bipartite graph on parts
//! `X = {x1..xn}`, `Y = {y1..yn}` is coloured red or blue. The vertex set
//! can always be partitioned into at most four monochromatic cycles, where
//! a single vertex and a single edge both count as (degenerate) cycles.
//! This crate implements that guarantee constructively:
//!
//! * [`solver::partition_le4`] produces a verified partition into at most
//!   four cycles for any colouring, in two routes: *split* colourings get a
//!   direct three-cycle construction, all other colourings go through a
//!   monochromatic Hamiltonian path.
//! * [`oracle`] provides exact brute-force minimum partitions for small `n`,
//!   used as ground truth in tests and exposed on the CLI.
//! * [`verify`] checks any claimed partition independently of how it was
//!   produced.
//! * [`gen`] produces structured, random and exhaustive colouring families.
//!
//! The solver never returns an unverified answer: every partition is passed
//! through [`verify::verify_partition`] before it leaves the library.

pub mod batch;
pub mod colouring;
pub mod error;
pub mod gen;
pub mod oracle;
pub mod simplepath;
pub mod solver;
pub mod split;
pub mod trace;
pub mod verify;
pub mod zigzag;

pub use colouring::{
    Colour, Colouring, ColouringView, Cycle, CycleKind, MonoPath, Partition, Side, Vertex,
};
pub use error::Error;
pub use verify::VerifyReport;
