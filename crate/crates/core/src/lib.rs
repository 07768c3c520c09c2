//! Constructive rainbow colourings of graphs.
//!
//! A rainbow colouring of a connected extension of a dominating subgraph is
//! built from a colouring of the subgraph plus a constant number of fresh
//! colours: three for connected two-way dominating sets, six for connected
//! two-way two-step dominating sets. On top of those two extensions sit the
//! end-to-end pipelines (connected dominating set, minimum degree), the
//! special-class constructions (interval, unit interval, circular-arc,
//! threshold, chain and bridge-less chordal graphs), an independent verifier
//! with an exhaustive `rc` oracle for small graphs, and generators for the
//! extremal families.

pub mod error;
pub mod graph;
pub mod scalar;
pub mod colouring;
pub mod oracle;
pub mod domination;
pub mod rainbow;
pub mod classes;
pub mod gen;
pub mod io;

pub use colouring::EdgeColouring;
pub use error::{Error, Result};
pub use graph::Graph;
pub use scalar::{Rational, Scalar};

pub use classes::{ArcRepresentation, DominatingStructure, IntervalRepresentation, StructureKind};
pub use domination::DominationCertificate;
pub use rainbow::{PipelineOutcome, RainbowColouring, Witness};

/// Interval representation with exact rational endpoints.
pub type IntervalRep = IntervalRepresentation<Rational>;
/// Interval representation with floating-point endpoints.
pub type IntervalRepF64 = IntervalRepresentation<f64>;
/// Circular-arc representation with exact rational endpoints.
pub type ArcRep = ArcRepresentation<Rational>;
/// Circular-arc representation with floating-point endpoints.
pub type ArcRepF64 = ArcRepresentation<f64>;
