//! Exact toolkit for the dichromatic number of digraphs.
//!
//! The crate is organised around an immutable [`Digraph`] value:
//!
//! * [`digraph`]: construction, degree and connectivity queries, blocks,
//!   derived graphs, isomorphism and the `p dgf` text format.
//! * [`coloring`]: exact dicoloring, criticality, list-dicoloring.
//! * [`constructions`]: Dirac, Hajós and Ore joins, identification and the
//!   gadget digraphs with their Ore derivations.
//! * [`analysis`]: Gallai block classification, perfectness checks, the
//!   arc-count bound for critical digon-free digraphs.
//! * [`search`]: enumeration, critical-digraph census, `N(k)` checks,
//!   Hajós-construction search and the constructive Ore derivation.
//! * [`script`]: the `.hdv` derivation language (parse, evaluate, verify).

pub mod analysis;
pub mod coloring;
pub mod constructions;
pub mod digraph;
mod error;
pub mod script;
pub mod search;

pub use coloring::{Coloring, ListAssignment};
pub use digraph::{Digraph, UndirectedGraph, Vertex};
pub use error::{Error, Result};
