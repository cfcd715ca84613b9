//! Vertex- and edge-disjoint K_r packing on bounded-degree graphs.
//!
//! * [`graph`], [`clique`], [`intersect`]: graphs, K_r enumeration, and the
//!   vertex/edge intersection graphs with claw detection;
//! * [`packing`]: greedy, local-search and exact packers plus the regime
//!   classifier that says which of them is already optimal for a given
//!   (r, Δ);
//! * [`sat`]: MAX2SAT(3) formulas and small exact/greedy solvers;
//! * [`gadget`]: the hardness reductions MIS → VDK_r and MAX2SAT(3) →
//!   EDK_4 / EDK_5 with both solution maps and an L-reduction checker;
//! * [`io`]: DIMACS graph and CNF formats.

pub mod clique;
pub mod error;
pub mod gadget;
pub mod generate;
pub mod graph;
pub mod intersect;
pub mod io;
pub mod packing;
pub mod sat;
pub mod verify;

#[cfg(feature = "cli")]
pub mod cli;

pub use clique::{enumerate_krs, Clique, Mode};
pub use error::{Error, Result};
pub use graph::{Graph, VertexId};
pub use intersect::{build_intersection_graph, find_claw, Claw, IntersectionGraph};
pub use packing::{
    classify_regime, exact_max_packing, greedy_maximal_packing, local_improvement_packing, Packing,
    Regime, RegimeTag,
};
pub use sat::{Assignment, Formula, Literal};
