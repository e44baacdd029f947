//! Exact-arithmetic proximity graphs and hardness machinery.
//!
//! Everything is computed over arbitrary-precision rationals: a pair of points
//! is an edge of a proximity graph iff a *predicate on squared distances*
//! holds, and the closed/open boundary of that predicate decides edges, so
//! floating point is never acceptable. The crate provides
//!
//! * the three graph classes (relative closest graphs, relative neighborhood
//!   graphs, Gabriel graphs) over explicit point sets ([`proximity`]),
//! * 2-page book embeddings of subcubic graphs with canonical tie-breaking
//!   and layout annotations ([`book`]),
//! * point-set gadget constructions and polynomial reductions that realize
//!   classic NP-hard problems inside each graph class ([`gadgets`],
//!   [`reductions`]),
//! * exact solvers used as test oracles ([`oracles`]),
//! * end-to-end verification of reduction bundles ([`verify`]),
//! * deterministic text formats and SVG rendering ([`formats`], [`svg`]).

pub mod book;
pub mod formats;
pub mod gadgets;
pub mod geom;
pub mod graph;
pub mod oracles;
pub mod proximity;
pub mod reductions;
pub mod svg;
pub mod verify;

pub use geom::{Point, PointSet, Rational};
pub use graph::{Graph, Problem, Solution};
pub use proximity::ProximityClass;
