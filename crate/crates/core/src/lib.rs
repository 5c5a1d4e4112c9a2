//! Turán numbers of star forests in uniform hypergraphs: extremal
//! constructions, containment deciders for the subhypergraph, expansion and
//! Berge notions, exact bound evaluators and a small exact search.

pub mod arith;
pub mod constructions;
pub mod error;
pub mod formulas;
pub mod hypergraph;
pub mod io;
pub mod patterns;
pub mod search;

pub use arith::Rational;
pub use error::{Error, Result};
pub use hypergraph::{EdgeColoring, Graph, Hypergraph, Vertex};
pub use patterns::StarForestSpec;
pub use search::{ForbiddenFamily, Mode, Pattern, SearchOptions, SearchResult};
