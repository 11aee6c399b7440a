//! Corona product graphs and their metric dimension.
//!
//! Graphs are built from symbolic [`Family`] descriptors or edge lists.
//! [`metric_dimension_exact`] finds minimum resolving sets by pruned
//! exhaustive search, and the [`oracle`] module evaluates closed-form values
//! and bounds so the two can be compared instance by instance.

pub mod corona;
pub mod enumerate;
pub mod error;
pub mod expr;
pub mod family;
pub mod graph;
pub mod metric;
pub mod oracle;
pub mod properties;
pub mod report;
pub mod resolver;
pub mod suite;
pub mod tree;

pub use corona::{corona, iterated_corona, CoronaStructure};
pub use error::{Error, Result};
pub use expr::{parse, parse_graph_expr, GraphExpression, ParseError};
pub use family::Family;
pub use graph::{Graph, Vertex};
pub use metric::{all_pairs, diameter, Dist, DistanceMatrix};
pub use oracle::{BoundKind, BoundResult, Oracle, Source};
pub use resolver::{is_resolving, metric_dimension_exact, LandmarkSet, SolverBudget, SolverResult, SolverStatus};
