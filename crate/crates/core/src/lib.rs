//! Algorithms for weakly modular graphs: recognition of the metric families
//! of the hierarchy, gated hulls, the Boolean-gated toolkit for
//! swm-graphs, minimum 0-extension, universal-cover balls and metric
//! analyses.
//!
//! All graphs are finite, simple, connected and undirected, with vertices
//! `0..n`.

pub mod analysis;
pub mod cover;
pub mod error;
pub mod generate;
pub mod graph;
pub mod metric;
pub mod pattern;
pub mod recognition;
pub mod swm;
pub mod zero_ext;

pub use analysis::{BfsOrder, DiscFilling, HyperbolicityReport, Move};
pub use cover::{universal_cover_ball, CoverBall};
pub use error::{Error, Result};
pub use graph::{DistMatrix, Graph, SetKind, VertexSet};
pub use metric::{CheckMode, MetricTriangle};
pub use pattern::{Pattern, PatternHit};
pub use recognition::{ClassReport, MetricFamily, Verdict, Witness};
pub use swm::{BarycentricGraph, BooleanGatedPoset, NormalPath, SwmToolkit};
pub use zero_ext::{Rational, ZeroExtInstance, ZeroExtSolution};
