//! Schnyder woods, dual woods and degree-bounded spanning tree pairs for
//! 3-connected plane graphs.

pub mod batch;
pub mod candidate;
pub mod color;
pub mod corpus;
pub mod draw;
pub mod dual_wood;
pub mod error;
pub mod export;
pub mod extract;
pub mod io;
pub mod opp;
pub mod oracle;
pub mod planar;
pub mod report;
pub mod schnyder;

pub use color::Color;
pub use error::{Error, Result};
pub use planar::{build_graph, Dart, EmbeddedPlanarGraph};
pub use report::{Location, ValidationReport, Violation};
