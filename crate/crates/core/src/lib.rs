pub mod bounds;
pub mod cli;
pub mod eds;
pub mod error;
pub mod fdeletion;
pub mod generate;
pub mod graph;
pub mod protrusion;
pub mod treewidth;

pub use error::{Error, Result};
pub use graph::{Graph, Vertex, VertexSet};
