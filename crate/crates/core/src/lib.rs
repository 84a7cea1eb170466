pub mod algos;
pub mod classify;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod minor;
pub mod oracle;
pub mod percolation;
pub mod signatures;

pub use error::{Error, Result};
pub use graph::{EdgeSet, Graph, VertexSet};
