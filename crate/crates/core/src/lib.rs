pub mod canon;
pub mod catalog;
pub mod error;
pub mod formats;
pub mod graph;
pub mod miner;
pub mod minor;
pub mod par;
pub mod planarity;
pub mod property;
pub mod treewidth;

pub use error::{Error, Result};
pub use graph::{Edge, Graph, SplitMode, MAX_ORDER};
