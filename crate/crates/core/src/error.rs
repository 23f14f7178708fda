use thiserror::Error;

use crate::graph::Edge;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("edge {0} not present")]
    MissingEdge(Edge),

    #[error("edge {0} already present")]
    DuplicateEdge(Edge),

    #[error("loop at vertex {0} requested")]
    Loop(usize),

    #[error("capacity exceeded: {requested} requested, limit {limit}")]
    Capacity { requested: usize, limit: usize },

    #[error("malformed graph6: {0}")]
    Graph6(String),

    #[error("malformed edge list: {0}")]
    EdgeList(String),

    #[error("unknown catalog graph `{0}`")]
    UnknownGraph(String),

    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("one-step minimality requires the complement of `{0}` to be declared minor-closed")]
    OneStepNotAllowed(String),

    #[error("time budget exceeded after order {} index {}", .0.order, .0.index)]
    BudgetExceeded(Box<crate::miner::Checkpoint>),

    #[error("invalid input: {0}")]
    Invalid(String),
}
