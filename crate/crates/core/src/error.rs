use thiserror::Error;

/// Errors produced anywhere in the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("expression materializes {requested} vertices, limit is {limit}")]
    SizeOverflow { requested: u128, limit: usize },

    #[error("{operation} supports at most {limit} vertices, got {order}")]
    SizeLimit {
        operation: &'static str,
        limit: usize,
        order: usize,
    },

    #[error("invalid expression: {0}")]
    InvalidExpr(String),

    #[error("construction {id} not applicable: {reason}")]
    NotApplicable { id: String, reason: String },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("graph6: malformed header: {0}")]
    Graph6Header(String),

    #[error("graph6: truncated edge section: expected {expected} bytes, found {found}")]
    Graph6Truncated { expected: usize, found: usize },

    #[error("graph6: {0} trailing bytes after edge section")]
    Graph6Trailing(usize),

    #[error("graph6: byte {byte:#04x} at offset {offset} outside the printable range")]
    Graph6InvalidByte { byte: u8, offset: usize },

    #[error("graph6: padding bits are not zero")]
    Graph6Padding,

    #[error("graph is not bipartite")]
    NotBipartite,

    #[error("malformed record: {0}")]
    InvalidRecord(String),

    #[error("no graph on {0} vertices avoids the forbidden family")]
    NoAdmissibleGraph(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
