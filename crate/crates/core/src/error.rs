use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty input: no vertices")]
    EmptyInput,
    #[error("line {line}: expected `u v`, found `{text}`")]
    Syntax { line: usize, text: String },
    #[error("line {line}: self-loop on vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge {u} {v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("line {line}: vertex ids must be contiguous from 0, but {missing} never occurs (largest id {max})")]
    NonContiguous {
        line: usize,
        missing: usize,
        max: usize,
    },
    #[error("line {line}: edge {u} {v} closes a cycle")]
    Cycle { line: usize, u: usize, v: usize },
    #[error("line {line}: graph is disconnected (vertex {vertex} is not reachable from 0)")]
    Disconnected { line: usize, vertex: usize },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("not a tree: {0}")]
    NotATree(String),
    #[error("coloring has {got} entries but the graph has {expected} vertices")]
    ColoringLength { expected: usize, got: usize },
    #[error("color {color} at vertex {vertex} is outside 1..={t}")]
    ColorOutOfRange { vertex: usize, color: u32, t: u32 },
    #[error("graph on {n} vertices exceeds the brute-force limit of {limit} (raise it with SYMTREE_BRUTE_LIMIT)")]
    TooLarge { n: usize, limit: usize },
    #[error("{t} colors is below the distinguishing number {distinguishing}")]
    BelowDistinguishingNumber { t: usize, distinguishing: usize },
    #[error("operation needs at least {need} vertices, got {got}")]
    TooSmall { need: usize, got: usize },
    #[error("not a spider: vertices {0} and {1} both have degree at least 3")]
    NotASpider(usize, usize),
    #[error("root vertex has degree 0")]
    IsolatedRoot,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("estimated size {estimate} exceeds the budget of {budget} vertices")]
    OverBudget { estimate: String, budget: u64 },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("cannot parse eccentric sequence: {0}")]
    SequenceSyntax(String),
    #[error("unknown {kind} `{name}`")]
    Unknown { kind: &'static str, name: String },
}
