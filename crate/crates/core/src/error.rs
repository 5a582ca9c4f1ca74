use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyGraph,

    #[error("loop at vertex {0} is not allowed")]
    Loop(usize),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("graph is disconnected; components: {}", format_components(.components))]
    Disconnected { components: Vec<Vec<usize>> },

    #[error("operation requires a simple graph")]
    NotSimple,

    #[error("vertex set must be a non-empty proper subset of the vertices")]
    TrivialVertexSet,

    #[error("divisor has {got} coefficients but the graph has {expected} vertices")]
    LengthMismatch { expected: usize, got: usize },

    #[error("divisor is not effective (vertex {0} is in debt)")]
    NotEffective(usize),

    #[error("vertex {0} other than the fire source is in debt")]
    DebtOffSource(usize),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid family parameters: {0}")]
    InvalidParams(String),

    #[error("search witness failed independent revalidation: {0}")]
    WitnessRejected(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

fn format_components(components: &[Vec<usize>]) -> String {
    components
        .iter()
        .map(|c| {
            let items: Vec<String> = c.iter().map(|v| v.to_string()).collect();
            format!("{{{}}}", items.join(","))
        })
        .collect::<Vec<_>>()
        .join(" ")
}

pub type Result<T> = std::result::Result<T, Error>;
