use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot reverse a polynomial of degree {degree} about degree {bound}")]
    ReverseDegree { degree: usize, bound: usize },

    #[error("polynomial of degree {degree} exceeds the allowed degree {bound}")]
    DegreeTooLarge { degree: usize, bound: usize },

    #[error("interpolation needs at least one point")]
    NoPoints,

    #[error("duplicate interpolation node n = {0}")]
    DuplicateNode(String),

    #[error("series numerator coefficient h_{index} = {value} is not an integer")]
    NonIntegerNumerator { index: usize, value: String },

    #[error("f-polynomial must have constant term 1 (empty face), found {0}")]
    EmptyFace(String),

    #[error("the zero polynomial has no symmetric decomposition")]
    ZeroPolynomial,

    #[error("element {index} is outside 1..={size}")]
    OutOfRange { index: usize, size: usize },

    #[error("{0} elements exceed the supported maximum of 64")]
    TooManyElements(usize),

    #[error("relation is cyclic: {}", format_cycle(.0))]
    Cycle(Vec<usize>),

    #[error("loop at vertex {0}")]
    Loop(usize),

    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),

    #[error("{what} needs about {needed} units of work, budget is {budget}")]
    BudgetExceeded {
        what: &'static str,
        needed: u128,
        budget: u64,
    },

    #[error("simplex vertices are affinely dependent")]
    DegenerateSimplex,

    #[error("cannot derive a bounding box from the inequalities; supply a `box` line")]
    Unbounded,

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("{0}")]
    Io(String),

    #[error("sign condition violated: {0}")]
    Counterexample(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

fn format_cycle(cycle: &[usize]) -> String {
    cycle
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" < ")
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }

    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExceeded { .. })
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
