use thiserror::Error;

/// Errors raised by group construction and the combinatorial operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse Cartan type '{0}': expected a family letter followed by a rank, e.g. A3 (valid families: A, B, C, D, E, F, G)")]
    CartanSyntax(String),
    #[error("unknown Cartan family '{0}' (valid families: A, B, C, D, E, F, G)")]
    UnknownFamily(String),
    #[error("{family}{rank} is not a finite Weyl group type (A_n n>=1, B_n/C_n n>=2, D_n n>=4, E6/E7/E8, F4, G2)")]
    InvalidRank { family: char, rank: usize },
    #[error("group {cartan} has order {order}, which exceeds the enumeration cap {cap}")]
    EnumerationCap {
        cartan: String,
        order: String,
        cap: u64,
    },
    #[error("invalid word '{0}': expected whitespace- or comma-separated generator indices")]
    WordSyntax(String),
    #[error("generator index {index} out of range 1..={rank}")]
    GeneratorOutOfRange { index: usize, rank: usize },
    #[error("operands belong to different groups")]
    MixedGroups,
    #[error("{v} is not below {w} in the Bruhat order")]
    NotBruhatBelow { v: String, w: String },
    #[error("s{generator} is not a left descent of {w}")]
    NotLeftDescent { generator: usize, w: String },
    #[error("mu({0}, {0}) is undefined for equal elements")]
    MuOfEqual(String),
    #[error("{w} has codimension {codim}; the divisor class requires codimension 1")]
    NotDivisor { w: String, codim: usize },
    #[error("pattern avoidance needs a type A group, got {0}")]
    NotTypeA(String),
    #[error("expected characteristic 0 or a prime, got '{0}'")]
    Characteristic(String),
    #[error("{0}")]
    Usage(String),
    #[error("malformed JSON: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;
