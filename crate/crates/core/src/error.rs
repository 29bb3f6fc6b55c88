use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed braid token `{0}`")]
    MalformedToken(String),

    #[error("strand index out of range in `{token}`: a braid on {n} strands admits {allowed}")]
    IndexOutOfRange {
        token: String,
        n: usize,
        allowed: String,
    },

    #[error("band token `{0}` needs i < j")]
    BandOrder(String),

    #[error("strand count must be at least 1")]
    NoStrands,

    #[error("invalid component id {id} (closure has {count} components)")]
    InvalidComponent { id: usize, count: usize },

    #[error("class has {got} entries but the closure has {expected} components")]
    ClassLength { expected: usize, got: usize },

    #[error(
        "class entry C_{index} = {value} is negative; reorient that component and supply \
         a re-braided word so that every entry is non-negative"
    )]
    NegativeClass { index: usize, value: i64 },

    #[error("class is identically zero")]
    ZeroClass,

    #[error(
        "component {0} spans a disk with no piercings (unknotted and unlinked); \
         the Thurston-norm bracket needs a link without such components"
    )]
    UnlinkedUnknot(usize),

    #[error("polynomial is zero")]
    ZeroPolynomial,

    #[error("negative exponent {0} in power")]
    NegativePower(i64),

    #[error("polynomial is not divisible by the given divisor")]
    NotDivisible,

    #[error("polynomial has negative v-exponent {0}")]
    NegativeVDegree(i32),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("polynomial file line {line}: {msg}")]
    PolyFormat { line: usize, msg: String },

    #[error("operation needs a braid on {expected} strands, got {got}")]
    StrandCount { expected: usize, got: usize },

    #[error("evaluation budget of {0} steps exhausted")]
    BudgetExceeded(usize),

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error("limit exceeds hard ceiling: {0}")]
    Ceiling(String),

    #[error("{0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
