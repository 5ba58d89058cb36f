use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands live over different alphabets")]
    AlphabetMismatch,
    #[error("generator id {0} is not in the alphabet")]
    UnknownGeneratorId(u32),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("index `{0}` lies outside the materialized window")]
    OutOfWindow(String),
    #[error("degree of the zero polynomial is undefined")]
    ZeroDegree,
    #[error("series has constant term {0}, expected {1}")]
    ConstantTerm(String, String),
    #[error("series is not a Lie element in degree {degree}")]
    NotLie { degree: usize },
    #[error("dsw projection needs a series without constant term")]
    DswConstantTerm,
    #[error("`{row}` maps generator `{generator}` outside the materialized window")]
    WindowExceeded { row: String, generator: String },
    #[error("invalid action table: {0}")]
    InvalidActionTable(String),
    #[error("torus parameter must be a nonzero rational")]
    ZeroTorusParameter,
    #[error("weight {weight} for `{h}` is not an integer; no rational power exists")]
    IrrationalPower { h: String, weight: String },
    #[error("elements belong to different models ({0} vs {1})")]
    ModelMismatch(String, String),
    #[error("basis change is not invertible on the window")]
    NotInvertible,
    #[error("basis change does not commute with `{row}` on generator `{generator}`")]
    NotEquivariant { row: String, generator: String },
    #[error("conjugation left G(S'): {0}")]
    NormalityViolation(String),
    #[error("Peterson recursion degenerate at {0}")]
    PetersonDegenerate(String),
    #[error("dimension mismatch at {root}: Serre quotient {serre}, Peterson {peterson}")]
    DimensionMismatch { root: String, serre: String, peterson: String },
    #[error("inconsistent module data: {0}")]
    InconsistentModule(String),
    #[error("window too small to certify: {0}")]
    WindowTooSmall(String),
    #[error("invalid GCM: {0}")]
    InvalidGcm(String),
    #[error("malformed coefficient table: {0}")]
    MalformedTable(String),
    #[error("invalid caps: {0}")]
    InvalidCaps(String),
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("unknown verification suite `{0}`")]
    UnknownSuite(String),
    #[error("suite `{suite}` does not apply to model `{model}`")]
    NotApplicable { suite: String, model: String },
    #[error("schema error: {0}")]
    Schema(String),
}
