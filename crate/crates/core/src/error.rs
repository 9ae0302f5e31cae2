use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate value {0} in word")]
    DuplicateValue(u32),
    #[error("invalid token {0:?}: expected a positive integer")]
    InvalidToken(String),
    #[error("compact digit string {0:?} contains 0")]
    ZeroInDigitString(String),
    #[error("values of {0} are not exactly 1..=n")]
    NotAPermutation(String),
    #[error("the empty word has no LTR-max decomposition")]
    EmptyWord,
    #[error("exhaustive oracle limited to length {cutoff}, got {len}")]
    OracleCutoff { len: usize, cutoff: usize },
    #[error("census limited to n <= {cutoff}, got {n}")]
    CensusCutoff { n: usize, cutoff: usize },
    #[error("closed formula needs an increasing word or an M1 P1 M2 shape, got {0}")]
    IneligibleShape(String),
    #[error("index ({n}, {i}) outside the {table} triangle")]
    IndexOutOfRange { table: &'static str, n: usize, i: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("family is undefined at n = 1: |q^-1(13425)| = 5, not 3")]
    FamilyException,
    #[error("singular linear system while fitting Catalan coefficients (m2 = {m2}, p1 = {p1})")]
    SingularSystem { m2: usize, p1: usize },
    #[error("non-integral Catalan coefficient {value} (m2 = {m2}, p1 = {p1})")]
    NonIntegral { m2: usize, p1: usize, value: String },
    #[error("Catalan coefficients fail to reproduce the count at m1 = {m1} (m2 = {m2}, p1 = {p1})")]
    ReconstructionMismatch { m2: usize, p1: usize, m1: usize },
    #[error("omega({m2}, {t}) is not a polynomial of degree <= {degree}: extra point p1 = {p1} disagrees")]
    DegreeMismatch { m2: usize, t: usize, degree: usize, p1: usize },
    #[error("unknown verification suite {0:?}")]
    UnknownSuite(String),
}

pub type Result<T> = std::result::Result<T, Error>;
