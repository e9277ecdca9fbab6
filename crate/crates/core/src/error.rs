use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension must be odd ≥ 3 (got {0})")]
    InvalidDimension(i64),

    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("summation did not converge within {limit} terms")]
    NonConvergence { limit: usize },

    #[error("degenerate fit: {0}")]
    DegenerateFit(String),

    #[error("torsion element is not selfadjoint: relation fails at (alpha, beta, gamma) = ({alpha}, {beta}, {gamma})")]
    NotSelfAdjoint { alpha: i32, beta: u32, gamma: u32 },

    #[error("duplicate monomial a^{alpha} b^{beta} (b*)^{gamma} in torsion input")]
    DuplicateMonomial { alpha: i32, beta: u32, gamma: u32 },

    #[error("malformed torsion input: {0}")]
    MalformedTorsion(String),

    #[error("polynomial mismatch in {what}: expected `{expected}`, computed `{computed}`")]
    PolynomialMismatch {
        what: String,
        expected: String,
        computed: String,
    },
}

impl Error {
    pub(crate) fn param(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name,
            reason: reason.into(),
        }
    }
}
