use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Domain errors. [`Error::code`] gives the stable machine-readable name used
/// by the command-line tool.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid alpha sequence: {0}")]
    InvalidAlphaSequence(String),
    #[error("invalid expansion: {0}")]
    InvalidExpansion(String),
    #[error("invalid alpha-triple: {0}")]
    InvalidTriple(String),
    #[error("invalid Jacobi triple: {0}")]
    InvalidJacobiTriple(String),
    #[error("invalid divisor: {0}")]
    InvalidDivisor(String),
    #[error("expansion does not define a valid triple: {0}")]
    DegenerateExpansion(String),
    #[error("polynomial is not monic of degree {expected}")]
    NotMonic { expected: usize },
    #[error("R - 𝔄 is not the square of a polynomial of degree <= g")]
    NotAdmissible,
    #[error("T² + 𝔄 differs from B² - AC")]
    TraceMismatch,
    #[error("factorization is degenerate at step {step}: no finite quotient exists")]
    FactorizationDegenerate { step: usize },
    #[error("factorization residue is not unipotent: {0}")]
    ResidueNotUnipotent(String),
    #[error("not pure: {0}")]
    NotPure(String),
    #[error("B(α_N) = 0: pure expansion is not unique on this locus")]
    NonGenericPure,
    #[error("A(λ₀) = 0 at λ₀ = {0}")]
    PoleAtLambda(String),
    #[error("zero pivot b_{k} for sigma:{k}{}", step.map(|s| format!(" at word position {s}")).unwrap_or_default())]
    ZeroPivot { k: usize, step: Option<usize> },
    #[error("sigma:{k} is out of range for period {n}")]
    GeneratorOutOfRange { k: usize, n: usize },
    #[error("point ({lambda}, {mu}) is not on the curve")]
    PointOffCurve { lambda: String, mu: String },
    #[error("repeated abscissa λ = {0}")]
    RepeatedAbscissa(String),
    #[error("divisor contains a pair of conjugate points over λ = {0}")]
    SpecialDivisor(String),
    #[error("U does not split into rational linear factors")]
    IrrationalSupport,
    #[error("R(α_N) = {0} is not a rational square")]
    IrrationalBeta(String),
    #[error("α_N is a root of R")]
    RootOfR,
    #[error("unknown example {0:?}")]
    UnknownExample(String),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvalidAlphaSequence(_) => "InvalidAlphaSequence",
            Error::InvalidExpansion(_) => "InvalidExpansion",
            Error::InvalidTriple(_) => "InvalidTriple",
            Error::InvalidJacobiTriple(_) => "InvalidJacobiTriple",
            Error::InvalidDivisor(_) => "InvalidDivisor",
            Error::DegenerateExpansion(_) => "DegenerateExpansion",
            Error::NotMonic { .. } => "NotMonic",
            Error::NotAdmissible => "NotAdmissible",
            Error::TraceMismatch => "TraceMismatch",
            Error::FactorizationDegenerate { .. } => "FactorizationDegenerate",
            Error::ResidueNotUnipotent(_) => "ResidueNotUnipotent",
            Error::NotPure(_) => "NotPure",
            Error::NonGenericPure => "NonGenericPure",
            Error::PoleAtLambda(_) => "PoleAtLambda",
            Error::ZeroPivot { .. } => "ZeroPivot",
            Error::GeneratorOutOfRange { .. } => "GeneratorOutOfRange",
            Error::PointOffCurve { .. } => "PointOffCurve",
            Error::RepeatedAbscissa(_) => "RepeatedAbscissa",
            Error::SpecialDivisor(_) => "SpecialDivisor",
            Error::IrrationalSupport => "IrrationalSupport",
            Error::IrrationalBeta(_) => "IrrationalBeta",
            Error::RootOfR => "RootOfR",
            Error::UnknownExample(_) => "UnknownExample",
        }
    }
}
