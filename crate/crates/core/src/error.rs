use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("operation requires dimension {required}, algebra has dimension {found}")]
    UnsupportedDimension { required: usize, found: usize },
    #[error("law is not associative (first nonzero residual at {0:?})")]
    NotAssociative([usize; 4]),
    #[error("law is not symmetric")]
    NotSymmetric,
    #[error("law is not alternating")]
    NotAlternating,
    #[error("law is not a Jordan algebra law")]
    NotJordan,
    #[error("linear map is singular")]
    SingularMap,
    #[error("family is singular for every value of the parameter")]
    IdenticallySingular,
    #[error("limit does not exist: pole at t = 0")]
    PoleAtZero,
    #[error("rational function with zero denominator")]
    ZeroDenominator,
    #[error("fingerprint matches no isomorphism class: {0}")]
    UnclassifiableFingerprint(String),
    #[error("perturbation directions are linearly dependent")]
    DependentDirections,
    #[error("polynomial system has infinitely many solutions")]
    InfiniteSolutionSet,
    #[error("polynomial system has irrational solutions")]
    IrrationalSolutions,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
