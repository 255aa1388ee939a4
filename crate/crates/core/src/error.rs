use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Domain errors for ordinal computations. These all mark inputs outside an
/// operation's domain, not internal failures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero has no Cantor normal form exponent")]
    ExponentOfZero,
    #[error("position {position} is out of range for a sequence of length {length}")]
    PositionOutOfRange { position: String, length: String },
    #[error("invalid step set: {0}")]
    InvalidStepSet(String),
    #[error("enumeration over {0} choice points exceeds the supported bound")]
    BoundExceeded(usize),
    #[error("arrangement does not realize the multiset: {0}")]
    ArrangementMismatch(String),
    #[error("multiset has an uncountable multiplicity; exact sum not supported")]
    UncountableMultiplicity,
    #[error("sequence shape not supported here: {0}")]
    UnsupportedShape(String),
    #[error("grouping is not a partition of the prefix: {0}")]
    MalformedGrouping(String),
    #[error("permutation moves a position across a component boundary")]
    PermutationEscapesComponent,
}
