use std::fmt;

/// Errors raised by semigroup and algebra operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// A semigroup needs at least one generator.
    EmptyGenerators,
    /// Generators must be strictly positive rationals.
    NonPositiveGenerator,
    /// The exponent is not a member of the semigroup it was required to lie in.
    NotAMember,
    /// The operation needs a nonzero exponent.
    ZeroExponent,
    /// The coefficient ring is not contained in the extension.
    NotASubring,
    /// The conductor of a non-equi-gcd algebra is the zero ideal.
    ZeroConductor,
    /// The requested set is infinite because the algebra is not equi-gcd.
    InfiniteSet,
    /// The operation is undefined for the trivial algebra R'/R with R = R'.
    TrivialAlgebra,
    /// The algebra does not have exactly one Frobenius monomial.
    MultipleFrobenius,
    /// The given exponent is not a Frobenius monomial of the algebra.
    NotFrobenius,
    /// The gap set exceeds the enumeration limit.
    TooManyGaps { gaps: usize, limit: usize },
    /// The cover parameter h (or n) violates the construction constraints.
    BadH(String),
    /// The algebra must be equi-gcd for this construction.
    NotEquiGcd,
    /// Numerical duplication requires the half exponent to lie outside the ring.
    HalfAlreadyPresent,
    /// A semigroup literal or exponent failed to parse.
    Parse(String),
}

impl Error {
    /// Stable machine-readable code, used by the CLI on standard error.
    pub fn code(&self) -> &'static str {
        match self {
            Error::EmptyGenerators => "EMPTY_GENERATORS",
            Error::NonPositiveGenerator => "NON_POSITIVE_GENERATOR",
            Error::NotAMember => "NOT_A_MEMBER",
            Error::ZeroExponent => "ZERO_EXPONENT",
            Error::NotASubring => "NOT_A_SUBRING",
            Error::ZeroConductor => "ZERO_CONDUCTOR",
            Error::InfiniteSet => "INFINITE_SET",
            Error::TrivialAlgebra => "TRIVIAL_ALGEBRA",
            Error::MultipleFrobenius => "MULTIPLE_FROBENIUS",
            Error::NotFrobenius => "NOT_FROBENIUS",
            Error::TooManyGaps { .. } => "TOO_MANY_GAPS",
            Error::BadH(_) => "BAD_H",
            Error::NotEquiGcd => "NOT_EQUI_GCD",
            Error::HalfAlreadyPresent => "HALF_ALREADY_PRESENT",
            Error::Parse(_) => "PARSE",
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyGenerators => write!(f, "generator list is empty"),
            Error::NonPositiveGenerator => write!(f, "generators must be positive"),
            Error::NotAMember => write!(f, "exponent is not a member of the semigroup"),
            Error::ZeroExponent => write!(f, "exponent must be nonzero"),
            Error::NotASubring => write!(f, "coefficient ring is not contained in the extension"),
            Error::ZeroConductor => {
                write!(f, "conductor is zero: the algebra is not equi-gcd")
            }
            Error::InfiniteSet => {
                write!(f, "set is infinite: the algebra is not equi-gcd")
            }
            Error::TrivialAlgebra => write!(f, "operation undefined for the trivial algebra"),
            Error::MultipleFrobenius => {
                write!(f, "algebra does not have a single Frobenius monomial")
            }
            Error::NotFrobenius => write!(f, "exponent is not a Frobenius monomial"),
            Error::TooManyGaps { gaps, limit } => {
                write!(
                    f,
                    "gap set has {gaps} elements, enumeration limit is {limit}"
                )
            }
            Error::BadH(reason) => write!(f, "invalid cover parameter: {reason}"),
            Error::NotEquiGcd => write!(f, "algebra must be equi-gcd"),
            Error::HalfAlreadyPresent => {
                write!(f, "half of the anchor exponent already lies in the ring")
            }
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
