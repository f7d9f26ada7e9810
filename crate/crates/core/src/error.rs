use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("form is not homogeneous of degree {expected}: found a term of degree {found}")]
    NonHomogeneous { expected: usize, found: usize },

    #[error("coefficient {0} is not representable in the field")]
    NotRepresentable(String),

    #[error("modulus {0} is not prime")]
    NotPrime(u64),

    #[error("characteristic {characteristic} is not admissible for {context}")]
    InadmissibleCharacteristic {
        characteristic: u64,
        context: &'static str,
    },

    #[error("operands live over different fields")]
    FieldMismatch,

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("expected degree {expected}, found {found}")]
    WrongDegree { expected: usize, found: usize },

    #[error("the zero form has no {0}")]
    ZeroForm(&'static str),

    #[error("(0, 0) is not a point of the projective line")]
    ZeroPoint,

    #[error("expected {expected} roots, found {found}")]
    WrongRootCount { expected: usize, found: usize },

    #[error("{0} vanishes, so the absolute invariants are undefined")]
    VanishingDenominator(&'static str),

    #[error("exponents ({a}, {b}, {c}, {d}) violate the weight condition {condition}")]
    WeightCondition {
        a: u32,
        b: u32,
        c: u32,
        d: u32,
        condition: &'static str,
    },

    #[error("configuration has coincident points")]
    CoincidentPoints,

    #[error("invalid six-point coordinates: {0}")]
    InvalidTuple(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("the two 3-sets are not disjoint")]
    NotDisjoint,

    #[error("scale factor must be nonzero")]
    ZeroScale,

    #[error("prime {0} is too large for an exhaustive search (limit 13)")]
    PrimeTooLarge(u64),

    #[error("exhaustive search needs a prime field")]
    NeedsPrimeField,

    #[error("invariant table error: {0}")]
    Table(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Stable machine-readable identifier, used by the CLI error documents.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Syntax { .. } => "syntax",
            Error::NonHomogeneous { .. } => "non_homogeneous",
            Error::NotRepresentable(_) => "not_representable",
            Error::NotPrime(_) => "not_prime",
            Error::InadmissibleCharacteristic { .. } => "inadmissible_characteristic",
            Error::FieldMismatch => "field_mismatch",
            Error::SingularMatrix => "singular_matrix",
            Error::WrongDegree { .. } => "wrong_degree",
            Error::ZeroForm(_) => "zero_form",
            Error::ZeroPoint => "zero_point",
            Error::WrongRootCount { .. } => "wrong_root_count",
            Error::VanishingDenominator(_) => "vanishing_denominator",
            Error::WeightCondition { .. } => "weight_condition",
            Error::CoincidentPoints => "coincident_points",
            Error::InvalidTuple(_) => "invalid_tuple",
            Error::InvalidPermutation(_) => "invalid_permutation",
            Error::NotDisjoint => "not_disjoint",
            Error::ZeroScale => "zero_scale",
            Error::PrimeTooLarge(_) => "prime_too_large",
            Error::NeedsPrimeField => "needs_prime_field",
            Error::Table(_) => "tables",
            Error::Io(_) => "io",
        }
    }
}
