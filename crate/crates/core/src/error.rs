use thiserror::Error;

/// Every failure the library can report.
///
/// Each variant maps to a stable upper-case token (see [`Error::token`]) which the
/// command-line front end prints so that scripts can match on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZeroPoly,
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("polynomials in different variables ({0} and {1})")]
    VariableMismatch(char, char),
    #[error("divisor does not divide the dividend exactly")]
    NotAFactor,
    #[error("interpolation node {0} appears twice")]
    DuplicateNode(String),
    #[error("interpolation needs {needed} nodes on the {axis} axis, got {got}")]
    InsufficientNodes { axis: char, needed: usize, got: usize },
    #[error("rational function with zero denominator")]
    ZeroDenominator,

    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },
    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("matrix entries have mismatched scalar kinds")]
    ScalarKindMismatch,
    #[error("matrix is singular")]
    Singular,
    #[error("characteristic polynomial does not split over the rationals")]
    IrrationalSpectrum,
    #[error("matrix is not diagonalizable")]
    NotDiagonalizable,

    #[error("matrix is not alternating")]
    NotAlternating,
    #[error("matrix has odd size {0}")]
    OddSize(usize),
    #[error("entry degree exceeds the supplied bound")]
    DegreeBoundExceeded,

    #[error("bilinear form is degenerate")]
    DegenerateForm,
    #[error("vectors do not form a symplectic basis")]
    NotSymplecticBasis,
    #[error("subspace is not Lagrangian")]
    NotLagrangian,
    #[error("Lagrangian subspaces intersect nontrivially")]
    NotTransverse,
    #[error("endomorphism is not self-adjoint for the symplectic form")]
    NotSelfAdjoint,
    #[error("endomorphism does not commute with its symplectic adjoint")]
    NotSymplecticallyNormal,

    #[error("not a symplectic characteristic polynomial: {0}")]
    InvalidScp(String),
    #[error("the spectrum does not split over the rationals")]
    NonSplitSpectrum,
    #[error("polynomial is not a product of pair factors (l-s)(m-s)-t")]
    FactorizationFailed,
    #[error("the declared relation between M and its adjoint does not hold")]
    RelationNotSatisfied,

    #[error("endomorphisms do not commute")]
    NotCommuting,
    #[error("dimension {dim} exceeds the rational-function guardrail {limit}")]
    RatfunDimensionExceeded { dim: usize, limit: usize },

    #[error("endomorphism is not symplectically diagonalizable")]
    NotSymplecticallyDiagonalizable,
    #[error("a pair factor occurs with multiplicity greater than one")]
    RepeatedPairFactor,
    #[error("a pair has equal values")]
    EqualPairValues,

    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

impl Error {
    /// Machine-readable token, stable across releases.
    pub fn token(&self) -> &'static str {
        use Error::*;
        match self {
            DivisionByZeroPoly => "DIVISION_BY_ZERO_POLY",
            BothZero => "BOTH_ZERO",
            ZeroPolynomial => "ZERO_POLYNOMIAL",
            VariableMismatch(..) => "VARIABLE_MISMATCH",
            NotAFactor => "NOT_A_FACTOR",
            DuplicateNode(_) => "DUPLICATE_NODE",
            InsufficientNodes { .. } => "INSUFFICIENT_NODES",
            ZeroDenominator => "ZERO_DENOMINATOR",
            NotSquare { .. } => "NOT_SQUARE",
            SizeMismatch { .. } => "SIZE_MISMATCH",
            ScalarKindMismatch => "SCALAR_KIND_MISMATCH",
            Singular => "SINGULAR",
            IrrationalSpectrum => "IRRATIONAL_SPECTRUM",
            NotDiagonalizable => "NOT_DIAGONALIZABLE",
            NotAlternating => "NOT_ALTERNATING",
            OddSize(_) => "ODD_SIZE",
            DegreeBoundExceeded => "DEGREE_BOUND_EXCEEDED",
            DegenerateForm => "DEGENERATE_FORM",
            NotSymplecticBasis => "NOT_SYMPLECTIC_BASIS",
            NotLagrangian => "NOT_LAGRANGIAN",
            NotTransverse => "NOT_TRANSVERSE",
            NotSelfAdjoint => "NOT_SELF_ADJOINT",
            NotSymplecticallyNormal => "NOT_SYMPLECTICALLY_NORMAL",
            InvalidScp(_) => "INVALID_SCP",
            NonSplitSpectrum => "NON_SPLIT_SPECTRUM",
            FactorizationFailed => "FACTORIZATION_FAILED",
            RelationNotSatisfied => "RELATION_NOT_SATISFIED",
            NotCommuting => "NOT_COMMUTING",
            RatfunDimensionExceeded { .. } => "RATFUN_DIMENSION_EXCEEDED",
            NotSymplecticallyDiagonalizable => "NOT_SYMPLECTICALLY_DIAGONALIZABLE",
            RepeatedPairFactor => "REPEATED_PAIR_FACTOR",
            EqualPairValues => "EQUAL_PAIR_VALUES",
            Parse(_) => "PARSE_ERROR",
            Internal(_) => "INTERNAL",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
