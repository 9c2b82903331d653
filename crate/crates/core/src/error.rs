use thiserror::Error;

/// Errors raised by the algebra, link and decision routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("not divisible")]
    NotDivisible,
    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeros,
    #[error("zero input is not allowed here")]
    ZeroInput,
    #[error("specialization value must be +1 or -1, got {0}")]
    BadSpecialization(i64),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("period p must be at least 2, got {0}")]
    InvalidPeriod(i64),
    #[error("period mismatch: {0} vs {1}")]
    PeriodMismatch(usize, usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("braid letter {letter} out of range for {strands} strands")]
    LetterOutOfRange { letter: i64, strands: usize },
    #[error("closure has {0} components, expected 2")]
    ComponentCount(usize),
    #[error("unknown generator index {0}")]
    UnknownGenerator(usize),
    #[error("relator {0} does not abelianize to the identity")]
    InconsistentAbelianization(usize),
    #[error("presentation needs a generator abelianizing to x^(+-1) and one to y^(+-1)")]
    MissingMeridian,
    #[error("presentation shape mismatch: {relators} relators for {generators} generators")]
    Shape { relators: usize, generators: usize },
    #[error("relator index {0} out of range")]
    BadDropIndex(usize),
    #[error("linking number 0: Torres check not applicable")]
    ZeroLinking,
    #[error("cyclotomic index {0} out of range 1..=1000")]
    CyclotomicRange(u64),
    #[error("degree {degree} exceeds bound {bound}")]
    DegreeBound { degree: usize, bound: usize },
    #[error("a(g,1) must equal 1, but the augmentation is {0}")]
    Augmentation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
