use thiserror::Error;

/// Errors raised by the counting, symbolic and verification routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("quadratic extension elements have different discriminants")]
    MismatchedDiscriminant,
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("letter {letter} is outside the alphabet 1..={k}")]
    LetterOutOfRange { letter: u32, k: u32 },
    #[error("instance too large: {0}")]
    InstanceTooLarge(String),
    #[error("modulus must be positive")]
    ZeroModulus,
    #[error("invalid suffix state: {0}")]
    InvalidState(String),
    #[error("rational function has a pole at the origin")]
    PoleAtOrigin,
    #[error("need at least {needed} series terms, got {got}")]
    InsufficientTerms { needed: usize, got: usize },
    #[error("no rational function with numerator and denominator degree <= {0} fits the series")]
    NoFit(usize),
    #[error("assembled denominator vanishes identically")]
    DenominatorVanishes,
    #[error("radical part of a supposedly rational result is nonzero")]
    NonzeroRadicalPart,
    #[error("the kernel system requires L >= 2, got L = {0}")]
    UnsupportedL(u32),
    #[error("linear system is singular")]
    SingularSystem,
    #[error("limit t -> 1 does not cancel")]
    LimitDoesNotCancel,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
