use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("denominator vanishes at X = 0; no power series expansion")]
    NotExpandable,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SegmentError {
    #[error("torsion d = {d} does not divide degree r = {r}")]
    TorsionDoesNotDivide { r: u32, d: u32 },
    #[error("degree and torsion must be positive")]
    NonPositive,
    #[error("segment end {b} minus start {a} is not a nonnegative integer")]
    BadSegment { a: String, b: String },
    #[error("length must be at least 1")]
    EmptyLength,
    #[error("operation not supported for {0}")]
    UnsupportedKind(String),
    #[error("derivative level {got} is not supported (only {expected})")]
    UnsupportedLevel { got: u32, expected: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LFactorError {
    #[error("need l >= k >= 1, got l = {l}, k = {k}")]
    BadSizes { l: u32, k: u32 },
    #[error("left side must be a Steinberg representation")]
    LeftNotSteinberg,
    #[error("right side must be St_k, Sigma_k or Sp_k")]
    BadRightKind,
    #[error("degrees of the two cuspidal data differ ({0} vs {1})")]
    DegreeMismatch(u32, u32),
    #[error("repeated pole; only simple poles are supported")]
    RepeatedPole,
    #[error("the L-factor is 1 and has no poles to decompose")]
    NoPoles,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Segment(#[from] SegmentError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WhittakerError {
    #[error("cocharacter {0:?} is not dominant")]
    NotDominant(Vec<i64>),
    #[error("cocharacter has length {got}, expected {expected}")]
    LengthMismatch { got: usize, expected: usize },
    #[error("Satake parameter list is empty or contains zero")]
    BadParameters,
    #[error("essential vector needs l >= 2, got {0}")]
    EssentialTooSmall(u32),
    #[error("Satake parameters are not pairwise distinct; the bialternant is undefined")]
    DegenerateAlternant,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IntegralError {
    #[error("need n >= m >= 1, got n = {n}, m = {m}")]
    BadSizes { n: usize, m: usize },
    #[error("function on G_{expected} was given for G_{got}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("a Schwartz function is required exactly when n = m")]
    SchwartzMismatch,
    #[error("Schwartz shape needs f >= 1")]
    BadConductor,
    #[error("this operation requires {0}")]
    WrongFamily(&'static str),
    #[error(transparent)]
    Whittaker(#[from] WhittakerError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    LFactor(#[from] LFactorError),
}
