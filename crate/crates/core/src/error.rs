use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivByZero,
    #[error("numerator is not a polynomial multiple of the denominator")]
    NotDivisible,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("series divisor must have constant term 1")]
    NonUnitConstantTerm,
    #[error("coefficient of z^{index} is not a polynomial")]
    DenominatorResidue { index: usize },
    #[error("substitution for q must be a power of q")]
    UnsupportedSubstitution,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HankelError {
    #[error("need {needed} terms of the sequence, have {available}")]
    InsufficientMoments { needed: usize, available: usize },
    #[error("no closed form for this family at shift {shift}")]
    UnsupportedCombination { shift: usize },
    #[error("need {needed} continued-fraction coefficients, have {available}")]
    InsufficientCoefficients { needed: usize, available: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JFractionError {
    #[error("continued fraction has {available} levels, {needed} required")]
    InsufficientDepth { needed: usize, available: usize },
    #[error("need {needed} moments, have {available}")]
    InsufficientMoments { needed: usize, available: usize },
    #[error("coefficient at level {level} leaves the polynomial ring")]
    NotDivisible { level: usize },
    #[error("F(p_{level}^2) vanishes; no J-fraction of this depth")]
    Breakdown { level: usize },
    #[error(transparent)]
    Series(#[from] SeriesError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("unknown check `{name}`")]
    UnknownCheck { name: alloc::string::String },
    #[error("depth must be at least 1")]
    ZeroDepth,
}
