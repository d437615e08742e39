use thiserror::Error;

use crate::geometry::Side;
use crate::rational::Rational;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("classes live on different surfaces ({left} vs {right})")]
    MixedSides { left: Side, right: Side },

    #[error("expected a class on {expected}, got one on {found}")]
    WrongSide { expected: Side, found: Side },

    #[error("curve class {0} is not an effective class of positive fibre degree")]
    NotEffectiveCurve(String),

    #[error("cover degree must be at least 1, got {0}")]
    InvalidCoverDegree(u32),

    #[error("{gate}: fibre degree must be 0, got {degree}")]
    NonzeroFibreDegree { degree: Rational, gate: &'static str },

    #[error("rank must be positive, got {0}")]
    NonPositiveRank(Rational),

    #[error("rank must be an integer here, got {0}")]
    NonIntegralRank(Rational),

    #[error("Hilbert polynomial leading coefficient must be positive, got {0}")]
    NonPositiveLeading(Rational),

    #[error("polarization coefficients must be positive, got a={a}, b={b}")]
    NonPositivePolarization { a: Rational, b: Rational },

    #[error("subsheaf rank {n_prime} must satisfy 1 <= n' < n = {n}")]
    RankViolation { n: Rational, n_prime: u32 },

    #[error("candidate box is inverted: {0}")]
    InvertedBox(String),

    #[error("invalid S-equivalence class: {0}")]
    InvalidSEquivalence(String),
}
