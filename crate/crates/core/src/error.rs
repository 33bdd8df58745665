use thiserror::Error;

/// Everything that can go wrong between reading a fan and producing a report.
///
/// Invalid input is always reported through one of these variants; the
/// pipeline never returns a number it could not justify.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    MalformedInput(String),

    #[error("maximal cone {index} is not smooth (|det| = {det})")]
    NonSmoothCone { index: usize, det: String },

    #[error("fan is not complete: facet {facet:?} lies in {count} maximal cone(s)")]
    IncompleteFan { facet: Vec<usize>, count: usize },

    #[error("maximal cones {first} and {second} overlap")]
    OverlappingCones { first: usize, second: usize },

    #[error("divisor map has rank {rank} < {dim}; the fan has a torus factor")]
    RankDeficient { rank: usize, dim: usize },

    #[error("Chow group has torsion {0:?}")]
    TorsionFound(Vec<String>),

    #[error("linear relations cannot be solved on cone {0}")]
    EliminationSingular(usize),

    #[error("top-degree part of the quotient ring has rank {0}, expected 1")]
    DegenerateTopDegree(usize),

    #[error("{what} is not an integer: {value}")]
    NonIntegralResult { what: &'static str, value: String },

    #[error("{what} = {value} is not divisible by {divisor}")]
    DivisibilityViolation {
        what: &'static str,
        value: String,
        divisor: u32,
    },

    #[error("negative Hodge number {name} = {value}")]
    NegativeHodgeNumber { name: &'static str, value: i64 },

    #[error("48 does not divide 3*tau - chi = {0}")]
    AhatNotIntegral(i64),

    #[error("inconsistent invariants: {0}")]
    Inconsistent(String),

    #[error("pipeline requires a fourfold, got dimension {0}")]
    UnsupportedDimension(usize),

    #[error("elimination cone index {index} out of range ({count} maximal cones)")]
    ConeIndexOutOfRange { index: usize, count: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
