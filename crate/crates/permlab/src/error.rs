//! Error type shared by every module of the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong when constructing or transforming
/// colored permutations, orders, and polynomials.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("length mismatch: {values} values vs {colors} colors")]
    LengthMismatch { values: usize, colors: usize },

    #[error("values are not a permutation of 1..={n}")]
    NotAPermutation { n: usize },

    #[error("color {color} is outside the color set of {scheme}")]
    ColorOutOfRange { color: i32, scheme: String },

    #[error("letter {letter} is not in the alphabet")]
    LetterOutsideAlphabet { letter: String },

    #[error("order alphabet does not match the permutation's group")]
    AlphabetMismatch,

    #[error("ranking must list every alphabet letter exactly once")]
    InvalidRanking,

    #[error("{op} requires an unsigned color scheme")]
    RequiresUnsigned { op: &'static str },

    #[error("{op} requires a signed color scheme")]
    RequiresSigned { op: &'static str },

    #[error("statistic {stat} is not defined on {scheme}")]
    StatNotApplicable { stat: String, scheme: String },

    #[error("statistic {stat} needs a linear order")]
    MissingOrder { stat: String },

    #[error("group of {size} elements exceeds the enumeration cap of {cap}")]
    GroupTooLarge { size: u128, cap: u128 },

    #[error("cycle entries do not partition 1..={n}")]
    InvalidCycles { n: usize },

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("polynomial is not palindromic about center {m}/2")]
    NotPalindromic { m: usize },

    #[error("center parameter {m} is below the polynomial degree {degree}")]
    CenterBelowDegree { m: usize, degree: usize },

    #[error("the zero polynomial has no root-location certificate")]
    ZeroPolynomial,

    #[error("unknown check id: {0}")]
    UnknownCheck(String),
}
