use alloc::string::String;
use core::fmt;

use crate::catalog::CycleLabel;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The rotation order must be an odd integer at least 3.
    InvalidP(i64),
    /// A generator or `γ` macro index outside its admissible range.
    IndexOutOfRange { symbol: char, index: u32, max: u32 },
    /// Vectors or matrices of incompatible sizes.
    DimensionMismatch { expected: usize, found: usize },
    /// A matrix that fails `MᵀJM = J`.
    NotSymplectic,
    /// A matrix that is not equal to its transpose.
    NotSymmetric,
    /// A twist word refers to a label the catalog does not contain.
    UnknownLabel(CycleLabel),
    /// A null-homologous (separating) vanishing cycle at the given position.
    SeparatingCycle { position: usize },
    /// `(σ + χ)` is not divisible by 4.
    NonIntegralChiH { signature: i64, euler: i64 },
    /// Parameters `(h, k, i)` outside the involution pattern's domain.
    InvalidInvolutionSpec { h: u32, k: u32, i: u32 },
    /// Text that does not parse as a word or label.
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidP(p) => write!(f, "p must be odd and ≥ 3 (got {p})"),
            Error::IndexOutOfRange { symbol, index, max } => {
                write!(f, "index {symbol}{index} out of range 1..={max}")
            }
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::NotSymplectic => f.write_str("matrix is not symplectic"),
            Error::NotSymmetric => f.write_str("matrix is not symmetric"),
            Error::UnknownLabel(l) => write!(f, "label {l} is not in the catalog"),
            Error::SeparatingCycle { position } => {
                write!(f, "separating vanishing cycle at position {position} is unsupported")
            }
            Error::NonIntegralChiH { signature, euler } => write!(
                f,
                "σ + χ = {} is not divisible by 4 (σ = {signature}, χ = {euler})",
                signature + euler
            ),
            Error::InvalidInvolutionSpec { h, k, i } => {
                write!(f, "invalid involution parameters h={h}, k={k}, i={i}: need h ≥ 1, k even ≥ 2, i ≤ h")
            }
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
