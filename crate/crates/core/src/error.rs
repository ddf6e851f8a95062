use thiserror::Error;

use crate::perm::ParsePermError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("group closure exceeded the cap of {cap} elements")]
    CapExceeded { cap: usize },
    #[error("generator degrees differ: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("group has irrational characters (some x is not conjugate to a coprime power of itself)")]
    NotRationalGroup,
    #[error("element set is not a subgroup")]
    NotASubgroup,
    #[error("permutation {0} is not an element of the group")]
    NotAnElement(String),
    #[error("character lift failed: {0}")]
    LiftFailure(String),
    #[error("character table failed verification: {0}")]
    TableVerification(String),
    #[error("fixed-space dimension is not an integer (irrep {irrep}, cyclic class {class})")]
    NonIntegerFixedDim { irrep: usize, class: usize },
    #[error("fixed-dimension matrix is singular")]
    SingularMatrix,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("linear system is singular")]
    Singular,
    #[error("ramification degree is odd{}", match .quotient { Some(i) => format!(" for quotient by cyclic class {i}"), None => String::new() })]
    OddRamificationDegree { quotient: Option<usize> },
    #[error("genus is negative ({value})")]
    NegativeGenus { value: String },
    #[error("linear solve produced a non-integer dimension for irrep {irrep}: {value}")]
    NonIntegerSolution { irrep: usize, value: String },
    #[error("closed-form dimension for irrep {irrep} is not an integer: {value}")]
    NonIntegerDimension { irrep: usize, value: String },
    #[error("index {index} out of range (0..{len})")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("ramification key {0} is not a nontrivial cyclic class")]
    InvalidRamificationClass(usize),
    #[error("inertia generator {0} is the identity")]
    TrivialInertia(String),
    #[error("unsupported Weyl type {0}; supported are A_n (n >= 1), B_n and C_n (n >= 2), D_n (n >= 4), G2 and F4")]
    UnsupportedType(String),
    #[error("base genus {genus} is out of range: {reason}")]
    InvalidGenus { genus: u64, reason: &'static str },
    #[error("Riemann-Roch regime not reached: {0}")]
    OutOfRegime(String),
    #[error("no valid branch tuple after {attempts} attempts")]
    SamplingExhausted { attempts: usize },
    #[error(transparent)]
    Perm(#[from] ParsePermError),
    #[error("{0}")]
    Spec(String),
}
