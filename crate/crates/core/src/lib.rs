//! Exact symbolic engine for the spin-extended so(d+1,1) algebra of the
//! d-dimensional spin-1/2 matrix Hamiltonian `H = p^2/2 + alpha (gamma.x)/r^2`.
//!
//! Operators live in the Weyl algebra in `x_i`, `p_i` tensored with the
//! Clifford algebra `Cl_d`, localized at `r^2`. Every element has a unique
//! normal form, so an operator identity holds exactly when the normal form of
//! its residual is empty.
//!
//! * [`coeff`] exact scalars and polynomials in `alpha`, `E`
//! * [`clifford`] Clifford words, gamma/spin matrices, fixture text format
//! * [`weyl`] normal forms and arithmetic of [`weyl::OperatorExpr`]
//! * [`expr`] expression language: AST, parser, formatter, evaluator
//! * [`ops`] named operators (`H`, `K`, `J_ij`, `A_i`, LRL vector, ...)
//! * [`oracle`] independent check by applying operators to test functions
//! * [`verify`] registry of identities and residual computation

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod clifford;
pub mod coeff;
pub mod expr;
pub mod oracle;
pub mod ops;
pub mod verify;
pub mod weyl;

use alloc::string::String;

pub use coeff::{GaussianRational, ParamPoly, Rational};
pub use weyl::{Dim, OperatorExpr};

/// Largest dimension supported by the operator engine.
pub const MAX_DIM: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("index {index} out of range 1..{d}")]
    IndexOutOfRange { index: usize, d: usize },
    #[error("dimension {d} out of range 2..{max}")]
    DimensionOutOfRange { d: usize, max: usize },
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("word indices must be strictly increasing")]
    NotReduced,
    #[error("gamma matrices for d={d} violate the Clifford relation")]
    CliffordViolation { d: usize },
    #[error("{name} is only defined for d={required}, not d={d}")]
    WrongDimension { name: String, required: usize, d: usize },
    #[error("fixture line {line}: {message}")]
    Fixture { line: usize, message: String },
    #[error("{0}")]
    Parse(expr::ParseError),
    #[error("unknown check {0}")]
    UnknownCheck(String),
    #[error("check {id} does not apply at d={d}")]
    InapplicableDimension { id: String, d: usize },
    #[error("pseudoscalar reduction needs odd d with a scalar pseudoscalar, got d={0}")]
    NoPseudoscalar(usize),
}

impl From<expr::ParseError> for Error {
    fn from(e: expr::ParseError) -> Self {
        Error::Parse(e)
    }
}
