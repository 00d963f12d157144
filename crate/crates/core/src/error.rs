//! Error type shared by the engine modules.

use alloc::string::String;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoreError {
    /// Requested family/parameters outside the built-in range.
    UnsupportedAlgebra(String),
    /// The positivity functional vanishes on a nonzero weight.
    AmbiguousPositivity(String),
    /// Operation not available for this algebra/automorphism/field.
    Unsupported(String),
    /// Elements over different coefficient fields were mixed.
    FieldMismatch,
    /// The generator ordering does not isolate the requested block.
    OrderingMismatch(String),
    /// The k/a/n data do not form an Iwasawa decomposition of the host.
    NoIwasawa(String),
    /// A projected image is not divisible by the top odd monomial.
    NotGhostImage,
    /// The semi-invariant solution space does not have dimension one.
    GhostDimensionError(usize),
    /// An element failed its `ad_phi`-invariance certificate.
    InvarianceError(String),
    /// A linear solve had no solution within the requested degree budget.
    BudgetExceeded(String),
    /// The Harish-Chandra projection was not injective where theory says it is.
    InjectivityViolation,
    /// Vandermonde reconstruction failed; carries a printout of the residual.
    DecompositionMismatch(String),
    /// The candidate central element does not commute with every generator.
    CentralityError(String),
    /// A coefficient family has a pole at the evaluation point.
    NormalizationError(String),
    /// The weight is not dominant integral for the even part.
    NotDominant(String),
    /// A module-side check contradicts an engine-side prediction.
    OracleViolation(String),
    /// Target polynomial outside the admissible image space.
    Membership(String),
    /// Division by zero or an incompatible scalar operation.
    Scalar(String),
    /// Expression parse error with byte position and expectation.
    Parse { pos: usize, message: String },
}

impl fmt::Display for CoreError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoreError::UnsupportedAlgebra(s) => write!(f, "unsupported algebra: {s}"),
            CoreError::AmbiguousPositivity(s) => write!(f, "ambiguous positivity: {s}"),
            CoreError::Unsupported(s) => write!(f, "unsupported: {s}"),
            CoreError::FieldMismatch => write!(f, "coefficient field mismatch"),
            CoreError::OrderingMismatch(s) => write!(f, "ordering mismatch: {s}"),
            CoreError::NoIwasawa(s) => write!(f, "not an Iwasawa decomposition: {s}"),
            CoreError::NotGhostImage => write!(f, "image is not divisible by the top odd monomial"),
            CoreError::GhostDimensionError(d) => {
                write!(f, "semi-invariant space has dimension {d}, expected 1")
            }
            CoreError::InvarianceError(s) => write!(f, "invariance certificate failed: {s}"),
            CoreError::BudgetExceeded(s) => write!(f, "no solution within budget: {s}"),
            CoreError::InjectivityViolation => write!(f, "Harish-Chandra projection not injective"),
            CoreError::DecompositionMismatch(s) => {
                write!(f, "decomposition does not reconstruct; residual = {s}")
            }
            CoreError::CentralityError(s) => write!(f, "centrality check failed: {s}"),
            CoreError::NormalizationError(s) => write!(f, "normalization error: {s}"),
            CoreError::NotDominant(s) => write!(f, "weight not dominant: {s}"),
            CoreError::OracleViolation(s) => write!(f, "oracle violation: {s}"),
            CoreError::Membership(s) => write!(f, "membership violation: {s}"),
            CoreError::Scalar(s) => write!(f, "scalar error: {s}"),
            CoreError::Parse { pos, message } => write!(f, "parse error at {pos}: {message}"),
        }
    }
}
