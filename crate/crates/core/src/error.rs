use thiserror::Error;

/// Errors raised by the computational routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("integrand is not finite at node {index} (t = {node})")]
    NonFiniteIntegrand { index: usize, node: f64 },

    #[error("contour of radius {radius} around {center} leaves the domain of the function")]
    ContourOutsideDomain { center: String, radius: f64 },

    #[error("matrix is not Hermitian: entries ({row},{col}) differ by {deviation:e}")]
    NotHermitian { row: usize, col: usize, deviation: f64 },

    #[error("Jacobi iteration did not converge after {sweeps} sweeps")]
    NoConvergence { sweeps: usize },

    #[error("series does not terminate and |x| = {x} is outside the disc of convergence")]
    DivergentSeries { x: f64 },

    #[error("no bound states: 2B = {two_b} must exceed 1")]
    NoBoundStates { two_b: f64 },

    #[error("invalid signature: {0}")]
    InvalidSignature(String),

    #[error("q-series truncation error bound {bound:e} exceeds tolerance {tol:e}; need about {required} terms")]
    TruncationTooShort { bound: f64, tol: f64, required: usize },

    #[error("form does not vanish at the prescribed point: |F| = {value:e} (tolerance {tol:e})")]
    FormDoesNotVanish { value: f64, tol: f64 },

    #[error("no witness exists in this regime: 2*m0 = {two_m0} >= (B-n)/(1+n) = {ratio}; the covolume bound is satisfied")]
    WitnessRegime { two_m0: f64, ratio: f64 },

    #[error("derivative estimates disagree at order {order}: {under_integral} vs {contour} (relative {relative:e})")]
    DerivativeMismatch {
        order: usize,
        under_integral: String,
        contour: String,
        relative: f64,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(name: &'static str, reason: impl Into<String>) -> Error {
    Error::InvalidParameter {
        name,
        reason: reason.into(),
    }
}
