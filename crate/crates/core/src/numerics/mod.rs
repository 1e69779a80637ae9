//! Special functions, quadrature, contour differentiation and a Hermitian eigensolver.

pub mod cauchy;
pub mod eigh;
pub mod quadrature;
pub mod special;

pub use cauchy::{cauchy_derivative, cauchy_derivatives, default_radius, Domain};
pub use eigh::{eigh, EigenDecomposition, HermitianMatrix};
pub use quadrature::{integrate, HermiteRule, QuadratureRule, RuleKind, DEFAULT_NODES};
pub use special::{
    binomial, factorial, gamma, gauss_2f1, hermite_function, hermite_functions, hermite_poly, hermite_poly_at,
    laguerre_poly, laguerre_poly_at, ln_gamma, normalized_hermite_polys, Scalar,
};

/// Complex scalar used throughout the crate.
pub use num_complex::Complex64 as Complex;
