//! Coherent states attached to Landau levels in the plane and in the
//! hyperbolic upper half-plane.
//!
//! * [`numerics`]: special functions, Gaussian quadrature, contour derivatives, Hermitian eigensolver.
//! * [`euclidean`]: planar Landau levels, the coherent-state transform and polyanalytic Bargmann transforms.
//! * [`gabor`]: lattices, time-frequency shifts and finite sections of Gabor frame operators.
//! * [`hyperbolic`]: hyperbolic Landau levels, the affine coherent-state transform, Bergman transforms, Laguerre wavelets.
//! * [`fuchsian`]: Moebius action, modular-group orbits, signatures, q-expansions, covolume bounds and the incompleteness witness.

// `!(x > 0.0)` is used deliberately so NaN is rejected along with non-positive values.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod euclidean;
pub mod fuchsian;
pub mod gabor;
pub mod hyperbolic;
pub mod numerics;

pub use error::{Error, Result};
pub use numerics::Complex;
