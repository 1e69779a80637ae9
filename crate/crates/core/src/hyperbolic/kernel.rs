//! Reproducing kernels of the hyperbolic Landau eigenspaces.
//!
//! The general-level formula is evaluated with every level symbol read as
//! `n` and principal branches for all complex powers. Only the ground-level
//! reduction and Hermitian symmetry are relied on elsewhere; treat higher
//! levels as a literal transcription rather than a verified kernel.

use std::f64::consts::PI;

use crate::numerics::{factorial, gamma, gauss_2f1, Complex};

use super::{HyperLevelSpec, UpperHalfPoint};

/// `K_{n,B}(z, zeta)`.
pub fn reproducing_kernel(spec: HyperLevelSpec, z: UpperHalfPoint, zeta: UpperHalfPoint) -> Complex {
    let (b, n) = (spec.b(), spec.n());
    let nf = n as f64;
    let zc = z.z();
    let wc = zeta.z();
    let d = zc - wc.conj();
    let x = 4.0 * z.y * zeta.y / d.norm_sqr();
    let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
    let pref = sign * gamma(2.0 * b - nf) / (factorial(n) * gamma(2.0 * b - 2.0 * nf));
    let ratio = (wc - zc.conj()) / d;
    // a non-positive second parameter terminates the series, so x = 1 is fine
    let f = gauss_2f1(-2.0 * b - nf, -nf, 2.0 * b - 2.0 * nf, x).expect("terminating series");
    ratio.powf(b) * (pref * x.powf(b - nf) * f)
}

/// Ground-level kernel `e^{i pi B} 4^B (Im z Im zeta)^B / (z - conj zeta)^{2B}`.
pub fn kernel_ground(b: f64, z: UpperHalfPoint, zeta: UpperHalfPoint) -> Complex {
    let d = z.z() - zeta.z().conj();
    Complex::from_polar(4f64.powf(b) * (z.y * zeta.y).powf(b), PI * b) / d.powf(2.0 * b)
}
