//! Taylor coefficients of analytic functions from samples on a circle.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{invalid, Error, Result};

/// Minimum number of samples on the circle.
pub const MIN_POINTS: usize = 32;

/// Where the sampled function is known to be analytic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Domain {
    Entire,
    UpperHalfPlane,
}

/// Radius keeping the circle well inside the upper half-plane.
pub fn default_radius(z0: Complex64) -> f64 {
    (0.5 * z0.im).min(0.25)
}

/// `f^{(k)}(z0)` by the trapezoid rule on `|z - z0| = radius`.
pub fn cauchy_derivative<F>(f: F, z0: Complex64, k: usize, radius: f64, points: usize, domain: Domain) -> Result<Complex64>
where
    F: FnMut(Complex64) -> Complex64,
{
    Ok(cauchy_derivatives(f, z0, k, radius, points, domain)?[k])
}

/// `f(z0), f'(z0), ..., f^{(kmax)}(z0)` from one set of samples.
pub fn cauchy_derivatives<F>(
    mut f: F,
    z0: Complex64,
    kmax: usize,
    radius: f64,
    points: usize,
    domain: Domain,
) -> Result<Vec<Complex64>>
where
    F: FnMut(Complex64) -> Complex64,
{
    if points < MIN_POINTS {
        return Err(invalid("points", format!("need at least {MIN_POINTS}, got {points}")));
    }
    if kmax >= points / 2 {
        return Err(invalid("k", format!("order {kmax} is aliased with {points} samples")));
    }
    if !(radius > 0.0) || !radius.is_finite() {
        return Err(invalid("radius", format!("must be positive, got {radius}")));
    }
    if domain == Domain::UpperHalfPlane && z0.im - radius <= 0.0 {
        return Err(Error::ContourOutsideDomain { center: z0.to_string(), radius });
    }
    let samples: Vec<(Complex64, Complex64)> = (0..points)
        .map(|j| {
            let unit = Complex64::from_polar(1.0, 2.0 * PI * j as f64 / points as f64);
            (unit, f(z0 + unit * radius))
        })
        .collect();
    let mut out = Vec::with_capacity(kmax + 1);
    let mut fact = 1.0;
    for k in 0..=kmax {
        if k > 0 {
            fact *= k as f64;
        }
        let coeff: Complex64 = samples.iter().map(|&(u, v)| v * u.powu(k as u32).conj()).sum::<Complex64>() / points as f64;
        out.push(coeff * fact / radius.powi(k as i32));
    }
    Ok(out)
}
