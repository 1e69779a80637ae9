//! Gabor systems with Hermite windows and finite sections of their frame operators.
//!
//! Time-frequency shifts are `pi_(q,p) f(t) = e^{2 pi i p t} f(t - q)`. With
//! that convention the natural windows are the Hermite functions dilated to
//! unit time-frequency cell, `phi_n(t) = (2 pi)^{1/4} h_n(sqrt(2 pi) t)`; all
//! matrix elements below are taken in that orthonormal basis.
//!
//! Whether a lattice system is complete cannot be settled by a finite
//! computation. [`frame_scan`] is an indicator: it looks at the smallest
//! eigenvalue of a compressed finite section and compares it with
//! thresholds relative to the largest upper bound seen in the scan.

use std::f64::consts::PI;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{invalid, Result};
use crate::numerics::{eigh, hermite_function, normalized_hermite_polys, Complex, HermitianMatrix, QuadratureRule};

/// Lattice `Lambda = omega1 Z + omega2 Z` in the time-frequency plane `(q, p) = (Re, Im)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Lattice {
    omega1: Complex,
    omega2: Complex,
}

impl Lattice {
    /// Any pair of periods spanning the plane. Orientation is not constrained,
    /// so the square lattice `omega, i omega` is accepted as is.
    pub fn new(omega1: Complex, omega2: Complex) -> Result<Self> {
        let finite = [omega1.re, omega1.im, omega2.re, omega2.im].iter().all(|v| v.is_finite());
        let det = omega1.re * omega2.im - omega1.im * omega2.re;
        if !finite || det == 0.0 {
            return Err(invalid("periods", format!("{omega1} and {omega2} do not span a lattice")));
        }
        Ok(Self { omega1, omega2 })
    }

    /// Square lattice `omega Z x omega Z`.
    pub fn square(omega: f64) -> Result<Self> {
        if !(omega > 0.0) {
            return Err(invalid("omega", format!("must be positive, got {omega}")));
        }
        Self::new(Complex::new(omega, 0.0), Complex::new(0.0, omega))
    }

    pub fn omega1(&self) -> Complex {
        self.omega1
    }

    pub fn omega2(&self) -> Complex {
        self.omega2
    }

    /// Covolume `|det Omega|`.
    pub fn size(&self) -> f64 {
        (self.omega1.re * self.omega2.im - self.omega1.im * self.omega2.re).abs()
    }
}

/// Lattice points `m1 omega1 + m2 omega2` with `max(|m1|, |m2|) <= radius`,
/// ordered lexicographically by `(m1, m2)`.
pub fn lattice_points(lattice: &Lattice, radius: usize) -> Vec<(f64, f64)> {
    let r = radius as i64;
    let mut out = Vec::with_capacity((2 * radius + 1).pow(2));
    for m1 in -r..=r {
        for m2 in -r..=r {
            let z = lattice.omega1 * m1 as f64 + lattice.omega2 * m2 as f64;
            out.push((z.re, z.im));
        }
    }
    out
}

/// `t -> e^{2 pi i p t} f(t - q)`.
pub fn tf_shift<F: Fn(f64) -> Complex>(q: f64, p: f64, f: F) -> impl Fn(f64) -> Complex {
    move |t| Complex::from_polar(1.0, 2.0 * PI * p * t) * f(t - q)
}

/// Window `phi_n(t) = (2 pi)^{1/4} h_n(sqrt(2 pi) t)`.
pub fn gabor_hermite(n: usize) -> impl Fn(f64) -> Complex + Copy + Send + Sync {
    let s = (2.0 * PI).sqrt();
    move |t| Complex::new(s.sqrt() * hermite_function(n, s * t), 0.0)
}

/// Gauss-Hermite rule sized for displacement matrix elements up to `modes - 1`.
#[derive(Debug, Clone)]
pub struct DisplacementKernel {
    modes: usize,
    rule: QuadratureRule,
}

impl DisplacementKernel {
    /// Uses `2 * modes + 64` nodes.
    pub fn new(modes: usize) -> Result<Self> {
        if modes == 0 {
            return Err(invalid("modes", "need at least one mode"));
        }
        Ok(Self { modes, rule: QuadratureRule::gauss_hermite(2 * modes + 64)? })
    }

    pub fn modes(&self) -> usize {
        self.modes
    }

    /// `<phi_j, pi_(q,p) phi_n>` for `j = 0..modes`.
    ///
    /// After rescaling to `Q = sqrt(2 pi) q`, `P = sqrt(2 pi) p` the Gaussian
    /// product and the modulation combine into one Gaussian with complex
    /// center `(Q - iP)/2`; shifting the contour there leaves a polynomial
    /// against `e^{-u^2}`, which the rule integrates exactly.
    pub fn column(&self, n: usize, q: f64, p: f64) -> Vec<Complex> {
        let s = (2.0 * PI).sqrt();
        let (qq, pp) = (s * q, s * p);
        let pref = Complex::new(-(qq * qq + pp * pp) / 4.0, -pp * qq / 2.0).exp();
        let mut out = vec![Complex::new(0.0, 0.0); self.modes];
        for (&u, &w) in self.rule.nodes().iter().zip(self.rule.weights()) {
            let a = normalized_hermite_polys(self.modes - 1, Complex::new(u + qq / 2.0, -pp / 2.0));
            let b = normalized_hermite_polys(n, Complex::new(u - qq / 2.0, -pp / 2.0))[n];
            let bw = b * w;
            for (o, aj) in out.iter_mut().zip(&a) {
                *o += aj * bw;
            }
        }
        for o in &mut out {
            *o *= pref;
        }
        out
    }
}

/// `<phi_j, pi_(q,p) phi_n> = int phi_j(t) e^{-2 pi i p t} phi_n(t - q) dt`.
pub fn displacement_element(j: usize, n: usize, q: f64, p: f64) -> Complex {
    let kernel = DisplacementKernel::new(j.max(n) + 1).expect("positive mode count");
    kernel.column(n, q, p)[j]
}

/// Finite section `S[j][k] = sum_lambda d_j(lambda) conj(d_k(lambda))` of the
/// frame operator of `{pi_lambda phi_n}` on `span(phi_0..phi_{modes-1})`.
pub fn frame_operator_section(n: usize, lattice: &Lattice, modes: usize, radius: usize) -> Result<HermitianMatrix> {
    if modes < n + 2 {
        return Err(invalid("modes", format!("need modes >= n + 2 = {}, got {modes}", n + 2)));
    }
    if radius < 2 {
        return Err(invalid("radius", format!("need radius >= 2, got {radius}")));
    }
    let kernel = DisplacementKernel::new(modes)?;
    let mut s = vec![Complex::new(0.0, 0.0); modes * modes];
    for (q, p) in lattice_points(lattice, radius) {
        let d = kernel.column(n, q, p);
        for j in 0..modes {
            for k in 0..modes {
                s[j * modes + k] += d[j] * d[k].conj();
            }
        }
    }
    HermitianMatrix::new(modes, s)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Classification {
    FrameLike,
    Deficient,
    Inconclusive,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::FrameLike => "frame_like",
            Self::Deficient => "deficient",
            Self::Inconclusive => "inconclusive",
        })
    }
}

/// Extreme eigenvalues of one compressed section.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FrameEstimate {
    pub omega2: f64,
    pub lower: f64,
    pub upper: f64,
    pub modes_used: usize,
    pub interior_modes: usize,
    pub lattice_radius: usize,
    pub classification: Classification,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ScanConfig {
    pub modes: usize,
    pub interior: usize,
    pub radius: usize,
    /// `lower > theta_frame * max(upper)` counts as frame-like.
    pub theta_frame: f64,
    /// `lower < theta_def * max(upper)` counts as deficient.
    pub theta_def: f64,
}

impl Default for ScanConfig {
    fn default() -> Self {
        Self { modes: 40, interior: 20, radius: 14, theta_frame: 0.1, theta_def: 1e-3 }
    }
}

/// Square lattices with `omega^2` from the list, one estimate each, in input order.
pub fn frame_scan(n: usize, omega2_values: &[f64], config: &ScanConfig) -> Result<Vec<FrameEstimate>> {
    if config.interior == 0 || config.interior >= config.modes {
        return Err(invalid("interior", format!("need 0 < interior < modes = {}, got {}", config.modes, config.interior)));
    }
    if !(config.theta_frame > 0.0) || !(config.theta_def > 0.0) || config.theta_def > config.theta_frame {
        return Err(invalid("thresholds", "need 0 < theta_def <= theta_frame"));
    }
    if let Some(bad) = omega2_values.iter().find(|&&w| !(w > 0.0) || !w.is_finite()) {
        return Err(invalid("omega2", format!("values must be positive, got {bad}")));
    }
    let bounds: Vec<(f64, f64)> = omega2_values
        .par_iter()
        .map(|&w2| {
            let lattice = Lattice::square(w2.sqrt())?;
            let s = frame_operator_section(n, &lattice, config.modes, config.radius)?;
            let values = eigh(&s.leading(config.interior)?)?.values;
            Ok((values[0].max(0.0), values[values.len() - 1]))
        })
        .collect::<Result<_>>()?;
    let top = bounds.iter().map(|b| b.1).fold(0.0, f64::max);
    Ok(omega2_values
        .iter()
        .zip(bounds)
        .map(|(&omega2, (lower, upper))| FrameEstimate {
            omega2,
            lower,
            upper,
            modes_used: config.modes,
            interior_modes: config.interior,
            lattice_radius: config.radius,
            classification: if lower > config.theta_frame * top {
                Classification::FrameLike
            } else if lower < config.theta_def * top {
                Classification::Deficient
            } else {
                Classification::Inconclusive
            },
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn lattice_examples() {
        let l = Lattice::square(1.0).unwrap();
        let pts = lattice_points(&l, 1);
        assert_eq!(pts.len(), 9);
        for want in [(0.0, 0.0), (1.0, 0.0), (0.0, 1.0)] {
            assert!(pts.contains(&want));
        }
        assert_eq!(pts[0], (-1.0, -1.0));
        assert_eq!(pts[1], (-1.0, 0.0));
        let half = lattice_points(&Lattice::square(0.5).unwrap(), 2);
        assert_eq!(half.len(), 25);
        let max = half.iter().map(|p| p.0.abs().max(p.1.abs())).fold(0.0, f64::max);
        assert_relative_eq!(max, 1.0);
        assert_relative_eq!(Lattice::square(0.5).unwrap().size(), 0.25);
        assert!(Lattice::new(Complex::new(1.0, 1.0), Complex::new(2.0, 2.0)).is_err());
    }

    #[test]
    fn shift_examples() {
        let h0 = gabor_hermite(0);
        let same = tf_shift(0.0, 0.0, h0);
        assert_eq!(same(0.3), h0(0.3));
        let moved = tf_shift(1.0, 0.0, h0);
        assert_relative_eq!(moved(1.0).re, h0(0.0).re);
        let modulated = tf_shift(0.0, 1.0, h0);
        assert_relative_eq!(modulated(0.0).re, h0(0.0).re);
    }

    #[test]
    fn displacement_examples() {
        for n in 0..5 {
            assert_relative_eq!(displacement_element(n, n, 0.0, 0.0).re, 1.0, max_relative = 1e-13);
            assert!(displacement_element(n + 1, n, 0.0, 0.0).norm() < 1e-13);
        }
        assert_relative_eq!(displacement_element(0, 0, 1.0, 0.0).norm(), (-PI / 2.0).exp(), max_relative = 1e-13);
    }

    #[test]
    fn single_point_section_is_rank_one() {
        let s = frame_operator_section(0, &Lattice::square(50.0).unwrap(), 4, 2).unwrap();
        assert_relative_eq!(s.get(0, 0).re, 1.0, max_relative = 1e-13);
        let e = eigh(&s).unwrap().values;
        assert!(e[..3].iter().all(|v| v.abs() < 1e-13));
    }
}
