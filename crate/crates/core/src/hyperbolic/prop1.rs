//! Expansion of `W_{B,n}[f]` into derivatives of a single analytic function.
//!
//! Writing `F(zeta) = int t^{B-n-1} f(t) e^{i zeta t/2} dt` (a Bergman
//! transform of `f/t^2` at `zeta/2`) and expanding the Laguerre polynomial in
//! the coherent state gives
//!
//! `W[f](z) = gamma^{-1/2} sum_k (2i)^k/k! C(2B-n-1, n-k) y^{B-n+k} F^{(k)}(-conj z)`.
//!
//! [`Prop1Checker`] evaluates both sides independently. The derivatives are
//! computed under the integral and, separately, from contour samples of `F`;
//! if the two disagree the check aborts instead of reporting a number.

use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::numerics::{binomial, cauchy_derivatives, default_radius, factorial, Complex, Domain, DEFAULT_NODES};

use super::{BergmanTransform, HyperLevelSpec, RadialFunction, UpperHalfPoint, WTransform};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Prop1Config {
    /// Largest accepted relative difference between the two sides.
    pub tolerance: f64,
    /// Largest accepted relative difference between the two derivative routes.
    pub derivative_tolerance: f64,
    pub nodes: usize,
    pub contour_points: usize,
}

impl Default for Prop1Config {
    fn default() -> Self {
        Self { tolerance: 1e-5, derivative_tolerance: 1e-6, nodes: DEFAULT_NODES, contour_points: 64 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Prop1Check {
    pub x: f64,
    pub y: f64,
    pub lhs: Complex,
    pub rhs: Complex,
    /// `|lhs - rhs|` over `max(|lhs|, sum of |terms|)`.
    pub rel_err: f64,
    /// Worst relative gap between the two derivative estimates.
    pub derivative_gap: f64,
    pub passed: bool,
}

/// Smallest `Im z` accepted by the check.
pub const MIN_IMAG: f64 = 0.3;

/// Evaluates both sides of the expansion for one `(spec, f)` pair.
#[derive(Debug, Clone)]
pub struct Prop1Checker {
    spec: HyperLevelSpec,
    w: WTransform,
    ber: BergmanTransform,
    config: Prop1Config,
}

impl Prop1Checker {
    pub fn new(spec: HyperLevelSpec, f: RadialFunction, config: Prop1Config) -> Result<Self> {
        let w = WTransform::with_nodes(spec, f.clone(), config.nodes)?;
        let ber = BergmanTransform::with_nodes(spec.alpha(), f.times_power(-2.0), config.nodes)?;
        Ok(Self { spec, w, ber, config })
    }

    pub fn spec(&self) -> HyperLevelSpec {
        self.spec
    }

    pub fn config(&self) -> Prop1Config {
        self.config
    }

    pub fn check(&self, z: UpperHalfPoint) -> Result<Prop1Check> {
        if z.y < MIN_IMAG {
            return Err(invalid("z", format!("need Im z >= {MIN_IMAG}, got {}", z.y)));
        }
        let (b, n) = (self.spec.b(), self.spec.n());
        let zeta = -z.z().conj();
        let under: Vec<Complex> = (0..=n)
            .map(|k| Ok(self.ber.derivative_at(zeta / 2.0, k)? / 2f64.powi(k as i32)))
            .collect::<Result<_>>()?;
        let r = default_radius(zeta);
        let mut eval_err = None;
        let contour = cauchy_derivatives(
            |w| match self.ber.eval_at(w / 2.0) {
                Ok(v) => v,
                Err(e) => {
                    eval_err.get_or_insert(e);
                    Complex::new(0.0, 0.0)
                }
            },
            zeta,
            n,
            r,
            self.config.contour_points,
            Domain::UpperHalfPlane,
        )?;
        if let Some(e) = eval_err {
            return Err(e);
        }
        // Scale each order by the Cauchy bound k! M / r^k so that isolated zeros of F
        // (e.g. by Laguerre orthogonality) do not turn rounding noise into a mismatch.
        let taylor = under
            .iter()
            .enumerate()
            .map(|(k, a)| a.norm() * r.powi(k as i32) / factorial(k))
            .fold(0.0, f64::max);
        let mut gap: f64 = 0.0;
        for (k, (a, c)) in under.iter().zip(&contour).enumerate() {
            let scale = a.norm().max(c.norm()).max(taylor * factorial(k) / r.powi(k as i32));
            let rel = if scale == 0.0 { 0.0 } else { (a - c).norm() / scale };
            if rel > self.config.derivative_tolerance {
                return Err(Error::DerivativeMismatch {
                    order: k,
                    under_integral: a.to_string(),
                    contour: c.to_string(),
                    relative: rel,
                });
            }
            gap = gap.max(rel);
        }
        let lhs = self.w.eval(z)?;
        let nf = n as f64;
        let norm = self.spec.gamma_bn().sqrt();
        let terms: Vec<Complex> = under
            .iter()
            .enumerate()
            .map(|(k, fk)| {
                let c = Complex::new(0.0, 2.0).powu(k as u32) / factorial(k) * binomial(2.0 * b - nf - 1.0, n - k);
                c * z.y.powf(b - nf + k as f64) * fk / norm
            })
            .collect();
        let rhs: Complex = terms.iter().sum();
        // Relative to the size of the summands, so points where the sum cancels to zero
        // are judged by the cancellation error rather than by 0/0.
        let scale = lhs.norm().max(terms.iter().map(|t| t.norm()).sum());
        let rel_err = if scale == 0.0 { 0.0 } else { (lhs - rhs).norm() / scale };
        Ok(Prop1Check { x: z.x, y: z.y, lhs, rhs, rel_err, derivative_gap: gap, passed: rel_err <= self.config.tolerance })
    }
}

/// One-point convenience wrapper around [`Prop1Checker`].
pub fn proposition1_check(spec: HyperLevelSpec, f: &RadialFunction, z: UpperHalfPoint, config: Prop1Config) -> Result<Prop1Check> {
    Prop1Checker::new(spec, f.clone(), config)?.check(z)
}

/// `x in {-1, 0, 1}`, `y in {0.5, 1, 2}`, row-major in `x`.
pub fn default_grid() -> Vec<UpperHalfPoint> {
    let mut out = Vec::with_capacity(9);
    for x in [-1.0, 0.0, 1.0] {
        for y in [0.5, 1.0, 2.0] {
            out.push(UpperHalfPoint { x, y });
        }
    }
    out
}
