//! Explicit non-zero element of a hyperbolic Bergman space orthogonal to
//! every coherent state along a group orbit.
//!
//! Given a weight-`m0` form `F` vanishing at `zeta0`, the function
//! `H(z) = (z + i)^{-eps} F(z)^{n+1}` with `eps = alpha + 1 - 2 m0 (n + 1)`
//! vanishes to order `n + 1` on the orbit of `zeta0`, and lies in the
//! weighted Bergman space `int |H|^2 y^alpha dx dy < inf` when `eps > 0`.

use rayon::prelude::*;
use serde::Serialize;
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::hyperbolic::{HyperLevelSpec, UpperHalfPoint};
use crate::numerics::{cauchy_derivatives, Complex, Domain, QuadratureRule};

use super::forms::AutomorphicForm;
use super::moebius::MoebiusElement;
use super::orbit::{orbit, GroupKind};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WitnessConfig {
    /// Word length for the default orbit.
    pub max_word_length: usize,
    /// Bound on scaled orbit residuals and on `|F(zeta0)|`.
    pub tolerance: f64,
    /// Bound on the change of `y^{m0} |F|` under the group, relative to its sup.
    pub invariance_tolerance: f64,
    pub disc_radii: Vec<f64>,
    pub contour_points: usize,
    pub radial_nodes: usize,
    pub angular_nodes: usize,
}

impl Default for WitnessConfig {
    fn default() -> Self {
        Self {
            max_word_length: 4,
            tolerance: 1e-8,
            invariance_tolerance: 1e-9,
            disc_radii: vec![0.9, 0.99, 0.999],
            contour_points: 64,
            radial_nodes: 160,
            angular_nodes: 512,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DiscPartial {
    pub radius: f64,
    /// `int_{|w| < radius}` of the transported integrand.
    pub integral: f64,
    /// Bound on the remaining integral over `radius < |w| < 1`.
    pub tail_bound: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WitnessReport {
    pub form: String,
    pub zeta0: UpperHalfPoint,
    pub b: f64,
    pub n: usize,
    pub alpha: f64,
    pub m0: i64,
    pub epsilon: f64,
    pub form_at_zeta0: f64,
    pub h_at_zeta0: f64,
    pub orbit_points: usize,
    /// `max |H^{(k)}(g zeta0)|` over orbit points and `k <= n`.
    pub max_orbit_residual: f64,
    /// Same, each divided by its Cauchy scale `k! M_r / r^k`.
    pub max_scaled_orbit_residual: f64,
    pub orbit_vanishes: bool,
    pub disc: Vec<DiscPartial>,
    /// Largest sampled ratio of the integrand to `(1 - |w|^2)^{eps - 1}`.
    pub domination_constant: f64,
    pub bergman_norm_squared: f64,
    pub bergman_finite: bool,
    pub disc_cauchy: bool,
    /// `sup y^{m0} |F|` on the test grid.
    pub weighted_sup: f64,
    pub invariance_deviation: f64,
    pub passed: bool,
}

/// `(z + i)^{-eps} F(z)^{n+1}`.
pub fn witness_function(form: &dyn AutomorphicForm, epsilon: f64, n: usize, z: Complex) -> Result<Complex> {
    let p = UpperHalfPoint::from_complex(z)?;
    let f = form.eval(p)?;
    Ok((z + Complex::i()).powc(Complex::new(-epsilon, 0.0)) * f.powu(n as u32 + 1))
}

/// Points of the `PSL(2, Z)` orbit of `zeta0` reached by words of length at most `len`.
pub fn modular_orbit(zeta0: UpperHalfPoint, len: usize) -> Vec<UpperHalfPoint> {
    orbit(GroupKind::Modular, zeta0, len).into_iter().map(|o| o.point).collect()
}

/// Builds and audits the witness for `spec` from `form`, which must vanish at `zeta0`.
///
/// Refuses with [`Error::WitnessRegime`] when `2 m0 >= (B - n)/(1 + n)`,
/// since then `eps <= 0`.
pub fn incompleteness_witness(
    spec: HyperLevelSpec,
    form: &dyn AutomorphicForm,
    zeta0: UpperHalfPoint,
    orbit_points: &[UpperHalfPoint],
    config: &WitnessConfig,
) -> Result<WitnessReport> {
    let n = spec.n();
    let m0 = form.weight_m();
    let ratio = (spec.b() - n as f64) / (1.0 + n as f64);
    let two_m0 = 2.0 * m0 as f64;
    if two_m0 >= ratio {
        return Err(Error::WitnessRegime { two_m0, ratio });
    }
    let alpha = spec.alpha();
    let epsilon = alpha + 1.0 - two_m0 * (n as f64 + 1.0);
    let form_at_zeta0 = form.eval(zeta0)?.norm();
    if !(form_at_zeta0 < config.tolerance) {
        return Err(Error::FormDoesNotVanish { value: form_at_zeta0, tol: config.tolerance });
    }
    let h = |z: Complex| witness_function(form, epsilon, n, z);
    let h_at_zeta0 = h(zeta0.z())?.norm();

    let residuals = orbit_points
        .par_iter()
        .map(|p| orbit_residual(&h, *p, n, config.contour_points))
        .collect::<Result<Vec<_>>>()?;
    let max_orbit_residual = residuals.iter().map(|r| r.0).fold(0.0, f64::max);
    let max_scaled_orbit_residual = residuals.iter().map(|r| r.1).fold(0.0, f64::max);
    let orbit_vanishes = max_scaled_orbit_residual < config.tolerance;

    let (disc, domination_constant) = disc_integrals(&h, alpha, epsilon, config)?;
    let bergman_norm_squared = disc.last().map_or(0.0, |d| d.integral);
    let bergman_finite = bergman_norm_squared.is_finite() && disc.iter().all(|d| d.tail_bound.is_finite());
    let disc_cauchy = disc.windows(2).all(|w| {
        let step = (w[1].integral - w[0].integral).abs();
        step <= w[0].tail_bound + 1e-9 * w[1].integral.abs()
    });

    let (weighted_sup, invariance_deviation) = weighted_bound(form, m0)?;
    let passed = orbit_vanishes
        && h_at_zeta0 < config.tolerance
        && bergman_finite
        && disc_cauchy
        && invariance_deviation <= config.invariance_tolerance;
    Ok(WitnessReport {
        form: form.name(),
        zeta0,
        b: spec.b(),
        n,
        alpha,
        m0,
        epsilon,
        form_at_zeta0,
        h_at_zeta0,
        orbit_points: orbit_points.len(),
        max_orbit_residual,
        max_scaled_orbit_residual,
        orbit_vanishes,
        disc,
        domination_constant,
        bergman_norm_squared,
        bergman_finite,
        disc_cauchy,
        weighted_sup,
        invariance_deviation,
        passed,
    })
}

/// `(max_k |H^{(k)}(p)|, max_k |H^{(k)}(p)| r^k / (k! M_r))`.
fn orbit_residual<H>(h: &H, p: UpperHalfPoint, n: usize, points: usize) -> Result<(f64, f64)>
where
    H: Fn(Complex) -> Result<Complex>,
{
    let center = p.z();
    let r = (0.5 * p.y).min(0.25);
    let mut err = None;
    let mut m_r = 0.0f64;
    let derivs = cauchy_derivatives(
        |z| match h(z) {
            Ok(v) => {
                m_r = m_r.max(v.norm());
                v
            }
            Err(e) => {
                err.get_or_insert(e);
                Complex::new(f64::NAN, f64::NAN)
            }
        },
        center,
        n,
        r,
        points,
        Domain::UpperHalfPlane,
    )?;
    if let Some(e) = err {
        return Err(e);
    }
    let mut abs = 0.0f64;
    let mut scaled = 0.0f64;
    let mut fact = 1.0;
    for (k, d) in derivs.iter().enumerate() {
        if k > 0 {
            fact *= k as f64;
        }
        abs = abs.max(d.norm());
        let scale = fact * m_r / r.powi(k as i32);
        if scale > 0.0 {
            scaled = scaled.max(d.norm() / scale);
        }
    }
    Ok((abs, scaled))
}

/// Partial integrals of `|H(z(w))|^2 4 (1-|w|^2)^alpha / |1-w|^{2 alpha + 4}`
/// over `|w| < rho` for each configured radius, where `z(w) = i (1 + w)/(1 - w)`.
fn disc_integrals<H>(h: &H, alpha: f64, epsilon: f64, config: &WitnessConfig) -> Result<(Vec<DiscPartial>, f64)>
where
    H: Fn(Complex) -> Result<Complex> + Sync,
{
    let mut radii = config.disc_radii.clone();
    radii.sort_by(f64::total_cmp);
    let angles: Vec<f64> = (0..config.angular_nodes).map(|j| 2.0 * PI * (j as f64 + 0.5) / config.angular_nodes as f64).collect();
    let dtheta = 2.0 * PI / config.angular_nodes as f64;
    let mut edges = vec![0.0];
    edges.extend(radii.iter().copied());
    let annuli = edges
        .windows(2)
        .map(|e| {
            let rule = QuadratureRule::trapezoid(config.radial_nodes, e[0], e[1])?;
            rule.nodes()
                .par_iter()
                .zip(rule.weights().par_iter())
                .map(|(&r, &wr)| {
                    let mut ring = 0.0;
                    let mut ratio = 0.0f64;
                    for &t in &angles {
                        let w = Complex::from_polar(r, t);
                        let one_minus = Complex::new(1.0, 0.0) - w;
                        let z = Complex::i() * (Complex::new(1.0, 0.0) + w) / one_minus;
                        let s = 1.0 - r * r;
                        let v = h(z)?.norm_sqr() * 4.0 * s.powf(alpha) / one_minus.norm().powf(2.0 * alpha + 4.0);
                        ring += v;
                        if s > 0.0 {
                            ratio = ratio.max(v / s.powf(epsilon - 1.0));
                        }
                    }
                    Ok((ring * dtheta * r * wr, ratio))
                })
                .try_fold(|| (0.0, 0.0f64), |acc, x: Result<(f64, f64)>| x.map(|(v, c)| (acc.0 + v, acc.1.max(c))))
                .try_reduce(|| (0.0, 0.0f64), |a, b| Ok((a.0 + b.0, a.1.max(b.1))))
        })
        .collect::<Result<Vec<_>>>()?;
    let constant = annuli.iter().map(|a| a.1).fold(0.0, f64::max);
    let mut acc = 0.0;
    let partials = radii
        .iter()
        .zip(&annuli)
        .map(|(&rho, a)| {
            acc += a.0;
            DiscPartial { radius: rho, integral: acc, tail_bound: constant * PI * (1.0 - rho * rho).powf(epsilon) / epsilon }
        })
        .collect();
    Ok((partials, constant))
}

/// `sup y^{m0} |F|` on `[-1/2, 1/2] x [0.2, 4]`, and the largest change of
/// `y^{m0} |F|` when grid points are moved by short words, relative to that sup.
fn weighted_bound(form: &dyn AutomorphicForm, m0: i64) -> Result<(f64, f64)> {
    let weighted = |p: UpperHalfPoint| -> Result<f64> { Ok(p.y.powi(m0 as i32) * form.eval(p)?.norm()) };
    let grid: Vec<UpperHalfPoint> = (0..21)
        .flat_map(|i| (0..39).map(move |j| UpperHalfPoint { x: -0.5 + 0.05 * i as f64, y: 0.2 + 0.1 * j as f64 }))
        .collect();
    let words: Vec<MoebiusElement> = orbit(GroupKind::Modular, UpperHalfPoint { x: 0.1, y: 1.7 }, 2)
        .into_iter()
        .map(|o| o.element)
        .collect();
    let (sup, diff) = grid
        .par_iter()
        .map(|&p| {
            let base = weighted(p)?;
            let mut sup = base;
            let mut diff = 0.0f64;
            for g in &words {
                let v = weighted(g.apply(p))?;
                sup = sup.max(v);
                diff = diff.max((v - base).abs());
            }
            Ok((sup, diff))
        })
        .try_reduce(|| (0.0, 0.0), |a, b| Ok((a.0.max(b.0), a.1.max(b.1))))?;
    Ok((sup, if sup > 0.0 { diff / sup } else { 0.0 }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fuchsian::forms::{eisenstein, Eisenstein};

    fn rho() -> UpperHalfPoint {
        UpperHalfPoint::new(0.5, 3f64.sqrt() / 2.0).unwrap()
    }

    #[test]
    fn refuses_when_bound_holds() {
        let e4 = eisenstein(Eisenstein::E4, 30).unwrap();
        let spec = HyperLevelSpec::new(3.0, 0).unwrap();
        let r = incompleteness_witness(spec, &e4, rho(), &[rho()], &WitnessConfig::default());
        assert!(matches!(r, Err(Error::WitnessRegime { .. })));
    }

    #[test]
    fn rejects_non_vanishing_form() {
        let e6 = eisenstein(Eisenstein::E6, 30).unwrap();
        let spec = HyperLevelSpec::new(10.0, 0).unwrap();
        let r = incompleteness_witness(spec, &e6, rho(), &[rho()], &WitnessConfig::default());
        assert!(matches!(r, Err(Error::FormDoesNotVanish { .. })));
    }
}
