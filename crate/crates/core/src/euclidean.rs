//! Landau levels in the plane.
//!
//! A level is indexed by the field strength `B > 0` and `n >= 0`. The
//! coherent states of level `n` are Heisenberg translates of the `n`-th
//! Hermite function; [`transform_v`] pairs them with a signal on the line,
//! and [`BargmannTransform`] is the true-polyanalytic Bargmann transform
//! onto the `n`-th polyanalytic Fock space.

use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{invalid, Result};
use crate::numerics::{factorial, hermite_functions, hermite_poly_at, laguerre_poly, Complex, HermiteRule, DEFAULT_NODES};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EuclidLevelSpec {
    b: f64,
    n: usize,
}

impl EuclidLevelSpec {
    pub fn new(b: f64, n: usize) -> Result<Self> {
        if !(b > 0.0) || !b.is_finite() {
            return Err(invalid("B", format!("field strength must be positive and finite, got {b}")));
        }
        Ok(Self { b, n })
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

/// Phase-space point `z = x + iy`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PhasePoint {
    pub x: f64,
    pub y: f64,
}

impl PhasePoint {
    pub fn new(x: f64, y: f64) -> Result<Self> {
        if !x.is_finite() || !y.is_finite() {
            return Err(invalid("point", format!("coordinates must be finite, got ({x}, {y})")));
        }
        Ok(Self { x, y })
    }

    pub fn z(&self) -> Complex {
        Complex::new(self.x, self.y)
    }
}

/// Energy `(n + 1/2) B` of the level.
pub fn euclid_level(spec: EuclidLevelSpec) -> f64 {
    (spec.n as f64 + 0.5) * spec.b
}

/// Basis function `sqrt(n!/(n-i)!) B^{(i+1)/2} z^i L_n^{(i)}(B|z|^2)`; needs `i <= n`.
pub fn eigenbasis_e1(i: usize, n: usize, b: f64, z: Complex) -> Result<Complex> {
    if i > n {
        return Err(invalid("i", format!("first family needs i <= n, got i={i}, n={n}")));
    }
    check_field(b)?;
    let pref = (factorial(n) / factorial(n - i)).sqrt() * b.powf((i as f64 + 1.0) / 2.0);
    Ok(z.powu(i as u32) * pref * laguerre_poly(n, i as f64, b * z.norm_sqr())?)
}

/// Basis function `sqrt(j!/(j+n)!) B^{(n-1)/2} conj(z)^n L_j^{(n)}(B|z|^2)`.
pub fn eigenbasis_e2(j: usize, n: usize, b: f64, z: Complex) -> Result<Complex> {
    check_field(b)?;
    let pref = (factorial(j) / factorial(j + n)).sqrt() * b.powf((n as f64 - 1.0) / 2.0);
    Ok(z.conj().powu(n as u32) * pref * laguerre_poly(j, n as f64, b * z.norm_sqr())?)
}

fn check_field(b: f64) -> Result<()> {
    if !(b > 0.0) || !b.is_finite() {
        return Err(invalid("B", format!("field strength must be positive and finite, got {b}")));
    }
    Ok(())
}

/// L²-normalized Hermite function `h_m` as a complex-valued signal.
pub fn hermite_fn(m: usize) -> impl Fn(f64) -> Complex + Send + Sync + Copy {
    move |t| Complex::new(hermite_functions(m, t)[m], 0.0)
}

/// Coherent state of level `n` at phase point `p`, as a function of `t`:
/// `exp(-i sqrt(B) t y + i (B/2) x y) h_n(t - sqrt(B) x)`.
pub fn cs_wavefunction(spec: EuclidLevelSpec, p: PhasePoint, t: f64) -> Complex {
    let sb = spec.b.sqrt();
    let phase = -sb * t * p.y + 0.5 * spec.b * p.x * p.y;
    Complex::from_polar(hermite_functions(spec.n, t - sb * p.x)[spec.n], phase)
}

/// Shared Gauss-Hermite rule with the default node count.
pub fn default_line_rule() -> &'static HermiteRule {
    static RULE: OnceLock<HermiteRule> = OnceLock::new();
    RULE.get_or_init(|| HermiteRule::new(DEFAULT_NODES).expect("default Hermite rule"))
}

/// `V_{B,n}[phi](x, y) = int conj(psi_{(x,y)}(t)) phi(t) dt`.
///
/// The rule is centered on the Gaussian envelope of the coherent state, so
/// `phi` only has to be finite at the shifted nodes.
pub fn transform_v<F: Fn(f64) -> Complex>(spec: EuclidLevelSpec, phi: F, p: PhasePoint, rule: &HermiteRule) -> Result<Complex> {
    let center = spec.b.sqrt() * p.x;
    rule.integrate_unweighted(|s| {
        let t = s + center;
        cs_wavefunction(spec, p, t).conj() * phi(t)
    })
}

/// True-polyanalytic Bargmann transform of order `n`,
/// `(-1)^n c_n int phi(t) exp(-t^2/2 + sqrt(2) t w - w^2/2) H_n(t - (w + conj w)/sqrt(2)) dt`.
///
/// The constant `c_n` is calibrated at construction so that `h_n` is mapped
/// isometrically into `L²(C, e^{-|w|^2} dA / pi)`.
#[derive(Debug, Clone)]
pub struct BargmannTransform {
    n: usize,
    c_n: f64,
    rule: HermiteRule,
}

/// Nodes per axis of the tensor Gauss-Hermite rule used for calibration.
pub const CALIBRATION_NODES: usize = 40;

impl BargmannTransform {
    pub fn new(n: usize) -> Result<Self> {
        Self::with_rule(n, default_line_rule().clone(), CALIBRATION_NODES)
    }

    pub fn with_rule(n: usize, rule: HermiteRule, plane_nodes: usize) -> Result<Self> {
        let mut t = Self { n, c_n: 1.0, rule };
        let plane = HermiteRule::new(plane_nodes)?;
        let (nodes, weights) = (plane.nodes(), plane.rule().weights());
        let h = hermite_fn(n);
        let mut norm2 = 0.0;
        for (a, wa) in nodes.iter().zip(weights) {
            for (b, wb) in nodes.iter().zip(weights) {
                norm2 += wa * wb * t.eval(h, Complex::new(*a, *b))?.norm_sqr();
            }
        }
        norm2 /= std::f64::consts::PI;
        t.c_n = 1.0 / norm2.sqrt();
        Ok(t)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Calibrated `c_n`.
    pub fn normalization(&self) -> f64 {
        self.c_n
    }

    pub fn eval<F: Fn(f64) -> Complex>(&self, phi: F, w: Complex) -> Result<Complex> {
        let center = std::f64::consts::SQRT_2 * w.re;
        let sign = if self.n.is_multiple_of(2) { 1.0 } else { -1.0 };
        let v = self.rule.integrate_unweighted(|s| {
            let t = s + center;
            let expo = -0.5 * t * t + std::f64::consts::SQRT_2 * t * w - 0.5 * w * w;
            phi(t) * expo.exp() * hermite_poly_at(self.n, s)
        })?;
        Ok(v * (sign * self.c_n))
    }
}

/// One-shot [`BargmannTransform`] evaluation (calibrates on every call).
pub fn bargmann_bn<F: Fn(f64) -> Complex>(n: usize, phi: F, w: Complex) -> Result<Complex> {
    BargmannTransform::new(n)?.eval(phi, w)
}
