//! Landau levels on the hyperbolic upper half-plane.
//!
//! For field strength `B` with `2B > 1` there are finitely many levels
//! `n = 0..=floor(B - 1/2)`. The coherent states of level `n` are orbits of a
//! Laguerre-type reference state under the affine group `z -> a z + b`, and
//! the associated transform [`WTransform`] maps `L²(R+, dt/t)` isometrically
//! (up to the constant `4 pi`) into `L²(C+, y^{-2} dx dy)`.
//!
//! Half-line integrals `int t^a e^{-st} g(t) dt` with complex `s` are done by
//! rotating the contour onto the ray `t = u/s` and using a generalized
//! Gauss-Laguerre rule in `u`. This requires the smooth part `g` of every
//! [`RadialFunction`] to be analytic in the right half-plane, and it turns
//! the oscillatory factor `e^{ixt}` into a harmless complex rate.

mod kernel;
mod prop1;
mod wavelet;

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::numerics::special::laguerre_unchecked;
use crate::numerics::{factorial, gamma, ln_gamma, Complex, QuadratureRule, DEFAULT_NODES};

pub use kernel::{kernel_ground, reproducing_kernel};
pub use prop1::{default_grid, proposition1_check, Prop1Check, Prop1Checker, Prop1Config};
pub use wavelet::{laguerre_wavelet_decomposition, laguerre_wavelet_fourier};

/// Field strength and level index of a hyperbolic Landau level.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HyperLevelSpec {
    b: f64,
    n: usize,
}

impl HyperLevelSpec {
    /// Requires `2B > 1`, `n <= floor(B - 1/2)` and `alpha = 2(B - n) - 1 > 0`.
    pub fn new(b: f64, n: usize) -> Result<Self> {
        if !b.is_finite() {
            return Err(invalid("B", format!("must be finite, got {b}")));
        }
        if !(2.0 * b > 1.0) {
            return Err(Error::NoBoundStates { two_b: 2.0 * b });
        }
        let top = max_level(b);
        if n > top {
            return Err(invalid("n", format!("level index must be at most floor(B - 1/2) = {top}, got {n}")));
        }
        if !(2.0 * (b - n as f64) - 1.0 > 0.0) {
            return Err(invalid("n", format!("alpha = 2(B - n) - 1 must be positive for B = {b}, n = {n}")));
        }
        Ok(Self { b, n })
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `alpha = 2(B - n) - 1`.
    pub fn alpha(&self) -> f64 {
        2.0 * (self.b - self.n as f64) - 1.0
    }

    /// `c_{B,n} = 1 / alpha`.
    pub fn c_bn(&self) -> f64 {
        1.0 / self.alpha()
    }

    /// `gamma_{B,n} = c_{B,n} Gamma(2B - n) / n!`.
    pub fn gamma_bn(&self) -> f64 {
        self.c_bn() * gamma(2.0 * self.b - self.n as f64) / factorial(self.n)
    }

    /// `(B - n)(1 - B + n)`.
    pub fn level(&self) -> f64 {
        let d = self.b - self.n as f64;
        d * (1.0 - d)
    }

    /// `(Gamma(2B - n) / n!)^{-1/2}`, computed in log space.
    pub fn state_normalization(&self) -> f64 {
        (-0.5 * (ln_gamma(2.0 * self.b - self.n as f64) - ln_gamma(self.n as f64 + 1.0))).exp()
    }
}

fn max_level(b: f64) -> usize {
    (b - 0.5).floor().max(0.0) as usize
}

/// Levels `(B - n)(1 - B + n)` for `n = 0..=floor(B - 1/2)`.
pub fn hyper_levels(b: f64) -> Result<Vec<f64>> {
    if !(2.0 * b > 1.0) || !b.is_finite() {
        return Err(Error::NoBoundStates { two_b: 2.0 * b });
    }
    Ok((0..=max_level(b))
        .map(|n| {
            let d = b - n as f64;
            d * (1.0 - d)
        })
        .collect())
}

/// Point `z = x + iy` of the upper half-plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct UpperHalfPoint {
    pub x: f64,
    pub y: f64,
}

impl UpperHalfPoint {
    pub fn new(x: f64, y: f64) -> Result<Self> {
        if !x.is_finite() || !y.is_finite() || !(y > 0.0) {
            return Err(invalid("z", format!("need finite x and y > 0, got ({x}, {y})")));
        }
        Ok(Self { x, y })
    }

    pub fn from_complex(z: Complex) -> Result<Self> {
        Self::new(z.re, z.im)
    }

    pub fn z(&self) -> Complex {
        Complex::new(self.x, self.y)
    }
}

impl fmt::Display for UpperHalfPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+{}i", self.x, self.y)
    }
}

/// How a radial function decays at infinity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum Decay {
    /// Contains the factor `e^{-rate t}`, `rate > 0`.
    Exponential { rate: f64 },
    /// No exponential factor; the coherent state supplies the decay.
    Polynomial,
}

type Smooth = Arc<dyn Fn(Complex) -> Complex + Send + Sync>;

/// `f(t) = t^power e^{-rate t} g(t)` on `t > 0`, with `g` analytic on the right half-plane.
#[derive(Clone)]
pub struct RadialFunction {
    power: f64,
    decay: Decay,
    smooth: Smooth,
}

impl fmt::Debug for RadialFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RadialFunction")
            .field("power", &self.power)
            .field("decay", &self.decay)
            .finish_non_exhaustive()
    }
}

impl RadialFunction {
    pub fn new<G>(power: f64, decay: Decay, smooth: G) -> Result<Self>
    where
        G: Fn(Complex) -> Complex + Send + Sync + 'static,
    {
        if !power.is_finite() {
            return Err(invalid("power", format!("must be finite, got {power}")));
        }
        if let Decay::Exponential { rate } = decay {
            if !(rate > 0.0) || !rate.is_finite() {
                return Err(invalid("rate", format!("must be positive, got {rate}")));
            }
        }
        Ok(Self { power, decay, smooth: Arc::new(smooth) })
    }

    /// `t^power e^{-rate t}`.
    pub fn exp_monomial(power: f64, rate: f64) -> Result<Self> {
        Self::new(power, Decay::Exponential { rate }, |_| Complex::new(1.0, 0.0))
    }

    pub fn zero() -> Self {
        Self { power: 0.0, decay: Decay::Polynomial, smooth: Arc::new(|_| Complex::new(0.0, 0.0)) }
    }

    /// Coherent state at `z = i`, `N t^{B-n} e^{-t/2} L_n^{(alpha)}(t)`; unit norm in `L²(dt/t)`.
    pub fn reference_state(spec: HyperLevelSpec) -> Self {
        let norm = spec.state_normalization();
        let (n, alpha) = (spec.n, spec.alpha());
        Self {
            power: spec.b - spec.n as f64,
            decay: Decay::Exponential { rate: 0.5 },
            smooth: Arc::new(move |t| laguerre_unchecked(n, alpha, t) * norm),
        }
    }

    pub fn power(&self) -> f64 {
        self.power
    }

    pub fn decay(&self) -> Decay {
        self.decay
    }

    /// Exponential rate, zero for polynomial decay.
    pub fn rate(&self) -> f64 {
        match self.decay {
            Decay::Exponential { rate } => rate,
            Decay::Polynomial => 0.0,
        }
    }

    /// The analytic factor `g`.
    pub fn smooth(&self, t: Complex) -> Complex {
        (self.smooth)(t)
    }

    /// `f(t)` at a complex point (principal power).
    pub fn eval_complex(&self, t: Complex) -> Complex {
        t.powf(self.power) * (-t * self.rate()).exp() * self.smooth(t)
    }

    pub fn eval(&self, t: f64) -> Complex {
        t.powf(self.power) * (-t * self.rate()).exp() * self.smooth(Complex::new(t, 0.0))
    }

    /// `t^k f(t)`.
    pub fn times_power(&self, k: f64) -> Self {
        Self { power: self.power + k, ..self.clone() }
    }
}

/// `int_0^inf t^a e^{-s t} g(t) dt` for `Re s > 0`, by the rotated Gauss-Laguerre rule.
#[derive(Debug, Clone)]
pub(crate) struct LaplaceRule {
    rule: QuadratureRule,
    a: f64,
}

impl LaplaceRule {
    pub(crate) fn new(a: f64, nodes: usize) -> Result<Self> {
        if !(a > -1.0) {
            return Err(invalid("power", format!("integrand t^{a} is not integrable at 0")));
        }
        Ok(Self { rule: QuadratureRule::gauss_laguerre(nodes, a)?, a })
    }

    pub(crate) fn eval<G: FnMut(Complex) -> Complex>(&self, s: Complex, mut g: G) -> Result<Complex> {
        if !(s.re > 0.0) {
            return Err(invalid("s", format!("Laplace variable needs Re s > 0, got {s}")));
        }
        let inv = s.inv();
        let sum = self.rule.integrate(|u| g(inv * u))?;
        Ok(sum * inv.powf(self.a + 1.0))
    }
}

/// Coherent state of level `n` at `p`:
/// `(Gamma(2B-n)/n!)^{-1/2} (t y)^{B-n} e^{-t(y - ix)/2} L_n^{(alpha)}(t y)`.
pub fn cs_wavefunction_hyp(spec: HyperLevelSpec, p: UpperHalfPoint, t: f64) -> Complex {
    if t <= 0.0 {
        return Complex::new(0.0, 0.0);
    }
    let ty = t * p.y;
    let modulus = spec.state_normalization() * ty.powf(spec.b - spec.n as f64) * (-ty / 2.0).exp()
        * laguerre_unchecked(spec.n, spec.alpha(), ty);
    Complex::from_polar(modulus, t * p.x / 2.0)
}

/// The coherent-state transform `W_{B,n}[f](z) = c_{B,n}^{-1/2} int conj(psi_z(t)) f(t) dt/t`
/// for one fixed `f`, reusable across many points.
#[derive(Debug, Clone)]
pub struct WTransform {
    spec: HyperLevelSpec,
    f: RadialFunction,
    laplace: LaplaceRule,
}

impl WTransform {
    pub fn new(spec: HyperLevelSpec, f: RadialFunction) -> Result<Self> {
        Self::with_nodes(spec, f, DEFAULT_NODES)
    }

    pub fn with_nodes(spec: HyperLevelSpec, f: RadialFunction, nodes: usize) -> Result<Self> {
        let a = spec.b - spec.n as f64 - 1.0 + f.power;
        Ok(Self { laplace: LaplaceRule::new(a, nodes)?, spec, f })
    }

    pub fn spec(&self) -> HyperLevelSpec {
        self.spec
    }

    pub fn eval(&self, p: UpperHalfPoint) -> Result<Complex> {
        let spec = self.spec;
        let s = Complex::new(p.y / 2.0 + self.f.rate(), p.x / 2.0);
        let (n, alpha, y) = (spec.n, spec.alpha(), p.y);
        let integral = self
            .laplace
            .eval(s, |t| laguerre_unchecked(n, alpha, t * y) * self.f.smooth(t))?;
        let pref = spec.c_bn().powf(-0.5) * spec.state_normalization() * y.powf(spec.b - spec.n as f64);
        Ok(integral * pref)
    }
}

/// One-shot [`WTransform`] evaluation.
pub fn transform_w(spec: HyperLevelSpec, f: &RadialFunction, p: UpperHalfPoint) -> Result<Complex> {
    WTransform::new(spec, f.clone())?.eval(p)
}

/// Bergman transform `Ber_nu[h](z) = int_0^inf t^{(nu+3)/2} h(t) e^{izt} dt` for one `h`.
#[derive(Debug, Clone)]
pub struct BergmanTransform {
    nu: f64,
    h: RadialFunction,
    laplace: LaplaceRule,
}

impl BergmanTransform {
    pub fn new(nu: f64, h: RadialFunction) -> Result<Self> {
        Self::with_nodes(nu, h, DEFAULT_NODES)
    }

    pub fn with_nodes(nu: f64, h: RadialFunction, nodes: usize) -> Result<Self> {
        if !(nu > 0.0) {
            return Err(invalid("nu", format!("must be positive, got {nu}")));
        }
        let a = (nu + 3.0) / 2.0 + h.power;
        Ok(Self { laplace: LaplaceRule::new(a, nodes)?, nu, h })
    }

    pub fn nu(&self) -> f64 {
        self.nu
    }

    /// Value at any `z` with `Im z + rate > 0`.
    pub fn eval_at(&self, z: Complex) -> Result<Complex> {
        self.derivative_at(z, 0)
    }

    pub fn eval(&self, z: UpperHalfPoint) -> Result<Complex> {
        self.eval_at(z.z())
    }

    /// `k`-th derivative by differentiating under the integral (`(it)^k` inserted).
    pub fn derivative_at(&self, z: Complex, k: usize) -> Result<Complex> {
        let s = Complex::new(z.im + self.h.rate(), -z.re);
        let ik = Complex::i().powu(k as u32);
        self.laplace.eval(s, |t| ik * t.powu(k as u32) * self.h.smooth(t))
    }
}

/// One-shot Bergman transform; requires `Im z > 0`.
pub fn bergman_transform(nu: f64, h: &RadialFunction, z: UpperHalfPoint) -> Result<Complex> {
    BergmanTransform::new(nu, h.clone())?.eval(z)
}
