//! Gauss-Hermite, generalized Gauss-Laguerre and trapezoid rules.
//!
//! Gaussian nodes are eigenvalues of the Jacobi matrix of the three-term
//! recurrence, located by Sturm-sequence bisection and polished with Newton
//! steps. Weights come from the Christoffel-Darboux sum
//! `w_i = 1 / sum_k p_k(x_i)^2` over orthonormal polynomials, evaluated in a
//! scaled form so nothing overflows at the outer nodes.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::numerics::special::ln_gamma;

/// Default number of nodes for the Gaussian rules.
pub const DEFAULT_NODES: usize = 128;

/// Which rule produced the nodes, and therefore which weight is implicit.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum RuleKind {
    /// Implicit weight `e^{-t^2}` on the real line.
    GaussHermite,
    /// Implicit weight `t^alpha e^{-t}` on the half-line.
    GaussLaguerre { alpha: f64 },
    /// No implicit weight; composite trapezoid on `[a, b]`.
    Trapezoid { a: f64, b: f64 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
    kind: RuleKind,
}

impl QuadratureRule {
    /// `n`-point Gauss-Hermite rule for `int f(t) e^{-t^2} dt`.
    pub fn gauss_hermite(n: usize) -> Result<Self> {
        let (nodes, weights, _) = hermite_nodes_weights(n)?;
        Ok(Self { nodes, weights, kind: RuleKind::GaussHermite })
    }

    /// `n`-point generalized Gauss-Laguerre rule for `int_0^inf f(t) t^alpha e^{-t} dt`.
    pub fn gauss_laguerre(n: usize, alpha: f64) -> Result<Self> {
        if n == 0 {
            return Err(invalid("n", "a Gaussian rule needs at least one node"));
        }
        if !(alpha > -1.0) || !alpha.is_finite() {
            return Err(invalid("alpha", format!("must be finite and exceed -1, got {alpha}")));
        }
        let diag: Vec<f64> = (0..n).map(|k| 2.0 * k as f64 + alpha + 1.0).collect();
        let off: Vec<f64> = (1..n).map(|k| (k as f64 * (k as f64 + alpha)).sqrt()).collect();
        let nodes = jacobi_eigenvalues(&diag, &off);
        let ln_mu0 = ln_gamma(alpha + 1.0);
        let weights = nodes
            .iter()
            .map(|&x| {
                // Orthonormal p_k scaled by sqrt(x^alpha e^{-x}) stay O(1).
                let ln_scale = 0.5 * (alpha * x.ln() - x);
                let start = (ln_scale - 0.5 * ln_mu0).exp();
                let s = sum_squares(&diag, &off, x, start);
                (2.0 * ln_scale).exp() / s
            })
            .collect();
        Ok(Self { nodes, weights, kind: RuleKind::GaussLaguerre { alpha } })
    }

    /// Composite trapezoid rule with `n >= 2` equispaced points on `[a, b]`.
    pub fn trapezoid(n: usize, a: f64, b: f64) -> Result<Self> {
        if n < 2 {
            return Err(invalid("n", "trapezoid rule needs at least two points"));
        }
        if !(b > a) || !a.is_finite() || !b.is_finite() {
            return Err(invalid("interval", format!("need finite a < b, got [{a}, {b}]")));
        }
        let h = (b - a) / (n - 1) as f64;
        let nodes = (0..n).map(|i| if i == n - 1 { b } else { a + h * i as f64 }).collect();
        let weights = (0..n).map(|i| if i == 0 || i == n - 1 { 0.5 * h } else { h }).collect();
        Ok(Self { nodes, weights, kind: RuleKind::Trapezoid { a, b } })
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn kind(&self) -> RuleKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// `sum_i w_i f(t_i)`; the rule's weight function is implicit.
    pub fn integrate<F: FnMut(f64) -> Complex64>(&self, mut f: F) -> Result<Complex64> {
        let mut acc = Complex64::new(0.0, 0.0);
        for (index, (&t, &w)) in self.nodes.iter().zip(&self.weights).enumerate() {
            let v = f(t);
            if !v.re.is_finite() || !v.im.is_finite() {
                return Err(Error::NonFiniteIntegrand { index, node: t });
            }
            acc += v * w;
        }
        Ok(acc)
    }

    /// Real-valued variant of [`QuadratureRule::integrate`].
    pub fn integrate_real<F: FnMut(f64) -> f64>(&self, mut f: F) -> Result<f64> {
        self.integrate(|t| Complex64::new(f(t), 0.0)).map(|z| z.re)
    }
}

/// Free-function form of [`QuadratureRule::integrate`].
pub fn integrate<F: FnMut(f64) -> Complex64>(rule: &QuadratureRule, f: F) -> Result<Complex64> {
    rule.integrate(f)
}

/// Gauss-Hermite nodes together with the Gaussian-factored weights
/// `w_i e^{t_i^2}`, so `int g(t) dt ~ sum W_i g(t_i)` for `g` that decays like a Gaussian.
#[derive(Debug, Clone, PartialEq)]
pub struct HermiteRule {
    rule: QuadratureRule,
    scaled: Vec<f64>,
}

impl HermiteRule {
    pub fn new(n: usize) -> Result<Self> {
        let (nodes, weights, scaled) = hermite_nodes_weights(n)?;
        Ok(Self {
            rule: QuadratureRule { nodes, weights, kind: RuleKind::GaussHermite },
            scaled,
        })
    }

    pub fn rule(&self) -> &QuadratureRule {
        &self.rule
    }

    pub fn nodes(&self) -> &[f64] {
        self.rule.nodes()
    }

    /// `w_i e^{t_i^2}`.
    pub fn scaled_weights(&self) -> &[f64] {
        &self.scaled
    }

    /// `int g(t) dt` for an integrand that carries its own Gaussian decay.
    pub fn integrate_unweighted<F: FnMut(f64) -> Complex64>(&self, mut g: F) -> Result<Complex64> {
        let mut acc = Complex64::new(0.0, 0.0);
        for (index, (&t, &w)) in self.nodes().iter().zip(&self.scaled).enumerate() {
            let v = g(t);
            if !v.re.is_finite() || !v.im.is_finite() {
                return Err(Error::NonFiniteIntegrand { index, node: t });
            }
            acc += v * w;
        }
        Ok(acc)
    }
}

fn hermite_nodes_weights(n: usize) -> Result<(Vec<f64>, Vec<f64>, Vec<f64>)> {
    if n == 0 {
        return Err(invalid("n", "a Gaussian rule needs at least one node"));
    }
    let diag = vec![0.0; n];
    let off: Vec<f64> = (1..n).map(|k| (k as f64 / 2.0).sqrt()).collect();
    let mut nodes = jacobi_eigenvalues(&diag, &off);
    // Exact symmetry about the origin.
    for i in 0..n / 2 {
        let x = 0.5 * (nodes[n - 1 - i] - nodes[i]);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
    let mut weights = Vec::with_capacity(n);
    let mut scaled = Vec::with_capacity(n);
    for &x in &nodes {
        // Orthonormal p_k times e^{-x^2/2} are the Hermite functions.
        let start = std::f64::consts::PI.powf(-0.25) * (-0.5 * x * x).exp();
        let s = sum_squares(&diag, &off, x, start);
        scaled.push(1.0 / s);
        weights.push((-x * x).exp() / s);
    }
    Ok((nodes, weights, scaled))
}

/// `sum_{k<n} q_k(x)^2` where `q_k` follows the orthonormal recurrence of
/// the Jacobi matrix with `q_0 = start`.
fn sum_squares(diag: &[f64], off: &[f64], x: f64, start: f64) -> f64 {
    let n = diag.len();
    let mut prev = 0.0;
    let mut cur = start;
    let mut acc = cur * cur;
    for k in 0..n - 1 {
        let b_prev = if k == 0 { 0.0 } else { off[k - 1] };
        let next = ((x - diag[k]) * cur - b_prev * prev) / off[k];
        prev = cur;
        cur = next;
        acc += cur * cur;
    }
    acc
}

/// Eigenvalues of the symmetric tridiagonal matrix, ascending.
fn jacobi_eigenvalues(diag: &[f64], off: &[f64]) -> Vec<f64> {
    let n = diag.len();
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for i in 0..n {
        let r = if i > 0 { off[i - 1].abs() } else { 0.0 } + if i + 1 < n { off[i].abs() } else { 0.0 };
        lo = lo.min(diag[i] - r);
        hi = hi.max(diag[i] + r);
    }
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        // Smallest x with more than i eigenvalues below it.
        let (mut a, mut b) = (lo, hi);
        loop {
            let mid = 0.5 * (a + b);
            if mid <= a || mid >= b {
                break;
            }
            if sturm_count(diag, off, mid) > i {
                b = mid;
            } else {
                a = mid;
            }
        }
        out.push(newton_polish(diag, off, 0.5 * (a + b), a, b));
    }
    out
}

/// Number of eigenvalues strictly below `x`.
fn sturm_count(diag: &[f64], off: &[f64], x: f64) -> usize {
    let mut count = 0;
    let mut q = diag[0] - x;
    if q < 0.0 {
        count += 1;
    }
    for k in 1..diag.len() {
        let d = if q == 0.0 { f64::EPSILON * off[k - 1].abs().max(1.0) } else { q };
        q = diag[k] - x - off[k - 1] * off[k - 1] / d;
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// Newton on the characteristic polynomial, kept inside the bisection bracket.
fn newton_polish(diag: &[f64], off: &[f64], mut x: f64, a: f64, b: f64) -> f64 {
    let width = (b - a).abs().max(f64::EPSILON * x.abs());
    for _ in 0..3 {
        let (p, dp) = char_poly(diag, off, x);
        if dp == 0.0 || !p.is_finite() || !dp.is_finite() {
            break;
        }
        let next = x - p / dp;
        if (next - x).abs() > 4.0 * width {
            break;
        }
        x = next;
    }
    x
}

/// Monic-free orthonormal recurrence value and derivative at `x`; only their ratio matters.
fn char_poly(diag: &[f64], off: &[f64], x: f64) -> (f64, f64) {
    let n = diag.len();
    let (mut p_prev, mut p) = (0.0, 1.0);
    let (mut d_prev, mut d) = (0.0, 0.0);
    for k in 0..n {
        let b_prev = if k == 0 { 0.0 } else { off[k - 1] };
        let b_next = if k + 1 < n { off[k] } else { 1.0 };
        let p_next = ((x - diag[k]) * p - b_prev * p_prev) / b_next;
        let d_next = ((x - diag[k]) * d + p - b_prev * d_prev) / b_next;
        p_prev = p;
        p = p_next;
        d_prev = d;
        d = d_next;
    }
    (p, d)
}
