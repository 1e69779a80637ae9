//! Classical orthogonal polynomials and hypergeometric sums.
//!
//! Everything here is evaluated by three-term recurrences. The explicit
//! power sums lose all accuracy once the degree passes about twenty.

use std::ops::{Add, Mul, Sub};

use crate::error::{invalid, Error, Result};

/// Field-like values the recurrences can run over (`f64` and `Complex64`).
pub trait Scalar:
    Copy + From<f64> + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Mul<f64, Output = Self>
{
}

impl<T> Scalar for T where
    T: Copy
        + From<f64>
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Mul<f64, Output = T>
{
}

/// Physicists' Hermite polynomial `H_n(t)`.
pub fn hermite_poly(n: usize, t: f64) -> f64 {
    hermite_poly_at(n, t)
}

/// `H_n` at a real or complex argument.
pub fn hermite_poly_at<T: Scalar>(n: usize, z: T) -> T {
    let mut prev = T::from(0.0);
    let mut cur = T::from(1.0);
    for k in 0..n {
        let next = z * cur * 2.0 - prev * (2.0 * k as f64);
        prev = cur;
        cur = next;
    }
    cur
}

/// Orthonormal Hermite polynomials `pi^{-1/4} (2^k k!)^{-1/2} H_k(z)` for `k = 0..=nmax`.
///
/// These are orthonormal against `e^{-t^2}`, so the weight can be pulled
/// into a Gauss-Hermite rule without ever forming `2^k k!`.
pub fn normalized_hermite_polys<T: Scalar>(nmax: usize, z: T) -> Vec<T> {
    let mut out = Vec::with_capacity(nmax + 1);
    out.push(T::from(std::f64::consts::PI.powf(-0.25)));
    if nmax >= 1 {
        out.push(z * (2.0f64.sqrt() * std::f64::consts::PI.powf(-0.25)));
    }
    for k in 1..nmax {
        let kf = k as f64;
        let next = z * out[k] * (2.0 / (kf + 1.0)).sqrt() - out[k - 1] * (kf / (kf + 1.0)).sqrt();
        out.push(next);
    }
    out
}

/// L²-normalized Hermite function `h_n(t) = (sqrt(pi) 2^n n!)^{-1/2} e^{-t^2/2} H_n(t)`.
pub fn hermite_function(n: usize, t: f64) -> f64 {
    hermite_functions(n, t)[n]
}

/// `h_0(t), ..., h_nmax(t)` in one pass.
pub fn hermite_functions(nmax: usize, t: f64) -> Vec<f64> {
    let g = (-0.5 * t * t).exp();
    normalized_hermite_polys(nmax, t).into_iter().map(|p| p * g).collect()
}

/// Generalized Laguerre polynomial `L_n^{(alpha)}(t)`; requires `alpha > -1`.
pub fn laguerre_poly(n: usize, alpha: f64, t: f64) -> Result<f64> {
    laguerre_poly_at(n, alpha, t)
}

/// `L_n^{(alpha)}` at a real or complex argument.
pub fn laguerre_poly_at<T: Scalar>(n: usize, alpha: f64, z: T) -> Result<T> {
    if !(alpha > -1.0) {
        return Err(invalid("alpha", format!("Laguerre parameter must exceed -1, got {alpha}")));
    }
    Ok(laguerre_unchecked(n, alpha, z))
}

pub(crate) fn laguerre_unchecked<T: Scalar>(n: usize, alpha: f64, z: T) -> T {
    let mut prev = T::from(0.0);
    let mut cur = T::from(1.0);
    for k in 0..n {
        let kf = k as f64;
        let next = (cur * (2.0 * kf + 1.0 + alpha) - z * cur - prev * (kf + alpha)) * (1.0 / (kf + 1.0));
        prev = cur;
        cur = next;
    }
    cur
}

/// Gauss hypergeometric series `2F1(a, b; c; x)`.
///
/// Terminating series (a or b a non-positive integer) are summed exactly for
/// any `x`. Otherwise `|x| < 1` is required.
pub fn gauss_2f1(a: f64, b: f64, c: f64, x: f64) -> Result<f64> {
    let terminating = [a, b]
        .iter()
        .filter_map(|&p| non_positive_integer(p))
        .min();
    if terminating.is_none() && x.abs() >= 1.0 {
        return Err(Error::DivergentSeries { x });
    }
    let mut sum = 1.0;
    let mut term = 1.0;
    let mut k = 0usize;
    loop {
        if let Some(last) = terminating {
            if k >= last {
                break;
            }
        }
        let kf = k as f64;
        let denom = (c + kf) * (kf + 1.0);
        if denom == 0.0 {
            return Err(invalid("c", format!("{c} is a non-positive integer reached before termination")));
        }
        term *= (a + kf) * (b + kf) / denom * x;
        sum += term;
        k += 1;
        if terminating.is_none() && (term.abs() <= f64::EPSILON * sum.abs() || k > 100_000) {
            break;
        }
    }
    Ok(sum)
}

fn non_positive_integer(p: f64) -> Option<usize> {
    (p <= 0.0 && p.fract() == 0.0).then(|| (-p) as usize)
}

/// Gamma function.
pub fn gamma(x: f64) -> f64 {
    statrs::function::gamma::gamma(x)
}

/// Natural log of the Gamma function for positive arguments.
pub fn ln_gamma(x: f64) -> f64 {
    statrs::function::gamma::ln_gamma(x)
}

/// `n!` as a float.
pub fn factorial(n: usize) -> f64 {
    (1..=n).fold(1.0, |acc, k| acc * k as f64)
}

/// Generalized binomial coefficient `C(a, k)` for real `a`.
pub fn binomial(a: f64, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (a - i as f64) / (i as f64 + 1.0))
}
