//! Laguerre wavelets on the frequency side.

use crate::numerics::special::laguerre_unchecked;
use crate::numerics::{binomial, factorial};

/// `F Phi_n^alpha(t) = t^{(alpha+1)/2} e^{-t} L_n^alpha(2t)`.
pub fn laguerre_wavelet_fourier(n: usize, alpha: f64, t: f64) -> f64 {
    t.powf((alpha + 1.0) / 2.0) * (-t).exp() * laguerre_unchecked(n, alpha, 2.0 * t)
}

/// `sum_k (-2)^k / k! C(n + alpha, n - k) F Phi_0^{alpha + 2k}(t)`, which equals
/// [`laguerre_wavelet_fourier`]: every level-`n` wavelet is a finite
/// combination of ground-level wavelets with shifted parameters.
pub fn laguerre_wavelet_decomposition(n: usize, alpha: f64, t: f64) -> f64 {
    (0..=n)
        .map(|k| {
            (-2f64).powi(k as i32) / factorial(k)
                * binomial(n as f64 + alpha, n - k)
                * laguerre_wavelet_fourier(0, alpha + 2.0 * k as f64, t)
        })
        .sum()
}
