//! Dense Hermitian eigensolver (cyclic complex Jacobi).

use num_complex::Complex64;

use crate::error::{invalid, Error, Result};

const HERMITIAN_TOL: f64 = 1e-12;
const MAX_SWEEPS: usize = 100;

/// Square Hermitian matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianMatrix {
    dim: usize,
    entries: Vec<Complex64>,
}

impl HermitianMatrix {
    /// Validates `entries[j][k] = conj(entries[k][j])` to 1e-12 relative to the
    /// Frobenius norm, then stores the exactly symmetrized matrix.
    pub fn new(dim: usize, entries: Vec<Complex64>) -> Result<Self> {
        if dim == 0 {
            return Err(invalid("dim", "must be positive"));
        }
        if entries.len() != dim * dim {
            return Err(invalid("entries", format!("expected {} values, got {}", dim * dim, entries.len())));
        }
        if let Some(bad) = entries.iter().position(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(invalid("entries", format!("non-finite value at flat index {bad}")));
        }
        let norm = entries.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        let tol = HERMITIAN_TOL * norm.max(f64::MIN_POSITIVE);
        let mut sym = entries;
        for j in 0..dim {
            for k in j..dim {
                let a = sym[j * dim + k];
                let b = sym[k * dim + j].conj();
                let deviation = (a - b).norm();
                if deviation > tol {
                    return Err(Error::NotHermitian { row: j, col: k, deviation });
                }
                let avg = (a + b) * 0.5;
                sym[j * dim + k] = avg;
                sym[k * dim + j] = avg.conj();
            }
        }
        Ok(Self { dim, entries: sym })
    }

    pub fn from_fn<F: FnMut(usize, usize) -> Complex64>(dim: usize, mut f: F) -> Result<Self> {
        let entries = (0..dim * dim).map(|i| f(i / dim, i % dim)).collect();
        Self::new(dim, entries)
    }

    pub fn identity(dim: usize) -> Self {
        Self::diagonal(&vec![1.0; dim])
    }

    pub fn diagonal(values: &[f64]) -> Self {
        let dim = values.len();
        let mut entries = vec![Complex64::new(0.0, 0.0); dim * dim];
        for (i, &v) in values.iter().enumerate() {
            entries[i * dim + i] = Complex64::new(v, 0.0);
        }
        Self { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row * self.dim + col]
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Leading `k x k` principal submatrix.
    pub fn leading(&self, k: usize) -> Result<Self> {
        if k == 0 || k > self.dim {
            return Err(invalid("k", format!("compression size must be in 1..={}", self.dim)));
        }
        let entries = (0..k * k).map(|i| self.get(i / k, i % k)).collect();
        Ok(Self { dim: k, entries })
    }
}

/// Eigenvalues (ascending) and orthonormal eigenvectors.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenDecomposition {
    pub values: Vec<f64>,
    /// Row-major `dim x dim`; column `j` is the eigenvector of `values[j]`.
    pub vectors: Vec<Complex64>,
}

impl EigenDecomposition {
    pub fn dim(&self) -> usize {
        self.values.len()
    }

    pub fn vector(&self, j: usize) -> Vec<Complex64> {
        let n = self.dim();
        (0..n).map(|i| self.vectors[i * n + j]).collect()
    }

    /// `V diag(values) V*`, row-major.
    pub fn reconstruct(&self) -> Vec<Complex64> {
        let n = self.dim();
        let mut out = vec![Complex64::new(0.0, 0.0); n * n];
        for r in 0..n {
            for c in 0..n {
                out[r * n + c] = (0..n)
                    .map(|k| self.vectors[r * n + k] * self.values[k] * self.vectors[c * n + k].conj())
                    .sum();
            }
        }
        out
    }
}

/// Diagonalizes a Hermitian matrix by cyclic Jacobi sweeps.
///
/// Each rotation first removes the phase of the pivot with a diagonal
/// unitary, then applies the usual real symmetric rotation.
pub fn eigh(m: &HermitianMatrix) -> Result<EigenDecomposition> {
    let n = m.dim;
    let mut a = m.entries.clone();
    let mut v = vec![Complex64::new(0.0, 0.0); n * n];
    for i in 0..n {
        v[i * n + i] = Complex64::new(1.0, 0.0);
    }
    let scale = m.frobenius_norm();
    let target = (f64::EPSILON * scale).powi(2);
    let mut converged = n == 1 || scale == 0.0;
    for _ in 0..MAX_SWEEPS {
        if converged {
            break;
        }
        let off: f64 = (0..n)
            .flat_map(|p| (p + 1..n).map(move |q| (p, q)))
            .map(|(p, q)| a[p * n + q].norm_sqr())
            .sum();
        if off <= target {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                let r = apq.norm();
                if r == 0.0 {
                    continue;
                }
                let app = a[p * n + p].re;
                let aqq = a[q * n + q].re;
                if r < f64::EPSILON * 1e-3 * (app.abs() + aqq.abs()) {
                    a[p * n + q] = Complex64::new(0.0, 0.0);
                    a[q * n + p] = Complex64::new(0.0, 0.0);
                    continue;
                }
                let phase = apq / r;
                let theta = (aqq - app) / (2.0 * r);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                let ph = phase.conj();
                // columns: A <- A U, V <- V U
                for mat in [&mut a, &mut v] {
                    for k in 0..n {
                        let kp = mat[k * n + p];
                        let kq = mat[k * n + q];
                        mat[k * n + p] = kp * c - kq * ph * s;
                        mat[k * n + q] = kp * s + kq * ph * c;
                    }
                }
                // rows: A <- U* A
                for k in 0..n {
                    let pk = a[p * n + k];
                    let qk = a[q * n + k];
                    a[p * n + k] = pk * c - qk * phase * s;
                    a[q * n + k] = pk * s + qk * phase * c;
                }
                a[p * n + q] = Complex64::new(0.0, 0.0);
                a[q * n + p] = Complex64::new(0.0, 0.0);
                a[p * n + p] = Complex64::new(a[p * n + p].re, 0.0);
                a[q * n + q] = Complex64::new(a[q * n + q].re, 0.0);
            }
        }
    }
    if !converged {
        let off: f64 = (0..n)
            .flat_map(|p| (p + 1..n).map(move |q| (p, q)))
            .map(|(p, q)| a[p * n + q].norm_sqr())
            .sum();
        if off > target * 1e6 {
            return Err(Error::NoConvergence { sweeps: MAX_SWEEPS });
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[i * n + i].re.total_cmp(&a[j * n + j].re));
    let values = order.iter().map(|&i| a[i * n + i].re).collect();
    let mut vectors = vec![Complex64::new(0.0, 0.0); n * n];
    for (new, &old) in order.iter().enumerate() {
        for r in 0..n {
            vectors[r * n + new] = v[r * n + old];
        }
    }
    Ok(EigenDecomposition { values, vectors })
}
