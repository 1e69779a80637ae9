//! Modular forms for `PSL(2, Z)` from exact q-expansions.
//!
//! Weights follow the cocycle `(cz+d)^{-2m}`: a form of weight `m` here has
//! classical weight `2m`, so `E4` has `m = 2`, `E6` has `m = 3` and `Delta` has `m = 6`.

use std::f64::consts::PI;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::hyperbolic::UpperHalfPoint;
use crate::numerics::Complex;

use super::moebius::reduce_to_fundamental;

/// Absolute tolerance on the truncated tail used by [`eval_form`].
pub const EVAL_TOLERANCE: f64 = 1e-14;

/// Truncated q-series `sum_{k < N} a_k q^k` of a weight-`m` form.
#[derive(Debug, Clone, PartialEq)]
pub struct QExpansion {
    weight_m: i64,
    coefficients: Vec<BigInt>,
    values: Vec<f64>,
    growth: f64,
    name: String,
}

impl QExpansion {
    pub fn new(weight_m: i64, coefficients: Vec<BigInt>) -> Result<Self> {
        if weight_m < 0 {
            return Err(invalid("weight_m", format!("must be non-negative, got {weight_m}")));
        }
        if coefficients.is_empty() {
            return Err(invalid("coefficients", "need at least one coefficient"));
        }
        let values: Vec<f64> = coefficients.iter().map(|c| c.to_f64().unwrap_or(f64::INFINITY)).collect();
        let growth = values
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, a)| a.abs() / (k as f64).powi(2 * weight_m as i32))
            .fold(0.0, f64::max);
        Ok(Self { weight_m, coefficients, values, growth, name: format!("q-series of weight {weight_m}") })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn weight_m(&self) -> i64 {
        self.weight_m
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    pub fn truncation(&self) -> usize {
        self.coefficients.len()
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Product, truncated to the shorter of the two expansions.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.truncation().min(other.truncation());
        let mut c = vec![BigInt::zero(); n];
        for (i, a) in self.coefficients.iter().take(n).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coefficients.iter().take(n - i).enumerate() {
                c[i + j] += a * b;
            }
        }
        Self::new(self.weight_m + other.weight_m, c).expect("weights and lengths stay valid")
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut one = vec![BigInt::zero(); self.truncation()];
        one[0] = BigInt::from(1);
        let mut acc = Self::new(0, one).expect("constant series");
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// `self - other`; both must have the same weight.
    pub fn sub(&self, other: &Self) -> Result<Self> {
        if self.weight_m != other.weight_m {
            return Err(invalid("weight_m", format!("cannot subtract weight {} from weight {}", other.weight_m, self.weight_m)));
        }
        let n = self.truncation().min(other.truncation());
        let c = (0..n).map(|k| &self.coefficients[k] - &other.coefficients[k]).collect();
        Self::new(self.weight_m, c)
    }

    pub fn scale(&self, s: &BigInt) -> Self {
        let c = self.coefficients.iter().map(|a| a * s).collect();
        Self::new(self.weight_m, c).expect("same shape")
    }

    /// Division by an integer that must divide every coefficient.
    pub fn exact_div(&self, s: &BigInt) -> Result<Self> {
        if s.is_zero() {
            return Err(invalid("divisor", "division by zero"));
        }
        let mut c = Vec::with_capacity(self.truncation());
        for (k, a) in self.coefficients.iter().enumerate() {
            if !(a % s).is_zero() {
                return Err(invalid("divisor", format!("{s} does not divide coefficient {k} = {a}")));
            }
            c.push(a / s);
        }
        Self::new(self.weight_m, c)
    }

    /// Partial sum at `q` by Horner's rule.
    pub fn series(&self, q: Complex) -> Complex {
        self.values.iter().rev().fold(Complex::new(0.0, 0.0), |acc, &a| acc * q + a)
    }

    /// Bound on the omitted tail at `|q| = r`, assuming `|a_k| <= C k^{2m}` with `C`
    /// the largest ratio among the known coefficients.
    pub fn tail_bound(&self, r: f64) -> f64 {
        let n = self.truncation() as f64;
        let ratio = r * (2.0 * self.weight_m as f64 / n).exp();
        if ratio >= 1.0 {
            return f64::INFINITY;
        }
        self.growth * n.powi(2 * self.weight_m as i32) * r.powf(n) / (1.0 - ratio)
    }

    /// Smallest truncation whose tail bound at `|q| = r` is below `tol`.
    pub fn required_truncation(&self, r: f64, tol: f64) -> usize {
        let mut probe = self.clone();
        let mut n = self.truncation();
        while n < 100_000 {
            n += 1;
            probe.values.push(0.0);
            probe.coefficients.push(BigInt::zero());
            if probe.tail_bound(r) <= tol {
                break;
            }
        }
        n
    }
}

/// Something that transforms like a weight-`m` form under `PSL(2, Z)`.
pub trait AutomorphicForm: Sync {
    fn weight_m(&self) -> i64;
    fn eval(&self, z: UpperHalfPoint) -> Result<Complex>;
    fn name(&self) -> String;
}

impl AutomorphicForm for QExpansion {
    fn weight_m(&self) -> i64 {
        self.weight_m
    }

    fn eval(&self, z: UpperHalfPoint) -> Result<Complex> {
        eval_form(self, z)
    }

    fn name(&self) -> String {
        self.name.clone()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Eisenstein {
    E4,
    E6,
}

impl fmt::Display for Eisenstein {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::E4 => "E4",
            Self::E6 => "E6",
        })
    }
}

fn divisor_power_sum(k: u64, p: u32) -> BigInt {
    let mut s = BigInt::zero();
    let mut d = 1;
    while d * d <= k {
        if k.is_multiple_of(d) {
            s += BigInt::from(d).pow(p);
            let e = k / d;
            if e != d {
                s += BigInt::from(e).pow(p);
            }
        }
        d += 1;
    }
    s
}

/// `E4 = 1 + 240 sum sigma_3(k) q^k` or `E6 = 1 - 504 sum sigma_5(k) q^k`,
/// with `truncation` coefficients.
pub fn eisenstein(series: Eisenstein, truncation: usize) -> Result<QExpansion> {
    if truncation < 1 {
        return Err(invalid("truncation", "must be at least 1"));
    }
    let (m, scale, p) = match series {
        Eisenstein::E4 => (2, 240, 3),
        Eisenstein::E6 => (3, -504, 5),
    };
    let mut c = Vec::with_capacity(truncation);
    c.push(BigInt::from(1));
    for k in 1..truncation as u64 {
        c.push(divisor_power_sum(k, p) * scale);
    }
    Ok(QExpansion::new(m, c)?.with_name(series.to_string()))
}

/// `Delta = (E4^3 - E6^2) / 1728`, weight `m = 6`.
pub fn delta_cusp_form(truncation: usize) -> Result<QExpansion> {
    if truncation < 2 {
        return Err(invalid("truncation", "must be at least 2"));
    }
    let e4 = eisenstein(Eisenstein::E4, truncation)?;
    let e6 = eisenstein(Eisenstein::E6, truncation)?;
    Ok(e4.pow(3).sub(&e6.pow(2))?.exact_div(&BigInt::from(1728))?.with_name("Delta"))
}

/// Value at `z`, with the default tail tolerance.
pub fn eval_form(f: &QExpansion, z: UpperHalfPoint) -> Result<Complex> {
    eval_form_with_tolerance(f, z, EVAL_TOLERANCE)
}

/// Reduces `z` to the fundamental domain, sums the series there and
/// transports back with the cocycle `(cz+d)^{-2m}`.
pub fn eval_form_with_tolerance(f: &QExpansion, z: UpperHalfPoint, tol: f64) -> Result<Complex> {
    let (w, g) = reduce_to_fundamental(z);
    let q = Complex::from_polar((-2.0 * PI * w.y).exp(), 2.0 * PI * w.x);
    let bound = f.tail_bound(q.norm());
    if !(bound <= tol) {
        return Err(Error::TruncationTooShort { bound, tol, required: f.required_truncation(q.norm(), tol) });
    }
    Ok(f.series(q) * g.cocycle(z.z()).powi(-2 * f.weight_m as i32))
}

/// `alpha f1 + beta f2` with `(alpha, beta) = (f2(zeta0), -f1(zeta0))`, which vanishes at `zeta0`.
#[derive(Debug, Clone)]
pub struct FormPencil {
    f1: QExpansion,
    f2: QExpansion,
    alpha: Complex,
    beta: Complex,
}

impl FormPencil {
    pub fn new(f1: QExpansion, f2: QExpansion, zeta0: UpperHalfPoint) -> Result<Self> {
        if f1.weight_m != f2.weight_m {
            return Err(invalid("weight_m", format!("pencil needs equal weights, got {} and {}", f1.weight_m, f2.weight_m)));
        }
        let v1 = eval_form(&f1, zeta0)?;
        let v2 = eval_form(&f2, zeta0)?;
        let (alpha, beta) = if v1.norm() == 0.0 && v2.norm() == 0.0 {
            (Complex::new(1.0, 0.0), Complex::new(0.0, 0.0))
        } else {
            let s = v1.norm().hypot(v2.norm());
            (v2 / s, -v1 / s)
        };
        Ok(Self { f1, f2, alpha, beta })
    }

    pub fn coefficients(&self) -> (Complex, Complex) {
        (self.alpha, self.beta)
    }
}

impl AutomorphicForm for FormPencil {
    fn weight_m(&self) -> i64 {
        self.f1.weight_m
    }

    fn eval(&self, z: UpperHalfPoint) -> Result<Complex> {
        Ok(self.alpha * eval_form(&self.f1, z)? + self.beta * eval_form(&self.f2, z)?)
    }

    fn name(&self) -> String {
        format!("({})*{} + ({})*{}", self.alpha, self.f1.name, self.beta, self.f2.name)
    }
}
