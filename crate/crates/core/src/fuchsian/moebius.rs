//! Integer Moebius transformations and reduction to the standard fundamental domain.

use std::fmt;
use std::ops::Mul;

use serde::Serialize;

use crate::error::{invalid, Result};
use crate::hyperbolic::UpperHalfPoint;
use crate::numerics::Complex;

/// Element of `PSL(2, Z)`: `ad - bc = 1`, with `g` and `-g` identified by
/// making the first nonzero entry positive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct MoebiusElement {
    a: i64,
    b: i64,
    c: i64,
    d: i64,
}

impl MoebiusElement {
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        let det = a as i128 * d as i128 - b as i128 * c as i128;
        if det != 1 {
            return Err(invalid("matrix", format!("determinant of ({a} {b}; {c} {d}) is {det}, not 1")));
        }
        Ok(Self::canonical(a, b, c, d))
    }

    fn canonical(a: i64, b: i64, c: i64, d: i64) -> Self {
        let first = [a, b, c, d].into_iter().find(|&v| v != 0).unwrap_or(1);
        if first < 0 {
            Self { a: -a, b: -b, c: -c, d: -d }
        } else {
            Self { a, b, c, d }
        }
    }

    pub const fn identity() -> Self {
        Self { a: 1, b: 0, c: 0, d: 1 }
    }

    /// `z -> -1/z`, stored in canonical sign as `(0 1; -1 0)`.
    pub const fn s() -> Self {
        Self { a: 0, b: 1, c: -1, d: 0 }
    }

    /// `z -> z + 1`.
    pub const fn t() -> Self {
        Self { a: 1, b: 1, c: 0, d: 1 }
    }

    /// `z -> z - 1`.
    pub const fn t_inv() -> Self {
        Self { a: 1, b: -1, c: 0, d: 1 }
    }

    /// `z -> z + k`.
    pub const fn translation(k: i64) -> Self {
        Self { a: 1, b: k, c: 0, d: 1 }
    }

    pub fn entries(&self) -> [i64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    /// Product `self * other` (apply `other` first). Panics if an entry leaves `i64`.
    pub fn compose(&self, o: &Self) -> Self {
        let m = |x: i64, y: i64, u: i64, v: i64| {
            x.checked_mul(y)
                .and_then(|p| u.checked_mul(v).and_then(|q| p.checked_add(q)))
                .expect("Moebius matrix entries overflow i64")
        };
        Self::canonical(
            m(self.a, o.a, self.b, o.c),
            m(self.a, o.b, self.b, o.d),
            m(self.c, o.a, self.d, o.c),
            m(self.c, o.b, self.d, o.d),
        )
    }

    pub fn inverse(&self) -> Self {
        Self::canonical(self.d, -self.b, -self.c, self.a)
    }

    /// `cz + d`.
    pub fn cocycle(&self, z: Complex) -> Complex {
        z * self.c as f64 + self.d as f64
    }

    /// `(az + b)/(cz + d)` with the imaginary part taken as `Im z / |cz + d|^2`.
    pub fn apply(&self, z: UpperHalfPoint) -> UpperHalfPoint {
        let w = self.apply_complex(z.z());
        UpperHalfPoint { x: w.re, y: w.im }
    }

    pub fn apply_complex(&self, z: Complex) -> Complex {
        let (a, b, c, d) = (self.a as f64, self.b as f64, self.c as f64, self.d as f64);
        let (x, y) = (z.re, z.im);
        let den = (c * x + d).powi(2) + (c * y).powi(2);
        let re = ((a * x + b) * (c * x + d) + a * c * y * y) / den;
        Complex::new(re, y / den)
    }

    /// Whether `g = +-I (mod n)`, i.e. `g` lies in the principal congruence subgroup of level `n`.
    pub fn is_congruent_to_identity(&self, n: u32) -> bool {
        let n = n as i64;
        if n <= 1 {
            return true;
        }
        let r = |v: i64| v.rem_euclid(n);
        let plus = r(self.a) == 1 % n && r(self.b) == 0 && r(self.c) == 0 && r(self.d) == 1 % n;
        let minus = r(self.a) == r(-1) && r(self.b) == 0 && r(self.c) == 0 && r(self.d) == r(-1);
        plus || minus
    }
}

impl Mul for MoebiusElement {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        self.compose(&rhs)
    }
}

impl fmt::Display for MoebiusElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} {}; {} {})", self.a, self.b, self.c, self.d)
    }
}

pub fn moebius_apply(g: &MoebiusElement, z: UpperHalfPoint) -> UpperHalfPoint {
    g.apply(z)
}

/// Membership in `{|z| >= 1, |Re z| <= 1/2}` up to `tol`.
pub fn in_fundamental_domain(z: UpperHalfPoint, tol: f64) -> bool {
    z.x.abs() <= 0.5 + tol && z.x * z.x + z.y * z.y >= 1.0 - tol
}

/// Returns `(g z, g)` with `g z` in the fundamental domain and `Re(g z)` in `(-1/2, 1/2]`.
///
/// Alternates a translation into the strip with `S` whenever `|z| < 1`;
/// each inversion strictly increases `Im z`, so the loop terminates.
pub fn reduce_to_fundamental(z: UpperHalfPoint) -> (UpperHalfPoint, MoebiusElement) {
    let mut g = MoebiusElement::identity();
    let mut w = z;
    for _ in 0..10_000 {
        let k = (w.x - 0.5).ceil();
        if k != 0.0 {
            let shift = MoebiusElement::translation(-(k as i64));
            g = shift * g;
            w = UpperHalfPoint { x: w.x - k, y: w.y };
        }
        if w.x * w.x + w.y * w.y < 1.0 {
            g = MoebiusElement::s() * g;
            w = MoebiusElement::s().apply(w);
        } else {
            break;
        }
    }
    (w, g)
}
