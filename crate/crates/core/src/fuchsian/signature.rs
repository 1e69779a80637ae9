//! Signatures of Fuchsian groups and the formulas that only depend on them.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Order of an elliptic cycle, or a parabolic (cusp) cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Order {
    Finite(u32),
    Cusp,
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Finite(e) => write!(f, "{e}"),
            Self::Cusp => f.write_str("inf"),
        }
    }
}

/// `(genus, r, e_1..e_r)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupSignature {
    genus: u32,
    orders: Vec<Order>,
}

impl GroupSignature {
    /// Elliptic orders must be at least 2. Positivity of the area is checked
    /// by [`fundamental_area`], not here.
    pub fn new(genus: u32, orders: Vec<Order>) -> Result<Self> {
        if let Some(bad) = orders.iter().find(|o| matches!(o, Order::Finite(e) if *e < 2)) {
            return Err(Error::InvalidSignature(format!("elliptic order {bad} must be at least 2")));
        }
        Ok(Self { genus, orders })
    }

    /// `PSL(2, Z)`: genus 0, orders `2, 3, inf`.
    pub fn modular() -> Self {
        Self { genus: 0, orders: vec![Order::Finite(2), Order::Finite(3), Order::Cusp] }
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn r(&self) -> usize {
        self.orders.len()
    }

    pub fn orders(&self) -> &[Order] {
        &self.orders
    }

    /// `sum (1 - 1/e)`, with cusps contributing 1.
    fn defect(&self) -> Ratio<i64> {
        self.orders
            .iter()
            .map(|o| match o {
                Order::Finite(e) => Ratio::one() - Ratio::new(1, *e as i64),
                Order::Cusp => Ratio::one(),
            })
            .sum()
    }
}

impl FromStr for GroupSignature {
    type Err = Error;

    /// `"g,r,e1,...,er"` with `inf` (or `oo`) for cusps, e.g. `"0,3,2,3,inf"`.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        let bad = |what: &str| Error::InvalidSignature(format!("{what} in {s:?}"));
        if parts.len() < 2 {
            return Err(bad("expected at least genus and r"));
        }
        let genus: u32 = parts[0].parse().map_err(|_| bad("unreadable genus"))?;
        let r: usize = parts[1].parse().map_err(|_| bad("unreadable cycle count"))?;
        if parts.len() - 2 != r {
            return Err(bad(&format!("cycle count {r} but {} orders", parts.len() - 2)));
        }
        let orders = parts[2..]
            .iter()
            .map(|p| match p.to_ascii_lowercase().as_str() {
                "inf" | "oo" | "infinity" => Ok(Order::Cusp),
                other => other.parse::<u32>().map(Order::Finite).map_err(|_| bad(&format!("unreadable order {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(genus, orders)
    }
}

impl fmt::Display for GroupSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.genus, self.orders.len())?;
        for o in &self.orders {
            write!(f, ",{o}")?;
        }
        Ok(())
    }
}

/// Exact rational multiple of pi.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PiMultiple(pub Ratio<i64>);

impl PiMultiple {
    pub fn coefficient(&self) -> Ratio<i64> {
        self.0
    }

    pub fn value(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN) * std::f64::consts::PI
    }
}

impl fmt::Display for PiMultiple {
    /// `pi/3`, `4*pi`, `2*pi/21`, `-pi`, `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (p, q) = (*self.0.numer(), *self.0.denom());
        if p.is_zero() {
            return f.write_str("0");
        }
        let sign = if p < 0 { "-" } else { "" };
        let head = if p.abs() == 1 { "pi".to_string() } else { format!("{}*pi", p.abs()) };
        if q == 1 {
            write!(f, "{sign}{head}")
        } else {
            write!(f, "{sign}{head}/{q}")
        }
    }
}

impl Serialize for PiMultiple {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Hyperbolic area `2 pi [2G - 2 + sum (1 - 1/e_l)]` of a fundamental domain.
pub fn fundamental_area(sig: &GroupSignature) -> Result<PiMultiple> {
    let coeff = (Ratio::from_integer(2 * sig.genus as i64 - 2) + sig.defect()) * 2;
    if coeff <= Ratio::zero() {
        return Err(Error::InvalidSignature(format!("signature {sig} has non-positive area {}", PiMultiple(coeff))));
    }
    Ok(PiMultiple(coeff))
}

/// Number of zeros `m S_G / (2 pi)` of a weight-`m` form, counted with the
/// usual fractional multiplicities at elliptic points.
pub fn poincare_zero_count_exact(m: i64, sig: &GroupSignature) -> Result<Ratio<i64>> {
    Ok(fundamental_area(sig)?.0 * m / 2)
}

pub fn poincare_zero_count(m: i64, sig: &GroupSignature) -> Result<f64> {
    Ok(poincare_zero_count_exact(m, sig)?.to_f64().unwrap_or(f64::NAN))
}

/// Dimension of holomorphic weight-`m` forms (cocycle `(cz+d)^{-2m}`),
/// assuming all cusps are equivalent.
pub fn dim_hol(m: i64, sig: &GroupSignature) -> i64 {
    let g = sig.genus as i64;
    match m {
        m if m < 0 => 0,
        0 => 1,
        1 => g,
        m => {
            (2 * m - 1) * (g - 1)
                + sig
                    .orders
                    .iter()
                    .map(|o| match o {
                        Order::Finite(e) => {
                            let e = *e as i64;
                            Integer::div_floor(&(m * (e - 1)), &e)
                        }
                        Order::Cusp => m,
                    })
                    .sum::<i64>()
        }
    }
}
