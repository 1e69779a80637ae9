pub mod fuchsian;
pub mod gabor;
pub mod hyper;
pub mod levels;

use landau_core::hyperbolic::UpperHalfPoint;

use crate::error::CliError;
use crate::output::Artifact;

/// What a command produced and the exit code it asks for.
pub struct Outcome {
    pub artifact: Artifact,
    pub code: u8,
}

impl Outcome {
    pub fn ok(artifact: Artifact) -> Self {
        Self { artifact, code: 0 }
    }
}

/// `x,y`, `i` or `rho`.
pub fn parse_point(s: &str) -> Result<UpperHalfPoint, CliError> {
    let p = match s.trim() {
        "i" => UpperHalfPoint::new(0.0, 1.0),
        "rho" => UpperHalfPoint::new(0.5, 3f64.sqrt() / 2.0),
        other => {
            let parts: Vec<&str> = other.split(',').collect();
            let [x, y] = parts.as_slice() else {
                return Err(CliError::usage(format!("expected x,y, i or rho, got {s:?}")));
            };
            let num = |v: &str| v.trim().parse::<f64>().map_err(|_| CliError::usage(format!("bad number {v:?} in {s:?}")));
            UpperHalfPoint::new(num(x)?, num(y)?)
        }
    };
    p.map_err(|e| CliError::usage(e.to_string()))
}

/// `from:to:steps`, inclusive, `steps >= 1`.
pub fn parse_range(s: &str) -> Result<Vec<f64>, CliError> {
    let parts: Vec<&str> = s.split(':').collect();
    let [a, b, k] = parts.as_slice() else {
        return Err(CliError::usage(format!("expected from:to:steps, got {s:?}")));
    };
    let num = |v: &str| v.trim().parse::<f64>().map_err(|_| CliError::usage(format!("bad number {v:?} in {s:?}")));
    let (a, b) = (num(a)?, num(b)?);
    let k: usize = k.trim().parse().map_err(|_| CliError::usage(format!("bad step count in {s:?}")))?;
    match k {
        0 => Err(CliError::usage(format!("step count must be positive in {s:?}"))),
        1 => Ok(vec![a]),
        _ => Ok((0..k).map(|i| a + (b - a) * i as f64 / (k - 1) as f64).collect()),
    }
}
