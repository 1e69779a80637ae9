//! Shared fixtures for the benchmarks.

use landau_core::fuchsian::{eisenstein, Eisenstein, QExpansion};
use landau_core::gabor::{frame_operator_section, Lattice};
use landau_core::hyperbolic::{HyperLevelSpec, UpperHalfPoint};
use landau_core::numerics::HermitianMatrix;

/// Frame-operator section for the ground window on the unit square lattice.
pub fn frame_section(modes: usize, radius: usize) -> HermitianMatrix {
    frame_operator_section(0, &Lattice::square(1.0).expect("unit lattice"), modes, radius).expect("valid section")
}

pub fn e4(truncation: usize) -> QExpansion {
    eisenstein(Eisenstein::E4, truncation).expect("positive truncation")
}

pub fn spec(b: f64, n: usize) -> HyperLevelSpec {
    HyperLevelSpec::new(b, n).expect("valid level")
}

/// Points scattered over a few translates of the fundamental domain and below it.
pub fn sample_points() -> Vec<UpperHalfPoint> {
    (0..16)
        .map(|k| UpperHalfPoint { x: -2.0 + 0.27 * k as f64, y: 0.05 + 0.19 * (k % 7) as f64 })
        .collect()
}
