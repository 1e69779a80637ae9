use std::f64::consts::PI;

use landau_core::hyperbolic::*;
use landau_core::numerics::{cauchy_derivatives, factorial, gamma, laguerre_poly, Complex, Domain, QuadratureRule};
use proptest::prelude::*;

fn p(x: f64, y: f64) -> UpperHalfPoint {
    UpperHalfPoint::new(x, y).unwrap()
}

fn spec(b: f64, n: usize) -> HyperLevelSpec {
    HyperLevelSpec::new(b, n).unwrap()
}

/// `c^{-1/2} int conj(psi_z(t)) f(t) dt / t` by a plain trapezoid in `log t`.
fn direct_w(s: HyperLevelSpec, f: &RadialFunction, z: UpperHalfPoint) -> Complex {
    let rule = QuadratureRule::trapezoid(40_001, (1e-8f64).ln(), 200f64.ln()).unwrap();
    let v = rule
        .integrate(|u| {
            let t = u.exp();
            cs_wavefunction_hyp(s, z, t).conj() * f.eval(t)
        })
        .unwrap();
    v * s.c_bn().powf(-0.5)
}

#[test]
fn reference_state_has_unit_norm() {
    for (b, n) in [(1.0, 0), (3.0, 0), (3.0, 1), (5.0, 2), (7.5, 4)] {
        let s = spec(b, n);
        let r = RadialFunction::reference_state(s);
        let rule = QuadratureRule::gauss_laguerre(128, s.alpha()).unwrap();
        // |f|^2 / t = N^2 t^alpha e^{-t} L^2
        let norm = rule
            .integrate_real(|t| (r.eval(t).norm_sqr()) / (t.powf(s.alpha()) * (-t).exp()) / t)
            .unwrap();
        assert!((norm - 1.0).abs() < 1e-10, "B={b} n={n}: {norm}");
    }
}

#[test]
fn transform_matches_direct_quadrature() {
    let fs = [
        RadialFunction::exp_monomial(0.0, 1.0).unwrap(),
        RadialFunction::exp_monomial(1.0, 1.0).unwrap(),
        RadialFunction::new(0.5, Decay::Polynomial, |t: Complex| (t + 1.0).powf(-4.0)).unwrap(),
    ];
    for (b, n) in [(3.0, 0), (3.0, 1), (5.0, 2)] {
        let s = spec(b, n);
        for f in &fs {
            for z in [p(0.0, 1.0), p(-1.5, 0.4), p(2.0, 3.0)] {
                let got = transform_w(s, f, z).unwrap();
                let want = direct_w(s, f, z);
                assert!((got - want).norm() <= 1e-8 * want.norm().max(1e-12), "B={b} n={n} z={z}: {got} vs {want}");
            }
        }
    }
}

#[test]
fn transform_is_isometric_on_reference_state() {
    for (b, n) in [(3.0, 0), (3.0, 1), (5.0, 2)] {
        let s = spec(b, n);
        let w = WTransform::new(s, RadialFunction::reference_state(s)).unwrap();
        let xs = QuadratureRule::trapezoid(801, -20.0, 20.0).unwrap();
        let ls = QuadratureRule::trapezoid(241, (0.01f64).ln(), 20f64.ln()).unwrap();
        let mut total = 0.0;
        for (&l, &wl) in ls.nodes().iter().zip(ls.weights()) {
            let y = l.exp();
            let mut row = 0.0;
            for (&x, &wx) in xs.nodes().iter().zip(xs.weights()) {
                row += wx * w.eval(p(x, y)).unwrap().norm_sqr();
            }
            // dy / y^2 = e^{-l} dl
            total += wl * row / y;
        }
        total /= 4.0 * PI;
        assert!((total - 1.0).abs() < 0.02, "B={b} n={n}: {total}");
    }
}

fn test_functions() -> Vec<(&'static str, RadialFunction)> {
    vec![
        ("exp(-t)", RadialFunction::exp_monomial(0.0, 1.0).unwrap()),
        ("t exp(-t)", RadialFunction::exp_monomial(1.0, 1.0).unwrap()),
    ]
}

#[test]
fn derivative_expansion_holds_on_grid() {
    for (b, n) in [(3.0, 0), (3.0, 1), (5.0, 2)] {
        for (name, f) in test_functions() {
            let checker = Prop1Checker::new(spec(b, n), f, Prop1Config::default()).unwrap();
            for z in default_grid() {
                let c = checker.check(z).unwrap();
                assert!(c.passed && c.rel_err <= 1e-5, "B={b} n={n} f={name} z={z}: {c:?}");
            }
        }
    }
}

#[test]
fn derivative_expansion_holds_where_the_transform_vanishes() {
    // The level-1 state at i is orthogonal to the states at 1+i and -1+2i.
    let s = spec(3.0, 1);
    let checker = Prop1Checker::new(s, RadialFunction::reference_state(s), Prop1Config::default()).unwrap();
    for z in default_grid() {
        let c = checker.check(z).unwrap();
        assert!(c.passed, "z={z}: {c:?}");
    }
    let c = checker.check(p(1.0, 1.0)).unwrap();
    assert!(c.lhs.norm() < 1e-12 && (c.lhs - direct_w(s, &RadialFunction::reference_state(s), p(1.0, 1.0))).norm() < 1e-8);
}

#[test]
fn derivative_expansion_examples() {
    let c = proposition1_check(spec(3.0, 0), &RadialFunction::exp_monomial(0.0, 1.0).unwrap(), p(0.0, 1.0), Prop1Config::default()).unwrap();
    assert!(c.rel_err < 1e-6);
    let c = proposition1_check(spec(3.0, 1), &RadialFunction::exp_monomial(1.0, 1.0).unwrap(), p(0.5, 1.0), Prop1Config::default()).unwrap();
    assert!(c.rel_err < 1e-5);
    let c = proposition1_check(spec(3.0, 1), &RadialFunction::zero(), p(0.5, 1.0), Prop1Config::default()).unwrap();
    assert_eq!((c.lhs, c.rhs, c.rel_err), (Complex::new(0.0, 0.0), Complex::new(0.0, 0.0), 0.0));
    assert!(proposition1_check(spec(3.0, 1), &RadialFunction::zero(), p(0.5, 0.2), Prop1Config::default()).is_err());
}

#[test]
fn ground_level_transform_is_a_bergman_transform() {
    for b in [1.0, 3.0, 4.5] {
        let s = spec(b, 0);
        let f = RadialFunction::exp_monomial(1.0, 1.0).unwrap();
        let ber = BergmanTransform::new(s.alpha(), f.times_power(-2.0)).unwrap();
        for z in [p(0.0, 1.0), p(1.0, 0.5), p(-2.0, 2.0)] {
            let w = transform_w(s, &f, z).unwrap();
            let rhs = ber.eval_at(-z.z().conj() / 2.0).unwrap() * z.y.powf(b) / s.gamma_bn().sqrt();
            assert!((w - rhs).norm() < 1e-12 * w.norm());
        }
    }
}

#[test]
fn bergman_closed_form_anchor() {
    let h = RadialFunction::exp_monomial(0.0, 1.0).unwrap();
    for nu in [0.5, 1.0, 3.0, 7.0] {
        for y in [0.2, 1.0, 5.0] {
            let got = bergman_transform(nu, &h, p(0.0, y)).unwrap();
            let want = gamma((nu + 5.0) / 2.0) * (1.0f64 + y).powf(-(nu + 5.0) / 2.0);
            assert!((got.re - want).abs() <= 1e-10 * want && got.im.abs() <= 1e-10 * want);
        }
        // off the imaginary axis: Gamma(a+1) (1 - i z)^{-(a+1)}
        let z = Complex::new(1.3, 0.7);
        let a1 = (nu + 5.0) / 2.0;
        let want = (Complex::new(1.0, 0.0) - Complex::i() * z).powf(-a1) * gamma(a1);
        let got = bergman_transform(nu, &h, UpperHalfPoint::from_complex(z).unwrap()).unwrap();
        assert!((got - want).norm() <= 1e-10 * want.norm());
    }
}

#[test]
fn bergman_transform_is_analytic() {
    let h = RadialFunction::new(1.0, Decay::Exponential { rate: 0.5 }, |t: Complex| (t * 0.3).cos()).unwrap();
    let ber = BergmanTransform::new(2.0, h).unwrap();
    for center in [Complex::new(0.0, 1.0), Complex::new(-1.0, 2.0), Complex::new(0.7, 0.8)] {
        let r = center.im / 2.0;
        let d = cauchy_derivatives(|w| ber.eval_at(w).unwrap(), center, 24, r, 96, Domain::UpperHalfPlane).unwrap();
        for dir in [0.0, 1.3, 2.9, 4.4] {
            let z = center + Complex::from_polar(center.im / 4.0, dir);
            let taylor: Complex = d.iter().enumerate().map(|(k, dk)| dk * (z - center).powu(k as u32) / factorial(k)).sum();
            let direct = ber.eval_at(z).unwrap();
            assert!((taylor - direct).norm() <= 1e-6 * direct.norm());
        }
    }
}

proptest! {
    #[test]
    fn wavelet_decomposition_identity(n in 0usize..=5, ai in 0usize..3, t in 0.01f64..12.0) {
        let alpha = [0.5, 1.0, 3.0][ai];
        let a = laguerre_wavelet_fourier(n, alpha, t);
        let b = laguerre_wavelet_decomposition(n, alpha, t);
        let scale = t.powf((alpha + 1.0) / 2.0) * (-t).exp() * (1.0 + 2.0 * t).powi(n as i32) * gamma(n as f64 + alpha + 1.0);
        prop_assert!((a - b).abs() <= 1e-10 * scale.max(a.abs()));
    }

    #[test]
    fn kernel_ground_is_hermitian(b in 0.6f64..6.0, x1 in -3.0f64..3.0, y1 in 0.05f64..4.0, x2 in -3.0f64..3.0, y2 in 0.05f64..4.0) {
        let (z, w) = (p(x1, y1), p(x2, y2));
        let a = kernel_ground(b, z, w);
        let c = kernel_ground(b, w, z).conj();
        prop_assert!((a - c).norm() <= 1e-8 * a.norm());
        let g = reproducing_kernel(spec(b, 0), z, w);
        prop_assert!((a - g).norm() <= 1e-9 * a.norm());
    }

    #[test]
    fn wavefunction_matches_definition(bi in 0usize..3, x in -2.0f64..2.0, y in 0.1f64..3.0, t in 0.01f64..10.0) {
        let (b, n) = [(1.0, 0usize), (3.0, 1), (5.0, 2)][bi];
        let s = spec(b, n);
        let alpha = 2.0 * (b - n as f64) - 1.0;
        let norm = (gamma(2.0 * b - n as f64) / factorial(n)).powf(-0.5);
        let want = Complex::new(-t * y / 2.0, t * x / 2.0).exp() * norm * (t * y).powf(b - n as f64) * laguerre_poly(n, alpha, t * y).unwrap();
        let got = cs_wavefunction_hyp(s, p(x, y), t);
        prop_assert!((got - want).norm() <= 1e-12 * want.norm().max(1e-300));
    }
}
