use landau_core::numerics::*;
use proptest::prelude::*;

fn c(re: f64, im: f64) -> Complex {
    Complex::new(re, im)
}

#[test]
fn hermite_orthogonality_up_to_degree_20() {
    let rule = QuadratureRule::gauss_hermite(DEFAULT_NODES).unwrap();
    let norm = |j: usize| 2f64.powi(j as i32) * factorial(j) * std::f64::consts::PI.sqrt();
    for j in 0..=20 {
        for k in 0..=20 {
            let v = rule.integrate_real(|t| hermite_poly(j, t) * hermite_poly(k, t)).unwrap();
            let scale = (norm(j) * norm(k)).sqrt();
            let expect = if j == k { norm(j) } else { 0.0 };
            assert!((v - expect).abs() <= 1e-10 * scale, "H_{j} H_{k}: {v} vs {expect}");
        }
    }
}

#[test]
fn laguerre_orthogonality_up_to_degree_20() {
    for alpha in [0.0, 0.5, 3.0] {
        let rule = QuadratureRule::gauss_laguerre(DEFAULT_NODES, alpha).unwrap();
        let norm = |j: usize| gamma(j as f64 + alpha + 1.0) / factorial(j);
        for j in 0..=20 {
            for k in 0..=20 {
                let v = rule
                    .integrate_real(|t| laguerre_poly(j, alpha, t).unwrap() * laguerre_poly(k, alpha, t).unwrap())
                    .unwrap();
                let scale = (norm(j) * norm(k)).sqrt();
                let expect = if j == k { norm(j) } else { 0.0 };
                assert!((v - expect).abs() <= 1e-9 * scale, "alpha={alpha} L_{j} L_{k}: {v} vs {expect}");
            }
        }
    }
}

/// `int t^a L_m^a(t) e^{-ut} dt` against its closed form.
#[test]
fn laguerre_laplace_transform_identity() {
    for alpha in [0.0, 1.0, 2.5] {
        let rule = QuadratureRule::gauss_laguerre(DEFAULT_NODES, alpha).unwrap();
        for u in [1.0f64, 2.0, 3.5] {
            for m in 0..=10 {
                let quad = rule.integrate_real(|s| laguerre_poly(m, alpha, s / u).unwrap()).unwrap() * u.powf(-(alpha + 1.0));
                let prefactor = gamma(m as f64 + 1.0 + alpha) / factorial(m) * u.powf(-(alpha + 1.0));
                let exact = prefactor * ((u - 1.0) / u).powi(m as i32);
                let scale = exact.abs().max(prefactor);
                assert!((quad - exact).abs() <= 1e-8 * scale, "alpha={alpha} u={u} m={m}: {quad} vs {exact}");
            }
        }
    }
}

#[test]
fn cauchy_derivative_matches_forward_difference() {
    type Case = (&'static str, Box<dyn Fn(Complex) -> Complex>);
    let funcs: Vec<Case> = vec![
        ("exp", Box::new(|z: Complex| z.exp())),
        ("poly", Box::new(|z: Complex| z * z * z - z * 2.0)),
        ("inverse", Box::new(|z: Complex| (z + c(0.0, 1.0)).powf(-2.5))),
        ("oscillatory", Box::new(|z: Complex| (c(0.0, 3.0) * z).exp() * z)),
    ];
    for (name, f) in &funcs {
        for z0 in [c(0.3, 1.0), c(-1.2, 0.6), c(2.0, 2.0)] {
            let d = cauchy_derivative(f, z0, 1, default_radius(z0), 64, Domain::UpperHalfPlane).unwrap();
            let h = 1e-7;
            let fd = (f(z0 + h) - f(z0)) / h;
            assert!((d - fd).norm() <= 1e-5 * d.norm(), "{name} at {z0}: {d} vs {fd}");
        }
    }
}

fn random_unitary(dim: usize, angles: &[(f64, f64)]) -> Vec<Complex> {
    let mut u = vec![c(0.0, 0.0); dim * dim];
    for i in 0..dim {
        u[i * dim + i] = c(1.0, 0.0);
    }
    let mut idx = 0;
    for p in 0..dim {
        for q in p + 1..dim {
            let (theta, phi) = angles[idx % angles.len()];
            idx += 1;
            let (s, co) = theta.sin_cos();
            let e = Complex::from_polar(1.0, phi);
            for r in 0..dim {
                let a = u[r * dim + p];
                let b = u[r * dim + q];
                u[r * dim + p] = a * co - b * e.conj() * s;
                u[r * dim + q] = a * e * s + b * co;
            }
        }
    }
    u
}

fn conjugate(u: &[Complex], m: &HermitianMatrix) -> HermitianMatrix {
    let n = m.dim();
    HermitianMatrix::from_fn(n, |r, col| {
        let mut acc = c(0.0, 0.0);
        for i in 0..n {
            for j in 0..n {
                acc += u[i * n + r].conj() * m.get(i, j) * u[j * n + col];
            }
        }
        acc
    })
    .unwrap()
}

fn hermitian_from(dim: usize, vals: &[f64]) -> HermitianMatrix {
    let mut e = vec![c(0.0, 0.0); dim * dim];
    let mut it = vals.iter().cycle();
    for r in 0..dim {
        e[r * dim + r] = c(*it.next().unwrap(), 0.0);
        for col in r + 1..dim {
            let z = c(*it.next().unwrap(), *it.next().unwrap());
            e[r * dim + col] = z;
            e[col * dim + r] = z.conj();
        }
    }
    HermitianMatrix::new(dim, e).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn eigh_residual_and_order(dim in 1usize..12, vals in prop::collection::vec(-5.0f64..5.0, 150)) {
        let m = hermitian_from(dim, &vals);
        let e = eigh(&m).unwrap();
        prop_assert!(e.values.windows(2).all(|w| w[0] <= w[1]));
        let rec = e.reconstruct();
        let resid: f64 = rec.iter().zip(m.entries()).map(|(a, b)| (a - b).norm_sqr()).sum::<f64>().sqrt();
        prop_assert!(resid <= 1e-10 * m.frobenius_norm().max(1e-300));
    }

    #[test]
    fn eigh_values_invariant_under_unitary_conjugation(
        dim in 2usize..9,
        vals in prop::collection::vec(-3.0f64..3.0, 100),
        angles in prop::collection::vec((0.0f64..std::f64::consts::TAU, 0.0f64..std::f64::consts::TAU), 40),
    ) {
        let m = hermitian_from(dim, &vals);
        let u = random_unitary(dim, &angles);
        let a = eigh(&m).unwrap().values;
        let b = eigh(&conjugate(&u, &m)).unwrap().values;
        for (x, y) in a.iter().zip(&b) {
            prop_assert!((x - y).abs() <= 1e-10 * m.frobenius_norm().max(1.0));
        }
    }

    #[test]
    fn hermite_recurrence_matches_complex_evaluation(n in 0usize..30, t in -4.0f64..4.0) {
        let z = hermite_poly_at(n, c(t, 0.0));
        let r = hermite_poly(n, t);
        prop_assert!((z.re - r).abs() <= 1e-12 * r.abs().max(1.0));
    }

    #[test]
    fn terminating_hypergeometric_is_polynomial(m in 0usize..8, b in 0.1f64..4.0, cc in 0.5f64..5.0, x in 0.0f64..1.0) {
        // Jacobi-type: 2F1(-m, b; c; x) = sum_k C(m,k)(-x)^k (b)_k/(c)_k
        let mut direct = 0.0;
        let mut poch = 1.0;
        for k in 0..=m {
            if k > 0 {
                poch *= (b + k as f64 - 1.0) / (cc + k as f64 - 1.0);
            }
            direct += binomial(m as f64, k) * (-x).powi(k as i32) * poch;
        }
        let v = gauss_2f1(-(m as f64), b, cc, x).unwrap();
        prop_assert!((v - direct).abs() <= 1e-12 * direct.abs().max(1.0));
    }
}
