use std::f64::consts::PI;

use approx::assert_relative_eq;
use dirac_vortex::algebra::{spinor_u, Complex64, Vec3};
use dirac_vortex::error::Error;
use dirac_vortex::field::{
    apply_kernel_spectral, sample_fw, to_fw, to_original, GridSpec, SpinorField,
};
use dirac_vortex::kernels::MomentumKernel;
use dirac_vortex::wavepacket::{
    grad_psi_fw, laguerre, lg_envelope_full, lg_envelope_simplified, paraxial_residual, psi_fw,
    CurvaturePhase, CylPoint, LGParams, PlaneWave,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn at(rho: f64, phi: f64, z: f64) -> CylPoint {
    CylPoint::new(rho, phi, z).unwrap()
}

#[test]
fn laguerre_reference_values() {
    for alpha in 0..4 {
        assert_eq!(laguerre(0, alpha, 2.7), 1.0);
    }
    // L_1^α(x) = 1 + α − x, constant term of L_n^α is C(n+α, n)
    assert_eq!(laguerre(1, 2, 3.0), 0.0);
    assert_eq!(laguerre(2, 1, 0.0), 3.0);
    // L_2^1(x) = (x² − 6x + 6)/2
    let x = 1.3;
    assert_relative_eq!(laguerre(2, 1, x), (x * x - 6.0 * x + 6.0) / 2.0, max_relative = 1e-14);
}

#[test]
fn envelope_reference_values() {
    let p = LGParams { l: 0, ..LGParams::default() };
    let origin = lg_envelope_full(&p, &at(0.0, 0.0, 0.0));
    assert_relative_eq!(origin.re, 1.0 / p.w0, max_relative = 1e-15);
    assert_eq!(origin.im, 0.0);

    let p2 = LGParams { l: 2, ..LGParams::default() };
    let a = lg_envelope_full(&p2, &at(4.0, 0.0, 0.0));
    let b = lg_envelope_full(&p2, &at(4.0, PI / 4.0, 0.0));
    assert_relative_eq!((b / a).arg(), PI / 2.0, max_relative = 1e-12);
    assert_relative_eq!(a.norm(), b.norm(), max_relative = 1e-14);
}

#[test]
fn simplified_envelope_near_the_axis() {
    let p = LGParams::default();
    let rho = p.w0 / 10.0;
    let r = lg_envelope_simplified(&p, &at(rho, 0.4, 0.0)) / lg_envelope_full(&p, &at(rho, 0.4, 0.0));
    assert!((r.norm() - 1.0).abs() <= 2.0 * (rho / p.w0).powi(2));
    let a = lg_envelope_simplified(&p, &at(3.0, 0.0, 0.0)).norm();
    let b = lg_envelope_simplified(&p, &at(6.0, 0.0, 0.0)).norm();
    assert_relative_eq!(b / a, 2.0, max_relative = 1e-14);
    // z enters only through the carrier e^{ip0 z}
    let z = 0.37;
    let s0 = lg_envelope_simplified(&p, &at(3.0, 0.2, 0.0));
    let sz = lg_envelope_simplified(&p, &at(3.0, 0.2, z));
    assert!((sz - s0 * Complex64::from_polar(1.0, p.p0 * z)).norm() < 1e-15);
}

#[test]
fn fw_spinor_has_no_lower_components() {
    let p = LGParams::default().with_sigma_z(0.3).unwrap();
    for (rho, phi) in [(0.0, 0.0), (2.0, 1.0), (9.0, 4.0)] {
        let s = psi_fw(&p, &at(rho, phi, 0.0));
        assert_eq!(s.0[2], Complex64::new(0.0, 0.0));
        assert_eq!(s.0[3], Complex64::new(0.0, 0.0));
    }
}

#[test]
fn vortex_phase_gradient_gives_the_charge() {
    let p = LGParams { l: 3, ..LGParams::default() };
    let (rho, h) = (5.0, 1e-4);
    let a = lg_envelope_full(&p, &at(rho, 1.0 - h, 0.0));
    let b = lg_envelope_full(&p, &at(rho, 1.0 + h, 0.0));
    assert_relative_eq!((b / a).arg() / (2.0 * h), 3.0, max_relative = 1e-9);
}

#[test]
fn analytic_gradient_matches_finite_differences() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..100 {
        let p = LGParams {
            n: rng.gen_range(0..3),
            l: rng.gen_range(-3..=3),
            ..LGParams::default()
        }
        .with_sigma_z(rng.gen_range(-1.0..=1.0))
        .unwrap();
        let pt = at(rng.gen_range(1.0..14.0), rng.gen_range(0.0..2.0 * PI), rng.gen_range(-50.0..50.0));
        let g = grad_psi_fw(&p, &pt);
        let x0 = pt.cartesian();
        let psi = |x: Vec3| psi_fw(&p, &CylPoint::from_cartesian(x[0], x[1], x[2]));
        let scale = g.iter().map(|s| s.max_abs()).fold(0.0, f64::max);
        for k in 0..3 {
            let h = 1e-3;
            let shift = |d: f64| {
                let mut x = x0;
                x[k] += d;
                psi(x)
            };
            let fd = (shift(-2.0 * h) - shift(2.0 * h) + (shift(h) - shift(-h)) * 8.0) * (1.0 / (12.0 * h));
            let err = (fd - g[k]).max_abs() / scale;
            assert!(err < 1e-6, "axis {k} at {pt:?}: {err:e}");
        }
    }
}

#[test]
fn paraxial_residual_matches_closed_form() {
    assert_eq!(paraxial_residual(&PlaneWave { p0: 10.0 }, &at(3.0, 0.1, 0.0)), 0.0);
    // n = 0, l = 1 Gaussian beam at z = 0: |X² − 6X + 6| / (z0 p0)², X = ρ²/w0²
    for w0 in [20.0, 40.0] {
        let p = LGParams { w0, curvature: CurvaturePhase::GaussianBeam, ..LGParams::default() };
        for rho in [2.0, 5.0, 8.0] {
            let x = rho * rho / (w0 * w0);
            let expect = (x * x - 6.0 * x + 6.0).abs() / (p.rayleigh() * p.p0).powi(2);
            assert_relative_eq!(paraxial_residual(&p, &at(rho, 0.3, 0.0)), expect, max_relative = 1e-3);
        }
    }
    assert!(paraxial_residual(&LGParams::default(), &at(5.0, 0.0, 0.0)) <= 1e-3);
}

fn default_field() -> (LGParams, SpinorField) {
    let p = LGParams::default();
    let f = sample_fw(&p, &GridSpec::default(), 0.0).unwrap();
    (p, f)
}

#[test]
fn sampled_norm_matches_closed_form() {
    let (p, f) = default_field();
    let dx = f.spec().spacing();
    let sum: f64 = f.density().iter().sum();
    assert_relative_eq!(sum * dx * dx, p.analytic_norm(), max_relative = 1e-6);
    assert_relative_eq!(f.norm(), sum * dx * dx, max_relative = 1e-12);
    assert!(f.boundary_ratio() <= 1e-10);
}

#[test]
fn refined_grid_samples_the_same_points() {
    let p = LGParams::default();
    let coarse = sample_fw(&p, &GridSpec { n: 512, half_width: 120.0 }, 0.0).unwrap();
    let fine = sample_fw(&p, &GridSpec { n: 1024, half_width: 120.0 }, 0.0).unwrap();
    let mut worst = 0.0f64;
    for iy in (0..512).step_by(7) {
        for ix in (0..512).step_by(5) {
            worst = worst.max((coarse.at(ix, iy) - fine.at(2 * ix, 2 * iy)).max_abs());
        }
    }
    assert!(worst <= 1e-10 * coarse.peak().sqrt());
}

#[test]
fn wide_beam_becomes_the_plane_wave_spinor() {
    let w0 = 200.0;
    let p = LGParams { l: 0, w0, ..LGParams::default() }.with_sigma_z(0.2).unwrap();
    let grid = GridSpec { n: 256, half_width: 6.0 * w0 };
    let o = to_original(&sample_fw(&p, &grid, 0.0).unwrap()).unwrap();
    let fw = sample_fw(&p, &grid, 0.0).unwrap();
    let c = grid.n / 2;
    let chi = fw.at(c, c).0[0] / p.a;
    let expect = spinor_u(1, 1.0, [0.0, 0.0, 10.0]).unwrap() * p.a
        + spinor_u(2, 1.0, [0.0, 0.0, 10.0]).unwrap() * p.b;
    let got = o.at(c, c) * (Complex64::new(1.0, 0.0) / chi);
    assert!((got - expect).max_abs() < 1e-3 * expect.max_abs(), "{got:?} vs {expect:?}");
}

#[test]
fn inverse_fw_round_trip_and_density_ratio() {
    let (p, f) = default_field();
    let o = to_original(&f).unwrap();
    let back = to_fw(&o).unwrap();
    let gap = f.values().iter().zip(back.values()).map(|(a, b)| (*a - *b).max_abs()).fold(0.0, f64::max);
    assert!(gap <= 1e-10 * f.peak().sqrt());

    let e0 = p.energy();
    let (fd, od) = (f.density(), o.density());
    let spec = *f.spec();
    for (x, y) in [(5.0, 0.0), (0.0, -6.0), (3.0, 4.0)] {
        let (ix, iy, _, _) = spec.locate(x, y).unwrap();
        let q = spec.index(ix, iy);
        assert!((od[q] / fd[q] / e0 - 1.0).abs() < 0.02);
    }
}

#[test]
fn spectral_kernels_act_diagonally() {
    let (p, f) = default_field();
    let o = to_original(&f).unwrap();
    let e0 = p.energy();
    let pz = apply_kernel_spectral(&o, &MomentumKernel::momentum_over_energy(dirac_vortex::algebra::Axis::Z)).unwrap();
    let h = apply_kernel_spectral(&o, &MomentumKernel::h_dirac()).unwrap();
    let spec = *o.spec();
    let (ix, iy, _, _) = spec.locate(5.0, 0.0).unwrap();
    let s = o.at(ix, iy);
    let n = s.norm_sqr();
    assert_relative_eq!(s.inner(&pz.at(ix, iy)).re / n, p.p0 / e0, max_relative = 1e-3);
    assert_relative_eq!(s.inner(&h.at(ix, iy)).re / n, e0, max_relative = 1e-3);
    let id = apply_kernel_spectral(&o, &MomentumKernel::identity()).unwrap();
    assert!(id.values().iter().zip(o.values()).all(|(a, b)| (*a - *b).max_abs() < 1e-14));
}

#[test]
fn grid_preconditions() {
    let p = LGParams::default();
    let coarse = GridSpec { n: 32, half_width: 120.0 };
    assert!(matches!(sample_fw(&p, &coarse, 0.0), Err(Error::UnderResolved { .. })));
    let tight = sample_fw(&p, &GridSpec { n: 256, half_width: 40.0 }, 0.0).unwrap();
    assert!(matches!(to_original(&tight), Err(Error::Aliasing { .. })));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn export_import_is_bit_exact(l in -2i32..=2, s in -1.0f64..=1.0, w0 in 15.0f64..25.0) {
        let p = LGParams { l, w0, ..LGParams::default() }.with_sigma_z(s).unwrap();
        let grid = GridSpec { n: 128, half_width: 6.0 * w0 };
        let o = to_original(&sample_fw(&p, &grid, 0.0).unwrap()).unwrap();
        let dir = tempfile::tempdir().unwrap();
        o.export(&p, dir.path(), "f").unwrap();
        let (back, side) = SpinorField::import(dir.path(), "f").unwrap();
        prop_assert_eq!(side.params, p);
        prop_assert_eq!(back, o);
    }
}
