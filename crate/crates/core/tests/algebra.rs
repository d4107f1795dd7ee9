use approx::assert_abs_diff_eq;
use dirac_vortex::algebra::{
    boost_matrix, dirac_basis, energy, fw_matrix, rapidity, spinor_u, spinor_v, Axis, Complex64,
    Matrix4, Spinor4, Vec3, I,
};
use dirac_vortex::kernels::{
    commutator, kernel_h_dirac, kernel_h_tilde, kernel_spin_antiparticle, kernel_spin_dirac,
    kernel_spin_new, kernel_spin_particle, kernel_velocity_antiparticle, kernel_velocity_particle,
    su2_residual,
};
use proptest::prelude::*;

const PZ: Vec3 = [0.0, 0.0, 0.75];

fn momentum() -> impl Strategy<Value = (f64, Vec3)> {
    (0.5f64..2.0, -1.0f64..1.0, 0.0f64..std::f64::consts::TAU, 0.0f64..1.0).prop_map(
        |(m, c, phi, frac)| {
            let s = (1.0 - c * c).sqrt();
            let mag = 10.0 * m * frac;
            (m, [mag * s * phi.cos(), mag * s * phi.sin(), mag * c])
        },
    )
}

#[test]
fn reference_momentum_values() {
    // E = √(0.75² + 1) and 2 atanh(0.75/2.25) = ln 2
    assert_abs_diff_eq!(energy(1.0, PZ).unwrap(), 1.25, epsilon = 1e-15);
    let z = rapidity(1.0, PZ).unwrap();
    assert_abs_diff_eq!(z.zeta[2], 2f64.ln(), epsilon = 1e-15);
    assert_abs_diff_eq!(z.magnitude().cosh(), 1.25, epsilon = 1e-14);

    // u¹ = (E+m, 0, p_z, 0)/√(2m(E+m)) = (2.25, 0, 0.75, 0)/√4.5
    let u1 = spinor_u(1, 1.0, PZ).unwrap();
    let n = 4.5f64.sqrt();
    let expect = Spinor4::from_real([2.25 / n, 0.0, 0.75 / n, 0.0]);
    assert!((u1 - expect).max_abs() < 1e-15);
    assert_abs_diff_eq!(u1.norm_sqr(), 1.25, epsilon = 1e-14);
    assert!((boost_matrix(&z) * Spinor4::basis(0) - u1).max_abs() < 1e-14);
}

#[test]
fn hamiltonian_spectra_at_reference_momentum() {
    let h = kernel_h_dirac(1.0, PZ);
    let u1 = spinor_u(1, 1.0, PZ).unwrap();
    assert!((h * u1 - u1 * 1.25).max_abs() < 1e-14);
    // H² = E² with tr H = 0 gives eigenvalues {E, E, −E, −E}
    assert!((h * h - Matrix4::identity() * 1.5625).max_abs() < 1e-14);
    assert_eq!(h.trace().norm(), 0.0);
    let v1 = spinor_v(1, 1.0, PZ).unwrap();
    assert!((kernel_h_tilde(1.0, PZ) * v1 + v1 * 1.25).max_abs() < 1e-14);

    let u = fw_matrix(1.0, PZ).unwrap();
    let d = u * h * u.adjoint();
    let diag = Matrix4::diag_re([1.25, 1.25, -1.25, -1.25]);
    assert!((d - diag).max_abs() < 1e-14);
}

#[test]
fn spin_reference_cases() {
    let b = dirac_basis();
    assert!((b.gamma5 * b.sigma[2] - b.alpha[2]).max_abs() == 0.0);
    assert_eq!(kernel_spin_dirac(Axis::Z), Matrix4::diag_re([0.5, -0.5, 0.5, -0.5]));
    let sd = Axis::ALL.map(kernel_spin_dirac);
    assert!((commutator(&sd[0], &sd[1]) - sd[2] * I).max_abs() == 0.0);

    let sx = kernel_spin_new(Axis::X, 1.0, PZ);
    assert!((sx - sx.adjoint()).max_abs() > 0.1);
    let u1 = spinor_u(1, 1.0, PZ).unwrap();
    assert!((kernel_spin_new(Axis::Z, 1.0, PZ) * u1 - u1 * 0.5).max_abs() < 1e-14);
}

#[test]
fn velocity_kernels_on_reference_spinors() {
    // p_z/E = 0.75/1.25
    let u1 = spinor_u(1, 1.0, PZ).unwrap();
    let v1 = spinor_v(1, 1.0, PZ).unwrap();
    let vp = kernel_velocity_particle(1.0, PZ)[2];
    let vap = kernel_velocity_antiparticle(1.0, PZ)[2];
    assert!((vp * u1 - u1 * 0.6).max_abs() < 1e-14);
    assert!((vap * v1 + v1 * 0.6).max_abs() < 1e-14);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn every_spin_family_closes_su2((m, p) in momentum()) {
        prop_assert!(su2_residual(&Axis::ALL.map(|a| kernel_spin_new(a, m, p))) < 1e-10);
        prop_assert!(su2_residual(&Axis::ALL.map(|a| kernel_spin_particle(a, m, p))) < 1e-10);
        prop_assert!(su2_residual(&Axis::ALL.map(|a| kernel_spin_antiparticle(a, m, p))) < 1e-10);
    }

    #[test]
    fn particle_spins_are_conserved((m, p) in momentum()) {
        let h = kernel_h_dirac(m, p);
        let ht = kernel_h_tilde(m, p);
        for a in Axis::ALL {
            prop_assert!(commutator(&h, &kernel_spin_particle(a, m, p)).max_abs() < 1e-12);
            prop_assert!(commutator(&ht, &kernel_spin_antiparticle(a, m, p)).max_abs() < 1e-12);
        }
    }

    #[test]
    fn dirac_spin_precesses((m, p) in momentum()) {
        let b = dirac_basis();
        let h = kernel_h_dirac(m, p);
        for a in Axis::ALL {
            let (i, j) = a.cyclic_rest();
            let cross = b.alpha[i.index()] * p[j.index()] - b.alpha[j.index()] * p[i.index()];
            let lhs = commutator(&h, &kernel_spin_dirac(a));
            prop_assert!((lhs - cross * I).max_abs() < 1e-12);
        }
    }

    #[test]
    fn spinors_are_orthogonal((m, p) in momentum()) {
        let e = (p[0] * p[0] + p[1] * p[1] + p[2] * p[2] + m * m).sqrt();
        let u: Vec<_> = (1..=4).map(|r| spinor_u(r, m, p).unwrap()).collect();
        for (r, a) in u.iter().enumerate() {
            for (q, c) in u.iter().enumerate() {
                let target = if r == q { e / m } else { 0.0 };
                prop_assert!((a.inner(c) - Complex64::new(target, 0.0)).norm() < 1e-10);
            }
        }
        let v1 = spinor_v(1, m, p).unwrap();
        let v2 = spinor_v(2, m, p).unwrap();
        prop_assert!(v1.inner(&v2).norm() < 1e-12);
    }

    #[test]
    fn new_spin_acts_as_particle_and_antiparticle_spin((m, p) in momentum()) {
        for a in Axis::ALL {
            let dn = kernel_spin_new(a, m, p) - kernel_spin_particle(a, m, p);
            let da = kernel_spin_new(a, m, p) - kernel_spin_antiparticle(a, m, p);
            for r in 1..=2 {
                prop_assert!((dn * spinor_u(r, m, p).unwrap()).max_abs() < 1e-10);
                prop_assert!((da * spinor_v(r, m, p).unwrap()).max_abs() < 1e-10);
            }
        }
    }

    #[test]
    fn fw_matrix_is_unitary_and_diagonalises((m, p) in momentum()) {
        let u = fw_matrix(m, p).unwrap();
        let e = (p[0] * p[0] + p[1] * p[1] + p[2] * p[2] + m * m).sqrt();
        prop_assert!((u * u.adjoint() - Matrix4::identity()).max_abs() < 1e-12);
        let d = u * kernel_h_dirac(m, p) * u.adjoint();
        prop_assert!((d - dirac_basis().beta * e).max_abs() < 1e-11);
    }

    #[test]
    fn boost_builds_positive_energy_and_antiparticle_spinors((m, p) in momentum()) {
        let b = boost_matrix(&rapidity(m, p).unwrap());
        prop_assert!((b * Spinor4::basis(0) - spinor_u(1, m, p).unwrap()).max_abs() < 1e-12);
        prop_assert!((b * Spinor4::basis(1) - spinor_u(2, m, p).unwrap()).max_abs() < 1e-12);
        prop_assert!((b * Spinor4::basis(2) - spinor_v(1, m, p).unwrap()).max_abs() < 1e-12);
        prop_assert!((b * Spinor4::basis(3) - spinor_v(2, m, p).unwrap()).max_abs() < 1e-12);
    }

    #[test]
    fn alpha_expectation_is_velocity((m, p) in momentum()) {
        let b = dirac_basis();
        for r in 1..=4 {
            let u = spinor_u(r, m, p).unwrap();
            let sign = if r <= 2 { 1.0 } else { -1.0 };
            for k in 0..3 {
                prop_assert!((u.expect(&b.alpha[k]).re - sign * p[k] / m).abs() < 1e-10);
            }
        }
    }
}
