//! Momentum-space matrix kernels for the operator families.
//!
//! Every kernel is a map `(m, p) ↦ Matrix4`: the Hamiltonians `H_D` and
//! `H̃_D`, the Dirac spin, the covariant (non-Hermitian) new spin `S_N`,
//! the Hermitian particle and antiparticle spins `S_P`/`S_AP`, and the
//! velocities of the particle and antiparticle position operators.

use std::fmt;
use std::sync::Arc;

use crate::algebra::{
    boost_matrix, dirac_basis, dot3, energy_unchecked, fw_matrix_unchecked, rapidity, Axis,
    DiracBasis, Matrix4, Vec3, I,
};

type KernelFn = dyn Fn(f64, Vec3) -> Matrix4 + Send + Sync;

/// A named momentum-space multiplication operator.
#[derive(Clone)]
pub struct MomentumKernel {
    name: String,
    eval: Arc<KernelFn>,
}

impl fmt::Debug for MomentumKernel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MomentumKernel").field("name", &self.name).finish()
    }
}

impl MomentumKernel {
    pub fn new<F>(name: impl Into<String>, eval: F) -> Self
    where
        F: Fn(f64, Vec3) -> Matrix4 + Send + Sync + 'static,
    {
        MomentumKernel {
            name: name.into(),
            eval: Arc::new(eval),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn eval(&self, m: f64, p: Vec3) -> Matrix4 {
        (self.eval)(m, p)
    }

    pub fn identity() -> Self {
        Self::new("identity", |_, _| Matrix4::identity())
    }

    pub fn h_dirac() -> Self {
        Self::new("H_D", kernel_h_dirac)
    }

    pub fn h_tilde() -> Self {
        Self::new("H~_D", kernel_h_tilde)
    }

    pub fn h_fw() -> Self {
        Self::new("H_FW", kernel_h_fw)
    }

    pub fn spin_dirac(axis: Axis) -> Self {
        Self::new(format!("S_D^{axis}"), move |_, _| kernel_spin_dirac(axis))
    }

    pub fn spin_new(axis: Axis) -> Self {
        Self::new(format!("S_N^{axis}"), move |m, p| kernel_spin_new(axis, m, p))
    }

    pub fn spin_particle(axis: Axis) -> Self {
        Self::new(format!("S_P^{axis}"), move |m, p| {
            kernel_spin_particle(axis, m, p)
        })
    }

    pub fn spin_antiparticle(axis: Axis) -> Self {
        Self::new(format!("S_AP^{axis}"), move |m, p| {
            kernel_spin_antiparticle(axis, m, p)
        })
    }

    pub fn velocity_particle(axis: Axis) -> Self {
        Self::new(format!("v_P^{axis}"), move |m, p| {
            kernel_velocity_particle(m, p)[axis.index()]
        })
    }

    pub fn velocity_antiparticle(axis: Axis) -> Self {
        Self::new(format!("v_AP^{axis}"), move |m, p| {
            kernel_velocity_antiparticle(m, p)[axis.index()]
        })
    }

    /// `P^k / E`, the FW-representation velocity.
    pub fn momentum_over_energy(axis: Axis) -> Self {
        Self::new(format!("P^{axis}/E"), move |m, p| {
            Matrix4::identity() * (p[axis.index()] / energy_unchecked(m, p))
        })
    }

    /// Dirac velocity `α^k` (momentum independent).
    pub fn alpha(axis: Axis) -> Self {
        Self::new(format!("alpha^{axis}"), move |_, _| {
            dirac_basis().alpha[axis.index()]
        })
    }

    pub fn fw() -> Self {
        Self::new("U_FW", |m, p| fw_matrix_unchecked(&dirac_basis(), m, p))
    }

    pub fn fw_adjoint() -> Self {
        Self::new("U_FW^dagger", |m, p| {
            fw_matrix_unchecked(&dirac_basis(), m, p).adjoint()
        })
    }
}

fn h_with(basis: &DiracBasis, m: f64, p: Vec3) -> Matrix4 {
    basis.alpha_dot(p) + basis.beta * m
}

/// `H_D = α·p + βm`.
pub fn kernel_h_dirac(m: f64, p: Vec3) -> Matrix4 {
    h_with(&dirac_basis(), m, p)
}

/// `H̃_D = −α·p + βm`, evaluated as `H_D(m, −p)`.
pub fn kernel_h_tilde(m: f64, p: Vec3) -> Matrix4 {
    kernel_h_dirac(m, p.map(|c| -c))
}

/// `H_FW = βE`.
pub fn kernel_h_fw(m: f64, p: Vec3) -> Matrix4 {
    dirac_basis().beta * energy_unchecked(m, p)
}

/// `S_D^k = Σ^k / 2`.
pub fn kernel_spin_dirac(axis: Axis) -> Matrix4 {
    dirac_basis().sigma[axis.index()] * 0.5
}

/// Covariant new spin `S_N^k`.
///
/// `S_N^k = (E/m) S_D^k − p^k (S_D·p)/(m(E+m)) + iγ⁵ (S_D×p)^k / m`.
/// The prefactors are finite for every `m > 0`; the operator is not Hermitian
/// for `p ≠ 0`.
pub fn kernel_spin_new(axis: Axis, m: f64, p: Vec3) -> Matrix4 {
    let b = dirac_basis();
    let e = energy_unchecked(m, p);
    let k = axis.index();
    let sd = |a: usize| b.sigma[a] * 0.5;
    let s_dot_p = sd(0) * p[0] + sd(1) * p[1] + sd(2) * p[2];
    let (i, j) = axis.cyclic_rest();
    let s_cross_p = sd(i.index()) * p[j.index()] - sd(j.index()) * p[i.index()];
    sd(k) * (e / m) - s_dot_p * (p[k] / (m * (e + m))) + (b.gamma5 * s_cross_p) * (I / m)
}

fn spin_particle_family(axis: Axis, m: f64, p: Vec3, sign: f64) -> Matrix4 {
    let b = dirac_basis();
    let e = energy_unchecked(m, p);
    let k = axis.index();
    let sd = |a: usize| b.sigma[a] * 0.5;
    let p_dot_s = sd(0) * p[0] + sd(1) * p[1] + sd(2) * p[2];
    let pp = dot3(p, p);
    let (i, j) = axis.cyclic_rest();
    // (p×α)^k = p^i α^j − p^j α^i for cyclic (k, i, j)
    let p_cross_alpha = b.alpha[j.index()] * p[i.index()] - b.alpha[i.index()] * p[j.index()];
    sd(k) + (p_dot_s * p[k] - sd(k) * pp) * (1.0 / (e * (e + m)))
        + (b.beta * p_cross_alpha) * (I * (sign / (2.0 * e)))
}

/// Hermitian particle spin `S_P^k = U_FW† (Σ^k/2) U_FW`.
pub fn kernel_spin_particle(axis: Axis, m: f64, p: Vec3) -> Matrix4 {
    spin_particle_family(axis, m, p, 1.0)
}

/// Hermitian antiparticle spin `S_AP^k = U_FW (Σ^k/2) U_FW†`.
pub fn kernel_spin_antiparticle(axis: Axis, m: f64, p: Vec3) -> Matrix4 {
    spin_particle_family(axis, m, p, -1.0)
}

/// Particle velocity `(p^k/E)(H_D/E)` for k = x, y, z.
pub fn kernel_velocity_particle(m: f64, p: Vec3) -> [Matrix4; 3] {
    let e = energy_unchecked(m, p);
    let h = kernel_h_dirac(m, p);
    [0, 1, 2].map(|k| h * (p[k] / (e * e)))
}

/// Antiparticle velocity `(p^k/E)(H̃_D/E)`.
pub fn kernel_velocity_antiparticle(m: f64, p: Vec3) -> [Matrix4; 3] {
    let e = energy_unchecked(m, p);
    let h = kernel_h_tilde(m, p);
    [0, 1, 2].map(|k| h * (p[k] / (e * e)))
}

/// `S_N^k` through the boost conjugation `B (Σ^k/2) B⁻¹`, an independent route to [`kernel_spin_new`].
pub fn spin_new_by_boost(axis: Axis, m: f64, p: Vec3) -> Matrix4 {
    let z = rapidity(m, p).expect("mass checked by caller");
    boost_matrix(&z) * kernel_spin_dirac(axis) * boost_matrix(&z.reversed())
}

/// `S_P^k` through `U_FW† (Σ^k/2) U_FW`.
pub fn spin_particle_by_fw(axis: Axis, m: f64, p: Vec3) -> Matrix4 {
    let u = fw_matrix_unchecked(&dirac_basis(), m, p);
    u.adjoint() * kernel_spin_dirac(axis) * u
}

/// `S_AP^k` through `U_FW (Σ^k/2) U_FW†`.
pub fn spin_antiparticle_by_fw(axis: Axis, m: f64, p: Vec3) -> Matrix4 {
    let u = fw_matrix_unchecked(&dirac_basis(), m, p);
    u * kernel_spin_dirac(axis) * u.adjoint()
}

/// `[A, B] = AB − BA`.
pub fn commutator(a: &Matrix4, b: &Matrix4) -> Matrix4 {
    *a * *b - *b * *a
}

/// Largest residual of `[S^i, S^j] = iε_ijk S^k` over the three cyclic pairs.
pub fn su2_residual(s: &[Matrix4; 3]) -> f64 {
    Axis::ALL
        .iter()
        .map(|&k| {
            let (i, j) = k.cyclic_rest();
            (commutator(&s[i.index()], &s[j.index()]) - s[k.index()] * I).max_abs()
        })
        .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{spinor_u, spinor_v, Complex64};

    const PZ: Vec3 = [0.0, 0.0, 0.75];

    fn spins(f: impl Fn(Axis) -> Matrix4) -> [Matrix4; 3] {
        Axis::ALL.map(f)
    }

    #[test]
    fn h_dirac_cases() {
        let b = dirac_basis();
        assert_eq!(kernel_h_dirac(1.0, [0.0; 3]), b.beta);
        let h = kernel_h_dirac(1.0, PZ);
        assert!(h.is_hermitian(0.0));
        // eigenvalues ±E: H² = E² and tr H = 0 with tr(H β)=4m fixes the multiplicities
        assert!((h * h - Matrix4::identity() * 1.5625).max_abs() < 1e-15);
        assert_eq!(h.trace(), Complex64::new(0.0, 0.0));
        let u1 = spinor_u(1, 1.0, PZ).unwrap();
        assert!((h * u1 - u1 * 1.25).max_abs() < 1e-14);
    }

    #[test]
    fn h_tilde_cases() {
        assert_eq!(kernel_h_tilde(1.0, [0.0; 3]), dirac_basis().beta);
        let v1 = spinor_v(1, 1.0, PZ).unwrap();
        assert!((kernel_h_tilde(1.0, PZ) * v1 + v1 * 1.25).max_abs() < 1e-14);
        let p = [0.2, -0.7, 1.9];
        assert_eq!(kernel_h_tilde(1.3, p), kernel_h_dirac(1.3, p.map(|c| -c)));
    }

    #[test]
    fn spin_dirac_cases() {
        assert_eq!(kernel_spin_dirac(Axis::Z), Matrix4::diag_re([0.5, -0.5, 0.5, -0.5]));
        let s = spins(kernel_spin_dirac);
        assert!(su2_residual(&s) < 1e-15);
        for m in &s {
            assert_eq!(m.trace().norm(), 0.0);
        }
    }

    #[test]
    fn spin_new_cases() {
        for a in Axis::ALL {
            assert_eq!(kernel_spin_new(a, 1.0, [0.0; 3]), kernel_spin_dirac(a));
        }
        let sx = kernel_spin_new(Axis::X, 1.0, PZ);
        assert!((sx - sx.adjoint()).max_abs() > 0.1);
        let u1 = spinor_u(1, 1.0, PZ).unwrap();
        let sz = kernel_spin_new(Axis::Z, 1.0, PZ);
        assert!((sz * u1 - u1 * 0.5).max_abs() < 1e-14);
        let p = [0.4, 1.1, -2.3];
        for a in Axis::ALL {
            assert!((kernel_spin_new(a, 1.0, p) - spin_new_by_boost(a, 1.0, p)).max_abs() < 1e-12);
        }
    }

    #[test]
    fn spin_particle_cases() {
        for a in Axis::ALL {
            assert_eq!(kernel_spin_particle(a, 1.0, [0.0; 3]), kernel_spin_dirac(a));
            assert_eq!(kernel_spin_antiparticle(a, 1.0, [0.0; 3]), kernel_spin_dirac(a));
        }
        let p = [-0.3, 0.8, 1.7];
        let h = kernel_h_dirac(1.0, p);
        for a in Axis::ALL {
            let sp = kernel_spin_particle(a, 1.0, p);
            assert!(sp.is_hermitian(1e-14));
            assert!(commutator(&h, &sp).max_abs() < 1e-12);
            assert!((sp - spin_particle_by_fw(a, 1.0, p)).max_abs() < 1e-12);
            assert!(
                (kernel_spin_antiparticle(a, 1.0, p) - spin_antiparticle_by_fw(a, 1.0, p))
                    .max_abs()
                    < 1e-12
            );
        }
        let u1 = spinor_u(1, 1.0, PZ).unwrap();
        let u2 = spinor_u(2, 1.0, PZ).unwrap();
        let d = kernel_spin_new(Axis::Z, 1.0, PZ) - kernel_spin_particle(Axis::Z, 1.0, PZ);
        assert!((d * u1).max_abs() < 1e-14 && (d * u2).max_abs() < 1e-14);
    }

    #[test]
    fn velocity_cases() {
        let u1 = spinor_u(1, 1.0, PZ).unwrap();
        let vz = kernel_velocity_particle(1.0, PZ)[2];
        assert!((vz * u1 - u1 * 0.6).max_abs() < 1e-14);
        for k in kernel_velocity_particle(1.0, [0.0; 3]) {
            assert_eq!(k.max_abs(), 0.0);
        }
        let v1 = spinor_v(1, 1.0, PZ).unwrap();
        let vz_ap = kernel_velocity_antiparticle(1.0, PZ)[2];
        assert!((vz_ap * v1 + v1 * 0.6).max_abs() < 1e-14);
    }

    #[test]
    fn commutator_cases() {
        let b = dirac_basis();
        assert_eq!(commutator(&b.beta, &b.beta), Matrix4::zero());
        let p = [0.9, -0.4, 0.25];
        let h = kernel_h_dirac(1.0, p);
        for a in Axis::ALL {
            let lhs = commutator(&h, &kernel_spin_dirac(a));
            assert!((lhs - b.alpha_cross(p, a) * I).max_abs() < 1e-14);
        }
        assert!(su2_residual(&spins(|a| kernel_spin_particle(a, 1.0, p))) < 1e-13);
    }

    #[test]
    fn kernel_handles_report_names() {
        assert_eq!(MomentumKernel::spin_new(Axis::Y).name(), "S_N^y");
        let k = MomentumKernel::momentum_over_energy(Axis::Z);
        let v = k.eval(1.0, PZ);
        assert!((v - Matrix4::identity() * 0.6).max_abs() < 1e-15);
    }
}
