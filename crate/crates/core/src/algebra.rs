//! Dirac matrix algebra in the standard representation.
//!
//! Everything here is closed form: the gamma matrices, the plane-wave
//! spinors `u^{1..4}` and `v^{1,2}`, the boost `exp(γ⁵Σ·ζ/2)` and the
//! Foldy-Wouthuysen unitary. Natural units (ħ = c = 1) are used
//! throughout and spinors carry the `u†u = E/m` normalization.

use std::fmt;
use std::ops::{Add, AddAssign, Index, IndexMut, Mul, Neg, Sub};
use std::sync::OnceLock;

pub use num_complex::Complex64;

use crate::error::{Error, Result};

/// A 3-vector of real components `(x, y, z)`.
pub type Vec3 = [f64; 3];

pub const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub const ONE: Complex64 = Complex64::new(1.0, 0.0);
pub const I: Complex64 = Complex64::new(0.0, 1.0);

/// Cartesian axis label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];

    pub fn index(self) -> usize {
        match self {
            Axis::X => 0,
            Axis::Y => 1,
            Axis::Z => 2,
        }
    }

    pub fn from_index(k: usize) -> Axis {
        Axis::ALL[k % 3]
    }

    /// The pair `(j, k)` such that `(self, j, k)` is a cyclic permutation of `(x, y, z)`.
    pub fn cyclic_rest(self) -> (Axis, Axis) {
        match self {
            Axis::X => (Axis::Y, Axis::Z),
            Axis::Y => (Axis::Z, Axis::X),
            Axis::Z => (Axis::X, Axis::Y),
        }
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axis::X => "x",
            Axis::Y => "y",
            Axis::Z => "z",
        })
    }
}

pub fn dot3(a: Vec3, b: Vec3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub fn norm3(a: Vec3) -> f64 {
    dot3(a, a).sqrt()
}

/// Levi-Civita symbol `ε_ijk` with `ε_xyz = 1`.
pub fn levi_civita(i: usize, j: usize, k: usize) -> f64 {
    match (i, j, k) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1.0,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1.0,
        _ => 0.0,
    }
}

/// 4-component complex spinor.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Spinor4(pub [Complex64; 4]);

impl Spinor4 {
    pub const fn zero() -> Self {
        Spinor4([ZERO; 4])
    }

    /// Unit spinor `e_k` (k = 0..3).
    pub fn basis(k: usize) -> Self {
        let mut s = Spinor4::zero();
        s.0[k] = ONE;
        s
    }

    pub fn from_real(c: [f64; 4]) -> Self {
        Spinor4(c.map(|x| Complex64::new(x, 0.0)))
    }

    /// Hermitian inner product `self† · other`.
    pub fn inner(&self, other: &Spinor4) -> Complex64 {
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.0.iter().map(|c| c.norm_sqr()).sum()
    }

    pub fn scale(&self, s: Complex64) -> Spinor4 {
        Spinor4(self.0.map(|c| c * s))
    }

    pub fn scale_re(&self, s: f64) -> Spinor4 {
        Spinor4(self.0.map(|c| c * s))
    }

    /// Largest component modulus.
    pub fn max_abs(&self) -> f64 {
        self.0.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Bilinear `self† M self`.
    pub fn expect(&self, m: &Matrix4) -> Complex64 {
        self.inner(&(*m * *self))
    }
}

impl Index<usize> for Spinor4 {
    type Output = Complex64;
    fn index(&self, k: usize) -> &Complex64 {
        &self.0[k]
    }
}

impl IndexMut<usize> for Spinor4 {
    fn index_mut(&mut self, k: usize) -> &mut Complex64 {
        &mut self.0[k]
    }
}

impl Add for Spinor4 {
    type Output = Spinor4;
    fn add(self, rhs: Spinor4) -> Spinor4 {
        let mut out = self;
        out += rhs;
        out
    }
}

impl AddAssign for Spinor4 {
    fn add_assign(&mut self, rhs: Spinor4) {
        for (a, b) in self.0.iter_mut().zip(rhs.0) {
            *a += b;
        }
    }
}

impl Sub for Spinor4 {
    type Output = Spinor4;
    fn sub(self, rhs: Spinor4) -> Spinor4 {
        let mut out = self;
        for (a, b) in out.0.iter_mut().zip(rhs.0) {
            *a -= b;
        }
        out
    }
}

impl Neg for Spinor4 {
    type Output = Spinor4;
    fn neg(self) -> Spinor4 {
        Spinor4(self.0.map(|c| -c))
    }
}

impl Mul<Complex64> for Spinor4 {
    type Output = Spinor4;
    fn mul(self, s: Complex64) -> Spinor4 {
        self.scale(s)
    }
}

impl Mul<f64> for Spinor4 {
    type Output = Spinor4;
    fn mul(self, s: f64) -> Spinor4 {
        self.scale_re(s)
    }
}

/// 4×4 complex matrix, row major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Matrix4(pub [[Complex64; 4]; 4]);

impl Default for Matrix4 {
    fn default() -> Self {
        Matrix4::zero()
    }
}

impl Matrix4 {
    pub const fn zero() -> Self {
        Matrix4([[ZERO; 4]; 4])
    }

    pub fn identity() -> Self {
        Matrix4::diag([ONE; 4])
    }

    pub fn diag(d: [Complex64; 4]) -> Self {
        let mut m = Matrix4::zero();
        for (k, v) in d.into_iter().enumerate() {
            m.0[k][k] = v;
        }
        m
    }

    pub fn diag_re(d: [f64; 4]) -> Self {
        Matrix4::diag(d.map(|x| Complex64::new(x, 0.0)))
    }

    /// Assemble from 2×2 blocks `[[a, b], [c, d]]`.
    pub fn from_blocks(a: Matrix2, b: Matrix2, c: Matrix2, d: Matrix2) -> Self {
        let mut m = Matrix4::zero();
        for i in 0..2 {
            for j in 0..2 {
                m.0[i][j] = a[i][j];
                m.0[i][j + 2] = b[i][j];
                m.0[i + 2][j] = c[i][j];
                m.0[i + 2][j + 2] = d[i][j];
            }
        }
        m
    }

    pub fn adjoint(&self) -> Matrix4 {
        let mut m = Matrix4::zero();
        for i in 0..4 {
            for j in 0..4 {
                m.0[i][j] = self.0[j][i].conj();
            }
        }
        m
    }

    pub fn trace(&self) -> Complex64 {
        (0..4).map(|k| self.0[k][k]).sum()
    }

    pub fn scale(&self, s: Complex64) -> Matrix4 {
        Matrix4(self.0.map(|row| row.map(|c| c * s)))
    }

    pub fn scale_re(&self, s: f64) -> Matrix4 {
        Matrix4(self.0.map(|row| row.map(|c| c * s)))
    }

    /// Largest entry modulus; the residual norm used by every identity check.
    pub fn max_abs(&self) -> f64 {
        self.0
            .iter()
            .flat_map(|row| row.iter())
            .map(|c| c.norm())
            .fold(0.0, f64::max)
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        (*self - self.adjoint()).max_abs() <= tol
    }

    /// Inverse by Gauss-Jordan elimination with partial pivoting.
    pub fn inverse(&self) -> Option<Matrix4> {
        let mut a = self.0;
        let mut inv = Matrix4::identity().0;
        for col in 0..4 {
            let pivot = (col..4)
                .max_by(|&r, &s| a[r][col].norm().total_cmp(&a[s][col].norm()))
                .unwrap();
            if a[pivot][col].norm() < 1e-300 {
                return None;
            }
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let p = a[col][col].inv();
            for j in 0..4 {
                a[col][j] *= p;
                inv[col][j] *= p;
            }
            for r in 0..4 {
                if r != col {
                    let f = a[r][col];
                    if f != ZERO {
                        for j in 0..4 {
                            a[r][j] -= f * a[col][j];
                            inv[r][j] -= f * inv[col][j];
                        }
                    }
                }
            }
        }
        Some(Matrix4(inv))
    }
}

impl Index<(usize, usize)> for Matrix4 {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.0[i][j]
    }
}

impl IndexMut<(usize, usize)> for Matrix4 {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.0[i][j]
    }
}

impl Add for Matrix4 {
    type Output = Matrix4;
    fn add(self, rhs: Matrix4) -> Matrix4 {
        let mut out = self;
        out += rhs;
        out
    }
}

impl AddAssign for Matrix4 {
    fn add_assign(&mut self, rhs: Matrix4) {
        for i in 0..4 {
            for j in 0..4 {
                self.0[i][j] += rhs.0[i][j];
            }
        }
    }
}

impl Sub for Matrix4 {
    type Output = Matrix4;
    fn sub(self, rhs: Matrix4) -> Matrix4 {
        let mut out = self;
        for i in 0..4 {
            for j in 0..4 {
                out.0[i][j] -= rhs.0[i][j];
            }
        }
        out
    }
}

impl Neg for Matrix4 {
    type Output = Matrix4;
    fn neg(self) -> Matrix4 {
        self.scale_re(-1.0)
    }
}

impl Mul for Matrix4 {
    type Output = Matrix4;
    fn mul(self, rhs: Matrix4) -> Matrix4 {
        let mut out = Matrix4::zero();
        for i in 0..4 {
            for k in 0..4 {
                let a = self.0[i][k];
                if a == ZERO {
                    continue;
                }
                for j in 0..4 {
                    out.0[i][j] += a * rhs.0[k][j];
                }
            }
        }
        out
    }
}

impl Mul<Spinor4> for Matrix4 {
    type Output = Spinor4;
    fn mul(self, v: Spinor4) -> Spinor4 {
        let mut out = Spinor4::zero();
        for i in 0..4 {
            out.0[i] = self.0[i][0] * v.0[0]
                + self.0[i][1] * v.0[1]
                + self.0[i][2] * v.0[2]
                + self.0[i][3] * v.0[3];
        }
        out
    }
}

impl Mul<Complex64> for Matrix4 {
    type Output = Matrix4;
    fn mul(self, s: Complex64) -> Matrix4 {
        self.scale(s)
    }
}

impl Mul<f64> for Matrix4 {
    type Output = Matrix4;
    fn mul(self, s: f64) -> Matrix4 {
        self.scale_re(s)
    }
}

/// 2×2 complex block.
pub type Matrix2 = [[Complex64; 2]; 2];

const Z2: Matrix2 = [[ZERO; 2]; 2];
const I2: Matrix2 = [[ONE, ZERO], [ZERO, ONE]];

fn neg2(m: Matrix2) -> Matrix2 {
    m.map(|row| row.map(|c| -c))
}

/// Pauli matrices `σ^x, σ^y, σ^z`.
pub fn pauli() -> [Matrix2; 3] {
    [
        [[ZERO, ONE], [ONE, ZERO]],
        [[ZERO, -I], [I, ZERO]],
        [[ONE, ZERO], [ZERO, -ONE]],
    ]
}

/// The Dirac matrices of the standard representation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiracBasis {
    pub alpha: [Matrix4; 3],
    pub beta: Matrix4,
    /// `γ^0 .. γ^3`.
    pub gamma: [Matrix4; 4],
    pub gamma5: Matrix4,
    pub sigma: [Matrix4; 3],
}

impl DiracBasis {
    /// `α·v` for a real 3-vector.
    pub fn alpha_dot(&self, v: Vec3) -> Matrix4 {
        self.alpha[0] * v[0] + self.alpha[1] * v[1] + self.alpha[2] * v[2]
    }

    /// `Σ·v` for a real 3-vector.
    pub fn sigma_dot(&self, v: Vec3) -> Matrix4 {
        self.sigma[0] * v[0] + self.sigma[1] * v[1] + self.sigma[2] * v[2]
    }

    /// `(α×v)^k = ε_kij α^i v^j`.
    pub fn alpha_cross(&self, v: Vec3, k: Axis) -> Matrix4 {
        let (i, j) = k.cyclic_rest();
        self.alpha[i.index()] * v[j.index()] - self.alpha[j.index()] * v[i.index()]
    }
}

/// The standard-representation basis. Entries are exactly 0, ±1, ±i.
pub fn dirac_basis() -> DiracBasis {
    static BASIS: OnceLock<DiracBasis> = OnceLock::new();
    *BASIS.get_or_init(build_basis)
}

fn build_basis() -> DiracBasis {
    let s = pauli();
    let alpha = s.map(|sk| Matrix4::from_blocks(Z2, sk, sk, Z2));
    let beta = Matrix4::diag_re([1.0, 1.0, -1.0, -1.0]);
    let gk = s.map(|sk| Matrix4::from_blocks(Z2, sk, neg2(sk), Z2));
    let gamma5 = Matrix4::from_blocks(Z2, I2, I2, Z2);
    let sigma = s.map(|sk| Matrix4::from_blocks(sk, Z2, Z2, sk));
    DiracBasis {
        alpha,
        beta,
        gamma: [beta, gk[0], gk[1], gk[2]],
        gamma5,
        sigma,
    }
}

/// Mass and 3-momentum. The energy is always derived.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FourMomentum {
    m: f64,
    p: Vec3,
}

impl FourMomentum {
    pub fn new(m: f64, p: Vec3) -> Result<Self> {
        check_mass(m)?;
        Ok(FourMomentum { m, p })
    }

    pub fn mass(&self) -> f64 {
        self.m
    }

    pub fn momentum(&self) -> Vec3 {
        self.p
    }

    pub fn energy(&self) -> f64 {
        energy_unchecked(self.m, self.p)
    }
}

pub(crate) fn check_mass(m: f64) -> Result<()> {
    if m > 0.0 && m.is_finite() {
        Ok(())
    } else {
        Err(Error::NonPositiveMass(m))
    }
}

pub(crate) fn energy_unchecked(m: f64, p: Vec3) -> f64 {
    (dot3(p, p) + m * m).sqrt()
}

/// `E = √(p·p + m²)`.
pub fn energy(m: f64, p: Vec3) -> Result<f64> {
    check_mass(m)?;
    Ok(energy_unchecked(m, p))
}

/// Boost rapidity vector `ζ = 2 p̂ atanh(|p|/(E+m))`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoostParams {
    pub zeta: Vec3,
}

impl BoostParams {
    pub fn magnitude(&self) -> f64 {
        norm3(self.zeta)
    }

    pub fn reversed(&self) -> BoostParams {
        BoostParams {
            zeta: self.zeta.map(|c| -c),
        }
    }
}

pub fn rapidity(m: f64, p: Vec3) -> Result<BoostParams> {
    let e = energy(m, p)?;
    let pn = norm3(p);
    if pn == 0.0 {
        return Ok(BoostParams { zeta: [0.0; 3] });
    }
    let mag = 2.0 * (pn / (e + m)).atanh();
    Ok(BoostParams {
        zeta: p.map(|c| c * mag / pn),
    })
}

/// `exp(γ⁵Σ·ζ/2) = cosh(|ζ|/2) + sinh(|ζ|/2) α·ζ̂`, using `γ⁵Σ^k = α^k` and `(α·ζ̂)² = 1`.
pub fn boost_matrix(boost: &BoostParams) -> Matrix4 {
    let mag = boost.magnitude();
    if mag == 0.0 {
        return Matrix4::identity();
    }
    let basis = dirac_basis();
    let dir = boost.zeta.map(|c| c / mag);
    Matrix4::identity() * (0.5 * mag).cosh() + basis.alpha_dot(dir) * (0.5 * mag).sinh()
}

/// Plane-wave eigenspinors of `H_D`: `u^{1,2}` at `+E`, `u^{3,4}` at `−E`.
pub fn spinor_u(index: usize, m: f64, p: Vec3) -> Result<Spinor4> {
    let e = energy(m, p)?;
    let n = (2.0 * m * (e + m)).sqrt();
    let c = |re: f64, im: f64| Complex64::new(re / n, im / n);
    let [px, py, pz] = p;
    let em = e + m;
    let s = match index {
        1 => [c(em, 0.0), c(0.0, 0.0), c(pz, 0.0), c(px, py)],
        2 => [c(0.0, 0.0), c(em, 0.0), c(px, -py), c(-pz, 0.0)],
        3 => [c(-pz, 0.0), c(-px, -py), c(em, 0.0), c(0.0, 0.0)],
        4 => [c(-px, py), c(pz, 0.0), c(0.0, 0.0), c(em, 0.0)],
        _ => return Err(Error::SpinorIndex { index, max: 4 }),
    };
    Ok(Spinor4(s))
}

/// Antiparticle spinors solving `(γ^μ p_μ + m) v = 0` with `p^0 = +E`.
pub fn spinor_v(index: usize, m: f64, p: Vec3) -> Result<Spinor4> {
    let e = energy(m, p)?;
    let n = (2.0 * m * (e + m)).sqrt();
    let c = |re: f64, im: f64| Complex64::new(re / n, im / n);
    let [px, py, pz] = p;
    let em = e + m;
    let s = match index {
        1 => [c(pz, 0.0), c(px, py), c(em, 0.0), c(0.0, 0.0)],
        2 => [c(px, -py), c(-pz, 0.0), c(0.0, 0.0), c(em, 0.0)],
        _ => return Err(Error::SpinorIndex { index, max: 2 }),
    };
    Ok(Spinor4(s))
}

/// Foldy-Wouthuysen unitary `(E + m + βα·p)/√(2E(E+m))`.
pub fn fw_matrix(m: f64, p: Vec3) -> Result<Matrix4> {
    check_mass(m)?;
    Ok(fw_matrix_unchecked(&dirac_basis(), m, p))
}

pub(crate) fn fw_matrix_unchecked(basis: &DiracBasis, m: f64, p: Vec3) -> Matrix4 {
    let e = energy_unchecked(m, p);
    let norm = (2.0 * e * (e + m)).sqrt();
    (Matrix4::identity() * (e + m) + basis.beta * basis.alpha_dot(p)) * (1.0 / norm)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn basis_identities() {
        let b = dirac_basis();
        assert_eq!(b.beta * b.beta, Matrix4::identity());
        assert_eq!(b.alpha[0] * b.alpha[1] + b.alpha[1] * b.alpha[0], Matrix4::zero());
        for j in 0..3 {
            for k in 0..3 {
                let anti = b.alpha[j] * b.alpha[k] + b.alpha[k] * b.alpha[j];
                let expect = if j == k { Matrix4::identity() * 2.0 } else { Matrix4::zero() };
                assert_eq!(anti, expect);
            }
            assert_eq!(b.gamma5 * b.sigma[j], b.alpha[j]);
            assert_eq!(b.gamma[j + 1], b.beta * b.alpha[j]);
        }
        assert_eq!(b.gamma[0], b.beta);
    }

    #[test]
    fn gamma5_sigma_z_is_alpha_z() {
        let b = dirac_basis();
        let expect = Matrix4([
            [ZERO, ZERO, ONE, ZERO],
            [ZERO, ZERO, ZERO, -ONE],
            [ONE, ZERO, ZERO, ZERO],
            [ZERO, -ONE, ZERO, ZERO],
        ]);
        assert_eq!(b.gamma5 * b.sigma[2], expect);
        assert_eq!(b.alpha[2], expect);
    }

    #[test]
    fn energy_cases() {
        assert_eq!(energy(1.0, [0.0; 3]).unwrap(), 1.0);
        assert_abs_diff_eq!(energy(1.0, [0.0, 0.0, 0.75]).unwrap(), 1.25, epsilon = 1e-15);
        assert_eq!(energy(2.0, [0.0; 3]).unwrap(), 2.0);
        assert!(matches!(energy(0.0, [0.0; 3]), Err(Error::NonPositiveMass(_))));
        assert!(matches!(energy(-1.0, [1.0; 3]), Err(Error::NonPositiveMass(_))));
    }

    #[test]
    fn rapidity_cases() {
        assert_eq!(rapidity(1.0, [0.0; 3]).unwrap().zeta, [0.0; 3]);
        let z = rapidity(1.0, [0.0, 0.0, 0.75]).unwrap();
        assert_abs_diff_eq!(z.zeta[2], std::f64::consts::LN_2, epsilon = 1e-15);
        assert_eq!(z.zeta[0], 0.0);
        assert_abs_diff_eq!(z.magnitude().cosh(), 1.25, epsilon = 1e-14);
        // |ζ| = atanh(|p|/E)
        let p = [0.3, -1.2, 2.5];
        let e = energy(1.7, p).unwrap();
        assert_abs_diff_eq!(
            rapidity(1.7, p).unwrap().magnitude(),
            (norm3(p) / e).atanh(),
            epsilon = 1e-13
        );
    }

    #[test]
    fn boost_cases() {
        assert_eq!(boost_matrix(&BoostParams { zeta: [0.0; 3] }), Matrix4::identity());
        let p = [0.0, 0.0, 0.75];
        let b = boost_matrix(&rapidity(1.0, p).unwrap());
        let u1 = b * Spinor4::basis(0);
        let expect = spinor_u(1, 1.0, p).unwrap();
        assert!((u1 - expect).max_abs() < 1e-14);
    }

    #[test]
    fn spinor_u_cases() {
        assert_eq!(spinor_u(1, 1.0, [0.0; 3]).unwrap(), Spinor4::basis(0));
        let u = spinor_u(1, 1.0, [0.0, 0.0, 0.75]).unwrap();
        let expect = Spinor4::from_real([1.0606601717798212, 0.0, 0.3535533905932738, 0.0]);
        assert!((u - expect).max_abs() < 1e-7);
        assert_abs_diff_eq!(u.norm_sqr(), 1.25, epsilon = 1e-14);
        assert!(matches!(spinor_u(0, 1.0, [0.0; 3]), Err(Error::SpinorIndex { .. })));
        assert!(matches!(spinor_u(5, 1.0, [0.0; 3]), Err(Error::SpinorIndex { .. })));
    }

    #[test]
    fn spinor_v_cases() {
        assert_eq!(spinor_v(1, 1.0, [0.0; 3]).unwrap(), Spinor4::basis(2));
        assert!(matches!(spinor_v(3, 1.0, [0.0; 3]), Err(Error::SpinorIndex { .. })));
        let p = [0.4, -0.9, 1.3];
        let v1 = spinor_v(1, 1.0, p).unwrap();
        let v2 = spinor_v(2, 1.0, p).unwrap();
        assert!(v1.inner(&v2).norm() < 1e-14);
    }

    #[test]
    fn fw_cases() {
        assert_eq!(fw_matrix(1.0, [0.0; 3]).unwrap(), Matrix4::identity());
        let b = dirac_basis();
        let p = [0.0, 0.0, 0.75];
        let u = fw_matrix(1.0, p).unwrap();
        let h = b.alpha_dot(p) + b.beta;
        let d = u * h * u.adjoint();
        let expect = Matrix4::diag([c(1.25), c(1.25), c(-1.25), c(-1.25)]);
        assert!((d - expect).max_abs() < 1e-14);
    }

    #[test]
    fn inverse_roundtrip() {
        let b = boost_matrix(&rapidity(1.0, [0.3, 0.2, -1.1]).unwrap());
        let inv = b.inverse().unwrap();
        assert!((b * inv - Matrix4::identity()).max_abs() < 1e-13);
        assert!(Matrix4::zero().inverse().is_none());
    }
}
