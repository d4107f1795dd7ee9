//! Laguerre-Gauss vortex states in the Foldy-Wouthuysen representation.
//!
//! The FW state is `ψ_FW = e^{ip0 z} ψ̃(x) (a, b, 0, 0)ᵀ` with the LG
//! envelope
//!
//! ```text
//! ψ̃ = w^{-|l|-1} exp(-ρ²/w²) L_n^{|l|}(2ρ²/w²) ρ^{|l|} e^{ilφ} exp(-iNθ(z) + iΦ(ρ,z))
//! ```
//!
//! where `N = 2n + |l| + 1`, `θ = atan(z/z0)` and `w(z) = w0 √(1 + (z/z0)²)`.
//! The envelope is evaluated in the Cartesian form `(x + i sgn(l) y)^{|l|}`,
//! which keeps the gradient regular on the axis.

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use serde::{Deserialize, Serialize};

use crate::algebra::{check_mass, Complex64, Spinor4, Vec3, I, ZERO};
use crate::error::{Error, Result};

/// Longitudinal curvature phase `Φ(ρ, z)` of the envelope.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CurvaturePhase {
    /// `2zρ²/(z0 w(z))`.
    #[default]
    AsPrinted,
    /// `p0 ρ² z / (2(z² + z0²))`, the wavefront curvature of a Gaussian beam.
    GaussianBeam,
}

/// Parameters of a single LG mode.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct LGParams {
    pub n: u32,
    pub l: i32,
    pub w0: f64,
    pub p0: f64,
    pub m: f64,
    pub a: Complex64,
    pub b: Complex64,
    pub curvature: CurvaturePhase,
}

impl Default for LGParams {
    fn default() -> Self {
        LGParams {
            n: 0,
            l: 1,
            w0: 20.0,
            p0: 10.0,
            m: 1.0,
            a: Complex64::new(1.0, 0.0),
            b: ZERO,
            curvature: CurvaturePhase::AsPrinted,
        }
    }
}

/// Spin amplitudes `(√((1+s)/2), √((1−s)/2))` realizing `⟨Σ^z⟩ = s`.
pub fn spin_amplitudes(sigma_z: f64) -> Result<(Complex64, Complex64)> {
    if !(-1.0..=1.0).contains(&sigma_z) {
        return Err(Error::InvalidParams(format!(
            "<Sigma^z> must lie in [-1, 1], got {sigma_z}"
        )));
    }
    Ok((
        Complex64::new(((1.0 + sigma_z) / 2.0).sqrt(), 0.0),
        Complex64::new(((1.0 - sigma_z) / 2.0).sqrt(), 0.0),
    ))
}

impl LGParams {
    pub fn validate(&self) -> Result<()> {
        check_mass(self.m)?;
        if !(self.w0 > 0.0 && self.w0.is_finite()) {
            return Err(Error::InvalidParams(format!("w0 must be positive, got {}", self.w0)));
        }
        if !(self.p0 > 0.0 && self.p0.is_finite()) {
            return Err(Error::InvalidParams(format!("p0 must be positive, got {}", self.p0)));
        }
        let norm = self.a.norm_sqr() + self.b.norm_sqr();
        if (norm - 1.0).abs() > 1e-12 {
            return Err(Error::Unnormalized(norm));
        }
        let (lo, hi) = self.physical_region();
        if lo >= hi {
            return Err(Error::InvalidParams(format!(
                "empty physical vortex region: 1/m = {lo} >= w0/sqrt(2) = {hi}"
            )));
        }
        Ok(())
    }

    pub fn with_sigma_z(mut self, sigma_z: f64) -> Result<Self> {
        let (a, b) = spin_amplitudes(sigma_z)?;
        self.a = a;
        self.b = b;
        Ok(self)
    }

    /// `2/(w0 p0)`; small for paraxial beams.
    pub fn paraxiality(&self) -> f64 {
        2.0 / (self.w0 * self.p0)
    }

    /// Rayleigh length `z0 = p0 w0²/2`.
    pub fn rayleigh(&self) -> f64 {
        0.5 * self.p0 * self.w0 * self.w0
    }

    pub fn width(&self, z: f64) -> f64 {
        let t = z / self.rayleigh();
        self.w0 * (1.0 + t * t).sqrt()
    }

    /// `E0 = √(p0² + m²)`.
    pub fn energy(&self) -> f64 {
        self.p0.hypot(self.m)
    }

    /// `(1/m, w0/√2)`.
    pub fn physical_region(&self) -> (f64, f64) {
        (1.0 / self.m, self.w0 * FRAC_1_SQRT_2)
    }

    pub fn abs_l(&self) -> u32 {
        self.l.unsigned_abs()
    }

    /// `⟨Σ^z⟩ = |a|² − |b|²`.
    pub fn sigma_z(&self) -> f64 {
        self.a.norm_sqr() - self.b.norm_sqr()
    }

    /// FW spinor part `(a, b, 0, 0)ᵀ`.
    pub fn spin_part(&self) -> Spinor4 {
        Spinor4([self.a, self.b, ZERO, ZERO])
    }

    /// `d_0(l) = binomial(n+|l|, n)`.
    pub fn d0(&self) -> f64 {
        binomial(self.n + self.abs_l(), self.n)
    }

    /// `∫|ψ̃|² dx dy = π (n+|l|)! / (n! 2^{|l|+1})`.
    pub fn analytic_norm(&self) -> f64 {
        let la = self.abs_l();
        let mut ratio = 1.0;
        for k in (self.n + 1)..=(self.n + la) {
            ratio *= k as f64;
        }
        PI * ratio / 2f64.powi(la as i32 + 1)
    }
}

/// Point in cylindrical coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CylPoint {
    pub rho: f64,
    pub phi: f64,
    pub z: f64,
}

impl CylPoint {
    pub fn new(rho: f64, phi: f64, z: f64) -> Result<Self> {
        if !(rho >= 0.0 && rho.is_finite()) {
            return Err(Error::InvalidParams(format!("rho must be >= 0, got {rho}")));
        }
        Ok(CylPoint {
            rho,
            phi: phi.rem_euclid(2.0 * PI),
            z,
        })
    }

    pub fn from_cartesian(x: f64, y: f64, z: f64) -> Self {
        CylPoint {
            rho: x.hypot(y),
            phi: y.atan2(x).rem_euclid(2.0 * PI),
            z,
        }
    }

    pub fn x(&self) -> f64 {
        self.rho * self.phi.cos()
    }

    pub fn y(&self) -> f64 {
        self.rho * self.phi.sin()
    }

    pub fn cartesian(&self) -> Vec3 {
        [self.x(), self.y(), self.z]
    }

    pub fn in_physical_region(&self, params: &LGParams) -> bool {
        let (lo, hi) = params.physical_region();
        lo < self.rho && self.rho < hi
    }
}

fn binomial(n: u32, k: u32) -> f64 {
    let k = k.min(n - k);
    (0..k).fold(1.0, |acc, j| acc * (n - j) as f64 / (j + 1) as f64)
}

/// Associated Laguerre polynomial `L_n^α(x)` by the three-term recurrence.
pub fn laguerre(n: u32, alpha: u32, x: f64) -> f64 {
    let a = alpha as f64;
    let mut prev = 1.0;
    if n == 0 {
        return prev;
    }
    let mut cur = 1.0 + a - x;
    for k in 1..n {
        let k = k as f64;
        let next = ((2.0 * k + 1.0 + a - x) * cur - (k + a) * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// `dL_n^α/dx = −L_{n−1}^{α+1}`.
pub fn laguerre_derivative(n: u32, alpha: u32, x: f64) -> f64 {
    if n == 0 {
        0.0
    } else {
        -laguerre(n - 1, alpha + 1, x)
    }
}

/// Explicit power-series coefficients of `L_n^α`.
#[derive(Debug, Clone, PartialEq)]
pub struct LaguerreCoeffs {
    pub n: u32,
    pub alpha: u32,
    /// `d_j = (−1)^j binomial(n+α, n−j) / j!`.
    pub coeffs: Vec<f64>,
}

impl LaguerreCoeffs {
    pub fn new(n: u32, alpha: u32) -> Self {
        let mut fact = 1.0;
        let coeffs = (0..=n)
            .map(|j| {
                if j > 0 {
                    fact *= j as f64;
                }
                let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
                sign * binomial(n + alpha, n - j) / fact
            })
            .collect();
        LaguerreCoeffs { n, alpha, coeffs }
    }

    pub fn d0(&self) -> f64 {
        self.coeffs[0]
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }
}

/// A scalar beam envelope `ψ = e^{ip0 z} ψ̃(x)`.
pub trait Envelope {
    fn carrier(&self) -> f64;
    /// Slowly varying part `ψ̃` at a Cartesian point.
    fn slowly_varying(&self, x: Vec3) -> Complex64;
    /// Analytic `∇ψ̃`.
    fn slowly_varying_gradient(&self, x: Vec3) -> [Complex64; 3];
    /// Transverse and longitudinal length scales.
    fn scales(&self, z: f64) -> (f64, f64);
}

/// Plane wave `e^{ip0 z}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlaneWave {
    pub p0: f64,
}

impl Envelope for PlaneWave {
    fn carrier(&self) -> f64 {
        self.p0
    }

    fn slowly_varying(&self, _: Vec3) -> Complex64 {
        Complex64::new(1.0, 0.0)
    }

    fn slowly_varying_gradient(&self, _: Vec3) -> [Complex64; 3] {
        [ZERO; 3]
    }

    fn scales(&self, _: f64) -> (f64, f64) {
        (1.0, 1.0)
    }
}

struct Radial {
    w: f64,
    dw: f64,
    amp: Complex64,
    damp: Complex64,
    phi: f64,
    dphi_drho2: f64,
    dphi_dz: f64,
}

impl LGParams {
    fn radial(&self, rho2: f64, z: f64) -> Radial {
        let z0 = self.rayleigh();
        let w = self.width(z);
        let dw = self.w0 * self.w0 * z / (z0 * z0 * w);
        let la = self.abs_l() as f64;
        let order = (2 * self.n + self.abs_l() + 1) as f64;
        let gouy = (z / z0).atan();
        let dgouy = z0 / (z0 * z0 + z * z);
        let amp = Complex64::from_polar(w.powf(-(la + 1.0)), -order * gouy);
        let damp = amp * Complex64::new(-(la + 1.0) * dw / w, -order * dgouy);
        let (phi, dphi_drho2, dphi_dz) = match self.curvature {
            CurvaturePhase::AsPrinted => (
                2.0 * z * rho2 / (z0 * w),
                2.0 * z / (z0 * w),
                2.0 * rho2 / (z0 * w) - 2.0 * z * rho2 * dw / (z0 * w * w),
            ),
            CurvaturePhase::GaussianBeam => {
                let d = z * z + z0 * z0;
                (
                    self.p0 * rho2 * z / (2.0 * d),
                    self.p0 * z / (2.0 * d),
                    0.5 * self.p0 * rho2 * (z0 * z0 - z * z) / (d * d),
                )
            }
        };
        Radial {
            w,
            dw,
            amp,
            damp,
            phi,
            dphi_drho2,
            dphi_dz,
        }
    }

    fn vortex(&self, x: f64, y: f64) -> Complex64 {
        let s = if self.l < 0 { -1.0 } else { 1.0 };
        Complex64::new(x, s * y)
    }
}

impl Envelope for LGParams {
    fn carrier(&self) -> f64 {
        self.p0
    }

    fn slowly_varying(&self, x: Vec3) -> Complex64 {
        let rho2 = x[0] * x[0] + x[1] * x[1];
        let r = self.radial(rho2, x[2]);
        let w2 = r.w * r.w;
        let g = (-rho2 / w2).exp();
        let lag = laguerre(self.n, self.abs_l(), 2.0 * rho2 / w2);
        r.amp * self.vortex(x[0], x[1]).powu(self.abs_l()) * (g * lag) * Complex64::cis(r.phi)
    }

    fn slowly_varying_gradient(&self, x: Vec3) -> [Complex64; 3] {
        let [px, py, z] = x;
        let rho2 = px * px + py * py;
        let la = self.abs_l();
        let r = self.radial(rho2, z);
        let w2 = r.w * r.w;
        let xx = 2.0 * rho2 / w2;
        let g = (-rho2 / w2).exp();
        let lag = laguerre(self.n, la, xx);
        let dlag = laguerre_derivative(self.n, la, xx);
        let phase = Complex64::cis(r.phi);
        let v = self.vortex(px, py);
        let vl = v.powu(la);
        let dvl = if la == 0 { ZERO } else { v.powu(la - 1) * la as f64 };
        let s = if self.l < 0 { -1.0 } else { 1.0 };

        // d/d(ρ²) of G·L·e^{iΦ}
        let radial = g * lag * phase;
        let d_radial = phase * g * (-lag / w2 + dlag * 2.0 / w2) + radial * I * r.dphi_drho2;

        let gx = r.amp * (dvl * radial + vl * d_radial * (2.0 * px));
        let gy = r.amp * (dvl * I * s * radial + vl * d_radial * (2.0 * py));

        let dg_dz = g * 2.0 * rho2 * r.dw / (w2 * r.w);
        let dlag_dz = dlag * (-4.0 * rho2 * r.dw / (w2 * r.w));
        let d_radial_dz =
            phase * (dg_dz * lag + g * dlag_dz) + radial * I * r.dphi_dz;
        let gz = vl * (r.damp * radial + r.amp * d_radial_dz);
        [gx, gy, gz]
    }

    fn scales(&self, z: f64) -> (f64, f64) {
        (self.width(z), self.rayleigh())
    }
}

/// Full envelope including the carrier, `e^{ip0 z} ψ̃`.
pub fn lg_envelope_full(params: &LGParams, point: &CylPoint) -> Complex64 {
    Complex64::cis(params.p0 * point.z) * params.slowly_varying(point.cartesian())
}

/// Physical-region form `d_0 e^{ip0 z} ρ^{|l|} e^{ilφ} / w0^{|l|+1}`.
pub fn lg_envelope_simplified(params: &LGParams, point: &CylPoint) -> Complex64 {
    let la = params.abs_l() as i32;
    let modulus = params.d0() * point.rho.powi(la) / params.w0.powi(la + 1);
    Complex64::from_polar(modulus, params.l as f64 * point.phi + params.p0 * point.z)
}

/// `ψ_FW = e^{ip0 z} ψ̃ (a, b, 0, 0)ᵀ`.
pub fn psi_fw(params: &LGParams, point: &CylPoint) -> Spinor4 {
    params.spin_part() * lg_envelope_full(params, point)
}

/// Cartesian gradient `(∂_x, ∂_y, ∂_z) ψ_FW`.
pub fn grad_psi_fw(params: &LGParams, point: &CylPoint) -> [Spinor4; 3] {
    let x = point.cartesian();
    let carrier = Complex64::cis(params.p0 * point.z);
    let f = params.slowly_varying(x);
    let [gx, gy, gz] = params.slowly_varying_gradient(x);
    let spin = params.spin_part();
    [
        spin * (carrier * gx),
        spin * (carrier * gy),
        spin * (carrier * (gz + I * params.p0 * f)),
    ]
}

fn d4<F: Fn(f64) -> Complex64>(f: F, h: f64) -> Complex64 {
    (f(-2.0 * h) - f(-h) * 8.0 + f(h) * 8.0 - f(2.0 * h)) / (12.0 * h)
}

/// Defect of the mono-energetic wave equation, `|(∂_z² + 2ip0∂_z + ∇⊥²)ψ̃| / (p0²|ψ̃|)`.
///
/// Second derivatives are fourth-order differences of the analytic gradient
/// with steps `w/200` and `z0/200`.
pub fn paraxial_residual<E: Envelope>(env: &E, point: &CylPoint) -> f64 {
    let x = point.cartesian();
    let p0 = env.carrier();
    let (ht, hz) = env.scales(point.z);
    let (ht, hz) = (ht / 200.0, hz / 200.0);
    let f = env.slowly_varying(x);
    let g = env.slowly_varying_gradient(x);
    let shifted = |k: usize, h: f64| {
        let mut y = x;
        y[k] += h;
        env.slowly_varying_gradient(y)[k]
    };
    let lap_t = d4(|h| shifted(0, h), ht) + d4(|h| shifted(1, h), ht);
    let dzz = d4(|h| shifted(2, h), hz);
    let defect = dzz + I * (2.0 * p0) * g[2] + lap_t;
    if f.norm() == 0.0 {
        return if defect.norm() == 0.0 { 0.0 } else { f64::INFINITY };
    }
    defect.norm() / (p0 * p0 * f.norm())
}

/// Winding of `arg ψ̃` around the circle of radius `rho` at height `z`, by unwrapping 256 samples.
pub fn winding_number(params: &LGParams, rho: f64, z: f64) -> i64 {
    const SAMPLES: usize = 256;
    let mut total = 0.0;
    let mut prev = params
        .slowly_varying([rho, 0.0, z])
        .arg();
    for k in 1..=SAMPLES {
        let phi = 2.0 * PI * k as f64 / SAMPLES as f64;
        let cur = params
            .slowly_varying([rho * phi.cos(), rho * phi.sin(), z])
            .arg();
        let mut d = cur - prev;
        d -= 2.0 * PI * (d / (2.0 * PI)).round();
        total += d;
        prev = cur;
    }
    (total / (2.0 * PI)).round() as i64
}
