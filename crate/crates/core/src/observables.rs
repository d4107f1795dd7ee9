//! Local expectation values of LG vortex states and their circulations.
//!
//! Each observable has a closed form taken from the physical-region
//! analysis and a spectral oracle computed from the inverse-FW field.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::{dirac_basis, Axis, Complex64, Spinor4, Vec3};
use crate::error::{Error, Result};
use crate::field::{apply_kernels_spectral, GridSpec, Representation, SpinorField};
use crate::kernels::MomentumKernel;
use crate::wavepacket::{grad_psi_fw, lg_envelope_full, psi_fw, CylPoint, LGParams};

/// Cells whose density falls below this fraction of the peak are masked.
pub const DENSITY_FLOOR: f64 = 1e-12;

/// Prefactor convention for the closed-form velocities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Convention {
    /// `1/m`, as printed.
    #[default]
    AsPublished,
    /// `1/E0`, as implied by dividing by the full density.
    SelfConsistent,
}

impl Convention {
    /// `m` or `E0`.
    pub fn denominator(self, params: &LGParams) -> f64 {
        match self {
            Convention::AsPublished => params.m,
            Convention::SelfConsistent => params.energy(),
        }
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Convention::AsPublished => "as-published",
            Convention::SelfConsistent => "self-consistent",
        })
    }
}

impl FromStr for Convention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "as-published" => Ok(Convention::AsPublished),
            "self-consistent" => Ok(Convention::SelfConsistent),
            other => Err(Error::Config(format!(
                "unknown convention {other:?} (expected as-published or self-consistent)"
            ))),
        }
    }
}

/// `⟨Σ^z⟩ = |a|² − |b|²`.
pub fn sigma_z_expect(a: Complex64, b: Complex64) -> Result<f64> {
    let norm = a.norm_sqr() + b.norm_sqr();
    if (norm - 1.0).abs() > 1e-12 {
        return Err(Error::Unnormalized(norm));
    }
    Ok(a.norm_sqr() - b.norm_sqr())
}

/// `(⟨Σ^x⟩, ⟨Σ^y⟩, ⟨Σ^z⟩)` of the two-component spin state `(a, b)`.
pub fn spin_vector(a: Complex64, b: Complex64) -> Vec3 {
    let ab = a.conj() * b;
    [2.0 * ab.re, 2.0 * ab.im, a.norm_sqr() - b.norm_sqr()]
}

/// `⟨Σ^φ⟩ = −sin φ ⟨Σ^x⟩ + cos φ ⟨Σ^y⟩`.
pub fn sigma_phi(params: &LGParams, phi: f64) -> f64 {
    let s = spin_vector(params.a, params.b);
    -phi.sin() * s[0] + phi.cos() * s[1]
}

fn on_axis_check(point: &CylPoint) -> Result<()> {
    if point.rho == 0.0 {
        Err(Error::OnAxis)
    } else {
        Ok(())
    }
}

/// `(E0/m) ψ_FW†ψ_FW`.
pub fn density_approx(params: &LGParams, point: &CylPoint) -> f64 {
    params.energy() / params.m * lg_envelope_full(params, point).norm_sqr()
}

/// The spin term `p0 l ⟨Σ^φ⟩ ψ_FW†ψ_FW / (m (E0+m) ρ)`, with `p^3` read as `p0`.
pub fn density_spin_correction(params: &LGParams, point: &CylPoint) -> Result<f64> {
    on_axis_check(point)?;
    let e = params.energy();
    let m = params.m;
    Ok(params.p0 * params.l as f64 * sigma_phi(params, point.phi)
        / (m * (e + m) * point.rho)
        * lg_envelope_full(params, point).norm_sqr())
}

/// How a local density is obtained.
#[derive(Debug, Clone, Copy)]
pub enum DensityMode<'a> {
    /// `ψ†ψ` of an original-representation field, bilinearly interpolated.
    Oracle(&'a SpinorField),
    Approx,
    ApproxWithSpin,
}

pub fn local_density(params: &LGParams, point: &CylPoint, mode: DensityMode<'_>) -> Result<f64> {
    match mode {
        DensityMode::Approx => Ok(density_approx(params, point)),
        DensityMode::ApproxWithSpin => {
            Ok(density_approx(params, point) + density_spin_correction(params, point)?)
        }
        DensityMode::Oracle(field) => {
            field_in(field, Representation::Original)?;
            let dens = field.density();
            interpolate(field.spec(), &dens, point.x(), point.y())
        }
    }
}

fn field_in(field: &SpinorField, rep: Representation) -> Result<()> {
    if field.representation() != rep {
        return Err(Error::Representation {
            expected: match rep {
                Representation::Original => "original",
                Representation::FoldyWouthuysen => "foldy-wouthuysen",
            },
        });
    }
    Ok(())
}

fn interpolate(spec: &GridSpec, data: &[f64], x: f64, y: f64) -> Result<f64> {
    let (ix, iy, tx, ty) = spec.locate(x, y).ok_or(Error::PathOutsideGrid { x, y })?;
    let c = |i, j| data[spec.index(i, j)];
    let v = (1.0 - tx) * (1.0 - ty) * c(ix, iy)
        + tx * (1.0 - ty) * c(ix + 1, iy)
        + (1.0 - tx) * ty * c(ix, iy + 1)
        + tx * ty * c(ix + 1, iy + 1);
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::PathOutsideGrid { x, y })
    }
}

/// Particle velocity `(−ly/(Dρ²), lx/(Dρ²), p0/D)` with `D = m` or `E0`.
pub fn particle_velocity_closed(
    params: &LGParams,
    point: &CylPoint,
    convention: Convention,
) -> Result<Vec3> {
    on_axis_check(point)?;
    let d = convention.denominator(params);
    let l = params.l as f64;
    let r2 = point.rho * point.rho;
    Ok([
        -l * point.y() / (d * r2),
        l * point.x() / (d * r2),
        params.p0 / d,
    ])
}

/// `1 ∓ ⟨Σ^z⟩` for `l ≷ 0`, and 0 for `l = 0`.
pub fn dirac_factor(params: &LGParams) -> f64 {
    let s = params.sigma_z();
    match params.l.signum() {
        1 => 1.0 - s,
        -1 => 1.0 + s,
        _ => 0.0,
    }
}

/// Dirac velocity closed form `(−ly/ρ²(1∓s), lx/ρ²(1∓s), p0)/D`.
pub fn dirac_velocity_closed(
    params: &LGParams,
    point: &CylPoint,
    convention: Convention,
) -> Result<Vec3> {
    let v = particle_velocity_closed(params, point, convention)?;
    let f = dirac_factor(params);
    Ok([v[0] * f, v[1] * f, v[2]])
}

/// Dirac velocity from FW-representation bilinears,
/// `[(i∇ψ†)ψ − ψ†(i∇ψ) + ∇×(ψ†Σψ)] / (2E0 ψ†ψ)` with analytic gradients.
pub fn dirac_velocity_fw(params: &LGParams, point: &CylPoint) -> Result<Vec3> {
    let psi = psi_fw(params, point);
    let grad = grad_psi_fw(params, point);
    let dens = psi.norm_sqr();
    if dens == 0.0 {
        return Err(Error::OnAxis);
    }
    let sigma = dirac_basis().sigma;
    // ∂_i (ψ†Σ^j ψ) = 2 Re(ψ†Σ^j ∂_i ψ)
    let dspin = |i: usize, j: usize| 2.0 * psi.inner(&(sigma[j] * grad[i])).re;
    let mut v = [0.0; 3];
    for k in Axis::ALL {
        let (i, j) = k.cyclic_rest();
        let (i, j) = (i.index(), j.index());
        let current = 2.0 * psi.inner(&grad[k.index()]).im;
        let curl = dspin(i, j) - dspin(j, i);
        v[k.index()] = (current + curl) / (2.0 * params.energy() * dens);
    }
    Ok(v)
}

/// Velocity samples on a transverse grid, with low-density cells masked.
#[derive(Debug, Clone)]
pub struct VelocityMap {
    spec: GridSpec,
    density: Vec<f64>,
    velocity: [Vec<f64>; 3],
}

impl VelocityMap {
    fn from_numerators(spec: GridSpec, density: Vec<f64>, num: [Vec<f64>; 3]) -> Self {
        let peak = density.iter().cloned().fold(0.0, f64::max);
        let floor = DENSITY_FLOOR * peak;
        let velocity = num.map(|nk| {
            nk.iter()
                .zip(&density)
                .map(|(&n, &d)| if d > floor { n / d } else { f64::NAN })
                .collect()
        });
        VelocityMap {
            spec,
            density,
            velocity,
        }
    }

    /// `Re{ψ†(P/E)ψ}/ψ†ψ` through spectral application of `P^k/E`.
    pub fn particle_oracle(field: &SpinorField) -> Result<Self> {
        field_in(field, Representation::Original)?;
        let kernels = Axis::ALL.map(MomentumKernel::momentum_over_energy);
        let applied = apply_kernels_spectral(field, &kernels)?;
        let num = [0, 1, 2].map(|k| {
            field
                .values()
                .iter()
                .zip(applied[k].values())
                .map(|(a, b)| a.inner(b).re)
                .collect()
        });
        Ok(Self::from_numerators(*field.spec(), field.density(), num))
    }

    /// `ψ†αψ/ψ†ψ`, pointwise.
    pub fn dirac_oracle(field: &SpinorField) -> Result<Self> {
        field_in(field, Representation::Original)?;
        let alpha = dirac_basis().alpha;
        let num = [0, 1, 2].map(|k| {
            field
                .values()
                .iter()
                .map(|s| s.expect(&alpha[k]).re)
                .collect()
        });
        Ok(Self::from_numerators(*field.spec(), field.density(), num))
    }

    /// Sample a closed-form provider on the grid; singular points become NaN.
    pub fn from_provider(provider: &VelocityField<'_>, spec: GridSpec, z: f64) -> Self {
        let n = spec.n;
        let params = provider.params();
        let mut density = Vec::with_capacity(n * n);
        let mut velocity = [vec![], vec![], vec![]];
        for q in 0..n * n {
            let point = CylPoint::from_cartesian(spec.coord(q % n), spec.coord(q / n), z);
            density.push(density_approx(params, &point));
            let v = provider.eval(&point).unwrap_or([f64::NAN; 3]);
            for k in 0..3 {
                velocity[k].push(v[k]);
            }
        }
        VelocityMap {
            spec,
            density,
            velocity,
        }
    }

    pub fn spec(&self) -> &GridSpec {
        &self.spec
    }

    pub fn density(&self) -> &[f64] {
        &self.density
    }

    pub fn component(&self, axis: Axis) -> &[f64] {
        &self.velocity[axis.index()]
    }

    /// Velocity at grid node `(ix, iy)`.
    pub fn at(&self, ix: usize, iy: usize) -> Vec3 {
        let q = self.spec.index(ix, iy);
        [0, 1, 2].map(|k| self.velocity[k][q])
    }

    /// Bilinear interpolation; fails outside the grid or next to masked cells.
    pub fn eval(&self, x: f64, y: f64) -> Result<Vec3> {
        Ok([
            interpolate(&self.spec, &self.velocity[0], x, y)?,
            interpolate(&self.spec, &self.velocity[1], x, y)?,
            interpolate(&self.spec, &self.velocity[2], x, y)?,
        ])
    }
}

/// Source of a local velocity field.
#[derive(Debug, Clone, Copy)]
pub enum VelocityField<'a> {
    ParticleClosed(LGParams, Convention),
    DiracClosed(LGParams, Convention),
    DiracFw(LGParams),
    Oracle(LGParams, &'a VelocityMap),
}

impl VelocityField<'_> {
    pub fn params(&self) -> &LGParams {
        match self {
            VelocityField::ParticleClosed(p, _)
            | VelocityField::DiracClosed(p, _)
            | VelocityField::DiracFw(p)
            | VelocityField::Oracle(p, _) => p,
        }
    }

    pub fn convention(&self) -> Option<Convention> {
        match self {
            VelocityField::ParticleClosed(_, c) | VelocityField::DiracClosed(_, c) => Some(*c),
            _ => None,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            VelocityField::ParticleClosed(..) => "particle-closed",
            VelocityField::DiracClosed(..) => "dirac-closed",
            VelocityField::DiracFw(..) => "dirac-fw",
            VelocityField::Oracle(..) => "oracle",
        }
    }

    pub fn eval(&self, point: &CylPoint) -> Result<Vec3> {
        match self {
            VelocityField::ParticleClosed(p, c) => particle_velocity_closed(p, point, *c),
            VelocityField::DiracClosed(p, c) => dirac_velocity_closed(p, point, *c),
            VelocityField::DiracFw(p) => dirac_velocity_fw(p, point),
            VelocityField::Oracle(_, map) => map.eval(point.x(), point.y()),
        }
    }
}

/// Outcome of a line integral around the beam axis.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CirculationResult {
    pub gamma: f64,
    pub path_radius: f64,
    pub z: f64,
    pub node_count: usize,
    pub provider: String,
    pub convention: Option<Convention>,
}

/// `∮ v·dl` around the circle `ρ = rho0` by the periodic trapezoid rule.
pub fn circulation(
    vfield: &VelocityField<'_>,
    rho0: f64,
    z: f64,
    nodes: usize,
) -> Result<CirculationResult> {
    if nodes < 16 {
        return Err(Error::TooFewNodes {
            got: nodes,
            min: 16,
        });
    }
    let params = vfield.params();
    let (lo, hi) = params.physical_region();
    if !(lo < rho0 && rho0 < hi) {
        return Err(Error::OutsidePhysicalRegion { rho: rho0, lo, hi });
    }
    let dphi = 2.0 * PI / nodes as f64;
    let mut sum = 0.0;
    for k in 0..nodes {
        let phi = k as f64 * dphi;
        let point = CylPoint { rho: rho0, phi, z };
        let v = vfield.eval(&point)?;
        sum += -v[0] * phi.sin() + v[1] * phi.cos();
    }
    Ok(CirculationResult {
        gamma: sum * rho0 * dphi,
        path_radius: rho0,
        z,
        node_count: nodes,
        provider: vfield.label().to_string(),
        convention: vfield.convention(),
    })
}

/// `⟨Σ^z⟩_i = (2i − (n−1))/(n−1)`, `i = 0..n`.
pub fn default_sweep(n: usize) -> Vec<f64> {
    if n < 2 {
        return vec![0.0; n];
    }
    let d = (n - 1) as f64;
    (0..n).map(|i| (2.0 * i as f64 - d) / d).collect()
}

/// One row of a circulation-versus-spin table.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub sigma_z: f64,
    pub gamma_p: f64,
    pub gamma_d: f64,
    pub ratio: f64,
}

/// Closed-form `(⟨Σ^z⟩, Γ_P, Γ_D, Γ_D/Γ_P)` rows.
pub fn sweep_gamma(
    params: &LGParams,
    sigma_z: &[f64],
    convention: Convention,
    rho0: f64,
    nodes: usize,
) -> Result<Vec<SweepRow>> {
    sigma_z
        .iter()
        .map(|&s| {
            let p = params.with_sigma_z(s)?;
            let gp = circulation(&VelocityField::ParticleClosed(p, convention), rho0, 0.0, nodes)?;
            let gd = circulation(&VelocityField::DiracClosed(p, convention), rho0, 0.0, nodes)?;
            Ok(SweepRow {
                sigma_z: s,
                gamma_p: gp.gamma,
                gamma_d: gd.gamma,
                ratio: gd.gamma / gp.gamma,
            })
        })
        .collect()
}

/// Oracle fields of one spin state in one transverse plane.
#[derive(Debug, Clone)]
pub struct OracleMaps {
    pub params: LGParams,
    pub z: f64,
    pub fw: SpinorField,
    pub original: SpinorField,
    pub particle: VelocityMap,
    pub dirac: VelocityMap,
}

impl OracleMaps {
    pub fn build(params: &LGParams, grid: &GridSpec, z: f64) -> Result<Self> {
        let fw = crate::field::sample_fw(params, grid, z)?;
        let original = crate::field::to_original(&fw)?;
        let particle = VelocityMap::particle_oracle(&original)?;
        let dirac = VelocityMap::dirac_oracle(&original)?;
        Ok(OracleMaps {
            params: *params,
            z,
            fw,
            original,
            particle,
            dirac,
        })
    }

    pub fn gamma_p(&self, rho0: f64, nodes: usize) -> Result<CirculationResult> {
        circulation(&VelocityField::Oracle(self.params, &self.particle), rho0, self.z, nodes)
    }

    pub fn gamma_d(&self, rho0: f64, nodes: usize) -> Result<CirculationResult> {
        circulation(&VelocityField::Oracle(self.params, &self.dirac), rho0, self.z, nodes)
    }
}

/// Oracle rows: each spin state is sampled, inverse-FW transformed and integrated.
pub fn sweep_gamma_oracle(
    params: &LGParams,
    grid: &GridSpec,
    sigma_z: &[f64],
    rho0: f64,
    nodes: usize,
) -> Result<Vec<SweepRow>> {
    sigma_z
        .iter()
        .map(|&s| {
            let maps = OracleMaps::build(&params.with_sigma_z(s)?, grid, 0.0)?;
            let gp = maps.gamma_p(rho0, nodes)?.gamma;
            let gd = maps.gamma_d(rho0, nodes)?.gamma;
            Ok(SweepRow {
                sigma_z: s,
                gamma_p: gp,
                gamma_d: gd,
                ratio: gd / gp,
            })
        })
        .collect()
}

/// `(l + 2⟨S_D^z⟩)/E0`, the paraxial value of `⟨(r×α)^z⟩`.
pub fn oam_alpha_z_paraxial(params: &LGParams) -> f64 {
    (params.l as f64 + params.sigma_z()) / params.energy()
}

/// `(1/E)(l + 2⟨S^z⟩ + 2(⟨S⟩·p p^z − ⟨S^z⟩ p·p)/(p0²(p0+m)))` at momentum `p`.
pub fn oam_alpha_z_full(params: &LGParams, p: Vec3) -> f64 {
    let s = spin_vector(params.a, params.b).map(|c| 0.5 * c);
    let e = (p[0] * p[0] + p[1] * p[1] + p[2] * p[2] + params.m * params.m).sqrt();
    let sp = s[0] * p[0] + s[1] * p[1] + s[2] * p[2];
    let pp = p[0] * p[0] + p[1] * p[1] + p[2] * p[2];
    let p0 = params.p0;
    (params.l as f64 + 2.0 * s[2] + 2.0 * (sp * p[2] - s[2] * pp) / (p0 * p0 * (p0 + params.m))) / e
}

/// `∫ψ†(xα^y − yα^x)ψ / ∫ψ†ψ` over the transverse grid.
pub fn oam_alpha_z_oracle(field: &SpinorField) -> Result<f64> {
    field_in(field, Representation::Original)?;
    let b = dirac_basis();
    let mut num = 0.0;
    let mut den = 0.0;
    for ((x, y), s) in field.coordinates().zip(field.values()) {
        let op = b.alpha[1] * x - b.alpha[0] * y;
        num += s.expect(&op).re;
        den += s.norm_sqr();
    }
    Ok(num / den)
}

/// `ψ†Σ^zψ/ψ†ψ` at every grid node of an original-representation field.
pub fn sigma_z_map(field: &SpinorField) -> Result<Vec<f64>> {
    field_in(field, Representation::Original)?;
    let sz = dirac_basis().sigma[2];
    Ok(field
        .values()
        .iter()
        .map(|s: &Spinor4| s.expect(&sz).re / s.norm_sqr())
        .collect())
}
