//! Transverse spinor fields of a collimated beam and the spectral inverse FW map.
//!
//! A field stores `χ(x, y)` on an `N × N` periodic grid for the model
//! `ψ(x) = e^{ip0 z} χ(x, y)`. Momentum-space operators act with the
//! longitudinal momentum pinned to `p0`.

use std::f64::consts::PI;
use std::path::Path;

use rustfft::{Fft, FftPlanner};
use serde::{Deserialize, Serialize};

use crate::algebra::{check_mass, dirac_basis, fw_matrix_unchecked, Complex64, Matrix4, Spinor4, Vec3};
use crate::error::{Error, Result};
use crate::kernels::MomentumKernel;
use crate::output::{write_atomic, CsvTable};
use crate::wavepacket::{Envelope, LGParams};

/// Largest boundary-ring magnitude, relative to the peak, a field may carry.
pub const ALIASING_LIMIT: f64 = 1e-10;

/// Uniform periodic grid `x_i = −L + i·2L/N`, `i = 0..N`, on both transverse axes.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct GridSpec {
    pub n: usize,
    pub half_width: f64,
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec {
            n: 512,
            half_width: 120.0,
        }
    }
}

impl GridSpec {
    pub fn validate(&self) -> Result<()> {
        if self.n < 16 || self.n % 2 != 0 {
            return Err(Error::InvalidParams(format!(
                "grid needs an even point count >= 16, got {}",
                self.n
            )));
        }
        if !(self.half_width > 0.0 && self.half_width.is_finite()) {
            return Err(Error::InvalidParams(format!(
                "grid half-width must be positive, got {}",
                self.half_width
            )));
        }
        Ok(())
    }

    pub fn spacing(&self) -> f64 {
        2.0 * self.half_width / self.n as f64
    }

    pub fn coord(&self, i: usize) -> f64 {
        -self.half_width + i as f64 * self.spacing()
    }

    /// Angular wavenumber of FFT bin `i`, `2π·fftfreq(N, Δx)`.
    pub fn wavenumber(&self, i: usize) -> f64 {
        let n = self.n as isize;
        let i = i as isize;
        let f = if i < n / 2 { i } else { i - n };
        2.0 * PI * f as f64 / (self.n as f64 * self.spacing())
    }

    /// `π/Δx`.
    pub fn nyquist(&self) -> f64 {
        PI / self.spacing()
    }

    pub fn index(&self, ix: usize, iy: usize) -> usize {
        iy * self.n + ix
    }

    /// Cell containing `(x, y)` and the fractional offsets within it.
    pub fn locate(&self, x: f64, y: f64) -> Option<(usize, usize, f64, f64)> {
        let h = self.spacing();
        let fx = (x + self.half_width) / h;
        let fy = (y + self.half_width) / h;
        if !(fx >= 0.0 && fy >= 0.0) {
            return None;
        }
        let (ix, iy) = (fx.floor() as usize, fy.floor() as usize);
        if ix + 1 >= self.n || iy + 1 >= self.n {
            return None;
        }
        Some((ix, iy, fx - ix as f64, fy - iy as f64))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Representation {
    FoldyWouthuysen,
    Original,
}

/// Spinor samples `χ(x_i, y_j)` at a fixed `z`.
#[derive(Debug, Clone, PartialEq)]
pub struct SpinorField {
    spec: GridSpec,
    z: f64,
    p0: f64,
    m: f64,
    representation: Representation,
    values: Vec<Spinor4>,
}

impl SpinorField {
    pub fn from_values(
        spec: GridSpec,
        z: f64,
        p0: f64,
        m: f64,
        representation: Representation,
        values: Vec<Spinor4>,
    ) -> Result<Self> {
        spec.validate()?;
        check_mass(m)?;
        if values.len() != spec.n * spec.n {
            return Err(Error::InvalidParams(format!(
                "expected {} samples, got {}",
                spec.n * spec.n,
                values.len()
            )));
        }
        Ok(SpinorField {
            spec,
            z,
            p0,
            m,
            representation,
            values,
        })
    }

    pub fn spec(&self) -> &GridSpec {
        &self.spec
    }

    pub fn z(&self) -> f64 {
        self.z
    }

    pub fn p0(&self) -> f64 {
        self.p0
    }

    pub fn mass(&self) -> f64 {
        self.m
    }

    pub fn representation(&self) -> Representation {
        self.representation
    }

    pub fn values(&self) -> &[Spinor4] {
        &self.values
    }

    pub fn at(&self, ix: usize, iy: usize) -> Spinor4 {
        self.values[self.spec.index(ix, iy)]
    }

    /// `χ†χ` at every grid point.
    pub fn density(&self) -> Vec<f64> {
        self.values.iter().map(Spinor4::norm_sqr).collect()
    }

    /// `Σ|χ|² Δx²`.
    pub fn norm(&self) -> f64 {
        let h = self.spec.spacing();
        self.values.iter().map(Spinor4::norm_sqr).sum::<f64>() * h * h
    }

    pub fn peak(&self) -> f64 {
        self.values.iter().map(Spinor4::max_abs).fold(0.0, f64::max)
    }

    /// Largest magnitude on the outermost ring of the grid, relative to the peak.
    pub fn boundary_ratio(&self) -> f64 {
        let n = self.spec.n;
        let peak = self.peak();
        if peak == 0.0 {
            return 0.0;
        }
        let mut edge: f64 = 0.0;
        for i in 0..n {
            for (ix, iy) in [(i, 0), (i, n - 1), (0, i), (n - 1, i)] {
                edge = edge.max(self.at(ix, iy).max_abs());
            }
        }
        edge / peak
    }

    pub fn check_aliasing(&self) -> Result<()> {
        let ratio = self.boundary_ratio();
        if ratio > ALIASING_LIMIT {
            return Err(Error::Aliasing {
                ratio,
                limit: ALIASING_LIMIT,
            });
        }
        Ok(())
    }

    /// Momentum `(k_x, k_y, p0)` of FFT bin `(ix, iy)`.
    pub fn momentum(&self, ix: usize, iy: usize) -> Vec3 {
        [self.spec.wavenumber(ix), self.spec.wavenumber(iy), self.p0]
    }

    /// Spatial samples `(x, y)` in storage order.
    pub fn coordinates(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        let n = self.spec.n;
        (0..n * n).map(move |q| (self.spec.coord(q % n), self.spec.coord(q / n)))
    }

    fn require(&self, expected: Representation) -> Result<()> {
        if self.representation != expected {
            return Err(Error::Representation {
                expected: match expected {
                    Representation::FoldyWouthuysen => "foldy-wouthuysen",
                    Representation::Original => "original",
                },
            });
        }
        Ok(())
    }

    /// Transform, multiply every momentum sample by `kernel(k)`, transform back.
    fn spectral_map<F>(&self, kernels: &[F], representation: Representation) -> Vec<SpinorField>
    where
        F: Fn(Vec3) -> Matrix4,
    {
        let n = self.spec.n;
        let mut fft = Fft2::new(n);
        let mut comps: Vec<Vec<Complex64>> = (0..4)
            .map(|c| self.values.iter().map(|s| s.0[c]).collect())
            .collect();
        for c in comps.iter_mut() {
            fft.forward(c);
        }
        let mut out = Vec::with_capacity(kernels.len());
        for kernel in kernels {
            let mut mapped: Vec<Vec<Complex64>> = vec![vec![Complex64::default(); n * n]; 4];
            for iy in 0..n {
                for ix in 0..n {
                    let q = self.spec.index(ix, iy);
                    let s = Spinor4([comps[0][q], comps[1][q], comps[2][q], comps[3][q]]);
                    let t = kernel(self.momentum(ix, iy)) * s;
                    for (c, slot) in mapped.iter_mut().enumerate() {
                        slot[q] = t.0[c];
                    }
                }
            }
            for c in mapped.iter_mut() {
                fft.inverse(c);
            }
            let values = (0..n * n)
                .map(|q| Spinor4([mapped[0][q], mapped[1][q], mapped[2][q], mapped[3][q]]))
                .collect();
            out.push(self.with_values(values, representation));
        }
        out
    }

    fn with_values(&self, values: Vec<Spinor4>, representation: Representation) -> SpinorField {
        SpinorField {
            spec: self.spec,
            z: self.z,
            p0: self.p0,
            m: self.m,
            representation,
            values,
        }
    }

    /// `Σ_k |χ̂(k)|²` weighted by `weight(k)`, in the unnormalized DFT convention.
    pub fn spectral_energy<F: Fn(Vec3) -> f64>(&self, weight: F) -> f64 {
        let n = self.spec.n;
        let mut fft = Fft2::new(n);
        let mut total = vec![0.0; n * n];
        for c in 0..4 {
            let mut buf: Vec<Complex64> = self.values.iter().map(|s| s.0[c]).collect();
            fft.forward(&mut buf);
            for (t, b) in total.iter_mut().zip(&buf) {
                *t += b.norm_sqr();
            }
        }
        let mut sum = 0.0;
        for iy in 0..n {
            for ix in 0..n {
                sum += weight(self.momentum(ix, iy)) * total[self.spec.index(ix, iy)];
            }
        }
        sum
    }
}

/// Sample `ψ_FW` at height `z` with the carrier `e^{ip0 z}` factored out.
pub fn sample_fw(params: &LGParams, spec: &GridSpec, z: f64) -> Result<SpinorField> {
    params.validate()?;
    spec.validate()?;
    let required = 10.0 * 2.0 / params.w0;
    if spec.nyquist() < required {
        return Err(Error::UnderResolved {
            nyquist: spec.nyquist(),
            required,
        });
    }
    let spin = params.spin_part();
    let n = spec.n;
    let values = (0..n * n)
        .map(|q| {
            let x = [spec.coord(q % n), spec.coord(q / n), z];
            spin * params.slowly_varying(x)
        })
        .collect();
    SpinorField::from_values(*spec, z, params.p0, params.m, Representation::FoldyWouthuysen, values)
}

/// `ψ = √(E/m) U_FW† ψ_FW`, applied per transverse momentum with `p_z = p0`.
pub fn to_original(field: &SpinorField) -> Result<SpinorField> {
    field.require(Representation::FoldyWouthuysen)?;
    field.check_aliasing()?;
    let m = field.m;
    let basis = dirac_basis();
    let k = move |p: Vec3| {
        let e = crate::algebra::energy_unchecked(m, p);
        fw_matrix_unchecked(&basis, m, p).adjoint() * (e / m).sqrt()
    };
    Ok(field.spectral_map(&[k], Representation::Original).remove(0))
}

/// Inverse of [`to_original`]: `ψ_FW = √(m/E) U_FW ψ`.
pub fn to_fw(field: &SpinorField) -> Result<SpinorField> {
    field.require(Representation::Original)?;
    field.check_aliasing()?;
    let m = field.m;
    let basis = dirac_basis();
    let k = move |p: Vec3| {
        let e = crate::algebra::energy_unchecked(m, p);
        fw_matrix_unchecked(&basis, m, p) * (m / e).sqrt()
    };
    Ok(field.spectral_map(&[k], Representation::FoldyWouthuysen).remove(0))
}

/// `(Oψ)(x)` for a momentum-space kernel `O`, on an original-representation field.
pub fn apply_kernel_spectral(field: &SpinorField, kernel: &MomentumKernel) -> Result<SpinorField> {
    Ok(apply_kernels_spectral(field, std::slice::from_ref(kernel))?.remove(0))
}

/// Several kernels sharing one forward transform.
pub fn apply_kernels_spectral(
    field: &SpinorField,
    kernels: &[MomentumKernel],
) -> Result<Vec<SpinorField>> {
    field.require(Representation::Original)?;
    field.check_aliasing()?;
    let m = field.m;
    let fs: Vec<_> = kernels
        .iter()
        .map(|k| move |p: Vec3| k.eval(m, p))
        .collect();
    Ok(field.spectral_map(&fs, Representation::Original))
}

struct Fft2 {
    n: usize,
    fwd: std::sync::Arc<dyn Fft<f64>>,
    inv: std::sync::Arc<dyn Fft<f64>>,
    column: Vec<Complex64>,
}

impl Fft2 {
    fn new(n: usize) -> Self {
        let mut planner = FftPlanner::new();
        Fft2 {
            n,
            fwd: planner.plan_fft_forward(n),
            inv: planner.plan_fft_inverse(n),
            column: vec![Complex64::default(); n],
        }
    }

    fn forward(&mut self, data: &mut [Complex64]) {
        let f = self.fwd.clone();
        self.run(&*f, data);
    }

    fn inverse(&mut self, data: &mut [Complex64]) {
        let f = self.inv.clone();
        self.run(&*f, data);
        let s = 1.0 / (self.n * self.n) as f64;
        data.iter_mut().for_each(|c| *c *= s);
    }

    fn run(&mut self, f: &dyn Fft<f64>, data: &mut [Complex64]) {
        let n = self.n;
        for row in data.chunks_exact_mut(n) {
            f.process(row);
        }
        for ix in 0..n {
            for iy in 0..n {
                self.column[iy] = data[iy * n + ix];
            }
            f.process(&mut self.column);
            for iy in 0..n {
                data[iy * n + ix] = self.column[iy];
            }
        }
    }
}

/// Metadata written next to a field CSV.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FieldSidecar {
    pub params: LGParams,
    pub grid: GridSpec,
    pub z: f64,
    pub p0: f64,
    pub m: f64,
    pub representation: Representation,
}

impl SpinorField {
    pub fn sidecar(&self, params: &LGParams) -> FieldSidecar {
        FieldSidecar {
            params: *params,
            grid: self.spec,
            z: self.z,
            p0: self.p0,
            m: self.m,
            representation: self.representation,
        }
    }

    /// Columns `x, y, re_0, im_0, …, re_3, im_3`.
    pub fn to_csv(&self) -> CsvTable {
        let mut header = vec!["x".to_string(), "y".to_string()];
        for c in 0..4 {
            header.push(format!("re{c}"));
            header.push(format!("im{c}"));
        }
        let mut t = CsvTable::new(&header);
        for ((x, y), s) in self.coordinates().zip(&self.values) {
            let mut row = vec![x, y];
            for c in s.0 {
                row.push(c.re);
                row.push(c.im);
            }
            t.push(row);
        }
        t
    }

    /// Write `<stem>.csv` and `<stem>.json` into `dir`.
    pub fn export(&self, params: &LGParams, dir: &Path, stem: &str) -> Result<()> {
        self.to_csv().write(&dir.join(format!("{stem}.csv")))?;
        let json = serde_json::to_string_pretty(&self.sidecar(params))?;
        write_atomic(&dir.join(format!("{stem}.json")), json.as_bytes())
    }

    /// Rebuild a field from an exported pair.
    pub fn import(dir: &Path, stem: &str) -> Result<(SpinorField, FieldSidecar)> {
        let side: FieldSidecar =
            serde_json::from_str(&std::fs::read_to_string(dir.join(format!("{stem}.json")))?)?;
        let table = CsvTable::read(&dir.join(format!("{stem}.csv")))?;
        let values = table
            .rows()
            .iter()
            .map(|r| {
                Spinor4([0, 1, 2, 3].map(|c| Complex64::new(r[2 + 2 * c], r[3 + 2 * c])))
            })
            .collect();
        let field =
            SpinorField::from_values(side.grid, side.z, side.p0, side.m, side.representation, values)?;
        Ok((field, side))
    }
}
