//! Frame-conjugated position operators acting on momentum-space packets.
//!
//! A position operator in frame `F` acts as `F(p) · i∇_p · F(p)⁻¹`. The
//! identity frame gives the canonical Dirac position `r_D`; the boost frame
//! gives `R_N`, and the Foldy-Wouthuysen frames give `R_P = U†r_D U` and
//! `R_AP = U r_D U†`. Operators are never materialized: they are applied to
//! packets sampled on a uniform cubic momentum grid, with `∇_p` taken by a
//! fourth-order central difference and zero extension past the grid.

use std::fmt;

use crate::algebra::{
    boost_matrix, check_mass, dirac_basis, fw_matrix_unchecked, rapidity, Axis, Complex64,
    Matrix4, Spinor4, Vec3, I,
};
use crate::error::{Error, Result};
use crate::kernels::MomentumKernel;

/// Largest boundary-to-peak magnitude a packet may have before derivatives are refused.
pub const BOUNDARY_LIMIT: f64 = 1e-12;

/// Uniform cubic grid `p_i = −P + iΔp`, `i = 0..n`, with `Δp = 2P/n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MomentumGrid {
    n: usize,
    half_width: f64,
}

impl MomentumGrid {
    pub fn new(n: usize, half_width: f64) -> Result<Self> {
        if n < 8 || n % 2 != 0 {
            return Err(Error::InvalidParams(format!(
                "momentum grid needs an even point count >= 8, got {n}"
            )));
        }
        if !(half_width > 0.0 && half_width.is_finite()) {
            return Err(Error::InvalidParams(format!(
                "momentum box half-width must be positive, got {half_width}"
            )));
        }
        Ok(MomentumGrid { n, half_width })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn half_width(&self) -> f64 {
        self.half_width
    }

    pub fn spacing(&self) -> f64 {
        2.0 * self.half_width / self.n as f64
    }

    pub fn coord(&self, i: usize) -> f64 {
        -self.half_width + i as f64 * self.spacing()
    }

    pub fn len(&self) -> usize {
        self.n * self.n * self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn index(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.n + j) * self.n + k
    }

    pub fn point(&self, i: usize, j: usize, k: usize) -> Vec3 {
        [self.coord(i), self.coord(j), self.coord(k)]
    }

    /// Same box, twice the points per axis (half the spacing).
    pub fn refined(&self) -> MomentumGrid {
        MomentumGrid {
            n: 2 * self.n,
            half_width: self.half_width,
        }
    }

    fn point_of(&self, flat: usize) -> Vec3 {
        let k = flat % self.n;
        let j = (flat / self.n) % self.n;
        let i = flat / (self.n * self.n);
        self.point(i, j, k)
    }
}

/// A spinor-valued function of momentum sampled on a [`MomentumGrid`].
#[derive(Debug, Clone, PartialEq)]
pub struct MomentumGridPacket {
    grid: MomentumGrid,
    mass: f64,
    values: Vec<Spinor4>,
}

impl MomentumGridPacket {
    pub fn from_fn<F>(grid: MomentumGrid, mass: f64, f: F) -> Result<Self>
    where
        F: Fn(Vec3) -> Spinor4,
    {
        check_mass(mass)?;
        let values = (0..grid.len()).map(|q| f(grid.point_of(q))).collect();
        Ok(MomentumGridPacket { grid, mass, values })
    }

    pub fn grid(&self) -> &MomentumGrid {
        &self.grid
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn values(&self) -> &[Spinor4] {
        &self.values
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> Spinor4 {
        self.values[self.grid.index(i, j, k)]
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().map(Spinor4::max_abs).fold(0.0, f64::max)
    }

    /// Largest magnitude on the six faces of the box divided by the peak.
    pub fn boundary_ratio(&self) -> f64 {
        let n = self.grid.n;
        let peak = self.max_abs();
        if peak == 0.0 {
            return 0.0;
        }
        let mut edge: f64 = 0.0;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let on_face = [i, j, k].iter().any(|&c| c == 0 || c == n - 1);
                    if on_face {
                        edge = edge.max(self.get(i, j, k).max_abs());
                    }
                }
            }
        }
        edge / peak
    }

    pub fn check_boundary(&self) -> Result<()> {
        let ratio = self.boundary_ratio();
        if ratio > BOUNDARY_LIMIT {
            return Err(Error::PacketTouchesBoundary {
                ratio,
                limit: BOUNDARY_LIMIT,
            });
        }
        Ok(())
    }

    /// Pointwise `f(p, ψ(p))`.
    pub fn map<F>(&self, f: F) -> MomentumGridPacket
    where
        F: Fn(Vec3, Spinor4) -> Spinor4,
    {
        let values = self
            .values
            .iter()
            .enumerate()
            .map(|(q, &s)| f(self.grid.point_of(q), s))
            .collect();
        MomentumGridPacket {
            grid: self.grid,
            mass: self.mass,
            values,
        }
    }

    /// Multiplication by a momentum-space matrix kernel.
    pub fn apply_kernel(&self, kernel: &MomentumKernel) -> MomentumGridPacket {
        let m = self.mass;
        self.map(|p, s| kernel.eval(m, p) * s)
    }

    /// Multiplication by the momentum component `p^k`.
    pub fn times_momentum(&self, axis: Axis) -> MomentumGridPacket {
        self.map(|p, s| s * p[axis.index()])
    }

    pub fn scale(&self, c: Complex64) -> MomentumGridPacket {
        self.map(|_, s| s * c)
    }

    /// `self − other` on a shared grid.
    pub fn sub(&self, other: &MomentumGridPacket) -> MomentumGridPacket {
        assert_eq!(self.grid, other.grid, "packets live on different grids");
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(&a, &b)| a - b)
            .collect();
        MomentumGridPacket {
            grid: self.grid,
            mass: self.mass,
            values,
        }
    }

    /// `max |self − other|` over grid and components.
    pub fn max_abs_diff(&self, other: &MomentumGridPacket) -> f64 {
        self.sub(other).max_abs()
    }
}

/// Gaussian test packet `(p_x ± i p_y)^{|l|} exp(−|p − c|²/(2σ²)) χ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussianPacket {
    pub center: Vec3,
    pub width: f64,
    pub charge: i32,
    pub spinor: Spinor4,
}

impl GaussianPacket {
    pub fn eval(&self, p: Vec3) -> Spinor4 {
        self.spinor * self.scalar(p)
    }

    pub fn scalar(&self, p: Vec3) -> Complex64 {
        let d = [0, 1, 2].map(|k| p[k] - self.center[k]);
        let r2 = d[0] * d[0] + d[1] * d[1] + d[2] * d[2];
        let g = (-r2 / (2.0 * self.width * self.width)).exp();
        self.vortex(p).powu(self.charge.unsigned_abs()) * g
    }

    /// Analytic `∂ψ/∂p^k`.
    pub fn gradient(&self, p: Vec3) -> [Spinor4; 3] {
        let w2 = self.width * self.width;
        let la = self.charge.unsigned_abs();
        let v = self.vortex(p);
        let d = [0, 1, 2].map(|k| p[k] - self.center[k]);
        let r2 = d[0] * d[0] + d[1] * d[1] + d[2] * d[2];
        let g = (-r2 / (2.0 * w2)).exp();
        let vl = v.powu(la);
        let dv = if la == 0 {
            Complex64::new(0.0, 0.0)
        } else {
            v.powu(la - 1) * la as f64
        };
        let sgn = if self.charge < 0 { -1.0 } else { 1.0 };
        let dvdp = [
            Complex64::new(1.0, 0.0),
            Complex64::new(0.0, sgn),
            Complex64::new(0.0, 0.0),
        ];
        [0, 1, 2].map(|k| self.spinor * ((dv * dvdp[k] - vl * (d[k] / w2)) * g))
    }

    fn vortex(&self, p: Vec3) -> Complex64 {
        let sgn = if self.charge < 0 { -1.0 } else { 1.0 };
        Complex64::new(p[0], sgn * p[1])
    }

    pub fn sample(&self, grid: MomentumGrid, mass: f64) -> Result<MomentumGridPacket> {
        MomentumGridPacket::from_fn(grid, mass, |p| self.eval(p))
    }
}

/// The four position operators, labelled by the frame that conjugates `i∇_p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FrameConjugatedPosition {
    /// `r_D = i∇_p`.
    Dirac,
    /// `R_N = B r_D B⁻¹` with `B = exp(γ⁵Σ·ζ/2)`.
    New,
    /// `R_P = U_FW† r_D U_FW`.
    Particle,
    /// `R_AP = U_FW r_D U_FW†`.
    Antiparticle,
}

impl FrameConjugatedPosition {
    pub const ALL: [FrameConjugatedPosition; 4] = [
        FrameConjugatedPosition::Dirac,
        FrameConjugatedPosition::New,
        FrameConjugatedPosition::Particle,
        FrameConjugatedPosition::Antiparticle,
    ];

    /// The left factor `F(p)`.
    pub fn frame(self, m: f64, p: Vec3) -> Matrix4 {
        match self {
            Self::Dirac => Matrix4::identity(),
            Self::New => boost_matrix(&rapidity(m, p).expect("mass checked")),
            Self::Particle => fw_matrix_unchecked(&dirac_basis(), m, p).adjoint(),
            Self::Antiparticle => fw_matrix_unchecked(&dirac_basis(), m, p),
        }
    }

    /// The right factor `F(p)⁻¹`, in closed form.
    pub fn frame_inverse(self, m: f64, p: Vec3) -> Matrix4 {
        match self {
            Self::Dirac => Matrix4::identity(),
            Self::New => boost_matrix(&rapidity(m, p).expect("mass checked").reversed()),
            Self::Particle => fw_matrix_unchecked(&dirac_basis(), m, p),
            Self::Antiparticle => fw_matrix_unchecked(&dirac_basis(), m, p).adjoint(),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Self::Dirac => "r_D",
            Self::New => "R_N",
            Self::Particle => "R_P",
            Self::Antiparticle => "R_AP",
        }
    }
}

impl fmt::Display for FrameConjugatedPosition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

const STENCIL: [(isize, f64); 4] = [(-2, 1.0), (-1, -8.0), (1, 8.0), (2, -1.0)];

/// Fourth-order central difference of `values` along `axis`, zero outside the box.
fn derivative(grid: &MomentumGrid, values: &[Spinor4], axis: Axis) -> Vec<Spinor4> {
    let n = grid.n as isize;
    let stride = match axis {
        Axis::X => grid.n * grid.n,
        Axis::Y => grid.n,
        Axis::Z => 1,
    } as isize;
    let inv = 1.0 / (12.0 * grid.spacing());
    let mut out = vec![Spinor4::zero(); values.len()];
    for (q, slot) in out.iter_mut().enumerate() {
        let c = (q as isize / stride) % n;
        let mut acc = Spinor4::zero();
        for &(s, w) in &STENCIL {
            let t = c + s;
            if (0..n).contains(&t) {
                acc += values[(q as isize + s * stride) as usize] * w;
            }
        }
        *slot = acc * inv;
    }
    out
}

fn pull_back(pos: FrameConjugatedPosition, packet: &MomentumGridPacket) -> Vec<Spinor4> {
    let m = packet.mass;
    packet
        .values
        .iter()
        .enumerate()
        .map(|(q, &s)| pos.frame_inverse(m, packet.grid.point_of(q)) * s)
        .collect()
}

/// `R^k ψ = F · i∂_k (F⁻¹ ψ)` for one axis.
pub fn apply_position_axis(
    pos: FrameConjugatedPosition,
    axis: Axis,
    packet: &MomentumGridPacket,
) -> Result<MomentumGridPacket> {
    packet.check_boundary()?;
    let g = pull_back(pos, packet);
    let d = derivative(&packet.grid, &g, axis);
    let m = packet.mass;
    let values = d
        .into_iter()
        .enumerate()
        .map(|(q, s)| pos.frame(m, packet.grid.point_of(q)) * (s * I))
        .collect();
    Ok(MomentumGridPacket {
        grid: packet.grid,
        mass: m,
        values,
    })
}

/// All three components of `R ψ`.
pub fn apply_position(
    pos: FrameConjugatedPosition,
    packet: &MomentumGridPacket,
) -> Result<[MomentumGridPacket; 3]> {
    Ok([
        apply_position_axis(pos, Axis::X, packet)?,
        apply_position_axis(pos, Axis::Y, packet)?,
        apply_position_axis(pos, Axis::Z, packet)?,
    ])
}

/// `L^k ψ = (R^i p^j − R^j p^i) ψ` for cyclic `(k, i, j)`.
pub fn oam_action_axis(
    pos: FrameConjugatedPosition,
    axis: Axis,
    packet: &MomentumGridPacket,
) -> Result<MomentumGridPacket> {
    packet.check_boundary()?;
    let (i, j) = axis.cyclic_rest();
    let g = pull_back(pos, packet);
    let di = derivative(&packet.grid, &g, i);
    let dj = derivative(&packet.grid, &g, j);
    drop(g);
    let m = packet.mass;
    let values = di
        .into_iter()
        .zip(dj)
        .enumerate()
        .map(|(q, (a, b))| {
            let p = packet.grid.point_of(q);
            pos.frame(m, p) * ((a * p[j.index()] - b * p[i.index()]) * I)
        })
        .collect();
    Ok(MomentumGridPacket {
        grid: packet.grid,
        mass: m,
        values,
    })
}

pub fn oam_action(
    pos: FrameConjugatedPosition,
    packet: &MomentumGridPacket,
) -> Result<[MomentumGridPacket; 3]> {
    Ok([
        oam_action_axis(pos, Axis::X, packet)?,
        oam_action_axis(pos, Axis::Y, packet)?,
        oam_action_axis(pos, Axis::Z, packet)?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn packet(n: usize, charge: i32) -> (GaussianPacket, MomentumGridPacket) {
        let g = GaussianPacket {
            center: [0.3, -0.2, 0.4],
            width: 1.0,
            charge,
            spinor: Spinor4::from_real([0.6, 0.0, 0.0, 0.8]),
        };
        let grid = MomentumGrid::new(n, 9.0).unwrap();
        let s = g.sample(grid, 1.0).unwrap();
        (g, s)
    }

    #[test]
    fn dirac_position_matches_analytic_gradient() {
        let err = |n| {
            let (g, s) = packet(n, 1);
            let r = apply_position_axis(FrameConjugatedPosition::Dirac, Axis::X, &s).unwrap();
            let exact = s.map(|p, _| g.gradient(p)[0] * I);
            r.max_abs_diff(&exact) / s.max_abs()
        };
        let (coarse, fine) = (err(32), err(64));
        assert!(fine < 5e-3);
        assert!(coarse / fine > 10.0, "{coarse:e} {fine:e}");
    }

    #[test]
    fn plain_gaussian_gradient() {
        let grid = MomentumGrid::new(48, 9.0).unwrap();
        let e1 = Spinor4::basis(0);
        let s = MomentumGridPacket::from_fn(grid, 1.0, |p| {
            e1 * (-(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]) / 2.0).exp()
        })
        .unwrap();
        let r = apply_position_axis(FrameConjugatedPosition::Dirac, Axis::Y, &s).unwrap();
        let exact = s.map(|p, v| v * Complex64::new(0.0, -p[1]));
        assert!(r.max_abs_diff(&exact) < 5e-3);
    }

    #[test]
    fn canonical_oam_eigenvalue() {
        let grid = MomentumGrid::new(64, 9.0).unwrap();
        let g = GaussianPacket {
            center: [0.0, 0.0, 0.5],
            width: 1.0,
            charge: 2,
            spinor: Spinor4::basis(1),
        };
        let s = g.sample(grid, 1.0).unwrap();
        let l = oam_action_axis(FrameConjugatedPosition::Dirac, Axis::Z, &s).unwrap();
        let expect = s.scale(Complex64::new(2.0, 0.0));
        assert!(l.max_abs_diff(&expect) / s.max_abs() < 5e-2);
    }

    #[test]
    fn boundary_refusal() {
        let grid = MomentumGrid::new(16, 2.0).unwrap();
        let g = GaussianPacket {
            center: [0.0; 3],
            width: 1.0,
            charge: 0,
            spinor: Spinor4::basis(0),
        };
        let s = g.sample(grid, 1.0).unwrap();
        assert!(matches!(
            apply_position(FrameConjugatedPosition::Particle, &s),
            Err(Error::PacketTouchesBoundary { .. })
        ));
    }

    #[test]
    fn frames_invert() {
        let p = [0.4, -1.1, 2.5];
        for pos in FrameConjugatedPosition::ALL {
            let r = pos.frame(1.3, p) * pos.frame_inverse(1.3, p) - Matrix4::identity();
            assert!(r.max_abs() < 1e-13, "{pos}");
        }
    }

    #[test]
    fn particle_oam_is_conserved() {
        let h = MomentumKernel::h_dirac();
        let residual = |pos, n| {
            let (_, s) = packet(n, 1);
            let lh = oam_action_axis(pos, Axis::Z, &s.apply_kernel(&h)).unwrap();
            let hl = oam_action_axis(pos, Axis::Z, &s).unwrap().apply_kernel(&h);
            lh.max_abs_diff(&hl) / s.max_abs()
        };
        let (coarse, fine) = (
            residual(FrameConjugatedPosition::Particle, 32),
            residual(FrameConjugatedPosition::Particle, 64),
        );
        assert!(coarse / fine > 10.0, "{coarse:e} {fine:e}");
        assert!(residual(FrameConjugatedPosition::Dirac, 32) > 0.5);
    }
}
