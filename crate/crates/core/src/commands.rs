//! Batch commands writing plot-ready CSV and JSON into an output directory.

use std::f64::consts::PI;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::algebra::{energy, fw_matrix, spinor_u, spinor_v, Axis, Matrix4, Vec3};
use crate::config::RunConfig;
use crate::error::Result;
use crate::kernels::{
    kernel_h_dirac, kernel_h_fw, kernel_h_tilde, kernel_spin_antiparticle, kernel_spin_dirac,
    kernel_spin_new, kernel_spin_particle, kernel_velocity_particle,
};
use crate::observables::{
    circulation, density_approx, density_spin_correction, dirac_velocity_closed,
    dirac_velocity_fw, oam_alpha_z_oracle, oam_alpha_z_paraxial, particle_velocity_closed,
    sweep_gamma, sweep_gamma_oracle, CirculationResult, Convention, OracleMaps, SweepRow,
    VelocityField,
};
use crate::output::{write_atomic, CsvTable};
use crate::verify::{run_suite, VerificationReport};
use crate::wavepacket::CylPoint;

/// Relative error allowed between oracle and closed forms in `compare`.
pub const COMPARE_TOLERANCE: f64 = 0.05;

/// Result of one command: files written and whether its checks passed.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Outcome {
    pub command: String,
    pub files: Vec<PathBuf>,
    pub pass: bool,
}

#[derive(Serialize)]
struct Manifest<'a> {
    command: &'a str,
    config: &'a RunConfig,
    files: Vec<String>,
    pass: bool,
}

fn finish(cfg: &RunConfig, command: &str, mut files: Vec<PathBuf>, pass: bool) -> Result<Outcome> {
    let names = files
        .iter()
        .map(|f| f.file_name().unwrap_or_default().to_string_lossy().into_owned())
        .collect();
    let manifest = Manifest {
        command,
        config: cfg,
        files: names,
        pass,
    };
    let path = cfg.out.join(format!("manifest_{command}.json"));
    write_json(&path, &manifest)?;
    files.push(path);
    Ok(Outcome {
        command: command.to_string(),
        files,
        pass,
    })
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    write_atomic(path, text.as_bytes())
}

fn write_csv(dir: &Path, name: &str, table: &CsvTable, files: &mut Vec<PathBuf>) -> Result<()> {
    let path = dir.join(name);
    table.write(&path)?;
    files.push(path);
    Ok(())
}

pub fn cmd_verify(cfg: &RunConfig) -> Result<(VerificationReport, Outcome)> {
    let report = run_suite(&cfg.suite())?;
    let path = cfg.out.join("verify_report.json");
    write_json(&path, &report)?;
    let outcome = finish(cfg, "verify", vec![path], report.pass)?;
    Ok((report, outcome))
}

#[derive(Serialize)]
struct OperatorEntry {
    momentum: Vec3,
    operator: String,
    /// Rows of `[re, im]` pairs.
    matrix: Vec<Vec<[f64; 2]>>,
}

fn matrix_entry(momentum: Vec3, operator: String, m: &Matrix4) -> OperatorEntry {
    OperatorEntry {
        momentum,
        operator,
        matrix: m
            .0
            .iter()
            .map(|row| row.iter().map(|c| [c.re, c.im]).collect())
            .collect(),
    }
}

/// Plane-wave spinors and momentum-space operator matrices at the configured momenta.
pub fn cmd_spinors(cfg: &RunConfig) -> Result<Outcome> {
    let m = cfg.params.m;
    let mut header = vec!["px", "py", "pz", "energy", "family", "index"]
        .into_iter()
        .map(String::from)
        .collect::<Vec<_>>();
    for c in 0..4 {
        header.push(format!("re{c}"));
        header.push(format!("im{c}"));
    }
    let mut spinors = CsvTable::new(&header);
    let mut ops = Vec::new();
    for &p in &cfg.momenta {
        let e = energy(m, p)?;
        let rows = (1..=4)
            .map(|r| Ok((0.0, r, spinor_u(r, m, p)?)))
            .chain((1..=2).map(|r| Ok((1.0, r, spinor_v(r, m, p)?))))
            .collect::<Result<Vec<_>>>()?;
        for (family, r, s) in rows {
            let mut row = vec![p[0], p[1], p[2], e, family, r as f64];
            for c in s.0 {
                row.push(c.re);
                row.push(c.im);
            }
            spinors.push(row);
        }
        ops.push(matrix_entry(p, "H_D".into(), &kernel_h_dirac(m, p)));
        ops.push(matrix_entry(p, "H~_D".into(), &kernel_h_tilde(m, p)));
        ops.push(matrix_entry(p, "H_FW".into(), &kernel_h_fw(m, p)));
        ops.push(matrix_entry(p, "U_FW".into(), &fw_matrix(m, p)?));
        let vel = kernel_velocity_particle(m, p);
        for a in Axis::ALL {
            ops.push(matrix_entry(p, format!("S_D^{a}"), &kernel_spin_dirac(a)));
            ops.push(matrix_entry(p, format!("S_N^{a}"), &kernel_spin_new(a, m, p)));
            ops.push(matrix_entry(p, format!("S_P^{a}"), &kernel_spin_particle(a, m, p)));
            ops.push(matrix_entry(p, format!("S_AP^{a}"), &kernel_spin_antiparticle(a, m, p)));
            ops.push(matrix_entry(p, format!("V_P^{a}"), &vel[a.index()]));
        }
    }
    let mut files = Vec::new();
    write_csv(&cfg.out, "spinors.csv", &spinors, &mut files)?;
    let path = cfg.out.join("operators.json");
    write_json(&path, &ops)?;
    files.push(path);
    finish(cfg, "spinors", files, true)
}

fn nan3(r: Result<Vec3>) -> Vec3 {
    r.unwrap_or([f64::NAN; 3])
}

/// Density and velocity maps over the whole transverse grid.
pub fn cmd_field(cfg: &RunConfig) -> Result<Outcome> {
    let params = cfg.lg()?;
    let maps = OracleMaps::build(&params, &cfg.grid, cfg.z)?;
    let spec = cfg.grid;
    let dens = maps.original.density();
    let conv = cfg.convention;

    let mut density = CsvTable::new(&["x", "y", "oracle", "approx", "approx_with_spin"]);
    let mut particle = CsvTable::new(&[
        "x", "y", "closed_x", "closed_y", "closed_z", "oracle_x", "oracle_y", "oracle_z",
    ]);
    let mut dirac = CsvTable::new(&[
        "x", "y", "closed_x", "closed_y", "closed_z", "fw_x", "fw_y", "fw_z", "oracle_x",
        "oracle_y", "oracle_z",
    ]);
    for iy in 0..spec.n {
        for ix in 0..spec.n {
            let (x, y) = (spec.coord(ix), spec.coord(iy));
            let pt = CylPoint::from_cartesian(x, y, cfg.z);
            let approx = density_approx(&params, &pt);
            let spin = density_spin_correction(&params, &pt).unwrap_or(f64::NAN);
            density.push(vec![x, y, dens[spec.index(ix, iy)], approx, approx + spin]);

            let pc = nan3(particle_velocity_closed(&params, &pt, conv));
            let po = maps.particle.at(ix, iy);
            particle.push(vec![x, y, pc[0], pc[1], pc[2], po[0], po[1], po[2]]);

            let dc = nan3(dirac_velocity_closed(&params, &pt, conv));
            let df = nan3(dirac_velocity_fw(&params, &pt));
            let dor = maps.dirac.at(ix, iy);
            dirac.push(vec![
                x, y, dc[0], dc[1], dc[2], df[0], df[1], df[2], dor[0], dor[1], dor[2],
            ]);
        }
    }
    let mut files = Vec::new();
    write_csv(&cfg.out, "density.csv", &density, &mut files)?;
    write_csv(&cfg.out, "velocity_particle.csv", &particle, &mut files)?;
    write_csv(&cfg.out, "velocity_dirac.csv", &dirac, &mut files)?;
    maps.original.export(&params, &cfg.out, "field_original")?;
    files.push(cfg.out.join("field_original.csv"));
    files.push(cfg.out.join("field_original.json"));
    finish(cfg, "field", files, true)
}

/// Circulations of every provider around `rho0`, plus the integrands along the path.
pub fn cmd_circulation(cfg: &RunConfig) -> Result<(Vec<CirculationResult>, Outcome)> {
    let params = cfg.lg()?;
    let maps = OracleMaps::build(&params, &cfg.grid, cfg.z)?;
    let providers = [
        VelocityField::ParticleClosed(params, cfg.convention),
        VelocityField::DiracClosed(params, cfg.convention),
        VelocityField::DiracFw(params),
        VelocityField::Oracle(params, &maps.particle),
        VelocityField::Oracle(params, &maps.dirac),
    ];
    let names = [
        "particle_closed",
        "dirac_closed",
        "dirac_fw",
        "particle_oracle",
        "dirac_oracle",
    ];
    let mut results = Vec::new();
    for (v, name) in providers.iter().zip(names) {
        let mut r = circulation(v, cfg.rho0, cfg.z, cfg.nodes)?;
        r.provider = name.to_string();
        results.push(r);
    }
    let mut header = vec!["phi".to_string()];
    header.extend(names.iter().map(|n| format!("{n}_v_phi")));
    let mut path_table = CsvTable::new(&header);
    for k in 0..cfg.nodes {
        let phi = 2.0 * PI * k as f64 / cfg.nodes as f64;
        let pt = CylPoint {
            rho: cfg.rho0,
            phi,
            z: cfg.z,
        };
        let mut row = vec![phi];
        for v in &providers {
            let u = nan3(v.eval(&pt));
            row.push(-u[0] * phi.sin() + u[1] * phi.cos());
        }
        path_table.push(row);
    }
    let mut files = Vec::new();
    let path = cfg.out.join("circulation.json");
    write_json(&path, &results)?;
    files.push(path);
    write_csv(&cfg.out, "circulation_path.csv", &path_table, &mut files)?;
    let outcome = finish(cfg, "circulation", files, true)?;
    Ok((results, outcome))
}

fn sweep_table(rows: &[SweepRow]) -> CsvTable {
    let mut t = CsvTable::new(&["sigma_z", "gamma_p", "gamma_d", "ratio"]);
    for r in rows {
        t.push(vec![r.sigma_z, r.gamma_p, r.gamma_d, r.ratio]);
    }
    t
}

/// `(⟨Σ^z⟩, Γ_P, Γ_D, Γ_D/Γ_P)` from the closed forms, and from the oracle when
/// `oracle_sweep` is set.
pub fn cmd_sweep(cfg: &RunConfig) -> Result<(Vec<SweepRow>, Outcome)> {
    let params = cfg.lg()?;
    let values = cfg.sweep_values();
    let rows = sweep_gamma(&params, &values, cfg.convention, cfg.rho0, cfg.nodes)?;
    let mut files = Vec::new();
    write_csv(&cfg.out, "sweep.csv", &sweep_table(&rows), &mut files)?;
    if cfg.oracle_sweep {
        let oracle = sweep_gamma_oracle(&params, &cfg.grid, &values, cfg.rho0, cfg.nodes)?;
        write_csv(&cfg.out, "sweep_oracle.csv", &sweep_table(&oracle), &mut files)?;
    }
    let outcome = finish(cfg, "sweep", files, true)?;
    Ok((rows, outcome))
}

/// One oracle-versus-closed-form discrepancy.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Metric {
    pub name: String,
    pub max_error: f64,
    /// `None` for quantities reported without a bound.
    pub tolerance: Option<f64>,
    pub pass: bool,
}

impl Metric {
    fn checked(name: &str, max_error: f64) -> Self {
        Metric {
            name: name.into(),
            max_error,
            tolerance: Some(COMPARE_TOLERANCE),
            pass: max_error <= COMPARE_TOLERANCE,
        }
    }

    fn info(name: &str, value: f64) -> Self {
        Metric {
            name: name.into(),
            max_error: value,
            tolerance: None,
            pass: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CompareReport {
    pub metrics: Vec<Metric>,
    pub pass: bool,
}

impl CompareReport {
    pub fn metric(&self, name: &str) -> Option<&Metric> {
        self.metrics.iter().find(|m| m.name == name)
    }
}

const PROFILE_COLUMNS: [&str; 5] = [
    "density_approx",
    "density_approx_with_spin",
    "particle_velocity",
    "dirac_velocity_fw",
    "dirac_velocity_closed",
];

fn transverse_gap(a: Vec3, b: Vec3) -> f64 {
    (a[0] - b[0]).hypot(a[1] - b[1])
}

/// Band profiles and headline discrepancies between the spectral oracle and
/// the closed forms.
///
/// Velocity errors compare transverse components and are normalised by the
/// vortex speed `max(|l|, 1)/(E0 ρ)`.
pub fn cmd_compare(cfg: &RunConfig) -> Result<(CompareReport, Outcome)> {
    let params = cfg.lg()?;
    let maps = OracleMaps::build(&params, &cfg.grid, cfg.z)?;
    let spec = cfg.grid;
    let dens = maps.original.density();
    let e0 = params.energy();
    let [lo, hi] = cfg.rho_band;
    let bin_width = 0.25;
    let bins = ((hi - lo) / bin_width).ceil().max(1.0) as usize;
    let mut profile = vec![[0.0f64; 5]; bins];
    let mut counts = vec![0usize; bins];

    for iy in 0..spec.n {
        for ix in 0..spec.n {
            let pt = CylPoint::from_cartesian(spec.coord(ix), spec.coord(iy), cfg.z);
            if pt.rho < lo || pt.rho > hi {
                continue;
            }
            let bin = (((pt.rho - lo) / bin_width) as usize).min(bins - 1);
            let oracle = dens[spec.index(ix, iy)];
            let approx = density_approx(&params, &pt);
            let spin = density_spin_correction(&params, &pt)?;
            let scale = params.l.unsigned_abs().max(1) as f64 / (e0 * pt.rho);
            let po = maps.particle.at(ix, iy);
            let doracle = maps.dirac.at(ix, iy);
            let pc = particle_velocity_closed(&params, &pt, Convention::SelfConsistent)?;
            let dc = dirac_velocity_closed(&params, &pt, Convention::SelfConsistent)?;
            let df = dirac_velocity_fw(&params, &pt)?;
            let errs = [
                (approx / oracle - 1.0).abs(),
                ((approx + spin) / oracle - 1.0).abs(),
                transverse_gap(pc, po) / scale,
                transverse_gap(df, doracle) / scale,
                transverse_gap(dc, doracle) / scale,
            ];
            for (slot, e) in profile[bin].iter_mut().zip(errs) {
                *slot = slot.max(e);
            }
            counts[bin] += 1;
        }
    }
    let mut header = vec!["rho".to_string(), "samples".to_string()];
    header.extend(PROFILE_COLUMNS.iter().map(|s| s.to_string()));
    let mut table = CsvTable::new(&header);
    let mut worst = [0.0f64; 5];
    for (b, (row, &c)) in profile.iter().zip(&counts).enumerate() {
        if c == 0 {
            continue;
        }
        let mut r = vec![lo + (b as f64 + 0.5) * bin_width, c as f64];
        r.extend(row);
        table.push(r);
        for (w, v) in worst.iter_mut().zip(row) {
            *w = w.max(*v);
        }
    }

    let two_pi_l = 2.0 * PI * params.l as f64;
    let gp_closed = two_pi_l / e0;
    let gp = maps.gamma_p(cfg.rho0, cfg.nodes)?.gamma;
    let gd = maps.gamma_d(cfg.rho0, cfg.nodes)?.gamma;
    let gd_closed = circulation(
        &VelocityField::DiracClosed(params, Convention::SelfConsistent),
        cfg.rho0,
        cfg.z,
        cfg.nodes,
    )?
    .gamma;
    let gamma_scale = gp_closed.abs().max(2.0 * PI / e0);
    let appd_oracle = oam_alpha_z_oracle(&maps.original)?;
    let appd_closed = oam_alpha_z_paraxial(&params);
    let appd_err = (appd_oracle - appd_closed).abs() / appd_closed.abs().max(1.0 / e0);
    let far = CylPoint {
        rho: cfg.rho0,
        phi: 0.0,
        z: cfg.z,
    };
    let vz_pub = particle_velocity_closed(&params, &far, Convention::AsPublished)?[2];
    let vz_sc = particle_velocity_closed(&params, &far, Convention::SelfConsistent)?[2];

    let metrics = vec![
        Metric::checked("density_approx", worst[0]),
        Metric::checked("density_approx_with_spin", worst[1]),
        Metric::checked("particle_velocity", worst[2]),
        Metric::checked("dirac_velocity_fw", worst[3]),
        Metric::info("dirac_velocity_closed", worst[4]),
        Metric::checked("gamma_p", (gp - gp_closed).abs() / gamma_scale),
        Metric::info("gamma_d", (gd - gd_closed).abs() / gamma_scale),
        Metric::checked("appendix_d", appd_err),
        Metric::info("vz_convention_ratio", vz_pub / vz_sc),
    ];
    let pass = metrics.iter().all(|m| m.pass);
    let report = CompareReport { metrics, pass };

    let mut files = Vec::new();
    write_csv(&cfg.out, "compare_profile.csv", &table, &mut files)?;
    let path = cfg.out.join("compare_summary.json");
    write_json(&path, &report)?;
    files.push(path);
    let outcome = finish(cfg, "compare", files, pass)?;
    Ok((report, outcome))
}
