//! Original-representation density against the FW approximation across the
//! physical band, for longitudinal and transverse spin.

use dirac_vortex::field::GridSpec;
use dirac_vortex::observables::{density_approx, density_spin_correction, OracleMaps};
use dirac_vortex::wavepacket::{CylPoint, LGParams};

fn main() -> dirac_vortex::Result<()> {
    let grid = GridSpec::default();
    for s in [1.0, 0.0] {
        let params = LGParams::default().with_sigma_z(s)?;
        let maps = OracleMaps::build(&params, &grid, 0.0)?;
        let dens = maps.original.density();
        println!("<Σ^z> = {s:+}");
        println!("  {:>6} {:>12} {:>12}", "ρ", "approx", "with spin");
        let ix = grid.n / 2;
        for iy in (0..grid.n).filter(|&i| (2.0..=8.0).contains(&grid.coord(i))).step_by(2) {
            let pt = CylPoint::from_cartesian(grid.coord(ix), grid.coord(iy), 0.0);
            let oracle = dens[grid.index(ix, iy)];
            let a = density_approx(&params, &pt);
            let c = a + density_spin_correction(&params, &pt)?;
            println!("  {:6.3} {:12.3e} {:12.3e}", pt.rho, a / oracle - 1.0, c / oracle - 1.0);
        }
    }
    Ok(())
}
