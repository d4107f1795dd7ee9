//! Γ_P and Γ_D against the spin polarisation, as a CSV table on stdout.

use dirac_vortex::observables::{default_sweep, sweep_gamma, Convention};
use dirac_vortex::output::CsvTable;
use dirac_vortex::wavepacket::LGParams;

fn main() -> dirac_vortex::Result<()> {
    let rows = sweep_gamma(
        &LGParams::default(),
        &default_sweep(21),
        Convention::AsPublished,
        5.0,
        256,
    )?;
    let mut table = CsvTable::new(&["sigma_z", "gamma_p", "gamma_d", "ratio"]);
    for r in rows {
        table.push(vec![r.sigma_z, r.gamma_p, r.gamma_d, r.ratio]);
    }
    print!("{}", table.render());
    Ok(())
}
