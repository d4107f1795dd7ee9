//! Circulation of the particle and Dirac velocity fields around the beam
//! axis, from the closed forms and from the spectral oracle.

use std::f64::consts::PI;

use dirac_vortex::field::GridSpec;
use dirac_vortex::observables::{circulation, Convention, OracleMaps, VelocityField};
use dirac_vortex::wavepacket::LGParams;

fn main() -> dirac_vortex::Result<()> {
    let (rho0, nodes) = (5.0, 256);
    for s in [1.0, 0.0, -1.0] {
        let params = LGParams::default().with_sigma_z(s)?;
        let unit = 2.0 * PI / params.energy();
        let maps = OracleMaps::build(&params, &GridSpec::default(), 0.0)?;
        let providers = [
            VelocityField::ParticleClosed(params, Convention::SelfConsistent),
            VelocityField::DiracClosed(params, Convention::SelfConsistent),
            VelocityField::DiracFw(params),
            VelocityField::Oracle(params, &maps.particle),
            VelocityField::Oracle(params, &maps.dirac),
        ];
        println!("<Σ^z> = {s:+}  (Γ in units of 2π/E0)");
        for (v, name) in providers.iter().zip([
            "particle closed",
            "dirac closed",
            "dirac fw-form",
            "particle oracle",
            "dirac oracle",
        ]) {
            let g = circulation(v, rho0, 0.0, nodes)?;
            println!("  {name:<16} {:.6}", g.gamma / unit);
        }
    }
    Ok(())
}
