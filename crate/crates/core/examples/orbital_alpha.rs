//! `⟨(r×α)^z⟩` of the vortex beam: paraxial closed form against the grid integral.

use dirac_vortex::field::{sample_fw, to_original, GridSpec};
use dirac_vortex::observables::{oam_alpha_z_full, oam_alpha_z_oracle, oam_alpha_z_paraxial};
use dirac_vortex::wavepacket::LGParams;

fn main() -> dirac_vortex::Result<()> {
    for (l, s) in [(1, 1.0), (1, 0.0), (2, -1.0), (-1, 1.0)] {
        let params = LGParams {
            l,
            ..LGParams::default()
        }
        .with_sigma_z(s)?;
        let field = to_original(&sample_fw(&params, &GridSpec::default(), 0.0)?)?;
        println!(
            "l = {l:+}  <Σ^z> = {s:+}  paraxial {:+.6}  full(p = p0 ẑ) {:+.6}  grid {:+.6}",
            oam_alpha_z_paraxial(&params),
            oam_alpha_z_full(&params, [0.0, 0.0, params.p0]),
            oam_alpha_z_oracle(&field)?
        );
    }
    Ok(())
}
