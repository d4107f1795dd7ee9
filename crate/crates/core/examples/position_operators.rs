//! Frame-conjugated position operators acting on a momentum-space packet:
//! the particle OAM commutes with `H_D`, the canonical one does not.

use dirac_vortex::algebra::Axis;
use dirac_vortex::kernels::MomentumKernel;
use dirac_vortex::position::{oam_action_axis, FrameConjugatedPosition, MomentumGrid};
use dirac_vortex::verify::{action_residuals, test_packet, POSITION_HALF_WIDTH};

fn main() -> dirac_vortex::Result<()> {
    let grid = MomentumGrid::new(32, POSITION_HALF_WIDTH)?;
    let psi = test_packet().sample(grid, 1.0)?;
    let h = MomentumKernel::h_dirac();
    for pos in FrameConjugatedPosition::ALL {
        let lh = oam_action_axis(pos, Axis::Z, &psi.apply_kernel(&h))?;
        let hl = oam_action_axis(pos, Axis::Z, &psi)?.apply_kernel(&h);
        println!(
            "{:<5} |[L^z, H_D]ψ| / |ψ| = {:.3e}",
            pos.label(),
            lh.max_abs_diff(&hl) / psi.max_abs()
        );
    }

    for n in [32, 64] {
        let r = action_residuals(n)?;
        println!(
            "n = {n:>3}  Δp = {:.4}  [L_P,H_D] {:.3e}  [H_D,L_D]+iα×p {:.3e}  [R,P]−iδ {:.3e}",
            r.spacing, r.particle_oam_conserved, r.dirac_oam_commutator, r.position_momentum
        );
    }
    Ok(())
}
