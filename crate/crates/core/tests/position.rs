use dirac_vortex::algebra::{Axis, Spinor4, I};
use dirac_vortex::error::Error;
use dirac_vortex::position::{
    apply_position_axis, oam_action_axis, FrameConjugatedPosition, GaussianPacket, MomentumGrid,
};
use dirac_vortex::verify::{action_residuals, position_commute_residual};

fn vortex_packet(charge: i32) -> GaussianPacket {
    GaussianPacket {
        center: [0.0, 0.0, 0.5],
        width: 1.0,
        charge,
        spinor: Spinor4::from_real([1.0, 0.0, 0.0, 0.0]),
    }
}

#[test]
fn canonical_oam_of_an_azimuthal_vortex_is_its_charge() {
    // (p_x + i p_y)^l e^{-p²/2} is an L_D^z eigenfunction with eigenvalue l
    let grid = MomentumGrid::new(64, 9.0).unwrap();
    for l in [1, 2, -1] {
        let psi = vortex_packet(l).sample(grid, 1.0).unwrap();
        let lz = oam_action_axis(FrameConjugatedPosition::Dirac, Axis::Z, &psi).unwrap();
        let rel = lz.max_abs_diff(&psi.scale((l as f64).into())) / psi.max_abs();
        assert!(rel < 1e-2, "l = {l}: {rel:e}");
    }
}

#[test]
fn dirac_position_is_i_times_the_analytic_gradient() {
    let packet = vortex_packet(1);
    let err = |n| {
        let grid = MomentumGrid::new(n, 9.0).unwrap();
        let psi = packet.sample(grid, 1.0).unwrap();
        let r = apply_position_axis(FrameConjugatedPosition::Dirac, Axis::Y, &psi).unwrap();
        r.max_abs_diff(&psi.map(|p, _| packet.gradient(p)[1] * I)) / psi.max_abs()
    };
    let (coarse, fine) = (err(32), err(64));
    assert!(coarse / fine > 10.0, "{coarse:e} -> {fine:e}");
}

#[test]
fn residuals_shrink_under_refinement() {
    let a = action_residuals(32).unwrap();
    let b = action_residuals(48).unwrap();
    assert!(b.particle_oam_conserved < a.particle_oam_conserved / 3.0);
    assert!(b.dirac_oam_commutator < a.dirac_oam_commutator / 3.0);
    assert!(b.position_momentum < a.position_momentum / 3.0);
}

#[test]
fn particle_positions_commute() {
    assert!(position_commute_residual(32).unwrap() < 1e-12);
}

#[test]
fn packet_touching_the_box_is_refused() {
    let grid = MomentumGrid::new(16, 2.0).unwrap();
    let psi = vortex_packet(0).sample(grid, 1.0).unwrap();
    let r = apply_position_axis(FrameConjugatedPosition::Particle, Axis::X, &psi);
    assert!(matches!(r, Err(Error::PacketTouchesBoundary { .. })));
}
