//! The four spin operators: su(2) closure, conservation under `H_D`, and
//! the action of the new spin on particle and antiparticle states.

use dirac_vortex::algebra::{spinor_u, spinor_v, Axis};
use dirac_vortex::kernels::{
    commutator, kernel_h_dirac, kernel_spin_antiparticle, kernel_spin_dirac, kernel_spin_new,
    kernel_spin_particle, su2_residual,
};

fn main() -> dirac_vortex::Result<()> {
    let (m, p) = (1.0, [0.9, -0.4, 2.5]);
    let h = kernel_h_dirac(m, p);
    let families = [
        ("S_D", Axis::ALL.map(kernel_spin_dirac)),
        ("S_N", Axis::ALL.map(|a| kernel_spin_new(a, m, p))),
        ("S_P", Axis::ALL.map(|a| kernel_spin_particle(a, m, p))),
        ("S_AP", Axis::ALL.map(|a| kernel_spin_antiparticle(a, m, p))),
    ];
    for (name, s) in &families {
        let conserved = s.iter().map(|k| commutator(&h, k).max_abs()).fold(0.0, f64::max);
        println!(
            "{name:<5} su(2) residual {:.2e}  max|[H_D, S]| {conserved:.3e}",
            su2_residual(s)
        );
    }

    let u1 = spinor_u(1, m, p)?;
    let v1 = spinor_v(1, m, p)?;
    for a in Axis::ALL {
        let on_u = ((kernel_spin_new(a, m, p) - kernel_spin_particle(a, m, p)) * u1).max_abs();
        let on_v = ((kernel_spin_new(a, m, p) - kernel_spin_antiparticle(a, m, p)) * v1).max_abs();
        println!("{a}: |(S_N − S_P) u1| = {on_u:.1e}  |(S_N − S_AP) v1| = {on_v:.1e}");
    }
    Ok(())
}
