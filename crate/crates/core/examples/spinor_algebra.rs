//! Plane-wave spinors, their boost construction and the FW diagonalisation of `H_D`.

use dirac_vortex::algebra::{boost_matrix, energy, fw_matrix, rapidity, spinor_u, Spinor4};
use dirac_vortex::kernels::kernel_h_dirac;

fn main() -> dirac_vortex::Result<()> {
    let m = 1.0;
    let p = [0.3, -0.4, 1.2];
    let e = energy(m, p)?;
    println!("E = {e:.12}");

    for r in 1..=4 {
        let u = spinor_u(r, m, p)?;
        let hu = kernel_h_dirac(m, p) * u;
        let eigen = u.inner(&hu).re / u.norm_sqr();
        println!("u{r}: u†u = {:.12}  <H_D> = {eigen:+.12}", u.norm_sqr());
    }

    let boosted = boost_matrix(&rapidity(m, p)?) * Spinor4::basis(0);
    let gap = (boosted - spinor_u(1, m, p)?).max_abs();
    println!("|B(ζ) u1(0) − u1(p)| = {gap:.2e}");

    let u = fw_matrix(m, p)?;
    let d = u * kernel_h_dirac(m, p) * u.adjoint();
    for k in 0..4 {
        println!("U H_D U† [{k}][{k}] = {:+.12}", d.0[k][k].re);
    }
    Ok(())
}
