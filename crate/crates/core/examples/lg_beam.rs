//! The Laguerre-Gauss envelope: normalisation, phase winding and how well
//! it solves the paraxial equation as the waist grows.

use dirac_vortex::wavepacket::{
    lg_envelope_full, paraxial_residual, winding_number, CurvaturePhase, CylPoint, LGParams,
};

fn main() -> dirac_vortex::Result<()> {
    let params = LGParams {
        l: 2,
        ..LGParams::default()
    };
    params.validate()?;
    let (lo, hi) = params.physical_region();
    println!("physical region {lo} < ρ < {hi:.4}");
    println!("Rayleigh length {}", params.rayleigh());

    // radial quadrature of |ψ|² against the closed-form norm
    let steps = 20_000;
    let dr = 8.0 * params.w0 / steps as f64;
    let norm: f64 = (1..steps)
        .map(|i| {
            let rho = i as f64 * dr;
            let pt = CylPoint::new(rho, 0.0, 0.0).unwrap();
            2.0 * std::f64::consts::PI * rho * lg_envelope_full(&params, &pt).norm_sqr() * dr
        })
        .sum();
    println!("∫|ψ|² = {norm:.10}  closed form {:.10}", params.analytic_norm());
    println!("winding number at ρ = 5: {}", winding_number(&params, 5.0, 0.0));

    for w0 in [20.0, 40.0] {
        let p = LGParams {
            w0,
            curvature: CurvaturePhase::GaussianBeam,
            ..LGParams::default()
        };
        let pt = CylPoint::new(0.5 * w0, 0.3, 0.0)?;
        println!("w0 = {w0}: paraxial residual {:.4e}", paraxial_residual(&p, &pt));
    }
    Ok(())
}
