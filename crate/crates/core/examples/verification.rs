//! The seeded identity suite, printed as a pass/fail table.

use dirac_vortex::verify::{run_suite, SuiteConfig};

fn main() -> dirac_vortex::Result<()> {
    let report = run_suite(&SuiteConfig {
        position_grid: None,
        ..SuiteConfig::default()
    })?;
    for r in &report.identities {
        let mark = if r.pass { "ok  " } else { "FAIL" };
        println!("{mark} {:<40} {:.3e}", r.identity, r.max_residual);
    }
    println!("overall: {}", if report.pass { "pass" } else { "fail" });
    Ok(())
}
