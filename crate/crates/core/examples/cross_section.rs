//! Partial cross sections and the truncated amplitude. The flux line never
//! converges; the finite well does.

use ab_levinson::observables::{amplitude, cross_sections, parseval_integral, uniform_chi_grid};
use ab_levinson::potentials::{make_flux_well, make_pure_flux};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let k = 1.5;
    for model in [make_flux_well(0.0, 5.0, 1.0)?, make_pure_flux(0.5)?] {
        let cs = cross_sections(&model, k, 8)?;
        println!("{}: total={:.6} converged={}", model.name(), cs.total, cs.converged);
        for r in cs.rows.iter().filter(|r| r.m.abs() <= 2) {
            println!("  m={:+} delta={:+.6} sigma={:.6}", r.m, r.delta, r.sigma_partial);
        }
        let curve = amplitude(&model, k, &uniform_chi_grid(64), 8)?;
        println!("  ∫|F|² = {:.6}", parseval_integral(&curve));
    }
    Ok(())
}
