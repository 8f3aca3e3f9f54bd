//! Bound levels of a flux-threaded disc well, counted two ways.

use ab_levinson::potentials::make_flux_well;
use ab_levinson::spectrum::{bound_levels, spectrum};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let depth = 40.0;
    let model = make_flux_well(0.3, depth, 1.0)?;
    for m in -3..=3 {
        let s = spectrum(&model, m)?;
        let levels = bound_levels(&model, m, -1.01 * depth)?;
        let shown: Vec<String> = levels.iter().map(|e| format!("{e:.5}")).collect();
        println!("m={m:+} nodes={} levels=[{}]", s.n_bound, shown.join(", "));
    }
    Ok(())
}
