//! Levinson relation for a flux line whose flux is returned at R.
//! Even an integer total flux leaves a shift in the m = 1 channel.

use ab_levinson::levinson::{verify, FLUX_TOLERANCE};
use ab_levinson::potentials::make_returned_flux;
use std::f64::consts::PI;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for flux0 in [PI, 2.0 * PI] {
        println!("flux0 = {:.4}·π", flux0 / PI);
        let model = make_returned_flux(flux0, 1.0)?;
        for r in verify(&model, -3, 3, FLUX_TOLERANCE) {
            println!("  m={:+} lhs/π={:+.6} rhs/π={:+.6} passed={}", r.m, r.lhs / PI, r.rhs / PI, r.passed);
        }
    }
    Ok(())
}
