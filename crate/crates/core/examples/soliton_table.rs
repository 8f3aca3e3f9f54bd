//! Magnon scattering on a Belavin-Polyakov soliton: measured phase change per
//! channel against the piecewise table, with the zero-mode classification.

use ab_levinson::levinson::{soliton_expected, verify, SOLITON_TOLERANCE};
use ab_levinson::potentials::{make_bp_soliton, SolitonParams};
use std::f64::consts::PI;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let q = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(1);
    let model = make_bp_soliton(SolitonParams::new(q, 1.0))?;
    println!("q = {q}");
    for r in verify(&model, -4, 4, SOLITON_TOLERANCE) {
        let kind = match (r.half_bound, r.n_bound) {
            (true, _) => "half-bound",
            (false, 0) => "",
            _ => "bound",
        };
        println!(
            "m={:+} lhs/π={:+.4} table/π={:+.0} {kind}",
            r.m,
            r.lhs / PI,
            soliton_expected(q, r.m)? / PI
        );
    }
    Ok(())
}
