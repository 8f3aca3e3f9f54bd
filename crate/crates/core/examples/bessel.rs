//! J and Y of fractional order, with the Wronskian as a sanity check.

use ab_levinson::cylfn::{eval_pair, CylOrder};
use std::f64::consts::PI;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("{:>6} {:>8} {:>22} {:>22} {:>10}", "nu", "x", "J", "Y", "wronskian");
    for nu in [0.0, 0.3, 0.5, 1.7, 4.25] {
        for x in [0.01, 1.0, 7.5, 40.0] {
            let e = eval_pair(CylOrder::new(nu)?, x)?;
            let w = (e.wronskian() * PI * x / 2.0 - 1.0).abs();
            println!("{nu:>6} {x:>8} {:>22.15e} {:>22.15e} {w:>10.1e}", e.j, e.y);
        }
    }
    Ok(())
}
