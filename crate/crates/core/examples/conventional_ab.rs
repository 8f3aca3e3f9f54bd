//! Uniform field inside a cylinder: the phase at zero energy minus the one at
//! infinity is (π/2)(|m| − |m − β|), and it differs between m and −m.

use ab_levinson::levinson::levinson_lhs;
use ab_levinson::potentials::make_conventional_ab;
use std::f64::consts::PI;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let beta = 0.5;
    let model = make_conventional_ab(2.0 * beta, 1.0)?;
    for m in -3..=3 {
        let lhs = levinson_lhs(&model, m)?;
        let mf = f64::from(m);
        let want = 0.5 * PI * (mf.abs() - (mf - beta).abs());
        println!("m={m:+} lhs={lhs:+.9} expected={want:+.9}");
    }
    Ok(())
}
