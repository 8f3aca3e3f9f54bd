//! A model built from sampled rows: a Gaussian flux tube with a shallow well.

use ab_levinson::levinson::{check_channel, FLUX_TOLERANCE};
use ab_levinson::potentials::from_table;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // log-spaced on [1e-3, 10]
    let rows: Vec<(f64, f64, f64)> = (0..=160)
        .map(|i| {
            let rho = 1e-3 * 10f64.powf(f64::from(i) / 40.0);
            let g = (-rho * rho).exp();
            (rho, -2.0 * g, 0.4 * (1.0 - g))
        })
        .collect();
    let model = from_table(&rows)?;
    println!("alpha={} beta={}", model.alpha(), model.beta());
    for m in -2..=2 {
        let r = check_channel(&model, m, FLUX_TOLERANCE)?;
        println!("m={m:+} lhs={:+.6} rhs={:+.6} N_b={} caveat={:?}", r.lhs, r.rhs, r.n_bound, r.caveat);
    }
    Ok(())
}
