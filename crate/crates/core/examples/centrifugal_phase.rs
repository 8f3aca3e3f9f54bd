//! Numerically integrated phase shift of the step-flux model next to its
//! Bessel-function closed form.

use ab_levinson::potentials::make_centrifugal;
use ab_levinson::radial::{closed_form_centrifugal_delta, log_grid, phase_shift};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (alpha, beta) = (0.7, -0.4);
    let model = make_centrifugal(alpha, beta, 1.0)?;
    for m in [-1, 0, 2] {
        println!("m = {m}");
        for k in log_grid(0.01, 50.0, 6) {
            let numeric = phase_shift(&model, m, k)?;
            let exact = closed_form_centrifugal_delta(m, alpha, beta, 1.0, k)?;
            println!("  k={k:<10.4} numeric={numeric:+.12} exact={exact:+.12}");
        }
    }
    Ok(())
}
