//! Partial and truncated total cross sections, and the angular amplitude.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::potentials::AbModel;
use crate::radial::phase_shift;

/// A shell `|m|` counts as significant above this share of the running total.
pub const SHELL_FRACTION: f64 = 1e-4;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CrossSectionRow {
    pub m: i32,
    pub delta: f64,
    pub sigma_partial: f64,
}

/// Partial cross sections for `|m| ≤ m_max` at one wavenumber.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CrossSection {
    pub k: f64,
    pub m_max: i32,
    pub rows: Vec<CrossSectionRow>,
    pub total: f64,
    /// False when the last three shells all still matter, i.e. the phase
    /// shifts do not decay with `|m|` and the full sum diverges.
    pub converged: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AmplitudeCurve {
    pub chi_grid: Vec<f64>,
    pub f: Vec<Complex64>,
    pub m_max: i32,
    pub converged: bool,
}

fn check_k(k: f64) -> Result<()> {
    if k.is_finite() && k > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("wavenumber must be positive, got {k}")))
    }
}

fn check_m_max(m_max: i32) -> Result<()> {
    if m_max >= 1 {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("m_max must be at least 1, got {m_max}")))
    }
}

/// `(4/k) sin²δ`.
pub fn partial_cross_section(delta: f64, k: f64) -> Result<f64> {
    check_k(k)?;
    let s = delta.sin();
    Ok(4.0 / k * s * s)
}

/// Cross-section rows from given phase shifts, in the order given.
pub fn rows_from_phases(phases: &[(i32, f64)], k: f64) -> Result<Vec<CrossSectionRow>> {
    phases
        .iter()
        .map(|&(m, delta)| Ok(CrossSectionRow { m, delta, sigma_partial: partial_cross_section(delta, k)? }))
        .collect()
}

/// Shell-convergence test over rows covering `-m_max..=m_max`.
pub fn shells_converged(rows: &[CrossSectionRow], m_max: i32) -> bool {
    let shell = |j: i32| -> f64 { rows.iter().filter(|r| r.m.abs() == j).map(|r| r.sigma_partial).sum() };
    let mut running = 0.0;
    let mut significant = Vec::with_capacity(m_max as usize + 1);
    for j in 0..=m_max {
        let s = shell(j);
        running += s;
        significant.push(s > SHELL_FRACTION * running);
    }
    let last = &significant[significant.len().saturating_sub(3).max(1)..];
    !last.iter().all(|&b| b)
}

/// Rows for `m = -m_max..=m_max`, computed in parallel.
pub fn cross_sections(model: &AbModel, k: f64, m_max: i32) -> Result<CrossSection> {
    check_k(k)?;
    check_m_max(m_max)?;
    let phases: Vec<(i32, f64)> = (-m_max..=m_max)
        .into_par_iter()
        .map(|m| Ok((m, phase_shift(model, m, k)?)))
        .collect::<Result<_>>()?;
    let rows = rows_from_phases(&phases, k)?;
    let total = rows.iter().map(|r| r.sigma_partial).sum();
    let converged = shells_converged(&rows, m_max);
    Ok(CrossSection { k, m_max, rows, total, converged })
}

/// Truncated total cross section and its convergence flag.
pub fn total_cross_section(model: &AbModel, k: f64, m_max: i32) -> Result<(f64, bool)> {
    let cs = cross_sections(model, k, m_max)?;
    Ok((cs.total, cs.converged))
}

/// `n` equally spaced angles on `[0, 2π)`. The trapezoid rule on this grid
/// integrates `|F|²` exactly when `n > 2 m_max`.
pub fn uniform_chi_grid(n: usize) -> Vec<f64> {
    (0..n).map(|i| 2.0 * PI * i as f64 / n as f64).collect()
}

/// `F(χ) = e^{−iπ/4}/√(2πk) Σ (e^{2iδ_m} − 1) e^{imχ}` from given rows.
pub fn amplitude_from_rows(rows: &[CrossSectionRow], k: f64, chi_grid: &[f64]) -> Result<Vec<Complex64>> {
    check_k(k)?;
    if chi_grid.is_empty() || chi_grid.iter().any(|c| !c.is_finite()) {
        return Err(Error::InvalidParameter("angle grid must be nonempty and finite".into()));
    }
    let pre = Complex64::from_polar(1.0 / (2.0 * PI * k).sqrt(), -0.25 * PI);
    let weights: Vec<(f64, Complex64)> = rows
        .iter()
        .map(|r| (r.m as f64, Complex64::from_polar(1.0, 2.0 * r.delta) - 1.0))
        .collect();
    Ok(chi_grid
        .par_iter()
        .map(|&chi| pre * weights.iter().map(|&(m, w)| w * Complex64::from_polar(1.0, m * chi)).sum::<Complex64>())
        .collect())
}

pub fn amplitude(model: &AbModel, k: f64, chi_grid: &[f64], m_max: i32) -> Result<AmplitudeCurve> {
    let cs = cross_sections(model, k, m_max)?;
    let f = amplitude_from_rows(&cs.rows, k, chi_grid)?;
    Ok(AmplitudeCurve { chi_grid: chi_grid.to_vec(), f, m_max, converged: cs.converged })
}

/// Periodic trapezoid `∫₀^{2π} |F|² dχ` over the curve's angle grid, which
/// must be increasing within `[χ₀, χ₀ + 2π)`.
pub fn parseval_integral(curve: &AmplitudeCurve) -> f64 {
    let n = curve.chi_grid.len();
    let p: Vec<f64> = curve.f.iter().map(|z| z.norm_sqr()).collect();
    (0..n)
        .map(|i| {
            let j = (i + 1) % n;
            let width = if j == 0 { curve.chi_grid[0] + 2.0 * PI - curve.chi_grid[i] } else { curve.chi_grid[j] - curve.chi_grid[i] };
            0.5 * (p[i] + p[j]) * width
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::potentials::{make_flux_well, make_free, make_pure_flux};

    #[test]
    fn partial_values() {
        assert_eq!(partial_cross_section(0.0, 1.0).unwrap(), 0.0);
        assert!((partial_cross_section(0.5 * PI, 1.0).unwrap() - 4.0).abs() < 1e-15);
        assert!((partial_cross_section(-0.25 * PI, 2.0).unwrap() - 1.0).abs() < 1e-15);
        assert!(partial_cross_section(0.1, 0.0).is_err());
    }

    #[test]
    fn free_model_scatters_nothing() {
        assert_eq!(total_cross_section(&make_free(), 1.3, 5).unwrap(), (0.0, true));
        let a = amplitude(&make_free(), 1.3, &uniform_chi_grid(16), 5).unwrap();
        assert!(a.f.iter().all(|z| z.norm() == 0.0));
    }

    #[test]
    fn pure_flux_tail_does_not_converge() {
        let cs = cross_sections(&make_pure_flux(0.5).unwrap(), 1.0, 20).unwrap();
        assert!(!cs.converged);
        for r in &cs.rows {
            assert!((r.sigma_partial - 2.0).abs() < 1e-6, "{r:?}");
        }
    }

    #[test]
    fn short_range_well_converges() {
        let (total, converged) = total_cross_section(&make_flux_well(0.0, 5.0, 1.0).unwrap(), 1.0, 12).unwrap();
        assert!(converged && total > 0.0);
    }

    #[test]
    fn parseval_holds_on_uniform_grid() {
        let rows = rows_from_phases(&[(-2, 0.3), (-1, -1.1), (0, 2.0), (1, 0.7), (2, -0.2)], 0.8).unwrap();
        let curve = AmplitudeCurve {
            chi_grid: uniform_chi_grid(64),
            f: amplitude_from_rows(&rows, 0.8, &uniform_chi_grid(64)).unwrap(),
            m_max: 2,
            converged: true,
        };
        let sum: f64 = rows.iter().map(|r| r.sigma_partial).sum();
        assert!((parseval_integral(&curve) - sum).abs() <= 1e-12 * sum);
    }

    #[test]
    fn rejects_bad_truncation() {
        assert!(total_cross_section(&make_free(), 1.0, 0).is_err());
        assert!(amplitude(&make_free(), 1.0, &[], 2).is_err());
    }
}
