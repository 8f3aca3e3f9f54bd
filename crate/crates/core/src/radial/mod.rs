//! Radial integration and phase-shift extraction.
//!
//! The channel equation `−ψ'' − ψ'/ρ + U_m ψ = E ψ` is written for the
//! reduced wave `u = √ρ ψ`, `−u'' + (U_m − 1/(4ρ²)) u = E u`, and integrated
//! with Numerov's scheme on a [`RadialGrid`]. Beyond the range of the model
//! the regular solution is matched to `J_|μ|(kρ) + σ Y_|μ|(kρ)` at two radii,
//! and the phase shift is `δ_m = π(|m| − |μ|)/2 − arctan σ`.

mod grid;
mod numerov;
mod sweep;

use std::f64::consts::PI;

pub use grid::{RadialGrid, MIN_NODES};
pub(crate) use numerov::{sign_changes, sweep as numerov_sweep, working_terms};
pub use sweep::{extrapolate_endpoint, extrapolate_high_k, extrapolate_with_check, log_grid, FitLaw, phase_sweep, phase_sweep_with, EndpointFit, PhaseCurve, UNWRAP_LIMIT};

use crate::cylfn::{eval_pair, CylOrder};
use crate::error::{Error, Result};
use crate::potentials::{AbModel, ModelFamily, PartialPotential};

/// Numerical knobs for scattering integrations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialSettings {
    /// Step in the stretched grid coordinate.
    pub step: f64,
    /// Innermost node in units of the model length scale.
    pub rho_min: f64,
    /// How many times the matching radius may be doubled after a failed
    /// stability check.
    pub max_extensions: usize,
    /// Multiplier on the default matching radius.
    pub match_scale: f64,
}

impl Default for RadialSettings {
    fn default() -> Self {
        Self { step: 0.005, rho_min: 1e-5, max_extensions: 3, match_scale: 1.0 }
    }
}

impl RadialSettings {
    /// Coarser settings for wide wavenumber sweeps, where the endpoint
    /// extrapolation rather than the integration dominates the error.
    pub fn sweep() -> Self {
        Self { step: 0.01, ..Self::default() }
    }
}

/// Tolerance of the matching-radius stability check.
pub const MATCH_STABILITY: f64 = 1e-6;

/// Regular solution on a grid, normalised to `max |u| = 1`.
#[derive(Debug, Clone)]
pub struct WaveSolution {
    pub grid: RadialGrid,
    /// Reduced wave `u = √ρ ψ` at the grid nodes.
    pub u: Vec<f64>,
    pub energy: f64,
    /// `√E` for positive energies, 0 otherwise.
    pub k: f64,
    pub m: i32,
    pub node_count: usize,
}

impl WaveSolution {
    /// `ψ = u/√ρ` at node `i`.
    pub fn psi(&self, i: usize) -> f64 {
        self.u[i] / self.grid.rho()[i].sqrt()
    }
}

/// First two Numerov values `w` of the regular solution,
/// `ψ ~ ρ^ν (1 + c₁ρ²)` with `c₁` from the next order of the series.
pub(crate) fn regular_start(pp: &PartialPotential<'_>, e: f64, grid: &RadialGrid) -> (f64, f64) {
    let rho = grid.rho();
    let nu = pp.nu;
    let r0 = rho[0];
    let c1 = (pp.model.excess_over_origin(pp.m, r0) - e) / (4.0 * (nu + 1.0));
    let start = |i: usize| {
        let r = rho[i];
        let psi = (r / r0).powf(nu) * (1.0 + c1 * r * r) / (1.0 + c1 * r0 * r0);
        psi * (r / grid.jacobian(i)).sqrt()
    };
    (start(0), start(1))
}

/// Integrates the regular solution outward from the origin at energy `e`.
pub fn integrate_regular(pp: &PartialPotential<'_>, e: f64, grid: &RadialGrid) -> Result<WaveSolution> {
    let q = working_terms(pp, e, grid)?;
    let (w0, w1) = regular_start(pp, e, grid);
    let w = numerov_sweep(&q, grid.step(), w0, w1);
    let mut u: Vec<f64> = w.iter().enumerate().map(|(i, v)| v * grid.jacobian(i).sqrt()).collect();
    let peak = u.iter().fold(0.0f64, |a, v| a.max(v.abs()));
    if !(peak.is_finite() && peak > 0.0) {
        return Err(Error::Convergence(format!("regular solution degenerated (peak {peak})")));
    }
    for v in u.iter_mut() {
        *v /= peak;
    }
    let node_count = sign_changes(&u);
    Ok(WaveSolution { grid: grid.clone(), u, energy: e, k: if e > 0.0 { e.sqrt() } else { 0.0 }, m: pp.m, node_count })
}

fn two_point_sigma(sol: &WaveSolution, k: f64, order: CylOrder, i1: usize, i2: usize) -> Result<f64> {
    let rho = sol.grid.rho();
    let a = eval_pair(order, k * rho[i1])?;
    let b = eval_pair(order, k * rho[i2])?;
    let (p1, p2) = (sol.psi(i1), sol.psi(i2));
    let den = p1 * b.y - p2 * a.y;
    if den == 0.0 {
        return Err(Error::MatchingInstability("degenerate matching denominator".into()));
    }
    Ok((p2 * a.j - p1 * b.j) / den)
}

/// Scattering amplitude `σ` from a two-point match of `ψ` to
/// `A[J_|μ|(kρ) + σ Y_|μ|(kρ)]` at `rho1 < rho2`.
///
/// The match is repeated with both radii moved outward by 25 %; if `atan σ`
/// moves by more than [`MATCH_STABILITY`] the asymptotic region has not been
/// reached.
pub fn extract_sigma(sol: &WaveSolution, k: f64, mu: f64, rho1: f64, rho2: f64) -> Result<f64> {
    if !(k > 0.0) {
        return Err(Error::InvalidParameter(format!("matching needs k > 0, got {k}")));
    }
    if !(rho1 < rho2) {
        return Err(Error::InvalidParameter(format!("matching radii out of order: {rho1} >= {rho2}")));
    }
    if 1.25 * rho2 > sol.grid.rho_max() {
        return Err(Error::MatchingInstability(format!(
            "grid ends at {} but the stability check needs {}",
            sol.grid.rho_max(),
            1.25 * rho2
        )));
    }
    let order = CylOrder::abs(mu)?;
    let g = &sol.grid;
    let sigma = two_point_sigma(sol, k, order, g.nearest(rho1), g.nearest(rho2))?;
    let shifted = two_point_sigma(sol, k, order, g.nearest(1.25 * rho1), g.nearest(1.25 * rho2))?;
    // angle between the directions (1, σ) and (1, σ'), finite through poles of σ
    let change = ((shifted - sigma) / (1.0 + sigma * shifted)).atan().abs();
    if !(change <= MATCH_STABILITY) {
        return Err(Error::MatchingInstability(format!(
            "sigma moved by {change:e} when matching radii were shifted outward"
        )));
    }
    Ok(sigma)
}

/// Continuous phase `θ` of `J_μ(x) = M cos θ`, `Y_μ(x) = M sin θ` for
/// `x` in the oscillatory region, with `θ(0+) = −π/2`.
fn bessel_phase(order: CylOrder, x: f64) -> Result<f64> {
    let c = eval_pair(order, x)?;
    let mu = order.value();
    let asymptotic = x - (0.5 * mu + 0.25) * PI + (4.0 * mu * mu - 1.0) / (8.0 * x);
    let raw = c.y.atan2(c.j);
    Ok(raw + 2.0 * PI * ((asymptotic - raw) / (2.0 * PI)).round())
}

/// Outside the model `ψ ∝ cos(θ_μ(kρ) − arctan σ + nπ)`, and `θ − arctan σ + nπ`
/// must sit between the phases of the last zero counted so far and the next
/// one. Of the two matching nodes the one farther from a zero decides `n`.
fn absolute_branch(sol: &WaveSolution, k: f64, mu: f64, sigma: f64, rho1: f64, rho2: f64) -> Result<i64> {
    let order = CylOrder::abs(mu)?;
    let mut best: Option<(f64, f64)> = None;
    for rho in [rho1, rho2] {
        let i = sol.grid.nearest(rho);
        let nodes = sign_changes(&sol.u[..=i]) as f64;
        let phase = bessel_phase(order, k * sol.grid.rho()[i])? - sigma.atan();
        let n = (nodes * PI - phase) / PI;
        let miss = (n - n.round()).abs();
        if best.is_none_or(|(_, b)| miss < b) {
            best = Some((n.round(), miss));
        }
    }
    let (n, miss) = best.expect("two matching nodes");
    if miss > 0.45 {
        return Err(Error::MatchingInstability(format!("node count does not fix the phase branch (miss {miss:.3})")));
    }
    Ok(n as i64)
}

/// One phase-shift evaluation with its matching data.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseSample {
    pub k: f64,
    pub delta: f64,
    pub sigma: f64,
    pub rho1: f64,
    pub rho2: f64,
    /// Multiple of `π` that puts `delta` on the absolute branch fixed by the
    /// node count of the regular solution; `delta + branch·π` is continuous
    /// in `k`.
    pub branch: i64,
}

impl PhaseSample {
    pub fn absolute(&self) -> f64 {
        self.delta + self.branch as f64 * PI
    }
}

/// Radius beyond which the model is treated as asymptotic.
fn model_range(model: &AbModel) -> f64 {
    model.length_scale() * model.support_radius()
}

/// `δ_m(k)` on the principal branch of `arctan`, plus the order offset
/// `π(|m| − |μ|)/2`.
pub fn phase_shift(model: &AbModel, m: i32, k: f64) -> Result<f64> {
    Ok(phase_shift_detail(model, m, k, &RadialSettings::default())?.delta)
}

pub fn phase_shift_detail(model: &AbModel, m: i32, k: f64, settings: &RadialSettings) -> Result<PhaseSample> {
    if !(k.is_finite() && k > 0.0) {
        return Err(Error::InvalidParameter(format!("wavenumber must be positive, got {k}")));
    }
    // J_|m| solves the free channel exactly
    if model.family() == ModelFamily::Free {
        return Ok(PhaseSample { k, delta: 0.0, sigma: 0.0, rho1: 0.0, rho2: 0.0, branch: 0 });
    }
    let pp = model.partial(m)?;
    let r = model.length_scale();
    let quarter = 0.5 * PI / k;
    let mut base = (200.0 / k).max(50.0 * model_range(model)).max(20.0 * pp.mu / k) * settings.match_scale;
    let mut last_err = None;
    for _ in 0..=settings.max_extensions {
        let (rho1, rho2) = (base, base + quarter);
        let rho_max = 1.25 * rho2 * (1.0 + 1e-3) + 4.0 * settings.step / k;
        let grid = RadialGrid::new(settings.rho_min * r, rho_max, settings.step, Some(1.0 / k), model.discontinuity())?;
        let sol = integrate_regular(&pp, k * k, &grid)?;
        match extract_sigma(&sol, k, pp.mu, rho1, rho2) {
            Ok(sigma) => {
                let delta = 0.5 * PI * ((m as f64).abs() - pp.mu) - sigma.atan();
                let branch = absolute_branch(&sol, k, pp.mu, sigma, rho1, rho2)?;
                return Ok(PhaseSample { k, delta, sigma, rho1, rho2, branch });
            }
            Err(e @ Error::MatchingInstability(_)) => {
                last_err = Some(e);
                base *= 2.0;
            }
            Err(e) => return Err(e),
        }
    }
    Err(last_err.unwrap_or_else(|| Error::MatchingInstability("no matching attempt".into())))
}

/// Closed-form phase shift of the piecewise-constant (centrifugal) flux
/// model, matching `J_|ν|` inside `R` to `J_|μ| + σ̃ Y_|μ|` outside.
pub fn closed_form_centrifugal_delta(m: i32, alpha: f64, beta: f64, r: f64, k: f64) -> Result<f64> {
    if !(k > 0.0 && r > 0.0) {
        return Err(Error::InvalidParameter(format!("need k > 0 and R > 0, got k={k}, R={r}")));
    }
    let mf = m as f64;
    let nu = mf - alpha;
    let mu = mf - beta;
    let x = k * r;
    let inner = eval_pair(CylOrder::abs(nu)?, x)?;
    let outer = eval_pair(CylOrder::abs(mu)?, x)?;
    let num = inner.jp * outer.j - outer.jp * inner.j;
    let den = inner.j * outer.yp - inner.jp * outer.y;
    let sigma = num / den;
    Ok(0.5 * PI * (mf.abs() - mu.abs()) - sigma.atan())
}
