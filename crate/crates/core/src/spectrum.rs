//! Bound and half-bound states per channel.
//!
//! Sturm oscillation: the regular solution at `E = 0` has as many zeros on
//! `(0, ∞)` as there are states with `E < 0`. Beyond the model range `U_m`
//! tends to `μ²/ρ²` and the zero-energy solutions behave as `ρ^{±μ}` (or
//! `1`, `ln ρ` for `μ = 0`); comparing the regular solution with the
//! decaying one tells whether it has one more zero far out, possibly at an
//! astronomically large radius, or decays itself, i.e. whether there is a
//! state exactly at threshold.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::potentials::{AbModel, PartialPotential};
use crate::radial::{integrate_regular, numerov_sweep, regular_start, sign_changes, working_terms, RadialGrid};

/// Residual `|ρ²U_m − μ²|` below which the tail counts as pure inverse square.
const TAIL_RESIDUAL: f64 = 1e-10;
/// Largest normalised Wronskian between the regular and the decaying
/// zero-energy solutions for which the regular one counts as decaying.
pub const DECAY_TOLERANCE: f64 = 1e-6;
const STEP: f64 = 0.005;
const RHO_MIN: f64 = 1e-5;

/// Bound-state summary of one channel.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpectrumCount {
    pub m: i32,
    /// States with `E < 0` plus a square-integrable state at `E = 0`.
    pub n_bound: usize,
    pub half_bound: bool,
    /// Tail intensity used for the classification.
    pub mu: f64,
    /// True when `n_bound` includes a bound state sitting exactly at `E = 0`.
    pub zero_mode_bound: bool,
}

#[derive(Debug, Clone, Copy, PartialEq)]
struct ZeroEnergy {
    nodes: usize,
    bound: bool,
    half_bound: bool,
}

fn model_range(model: &AbModel) -> f64 {
    model.length_scale() * model.support_radius()
}

/// Smallest radius past the model range, on a doubling ladder, from which on
/// `ρ²U_m` stays within [`TAIL_RESIDUAL`] of `μ²`.
fn asymptotic_onset(pp: &PartialPotential<'_>) -> Result<f64> {
    let range = model_range(pp.model);
    let scale = pp.mu.powi(2).max(1.0);
    let clean = |r: f64| pp.model.tail_excess(pp.m, r).abs() <= TAIL_RESIDUAL * scale;
    let mut r = 2.0 * range;
    for _ in 0..60 {
        if clean(r) && clean(2.0 * r) && clean(4.0 * r) {
            return Ok(r);
        }
        r *= 2.0;
    }
    Err(Error::IllConditionedFit(format!(
        "channel m={} does not reach its inverse-square tail before rho={r:e}; extend rho_max",
        pp.m
    )))
}

/// `(ψ, dψ/d ln ρ)` at node `i` of a log grid by central differences.
fn log_slope(w: &[f64], i: usize, h: f64) -> (f64, f64) {
    (w[i], (w[i + 1] - w[i - 1]) / (2.0 * h))
}

/// On a logarithmic grid `w = ψ` and the equation reads `ψ'' = ρ²U ψ` in
/// `s = ln ρ`. The regular solution is integrated outward; the solution that
/// decays (or, for `μ = 0`, stays bounded) is started as `ρ^{−μ}` in the
/// clean tail and integrated inward, which is the stable direction for it.
/// Their normalised Wronskian at `ρ_c = 2R` decides whether the regular
/// solution decays. Past `ρ_c` the ratio `ψ_reg/ψ_dec` is monotone and the
/// regular solution crosses zero once more exactly when that ratio is
/// heading towards zero.
fn zero_energy(model: &AbModel, m: i32, step: f64) -> Result<ZeroEnergy> {
    let pp = model.partial(m)?;
    let onset = asymptotic_onset(&pp)?;
    let grid = RadialGrid::new(RHO_MIN * model.length_scale(), onset, step, None, model.discontinuity())?;
    let h = grid.step();
    let rho = grid.rho();
    let n = rho.len();
    let q = working_terms(&pp, 0.0, &grid)?;
    let tail = |r: f64| (r / onset).powf(-pp.mu);
    let mut dec = numerov_sweep(&q.reversed(), h, tail(rho[n - 1]), tail(rho[n - 2]));
    dec.reverse();

    // match where the decaying solution has no zeros further out
    let mut c = grid.nearest(2.0 * model_range(model)).clamp(1, n - 2);
    if let Some(last) = (c..n - 1).rev().find(|&i| (dec[i] > 0.0) != (dec[i + 1] > 0.0)) {
        c = (last + 2).min(n - 2);
    }
    // the regular solution is only needed up to the matching node
    let (w0, w1) = regular_start(&pp, 0.0, &grid);
    let reg = numerov_sweep(&q.head(c + 1), h, w0, w1);
    let (a, da) = log_slope(&reg, c, h);
    let (b, db) = log_slope(&dec, c, h);
    let wronskian = a * db - da * b;
    let angle = wronskian / (a.hypot(da) * b.hypot(db));
    let decaying = angle.abs() <= DECAY_TOLERANCE;

    let mut nodes = sign_changes(&reg[..=c]);
    // (ψ_reg/ψ_dec)' has the sign of −W
    if !decaying && wronskian * a * b > 0.0 {
        nodes += 1;
    }
    let (bound, half_bound) = match pp.mu {
        mu if mu <= 1.0 => (false, decaying),
        _ => (decaying, false),
    };
    Ok(ZeroEnergy { nodes, bound, half_bound })
}

/// Zero-energy analysis checked against a halved grid step.
fn zero_energy_checked(model: &AbModel, m: i32) -> Result<ZeroEnergy> {
    let coarse = zero_energy(model, m, STEP)?;
    let fine = zero_energy(model, m, 0.5 * STEP)?;
    if coarse != fine {
        return Err(Error::NodeCountUnstable(format!(
            "channel m={m}: {coarse:?} at step {STEP} but {fine:?} at step {}",
            0.5 * STEP
        )));
    }
    Ok(coarse)
}

/// `(bound, half_bound)` for a state exactly at `E = 0`.
pub fn classify_zero_energy(model: &AbModel, m: i32) -> Result<(bool, bool)> {
    let z = zero_energy_checked(model, m)?;
    Ok((z.bound, z.half_bound))
}

/// Number of bound states of channel `m`: the zeros of the zero-energy
/// regular solution, plus one for a square-integrable state at `E = 0`.
pub fn count_bound(model: &AbModel, m: i32) -> Result<usize> {
    Ok(spectrum(model, m)?.n_bound)
}

pub fn spectrum(model: &AbModel, m: i32) -> Result<SpectrumCount> {
    let pp = model.partial(m)?;
    let z = zero_energy_checked(model, m)?;
    Ok(SpectrumCount {
        m,
        n_bound: z.nodes + usize::from(z.bound),
        half_bound: z.half_bound,
        mu: pp.mu,
        zero_mode_bound: z.bound,
    })
}

/// Closest approach to threshold resolved by [`count_bound_bisect`].
const E_TOP: f64 = -1e-100;

struct Probe {
    nodes: usize,
    /// `sin` of the angle between outward and inward `(u, u')` at the
    /// matching radius.
    mismatch: f64,
}

fn probe(pp: &PartialPotential<'_>, e: f64) -> Result<Probe> {
    let model = pp.model;
    let kappa = (-e).sqrt();
    let range = model_range(model);
    let rho_far = range + (pp.mu + 40.0) / kappa;
    let grid = RadialGrid::new(RHO_MIN * model.length_scale(), rho_far, STEP, Some(1.0 / kappa), model.discontinuity())?;
    let h = grid.step();
    let n = grid.len();
    let outward = integrate_regular(pp, e, &grid)?;

    let q = working_terms(pp, e, &grid)?;
    let c = grid.nearest(range).clamp(1, n - 2);
    // both solutions near the matching node, away from the rescaling that
    // the far growth of the outward one triggers
    let (w0, w1) = regular_start(pp, e, &grid);
    let out = numerov_sweep(&q.head(c + 1), h, w0, w1);
    let mut inward = numerov_sweep(&q.reversed(), h, 0.0, 1e-300);
    inward.reverse();

    let (a, da) = (out[c], out[c + 1] - out[c - 1]);
    let (b, db) = (inward[c], inward[c + 1] - inward[c - 1]);
    Ok(Probe { nodes: outward.node_count, mismatch: (a * db - da * b) / (a.hypot(da) * b.hypot(db)) })
}

/// Independent count of the eigenvalues in `(e_min, 0)`.
///
/// Each level is bracketed in `ln(−E)` by the node count of the outward
/// solution on a box reaching 40 decay lengths past the turning region,
/// then located by bisection on the normalised Wronskian of the outward
/// and inward solutions at the model range. A bracket without a sign change
/// of that mismatch is reported as an error.
pub fn count_bound_bisect(model: &AbModel, m: i32, e_min: f64) -> Result<usize> {
    Ok(bound_levels(model, m, e_min)?.len())
}

/// Energies of the levels found by [`count_bound_bisect`], deepest first.
pub fn bound_levels(model: &AbModel, m: i32, e_min: f64) -> Result<Vec<f64>> {
    if !(e_min.is_finite() && e_min < 0.0) {
        return Err(Error::InvalidParameter(format!("E_min must be negative, got {e_min}")));
    }
    let pp = model.partial(m)?;
    let to_e = |t: f64| -t.exp();
    let count = |t: f64| probe(&pp, to_e(t)).map(|p| p.nodes);
    let (t_lo, t_hi) = ((-e_min).ln(), (-E_TOP).ln());
    let below = count(t_lo)?;
    if below != 0 {
        return Err(Error::Bracketing(format!(
            "E_min={e_min} is not below the bottom of channel m={m} ({below} levels lie below it)"
        )));
    }
    let total = count(t_hi)?;
    let mut levels = Vec::with_capacity(total);
    for level in 0..total {
        // t falls as E rises; narrow to where the count first exceeds `level`
        let (mut deep, mut shallow) = (t_lo, t_hi);
        while deep - shallow > 1e-3 {
            let mid = 0.5 * (deep + shallow);
            if count(mid)? > level {
                shallow = mid;
            } else {
                deep = mid;
            }
        }
        let mut lo = probe(&pp, to_e(deep))?.mismatch;
        let hi = probe(&pp, to_e(shallow))?.mismatch;
        if lo * hi > 0.0 || !(lo * hi).is_finite() {
            return Err(Error::Bracketing(format!(
                "level {level} of channel m={m} near E={:e} shows no matching sign change",
                to_e(shallow)
            )));
        }
        for _ in 0..60 {
            let mid = 0.5 * (deep + shallow);
            let f = probe(&pp, to_e(mid))?.mismatch;
            if f * lo > 0.0 {
                deep = mid;
                lo = f;
            } else {
                shallow = mid;
            }
        }
        levels.push(to_e(0.5 * (deep + shallow)));
    }
    Ok(levels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::potentials::{make_bp_soliton, make_flux_well, make_free, make_pure_flux, SolitonParams};

    #[test]
    fn pure_flux_has_no_bound_states() {
        let model = make_pure_flux(0.5).unwrap();
        for m in -3..=3 {
            assert_eq!(count_bound(&model, m).unwrap(), 0);
        }
    }

    #[test]
    fn free_s_wave_is_half_bound() {
        let s = spectrum(&make_free(), 0).unwrap();
        assert_eq!(s.n_bound, 0);
        assert!(s.half_bound);
        assert!(!spectrum(&make_free(), 1).unwrap().half_bound);
    }

    #[test]
    fn soliton_zero_modes() {
        let model = make_bp_soliton(SolitonParams::new(1, 1.0)).unwrap();
        assert_eq!(classify_zero_energy(&model, 0).unwrap(), (false, true));
        assert_eq!(classify_zero_energy(&model, 1).unwrap(), (true, false));
        assert_eq!(count_bound(&model, 1).unwrap(), 1);
        assert_eq!(count_bound(&model, 2).unwrap(), 0);
    }

    #[test]
    fn weak_two_dimensional_well_binds_s_wave_only() {
        let model = make_flux_well(0.0, 1e-3, 1.0).unwrap();
        assert_eq!(count_bound(&model, 0).unwrap(), 1);
        assert_eq!(count_bound(&model, 1).unwrap(), 0);
    }

    #[test]
    fn bisection_matches_node_count() {
        let model = make_flux_well(0.5, 25.0, 1.0).unwrap();
        for m in [0, 1, 2] {
            let nodes = count_bound(&model, m).unwrap();
            let oracle = count_bound_bisect(&model, m, -30.0).unwrap();
            assert_eq!(nodes, oracle, "m={m}");
        }
        assert!(count_bound(&model, 0).unwrap() >= 1);
    }
}
