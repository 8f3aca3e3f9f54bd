use std::f64::consts::PI;

use rayon::prelude::*;
use serde::Serialize;

use super::{phase_shift_detail, RadialSettings};
use crate::error::{Error, Result};
use crate::potentials::AbModel;

/// Largest gap between neighbouring phases that is left unrefined.
pub const UNWRAP_LIMIT: f64 = 0.4 * PI;

/// Bisection rounds allowed for resolving steep stretches of the phase.
const MAX_REFINE: usize = 20;

/// Threshold law used for an endpoint extrapolation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FitLaw {
    /// Three flat points; the nearest value is taken as is.
    Flat,
    /// `δ = c0 + c1 x^p`.
    Power,
    /// `tan(δ − c0) = 1/(A ln x + B)`, the slow approach of 2D channels
    /// with `|μ| = 0` or a zero-energy resonance at `|μ| = 1`.
    Logarithmic,
    /// `tan(δ − c0) = 1/(A x^{−2μ} + B)`, the approach of a channel whose
    /// outer intensity is `0 < μ < 1`.
    Threshold,
    /// Least-squares series in `1/k` over the top of the grid.
    Series,
}

/// How an endpoint value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EndpointFit {
    /// Extrapolated phase.
    pub value: f64,
    pub law: FitLaw,
    /// Fitted power `p` for the power law.
    pub power: Option<f64>,
}

/// Unwrapped phase shift over a wavenumber grid.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PhaseCurve {
    pub m: i32,
    pub k_grid: Vec<f64>,
    pub delta: Vec<f64>,
    pub delta_at_zero: f64,
    pub delta_at_infinity: f64,
    pub zero_fit: EndpointFit,
    pub infinity_fit: EndpointFit,
}

impl PhaseCurve {
    /// `δ(0) − δ(∞)`.
    pub fn total_phase(&self) -> f64 {
        self.delta_at_zero - self.delta_at_infinity
    }
}

const MIN_POWER: f64 = 0.05;

fn power_ratio(x: [f64; 3], p: f64) -> f64 {
    (x[2].powf(p) - x[1].powf(p)) / (x[1].powf(p) - x[0].powf(p))
}

/// Fits `δ = c0 + c1 x^p`, `p ∈ [0.05, 2]`, through three points ordered by
/// increasing `x` and returns `c0`, the value at `x → 0`.
pub fn extrapolate_endpoint(x: [f64; 3], d: [f64; 3]) -> EndpointFit {
    let d1 = d[1] - d[0];
    let d2 = d[2] - d[1];
    let flat = 1e-13 * d[0].abs().max(1.0);
    if d1.abs() <= flat || d1 * d2 <= 0.0 {
        return EndpointFit { value: d[0], law: FitLaw::Flat, power: None };
    }
    let target = d2 / d1;
    // the ratio grows with p; p -> 0 gives ln(x2/x1)/ln(x1/x0)
    let (mut lo, mut hi) = (MIN_POWER, 2.0);
    // no power law fits; the drift is noise or not yet asymptotic
    if target <= power_ratio(x, lo) {
        return EndpointFit { value: d[0], law: FitLaw::Flat, power: None };
    }
    let p = if target >= power_ratio(x, hi) {
        hi
    } else {
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if power_ratio(x, mid) < target {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    };
    let c1 = d1 / (x[1].powf(p) - x[0].powf(p));
    EndpointFit { value: d[0] - c1 * x[0].powf(p), law: FitLaw::Power, power: Some(p) }
}

fn power_predict(x: [f64; 3], d: [f64; 3], fit: &EndpointFit, at: f64) -> f64 {
    match fit.power {
        Some(p) => {
            let c1 = (d[1] - d[0]) / (x[1].powf(p) - x[0].powf(p));
            fit.value + c1 * at.powf(p)
        }
        None => fit.value,
    }
}

/// Line through `(l_i, 1/tan(d_i − c))`; returns `(slope, intercept,
/// collinearity defect)`.
fn cot_line(l: [f64; 3], d: [f64; 3], c: f64) -> (f64, f64, f64) {
    let y = d.map(|v| 1.0 / (v - c).tan());
    let s01 = (y[1] - y[0]) / (l[1] - l[0]);
    let s12 = (y[2] - y[1]) / (l[2] - l[1]);
    (s01, y[0] - s01 * l[0], s01 - s12)
}

/// Fits `tan(δ − c) = 1/(A l + B)` through three points ordered by
/// increasing `x`, where `l` is a transform of `x` diverging at `x → 0`;
/// `c` is the limit. Returns `(c, A, B)`.
fn fit_cot_line(l: [f64; 3], d: [f64; 3]) -> Option<(f64, f64, f64)> {
    // the limit lies beyond d[0], on the side the curve moves towards
    let dir = (d[0] - d[1]).signum();
    if dir == 0.0 || (d[1] - d[2]).signum() != dir {
        return None;
    }
    let span = 0.5 * PI;
    let steps = 4000;
    let at = |i: usize| d[0] + dir * span * (i as f64) / steps as f64;
    let mut prev: Option<(f64, f64)> = None;
    for i in 1..steps {
        let c = at(i);
        let g = cot_line(l, d, c).2;
        if !g.is_finite() {
            prev = None;
            continue;
        }
        if let Some((pc, pg)) = prev {
            if pg * g <= 0.0 {
                let (mut a, mut b, mut ga) = (pc, c, pg);
                for _ in 0..100 {
                    let mid = 0.5 * (a + b);
                    let gm = cot_line(l, d, mid).2;
                    if ga * gm <= 0.0 {
                        b = mid;
                    } else {
                        a = mid;
                        ga = gm;
                    }
                }
                let c = 0.5 * (a + b);
                let (slope, icpt, _) = cot_line(l, d, c);
                return Some((c, slope, icpt));
            }
        }
        prev = Some((c, g));
    }
    None
}

/// Chooses the threshold law by how well each candidate, fitted to the
/// three points nearest the limit, predicts a fourth point `(check_x,
/// check_d)` further out. Candidates are the power and logarithmic laws,
/// and for `0 < μ < 1` the law with known exponent `2μ`.
pub fn extrapolate_with_check(x: [f64; 3], d: [f64; 3], check_x: f64, check_d: f64, mu: f64) -> EndpointFit {
    let power = extrapolate_endpoint(x, d);
    if (d[1] - d[0]).abs() <= 1e-13 * d[0].abs().max(1.0) {
        return power;
    }
    let mut best = power;
    let mut best_err = (power_predict(x, d, &power, check_x) - check_d).abs();
    let mut laws = vec![(FitLaw::Logarithmic, x.map(f64::ln), check_x.ln())];
    if mu > 0.0 && mu < 1.0 {
        let l = |v: f64| v.powf(-2.0 * mu);
        laws.push((FitLaw::Threshold, x.map(l), l(check_x)));
    }
    for (law, l, check_l) in laws {
        let Some((c, a, b)) = fit_cot_line(l, d) else {
            continue;
        };
        let err = (c + (1.0 / (a * check_l + b)).atan() - check_d).abs();
        if err < best_err {
            best = EndpointFit { value: c, law, power: None };
            best_err = err;
        }
    }
    best
}

/// Phase shift over `k_grid` with sweep integration settings.
///
/// Each sample is placed on the branch fixed by the node count of its
/// regular solution, so the curve needs no unwrapping guesswork. Where two
/// neighbours still differ by more than [`UNWRAP_LIMIT`], e.g. across a
/// narrow resonance, geometric midpoints are inserted into the returned
/// `k_grid` until the gap closes.
pub fn phase_sweep(model: &AbModel, m: i32, k_grid: &[f64]) -> Result<PhaseCurve> {
    phase_sweep_with(model, m, k_grid, &RadialSettings::sweep())
}

pub fn phase_sweep_with(model: &AbModel, m: i32, k_grid: &[f64], settings: &RadialSettings) -> Result<PhaseCurve> {
    if k_grid.len() < 3 {
        return Err(Error::InvalidParameter("phase sweep needs at least 3 wavenumbers".into()));
    }
    if k_grid.iter().any(|k| !(k.is_finite() && *k > 0.0)) || k_grid.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::InvalidParameter("wavenumber grid must be positive and strictly increasing".into()));
    }
    let sample = |k: f64| phase_shift_detail(model, m, k, settings).map(|s| s.absolute());
    let mut ks = k_grid.to_vec();
    let mut delta: Vec<f64> = ks.par_iter().map(|&k| sample(k)).collect::<Result<_>>()?;

    // resolve sharp resonances by bisecting gaps in log k
    for _ in 0..MAX_REFINE {
        let wide: Vec<usize> = (1..ks.len()).filter(|&i| (delta[i] - delta[i - 1]).abs() > UNWRAP_LIMIT).collect();
        if wide.is_empty() {
            break;
        }
        let mids: Vec<f64> = wide.iter().map(|&i| (ks[i - 1] * ks[i]).sqrt()).collect();
        let vals: Vec<f64> = mids.par_iter().map(|&k| sample(k)).collect::<Result<_>>()?;
        for ((&i, &k), &v) in wide.iter().zip(&mids).zip(&vals).rev() {
            ks.insert(i, k);
            delta.insert(i, v);
        }
    }
    if let Some(i) = (1..ks.len()).find(|&i| (delta[i] - delta[i - 1]).abs() > UNWRAP_LIMIT) {
        return Err(Error::UnwrapAmbiguity(format!(
            "phase jumps by {:.3} rad between k={} and k={} after refinement",
            delta[i] - delta[i - 1],
            ks[i - 1],
            ks[i]
        )));
    }
    let k_grid = ks.as_slice();

    let n = k_grid.len();
    let check = (n - 1).min(8);
    let zero_fit = extrapolate_with_check(
        [k_grid[0], k_grid[1], k_grid[2]],
        [delta[0], delta[1], delta[2]],
        k_grid[check],
        delta[check],
        model.partial(m)?.mu,
    );
    let infinity_fit = extrapolate_high_k(k_grid, &delta, model.discontinuity()).unwrap_or_else(|| {
        extrapolate_endpoint(
            [1.0 / k_grid[n - 1], 1.0 / k_grid[n - 2], 1.0 / k_grid[n - 3]],
            [delta[n - 1], delta[n - 2], delta[n - 3]],
        )
    });
    Ok(PhaseCurve {
        m,
        k_grid: k_grid.to_vec(),
        delta,
        delta_at_zero: zero_fit.value,
        delta_at_infinity: infinity_fit.value,
        zero_fit,
        infinity_fit,
    })
}

/// Lower edge of the high-k fit window relative to the largest wavenumber.
const SERIES_WINDOW: f64 = 0.2;

/// `δ(∞)` from a least-squares fit of `c0 + c1/k + c2/k² + c3/k³` to the
/// samples with `k ≥ k_max/5`. A step of `U` at `jump` reflects a wave of
/// relative size `1/k²`, so then `cos 2kR` and `sin 2kR` times `1/k²` and
/// `1/k³` join the basis. `None` when the window holds too few samples.
pub fn extrapolate_high_k(k: &[f64], d: &[f64], jump: Option<f64>) -> Option<EndpointFit> {
    let k_max = *k.last()?;
    let first = k.iter().position(|&v| v >= SERIES_WINDOW * k_max * (1.0 - 1e-12))?;
    let x0 = 1.0 / k[first];
    let rows: Vec<Vec<f64>> = k[first..]
        .iter()
        .map(|&kk| {
            let x = 1.0 / kk / x0;
            let mut row = vec![1.0, x, x * x, x * x * x];
            if let Some(r) = jump {
                let (s, c) = (2.0 * kk * r).sin_cos();
                row.extend([x * x * c, x * x * s, x * x * x * c, x * x * x * s]);
            }
            row
        })
        .collect();
    if rows.len() < rows[0].len() + 3 {
        return None;
    }
    let coef = least_squares(rows, d[first..].to_vec())?;
    Some(EndpointFit { value: coef[0], law: FitLaw::Series, power: None })
}

/// Householder QR solution of the overdetermined system `A c ≈ y`.
fn least_squares(mut a: Vec<Vec<f64>>, mut y: Vec<f64>) -> Option<Vec<f64>> {
    let (n, p) = (a.len(), a[0].len());
    for j in 0..p {
        let norm = (j..n).map(|i| a[i][j] * a[i][j]).sum::<f64>().sqrt();
        if norm == 0.0 {
            return None;
        }
        let alpha = if a[j][j] > 0.0 { -norm } else { norm };
        let mut v: Vec<f64> = (j..n).map(|i| a[i][j]).collect();
        v[0] -= alpha;
        let vv: f64 = v.iter().map(|t| t * t).sum();
        if vv == 0.0 {
            continue;
        }
        for col in j..p {
            let dot: f64 = (j..n).map(|i| v[i - j] * a[i][col]).sum::<f64>() * 2.0 / vv;
            for i in j..n {
                a[i][col] -= dot * v[i - j];
            }
        }
        let dot: f64 = (j..n).map(|i| v[i - j] * y[i]).sum::<f64>() * 2.0 / vv;
        for i in j..n {
            y[i] -= dot * v[i - j];
        }
    }
    let mut c = vec![0.0; p];
    for j in (0..p).rev() {
        let s: f64 = ((j + 1)..p).map(|l| a[j][l] * c[l]).sum();
        if a[j][j].abs() < 1e-14 * a[0][0].abs() {
            return None;
        }
        c[j] = (y[j] - s) / a[j][j];
    }
    Some(c)
}

/// `points` log-spaced wavenumbers on `[k_min, k_max]`.
pub fn log_grid(k_min: f64, k_max: f64, points: usize) -> Vec<f64> {
    let (a, b) = (k_min.ln(), k_max.ln());
    let last = points.saturating_sub(1);
    (0..points)
        .map(|i| match i {
            0 => k_min,
            _ if i == last => k_max,
            _ => (a + (b - a) * i as f64 / last as f64).exp(),
        })
        .collect()
}
