use super::grid::RadialGrid;
use crate::error::{Error, Result};
use crate::potentials::PartialPotential;

const RESCALE_AT: f64 = 1e150;

/// Numerov coefficients `Q_i` of `w'' = Q w`. At a jump node both
/// one-sided limits are kept; `q` holds their average there.
#[derive(Debug, Clone)]
pub(crate) struct Terms {
    pub q: Vec<f64>,
    /// `(index, limit from lower indices, limit from higher indices)`
    pub jump: Option<(usize, f64, f64)>,
}

impl Terms {
    /// Nodes `0..=end`.
    pub fn head(&self, end: usize) -> Terms {
        Terms { q: self.q[..=end].to_vec(), jump: self.jump.filter(|j| j.0 <= end) }
    }

    /// The same terms in the opposite order, for inward sweeps.
    pub fn reversed(&self) -> Terms {
        let n = self.q.len();
        Terms {
            q: self.q.iter().rev().copied().collect(),
            jump: self.jump.map(|(j, lo, hi)| (n - 1 - j, hi, lo)),
        }
    }
}

pub(crate) fn working_terms(pp: &PartialPotential<'_>, e: f64, grid: &RadialGrid) -> Result<Terms> {
    let rho = grid.rho();
    let mut q = Vec::with_capacity(rho.len());
    let mut jump = None;
    for (i, &r) in rho.iter().enumerate() {
        let u = pp.eval(r);
        if !u.is_finite() {
            return Err(Error::NonFinitePotential { rho: r });
        }
        if grid.jump_index() == Some(i) {
            let outside = pp.eval(r * (1.0 + 1e-12));
            let (lo, hi) = (grid.working_term(i, u - e), grid.working_term(i, outside - e));
            jump = Some((i, lo, hi));
            q.push(0.5 * (lo + hi));
        } else {
            q.push(grid.working_term(i, u - e));
        }
    }
    Ok(Terms { q, jump })
}

/// Step across a jump node `i` from one-sided Taylor expansions to fourth
/// order, with `w'` eliminated through `(w₊ − w₋)/2h`. The result is the same
/// whichever way the sweep runs.
fn jump_step(q: &[f64], i: usize, before: f64, after: f64, h: f64, w: &[f64]) -> f64 {
    let n = q.len();
    // one-sided first and second derivatives of Q
    let (d_after, dd_after) = if i + 2 < n {
        ((-3.0 * after + 4.0 * q[i + 1] - q[i + 2]) / (2.0 * h), (after - 2.0 * q[i + 1] + q[i + 2]) / (h * h))
    } else {
        ((q[i + 1] - after) / h, 0.0)
    };
    let (d_before, dd_before) = if i >= 2 {
        ((3.0 * before - 4.0 * q[i - 1] + q[i - 2]) / (2.0 * h), (before - 2.0 * q[i - 1] + q[i - 2]) / (h * h))
    } else {
        ((before - q[i - 1]) / h, 0.0)
    };
    let h2 = h * h;
    let c = h2 * (after - before) / 12.0;
    let p = h2 * h * (d_after + d_before) / 24.0;
    let own = 2.0
        + 0.5 * h2 * (after + before)
        + h2 * h / 6.0 * (d_after - d_before)
        + h2 * h2 / 24.0 * (dd_after + dd_before + 2.0 * after * before);
    (own * w[i] - w[i - 1] * (1.0 + c + p)) / (1.0 - c - p)
}

/// Forward Numerov sweep from two starting values. Values are rescaled in
/// place whenever they grow past `1e150`, so only ratios are meaningful.
pub(crate) fn sweep(t: &Terms, h: f64, w0: f64, w1: f64) -> Vec<f64> {
    let q = &t.q;
    let n = q.len();
    let c = h * h / 12.0;
    // value of node `i` seen from the stencil centred at `centre`
    let side = |i: usize, centre: usize| match t.jump {
        Some((j, lo, hi)) if j == i => {
            if centre < i {
                lo
            } else {
                hi
            }
        }
        _ => q[i],
    };
    let mut w = Vec::with_capacity(n);
    w.push(w0);
    w.push(w1);
    for i in 1..n - 1 {
        let next = match t.jump {
            Some((j, lo, hi)) if j == i => jump_step(q, i, lo, hi, h, &w),
            _ => {
                (2.0 * w[i] * (1.0 + 5.0 * c * q[i]) - w[i - 1] * (1.0 - c * side(i - 1, i)))
                    / (1.0 - c * side(i + 1, i))
            }
        };
        w.push(next);
        if next.abs() > RESCALE_AT {
            for v in w.iter_mut() {
                *v /= RESCALE_AT;
            }
        }
    }
    w
}

/// Sign changes by sign bit, so values flushed to `±0` by rescaling keep
/// their sign. Leading positive zeros (e.g. a start value of exactly 0) are
/// skipped.
pub(crate) fn sign_changes(v: &[f64]) -> usize {
    let mut it = v.iter().skip_while(|x| **x == 0.0 && !x.is_sign_negative());
    let Some(first) = it.next() else {
        return 0;
    };
    let mut negative = first.is_sign_negative();
    let mut count = 0;
    for x in it {
        if x.is_sign_negative() != negative {
            count += 1;
            negative = !negative;
        }
    }
    count
}
