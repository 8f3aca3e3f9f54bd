use crate::error::{Error, Result};

pub const MIN_NODES: usize = 1000;

/// Radial mesh, uniform in the stretched coordinate `s = ln ρ + ρ/b`.
///
/// Close to the origin the spacing is logarithmic; beyond `ρ ~ b` it becomes
/// uniform with step `h·b`. Without a stretch length the grid is purely
/// logarithmic. The radial equation is integrated in `s`, where it keeps the
/// Numerov form `w'' = Q(s) w` (see [`RadialGrid::working_term`]).
#[derive(Debug, Clone, PartialEq)]
pub struct RadialGrid {
    stretch: Option<f64>,
    s0: f64,
    h: f64,
    rho: Vec<f64>,
    jump: Option<usize>,
}

fn to_s(stretch: Option<f64>, rho: f64) -> f64 {
    match stretch {
        Some(b) => rho.ln() + rho / b,
        None => rho.ln(),
    }
}

fn to_rho(stretch: Option<f64>, s: f64, guess: f64) -> f64 {
    let b = match stretch {
        None => return s.exp(),
        Some(b) => b,
    };
    // Newton on x = ln rho; f is convex so a start right of the root
    // converges monotonically
    let mut x = guess.ln().min(s);
    if b * s > 1.0 {
        x = x.min((b * s).ln());
    }
    for _ in 0..100 {
        let e = x.exp();
        let f = x + e / b - s;
        let dx = f / (1.0 + e / b);
        x -= dx;
        if dx.abs() <= 1e-15 * x.abs().max(1.0) {
            break;
        }
    }
    x.exp()
}

impl RadialGrid {
    /// Grid from `rho_min` to at least `rho_max` with step `h` in `s`.
    /// When `anchor` is given the grid is shifted so that one node lands
    /// exactly on it.
    pub fn new(rho_min: f64, rho_max: f64, h: f64, stretch: Option<f64>, anchor: Option<f64>) -> Result<Self> {
        if !(rho_min > 0.0 && rho_max > rho_min && h > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "bad radial grid: rho_min={rho_min}, rho_max={rho_max}, h={h}"
            )));
        }
        if let Some(b) = stretch {
            if !(b.is_finite() && b > 0.0) {
                return Err(Error::InvalidParameter(format!("bad grid stretch length {b}")));
            }
        }
        let s_lo = to_s(stretch, rho_min);
        let s_hi = to_s(stretch, rho_max);
        let mut h = h;
        if ((s_hi - s_lo) / h) < MIN_NODES as f64 {
            h = (s_hi - s_lo) / MIN_NODES as f64;
        }
        let anchor = anchor.filter(|&a| a > rho_min && a < rho_max);
        let (s0, jump) = match anchor {
            Some(a) => {
                let sa = to_s(stretch, a);
                let below = ((sa - s_lo) / h).floor() as usize;
                (sa - below as f64 * h, Some(below))
            }
            None => (s_lo, None),
        };
        let n = ((s_hi - s0) / h).ceil() as usize + 1;
        let mut rho = Vec::with_capacity(n);
        let mut prev = rho_max;
        for i in (0..n).rev() {
            let r = to_rho(stretch, s0 + i as f64 * h, prev);
            rho.push(r);
            prev = r;
        }
        rho.reverse();
        if let (Some(j), Some(a)) = (jump, anchor) {
            rho[j] = a;
        }
        Ok(Self { stretch, s0, h, rho, jump })
    }

    pub fn len(&self) -> usize {
        self.rho.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rho.is_empty()
    }

    pub fn step(&self) -> f64 {
        self.h
    }

    pub fn rho(&self) -> &[f64] {
        &self.rho
    }

    pub fn rho_min(&self) -> f64 {
        self.rho[0]
    }

    pub fn rho_max(&self) -> f64 {
        self.rho[self.rho.len() - 1]
    }

    pub fn stretch(&self) -> Option<f64> {
        self.stretch
    }

    /// Index of the node placed on the discontinuity, if any.
    pub fn jump_index(&self) -> Option<usize> {
        self.jump
    }

    /// `dρ/ds` at node `i`.
    pub fn jacobian(&self, i: usize) -> f64 {
        let r = self.rho[i];
        match self.stretch {
            Some(b) => r * (b / (b + r)),
            None => r,
        }
    }

    /// Node index nearest to `rho`.
    pub fn nearest(&self, rho: f64) -> usize {
        let i = self.rho.partition_point(|&r| r < rho);
        if i == 0 {
            return 0;
        }
        if i >= self.rho.len() {
            return self.rho.len() - 1;
        }
        if (self.rho[i] - rho) < (rho - self.rho[i - 1]) {
            i
        } else {
            i - 1
        }
    }

    /// The `s`-space coefficient multiplying `w` for a given value of
    /// `U(ρ) − E` at node `i`:
    ///
    /// `Q = g'²(U − E − 1/(4ρ²)) − S/2`, with `g' = dρ/ds` and `S` the
    /// Schwarzian derivative of `ρ(s)`.
    pub fn working_term(&self, i: usize, u_minus_e: f64) -> f64 {
        let r = self.rho[i];
        match self.stretch {
            None => r * r * u_minus_e,
            Some(b) => {
                // with t = b/(b + rho): g' = t rho, S = -t^3 (2 - 1.5 t)
                let t = b / (b + r);
                let gp = t * r;
                let geometric = -0.25 * t * t + 0.5 * t * t * t * (2.0 - 1.5 * t);
                gp * gp * u_minus_e + geometric
            }
        }
    }

    #[cfg(test)]
    fn s_of(&self, i: usize) -> f64 {
        self.s0 + i as f64 * self.h
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nodes_are_uniform_in_s() {
        let g = RadialGrid::new(1e-5, 300.0, 0.01, Some(2.0), None).unwrap();
        for i in [0, 10, g.len() / 2, g.len() - 1] {
            let s = to_s(Some(2.0), g.rho()[i]);
            assert!((s - g.s_of(i)).abs() < 1e-12 * s.abs().max(1.0));
        }
        assert!(g.rho_max() >= 300.0);
        // far spacing approaches h * b
        let n = g.len();
        let d = g.rho()[n - 1] - g.rho()[n - 2];
        assert!((d - 0.02).abs() < 1e-3);
    }

    #[test]
    fn anchor_lands_on_a_node() {
        let g = RadialGrid::new(1e-5, 50.0, 0.01, Some(0.3), Some(1.0)).unwrap();
        let j = g.jump_index().unwrap();
        assert_eq!(g.rho()[j], 1.0);
        assert!(g.rho()[j - 1] < 1.0 && g.rho()[j + 1] > 1.0);
    }

    #[test]
    fn log_working_term_reduces_to_rho_squared() {
        let g = RadialGrid::new(1e-4, 10.0, 0.01, None, None).unwrap();
        let r = g.rho()[100];
        assert_eq!(g.working_term(100, 3.0), r * r * 3.0);
    }

    #[test]
    fn stretched_term_tends_to_log_form_near_origin() {
        let g = RadialGrid::new(1e-6, 10.0, 0.01, Some(1.0), None).unwrap();
        let r = g.rho()[0];
        let t = g.working_term(0, 2.0 / (r * r));
        assert!((t - 2.0).abs() < 1e-4);
    }

    #[test]
    fn enforces_minimum_node_count() {
        let g = RadialGrid::new(1.0, 2.0, 0.5, None, None).unwrap();
        assert!(g.len() >= MIN_NODES);
        assert!(RadialGrid::new(0.0, 1.0, 0.1, None, None).is_err());
    }
}
