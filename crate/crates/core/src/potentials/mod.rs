//! Aharonov–Bohm scattering models.
//!
//! A model is a scalar potential `V(ρ)` together with an axially symmetric
//! flux profile `Φ(ρ)`. Units: `ħ = 1` and twice the particle mass is 1, so
//! `E = k²`. Flux is stored in turns, `Φ/2π`; [`AbModel::phi`] returns the
//! value in radians. Each channel `m` sees the partial potential
//!
//! ```text
//! U_m(ρ) = V(ρ) + (m − Φ(ρ)/2π)² / ρ²
//! ```
//!
//! whose inverse-square strengths at the origin and at infinity are the
//! intensities `ν = |m − α|` and `μ = |m − β|`, with `α = Φ(0)/2π` and
//! `β = Φ(∞)/2π`.

mod table;

use std::f64::consts::PI;
use std::path::Path;

pub use table::{parse_table, read_table_file, MonotoneCubic, TableProfile};

use crate::error::{Error, Result};

/// Parameters of a Belavin–Polyakov soliton.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolitonParams {
    pub q: i32,
    pub r: f64,
    pub phi0: f64,
}

impl SolitonParams {
    pub fn new(q: i32, r: f64) -> Self {
        Self { q, r, phi0: 0.0 }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Profile {
    Centrifugal { alpha: f64, beta: f64 },
    ConventionalAb { field: f64 },
    PureFlux { alpha: f64 },
    Soliton { q: i32, phi0: f64 },
    FluxWell { alpha: f64, depth: f64 },
    Table(TableProfile),
    Scaled { inner: Box<Profile>, factor: f64 },
}

/// Which family a model belongs to. The Levinson bookkeeping treats the
/// soliton family and field-free models specially.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModelFamily {
    Free,
    Centrifugal,
    ConventionalAb,
    PureFlux,
    Soliton { q: i32 },
    FluxWell,
    Table,
    Scaled,
}

/// An immutable scattering configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct AbModel {
    name: String,
    profile: Profile,
    alpha: f64,
    beta: f64,
    r: f64,
    free: bool,
}

fn check_length(r: f64) -> Result<()> {
    if !(r.is_finite() && r > 0.0) {
        return Err(Error::InvalidParameter(format!("length scale R must be positive, got {r}")));
    }
    Ok(())
}

fn check_finite(name: &str, v: f64) -> Result<()> {
    if !v.is_finite() {
        return Err(Error::InvalidParameter(format!("{name} must be finite, got {v}")));
    }
    Ok(())
}

/// `cos θ0` and `sin θ0` of the soliton profile `tan(θ0/2) = (R/ρ)^|q|`.
fn soliton_angles(q: i32, r: f64, rho: f64) -> (f64, f64) {
    let u = (rho / r).powi(2 * q.abs());
    if u.is_infinite() {
        return (1.0, 0.0);
    }
    ((u - 1.0) / (u + 1.0), 2.0 * u.sqrt() / (1.0 + u))
}

impl Profile {
    fn potential(&self, r: f64, rho: f64) -> f64 {
        match self {
            Profile::Centrifugal { .. } | Profile::ConventionalAb { .. } | Profile::PureFlux { .. } => 0.0,
            Profile::Soliton { q, .. } => {
                let (_, s) = soliton_angles(*q, r, rho);
                let qf = *q as f64;
                -qf * qf * s * s / (rho * rho)
            }
            Profile::FluxWell { depth, .. } => {
                if rho <= r {
                    -depth
                } else {
                    0.0
                }
            }
            Profile::Table(t) => t.potential(rho / r),
            Profile::Scaled { inner, factor } => factor * inner.potential(r, rho),
        }
    }

    fn flux(&self, r: f64, rho: f64) -> f64 {
        match self {
            Profile::Centrifugal { alpha, beta } => {
                if rho <= r {
                    *alpha
                } else {
                    *beta
                }
            }
            Profile::ConventionalAb { field } => {
                let x = rho.min(r);
                0.5 * field * x * x
            }
            Profile::PureFlux { alpha } => *alpha,
            Profile::Soliton { q, .. } => -(*q as f64) * soliton_angles(*q, r, rho).0,
            Profile::FluxWell { alpha, .. } => *alpha,
            Profile::Table(t) => t.flux(rho / r),
            Profile::Scaled { inner, factor } => factor * inner.flux(r, rho),
        }
    }

    /// Whether `V` is regular at both ends and `α, β` are exact, so the
    /// closed-form intensities apply.
    fn closed_form_intensities(&self) -> bool {
        match self {
            Profile::Table(_) => false,
            Profile::Scaled { inner, .. } => inner.closed_form_intensities(),
            _ => true,
        }
    }

    fn has_jump(&self) -> bool {
        match self {
            Profile::Centrifugal { alpha, beta } => alpha != beta,
            Profile::FluxWell { .. } => true,
            // continuous, but the slope jumps
            Profile::ConventionalAb { field } => *field != 0.0,
            Profile::Scaled { inner, .. } => inner.has_jump(),
            _ => false,
        }
    }

    fn flux_only(&self) -> bool {
        match self {
            Profile::Centrifugal { .. } | Profile::ConventionalAb { .. } | Profile::PureFlux { .. } => true,
            Profile::Scaled { inner, .. } => inner.flux_only(),
            _ => false,
        }
    }
}

impl AbModel {
    pub fn name(&self) -> &str {
        &self.name
    }

    /// `Φ(0)/2π`.
    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// `Φ(∞)/2π`.
    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// Length scale `R`.
    pub fn length_scale(&self) -> f64 {
        self.r
    }

    /// Scalar potential `V(ρ)`.
    pub fn potential(&self, rho: f64) -> f64 {
        self.profile.potential(self.r, rho)
    }

    /// `Φ(ρ)/2π`.
    pub fn flux(&self, rho: f64) -> f64 {
        self.profile.flux(self.r, rho)
    }

    /// `Φ(ρ)` in radians.
    pub fn phi(&self, rho: f64) -> f64 {
        2.0 * PI * self.flux(rho)
    }

    /// Radius at which `U_m` or its slope jumps, if any. Grids put a node there.
    pub fn discontinuity(&self) -> Option<f64> {
        self.profile.has_jump().then_some(self.r)
    }

    /// Outer edge of the structure of the model, in units of `R`. Beyond it
    /// `V` and `Φ` are at (or approaching) their asymptotic form.
    pub fn support_radius(&self) -> f64 {
        fn of(p: &Profile) -> f64 {
            match p {
                Profile::Table(t) => t.flux.last_x().max(1.0),
                Profile::Scaled { inner, .. } => of(inner),
                _ => 1.0,
            }
        }
        of(&self.profile)
    }

    /// True when `V ≡ 0`.
    pub fn is_flux_only(&self) -> bool {
        self.free || self.profile.flux_only()
    }

    pub fn family(&self) -> ModelFamily {
        if self.free {
            return ModelFamily::Free;
        }
        match &self.profile {
            Profile::Centrifugal { .. } => ModelFamily::Centrifugal,
            Profile::ConventionalAb { .. } => ModelFamily::ConventionalAb,
            Profile::PureFlux { .. } => ModelFamily::PureFlux,
            Profile::Soliton { q, .. } => ModelFamily::Soliton { q: *q },
            Profile::FluxWell { .. } => ModelFamily::FluxWell,
            Profile::Table(_) => ModelFamily::Table,
            Profile::Scaled { .. } => ModelFamily::Scaled,
        }
    }

    /// Soliton parameters when this is a soliton model.
    pub fn soliton_params(&self) -> Option<SolitonParams> {
        match self.profile {
            Profile::Soliton { q, phi0 } => Some(SolitonParams { q, r: self.r, phi0 }),
            _ => None,
        }
    }

    /// `U_m(ρ)` assembled from `V` and `Φ`.
    pub fn partial_potential_at(&self, m: i32, rho: f64) -> f64 {
        let a = m as f64 - self.flux(rho);
        self.potential(rho) + a * a / (rho * rho)
    }

    /// `U_m(ρ) − ν²/ρ²` without the cancellation of the direct difference.
    pub fn excess_over_origin(&self, m: i32, rho: f64) -> f64 {
        let f = self.flux(rho);
        let mf = m as f64;
        self.potential(rho) + (self.alpha - f) * (2.0 * mf - f - self.alpha) / (rho * rho)
    }

    /// `ρ²U_m(ρ) − μ²`.
    pub fn tail_excess(&self, m: i32, rho: f64) -> f64 {
        let f = self.flux(rho);
        let mf = m as f64;
        rho * rho * self.potential(rho) + (self.beta - f) * (2.0 * mf - f - self.beta)
    }

    /// The model with `V` and `Φ` multiplied by `factor`.
    pub fn scaled(&self, factor: f64) -> AbModel {
        AbModel {
            name: format!("{}*{factor}", self.name),
            profile: Profile::Scaled { inner: Box::new(self.profile.clone()), factor },
            alpha: self.alpha * factor,
            beta: self.beta * factor,
            r: self.r,
            free: self.free,
        }
    }

    pub fn partial(&self, m: i32) -> Result<PartialPotential<'_>> {
        let (nu, mu) = intensities(self, m)?;
        Ok(PartialPotential { model: self, m, nu, mu })
    }
}

/// Channel-`m` view of a model.
#[derive(Debug, Clone, Copy)]
pub struct PartialPotential<'a> {
    pub model: &'a AbModel,
    pub m: i32,
    pub nu: f64,
    pub mu: f64,
}

impl PartialPotential<'_> {
    pub fn eval(&self, rho: f64) -> f64 {
        self.model.partial_potential_at(self.m, rho)
    }

    /// Model-specific closed form of `U_m`, where one exists.
    pub fn closed_form(&self, rho: f64) -> Option<f64> {
        let mf = self.m as f64;
        match self.model.profile {
            Profile::Soliton { q, .. } => {
                let (c, s) = soliton_angles(q, self.model.r, rho);
                let qf = q as f64;
                Some((mf * mf + 2.0 * mf * qf * c + qf * qf * (c * c - s * s)) / (rho * rho))
            }
            Profile::Centrifugal { .. } => {
                let x = if rho <= self.model.r { mf - self.model.alpha } else { mf - self.model.beta };
                Some(x * x / (rho * rho))
            }
            Profile::PureFlux { alpha } => Some((mf - alpha).powi(2) / (rho * rho)),
            _ => None,
        }
    }
}

/// Free particle: `V = Φ = 0`.
pub fn make_free() -> AbModel {
    AbModel {
        name: "free".into(),
        profile: Profile::PureFlux { alpha: 0.0 },
        alpha: 0.0,
        beta: 0.0,
        r: 1.0,
        free: true,
    }
}

/// Piecewise-constant flux: `α` inside `R`, `β` outside, `V ≡ 0`.
pub fn make_centrifugal(alpha: f64, beta: f64, r: f64) -> Result<AbModel> {
    check_length(r)?;
    check_finite("alpha", alpha)?;
    check_finite("beta", beta)?;
    Ok(AbModel {
        name: "centrifugal".into(),
        profile: Profile::Centrifugal { alpha, beta },
        alpha,
        beta,
        r,
        free: false,
    })
}

/// Flux line `Φ0` at the origin with the flux returned on the cylinder `ρ = R`.
pub fn make_returned_flux(flux0: f64, r: f64) -> Result<AbModel> {
    check_finite("flux0", flux0)?;
    let mut m = make_centrifugal(flux0 / (2.0 * PI), 0.0, r)?;
    m.name = "returned-flux".into();
    Ok(m)
}

/// Uniform field `B` inside the cylinder of radius `R`.
pub fn make_conventional_ab(field: f64, r: f64) -> Result<AbModel> {
    check_length(r)?;
    check_finite("B", field)?;
    Ok(AbModel {
        name: "conventional-ab".into(),
        profile: Profile::ConventionalAb { field },
        alpha: 0.0,
        beta: 0.5 * field * r * r,
        r,
        free: false,
    })
}

/// Infinitely thin flux line, `Φ/2π ≡ α`.
pub fn make_pure_flux(alpha: f64) -> Result<AbModel> {
    check_finite("alpha", alpha)?;
    Ok(AbModel {
        name: "pure-flux".into(),
        profile: Profile::PureFlux { alpha },
        alpha,
        beta: alpha,
        r: 1.0,
        free: false,
    })
}

/// Magnon scattering on a Belavin–Polyakov soliton of charge `q`.
pub fn make_bp_soliton(params: SolitonParams) -> Result<AbModel> {
    if params.q == 0 {
        return Err(Error::InvalidParameter("soliton charge q must be nonzero".into()));
    }
    check_length(params.r)?;
    let q = params.q as f64;
    Ok(AbModel {
        name: "soliton".into(),
        profile: Profile::Soliton { q: params.q, phi0: params.phi0 },
        alpha: q,
        beta: -q,
        r: params.r,
        free: false,
    })
}

/// Pure flux `α` plus an attractive disc `V = −V0` for `ρ ≤ R`.
pub fn make_flux_well(alpha: f64, depth: f64, r: f64) -> Result<AbModel> {
    check_length(r)?;
    check_finite("alpha", alpha)?;
    if !(depth.is_finite() && depth > 0.0) {
        return Err(Error::InvalidParameter(format!("well depth V0 must be positive, got {depth}")));
    }
    Ok(AbModel {
        name: "flux-well".into(),
        profile: Profile::FluxWell { alpha, depth },
        alpha,
        beta: alpha,
        r,
        free: false,
    })
}

/// Model from sampled `(ρ, V, Φ/2π)` rows, `ρ` in units of `R = 1`.
pub fn from_table(samples: &[(f64, f64, f64)]) -> Result<AbModel> {
    let t = TableProfile::from_samples(samples)?;
    Ok(AbModel {
        name: "table".into(),
        alpha: t.alpha(),
        beta: t.beta(),
        profile: Profile::Table(t),
        r: 1.0,
        free: false,
    })
}

pub fn from_table_file(path: &Path) -> Result<AbModel> {
    from_table(&read_table_file(path)?)
}

const PROBE_SPREAD: f64 = 1e-4;

fn stabilized_limit(model: &AbModel, m: i32, radii: [f64; 3], end: &str) -> Result<f64> {
    let vals = radii.map(|rho| rho * rho * model.partial_potential_at(m, rho));
    let lo = vals.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = vals.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    if !(lo.is_finite() && hi.is_finite()) || hi - lo > PROBE_SPREAD * hi.abs().max(1.0) {
        return Err(Error::NotInverseSquare(format!(
            "rho^2 U_{m} does not settle at the {end}: samples {vals:?}"
        )));
    }
    let limit = vals[2];
    if limit < -PROBE_SPREAD {
        return Err(Error::NotInverseSquare(format!(
            "attractive inverse-square limit {limit} at the {end}"
        )));
    }
    Ok(limit.max(0.0).sqrt())
}

/// Singularity intensities `(ν, μ)` of channel `m`.
pub fn intensities(model: &AbModel, m: i32) -> Result<(f64, f64)> {
    let mf = m as f64;
    if model.profile.closed_form_intensities() {
        return Ok(((mf - model.alpha).abs(), (mf - model.beta).abs()));
    }
    let r = model.r;
    let nu = stabilized_limit(model, m, [1e-4 * r, 1e-5 * r, 1e-6 * r], "origin")?;
    let mu = stabilized_limit(model, m, [1e4 * r, 1e5 * r, 1e6 * r], "infinity")?;
    Ok((nu, mu))
}

/// One representative instance of every built-in model family.
pub fn catalog() -> Vec<AbModel> {
    vec![
        make_free(),
        make_centrifugal(0.5, 0.0, 1.0).unwrap(),
        make_returned_flux(PI, 1.0).unwrap(),
        make_conventional_ab(0.6, 1.0).unwrap(),
        make_pure_flux(0.5).unwrap(),
        make_bp_soliton(SolitonParams::new(1, 1.0)).unwrap(),
        make_flux_well(0.5, 25.0, 1.0).unwrap(),
    ]
}
