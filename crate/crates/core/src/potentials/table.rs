use std::io::Read;
use std::path::Path;

use serde::Deserialize;

use crate::error::{Error, Result};

pub const MIN_SAMPLES: usize = 8;

/// Monotone piecewise-cubic Hermite interpolant (Fritsch–Carlson slopes).
#[derive(Debug, Clone, PartialEq)]
pub struct MonotoneCubic {
    x: Vec<f64>,
    y: Vec<f64>,
    slope: Vec<f64>,
}

impl MonotoneCubic {
    pub fn new(x: Vec<f64>, y: Vec<f64>) -> Self {
        let n = x.len();
        let secant: Vec<f64> = (0..n - 1).map(|i| (y[i + 1] - y[i]) / (x[i + 1] - x[i])).collect();
        let mut slope = vec![0.0; n];
        slope[0] = secant[0];
        slope[n - 1] = secant[n - 2];
        for i in 1..n - 1 {
            let (a, b) = (secant[i - 1], secant[i]);
            if a * b > 0.0 {
                // weighted harmonic mean keeps the interpolant monotone
                let h0 = x[i] - x[i - 1];
                let h1 = x[i + 1] - x[i];
                let w1 = 2.0 * h1 + h0;
                let w2 = h1 + 2.0 * h0;
                slope[i] = (w1 + w2) / (w1 / a + w2 / b);
            }
        }
        // end slopes must not overshoot either
        for (end, sec) in [(0, secant[0]), (n - 1, secant[n - 2])] {
            if slope[end] * sec <= 0.0 {
                slope[end] = 0.0;
            }
        }
        Self { x, y, slope }
    }

    /// Interpolated value; outside the sample range the end value is held.
    pub fn eval(&self, t: f64) -> f64 {
        let n = self.x.len();
        if t <= self.x[0] {
            return self.y[0];
        }
        if t >= self.x[n - 1] {
            return self.y[n - 1];
        }
        let i = self.x.partition_point(|&v| v <= t) - 1;
        let h = self.x[i + 1] - self.x[i];
        let s = (t - self.x[i]) / h;
        let s2 = s * s;
        let s3 = s2 * s;
        let h00 = 2.0 * s3 - 3.0 * s2 + 1.0;
        let h10 = s3 - 2.0 * s2 + s;
        let h01 = -2.0 * s3 + 3.0 * s2;
        let h11 = s3 - s2;
        h00 * self.y[i] + h10 * h * self.slope[i] + h01 * self.y[i + 1] + h11 * h * self.slope[i + 1]
    }

    pub fn first_x(&self) -> f64 {
        self.x[0]
    }

    pub fn last_x(&self) -> f64 {
        self.x[self.x.len() - 1]
    }

    pub fn first_y(&self) -> f64 {
        self.y[0]
    }

    pub fn last_y(&self) -> f64 {
        self.y[self.y.len() - 1]
    }
}

/// Sampled `(rho, V, flux)` profile. `flux` is `Φ/2π`; `rho` is in units of
/// the model length scale.
#[derive(Debug, Clone, PartialEq)]
pub struct TableProfile {
    pub(crate) potential: MonotoneCubic,
    pub(crate) flux: MonotoneCubic,
}

impl TableProfile {
    pub fn from_samples(samples: &[(f64, f64, f64)]) -> Result<Self> {
        if samples.len() < MIN_SAMPLES {
            return Err(Error::InvalidTable(format!(
                "need at least {MIN_SAMPLES} samples, got {}",
                samples.len()
            )));
        }
        for (i, &(rho, v, f)) in samples.iter().enumerate() {
            if !(rho.is_finite() && v.is_finite() && f.is_finite()) {
                return Err(Error::InvalidTable(format!("row {i} has a non-finite entry")));
            }
            if rho <= 0.0 {
                return Err(Error::InvalidTable(format!("row {i}: rho must be positive")));
            }
            if i > 0 && rho <= samples[i - 1].0 {
                return Err(Error::InvalidTable(format!("rho is not strictly increasing at row {i}")));
            }
        }
        let first = samples[0].0;
        let last = samples[samples.len() - 1].0;
        if first > 1e-3 * last {
            return Err(Error::InvalidTable(format!(
                "first rho ({first}) must be <= 1e-3 x last rho ({last})"
            )));
        }
        let rho: Vec<f64> = samples.iter().map(|s| s.0).collect();
        let v: Vec<f64> = samples.iter().map(|s| s.1).collect();
        let f: Vec<f64> = samples.iter().map(|s| s.2).collect();
        Ok(Self {
            potential: MonotoneCubic::new(rho.clone(), v),
            flux: MonotoneCubic::new(rho, f),
        })
    }

    pub fn potential(&self, rho: f64) -> f64 {
        if rho > self.potential.last_x() {
            0.0
        } else {
            self.potential.eval(rho)
        }
    }

    pub fn flux(&self, rho: f64) -> f64 {
        self.flux.eval(rho)
    }

    pub fn alpha(&self) -> f64 {
        self.flux.first_y()
    }

    pub fn beta(&self) -> f64 {
        self.flux.last_y()
    }
}

#[derive(Debug, Deserialize)]
struct Row {
    rho: f64,
    #[serde(rename = "V")]
    v: f64,
    #[serde(rename = "Phi")]
    phi: f64,
}

/// Reads the `rho,V,Phi` text format (Φ in units of 2π).
pub fn parse_table<R: Read>(reader: R) -> Result<Vec<(f64, f64, f64)>> {
    let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(reader);
    let headers = rdr.headers().map_err(|e| Error::InvalidTable(e.to_string()))?.clone();
    let expected = ["rho", "V", "Phi"];
    if headers.len() != 3 || headers.iter().zip(expected).any(|(h, e)| h != e) {
        return Err(Error::InvalidTable(format!("header must be `rho,V,Phi`, got `{}`", headers.iter().collect::<Vec<_>>().join(","))));
    }
    let mut out = Vec::new();
    for (i, row) in rdr.deserialize::<Row>().enumerate() {
        let row = row.map_err(|e| Error::InvalidTable(format!("row {}: {e}", i + 1)))?;
        out.push((row.rho, row.v, row.phi));
    }
    Ok(out)
}

pub fn read_table_file(path: &Path) -> Result<Vec<(f64, f64, f64)>> {
    let file = std::fs::File::open(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_table(file)
}
