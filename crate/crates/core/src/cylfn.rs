//! Cylinder functions `J_ν`, `Y_ν` and their derivatives for real order
//! `ν ≥ 0` and positive argument.
//!
//! The evaluation follows the Temme / Steed scheme: the ratio `J'_ν/J_ν`
//! comes from a continued fraction (CF1), the order is reduced by downward
//! recurrence to `|μ| ≤ 1/2`, and the pair `Y_μ, Y_{μ+1}` is obtained either
//! from Temme's series (`x < 2`) or from the complex continued fraction CF2
//! closed by the Wronskian. One code path serves integer and non-integer
//! orders alike, so there is no switchover glitch at integer `ν`.

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Order of a cylinder function. Always finite and non-negative.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct CylOrder(f64);

impl CylOrder {
    pub fn new(nu: f64) -> Result<Self> {
        if !nu.is_finite() || nu < 0.0 {
            return Err(Error::Domain(format!("cylinder order must be finite and >= 0, got {nu}")));
        }
        Ok(Self(nu))
    }

    /// Order `|nu|`; callers pass signed intensities freely.
    pub fn abs(nu: f64) -> Result<Self> {
        Self::new(nu.abs())
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

/// Values and first derivatives of `J_ν` and `Y_ν` at one argument.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CylEval {
    pub j: f64,
    pub y: f64,
    pub jp: f64,
    pub yp: f64,
}

impl CylEval {
    /// `j·yp − jp·y`, which should equal `2/(πx)`.
    pub fn wronskian(&self) -> f64 {
        self.j * self.yp - self.jp * self.y
    }
}

const MAXIT: usize = 1_000_000;
const EPS: f64 = f64::EPSILON;
const FPMIN: f64 = f64::MIN_POSITIVE / f64::EPSILON;
const XMIN: f64 = 2.0;

/// Taylor coefficients of `1/Γ(1+x)` about `x = 0`.
#[allow(clippy::excessive_precision)]
const RGAMMA1P: [f64; 27] = [
    1.0,
    0.577_215_664_901_532_860_61,
    -0.655_878_071_520_253_881_08,
    -0.042_002_635_034_095_235_529,
    0.166_538_611_382_291_489_5,
    -0.042_197_734_555_544_336_748,
    -0.009_621_971_527_876_973_562_1,
    0.007_218_943_246_663_099_542_4,
    -0.001_165_167_591_859_065_112_1,
    -0.000_215_241_674_114_950_972_82,
    0.000_128_050_282_388_116_186_15,
    -0.000_020_134_854_780_788_238_656,
    -1.250_493_482_142_670_657_3e-6,
    1.133_027_231_981_695_882_4e-6,
    -2.056_338_416_977_607_103_5e-7,
    6.116_095_104_481_415_817_9e-9,
    5.002_007_644_469_222_930_1e-9,
    -1.181_274_570_487_020_144_6e-9,
    1.043_426_711_691_100_510_5e-10,
    7.782_263_439_905_071_254e-12,
    -3.696_805_618_642_205_708_2e-12,
    5.100_370_287_454_475_979e-13,
    -2.058_326_053_566_506_783_2e-14,
    -5.348_122_539_423_017_982_4e-15,
    1.226_778_628_238_260_790_2e-15,
    -1.181_259_301_697_458_769_5e-16,
    1.186_692_254_751_600_332_6e-18,
];

/// Returns `(gam1, gam2, 1/Γ(1+μ), 1/Γ(1−μ))` for `|μ| ≤ 1/2`, where
/// `gam1 = (1/Γ(1−μ) − 1/Γ(1+μ))/(2μ)` and `gam2 = (1/Γ(1−μ) + 1/Γ(1+μ))/2`.
fn temme_gammas(mu: f64) -> (f64, f64, f64, f64) {
    let mu2 = mu * mu;
    // odd and even parts of the series, evaluated by Horner in mu^2
    let mut odd = 0.0;
    let mut even = 0.0;
    for j in (0..RGAMMA1P.len()).rev() {
        if j % 2 == 1 {
            odd = odd * mu2 + RGAMMA1P[j];
        } else {
            even = even * mu2 + RGAMMA1P[j];
        }
    }
    // g(mu) = even + mu*odd, g(-mu) = even - mu*odd
    let gam1 = -odd;
    let gam2 = even;
    (gam1, gam2, even + mu * odd, even - mu * odd)
}

fn check_argument(x: f64) -> Result<()> {
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::Domain(format!("cylinder function argument must be finite and > 0, got {x}")));
    }
    Ok(())
}

/// `J_ν(x)`, `Y_ν(x)` and derivatives for `x > 0`.
pub fn eval_pair(order: CylOrder, x: f64) -> Result<CylEval> {
    check_argument(x)?;
    let nu = order.value();

    let nl = if x < XMIN {
        (nu + 0.5) as usize
    } else {
        (nu - x + 1.5).max(0.0) as usize
    };
    let xmu = nu - nl as f64;
    let xmu2 = xmu * xmu;
    let xi = 1.0 / x;
    let xi2 = 2.0 * xi;
    let w = xi2 / PI;

    // CF1: J'_nu / J_nu by modified Lentz.
    let mut isign = 1.0;
    let mut h = (nu * xi).max(FPMIN);
    let mut b = xi2 * nu;
    let mut d = 0.0;
    let mut c = h;
    let mut converged = false;
    for _ in 0..MAXIT {
        b += xi2;
        d = b - d;
        if d.abs() < FPMIN {
            d = FPMIN;
        }
        c = b - 1.0 / c;
        if c.abs() < FPMIN {
            c = FPMIN;
        }
        d = 1.0 / d;
        let del = c * d;
        h *= del;
        if d < 0.0 {
            isign = -isign;
        }
        if (del - 1.0).abs() <= EPS {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::Convergence(format!("CF1 did not converge for nu={nu}, x={x}")));
    }

    // Downward recurrence from nu to xmu on unnormalised values.
    let mut rjl = isign * FPMIN;
    let mut rjpl = h * rjl;
    let rjl1 = rjl;
    let rjp1 = rjpl;
    let mut fact = nu * xi;
    for _ in 0..nl {
        let rjtemp = fact * rjl + rjpl;
        fact -= xi;
        rjpl = fact * rjtemp - rjl;
        rjl = rjtemp;
    }
    if rjl == 0.0 {
        rjl = EPS;
    }
    let f = rjpl / rjl;

    let (rjmu, mut rymu, mut ry1);
    if x < XMIN {
        // Temme's series for Y_mu, Y_{mu+1}.
        let x2 = 0.5 * x;
        let pimu = PI * xmu;
        let fact = if pimu.abs() < EPS { 1.0 } else { pimu / pimu.sin() };
        let d = -x2.ln();
        let e = xmu * d;
        let fact2 = if e.abs() < EPS { 1.0 } else { e.sinh() / e };
        let (gam1, gam2, gampl, gammi) = temme_gammas(xmu);
        let mut ff = 2.0 / PI * fact * (gam1 * e.cosh() + gam2 * fact2 * d);
        let e = e.exp();
        let mut p = e / (gampl * PI);
        let mut q = 1.0 / (e * PI * gammi);
        let pimu2 = 0.5 * pimu;
        let fact3 = if pimu2.abs() < EPS { 1.0 } else { pimu2.sin() / pimu2 };
        let r = PI * pimu2 * fact3 * fact3;
        let mut cc = 1.0;
        let dd = -x2 * x2;
        let mut sum = ff + r * q;
        let mut sum1 = p;
        let mut ok = false;
        for i in 1..=MAXIT {
            let fi = i as f64;
            ff = (fi * ff + p + q) / (fi * fi - xmu2);
            cc *= dd / fi;
            p /= fi - xmu;
            q /= fi + xmu;
            let del = cc * (ff + r * q);
            sum += del;
            let del1 = cc * p - fi * del;
            sum1 += del1;
            if del.abs() < (1.0 + sum.abs()) * EPS {
                ok = true;
                break;
            }
        }
        if !ok {
            return Err(Error::Convergence(format!("Temme series did not converge for x={x}")));
        }
        rymu = -sum;
        ry1 = -sum1 * xi2;
        let rymup = xmu * xi * rymu - ry1;
        rjmu = w / (rymup - f * rymu);
    } else {
        // CF2 (Steed) for p + iq = (J' + iY')/(J + iY) at order mu.
        let mut a = 0.25 - xmu2;
        let mut p = -0.5 * xi;
        let mut q = 1.0;
        let br = 2.0 * x;
        let mut bi = 2.0;
        let mut fact = a * xi / (p * p + q * q);
        let mut cr = br + q * fact;
        let mut ci = bi + p * fact;
        let mut den = br * br + bi * bi;
        let mut dr = br / den;
        let mut di = -bi / den;
        let mut dlr = cr * dr - ci * di;
        let mut dli = cr * di + ci * dr;
        let mut temp = p * dlr - q * dli;
        q = p * dli + q * dlr;
        p = temp;
        let mut ok = false;
        for i in 1..MAXIT {
            a += (2 * i) as f64;
            bi += 2.0;
            dr = a * dr + br;
            di = a * di + bi;
            if dr.abs() + di.abs() < FPMIN {
                dr = FPMIN;
            }
            fact = a / (cr * cr + ci * ci);
            cr = br + cr * fact;
            ci = bi - ci * fact;
            if cr.abs() + ci.abs() < FPMIN {
                cr = FPMIN;
            }
            den = dr * dr + di * di;
            dr /= den;
            di /= -den;
            dlr = cr * dr - ci * di;
            dli = cr * di + ci * dr;
            temp = p * dlr - q * dli;
            q = p * dli + q * dlr;
            p = temp;
            if (dlr - 1.0).abs() + dli.abs() <= EPS {
                ok = true;
                break;
            }
        }
        if !ok {
            return Err(Error::Convergence(format!("CF2 did not converge for x={x}")));
        }
        let gam = (p - f) / q;
        let mut j = (w / ((p - f) * gam + q)).sqrt();
        if rjl < 0.0 {
            j = -j;
        }
        rjmu = j;
        rymu = rjmu * gam;
        let rymup = rymu * (p + q / gam);
        ry1 = xmu * xi * rymu - rymup;
    }

    let scale = rjmu / rjl;
    let j = rjl1 * scale;
    let jp = rjp1 * scale;
    for i in 1..=nl {
        let rytemp = (xmu + i as f64) * xi2 * ry1 - rymu;
        rymu = ry1;
        ry1 = rytemp;
    }
    let y = rymu;
    let yp = nu * xi * rymu - ry1;
    Ok(CylEval { j, y, jp, yp })
}

/// Bessel function of the first kind. `x = 0` is accepted and gives the
/// series limit (1 for order zero, 0 otherwise).
pub fn bessel_j(order: CylOrder, x: f64) -> Result<f64> {
    if x == 0.0 {
        return Ok(if order.value() == 0.0 { 1.0 } else { 0.0 });
    }
    Ok(eval_pair(order, x)?.j)
}

/// Bessel function of the second kind (Neumann function), `x > 0`.
pub fn bessel_y(order: CylOrder, x: f64) -> Result<f64> {
    Ok(eval_pair(order, x)?.y)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ord(nu: f64) -> CylOrder {
        CylOrder::new(nu).unwrap()
    }

    /// Power series for J_nu, used only as an independent check at small x.
    fn j_series(nu: f64, x: f64, terms: usize) -> f64 {
        let half = 0.5 * x;
        // 1/Gamma(nu+1) via the Lanczos-free route: product down to the fractional part
        let mut term = half.powf(nu) / gamma_via_lgamma(nu + 1.0);
        let mut sum = term;
        for k in 1..terms {
            let kf = k as f64;
            term *= -half * half / (kf * (kf + nu));
            sum += term;
        }
        sum
    }

    fn gamma_via_lgamma(z: f64) -> f64 {
        // integer and half-integer arguments are all this helper ever sees
        if z.fract() == 0.0 {
            (1..z as u64).map(|k| k as f64).product()
        } else {
            let mut g = PI.sqrt();
            let mut a = 0.5;
            while a < z - 0.25 {
                g *= a;
                a += 1.0;
            }
            g
        }
    }

    #[test]
    fn zero_argument_limits() {
        assert_eq!(bessel_j(ord(0.0), 0.0).unwrap(), 1.0);
        assert_eq!(bessel_j(ord(2.5), 0.0).unwrap(), 0.0);
        assert!(bessel_y(ord(0.0), 0.0).is_err());
    }

    #[test]
    fn domain_errors() {
        assert!(CylOrder::new(-0.1).is_err());
        assert!(CylOrder::new(f64::NAN).is_err());
        assert!(bessel_j(ord(1.0), -1.0).is_err());
        assert!(bessel_j(ord(1.0), f64::INFINITY).is_err());
    }

    #[test]
    fn half_integer_closed_forms() {
        let x = PI / 2.0;
        let j = bessel_j(ord(0.5), x).unwrap();
        assert!((j - 2.0 / PI).abs() < 1e-15);
        let y = bessel_y(ord(0.5), x).unwrap();
        assert!(y.abs() < 1e-15);
        let y = bessel_y(ord(0.5), PI).unwrap();
        assert!((y - 2f64.sqrt() / PI).abs() < 1e-15);
    }

    #[test]
    fn order_one_at_one_matches_series() {
        let v = bessel_j(ord(1.0), 1.0).unwrap();
        let s = j_series(1.0, 1.0, 30);
        assert!((v - s).abs() < 1e-15, "{v} vs {s}");
        assert!((v - 0.440_050_585_744_933_5).abs() < 1e-15);
    }

    #[test]
    fn y0_at_one() {
        // frozen from an arbitrary-precision evaluation
        let v = bessel_y(ord(0.0), 1.0).unwrap();
        assert!((v - 0.088_256_964_215_676_96).abs() < 1e-15, "{v}");
    }

    #[test]
    fn small_argument_y0_is_large_negative() {
        let e = eval_pair(ord(0.0), 1e-3).unwrap();
        assert!(e.y < -4.0);
        assert!((e.j - 1.0).abs() < 1e-6);
    }

    #[test]
    fn wronskian_at_two() {
        let e = eval_pair(ord(0.5), 2.0).unwrap();
        assert!((e.wronskian() - 2.0 / (PI * 2.0)).abs() < 1e-12);
    }

    #[test]
    fn large_argument_modulus() {
        let e = eval_pair(ord(3.7), 40.0).unwrap();
        let m = e.j * e.j + e.y * e.y;
        let expect = 2.0 / (PI * 40.0);
        assert!(((m - expect) / expect).abs() < 0.01);
    }

    #[test]
    fn continuous_across_integer_order() {
        for &n in &[0.0, 1.0, 2.0, 5.0] {
            for &x in &[0.3, 1.9, 2.1, 7.0] {
                let a = eval_pair(ord(n), x).unwrap();
                let b = eval_pair(ord(n + 1e-9), x).unwrap();
                assert!((a.j - b.j).abs() < 1e-7, "J n={n} x={x}");
                assert!((a.y - b.y).abs() < 1e-7 * (1.0 + a.y.abs()), "Y n={n} x={x}");
            }
        }
    }

    #[test]
    fn temme_gammas_at_zero() {
        let (g1, g2, gp, gm) = temme_gammas(0.0);
        assert!((g1 + 0.577_215_664_901_532_9).abs() < 1e-16);
        assert_eq!(g2, 1.0);
        assert_eq!(gp, 1.0);
        assert_eq!(gm, 1.0);
    }
}
