use std::f64::consts::PI;

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const PI2_6: f64 = PI * PI / 6.0;

fn check_positive(a: f64, t: f64) -> Result<()> {
    if !(a.is_finite() && a > 0.0 && t.is_finite() && t > 0.0) {
        return Err(Error::invalid(format!("need a > 0 and T > 0, got a = {a}, T = {t}")));
    }
    Ok(())
}

/// The root in `(0, 1)` of `T z^a + z - 1 = 0`.
pub fn trinomial_root(a: f64, t: f64) -> Result<f64> {
    check_positive(a, t)?;
    let f = |z: f64| t * z.powf(a) + z - 1.0;
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        if f(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let mut z = 0.5 * (lo + hi);
    for _ in 0..4 {
        let df = a * t * z.powf(a - 1.0) + 1.0;
        let next = z - f(z) / df;
        if !(next > 0.0 && next < 1.0) {
            break;
        }
        z = next;
    }
    Ok(z)
}

fn dilog_series(x: f64) -> f64 {
    let mut sum = 0.0;
    let mut p = x;
    for n in 1..200 {
        let term = p / (n * n) as f64;
        sum += term;
        if term.abs() < 1e-18 {
            break;
        }
        p *= x;
    }
    sum
}

/// `Li₂(x)` for real `x <= 1`.
pub fn dilog(x: f64) -> Result<f64> {
    if x.is_nan() || x > 1.0 {
        return Err(Error::invalid(format!("dilog needs x <= 1, got {x}")));
    }
    Ok(if x == 1.0 {
        PI2_6
    } else if x.abs() <= 0.5 {
        dilog_series(x)
    } else if x > 0.5 {
        PI2_6 - x.ln() * (1.0 - x).ln() - dilog_series(1.0 - x)
    } else {
        // x < -1/2: Li₂(x) = -Li₂(x/(x-1)) - log²(1-x)/2 with x/(x-1) in (1/3, 1)
        -dilog(x / (x - 1.0))? - 0.5 * (1.0 - x).ln().powi(2)
    })
}

/// `(c₋₁, c₀) = (Li₂(1-z) + a·log²z / 2, -log(z + a(1-z)) / 2)` at the trinomial root.
pub fn c_constants(a: f64, t: f64) -> Result<(f64, f64)> {
    let z = trinomial_root(a, t)?;
    let lz = z.ln();
    Ok((dilog(1.0 - z)? + 0.5 * a * lz * lz, -0.5 * (z + a * (1.0 - z)).ln()))
}

/// `log Σ_{n≥0} q^{an²/2} Tⁿ / (q)_n` at `q = e^{-t}`.
pub fn qseries_logsum(a: f64, t_var: f64, t: f64) -> Result<f64> {
    check_positive(a, t_var)?;
    if !(t > 0.0 && t <= 0.25) {
        return Err(Error::invalid(format!("need 0 < t <= 1/4, got {t}")));
    }
    if t < 1e-4 {
        return Err(Error::TooLarge(format!("t = {t} below 1e-4; the sum has too many terms")));
    }
    // log of each term; the term ratio decreases in n, so the terms are unimodal
    let log_t = t_var.ln();
    let mut logs = vec![0.0f64];
    let mut log_poch = 0.0f64;
    let mut peak = 0.0f64;
    let cutoff = 1e-18f64.ln();
    for n in 1u64.. {
        log_poch += (-(-t * n as f64).exp_m1()).ln();
        let nf = n as f64;
        let l = -0.5 * a * t * nf * nf + nf * log_t - log_poch;
        if !l.is_finite() {
            return Err(Error::Inconsistent(format!("non-finite term at n = {n}")));
        }
        let descending = l < *logs.last().unwrap();
        peak = peak.max(l);
        logs.push(l);
        if descending && l - peak < cutoff - (n as f64).ln() {
            break;
        }
    }
    // compensated summation of exp(l - peak)
    let (mut sum, mut comp) = (0.0f64, 0.0f64);
    for l in logs {
        let v = (l - peak).exp();
        let s = sum + v;
        comp += if sum.abs() >= v.abs() { (sum - s) + v } else { (v - s) + sum };
        sum = s;
    }
    Ok(peak + (sum + comp).ln())
}

/// Powers of `t` in the least-squares model `Σ_e c_e t^e`; only `c₋₁` and
/// `c₀` are compared, the rest absorb the higher-order terms.
pub const FIT_EXPONENTS: [i32; 5] = [-1, 0, 1, 2, 3];

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AsymReport {
    pub a: f64,
    #[serde(rename = "T")]
    pub t: f64,
    pub z: f64,
    pub c_minus1: f64,
    pub c0: f64,
    pub c_minus1_fit: f64,
    pub c0_fit: f64,
    /// `|c₋₁ fit - c₋₁|` and `|c₀ fit - c₀|`.
    pub residuals: [f64; 2],
    /// Fitted coefficients for [`FIT_EXPONENTS`].
    pub fit: Vec<f64>,
    /// `(t, log-sum)` sample points.
    pub samples: Vec<(f64, f64)>,
}

impl AsymReport {
    pub fn passed(&self, tol: f64) -> bool {
        self.residuals.iter().all(|r| *r < tol)
    }
}

/// Sample the log-sum at `t = 2^{-k}`, `k = 3..=8`, and fit the model.
pub fn verify_asymptotics(a: f64, t_var: f64) -> Result<AsymReport> {
    let z = trinomial_root(a, t_var)?;
    let (c_minus1, c0) = c_constants(a, t_var)?;
    let samples: Vec<(f64, f64)> = (3..=8)
        .map(|k| {
            let t = 2f64.powi(-k);
            qseries_logsum(a, t_var, t).map(|v| (t, v))
        })
        .collect::<Result<_>>()?;

    // columns scaled to unit size at the largest sample for conditioning
    let scale: Vec<f64> = FIT_EXPONENTS.iter().map(|&e| 2f64.powi(3 * e)).collect();
    let design =
        DMatrix::from_fn(samples.len(), FIT_EXPONENTS.len(), |r, c| samples[r].0.powi(FIT_EXPONENTS[c]) * scale[c]);
    let rhs = DVector::from_iterator(samples.len(), samples.iter().map(|s| s.1));
    let solved = design
        .svd(true, true)
        .solve(&rhs, 1e-14)
        .map_err(|e| Error::Inconsistent(format!("least-squares fit failed: {e}")))?;
    let fit: Vec<f64> = solved.iter().zip(&scale).map(|(x, s)| x * s).collect();
    if fit.iter().any(|v| !v.is_finite()) {
        return Err(Error::Inconsistent("non-finite fit coefficients".into()));
    }
    let (c_minus1_fit, c0_fit) = (fit[0], fit[1]);
    Ok(AsymReport {
        a,
        t: t_var,
        z,
        c_minus1,
        c0,
        c_minus1_fit,
        c0_fit,
        residuals: [(c_minus1_fit - c_minus1).abs(), (c0_fit - c0).abs()],
        fit,
        samples,
    })
}
