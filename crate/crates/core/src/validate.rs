//! Numeric validation of the analytic building blocks that have no
//! closed-form artifact: Laplace's method, sum-vs-integral bounds,
//! convolution convergence, and exact-vs-asymptotic ratio reports.
//!
//! Convergence is asserted through trends (|ratio - 1| decreasing over
//! the last checkpoints), never through absolute rates: the underlying
//! results are leading-order only.

use std::fmt::Write as _;

use crate::asym::{combine_pair, psi_log_eval, PolyExpParams, PsiParams};
use crate::error::Error;
use crate::series::CoefficientSeries;
use crate::Result;

use std::f64::consts::PI;

/// One exact-vs-asymptotic comparison row.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RatioRow {
    pub n: u64,
    pub log_exact: f64,
    pub log_asym: f64,
    pub ratio: f64,
}

/// Table of exact-to-asymptotic ratios over a checkpoint grid.
#[derive(Debug, Clone, PartialEq)]
pub struct RatioReport {
    pub rows: Vec<RatioRow>,
}

impl RatioReport {
    /// Strictly decreasing |ratio - 1| across the last three rows.
    pub fn trend_decreasing(&self) -> bool {
        let tail: Vec<f64> = self
            .rows
            .iter()
            .rev()
            .take(3)
            .map(|r| (r.ratio - 1.0).abs())
            .collect();
        if tail.len() < 2 {
            return false;
        }
        // tail is reversed: last row first.
        tail.windows(2).all(|w| w[0] < w[1])
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,log_exact,log_asym,ratio\n");
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{},{:.16e},{:.16e},{:.16e}",
                r.n, r.log_exact, r.log_asym, r.ratio
            );
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut out = String::from("[");
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            let _ = write!(
                out,
                r#"{{"n":{},"log_exact":{:.16e},"log_asym":{:.16e},"ratio":{:.16e}}}"#,
                r.n, r.log_exact, r.log_asym, r.ratio
            );
        }
        out.push(']');
        out
    }
}

/// Compare exact series coefficients against an asymptotic form at the
/// given checkpoints.
pub fn ratio_report(
    series: &CoefficientSeries,
    asym: &PolyExpParams,
    checkpoints: &[usize],
) -> Result<RatioReport> {
    let mut rows = Vec::with_capacity(checkpoints.len());
    for &n in checkpoints {
        let log_exact = match series.log_coefficient(n) {
            Err(Error::LogOfZero(_)) => {
                return Err(Error::ZeroAtCheckpoint {
                    n,
                    stride: asym.stride,
                })
            }
            other => other?,
        };
        let log_asym = asym.log_eval(n as u64);
        rows.push(RatioRow {
            n: n as u64,
            log_exact,
            log_asym,
            ratio: (log_exact - log_asym).exp(),
        });
    }
    rows.sort_by_key(|r| r.n);
    Ok(RatioReport { rows })
}

/// Build two synthetic stride-supported sequences from ψ parameters,
/// convolve them (log-stabilized), and compare the product coefficients
/// at the checkpoints against the combined prediction.
pub fn synth_convolution_check(
    a: &PsiParams,
    c: &PsiParams,
    checkpoints: &[u64],
) -> Result<RatioReport> {
    let predicted = combine_pair(a, c)?;
    synth_convolution_check_against(a, c, &predicted, checkpoints)
}

/// Same as [`synth_convolution_check`] but against an explicit
/// prediction; used by sensitivity tests.
pub fn synth_convolution_check_against(
    a: &PsiParams,
    c: &PsiParams,
    predicted: &PsiParams,
    checkpoints: &[u64],
) -> Result<RatioReport> {
    combine_pair(a, c)?; // validate preconditions
    let mut rows = Vec::with_capacity(checkpoints.len());
    for &n in checkpoints {
        // d_n = sum over j ≡ 0 (mod t1), n-j ≡ 0 (mod t2), both >= stride.
        let mut logs = Vec::new();
        let mut j = a.stride;
        while j + c.stride <= n {
            if (n - j) % c.stride == 0 {
                logs.push(psi_log_eval(a, j)? + psi_log_eval(c, n - j)?);
            }
            j += a.stride;
        }
        if logs.is_empty() {
            return Err(Error::InvalidParameter(format!(
                "no convolution terms at n = {n}"
            )));
        }
        let max = logs.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        let sum: f64 = logs.iter().map(|&l| (l - max).exp()).sum();
        let log_exact = max + sum.ln();
        let log_asym = psi_log_eval(predicted, n)?;
        rows.push(RatioRow {
            n,
            log_exact,
            log_asym,
            ratio: (log_exact - log_asym).exp(),
        });
    }
    rows.sort_by_key(|r| r.n);
    Ok(RatioReport { rows })
}

/// Fixed catalog of peak functions for the Laplace-method check.
#[derive(Debug, Clone, Copy)]
pub enum LaplaceFn {
    /// f(x) = -x² on [-1, 1].
    NegSquare,
    /// f(x) = r1^{1-p} x^p + r2^{1-p} (1-x)^p on [0.01, 0.99].
    Saddle { r1: f64, r2: f64, p: f64 },
    /// Two equal interior maxima; exercises the rejection path.
    TwinPeaks,
}

impl LaplaceFn {
    pub fn domain(&self) -> (f64, f64) {
        match self {
            LaplaceFn::NegSquare => (-1.0, 1.0),
            LaplaceFn::Saddle { .. } => (0.01, 0.99),
            LaplaceFn::TwinPeaks => (0.0, 1.0),
        }
    }

    pub fn eval(&self, x: f64) -> f64 {
        match *self {
            LaplaceFn::NegSquare => -x * x,
            LaplaceFn::Saddle { r1, r2, p } => {
                r1.powf(1.0 - p) * x.powf(p) + r2.powf(1.0 - p) * (1.0 - x).powf(p)
            }
            LaplaceFn::TwinPeaks => {
                (-50.0 * (x - 0.3) * (x - 0.3)).exp() + (-50.0 * (x - 0.7) * (x - 0.7)).exp()
            }
        }
    }

    pub fn x0(&self) -> f64 {
        match *self {
            LaplaceFn::NegSquare => 0.0,
            LaplaceFn::Saddle { r1, r2, .. } => r1 / (r1 + r2),
            LaplaceFn::TwinPeaks => 0.3,
        }
    }

    /// Second derivative at the maximum.
    pub fn f2_x0(&self) -> f64 {
        match *self {
            LaplaceFn::NegSquare => -2.0,
            LaplaceFn::Saddle { r1, r2, p } => p * (p - 1.0) * (r1 + r2).powf(3.0 - p) / (r1 * r2),
            LaplaceFn::TwinPeaks => -100.0,
        }
    }
}

/// Spot-check Laplace's method: the ratio of the numeric integral
/// `∫ e^{n f}` to `e^{n f(x0)} sqrt(2π / (-n f''(x0)))` at each n.
pub fn laplace_check(f: &LaplaceFn, n_list: &[u64]) -> Result<RatioReport> {
    let (a, b) = f.domain();
    let x0 = f.x0();
    scan_unique_maximum(|x| f.eval(x), a, b, x0)?;
    if f.f2_x0() >= 0.0 {
        return Err(Error::InvalidParameter("f''(x0) must be negative".into()));
    }
    let fx0 = f.eval(x0);
    let mut rows = Vec::with_capacity(n_list.len());
    for &n in n_list {
        if n < 1 {
            return Err(Error::InvalidParameter("n must be >= 1".into()));
        }
        let nf = n as f64;
        // Shift by the peak value so the integrand stays in [0, 1].
        let integral = adaptive_simpson(&|x| (nf * (f.eval(x) - fx0)).exp(), a, b, 1e-9);
        let log_exact = nf * fx0 + integral.ln();
        let log_asym = nf * fx0 + 0.5 * (2.0 * PI / (-nf * f.f2_x0())).ln();
        rows.push(RatioRow {
            n,
            log_exact,
            log_asym,
            ratio: (log_exact - log_asym).exp(),
        });
    }
    rows.sort_by_key(|r| r.n);
    Ok(RatioReport { rows })
}

/// Fixed catalog of non-negative unimodal functions for the
/// sum-vs-integral bound check.
#[derive(Debug, Clone, Copy)]
pub enum UnimodalFn {
    /// 1 - |x - 1/2| on [0, 1]; integral exactly 3/4.
    Tent,
    /// exp(-(x - 1/2)²) on [0, 1].
    GaussBump,
    /// Two equal maxima; exercises the rejection path.
    TwinPeaks,
}

impl UnimodalFn {
    pub fn domain(&self) -> (f64, f64) {
        (0.0, 1.0)
    }

    pub fn eval(&self, x: f64) -> f64 {
        match *self {
            UnimodalFn::Tent => 1.0 - (x - 0.5).abs(),
            UnimodalFn::GaussBump => (-(x - 0.5) * (x - 0.5)).exp(),
            UnimodalFn::TwinPeaks => {
                (-50.0 * (x - 0.3) * (x - 0.3)).exp() + (-50.0 * (x - 0.7) * (x - 0.7)).exp()
            }
        }
    }

    pub fn x0(&self) -> f64 {
        match *self {
            UnimodalFn::TwinPeaks => 0.3,
            _ => 0.5,
        }
    }
}

/// Check `∫f - f(x0)/n <= (1/n) Σ f(i/n) <= ∫f + f(x0)/n` for a
/// unimodal f over [a, b].
pub fn sum_integral_bounds_check(f: &UnimodalFn, n: u64) -> Result<bool> {
    if n < 1 {
        return Err(Error::InvalidParameter("n must be >= 1".into()));
    }
    let (a, b) = f.domain();
    scan_unique_maximum(|x| f.eval(x), a, b, f.x0())?;
    let integral = adaptive_simpson(&|x| f.eval(x), a, b, 1e-11);
    let nf = n as f64;
    let lo = (nf * a).ceil() as i64;
    let hi = (nf * b).floor() as i64;
    let sum: f64 = (lo..=hi).map(|i| f.eval(i as f64 / nf)).sum::<f64>() / nf;
    let slack = f.eval(f.x0()) / nf;
    Ok(integral - slack <= sum && sum <= integral + slack)
}

/// Grid scan rejecting a second local maximum within 1e-12 of the peak
/// value away from x0.
fn scan_unique_maximum(f: impl Fn(f64) -> f64, a: f64, b: f64, x0: f64) -> Result<()> {
    const POINTS: usize = 2001;
    let step = (b - a) / (POINTS - 1) as f64;
    let values: Vec<f64> = (0..POINTS).map(|i| f(a + i as f64 * step)).collect();
    let peak = f(x0);
    for i in 1..POINTS - 1 {
        let x = a + i as f64 * step;
        if (x - x0).abs() <= 2.0 * step {
            continue;
        }
        if values[i] >= values[i - 1] && values[i] >= values[i + 1] && values[i] >= peak - 1e-12 {
            return Err(Error::NonUniqueMaximum(x));
        }
    }
    Ok(())
}

/// Adaptive Simpson quadrature with relative tolerance `eps`.
fn adaptive_simpson(f: &impl Fn(f64) -> f64, a: f64, b: f64, eps: f64) -> f64 {
    fn simpson(f: &impl Fn(f64) -> f64, a: f64, fa: f64, b: f64, fb: f64) -> (f64, f64) {
        let m = 0.5 * (a + b);
        let fm = f(m);
        ((b - a) / 6.0 * (fa + 4.0 * fm + fb), fm)
    }
    fn recurse(
        f: &impl Fn(f64) -> f64,
        a: f64,
        fa: f64,
        b: f64,
        fb: f64,
        whole: f64,
        fm: f64,
        eps: f64,
        depth: u32,
    ) -> f64 {
        let m = 0.5 * (a + b);
        let (left, flm) = simpson(f, a, fa, m, fm);
        let (right, frm) = simpson(f, m, fm, b, fb);
        let delta = left + right - whole;
        if depth == 0 || delta.abs() <= 15.0 * eps * (left + right).abs().max(f64::MIN_POSITIVE) {
            return left + right + delta / 15.0;
        }
        recurse(f, a, fa, m, fm, left, flm, eps, depth - 1)
            + recurse(f, m, fm, b, fb, right, frm, eps, depth - 1)
    }
    let fa = f(a);
    let fb = f(b);
    let (whole, fm) = simpson(f, a, fa, b, fb);
    recurse(f, a, fa, b, fb, whole, fm, eps, 50)
}
