//! The ψ-parameter calculus: build, combine, correct, and evaluate
//! asymptotic forms `C·n^α·exp(β·n^p)` in log space.
//!
//! A [`PsiParams`] value holds the tuple `(v, r, b, p)` plus a stride t
//! describing a sequence supported on multiples of t. Products of
//! series combine by multiplying v and summing r and b; dividing out
//! finitely many geometric factors shifts α and rescales the amplitude.

use crate::error::Error;
use crate::gamma::gamma_eval;
use crate::profile::{Profile, SkewProfile};
use crate::Result;

use std::f64::consts::PI;

/// Four-parameter asymptotic template with stride support.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PsiParams {
    pub v: f64,
    pub r: f64,
    pub b: f64,
    pub p: f64,
    pub stride: u64,
}

impl PsiParams {
    pub fn new(v: f64, r: f64, b: f64, p: f64, stride: u64) -> Result<Self> {
        if !(v > 0.0) {
            return Err(Error::InvalidParameter(format!("amplitude v = {v} <= 0")));
        }
        if !(r > 0.0) {
            return Err(Error::InvalidParameter(format!("growth scale r = {r} <= 0")));
        }
        if !(p > 0.0 && p < 1.0) {
            return Err(Error::InvalidParameter(format!(
                "growth exponent p = {p} outside (0, 1)"
            )));
        }
        if stride < 1 {
            return Err(Error::InvalidParameter("stride must be >= 1".into()));
        }
        Ok(Self { v, r, b, p, stride })
    }
}

/// Asymptotic form `C·n^α·exp(β·n^p)` with the amplitude held as ln C.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolyExpParams {
    pub log_c: f64,
    pub alpha: f64,
    pub beta: f64,
    pub p: f64,
    pub stride: u64,
}

impl PolyExpParams {
    pub fn new(log_c: f64, alpha: f64, beta: f64, p: f64, stride: u64) -> Result<Self> {
        if !(beta > 0.0) {
            return Err(Error::InvalidParameter(format!("beta = {beta} <= 0")));
        }
        if !(p > 0.0 && p < 1.0) {
            return Err(Error::InvalidParameter(format!("p = {p} outside (0, 1)")));
        }
        Ok(Self {
            log_c,
            alpha,
            beta,
            p,
            stride,
        })
    }

    /// ln of the asymptotic value at n.
    pub fn log_eval(&self, n: u64) -> f64 {
        let nf = n as f64;
        self.log_c + self.alpha * nf.ln() + self.beta * nf.powf(self.p)
    }

    /// Amplitude C.
    pub fn amplitude(&self) -> f64 {
        self.log_c.exp()
    }

    /// JSON with fixed 17-significant-digit float formatting.
    pub fn to_json(&self) -> String {
        format!(
            r#"{{"logC":{},"alpha":{},"beta":{},"p":{},"stride":{}}}"#,
            fmt17(self.log_c),
            fmt17(self.alpha),
            fmt17(self.beta),
            fmt17(self.p),
            self.stride
        )
    }

    /// Human-readable rendering with 6 significant digits.
    pub fn pretty(&self) -> String {
        format!(
            "{}/n^{} \u{b7} exp({}\u{b7}n^{})",
            fmt_sig(self.amplitude(), 6),
            fmt_sig(-self.alpha, 6),
            fmt_sig(self.beta, 6),
            fmt_sig(self.p, 6)
        )
    }
}

fn fmt17(v: f64) -> String {
    format!("{v:.16e}")
}

fn fmt_sig(v: f64, sig: usize) -> String {
    if v == 0.0 {
        return "0".into();
    }
    let exp = v.abs().log10().floor() as i32;
    if exp >= sig as i32 || exp < -4 {
        format!("{:.*e}", sig - 1, v)
    } else {
        let decimals = (sig as i32 - 1 - exp).max(0) as usize;
        let s = format!("{v:.decimals$}");
        if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            s
        }
    }
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn ln_factorial(n: u64) -> f64 {
    (2..=n).map(|k| (k as f64).ln()).sum()
}

/// ln of `stride·ψ_n(v, r, b; p)` at a supported index n.
pub fn psi_log_eval(params: &PsiParams, n: u64) -> Result<f64> {
    if n < 1 {
        return Err(Error::InvalidParameter("n must be >= 1".into()));
    }
    if n % params.stride != 0 {
        return Err(Error::OffSupport {
            n,
            stride: params.stride,
        });
    }
    let nf = n as f64;
    let PsiParams { v, r, b, p, stride } = *params;
    Ok((stride as f64).ln()
        + v.ln()
        + 0.5 * (p * (1.0 - p) / (2.0 * PI)).ln()
        + (b + (1.0 - p) / 2.0) * r.ln()
        - (b + 1.0 - p / 2.0) * nf.ln()
        + nf.powf(p) * r.powf(1.0 - p))
}

/// Rewrite ψ parameters as `C·n^α·exp(β·n^p)` on the supported indices.
pub fn psi_to_polyexp(params: &PsiParams) -> PolyExpParams {
    let PsiParams { v, r, b, p, stride } = *params;
    let log_c = (stride as f64).ln()
        + v.ln()
        + 0.5 * (p * (1.0 - p) / (2.0 * PI)).ln()
        + (b + (1.0 - p) / 2.0) * r.ln();
    PolyExpParams {
        log_c,
        alpha: -(b + 1.0 - p / 2.0),
        beta: r.powf(1.0 - p),
        p,
        stride,
    }
}

/// ψ parameters for a single arithmetic-progression product with
/// coprime step x and offset y.
pub fn ingham_params(x: u64, y: u64) -> Result<PsiParams> {
    if x < 1 || y < 1 {
        return Err(Error::InvalidParameter("x and y must be >= 1".into()));
    }
    let g = gcd(x, y);
    if g != 1 {
        return Err(Error::NotCoprime { x, y, g });
    }
    let xf = x as f64;
    let yf = y as f64;
    let v = gamma_eval(yf / xf)? / (xf * PI).sqrt() * (xf / 2.0).powf(yf / xf);
    PsiParams::new(v, 2.0 * PI * PI / (3.0 * xf), yf / (2.0 * xf) - 0.25, 0.5, 1)
}

/// Two-factor convolution: parameters multiply/add componentwise and
/// the result lives on stride 1. Requires equal p and coprime strides.
pub fn combine_pair(a: &PsiParams, c: &PsiParams) -> Result<PsiParams> {
    if a.p != c.p {
        return Err(Error::MismatchedP(a.p, c.p));
    }
    if gcd(a.stride, c.stride) != 1 {
        return Err(Error::NonCoprimeStrides(a.stride, c.stride));
    }
    PsiParams::new(a.v * c.v, a.r + c.r, a.b + c.b, a.p, 1)
}

/// Multi-factor convolution with gcd stride: the product is supported
/// on multiples of t = gcd of all input strides.
pub fn combine_multi(list: &[PsiParams]) -> Result<PsiParams> {
    let first = list.first().ok_or(Error::EmptyFactorList)?;
    let mut v = 1.0;
    let mut r = 0.0;
    let mut b = 0.0;
    let mut t = 0u64;
    for params in list {
        if params.p != first.p {
            return Err(Error::MismatchedP(first.p, params.p));
        }
        v *= params.v;
        r += params.r;
        b += params.b;
        t = gcd(t, params.stride);
    }
    PsiParams::new(v, r, b, first.p, t)
}

/// Asymptotics of `prod_i prod_{k>=0} 1/(1-q^{x_i k + y_i})`: per-factor
/// parameters from the raw (x, y) with stride gcd(x, y), combined with
/// the gcd-stride rule. Multiplicity k contributes k copies.
pub fn progressions_asym(factors: &[(u64, u64, u32)]) -> Result<PsiParams> {
    let mut list = Vec::new();
    for &(x, y, mult) in factors {
        if x < 1 || y < 1 {
            return Err(Error::InvalidParameter("x and y must be >= 1".into()));
        }
        let xf = x as f64;
        let yf = y as f64;
        let v = gamma_eval(yf / xf)? / (xf * PI).sqrt() * (xf / 2.0).powf(yf / xf);
        let params = PsiParams::new(
            v,
            2.0 * PI * PI / (3.0 * xf),
            yf / (2.0 * xf) - 0.25,
            0.5,
            gcd(x, y),
        )?;
        for _ in 0..mult {
            list.push(params);
        }
    }
    combine_multi(&list)
}

/// Divide out `prod_i 1/(1-q^{t_i})`: α grows by m(1-p) and the
/// amplitude picks up `1/(β^m p^m ∏ t_i)`.
pub fn poly_correction(base: &PolyExpParams, moduli: &[u64]) -> Result<PolyExpParams> {
    if moduli.is_empty() {
        return Err(Error::EmptyFactorList);
    }
    if moduli.iter().any(|&t| t < 1) {
        return Err(Error::InvalidParameter("moduli must be >= 1".into()));
    }
    let m = moduli.len() as f64;
    let log_c = base.log_c
        - m * (base.beta * base.p).ln()
        - moduli.iter().map(|&t| (t as f64).ln()).sum::<f64>();
    PolyExpParams::new(
        log_c,
        base.alpha + m * (1.0 - base.p),
        base.beta,
        base.p,
        base.stride,
    )
}

/// Closed-form asymptotics for plane partitions of width m.
pub fn pp_width_asym(m: u64) -> Result<PolyExpParams> {
    if m < 1 {
        return Err(Error::InvalidParameter("width m must be >= 1".into()));
    }
    let mf = m as f64;
    let m2 = mf * mf;
    let log_c = -(m2 + 2.0 * mf + 5.0) / 4.0 * 2f64.ln()
        + (m2 + 1.0) / 4.0 * (mf / 3.0).ln()
        + (m2 - mf) / 2.0 * PI.ln()
        + (1..m).map(ln_factorial).sum::<f64>();
    PolyExpParams::new(
        log_c,
        -(m2 + 3.0) / 4.0,
        PI * (2.0 * mf / 3.0).sqrt(),
        0.5,
        1,
    )
}

/// Closed-form asymptotics for skew plane partitions with the given
/// head profile; the order depends only on ℓ, the number of +1 steps.
pub fn skew_pp_asym(profile: &SkewProfile) -> Result<PolyExpParams> {
    let ell = profile.ell() as u64;
    if ell == 0 {
        return Err(Error::EmptySkewRegion);
    }
    let head = profile.head();
    let m = profile.width() as u64;
    let lf = ell as f64;
    let l2 = lf * lf;
    let mut log_c = -(l2 + 2.0 * lf + 5.0) / 4.0 * 2f64.ln()
        + (l2 + 1.0) / 4.0 * (lf / 3.0).ln()
        + (l2 - lf) / 2.0 * PI.ln();
    for i in 0..head.len() {
        for j in i + 1..head.len() {
            if head[i] > head[j] {
                log_c -= ((j - i) as f64).ln();
            }
        }
    }
    for (i0, &s) in head.iter().enumerate() {
        if s == 1 {
            log_c += ln_factorial(m - (i0 as u64 + 1) - 1);
        }
    }
    PolyExpParams::new(
        log_c,
        -(l2 + 3.0) / 4.0,
        PI * (2.0 * lf / 3.0).sqrt(),
        0.5,
        1,
    )
}

/// Closed-form asymptotics for cylindric partitions. Requires a mixed
/// profile; uniform profiles count plain partitions on multiples of h.
pub fn cp_asym(profile: &Profile) -> Result<PolyExpParams> {
    let h = profile.len() as u64;
    let ones = profile.ones() as u64;
    if ones == 0 || ones == h {
        return Err(Error::UniformProfile);
    }
    let steps = profile.steps();
    let hf = h as f64;
    let k = ones as f64 * profile.minus_ones() as f64 / 2.0;
    let mut log_c = 0.5 * (1.0 + 2.0 * k).ln() - (4.0 * 3f64.sqrt()).ln() - k * (2.0 * PI).ln();
    for i in 0..steps.len() {
        for j in i + 1..steps.len() {
            if steps[i] > steps[j] {
                log_c += gamma_eval((j - i) as f64 / hf)?.ln();
            } else if steps[i] < steps[j] {
                log_c += gamma_eval((hf + i as f64 - j as f64) / hf)?.ln();
            }
        }
    }
    PolyExpParams::new(
        log_c,
        -1.0,
        PI * (2.0 * (1.0 + 2.0 * k) / (3.0 * hf)).sqrt(),
        0.5,
        1,
    )
}
