//! Exact truncated power-series expansion of products of geometric
//! factors `1/(1-q^m)` over arbitrary-precision integers.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

use crate::error::Error;
use crate::Result;

/// One factor `1/(1-q^m)^multiplicity`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeometricFactor {
    #[serde(rename = "m")]
    pub modulus: u64,
    #[serde(rename = "mult")]
    pub multiplicity: u32,
}

/// One factor family `prod_{k>=0} 1/(1-q^{xk+y})^multiplicity`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProgressionFactor {
    #[serde(rename = "x")]
    pub step: u64,
    #[serde(rename = "y")]
    pub offset: u64,
    #[serde(rename = "mult")]
    pub multiplicity: u32,
}

/// Multiset of geometric and arithmetic-progression factors, kept in
/// canonical order with merged multiplicities.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorSet {
    pub geometric: Vec<GeometricFactor>,
    pub progressions: Vec<ProgressionFactor>,
}

impl FactorSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push_geometric(&mut self, modulus: u64, multiplicity: u32) {
        assert!(modulus >= 1 && multiplicity >= 1);
        self.geometric.push(GeometricFactor {
            modulus,
            multiplicity,
        });
        self.normalize();
    }

    pub fn push_progression(&mut self, step: u64, offset: u64, multiplicity: u32) {
        assert!(step >= 1 && offset >= 1 && multiplicity >= 1);
        self.progressions.push(ProgressionFactor {
            step,
            offset,
            multiplicity,
        });
        self.normalize();
    }

    pub fn is_empty(&self) -> bool {
        self.geometric.is_empty() && self.progressions.is_empty()
    }

    /// Sort by key and merge entries with identical keys.
    fn normalize(&mut self) {
        self.geometric.sort_by_key(|f| f.modulus);
        let mut merged: Vec<GeometricFactor> = Vec::with_capacity(self.geometric.len());
        for f in self.geometric.drain(..) {
            match merged.last_mut() {
                Some(last) if last.modulus == f.modulus => last.multiplicity += f.multiplicity,
                _ => merged.push(f),
            }
        }
        self.geometric = merged;

        self.progressions.sort_by_key(|f| (f.step, f.offset));
        let mut merged: Vec<ProgressionFactor> = Vec::with_capacity(self.progressions.len());
        for f in self.progressions.drain(..) {
            match merged.last_mut() {
                Some(last) if last.step == f.step && last.offset == f.offset => {
                    last.multiplicity += f.multiplicity
                }
                _ => merged.push(f),
            }
        }
        self.progressions = merged;
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("factor set serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let mut set: FactorSet = serde_json::from_str(text)
            .map_err(|e| Error::InvalidParameter(format!("factor set JSON: {e}")))?;
        set.normalize();
        Ok(set)
    }
}

/// Exact coefficient vector of a truncated power series, indices `0..=limit`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientSeries {
    limit: usize,
    coeffs: Vec<BigUint>,
}

impl CoefficientSeries {
    /// The series `1`, truncated at `limit`.
    pub fn one(limit: usize) -> Self {
        let mut coeffs = vec![BigUint::zero(); limit + 1];
        coeffs[0] = BigUint::one();
        Self { limit, coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<BigUint>) -> Self {
        assert!(!coeffs.is_empty());
        Self {
            limit: coeffs.len() - 1,
            coeffs,
        }
    }

    pub fn limit(&self) -> usize {
        self.limit
    }

    pub fn coeff(&self, n: usize) -> &BigUint {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    /// Multiply in place by `1/(1-q^m)` via the stride-`m` prefix sum
    /// `c[n] += c[n-m]`. A modulus beyond the truncation limit is the
    /// identity.
    pub fn apply_geometric_inverse(&mut self, m: u64) {
        assert!(m >= 1);
        let m = m as usize;
        for n in m..=self.limit {
            let (lo, hi) = self.coeffs.split_at_mut(n);
            hi[0] += &lo[n - m];
        }
    }

    /// Natural log of `coeffs[n]`, accurate to at least 12 significant
    /// decimal digits; computed from the bit length plus the high-order
    /// mantissa so arbitrarily large counts never overflow.
    pub fn log_coefficient(&self, n: usize) -> Result<f64> {
        if n > self.limit {
            return Err(Error::IndexOutOfRange(n, self.limit));
        }
        let c = &self.coeffs[n];
        if c.is_zero() {
            return Err(Error::LogOfZero(n));
        }
        Ok(log_big(c))
    }

    /// CSV with header `n,count`, decimal big integers.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,count\n");
        for (n, c) in self.coeffs.iter().enumerate() {
            let _ = writeln!(out, "{n},{c}");
        }
        out
    }

    /// JSON array of decimal strings.
    pub fn to_json(&self) -> String {
        let strings: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        serde_json::to_string(&strings).expect("series serializes")
    }
}

/// `ln` of a positive big integer via bit length and the top 64 bits.
pub(crate) fn log_big(c: &BigUint) -> f64 {
    let bits = c.bits();
    if bits <= 53 {
        let v: u64 = c.iter_u64_digits().next().unwrap_or(0);
        return (v as f64).ln();
    }
    let shift = bits - 64;
    let top: BigUint = c >> shift;
    let mantissa: u64 = top.iter_u64_digits().next().unwrap();
    (mantissa as f64).ln() + shift as f64 * std::f64::consts::LN_2
}

/// Expand a factor set to an exact coefficient series up to `q^limit`.
///
/// Progression factors are instantiated as the finite list of moduli
/// `x*k + y <= limit`; omitted factors cannot affect coefficients at or
/// below the truncation order. The empty set expands to the series `1`.
pub fn expand(factors: &FactorSet, limit: usize) -> CoefficientSeries {
    let mut series = CoefficientSeries::one(limit);
    for f in &factors.geometric {
        for _ in 0..f.multiplicity {
            series.apply_geometric_inverse(f.modulus);
        }
    }
    for f in &factors.progressions {
        let mut modulus = f.offset;
        while modulus <= limit as u64 {
            for _ in 0..f.multiplicity {
                series.apply_geometric_inverse(modulus);
            }
            modulus += f.step;
        }
    }
    series
}

/// The MacMahon product for ordinary plane partitions,
/// `prod_{k>=1} (1-z^k)^{-k}`, truncated to moduli `<= limit`.
pub fn macmahon_factors(limit: usize) -> FactorSet {
    let mut set = FactorSet::new();
    for k in 1..=limit as u64 {
        set.push_geometric(k, k as u32);
    }
    set
}
