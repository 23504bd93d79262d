//! Independent brute-force counting of skew plane partitions and
//! cylindric partitions via interlacing-sequence dynamic programming.
//! Exists solely to certify the series engine and the factor
//! derivations at small size.

use num_bigint::BigUint;

use crate::error::Error;
use crate::profile::{Profile, SkewProfile};
use crate::series::CoefficientSeries;
use crate::Result;

/// Weakly decreasing sequence of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        assert!(parts.iter().all(|&p| p > 0));
        Self { parts }
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }
}

/// True iff lam/mu is a horizontal strip: λ₁ ≥ μ₁ ≥ λ₂ ≥ μ₂ ≥ ...
pub fn horizontal_strip(lam: &Partition, mu: &Partition) -> bool {
    let rows = lam.parts.len().max(mu.parts.len()) + 1;
    for i in 0..rows {
        if lam.part(i) < mu.part(i) {
            return false;
        }
        if mu.part(i) < lam.part(i + 1) {
            return false;
        }
    }
    true
}

/// Maximum size for the partition state space; overridable through the
/// `PLANEASYM_ORACLE_MAX` environment variable.
fn guard(requested: usize, default_max: usize, what: &str) -> Result<()> {
    let max = std::env::var("PLANEASYM_ORACLE_MAX")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .unwrap_or(default_max);
    if requested > max {
        return Err(Error::ResourceLimit(format!(
            "{what}: requested {requested}, limit {max}"
        )));
    }
    Ok(())
}

/// All partitions of size 0..=n, the empty partition first.
pub fn partitions_up_to(n: usize) -> Result<Vec<Partition>> {
    guard(n, 30, "partitions_up_to")?;
    let mut out = Vec::new();
    let mut current = Vec::new();
    gen_partitions(n as u32, u32::MAX, &mut current, &mut out);
    Ok(out)
}

fn gen_partitions(budget: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    out.push(Partition {
        parts: current.clone(),
    });
    let cap = budget.min(max_part);
    for part in (1..=cap).rev() {
        current.push(part);
        gen_partitions(budget - part, part, current, out);
        current.pop();
    }
}

struct StripTables {
    parts: Vec<Partition>,
    sizes: Vec<u32>,
    empty_idx: usize,
    /// grow[p] = states q with q/p a horizontal strip (q ≻ p).
    grow: Vec<Vec<usize>>,
    /// shrink[p] = states q with p/q a horizontal strip (p ≻ q).
    shrink: Vec<Vec<usize>>,
}

impl StripTables {
    fn build(n: usize) -> Result<Self> {
        let parts = partitions_up_to(n)?;
        let sizes: Vec<u32> = parts.iter().map(|p| p.size()).collect();
        let empty_idx = parts
            .iter()
            .position(|p| p.parts.is_empty())
            .expect("empty partition present");
        let count = parts.len();
        let mut grow = vec![Vec::new(); count];
        let mut shrink = vec![Vec::new(); count];
        for a in 0..count {
            for b in 0..count {
                if horizontal_strip(&parts[a], &parts[b]) {
                    // a ≻ b: a is reachable from b by a +1 step, b from a by -1.
                    grow[b].push(a);
                    shrink[a].push(b);
                }
            }
        }
        Ok(Self {
            parts,
            sizes,
            empty_idx,
            grow,
            shrink,
        })
    }

    fn state_count(&self) -> usize {
        self.parts.len()
    }
}

/// Apply one interlacing step to the table `dp[state][size]`, adding
/// the arrival partition's size to the accumulator when `count_size`.
fn dp_step(tables: &StripTables, dp: &[Vec<u64>], direction: i8, limit: usize, count_size: bool) -> Vec<Vec<u64>> {
    let mut next = vec![vec![0u64; limit + 1]; tables.state_count()];
    for (p, row) in dp.iter().enumerate() {
        if row.iter().all(|&c| c == 0) {
            continue;
        }
        let targets = if direction == 1 {
            &tables.grow[p]
        } else {
            &tables.shrink[p]
        };
        for &q in targets {
            let add = if count_size { tables.sizes[q] as usize } else { 0 };
            for (s, &c) in row.iter().enumerate() {
                if c > 0 && s + add <= limit {
                    next[q][s + add] += c;
                }
            }
        }
    }
    next
}

fn to_series(counts: Vec<u64>) -> CoefficientSeries {
    CoefficientSeries::from_coeffs(counts.into_iter().map(BigUint::from).collect())
}

/// Count skew plane partitions by size for the given head profile. The
/// infinite -1 tail is truncated to `limit` steps; a nonempty partition
/// contributes at least 1 per step, so any configuration of size
/// `<= limit` has returned to empty within that many steps.
pub fn count_skew_pp(head: &SkewProfile, limit: usize) -> Result<CoefficientSeries> {
    guard(limit, 14, "count_skew_pp")?;
    let tables = StripTables::build(limit)?;
    let mut dp = vec![vec![0u64; limit + 1]; tables.state_count()];
    dp[tables.empty_idx][0] = 1;
    for &step in head.head() {
        dp = dp_step(&tables, &dp, step, limit, true);
    }
    for _ in 0..limit {
        dp = dp_step(&tables, &dp, -1, limit, true);
    }
    Ok(to_series(dp[tables.empty_idx].clone()))
}

/// Count cylindric partitions by size: sequences with λ⁰ = λ^h whose
/// size sums λ⁰ through λ^{h-1}.
pub fn count_cp(profile: &Profile, limit: usize) -> Result<CoefficientSeries> {
    guard(limit, 14, "count_cp")?;
    let tables = StripTables::build(limit)?;
    let h = profile.len();
    let mut counts = vec![0u64; limit + 1];
    for start in 0..tables.state_count() {
        let start_size = tables.sizes[start] as usize;
        if start_size > limit {
            continue;
        }
        let mut dp = vec![vec![0u64; limit + 1]; tables.state_count()];
        dp[start][start_size] = 1;
        for (i, &step) in profile.steps().iter().enumerate() {
            // λ^h is not counted.
            let count_size = i + 1 < h;
            dp = dp_step(&tables, &dp, step, limit, count_size);
        }
        for (s, &c) in dp[start].iter().enumerate() {
            counts[s] += c;
        }
    }
    Ok(to_series(counts))
}

/// Count width-m plane partitions by direct enumeration of row
/// fillings, independent of the diagonal-sequence encoding.
pub fn count_pp_width_direct(m: usize, limit: usize) -> Result<CoefficientSeries> {
    if m < 1 {
        return Err(Error::InvalidParameter("width m must be >= 1".into()));
    }
    guard(limit, 12, "count_pp_width_direct")?;
    guard(m, 6, "count_pp_width_direct width")?;
    let mut counts = vec![0u64; limit + 1];
    let top = vec![limit as u32; limit.max(1)];
    fill_rows(&top, m, limit as u32, 0, &mut counts);
    Ok(to_series(counts))
}

/// Enumerate the next row (pointwise below `prev`), then recurse.
fn fill_rows(prev: &[u32], rows_left: usize, budget: u32, acc: usize, counts: &mut Vec<u64>) {
    counts[acc] += 1; // all remaining rows empty
    if rows_left == 0 || prev.is_empty() {
        return;
    }
    let mut row = Vec::new();
    gen_bounded_row(prev, rows_left, budget, acc, 0, u32::MAX, &mut row, counts);
}

fn gen_bounded_row(
    prev: &[u32],
    rows_left: usize,
    budget: u32,
    acc: usize,
    col: usize,
    last: u32,
    row: &mut Vec<u32>,
    counts: &mut Vec<u64>,
) {
    if !row.is_empty() {
        let size: u32 = row.iter().sum();
        fill_rows(&row.clone(), rows_left - 1, budget - size, acc + size as usize, counts);
    }
    if col >= prev.len() {
        return;
    }
    let size: u32 = row.iter().sum();
    let cap = prev[col].min(last).min(budget - size);
    for v in (1..=cap).rev() {
        row.push(v);
        gen_bounded_row(prev, rows_left, budget, acc, col + 1, v, row, counts);
        row.pop();
    }
}
