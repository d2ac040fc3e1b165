//! Closed-form clique-count, edge and spectral thresholds.

use crate::cliques::binomial;
use crate::error::{Error, Result};
use crate::spectral::hong_shu_fang_value;

/// Parameter record shared by the threshold formulas and theorem specs.
/// Fields a formula does not use are ignored.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ThresholdQuery {
    pub n: usize,
    pub r: usize,
    pub k: usize,
    pub m: usize,
    pub delta: usize,
    pub q: usize,
    pub s: usize,
}

fn range(ok: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Range(msg()))
    }
}

/// `φ(n, r, q) = C(n-q-1, r) + (q+1)·C(q, r-1)`, for `r >= 1`, `q <= n - 1`.
pub fn phi(n: usize, r: usize, q: usize) -> Result<u128> {
    range(r >= 1 && q < n, || format!("phi needs r >= 1 and q <= n - 1, got n={n}, r={r}, q={q}"))?;
    Ok(binomial((n - q - 1) as u64, r as u64) + (q as u128 + 1) * binomial(q as u64, r as u64 - 1))
}

/// `ψ(n, r, k, q) = C(n-q+2k-4, r) + (q-2k+4)·C(q, r-1)`, for `k >= 2`,
/// `2k - 4 <= q <= n + 2k - 4`.
pub fn psi(n: usize, r: usize, k: usize, q: usize) -> Result<u128> {
    range(r >= 1 && k >= 2 && q + 4 >= 2 * k && q <= n + 2 * k - 4, || {
        format!("psi needs r >= 1, k >= 2, 2k-4 <= q <= n+2k-4, got n={n}, r={r}, k={k}, q={q}")
    })?;
    let top = (n + 2 * k - 4 - q) as u64;
    Ok(binomial(top, r as u64) + (q + 4 - 2 * k) as u128 * binomial(q as u64, r as u64 - 1))
}

/// Which branch of a two-sided maximum attains it (`Low` on ties).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    /// The term evaluated at `q = δ + 1`.
    Low,
    /// The term evaluated at the upper end of the `q` range.
    High,
}

/// A two-sided clique threshold with both branch values.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CliqueThreshold {
    pub value: u128,
    pub low: u128,
    pub high: u128,
    pub winner: Branch,
}

impl CliqueThreshold {
    fn new(low: u128, high: u128) -> Self {
        let winner = if low >= high { Branch::Low } else { Branch::High };
        CliqueThreshold { value: low.max(high), low, high, winner }
    }
}

fn one_factor_range(n: usize, delta: usize) -> Result<()> {
    range(n % 2 == 0 && delta >= 1 && 2 * delta + 2 <= n, || {
        format!("1-factor thresholds need n even and 1 <= δ <= n/2 - 1, got n={n}, δ={delta}")
    })
}

fn k_factor_range(n: usize, k: usize, delta: usize) -> Result<()> {
    range(
        k >= 2
            && (n * k) % 2 == 0
            && n >= 2 * delta + k + 1
            && delta + 2 >= 2 * k
            && 2 * delta + 5 <= n + 2 * k,
        || {
            format!(
                "k-factor thresholds need k >= 2, nk even, n >= 2δ+k+1 and \
                 2k-2 <= δ <= floor((n+2k-5)/2), got n={n}, k={k}, δ={delta}"
            )
        },
    )
}

/// `max{φ(n, r, δ+1), φ(n, r, n/2 - 1)}`.
pub fn clique_threshold_1f(n: usize, r: usize, delta: usize) -> Result<CliqueThreshold> {
    one_factor_range(n, delta)?;
    range(r >= 2, || format!("clique thresholds need r >= 2, got {r}"))?;
    Ok(CliqueThreshold::new(phi(n, r, delta + 1)?, phi(n, r, n / 2 - 1)?))
}

/// `max{ψ(n, r, k, δ+1), ψ(n, r, k, floor((n+2k-5)/2))}`.
pub fn clique_threshold_kf(n: usize, r: usize, k: usize, delta: usize) -> Result<CliqueThreshold> {
    k_factor_range(n, k, delta)?;
    range(r >= 2, || format!("clique thresholds need r >= 2, got {r}"))?;
    let top = (n + 2 * k - 5) / 2;
    Ok(CliqueThreshold::new(psi(n, r, k, delta + 1)?, psi(n, r, k, top)?))
}

fn spectral_1f_range(n: usize, delta: usize) -> Result<()> {
    one_factor_range(n, delta)?;
    range(n >= 6 * delta + 10, || format!("needs n >= 6δ + 10, got n={n}, δ={delta}"))
}

/// Spectral radius threshold for 1-factors:
/// `(δ-1)/2 + sqrt(n² - (3δ+5)n + (13δ² + 46δ + 41)/4)`.
///
/// This is the spectral bound `(δ-1)/2 + sqrt(2e - δn + (δ+1)²/4)` evaluated
/// at `e = φ(n, 2, δ+1)`, so any graph above it has more than `φ(n, 2, δ+1)`
/// edges.
pub fn spectral_threshold_1f(n: usize, delta: usize) -> Result<f64> {
    spectral_1f_range(n, delta)?;
    let (n, d) = (n as i128, delta as i128);
    let quarter = 4 * n * n - 4 * (3 * d + 5) * n + 13 * d * d + 46 * d + 41;
    Ok((delta as f64 - 1.0) / 2.0 + (quarter as f64 / 4.0).sqrt())
}

/// The 1-factor spectral threshold with linear radicand coefficient `23δ`
/// instead of `46δ`. It is strictly smaller than [`spectral_threshold_1f`]
/// for every `δ >= 1`, so exceeding it does not force `e > φ(n, 2, δ+1)`.
pub fn spectral_threshold_1f_printed(n: usize, delta: usize) -> Result<f64> {
    spectral_1f_range(n, delta)?;
    let (n, d) = (n as i128, delta as i128);
    let quarter = 4 * n * n - 4 * (3 * d + 5) * n + 13 * d * d + 23 * d + 41;
    Ok((delta as f64 - 1.0) / 2.0 + (quarter as f64 / 4.0).sqrt())
}

/// Spectral radius threshold for k-factors, `k >= 2`:
/// `(δ-1)/2 + sqrt(n² - (3δ-4k+11)n + (13δ² - (32k-94)δ + 16k² - 104k + 161)/4)`.
pub fn spectral_threshold_kf(n: usize, k: usize, delta: usize) -> Result<f64> {
    k_factor_range(n, k, delta)?;
    range(n + 3 >= 6 * delta + 4 * k, || {
        format!("needs n >= 6δ + 4k - 3, got n={n}, k={k}, δ={delta}")
    })?;
    let (n, k, d) = (n as i128, k as i128, delta as i128);
    let quarter = 4 * n * n - 4 * (3 * d - 4 * k + 11) * n + 13 * d * d - (32 * k - 94) * d
        + 16 * k * k
        - 104 * k
        + 161;
    Ok((delta as f64 - 1.0) / 2.0 + (quarter as f64 / 4.0).sqrt())
}

/// The spectral bound evaluated at `e = φ(n, 2, δ+1)`.
pub fn spectral_threshold_1f_via_edges(n: usize, delta: usize) -> Result<f64> {
    spectral_1f_range(n, delta)?;
    let e = phi(n, 2, delta + 1)? as f64;
    Ok(hong_shu_fang_value(n as f64, e, delta as f64))
}

/// The spectral bound evaluated at `e = ψ(n, 2, k, δ+1)`.
pub fn spectral_threshold_kf_via_edges(n: usize, k: usize, delta: usize) -> Result<f64> {
    spectral_threshold_kf(n, k, delta)?;
    let e = psi(n, 2, k, delta + 1)? as f64;
    Ok(hong_shu_fang_value(n as f64, e, delta as f64))
}

/// Smallest order admitted by the spanning k-tree spectral theorem:
/// `max{(7k-2)m + 4, (k-1)m² + (3k+1)m/2 + 9/2}`, rounded up.
pub fn ktree_min_order(m: usize, k: usize) -> usize {
    let first = (7 * k - 2) * m + 4;
    let twice = 2 * (k - 1) * m * m + (3 * k + 1) * m + 9;
    first.max(twice.div_ceil(2))
}

/// Smallest order admitted by the leaf-degree spectral theorem: `3(k+2)δ + 2`.
pub fn leaf_min_order(delta: usize, k: usize) -> usize {
    3 * (k + 2) * delta + 2
}
