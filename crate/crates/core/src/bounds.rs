//! Exact evaluation of the counting bounds and the growth-rate bracket.
//!
//! For `n` interior vertices the extremal construction supplies
//! `3^floor(n/3)` minimal separators, while the full-component argument
//! caps the count at `2 * sum_{k<=m} C(n+2, k)` with `m = floor((n+2)/3)`,
//! itself at most `2(m+1) C(n+2, m)`. The n-th roots of the two sides
//! bracket the growth rate between `3^(1/3) > 1.4422` and
//! `2^H(1/3) < 1.8899`. All counts are exact big integers; floating point
//! only ever appears in the root and entropy columns.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum BoundsError {
    #[error("binary entropy argument {0} outside the open interval (0,1)")]
    EntropyDomain(f64),
    #[error("binomial arguments ({n},{k}) outside 0 <= k <= n <= 200")]
    BinomialOutOfRange { n: u64, k: u64 },
    #[error("bounds table size {0} out of range 1..=200")]
    TableTooLarge(usize),
}

/// Binary entropy `H(x) = -x log2 x - (1-x) log2 (1-x)`, strict on the
/// open interval `(0,1)`.
pub fn binary_entropy(x: f64) -> Result<f64, BoundsError> {
    if !(x > 0.0 && x < 1.0) {
        return Err(BoundsError::EntropyDomain(x));
    }
    Ok(-x * x.log2() - (1.0 - x) * (1.0 - x).log2())
}

/// Entropy extended to the closed interval, with `H(0) = H(1) = 0`.
pub fn binary_entropy_closed(x: f64) -> Result<f64, BoundsError> {
    if x == 0.0 || x == 1.0 {
        return Ok(0.0);
    }
    binary_entropy(x)
}

/// `3^(1/3) = 1.44224957...`, the growth rate realized by the parallel
/// path construction.
pub fn growth_lower_bound() -> f64 {
    3f64.cbrt()
}

/// `2^H(1/3) = 1.88988157...`, the growth rate the counting bound proves.
pub fn growth_upper_bound() -> f64 {
    2f64.powf(binary_entropy(1.0 / 3.0).expect("1/3 is interior"))
}

fn big_binomial(n: u64, k: u64) -> BigUint {
    debug_assert!(k <= n);
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Exact binomial coefficient, arbitrary precision, for `0 <= k <= n <= 200`.
pub fn binomial(n: u64, k: u64) -> Result<BigUint, BoundsError> {
    if k > n || n > 200 {
        return Err(BoundsError::BinomialOutOfRange { n, k });
    }
    Ok(big_binomial(n, k))
}

/// The two upper bounds for `n >= 1` interior vertices, as
/// `(2 * sum_{k<=m} C(n+2,k), 2(m+1) * C(n+2,m))` with `m = floor((n+2)/3)`.
///
/// # Panics
/// Panics if `n == 0`.
pub fn upper_bound_counts(n: u64) -> (BigUint, BigUint) {
    assert!(n >= 1, "interior vertex count must be positive");
    let total = n + 2;
    let m = total / 3;
    let mut sum = BigUint::zero();
    for k in 0..=m {
        sum += big_binomial(total, k);
    }
    let upper_sum = sum * 2u32;
    let upper_weak = big_binomial(total, m) * 2u32 * (m + 1);
    debug_assert!(upper_sum <= upper_weak);
    (upper_sum, upper_weak)
}

/// `3^floor(n/3)`, the separator count of the parallel path construction
/// padded with isolated vertices.
///
/// # Panics
/// Panics if `n == 0`.
pub fn lower_bound_count(n: u64) -> BigUint {
    assert!(n >= 1, "interior vertex count must be positive");
    BigUint::from(3u32).pow((n / 3) as u32)
}

/// `lower_bound_count(n)^(1/n)`, evaluated analytically so it stays exact
/// at arbitrarily large `n`.
pub fn root_lower(n: u64) -> f64 {
    assert!(n >= 1);
    ((n / 3) as f64 / n as f64 * 3f64.ln()).exp()
}

/// Natural log of a big integer via its top bits.
fn ln_big(x: &BigUint) -> f64 {
    if let Some(v) = x.to_f64() {
        if v.is_finite() && v > 0.0 {
            return v.ln();
        }
    }
    let bits = x.bits();
    let top = (x >> (bits - 53)).to_f64().expect("53 bits fit");
    top.ln() + (bits - 53) as f64 * 2f64.ln()
}

/// `upper_sum(n)^(1/n)`.
pub fn root_upper(n: u64) -> f64 {
    let (upper_sum, _) = upper_bound_counts(n);
    (ln_big(&upper_sum) / n as f64).exp()
}

/// One comparison row: construction lower bound, census value when known,
/// and the two upper bounds, with the n-th roots bracketing the growth
/// constants.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundsRow {
    pub n: u64,
    pub lower: BigUint,
    pub upper_sum: BigUint,
    pub upper_weak: BigUint,
    pub exact_g: Option<u64>,
    pub root_lower: f64,
    pub root_upper: f64,
}

/// Rows for `n = 1..=n_max`, optionally annotated with exact census
/// values for the sizes where they are known.
pub fn bounds_table(
    n_max: usize,
    census: Option<&BTreeMap<u64, u64>>,
) -> Result<Vec<BoundsRow>, BoundsError> {
    if n_max == 0 || n_max > 200 {
        return Err(BoundsError::TableTooLarge(n_max));
    }
    let mut rows = Vec::with_capacity(n_max);
    for n in 1..=n_max as u64 {
        let lower = lower_bound_count(n);
        let (upper_sum, upper_weak) = upper_bound_counts(n);
        debug_assert!(lower <= upper_sum);
        let exact_g = census.and_then(|c| c.get(&n).copied());
        if let Some(g) = exact_g {
            debug_assert!(BigUint::from(g) <= upper_sum);
        }
        rows.push(BoundsRow {
            n,
            lower,
            root_lower: root_lower(n),
            root_upper: root_upper(n),
            upper_sum,
            upper_weak,
            exact_g,
        });
    }
    Ok(rows)
}

#[derive(Serialize)]
struct SerRow {
    n: u64,
    lower: String,
    upper_sum: String,
    upper_weak: String,
    exact_g: Option<u64>,
    root_lower: f64,
    root_upper: f64,
}

fn ser_row(row: &BoundsRow) -> SerRow {
    SerRow {
        n: row.n,
        lower: row.lower.to_string(),
        upper_sum: row.upper_sum.to_string(),
        upper_weak: row.upper_weak.to_string(),
        exact_g: row.exact_g,
        root_lower: row.root_lower,
        root_upper: row.root_upper,
    }
}

/// CSV with a header line; big counts in decimal, empty cell for an
/// unknown `exact_g`.
pub fn table_to_csv(rows: &[BoundsRow]) -> String {
    let mut out = String::from("n,lower,upper_sum,upper_weak,exact_g,root_lower,root_upper\n");
    for r in rows {
        let exact = r.exact_g.map(|g| g.to_string()).unwrap_or_default();
        out.push_str(&format!(
            "{},{},{},{},{},{:.6},{:.6}\n",
            r.n, r.lower, r.upper_sum, r.upper_weak, exact, r.root_lower, r.root_upper
        ));
    }
    out
}

/// JSON array of row objects; big counts as decimal strings, `null` for
/// an unknown `exact_g`.
pub fn table_to_json(rows: &[BoundsRow]) -> String {
    let ser: Vec<SerRow> = rows.iter().map(ser_row).collect();
    serde_json::to_string_pretty(&ser).expect("rows serialize")
}
