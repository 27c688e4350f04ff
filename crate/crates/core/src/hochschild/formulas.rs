//! Closed forms for `dim HH^n((kQ)₂)`.

use super::{HHMethod, HHProfile};
use crate::error::{Error, Result};
use crate::quiver::Quiver;

/// The parallel-path formula for a connected quiver that is not a crown
/// (loops included as 1-crowns):
///
/// - `n = 0`: `#(Q₁∥Q₀) + 1`
/// - `n = 1`: `#(Q₁∥Q₁) − #Q₀ + 1`
/// - `n ≥ 2`: `#(Q_n∥Q₁) − #(Q_{n−1}∥Q₀)`
///
/// `None` when the hypotheses fail or `n` is past the path-length bound.
pub fn thm_formula(q: &Quiver, n: usize) -> Option<i64> {
    if !q.is_connected() || q.is_crown().is_some() {
        return None;
    }
    let count = |x: usize, y: usize| q.parallel_count(x, y).ok().map(|c| c as i64);
    match n {
        0 => Some(count(1, 0)? + 1),
        1 => Some(count(1, 1)? - q.vertex_count() as i64 + 1),
        _ => Some(count(n, 1)? - count(n - 1, 0)?),
    }
}

pub fn thm_profile(q: &Quiver, top: usize, tag: &str) -> Option<HHProfile> {
    let dims = (0..=top)
        .map(|n| thm_formula(q, n).and_then(|v| usize::try_from(v).ok()))
        .collect::<Option<Vec<_>>>()?;
    Some(HHProfile { algebra_tag: tag.to_string(), method: HHMethod::ThmFormula, dims })
}

/// `dim HH^n` for a `c`-crown, `c ≥ 2`, in characteristic not 2: `1` when `n`
/// or `n − 1` is even and divisible by `c`, `0` otherwise.
pub fn crown_formula(c: usize, n: usize, characteristic: u32) -> Result<usize> {
    if c < 2 {
        return Err(Error::Hypothesis(format!("crown formula needs c ≥ 2, got {c}")));
    }
    if characteristic == 2 {
        return Err(Error::Hypothesis("crown formula needs characteristic ≠ 2".into()));
    }
    let hit = |m: usize| m.is_multiple_of(2) && m.is_multiple_of(c);
    Ok(usize::from(hit(n) || (n >= 1 && hit(n - 1))))
}

pub fn crown_profile(c: usize, top: usize, characteristic: u32, tag: &str) -> Result<HHProfile> {
    let dims = (0..=top).map(|n| crown_formula(c, n, characteristic)).collect::<Result<Vec<_>>>()?;
    Ok(HHProfile { algebra_tag: tag.to_string(), method: HHMethod::CrownFormula, dims })
}
