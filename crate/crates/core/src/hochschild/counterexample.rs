//! Two separable factors whose twisted tensor product has nonzero Hochschild
//! cohomology in every degree.

use serde::Serialize;

use super::{bar_degree_limit, budget_from_env, hh_bar_with_budget, hh_rsz};
use crate::algebra::StandardAlgebra;
use crate::error::{Error, Result};
use crate::field::FieldDescriptor;
use crate::quiver::standard_quiver;
use crate::twist::{family_member, group_algebra_pair, TwistFamily, TwistFamilyDescriptor};

/// Highest degree of the bar-complex cross-check; the parallel-paths complex
/// covers the rest.
pub const BAR_CHECK_DEGREE: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CounterexampleReport {
    pub field: FieldDescriptor,
    pub alpha: String,
    pub factor_a_separable: bool,
    pub factor_b_separable: bool,
    pub invertible: bool,
    /// `dim J` of the twisted product; nonzero means it is not separable.
    pub product_radical_dim: usize,
    /// Parallel-paths complex of the round-trip quiver, degrees `0..=N`.
    pub rsz_dims: Vec<usize>,
    /// Bar complex of the twisted product itself, as far as the budget allows.
    pub bar_dims_product: Vec<usize>,
    /// Bar complex of the truncated round-trip algebra, same degrees.
    pub bar_dims_roundtrip: Vec<usize>,
    pub verdict: String,
}

/// Builds `k[Z₂] ⊗_τ k[Z₂]` for the line family at `α = 2`, and checks that
/// both factors are separable, `τ` is invertible, and `HH^n = k` for
/// `n = 0..=top` (parallel-paths complex) and as far as the bar complex
/// reaches, up to [`BAR_CHECK_DEGREE`]. Any failed check is an error.
pub fn verify_guccione_counterexample(field: FieldDescriptor, top: usize) -> Result<CounterexampleReport> {
    if field.characteristic() == 2 {
        return Err(Error::Hypothesis("the line family needs characteristic ≠ 2".into()));
    }
    if top < 2 {
        return Err(Error::InvalidParameter("N must be at least 2".into()));
    }
    let (a, b) = group_algebra_pair(field)?;
    let alpha = field.from_i64(2);
    let tau = family_member(&TwistFamilyDescriptor::new(TwistFamily::LineCharNe2, Some(alpha.clone()))?, &a, &b)?;
    let product = tau.twisted_product()?;
    let product_radical_dim = product.jacobson_radical()?.dim();

    let rsz_dims = hh_rsz(&standard_quiver("roundtrip")?, field, top, "roundtrip")?.dims;
    let budget = budget_from_env();
    let bar_top = bar_degree_limit(product.dim(), budget, top.min(BAR_CHECK_DEGREE)).unwrap_or(0);
    let bar_dims_product = hh_bar_with_budget(&product, bar_top, "product", budget)?.dims;
    let r = StandardAlgebra::TruncatedRoundtrip.build(field)?;
    let bar_dims_roundtrip = hh_bar_with_budget(&r, bar_top, "roundtrip", budget)?.dims;

    let mut report = CounterexampleReport {
        field,
        alpha: alpha.to_string(),
        factor_a_separable: a.is_separable(),
        factor_b_separable: b.is_separable(),
        invertible: tau.is_invertible(),
        product_radical_dim,
        rsz_dims,
        bar_dims_product,
        bar_dims_roundtrip,
        verdict: String::new(),
    };
    let all_ones = |v: &[usize]| v.iter().all(|&x| x == 1);
    let confirmed = report.factor_a_separable
        && report.factor_b_separable
        && report.invertible
        && report.product_radical_dim > 0
        && all_ones(&report.rsz_dims)
        && all_ones(&report.bar_dims_product)
        && all_ones(&report.bar_dims_roundtrip);
    if !confirmed {
        return Err(Error::Hypothesis(format!("counterexample check failed: {report:?}")));
    }
    report.verdict = "counterexample confirmed".into();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_run() {
        let r = verify_guccione_counterexample(FieldDescriptor::RATIONALS, 2).unwrap();
        assert_eq!(r.verdict, "counterexample confirmed");
        assert_eq!(r.rsz_dims, vec![1, 1, 1]);
        assert_eq!(r.product_radical_dim, 2);
    }

    #[test]
    fn characteristic_two_rejected() {
        assert!(verify_guccione_counterexample(FieldDescriptor::prime(2).unwrap(), 4).is_err());
    }
}
