//! Hochschild cohomology dimensions.
//!
//! Three cochain complexes share one driver ([`cohomology`]): the
//! parallel-paths complex of a radical-square-zero quiver algebra, the
//! normalized bar complex of an arbitrary algebra, and the `E`-relative
//! complex for `A = E ⊕ J` with `J² = 0`. Every coboundary is checked to
//! square to zero in each pair of degrees computed.

mod bar;
mod counterexample;
mod ecomplex;
mod formulas;
mod rsz;

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use bar::{bar_degree_limit, budget_from_env, hh_bar, hh_bar_with_budget, BarComplex, DEFAULT_BUDGET};
pub use counterexample::{verify_guccione_counterexample, CounterexampleReport, BAR_CHECK_DEGREE};
pub use ecomplex::{basis_idempotents, hh_e_complex, EComplex};
pub use formulas::{crown_formula, crown_profile, thm_formula, thm_profile};
pub use rsz::{hh_rsz, rsz_layer, RszComplex, RszComplexLayer};

use crate::error::{Error, Result};
use crate::field::{FieldDescriptor, Scalar};
use crate::matrix::SparseEchelon;

/// Sparse vector: strictly increasing indices, no zero entries.
pub type SparseVector = Vec<(usize, Scalar)>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum HHMethod {
    RszComplex,
    BarComplex,
    EComplex,
    ThmFormula,
    CrownFormula,
}

impl fmt::Display for HHMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HHMethod::RszComplex => "rsz-complex",
            HHMethod::BarComplex => "bar-complex",
            HHMethod::EComplex => "e-complex",
            HHMethod::ThmFormula => "thm-formula",
            HHMethod::CrownFormula => "crown-formula",
        })
    }
}

/// `dims[n] = dim HH^n` for `n = 0..=N`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HHProfile {
    pub algebra_tag: String,
    pub method: HHMethod,
    pub dims: Vec<usize>,
}

impl HHProfile {
    pub fn top_degree(&self) -> usize {
        self.dims.len() - 1
    }
}

/// A cochain complex `C^0 → C^1 → …` given by its coboundary on basis
/// cochains.
pub trait CochainComplex: Sync {
    fn field(&self) -> FieldDescriptor;

    fn cochain_dim(&self, n: usize) -> Result<usize>;

    /// `δ_n` applied to the `j`-th basis cochain of degree `n`, in the basis
    /// of degree `n + 1`.
    fn coboundary(&self, n: usize, j: usize) -> Result<SparseVector>;
}

/// Cohomology dimensions in degrees `0..=top`, checking `δ_{n+1}∘δ_n = 0` for
/// every `n + 1 ≤ top`.
pub fn cohomology<C: CochainComplex + ?Sized>(complex: &C, top: usize) -> Result<Vec<usize>> {
    let field = complex.field();
    let mut dims = Vec::with_capacity(top + 1);
    let mut previous_rank = 0;
    let mut previous_columns: Option<Vec<SparseVector>> = None;
    for n in 0..=top {
        let width = complex.cochain_dim(n + 1)?;
        let columns = (0..complex.cochain_dim(n)?)
            .into_par_iter()
            .map(|j| complex.coboundary(n, j))
            .collect::<Result<Vec<_>>>()?;
        if let Some(prev) = &previous_columns {
            check_square_zero(n - 1, prev, &columns, width)?;
        }
        let mut echelon = SparseEchelon::new(field, width);
        for col in &columns {
            echelon.insert(col.clone());
        }
        let rank = echelon.rank();
        dims.push(columns.len() - rank - previous_rank);
        previous_rank = rank;
        previous_columns = Some(columns);
    }
    Ok(dims)
}

/// `δ_{n+1}(δ_n(c)) = 0` for every column `c` of `δ_n`, with `next` the
/// columns of `δ_{n+1}`.
fn check_square_zero(n: usize, current: &[SparseVector], next: &[SparseVector], width: usize) -> Result<()> {
    current.par_iter().enumerate().try_for_each(|(j, col)| {
        let mut acc: Vec<Option<Scalar>> = vec![None; width];
        for (i, c) in col {
            for (k, x) in &next[*i] {
                let term = c * x;
                match &mut acc[*k] {
                    Some(v) => *v += &term,
                    slot => *slot = Some(term),
                }
            }
        }
        if acc.iter().flatten().any(|v| !v.is_zero()) {
            return Err(Error::Complex(format!("δ∘δ ≠ 0 on basis cochain {j} of degree {n}")));
        }
        Ok(())
    })
}

/// Accumulates `(index, coefficient)` terms into a sorted sparse vector.
pub(crate) fn collect_sparse(terms: impl IntoIterator<Item = (usize, Scalar)>) -> SparseVector {
    let mut map = std::collections::BTreeMap::<usize, Scalar>::new();
    for (i, c) in terms {
        if c.is_zero() {
            continue;
        }
        match map.get_mut(&i) {
            Some(v) => *v += &c,
            None => {
                map.insert(i, c);
            }
        }
    }
    map.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}
