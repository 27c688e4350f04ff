//! The normalized bar complex `Hom_k(Ā^{⊗n}, A)`, `Ā = A/k·1`.
//!
//! The basis of `A` is rotated so the unit comes first; `Ā` then has the
//! remaining `m = d − 1` basis vectors. The cochain sending the basis tuple
//! `t ∈ {0..m}^n` to `e_k` (and every other tuple to zero) has index
//! `t·d + k`, with `t` read as a base-`m` number.

use super::{cohomology, collect_sparse, CochainComplex, HHMethod, HHProfile, SparseVector};
use crate::algebra::FiniteDimAlgebra;
use crate::error::{Error, Result};
use crate::field::{FieldDescriptor, Scalar};

/// Largest number of coefficients a coboundary may store.
pub const DEFAULT_BUDGET: u128 = 1 << 22;

/// `TWISTLAB_BUDGET` when set to an integer, [`DEFAULT_BUDGET`] otherwise.
pub fn budget_from_env() -> u128 {
    std::env::var("TWISTLAB_BUDGET")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_BUDGET)
}

/// Bound on the stored coefficients of `δ_n`: `d·m^n` columns, each with at
/// most `2md` outer terms and `n·m²` inner ones.
fn coboundary_size(dim: usize, n: usize) -> u128 {
    let (d, m) = (dim as u128, dim.saturating_sub(1) as u128);
    d * m.pow(n as u32) * (2 * m * d + n as u128 * m * m)
}

/// Coefficients needed to reach degree `top`: the largest `δ_n`, `n ≤ top`.
fn needed(dim: usize, top: usize) -> u128 {
    (0..=top).map(|n| coboundary_size(dim, n)).max().unwrap_or(0)
}

/// Highest degree reachable within `budget` for a `dim`-dimensional algebra,
/// capped at `cap`.
pub fn bar_degree_limit(dim: usize, budget: u128, cap: usize) -> Option<usize> {
    (0..=cap).take_while(|&n| needed(dim, n) <= budget).last()
}

pub struct BarComplex {
    algebra: FiniteDimAlgebra,
    m: usize,
    /// `s ↦ [(b, c, λ)]` with `λ` the coefficient of `ē_s` in `ē_b·ē_c`.
    factorizations: Vec<Vec<(usize, usize, Scalar)>>,
}

impl BarComplex {
    pub fn new(a: &FiniteDimAlgebra) -> Result<Self> {
        let algebra = a.with_unit_first()?;
        let d = algebra.dim();
        let m = d - 1;
        let mut factorizations = vec![Vec::new(); m];
        for b in 0..m {
            for c in 0..m {
                for (s, lambda) in algebra.basis_product(b + 1, c + 1).iter().enumerate().skip(1) {
                    if !lambda.is_zero() {
                        factorizations[s - 1].push((b, c, lambda.clone()));
                    }
                }
            }
        }
        Ok(BarComplex { algebra, m, factorizations })
    }

    fn encode(&self, digits: &[usize]) -> usize {
        digits.iter().fold(0, |acc, &x| acc * self.m + x)
    }

    fn decode(&self, mut t: usize, n: usize) -> Vec<usize> {
        let mut digits = vec![0; n];
        for slot in digits.iter_mut().rev() {
            *slot = t % self.m;
            t /= self.m;
        }
        digits
    }
}

impl CochainComplex for BarComplex {
    fn field(&self) -> FieldDescriptor {
        self.algebra.field()
    }

    fn cochain_dim(&self, n: usize) -> Result<usize> {
        let d = self.algebra.dim();
        self.m
            .checked_pow(n as u32)
            .and_then(|x| x.checked_mul(d))
            .ok_or_else(|| Error::InvalidParameter(format!("bar complex degree {n} overflows")))
    }

    fn coboundary(&self, n: usize, j: usize) -> Result<SparseVector> {
        let d = self.algebra.dim();
        let (t, k) = (j / d, j % d);
        let digits = self.decode(t, n);
        let field = self.field();
        let mut terms = Vec::new();
        let row = |tuple: &[usize], out: usize| self.encode(tuple) * d + out;
        for a in 0..self.m {
            // x₁·f(x₂, …)
            let mut tuple = vec![a];
            tuple.extend_from_slice(&digits);
            for (out, c) in self.algebra.basis_product(a + 1, k).iter().enumerate() {
                terms.push((row(&tuple, out), c.clone()));
            }
            // (−1)^{n+1} f(…, x_n)·x_{n+1}
            let mut tuple = digits.clone();
            tuple.push(a);
            for (out, c) in self.algebra.basis_product(k, a + 1).iter().enumerate() {
                let c = if n.is_multiple_of(2) { -c } else { c.clone() };
                terms.push((row(&tuple, out), c));
            }
        }
        // (−1)^i f(…, x_i x_{i+1}, …)
        for p in 0..n {
            let sign = if p % 2 == 0 { -field.one() } else { field.one() };
            for (b, c, lambda) in &self.factorizations[digits[p]] {
                let mut tuple = digits[..p].to_vec();
                tuple.extend([*b, *c]);
                tuple.extend_from_slice(&digits[p + 1..]);
                terms.push((row(&tuple, k), &sign * lambda));
            }
        }
        Ok(collect_sparse(terms))
    }
}

/// Bar-complex cohomology in degrees `0..=top` within the budget from
/// [`budget_from_env`].
pub fn hh_bar(a: &FiniteDimAlgebra, top: usize, tag: &str) -> Result<HHProfile> {
    hh_bar_with_budget(a, top, tag, budget_from_env())
}

pub fn hh_bar_with_budget(a: &FiniteDimAlgebra, top: usize, tag: &str, budget: u128) -> Result<HHProfile> {
    let need = needed(a.dim(), top);
    if need > budget {
        return Err(Error::BudgetExceeded { needed: need, budget });
    }
    let complex = BarComplex::new(a)?;
    Ok(HHProfile { algebra_tag: tag.to_string(), method: HHMethod::BarComplex, dims: cohomology(&complex, top)? })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::StandardAlgebra;

    const Q: FieldDescriptor = FieldDescriptor::RATIONALS;

    fn dims(a: StandardAlgebra, top: usize) -> Vec<usize> {
        hh_bar(&a.build(Q).unwrap(), top, "t").unwrap().dims
    }

    #[test]
    fn separable_algebras() {
        assert_eq!(dims(StandardAlgebra::Matrix2, 3), vec![1, 0, 0, 0]);
        assert_eq!(dims(StandardAlgebra::KN(4), 3), vec![4, 0, 0, 0]);
    }

    #[test]
    fn truncated_roundtrip() {
        assert_eq!(dims(StandardAlgebra::TruncatedRoundtrip, 4), vec![1; 5]);
    }

    #[test]
    fn dual_numbers() {
        // k[x]/(x²) over ℚ: HH^n is 2 in degree 0, then 1 in every degree
        let dual = crate::quiver::standard_quiver("loop").unwrap().truncated_path_algebra(Q).unwrap();
        assert_eq!(hh_bar(&dual, 5, "dual").unwrap().dims, vec![2, 1, 1, 1, 1, 1]);
    }

    #[test]
    fn budget() {
        let a = StandardAlgebra::Matrix2.build(Q).unwrap();
        assert!(matches!(hh_bar_with_budget(&a, 4, "t", 1000), Err(Error::BudgetExceeded { .. })));
        assert_eq!(bar_degree_limit(4, DEFAULT_BUDGET, 32), Some(8));
        assert_eq!(bar_degree_limit(4, 1 << 20, 32), Some(7));
        assert_eq!(bar_degree_limit(1, 0, 7), Some(7));
    }

    #[test]
    fn size_bound_holds() {
        for s in [StandardAlgebra::Matrix2, StandardAlgebra::TruncatedRoundtrip, StandardAlgebra::KN(3)] {
            let a = s.build(Q).unwrap();
            let complex = BarComplex::new(&a).unwrap();
            for n in 0..=3 {
                let stored: usize = (0..complex.cochain_dim(n).unwrap())
                    .map(|j| complex.coboundary(n, j).unwrap().len())
                    .sum();
                assert!(stored as u128 <= coboundary_size(a.dim(), n), "{} degree {n}", s.name());
            }
        }
    }
}
