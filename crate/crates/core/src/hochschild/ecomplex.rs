//! The complex `0 → R^E → Hom_{E-E}(J, R) → Hom_{E-E}(J⊗_E J, R) → …` for
//! `R = E ⊕ J` with `E` spanned by complete orthogonal idempotents and
//! `J² = 0`, where `(δf)(x₁, …, x_{n+1}) = x₁f(x₂, …) + (−1)^{n+1}f(…, x_n)x_{n+1}`.
//!
//! `J^{⊗_E n}` has a basis of chains `x₁ ⊗ … ⊗ x_n` of Peirce basis vectors
//! `x_k ∈ e_{i_{k−1}} J e_{i_k}`, and an `E-E` map on it is a choice of value
//! in `e_{i_0} R e_{i_n}` per chain. Degree-0 chains are the idempotents
//! themselves, which recovers `R^E = ⊕ e_i R e_i`.

use std::collections::HashMap;

use super::{cohomology, collect_sparse, CochainComplex, HHMethod, HHProfile, SparseVector};
use crate::algebra::{AlgebraElement, FiniteDimAlgebra, SubspaceBasis};
use crate::error::{Error, Result};
use crate::field::FieldDescriptor;
use crate::matrix::Vector;

/// A chain: its first idempotent and its Peirce vectors.
type Chain = (usize, Vec<usize>);

pub struct EComplex {
    algebra: FiniteDimAlgebra,
    /// `(i, j, x)` with `x` in the basis of `e_i J e_j`.
    peirce_j: Vec<(usize, usize, Vector)>,
    /// `e_i R e_j` for every pair.
    peirce_r: Vec<Vec<SubspaceBasis>>,
    chains: Vec<Vec<Chain>>,
    chain_index: Vec<HashMap<Chain, usize>>,
    /// First cochain index of each chain, per degree, plus the total.
    offsets: Vec<Vec<usize>>,
}

impl EComplex {
    /// Checks the decomposition hypotheses and enumerates chains in degrees
    /// `0..=top + 1`.
    pub fn new(a: &FiniteDimAlgebra, idempotents: &[AlgebraElement<'_>], top: usize) -> Result<Self> {
        let field = a.field();
        let d = a.dim();
        let es: Vec<Vector> = idempotents.iter().map(|e| e.coords().clone()).collect();
        if es.is_empty() || es.iter().any(|e| e.len() != d) {
            return Err(Error::Hypothesis("need idempotents of the given algebra".into()));
        }
        for (i, x) in es.iter().enumerate() {
            for (j, y) in es.iter().enumerate() {
                let expected = if i == j { x.clone() } else { vec![field.zero(); d] };
                if a.mul_coords(x, y) != expected {
                    return Err(Error::Hypothesis(format!("e{i}·e{j} breaks orthogonal idempotence")));
                }
            }
        }
        let mut sum = vec![field.zero(); d];
        for e in &es {
            for (s, x) in sum.iter_mut().zip(e) {
                *s += x;
            }
        }
        if sum != *a.unit() {
            return Err(Error::Hypothesis("idempotents do not sum to 1".into()));
        }
        let radical = a.jacobson_radical()?;
        if a.product_space(&radical, &radical).dim() != 0 {
            return Err(Error::Hypothesis("J² ≠ 0".into()));
        }
        let mut all = es.clone();
        all.extend(radical.vectors().iter().cloned());
        if es.len() + radical.dim() != d || SubspaceBasis::from_spanning(field, d, all).dim() != d {
            return Err(Error::Hypothesis("the algebra is not E ⊕ J".into()));
        }

        let sandwich = |i: usize, v: &Vector, j: usize| a.mul_coords(&a.mul_coords(&es[i], v), &es[j]);
        let m = es.len();
        let mut peirce_j = Vec::new();
        let mut peirce_r = Vec::new();
        for i in 0..m {
            let mut row = Vec::new();
            for j in 0..m {
                let jj = radical.vectors().iter().map(|v| sandwich(i, v, j)).collect();
                for x in SubspaceBasis::from_spanning(field, d, jj).vectors() {
                    peirce_j.push((i, j, x.clone()));
                }
                let rr = (0..d).map(|k| sandwich(i, &a.basis_vector(k), j)).collect();
                row.push(SubspaceBasis::from_spanning(field, d, rr));
            }
            peirce_r.push(row);
        }

        let mut chains: Vec<Vec<Chain>> = vec![(0..m).map(|i| (i, Vec::new())).collect()];
        for n in 1..=top + 1 {
            let next = chains[n - 1]
                .iter()
                .flat_map(|(start, xs)| {
                    let end = xs.last().map_or(*start, |&x| peirce_j[x].1);
                    let peirce_j = &peirce_j;
                    (0..peirce_j.len()).filter(move |&y| peirce_j[y].0 == end).map(move |y| {
                        let mut ys = xs.clone();
                        ys.push(y);
                        (*start, ys)
                    })
                })
                .collect();
            chains.push(next);
        }
        let chain_index = chains
            .iter()
            .map(|layer| layer.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect())
            .collect();
        let mut complex = EComplex {
            algebra: a.clone(),
            peirce_j,
            peirce_r,
            chains,
            chain_index,
            offsets: Vec::new(),
        };
        complex.offsets = complex
            .chains
            .iter()
            .map(|layer| {
                let mut acc = vec![0];
                for c in layer {
                    let (s, t) = complex.endpoints(c);
                    acc.push(acc.last().unwrap() + complex.peirce_r[s][t].dim());
                }
                acc
            })
            .collect();
        Ok(complex)
    }

    fn endpoints(&self, (start, xs): &Chain) -> (usize, usize) {
        (*start, xs.last().map_or(*start, |&x| self.peirce_j[x].1))
    }

    /// Adds `sign · value` at the cochain `chain ↦ value` of degree `n`.
    fn push_value(&self, n: usize, chain: &Chain, value: &Vector, negate: bool, out: &mut Vec<(usize, crate::field::Scalar)>) {
        let (s, t) = self.endpoints(chain);
        let base = self.offsets[n][self.chain_index[n][chain]];
        let coords = self.peirce_r[s][t]
            .coordinates(value)
            .expect("products of Peirce components stay in the Peirce component");
        for (r, c) in coords.into_iter().enumerate() {
            out.push((base + r, if negate { -&c } else { c }));
        }
    }
}

impl CochainComplex for EComplex {
    fn field(&self) -> FieldDescriptor {
        self.algebra.field()
    }

    fn cochain_dim(&self, n: usize) -> Result<usize> {
        self.offsets
            .get(n)
            .map(|o| *o.last().expect("offsets start at 0"))
            .ok_or_else(|| Error::InvalidParameter(format!("degree {n} beyond the enumerated range")))
    }

    fn coboundary(&self, n: usize, j: usize) -> Result<SparseVector> {
        let layer = &self.offsets[n];
        let c = layer.partition_point(|&o| o <= j) - 1;
        let chain = &self.chains[n][c];
        let (s, t) = self.endpoints(chain);
        let w = &self.peirce_r[s][t].vectors()[j - layer[c]];
        let mut terms = Vec::new();
        for (y, (ys, yt, yv)) in self.peirce_j.iter().enumerate() {
            if *yt == chain.0 {
                let mut xs = vec![y];
                xs.extend_from_slice(&chain.1);
                self.push_value(n + 1, &(*ys, xs), &self.algebra.mul_coords(yv, w), false, &mut terms);
            }
            if *ys == t {
                let mut xs = chain.1.clone();
                xs.push(y);
                self.push_value(n + 1, &(chain.0, xs), &self.algebra.mul_coords(w, yv), n.is_multiple_of(2), &mut terms);
            }
        }
        Ok(collect_sparse(terms))
    }
}

pub fn hh_e_complex(
    a: &FiniteDimAlgebra,
    idempotents: &[AlgebraElement<'_>],
    top: usize,
    tag: &str,
) -> Result<HHProfile> {
    let complex = EComplex::new(a, idempotents, top)?;
    Ok(HHProfile { algebra_tag: tag.to_string(), method: HHMethod::EComplex, dims: cohomology(&complex, top)? })
}

/// The basis vectors that are idempotent. For a truncated path algebra these
/// are the vertices.
pub fn basis_idempotents(a: &FiniteDimAlgebra) -> Vec<AlgebraElement<'_>> {
    (0..a.dim())
        .filter(|&i| *a.basis_product(i, i) == a.basis_vector(i))
        .map(|i| AlgebraElement::basis(a, i))
        .collect()
}
