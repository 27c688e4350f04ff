//! The parallel-paths complex of `(kQ)₂`: degree `n` is
//! `k(Q_n∥Q₀) ⊕ k(Q_n∥Q₁)` and the only nonzero block of the coboundary is
//! `D: k(Q_n∥Q₀) → k(Q_{n+1}∥Q₁)`,
//!
//! `D(γ, e) = Σ_{t(a)=e} (aγ, a) + (−1)^{n+1} Σ_{s(a)=e} (γa, a)`.

use std::collections::HashMap;

use super::{cohomology, collect_sparse, CochainComplex, HHMethod, HHProfile, SparseVector};
use crate::error::{Error, Result};
use crate::field::FieldDescriptor;
use crate::matrix::MatrixOfScalars;
use crate::quiver::{Path, Quiver, DEFAULT_PATH_BOUND};

/// One degree of the complex together with its `D` block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RszComplexLayer {
    pub degree: usize,
    pub basis_p0: Vec<(Path, Path)>,
    pub basis_p1: Vec<(Path, Path)>,
    /// `D: k(Q_n∥Q₀) → k(Q_{n+1}∥Q₁)`, columns indexed by `basis_p0`.
    pub d_matrix: MatrixOfScalars,
}

pub struct RszComplex {
    quiver: Quiver,
    field: FieldDescriptor,
    p0: Vec<Vec<(Path, Path)>>,
    p1: Vec<Vec<(Path, Path)>>,
    p1_index: Vec<HashMap<(Path, Path), usize>>,
}

impl RszComplex {
    /// Enumerates the parallel pairs in degrees `0..=top + 1`.
    pub fn new(quiver: &Quiver, field: FieldDescriptor, top: usize) -> Result<Self> {
        if top > DEFAULT_PATH_BOUND {
            return Err(Error::InvalidParameter(format!("degree {top} exceeds {DEFAULT_PATH_BOUND}")));
        }
        let mut p0 = Vec::new();
        let mut p1 = Vec::new();
        for n in 0..=top + 1 {
            let paths = quiver.paths_of_length_bounded(n, DEFAULT_PATH_BOUND + 1)?;
            p0.push(parallel(&paths, &quiver.paths_of_length(0)?));
            p1.push(parallel(&paths, &quiver.paths_of_length(1)?));
        }
        let p1_index = p1
            .iter()
            .map(|layer| layer.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect())
            .collect();
        Ok(RszComplex { quiver: quiver.clone(), field, p0, p1, p1_index })
    }

    /// `D(γ, e)` in the basis of `k(Q_{n+1}∥Q₁)`.
    fn d_column(&self, n: usize, j: usize) -> SparseVector {
        let (gamma, e) = &self.p0[n][j];
        let e = e.source();
        let one = self.field.one();
        let sign = if n.is_multiple_of(2) { -&one } else { one.clone() };
        let index = &self.p1_index[n + 1];
        let mut terms = Vec::new();
        for a in 0..self.quiver.arrow_count() {
            let arrow = self.quiver.arrow_path(a);
            if arrow.target() == e {
                let ag = arrow.then(gamma).expect("a ends where γ starts");
                terms.push((index[&(ag, arrow.clone())], one.clone()));
            }
            if arrow.source() == e {
                let ga = gamma.then(&arrow).expect("γ ends where a starts");
                terms.push((index[&(ga, arrow)], sign.clone()));
            }
        }
        collect_sparse(terms)
    }

    pub fn layer(&self, n: usize) -> Result<RszComplexLayer> {
        if n + 1 >= self.p0.len() {
            return Err(Error::InvalidParameter(format!("degree {n} beyond the enumerated range")));
        }
        let mut d = MatrixOfScalars::zeros(self.field, self.p1[n + 1].len(), self.p0[n].len());
        for j in 0..self.p0[n].len() {
            for (i, c) in self.d_column(n, j) {
                d.set(i, j, c);
            }
        }
        Ok(RszComplexLayer {
            degree: n,
            basis_p0: self.p0[n].clone(),
            basis_p1: self.p1[n].clone(),
            d_matrix: d,
        })
    }
}

fn parallel(xs: &[Path], ys: &[Path]) -> Vec<(Path, Path)> {
    xs.iter()
        .flat_map(|x| ys.iter().filter(|y| x.is_parallel_to(y)).map(move |y| (x.clone(), y.clone())))
        .collect()
}

impl CochainComplex for RszComplex {
    fn field(&self) -> FieldDescriptor {
        self.field
    }

    fn cochain_dim(&self, n: usize) -> Result<usize> {
        match (self.p0.get(n), self.p1.get(n)) {
            (Some(a), Some(b)) => Ok(a.len() + b.len()),
            _ => Err(Error::InvalidParameter(format!("degree {n} beyond the enumerated range"))),
        }
    }

    fn coboundary(&self, n: usize, j: usize) -> Result<SparseVector> {
        if j >= self.p0[n].len() {
            return Ok(Vec::new());
        }
        let offset = self.p0[n + 1].len();
        Ok(self.d_column(n, j).into_iter().map(|(i, c)| (offset + i, c)).collect())
    }
}

/// The `D` block of degree `n` on its own.
pub fn rsz_layer(q: &Quiver, field: FieldDescriptor, n: usize) -> Result<RszComplexLayer> {
    RszComplex::new(q, field, n)?.layer(n)
}

/// `dim HH^n((kQ)₂)` for `n = 0..=top` from the parallel-paths complex.
pub fn hh_rsz(q: &Quiver, field: FieldDescriptor, top: usize, tag: &str) -> Result<HHProfile> {
    let complex = RszComplex::new(q, field, top)?;
    Ok(HHProfile { algebra_tag: tag.to_string(), method: HHMethod::RszComplex, dims: cohomology(&complex, top)? })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::standard_quiver;

    const Q: FieldDescriptor = FieldDescriptor::RATIONALS;

    fn dims(name: &str, top: usize) -> Vec<usize> {
        hh_rsz(&standard_quiver(name).unwrap(), Q, top, name).unwrap().dims
    }

    #[test]
    fn roundtrip_all_ones() {
        assert_eq!(dims("roundtrip", 10), vec![1; 11]);
    }

    #[test]
    fn qtilde_and_points() {
        assert_eq!(dims("qtilde", 5), vec![2, 0, 0, 0, 0, 0]);
        assert_eq!(dims("four_points", 3), vec![4, 0, 0, 0]);
    }

    #[test]
    fn crown_three() {
        assert_eq!(dims("crown(3)", 9), vec![1, 1, 0, 0, 0, 0, 1, 1, 0, 0]);
    }

    #[test]
    fn kronecker() {
        assert_eq!(dims("kronecker", 3), vec![1, 3, 0, 0]);
    }

    #[test]
    fn layer_shapes() {
        let rt = standard_quiver("roundtrip").unwrap();
        let layer = rsz_layer(&rt, Q, 0).unwrap();
        assert_eq!(layer.basis_p0.len(), 2);
        assert!(layer.basis_p1.is_empty());
        assert_eq!((layer.d_matrix.rows(), layer.d_matrix.cols()), (2, 2));
        assert_eq!(layer.d_matrix.rank(), 1);
        assert!(rsz_layer(&rt, Q, 40).is_err());
    }
}
