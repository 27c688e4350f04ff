//! Finite-dimensional associative unital algebras given by structure
//! constants, and the invariants used to tell them apart.
//!
//! `table[i][j]` holds the coordinates of `e_i · e_j`. Construction through
//! [`FiniteDimAlgebra::new`] only checks shapes; [`FiniteDimAlgebra::verified`]
//! additionally runs the full associativity and unit scan.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldDescriptor, Scalar};
use crate::matrix::{MatrixOfScalars, SparseEchelon, Vector};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteDimAlgebra {
    field: FieldDescriptor,
    labels: Vec<String>,
    table: Vec<Vec<Vector>>,
    unit: Vector,
}

/// Outcome of [`FiniteDimAlgebra::verify_axioms`]. Failing indices are the
/// first offending basis triple `(i, j, k)` for associativity and the first
/// basis index `j` with `1·e_j ≠ e_j` or `e_j·1 ≠ e_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub associative: bool,
    pub unital: bool,
    pub associativity_failure: Option<(usize, usize, usize)>,
    pub unit_failure: Option<usize>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.associative && self.unital
    }
}

impl FiniteDimAlgebra {
    pub fn new(
        field: FieldDescriptor,
        labels: Vec<String>,
        table: Vec<Vec<Vector>>,
        unit: Vector,
    ) -> Result<Self> {
        let d = labels.len();
        if d == 0 {
            return Err(Error::Shape("an algebra needs a nonempty basis".into()));
        }
        if unit.len() != d
            || table.len() != d
            || table.iter().any(|row| row.len() != d || row.iter().any(|v| v.len() != d))
        {
            return Err(Error::Shape(format!("structure constants do not match dimension {d}")));
        }
        let all = unit.iter().chain(table.iter().flatten().flatten());
        if let Some(bad) = all.into_iter().find(|s| s.field() != field) {
            return Err(Error::FieldMismatch(field.to_string(), bad.field().to_string()));
        }
        Ok(FiniteDimAlgebra { field, labels, table, unit })
    }

    /// Like [`new`](Self::new), but rejects tables that are not associative
    /// and unital.
    pub fn verified(
        field: FieldDescriptor,
        labels: Vec<String>,
        table: Vec<Vec<Vector>>,
        unit: Vector,
    ) -> Result<Self> {
        let a = Self::new(field, labels, table, unit)?;
        a.ensure_axioms()?;
        Ok(a)
    }

    pub(crate) fn ensure_axioms(&self) -> Result<()> {
        let report = self.verify_axioms();
        if let Some((i, j, k)) = report.associativity_failure {
            return Err(Error::Axioms(format!(
                "(e{i}·e{j})·e{k} ≠ e{i}·(e{j}·e{k})"
            )));
        }
        if let Some(j) = report.unit_failure {
            return Err(Error::Axioms(format!("unit law fails on e{j}")));
        }
        Ok(())
    }

    pub fn field(&self) -> FieldDescriptor {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> &Vector {
        &self.unit
    }

    /// Coordinates of `e_i · e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &Vector {
        &self.table[i][j]
    }

    pub fn table(&self) -> &[Vec<Vector>] {
        &self.table
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        let mut v = vec![self.field.zero(); self.dim()];
        v[i] = self.field.one();
        v
    }

    pub fn element(&self, coords: Vector) -> Result<AlgebraElement<'_>> {
        AlgebraElement::new(self, coords)
    }

    /// Bilinear product of two coordinate vectors.
    pub fn mul_coords(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let d = self.dim();
        let mut out = vec![self.field.zero(); d];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi * yj;
                for (k, t) in self.table[i][j].iter().enumerate() {
                    if !t.is_zero() {
                        out[k] += &(&c * t);
                    }
                }
            }
        }
        out
    }

    /// The `d × d²` matrix of the multiplication map, column `i·d + j`
    /// holding `e_i · e_j`.
    pub fn multiplication_matrix(&self) -> MatrixOfScalars {
        let d = self.dim();
        let mut m = MatrixOfScalars::zeros(self.field, d, d * d);
        for i in 0..d {
            for j in 0..d {
                for (k, t) in self.table[i][j].iter().enumerate() {
                    m.set(k, i * d + j, t.clone());
                }
            }
        }
        m
    }

    /// Matrix of `y ↦ x·y`.
    pub fn left_multiplication(&self, x: &[Scalar]) -> MatrixOfScalars {
        let d = self.dim();
        let cols: Vec<Vector> = (0..d).map(|j| self.mul_coords(x, &self.basis_vector(j))).collect();
        MatrixOfScalars::from_columns(self.field, d, &cols).expect("square by construction")
    }

    pub fn verify_axioms(&self) -> AxiomReport {
        let d = self.dim();
        let mut associativity_failure = None;
        'outer: for i in 0..d {
            for j in 0..d {
                let ij = &self.table[i][j];
                for k in 0..d {
                    let left = self.mul_coords(ij, &self.basis_vector(k));
                    let right = self.mul_coords(&self.basis_vector(i), &self.table[j][k]);
                    if left != right {
                        associativity_failure = Some((i, j, k));
                        break 'outer;
                    }
                }
            }
        }
        let unit_failure = (0..d).find(|&j| {
            let e = self.basis_vector(j);
            self.mul_coords(&self.unit, &e) != e || self.mul_coords(&e, &self.unit) != e
        });
        AxiomReport {
            associative: associativity_failure.is_none(),
            unital: unit_failure.is_none(),
            associativity_failure,
            unit_failure,
        }
    }

    pub fn is_commutative(&self) -> bool {
        let d = self.dim();
        (0..d).all(|i| (i + 1..d).all(|j| self.table[i][j] == self.table[j][i]))
    }

    /// Elements commuting with every basis vector.
    pub fn center(&self) -> SubspaceBasis {
        let d = self.dim();
        // row block i: coefficients of x ↦ x·e_i − e_i·x
        let mut rows = Vec::with_capacity(d * d);
        for i in 0..d {
            for k in 0..d {
                rows.push(
                    (0..d)
                        .map(|m| &self.table[m][i][k] - &self.table[i][m][k])
                        .collect::<Vector>(),
                );
            }
        }
        let sys = MatrixOfScalars::from_rows(self.field, rows).expect("rectangular");
        SubspaceBasis::from_spanning(self.field, d, sys.kernel_basis())
    }

    /// Gram matrix of the trace form `T(x, y) = trace(L_{x·y})`.
    pub fn trace_form(&self) -> MatrixOfScalars {
        let d = self.dim();
        // trace(L_{e_k}) = Σ_j coefficient of e_j in e_k·e_j
        let traces: Vec<Scalar> = (0..d)
            .map(|k| {
                let mut t = self.field.zero();
                for j in 0..d {
                    t += &self.table[k][j][j];
                }
                t
            })
            .collect();
        let mut g = MatrixOfScalars::zeros(self.field, d, d);
        for i in 0..d {
            for j in 0..d {
                let mut t = self.field.zero();
                for (k, c) in self.table[i][j].iter().enumerate() {
                    if !c.is_zero() {
                        t += &(c * &traces[k]);
                    }
                }
                g.set(i, j, t);
            }
        }
        g
    }

    /// Jacobson radical as the radical of the trace form.
    ///
    /// The trace-form radical always contains the Jacobson radical; it equals
    /// it in characteristic 0 or above the dimension. In small characteristic
    /// the candidate is accepted only if it is nilpotent, otherwise
    /// [`Error::CriterionInapplicable`] is returned.
    pub fn jacobson_radical(&self) -> Result<SubspaceBasis> {
        let candidate =
            SubspaceBasis::from_spanning(self.field, self.dim(), self.trace_form().kernel_basis());
        if self.power_dims(&candidate).is_some() {
            Ok(candidate)
        } else {
            Err(Error::CriterionInapplicable {
                characteristic: self.field.characteristic(),
                dim: self.dim(),
            })
        }
    }

    /// `[dim J, dim J², …]` up to and including the first zero power; empty
    /// when `J = 0`.
    pub fn radical_power_dims(&self) -> Result<Vec<usize>> {
        let j = self.jacobson_radical()?;
        Ok(self.power_dims(&j).expect("radical is nilpotent"))
    }

    /// Dimensions of successive powers of an ideal, or `None` if they
    /// stabilize above zero.
    fn power_dims(&self, ideal: &SubspaceBasis) -> Option<Vec<usize>> {
        if ideal.dim() == 0 {
            return Some(Vec::new());
        }
        let mut dims = vec![ideal.dim()];
        let mut power = ideal.clone();
        loop {
            let next = self.product_space(&power, ideal);
            let nd = next.dim();
            dims.push(nd);
            if nd == 0 {
                return Some(dims);
            }
            if nd == power.dim() {
                return None;
            }
            power = next;
        }
    }

    /// Span of all products `x·y` with `x ∈ left`, `y ∈ right`.
    pub fn product_space(&self, left: &SubspaceBasis, right: &SubspaceBasis) -> SubspaceBasis {
        let spanning = left
            .vectors()
            .iter()
            .flat_map(|x| right.vectors().iter().map(move |y| self.mul_coords(x, y)))
            .collect();
        SubspaceBasis::from_spanning(self.field, self.dim(), spanning)
    }

    /// True when `e_i·v` and `v·e_i` stay in `space` for all basis and span
    /// vectors.
    pub fn is_two_sided_ideal(&self, space: &SubspaceBasis) -> bool {
        (0..self.dim()).all(|i| {
            let e = self.basis_vector(i);
            space.vectors().iter().all(|v| {
                space.contains(&self.mul_coords(&e, v)) && space.contains(&self.mul_coords(v, &e))
            })
        })
    }

    /// Nondegeneracy of the trace form. Exact for the algebras used here; it
    /// can report `false` for a separable algebra when the characteristic
    /// divides the size of a matrix block.
    pub fn is_separable(&self) -> bool {
        self.trace_form().rank() == self.dim()
    }

    /// Transports the structure along the basis whose vectors are the columns
    /// of `p` (written in the old basis). Labels become `b0, b1, …` unless
    /// supplied.
    pub fn change_of_basis(&self, p: &MatrixOfScalars, labels: Option<Vec<String>>) -> Result<Self> {
        let d = self.dim();
        if p.rows() != d || p.cols() != d {
            return Err(Error::Shape(format!("change of basis must be {d}x{d}")));
        }
        if p.field() != self.field {
            return Err(Error::FieldMismatch(self.field.to_string(), p.field().to_string()));
        }
        let inv = p.inverse()?;
        let new_basis: Vec<Vector> = (0..d).map(|j| p.column(j)).collect();
        let table = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| {
                        let prod = self.mul_coords(&new_basis[i], &new_basis[j]);
                        inv.apply(&prod).expect("square")
                    })
                    .collect()
            })
            .collect();
        let unit = inv.apply(&self.unit)?;
        let labels = labels.unwrap_or_else(|| (0..d).map(|i| format!("b{i}")).collect());
        if labels.len() != d {
            return Err(Error::Shape("wrong number of labels".into()));
        }
        Self::new(self.field, labels, table, unit)
    }

    pub fn relabeled(&self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.dim() {
            return Err(Error::Shape("wrong number of labels".into()));
        }
        Ok(FiniteDimAlgebra { labels, ..self.clone() })
    }

    /// Index of the basis vector equal to the unit, if any.
    pub fn unit_index(&self) -> Option<usize> {
        (0..self.dim()).find(|&i| self.unit == self.basis_vector(i))
    }

    /// An isomorphic copy whose first basis vector is the unit. The remaining
    /// basis vectors are the standard ones except the one replaced.
    pub fn with_unit_first(&self) -> Result<Self> {
        if self.unit_index() == Some(0) {
            return Ok(self.clone());
        }
        let d = self.dim();
        let pivot = self
            .unit
            .iter()
            .position(|x| !x.is_zero())
            .ok_or_else(|| Error::Axioms("unit is zero".into()))?;
        let mut cols = vec![self.unit.clone()];
        cols.extend((0..d).filter(|&i| i != pivot).map(|i| self.basis_vector(i)));
        let p = MatrixOfScalars::from_columns(self.field, d, &cols)?;
        let mut labels = vec!["1".to_string()];
        labels.extend((0..d).filter(|&i| i != pivot).map(|i| self.labels[i].clone()));
        self.change_of_basis(&p, Some(labels))
    }
}

impl fmt::Display for FiniteDimAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "algebra over {} with basis ({})", self.field, self.labels.join(", "))?;
        for i in 0..self.dim() {
            let row: Vec<String> = (0..self.dim())
                .map(|j| format_combination(&self.table[i][j], &self.labels))
                .collect();
            writeln!(f, "  {}: {}", self.labels[i], row.join(" | "))?;
        }
        Ok(())
    }
}

/// Renders a coordinate vector as a linear combination of labels.
pub fn format_combination(v: &[Scalar], labels: &[String]) -> String {
    let terms: Vec<String> = v
        .iter()
        .zip(labels)
        .filter(|(c, _)| !c.is_zero())
        .map(|(c, l)| if c.is_one() { l.clone() } else { format!("{c}·{l}") })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

/// An element of a specific algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraElement<'a> {
    algebra: &'a FiniteDimAlgebra,
    coords: Vector,
}

impl<'a> AlgebraElement<'a> {
    pub fn new(algebra: &'a FiniteDimAlgebra, coords: Vector) -> Result<Self> {
        if coords.len() != algebra.dim() {
            return Err(Error::Shape(format!(
                "{} coordinates for a {}-dimensional algebra",
                coords.len(),
                algebra.dim()
            )));
        }
        Ok(AlgebraElement { algebra, coords })
    }

    pub fn basis(algebra: &'a FiniteDimAlgebra, i: usize) -> Self {
        AlgebraElement { algebra, coords: algebra.basis_vector(i) }
    }

    pub fn unit(algebra: &'a FiniteDimAlgebra) -> Self {
        AlgebraElement { algebra, coords: algebra.unit.clone() }
    }

    pub fn coords(&self) -> &Vector {
        &self.coords
    }

    pub fn algebra(&self) -> &'a FiniteDimAlgebra {
        self.algebra
    }

    pub fn multiply(&self, rhs: &AlgebraElement<'_>) -> Result<AlgebraElement<'a>> {
        self.check_same(rhs)?;
        Ok(AlgebraElement { algebra: self.algebra, coords: self.algebra.mul_coords(&self.coords, &rhs.coords) })
    }

    pub fn add(&self, rhs: &AlgebraElement<'_>) -> Result<AlgebraElement<'a>> {
        self.check_same(rhs)?;
        let coords = self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect();
        Ok(AlgebraElement { algebra: self.algebra, coords })
    }

    pub fn scale(&self, c: &Scalar) -> AlgebraElement<'a> {
        AlgebraElement { algebra: self.algebra, coords: self.coords.iter().map(|x| x * c).collect() }
    }

    fn check_same(&self, rhs: &AlgebraElement<'_>) -> Result<()> {
        if std::ptr::eq(self.algebra, rhs.algebra) || self.algebra == rhs.algebra {
            Ok(())
        } else {
            Err(Error::Shape("elements belong to different algebras".into()))
        }
    }
}

impl fmt::Display for AlgebraElement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_combination(&self.coords, &self.algebra.labels))
    }
}

/// A subspace of `k^d`, stored as the nonzero rows of its reduced row echelon
/// form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceBasis {
    field: FieldDescriptor,
    ambient: usize,
    vectors: Vec<Vector>,
}

impl SubspaceBasis {
    pub fn from_spanning(field: FieldDescriptor, ambient: usize, spanning: Vec<Vector>) -> Self {
        if spanning.is_empty() {
            return SubspaceBasis { field, ambient, vectors: Vec::new() };
        }
        let m = MatrixOfScalars::from_rows(field, spanning).expect("vectors share a length");
        let (r, pivots) = m.rref();
        let vectors = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        SubspaceBasis { field, ambient, vectors }
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn vectors(&self) -> &[Vector] {
        &self.vectors
    }

    /// Coordinates of `v` in this basis, `None` when `v` is outside the span.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vector> {
        // reduced echelon rows: the coordinate on a row is v's pivot entry
        let coords: Vector = self
            .vectors
            .iter()
            .map(|b| v[b.iter().position(|x| !x.is_zero()).expect("basis rows are nonzero")].clone())
            .collect();
        let mut rebuilt = vec![self.field.zero(); self.ambient];
        for (c, b) in coords.iter().zip(&self.vectors) {
            for (r, x) in rebuilt.iter_mut().zip(b) {
                *r += &(c * x);
            }
        }
        (rebuilt == v).then_some(coords)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        let mut ech = SparseEchelon::new(self.field, self.ambient);
        for b in &self.vectors {
            ech.insert(crate::matrix::sparse_row(b));
        }
        ech.contains(crate::matrix::sparse_row(v))
    }
}

/// The named algebras used throughout the toolkit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StandardAlgebra {
    /// `k^n` in the basis of primitive idempotents.
    KN(usize),
    /// `k[Z_2]` in the basis `(1, a)` with `a² = 1`.
    GroupAlgebraZ2,
    /// `M_2(k)` in the basis of matrix units `(e11, e12, e21, e22)`.
    Matrix2,
    /// `k⟨a,b | a² = b² = 1, ab + ba = q⟩` in the basis `(1, a, b, ab)`.
    Aq(Scalar),
    /// The round-trip quiver algebra modulo paths of length two, basis
    /// `(e, f, x, y)`.
    TruncatedRoundtrip,
    /// Path algebra of the quiver with three vertices and one arrow `1 → 2`,
    /// basis `(e0, e1, e2, α)`.
    QtildePathAlgebra,
    /// `k[X]/(X² − X)` in the basis `(1, X)`.
    IdempotentLine,
}

impl StandardAlgebra {
    pub fn build(&self, field: FieldDescriptor) -> Result<FiniteDimAlgebra> {
        let b = TableBuilder::new(field, self.labels()?);
        let alg = match self {
            StandardAlgebra::KN(n) => {
                let mut b = b;
                for i in 0..*n {
                    b.set(i, i, &[(1, i)]);
                }
                b.unit(&(0..*n).map(|i| (1, i)).collect::<Vec<_>>())
            }
            StandardAlgebra::GroupAlgebraZ2 => {
                let mut b = b;
                b.set(0, 0, &[(1, 0)]).set(0, 1, &[(1, 1)]).set(1, 0, &[(1, 1)]).set(1, 1, &[(1, 0)]);
                b.unit(&[(1, 0)])
            }
            StandardAlgebra::IdempotentLine => {
                let mut b = b;
                b.set(0, 0, &[(1, 0)]).set(0, 1, &[(1, 1)]).set(1, 0, &[(1, 1)]).set(1, 1, &[(1, 1)]);
                b.unit(&[(1, 0)])
            }
            StandardAlgebra::Matrix2 => {
                let mut b = b;
                // e_ij · e_kl = δ_jk e_il, basis index 2i + j
                for (i, j, k, l) in (0..16).map(|n| (n >> 3 & 1, n >> 2 & 1, n >> 1 & 1, n & 1)) {
                    if j == k {
                        b.set(2 * i + j, 2 * k + l, &[(1, 2 * i + l)]);
                    }
                }
                b.unit(&[(1, 0), (1, 3)])
            }
            StandardAlgebra::Aq(q) => {
                if q.field() != field {
                    return Err(Error::FieldMismatch(field.to_string(), q.field().to_string()));
                }
                return a_q(field, q);
            }
            StandardAlgebra::TruncatedRoundtrip => {
                let (e, f, x, y) = (0, 1, 2, 3);
                let mut b = b;
                b.set(e, e, &[(1, e)]).set(e, y, &[(1, y)]);
                b.set(f, f, &[(1, f)]).set(f, x, &[(1, x)]);
                b.set(x, e, &[(1, x)]).set(y, f, &[(1, y)]);
                b.unit(&[(1, e), (1, f)])
            }
            StandardAlgebra::QtildePathAlgebra => {
                let mut b = b;
                for i in 0..3 {
                    b.set(i, i, &[(1, i)]);
                }
                b.set(1, 3, &[(1, 3)]).set(3, 2, &[(1, 3)]);
                b.unit(&[(1, 0), (1, 1), (1, 2)])
            }
        };
        alg.build()
    }

    fn labels(&self) -> Result<Vec<String>> {
        let names: Vec<String> = match self {
            StandardAlgebra::KN(0) => {
                return Err(Error::InvalidParameter("k^n requires n ≥ 1".into()))
            }
            StandardAlgebra::KN(n) => (1..=*n).map(|i| format!("e{i}")).collect(),
            StandardAlgebra::GroupAlgebraZ2 => vec!["1".into(), "a".into()],
            StandardAlgebra::IdempotentLine => vec!["1".into(), "X".into()],
            StandardAlgebra::Matrix2 => ["e11", "e12", "e21", "e22"].map(String::from).to_vec(),
            StandardAlgebra::Aq(_) => ["1", "a", "b", "ab"].map(String::from).to_vec(),
            StandardAlgebra::TruncatedRoundtrip => ["e", "f", "x", "y"].map(String::from).to_vec(),
            StandardAlgebra::QtildePathAlgebra => {
                ["e0", "e1", "e2", "alpha"].map(String::from).to_vec()
            }
        };
        Ok(names)
    }

    pub fn name(&self) -> String {
        match self {
            StandardAlgebra::KN(n) => format!("k_n({n})"),
            StandardAlgebra::GroupAlgebraZ2 => "group_algebra_z2".into(),
            StandardAlgebra::IdempotentLine => "idempotent_line".into(),
            StandardAlgebra::Matrix2 => "matrix2".into(),
            StandardAlgebra::Aq(q) => format!("a_q({q})"),
            StandardAlgebra::TruncatedRoundtrip => "truncated_roundtrip".into(),
            StandardAlgebra::QtildePathAlgebra => "qtilde_path_algebra".into(),
        }
    }
}

/// Convenience wrapper around [`StandardAlgebra::build`].
pub fn standard_algebra(name: StandardAlgebra, field: FieldDescriptor) -> Result<FiniteDimAlgebra> {
    name.build(field)
}

fn a_q(field: FieldDescriptor, q: &Scalar) -> Result<FiniteDimAlgebra> {
    let z = field.zero();
    let one = field.one();
    let m1 = -&one;
    let v = |c: [&Scalar; 4]| -> Vector { c.iter().map(|x| (*x).clone()).collect() };
    // basis (1, a, b, ab); ba = q − ab
    let one_row = vec![
        v([&one, &z, &z, &z]),
        v([&z, &one, &z, &z]),
        v([&z, &z, &one, &z]),
        v([&z, &z, &z, &one]),
    ];
    let a_row = vec![
        v([&z, &one, &z, &z]),
        v([&one, &z, &z, &z]),
        v([&z, &z, &z, &one]),
        v([&z, &z, &one, &z]),
    ];
    let b_row = vec![
        v([&z, &z, &one, &z]),
        v([q, &z, &z, &m1]),
        v([&one, &z, &z, &z]),
        v([&z, &m1, q, &z]),
    ];
    let ab_row = vec![
        v([&z, &z, &z, &one]),
        v([&z, q, &m1, &z]),
        v([&z, &one, &z, &z]),
        v([&m1, &z, &z, q]),
    ];
    FiniteDimAlgebra::verified(
        field,
        ["1", "a", "b", "ab"].map(String::from).to_vec(),
        vec![one_row, a_row, b_row, ab_row],
        v([&one, &z, &z, &z]),
    )
}

/// Fills a structure-constant table from integer coefficients.
struct TableBuilder {
    field: FieldDescriptor,
    labels: Vec<String>,
    table: Vec<Vec<Vector>>,
    unit: Vector,
}

impl TableBuilder {
    fn new(field: FieldDescriptor, labels: Vec<String>) -> Self {
        let d = labels.len();
        TableBuilder {
            field,
            labels,
            table: vec![vec![vec![field.zero(); d]; d]; d],
            unit: vec![field.zero(); d],
        }
    }

    fn set(&mut self, i: usize, j: usize, terms: &[(i64, usize)]) -> &mut Self {
        for &(c, k) in terms {
            self.table[i][j][k] = self.field.from_i64(c);
        }
        self
    }

    fn unit(mut self, terms: &[(i64, usize)]) -> Self {
        for &(c, k) in terms {
            self.unit[k] = self.field.from_i64(c);
        }
        self
    }

    fn build(self) -> Result<FiniteDimAlgebra> {
        FiniteDimAlgebra::verified(self.field, self.labels, self.table, self.unit)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldDescriptor {
        FieldDescriptor::RATIONALS
    }

    fn alg(s: StandardAlgebra) -> FiniteDimAlgebra {
        s.build(q()).unwrap()
    }

    #[test]
    fn multiply_examples() {
        let z2 = alg(StandardAlgebra::GroupAlgebraZ2);
        let a = AlgebraElement::basis(&z2, 1);
        assert_eq!(a.multiply(&a).unwrap(), AlgebraElement::unit(&z2));

        let m2 = alg(StandardAlgebra::Matrix2);
        let e11 = AlgebraElement::basis(&m2, 0);
        let e12 = AlgebraElement::basis(&m2, 1);
        assert_eq!(e11.multiply(&e12).unwrap(), e12);
        let one = AlgebraElement::unit(&m2);
        assert_eq!(one.multiply(&e12).unwrap(), e12);

        assert!(a.multiply(&e12).is_err());
    }

    #[test]
    fn verify_axioms_examples() {
        let z2 = alg(StandardAlgebra::GroupAlgebraZ2);
        assert!(z2.verify_axioms().passed());
        let aq = alg(StandardAlgebra::Aq(q().from_i64(7)));
        assert!(aq.verify_axioms().passed());
    }

    #[test]
    fn two_dimensional_perturbation_stays_associative() {
        // a·a := 2·1 presents k[a]/(a² − 2), which is still associative
        let z2 = alg(StandardAlgebra::GroupAlgebraZ2);
        let mut table = z2.table().to_vec();
        table[1][1] = vec![q().from_i64(2), q().zero()];
        let t = FiniteDimAlgebra::new(q(), z2.labels().to_vec(), table, z2.unit().clone()).unwrap();
        assert!(t.verify_axioms().passed());
    }

    #[test]
    fn perturbed_matrix_units_fail_associativity() {
        // e12·e21 := e22 gives (e12·e21)·e12 = 0 but e12·(e21·e12) = e12
        let m2 = alg(StandardAlgebra::Matrix2);
        let mut table = m2.table().to_vec();
        table[1][2] = m2.basis_vector(3);
        let bad = FiniteDimAlgebra::new(q(), m2.labels().to_vec(), table, m2.unit().clone()).unwrap();
        let report = bad.verify_axioms();
        assert!(!report.associative);
        assert!(report.associativity_failure.is_some());
        assert!(FiniteDimAlgebra::verified(q(), m2.labels().to_vec(), bad.table().to_vec(), m2.unit().clone()).is_err());
    }

    #[test]
    fn broken_unit_is_reported() {
        let z2 = alg(StandardAlgebra::GroupAlgebraZ2);
        let bad = FiniteDimAlgebra::new(q(), z2.labels().to_vec(), z2.table().to_vec(), z2.basis_vector(1)).unwrap();
        let report = bad.verify_axioms();
        assert!(report.associative);
        assert_eq!(report.unit_failure, Some(0));
    }

    #[test]
    fn center_examples() {
        assert_eq!(alg(StandardAlgebra::KN(4)).center().dim(), 4);
        assert_eq!(alg(StandardAlgebra::Matrix2).center().dim(), 1);
        assert_eq!(alg(StandardAlgebra::TruncatedRoundtrip).center().dim(), 1);
        assert_eq!(alg(StandardAlgebra::QtildePathAlgebra).center().dim(), 2);
    }

    #[test]
    fn radical_examples() {
        assert_eq!(alg(StandardAlgebra::KN(4)).jacobson_radical().unwrap().dim(), 0);
        let r = alg(StandardAlgebra::TruncatedRoundtrip);
        let j = r.jacobson_radical().unwrap();
        let arrows = SubspaceBasis::from_spanning(q(), 4, vec![r.basis_vector(2), r.basis_vector(3)]);
        assert_eq!(j, arrows);
        assert!(r.is_two_sided_ideal(&j));
        assert_eq!(alg(StandardAlgebra::QtildePathAlgebra).jacobson_radical().unwrap().dim(), 1);
    }

    #[test]
    fn radical_power_examples() {
        assert_eq!(alg(StandardAlgebra::TruncatedRoundtrip).radical_power_dims().unwrap(), vec![2, 0]);
        assert!(alg(StandardAlgebra::Matrix2).radical_power_dims().unwrap().is_empty());
        assert_eq!(alg(StandardAlgebra::QtildePathAlgebra).radical_power_dims().unwrap(), vec![1, 0]);
    }

    #[test]
    fn radical_inapplicable_in_characteristic_two() {
        let f2 = FieldDescriptor::prime(2).unwrap();
        let z2 = StandardAlgebra::GroupAlgebraZ2.build(f2).unwrap();
        assert!(matches!(z2.jacobson_radical(), Err(Error::CriterionInapplicable { .. })));
    }

    #[test]
    fn small_characteristic_radical_confirmed_by_nilpotency() {
        let f3 = FieldDescriptor::prime(3).unwrap();
        let r = StandardAlgebra::TruncatedRoundtrip.build(f3).unwrap();
        assert_eq!(r.radical_power_dims().unwrap(), vec![2, 0]);
        let m2 = StandardAlgebra::Matrix2.build(f3).unwrap();
        assert_eq!(m2.jacobson_radical().unwrap().dim(), 0);
    }

    #[test]
    fn commutativity_examples() {
        assert!(alg(StandardAlgebra::KN(4)).is_commutative());
        assert!(!alg(StandardAlgebra::Matrix2).is_commutative());
        assert!(!alg(StandardAlgebra::Aq(q().zero())).is_commutative());
    }

    #[test]
    fn separability_examples() {
        assert!(alg(StandardAlgebra::KN(2)).is_separable());
        assert!(alg(StandardAlgebra::Matrix2).is_separable());
        assert!(!alg(StandardAlgebra::TruncatedRoundtrip).is_separable());
    }

    #[test]
    fn change_of_basis_examples() {
        let z2 = alg(StandardAlgebra::GroupAlgebraZ2);
        let id = MatrixOfScalars::identity(q(), 2);
        assert_eq!(z2.change_of_basis(&id, Some(z2.labels().to_vec())).unwrap(), z2);

        // u = (1 + a)/2, v = (1 − a)/2
        let h = q().from_ratio(1, 2).unwrap();
        let p = MatrixOfScalars::from_rows(q(), vec![vec![h.clone(), h.clone()], vec![h.clone(), -&h]]).unwrap();
        let uv = z2.change_of_basis(&p, Some(vec!["u".into(), "v".into()])).unwrap();
        let k2 = alg(StandardAlgebra::KN(2));
        assert_eq!(uv.table(), k2.table());
        assert_eq!(uv.unit(), k2.unit());

        let back = uv.change_of_basis(&p.inverse().unwrap(), Some(z2.labels().to_vec())).unwrap();
        assert_eq!(back, z2);

        let singular = MatrixOfScalars::zeros(q(), 2, 2);
        assert!(matches!(z2.change_of_basis(&singular, None), Err(Error::Singular)));
    }

    #[test]
    fn standard_algebra_examples() {
        let r = alg(StandardAlgebra::TruncatedRoundtrip);
        let (e, x) = (r.basis_vector(0), r.basis_vector(2));
        assert_eq!(r.mul_coords(&x, &e), x);
        assert!(r.mul_coords(&e, &x).iter().all(Scalar::is_zero));

        for qv in [-2, 0, 3, 7] {
            let qs = q().from_i64(qv);
            let aq = alg(StandardAlgebra::Aq(qs.clone()));
            let (a, b) = (aq.basis_vector(1), aq.basis_vector(2));
            let s: Vector = aq.mul_coords(&a, &b).iter().zip(aq.mul_coords(&b, &a)).map(|(x, y)| x + &y).collect();
            assert_eq!(s, vec![qs, q().zero(), q().zero(), q().zero()]);
        }

        let k4 = alg(StandardAlgebra::KN(4));
        for i in 0..4 {
            for j in 0..4 {
                let expected = if i == j { k4.basis_vector(i) } else { vec![q().zero(); 4] };
                assert_eq!(k4.basis_product(i, j), &expected);
            }
        }
        assert!(StandardAlgebra::KN(0).build(q()).is_err());
    }

    #[test]
    fn unit_first_presentation() {
        let k2 = alg(StandardAlgebra::KN(2));
        let moved = k2.with_unit_first().unwrap();
        assert_eq!(moved.unit_index(), Some(0));
        assert!(moved.verify_axioms().passed());
    }
}
