//! Twisting maps `τ: B⊗A → A⊗B` and twisted tensor products.
//!
//! Basis convention: the input vector `e_i^B ⊗ e_j^A` has index `i·d_A + j`
//! and the output vector `e_k^A ⊗ e_l^B` has index `k·d_B + l`. This matches
//! the row-major ordering of [`MatrixOfScalars::kron`], so every compatibility
//! condition is a plain matrix identity.

use std::fmt;

use rayon::prelude::*;

use crate::algebra::FiniteDimAlgebra;
use crate::error::{Error, Result};
use crate::field::{FieldDescriptor, Scalar};
use crate::matrix::{MatrixOfScalars, Vector};

/// A verified twisting map. Values of this type exist only after
/// [`verify_twisting`] has accepted the matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistingMap {
    a: FiniteDimAlgebra,
    b: FiniteDimAlgebra,
    matrix: MatrixOfScalars,
}

/// Which of the three twisting conditions hold, with the first failing basis
/// index for each.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistReport {
    pub tw1: bool,
    pub tw2: bool,
    pub tw3: bool,
    /// `(factor, index)`: factor 0 for `τ(b⊗1)`, 1 for `τ(1⊗a)`.
    pub tw1_failure: Option<(usize, usize)>,
    /// `(i, j, k)` for `e_i^B ⊗ e_j^A ⊗ e_k^A`.
    pub tw2_failure: Option<(usize, usize, usize)>,
    /// `(i, j, k)` for `e_i^B ⊗ e_j^B ⊗ e_k^A`.
    pub tw3_failure: Option<(usize, usize, usize)>,
}

impl TwistReport {
    pub fn passed(&self) -> bool {
        self.tw1 && self.tw2 && self.tw3
    }
}

/// Checks the unit, `μ_A` and `μ_B` compatibility conditions for `m`.
pub fn verify_twisting(
    a: &FiniteDimAlgebra,
    b: &FiniteDimAlgebra,
    m: &MatrixOfScalars,
) -> Result<TwistReport> {
    let (da, db) = (a.dim(), b.dim());
    let field = a.field();
    if b.field() != field || m.field() != field {
        return Err(Error::FieldMismatch(a.field().to_string(), m.field().to_string()));
    }
    if m.rows() != da * db || m.cols() != db * da {
        return Err(Error::Shape(format!(
            "twisting matrix must be {}x{}, got {}x{}",
            da * db,
            db * da,
            m.rows(),
            m.cols()
        )));
    }

    let tw1_failure = tw1_failure(a, b, m);

    let ia = MatrixOfScalars::identity(field, da);
    let ib = MatrixOfScalars::identity(field, db);
    let mu_a = a.multiplication_matrix();
    let mu_b = b.multiplication_matrix();

    // τ∘(B⊗μ_A) = (μ_A⊗B)∘(A⊗τ)∘(τ⊗A) on B⊗A⊗A
    let lhs2 = m.mul(&ib.kron(&mu_a)?)?;
    let rhs2 = mu_a.kron(&ib)?.mul(&ia.kron(m)?)?.mul(&m.kron(&ia)?)?;
    let tw2_failure = first_differing_column(&lhs2, &rhs2).map(|c| split3(c, db, da, da));

    // τ∘(μ_B⊗A) = (A⊗μ_B)∘(τ⊗B)∘(B⊗τ) on B⊗B⊗A
    let lhs3 = m.mul(&mu_b.kron(&ia)?)?;
    let rhs3 = ia.kron(&mu_b)?.mul(&m.kron(&ib)?)?.mul(&ib.kron(m)?)?;
    let tw3_failure = first_differing_column(&lhs3, &rhs3).map(|c| split3(c, db, db, da));

    Ok(TwistReport {
        tw1: tw1_failure.is_none(),
        tw2: tw2_failure.is_none(),
        tw3: tw3_failure.is_none(),
        tw1_failure,
        tw2_failure,
        tw3_failure,
    })
}

fn tw1_failure(a: &FiniteDimAlgebra, b: &FiniteDimAlgebra, m: &MatrixOfScalars) -> Option<(usize, usize)> {
    let col = |v: &Vector| MatrixOfScalars::from_columns(a.field(), v.len(), std::slice::from_ref(v)).expect("column");
    let unit_a = col(a.unit());
    let unit_b = col(b.unit());
    for i in 0..b.dim() {
        let e = col(&b.basis_vector(i));
        let input = e.kron(&unit_a).expect("same field");
        let expected = unit_a.kron(&e).expect("same field");
        if m.mul(&input).expect("shape") != expected {
            return Some((0, i));
        }
    }
    for j in 0..a.dim() {
        let e = col(&a.basis_vector(j));
        let input = unit_b.kron(&e).expect("same field");
        let expected = e.kron(&unit_b).expect("same field");
        if m.mul(&input).expect("shape") != expected {
            return Some((1, j));
        }
    }
    None
}

fn first_differing_column(x: &MatrixOfScalars, y: &MatrixOfScalars) -> Option<usize> {
    (0..x.cols()).find(|&c| (0..x.rows()).any(|r| x.get(r, c) != y.get(r, c)))
}

fn split3(c: usize, _d0: usize, d1: usize, d2: usize) -> (usize, usize, usize) {
    (c / (d1 * d2), (c / d2) % d1, c % d2)
}

impl TwistingMap {
    /// Verifies `matrix` and wraps it.
    pub fn new(a: FiniteDimAlgebra, b: FiniteDimAlgebra, matrix: MatrixOfScalars) -> Result<Self> {
        let report = verify_twisting(&a, &b, &matrix)?;
        if !report.passed() {
            return Err(Error::NotTwisting(describe_failure(&report)));
        }
        Ok(TwistingMap { a, b, matrix })
    }

    pub fn source_a(&self) -> &FiniteDimAlgebra {
        &self.a
    }

    pub fn source_b(&self) -> &FiniteDimAlgebra {
        &self.b
    }

    pub fn matrix(&self) -> &MatrixOfScalars {
        &self.matrix
    }

    pub fn field(&self) -> FieldDescriptor {
        self.a.field()
    }

    /// `τ(e_i^B ⊗ e_j^A)` in the `A⊗B` basis.
    pub fn image(&self, i: usize, j: usize) -> Vector {
        self.matrix.column(i * self.a.dim() + j)
    }

    pub fn is_invertible(&self) -> bool {
        self.matrix.rank() == self.a.dim() * self.b.dim()
    }

    /// The twisted tensor product `A ⊗_τ B` on the basis `e_i^A ⊗ e_j^B`.
    pub fn twisted_product(&self) -> Result<FiniteDimAlgebra> {
        let (a, b) = (&self.a, &self.b);
        let (da, db) = (a.dim(), b.dim());
        let field = self.field();
        let n = da * db;
        let mut table = vec![vec![vec![field.zero(); n]; n]; n];
        for i in 0..da {
            for j in 0..db {
                for k in 0..da {
                    for l in 0..db {
                        // (e_i⊗f_j)(e_k⊗f_l) = Σ c_{mn} e_i e_m ⊗ f_n f_l, τ(f_j⊗e_k) = Σ c_{mn} e_m⊗f_n
                        let tau = self.image(j, k);
                        let out = &mut table[i * db + j][k * db + l];
                        for m in 0..da {
                            for nn in 0..db {
                                let c = &tau[m * db + nn];
                                if c.is_zero() {
                                    continue;
                                }
                                let left = a.basis_product(i, m);
                                let right = b.basis_product(nn, l);
                                for (p, x) in left.iter().enumerate() {
                                    if x.is_zero() {
                                        continue;
                                    }
                                    let cx = c * x;
                                    for (q, y) in right.iter().enumerate() {
                                        if !y.is_zero() {
                                            out[p * db + q] += &(&cx * y);
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        let unit: Vector = a
            .unit()
            .iter()
            .flat_map(|x| b.unit().iter().map(move |y| x * y))
            .collect();
        let labels = a
            .labels()
            .iter()
            .flat_map(|x| b.labels().iter().map(move |y| format!("{x}⊗{y}")))
            .collect();
        FiniteDimAlgebra::verified(field, labels, table, unit)
    }

    /// Checks that `x ↦ x⊗1` and `y ↦ 1⊗y` are algebra maps into the twisted
    /// product, on all basis pairs.
    pub fn inclusions_are_algebra_maps(&self) -> Result<bool> {
        let prod = self.twisted_product()?;
        let (a, b) = (&self.a, &self.b);
        let embed_a = |x: &Vector| -> Vector { x.iter().flat_map(|c| b.unit().iter().map(move |u| c * u)).collect() };
        let embed_b = |y: &Vector| -> Vector { a.unit().iter().flat_map(|u| y.iter().map(move |c| u * c)).collect() };
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                let (x, y) = (a.basis_vector(i), a.basis_vector(j));
                if embed_a(&a.mul_coords(&x, &y)) != prod.mul_coords(&embed_a(&x), &embed_a(&y)) {
                    return Ok(false);
                }
            }
        }
        for i in 0..b.dim() {
            for j in 0..b.dim() {
                let (x, y) = (b.basis_vector(i), b.basis_vector(j));
                if embed_b(&b.mul_coords(&x, &y)) != prod.mul_coords(&embed_b(&x), &embed_b(&y)) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

fn describe_failure(r: &TwistReport) -> String {
    let mut parts = Vec::new();
    if let Some((f, i)) = r.tw1_failure {
        parts.push(format!("unit condition fails on {} basis vector {i}", if f == 0 { "B" } else { "A" }));
    }
    if let Some(t) = r.tw2_failure {
        parts.push(format!("A-multiplication condition fails on {t:?}"));
    }
    if let Some(t) = r.tw3_failure {
        parts.push(format!("B-multiplication condition fails on {t:?}"));
    }
    parts.join("; ")
}

/// The flip `b⊗a ↦ a⊗b`.
pub fn flip(a: &FiniteDimAlgebra, b: &FiniteDimAlgebra) -> Result<TwistingMap> {
    if a.field() != b.field() {
        return Err(Error::FieldMismatch(a.field().to_string(), b.field().to_string()));
    }
    let (da, db) = (a.dim(), b.dim());
    let mut m = MatrixOfScalars::zeros(a.field(), da * db, db * da);
    for i in 0..db {
        for j in 0..da {
            m.set(j * db + i, i * da + j, a.field().one());
        }
    }
    TwistingMap::new(a.clone(), b.clone(), m)
}

/// Upper bound on the brute-force search, in bits.
pub const SEARCH_BITS_LIMIT: f64 = 40.0;

/// Every twisting map between `a` and `b` over a prime field, in
/// lexicographic order of the free entries.
///
/// The columns indexed by pairs containing a unit are forced by the unit
/// condition; all remaining columns range over the whole field.
pub fn enumerate_twisting_maps(a: &FiniteDimAlgebra, b: &FiniteDimAlgebra) -> Result<Vec<TwistingMap>> {
    let field = a.field();
    if b.field() != field {
        return Err(Error::FieldMismatch(field.to_string(), b.field().to_string()));
    }
    let p = field.characteristic();
    if p == 0 {
        return Err(Error::InfiniteField);
    }
    let (ua, ub) = match (a.unit_index(), b.unit_index()) {
        (Some(ua), Some(ub)) => (ua, ub),
        _ => {
            return Err(Error::Hypothesis(
                "enumeration needs the unit as a basis vector in both algebras".into(),
            ))
        }
    };
    let (da, db) = (a.dim(), b.dim());
    let bits = ((da - 1) * (db - 1) * da * db) as f64 * (p as f64).log2();
    if bits > SEARCH_BITS_LIMIT {
        return Err(Error::SearchSpaceTooLarge { bits });
    }

    let mut base = MatrixOfScalars::zeros(field, da * db, db * da);
    let mut free_columns = Vec::new();
    for i in 0..db {
        for j in 0..da {
            let col = i * da + j;
            if i == ub {
                base.set(j * db + ub, col, field.one());
            } else if j == ua {
                base.set(ua * db + i, col, field.one());
            } else {
                free_columns.push(col);
            }
        }
    }
    let slots = free_columns.len() * da * db;
    let total = (p as u64).pow(slots as u32);
    let elements = field.elements()?;

    let maps = (0..total)
        .into_par_iter()
        .filter_map(|index| {
            let mut m = base.clone();
            let mut rest = index;
            // last slot varies fastest
            let mut digits = vec![0usize; slots];
            for d in digits.iter_mut().rev() {
                *d = (rest % p as u64) as usize;
                rest /= p as u64;
            }
            for (s, &digit) in digits.iter().enumerate() {
                let col = free_columns[s / (da * db)];
                let row = s % (da * db);
                m.set(row, col, elements[digit].clone());
            }
            TwistingMap::new(a.clone(), b.clone(), m).ok()
        })
        .collect();
    Ok(maps)
}

/// The families of twisting maps `k[Z_2] ⊗ k[Z_2]`, identified by the
/// value `τ(b⊗a) = p(1⊗1) + q(1⊗b) + r(a⊗1) + s(a⊗b)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TwistFamily {
    /// `(0, 0, 0, 1)`.
    Flip,
    /// `(α, 0, 0, −1)`.
    LineCharNe2,
    /// `(−1, 1, 1, 0)`.
    IsolatedIii,
    /// `(1, −1, 1, 0)`.
    IsolatedIv,
    /// `(1, 1, −1, 0)`.
    IsolatedV,
    /// `(−1, −1, −1, 0)`.
    IsolatedVi,
    /// `(α, 0, 0, 1)`, characteristic 2.
    Char2LineI,
    /// `(α, α, α, α + 1)`, characteristic 2.
    Char2LineII,
}

impl TwistFamily {
    pub const ALL: [TwistFamily; 8] = [
        TwistFamily::Flip,
        TwistFamily::LineCharNe2,
        TwistFamily::IsolatedIii,
        TwistFamily::IsolatedIv,
        TwistFamily::IsolatedV,
        TwistFamily::IsolatedVi,
        TwistFamily::Char2LineI,
        TwistFamily::Char2LineII,
    ];

    pub fn is_line(&self) -> bool {
        matches!(self, TwistFamily::LineCharNe2 | TwistFamily::Char2LineI | TwistFamily::Char2LineII)
    }

    pub fn requires_char_2(&self) -> bool {
        matches!(self, TwistFamily::Char2LineI | TwistFamily::Char2LineII)
    }

    pub fn tag(&self) -> &'static str {
        match self {
            TwistFamily::Flip => "flip",
            TwistFamily::LineCharNe2 => "line_char_ne_2",
            TwistFamily::IsolatedIii => "isolated_iii",
            TwistFamily::IsolatedIv => "isolated_iv",
            TwistFamily::IsolatedV => "isolated_v",
            TwistFamily::IsolatedVi => "isolated_vi",
            TwistFamily::Char2LineI => "char2_line_i",
            TwistFamily::Char2LineII => "char2_line_ii",
        }
    }

    /// `(p, q, r, s)` of the member at `alpha` (ignored for isolated maps).
    pub fn coefficients(&self, field: FieldDescriptor, alpha: Option<&Scalar>) -> [Scalar; 4] {
        let i = |n: i64| field.from_i64(n);
        let alpha = || alpha.cloned().unwrap_or_else(|| field.zero());
        match self {
            TwistFamily::Flip => [i(0), i(0), i(0), i(1)],
            TwistFamily::LineCharNe2 => [alpha(), i(0), i(0), i(-1)],
            TwistFamily::IsolatedIii => [i(-1), i(1), i(1), i(0)],
            TwistFamily::IsolatedIv => [i(1), i(-1), i(1), i(0)],
            TwistFamily::IsolatedV => [i(1), i(1), i(-1), i(0)],
            TwistFamily::IsolatedVi => [i(-1), i(-1), i(-1), i(0)],
            TwistFamily::Char2LineI => [alpha(), i(0), i(0), i(1)],
            TwistFamily::Char2LineII => {
                let a = alpha();
                let s = &a + &i(1);
                [a.clone(), a.clone(), a, s]
            }
        }
    }
}

impl fmt::Display for TwistFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl std::str::FromStr for TwistFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TwistFamily::ALL
            .into_iter()
            .find(|f| f.tag() == s)
            .ok_or_else(|| Error::UnknownName(format!("twist family {s:?}")))
    }
}

/// A single member of a family: the family plus its parameter when the
/// family is a line.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwistFamilyDescriptor {
    family: TwistFamily,
    parameter: Option<Scalar>,
}

impl TwistFamilyDescriptor {
    pub fn new(family: TwistFamily, parameter: Option<Scalar>) -> Result<Self> {
        if family.is_line() != parameter.is_some() {
            return Err(Error::InvalidParameter(format!(
                "{family} {} a parameter",
                if family.is_line() { "requires" } else { "takes no" }
            )));
        }
        Ok(TwistFamilyDescriptor { family, parameter })
    }

    pub fn isolated(family: TwistFamily) -> Result<Self> {
        Self::new(family, None)
    }

    pub fn family(&self) -> TwistFamily {
        self.family
    }

    pub fn parameter(&self) -> Option<&Scalar> {
        self.parameter.as_ref()
    }

    pub fn coefficients(&self, field: FieldDescriptor) -> [Scalar; 4] {
        self.family.coefficients(field, self.parameter.as_ref())
    }
}

impl fmt::Display for TwistFamilyDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.parameter {
            Some(p) => write!(f, "{}({p})", self.family),
            None => write!(f, "{}", self.family),
        }
    }
}

/// The eight polynomials in `(p, q, r, s)` whose common zeros are the
/// twisting maps of `k[Z_2] ⊗ k[Z_2]`.
///
/// The first four come from the `A`-multiplication condition on `b⊗a⊗a`, the
/// last four from the `B`-multiplication condition on `b⊗b⊗a`; each list is
/// the coefficient vector of `RHS − LHS` in the basis `1⊗1, 1⊗b, a⊗1, a⊗b`.
pub fn twist_system_residuals(c: &[Scalar; 4]) -> [Scalar; 8] {
    let [p, q, r, s] = c;
    let f = p.field();
    let one = f.one();
    let two = f.from_i64(2);
    [
        &(&(q * p) + r) + &(s * r),
        &(&(q * q) + &(s * s)) - &one,
        &(p + &(q * r)) + &(s * p),
        &(&two * q) * s,
        &(q + &(r * p)) + &(s * q),
        &(p + &(r * q)) + &(s * p),
        &(&(r * r) + &(s * s)) - &one,
        &(&two * r) * s,
    ]
}

/// Closed-form solution of [`twist_system_residuals`].
///
/// Outside characteristic 2 the cross terms force `q·s = r·s = 0`. With
/// `s ≠ 0` one gets `q = r = 0`, `s = ±1` and `p·(1 + s) = 0`: the flip and
/// the line `(α, 0, 0, −1)`. With `s = 0` one gets `q, r ∈ {±1}` and
/// `p = −q·r`: four isolated maps. In characteristic 2 the squares collapse
/// to `q + s = r + s = 1`, leaving `t·(p + t) = 0` for `t = q = r`, which
/// gives the two lines meeting at the flip.
pub fn solve_2dim_twist(field: FieldDescriptor) -> Vec<TwistFamily> {
    if field.characteristic() == 2 {
        vec![TwistFamily::Char2LineI, TwistFamily::Char2LineII]
    } else {
        vec![
            TwistFamily::Flip,
            TwistFamily::LineCharNe2,
            TwistFamily::IsolatedIii,
            TwistFamily::IsolatedIv,
            TwistFamily::IsolatedV,
            TwistFamily::IsolatedVi,
        ]
    }
}

/// Every member of the solved families over a prime field, deduplicated and
/// sorted by `(p, q, r, s)`.
pub fn closed_form_census(field: FieldDescriptor) -> Result<Vec<(TwistFamilyDescriptor, [Scalar; 4])>> {
    let elements = field.elements()?;
    let mut out: Vec<(TwistFamilyDescriptor, [Scalar; 4])> = Vec::new();
    for family in solve_2dim_twist(field) {
        let params: Vec<Option<Scalar>> = if family.is_line() {
            elements.iter().cloned().map(Some).collect()
        } else {
            vec![None]
        };
        for param in params {
            let d = TwistFamilyDescriptor::new(family, param)?;
            let c = d.coefficients(field);
            if !out.iter().any(|(_, e)| *e == c) {
                out.push((d, c));
            }
        }
    }
    out.sort_by_key(|(_, c)| c.iter().map(|x| x.to_i64().unwrap_or(0)).collect::<Vec<_>>());
    Ok(out)
}

/// The first family member (in [`solve_2dim_twist`] order) with the given
/// coefficients.
pub fn identify_family(field: FieldDescriptor, c: &[Scalar; 4]) -> Option<TwistFamilyDescriptor> {
    for family in solve_2dim_twist(field) {
        let param = if family.is_line() { Some(c[0].clone()) } else { None };
        let d = TwistFamilyDescriptor { family, parameter: param };
        if d.coefficients(field) == *c {
            return Some(d);
        }
    }
    None
}

/// `k[Z_2]` twice, labelled `(1, a)` and `(1, b)`.
pub fn group_algebra_pair(field: FieldDescriptor) -> Result<(FiniteDimAlgebra, FiniteDimAlgebra)> {
    let a = crate::algebra::StandardAlgebra::GroupAlgebraZ2.build(field)?;
    let b = a.relabeled(vec!["1".into(), "b".into()])?;
    Ok((a, b))
}

/// Materializes a family member on `k[Z_2] ⊗ k[Z_2]`.
pub fn family_member(
    d: &TwistFamilyDescriptor,
    a: &FiniteDimAlgebra,
    b: &FiniteDimAlgebra,
) -> Result<TwistingMap> {
    let field = a.field();
    if (field.characteristic() == 2) != d.family.requires_char_2() {
        return Err(Error::InvalidParameter(format!(
            "family {} does not exist in characteristic {}",
            d.family,
            field.characteristic()
        )));
    }
    if let Some(p) = &d.parameter {
        if p.field() != field {
            return Err(Error::FieldMismatch(field.to_string(), p.field().to_string()));
        }
    }
    twisting_map_from_coefficients(a, b, &d.coefficients(field))
}

/// The map with `τ(b⊗a) = p(1⊗1) + q(1⊗b) + r(a⊗1) + s(a⊗b)` and the
/// remaining columns fixed by the unit condition.
pub fn twisting_map_from_coefficients(
    a: &FiniteDimAlgebra,
    b: &FiniteDimAlgebra,
    c: &[Scalar; 4],
) -> Result<TwistingMap> {
    if a.dim() != 2 || b.dim() != 2 || a.unit_index() != Some(0) || b.unit_index() != Some(0) {
        return Err(Error::Hypothesis("expected two 2-dimensional algebras with unit e0".into()));
    }
    let field = a.field();
    let one = field.one();
    let z = field.zero();
    let columns = vec![
        vec![one.clone(), z.clone(), z.clone(), z.clone()],
        vec![z.clone(), z.clone(), one.clone(), z.clone()],
        vec![z.clone(), one.clone(), z.clone(), z],
        c.to_vec(),
    ];
    let m = MatrixOfScalars::from_columns(field, 4, &columns)?;
    TwistingMap::new(a.clone(), b.clone(), m)
}

/// `τ(b⊗a)` of a map on `k[Z_2] ⊗ k[Z_2]`.
pub fn coefficients_of(t: &TwistingMap) -> [Scalar; 4] {
    let v = t.image(1, 1);
    [v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone()]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldDescriptor {
        FieldDescriptor::RATIONALS
    }

    fn f(p: u32) -> FieldDescriptor {
        FieldDescriptor::prime(p).unwrap()
    }

    fn coeffs(field: FieldDescriptor, v: [i64; 4]) -> [Scalar; 4] {
        v.map(|x| field.from_i64(x))
    }

    fn raw_matrix(field: FieldDescriptor, c: [i64; 4]) -> MatrixOfScalars {
        MatrixOfScalars::from_i64_rows(
            field,
            &[&[1, 0, 0, c[0]], &[0, 0, 1, c[1]], &[0, 1, 0, c[2]], &[0, 0, 0, c[3]]],
        )
        .unwrap()
    }

    #[test]
    fn verify_examples() {
        let (a, b) = group_algebra_pair(q()).unwrap();
        let fl = flip(&a, &b).unwrap();
        assert!(verify_twisting(&a, &b, fl.matrix()).unwrap().passed());

        let line3 = raw_matrix(q(), [3, 0, 0, -1]);
        assert!(verify_twisting(&a, &b, &line3).unwrap().passed());

        // printed form −(1⊗1) + 0·(a⊗b)
        let printed = raw_matrix(q(), [-1, 0, 0, 0]);
        let r = verify_twisting(&a, &b, &printed).unwrap();
        assert!(r.tw1);
        assert!(!r.tw3);
        assert!(r.tw3_failure.is_some());
        assert!(TwistingMap::new(a.clone(), b.clone(), printed).is_err());
    }

    #[test]
    fn unit_condition_failure_is_located() {
        let (a, b) = group_algebra_pair(q()).unwrap();
        let mut m = raw_matrix(q(), [0, 0, 0, 1]);
        m.set(2, 1, q().zero());
        let r = verify_twisting(&a, &b, &m).unwrap();
        assert_eq!(r.tw1_failure, Some((1, 1)));
        let wrong = MatrixOfScalars::identity(q(), 3);
        assert!(matches!(verify_twisting(&a, &b, &wrong), Err(Error::Shape(_))));
    }

    #[test]
    fn flip_examples() {
        let (a, b) = group_algebra_pair(q()).unwrap();
        let fl = flip(&a, &b).unwrap();
        for k in 0..2 {
            for l in 0..2 {
                assert!(fl.matrix().get(k * 2 + l, l * 2 + k).is_one());
            }
        }
        assert!(fl.twisted_product().unwrap().is_commutative());
        assert!(fl.is_invertible());
        let back = flip(&b, &a).unwrap();
        let id = back.matrix().mul(fl.matrix()).unwrap();
        assert_eq!(id, MatrixOfScalars::identity(q(), 4));
    }

    #[test]
    fn invertibility() {
        let (a, b) = group_algebra_pair(q()).unwrap();
        for alpha in -3..=3 {
            let d = TwistFamilyDescriptor::new(TwistFamily::LineCharNe2, Some(q().from_i64(alpha))).unwrap();
            assert!(family_member(&d, &a, &b).unwrap().is_invertible());
        }
        let iii = family_member(&TwistFamilyDescriptor::isolated(TwistFamily::IsolatedIii).unwrap(), &a, &b).unwrap();
        assert!(!iii.is_invertible());
    }

    #[test]
    fn enumeration_rejects_infinite_and_large_searches() {
        let (a, b) = group_algebra_pair(q()).unwrap();
        assert!(matches!(enumerate_twisting_maps(&a, &b), Err(Error::InfiniteField)));
        let f3 = f(3);
        let m2 = crate::algebra::StandardAlgebra::Aq(f3.zero()).build(f3).unwrap();
        assert!(matches!(enumerate_twisting_maps(&m2, &m2), Err(Error::SearchSpaceTooLarge { .. })));
        let k2 = crate::algebra::StandardAlgebra::KN(2).build(f3).unwrap();
        let (z, _) = group_algebra_pair(f3).unwrap();
        assert!(matches!(enumerate_twisting_maps(&k2, &z), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn small_censuses() {
        for (p, n) in [(2, 3), (3, 8), (5, 10)] {
            let (a, b) = group_algebra_pair(f(p)).unwrap();
            assert_eq!(enumerate_twisting_maps(&a, &b).unwrap().len(), n, "F{p}");
        }
    }

    #[test]
    fn solver_examples() {
        let fams = solve_2dim_twist(q());
        assert_eq!(fams.iter().filter(|f| **f == TwistFamily::Flip).count(), 1);
        assert_eq!(fams.iter().filter(|f| f.is_line()).count(), 1);
        assert_eq!(fams.len(), 6);

        assert_eq!(TwistFamily::IsolatedIii.coefficients(q(), None), coeffs(q(), [-1, 1, 1, 0]));

        let f2 = f(2);
        assert_eq!(solve_2dim_twist(f2), vec![TwistFamily::Char2LineI, TwistFamily::Char2LineII]);
        let zero = f2.zero();
        assert_eq!(
            TwistFamily::Char2LineI.coefficients(f2, Some(&zero)),
            TwistFamily::Char2LineII.coefficients(f2, Some(&zero))
        );
    }

    #[test]
    fn family_member_examples() {
        let (a, b) = group_algebra_pair(q()).unwrap();
        let fl = family_member(&TwistFamilyDescriptor::isolated(TwistFamily::Flip).unwrap(), &a, &b).unwrap();
        assert_eq!(fl, flip(&a, &b).unwrap());

        let f2 = f(2);
        let (a2, b2) = group_algebra_pair(f2).unwrap();
        let d = TwistFamilyDescriptor::new(TwistFamily::Char2LineII, Some(f2.one())).unwrap();
        let t = family_member(&d, &a2, &b2).unwrap();
        assert_eq!(coefficients_of(&t), coeffs(f2, [1, 1, 1, 0]));

        let d = TwistFamilyDescriptor::new(TwistFamily::LineCharNe2, Some(q().from_i64(-1))).unwrap();
        let t = family_member(&d, &a, &b).unwrap();
        assert_eq!(coefficients_of(&t), coeffs(q(), [-1, 0, 0, -1]));

        assert!(TwistFamilyDescriptor::new(TwistFamily::LineCharNe2, None).is_err());
        assert!(TwistFamilyDescriptor::new(TwistFamily::Flip, Some(q().one())).is_err());
        assert!(family_member(&TwistFamilyDescriptor::isolated(TwistFamily::Flip).unwrap(), &a2, &b2).is_err());
    }

    #[test]
    fn residuals_vanish_exactly_on_twisting_maps() {
        for p in [3, 5] {
            let field = f(p);
            let (a, b) = group_algebra_pair(field).unwrap();
            let el = field.elements().unwrap();
            for x in &el {
                for y in &el {
                    for z in &el {
                        for w in &el {
                            let c = [x.clone(), y.clone(), z.clone(), w.clone()];
                            let residual_zero = twist_system_residuals(&c).iter().all(Scalar::is_zero);
                            let m = MatrixOfScalars::from_columns(
                                field,
                                4,
                                &[
                                    coeffs(field, [1, 0, 0, 0]).to_vec(),
                                    coeffs(field, [0, 0, 1, 0]).to_vec(),
                                    coeffs(field, [0, 1, 0, 0]).to_vec(),
                                    c.to_vec(),
                                ],
                            )
                            .unwrap();
                            let ok = verify_twisting(&a, &b, &m).unwrap().passed();
                            assert_eq!(residual_zero, ok);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn inclusions() {
        let (a, b) = group_algebra_pair(q()).unwrap();
        let t = family_member(&TwistFamilyDescriptor::isolated(TwistFamily::IsolatedV).unwrap(), &a, &b).unwrap();
        assert!(t.inclusions_are_algebra_maps().unwrap());
    }
}
