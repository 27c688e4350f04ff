//! Isomorphism classes of the 4-dimensional twisted products
//! `k[Z₂] ⊗_τ k[Z₂]` (characteristic not 2), the explicit isomorphisms
//! between their models, and the orbit census.
//!
//! | class | model                 | commutative | radical | center |
//! |-------|-----------------------|-------------|---------|--------|
//! | I     | `k⁴`                  | yes         | 0       | 4      |
//! | IIa   | `M₂(k)`               | no          | 0       | 1      |
//! | IIb   | `kQ/(Q_{≥2})`, round trip | no      | 2       | 1      |
//! | III   | `kQ̃`                  | no          | 1       | 2      |

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{FiniteDimAlgebra, StandardAlgebra};
use crate::error::{Error, Result};
use crate::field::{FieldDescriptor, Scalar};
use crate::matrix::MatrixOfScalars;
use crate::twist::{
    enumerate_twisting_maps, family_member, group_algebra_pair, identify_family, solve_2dim_twist,
    twisting_map_from_coefficients, TwistFamily, TwistFamilyDescriptor,
};

/// Basis-independent invariants of an algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Fingerprint {
    pub dim: usize,
    pub commutative: bool,
    pub center_dim: usize,
    /// `dim J, dim J², …` down to the first zero; empty when `J = 0`.
    pub radical_dims: Vec<usize>,
    pub separable: bool,
}

pub fn fingerprint(a: &FiniteDimAlgebra) -> Result<Fingerprint> {
    Ok(Fingerprint {
        dim: a.dim(),
        commutative: a.is_commutative(),
        center_dim: a.center().dim(),
        radical_dims: a.radical_power_dims()?,
        separable: a.is_separable(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum IsoClassLabel {
    I,
    IIa,
    IIb,
    III,
    #[serde(rename = "unknown")]
    Unknown,
}

impl IsoClassLabel {
    pub const ALL: [IsoClassLabel; 5] =
        [IsoClassLabel::I, IsoClassLabel::IIa, IsoClassLabel::IIb, IsoClassLabel::III, IsoClassLabel::Unknown];

    /// The model algebra of the class.
    pub fn model(&self) -> Option<&'static str> {
        match self {
            IsoClassLabel::I => Some("k⁴ = k[Z₂]⊗k[Z₂]"),
            IsoClassLabel::IIa => Some("M₂(k)"),
            IsoClassLabel::IIb => Some("kQ/(Q≥2), Q the round-trip quiver"),
            IsoClassLabel::III => Some("kQ̃"),
            IsoClassLabel::Unknown => None,
        }
    }
}

impl fmt::Display for IsoClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IsoClassLabel::I => "I",
            IsoClassLabel::IIa => "IIa",
            IsoClassLabel::IIb => "IIb",
            IsoClassLabel::III => "III",
            IsoClassLabel::Unknown => "unknown",
        })
    }
}

impl std::str::FromStr for IsoClassLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IsoClassLabel::ALL
            .into_iter()
            .find(|l| l.to_string() == s)
            .ok_or_else(|| Error::UnknownName(format!("class label {s:?}")))
    }
}

/// Looks up the fingerprint among the four classes. Characteristic 2 and
/// dimensions other than 4 give `Unknown`.
pub fn classify_4dim(a: &FiniteDimAlgebra) -> Result<IsoClassLabel> {
    if a.dim() != 4 || a.field().characteristic() == 2 {
        return Ok(IsoClassLabel::Unknown);
    }
    Ok(label_of(&fingerprint(a)?))
}

fn label_of(fp: &Fingerprint) -> IsoClassLabel {
    let rad = fp.radical_dims.first().copied().unwrap_or(0);
    match (fp.commutative, rad, fp.center_dim) {
        (true, 0, _) => IsoClassLabel::I,
        (false, 0, 1) => IsoClassLabel::IIa,
        (false, 2, 1) => IsoClassLabel::IIb,
        (false, 1, 2) => IsoClassLabel::III,
        _ => IsoClassLabel::Unknown,
    }
}

/// Whether the linear map with matrix `p` (columns: images of the basis of
/// `a` in the basis of `b`) is a unital algebra isomorphism.
pub fn is_isomorphism(p: &MatrixOfScalars, a: &FiniteDimAlgebra, b: &FiniteDimAlgebra) -> Result<bool> {
    if p.rows() != b.dim() || p.cols() != a.dim() {
        return Err(Error::Shape(format!(
            "map must be {}x{}, got {}x{}",
            b.dim(),
            a.dim(),
            p.rows(),
            p.cols()
        )));
    }
    if a.dim() != b.dim() || p.rank() != a.dim() {
        return Ok(false);
    }
    if p.apply(a.unit())? != *b.unit() {
        return Ok(false);
    }
    let images: Vec<_> = (0..a.dim()).map(|i| p.column(i)).collect();
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            if p.apply(a.basis_product(i, j))? != b.mul_coords(&images[i], &images[j]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The explicit isomorphisms between the class models.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PaperIsomorphism {
    /// `A_q → M₂(k)` for `q ≠ ±2`.
    AqToMatrix(Scalar),
    /// `A_{−2} → A_2`.
    AMinus2ToA2,
    /// `R → A_{−2}`, `R` the truncated round-trip algebra.
    RToAMinus2,
}

impl PaperIsomorphism {
    pub fn name(&self) -> String {
        match self {
            PaperIsomorphism::AqToMatrix(q) => format!("aq_to_matrix({q})"),
            PaperIsomorphism::AMinus2ToA2 => "a_minus2_to_a2".into(),
            PaperIsomorphism::RToAMinus2 => "r_to_a_minus2".into(),
        }
    }

    /// Parses `aq_to_matrix(<q>)`, `a_minus2_to_a2`, or `r_to_a_minus2`.
    pub fn parse(name: &str, field: FieldDescriptor) -> Result<Self> {
        let name = name.trim();
        if let Some(q) = name.strip_prefix("aq_to_matrix(").and_then(|s| s.strip_suffix(')')) {
            return Ok(PaperIsomorphism::AqToMatrix(field.parse_scalar(q)?));
        }
        match name {
            "a_minus2_to_a2" => Ok(PaperIsomorphism::AMinus2ToA2),
            "r_to_a_minus2" => Ok(PaperIsomorphism::RToAMinus2),
            _ => Err(Error::UnknownName(format!("isomorphism {name:?}"))),
        }
    }
}

/// `A_q` in the basis `(1, a, b, ab)`, where `a = a⊗1`, `b = 1⊗b` in the
/// twisted product of the line family at `α = q`.
fn aq(field: FieldDescriptor, q: i64) -> Result<FiniteDimAlgebra> {
    StandardAlgebra::Aq(field.from_i64(q)).build(field)
}

/// Returns `(matrix, source, target)` with columns the images of the source
/// basis.
pub fn paper_isomorphism(
    which: &PaperIsomorphism,
    field: FieldDescriptor,
) -> Result<(MatrixOfScalars, FiniteDimAlgebra, FiniteDimAlgebra)> {
    if field.characteristic() == 2 {
        return Err(Error::Hypothesis("the explicit isomorphisms need characteristic ≠ 2".into()));
    }
    let i = |n: i64| field.from_i64(n);
    let r = |n: i64, d: i64| field.from_ratio(n, d).expect("d is invertible outside characteristic 2");
    match which {
        PaperIsomorphism::AqToMatrix(q) => {
            let m = aq_to_matrix_columns(q, &field.from_i64(2))?;
            let a = StandardAlgebra::Aq(q.clone()).build(field)?;
            let target = StandardAlgebra::Matrix2.build(field)?;
            if m.rank() < 4 {
                return Err(Error::InvalidParameter(format!("aq_to_matrix is not bijective at q = {q}")));
            }
            Ok((m, a, target))
        }
        PaperIsomorphism::AMinus2ToA2 => {
            // 1 ↦ 1, a ↦ b − 2a, b ↦ a, ab ↦ −ab
            let cols = vec![
                vec![i(1), i(0), i(0), i(0)],
                vec![i(0), i(-2), i(1), i(0)],
                vec![i(0), i(1), i(0), i(0)],
                vec![i(0), i(0), i(0), i(-1)],
            ];
            Ok((MatrixOfScalars::from_columns(field, 4, &cols)?, aq(field, -2)?, aq(field, 2)?))
        }
        PaperIsomorphism::RToAMinus2 => {
            // e ↦ (1 − a)/2, f ↦ (1 + a)/2, x ↦ (1 + a + b + ab)/4, y ↦ (1 − a − b + ab)/4
            let cols = vec![
                vec![r(1, 2), r(-1, 2), i(0), i(0)],
                vec![r(1, 2), r(1, 2), i(0), i(0)],
                vec![r(1, 4), r(1, 4), r(1, 4), r(1, 4)],
                vec![r(1, 4), r(-1, 4), r(-1, 4), r(1, 4)],
            ];
            let source = StandardAlgebra::TruncatedRoundtrip.build(field)?;
            Ok((MatrixOfScalars::from_columns(field, 4, &cols)?, source, aq(field, -2)?))
        }
    }
}

/// `a ↦ diag(1, −1)`, `b ↦ [[q/2, (2−q)/t], [(2+q)/t, −q/2]]`, extended to
/// `(1, a, b, ab)` in the matrix-unit basis. `t = 2` makes `b² = 1`.
fn aq_to_matrix_columns(q: &Scalar, t: &Scalar) -> Result<MatrixOfScalars> {
    let field = q.field();
    let two = field.from_i64(2);
    let div = |x: &Scalar, y: &Scalar| x.checked_div(y).ok_or_else(|| Error::DivisionByZero(format!("{x}/{y}")));
    let half_q = div(q, &two)?;
    let beta = div(&(&two - q), t)?;
    let gamma = div(&(&two + q), t)?;
    let (z, one) = (field.zero(), field.one());
    let cols = vec![
        vec![one.clone(), z.clone(), z.clone(), one.clone()],
        vec![one.clone(), z.clone(), z.clone(), -&one],
        vec![half_q.clone(), beta.clone(), gamma.clone(), -&half_q],
        vec![half_q.clone(), beta, -&gamma, half_q],
    ];
    MatrixOfScalars::from_columns(field, 4, &cols)
}

/// The `A_q → M₂(k)` assignment with the off-diagonal entries exactly as
/// printed, `(2−q)/4` and `(2+q)/4`. It is not multiplicative: `b` maps to a
/// matrix squaring to `(3q² + 4)/16 · 1`.
pub fn printed_aq_to_matrix(q: &Scalar) -> Result<MatrixOfScalars> {
    aq_to_matrix_columns(q, &q.field().from_i64(4))
}

/// One census member with its class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitEntry {
    pub descriptor: Option<TwistFamilyDescriptor>,
    pub coefficients: [Scalar; 4],
    pub invertible: bool,
    pub label: IsoClassLabel,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitReport {
    pub field: FieldDescriptor,
    pub entries: Vec<OrbitEntry>,
    pub class_counts: BTreeMap<IsoClassLabel, usize>,
}

impl OrbitReport {
    pub fn count(&self, label: IsoClassLabel) -> usize {
        self.class_counts.get(&label).copied().unwrap_or(0)
    }
}

/// Line parameters sampled for the characteristic-0 report.
pub const RATIONAL_LINE_SAMPLES: [i64; 6] = [-2, -1, 0, 1, 2, 3];

/// Classifies every twisting map of `k[Z₂] ⊗ k[Z₂]`: the exhaustive census
/// over a prime field, or the solved families (lines sampled at
/// [`RATIONAL_LINE_SAMPLES`]) over `ℚ`.
pub fn orbit_report(field: FieldDescriptor) -> Result<OrbitReport> {
    let (a, b) = group_algebra_pair(field)?;
    let maps = if field.is_finite() {
        enumerate_twisting_maps(&a, &b)?
    } else {
        let mut maps = Vec::new();
        for family in solve_2dim_twist(field) {
            let params: Vec<Option<Scalar>> = if family.is_line() {
                RATIONAL_LINE_SAMPLES.iter().map(|&x| Some(field.from_i64(x))).collect()
            } else {
                vec![None]
            };
            for p in params {
                maps.push(family_member(&TwistFamilyDescriptor::new(family, p)?, &a, &b)?);
            }
        }
        maps
    };
    let mut entries = maps
        .par_iter()
        .map(|t| -> Result<OrbitEntry> {
            let coefficients = crate::twist::coefficients_of(t);
            Ok(OrbitEntry {
                descriptor: identify_family(field, &coefficients),
                invertible: t.is_invertible(),
                label: classify_4dim(&t.twisted_product()?)?,
                coefficients,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    entries.sort_by_key(sort_key);
    let mut class_counts = BTreeMap::new();
    for e in &entries {
        *class_counts.entry(e.label).or_insert(0) += 1;
    }
    Ok(OrbitReport { field, entries, class_counts })
}

fn sort_key(e: &OrbitEntry) -> (Option<TwistFamily>, Option<i64>, Vec<i64>) {
    (
        e.descriptor.as_ref().map(|d| d.family()),
        e.descriptor.as_ref().and_then(|d| d.parameter()).and_then(|p| p.to_i64()),
        e.coefficients.iter().map(|x| x.to_i64().unwrap_or(0)).collect(),
    )
}

/// The twisted product of a family member.
pub fn product_of(d: &TwistFamilyDescriptor, field: FieldDescriptor) -> Result<FiniteDimAlgebra> {
    let (a, b) = group_algebra_pair(field)?;
    twisting_map_from_coefficients(&a, &b, &d.coefficients(field))?.twisted_product()
}
