//! Noncommutative duplicates `A ⊗ k[X]/(X² − X)` of `A = k^n`, presented by a
//! pair `(f, δ)` through the rule `X·a = δ(a) + f(a)·X`.
//!
//! Products are laid out on the interleaved basis `(e_1, e_1X, e_2, e_2X, …)`,
//! the order of the twisted tensor product `k^n ⊗_τ k[X]/(X²−X)`. For the
//! round trip this is `(u, uX, v, vX)`.

use serde::{Deserialize, Serialize};

use crate::algebra::{FiniteDimAlgebra, StandardAlgebra};
use crate::error::{Error, Result};
use crate::field::{FieldDescriptor, Scalar};
use crate::matrix::{MatrixOfScalars, Vector};
use crate::twist::TwistingMap;

/// `(f, δ)` over `k^n`, matrices acting on coordinate columns in the
/// idempotent basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DuplicateDatum {
    base: FiniteDimAlgebra,
    f: MatrixOfScalars,
    delta: MatrixOfScalars,
}

/// Which twisted Leibniz rule `δ` satisfies on all basis pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LeibnizVariant {
    /// `δ(xy) = δ(x)f(y) + xδ(y)` and `δ(xy) = δ(x)y + f(x)δ(y)`.
    Both,
    /// Only `δ(xy) = δ(x)f(y) + xδ(y)`.
    RightTwisted,
    /// Only `δ(xy) = δ(x)y + f(x)δ(y)`.
    LeftTwisted,
    Neither,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairReport {
    pub endomorphism: bool,
    pub idempotent_delta: bool,
    pub compatibility: bool,
    pub leibniz_variant: LeibnizVariant,
}

impl PairReport {
    pub fn passed(&self) -> bool {
        self.endomorphism && self.idempotent_delta && self.compatibility
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RoundTripParams {
    a_u: Scalar,
    a_v: Scalar,
}

impl RoundTripParams {
    /// Rejects parameters with `a_u + a_v + 1 ≠ 0`.
    pub fn new(a_u: Scalar, a_v: Scalar) -> Result<Self> {
        if a_u.field() != a_v.field() {
            return Err(Error::FieldMismatch(a_u.field().to_string(), a_v.field().to_string()));
        }
        if !(&(&a_u + &a_v) + &a_u.field().one()).is_zero() {
            return Err(Error::InvalidParameter(format!("a_u + a_v + 1 ≠ 0 for (a_u, a_v) = ({a_u}, {a_v})")));
        }
        Ok(RoundTripParams { a_u, a_v })
    }

    /// The parameters with the given `a_u`, `a_v = −1 − a_u`.
    pub fn from_a_u(a_u: Scalar) -> Self {
        let a_v = -&(&a_u + &a_u.field().one());
        RoundTripParams { a_u, a_v }
    }

    pub fn a_u(&self) -> &Scalar {
        &self.a_u
    }

    pub fn a_v(&self) -> &Scalar {
        &self.a_v
    }

    pub fn field(&self) -> FieldDescriptor {
        self.a_u.field()
    }

    /// `f` swaps `u` and `v`; `δ(u) = a_v v − a_u u`, `δ(v) = a_u u − a_v v`.
    pub fn datum(&self) -> Result<DuplicateDatum> {
        let field = self.field();
        let base = StandardAlgebra::KN(2).build(field)?.relabeled(vec!["u".into(), "v".into()])?;
        let f = MatrixOfScalars::from_i64_rows(field, &[&[0, 1], &[1, 0]])?;
        let (au, av) = (&self.a_u, &self.a_v);
        let delta = MatrixOfScalars::from_rows(field, vec![vec![-au, au.clone()], vec![av.clone(), -av]])?;
        DuplicateDatum::new(base, f, delta)
    }
}

impl DuplicateDatum {
    /// Checks that `base` is `k^n` in its idempotent basis, the matrix shapes,
    /// and the conditions of [`verify_pair`].
    pub fn new(base: FiniteDimAlgebra, f: MatrixOfScalars, delta: MatrixOfScalars) -> Result<Self> {
        let d = Self::unchecked(base, f, delta)?;
        let report = verify_pair(&d);
        if !report.passed() {
            return Err(Error::Hypothesis(format!("not an interlacing pair: {report:?}")));
        }
        Ok(d)
    }

    /// Shape and base checks only; the pair conditions may fail.
    pub fn unchecked(base: FiniteDimAlgebra, f: MatrixOfScalars, delta: MatrixOfScalars) -> Result<Self> {
        let n = base.dim();
        let field = base.field();
        let kn = StandardAlgebra::KN(n).build(field)?;
        if base.table() != kn.table() || base.unit() != kn.unit() {
            return Err(Error::Hypothesis("the base algebra must be k^n in its idempotent basis".into()));
        }
        for (name, m) in [("f", &f), ("δ", &delta)] {
            if m.field() != field {
                return Err(Error::FieldMismatch(field.to_string(), m.field().to_string()));
            }
            if m.rows() != n || m.cols() != n {
                return Err(Error::Shape(format!("{name} must be {n}x{n}, got {}x{}", m.rows(), m.cols())));
            }
        }
        Ok(DuplicateDatum { base, f, delta })
    }

    pub fn base(&self) -> &FiniteDimAlgebra {
        &self.base
    }

    pub fn f(&self) -> &MatrixOfScalars {
        &self.f
    }

    pub fn delta(&self) -> &MatrixOfScalars {
        &self.delta
    }

    pub fn n(&self) -> usize {
        self.base.dim()
    }

    pub fn field(&self) -> FieldDescriptor {
        self.base.field()
    }

    pub fn to_record(&self) -> DuplicateRecord {
        let rows = |m: &MatrixOfScalars| -> Vec<Vec<String>> {
            (0..m.rows()).map(|i| m.row(i).iter().map(ToString::to_string).collect()).collect()
        };
        DuplicateRecord { field: self.field(), f: rows(&self.f), delta: rows(&self.delta) }
    }

    pub fn from_record(record: &DuplicateRecord) -> Result<Self> {
        let field = record.field;
        let parse = |rows: &[Vec<String>]| -> Result<MatrixOfScalars> {
            let rows = rows
                .iter()
                .map(|r| r.iter().map(|s| field.parse_scalar(s)).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            MatrixOfScalars::from_rows(field, rows)
        };
        let f = parse(&record.f)?;
        let base = StandardAlgebra::KN(f.rows()).build(field)?;
        DuplicateDatum::new(base, f, parse(&record.delta)?)
    }
}

/// Serialized form of a [`DuplicateDatum`]: two square matrices (row lists)
/// and the field tag.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DuplicateRecord {
    pub field: FieldDescriptor,
    pub f: Vec<Vec<String>>,
    pub delta: Vec<Vec<String>>,
}

/// Checks that `f` is a unital algebra endomorphism, `δ² = δ`, and
/// `f = f² + δf + fδ`, and reports the Leibniz rule `δ` follows.
pub fn verify_pair(d: &DuplicateDatum) -> PairReport {
    let a = &d.base;
    let n = d.n();
    let apply = |m: &MatrixOfScalars, x: &Vector| m.apply(x).expect("square matrix of size n");
    let mul = |x: &Vector, y: &Vector| a.mul_coords(x, y);
    let add = |x: &Vector, y: &Vector| -> Vector { x.iter().zip(y).map(|(p, q)| p + q).collect() };

    let mut endomorphism = apply(&d.f, a.unit()) == *a.unit();
    let mut right = true;
    let mut left = true;
    for i in 0..n {
        for j in 0..n {
            let (x, y) = (a.basis_vector(i), a.basis_vector(j));
            let (fx, fy) = (apply(&d.f, &x), apply(&d.f, &y));
            let (dx, dy) = (apply(&d.delta, &x), apply(&d.delta, &y));
            let xy = mul(&x, &y);
            endomorphism &= apply(&d.f, &xy) == mul(&fx, &fy);
            let dxy = apply(&d.delta, &xy);
            right &= dxy == add(&mul(&dx, &fy), &mul(&x, &dy));
            left &= dxy == add(&mul(&dx, &y), &mul(&fx, &dy));
        }
    }

    let sq = |m: &MatrixOfScalars, k: &MatrixOfScalars| m.mul(k).expect("square");
    let idempotent_delta = sq(&d.delta, &d.delta) == d.delta;
    let sum = sq(&d.f, &d.f)
        .add(&sq(&d.delta, &d.f))
        .and_then(|s| s.add(&sq(&d.f, &d.delta)))
        .expect("square");
    let compatibility = sum == d.f;

    let leibniz_variant = match (right, left) {
        (true, true) => LeibnizVariant::Both,
        (true, false) => LeibnizVariant::RightTwisted,
        (false, true) => LeibnizVariant::LeftTwisted,
        (false, false) => LeibnizVariant::Neither,
    };
    PairReport { endomorphism, idempotent_delta, compatibility, leibniz_variant }
}

/// The duplicate on `(e_1, e_1X, …, e_nX)`; fails if the pair conditions or
/// the algebra axioms fail.
pub fn build_duplicate(d: &DuplicateDatum) -> Result<FiniteDimAlgebra> {
    let report = verify_pair(d);
    if !report.passed() {
        return Err(Error::Hypothesis(format!("not an interlacing pair: {report:?}")));
    }
    let alg = duplicate_table_unchecked(d)?;
    alg.ensure_axioms()?;
    Ok(alg)
}

/// The product defined by `X·a = δ(a) + f(a)X` and `X² = X`, without any
/// checks: `e_iX·e_j = e_iδ(e_j) + e_if(e_j)X` and
/// `e_iX·e_jX = e_i(δ(e_j) + f(e_j))X`.
pub fn duplicate_table_unchecked(d: &DuplicateDatum) -> Result<FiniteDimAlgebra> {
    let n = d.n();
    let field = d.field();
    let a = &d.base;
    let dim = 2 * n;
    let mut table = vec![vec![vec![field.zero(); dim]; dim]; dim];
    for i in 0..n {
        for j in 0..n {
            let ej = a.basis_vector(j);
            let ei = a.basis_vector(i);
            let head = a.mul_coords(&ei, &ej);
            let delta_part = a.mul_coords(&ei, &d.delta.apply(&ej)?);
            let f_part = a.mul_coords(&ei, &d.f.apply(&ej)?);
            for k in 0..n {
                table[2 * i][2 * j][2 * k] = head[k].clone();
                table[2 * i][2 * j + 1][2 * k + 1] = head[k].clone();
                table[2 * i + 1][2 * j][2 * k] = delta_part[k].clone();
                table[2 * i + 1][2 * j][2 * k + 1] = f_part[k].clone();
                table[2 * i + 1][2 * j + 1][2 * k + 1] = &delta_part[k] + &f_part[k];
            }
        }
    }
    let unit = (0..dim).map(|k| if k % 2 == 0 { field.one() } else { field.zero() }).collect();
    FiniteDimAlgebra::new(field, interleaved_labels(a.labels()), table, unit)
}

fn interleaved_labels(base: &[String]) -> Vec<String> {
    base.iter().flat_map(|l| [l.clone(), format!("{l}X")]).collect()
}

/// The round-trip duplicate, built from its `(f, δ)` datum.
pub fn roundtrip_duplicate(p: &RoundTripParams) -> Result<FiniteDimAlgebra> {
    build_duplicate(&p.datum()?)
}

/// The displayed round-trip table on `(u, uX, v, vX)`, taken literally for
/// arbitrary `(a_u, a_v)` and left unverified.
pub fn roundtrip_table_unchecked(a_u: &Scalar, a_v: &Scalar) -> Result<FiniteDimAlgebra> {
    let field = a_u.field();
    if a_v.field() != field {
        return Err(Error::FieldMismatch(field.to_string(), a_v.field().to_string()));
    }
    let (u, ux, v, vx) = (0, 1, 2, 3);
    let one = field.one();
    let mut table = vec![vec![vec![field.zero(); 4]; 4]; 4];
    let mut put = |i: usize, j: usize, terms: &[(Scalar, usize)]| {
        for (c, k) in terms {
            table[i][j][*k] = c.clone();
        }
    };
    put(u, u, &[(one.clone(), u)]);
    put(u, ux, &[(one.clone(), ux)]);
    put(ux, u, &[(-a_u, u)]);
    put(ux, ux, &[(-a_u, ux)]);
    put(ux, v, &[(a_u.clone(), u), (one.clone(), ux)]);
    put(ux, vx, &[(-a_v, ux)]);
    put(v, v, &[(one.clone(), v)]);
    put(v, vx, &[(one.clone(), vx)]);
    put(vx, u, &[(a_v.clone(), v), (one.clone(), vx)]);
    put(vx, ux, &[(-a_u, vx)]);
    put(vx, v, &[(-a_v, v)]);
    put(vx, vx, &[(-a_v, vx)]);
    let unit = vec![one.clone(), field.zero(), one, field.zero()];
    FiniteDimAlgebra::new(field, ["u", "uX", "v", "vX"].map(String::from).to_vec(), table, unit)
}

/// `τ: k[X]/(X²−X) ⊗ k^n → k^n ⊗ k[X]/(X²−X)` with `τ(1⊗a) = a⊗1` and
/// `τ(X⊗a) = δ(a)⊗1 + f(a)⊗X`.
pub fn duplicate_to_twisting_map(d: &DuplicateDatum) -> Result<TwistingMap> {
    let report = verify_pair(d);
    if !report.passed() {
        return Err(Error::Hypothesis(format!("not an interlacing pair: {report:?}")));
    }
    let n = d.n();
    let field = d.field();
    let b = StandardAlgebra::IdempotentLine.build(field)?;
    let mut m = MatrixOfScalars::zeros(field, 2 * n, 2 * n);
    for j in 0..n {
        let ej = d.base.basis_vector(j);
        let (dj, fj) = (d.delta.apply(&ej)?, d.f.apply(&ej)?);
        // input 1⊗e_j has index j, X⊗e_j has index n + j; output e_k⊗1 is 2k, e_k⊗X is 2k+1
        m.set(2 * j, j, field.one());
        for k in 0..n {
            m.set(2 * k, n + j, dj[k].clone());
            m.set(2 * k + 1, n + j, fj[k].clone());
        }
    }
    TwistingMap::new(d.base.clone(), b, m)
}

/// The four unital algebra endomorphisms of `k²` in the basis `(a, b)`:
/// identity, swap, `a ↦ a+b, b ↦ 0`, and `a ↦ 0, b ↦ a+b`.
pub fn standard_endomorphisms(field: FieldDescriptor) -> [MatrixOfScalars; 4] {
    let m = |rows: &[&[i64]]| MatrixOfScalars::from_i64_rows(field, rows).expect("2x2");
    [
        m(&[&[1, 0], &[0, 1]]),
        m(&[&[0, 1], &[1, 0]]),
        m(&[&[1, 0], &[1, 0]]),
        m(&[&[0, 1], &[0, 1]]),
    ]
}

/// `(a_u, a_v)` pairs over a finite field for which the product is
/// associative; `displayed` selects the literal table instead of the
/// `(f, δ)` rule.
pub fn roundtrip_associativity_scan(field: FieldDescriptor, displayed: bool) -> Result<Vec<(Scalar, Scalar)>> {
    use rayon::prelude::*;
    let elements = field.elements()?;
    let pairs: Vec<(Scalar, Scalar)> = elements
        .iter()
        .flat_map(|x| elements.iter().map(move |y| (x.clone(), y.clone())))
        .collect();
    let mut hits = pairs
        .into_par_iter()
        .map(|(au, av)| -> Result<Option<(Scalar, Scalar)>> {
            let alg = if displayed {
                roundtrip_table_unchecked(&au, &av)?
            } else {
                let p = RoundTripParams { a_u: au.clone(), a_v: av.clone() };
                let base = StandardAlgebra::KN(2).build(field)?.relabeled(vec!["u".into(), "v".into()])?;
                let f = MatrixOfScalars::from_i64_rows(field, &[&[0, 1], &[1, 0]])?;
                let delta =
                    MatrixOfScalars::from_rows(field, vec![vec![-&p.a_u, p.a_u.clone()], vec![p.a_v.clone(), -&p.a_v]])?;
                duplicate_table_unchecked(&DuplicateDatum::unchecked(base, f, delta)?)?
            };
            Ok(alg.verify_axioms().passed().then_some((au, av)))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect::<Vec<_>>();
    hits.sort_by_key(|(x, y)| (x.to_i64(), y.to_i64()));
    Ok(hits)
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldDescriptor = FieldDescriptor::RATIONALS;

    fn params(au: i64) -> RoundTripParams {
        RoundTripParams::from_a_u(Q.from_i64(au))
    }

    #[test]
    fn trivial_pair() {
        let base = StandardAlgebra::KN(2).build(Q).unwrap();
        let d = DuplicateDatum::new(base, MatrixOfScalars::identity(Q, 2), MatrixOfScalars::zeros(Q, 2, 2)).unwrap();
        let r = verify_pair(&d);
        assert!(r.passed());
        assert_eq!(r.leibniz_variant, LeibnizVariant::Both);
        let alg = build_duplicate(&d).unwrap();
        assert!(alg.is_commutative());
        assert_eq!(alg.jacobson_radical().unwrap().dim(), 0);
        assert_eq!(alg.center().dim(), 4);
        let t = duplicate_to_twisting_map(&d).unwrap();
        assert_eq!(t, crate::twist::flip(d.base(), &StandardAlgebra::IdempotentLine.build(Q).unwrap()).unwrap());
    }

    #[test]
    fn swap_without_delta_fails_compatibility() {
        let base = StandardAlgebra::KN(2).build(Q).unwrap();
        let f = standard_endomorphisms(Q)[1].clone();
        let d = DuplicateDatum::unchecked(base.clone(), f.clone(), MatrixOfScalars::zeros(Q, 2, 2)).unwrap();
        let r = verify_pair(&d);
        assert!(r.endomorphism && r.idempotent_delta && !r.compatibility);
        assert!(DuplicateDatum::new(base, f, MatrixOfScalars::zeros(Q, 2, 2)).is_err());
    }

    #[test]
    fn roundtrip_pair_and_leibniz_rule() {
        for au in [0, -1, 1, 2] {
            let d = params(au).datum().unwrap();
            let r = verify_pair(&d);
            assert!(r.passed());
            assert!(matches!(r.leibniz_variant, LeibnizVariant::LeftTwisted | LeibnizVariant::Both));
        }
        assert!(RoundTripParams::new(Q.from_i64(1), Q.from_i64(1)).is_err());
    }

    #[test]
    fn standard_endomorphisms_are_endomorphisms() {
        let [f1, f2, f3, f4] = standard_endomorphisms(Q);
        assert_eq!(f2.mul(&f2).unwrap(), f1);
        assert_eq!(f3.mul(&f3).unwrap(), f3);
        assert_eq!(f4.mul(&f4).unwrap(), f4);
        assert_eq!(f3.apply(&[Q.one(), Q.zero()]).unwrap(), vec![Q.one(), Q.one()]);
        let base = StandardAlgebra::KN(2).build(Q).unwrap();
        for f in standard_endomorphisms(Q) {
            let d = DuplicateDatum::unchecked(base.clone(), f, MatrixOfScalars::zeros(Q, 2, 2)).unwrap();
            assert!(verify_pair(&d).endomorphism);
        }
    }

    #[test]
    fn table_matches_display_under_constraint() {
        for au in [0, -1, 1, 2, -3] {
            let p = params(au);
            let built = roundtrip_duplicate(&p).unwrap();
            let shown = roundtrip_table_unchecked(p.a_u(), p.a_v()).unwrap();
            assert_eq!(built.table(), shown.table(), "a_u = {au}");
            assert_eq!(built.labels(), shown.labels());
        }
    }

    #[test]
    fn displayed_products() {
        let p = params(1);
        let alg = roundtrip_duplicate(&p).unwrap();
        let (au, av) = (p.a_u().clone(), p.a_v().clone());
        let e = |i| alg.basis_vector(i);
        let z = Q.zero();
        // uX·v = a_u u + uX
        assert_eq!(alg.mul_coords(&e(1), &e(2)), vec![au.clone(), Q.one(), z.clone(), z.clone()]);
        let vxu = alg.mul_coords(&e(3), &e(0));
        let uxv = alg.mul_coords(&e(1), &e(2));
        let aa = &au * &av;
        assert_eq!(alg.mul_coords(&vxu, &uxv), vec![z.clone(), z.clone(), aa.clone(), z.clone()]);
        assert_eq!(alg.mul_coords(&uxv, &vxu), vec![aa, z.clone(), z.clone(), z]);
    }

    #[test]
    fn twisting_map_reproduces_duplicate() {
        for au in [0, 1] {
            let d = params(au).datum().unwrap();
            let t = duplicate_to_twisting_map(&d).unwrap();
            assert!(t.is_invertible());
            let prod = t.twisted_product().unwrap();
            assert_eq!(prod.table(), build_duplicate(&d).unwrap().table());
        }
    }

    #[test]
    fn record_round_trip() {
        let d = params(2).datum().unwrap();
        let json = serde_json::to_string(&d.to_record()).unwrap();
        let back: DuplicateRecord = serde_json::from_str(&json).unwrap();
        assert_eq!(DuplicateDatum::from_record(&back).unwrap().f(), d.f());
    }

    #[test]
    fn associativity_scan_over_f5() {
        let f5 = FieldDescriptor::prime(5).unwrap();
        let hits = roundtrip_associativity_scan(f5, false).unwrap();
        assert_eq!(hits.len(), 5);
        assert!(hits.iter().all(|(x, y)| (&(x + y) + &f5.one()).is_zero()));
        // the displayed table has the constraint already substituted in
        assert_eq!(roundtrip_associativity_scan(f5, true).unwrap().len(), 25);
    }
}
