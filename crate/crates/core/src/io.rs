//! File formats: algebra and quiver documents (JSON), census and orbit
//! tables (TSV).

use serde::{Deserialize, Serialize};

use crate::algebra::FiniteDimAlgebra;
use crate::classify::{IsoClassLabel, OrbitEntry, OrbitReport};
use crate::error::{Error, Result};
use crate::field::{FieldDescriptor, Scalar};
use crate::quiver::Quiver;
use crate::twist::{
    closed_form_census, coefficients_of, enumerate_twisting_maps, group_algebra_pair, identify_family,
    solve_2dim_twist, TwistFamilyDescriptor,
};

/// On-disk form of a structure-constant algebra. Keys serialize in
/// declaration order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub field: FieldDescriptor,
    pub dim: usize,
    pub basis: Vec<String>,
    pub unit: Vec<String>,
    pub table: Vec<Vec<Vec<String>>>,
}

impl AlgebraFile {
    pub fn from_algebra(a: &FiniteDimAlgebra) -> Self {
        let strings = |v: &[Scalar]| v.iter().map(ToString::to_string).collect();
        AlgebraFile {
            field: a.field(),
            dim: a.dim(),
            basis: a.labels().to_vec(),
            unit: strings(a.unit()),
            table: a.table().iter().map(|row| row.iter().map(|v| strings(v)).collect()).collect(),
        }
    }

    /// Parses the scalars and verifies the algebra axioms.
    pub fn to_algebra(&self) -> Result<FiniteDimAlgebra> {
        let f = self.field;
        if self.basis.len() != self.dim {
            return Err(Error::Parse(format!("dim is {} but {} basis labels given", self.dim, self.basis.len())));
        }
        let parse = |v: &[String]| v.iter().map(|s| f.parse_scalar(s)).collect::<Result<Vec<_>>>();
        let unit = parse(&self.unit)?;
        let table = self
            .table
            .iter()
            .map(|row| row.iter().map(|v| parse(v)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        FiniteDimAlgebra::verified(f, self.basis.clone(), table, unit)
    }
}

pub fn write_algebra(a: &FiniteDimAlgebra) -> String {
    let mut s = serde_json::to_string_pretty(&AlgebraFile::from_algebra(a)).expect("plain data serializes");
    s.push('\n');
    s
}

pub fn read_algebra(text: &str) -> Result<FiniteDimAlgebra> {
    let file: AlgebraFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    file.to_algebra()
}

#[derive(Deserialize)]
struct QuiverFile {
    vertex_count: usize,
    arrows: Vec<(usize, usize)>,
}

pub fn write_quiver(q: &Quiver) -> String {
    let mut s = serde_json::to_string_pretty(q).expect("plain data serializes");
    s.push('\n');
    s
}

/// Parses and range-checks a quiver document.
pub fn read_quiver(text: &str) -> Result<Quiver> {
    let file: QuiverFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    Quiver::new(file.vertex_count, file.arrows)
}

/// One twisting map of `k[Z₂] ⊗ k[Z₂]`: family tag, parameter (`-` for
/// isolated maps), `τ(b⊗a) = p(1⊗1) + q(1⊗b) + r(a⊗1) + s(a⊗b)`, and
/// invertibility. Over `ℚ` the line is a single row with symbolic `α`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRow {
    pub family: String,
    pub parameter: String,
    pub p: String,
    pub q: String,
    pub r: String,
    pub s: String,
    pub invertible: bool,
}

const CENSUS_HEADER: &str = "family\tparameter\tp\tq\tr\ts\tinvertible";

impl CensusRow {
    fn from_map(descriptor: Option<&TwistFamilyDescriptor>, c: &[Scalar; 4], invertible: bool) -> Self {
        CensusRow {
            family: descriptor.map_or("unidentified".into(), |d| d.family().tag().to_string()),
            parameter: descriptor.and_then(|d| d.parameter()).map_or("-".into(), ToString::to_string),
            p: c[0].to_string(),
            q: c[1].to_string(),
            r: c[2].to_string(),
            s: c[3].to_string(),
            invertible,
        }
    }

    fn cells(&self) -> [String; 7] {
        [
            self.family.clone(),
            self.parameter.clone(),
            self.p.clone(),
            self.q.clone(),
            self.r.clone(),
            self.s.clone(),
            self.invertible.to_string(),
        ]
    }

    fn from_cells(cells: &[&str]) -> Result<Self> {
        let invertible = cells[6].parse().map_err(|_| Error::Parse(format!("bad invertible flag {:?}", cells[6])))?;
        Ok(CensusRow {
            family: cells[0].into(),
            parameter: cells[1].into(),
            p: cells[2].into(),
            q: cells[3].into(),
            r: cells[4].into(),
            s: cells[5].into(),
            invertible,
        })
    }
}

/// All twisting maps of `k[Z₂] ⊗ k[Z₂]`: exhaustive over a prime field, the
/// solved families over `ℚ`.
pub fn census(field: FieldDescriptor) -> Result<Vec<CensusRow>> {
    if field.is_finite() {
        let (a, b) = group_algebra_pair(field)?;
        let maps = enumerate_twisting_maps(&a, &b)?;
        let mut rows: Vec<(Vec<i64>, CensusRow)> = maps
            .iter()
            .map(|t| {
                let c = coefficients_of(t);
                let key = c.iter().map(|x| x.to_i64().unwrap_or(0)).collect();
                (key, CensusRow::from_map(identify_family(field, &c).as_ref(), &c, t.is_invertible()))
            })
            .collect();
        rows.sort_by(|x, y| x.0.cmp(&y.0));
        return Ok(rows.into_iter().map(|(_, r)| r).collect());
    }
    let mut rows = Vec::new();
    for family in solve_2dim_twist(field) {
        if family.is_line() {
            let c = family.coefficients(field, Some(&field.zero()));
            rows.push(CensusRow {
                family: family.tag().into(),
                parameter: "α".into(),
                p: "α".into(),
                q: c[1].to_string(),
                r: c[2].to_string(),
                s: c[3].to_string(),
                invertible: true,
            });
        } else {
            let d = TwistFamilyDescriptor::isolated(family)?;
            let c = d.coefficients(field);
            let (a, b) = group_algebra_pair(field)?;
            let t = crate::twist::twisting_map_from_coefficients(&a, &b, &c)?;
            rows.push(CensusRow::from_map(Some(&d), &c, t.is_invertible()));
        }
    }
    Ok(rows)
}

/// Closed-form member count over a prime field, for cross-checking
/// [`census`].
pub fn closed_form_count(field: FieldDescriptor) -> Result<usize> {
    Ok(closed_form_census(field)?.len())
}

pub fn census_tsv(rows: &[CensusRow]) -> String {
    let mut out = format!("{CENSUS_HEADER}\n");
    for r in rows {
        out.push_str(&r.cells().join("\t"));
        out.push('\n');
    }
    out
}

fn split_tsv<'a>(text: &'a str, header: &str, width: usize) -> Result<Vec<Vec<&'a str>>> {
    let mut lines = text.lines();
    if lines.next() != Some(header) {
        return Err(Error::Parse("missing or unexpected TSV header".into()));
    }
    lines
        .filter(|l| !l.is_empty())
        .map(|l| {
            let cells: Vec<&str> = l.split('\t').collect();
            if cells.len() == width {
                Ok(cells)
            } else {
                Err(Error::Parse(format!("expected {width} columns in {l:?}")))
            }
        })
        .collect()
}

pub fn parse_census_tsv(text: &str) -> Result<Vec<CensusRow>> {
    split_tsv(text, CENSUS_HEADER, 7)?.iter().map(|c| CensusRow::from_cells(c)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitRow {
    #[serde(flatten)]
    pub map: CensusRow,
    pub class: IsoClassLabel,
}

impl OrbitRow {
    pub fn from_entry(e: &OrbitEntry) -> Self {
        OrbitRow { map: CensusRow::from_map(e.descriptor.as_ref(), &e.coefficients, e.invertible), class: e.label }
    }
}

pub fn orbit_rows(report: &OrbitReport) -> Vec<OrbitRow> {
    report.entries.iter().map(OrbitRow::from_entry).collect()
}

pub fn orbit_tsv(rows: &[OrbitRow]) -> String {
    let mut out = format!("{CENSUS_HEADER}\tclass\n");
    for r in rows {
        out.push_str(&r.map.cells().join("\t"));
        out.push('\t');
        out.push_str(&r.class.to_string());
        out.push('\n');
    }
    out
}

pub fn parse_orbit_tsv(text: &str) -> Result<Vec<OrbitRow>> {
    split_tsv(text, &format!("{CENSUS_HEADER}\tclass"), 8)?
        .iter()
        .map(|c| Ok(OrbitRow { map: CensusRow::from_cells(&c[..7])?, class: c[7].parse()? }))
        .collect()
}
