//! One-shot reproduction of every claim the toolkit checks: census,
//! classification, explicit isomorphisms, duplicates, Hochschild values,
//! method agreement, closed forms, the counterexample, and the acyclic/cyclic
//! dichotomy.

use std::fmt::Write as _;

use serde::Serialize;

use crate::algebra::StandardAlgebra;
use crate::classify::{classify_4dim, is_isomorphism, orbit_report, paper_isomorphism, IsoClassLabel, PaperIsomorphism};
use crate::duplicate::{roundtrip_associativity_scan, roundtrip_duplicate, roundtrip_table_unchecked, RoundTripParams};
use crate::errata::{errata, Erratum, READING_NOTES};
use crate::error::Result;
use crate::field::FieldDescriptor;
use crate::hochschild::{basis_idempotents, crown_formula, hh_bar, hh_e_complex, hh_rsz, thm_formula, verify_guccione_counterexample};
use crate::io::{census, closed_form_count};
use crate::quiver::standard_quiver;
use crate::twist::TwistFamily;

#[derive(Clone, Debug, Default)]
pub struct ReproduceOptions {
    /// Fields added to the census and classification runs.
    pub extra_fields: Vec<FieldDescriptor>,
    /// Skip every bar-complex computation.
    pub skip_bar: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub id: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReproduceReport {
    pub checks: Vec<Check>,
    pub errata: Vec<Erratum>,
    pub notes: Vec<String>,
}

impl ReproduceReport {
    /// All checks pass and every erratum is confirmed by computation.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed) && self.errata.iter().all(|e| e.confirmed)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let _ = writeln!(out, "{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.id, c.detail);
        }
        let _ = writeln!(out, "\nerrata ({}):", self.errata.len());
        for e in &self.errata {
            let status = if e.confirmed { "confirmed" } else { "NOT CONFIRMED" };
            let _ = writeln!(out, "- {} [{status}, {}] {}", e.id, e.adjudicated_by, e.subject);
            let _ = writeln!(out, "    printed:  {}", e.printed);
            let _ = writeln!(out, "    computed: {}", e.computed);
        }
        let _ = writeln!(out, "\nreadings:");
        for n in &self.notes {
            let _ = writeln!(out, "- {n}");
        }
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        let _ = writeln!(out, "\n{} checks, {failed} failed, {} errata", self.checks.len(), self.errata.len());
        out
    }
}

struct Collector {
    checks: Vec<Check>,
}

impl Collector {
    fn record(&mut self, id: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check { id: id.into(), passed, detail: detail.into() });
    }

    /// Records `Err` as a failed check instead of aborting the run.
    fn run(&mut self, id: &str, f: impl FnOnce() -> Result<(bool, String)>) {
        match f() {
            Ok((passed, detail)) => self.record(id, passed, detail),
            Err(e) => self.record(id, false, format!("error: {e}")),
        }
    }
}

fn prime(p: u32) -> FieldDescriptor {
    FieldDescriptor::prime(p).expect("small primes are valid")
}

fn expected_census_size(f: FieldDescriptor) -> usize {
    match f.characteristic() {
        2 => 3,
        p => p as usize + 5,
    }
}

pub fn reproduce(opts: &ReproduceOptions) -> Result<ReproduceReport> {
    let q = FieldDescriptor::RATIONALS;
    let mut fields = vec![prime(2), prime(3), prime(5)];
    for f in &opts.extra_fields {
        if f.is_finite() && !fields.contains(f) {
            fields.push(*f);
        }
    }
    let mut c = Collector { checks: Vec::new() };

    for &f in &fields {
        c.run(&format!("census/{f}"), || {
            let rows = census(f)?;
            let closed = closed_form_count(f)?;
            let want = expected_census_size(f);
            Ok((rows.len() == want && closed == want, format!("{} maps by enumeration, {closed} in closed form, expected {want}", rows.len())))
        });
    }
    c.run("census/Q", || {
        let rows = census(q)?;
        let isolated = rows.iter().filter(|r| !r.invertible).count();
        Ok((rows.len() == 6 && isolated == 4, format!("{} family rows, {isolated} non-invertible isolated maps", rows.len())))
    });
    for &f in fields.iter().filter(|f| f.characteristic() != 2) {
        c.run(&format!("census-structure/{f}"), || {
            let rows = census(f)?;
            let count = |fam: TwistFamily| rows.iter().filter(|r| r.family == fam.tag()).count();
            let isolated = [TwistFamily::IsolatedIii, TwistFamily::IsolatedIv, TwistFamily::IsolatedV, TwistFamily::IsolatedVi];
            let isolated_ok = isolated.iter().all(|&x| count(x) == 1)
                && rows.iter().filter(|r| r.family.starts_with("isolated")).all(|r| !r.invertible);
            let line = rows.iter().filter(|r| r.family == TwistFamily::LineCharNe2.tag()).collect::<Vec<_>>();
            let line_ok = line.iter().all(|r| r.invertible) && line.len() == f.characteristic() as usize;
            Ok((
                count(TwistFamily::Flip) == 1 && isolated_ok && line_ok,
                format!("1 flip, 4 isolated non-invertible, {} invertible line members", line.len()),
            ))
        });
    }

    let mut class_fields: Vec<FieldDescriptor> = vec![prime(3), prime(5)];
    class_fields.extend(fields.iter().filter(|f| f.characteristic() > 5));
    for f in class_fields {
        c.run(&format!("classify/{f}"), || {
            let r = orbit_report(f)?;
            let counts = IsoClassLabel::ALL.map(|l| r.count(l));
            let p = f.characteristic() as usize;
            // p line members, two of them at α = ±2
            let want = [1, p - 2, 2, 4, 0];
            Ok((counts == want, format!("I/IIa/IIb/III/unknown = {counts:?}")))
        });
    }
    c.run("classify/Q", || {
        let r = orbit_report(q)?;
        let mut ok = true;
        for e in &r.entries {
            if let Some(alpha) = e.descriptor.as_ref().and_then(|d| d.parameter()).and_then(|p| p.to_i64()) {
                let want = if alpha.abs() == 2 { IsoClassLabel::IIb } else { IsoClassLabel::IIa };
                ok &= e.label == want;
            }
        }
        let counts = IsoClassLabel::ALL.map(|l| r.count(l));
        Ok((ok && counts == [1, 4, 2, 4, 0], format!("α = ±2 → IIb, α ∈ {{−1, 0, 1, 3}} → IIa; counts {counts:?}")))
    });
    c.run("classify/F2", || {
        let r = orbit_report(prime(2))?;
        Ok((r.count(IsoClassLabel::Unknown) == r.entries.len(), "characteristic 2: all labels unknown".into()))
    });

    c.run("isomorphisms", || {
        let mut ok = true;
        let mut names = Vec::new();
        let mut fixtures: Vec<PaperIsomorphism> = [0, 1, 3].iter().map(|&x| PaperIsomorphism::AqToMatrix(q.from_i64(x))).collect();
        fixtures.extend([PaperIsomorphism::AMinus2ToA2, PaperIsomorphism::RToAMinus2]);
        for which in fixtures {
            let (m, a, b) = paper_isomorphism(&which, q)?;
            ok &= is_isomorphism(&m, &a, &b)?;
            names.push(which.name());
        }
        let singular = [2, -2].iter().all(|&x| paper_isomorphism(&PaperIsomorphism::AqToMatrix(q.from_i64(x)), q).is_err());
        let (phi, r, _) = paper_isomorphism(&PaperIsomorphism::RToAMinus2, q)?;
        let (g, _, a2) = paper_isomorphism(&PaperIsomorphism::AMinus2ToA2, q)?;
        let composed = is_isomorphism(&g.mul(&phi)?, &r, &a2)?;
        Ok((ok && singular && composed, format!("{} verified; aq_to_matrix rejected at q = ±2; R → A₂ by composition", names.join(", "))))
    });

    c.run("duplicate", || {
        let hits = roundtrip_associativity_scan(prime(5), false)?;
        let scan_ok = hits.len() == 5 && hits.iter().all(|(x, y)| (&(x + y) + &prime(5).one()).is_zero());
        let mut table_ok = true;
        let mut split_ok = true;
        for (au, av) in [(0, -1), (-1, 0), (1, -2), (2, -3)] {
            let p = RoundTripParams::new(q.from_i64(au), q.from_i64(av))?;
            let alg = roundtrip_duplicate(&p)?;
            table_ok &= alg.table() == roundtrip_table_unchecked(p.a_u(), p.a_v())?.table();
            let want = if au * av == 0 { IsoClassLabel::IIb } else { IsoClassLabel::IIa };
            split_ok &= classify_4dim(&alg)? == want;
        }
        Ok((
            scan_ok && table_ok && split_ok,
            format!("{} associative pairs over F5, all on a_u + a_v + 1 = 0; table matches; IIb iff a_u·a_v = 0", hits.len()),
        ))
    });

    c.run("hh-values", || {
        let mut parts = Vec::new();
        let mut ok = true;
        let qt = standard_quiver("qtilde")?;
        let rt = standard_quiver("roundtrip")?;
        let iii = hh_rsz(&qt, q, 5, "qtilde")?.dims;
        ok &= iii == [2, 0, 0, 0, 0, 0];
        parts.push(format!("III rsz {iii:?}"));
        let iib = hh_rsz(&rt, q, 10, "roundtrip")?.dims;
        ok &= iib == [1; 11];
        parts.push(format!("IIb rsz {iib:?}"));
        if !opts.skip_bar {
            let bar = |a: StandardAlgebra, n| -> Result<Vec<usize>> { Ok(hh_bar(&a.build(q)?, n, &a.name())?.dims) };
            let i = bar(StandardAlgebra::KN(4), 3)?;
            let iia = bar(StandardAlgebra::Matrix2, 3)?;
            let iib_bar = bar(StandardAlgebra::TruncatedRoundtrip, 4)?;
            let iii_bar = bar(StandardAlgebra::QtildePathAlgebra, 3)?;
            ok &= i == [4, 0, 0, 0] && iia == [1, 0, 0, 0] && iib_bar == [1; 5] && iii_bar == [2, 0, 0, 0];
            parts.push(format!("I bar {i:?}, IIa bar {iia:?}, IIb bar {iib_bar:?}, III bar {iii_bar:?}"));
        }
        Ok((ok, parts.join("; ")))
    });

    for name in ["roundtrip", "qtilde", "four_points", "loop", "kronecker", "crown(3)"] {
        c.run(&format!("cross-validation/{name}"), || {
            let quiver = standard_quiver(name)?;
            let a = quiver.truncated_path_algebra(q)?;
            let top = 4;
            let rsz = hh_rsz(&quiver, q, top, name)?.dims;
            let e = hh_e_complex(&a, &basis_idempotents(&a), top, name)?.dims;
            let mut ok = rsz == e;
            let mut detail = format!("rsz = e-complex = {rsz:?}");
            if !opts.skip_bar {
                let n = crate::hochschild::bar_degree_limit(a.dim(), crate::hochschild::budget_from_env(), top).unwrap_or(0);
                let bar = hh_bar(&a, n, name)?.dims;
                ok &= bar[..] == rsz[..=n];
                detail.push_str(&format!(", bar agrees through degree {n}"));
            }
            Ok((ok, detail))
        });
    }

    c.run("thm-formula", || {
        let mut ok = true;
        for name in ["kronecker", "linear(2)", "linear(3)", "loop_arrow"] {
            let quiver = standard_quiver(name)?;
            let rsz = hh_rsz(&quiver, q, 6, name)?.dims;
            ok &= (0..=6).all(|n| thm_formula(&quiver, n) == Some(rsz[n] as i64));
        }
        Ok((ok, "matches rsz on kronecker, linear(2), linear(3), loop_arrow in degrees 0..6".into()))
    });
    c.run("crown-formula", || {
        let mut ok = true;
        for (cc, top) in [(2, 10), (3, 9)] {
            let rsz = hh_rsz(&standard_quiver(&format!("crown({cc})"))?, q, top, "crown")?.dims;
            ok &= (0..=top).all(|n| crown_formula(cc, n, 0).ok() == Some(rsz[n]));
        }
        Ok((ok, "reading \"n even and divisible by c\" matches rsz on crown(2) and crown(3)".into()))
    });

    for f in [q, prime(5)] {
        c.run(&format!("counterexample/{f}"), || {
            let r = verify_guccione_counterexample(f, 10)?;
            Ok((true, format!("{}; rsz {:?}; bar on the product {:?}", r.verdict, r.rsz_dims, r.bar_dims_product)))
        });
    }

    c.run("dichotomy", || {
        let mut ok = true;
        for name in ["qtilde", "four_points", "kronecker", "linear(2)", "linear(3)"] {
            let quiver = standard_quiver(name)?;
            let longest = quiver.longest_path_length().unwrap_or(0);
            let dims = hh_rsz(&quiver, q, 12, name)?.dims;
            ok &= dims[longest + 1..].iter().all(|&x| x == 0);
        }
        for name in ["roundtrip", "crown(3)"] {
            let dims = hh_rsz(&standard_quiver(name)?, q, 12, name)?.dims;
            ok &= dims[12] != 0 && dims[11] + dims[12] > 0;
        }
        Ok((ok, "acyclic quivers vanish above their longest path; roundtrip and crown(3) nonzero in degree 12".into()))
    });

    Ok(ReproduceReport {
        checks: c.checks,
        errata: errata()?,
        notes: READING_NOTES.iter().map(|s| s.to_string()).collect(),
    })
}
