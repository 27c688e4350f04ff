use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use twistlab::algebra::StandardAlgebra;
use twistlab::classify::{orbit_report, IsoClassLabel};
use twistlab::errata::{errata, Erratum, READING_NOTES};
use twistlab::hochschild::{
    basis_idempotents, crown_profile, hh_bar, hh_e_complex, hh_rsz, thm_profile, verify_guccione_counterexample,
    CounterexampleReport,
};
use twistlab::io::{census, census_tsv, orbit_rows, orbit_tsv, read_algebra, read_quiver, CensusRow, OrbitRow};
use twistlab::quiver::{standard_quiver, Quiver};
use twistlab::reproduce::{reproduce, ReproduceOptions};
use twistlab::{FieldDescriptor, FiniteDimAlgebra, HHProfile};

#[derive(Parser)]
#[command(name = "twistlab", version, about = "Twisted tensor products of k[Z2] with itself, their classification and Hochschild cohomology")]
struct Cli {
    /// Output format. Defaults to tsv for tables and structured otherwise.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Tsv,
    Structured,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Auto,
    Rsz,
    Bar,
    EComplex,
}

#[derive(Subcommand)]
enum Command {
    /// Every twisting map of k[Z2] ⊗ k[Z2] with its family.
    Census {
        #[arg(long, default_value = "Q")]
        field: FieldDescriptor,
    },
    /// Isomorphism class of every twisted tensor product.
    Classify {
        #[arg(long, default_value = "Q")]
        field: FieldDescriptor,
    },
    /// Hochschild cohomology dimensions in degrees 0..=N.
    Hh {
        /// Standard quiver name (roundtrip, qtilde, crown(3), ...) or quiver file.
        #[arg(long, conflicts_with = "algebra", required_unless_present = "algebra")]
        quiver: Option<String>,
        /// Algebra file, or a standard algebra name (matrix2, k_n(4), ...).
        #[arg(long)]
        algebra: Option<String>,
        #[arg(long = "N", default_value_t = 5)]
        n: usize,
        #[arg(long, value_enum, default_value = "auto")]
        method: Method,
        /// Field for quivers and named algebras. Algebra files carry their own.
        #[arg(long)]
        field: Option<FieldDescriptor>,
    },
    /// Checks that a separable-by-separable twisted product has HH^n = k for n ≤ N.
    Counterexample {
        #[arg(long, default_value = "Q")]
        field: FieldDescriptor,
        #[arg(long = "N", default_value_t = 10)]
        n: usize,
    },
    /// Runs every check and lists the errata.
    ReproducePaper {
        /// Skip bar-complex computations.
        #[arg(long)]
        skip_bar: bool,
        /// Extra prime fields for the census and classification.
        #[arg(long)]
        field: Vec<FieldDescriptor>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let fmt = cli.format;
    match cli.command {
        Command::Census { field } => run_census(field, fmt.unwrap_or(Format::Tsv))?,
        Command::Classify { field } => run_classify(field, fmt.unwrap_or(Format::Tsv))?,
        Command::Hh { quiver, algebra, n, method, field } => {
            run_hh(quiver.as_deref(), algebra.as_deref(), n, method, field, fmt.unwrap_or(Format::Structured))?
        }
        Command::Counterexample { field, n } => run_counterexample(field, n, fmt.unwrap_or(Format::Structured))?,
        Command::ReproducePaper { skip_bar, field } => return run_reproduce(skip_bar, field, fmt),
    }
    Ok(ExitCode::SUCCESS)
}

fn print_json<T: Serialize>(value: &T) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn errata_with_ids(ids: &[&str]) -> Result<Vec<Erratum>> {
    Ok(errata()?.into_iter().filter(|e| ids.contains(&e.id)).collect())
}

fn note_errata(list: &[Erratum]) {
    for e in list {
        eprintln!("erratum {}: printed {}; computed {}", e.id, e.printed, e.computed);
    }
}

#[derive(Serialize)]
struct CensusDocument {
    field: FieldDescriptor,
    rows: Vec<CensusRow>,
    errata: Vec<Erratum>,
}

fn run_census(field: FieldDescriptor, fmt: Format) -> Result<()> {
    let rows = census(field)?;
    let errata = if field.characteristic() == 2 {
        Vec::new()
    } else {
        errata_with_ids(&["line-family-form", "isolated-v-parameter"])?
    };
    match fmt {
        Format::Tsv => {
            print!("{}", census_tsv(&rows));
            note_errata(&errata);
        }
        Format::Structured => print_json(&CensusDocument { field, rows, errata })?,
    }
    Ok(())
}

#[derive(Serialize)]
struct ClassifyDocument {
    field: FieldDescriptor,
    rows: Vec<OrbitRow>,
    class_counts: BTreeMap<String, usize>,
    notes: Vec<String>,
}

fn run_classify(field: FieldDescriptor, fmt: Format) -> Result<()> {
    let report = orbit_report(field)?;
    let rows = orbit_rows(&report);
    let mut notes = Vec::new();
    if field.characteristic() == 2 {
        notes.push("characteristic 2 lies outside the classification, which assumes char ≠ 2; every label is unknown".into());
    }
    if !field.is_finite() {
        notes.push("over Q the line family is sampled at α ∈ {-2, -1, 0, 1, 2, 3}".into());
    }
    let class_counts = IsoClassLabel::ALL.iter().map(|&l| (l.to_string(), report.count(l))).collect();
    match fmt {
        Format::Tsv => {
            print!("{}", orbit_tsv(&rows));
            for n in &notes {
                eprintln!("note: {n}");
            }
        }
        Format::Structured => print_json(&ClassifyDocument { field, rows, class_counts, notes })?,
    }
    Ok(())
}

#[derive(Serialize)]
struct HhDocument {
    #[serde(flatten)]
    profile: HHProfile,
    field: FieldDescriptor,
    #[serde(skip_serializing_if = "Option::is_none")]
    formula_dims: Option<Vec<usize>>,
    notes: Vec<String>,
}

enum Input {
    Quiver(String, Quiver),
    Algebra(String, FiniteDimAlgebra),
}

fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn file_tag(path: &Path) -> String {
    path.file_stem().map_or_else(|| path.display().to_string(), |s| s.to_string_lossy().into_owned())
}

fn load_quiver(spec: &str) -> Result<(String, Quiver)> {
    let path = PathBuf::from(spec);
    if path.is_file() {
        return Ok((file_tag(&path), read_quiver(&read_file(&path)?)?));
    }
    Ok((spec.to_string(), standard_quiver(spec)?))
}

fn named_algebra(name: &str, field: FieldDescriptor) -> Result<StandardAlgebra> {
    let arg = |prefix: &str| name.strip_prefix(prefix).and_then(|r| r.strip_suffix(')'));
    if let Some(n) = arg("k_n(") {
        return Ok(StandardAlgebra::KN(n.parse().context("k_n needs a positive integer")?));
    }
    if let Some(q) = arg("a_q(") {
        return Ok(StandardAlgebra::Aq(field.parse_scalar(q)?));
    }
    Ok(match name {
        "group_algebra_z2" => StandardAlgebra::GroupAlgebraZ2,
        "idempotent_line" => StandardAlgebra::IdempotentLine,
        "matrix2" => StandardAlgebra::Matrix2,
        "truncated_roundtrip" => StandardAlgebra::TruncatedRoundtrip,
        "qtilde_path_algebra" => StandardAlgebra::QtildePathAlgebra,
        _ => bail!("{name:?} is neither a file nor a standard algebra"),
    })
}

fn load_algebra(spec: &str, field: Option<FieldDescriptor>) -> Result<(String, FiniteDimAlgebra)> {
    let path = PathBuf::from(spec);
    if path.is_file() {
        let a = read_algebra(&read_file(&path)?)?;
        if let Some(f) = field.filter(|&f| f != a.field()) {
            bail!("--field {f} disagrees with the algebra file, which is over {}", a.field());
        }
        return Ok((file_tag(&path), a));
    }
    let f = field.unwrap_or(FieldDescriptor::RATIONALS);
    Ok((spec.to_string(), named_algebra(spec, f)?.build(f)?))
}

fn run_hh(
    quiver: Option<&str>,
    algebra: Option<&str>,
    n: usize,
    method: Method,
    field: Option<FieldDescriptor>,
    fmt: Format,
) -> Result<()> {
    let input = match (quiver, algebra) {
        (Some(q), _) => {
            let (tag, q) = load_quiver(q)?;
            Input::Quiver(tag, q)
        }
        (None, Some(a)) => {
            let (tag, a) = load_algebra(a, field)?;
            Input::Algebra(tag, a)
        }
        (None, None) => bail!("give --quiver or --algebra"),
    };
    let field = match &input {
        Input::Algebra(_, a) => a.field(),
        Input::Quiver(..) => field.unwrap_or(FieldDescriptor::RATIONALS),
    };
    let mut notes = Vec::new();
    let mut formula_dims = None;
    let profile = match (&input, method) {
        (Input::Quiver(tag, q), Method::Auto | Method::Rsz) => hh_rsz(q, field, n, tag)?,
        (Input::Quiver(tag, q), Method::Bar) => hh_bar(&q.truncated_path_algebra(field)?, n, tag)?,
        (Input::Quiver(tag, q), Method::EComplex) => {
            let a = q.truncated_path_algebra(field)?;
            hh_e_complex(&a, &basis_idempotents(&a), n, tag)?
        }
        (Input::Algebra(..), Method::Rsz) => {
            bail!("the parallel-paths complex needs a quiver; pass --quiver or choose --method bar")
        }
        (Input::Algebra(tag, a), Method::Auto | Method::Bar) => hh_bar(a, n, tag)?,
        (Input::Algebra(tag, a), Method::EComplex) => hh_e_complex(a, &basis_idempotents(a), n, tag)?,
    };
    if let Input::Quiver(tag, q) = &input {
        if let Some(p) = thm_profile(q, n, tag) {
            formula_dims = Some(p.dims);
        } else if let Some(c) = q.is_crown().filter(|&c| c >= 2 && field.characteristic() != 2) {
            formula_dims = Some(crown_profile(c, n, field.characteristic(), tag)?.dims);
            notes.push(READING_NOTES[1].into());
        }
        if *q == standard_quiver("qtilde")? {
            for e in errata_with_ids(&["class-iii-hh0"])? {
                notes.push(format!("erratum {}: printed {}; computed dim HH⁰ = 2", e.id, e.printed));
            }
        }
    }
    match fmt {
        Format::Tsv => {
            println!("degree\tdim");
            for (i, d) in profile.dims.iter().enumerate() {
                println!("{i}\t{d}");
            }
            for n in &notes {
                eprintln!("note: {n}");
            }
        }
        Format::Structured => print_json(&HhDocument { profile, field, formula_dims, notes })?,
    }
    Ok(())
}

fn run_counterexample(field: FieldDescriptor, n: usize, fmt: Format) -> Result<()> {
    let report: CounterexampleReport = verify_guccione_counterexample(field, n)?;
    match fmt {
        Format::Tsv => {
            println!("degree\trsz\tbar_product\tbar_roundtrip");
            let cell = |v: &[usize], i: usize| v.get(i).map_or("-".to_string(), ToString::to_string);
            for i in 0..report.rsz_dims.len() {
                println!(
                    "{i}\t{}\t{}\t{}",
                    report.rsz_dims[i],
                    cell(&report.bar_dims_product, i),
                    cell(&report.bar_dims_roundtrip, i)
                );
            }
            eprintln!("{}", report.verdict);
        }
        Format::Structured => print_json(&report)?,
    }
    Ok(())
}

fn run_reproduce(skip_bar: bool, extra: Vec<FieldDescriptor>, fmt: Option<Format>) -> Result<ExitCode> {
    if let Some(f) = extra.iter().find(|f| !f.is_finite()) {
        return Err(anyhow!("--field {f}: extra fields must be prime fields"));
    }
    let report = reproduce(&ReproduceOptions { extra_fields: extra, skip_bar })?;
    match fmt {
        None => print!("{}", report.to_text()),
        Some(Format::Structured) => print_json(&report)?,
        Some(Format::Tsv) => {
            println!("status\tid\tdetail");
            for c in &report.checks {
                println!("{}\t{}\t{}", if c.passed { "pass" } else { "fail" }, c.id, c.detail);
            }
            for e in &report.errata {
                println!("{}\terratum/{}\t{}", if e.confirmed { "erratum" } else { "fail" }, e.id, e.computed);
            }
        }
    }
    Ok(if report.passed() { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}
