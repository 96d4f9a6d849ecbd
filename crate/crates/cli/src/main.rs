use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mcgext::central::{solve, SolveMode};
use mcgext::export::{to_cas, to_text, CasDialect};
use mcgext::intmat::matrix_to_json;
use mcgext::symplectic::{RationalAssignment, RepOutcome};
use mcgext::{
    abelianize, build, build_with_table, relation_matrix, relator_library, verify_presentation_sp,
    verify_projective_rep, CentralError, Factorization, Family, Incidence, IntersectionTable,
    Presentation, PresentationError,
};
use num_traits::One;
use serde_json::{json, Value};

// Stdout writes that tolerate a closed pipe instead of panicking.
macro_rules! out {
    ($($t:tt)*) => {{
        use std::io::Write as _;
        let _ = write!(std::io::stdout().lock(), $($t)*);
    }};
}

macro_rules! outln {
    ($($t:tt)*) => {{
        use std::io::Write as _;
        let _ = writeln!(std::io::stdout().lock(), $($t)*);
    }};
}

#[derive(Parser)]
#[command(name = "mcgext", version, about = "Presentations of centrally extended mapping class groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a presentation.
    Present {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long, value_enum, default_value_t = Dialect::Gap)]
        cas_dialect: Dialect,
        /// Write to this file instead of stdout.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Abelianize a presentation, optionally with extra relators.
    Abelianize {
        #[command(flatten)]
        target: Target,
        /// Extra relator, e.g. "c1 c2^-1 c5^2". Repeatable.
        #[arg(long = "add-relator")]
        add_relator: Vec<String>,
        /// Extra relator taken from the relator library by name. Repeatable.
        #[arg(long)]
        library: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// Check every relator in the symplectic representation.
    CheckSp {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        json: bool,
        /// Corrupt one disjoint pair of the intersection table before building.
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Evaluate relators under a user-supplied matrix assignment.
    CheckRep {
        #[command(flatten)]
        target: Target,
        /// JSON file: {"dimension": n, "matrices": {generator: [[q, ...], ...]}}.
        #[arg(long)]
        matrices: PathBuf,
        /// Require every scalar to equal 1.
        #[arg(long)]
        strict: bool,
        #[arg(long)]
        json: bool,
    },
    /// Solve for the central exponents of a factorization.
    SolveCentral {
        #[arg(long, required_unless_present = "factorization")]
        g: Option<u32>,
        #[arg(long, allow_hyphen_values = true, required_unless_present = "factorization")]
        sigma: Option<i64>,
        #[arg(long, required_unless_present = "factorization")]
        m: Option<u64>,
        #[arg(long, required_unless_present = "factorization")]
        mns: Option<u64>,
        /// JSON file: {"g": int, "sigma": int, "twists": ["ns" | {"sep": k}]}.
        #[arg(long, conflicts_with_all = ["g", "sigma", "m", "mns"])]
        factorization: Option<PathBuf>,
        /// Use the closed-form expressions instead of solving the system.
        #[arg(long)]
        printed_closed_form: bool,
    },
    /// Export a presentation as a CAS script or its relation matrix.
    Export {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value_t = ExportFormat::Cas)]
        format: ExportFormat,
        #[arg(long, value_enum, default_value_t = Dialect::Gap)]
        cas_dialect: Dialect,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Print the named relator library for (g, r).
    Relators {
        #[arg(long)]
        g: u32,
        #[arg(long, default_value_t = 1)]
        r: u32,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct Target {
    #[arg(long, value_enum)]
    family: FamilyArg,
    /// Genus; defaults to 2 for genus2.
    #[arg(long)]
    g: Option<u32>,
    /// Boundary components; defaults to 0 for genus2 and 1 otherwise.
    #[arg(long)]
    r: Option<u32>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    #[value(alias = "wajnryb-lift")]
    Wajnryb,
    #[value(alias = "gervais-lift")]
    Gervais,
    Genus2,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
    Cas,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportFormat {
    Cas,
    RelationMatrix,
}

#[derive(Clone, Copy, ValueEnum)]
enum Dialect {
    Gap,
    Magma,
}

impl From<Dialect> for CasDialect {
    fn from(d: Dialect) -> Self {
        match d {
            Dialect::Gap => CasDialect::Gap,
            Dialect::Magma => CasDialect::Magma,
        }
    }
}

/// Exit code 1: a check or solve failed. Exit code 2: bad input.
enum Failure {
    Check(Option<String>),
    Input(String),
}

type Outcome = Result<(), Failure>;

impl Target {
    fn resolve(&self) -> Result<(Family, u32, u32), Failure> {
        let family = match self.family {
            FamilyArg::Wajnryb => Family::WajnrybLift,
            FamilyArg::Gervais => Family::GervaisLift,
            FamilyArg::Genus2 => Family::Genus2,
        };
        let g = match (self.g, family) {
            (Some(g), _) => g,
            (None, Family::Genus2) => 2,
            (None, _) => return Err(Failure::Input(format!("--g is required ({})", family.constraint()))),
        };
        let r = self.r.unwrap_or(if family == Family::Genus2 { 0 } else { 1 });
        Ok((family, g, r))
    }

    fn build(&self) -> Result<Presentation, Failure> {
        let (family, g, r) = self.resolve()?;
        build(family, g, r).map_err(|e| build_failure(family, g, r, e))
    }
}

fn build_failure(family: Family, g: u32, r: u32, e: PresentationError) -> Failure {
    match e {
        PresentationError::UnsupportedGenus(_) | PresentationError::InvalidParameter(_) => {
            Failure::Input(format!("{} (got g = {g}, r = {r})", family.constraint()))
        }
        other => Failure::Input(other.to_string()),
    }
}

fn read_json(path: &Path) -> Result<Value, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn emit(text: &str, output: Option<&Path>) -> Outcome {
    match output {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display()))),
        None => {
            out!("{text}");
            Ok(())
        }
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn present(target: &Target, format: Format, dialect: Dialect, output: Option<&Path>) -> Outcome {
    let p = target.build()?;
    let text = match format {
        Format::Json => pretty(&p.to_json()),
        Format::Text => to_text(&p),
        Format::Cas => to_cas(&p, dialect.into()),
    };
    emit(&text, output)
}

fn abelianize_cmd(target: &Target, extra: &[String], library: &[String], as_json: bool) -> Outcome {
    let mut p = target.build()?;
    let (g, r) = (p.genus(), p.boundary());
    for (i, text) in extra.iter().enumerate() {
        let w = p.alphabet().parse(text).map_err(|e| Failure::Input(e.to_string()))?;
        p = p.with_relator(format!("extra({})", i + 1), w).map_err(|e| Failure::Input(e.to_string()))?;
    }
    if !library.is_empty() {
        let lib = relator_library(g, r).map_err(|e| Failure::Input(e.to_string()))?;
        for name in library {
            let w = lib
                .get(name)
                .ok_or_else(|| Failure::Input(format!("no library relator `{name}` for g = {g}, r = {r}")))?;
            p = p.with_relator(name.clone(), w.clone()).map_err(|e| Failure::Input(e.to_string()))?;
        }
    }
    let h = abelianize(&p);
    if as_json {
        out!("{}", pretty(&h.to_json()));
    } else {
        outln!("{h}");
    }
    Ok(())
}

/// Flips the first disjoint pair of the standard table to a single crossing.
fn faulty_table(family: Family, g: u32, r: u32) -> Result<IntersectionTable, Failure> {
    let mut table = IntersectionTable::standard(family, g, r).map_err(|e| build_failure(family, g, r, e))?;
    let (x, y) = table
        .pairs()
        .find(|(_, _, i)| *i == Incidence::Disjoint)
        .map(|(x, y, _)| (x.to_string(), y.to_string()))
        .ok_or_else(|| Failure::Input("table has no disjoint pair to corrupt".into()))?;
    table.set(&x, &y, Incidence::Once);
    Ok(table)
}

fn check_sp(target: &Target, as_json: bool, inject_fault: bool) -> Outcome {
    let p = if inject_fault {
        let (family, g, r) = target.resolve()?;
        let table = faulty_table(family, g, r)?;
        build_with_table(family, g, r, &table).map_err(|e| build_failure(family, g, r, e))?
    } else {
        target.build()?
    };
    let report = verify_presentation_sp(&p);
    if as_json {
        out!("{}", pretty(&report.to_json()));
    } else {
        out!("{report}");
    }
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Check(None))
    }
}

fn check_rep(target: &Target, path: &Path, strict: bool, as_json: bool) -> Outcome {
    let p = target.build()?;
    let assignment = RationalAssignment::from_json(p.alphabet(), &read_json(path)?)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let checks = verify_projective_rep(&p, &assignment).map_err(|e| Failure::Input(e.to_string()))?;
    let projective = checks.iter().all(|c| c.scalar().is_some());
    let linear = checks.iter().all(|c| c.scalar().is_some_and(One::is_one));
    if as_json {
        let rows: Vec<Value> = checks
            .iter()
            .map(|c| match &c.outcome {
                RepOutcome::Scalar(q) => json!({ "label": c.label, "scalar": q.to_string() }),
                RepOutcome::NotScalar { deviation, at } => json!({
                    "label": c.label,
                    "scalar": Value::Null,
                    "deviation": deviation.to_string(),
                    "at": [at.0, at.1],
                }),
            })
            .collect();
        let v = json!({
            "family": p.family().name(),
            "g": p.genus(),
            "r": p.boundary(),
            "dimension": assignment.dimension(),
            "projective": projective,
            "linear": linear,
            "relators": rows,
        });
        out!("{}", pretty(&v));
    } else {
        let width = checks.iter().map(|c| c.label.len()).max().unwrap_or(0);
        for c in &checks {
            match &c.outcome {
                RepOutcome::Scalar(q) => outln!("{:width$}  {q}", c.label),
                RepOutcome::NotScalar { deviation, at } => {
                    outln!("{:width$}  not scalar (off by {deviation} at {at:?})", c.label)
                }
            }
        }
        outln!("projective: {}, linear: {}", yes(projective), yes(linear));
    }
    if projective && (linear || !strict) {
        Ok(())
    } else {
        Err(Failure::Check(None))
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn solve_central(
    counts: (Option<u32>, Option<i64>, Option<u64>, Option<u64>),
    file: Option<&Path>,
    printed: bool,
) -> Outcome {
    let f = match (file, counts) {
        (Some(path), _) => Factorization::from_json(&read_json(path)?),
        (None, (Some(g), Some(sigma), Some(m), Some(mns))) => Factorization::from_counts(g, sigma, m, mns),
        (None, _) => return Err(Failure::Input("--g, --sigma, --m and --mns are required".into())),
    }
    .map_err(|e| Failure::Input(e.to_string()))?;
    let mode = if printed { SolveMode::PrintedClosedForm } else { SolveMode::System };
    match solve(&f, mode) {
        Ok(e) => {
            out!("{}", pretty(&e.to_json()));
            Ok(())
        }
        Err(e @ CentralError::NonIntegral) => {
            out!("{}", pretty(&e.to_json()));
            Err(Failure::Check(Some(e.to_string())))
        }
        Err(e) => Err(Failure::Input(e.to_string())),
    }
}

fn export(target: &Target, format: ExportFormat, dialect: Dialect, output: Option<&Path>) -> Outcome {
    let p = target.build()?;
    let text = match format {
        ExportFormat::Cas => to_cas(&p, dialect.into()),
        ExportFormat::RelationMatrix => {
            let mut v = matrix_to_json(&relation_matrix(&p));
            v["generators"] = json!(p.generators());
            v["relators"] = json!(p.relators().iter().map(|r| &r.label).collect::<Vec<_>>());
            pretty(&v)
        }
    };
    emit(&text, output)
}

fn relators(g: u32, r: u32, as_json: bool) -> Outcome {
    let lib = relator_library(g, r).map_err(|e| Failure::Input(e.to_string()))?;
    if as_json {
        let v: serde_json::Map<String, Value> = lib.iter().map(|(k, w)| (k.clone(), w.to_json())).collect();
        out!("{}", pretty(&Value::Object(v)));
    } else {
        for (name, w) in &lib {
            outln!("{name}: {w}");
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Present {
            target,
            format,
            cas_dialect,
            output,
        } => present(&target, format, cas_dialect, output.as_deref()),
        Command::Abelianize {
            target,
            add_relator,
            library,
            json,
        } => abelianize_cmd(&target, &add_relator, &library, json),
        Command::CheckSp {
            target,
            json,
            inject_fault,
        } => check_sp(&target, json, inject_fault),
        Command::CheckRep {
            target,
            matrices,
            strict,
            json,
        } => check_rep(&target, &matrices, strict, json),
        Command::SolveCentral {
            g,
            sigma,
            m,
            mns,
            factorization,
            printed_closed_form,
        } => solve_central((g, sigma, m, mns), factorization.as_deref(), printed_closed_form),
        Command::Export {
            target,
            format,
            cas_dialect,
            output,
        } => export(&target, format, cas_dialect, output.as_deref()),
        Command::Relators { g, r, json } => relators(g, r, json),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(message)) => {
            if let Some(m) = message {
                eprintln!("error: {m}");
            }
            ExitCode::from(1)
        }
        Err(Failure::Input(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
