//! `fftc`: command-line front end for the workbench.
//!
//! Exit codes: 0 success, 1 internal error, 2 invalid input, 3 strict audit violations.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use fftc::audit::{full_audit, synthetic_modular_dataset, AuditReport};
use fftc::exact::parse_as;
use fftc::io::{self, AnyAlgebra, AnyDataSet, AnyRing, ScalarParser};
use fftc::report::{self, Format};
use fftc::sfcat::{default_beta_sq_inv, lambda_algebra, sf_fusion, sf_fusion_closed_form, LambdaAlgebra};
use fftc::{Error, Field, GaussianRational, Rational, Scalar};

const DEFAULT_MAX_DIM: usize = 4096;

#[derive(Parser, Debug)]
#[command(name = "fftc", version, about = "Exact invariants of finite-dimensional algebras and symplectic fermion data")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = OutFormat::Json)]
    format: OutFormat,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OutFormat {
    Json,
    Md,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Finite-dimensional algebras given by structure constants.
    #[command(subcommand)]
    Algebra(AlgebraCmd),
    /// The symplectic fermion category.
    #[command(subcommand)]
    Sf(SfCmd),
    /// Grothendieck rings.
    #[command(subcommand)]
    Gr(GrCmd),
    /// Modular-data audits.
    #[command(subcommand)]
    Audit(AuditCmd),
    /// Dataset generators.
    #[command(subcommand)]
    Gen(GenCmd),
}

#[derive(Subcommand, Debug)]
enum AlgebraCmd {
    /// Radical, center, idempotents, Cartan matrix and (with a form) the ideal chain.
    Analyze {
        file: PathBuf,
        #[arg(long)]
        form: Option<PathBuf>,
    },
}

#[derive(Args, Debug, Clone)]
struct SfArgs {
    /// Number of generators of Λ.
    #[arg(long, default_value_t = 1)]
    n: usize,
    /// β^{-2}: one of 1, -1, i, -i. Defaults to i^N.
    #[arg(long, value_parser = ["1", "-1", "i", "-i"])]
    beta_sq_inv: Option<String>,
    /// Normalization of the modified trace.
    #[arg(long, default_value = "1")]
    t0: String,
}

#[derive(Subcommand, Debug)]
enum SfCmd {
    /// Cartan matrix, trace values and modular data.
    Report(SfArgs),
    /// Fusion of projective covers computed by decomposition.
    Fusion(SfArgs),
    /// Modified trace values on the projective covers.
    Trace(SfArgs),
    /// Components of φ on the projective covers.
    Phi(SfArgs),
    /// Compares the modified trace against the trace induced on a projective generator.
    CheckThm61(SfArgs),
}

#[derive(Subcommand, Debug)]
enum GrCmd {
    /// First declared projective class that is not nilpotent.
    ConditionP { file: PathBuf },
    /// Semisimplicity via the trace form, with a nilpotent witness.
    Semisimple { file: PathBuf },
}

#[derive(Subcommand, Debug)]
enum AuditCmd {
    /// Runs every identity check on a modular dataset.
    Run {
        file: PathBuf,
        /// Exit with status 3 when any section fails.
        #[arg(long)]
        strict: bool,
    },
}

#[derive(Subcommand, Debug)]
enum GenCmd {
    /// A seeded dataset satisfying S̃² = C̃ and the product rule.
    SyntheticModular {
        #[arg(long)]
        seed: u64,
    },
}

enum Failure {
    Input(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

struct Output {
    title: String,
    value: Value,
    strict_violation: bool,
}

impl Output {
    fn new(title: &str, value: Value) -> Self {
        Output { title: title.into(), value, strict_violation: false }
    }
}

fn read_json(path: &Path) -> Result<Value, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    Ok(io::parse_json(&text)?)
}

fn max_dim() -> Result<usize, Failure> {
    match std::env::var("FFTC_MAX_DIM") {
        Ok(s) => s
            .trim()
            .parse::<usize>()
            .map_err(|_| Failure::Input(format!("FFTC_MAX_DIM must be a positive integer, got `{s}`"))),
        Err(_) => Ok(DEFAULT_MAX_DIM),
    }
}

fn analyze<F: Field>(a: &fftc::assoc::Algebra<F>, v: &Value, form: Option<&Value>, parse: ScalarParser<F>) -> Result<Value, Failure> {
    let radical = v
        .get("radical")
        .map(|r| {
            r.as_array()
                .ok_or_else(|| Error::Invalid("radical must be a list of vectors".into()))?
                .iter()
                .map(|x| io::scalars(x, "radical", parse))
                .collect::<fftc::Result<Vec<_>>>()
        })
        .transpose()?;
    let coords = form.map(|f| io::scalars(f.get("coords").unwrap_or(&Value::Null), "coords", parse)).transpose()?;
    Ok(report::algebra_report(a, coords.as_deref(), radical.as_deref())?)
}

fn algebra_cmd(cmd: AlgebraCmd) -> Result<Output, Failure> {
    let AlgebraCmd::Analyze { file, form } = cmd;
    let v = read_json(&file)?;
    let form = form.as_deref().map(read_json).transpose()?;
    let spec = io::field_spec_from_value(v.get("field").unwrap_or(&Value::Null))?;
    let value = match io::load_algebra(&v)? {
        AnyAlgebra::Rational(a) => analyze(&a, &v, form.as_ref(), &parse_as::<Rational>)?,
        AnyAlgebra::Gaussian(a) => analyze(&a, &v, form.as_ref(), &parse_as::<GaussianRational>)?,
        AnyAlgebra::Prime(a) => analyze(&a, &v, form.as_ref(), &move |t: &str| fftc::exact::parse_scalar(t, spec))?,
    };
    Ok(Output::new("algebra analysis", value))
}

fn sf_setup(args: &SfArgs) -> Result<(LambdaAlgebra<GaussianRational>, GaussianRational), Failure> {
    let beta = match &args.beta_sq_inv {
        Some(b) => parse_as::<GaussianRational>(b)?,
        None => default_beta_sq_inv::<GaussianRational>(args.n)?,
    };
    let lam = lambda_algebra(args.n, beta)?;
    let t0 = parse_as::<GaussianRational>(&args.t0)?;
    if t0 == GaussianRational::from_i64(0) {
        return Err(Failure::Input("t0 must be nonzero".into()));
    }
    Ok((lam, t0))
}

fn sf_cmd(cmd: SfCmd) -> Result<Output, Failure> {
    Ok(match cmd {
        SfCmd::Report(a) => {
            let (lam, t0) = sf_setup(&a)?;
            Output::new("symplectic fermions", report::sf_report(&lam, &t0)?)
        }
        SfCmd::Fusion(a) => {
            let table = sf_fusion(a.n, max_dim()?)?;
            let agrees = table == sf_fusion_closed_form(a.n);
            let value = json!({"N": a.n, "fusion": report::fusion_value(&table), "matches_closed_form": agrees});
            Output::new("fusion of projective covers", value)
        }
        SfCmd::Trace(a) => {
            let (lam, t0) = sf_setup(&a)?;
            let full = report::sf_report(&lam, &t0)?;
            let value = json!({
                "N": a.n,
                "t0": full["t0"],
                "beta_sq_inv": full["beta_sq_inv"],
                "traces": full["traces"],
            });
            Output::new("modified trace", value)
        }
        SfCmd::Phi(a) => {
            let (lam, t0) = sf_setup(&a)?;
            Output::new("phi components", report::phi_report(&lam, &t0)?)
        }
        SfCmd::CheckThm61(a) => {
            let (lam, t0) = sf_setup(&a)?;
            Output::new("modified trace against the generator trace", report::trace_vs_tg_report(&lam, &t0)?)
        }
    })
}

fn gr_cmd(cmd: GrCmd) -> Result<Output, Failure> {
    let (file, semisimple) = match &cmd {
        GrCmd::ConditionP { file } => (file, false),
        GrCmd::Semisimple { file } => (file, true),
    };
    let ring = io::load_ring(&read_json(file)?)?;
    let value = match (ring, semisimple) {
        (AnyRing::Rational(r), false) => report::condition_p_report(&r),
        (AnyRing::Gaussian(r), false) => report::condition_p_report(&r),
        (AnyRing::Prime(r), false) => report::condition_p_report::<Scalar>(&r),
        (AnyRing::Rational(r), true) => report::semisimple_report(&r)?,
        (AnyRing::Gaussian(r), true) => report::semisimple_report(&r)?,
        (AnyRing::Prime(r), true) => report::semisimple_report::<Scalar>(&r)?,
    };
    Ok(Output::new(if semisimple { "semisimplicity" } else { "condition P" }, value))
}

fn audit_value(r: &AuditReport) -> Result<Value, Failure> {
    serde_json::to_value(r).map_err(|e| Failure::Internal(e.to_string()))
}

fn audit_cmd(cmd: AuditCmd) -> Result<Output, Failure> {
    let AuditCmd::Run { file, strict } = cmd;
    let report = match io::load_dataset(&read_json(&file)?)? {
        AnyDataSet::Rational(d) => full_audit(&d)?,
        AnyDataSet::Gaussian(d) => full_audit(&d)?,
    };
    let mut out = Output::new("audit", audit_value(&report)?);
    out.strict_violation = strict && !report.all_passed();
    Ok(out)
}

fn gen_cmd(cmd: GenCmd) -> Result<Output, Failure> {
    let GenCmd::SyntheticModular { seed } = cmd;
    Ok(Output::new("synthetic modular dataset", io::dataset_to_value(&synthetic_modular_dataset(seed))))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = match cli.format {
        OutFormat::Json => Format::Json,
        OutFormat::Md => Format::Markdown,
    };
    let result = match cli.command {
        Command::Algebra(c) => algebra_cmd(c),
        Command::Sf(c) => sf_cmd(c),
        Command::Gr(c) => gr_cmd(c),
        Command::Audit(c) => audit_cmd(c),
        Command::Gen(c) => gen_cmd(c),
    };
    match result {
        Ok(out) => {
            print!("{}", report::emit(&out.value, format, &out.title));
            if out.strict_violation {
                eprintln!("fftc: audit found identity violations");
                ExitCode::from(3)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(Failure::Input(msg)) => {
            eprintln!("fftc: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("fftc: internal error: {msg}");
            ExitCode::from(1)
        }
    }
}
