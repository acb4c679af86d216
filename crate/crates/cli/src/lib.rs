//! Command-line front end: reads a presentation file, runs one computation
//! and renders a versioned report as JSON or Markdown.

mod markdown;
pub mod report;

use std::fmt;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use hullcoh_core::hull::{parse_presentation, HullPresentation};
use hullcoh_core::lefschetz::{find_symplectic, hard_lefschetz_check, SearchOptions};
use hullcoh_core::liecomplex::{cohomology, complex_of, lie_from_matrices, minimal_model_report, BracketSign};
use hullcoh_core::oracle::wang_betti_for;
use hullcoh_core::simpclass::verify_cochain_map;

use report::{
    BettiReport, CheckReport, Envelope, ErrorReport, LefschetzOut, MinimalModelOut, PsiOut, Report, Verdict,
};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Parser, Debug, Clone)]
#[command(name = "hullcoh", version, about = "Exact cohomology of polycyclic groups through their algebraic hulls")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Presentation file (JSON).
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,
    /// Highest cochain degree checked by `psi-test`.
    #[arg(long, global = true, default_value_t = 3)]
    pub max_degree: usize,
    /// Random tuples per degree for `psi-test`.
    #[arg(long, global = true, default_value_t = 100)]
    pub samples: usize,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Bound on numerators and denominators in the random form search.
    #[arg(long, global = true, default_value_t = 8)]
    pub height: u32,
    /// Number of random draws in the form search.
    #[arg(long, global = true, default_value_t = 1000)]
    pub draws: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Subcommand, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    /// Validate a presentation.
    Check,
    /// Betti numbers from invariant cochains, compared with the group-side oracle.
    Betti,
    /// Minimal model of the cochain algebra of the Lie algebra.
    MinimalModel,
    /// Sampled checks that integration of pulled-back forms is a cochain map.
    PsiTest,
    /// Search for an invariant symplectic form and check hard Lefschetz.
    Lefschetz,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Check => "check",
            Command::Betti => "betti",
            Command::MinimalModel => "minimal-model",
            Command::PsiTest => "psi-test",
            Command::Lefschetz => "lefschetz",
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Markdown,
}

/// Validated run parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub input: PathBuf,
    pub max_degree: usize,
    pub samples: usize,
    pub seed: u64,
    pub height: u32,
    pub draws: usize,
    pub format: Format,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Arguments(String),
    Io(String),
    Core(hullcoh_core::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Arguments(m) => write!(f, "invalid arguments: {m}"),
            CliError::Io(m) => write!(f, "cannot read input: {m}"),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<hullcoh_core::Error> for CliError {
    fn from(e: hullcoh_core::Error) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    fn kind(&self) -> &'static str {
        match self {
            CliError::Arguments(_) => "Arguments",
            CliError::Io(_) => "Io",
            CliError::Core(e) => e.kind(),
        }
    }
}

impl TryFrom<Cli> for RunConfig {
    type Error = CliError;

    fn try_from(cli: Cli) -> Result<Self, CliError> {
        let input = cli
            .input
            .ok_or_else(|| CliError::Arguments("--input is required".into()))?;
        if cli.samples == 0 {
            return Err(CliError::Arguments("--samples must be at least 1".into()));
        }
        Ok(Self {
            command: cli.command,
            input,
            max_degree: cli.max_degree,
            samples: cli.samples,
            seed: cli.seed,
            height: cli.height,
            draws: cli.draws,
            format: cli.format,
        })
    }
}

/// Rendered report and process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub exit_code: i32,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED_CHECK: i32 = 1;
pub const EXIT_ERROR: i32 = 2;
pub const EXIT_NO_FORM: i32 = 3;
pub const EXIT_HLP_FAILED: i32 = 4;

fn load(path: &PathBuf) -> Result<HullPresentation, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    Ok(parse_presentation(&text)?)
}

fn load_valid(path: &PathBuf) -> Result<HullPresentation, CliError> {
    let h = load(path)?;
    h.validate().into_result()?;
    Ok(h)
}

fn compute(cfg: &RunConfig) -> Result<(Report, i32), CliError> {
    match cfg.command {
        Command::Check => {
            let h = load(&cfg.input)?;
            let validation = h.validate();
            let code = if validation.passed() { EXIT_OK } else { EXIT_ERROR };
            Ok((Report::Check(CheckReport::new(&h, validation)), code))
        }
        Command::Betti => {
            let h = load_valid(&cfg.input)?;
            let ce = cohomology(&complex_of(&h)?);
            let oracle = wang_betti_for(&h)?;
            let report = BettiReport::new(&h, &ce, oracle);
            let code = if report.verdict == Verdict::Disagree { EXIT_FAILED_CHECK } else { EXIT_OK };
            Ok((Report::Betti(report), code))
        }
        Command::MinimalModel => {
            let h = load_valid(&cfg.input)?;
            if !h.module().is_trivial() {
                return Err(hullcoh_core::Error::RequiresTrivialModule.into());
            }
            let l = lie_from_matrices(h.u_basis())?;
            let mm = minimal_model_report(&l)?;
            let adjoints = h
                .t_generators()
                .iter()
                .map(|s| h.adjoint(s))
                .collect::<hullcoh_core::Result<Vec<_>>>()?;
            Ok((Report::MinimalModel(MinimalModelOut::new(&mm, &adjoints)), EXIT_OK))
        }
        Command::PsiTest => {
            let h = load_valid(&cfg.input)?;
            if cfg.max_degree > h.n() + 1 {
                return Err(CliError::Arguments(format!(
                    "--max-degree {} exceeds dim u + 1 = {}",
                    cfg.max_degree,
                    h.n() + 1
                )));
            }
            let rep = verify_cochain_map(&h, cfg.max_degree, cfg.samples, cfg.seed, BracketSign::Standard)?;
            let code = if rep.passed { EXIT_OK } else { EXIT_FAILED_CHECK };
            Ok((Report::PsiTest(PsiOut::from(rep)), code))
        }
        Command::Lefschetz => {
            let h = load_valid(&cfg.input)?;
            let c = complex_of(&h)?;
            let opts = SearchOptions {
                seed: cfg.seed,
                height: cfg.height,
                draws: cfg.draws,
            };
            let cert = find_symplectic(&c, opts)?;
            let closed = hullcoh_core::lefschetz::closed_invariant_two_forms(&c)?.len();
            let (hlp, code) = match &cert {
                None => (None, EXIT_NO_FORM),
                Some(cert) => {
                    let r = hard_lefschetz_check(&c, cert, &cohomology(&c))?;
                    let code = if r.holds { EXIT_OK } else { EXIT_HLP_FAILED };
                    (Some(r), code)
                }
            };
            Ok((
                Report::Lefschetz(LefschetzOut::new(c.n(), closed, opts, cert.as_ref(), hlp.as_ref())),
                code,
            ))
        }
    }
}

fn render(env: &Envelope, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(env).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Markdown => markdown::render(env),
    }
}

pub fn run(cfg: &RunConfig) -> Outcome {
    let input = cfg.input.display().to_string();
    let (report, exit_code) = match compute(cfg) {
        Ok(r) => r,
        Err(e) => (
            Report::Error(ErrorReport {
                kind: e.kind().into(),
                message: e.to_string(),
            }),
            EXIT_ERROR,
        ),
    };
    let env = Envelope {
        schema_version: SCHEMA_VERSION,
        command: cfg.command.name().into(),
        input,
        exit_code,
        report,
    };
    Outcome {
        output: render(&env, cfg.format),
        exit_code,
    }
}

/// Entry point shared by the binary and the tests.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            return Outcome {
                output: e.to_string(),
                exit_code: code,
            };
        }
    };
    let command = cli.command;
    let format = cli.format;
    match RunConfig::try_from(cli) {
        Ok(cfg) => run(&cfg),
        Err(e) => {
            let env = Envelope {
                schema_version: SCHEMA_VERSION,
                command: command.name().into(),
                input: String::new(),
                exit_code: EXIT_ERROR,
                report: Report::Error(ErrorReport {
                    kind: e.kind().into(),
                    message: e.to_string(),
                }),
            };
            Outcome {
                output: render(&env, format),
                exit_code: EXIT_ERROR,
            }
        }
    }
}
