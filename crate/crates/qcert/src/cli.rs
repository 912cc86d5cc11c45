//! The `qcert` command line.
//!
//! Exit status: 0 when every selected check passes, 1 when at least one fails,
//! 2 for usage or configuration errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use qcert_core::progression;
use qcert_core::scan::{self, ScanError, Vanishing};
use qcert_core::special::{Named, SpecialError};
use qcert_core::verify::{self, CheckResult, VerifyError};
use qcert_core::DEFAULT_PREC;
use serde::Serialize;

use crate::report::{self, Format};
use crate::runner;

#[derive(Debug, Parser)]
#[command(
    name = "qcert",
    version,
    about = "Certify q-series identities and congruences in exact arithmetic"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run registered checks.
    Verify(VerifyArgs),
    /// Print one exact coefficient of a catalogued series.
    Coeff(CoeffArgs),
    /// Print the leading coefficients of each dissection component.
    Dissect(DissectArgs),
    /// Scan conjectured congruences or search for vanishing progressions.
    Scan(ScanArgs),
    /// List registered checks and catalogued series.
    List,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("selection").required(true).args(["all", "check"])))]
pub struct VerifyArgs {
    /// Run every registered check.
    #[arg(long)]
    pub all: bool,
    /// Run the named check (repeatable).
    #[arg(long, value_name = "NAME")]
    pub check: Vec<String>,
    /// Truncation order [default: QCERT_PREC or 1000].
    #[arg(long)]
    pub prec: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct CoeffArgs {
    #[arg(long, value_name = "NAME")]
    pub series: String,
    /// Exponent of the coefficient.
    #[arg(long)]
    pub n: usize,
    /// Truncation order; must exceed the index [default: index + 1].
    #[arg(long)]
    pub prec: Option<usize>,
}

#[derive(Debug, Args)]
pub struct DissectArgs {
    #[arg(long, value_name = "NAME")]
    pub series: String,
    /// Dissection modulus.
    #[arg(long = "mod", value_name = "M")]
    pub modulus: usize,
    /// Truncation order of the series [default: QCERT_PREC or 1000].
    #[arg(long)]
    pub prec: Option<usize>,
    /// Leading coefficients shown per component.
    #[arg(long, default_value_t = 10)]
    pub terms: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    /// c(32n+23) ≡ 0 (mod 8).
    Openq,
    /// The three progressions of the 4^k family for k = 0..=kmax.
    Family,
    /// Search for progressions on which a series vanishes.
    Discover,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    #[arg(long, value_enum)]
    pub target: Target,
    /// Largest family level (family target).
    #[arg(long, default_value_t = 2)]
    pub kmax: u32,
    /// Series to search (discover target).
    #[arg(long, value_name = "NAME")]
    pub series: Option<String>,
    /// Largest progression modulus (discover target).
    #[arg(long, default_value_t = 8)]
    pub mmax: usize,
    /// Vanishing tests: `exact` or an integer modulus ≥ 2 (discover target).
    #[arg(long, value_delimiter = ',', default_value = "exact,2,4,8")]
    pub tests: Vec<String>,
    /// Truncation order [default: QCERT_PREC or 5001].
    #[arg(long)]
    pub prec: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Verify(#[from] VerifyError),
    #[error(transparent)]
    Scan(#[from] ScanError),
    #[error(transparent)]
    Series(#[from] SpecialError),
    #[error("index {n} is not below the precision {prec}")]
    IndexOutOfRange { n: usize, prec: usize },
    #[error("dissection modulus must be positive")]
    ZeroModulus,
    #[error("the discover target needs --series")]
    MissingSeries,
    #[error("invalid vanishing test {0:?}: use `exact` or an integer ≥ 2")]
    InvalidTest(String),
}

/// What a command produced: the report for stdout, notes for stderr, and
/// whether everything it checked passed.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub report: String,
    pub notes: Vec<String>,
    pub passed: bool,
}

impl Outcome {
    fn ok(report: String) -> Self {
        Outcome {
            report,
            notes: Vec::new(),
            passed: true,
        }
    }

    fn checks(results: &[CheckResult], format: Format) -> Self {
        Outcome {
            report: report::render(results, format),
            notes: Vec::new(),
            passed: results.iter().all(|r| r.passed()),
        }
    }
}

pub fn run(cli: Cli) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Verify(args) => verify_cmd(args),
        Command::Coeff(args) => coeff_cmd(args),
        Command::Dissect(args) => dissect_cmd(args),
        Command::Scan(args) => scan_cmd(args),
        Command::List => Ok(Outcome::ok(list())),
    }
}

fn verify_cmd(args: VerifyArgs) -> Result<Outcome, CliError> {
    let prec = args
        .prec
        .unwrap_or_else(|| runner::default_prec(DEFAULT_PREC));
    let checks = if args.all {
        verify::registry()
    } else {
        args.check
            .iter()
            .map(|name| verify::find(name))
            .collect::<Result<_, _>>()?
    };
    let results = runner::run_checks(&checks, prec)?;
    Ok(Outcome::checks(&results, args.format))
}

fn coeff_cmd(args: CoeffArgs) -> Result<Outcome, CliError> {
    let named: Named = args.series.parse()?;
    let prec = args.prec.unwrap_or(args.n + 1);
    if args.n >= prec {
        return Err(CliError::IndexOutOfRange { n: args.n, prec });
    }
    let f = named.build(prec)?;
    Ok(Outcome::ok(format!("{}\n", f.coeffs()[args.n])))
}

#[derive(Serialize)]
struct ComponentRecord {
    index: usize,
    prec: usize,
    leading: Vec<String>,
}

#[derive(Serialize)]
struct DissectionRecord {
    series: String,
    modulus: usize,
    prec: usize,
    components: Vec<ComponentRecord>,
}

fn dissect_cmd(args: DissectArgs) -> Result<Outcome, CliError> {
    if args.modulus == 0 {
        return Err(CliError::ZeroModulus);
    }
    let named: Named = args.series.parse()?;
    let prec = args
        .prec
        .unwrap_or_else(|| runner::default_prec(DEFAULT_PREC));
    let f = named.build(prec)?;
    let components: Vec<ComponentRecord> = progression::dissect(&f, args.modulus)
        .iter()
        .enumerate()
        .map(|(index, part)| ComponentRecord {
            index,
            prec: part.prec(),
            leading: part
                .coeffs()
                .iter()
                .take(args.terms)
                .map(ToString::to_string)
                .collect(),
        })
        .collect();
    let record = DissectionRecord {
        series: named.to_string(),
        modulus: args.modulus,
        prec,
        components,
    };
    let report = match args.format {
        Format::Text => {
            let mut out = format!(
                "{} = sum_j q^j F_j(q^{}), prec {}\n",
                record.series, record.modulus, prec
            );
            for c in &record.components {
                let _ = writeln!(
                    out,
                    "F_{} (prec {}): {}",
                    c.index,
                    c.prec,
                    c.leading.join(", ")
                );
            }
            out
        }
        Format::Json => serde_json::to_string_pretty(&record).expect("record serializes") + "\n",
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["component", "exponent", "coefficient"])
                .expect("in-memory write");
            for c in &record.components {
                for (n, v) in c.leading.iter().enumerate() {
                    w.write_record([c.index.to_string(), n.to_string(), v.clone()])
                        .expect("in-memory write");
                }
            }
            String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
        }
    };
    Ok(Outcome::ok(report))
}

fn parse_test(s: &str) -> Result<Vanishing, CliError> {
    if s.eq_ignore_ascii_case("exact") || s == "0" {
        return Ok(Vanishing::Exact);
    }
    match s.parse::<u64>() {
        Ok(m) if m >= 2 => Ok(Vanishing::Mod(m)),
        _ => Err(CliError::InvalidTest(s.into())),
    }
}

fn scan_cmd(args: ScanArgs) -> Result<Outcome, CliError> {
    let prec = args
        .prec
        .unwrap_or_else(|| runner::default_prec(scan::OPENQ_PREC));
    match args.target {
        Target::Openq => {
            let results =
                runner::timed_batch(|| Ok::<_, CliError>(scan::scan_conjecture_openq(prec)))?;
            Ok(Outcome::checks(&results, args.format))
        }
        Target::Family => {
            let results = runner::timed_batch(|| scan::scan_conjecture_family(args.kmax, prec))?;
            Ok(Outcome::checks(&results, args.format))
        }
        Target::Discover => {
            let named: Named = args
                .series
                .as_deref()
                .ok_or(CliError::MissingSeries)?
                .parse()?;
            let tests = args
                .tests
                .iter()
                .map(|t| parse_test(t))
                .collect::<Result<Vec<_>, _>>()?;
            let f = named.build(prec)?;
            let found = scan::discover(&f, &tests, args.mmax)?;
            let results: Vec<CheckResult> = found
                .iter()
                .map(|d| d.check.clone().named(format!("{named}-{}", d.check.name)))
                .collect();
            let mut outcome = Outcome::checks(&results, args.format);
            outcome.notes.push(format!(
                "empirical: {} progression(s) with at least {} witnesses below prec {prec}; not a proof",
                found.len(),
                scan::MIN_WITNESSES
            ));
            if found.iter().any(|d| d.degenerate) {
                outcome.notes.push(format!(
                    "degenerate: every available coefficient of {named} vanishes"
                ));
            }
            Ok(outcome)
        }
    }
}

fn list() -> String {
    let mut out = String::from("checks:\n");
    for c in verify::registry() {
        let _ = writeln!(out, "  {:<28} {}", c.name, c.description);
    }
    out.push_str("series:\n");
    for n in Named::ALL {
        let _ = writeln!(out, "  {:<28} {}", n.to_string(), n.formula());
    }
    out
}

/// Parses `args`, runs the command, prints its output, and maps the outcome
/// to an exit status.
pub fn main_with<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(outcome) => {
            print!("{}", outcome.report);
            for note in &outcome.notes {
                eprintln!("{note}");
            }
            ExitCode::from(if outcome.passed { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
