//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a sweep finds a mismatch or an identity
//! check fails, 2 on usage errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::classify::{classify, is_do};
use crate::dickson::{DicksonKind, DicksonQuery};
use crate::error::{Error, Result};
use crate::field::{validate_odd_prime, FieldParams};
use crate::report::{self, Checked, Format, Generated, SurveyReport};
use crate::verify::{identity_suite, planarity_survey, sweep};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "dickson-do",
    version,
    about = "Reversed Dickson polynomials and Dembowski-Ostrom classification checks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format: text, json or csv.
    #[arg(long, global = true, default_value = "text")]
    pub format: Format,

    /// Write output to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Worker threads for sweeps.
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,

    /// Omit wall-clock timings so repeated runs are byte-identical.
    #[arg(long, global = true)]
    pub no_timing: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the constant-free reversed Dickson polynomial.
    Gen(InstanceArgs),
    /// Decide whether the polynomial is Dembowski-Ostrom, with witnesses.
    Check(InstanceArgs),
    /// Evaluate the closed-form classification rule.
    Classify(InstanceArgs),
    /// Compare the rule oracle with DO detection over a grid of (n, d).
    Sweep(SweepArgs),
    /// Run the construction and scaling identity checks.
    Identities(IdentityArgs),
    /// Planarity and permutation survey of the DO instances.
    Planar(PlanarArgs),
}

#[derive(Debug, Args)]
pub struct InstanceArgs {
    /// Polynomial kind: first (D) or second (E).
    #[arg(long)]
    pub kind: DicksonKind,
    /// Odd prime characteristic.
    #[arg(long)]
    pub p: u64,
    /// Polynomial index.
    #[arg(long)]
    pub n: u64,
    /// Substitute x^d for x.
    #[arg(long, default_value_t = 1)]
    pub d: u64,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Polynomial kind: first (D) or second (E).
    #[arg(long)]
    pub kind: DicksonKind,
    /// Odd prime characteristic.
    #[arg(long)]
    pub p: u64,
    #[arg(long, default_value_t = 30)]
    pub n_max: u64,
    #[arg(long, default_value_t = 10)]
    pub d_max: u64,
}

#[derive(Debug, Args)]
pub struct IdentityArgs {
    /// Odd prime characteristic.
    #[arg(long)]
    pub p: u64,
    #[arg(long, default_value_t = 50)]
    pub n_max: u64,
    /// Extension degrees of the fields used for the scaling check.
    #[arg(long, value_delimiter = ',', default_value = "2")]
    pub e_list: Vec<u32>,
}

#[derive(Debug, Args)]
pub struct PlanarArgs {
    /// Polynomial kind: first (D) or second (E).
    #[arg(long)]
    pub kind: DicksonKind,
    /// Odd prime characteristic.
    #[arg(long)]
    pub p: u64,
    #[arg(long, value_delimiter = ',', default_value = "1,2")]
    pub e_list: Vec<u32>,
    #[arg(long, default_value_t = 10)]
    pub n_max: u64,
    #[arg(long, default_value_t = 4)]
    pub d_max: u64,
}

struct Output {
    text: String,
    exit: i32,
}

fn ok(text: String) -> Output {
    Output {
        text,
        exit: EXIT_OK,
    }
}

fn execute(cli: &Cli) -> Result<Output> {
    let format = cli.format;
    match &cli.command {
        Command::Gen(a) => {
            let q = DicksonQuery::new(a.kind, a.n, a.d, a.p)?;
            let g = Generated {
                kind: a.kind,
                p: a.p,
                n: a.n,
                d: a.d,
                polynomial: q.construct()?.to_string(),
            };
            report::render_generated(&g, format).map(ok)
        }
        Command::Check(a) => {
            let q = DicksonQuery::new(a.kind, a.n, a.d, a.p)?;
            let poly = q.construct()?;
            let verdict = is_do(&poly)?;
            let c = Checked {
                kind: a.kind,
                p: a.p,
                n: a.n,
                d: a.d,
                polynomial: poly.to_string(),
                verdict,
            };
            report::render_checked(&c, format).map(ok)
        }
        Command::Classify(a) => {
            let r = classify(a.kind, a.p, a.n, a.d)?;
            report::render_match(&r, format).map(ok)
        }
        Command::Sweep(a) => {
            if cli.jobs == 0 {
                return Err(Error::InvalidArgument("--jobs must be at least 1".into()));
            }
            let mut r = sweep(a.kind, a.p, a.n_max, a.d_max, cli.jobs)?;
            if cli.no_timing {
                r.runtime = None;
            }
            let exit = if r.passed() { EXIT_OK } else { EXIT_VIOLATION };
            Ok(Output {
                text: report::render_sweep(&r, format)?,
                exit,
            })
        }
        Command::Identities(a) => {
            validate_odd_prime(a.p)?;
            let fields = a
                .e_list
                .iter()
                .map(|&e| FieldParams::new(a.p, e))
                .collect::<Result<Vec<_>>>()?;
            let r = identity_suite(a.p, a.n_max, &fields)?;
            let exit = if r.passed() { EXIT_OK } else { EXIT_VIOLATION };
            Ok(Output {
                text: report::render_identities(&r, format)?,
                exit,
            })
        }
        Command::Planar(a) => {
            let rows = planarity_survey(a.kind, a.p, &a.e_list, a.n_max, a.d_max)?;
            let r = SurveyReport {
                kind: a.kind,
                p: a.p,
                e_list: a.e_list.clone(),
                n_max: a.n_max,
                d_max: a.d_max,
                rows,
            };
            report::render_survey(&r, format).map(ok)
        }
    }
}

/// Parses `args` (program name first), runs the subcommand and returns the
/// exit code. Output goes to `stdout` unless `--out` is given.
pub fn dispatch<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{rendered}");
                EXIT_USAGE
            } else {
                let _ = write!(stdout, "{rendered}");
                EXIT_OK
            };
        }
    };
    let out = match execute(&cli) {
        Ok(out) => out,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &out.text),
        None => stdout.write_all(out.text.as_bytes()),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: cannot write output: {e}");
        return EXIT_USAGE;
    }
    out.exit
}
