use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use chordlab::ctx::Ctx;
use chordlab::emit::{self, EnumFamily, Format};
use chordlab::families;
use chordlab::report;
use chordlab::suite::{self, RunConfig, Status};
use chordlab_core::algebra::MVPoly;
use chordlab_core::grammar::parse_grammar;
use chordlab_core::stirling::{gamma_table, xi_table};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "chordlab",
    version,
    about = "Enumerate matchings and permutations, print their generating polynomials, and verify identities between them"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List every object of a family with its statistics.
    Enumerate {
        #[arg(long, value_enum)]
        family: EnumFamily,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, env = "CHORDLAB_JOBS", default_value_t = 1)]
        jobs: usize,
        /// Allow sizes above the family limit.
        #[arg(long)]
        force: bool,
    },
    /// Print a generating polynomial.
    Poly {
        #[arg(long, value_enum)]
        name: PolyName,
        #[arg(long)]
        n: usize,
        /// `json` prints the coefficient table for `xi` and `gamma`.
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long, env = "CHORDLAB_JOBS", default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        force: bool,
    },
    /// Run the identity checks.
    Verify {
        /// Comma-separated check ids, or `all`.
        #[arg(long, value_delimiter = ',', default_value = "all")]
        checks: Vec<String>,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, default_value_t = suite::DEFAULT_EGF_ORDER)]
        egf_order: usize,
        #[arg(long, env = "CHORDLAB_JOBS", default_value_t = 1)]
        jobs: usize,
        #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
        report: ReportFormat,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Report 0 ms for every check so output is byte-stable.
        #[arg(long)]
        no_timings: bool,
        #[arg(long)]
        force: bool,
    },
    /// Apply the formal derivative of a grammar to a seed polynomial.
    Grammar {
        #[arg(long)]
        rules: PathBuf,
        #[arg(long)]
        seed: String,
        #[arg(long)]
        iterations: u32,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "verbatim")]
enum PolyName {
    An,
    Anxy,
    Anpq,
    Mn,
    Bn,
    #[value(name = "dn")]
    Dn,
    #[value(name = "dBn")]
    DBn,
    Cn,
    #[value(name = "NCA")]
    Nca,
    #[value(name = "NCR")]
    Ncr,
    Qn,
    In,
    #[value(name = "xi")]
    Xi,
    #[value(name = "gamma")]
    Gamma,
}

impl PolyName {
    fn hard_limit(self) -> usize {
        match self {
            PolyName::Bn | PolyName::DBn => 8,
            PolyName::Xi | PolyName::Gamma => 40,
            _ => 10,
        }
    }
}

enum Failure {
    Usage(String),
    Checks,
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn guard(what: &str, n: usize, limit: usize, force: bool) -> Result<(), Failure> {
    if n > limit && !force {
        return Err(Failure::Usage(format!(
            "{what} at n = {n} exceeds the limit {limit}; pass --force to run it"
        )));
    }
    Ok(())
}

fn open_out(path: &Option<PathBuf>) -> Result<Box<dyn Write>, Failure> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Enumerate {
            family,
            n,
            format,
            out,
            jobs,
            force,
        } => {
            guard(&format!("{family:?}").to_lowercase(), n, family.hard_limit(), force)?;
            let mut w = open_out(&out)?;
            emit::enumerate(&Ctx::new(jobs.max(1)), family, n, format, &mut w)?;
            w.flush()?;
        }
        Command::Poly {
            name,
            n,
            format,
            jobs,
            force,
        } => {
            guard(&format!("{name:?}"), n, name.hard_limit(), force)?;
            if n == 0 {
                return Err(Failure::Usage("--n must be at least 1".into()));
            }
            let text = match (name, format) {
                (PolyName::Xi, Format::Json) => emit::table_json("xi", &xi_table(n)),
                (PolyName::Gamma, Format::Json) => emit::table_json("gamma", &gamma_table(n)),
                (_, Format::Text) => format!("{}\n", poly(name, n, &Ctx::new(jobs.max(1)))),
                _ => {
                    return Err(Failure::Usage(
                        "poly supports --format text, or json for xi and gamma".into(),
                    ))
                }
            };
            io::stdout().write_all(text.as_bytes())?;
        }
        Command::Verify {
            checks,
            max_n,
            egf_order,
            jobs,
            report,
            out,
            no_timings,
            force,
        } => {
            let cfg = RunConfig {
                max_n,
                egf_order,
                jobs: jobs.max(1),
                timings: !no_timings,
                force,
                fault: None,
            };
            let results = suite::run_checks(&checks, &cfg).map_err(|e| Failure::Usage(e.to_string()))?;
            let text = match report {
                ReportFormat::Json => report::to_json(&results),
                ReportFormat::Text => report::to_text(&results, cfg.timings),
            };
            let mut w = open_out(&out)?;
            w.write_all(text.as_bytes())?;
            w.flush()?;
            if out.is_some() && report == ReportFormat::Json {
                print!("{}", report::to_text(&results, cfg.timings));
            }
            if results.iter().any(|r| r.status == Status::Fail) {
                return Err(Failure::Checks);
            }
        }
        Command::Grammar {
            rules,
            seed,
            iterations,
        } => {
            let g = read(&rules)?;
            let g = parse_grammar(&g).map_err(|e| Failure::Usage(format!("{}: {e}", rules.display())))?;
            let seed: MVPoly = seed.parse().map_err(|e| Failure::Usage(format!("--seed: {e}")))?;
            println!("{}", g.d_iter(&seed, iterations));
        }
    }
    Ok(())
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn poly(name: PolyName, n: usize, ctx: &Ctx) -> MVPoly {
    match name {
        PolyName::An => families::eulerian(ctx, n),
        PolyName::Anxy => families::eulerian_xy(ctx, n),
        PolyName::Anpq => families::eulerian_xpq(ctx, n),
        PolyName::Mn => families::m_poly(ctx, n),
        PolyName::Bn => families::b_poly(ctx, n),
        PolyName::Dn => families::derangement_poly(ctx, n),
        PolyName::DBn => families::type_b_derangement_poly(ctx, n),
        PolyName::Cn => families::c_poly(ctx, n),
        PolyName::Nca => families::nca_poly(ctx, n),
        PolyName::Ncr => families::ncr_poly(ctx, n),
        PolyName::Qn => families::q_poly(ctx, n),
        PolyName::In => families::i_poly(ctx, n),
        PolyName::Xi => xi_table(n).to_poly(["x", "y", "z"]),
        PolyName::Gamma => gamma_table(n).to_poly(["x", "y", "z"]),
    }
}
