use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use zk3_core::lattice::IntegralLattice;
use zk3_core::quat::{quat_mul, CurveKind, OrderCase, QuatElement};
use zk3_core::repro::{any_failed, emit_report, run_claims, Format, RunOptions};
use zk3_core::Error;

#[derive(Parser)]
#[command(name = "zk3", version, about = "Exact checks for supersingular K3 and abelian surface lattices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the claim registry and emit a report.
    Repro {
        /// Claim id or glob over ids.
        #[arg(long)]
        claim: Option<String>,
        /// Primes for prime-parameterized claims (repeatable).
        #[arg(long = "prime", num_args = 1..)]
        primes: Vec<u64>,
        #[arg(long, value_enum, default_value_t = OutFormat::Json)]
        format: OutFormat,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Lattice utilities.
    Lattice {
        #[command(subcommand)]
        command: LatticeCommand,
    },
    /// Quaternion order arithmetic.
    Quat {
        #[command(subcommand)]
        command: QuatCommand,
    },
}

#[derive(Subcommand)]
enum LatticeCommand {
    /// Rank, discriminant and discriminant group of a JSON lattice.
    Disc { file: PathBuf },
}

#[derive(Subcommand)]
enum QuatCommand {
    /// Product of two elements given as comma-separated coordinates.
    Mul {
        #[arg(long, value_enum)]
        case: CaseArg,
        #[arg(long)]
        p: u64,
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Json,
    Markdown,
    Tsv,
}

#[derive(Clone, Copy, ValueEnum)]
enum CaseArg {
    J0,
    J1728,
}

impl From<OutFormat> for Format {
    fn from(f: OutFormat) -> Self {
        match f {
            OutFormat::Json => Format::Json,
            OutFormat::Markdown => Format::Markdown,
            OutFormat::Tsv => Format::Tsv,
        }
    }
}

impl From<CaseArg> for CurveKind {
    fn from(c: CaseArg) -> Self {
        match c {
            CaseArg::J0 => CurveKind::J0,
            CaseArg::J1728 => CurveKind::J1728,
        }
    }
}

enum Failure {
    Usage(Error),
    Check,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e)
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Repro {
            claim,
            primes,
            format,
            out,
        } => {
            let opts = RunOptions {
                filter: claim,
                primes: (!primes.is_empty()).then_some(primes),
            };
            let reports = run_claims(&opts)?;
            let text = emit_report(&reports, format.into())?;
            match out {
                Some(path) => std::fs::write(path, text).map_err(Error::from)?,
                None => print!("{text}"),
            }
            if any_failed(&reports) {
                return Err(Failure::Check);
            }
        }
        Command::Lattice {
            command: LatticeCommand::Disc { file },
        } => {
            let text = std::fs::read_to_string(file).map_err(Error::from)?;
            let l = IntegralLattice::from_json_str(&text)?;
            println!("label {}", l.label);
            println!("rank {}", l.rank());
            println!("disc {}", l.discriminant()?);
            println!("group {}", l.discriminant_group()?);
        }
        Command::Quat {
            command: QuatCommand::Mul { case, p, left, right },
        } => {
            let case = OrderCase::new(case.into(), p)?;
            let x = QuatElement::parse(case, &left)?;
            let y = QuatElement::parse(case, &right)?;
            println!("{}", quat_mul(&x, &y)?);
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(e)) => {
            eprintln!("zk3: {e}");
            ExitCode::from(2)
        }
    }
}
