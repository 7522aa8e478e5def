use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use hn_codes_cli::commands::{self, CliError, Limits, Outcome, Side, Subsets};
use hn_codes_cli::report::{Input, Report};
use hn_codes_cli::selftest;

#[derive(Parser, Debug)]
#[command(name = "hn-codes", version, about = "Harder-Narasimhan invariants of linear codes and matroids")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Raise the subset-enumeration cap to this many coordinates.
    #[arg(long = "max-enum", global = true, value_name = "BITS")]
    max_enum: Option<usize>,

    /// Add wall-clock timing to the report (outside the results).
    #[arg(long, global = true)]
    timing: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum SideArg {
    Code,
    Subset,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Weight hierarchy and dimension/length profile.
    Weights { file: PathBuf },
    /// Canonical polygon of the code side or the subset side.
    Polygon {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = SideArg::Code)]
        side: SideArg,
        /// Write an SVG plot to this path.
        #[arg(long, value_name = "PATH")]
        svg: Option<PathBuf>,
    },
    /// Canonical filtration step by step.
    Filtration { file: PathBuf },
    /// Semistability and stability verdicts with a destabilizing witness.
    Semistable { file: PathBuf },
    /// Dual code, its polygons and the slope map.
    Dual { file: PathBuf },
    /// Cohomology dimensions and the duality identities.
    Rr {
        file: PathBuf,
        /// One subset, as a bitmask with bit i for coordinate i+1.
        #[arg(long = "J", value_name = "BITMASK", conflicts_with = "all", required_unless_present = "all")]
        j: Option<u64>,
        /// Every subset.
        #[arg(long)]
        all: bool,
    },
    /// Tensor product weights against the Schaathun bound.
    Tensor { file_a: PathBuf, file_b: PathBuf },
    /// Matroid hierarchy, gaps and identities.
    Matroid { file: PathBuf },
    /// Worked examples and the verification suites at built-in sizes.
    Selftest,
}

fn args_echo(command: &Command) -> (String, Vec<String>) {
    let p = |x: &PathBuf| x.display().to_string();
    match command {
        Command::Weights { file } => ("weights".into(), vec![p(file)]),
        Command::Polygon { file, side, svg } => {
            let mut a = vec![p(file), "--side".into(), side_of(*side).name().into()];
            if let Some(s) = svg {
                a.extend(["--svg".into(), p(s)]);
            }
            ("polygon".into(), a)
        }
        Command::Filtration { file } => ("filtration".into(), vec![p(file)]),
        Command::Semistable { file } => ("semistable".into(), vec![p(file)]),
        Command::Dual { file } => ("dual".into(), vec![p(file)]),
        Command::Rr { file, j, .. } => match j {
            Some(j) => ("rr".into(), vec![p(file), "--J".into(), j.to_string()]),
            None => ("rr".into(), vec![p(file), "--all".into()]),
        },
        Command::Tensor { file_a, file_b } => ("tensor".into(), vec![p(file_a), p(file_b)]),
        Command::Matroid { file } => ("matroid".into(), vec![p(file)]),
        Command::Selftest => ("selftest".into(), vec![]),
    }
}

fn side_of(s: SideArg) -> Side {
    match s {
        SideArg::Code => Side::Code,
        SideArg::Subset => Side::Subset,
    }
}

fn run(command: &Command, limits: Limits) -> Result<(Outcome, Vec<Input>), CliError> {
    let one = |file: &PathBuf, f: &dyn Fn(&hn_codes::code::LinearCode) -> Result<Outcome, CliError>| {
        let (code, input) = commands::load_code(file)?;
        Ok((f(&code)?, vec![input]))
    };
    match command {
        Command::Weights { file } => one(file, &|c| commands::weights(c, limits)),
        Command::Filtration { file } => one(file, &|c| commands::filtration(c, limits)),
        Command::Semistable { file } => one(file, &|c| commands::semistable(c, limits)),
        Command::Dual { file } => one(file, &|c| commands::dual(c, limits)),
        Command::Rr { file, j, .. } => {
            let which = j.map_or(Subsets::All, Subsets::One);
            one(file, &|c| commands::riemann_roch(c, which, limits))
        }
        Command::Polygon { file, side, svg } => {
            let (code, input) = commands::load_code(file)?;
            let (outcome, picture) = commands::polygon_cmd(&code, side_of(*side), limits, svg.is_some())?;
            if let (Some(path), Some(picture)) = (svg, picture) {
                std::fs::write(path, picture)
                    .map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display())))?;
            }
            Ok((outcome, vec![input]))
        }
        Command::Tensor { file_a, file_b } => {
            let (a, ia) = commands::load_code(file_a)?;
            let (b, ib) = commands::load_code(file_b)?;
            Ok((commands::tensor_cmd(&a, &b, limits)?, vec![ia, ib]))
        }
        Command::Matroid { file } => {
            let (m, inputs) = commands::load_matroid(file)?;
            Ok((commands::matroid_cmd(&m)?, inputs))
        }
        Command::Selftest => {
            let (results, passed) = selftest::run().map_err(commands::compute_error)?;
            Ok((Outcome { results, violation: !passed }, vec![]))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let limits = match cli.max_enum {
        Some(bits) => {
            eprintln!(
                "warning: enumeration cap set to {bits} coordinates (defaults: {} for codes, {} for tensor products); \
                 time and memory grow as 2^{bits}",
                commands::DEFAULT_CODE_LIMIT,
                commands::DEFAULT_TENSOR_LIMIT
            );
            Limits::uniform(bits)
        }
        None => Limits::default(),
    };
    let start = Instant::now();
    let (command, args) = args_echo(&cli.command);
    match run(&cli.command, limits) {
        Ok((outcome, inputs)) => {
            let report = Report {
                command,
                args,
                inputs,
                results: outcome.results,
                elapsed_ms: cli.timing.then(|| start.elapsed().as_secs_f64() * 1e3),
            };
            let text = match cli.format {
                Format::Json => report.to_json(),
                Format::Csv => report.to_csv(),
            };
            print!("{text}");
            if outcome.violation {
                eprintln!("error: a verification failed; see the report");
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
