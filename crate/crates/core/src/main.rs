use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use tcbundle::cli::{ring_dump, run_criteria, run_planner, SpecFile, WhichRing};
use tcbundle::poly::CoefficientRing;

#[derive(Parser)]
#[command(name = "tcbundle", version, about = "Obstructions to sectional category of fibrewise configuration bundles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Coeffs {
    F2,
    Z,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    Proj,
    Qtilde,
    Grassmann,
    Feder,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate every cohomological criterion for the bundle in a spec file.
    Criteria {
        spec: PathBuf,
        #[arg(long)]
        kmax: Option<u32>,
        #[arg(long, value_enum)]
        coeffs: Option<Coeffs>,
        /// Print key=value lines.
        #[arg(long)]
        machine: bool,
    },
    /// Build the explicit motion planner on S^n and verify it on samples.
    Planner {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        machine: bool,
    },
    /// Dump a completed ring presentation.
    Ring {
        spec: PathBuf,
        #[arg(long, value_enum)]
        which: Which,
        #[arg(long, value_enum)]
        coeffs: Option<Coeffs>,
    },
}

fn coeffs(c: Option<Coeffs>) -> Option<CoefficientRing> {
    c.map(|c| match c {
        Coeffs::F2 => CoefficientRing::F2,
        Coeffs::Z => CoefficientRing::Integers,
    })
}

fn load(path: &PathBuf) -> Result<SpecFile, ExitCode> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        eprintln!("error: cannot read {}: {e}", path.display());
        ExitCode::from(2)
    })?;
    SpecFile::parse(&text).map_err(|e| {
        eprintln!("error: {}: {e}", path.display());
        ExitCode::from(2)
    })
}

fn run(cli: Cli) -> Result<ExitCode, ExitCode> {
    match cli.command {
        Command::Criteria {
            spec,
            kmax,
            coeffs: c,
            machine,
        } => {
            let spec = load(&spec)?;
            let report = run_criteria(&spec, kmax, coeffs(c));
            if machine {
                print!("{}", report.render_machine());
            } else {
                print!("{}", report.render_text());
            }
            Ok(if report.has_errors() { ExitCode::from(1) } else { ExitCode::SUCCESS })
        }
        Command::Planner {
            n,
            samples,
            seed,
            machine,
        } => {
            let report = run_planner(n, samples, seed).map_err(|e| {
                eprintln!("error: {e}");
                ExitCode::from(2)
            })?;
            if machine {
                print!("{}", report.to_key_values());
            } else {
                println!("planner on S^{n}: {samples} sample pairs, seed {seed}");
                println!("  endpoint error     {:.3e}", report.max_endpoint_error);
                println!("  diagonal error     {:.3e}", report.max_diagonal_error);
                println!("  off-sphere error   {:.3e}", report.max_unit_error);
                println!("  cover failures     {}", report.cover_failures);
                println!("  largest step       {:.3e}", report.max_step);
                println!("  continuity excess  {:.3e}", report.max_continuity_excess);
                println!("  equivariance error {:.3e}", report.max_equivariance_error);
                println!("  path errors        {}", report.path_errors);
                println!("{}", if report.passes() { "PASS" } else { "FAIL" });
            }
            Ok(if report.passes() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Ring { spec, which, coeffs: c } => {
            let spec = load(&spec)?;
            let which = match which {
                Which::Proj => WhichRing::Proj,
                Which::Qtilde => WhichRing::QTilde,
                Which::Grassmann => WhichRing::Grassmann,
                Which::Feder => WhichRing::Feder,
            };
            let dump = ring_dump(&spec, which, coeffs(c)).map_err(|e| {
                eprintln!("error: {e}");
                ExitCode::from(2)
            })?;
            print!("{dump}");
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    run(cli).unwrap_or_else(|code| code)
}
