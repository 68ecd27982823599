use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use onelevel::cli::{
    bench::{run_bench, to_csv, BenchConfig, StructureKind},
    gen::generate_sequence,
    Format, GenKind, GenSpec, Input, VerifyMode,
};
use onelevel::cli::{cmd_gen, cmd_inspect, cmd_verify};
use onelevel::{Error, Kappa};

#[derive(Parser)]
#[command(name = "onelevel", version, about = "One-level find-larger and level-ancestor structures")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a random sequence or tree.
    Gen(GenArgs),
    /// Check the structure against brute force, printing a JSON report.
    Verify(VerifyArgs),
    /// Time builds and queries, printing CSV.
    Bench(BenchArgs),
    /// Dump valleys, weights, jumps and ladders.
    Inspect(InspectArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Sequence,
    Tree,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Seq,
    Parent,
    Parens,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Seq => Format::Seq,
            FormatArg::Parent => Format::Parent,
            FormatArg::Parens => Format::Parens,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Exhaustive,
    Random,
}

#[derive(Args)]
struct Common {
    #[arg(long, default_value_t = 5, value_parser = parse_kappa)]
    kappa: usize,
    #[arg(long, value_enum, default_value = "seq")]
    format: FormatArg,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum, default_value = "sequence")]
    kind: KindArg,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Random-walk drift in [-1, 1].
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    bias: f64,
    #[arg(long)]
    max_degree: Option<usize>,
    /// Probability of attaching a new tree node to the previous one.
    #[arg(long, default_value_t = 0.0)]
    path_bias: f64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Input file, or `-` for stdin.
    input: PathBuf,
    #[command(flatten)]
    common: Common,
    #[arg(long, value_enum, default_value = "exhaustive")]
    mode: ModeArg,
    /// Query budget for random mode.
    #[arg(long, default_value_t = 100_000)]
    queries: u64,
}

#[derive(Args)]
struct BenchArgs {
    /// Input file; a random walk of length `--n` is generated when omitted.
    input: Option<PathBuf>,
    #[command(flatten)]
    common: Common,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value = "onelevel,doubling")]
    structures: String,
    #[arg(long, default_value_t = 1_000_000)]
    queries: usize,
    /// Queries per timed batch.
    #[arg(long, default_value_t = 10_000)]
    batch: usize,
}

#[derive(Args)]
struct InspectArgs {
    input: PathBuf,
    #[command(flatten)]
    common: Common,
}

fn parse_kappa(s: &str) -> Result<usize, String> {
    let k: usize = s.parse().map_err(|e| format!("{e}"))?;
    Kappa::new(k).map(Kappa::get).map_err(|e| e.to_string())
}

fn read_input(path: &Path) -> Result<String, Error> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        Ok(fs::read_to_string(path)?)
    }
}

fn write_output(out: Option<&Path>, text: &str) -> Result<(), Error> {
    match out {
        Some(p) => fs::write(p, text)?,
        None => io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Gen(a) => {
            let spec = GenSpec {
                kind: match a.kind {
                    KindArg::Sequence => GenKind::Sequence,
                    KindArg::Tree => GenKind::Tree,
                },
                n: a.n,
                seed: a.seed,
                bias: a.bias,
                max_degree: a.max_degree,
                path_bias: a.path_bias,
            };
            write_output(a.out.as_deref(), &cmd_gen(&spec)?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify(a) => {
            let input = Input::parse(&read_input(&a.input)?, a.common.format.into())?;
            let mode = match a.mode {
                ModeArg::Exhaustive => VerifyMode::Exhaustive,
                ModeArg::Random => VerifyMode::Random,
            };
            let kappa = Kappa::new(a.common.kappa)?;
            let report = cmd_verify(&input, kappa, mode, a.queries, a.common.seed)?;
            write_output(a.common.out.as_deref(), &(report.to_json() + "\n"))?;
            Ok(if report.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Bench(a) => {
            let values = match (&a.input, a.n) {
                (Some(path), _) => {
                    Input::parse(&read_input(path)?, a.common.format.into())?.search_sequence()
                }
                (None, Some(n)) if n > 0 => generate_sequence(n, a.common.seed, 0.0),
                _ => return Err(Error::BadSpec("give an input file or --n >= 1".into())),
            };
            let cfg = BenchConfig {
                structures: StructureKind::parse_list(&a.structures)?,
                kappa: Kappa::new(a.common.kappa)?,
                queries: a.queries,
                seed: a.common.seed,
                batch: a.batch,
            };
            let records = run_bench(&values, &cfg)?;
            write_output(a.common.out.as_deref(), &to_csv(&records))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Inspect(a) => {
            let input = Input::parse(&read_input(&a.input)?, a.common.format.into())?;
            let dump = cmd_inspect(&input.search_sequence(), Kappa::new(a.common.kappa)?)?;
            write_output(a.common.out.as_deref(), &dump)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
