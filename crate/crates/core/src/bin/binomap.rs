use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use binomap::{
    adjacent_minors, build_incidence, decompose, enumerate_consistent, enumerate_covers,
    parse_system, DecomposeOptions, EnumerationOptions, Error, PolynomialSystem,
};

const EXIT_PARSE: u8 = 1;
const EXIT_NOT_BINOMIAL: u8 = 2;
const EXIT_BRANCH_LIMIT: u8 = 3;
const EXIT_INTERNAL: u8 = 4;
const EXIT_MISMATCH: u8 = 5;
const EXIT_USAGE: u8 = 64;

/// Decompose binomial systems into monomial maps.
#[derive(Parser)]
#[command(name = "binomap", version)]
struct Cli {
    /// Worker threads for the parallel search (default: all cores).
    #[arg(long, global = true, env = "BINOMAP_THREADS")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decompose the system in a file into monomial maps.
    Solve(SolveArgs),
    /// Decompose 2xn adjacent minors and compare with the Fibonacci counts.
    Bench(BenchArgs),
    /// Print the monomial/variable incidence matrix.
    Incidence { path: PathBuf },
    /// List zero-variable selections.
    Enumerate(EnumerateArgs),
}

#[derive(Args)]
struct SolveArgs {
    path: PathBuf,
    #[arg(long)]
    json: bool,
    /// Only selections of the pure dimension.
    #[arg(long)]
    pure_dim: bool,
    #[arg(long)]
    max_size: Option<usize>,
    /// Seed for the verification samples.
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
    #[arg(long, default_value_t = binomap::toric::DEFAULT_BRANCH_LIMIT)]
    branch_limit: usize,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, default_value_t = 3)]
    min_n: usize,
    #[arg(long, default_value_t = 12)]
    max_n: usize,
    #[arg(long)]
    csv: bool,
}

#[derive(Args)]
struct EnumerateArgs {
    path: PathBuf,
    /// Plain row covers instead of consistent selections.
    #[arg(long)]
    covers_only: bool,
    #[arg(long)]
    pure_dim: bool,
    #[arg(long)]
    max_size: Option<usize>,
    #[arg(long)]
    json: bool,
}

/// Reported failure: message for stderr plus exit status.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Syntax { .. } | Error::ZeroCoefficient { .. } | Error::ZeroPolynomial { .. } => {
                EXIT_PARSE
            }
            Error::NotBinomial { .. } => EXIT_NOT_BINOMIAL,
            Error::BranchLimit { .. } => EXIT_BRANCH_LIMIT,
            _ => EXIT_INTERNAL,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn fail(code: u8, message: impl Into<String>) -> Failure {
    Failure {
        code,
        message: message.into(),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = match cli.threads {
        Some(0) => Err(fail(EXIT_USAGE, "--threads must be positive")),
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| run(cli.command)),
            Err(e) => Err(fail(EXIT_INTERNAL, e.to_string())),
        },
        None => run(cli.command),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("binomap: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Solve(args) => cmd_solve(args),
        Command::Bench(args) => cmd_bench(args),
        Command::Incidence { path } => cmd_incidence(&path),
        Command::Enumerate(args) => cmd_enumerate(args),
    }
}

fn load(path: &Path) -> Result<PolynomialSystem, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| fail(EXIT_PARSE, format!("{}: {e}", path.display())))?;
    let sys = parse_system(&text).map_err(|e| {
        let f = Failure::from(e);
        fail(f.code, format!("{}: {}", path.display(), f.message))
    })?;
    Ok(sys)
}

fn cmd_solve(args: SolveArgs) -> Result<(), Failure> {
    let sys = load(&args.path)?;
    if sys.num_equations() == 0 {
        return Err(fail(
            EXIT_PARSE,
            format!("{}: no equations", args.path.display()),
        ));
    }
    let opts = DecomposeOptions {
        enumeration: EnumerationOptions {
            pure_dim: args.pure_dim,
            max_size: args.max_size,
            ..Default::default()
        },
        tolerance: args.tol,
        seed: args.seed,
        branch_limit: args.branch_limit,
        ..Default::default()
    };
    let d = decompose(&sys, &opts)?;
    if args.json {
        println!("{}", d.to_json_string());
    } else {
        print!("{}", d.render());
    }
    Ok(())
}

fn fibonacci(n: usize) -> u128 {
    let (mut a, mut b) = (0u128, 1u128);
    for _ in 0..n {
        (a, b) = (b, a + b);
    }
    a
}

fn cmd_bench(args: BenchArgs) -> Result<(), Failure> {
    if args.min_n < 3 || args.min_n > args.max_n {
        return Err(fail(EXIT_USAGE, "need 3 <= --min-n <= --max-n"));
    }
    if args.max_n > 180 {
        return Err(fail(EXIT_USAGE, "--max-n above 180 is not supported"));
    }
    let opts = DecomposeOptions {
        enumeration: EnumerationOptions {
            pure_dim: true,
            ..Default::default()
        },
        ..Default::default()
    };
    if args.csv {
        println!("n,maps,expected,seconds");
    } else {
        println!("{:>4} {:>10} {:>10} {:>10}", "n", "maps", "expected", "seconds");
    }
    let mut mismatches = Vec::new();
    for n in args.min_n..=args.max_n {
        let sys = adjacent_minors(2, n)?;
        let start = Instant::now();
        let d = decompose(&sys, &opts)?;
        let secs = start.elapsed().as_secs_f64();
        let expected = fibonacci(n);
        let ok = d.len() as u128 == expected;
        if !ok {
            mismatches.push(n);
        }
        if args.csv {
            println!("{n},{},{expected},{secs:.3}", d.len());
        } else {
            let flag = if ok { "" } else { "  MISMATCH" };
            println!("{n:>4} {:>10} {expected:>10} {secs:>10.3}{flag}", d.len());
        }
    }
    if mismatches.is_empty() {
        Ok(())
    } else {
        let ns: Vec<String> = mismatches.iter().map(|n| n.to_string()).collect();
        Err(fail(
            EXIT_MISMATCH,
            format!("count mismatch for n = {}", ns.join(", ")),
        ))
    }
}

fn cmd_incidence(path: &Path) -> Result<(), Failure> {
    let sys = load(path)?;
    print!("{}", build_incidence(&sys).render(&sys));
    Ok(())
}

fn cmd_enumerate(args: EnumerateArgs) -> Result<(), Failure> {
    let sys = load(&args.path)?;
    let m = build_incidence(&sys);
    let opts = EnumerationOptions {
        pure_dim: args.pure_dim,
        max_size: args.max_size,
        covers_only: args.covers_only,
        ..Default::default()
    };
    let selections = if args.covers_only {
        enumerate_covers(&m, &opts)
    } else {
        enumerate_consistent(&sys, &m, &opts)?
    };
    let named: Vec<Vec<&str>> = selections.iter().map(|s| s.names(sys.vars())).collect();
    if args.json {
        let v = serde_json::json!({ "count": named.len(), "selections": named });
        println!("{}", serde_json::to_string_pretty(&v).expect("json values serialize"));
    } else {
        for names in &named {
            if names.is_empty() {
                println!("{{}}");
            } else {
                println!("{}", names.join(" "));
            }
        }
    }
    Ok(())
}
