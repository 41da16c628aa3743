//! `plethyx` — decompose the symmetric and anti-symmetric parts of
//! `h_λ²` and `e_λ²` into Schur functions, inspect the combinatorial
//! primitives, and run the verification suites.
//!
//! Exit codes: 0 success, 1 verification or internal failure, 2 usage
//! error.

mod suites;

use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use plethyx_core::domino::{
    cospin, domino_reading_word, enumerate_yamanouchi_domino_tableaux, littlewood_via_domino,
    square_shape,
};
use plethyx_core::jdt::{rectify, rectify_traced};
use plethyx_core::rsk::{rsk, rsk_tilde, Biword, BurgeWord};
use plethyx_core::sign::{decompose_square, Basis};
use plethyx_core::tableau::enumerate_ssyt;
use plethyx_core::{Composition, Partition, SkewShape, Tableau};

#[derive(Parser)]
#[command(name = "plethyx", version, about)]
struct Cli {
    /// Worker threads (default: available parallelism; the env var
    /// PLETHYX_THREADS is used when the flag is absent). Thread count
    /// never changes output bytes.
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BasisArg {
    H,
    E,
}

impl From<BasisArg> for Basis {
    fn from(b: BasisArg) -> Basis {
        match b {
            BasisArg::H => Basis::H,
            BasisArg::E => Basis::E,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Split h_λ² or e_λ² (optionally s_μ·h_λ² / s_μ·e_λ²) into the
    /// symmetric and anti-symmetric multiplicities per Schur term.
    Decompose(DecomposeArgs),
    /// Rectify a (skew) tableau by jeu de taquin.
    Rectify(RectifyArgs),
    /// Run the insertion correspondence on a biword (or a Burge word
    /// with --tilde) and print the tableau pair.
    Rsk(RskArgs),
    /// Enumerate semistandard fillings of a shape with a given content.
    Enumerate(EnumerateArgs),
    /// List the Yamanouchi domino tableaux for the one-row/one-column
    /// square and their cospins.
    Domino(DominoArgs),
    /// Run a verification suite; nonzero exit on any mismatch.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct DecomposeArgs {
    #[arg(long, value_enum)]
    basis: BasisArg,
    /// Partition λ as comma-separated parts, e.g. "2,1".
    #[arg(long)]
    lambda: String,
    /// Optional partition μ for the skew products s_μ·(…)².
    #[arg(long)]
    mu: Option<String>,
}

#[derive(Args)]
struct RectifyArgs {
    /// Tableau as JSON {"inner": [...], "rows": [[...]]}.
    #[arg(long, conflicts_with = "file")]
    tableau: Option<String>,
    /// Read the tableau JSON from a file.
    #[arg(long)]
    file: Option<std::path::PathBuf>,
    /// Also emit the slide-by-slide frames.
    #[arg(long)]
    trace: bool,
}

#[derive(Args)]
struct RskArgs {
    /// Biword as "u1,u2,.../v1,v2,...".
    #[arg(long)]
    biword: String,
    /// Treat the input as a Burge word.
    #[arg(long)]
    tilde: bool,
}

#[derive(Args)]
struct EnumerateArgs {
    /// Outer shape.
    #[arg(long)]
    shape: String,
    /// Content multiplicities, e.g. "2,2,1,1".
    #[arg(long)]
    content: String,
    /// Optional inner shape for skew enumeration.
    #[arg(long)]
    inner: Option<String>,
}

#[derive(Args)]
struct DominoArgs {
    #[arg(long)]
    n: u32,
    #[arg(long, value_enum)]
    basis: BasisArg,
    /// Draw each tableau as ASCII boxes.
    #[arg(long)]
    ascii: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// One of: littlewood, oracle, rsk-roundtrip, jdt-order,
    /// corollary-qi, domino, symantisym.
    #[arg(long)]
    suite: String,
    /// Upper bound for n in the littlewood/domino suites.
    #[arg(long, default_value_t = 8)]
    max_n: u32,
    /// Upper bound for |λ| in the oracle suite.
    #[arg(long, default_value_t = 4)]
    max_weight: u32,
    /// Number of random cases in the randomized suites.
    #[arg(long, default_value_t = 1000)]
    count: u64,
    /// Seed for the randomized suites; fixed seed means byte-identical
    /// output at any thread count.
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

/// Input errors → exit 2.
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

fn parse_partition(s: &str) -> Result<Partition, UsageError> {
    Ok(Partition::from_str(s)?)
}

fn thread_count(cli: &Cli) -> usize {
    cli.threads
        .or_else(|| {
            std::env::var("PLETHYX_THREADS")
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .unwrap_or_else(|| {
            std::thread::available_parallelism()
                .map(|n| n.get())
                .unwrap_or(1)
        })
        .max(1)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let threads = thread_count(&cli);
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .ok();

    let outcome = match &cli.command {
        Command::Decompose(args) => cmd_decompose(&cli, args),
        Command::Rectify(args) => cmd_rectify(&cli, args),
        Command::Rsk(args) => cmd_rsk(&cli, args),
        Command::Enumerate(args) => cmd_enumerate(&cli, args),
        Command::Domino(args) => cmd_domino(&cli, args),
        Command::Verify(args) => {
            return match suites::run(&args.suite, args.into()) {
                Ok(report) => {
                    print!("{report}");
                    ExitCode::SUCCESS
                }
                Err(suites::SuiteError::UnknownSuite(name)) => {
                    eprintln!("error: unknown suite {name:?}");
                    ExitCode::from(2)
                }
                Err(suites::SuiteError::Failed(report)) => {
                    print!("{report}");
                    ExitCode::from(1)
                }
            };
        }
    };

    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn cmd_decompose(cli: &Cli, args: &DecomposeArgs) -> Result<(), UsageError> {
    let lambda = parse_partition(&args.lambda)?;
    let mu = match &args.mu {
        Some(s) => parse_partition(s)?,
        None => Partition::empty(),
    };
    let table = decompose_square(args.basis.into(), &mu, &lambda);
    match cli.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&table).unwrap()),
        Format::Table => print!("{}", table.render_table()),
    }
    Ok(())
}

fn read_tableau(args: &RectifyArgs) -> Result<Tableau, UsageError> {
    let text = match (&args.tableau, &args.file) {
        (Some(t), _) => t.clone(),
        (None, Some(path)) => std::fs::read_to_string(path)?,
        (None, None) => return Err(UsageError("--tableau or --file required".into())),
    };
    let t: Tableau = serde_json::from_str(&text)?;
    if !t.is_semistandard() {
        return Err(UsageError("input tableau is not semistandard".into()));
    }
    Ok(t)
}

fn cmd_rectify(cli: &Cli, args: &RectifyArgs) -> Result<(), UsageError> {
    let t = read_tableau(args)?;
    if args.trace {
        let (result, traces) = rectify_traced(&t);
        match cli.format {
            Format::Json => {
                let js = serde_json::json!({
                    "result": result,
                    "trace": traces,
                });
                println!("{}", serde_json::to_string_pretty(&js).unwrap());
            }
            Format::Table => {
                println!("input:\n{t}");
                for (i, tr) in traces.iter().enumerate() {
                    println!(
                        "slide {} from ({}, {}):\n{}",
                        i + 1,
                        tr.start_corner.0,
                        tr.start_corner.1,
                        tr.result
                    );
                }
                println!("rectified:\n{result}");
            }
        }
    } else {
        let result = rectify(&t);
        match cli.format {
            Format::Json => println!("{}", serde_json::to_string_pretty(&result).unwrap()),
            Format::Table => print!("{result}"),
        }
    }
    Ok(())
}

fn cmd_rsk(cli: &Cli, args: &RskArgs) -> Result<(), UsageError> {
    let pair = if args.tilde {
        let w: BurgeWord = args.biword.parse()?;
        rsk_tilde(&w)
    } else {
        let w: Biword = args.biword.parse()?;
        rsk(&w)
    };
    match cli.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&pair).unwrap()),
        Format::Table => {
            println!("P:\n{}", pair.p);
            println!("Q:\n{}", pair.q);
        }
    }
    Ok(())
}

fn cmd_enumerate(cli: &Cli, args: &EnumerateArgs) -> Result<(), UsageError> {
    let outer = parse_partition(&args.shape)?;
    let inner = match &args.inner {
        Some(s) => parse_partition(s)?,
        None => Partition::empty(),
    };
    let shape = SkewShape::new(outer, inner)?;
    let content = Composition::from_str(&args.content)?;
    let tabs = enumerate_ssyt(&shape, &content);
    match cli.format {
        Format::Json => {
            let js = serde_json::json!({
                "count": tabs.len(),
                "tableaux": tabs,
            });
            println!("{}", serde_json::to_string_pretty(&js).unwrap());
        }
        Format::Table => {
            println!("{} tableaux of shape {shape} and content {content}", tabs.len());
            for t in &tabs {
                println!("{t}");
            }
        }
    }
    Ok(())
}

fn cmd_domino(cli: &Cli, args: &DominoArgs) -> Result<(), UsageError> {
    if args.n == 0 {
        return Err(UsageError("--n must be at least 1".into()));
    }
    let basis: Basis = args.basis.into();
    let shape = square_shape(basis, args.n);
    let tabs = enumerate_yamanouchi_domino_tableaux(&shape, 2 * args.n);
    let table = littlewood_via_domino(args.n, basis);
    match cli.format {
        Format::Json => {
            let entries: Vec<serde_json::Value> = tabs
                .iter()
                .map(|d| {
                    serde_json::json!({
                        "tableau": d,
                        "content": d.content(),
                        "cospin": cospin(d),
                        "reading_word": domino_reading_word(d),
                    })
                })
                .collect();
            let js = serde_json::json!({
                "shape": shape.parts(),
                "tableaux": entries,
                "table": table,
            });
            println!("{}", serde_json::to_string_pretty(&js).unwrap());
        }
        Format::Table => {
            println!(
                "{} Yamanouchi domino tableaux of shape ({shape})",
                tabs.len()
            );
            for d in &tabs {
                let word: Vec<String> = domino_reading_word(d)
                    .iter()
                    .map(u32::to_string)
                    .collect();
                println!(
                    "content=({}) cospin={} word={}",
                    Partition::new(d.content()).unwrap(),
                    cospin(d),
                    word.join("")
                );
                if args.ascii {
                    print!("{}", d.render_ascii());
                }
            }
            print!("{}", table.render_table());
        }
    }
    Ok(())
}

impl From<&VerifyArgs> for suites::SuiteConfig {
    fn from(args: &VerifyArgs) -> Self {
        suites::SuiteConfig {
            max_n: args.max_n,
            max_weight: args.max_weight,
            count: args.count,
            seed: args.seed,
        }
    }
}
