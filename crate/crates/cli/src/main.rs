use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hankel_core::chains::{c_decompose, gamma_tc, shape_of, Tableau};
use hankel_core::polyring::parse_monomial;
use hankel_core::report::Verdict;
use hankel_core::straighten::{reduce_tableau, MoveKind, Strategy};
use hankel_core::Error;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

mod sweep;

use sweep::{instances, overall, run_all, Check, Params, Preset};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(
    name = "hankel-forge",
    version,
    about = "Chain combinatorics and verification sweeps for extended Hankel determinantal ideals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// c-decomposition, shape and γ_t table of a monomial.
    Decompose {
        #[arg(short)]
        c: usize,
        /// Number of variables; defaults to the largest index present.
        #[arg(short)]
        n: Option<usize>,
        monomial: String,
        #[arg(long)]
        json: bool,
    },
    /// Quasi-sorted normal form of a tableau such as "1 4 7 10 / 3 12".
    Straighten {
        #[arg(short)]
        c: usize,
        tableau: String,
        #[arg(long, value_enum, default_value = "leftmost")]
        strategy: StrategyArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Runs a verification check on one instance or a sweep.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Leftmost,
    Random,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    check: Check,
    #[arg(short)]
    n: Option<usize>,
    #[arg(short)]
    c: Option<usize>,
    #[arg(short)]
    t: Option<usize>,
    /// Shape such as 3,2.
    #[arg(long, value_delimiter = ',')]
    tau: Option<Vec<usize>>,
    #[arg(short)]
    s: Option<usize>,
    /// Secant order.
    #[arg(short)]
    r: Option<usize>,
    /// Degree bound for oracle comparisons.
    #[arg(long)]
    bound: Option<u32>,
    /// Wall-clock budget for the whole run.
    #[arg(long, env = "HANKEL_FORGE_BUDGET_SEC", default_value_t = 600)]
    budget_sec: u64,
    /// Number of seeded random cases for the confluence check.
    #[arg(long)]
    seeds: Option<u64>,
    /// First seed.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum)]
    preset: Option<Preset>,
    #[arg(long)]
    json: bool,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Decompose { c, n, monomial, json } => decompose(c, n, &monomial, json),
        Command::Straighten { c, tableau, strategy, seed, json } => straighten(c, &tableau, strategy, seed, json),
        Command::Verify(args) => verify(args),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("hankel-forge: {e}");
            ExitCode::from(match e {
                Error::Budget(_) => EXIT_BUDGET,
                _ => EXIT_USAGE,
            })
        }
    }
}

fn decompose(c: usize, n: Option<usize>, text: &str, as_json: bool) -> hankel_core::Result<u8> {
    if c == 0 {
        return Err(Error::Range("c must be positive".into()));
    }
    let delta = parse_monomial(text, n)?;
    let n = delta.nvars();
    let m = (n + c) / (c + 1);
    let chains = c_decompose(&delta, c);
    let tableau = Tableau::new(chains);
    let shape = shape_of(&delta, c);
    let gamma: Vec<usize> = (1..=m).map(|t| gamma_tc(&delta, t, c)).collect();
    if as_json {
        let rows: Vec<&[usize]> = tableau.rows.iter().map(|r| r.indices()).collect();
        let v = json!({"n": n, "c": c, "m": m, "tableau": rows, "shape": shape.parts(), "gamma": gamma});
        println!("{v}");
    } else {
        println!("tableau: {tableau}");
        println!("shape: {shape}");
        for (t, g) in gamma.iter().enumerate() {
            println!("gamma_{} = {g}", t + 1);
        }
    }
    Ok(0)
}

fn straighten(c: usize, text: &str, strategy: StrategyArg, seed: u64, as_json: bool) -> hankel_core::Result<u8> {
    if c == 0 {
        return Err(Error::Range("c must be positive".into()));
    }
    let t = Tableau::parse(text, c)?;
    let strategy = match strategy {
        StrategyArg::Leftmost => Strategy::Leftmost,
        StrategyArg::Random => Strategy::Random,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let red = reduce_tableau(&t, c, strategy, &mut rng)?;
    if as_json {
        let v = json!({"input": t.to_string(), "c": c, "seed": seed, "normal_form": red.tableau.to_string(), "trace": red.trace});
        println!("{v}");
    } else {
        println!("{}", red.tableau);
        for (k, step) in red.trace.iter().enumerate() {
            let kind = match step.kind {
                MoveKind::Plucker => "plucker",
                MoveKind::NewType => "new-type",
            };
            println!("  {}. {kind} on rows {} {}: {}", k + 1, step.rows.0 + 1, step.rows.1 + 1, step.result);
        }
    }
    Ok(0)
}

fn verify(args: VerifyArgs) -> hankel_core::Result<u8> {
    let params = Params {
        n: args.n,
        c: args.c,
        t: args.t,
        tau: args.tau,
        s: args.s,
        r: args.r,
        bound: args.bound,
        seeds: args.seeds,
        seed: args.seed,
        preset: args.preset,
    };
    if args.budget_sec == 0 {
        return Err(Error::Range("budget must be positive".into()));
    }
    let list = instances(args.check, &params).map_err(Error::Precondition)?;
    let reports = run_all(&list, Duration::from_secs(args.budget_sec))?;
    let verdict = overall(&reports);
    let text = if args.json {
        let v = json!({"check": args.check.name(), "verdict": verdict, "reports": reports});
        serde_json::to_string_pretty(&v).expect("reports serialize") + "\n"
    } else {
        let mut s: String = reports.iter().map(|r| r.summary() + "\n").collect();
        let count = |v: Verdict| reports.iter().filter(|r| r.verdict == v).count();
        s.push_str(&format!(
            "{}: {} pass, {} fail, {} budget\n",
            args.check.name(),
            count(Verdict::Pass),
            count(Verdict::Fail),
            count(Verdict::Budget)
        ));
        s
    };
    match &args.out {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| Error::Precondition(format!("{}: {e}", path.display())))?
        }
        None => std::io::stdout().write_all(text.as_bytes()).expect("stdout"),
    }
    Ok(match verdict {
        Verdict::Pass => 0,
        Verdict::Fail => EXIT_FAIL,
        Verdict::Budget => EXIT_BUDGET,
    })
}
