mod config;
mod verify;

use std::fs::File;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use grrforge::classical::{Family, GroupSpec};
use grrforge::experiment::{self, Measure, SweepConfig, TrialConfig};
use grrforge::grr::{self, ExhaustOptions};
use grrforge::perm::{Caps, InvolutionMode, PermGroup, Permutation, RngState};
use grrforge::{numthy, Error};
use serde_json::json;

use config::{Config, CAP_ENV};

const DEFAULT_SEED: u64 = 1;
const DEFAULT_TRIALS: usize = 1000;
const DEFAULT_SWEEP_TRIALS: usize = 500;

/// Cubic Cayley graphs of finite simple classical groups: primitive prime
/// divisors, ppd elements, involutions, generation and GRR tests.
///
/// Exit status: 0 on success, 1 when a computed result contradicts the
/// expected mathematics, 2 on usage or input errors.
#[derive(Debug, Parser)]
#[command(name = "grrforge", version)]
struct Cli {
    /// Settings file with `key = value` lines (enumeration_cap, degree_cap,
    /// trials, seed, threads); flags take precedence. The GRRFORGE_CAP
    /// environment variable overrides enumeration_cap.
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,

    /// Worker threads for experiments [default: number of CPUs]
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,

    /// Log more to standard error (repeat for more detail)
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    verbose: u8,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Primitive prime divisors of a^m - 1, as JSON
    Ppd {
        /// The base a (at least 2)
        #[arg(long, value_name = "A")]
        base: u64,
        /// The exponent m (at least 1)
        #[arg(long, value_name = "M")]
        exp: u32,
    },
    /// Check the elementary lemmas and closed-form tables
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Closed-form data for one group
    #[command(subcommand)]
    Group(GroupCommand),
    /// Draw random elements of a group
    #[command(subcommand)]
    Sample(SampleCommand),
    /// Decide whether Cay(G, {x, x^-1, y}) is a graphical regular representation
    #[command(subcommand)]
    Grr(GrrCommand),
    /// Monte Carlo estimate for one group, written as CSV
    Estimate(EstimateArgs),
    /// Estimates over a range of groups, ordered by q^n, written as CSV
    Sweep(SweepArgs),
}

#[derive(Debug, Subcommand)]
enum VerifyCommand {
    /// (n+2)! < min(2^(n²/4-n/8+8), 3^(n²/4-5n/8+4)) for 7 <= n <= N, exactly
    Lemma8 {
        /// Largest n checked
        #[arg(long, value_name = "N", default_value_t = 64)]
        max_n: u64,
    },
    /// n^(log2 n) < q^(s n) for the listed (q, n) pairs
    Lemma9 {
        /// The exponent s as a positive fraction NUM/DEN
        #[arg(long, value_name = "NUM/DEN", default_value = "1/2")]
        s: String,
        /// Comma-separated q:n pairs
        #[arg(
            long,
            value_name = "Q:N,...",
            default_value = "2:1,2:4,2:64,3:100,4:1000"
        )]
        pairs: String,
    },
    /// |π(n)| <= log2(n) for 2 <= n <= N
    Lemma10 {
        /// Largest n checked
        #[arg(long, value_name = "N", default_value_t = 10000)]
        max_n: u64,
        /// Print every row, not only failures
        #[arg(long)]
        all: bool,
    },
    /// List pairs (a, m) with m >= 3 whose ppd set is empty; only (2, 6) may appear
    Zsigmondy {
        /// Largest base a
        #[arg(long, value_name = "A", default_value_t = 20)]
        a_max: u64,
        /// Largest exponent m
        #[arg(long, value_name = "M", default_value_t = 12)]
        m_max: u32,
    },
    /// Exhaustive involution counts against the lower bound i(G)
    Table2(TableArgs),
    /// Exhaustive involution counts against the upper bound j(G)
    Table5(TableArgs),
    /// Brute-force |N_G(<x>)| for x of ppd order against the closed form
    Table8 {
        #[command(flatten)]
        group: OptionalGroupArgs,
        /// Order of x [default: largest ppd prime]
        #[arg(long, value_name = "R")]
        r: Option<u128>,
    },
}

#[derive(Debug, Args)]
struct TableArgs {
    #[command(flatten)]
    group: OptionalGroupArgs,
}

/// A group given by family, dimension and field size; a built-in list of
/// small groups is used when omitted.
#[derive(Debug, Args)]
struct OptionalGroupArgs {
    /// psl, psu, psp, pomega, pomega-plus or pomega-minus
    #[arg(long, value_parser = parse_family, requires_all = ["n", "q"])]
    family: Option<Family>,
    /// Dimension of the natural module
    #[arg(long)]
    n: Option<u32>,
    /// Field size, a prime power
    #[arg(long)]
    q: Option<u64>,
}

#[derive(Debug, Args)]
struct GroupArgs {
    /// psl, psu, psp, pomega, pomega-plus or pomega-minus
    #[arg(long, value_parser = parse_family)]
    family: Family,
    /// Dimension of the natural module
    #[arg(long)]
    n: u32,
    /// Field size, a prime power
    #[arg(long)]
    q: u64,
}

#[derive(Debug, Subcommand)]
enum GroupCommand {
    /// Order, ppd exponent and primes, involution bounds, normalizer order,
    /// minimal subgroup index, as JSON
    Info {
        #[command(flatten)]
        group: GroupArgs,
    },
}

#[derive(Debug, Subcommand)]
enum SampleCommand {
    /// An element whose order is a ppd prime, in cycle notation on the
    /// projective points
    PpdElement {
        #[command(flatten)]
        group: GroupArgs,
        /// Order of the element [default: largest ppd prime]
        #[arg(long, value_name = "R")]
        r: Option<u128>,
        /// Random seed [default: 1, or `seed` from --config]
        #[arg(long)]
        seed: Option<u64>,
    },
    /// A random involution, in cycle notation on the projective points
    Involution {
        #[command(flatten)]
        group: GroupArgs,
        /// Random seed [default: 1, or `seed` from --config]
        #[arg(long)]
        seed: Option<u64>,
        /// uniform (enumerable groups only) or power (g^(|g|/2) for random g)
        /// [default: uniform when the group is enumerable, else power]
        #[arg(long, value_parser = parse_mode)]
        mode: Option<InvolutionMode>,
    },
}

#[derive(Debug, Subcommand)]
enum GrrCommand {
    /// Sample x of order R and an involution y, and report the verdict as JSON
    Check {
        #[command(flatten)]
        group: GroupArgs,
        /// Order of x [default: largest ppd prime]
        #[arg(long, value_name = "R")]
        x_order: Option<u128>,
        /// Random seed [default: 1, or `seed` from --config]
        #[arg(long)]
        seed: Option<u64>,
        /// Involution sampling: uniform or power [default: uniform when enumerable]
        #[arg(long, value_parser = parse_mode)]
        mode: Option<InvolutionMode>,
        /// Write the Cayley graph as an edge list ("p cubic N M" header)
        #[arg(long, value_name = "FILE")]
        export: Option<PathBuf>,
    },
    /// Verdicts for every x (up to conjugacy and inversion) and every involution y
    Exhaust {
        #[command(flatten)]
        group: GroupArgs,
        /// Comma-separated orders of x [default: every order above 2]
        #[arg(long, value_name = "R,...", value_delimiter = ',')]
        x_orders: Option<Vec<u64>>,
        /// Scan every element x instead of class representatives
        #[arg(long)]
        all_pairs: bool,
        /// Print the report as JSON instead of a table
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Args)]
struct EstimateArgs {
    #[command(flatten)]
    group: GroupArgs,
    /// Number of trials [default: 1000, or `trials` from --config]
    #[arg(long)]
    trials: Option<usize>,
    /// Master seed; trial i uses a seed derived from it [default: 1, or `seed` from --config]
    #[arg(long)]
    seed: Option<u64>,
    /// generation, grr (enumerable groups) or k-and-l
    #[arg(long, value_parser = parse_measure, default_value = "generation")]
    measure: Measure,
    /// Involution sampling: auto, uniform or power
    #[arg(long, default_value = "auto")]
    mode: String,
    /// Order of x [default: largest ppd prime]
    #[arg(long, value_name = "R")]
    r: Option<u128>,
    /// Keep one x, drawn from this seed, for all trials
    #[arg(long, value_name = "SEED")]
    fix_x: Option<u64>,
    /// CSV output file [default: standard output]
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Also write configuration, per-trial records and summary as JSON
    #[arg(long, value_name = "FILE")]
    json: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct SweepArgs {
    /// Families to sweep, comma-separated
    #[arg(long, value_parser = parse_family, value_delimiter = ',', default_value = "psl")]
    family: Vec<Family>,
    /// Field sizes, comma-separated
    #[arg(long, value_delimiter = ',', default_value = "2")]
    q: Vec<u64>,
    /// Smallest dimension
    #[arg(long, default_value_t = 5)]
    n_min: u32,
    /// Largest dimension
    #[arg(long, default_value_t = 12)]
    n_max: u32,
    /// Trials per group [default: 500, or `trials` from --config]
    #[arg(long)]
    trials: Option<usize>,
    /// Master seed, shared by every group [default: 1, or `seed` from --config]
    #[arg(long)]
    seed: Option<u64>,
    /// generation, grr (k-and-l above the enumeration cap) or k-and-l
    #[arg(long, value_parser = parse_measure, default_value = "generation")]
    measure: Measure,
    /// Involution sampling: auto, uniform or power
    #[arg(long, default_value = "auto")]
    mode: String,
    /// CSV output file [default: standard output]
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Also write the rows and skipped groups as JSON
    #[arg(long, value_name = "FILE")]
    json: Option<PathBuf>,
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_mode(s: &str) -> Result<InvolutionMode, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_measure(s: &str) -> Result<Measure, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_auto_mode(s: &str) -> Result<Option<InvolutionMode>, Failure> {
    match s {
        "auto" => Ok(None),
        other => other.parse().map(Some).map_err(Failure::from),
    }
}

/// Why a command did not succeed.
#[derive(Debug)]
enum Failure {
    /// A result contradicting the expected mathematics (exit 1).
    Violation(String),
    /// Bad arguments or inputs (exit 2).
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::RetryBudgetExhausted(_) | Error::Undecided => Failure::Violation(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

struct Context {
    config: Config,
    caps: Caps,
}

impl Context {
    fn seed(&self, flag: Option<u64>) -> u64 {
        flag.or(self.config.seed).unwrap_or(DEFAULT_SEED)
    }
    fn trials(&self, flag: Option<usize>, default: usize) -> usize {
        flag.or(self.config.trials).unwrap_or(default)
    }
    fn group(&self, args: &GroupArgs) -> Result<PermGroup, Failure> {
        let spec = GroupSpec::new(args.family, args.n, args.q)?;
        Ok(PermGroup::with_caps(&spec, self.caps)?)
    }
}

fn spec_of(args: &GroupArgs) -> Result<GroupSpec, Failure> {
    Ok(GroupSpec::new(args.family, args.n, args.q)?)
}

fn print_json(value: &serde_json::Value) -> Result<(), Failure> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

fn finish_report(report: verify::Report, what: &str) -> Result<(), Failure> {
    print!("{}", report.text);
    if report.passed {
        Ok(())
    } else {
        Err(Failure::Violation(format!("{what} failed")))
    }
}

fn optional_specs(args: &OptionalGroupArgs) -> Result<Option<GroupSpec>, Failure> {
    match (args.family, args.n, args.q) {
        (Some(f), Some(n), Some(q)) => Ok(Some(GroupSpec::new(f, n, q)?)),
        (None, None, None) => Ok(None),
        _ => Err(Failure::Usage("--family, --n and --q go together".into())),
    }
}

fn parse_pairs(text: &str) -> Result<Vec<(u64, u64)>, Failure> {
    text.split(',')
        .map(|p| {
            let (q, n) = p
                .split_once(':')
                .ok_or_else(|| Failure::Usage(format!("expected q:n, got '{p}'")))?;
            let parse = |s: &str| {
                s.trim()
                    .parse::<u64>()
                    .map_err(|_| Failure::Usage(format!("invalid number '{s}'")))
            };
            Ok((parse(q)?, parse(n)?))
        })
        .collect()
}

fn run_verify(ctx: &Context, cmd: &VerifyCommand) -> Result<(), Failure> {
    match cmd {
        VerifyCommand::Lemma8 { max_n } => finish_report(verify::lemma8(*max_n)?, "lemma 8"),
        VerifyCommand::Lemma9 { s, pairs } => {
            let (num, den) = s
                .split_once('/')
                .and_then(|(a, b)| Some((a.trim().parse().ok()?, b.trim().parse().ok()?)))
                .ok_or_else(|| Failure::Usage(format!("expected NUM/DEN, got '{s}'")))?;
            finish_report(verify::lemma9(num, den, &parse_pairs(pairs)?)?, "lemma 9")
        }
        VerifyCommand::Lemma10 { max_n, all } => {
            finish_report(verify::lemma10(*max_n, *all)?, "lemma 10")
        }
        VerifyCommand::Zsigmondy { a_max, m_max } => {
            finish_report(verify::zsigmondy(*a_max, *m_max)?, "Zsigmondy scan")
        }
        VerifyCommand::Table2(args) | VerifyCommand::Table5(args) => {
            let upper = matches!(cmd, VerifyCommand::Table5(_));
            let specs = match optional_specs(&args.group)? {
                Some(s) => vec![s],
                None => verify::default_specs(),
            };
            let name = if upper {
                "table 5 bound"
            } else {
                "table 2 bound"
            };
            finish_report(verify::involution_table(&specs, ctx.caps, upper)?, name)
        }
        VerifyCommand::Table8 { group, r } => {
            let cases = match optional_specs(group)? {
                Some(s) => vec![(s, experiment::resolve_r(&s, *r)?)],
                None => verify::default_normalizer_cases(),
            };
            finish_report(
                verify::normalizer_table(&cases, ctx.caps)?,
                "table 8 formula",
            )
        }
    }
}

fn group_info(args: &GroupArgs) -> Result<(), Failure> {
    let spec = spec_of(args)?;
    let ppd = spec.ppd_primes()?;
    let normalizer = spec.normalizer_order_formula();
    let min_index = spec.min_subgroup_index()?;
    let (dim_y, big_n) = spec.aut_involution_parameters();
    print_json(&json!({
        "family": spec.family().id(),
        "n": spec.n(),
        "q": spec.q(),
        "p": spec.p(),
        "f": spec.f(),
        "order": spec.group_order().to_string(),
        "projective_degree": spec.projective_degree().to_string(),
        "q_pow_n": spec.q_pow_n().to_string(),
        "e": spec.ppd_exponent(),
        "ppd": ppd.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
        "i_lower": spec.involution_lower_bound().to_string(),
        "j_upper": spec.involution_upper_bound_aut().to_string(),
        "j_parameters": { "dim_y": dim_y, "N": big_n },
        "normalizer_order": normalizer.as_ref().ok().map(|v| v.to_string()),
        "normalizer_note": normalizer.err().map(|e| e.to_string()),
        "min_subgroup_index": min_index.to_string(),
        "godsil_hypothesis": spec.godsil_hypothesis()?,
    }))
}

fn element_json(g: &Permutation) -> serde_json::Value {
    json!({
        "order": g.order(),
        "descriptor": experiment::describe(g),
        "cycles": g.to_string(),
    })
}

fn run_sample(ctx: &Context, cmd: &SampleCommand) -> Result<(), Failure> {
    match cmd {
        SampleCommand::PpdElement { group, r, seed } => {
            let spec = spec_of(group)?;
            let r = experiment::resolve_r(&spec, *r)?;
            let g = ctx.group(group)?;
            let seed = ctx.seed(*seed);
            let x = g.find_ppd_element(r, &mut RngState::new(seed))?;
            print_json(&json!({
                "group": spec.to_string(),
                "degree": g.degree(),
                "r": r.to_string(),
                "seed": seed,
                "element": element_json(&x),
            }))
        }
        SampleCommand::Involution { group, seed, mode } => {
            let g = ctx.group(group)?;
            let mode = mode.unwrap_or_else(|| experiment::default_involution_mode(&g));
            let seed = ctx.seed(*seed);
            let y = g.sample_involution(mode, &mut RngState::new(seed))?;
            print_json(&json!({
                "group": g.spec().to_string(),
                "degree": g.degree(),
                "mode": mode.id(),
                "seed": seed,
                "element": element_json(&y),
            }))
        }
    }
}

fn run_grr(ctx: &Context, cmd: &GrrCommand) -> Result<(), Failure> {
    match cmd {
        GrrCommand::Check {
            group,
            x_order,
            seed,
            mode,
            export,
        } => {
            let spec = spec_of(group)?;
            let r = experiment::resolve_r(&spec, *x_order)?;
            let g = ctx.group(group)?;
            let mode = mode.unwrap_or_else(|| experiment::default_involution_mode(&g));
            let seed = ctx.seed(*seed);
            let mut rng = RngState::new(seed);
            let x = g.find_ppd_element(r, &mut rng)?;
            let y = g.sample_involution(mode, &mut rng)?;
            let verdict = grr::grr_verdict(&g, &x, &y)?;
            if let Some(path) = export {
                let graph = grr::build_cayley(&g, &x, &y)?;
                std::fs::write(path, graph.export())?;
            }
            print_json(&json!({
                "group": spec.to_string(),
                "seed": seed,
                "mode": mode.id(),
                "x": element_json(&x),
                "y": element_json(&y),
                "verdict": verdict,
            }))?;
            if verdict.necessity_holds() {
                Ok(())
            } else {
                Err(Failure::Violation("is_grr without k and l".into()))
            }
        }
        GrrCommand::Exhaust {
            group,
            x_orders,
            all_pairs,
            json,
        } => {
            let g = ctx.group(group)?;
            let opts = ExhaustOptions {
                x_orders: x_orders.clone(),
                representatives: !all_pairs,
            };
            let report = grr::exhaust(&g, &opts)?;
            if *json {
                print_json(&serde_json::to_value(&report)?)?;
            } else {
                let mut out = io::stdout().lock();
                writeln!(
                    out,
                    "{}: {} involutions, {}, godsil hypothesis {}",
                    report.spec,
                    report.involutions,
                    if report.representatives {
                        "x up to conjugacy and inversion"
                    } else {
                        "all x"
                    },
                    report.godsil_applicable
                )?;
                writeln!(
                    out,
                    "|x|\tx\tpairs\tgenerating\tgrr\tk_and_l\tmin stab\tmax stab"
                )?;
                for row in &report.rows {
                    let fmt = |v: Option<u128>| v.map_or("-".to_string(), |s| s.to_string());
                    writeln!(
                        out,
                        "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                        row.x_order,
                        row.x_count,
                        row.pairs,
                        row.generating,
                        row.grr,
                        row.k_and_l,
                        fmt(row.min_stabilizer),
                        fmt(row.max_stabilizer)
                    )?;
                }
                writeln!(out, "necessity violations: {}", report.necessity_violations)?;
            }
            if report.necessity_violations == 0 {
                Ok(())
            } else {
                Err(Failure::Violation(format!(
                    "{} pairs violate is_grr => k and l",
                    report.necessity_violations
                )))
            }
        }
    }
}

fn open_out(path: Option<&Path>) -> Result<Box<dyn Write>, Failure> {
    Ok(match path {
        Some(p) => Box::new(File::create(p)?),
        None => Box::new(io::stdout().lock()),
    })
}

fn run_estimate(ctx: &Context, args: &EstimateArgs) -> Result<(), Failure> {
    let spec = spec_of(&args.group)?;
    let config = TrialConfig {
        spec,
        r: args.r,
        trials: ctx.trials(args.trials, DEFAULT_TRIALS),
        master_seed: ctx.seed(args.seed),
        involution_mode: parse_auto_mode(&args.mode)?,
        measure: args.measure,
        fix_x: args.fix_x,
    };
    let result = experiment::run_experiment_with_caps(&config, ctx.caps)?;
    experiment::write_csv(
        std::slice::from_ref(&result.summary),
        open_out(args.out.as_deref())?,
    )?;
    if let Some(path) = &args.json {
        serde_json::to_writer_pretty(File::create(path)?, &result)?;
    }
    let bad = result
        .records
        .iter()
        .filter(|t| t.is_grr == Some(true) && !(t.k_holds && t.l_holds == Some(true)))
        .count();
    if bad == 0 {
        Ok(())
    } else {
        Err(Failure::Violation(format!(
            "{bad} records with is_grr but not k and l"
        )))
    }
}

fn run_sweep(ctx: &Context, args: &SweepArgs) -> Result<(), Failure> {
    if args.n_min > args.n_max {
        return Err(Failure::Usage("--n-min exceeds --n-max".into()));
    }
    let config = SweepConfig {
        families: args.family.clone(),
        n_range: (args.n_min, args.n_max),
        q_values: args.q.clone(),
        trials: ctx.trials(args.trials, DEFAULT_SWEEP_TRIALS),
        seed: ctx.seed(args.seed),
        measure: args.measure,
        involution_mode: parse_auto_mode(&args.mode)?,
        caps: ctx.caps,
    };
    let result = experiment::sweep(&config)?;
    experiment::write_csv(&result.rows, open_out(args.out.as_deref())?)?;
    if let Some(path) = &args.json {
        serde_json::to_writer_pretty(File::create(path)?, &result)?;
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let config = match &cli.config {
        Some(p) => Config::load(p).map_err(Failure::Usage)?,
        None => Config::default(),
    };
    let env_cap = std::env::var(CAP_ENV).ok();
    let caps = config.caps(env_cap.as_deref()).map_err(Failure::Usage)?;
    if let Some(n) = cli.threads.or(config.threads) {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Failure::Usage(e.to_string()))?;
    }
    let ctx = Context { config, caps };
    match &cli.command {
        Command::Ppd { base, exp } => {
            let primes = numthy::ppd(*base, *exp)?;
            print_json(&json!({
                "a": base,
                "m": exp,
                "ppd": primes
                    .iter()
                    .map(|&r| u64::try_from(r).map_or_else(|_| json!(r.to_string()), |v| json!(v)))
                    .collect::<Vec<_>>(),
            }))
        }
        Command::Verify(cmd) => run_verify(&ctx, cmd),
        Command::Group(GroupCommand::Info { group }) => group_info(group),
        Command::Sample(cmd) => run_sample(&ctx, cmd),
        Command::Grr(cmd) => run_grr(&ctx, cmd),
        Command::Estimate(args) => run_estimate(&ctx, args),
        Command::Sweep(args) => run_sweep(&ctx, args),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let level = match cli.verbose {
        0 => "warn",
        1 => "info",
        _ => "debug",
    };
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(level))
        .target(env_logger::Target::Stderr)
        .init();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Violation(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
