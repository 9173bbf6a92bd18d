//! `minimax-sm` command-line tool.
//!
//! Exit codes: 0 success, 2 bad input or parameters, 3 solver precondition
//! failed, 4 oracle budget exceeded.

mod bench;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use minimax_sm::generators::{
    gen_fig1, gen_fig3, gen_fig4, gen_random, gen_random_top_truncated, gen_vc_reduction,
    Fig1Params, Fig3Params, GenError, TieBlockMode, UndirectedGraph, VCParams,
};
use minimax_sm::io::{self, pairs_doc, AgentSetDoc, FormatError, InstanceDoc, MatchingDoc};
use minimax_sm::oracles::{max_bp_over_completions, min_delete, min_super_bp, OracleBudget, OracleError};
use minimax_sm::solvers::{algorithm1, exact_min_super_bp, gale_shapley_completion, ExactOutcome, SolveError};
use minimax_sm::{
    build_witness_completion, is_super_stable, is_weakly_stable, obvious_blocking_pairs, super_blocking_pairs, Delta,
    Instance, Matching, TieBreak,
};
use serde_json::json;

#[derive(Parser)]
#[command(name = "minimax-sm", version, about = "Stable marriage with partially specified preferences")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate an instance file.
    Gen(GenArgs),
    /// Run a solver and write its report.
    Solve(SolveArgs),
    /// Exhaustive reference computations for small instances.
    Oracle(OracleArgs),
    /// Stability diagnostics for a given matching.
    Verify(VerifyArgs),
    /// Run an experiment suite and write CSV rows.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Fig1,
    Fig3,
    Fig4,
    Vc,
    Random,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long)]
    n: Option<usize>,
    /// Exact rational such as `1/4`. For `random` this is the budget.
    #[arg(long, value_parser = parse_delta)]
    delta: Option<Delta>,
    /// Graph file: first line `k m`, then `m` lines of 1-based edges.
    #[arg(long)]
    graph: Option<PathBuf>,
    #[arg(long)]
    k0: Option<usize>,
    #[arg(long, default_value_t = 4)]
    y: usize,
    #[arg(long, default_value_t = 2)]
    z: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Tie every block's women over the first block of men.
    #[arg(long)]
    figure_verbatim: bool,
    /// Random family only: strict men, women tie only at the bottom.
    #[arg(long)]
    top_truncated: bool,
    /// Instance output; stdout if absent.
    #[arg(short = 'o', long)]
    out: Option<PathBuf>,
    /// Companion output for fig4 (matching) and vc (certificate). Defaults
    /// to `<out>.matching.json` or `<out>.cert.json`.
    #[arg(long)]
    aux: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Algo {
    Gs,
    Exact,
    Algo1,
}

#[derive(Args)]
struct SolveArgs {
    #[arg(long, value_enum)]
    algo: Algo,
    #[arg(long)]
    input: PathBuf,
    /// Tie-breaking seed for `gs`; ascending order if absent.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, default_value_t = 3)]
    kmax: usize,
    #[arg(short = 'o', long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleMode {
    Minimax,
    MinSuperBp,
    MinDelete,
}

#[derive(Args)]
struct BudgetArgs {
    #[arg(long, default_value_t = OracleBudget::default().max_agents)]
    max_agents: usize,
    #[arg(long, default_value_t = OracleBudget::default().max_completions)]
    max_completions: u128,
    #[arg(long, default_value_t = OracleBudget::default().max_matchings)]
    max_matchings: u128,
}

#[derive(Args)]
struct OracleArgs {
    #[arg(long, value_enum)]
    mode: OracleMode,
    #[arg(long)]
    input: PathBuf,
    /// Required for `minimax`.
    #[arg(long)]
    matching: Option<PathBuf>,
    #[command(flatten)]
    budget: BudgetArgs,
    #[arg(short = 'o', long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    matching: PathBuf,
    #[arg(short = 'o', long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Suite {
    /// Every constructed instance family at a fixed size.
    Paper,
    Random,
}

#[derive(Args)]
pub struct BenchArgs {
    #[arg(long, value_enum)]
    pub suite: Suite,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Random suite: number of instances.
    #[arg(long, default_value_t = 60)]
    pub count: usize,
    /// Fill in `runtime_ms`. Off by default so output is reproducible.
    #[arg(long)]
    pub timing: bool,
}

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Precondition(String),
    Budget(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Precondition(_) => 3,
            CliError::Budget(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Precondition(m) | CliError::Budget(m) => m,
        }
    }
}

impl From<FormatError> for CliError {
    fn from(e: FormatError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<GenError> for CliError {
    fn from(e: GenError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<SolveError> for CliError {
    fn from(e: SolveError) -> Self {
        CliError::Precondition(e.to_string())
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        CliError::Budget(e.to_string())
    }
}

fn parse_delta(s: &str) -> Result<Delta, String> {
    s.trim().parse::<Delta>().map_err(|e| format!("expected a rational p/q: {e}"))
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))
}

fn write_out(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    let text = if text.ends_with('\n') { text.to_string() } else { format!("{text}\n") };
    match path {
        Some(p) => fs::write(p, text).map_err(|e| CliError::Input(format!("cannot write {}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load_instance(path: &Path) -> Result<Instance, CliError> {
    Ok(io::parse_instance(&read(path)?)?)
}

fn load_matching(path: &Path, n: usize) -> Result<Matching, CliError> {
    Ok(io::parse_matching(&read(path)?, n)?)
}

fn dump(v: &serde_json::Value) -> String {
    serde_json::to_string(v).expect("serializable")
}

fn need<T>(v: Option<T>, flag: &str, family: &str) -> Result<T, CliError> {
    v.ok_or_else(|| CliError::Input(format!("--{flag} is required for {family}")))
}

fn aux_path(args: &GenArgs, suffix: &str) -> Option<PathBuf> {
    args.aux.clone().or_else(|| args.out.as_ref().map(|o| o.with_extension(suffix)))
}

fn cmd_gen(args: &GenArgs) -> Result<(), CliError> {
    let (inst, aux): (Instance, Option<(&str, String)>) = match args.family {
        Family::Fig1 | Family::Fig4 => {
            let name = if matches!(args.family, Family::Fig1) { "fig1" } else { "fig4" };
            let mode = if args.figure_verbatim { TieBlockMode::FirstBlock } else { TieBlockMode::OwnBlock };
            let p = Fig1Params::new(need(args.n, "n", name)?, need(args.delta, "delta", name)?)?.with_mode(mode);
            if matches!(args.family, Family::Fig1) {
                (gen_fig1(&p), None)
            } else {
                let (inst, m) = gen_fig4(&p);
                (inst, Some(("matching.json", io::matching_to_json(&m))))
            }
        }
        Family::Fig3 => {
            let p = Fig3Params::new(need(args.n, "n", "fig3")?, need(args.delta, "delta", "fig3")?)?;
            (gen_fig3(&p), None)
        }
        Family::Vc => {
            let graph = UndirectedGraph::parse(&read(&need(args.graph.clone(), "graph", "vc")?)?)?;
            let k0 = need(args.k0, "k0", "vc")?;
            let (inst, cert) = gen_vc_reduction(&VCParams::new(graph, k0, args.y, args.z)?);
            (inst, Some(("cert.json", cert.to_json())))
        }
        Family::Random => {
            let n = need(args.n, "n", "random")?;
            let budget = args.delta.unwrap_or_else(|| Delta::new(1, 4));
            if budget > Delta::from_integer(1) {
                return Err(CliError::Input("delta budget must lie in [0, 1]".into()));
            }
            if n == 0 {
                return Err(CliError::Input("n must be positive".into()));
            }
            let inst = if args.top_truncated {
                gen_random_top_truncated(n, budget, args.seed)
            } else {
                gen_random(n, budget, args.seed)
            };
            (inst, None)
        }
    };
    write_out(args.out.as_deref(), &io::instance_to_json(&inst))?;
    if let Some((suffix, text)) = aux {
        match aux_path(args, suffix) {
            Some(p) => write_out(Some(&p), &text)?,
            None => eprintln!("note: companion {suffix} not written; pass -o or --aux"),
        }
    }
    eprintln!("n = {}, delta = {}", inst.n(), inst.delta());
    Ok(())
}

fn cmd_solve(args: &SolveArgs) -> Result<(), CliError> {
    let inst = load_instance(&args.input)?;
    let report = match args.algo {
        Algo::Gs => {
            let policy = args.seed.map_or(TieBreak::Ascending, TieBreak::Seeded);
            gale_shapley_completion(&inst, policy)
        }
        Algo::Exact => match exact_min_super_bp(&inst, args.kmax) {
            ExactOutcome::Found(r) => r,
            ExactOutcome::Exhausted { k_max } => {
                return Err(CliError::Precondition(format!(
                    "no matching found after demoting up to {k_max} pairs; raise --kmax"
                )))
            }
        },
        Algo::Algo1 => algorithm1(&inst)?,
    };
    write_out(args.out.as_deref(), &io::report_to_json(&report))
}

fn cmd_oracle(args: &OracleArgs) -> Result<(), CliError> {
    let inst = load_instance(&args.input)?;
    let b = &args.budget;
    let budget = OracleBudget { max_agents: b.max_agents, max_completions: b.max_completions, max_matchings: b.max_matchings };
    let doc = match args.mode {
        OracleMode::Minimax => {
            let path = args.matching.as_deref().ok_or_else(|| CliError::Input("--matching is required for minimax".into()))?;
            let m = load_matching(path, inst.n())?;
            json!({ "mode": "minimax", "max_blocking_pairs": max_bp_over_completions(&inst, &m, &budget)? })
        }
        OracleMode::MinSuperBp => {
            let (opt, m) = min_super_bp(&inst, &budget)?;
            json!({ "mode": "min-super-bp", "optimum": opt, "matching": MatchingDoc::from(&m) })
        }
        OracleMode::MinDelete => {
            let d = min_delete(&inst, &budget)?;
            json!({ "mode": "min-delete", "size": d.len(), "deleted_agents": AgentSetDoc::from(&d) })
        }
    };
    write_out(args.out.as_deref(), &dump(&doc))
}

fn cmd_verify(args: &VerifyArgs) -> Result<(), CliError> {
    let inst = load_instance(&args.input)?;
    let m = load_matching(&args.matching, inst.n())?;
    let witness = build_witness_completion(&inst, &m);
    let doc = json!({
        "n": inst.n(),
        "delta": inst.delta().to_string(),
        "perfect": m.is_perfect(),
        "weakly_stable": is_weakly_stable(&inst, &m),
        "super_stable": is_super_stable(&inst, &m),
        "obvious_blocking_pairs": pairs_doc(&obvious_blocking_pairs(&inst, &m)),
        "super_blocking_pairs": pairs_doc(&super_blocking_pairs(&inst, &m)),
        "witness_blocking_pairs": witness.blocking_pairs(&m).len(),
        "witness_completion": InstanceDoc::from(witness.instance()),
    });
    write_out(args.out.as_deref(), &dump(&doc))
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Gen(a) => cmd_gen(&a),
        Command::Solve(a) => cmd_solve(&a),
        Command::Oracle(a) => cmd_oracle(&a),
        Command::Verify(a) => cmd_verify(&a),
        Command::Bench(a) => bench::cmd_bench(&a),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}
