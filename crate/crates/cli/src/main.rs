//! `mwc`: important separators and multiway cut kernels from the command
//! line.
//!
//! Exit codes: 0 success or REDUCED, 10 YES, 11 NO, 1 usage or input
//! error, 2 internal failure, 3 a check found a violation.

mod family_file;

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::json;

use mwc_core::family::{
    check_axioms, enumerate_principal, union_of_excess, EnumeratedFamily, FamilyAccess,
    SeparatorFamily,
};
use mwc_core::graph::{
    generate_lowerbound, generate_random, generate_random_separator, parse_instance,
    parse_separator_instance, write_instance, write_separator_instance, MwcInstance,
    SeparatorInstance, VertexSet,
};
use mwc_core::kernel::{
    kernelize, solve_exact, ExactProvider, GreedyProvider, KernelOutcome, MwcProvider,
};
use mwc_core::oracle::{enum_important, principal_sets, union_up_to, OracleBudget};
use mwc_core::separator::{
    is_important, min_separator, smallest_important_separator, witness, Separator,
};

#[derive(Parser)]
#[command(
    name = "mwc",
    version,
    about = "Important separators and multiway cut kernelization"
)]
struct Cli {
    /// Worker threads for parallel stages (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a generated instance.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Minimum separator of a separator instance.
    MinSep(InputArg),
    /// Smallest important separator of a separator instance.
    ImportantSm(InputArg),
    /// Size of the union of important separators of excess at most x.
    Union(FamilyArgs),
    /// Principal sets of excess at most x.
    Principal(FamilyArgs),
    /// Reduce a multiway cut instance to a kernel.
    Kernelize {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = ProviderKind::Exact)]
        provider: ProviderKind,
        /// Branching-node limit for the exact provider.
        #[arg(long)]
        node_limit: Option<u64>,
        /// Kernel instance path; the report goes to `<output>.report`.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Solve a multiway cut instance exactly.
    Solve {
        #[arg(short, long)]
        input: PathBuf,
        /// Largest cut size to look for (default: k).
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Check IS-family conditions on a random corpus, a family file, or the
    /// principal sets of one instance.
    Check(CheckArgs),
    /// Compare the flow engine with the brute-force oracle.
    OracleCompare(CheckArgs),
}

#[derive(Subcommand)]
enum GenKind {
    /// Lower-bound separator instance: r complete binary trees of height x
    /// between s and t.
    Lowerbound {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        x: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// G(n, p) multiway cut instance with t random terminals.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long)]
        t: usize,
        #[arg(long, default_value_t = 0)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// G(n, p) separator instance with random source and sink sets.
    RandomSep {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 1)]
        sources: usize,
        #[arg(long, default_value_t = 1)]
        sinks: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(clap::Args)]
struct InputArg {
    #[arg(short, long)]
    input: PathBuf,
}

#[derive(clap::Args)]
struct FamilyArgs {
    #[arg(short, long)]
    input: PathBuf,
    #[arg(long)]
    x: usize,
    /// Print a JSON summary instead of the text report.
    #[arg(long)]
    summary: bool,
}

#[derive(clap::Args)]
struct CheckArgs {
    /// Number of random instances.
    #[arg(long, conflicts_with_all = ["input", "family"])]
    corpus: Option<usize>,
    /// Largest instance size in the corpus.
    #[arg(long, default_value_t = 12)]
    n: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Separator instance.
    #[arg(short, long, conflicts_with = "family")]
    input: Option<PathBuf>,
    /// Family file (`p family`, `s`, `o` records).
    #[arg(long)]
    family: Option<PathBuf>,
    #[arg(long, default_value_t = 2)]
    x: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum ProviderKind {
    Exact,
    Greedy,
}

/// Bad flags, unreadable or malformed input.
#[derive(Debug)]
struct UsageError(String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    UsageError(msg.into()).into()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Status {
    Ok,
    Yes,
    No,
    CheckFailed,
}

impl Status {
    fn code(self) -> u8 {
        match self {
            Status::Ok => 0,
            Status::Yes => 10,
            Status::No => 11,
            Status::CheckFailed => 3,
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn read_separator(path: &Path) -> Result<Arc<SeparatorInstance>> {
    let text = read(path)?;
    parse_separator_instance(&text)
        .map(Arc::new)
        .map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn read_mwc(path: &Path) -> Result<MwcInstance> {
    let text = read(path)?;
    parse_instance(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn emit(text: &str, output: Option<&Path>) -> Result<()> {
    match output {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn cmd_gen(kind: GenKind) -> Result<Status> {
    let (text, output) = match kind {
        GenKind::Lowerbound { r, x, output } => {
            let (si, _) = generate_lowerbound(r, x).map_err(|e| usage(e.to_string()))?;
            (write_separator_instance(&si), output)
        }
        GenKind::Random {
            n,
            p,
            t,
            k,
            seed,
            output,
        } => {
            if !(0.0..=1.0).contains(&p) {
                bail!(usage(format!("--p {p} is not a probability")));
            }
            let inst = generate_random(n, p, t, k, seed).map_err(|e| usage(e.to_string()))?;
            (write_instance(&inst), output)
        }
        GenKind::RandomSep {
            n,
            p,
            sources,
            sinks,
            seed,
            output,
        } => {
            if !(0.0..=1.0).contains(&p) {
                bail!(usage(format!("--p {p} is not a probability")));
            }
            let si = generate_random_separator(n, p, sources, sinks, seed)
                .map_err(|e| usage(e.to_string()))?;
            (write_separator_instance(&si), output)
        }
    };
    emit(&text, output.as_deref())?;
    Ok(Status::Ok)
}

fn cmd_min_sep(args: InputArg, important: bool) -> Result<Status> {
    let si = read_separator(&args.input)?;
    let sep = if important {
        smallest_important_separator(&si)?
    } else {
        min_separator(&si)?
    };
    match sep {
        Some(s) => {
            println!("r={}", s.len());
            println!("separator={}", s.vertices());
            Ok(Status::Ok)
        }
        None => {
            println!("no separator: an edge joins X and Y");
            Ok(Status::No)
        }
    }
}

fn family_for(path: &Path) -> Result<SeparatorFamily> {
    let si = read_separator(path)?;
    if si.has_direct_edge() {
        bail!(usage("an edge joins X and Y, so there is no separator"));
    }
    Ok(SeparatorFamily::from_shared(si))
}

fn cmd_union(args: FamilyArgs) -> Result<Status> {
    let fam = family_for(&args.input)?;
    let report = enumerate_principal(&fam, args.x)?;
    let counts: Vec<usize> = report.levels.iter().map(Vec::len).collect();
    let bound = report.bound(args.x);
    if args.summary {
        println!(
            "{}",
            json!({
                "r": report.r,
                "x": args.x,
                "union": report.union_size(),
                "bound": bound,
                "level_counts": counts,
                "union_bound_holds": report.union_bound_holds(),
            })
        );
    } else {
        println!("r={} |U|={} bound={bound}", report.r, report.union_size());
        for (i, c) in counts.iter().enumerate() {
            println!("level {i}: {c}");
        }
    }
    Ok(Status::Ok)
}

fn cmd_principal(args: FamilyArgs) -> Result<Status> {
    let fam = family_for(&args.input)?;
    let report = enumerate_principal(&fam, args.x)?;
    if args.summary {
        let counts: Vec<usize> = (0..=args.x).map(|i| report.principal_count(i)).collect();
        let bounds: Vec<usize> = (0..=args.x).map(|i| report.bound(i)).collect();
        println!(
            "{}",
            json!({
                "r": report.r,
                "x": args.x,
                "principal_counts": counts,
                "bounds": bounds,
                "m": report.m,
                "union": report.union_size(),
                "witness_calls": report.witness_calls,
                "principal_bound_holds": report.principal_bound_holds(),
                "union_bound_holds": report.union_bound_holds(),
                "mass_bound_holds": report.mass_bound_holds(),
                "levels": report.levels,
            })
        );
    } else {
        print!("{}", report.to_text());
    }
    Ok(Status::Ok)
}

fn cmd_kernelize(
    input: &Path,
    provider: ProviderKind,
    node_limit: Option<u64>,
    output: Option<&Path>,
) -> Result<Status> {
    let inst = read_mwc(input)?;
    let exact = ExactProvider { node_limit };
    let provider: &dyn MwcProvider = match provider {
        ProviderKind::Exact => &exact,
        ProviderKind::Greedy => &GreedyProvider,
    };
    let outcome = kernelize(&inst, provider)?;
    let report = outcome.report();
    if let Some(out) = output {
        let kernel_text = match &outcome {
            KernelOutcome::Reduced(res) => write_instance(&res.reduced),
            _ => String::new(),
        };
        fs::write(out, kernel_text).with_context(|| format!("writing {}", out.display()))?;
        let mut side = out.as_os_str().to_owned();
        side.push(".report");
        fs::write(&side, &report).with_context(|| format!("writing {side:?}"))?;
    }
    print!("{report}");
    Ok(match outcome {
        KernelOutcome::Reduced(_) => Status::Ok,
        KernelOutcome::Yes { .. } => Status::Yes,
        KernelOutcome::No { .. } => Status::No,
    })
}

fn cmd_solve(input: &Path, budget: Option<usize>) -> Result<Status> {
    let inst = read_mwc(input)?;
    let budget = budget.unwrap_or(inst.k());
    match solve_exact(&inst, budget) {
        Some(cut) => {
            println!("verdict=YES");
            println!("cut={cut}");
            println!("size={}", cut.len());
            Ok(Status::Yes)
        }
        None => {
            println!("verdict=NO");
            Ok(Status::No)
        }
    }
}

/// Random separator instances whose X and Y are connected but not adjacent.
fn corpus(count: usize, max_n: usize, seed: u64) -> Result<Vec<(u64, Arc<SeparatorInstance>)>> {
    if !(4..=15).contains(&max_n) {
        bail!(usage("--n must lie in 4..=15 for brute-force checks"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(4..=max_n);
        let p = rng.gen_range(0.15..0.45);
        let s = rng.gen();
        let si = generate_random_separator(n, p, rng.gen_range(1..=2), rng.gen_range(1..=2), s)?;
        let connected = !si
            .graph()
            .reachable(si.source(), &VertexSet::new(n))
            .is_disjoint(si.sink());
        if connected && !si.has_direct_edge() {
            out.push((s, Arc::new(si)));
        }
    }
    Ok(out)
}

fn brute_family(si: &SeparatorInstance) -> Result<EnumeratedFamily> {
    let n = si.graph().vertex_count();
    Ok(enum_important(si, n, &OracleBudget::with_max_n(n.max(15)))?)
}

fn cmd_check(args: CheckArgs) -> Result<Status> {
    if let Some(count) = args.corpus {
        let cases = corpus(count, args.n, args.seed)?;
        let reports = cases
            .par_iter()
            .map(|(seed, si)| {
                let fam = brute_family(si)?;
                let engine = SeparatorFamily::from_shared(si.clone());
                Ok((*seed, check_axioms(&fam, Some(&engine))?))
            })
            .collect::<Result<Vec<_>>>()?;
        let failed: Vec<_> = reports.iter().filter(|(_, r)| !r.all_passed()).collect();
        let never_failed = mwc_core::family::Condition::ALL
            .iter()
            .filter(|&&c| reports.iter().all(|(_, r)| r.passed(c)))
            .count();
        for (seed, r) in &failed {
            print!("instance seed {seed}:\n{r}");
        }
        println!("{never_failed}/7 axioms, {} failures", failed.len());
        return Ok(if failed.is_empty() {
            Status::Ok
        } else {
            Status::CheckFailed
        });
    }
    if let Some(path) = &args.family {
        let fam = family_file::parse_family(&read(path)?)
            .map_err(|e| usage(format!("{}: {e}", path.display())))?;
        let report = check_axioms(&fam, None)?;
        print!("{report}");
        let failures = report.failures().count();
        println!(
            "{}/6 axioms, {failures} failures (EC needs an engine)",
            report.pass_count()
        );
        return Ok(if failures == 0 {
            Status::Ok
        } else {
            Status::CheckFailed
        });
    }
    let Some(path) = &args.input else {
        bail!(usage("give one of --corpus, --input or --family"));
    };
    let si = read_separator(path)?;
    let mismatches = compare_instance(&si, args.x)?;
    for m in &mismatches {
        println!("{m}");
    }
    println!(
        "principal sets {}",
        if mismatches.is_empty() {
            "match oracle"
        } else {
            "DIFFER from oracle"
        }
    );
    Ok(if mismatches.is_empty() {
        Status::Ok
    } else {
        Status::CheckFailed
    })
}

/// Engine-versus-oracle differences on one instance, for excess `0..=x`.
fn compare_instance(si: &Arc<SeparatorInstance>, x: usize) -> Result<Vec<String>> {
    if si.has_direct_edge() {
        bail!(usage("an edge joins X and Y, so there is no separator"));
    }
    let fam = brute_family(si)?;
    let mut out = Vec::new();
    let sm = smallest_important_separator(si)?.ok_or_else(|| anyhow!("no separator"))?;
    let brute_sm = fam.element(
        fam.smallest_index()
            .ok_or_else(|| anyhow!("no smallest element"))?,
    );
    if sm.vertices() != brute_sm {
        out.push(format!(
            "sm: engine {{{}}} oracle {{{brute_sm}}}",
            sm.vertices()
        ));
    }
    if brute_sm.is_empty() {
        return Ok(out);
    }
    for (i, k) in fam.elements().iter().enumerate() {
        let sep = Separator::new(si, k.clone())?;
        if !is_important(&sep) {
            out.push(format!("importance: engine rejects {{{k}}}"));
        }
        for v in k.iter() {
            let engine = witness(&sep, v)?.map(Separator::into_vertices);
            let brute = fam.witness(&i, v)?.map(|j| fam.element(j).clone());
            if engine != brute {
                out.push(format!(
                    "witness of {v} for {{{k}}}: engine {engine:?} oracle {brute:?}"
                ));
            }
        }
    }
    let engine_fam = SeparatorFamily::from_shared(si.clone());
    for xi in 0..=x {
        let report = enumerate_principal(&engine_fam, xi)?;
        let engine: BTreeSet<Vec<usize>> = report.sets().map(|s| s.members.clone()).collect();
        let brute: BTreeSet<Vec<usize>> = principal_sets(&fam, xi)
            .iter()
            .map(VertexSet::to_vec)
            .collect();
        if engine != brute {
            out.push(format!(
                "principal sets at x={xi}: engine {engine:?} oracle {brute:?}"
            ));
        }
        let u = union_of_excess(&engine_fam, xi)?;
        let bu = union_up_to(&fam, xi);
        if u != bu {
            out.push(format!("union at x={xi}: engine {{{u}}} oracle {{{bu}}}"));
        }
    }
    Ok(out)
}

fn cmd_oracle_compare(args: CheckArgs) -> Result<Status> {
    let cases = match (&args.input, args.corpus) {
        (Some(path), _) => vec![(0, read_separator(path)?)],
        (None, Some(count)) => corpus(count, args.n, args.seed)?,
        (None, None) => bail!(usage("give --input or --corpus")),
    };
    let results = cases
        .par_iter()
        .map(|(seed, si)| Ok((*seed, compare_instance(si, args.x)?)))
        .collect::<Result<Vec<_>>>()?;
    let mut text = String::new();
    let mut bad = 0;
    for (seed, diffs) in &results {
        if !diffs.is_empty() {
            bad += 1;
            let _ = writeln!(text, "instance seed {seed}:");
            for d in diffs {
                let _ = writeln!(text, "  {d}");
            }
        }
    }
    print!("{text}");
    println!("{} instances, {bad} mismatches", results.len());
    Ok(if bad == 0 {
        Status::Ok
    } else {
        Status::CheckFailed
    })
}

fn run(cli: Cli) -> Result<Status> {
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            bail!(usage("--jobs must be positive"));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .context("configuring the thread pool")?;
    }
    match cli.command {
        Command::Gen { kind } => cmd_gen(kind),
        Command::MinSep(a) => cmd_min_sep(a, false),
        Command::ImportantSm(a) => cmd_min_sep(a, true),
        Command::Union(a) => cmd_union(a),
        Command::Principal(a) => cmd_principal(a),
        Command::Kernelize {
            input,
            provider,
            node_limit,
            output,
        } => cmd_kernelize(&input, provider, node_limit, output.as_deref()),
        Command::Solve { input, budget } => cmd_solve(&input, budget),
        Command::Check(a) => cmd_check(a),
        Command::OracleCompare(a) => cmd_oracle_compare(a),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(status) => ExitCode::from(status.code()),
        Err(e) => {
            eprintln!("error: {e:#}");
            let user_fault = e.downcast_ref::<UsageError>().is_some()
                || e.downcast_ref::<mwc_core::ParseError>().is_some();
            ExitCode::from(if user_fault { 1 } else { 2 })
        }
    }
}
