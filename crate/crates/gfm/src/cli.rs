//! The `gfm` command line.
//!
//! Exit codes: 0 match, pass or complete; 1 no match, fail or incomplete;
//! 2 usage or I/O error; 3 resource limit; 4 algorithm not applicable.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::thread;

use clap::{Parser, Subcommand, ValueEnum};
use gfm_core::classifier::{builtin_rows, check_completeness, Classification, ClassificationReport, Param};
use gfm_core::reductions::{find_clique_bruteforce, forward_witness, normalize_graph, reduce, ReductionKind};
use gfm_core::solvers::{
    choose_algorithm, effective_bounds, merge_results, solve_with, Algorithm, Shard, SolveError, SolveResult,
    SolverConfig,
};
use gfm_core::witness::{verify_witness_with, VerifyOptions};
use gfm_core::{Bound, Instance, ProblemKind, Violation};

use crate::{parse_graph, parse_instance, parse_rows, parse_witness, serialize_instance, write_witness, WitnessFile};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;
pub const EXIT_NOT_APPLICABLE: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "gfm",
    version,
    about = "Max-GFM / Max-GPM solver, verifier and instance generator"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide whether the pattern matches the text within the budget.
    Solve(SolveArgs),
    /// Check a witness against an instance.
    Verify(VerifyArgs),
    /// Print the seven parameters of an instance.
    Params {
        #[arg(short, long)]
        input: PathBuf,
    },
    /// Build an instance from a Multicolored Clique graph.
    Generate(GenerateArgs),
    /// Check the complexity table for completeness over all parameter subsets.
    Classify(ClassifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AlgoArg {
    Auto,
    Enum,
    Anchored,
    Brute,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ProblemArg {
    Gfm,
    Gpm,
    Both,
}

#[derive(Debug, clap::Args)]
struct SolveArgs {
    #[arg(short, long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value = "auto")]
    algo: AlgoArg,
    /// Report the fewest wildcards needed, even above the budget.
    #[arg(long)]
    min_wildcards: bool,
    /// Write the witness (or NOMATCH) to this file.
    #[arg(short = 'w', long = "witness")]
    witness: Option<PathBuf>,
    /// Split the enumeration over this many threads.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    jobs: u32,
    #[arg(long, default_value_t = SolverConfig::default().max_nodes)]
    max_nodes: u64,
    #[arg(long, default_value_t = SolverConfig::default().max_substitutions)]
    max_substitutions: u64,
}

#[derive(Debug, clap::Args)]
struct VerifyArgs {
    #[arg(short, long)]
    input: PathBuf,
    #[arg(short = 'w', long = "witness")]
    witness: PathBuf,
    /// For GPM, also require wildcard images to differ from all other images.
    #[arg(long)]
    strict_injective: bool,
}

#[derive(Debug, clap::Args)]
struct GenerateArgs {
    #[arg(long, value_parser = parse_kind)]
    reduction: ReductionKind,
    #[arg(short, long)]
    graph: PathBuf,
    #[arg(short, long)]
    output: PathBuf,
    #[arg(long, value_enum, default_value = "gfm")]
    problem: ProblemArg,
    /// Also write the witness built from a clique (or NOMATCH) to OUTPUT.witness.
    #[arg(long)]
    emit_expected: bool,
}

#[derive(Debug, clap::Args)]
struct ClassifyArgs {
    #[arg(long, value_enum, default_value = "both")]
    problem: ProblemArg,
    /// Row file replacing the built-in table.
    #[arg(long)]
    rows: Option<PathBuf>,
    /// Print the class of every subset.
    #[arg(long)]
    verbose: bool,
}

fn parse_kind(s: &str) -> Result<ReductionKind, String> {
    ReductionKind::from_name(s).ok_or_else(|| {
        let names: Vec<_> = ReductionKind::ALL.iter().map(|k| k.name()).collect();
        format!("expected one of {}", names.join(", "))
    })
}

/// An early exit with a diagnostic.
struct Exit {
    code: i32,
    message: String,
}

impl Exit {
    fn usage(message: impl Into<String>) -> Self {
        Exit {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<SolveError> for Exit {
    fn from(e: SolveError) -> Self {
        let code = match e {
            SolveError::NotApplicable(_) => EXIT_NOT_APPLICABLE,
            SolveError::ResourceLimit { .. } => EXIT_LIMIT,
        };
        Exit {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Exit {
    fn from(e: std::io::Error) -> Self {
        Exit::usage(format!("write failed: {e}"))
    }
}

/// Runs one command; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    let result = match cli.command {
        Command::Solve(a) => solve(&a, out),
        Command::Verify(a) => verify(&a, out),
        Command::Params { input } => params(&input, out),
        Command::Generate(a) => generate(&a, out, err),
        Command::Classify(a) => classify(&a, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message);
            e.code
        }
    }
}

fn read(path: &Path) -> Result<String, Exit> {
    fs::read_to_string(path).map_err(|e| Exit::usage(format!("cannot read {}: {e}", path.display())))
}

fn write_file(path: &Path, contents: &str) -> Result<(), Exit> {
    fs::write(path, contents).map_err(|e| Exit::usage(format!("cannot write {}: {e}", path.display())))
}

fn load_instance(path: &Path) -> Result<Instance, Exit> {
    parse_instance(&read(path)?).map_err(|e| Exit::usage(format!("{}: {e}", path.display())))
}

/// Runs `algo`, splitting product searches over `jobs` threads.
fn run_solver(
    instance: &Instance,
    algo: AlgoArg,
    config: &SolverConfig,
    jobs: usize,
) -> Result<SolveResult, SolveError> {
    let (instance, algorithm) = match algo {
        AlgoArg::Auto => {
            let d = choose_algorithm(instance)?;
            (instance.with_bounds(d.effective_bounds), d.algorithm)
        }
        // no image can outgrow the text, so this only makes `inf` finite
        AlgoArg::Enum => (instance.with_bounds(effective_bounds(instance)), Algorithm::Enum),
        AlgoArg::Anchored => (instance.with_bounds(effective_bounds(instance)), Algorithm::Anchored),
        AlgoArg::Brute => (instance.clone(), Algorithm::Brute),
    };
    if jobs <= 1 || algorithm == Algorithm::Brute {
        return solve_with(&instance, algorithm, config);
    }
    let instance = &instance;
    let results = thread::scope(|s| {
        let handles: Vec<_> = (0..jobs)
            .map(|index| {
                let config = SolverConfig {
                    shard: Some(Shard { index, count: jobs }),
                    ..*config
                };
                s.spawn(move || solve_with(instance, algorithm, &config))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("solver thread panicked"))
            .collect::<Result<Vec<_>, _>>()
    })?;
    Ok(merge_results(results).expect("at least one shard"))
}

fn solve(args: &SolveArgs, out: &mut dyn Write) -> Result<i32, Exit> {
    let instance = load_instance(&args.input)?;
    let config = SolverConfig {
        max_nodes: args.max_nodes,
        max_substitutions: args.max_substitutions,
        shard: None,
    };
    let target = if args.min_wildcards {
        instance.with_budget(instance.pattern().len())
    } else {
        instance.clone()
    };
    let r = run_solver(&target, args.algo, &config, args.jobs as usize)?;
    let budget = instance.budget();
    let matched = r.min_wildcards.is_some_and(|v| v <= budget);

    writeln!(out, "{}", if matched { "MATCH" } else { "NOMATCH" })?;
    writeln!(out, "algorithm {}", r.algorithm)?;
    if args.min_wildcards {
        match r.min_wildcards {
            Some(v) => writeln!(out, "min_wildcards {v}")?,
            None => writeln!(out, "min_wildcards none")?,
        }
        writeln!(out, "budget {budget}")?;
    } else if let Some(v) = r.min_wildcards {
        writeln!(out, "wildcards {v}")?;
    }
    if let Some(path) = &args.witness {
        let witness = r.witness.as_ref().filter(|_| matched);
        write_file(path, &write_witness(&instance, witness))?;
    }
    Ok(if matched { EXIT_OK } else { EXIT_NO })
}

/// A violation with letters shown by name.
fn describe(instance: &Instance, v: &Violation) -> String {
    let name = |l| instance.sigma_p().name(l);
    match v {
        Violation::MissingImage { letter, position } => {
            format!("missing image for `{}` at position {position}", name(*letter))
        }
        Violation::LetterImageTooLong { letter, len } => {
            format!("image of `{}` has length {len} above the bound", name(*letter))
        }
        Violation::NotInjective { first, second } => {
            format!(
                "injectivity violated: `{}` and `{}` share an image",
                name(*first),
                name(*second)
            )
        }
        Violation::EmptyLetterImage { letter } => format!("empty image for `{}`", name(*letter)),
        other => other.to_string(),
    }
}

fn verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<i32, Exit> {
    let instance = load_instance(&args.input)?;
    let src = read(&args.witness)?;
    let witness =
        parse_witness(&instance, &src).map_err(|e| Exit::usage(format!("{}: {e}", args.witness.display())))?;
    let WitnessFile::Match(witness) = witness else {
        writeln!(out, "FAIL: witness file records NOMATCH")?;
        return Ok(EXIT_NO);
    };
    let options = VerifyOptions {
        strict_injectivity: args.strict_injective,
    };
    match verify_witness_with(&instance, &witness, options).violation {
        None => {
            writeln!(out, "PASS")?;
            Ok(EXIT_OK)
        }
        Some(v) => {
            writeln!(out, "FAIL: {}", describe(&instance, &v))?;
            Ok(EXIT_NO)
        }
    }
}

fn params(input: &Path, out: &mut dyn Write) -> Result<i32, Exit> {
    let p = load_instance(input)?.parameters();
    let bound = |b: Bound| match b {
        Bound::Finite(v) => v.to_string(),
        Bound::Unbounded => "inf".into(),
    };
    let values = [
        (Param::OccT, p.occ_t.to_string()),
        (Param::SigT, p.size_t.to_string()),
        (Param::OccP, p.occ_p.to_string()),
        (Param::SigP, p.size_p.to_string()),
        (Param::MaxFp, bound(p.max_letter_len)),
        (Param::NumQ, p.wildcards.to_string()),
        (Param::MaxFq, bound(p.max_wildcard_len)),
    ];
    for (param, value) in values {
        writeln!(out, "{} {value}", param.name())?;
    }
    Ok(EXIT_OK)
}

fn generate(args: &GenerateArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Exit> {
    let problem = match args.problem {
        ProblemArg::Gfm => ProblemKind::Gfm,
        ProblemArg::Gpm => ProblemKind::Gpm,
        ProblemArg::Both => return Err(Exit::usage("generate needs --problem gfm or gpm")),
    };
    let src = read(&args.graph)?;
    let mut g = parse_graph(&src).map_err(|e| Exit::usage(format!("{}: {e}", args.graph.display())))?;
    if g.uniform_sizes().is_none() {
        g = normalize_graph(&g);
        writeln!(err, "note: graph padded to equal part sizes and equal edge counts")?;
    }
    let output = reduce(args.reduction, &g, problem).map_err(|e| Exit::usage(e.to_string()))?;
    let (n, m) = g.uniform_sizes().expect("normalized");
    let mut text = format!(
        "# {} reduction of a graph with k={} parts, {n} vertices per part, {m} edges per pair\n",
        args.reduction,
        g.k()
    );
    text.push_str(&serialize_instance(&output.instance));
    write_file(&args.output, &text)?;
    let i = &output.instance;
    writeln!(
        out,
        "wrote {}: |t|={} |p|={} budget={}",
        args.output.display(),
        i.text().len(),
        i.pattern().len(),
        output.budget
    )?;

    if args.emit_expected {
        let clique = find_clique_bruteforce(&g, 10_000_000).map_err(|e| Exit {
            code: EXIT_LIMIT,
            message: format!("clique search stopped after {} candidates", e.limit),
        })?;
        let witness = match &clique {
            Some(c) => Some(forward_witness(&output, &g, c).map_err(|e| Exit::usage(e.to_string()))?),
            None => None,
        };
        let mut path = args.output.clone().into_os_string();
        path.push(".witness");
        let path = PathBuf::from(path);
        write_file(&path, &write_witness(i, witness.as_ref()))?;
        writeln!(
            out,
            "wrote {}: {}",
            path.display(),
            if clique.is_some() { "MATCH" } else { "NOMATCH" }
        )?;
    }
    Ok(EXIT_OK)
}

fn classify(args: &ClassifyArgs, out: &mut dyn Write) -> Result<i32, Exit> {
    let rows = match &args.rows {
        Some(path) => parse_rows(&read(path)?).map_err(|e| Exit::usage(format!("{}: {e}", path.display())))?,
        None => builtin_rows(),
    };
    let problems: &[ProblemKind] = match args.problem {
        ProblemArg::Gfm => &[ProblemKind::Gfm],
        ProblemArg::Gpm => &[ProblemKind::Gpm],
        ProblemArg::Both => &[ProblemKind::Gfm, ProblemKind::Gpm],
    };
    let reports: Vec<ClassificationReport> = problems.iter().map(|&p| check_completeness(&rows, p)).collect();
    let summary: Vec<String> = reports
        .iter()
        .map(|r| format!("{}: {}/{} covered", r.problem.name(), r.covered(), r.entries.len()))
        .collect();
    writeln!(out, "{}", summary.join("; "))?;
    for r in &reports {
        let problem = r.problem.name();
        for (c, class) in &r.entries {
            match class {
                Classification::Uncovered => writeln!(out, "{problem} uncovered {c}")?,
                Classification::Conflict { fpt_row, hard_row } => writeln!(
                    out,
                    "{problem} conflict {c} (fpt row {} vs hard row {})",
                    fpt_row + 1,
                    hard_row + 1
                )?,
                _ if args.verbose => writeln!(out, "{problem} {class} {c}")?,
                _ => {}
            }
        }
    }
    Ok(if reports.iter().all(ClassificationReport::is_complete) {
        EXIT_OK
    } else {
        EXIT_NO
    })
}
