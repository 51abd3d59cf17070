//! The `domkit` command line: solve, reduce, verify and fuzz over files.
//!
//! Exit codes: 0 on success, 1 on usage, parse or I/O errors, 2 when a
//! verification claim fails.

use std::ffi::OsString;
use std::fmt::Display;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use domkit_core::{
    bondage_number, domination_number, reinforcement_number, total_bondage_number,
    total_domination_number, verify, CnfFormula, Edge, Graph, PerturbationError, PerturbationResult,
    ReductionTarget, VerificationReport,
};
use rayon::prelude::*;

/// Environment variable holding the worker count.
pub const THREADS_ENV: &str = "DOMKIT_THREADS";

#[derive(Parser, Debug)]
#[command(
    name = "domkit",
    version,
    about = "Exact domination, bondage and reinforcement numbers, and gadget reductions from 3-SAT",
    after_help = "Set DOMKIT_THREADS to choose the worker count (default: available parallelism)."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute a graph parameter and print it with a witness
    Solve {
        #[arg(long, value_enum)]
        param: Param,
        /// Largest edge-set size tried by bondage-type searches.
        /// Default: min(|pool|, 3), where the pool is the edge set, or the
        /// non-edges for reinforcement.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        cap: Option<u64>,
        /// Edge-list file
        graph: PathBuf,
    },
    /// Build a reduction artifact from a DIMACS formula
    Reduce {
        #[arg(long)]
        target: ReductionTarget,
        /// DIMACS CNF file
        cnf: PathBuf,
        #[arg(long)]
        out_graph: PathBuf,
        #[arg(long)]
        out_roles: PathBuf,
        #[arg(long)]
        out_dot: Option<PathBuf>,
    },
    /// Check every claim of the requested reductions on a formula
    Verify {
        /// DIMACS CNF file
        cnf: PathBuf,
        /// Comma-separated reductions, or `all`
        #[arg(long, default_value = "all", value_parser = parse_targets)]
        targets: Targets,
        /// Also write the report as JSON
        #[arg(long)]
        out_json: Option<PathBuf>,
    },
    /// Verify random formulas and tally the results
    Fuzz {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        m: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Comma-separated reductions, or `all`
        #[arg(long, default_value = "all", value_parser = parse_targets)]
        targets: Targets,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Param {
    Gamma,
    GammaT,
    Bondage,
    TotalBondage,
    Reinforcement,
}

#[derive(Clone, Debug)]
struct Targets(Vec<ReductionTarget>);

fn parse_targets(s: &str) -> Result<Targets, String> {
    if s == "all" {
        return Ok(Targets(ReductionTarget::ALL.to_vec()));
    }
    let mut out = Vec::new();
    for part in s.split(',') {
        let t = part.trim().parse::<ReductionTarget>().map_err(|e| e.to_string())?;
        if !out.contains(&t) {
            out.push(t);
        }
    }
    Ok(Targets(out))
}

/// A failure that ends the run with exit code 1.
struct Failure(String);

impl Failure {
    fn at(path: &Path, e: impl Display) -> Self {
        Failure(format!("{}: {e}", path.display()))
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::at(path, e))
}

fn write(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| Failure::at(path, e))
}

/// Runs the CLI on `args` (including the program name) and returns the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    0
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    1
                }
            };
        }
    };

    let pool = match thread_pool() {
        Ok(pool) => pool,
        Err(Failure(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            return 1;
        }
    };
    let result = pool
        .install(|| dispatch(cli.command))
        .and_then(|(text, code)| emit(out, &text).map(|_| code));
    match result {
        Ok(code) => code,
        Err(Failure(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
    }
}

fn thread_pool() -> Result<rayon::ThreadPool, Failure> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(value) = std::env::var(THREADS_ENV) {
        let threads = value
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&t| t > 0)
            .ok_or_else(|| Failure(format!("{THREADS_ENV}={value:?} is not a positive integer")))?;
        builder = builder.num_threads(threads);
    }
    builder.build().map_err(|e| Failure(format!("thread pool: {e}")))
}

/// Runs one command, returning its stdout text and exit code.
fn dispatch(command: Command) -> Result<(String, i32), Failure> {
    let text = match command {
        Command::Solve { param, cap, graph } => solve(param, cap, &graph)?,
        Command::Reduce {
            target,
            cnf,
            out_graph,
            out_roles,
            out_dot,
        } => reduce(target, &cnf, &out_graph, &out_roles, out_dot.as_deref())?,
        Command::Verify {
            cnf,
            targets,
            out_json,
        } => {
            let f = load_formula(&cnf)?;
            let report = verify(&f, &targets.0).map_err(|e| Failure::at(&cnf, e))?;
            if let Some(path) = out_json {
                write(&path, &(report.to_json() + "\n"))?;
            }
            return Ok((report.render_text(), if report.all_passed() { 0 } else { 2 }));
        }
        Command::Fuzz {
            n,
            m,
            count,
            seed,
            targets,
        } => {
            let (text, passed) = fuzz(n as usize, m as usize, count, seed, &targets.0)?;
            return Ok((text, if passed { 0 } else { 2 }));
        }
    };
    Ok((text, 0))
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), Failure> {
    out.write_all(text.as_bytes())
        .and_then(|_| out.flush())
        .map_err(|e| Failure(format!("stdout: {e}")))
}

fn load_formula(path: &Path) -> Result<CnfFormula, Failure> {
    CnfFormula::parse_dimacs(&read(path)?).map_err(|e| Failure::at(path, e))
}

type Solver = fn(&Graph, usize) -> Result<PerturbationResult, PerturbationError>;

fn solve(param: Param, cap: Option<u64>, path: &Path) -> Result<String, Failure> {
    let g = Graph::parse_edge_list(&read(path)?).map_err(|e| Failure::at(path, e))?;
    let perturbation = |name: &str, pool: usize, solver: Solver| {
        let cap = cap.map_or(pool.min(3), |c| c as usize);
        let r = solver(&g, cap).map_err(|e| Failure::at(path, e))?;
        Ok(format!("{name} = {} (cap {cap})\nwitness: {}\n", r.value, edges(&r.witness)))
    };
    match param {
        Param::Gamma => {
            let r = domination_number(&g);
            Ok(format!("gamma = {}\nwitness: {}\n", r.value, r.witness))
        }
        Param::GammaT => {
            let r = total_domination_number(&g).map_err(|e| Failure::at(path, e))?;
            Ok(format!("gamma_t = {}\nwitness: {}\n", r.value, r.witness))
        }
        Param::Bondage => perturbation("b", g.edge_count(), bondage_number),
        Param::TotalBondage => perturbation("b_t", g.edge_count(), total_bondage_number),
        Param::Reinforcement => perturbation("r", g.non_edges().len(), reinforcement_number),
    }
}

fn edges(witness: &[Edge]) -> String {
    let parts: Vec<String> = witness.iter().map(Edge::to_string).collect();
    format!("{{{}}}", parts.join(", "))
}

fn reduce(
    target: ReductionTarget,
    cnf: &Path,
    out_graph: &Path,
    out_roles: &Path,
    out_dot: Option<&Path>,
) -> Result<String, Failure> {
    let f = load_formula(cnf)?;
    let art = target.build(&f);
    write(out_graph, &art.graph.to_edge_list())?;
    write(out_roles, &(art.roles_json() + "\n"))?;
    if let Some(path) = out_dot {
        write(path, &art.to_dot(None))?;
    }
    Ok(format!(
        "{target}: {} vertices, {} edges\n",
        art.graph.vertex_count(),
        art.graph.edge_count()
    ))
}

/// One instance line: every claim passed and the three perturbation
/// values agree with satisfiability.
fn fuzz_line(idx: u64, f: &CnfFormula, report: &VerificationReport) -> (String, bool) {
    let sat = report.formula.satisfiable;
    let mut ok = report.all_passed();
    let mut line = format!(
        "instance {idx}: n={} m={} sat={}",
        f.variable_count(),
        f.clause_count(),
        if sat { "yes" } else { "no" }
    );
    for s in report.targets.values() {
        ok &= (s.perturbation_value.as_count() == Some(1)) == sat;
        line.push_str(&format!(" {}={}", s.perturbation_parameter, s.perturbation_value));
    }
    let failed: Vec<&str> = report.failed().map(|c| c.id.as_str()).collect();
    line.push_str(if ok { " PASS" } else { " FAIL" });
    if !failed.is_empty() {
        line.push_str(&format!(" (failed: {})", failed.join(", ")));
    }
    line.push('\n');
    (line, ok)
}

fn fuzz(n: usize, m: usize, count: u64, seed: u64, targets: &[ReductionTarget]) -> Result<(String, bool), Failure> {
    let lines: Vec<(String, bool)> = (0..count)
        .into_par_iter()
        .map(|idx| {
            let inst_seed = seed.wrapping_add(idx);
            let f = CnfFormula::random(n, m, inst_seed).map_err(|e| Failure(format!("--n {n} --m {m}: {e}")))?;
            let report = verify(&f, targets).map_err(|e| Failure(format!("--n {n} --m {m}: {e}")))?;
            Ok(fuzz_line(idx, &f, &report))
        })
        .collect::<Result<_, Failure>>()?;
    let passed = lines.iter().filter(|(_, ok)| *ok).count();
    let mut text: String = lines.iter().map(|(l, _)| l.as_str()).collect();
    text.push_str(&format!("{passed} of {count} instances passed\n"));
    Ok((text, passed as u64 == count))
}
