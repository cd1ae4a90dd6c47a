//! Command-line frontend: construct, check, formula, search, verify and
//! table generation.
//!
//! Exit codes: 0 success (and, for `check`, the checked property passing);
//! 1 a check that ran and failed; 2 usage errors and malformed inputs;
//! 3 an exact search that exhausted its node or time budget.

mod output;
mod report;

use std::collections::BTreeSet;
use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};

use turanlab::constructions::{ConstructionParams, ConstructionRegistry};
use turanlab::detect::{CheckArgs, CheckRegistry, ConstraintSpec};
use turanlab::formulas::{FormulaRegistry, Params as FormulaParams};
use turanlab::search::verify::VerifyError;
use turanlab::search::{
    enumerate_extremal, exact_max_edges, heuristic_lower_bound, verify_theorem, Budget, SearchMode,
    SearchProblem, TheoremId, TheoremParams,
};
use turanlab::{read_hg, write_hg_string, Hypergraph};

use output::OutputFormat;
use report::{SearchReport, TableSpec};

const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(
    name = "turanlab",
    version,
    about = "Exact workbench for Turán-type extremal hypergraph problems with bounded matching number"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy, Default)]
struct ParamFlags {
    /// Vertex count
    #[arg(long)]
    n: Option<u64>,
    /// Part count / core parameter
    #[arg(long)]
    l: Option<u64>,
    /// Matching bound / special-set size
    #[arg(long)]
    s: Option<u64>,
    /// Uniformity
    #[arg(long)]
    r: Option<u64>,
}

#[derive(Args, Clone, Copy)]
struct BudgetFlags {
    /// Abort exact search after this many explored nodes
    #[arg(long)]
    node_limit: Option<u64>,
    /// Abort exact search after this many seconds
    #[arg(long)]
    time_limit_secs: Option<u64>,
    /// Ceiling on C(n, r) for exact mode
    #[arg(long)]
    candidate_cap: Option<u64>,
    /// Vertex cap for canonical forms
    #[arg(long)]
    canon_cap: Option<u32>,
}

impl BudgetFlags {
    fn to_budget(self) -> Budget {
        let defaults = Budget::default();
        Budget {
            node_limit: self.node_limit,
            time_limit: self.time_limit_secs.map(Duration::from_secs),
            candidate_cap: self.candidate_cap.unwrap_or(defaults.candidate_cap),
            canon_cap: self.canon_cap.unwrap_or(defaults.canon_cap),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Generate a named construction as a .hg file
    Construct {
        /// One of: turan, gen-turan, alon-frankl, main-extremal, fano,
        /// fano-extremal, expansion, frankl-star, matching, complete,
        /// conjecture-witness
        kind: String,
        #[command(flatten)]
        params: ParamFlags,
        /// Output path (stdout when omitted)
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run a named structural check against a .hg file
    Check {
        /// One of: k-family, fano, expansion, berge, matching-atmost,
        /// weak-indep, strong-indep, edge-coloring, high-degree
        kind: String,
        /// Core parameter for k-family / expansion
        #[arg(long)]
        l: Option<u64>,
        /// Bound for matching-atmost / high-degree
        #[arg(long)]
        s: Option<u64>,
        /// Comma-separated vertex ids for weak-indep / strong-indep
        #[arg(long)]
        set: Option<String>,
        /// Berge pattern: `k<t>`, `p<k>` or `c<k>`
        #[arg(long)]
        pattern: Option<String>,
        /// Input .hg file (`-` for stdin)
        file: PathBuf,
    },
    /// Evaluate a closed-form value, emitting JSON
    Formula {
        /// One of: t, g, t-r, alon-frankl, erdos-gallai, mubayi, frankl,
        /// main, fano
        id: String,
        #[command(flatten)]
        params: ParamFlags,
    },
    /// Exact or heuristic extremal search
    Search {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        r: u32,
        /// Repeatable: k-family=L, expansion=L, matching-atmost=S,
        /// berge=PATTERN, fano
        #[arg(long = "constraint")]
        constraints: Vec<String>,
        /// Exact mode (the default)
        #[arg(long, conflicts_with = "heuristic")]
        exact: bool,
        /// Randomized lower-bound mode
        #[arg(long)]
        heuristic: bool,
        /// Seed hypergraph (.hg file) used as a feasible starting point
        #[arg(long)]
        seed: Option<PathBuf>,
        /// Collect every extremal hypergraph (exact mode)
        #[arg(long, conflicts_with = "heuristic")]
        enumerate: bool,
        /// Write the JSON report here (`-` for stdout, suppressing text)
        #[arg(long)]
        json: Option<PathBuf>,
        /// Heuristic mode: proposed moves
        #[arg(long, default_value_t = 20_000)]
        iterations: u64,
        /// Heuristic mode: RNG seed
        #[arg(long, default_value_t = 0)]
        rng_seed: u64,
        /// Keep witnesses from every labeling instead of one per class
        #[arg(long)]
        no_isomorph_reduce: bool,
        /// Disable the first-edge symmetry restriction
        #[arg(long)]
        no_symmetry: bool,
        #[command(flatten)]
        budget: BudgetFlags,
    },
    /// Verify a theorem instance end to end
    Verify {
        /// One of: theorem-1.1, theorem-1.5, theorem-1.7, conjecture-4.1
        theorem: String,
        #[command(flatten)]
        params: ParamFlags,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
        /// Skip the exact-search stage
        #[arg(long)]
        no_search: bool,
        #[command(flatten)]
        budget: BudgetFlags,
    },
    /// Render a verification table from a JSON spec of rows
    Table {
        /// JSON file: {"rows": [{"theorem": "...", "n": .., "l": .., ...}]}
        #[arg(long)]
        spec: PathBuf,
        #[arg(long, value_enum, default_value = "markdown")]
        format: OutputFormat,
        /// Skip the exact-search stage for every row
        #[arg(long)]
        no_search: bool,
        #[command(flatten)]
        budget: BudgetFlags,
    },
}

fn main() -> ExitCode {
    // die quietly when the consumer of our stdout goes away (`| head`)
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    configure_threads();
    match run(cli.command) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

/// TURANLAB_THREADS caps the search workers; one worker when unset.
fn configure_threads() {
    let threads = std::env::var("TURANLAB_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&t| t >= 1)
        .unwrap_or(1);
    // a later second call would fail harmlessly; the first one decides
    let _ = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global();
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Construct {
            kind,
            params,
            output,
        } => construct(&kind, params, output.as_deref()),
        Command::Check {
            kind,
            l,
            s,
            set,
            pattern,
            file,
        } => check(&kind, l, s, set, pattern, &file),
        Command::Formula { id, params } => formula(&id, params),
        Command::Search {
            n,
            r,
            constraints,
            exact: _,
            heuristic,
            seed,
            enumerate,
            json,
            iterations,
            rng_seed,
            no_isomorph_reduce,
            no_symmetry,
            budget,
        } => search(SearchInvocation {
            n,
            r,
            constraints,
            heuristic,
            seed,
            enumerate,
            json,
            iterations,
            rng_seed,
            no_isomorph_reduce,
            no_symmetry,
            budget,
        }),
        Command::Verify {
            theorem,
            params,
            format,
            no_search,
            budget,
        } => verify(&theorem, params, format, no_search, budget),
        Command::Table {
            spec,
            format,
            no_search,
            budget,
        } => table(&spec, format, no_search, budget),
    }
}

fn construct(kind: &str, params: ParamFlags, output: Option<&Path>) -> Result<ExitCode, String> {
    let registry = ConstructionRegistry::default();
    let construction = registry.get(kind).map_err(|e| e.to_string())?;
    let p = ConstructionParams {
        n: params.n,
        l: params.l,
        s: params.s,
        r: params.r,
    };
    let generated = construction.generate(&p).map_err(|e| e.to_string())?;
    let sizes: Option<Vec<u64>> = generated
        .parts
        .as_ref()
        .map(|parts| parts.iter().map(|p| p.len() as u64).collect());
    let text = write_hg_string(&generated.hypergraph, sizes.as_deref());
    match output {
        Some(path) => {
            fs::write(path, text).map_err(|e| format!("writing {}: {e}", path.display()))?
        }
        None => print!("{text}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_vertex_set(raw: &str) -> Result<BTreeSet<u32>, String> {
    if raw.trim().is_empty() {
        return Ok(BTreeSet::new());
    }
    raw.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<u32>()
                .map_err(|_| format!("bad vertex id `{tok}` in --set"))
        })
        .collect()
}

fn load_hypergraph(path: &Path) -> Result<Hypergraph, String> {
    let parsed = if path.as_os_str() == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| e.to_string())?;
        turanlab::read_hg_str(&buf)
    } else {
        let file = fs::File::open(path).map_err(|e| format!("opening {}: {e}", path.display()))?;
        read_hg(std::io::BufReader::new(file))
    };
    parsed.map(|p| p.hypergraph).map_err(|e| e.to_string())
}

fn check(
    kind: &str,
    l: Option<u64>,
    s: Option<u64>,
    set: Option<String>,
    pattern: Option<String>,
    file: &Path,
) -> Result<ExitCode, String> {
    let h = load_hypergraph(file)?;
    let registry = CheckRegistry::default();
    let checker = registry.get(kind).map_err(|e| e.to_string())?;
    let args = CheckArgs {
        l,
        s,
        set: set.as_deref().map(parse_vertex_set).transpose()?,
        pattern,
    };
    let report = checker.run(&h, &args).map_err(|e| e.to_string())?;
    println!(
        "{}",
        serde_json::to_string_pretty(&report).expect("reports serialize")
    );
    Ok(if report.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_CHECK_FAILED)
    })
}

fn formula(id: &str, params: ParamFlags) -> Result<ExitCode, String> {
    let registry = FormulaRegistry::default();
    let f = registry.get(id).map_err(|e| e.to_string())?;
    let p = FormulaParams {
        n: params.n,
        l: params.l,
        s: params.s,
        r: params.r,
    };
    let value = f.eval(&p).map_err(|e| e.to_string())?;
    println!(
        "{}",
        serde_json::to_string_pretty(&value).expect("values serialize")
    );
    Ok(ExitCode::SUCCESS)
}

struct SearchInvocation {
    n: u32,
    r: u32,
    constraints: Vec<String>,
    heuristic: bool,
    seed: Option<PathBuf>,
    enumerate: bool,
    json: Option<PathBuf>,
    iterations: u64,
    rng_seed: u64,
    no_isomorph_reduce: bool,
    no_symmetry: bool,
    budget: BudgetFlags,
}

fn search(inv: SearchInvocation) -> Result<ExitCode, String> {
    let specs: Vec<ConstraintSpec> = inv
        .constraints
        .iter()
        .map(|c| ConstraintSpec::parse(c).map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    let mut problem = SearchProblem::new(inv.n, inv.r, specs);
    problem.mode = if inv.heuristic {
        SearchMode::Heuristic
    } else {
        SearchMode::Exact
    };
    problem.enumerate = inv.enumerate;
    problem.isomorph_reduce = !inv.no_isomorph_reduce;
    problem.symmetry_restrict = !inv.no_symmetry;
    problem.budget = inv.budget.to_budget();
    problem.rng_seed = inv.rng_seed;
    problem.iterations = inv.iterations;
    if let Some(seed_path) = &inv.seed {
        problem.seed = Some(load_hypergraph(seed_path)?);
    }

    let result = match problem.mode {
        SearchMode::Heuristic => heuristic_lower_bound(&problem),
        SearchMode::Exact if inv.enumerate => enumerate_extremal(&problem),
        SearchMode::Exact => exact_max_edges(&problem),
    }
    .map_err(|e| e.to_string())?;

    let report = SearchReport {
        version: env!("CARGO_PKG_VERSION").to_string(),
        mode: problem.mode,
        n: inv.n,
        r: inv.r,
        constraints: problem.constraints.iter().map(|c| c.describe()).collect(),
        optimum: result.optimum,
        proof_of_optimality: result.proof_of_optimality,
        witnesses: result
            .witnesses
            .iter()
            .map(|w| write_hg_string(w, None))
            .collect(),
        nodes: result.nodes_explored,
        elapsed_ms: result.elapsed.as_millis() as u64,
        rng_seed: result.rng_seed,
        budget_exhausted: result.budget_exhausted,
    };

    match &inv.json {
        Some(path) if path.as_os_str() == "-" => {
            println!(
                "{}",
                serde_json::to_string_pretty(&report).expect("reports serialize")
            );
        }
        Some(path) => {
            let body = serde_json::to_string_pretty(&report).expect("reports serialize");
            fs::write(path, body).map_err(|e| format!("writing {}: {e}", path.display()))?;
            print!("{}", report.render_text());
        }
        None => print!("{}", report.render_text()),
    }

    Ok(if report.budget_exhausted {
        ExitCode::from(EXIT_BUDGET)
    } else {
        ExitCode::SUCCESS
    })
}

fn verify(
    theorem: &str,
    params: ParamFlags,
    format: OutputFormat,
    no_search: bool,
    budget: BudgetFlags,
) -> Result<ExitCode, String> {
    let id: TheoremId = theorem.parse().map_err(|e: VerifyError| e.to_string())?;
    let tp = TheoremParams {
        n: params.n,
        l: params.l,
        s: params.s,
        r: params.r,
    };
    let report =
        verify_theorem(id, &tp, &budget.to_budget(), !no_search).map_err(|e| e.to_string())?;
    match format {
        OutputFormat::Json => {
            println!(
                "{}",
                serde_json::to_string_pretty(&report).expect("reports serialize")
            )
        }
        _ => print!("{}", output::render_verify_text(&report)),
    }
    Ok(ExitCode::SUCCESS)
}

fn table(
    spec_path: &Path,
    format: OutputFormat,
    no_search: bool,
    budget: BudgetFlags,
) -> Result<ExitCode, String> {
    let raw = fs::read_to_string(spec_path)
        .map_err(|e| format!("reading {}: {e}", spec_path.display()))?;
    let spec: TableSpec = serde_json::from_str(&raw).map_err(|e| format!("bad table spec: {e}"))?;
    let budget = budget.to_budget();
    let mut reports = Vec::new();
    for row in &spec.rows {
        let id: TheoremId = row
            .theorem
            .parse()
            .map_err(|e: VerifyError| e.to_string())?;
        let tp = TheoremParams {
            n: row.n,
            l: row.l,
            s: row.s,
            r: row.r,
        };
        reports.push(verify_theorem(id, &tp, &budget, !no_search).map_err(|e| e.to_string())?);
    }
    match format {
        OutputFormat::Json => {
            println!(
                "{}",
                serde_json::to_string_pretty(&reports).expect("reports serialize")
            )
        }
        _ => print!("{}", output::render_table_markdown(&reports)),
    }
    Ok(ExitCode::SUCCESS)
}
