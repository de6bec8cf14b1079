//! `lcdeg`: command-line surface of the local minimum degree toolkit.
//!
//! Exit codes: 0 on success, 1 when a verified identity fails (which would
//! contradict a proven statement and should never happen), 2 on usage, parse
//! or cap errors.

mod output;

use clap::{Parser, Subcommand, ValueEnum};
use lcdeg::codes::{self, BinaryMatrix};
use lcdeg::io::{self, GraphFormat};
use lcdeg::lll::{self, ConditionKind, ProfileShape};
use lcdeg::locmindeg::{
    DEFAULT_EXACT_CAP, DEFAULT_ONESIDE_CAP, DEFAULT_ORBIT_NODE_CAP,
};
use lcdeg::paley::{self, PaleyContext};
use lcdeg::reduction::{self, ReductionOutcome, VerifyParams};
use output::*;
use std::path::PathBuf;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputKind {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Auto,
    Edgelist,
    Graph6,
}

impl From<FormatArg> for GraphFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Auto => GraphFormat::Auto,
            FormatArg::Edgelist => GraphFormat::EdgeList,
            FormatArg::Graph6 => GraphFormat::Graph6,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Bipartite,
    General,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ShapeArg {
    Graph,
    Bipartite,
}

#[derive(Parser)]
#[command(name = "lcdeg", version, about = "Exact local-minimum-degree toolkit")]
struct Cli {
    /// Output format (dot applies to the graph-producing commands)
    #[arg(long, global = true, value_enum, default_value_t = OutputKind::Text)]
    output: OutputKind,

    /// Omit the timestamp so identical runs give byte-identical output
    #[arg(long, global = true)]
    deterministic: bool,

    /// Seed for every randomized subroutine
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Worker threads for parallel enumeration (default: all cores)
    #[arg(long, global = true)]
    workers: Option<usize>,

    /// Cap on n for the full 2^n sweep (default 30; env LCDEG_CAP_N overrides)
    #[arg(long, global = true)]
    exact_cap: Option<usize>,

    /// Cap on one side for one-sided sweeps (default 26)
    #[arg(long, global = true)]
    oneside_cap: Option<usize>,

    /// Node budget for the orbit BFS (default 2000000)
    #[arg(long, global = true)]
    orbit_cap: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute delta_loc of a graph from a file
    Deltaloc {
        file: PathBuf,
        /// Use one-sided enumeration (requires a bipartite graph)
        #[arg(long)]
        bipartite: bool,
        /// Also run the orbit-BFS oracle and report AGREE/DISAGREE
        #[arg(long)]
        orbit_check: bool,
        #[arg(long, value_enum, default_value_t = FormatArg::Auto)]
        format: FormatArg,
        /// Write the graph as DOT to this path
        #[arg(long)]
        export_dot: Option<PathBuf>,
    },
    /// Build the Paley graph of order p and check its bounds
    Paley {
        p: u64,
        /// Run the character-sum and Weil-bound verification batteries
        #[arg(long)]
        verify_all: bool,
        /// Random subsets per verification battery
        #[arg(long, default_value_t = 200)]
        trials: u64,
        /// Exhaustive subset size for the Weil bound battery
        #[arg(long, default_value_t = 3)]
        max_subset_size: usize,
        /// Random-witness budget when p is above the exact cap
        #[arg(long, default_value_t = 100_000)]
        falsifier_trials: u64,
    },
    /// Reduce a generator matrix to a bipartite delta_loc instance
    Reduce {
        matrix: PathBuf,
        #[arg(long, default_value_t = 10)]
        gadget_side: usize,
        /// Minimum stacked-code distance the gadget must reach
        /// (default n + 3, which forces delta_loc(G_B) > n + 1)
        #[arg(long)]
        required_d: Option<usize>,
        /// Attempt budget for the random gadget search
        #[arg(long, default_value_t = 50_000)]
        attempts: u64,
        /// Use this biadjacency matrix file as the gadget instead of searching
        #[arg(long)]
        gadget_file: Option<PathBuf>,
        /// Experimental: use the Paley graph of this order as a
        /// non-bipartite gadget; verification then needs the full
        /// enumeration cap on the composed graph
        #[arg(long)]
        paley_gadget: Option<u64>,
        /// Samples for the falsifier in theorem-assisted mode
        #[arg(long, default_value_t = 1_000_000)]
        falsifier_trials: u64,
        /// Write the instance bundle (matrix, gadget, composed graph, manifest)
        #[arg(long)]
        emit_dir: Option<PathBuf>,
    },
    /// Solve an entropy condition for its largest feasible density
    Lll {
        kind: KindArg,
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
        /// Points on the reported (d, margin) curve
        #[arg(long, default_value_t = 64)]
        curve_points: usize,
    },
    /// Histogram exact delta_loc over random graphs
    Sample {
        shape: ShapeArg,
        /// Vertices (graph) or side size (bipartite)
        #[arg(long)]
        size: usize,
        #[arg(long)]
        count: u64,
        /// Also report the fraction of samples with delta_loc > c*n
        #[arg(long)]
        threshold_c: Option<f64>,
    },
}

#[derive(Debug)]
enum CliError {
    Core(lcdeg::Error),
    Io(String),
    Usage(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "{e}"),
            CliError::Usage(e) => write!(f, "{e}"),
        }
    }
}

impl From<lcdeg::Error> for CliError {
    fn from(e: lcdeg::Error) -> Self {
        CliError::Core(e)
    }
}

type CliResult<T> = Result<T, CliError>;

fn read_file(path: &PathBuf) -> CliResult<String> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))
}

fn write_file(path: &PathBuf, contents: &str) -> CliResult<()> {
    std::fs::write(path, contents)
        .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))
}

/// Resolved run configuration: flags override the environment, which
/// overrides the defaults.
struct Config {
    output: OutputKind,
    deterministic: bool,
    seed: u64,
    exact_cap: usize,
    oneside_cap: usize,
    orbit_cap: usize,
}

impl Config {
    fn resolve(cli: &Cli) -> CliResult<Config> {
        let env_cap = match std::env::var("LCDEG_CAP_N") {
            Ok(v) => Some(v.parse().map_err(|_| {
                CliError::Usage(format!("LCDEG_CAP_N must be an integer, got {v:?}"))
            })?),
            Err(_) => None,
        };
        Ok(Config {
            output: cli.output,
            deterministic: cli.deterministic,
            seed: cli.seed,
            exact_cap: cli.exact_cap.or(env_cap).unwrap_or(DEFAULT_EXACT_CAP),
            oneside_cap: cli.oneside_cap.unwrap_or(DEFAULT_ONESIDE_CAP),
            orbit_cap: cli.orbit_cap.unwrap_or(DEFAULT_ORBIT_NODE_CAP),
        })
    }
}

fn main() {
    let cli = Cli::parse();
    if let Some(workers) = cli.workers {
        // results are identical regardless of worker count; this only
        // affects wall-clock time
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build_global();
    }
    let code = match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    };
    std::process::exit(code);
}

fn run(cli: Cli) -> CliResult<i32> {
    let config = Config::resolve(&cli)?;
    match &cli.command {
        Command::Deltaloc {
            file,
            bipartite,
            orbit_check,
            format,
            export_dot,
        } => cmd_deltaloc(&config, file, *bipartite, *orbit_check, *format, export_dot),
        Command::Paley {
            p,
            verify_all,
            trials,
            max_subset_size,
            falsifier_trials,
        } => cmd_paley(
            &config,
            *p,
            *verify_all,
            *trials,
            *max_subset_size,
            *falsifier_trials,
        ),
        Command::Reduce {
            matrix,
            gadget_side,
            required_d,
            attempts,
            gadget_file,
            paley_gadget,
            falsifier_trials,
            emit_dir,
        } => cmd_reduce(
            &config,
            matrix,
            *gadget_side,
            *required_d,
            *attempts,
            gadget_file,
            *paley_gadget,
            *falsifier_trials,
            emit_dir,
        ),
        Command::Lll {
            kind,
            tol,
            curve_points,
        } => cmd_lll(&config, *kind, *tol, *curve_points),
        Command::Sample {
            shape,
            size,
            count,
            threshold_c,
        } => cmd_sample(&config, *shape, *size, *count, *threshold_c),
    }
}

fn cmd_deltaloc(
    config: &Config,
    file: &PathBuf,
    bipartite: bool,
    orbit_check: bool,
    format: FormatArg,
    export_dot: &Option<PathBuf>,
) -> CliResult<i32> {
    let graph = io::parse_graph(&read_file(file)?, format.into())?;
    if let Some(path) = export_dot {
        write_file(path, &io::write_dot(&graph))?;
    }
    if config.output == OutputKind::Dot {
        print!("{}", io::write_dot(&graph));
        return Ok(0);
    }

    let result = if bipartite {
        lcdeg::delta_loc_bipartite(&graph, config.oneside_cap)?
    } else {
        lcdeg::delta_loc_exact(&graph, config.exact_cap)?
    };

    let orbit = if orbit_check {
        let bound = lcdeg::delta_loc_via_orbit(&graph, config.orbit_cap)?;
        let verdict = if !bound.exact {
            Verdict::Truncated
        } else if bound.value == result.value {
            Verdict::Agree
        } else {
            Verdict::Disagree
        };
        Some(OrbitCheckOutput {
            value: bound.value,
            exact: bound.exact,
            verdict,
        })
    } else {
        None
    };

    let body = DeltaLocOutput {
        file: file.display().to_string(),
        n: graph.n(),
        edges: graph.edge_count(),
        delta_loc: result.value,
        witness: result.witness.to_vec(),
        method: result.method,
        sets_examined: result.sets_examined,
        orbit_check: orbit,
    };
    let exit = match &body.orbit_check {
        Some(check) if check.verdict == Verdict::Disagree => 1,
        _ => 0,
    };
    emit(config, "deltaloc", &body, |out, body| {
        out.push_str(&format!(
            "delta_loc = {} (method {:?}, {} sets examined)\n",
            body.delta_loc, body.method, body.sets_examined
        ));
        out.push_str(&format!("witness D = {:?}\n", body.witness));
        if let Some(check) = &body.orbit_check {
            out.push_str(&format!(
                "orbit oracle = {}{} -> {:?}\n",
                check.value,
                if check.exact { "" } else { " (truncated upper bound)" },
                check.verdict
            ));
        }
    });
    Ok(exit)
}

fn cmd_paley(
    config: &Config,
    p: u64,
    verify_all: bool,
    trials: u64,
    max_subset_size: usize,
    falsifier_trials: u64,
) -> CliResult<i32> {
    let ctx = PaleyContext::new(p)?;
    if config.output == OutputKind::Dot {
        print!("{}", io::write_dot(ctx.graph()));
        return Ok(0);
    }

    let theorem = paley::verify_paley_theorem(&ctx, config.exact_cap, falsifier_trials, config.seed)?;
    let mut checks_passed: u64 = 0;
    let mut all_ok = theorem.holds && theorem.min_closed_odd_bound_holds;
    let mut battery = None;
    if verify_all {
        let odd_even = paley::verify_odd_even_identity(&ctx, trials, config.seed)?;
        let weil = paley::verify_weil_bound(&ctx, max_subset_size, trials, config.seed ^ 1)?;
        checks_passed = odd_even.checks + weil.checks;
        all_ok &= odd_even.passed && weil.passed;
        battery = Some(VerifyBatteryOutput {
            char_sum_identity_passed: odd_even.passed,
            char_sum_checks: odd_even.checks,
            weil_bound_passed: weil.passed,
            weil_checks: weil.checks,
        });
    }

    let (delta_loc, witness_set, mode) = match &theorem.verification {
        paley::PaleyVerification::Verified { delta_loc } => (
            Some(delta_loc.value),
            Some(delta_loc.witness.to_vec()),
            "verified",
        ),
        paley::PaleyVerification::NotFalsified { .. } => (None, None, "not-falsified"),
    };
    let body = PaleyOutput {
        p,
        delta_loc,
        bound: theorem.bound,
        witness_set,
        char_sum_checks_passed: checks_passed,
        mode,
        holds: theorem.holds,
        min_closed_odd_bound_holds: theorem.min_closed_odd_bound_holds,
        battery,
    };
    emit(config, "paley", &body, |out, body| {
        match body.delta_loc {
            Some(v) => out.push_str(&format!(
                "delta_loc(Pal_{}) = {v}, bound sqrt(p) - 3/2 = {:.3}: {}\n",
                body.p,
                body.bound,
                if body.holds { "holds" } else { "VIOLATED" }
            )),
            None => out.push_str(&format!(
                "p = {} above the exact cap; bound {:.3} {}\n",
                body.p,
                body.bound,
                if body.holds {
                    "not falsified"
                } else {
                    "FALSIFIED"
                }
            )),
        }
        if let Some(b) = &body.battery {
            out.push_str(&format!(
                "character-sum identity: {} over {} subsets\n",
                if b.char_sum_identity_passed { "pass" } else { "FAIL" },
                b.char_sum_checks
            ));
            out.push_str(&format!(
                "Weil bound: {} over {} subsets\n",
                if b.weil_bound_passed { "pass" } else { "FAIL" },
                b.weil_checks
            ));
        }
    });
    Ok(if all_ok { 0 } else { 1 })
}

#[allow(clippy::too_many_arguments)]
fn cmd_reduce(
    config: &Config,
    matrix: &PathBuf,
    gadget_side: usize,
    required_d: Option<usize>,
    attempts: u64,
    gadget_file: &Option<PathBuf>,
    paley_gadget: Option<u64>,
    falsifier_trials: u64,
    emit_dir: &Option<PathBuf>,
) -> CliResult<i32> {
    let a = codes::parse_matrix(&read_file(matrix)?)?;
    if a.rows() < a.cols() {
        return Err(CliError::Usage(format!(
            "generator must have at least as many rows as columns, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    let n = a.rows() - a.cols();

    if let Some(p) = paley_gadget {
        return cmd_reduce_paley(config, &a, p, emit_dir);
    }

    let gadget_b = match gadget_file {
        Some(path) => codes::parse_matrix(&read_file(path)?)?,
        None => {
            let required = required_d.unwrap_or(n + 3);
            match codes::gadget_code_search(gadget_side, required, attempts, config.seed)? {
                Some(b) => b,
                None => {
                    return Err(CliError::Usage(format!(
                        "gadget search exhausted {attempts} attempts \
                         (side {gadget_side}, required distance {required}); \
                         raise --gadget-side or lower --required-d"
                    )))
                }
            }
        }
    };

    let params = VerifyParams {
        side_cap: config.oneside_cap,
        falsifier_trials,
        seed: config.seed,
        ..VerifyParams::default()
    };
    let outcome = reduction::reduce_with_gadget(&a, &gadget_b, &params)?;

    match outcome {
        ReductionOutcome::Singular { kernel_witness } => {
            let body = ReduceOutput {
                k: a.cols(),
                n,
                singular: true,
                answer: 0,
                d_min: 0,
                delta_loc_plus_1: None,
                equal: None,
                method: None,
                kernel_witness: Some(kernel_witness.ones().collect()),
                preconditions: None,
                witness: None,
            };
            emit(config, "reduce", &body, |out, _| {
                out.push_str("kernel is nontrivial: minimum weight 0, no graph built\n");
            });
            Ok(0)
        }
        ReductionOutcome::Verified {
            instance,
            report,
            min_distance,
            ..
        } => {
            if config.output == OutputKind::Dot {
                print!("{}", io::write_dot(&instance.composed));
                return Ok(0);
            }
            if let Some(dir) = emit_dir {
                write_bundle(dir, &a, &instance)?;
            }
            let body = ReduceOutput {
                k: instance.k,
                n: instance.n,
                singular: false,
                answer: report.delta_loc_plus_one,
                d_min: min_distance.distance,
                delta_loc_plus_1: Some(report.delta_loc_plus_one),
                equal: Some(report.equal),
                method: Some(report.method),
                kernel_witness: None,
                preconditions: Some(report.preconditions.clone()),
                witness: Some(report.witness.to_vec()),
            };
            emit(config, "reduce", &body, |out, body| {
                out.push_str(&format!(
                    "d_min = {}, delta_loc(G) + 1 = {} ({:?}): {}\n",
                    body.d_min,
                    body.answer,
                    body.method.unwrap(),
                    if body.equal == Some(true) {
                        "EQUAL"
                    } else {
                        "MISMATCH"
                    }
                ));
                if let Some(pre) = &body.preconditions {
                    out.push_str(&format!(
                        "gadget delta_loc = {} (> {} required), composed min degree = {}\n",
                        pre.delta_loc_gadget, pre.gadget_bound, pre.min_degree_composed
                    ));
                }
            });
            Ok(if report.equal { 0 } else { 1 })
        }
    }
}

/// Experimental tier: Paley gadget, non-bipartite composed graph, full
/// enumeration under the exact cap.
fn cmd_reduce_paley(
    config: &Config,
    a: &BinaryMatrix,
    p: u64,
    emit_dir: &Option<PathBuf>,
) -> CliResult<i32> {
    if let Some(kernel) = a.kernel_vector() {
        let body = ReduceOutput {
            k: a.cols(),
            n: a.rows() - a.cols(),
            singular: true,
            answer: 0,
            d_min: 0,
            delta_loc_plus_1: None,
            equal: None,
            method: None,
            kernel_witness: Some(kernel.ones().collect()),
            preconditions: None,
            witness: None,
        };
        emit(config, "reduce", &body, |out, _| {
            out.push_str("kernel is nontrivial: minimum weight 0, no graph built\n");
        });
        return Ok(0);
    }
    let ctx = paley::PaleyContext::new(p)?;
    let sf = codes::systematic_form(a)?;
    let inst = reduction::compose_general(&sf.aprime, ctx.graph(), 0)?;
    if config.output == OutputKind::Dot {
        print!("{}", io::write_dot(&inst.composed));
        return Ok(0);
    }
    let report =
        reduction::verify_reduction_general(&inst, a, ctx.graph(), config.exact_cap, 24)?;
    if let Some(dir) = emit_dir {
        std::fs::create_dir_all(dir)
            .map_err(|e| CliError::Io(format!("cannot create {}: {e}", dir.display())))?;
        write_file(&dir.join("a.txt"), &codes::write_matrix(a))?;
        write_file(&dir.join("gadget.edges"), &io::write_edge_list(ctx.graph()))?;
        write_file(
            &dir.join("composed.edges"),
            &io::write_edge_list(&inst.composed),
        )?;
        write_file(&dir.join("composed.dot"), &io::write_dot(&inst.composed))?;
    }
    let body = ReduceOutput {
        k: inst.k,
        n: inst.n,
        singular: false,
        answer: report.delta_loc_plus_one,
        d_min: report.d_min,
        delta_loc_plus_1: Some(report.delta_loc_plus_one),
        equal: Some(report.equal),
        method: Some(report.method),
        kernel_witness: None,
        preconditions: Some(report.preconditions.clone()),
        witness: Some(report.witness.to_vec()),
    };
    emit(config, "reduce", &body, |out, body| {
        out.push_str(&format!(
            "experimental Paley gadget (p = {p}): d_min = {}, delta_loc(G) + 1 = {}: {}\n",
            body.d_min,
            body.answer,
            if body.equal == Some(true) {
                "EQUAL"
            } else {
                "MISMATCH"
            }
        ));
    });
    Ok(if report.equal { 0 } else { 1 })
}

fn write_bundle(
    dir: &PathBuf,
    a: &BinaryMatrix,
    inst: &reduction::ReductionInstance,
) -> CliResult<()> {
    std::fs::create_dir_all(dir)
        .map_err(|e| CliError::Io(format!("cannot create {}: {e}", dir.display())))?;
    write_file(&dir.join("a.txt"), &codes::write_matrix(a))?;
    write_file(&dir.join("gadget.edges"), &io::write_edge_list(&inst.gadget))?;
    write_file(
        &dir.join("composed.edges"),
        &io::write_edge_list(&inst.composed),
    )?;
    if inst.composed.n() <= 62 {
        write_file(
            &dir.join("composed.g6"),
            &format!("{}\n", io::write_graph6(&inst.composed)?),
        )?;
    }
    write_file(&dir.join("composed.dot"), &io::write_dot(&inst.composed))?;
    let manifest = Manifest {
        k: inst.k,
        n: inst.n,
        u: inst.u,
        v1l: inst.v1l.to_vec(),
        v1r: inst.v1r.to_vec(),
        v2: inst.v2.to_vec(),
        labels: &inst.labels,
    };
    let json = serde_json::to_string_pretty(&manifest)
        .map_err(|e| CliError::Io(format!("manifest: {e}")))?;
    write_file(&dir.join("manifest.json"), &format!("{json}\n"))
}

fn cmd_lll(config: &Config, kind: KindArg, tol: f64, curve_points: usize) -> CliResult<i32> {
    if config.output == OutputKind::Dot {
        return Err(CliError::Usage("lll has no DOT output".into()));
    }
    let kind = match kind {
        KindArg::Bipartite => ConditionKind::Bipartite,
        KindArg::General => ConditionKind::General,
    };
    let c_max = lll::solve_max_c(kind, tol)?;
    let curve = lll::margin_curve(kind, c_max, curve_points)?;
    let body = LllOutput {
        kind,
        c_max,
        tolerance: tol,
        worst_d_curve: curve,
    };
    emit(config, "lll", &body, |out, body| {
        out.push_str(&format!("c_max = {:.6} (tolerance {:.1e})\n", body.c_max, body.tolerance));
        let worst = body
            .worst_d_curve
            .iter()
            .cloned()
            .fold((0.0, f64::NEG_INFINITY), |acc, p| if p.1 > acc.1 { p } else { acc });
        out.push_str(&format!("worst d = {:.6}, margin = {:+.2e}\n", worst.0, worst.1));
    });
    Ok(0)
}

fn cmd_sample(
    config: &Config,
    shape: ShapeArg,
    size: usize,
    count: u64,
    threshold_c: Option<f64>,
) -> CliResult<i32> {
    if config.output == OutputKind::Dot {
        return Err(CliError::Usage("sample has no DOT output".into()));
    }
    let shape = match shape {
        ShapeArg::Graph => ProfileShape::General { n: size },
        ShapeArg::Bipartite => ProfileShape::Bipartite { nu: size },
    };
    let report = lll::empirical_profile(
        shape,
        count,
        config.seed,
        threshold_c,
        config.exact_cap,
        config.oneside_cap,
    )?;
    emit(config, "sample", &report, |out, report| {
        out.push_str(&format!(
            "{} samples, delta_loc histogram:\n",
            report.samples
        ));
        for (value, count) in &report.histogram {
            out.push_str(&format!("  {value}: {count}\n"));
        }
        if let (Some(c), Some(f)) = (report.threshold_c, report.exceed_fraction) {
            out.push_str(&format!("fraction with delta_loc > {c}*n: {f:.4}\n"));
        }
    });
    Ok(0)
}

/// Print the body as JSON or via the text formatter.
fn emit<T: serde::Serialize>(
    config: &Config,
    command: &'static str,
    body: &T,
    text: impl FnOnce(&mut String, &T),
) {
    match config.output {
        OutputKind::Json => {
            let envelope = Envelope {
                command,
                timestamp_unix: if config.deterministic {
                    None
                } else {
                    Some(
                        std::time::SystemTime::now()
                            .duration_since(std::time::UNIX_EPOCH)
                            .map(|d| d.as_secs())
                            .unwrap_or(0),
                    )
                },
                body,
            };
            println!(
                "{}",
                serde_json::to_string_pretty(&envelope).expect("reports serialize")
            );
        }
        _ => {
            let mut out = String::new();
            text(&mut out, body);
            print!("{out}");
        }
    }
}

