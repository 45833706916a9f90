//! Command-line front end.
//!
//! Subcommands: `analyze`, `bounds`, `sweep`, `equality`, `paper-tables`.
//! Text output prints values at four decimals in the style of the
//! reference tables; `--output json` carries full precision; `--output
//! csv` emits flat rows. Exit codes: 0 success, 1 data error, 2 usage
//! error.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bounds::{
    bound_sweep, frobenius_bounds, kolotilina_best, kolotilina_bounds, liu_bounds,
    weighted_bounds, xu_bounds, AlphaSpec, BoundParams, BoundResult, SweepTable,
};
use crate::equality::{equality_diagnosis, EqualityReport};
use crate::error::Error;
use crate::format::{display_order, fmt4, fmt_alpha, TextTable};
use crate::graph::{Digraph, TrimReport};
use crate::io::{load_digraph_path, load_weights, resolve_weights, GraphFormat};
use crate::oracle::{exact_charpoly_radius, spectral_radius_oracle};
use crate::walks::{reach_pattern, root_of_ratio, walk_table};

#[derive(Debug, Parser)]
#[command(
    name = "rhobound",
    version,
    about = "Certified spectral-radius bounds for digraphs from outdegree ratios"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Input file format.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::EdgeList)]
    pub format: FormatArg,

    /// Analyze the transposed digraph (column-sum bounds on the same
    /// spectral radius).
    #[arg(long, global = true)]
    pub transpose: bool,

    /// Output rendering.
    #[arg(long, global = true, value_enum, default_value_t = OutputArg::Text)]
    pub output: OutputArg,

    /// Tolerance for the power-iteration reference.
    #[arg(long, global = true, default_value_t = 1e-10)]
    pub tol: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    EdgeList,
    Dense,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputArg {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Frobenius,
    Weighted,
    Liu,
    Xu,
    Kolotilina,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EqualityFamilyArg {
    Liu,
    Xu,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Structural analysis: degrees, connectivity, imprimitivity, and the
    /// reference spectral radius.
    Analyze { file: PathBuf },

    /// Evaluate one bound family.
    Bounds {
        file: PathBuf,
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Walk order of the denominator outdegrees.
        #[arg(long, default_value_t = 0)]
        k: usize,
        /// Root order for the liu and kolotilina families.
        #[arg(long = "L", default_value_t = 1)]
        l: usize,
        /// Pair walk length for the xu family.
        #[arg(long = "M", default_value_t = 1)]
        m: usize,
        /// Second walk order for the xu family.
        #[arg(long = "N", default_value_t = 1)]
        n: usize,
        /// Fixed alpha in [0, 1] for the kolotilina family.
        #[arg(long)]
        alpha: Option<f64>,
        /// Alpha grid step for the kolotilina family (default when
        /// --alpha is absent: 0.01).
        #[arg(long)]
        grid_step: Option<f64>,
        /// Positive weight per vertex for the weighted family.
        #[arg(long)]
        weights: Option<PathBuf>,
    },

    /// Evaluate every family over a walk budget, marking per-tier bests.
    Sweep {
        file: PathBuf,
        #[arg(long, default_value_t = 4)]
        budget: usize,
        #[arg(long, default_value_t = 0.01)]
        grid_step: f64,
    },

    /// Equality diagnosis via outdegree (quasi)regularity.
    Equality {
        file: PathBuf,
        #[arg(long, value_enum)]
        family: EqualityFamilyArg,
        #[arg(long, default_value_t = 0)]
        k: usize,
        #[arg(long = "L", default_value_t = 1)]
        l: usize,
        #[arg(long = "M", default_value_t = 1)]
        m: usize,
        #[arg(long = "N", default_value_t = 1)]
        n: usize,
    },

    /// Render the three reference bound tables for a digraph.
    PaperTables {
        file: PathBuf,
        #[arg(long, default_value_t = 4)]
        budget: usize,
        #[arg(long, default_value_t = 0.01)]
        grid_step: f64,
    },
}

/// CLI failure split by exit code: usage errors exit 2, data errors 1.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Data(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Data(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Data(e) => write!(f, "{e}"),
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// Full CLI entry point: parses, executes, prints, and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(&cli) {
        Ok(output) => {
            print!("{output}");
            0
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(CliError::Data(e)) => {
            eprintln!("error: {e}");
            1
        }
    }
}

/// Parses an argument vector and returns the rendered output (test hook).
pub fn run_to_string<I, T>(args: I) -> CliResult<String>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(args)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    execute(&cli)
}

/// Executes a parsed command and returns its rendered output.
pub fn execute(cli: &Cli) -> CliResult<String> {
    match &cli.command {
        Command::Analyze { file } => cmd_analyze(cli, file),
        Command::Bounds {
            file,
            family,
            k,
            l,
            m,
            n,
            alpha,
            grid_step,
            weights,
        } => cmd_bounds(cli, file, *family, *k, *l, *m, *n, *alpha, *grid_step, weights.as_deref()),
        Command::Sweep {
            file,
            budget,
            grid_step,
        } => cmd_sweep(cli, file, *budget, *grid_step),
        Command::Equality {
            file,
            family,
            k,
            l,
            m,
            n,
        } => cmd_equality(cli, file, *family, *k, *l, *m, *n),
        Command::PaperTables {
            file,
            budget,
            grid_step,
        } => cmd_paper_tables(cli, file, *budget, *grid_step),
    }
}

fn load(cli: &Cli, path: &Path) -> CliResult<Digraph> {
    let format = match cli.format {
        FormatArg::EdgeList => GraphFormat::EdgeList,
        FormatArg::Dense => GraphFormat::Dense,
    };
    let g = load_digraph_path(path, format)?;
    Ok(if cli.transpose { g.transpose() } else { g })
}

/// Removes sinks ahead of k > 0 ratio bounds, which trimming leaves the
/// spectral radius unchanged. Returns the trimmed graph, notice lines,
/// and the report.
fn trim_sinks(g: &Digraph) -> (Digraph, Vec<String>, Option<TrimReport>) {
    if !g.has_sinks() {
        return (g.clone(), Vec::new(), None);
    }
    let (trimmed, report) = g.trim(false);
    let mut notices = vec![format!(
        "note: trimmed {} sink vertex(es) in {} round(s); the spectral radius is preserved",
        report.removed_sinks.len(),
        report.rounds
    )];
    if report.became_empty {
        notices.push("note: trimming emptied the graph; the spectral radius is 0".to_string());
    }
    (trimmed, notices, Some(report))
}

fn render_notices(notices: &[String]) -> String {
    let mut out = String::new();
    for n in notices {
        out.push_str(n);
        out.push('\n');
    }
    if !notices.is_empty() {
        out.push('\n');
    }
    out
}

fn json_string<T: Serialize>(value: &T) -> CliResult<String> {
    let mut s = serde_json::to_string_pretty(value)
        .map_err(|e| CliError::Data(Error::InvalidParameter(e.to_string())))?;
    s.push('\n');
    Ok(s)
}

// ---------------------------------------------------------------------------
// analyze

#[derive(Debug, Serialize)]
struct TrimPreview {
    removed_sinks: usize,
    rounds: usize,
    became_empty: bool,
    remaining: usize,
}

#[derive(Debug, Serialize)]
struct AnalyzeReport {
    file: String,
    transposed: bool,
    vertices: usize,
    arcs: u64,
    distinct_arcs: usize,
    self_loops: u64,
    sinks: Vec<String>,
    sources: Vec<String>,
    trim: Option<TrimPreview>,
    strongly_connected: bool,
    components: usize,
    index_of_imprimitivity: Option<u64>,
    /// Divisors r > 1 of h: the graph is cyclically r-partite for each.
    cyclic_partite_r: Vec<u64>,
    outdegree_min: u64,
    outdegree_max: u64,
    spectral_radius: f64,
    power_converged: bool,
    power_iterations: usize,
    spectral_radius_exact: Option<f64>,
}

fn cmd_analyze(cli: &Cli, file: &Path) -> CliResult<String> {
    let g = load(cli, file)?;
    let report = analyze_report(cli, file, &g)?;
    match cli.output {
        OutputArg::Json => json_string(&report),
        OutputArg::Csv => Ok(analyze_csv(&report)),
        OutputArg::Text => Ok(analyze_text(&report)),
    }
}

fn analyze_report(cli: &Cli, file: &Path, g: &Digraph) -> CliResult<AnalyzeReport> {
    let order = display_order(g.labels());
    let name = |i: usize| g.label(i).to_string();
    if g.is_empty() {
        return Ok(AnalyzeReport {
            file: file.display().to_string(),
            transposed: cli.transpose,
            vertices: 0,
            arcs: 0,
            distinct_arcs: 0,
            self_loops: 0,
            sinks: Vec::new(),
            sources: Vec::new(),
            trim: None,
            strongly_connected: false,
            components: 0,
            index_of_imprimitivity: None,
            cyclic_partite_r: Vec::new(),
            outdegree_min: 0,
            outdegree_max: 0,
            spectral_radius: 0.0,
            power_converged: true,
            power_iterations: 0,
            spectral_radius_exact: Some(0.0),
        });
    }

    let scc = g.scc()?;
    let h = if scc.is_strongly_connected {
        g.index_of_imprimitivity().ok()
    } else {
        None
    };
    let cyclic_partite_r = h
        .map(|h| (2..=h).filter(|r| h % r == 0).collect())
        .unwrap_or_default();
    let sinks: Vec<String> = order
        .iter()
        .copied()
        .filter(|&i| g.outdegree(i) == 0)
        .map(name)
        .collect();
    let indeg = g.indegrees();
    let sources: Vec<String> = order
        .iter()
        .copied()
        .filter(|&i| indeg[i] == 0)
        .map(name)
        .collect();
    let trim = if sinks.is_empty() {
        None
    } else {
        let (trimmed, report) = g.trim(false);
        Some(TrimPreview {
            removed_sinks: report.removed_sinks.len(),
            rounds: report.rounds,
            became_empty: report.became_empty,
            remaining: trimmed.n(),
        })
    };
    let degrees = g.outdegrees();
    let oracle = spectral_radius_oracle(g, cli.tol)?;
    let exact = exact_charpoly_radius(g).ok();

    Ok(AnalyzeReport {
        file: file.display().to_string(),
        transposed: cli.transpose,
        vertices: g.n(),
        arcs: g.arc_count(),
        distinct_arcs: g.distinct_arc_count(),
        self_loops: (0..g.n()).map(|i| g.self_loops(i)).sum(),
        sinks,
        sources,
        trim,
        strongly_connected: scc.is_strongly_connected,
        components: scc.components.len(),
        index_of_imprimitivity: h,
        cyclic_partite_r,
        outdegree_min: degrees.iter().copied().min().unwrap_or(0),
        outdegree_max: degrees.iter().copied().max().unwrap_or(0),
        spectral_radius: oracle.rho,
        power_converged: oracle.converged,
        power_iterations: oracle.iterations,
        spectral_radius_exact: exact,
    })
}

fn list_or_none(items: &[String]) -> String {
    if items.is_empty() {
        "none".to_string()
    } else {
        format!("{} ({})", items.len(), items.join(", "))
    }
}

fn analyze_text(r: &AnalyzeReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("file: {}\n", r.file));
    if r.transposed {
        out.push_str("transposed: yes (column-sum view)\n");
    }
    out.push_str(&format!("vertices: {}\n", r.vertices));
    out.push_str(&format!(
        "arcs: {} ({} distinct, {} self-loops)\n",
        r.arcs, r.distinct_arcs, r.self_loops
    ));
    if r.vertices == 0 {
        out.push_str("spectral radius: 0\n");
        return out;
    }
    out.push_str(&format!("sinks: {}\n", list_or_none(&r.sinks)));
    out.push_str(&format!("sources: {}\n", list_or_none(&r.sources)));
    if let Some(t) = &r.trim {
        if t.became_empty {
            out.push_str(&format!(
                "trim: removes all {} vertices in {} round(s); spectral radius 0\n",
                t.removed_sinks, t.rounds
            ));
        } else {
            out.push_str(&format!(
                "trim: removes {} vertex(es) in {} round(s), {} remain; spectral radius preserved\n",
                t.removed_sinks, t.rounds, t.remaining
            ));
        }
    }
    if r.strongly_connected {
        out.push_str("strongly connected: yes\n");
        if let Some(h) = r.index_of_imprimitivity {
            out.push_str(&format!("index of imprimitivity: {h}\n"));
            if r.cyclic_partite_r.is_empty() {
                out.push_str("cyclically r-partite: no (h = 1)\n");
            } else {
                let rs: Vec<String> =
                    r.cyclic_partite_r.iter().map(|r| r.to_string()).collect();
                out.push_str(&format!("cyclically r-partite for r: {}\n", rs.join(", ")));
            }
        }
    } else {
        out.push_str(&format!(
            "strongly connected: no ({} components)\n",
            r.components
        ));
    }
    out.push_str(&format!(
        "outdegree range: [{}, {}]\n",
        r.outdegree_min, r.outdegree_max
    ));
    let suffix = if r.power_converged {
        String::new()
    } else {
        " (not converged)".to_string()
    };
    out.push_str(&format!(
        "spectral radius (shifted power): {}{}\n",
        fmt4(r.spectral_radius),
        suffix
    ));
    if let Some(exact) = r.spectral_radius_exact {
        out.push_str(&format!("spectral radius (exact charpoly): {}\n", fmt4(exact)));
    }
    out
}

fn analyze_csv(r: &AnalyzeReport) -> String {
    let mut out = String::from("field,value\n");
    let mut kv = |k: &str, v: String| out.push_str(&format!("{k},{v}\n"));
    kv("file", r.file.clone());
    kv("transposed", r.transposed.to_string());
    kv("vertices", r.vertices.to_string());
    kv("arcs", r.arcs.to_string());
    kv("distinct_arcs", r.distinct_arcs.to_string());
    kv("self_loops", r.self_loops.to_string());
    kv("sinks", r.sinks.join(" "));
    kv("sources", r.sources.join(" "));
    kv("strongly_connected", r.strongly_connected.to_string());
    kv("components", r.components.to_string());
    kv(
        "index_of_imprimitivity",
        r.index_of_imprimitivity
            .map(|h| h.to_string())
            .unwrap_or_default(),
    );
    kv("outdegree_min", r.outdegree_min.to_string());
    kv("outdegree_max", r.outdegree_max.to_string());
    kv("spectral_radius", format!("{}", r.spectral_radius));
    kv("power_converged", r.power_converged.to_string());
    kv(
        "spectral_radius_exact",
        r.spectral_radius_exact
            .map(|x| format!("{x}"))
            .unwrap_or_default(),
    );
    out
}

// ---------------------------------------------------------------------------
// bounds

#[derive(Debug, Serialize)]
struct BoundsOutput {
    notices: Vec<String>,
    result: BoundResult,
}

#[allow(clippy::too_many_arguments)]
fn cmd_bounds(
    cli: &Cli,
    file: &Path,
    family: FamilyArg,
    k: usize,
    l: usize,
    m: usize,
    n: usize,
    alpha: Option<f64>,
    grid_step: Option<f64>,
    weights: Option<&Path>,
) -> CliResult<String> {
    let g = load(cli, file)?;
    if g.is_empty() {
        return Err(CliError::Data(Error::EmptyGraph));
    }
    if alpha.is_some() && grid_step.is_some() {
        return Err(CliError::Usage(
            "--alpha and --grid-step are mutually exclusive".to_string(),
        ));
    }

    let mut notices = Vec::new();
    let result = match family {
        FamilyArg::Frobenius => frobenius_bounds(&g)?,
        FamilyArg::Weighted => {
            let path = weights.ok_or_else(|| {
                CliError::Usage("--family weighted requires --weights FILE".to_string())
            })?;
            let file = std::fs::File::open(path).map_err(Error::from)?;
            let pairs = load_weights(std::io::BufReader::new(file))?;
            let w = resolve_weights(&g, &pairs)?;
            weighted_bounds(&g, &w)?
        }
        FamilyArg::Liu => {
            let (g, mut trim_notices, _) = trim_for_k(&g, k);
            notices.append(&mut trim_notices);
            if g.is_empty() {
                return empty_after_trim(cli, notices);
            }
            let wt = walk_table(&g, k + l);
            liu_bounds(&wt, k, l)?
        }
        FamilyArg::Xu => {
            let (g, mut trim_notices, _) = trim_for_k(&g, k);
            notices.append(&mut trim_notices);
            if g.is_empty() {
                return empty_after_trim(cli, notices);
            }
            let wt = walk_table(&g, k + m.max(n));
            let pat = reach_pattern(&g, m);
            xu_bounds(&wt, &pat, k, m, n)?
        }
        FamilyArg::Kolotilina => {
            let (g, mut trim_notices, _) = trim_sinks(&g);
            notices.append(&mut trim_notices);
            if g.is_empty() {
                return empty_after_trim(cli, notices);
            }
            let wt = walk_table(&g, k + l);
            let pat = reach_pattern(&g, l);
            match (alpha, grid_step) {
                (Some(a), None) => kolotilina_bounds(&wt, &pat, k, l, a)?,
                (None, step) => kolotilina_best(&wt, &pat, k, l, step.unwrap_or(0.01))?,
                (Some(_), Some(_)) => unreachable!(),
            }
        }
    };

    let output = BoundsOutput { notices, result };
    match cli.output {
        OutputArg::Json => json_string(&output),
        OutputArg::Csv => Ok(bounds_csv(&output.result)),
        OutputArg::Text => Ok(bounds_text(&output)),
    }
}

fn trim_for_k(g: &Digraph, k: usize) -> (Digraph, Vec<String>, Option<TrimReport>) {
    if k == 0 {
        // k = 0 denominators are all ones; sinks are fine here.
        (g.clone(), Vec::new(), None)
    } else {
        trim_sinks(g)
    }
}

fn params_label(params: &BoundParams) -> String {
    match params {
        BoundParams::Frobenius => "frobenius bounds".to_string(),
        BoundParams::Weighted { .. } => "weighted bounds".to_string(),
        BoundParams::Liu { k, l } => format!("liu bounds (k={k}, L={l})"),
        BoundParams::Xu { k, m, n } => format!("xu bounds (k={k}, M={m}, N={n})"),
        BoundParams::Kolotilina { k, l, alpha } => match alpha {
            AlphaSpec::Fixed(a) => {
                format!("kolotilina bounds (k={k}, L={l}, alpha = {})", fmt_alpha(*a))
            }
            AlphaSpec::Grid { step } => {
                format!("kolotilina bounds (k={k}, L={l}, grid step {step})")
            }
        },
    }
}

fn arg_label(arg: &crate::bounds::ExtremumArg) -> String {
    match arg {
        crate::bounds::ExtremumArg::Vertex(v) => format!("at vertex {v}"),
        crate::bounds::ExtremumArg::Pair(i, j) => format!("at pair {i}->{j}"),
    }
}

fn side_alpha(result: &BoundResult, alpha: Option<f64>) -> String {
    match &result.params {
        BoundParams::Kolotilina {
            alpha: AlphaSpec::Grid { .. },
            ..
        } => match alpha {
            Some(a) => format!("  alpha = {}", fmt_alpha(a)),
            None => "  alpha-independent".to_string(),
        },
        _ => String::new(),
    }
}

fn bounds_text(output: &BoundsOutput) -> String {
    let r = &output.result;
    let mut out = render_notices(&output.notices);
    out.push_str(&format!("{}\n", params_label(&r.params)));
    out.push_str(&format!(
        "lower: {}  {}{}\n",
        fmt4(r.lower),
        arg_label(&r.arg_lower),
        side_alpha(r, r.alpha_lower)
    ));
    out.push_str(&format!(
        "upper: {}  {}{}\n",
        fmt4(r.upper),
        arg_label(&r.arg_upper),
        side_alpha(r, r.alpha_upper)
    ));
    out
}

fn params_csv(params: &BoundParams) -> (String, String, String, String, String, String) {
    let blank = String::new();
    match params {
        BoundParams::Frobenius => (
            "frobenius".into(),
            blank.clone(),
            blank.clone(),
            blank.clone(),
            blank.clone(),
            blank,
        ),
        BoundParams::Weighted { .. } => (
            "weighted".into(),
            blank.clone(),
            blank.clone(),
            blank.clone(),
            blank.clone(),
            blank,
        ),
        BoundParams::Liu { k, l } => (
            "liu".into(),
            k.to_string(),
            l.to_string(),
            blank.clone(),
            blank.clone(),
            blank,
        ),
        BoundParams::Xu { k, m, n } => (
            "xu".into(),
            k.to_string(),
            blank.clone(),
            m.to_string(),
            n.to_string(),
            blank,
        ),
        BoundParams::Kolotilina { k, l, alpha } => {
            let a = match alpha {
                AlphaSpec::Fixed(a) => format!("{a}"),
                AlphaSpec::Grid { step } => format!("grid:{step}"),
            };
            (
                "kolotilina".into(),
                k.to_string(),
                l.to_string(),
                blank.clone(),
                blank,
                a,
            )
        }
    }
}

const BOUNDS_CSV_HEADER: &str =
    "family,k,L,M,N,alpha,lower,upper,arg_lower,arg_upper,alpha_lower,alpha_upper,alpha_independent\n";

fn bounds_csv_row(r: &BoundResult) -> String {
    let (family, k, l, m, n, alpha) = params_csv(&r.params);
    format!(
        "{family},{k},{l},{m},{n},{alpha},{},{},{},{},{},{},{}\n",
        r.lower,
        r.upper,
        r.arg_lower,
        r.arg_upper,
        r.alpha_lower.map(|a| a.to_string()).unwrap_or_default(),
        r.alpha_upper.map(|a| a.to_string()).unwrap_or_default(),
        r.alpha_independent
    )
}

fn bounds_csv(r: &BoundResult) -> String {
    format!("{BOUNDS_CSV_HEADER}{}", bounds_csv_row(r))
}

// ---------------------------------------------------------------------------
// sweep

#[derive(Debug, Serialize)]
struct SweepOutput {
    notices: Vec<String>,
    table: SweepTable,
}

fn cmd_sweep(cli: &Cli, file: &Path, budget: usize, grid_step: f64) -> CliResult<String> {
    let g = load(cli, file)?;
    if g.is_empty() {
        return Err(CliError::Data(Error::EmptyGraph));
    }
    let (g, notices, _) = trim_sinks(&g);
    if g.is_empty() {
        return empty_after_trim(cli, notices);
    }
    let table = bound_sweep(&g, budget, grid_step)?;
    let output = SweepOutput { notices, table };
    match cli.output {
        OutputArg::Json => json_string(&output),
        OutputArg::Csv => Ok(sweep_csv(&output.table)),
        OutputArg::Text => Ok(sweep_text(&output)),
    }
}

#[derive(Debug, Serialize)]
struct EmptyOutput {
    notices: Vec<String>,
    spectral_radius: f64,
}

fn empty_after_trim(cli: &Cli, notices: Vec<String>) -> CliResult<String> {
    match cli.output {
        OutputArg::Json => json_string(&EmptyOutput {
            notices,
            spectral_radius: 0.0,
        }),
        OutputArg::Csv => Ok("field,value\nspectral_radius,0\n".to_string()),
        OutputArg::Text => {
            let mut out = render_notices(&notices);
            out.push_str("spectral radius: 0\n");
            Ok(out)
        }
    }
}

fn kolo_cell(value: f64, alpha: Option<f64>) -> String {
    match alpha {
        Some(a) => format!("{}@\u{03b1}={}", fmt4(value), fmt_alpha(a)),
        None => format!("{}*", fmt4(value)),
    }
}

fn sweep_text(output: &SweepOutput) -> String {
    let table = &output.table;
    let mut out = render_notices(&output.notices);
    out.push_str(&format!(
        "bound sweep, walk budget {} (\u{2020} marks the tightest value within a tier)\n\n",
        table.budget
    ));

    out.push_str("liu rows (k,L), tier k+L\n");
    let mut t = TextTable::new();
    t.row(["(k,L)".to_string(), "lower".to_string(), "upper".to_string()]);
    for row in &table.liu {
        if let BoundParams::Liu { k, l } = row.result.params {
            let lo = format!(
                "{}{}",
                fmt4(row.result.lower),
                if row.best_lower_at_tier { "\u{2020}" } else { "" }
            );
            let hi = format!(
                "{}{}",
                fmt4(row.result.upper),
                if row.best_upper_at_tier { "\u{2020}" } else { "" }
            );
            t.row([format!("({k},{l})"), lo, hi]);
        }
    }
    out.push_str(&t.render());

    out.push_str("\nxu rows (k,N), M = 1, tier k+N\n");
    let mut t = TextTable::new();
    t.row(["(k,N)".to_string(), "lower".to_string(), "upper".to_string()]);
    for row in &table.xu {
        if let BoundParams::Xu { k, n, .. } = row.result.params {
            let lo = format!(
                "{}{}",
                fmt4(row.result.lower),
                if row.best_lower_at_tier { "\u{2020}" } else { "" }
            );
            let hi = format!(
                "{}{}",
                fmt4(row.result.upper),
                if row.best_upper_at_tier { "\u{2020}" } else { "" }
            );
            t.row([format!("({k},{n})"), lo, hi]);
        }
    }
    out.push_str(&t.render());

    out.push_str(&format!(
        "\nkolotilina rows (k,L), L = 1, grid step {} (* = alpha-independent)\n",
        table.grid_step
    ));
    let mut t = TextTable::new();
    t.row(["(k,L)".to_string(), "lower".to_string(), "upper".to_string()]);
    for r in &table.kolotilina {
        if let BoundParams::Kolotilina { k, l, .. } = r.params {
            t.row([
                format!("({k},{l})"),
                kolo_cell(r.lower, r.alpha_lower),
                kolo_cell(r.upper, r.alpha_upper),
            ]);
        }
    }
    out.push_str(&t.render());
    out
}

const SWEEP_CSV_HEADER: &str = "family,k,L,M,N,alpha,lower,upper,arg_lower,arg_upper,alpha_lower,alpha_upper,alpha_independent,tier,best_lower_at_tier,best_upper_at_tier\n";

fn sweep_csv(table: &SweepTable) -> String {
    let mut out = String::from(SWEEP_CSV_HEADER);
    for row in table.liu.iter().chain(&table.xu) {
        let mut line = bounds_csv_row(&row.result);
        line.pop();
        out.push_str(&format!(
            "{line},{},{},{}\n",
            row.tier, row.best_lower_at_tier, row.best_upper_at_tier
        ));
    }
    for r in &table.kolotilina {
        let mut line = bounds_csv_row(r);
        line.pop();
        out.push_str(&format!("{line},,,\n"));
    }
    out
}

// ---------------------------------------------------------------------------
// equality

#[derive(Debug, Serialize)]
struct EqualityOutput {
    notices: Vec<String>,
    report: EqualityReport,
}

fn cmd_equality(
    cli: &Cli,
    file: &Path,
    family: EqualityFamilyArg,
    k: usize,
    l: usize,
    m: usize,
    n: usize,
) -> CliResult<String> {
    let g = load(cli, file)?;
    if g.is_empty() {
        return Err(CliError::Data(Error::EmptyGraph));
    }
    let (g, notices, _) = trim_sinks(&g);
    if g.is_empty() {
        return empty_after_trim(cli, notices);
    }
    let params = match family {
        EqualityFamilyArg::Liu => BoundParams::Liu { k, l },
        EqualityFamilyArg::Xu => BoundParams::Xu { k, m, n },
    };
    let report = equality_diagnosis(&g, &params)?;
    let output = EqualityOutput { notices, report };
    match cli.output {
        OutputArg::Json => json_string(&output),
        OutputArg::Csv => Ok(equality_csv(&output.report)),
        OutputArg::Text => Ok(equality_text(&output)),
    }
}

fn equality_text(output: &EqualityOutput) -> String {
    let r = &output.report;
    let mut out = render_notices(&output.notices);
    out.push_str(&format!("equality diagnosis: {}\n", params_label(&r.params)));
    if !r.applicable {
        out.push_str(&format!(
            "inapplicable: {}\n",
            r.reason_inapplicable.as_deref().unwrap_or("unknown")
        ));
        out.push_str("(the bounds themselves remain valid; only the equality theory needs strong connectivity)\n");
        return out;
    }
    let h = r.h.expect("applicable report has h");
    let r_used = r.r_used.expect("applicable report has r");
    let power_name = match &r.params {
        BoundParams::Liu { .. } => "L",
        _ => "M+N",
    };
    out.push_str(&format!("index of imprimitivity h: {h}\n"));
    out.push_str(&format!("r = gcd(h, {power_name}) = {r_used}\n"));
    match &r.regular {
        Some(c) => out.push_str(&format!(
            "average {}-outdegree regular: yes (c = {c})\n",
            r.kappa
        )),
        None => out.push_str(&format!("average {}-outdegree regular: no\n", r.kappa)),
    }
    if r_used >= 2 {
        match &r.quasiregular {
            Some(q) => {
                let cs: Vec<String> = q.constants.iter().map(|c| c.to_string()).collect();
                out.push_str(&format!(
                    "average {}-outdegree {}-quasiregular: yes (c = [{}]; blocks anchored at the BFS root, unique up to rotation)\n",
                    r.kappa,
                    q.r,
                    cs.join(", ")
                ));
            }
            None => out.push_str(&format!(
                "average {}-outdegree {}-quasiregular: no\n",
                r.kappa, r_used
            )),
        }
    }
    out.push_str(&format!(
        "equality predicted: {}\n",
        if r.equality_predicted { "yes" } else { "no" }
    ));
    out.push_str(&format!(
        "bound extrema coincide exactly: {}\n",
        if r.extrema_coincide { "yes" } else { "no" }
    ));
    if let Some(rc) = &r.root_check {
        out.push_str(&format!(
            "root-of-integer check: rho ~= {}, rho^{} = {} -> nearest integer {} ({})\n",
            fmt4(rc.rho),
            rc.r,
            fmt4(rc.power),
            rc.nearest,
            if rc.is_integer { "pass" } else { "FAIL" }
        ));
    }
    out
}

fn equality_csv(r: &EqualityReport) -> String {
    let mut out = String::from("field,value\n");
    let (family, k, l, m, n, _) = params_csv(&r.params);
    out.push_str(&format!("family,{family}\n"));
    out.push_str(&format!("k,{k}\n"));
    if !l.is_empty() {
        out.push_str(&format!("L,{l}\n"));
    }
    if !m.is_empty() {
        out.push_str(&format!("M,{m}\nN,{n}\n"));
    }
    out.push_str(&format!("applicable,{}\n", r.applicable));
    if let Some(h) = r.h {
        out.push_str(&format!("h,{h}\n"));
    }
    if let Some(ru) = r.r_used {
        out.push_str(&format!("r,{ru}\n"));
    }
    out.push_str(&format!(
        "regular,{}\n",
        r.regular.as_ref().map(|c| c.to_string()).unwrap_or_default()
    ));
    out.push_str(&format!(
        "quasiregular,{}\n",
        r.quasiregular
            .as_ref()
            .map(|q| q
                .constants
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(" "))
            .unwrap_or_default()
    ));
    out.push_str(&format!("equality_predicted,{}\n", r.equality_predicted));
    out.push_str(&format!("extrema_coincide,{}\n", r.extrema_coincide));
    if let Some(rc) = &r.root_check {
        out.push_str(&format!("rho,{}\n", rc.rho));
        out.push_str(&format!("rho_power_r,{}\n", rc.power));
        out.push_str(&format!("nearest_integer,{}\n", rc.nearest));
        out.push_str(&format!("is_integer,{}\n", rc.is_integer));
    }
    out
}

// ---------------------------------------------------------------------------
// paper-tables

fn cmd_paper_tables(cli: &Cli, file: &Path, budget: usize, grid_step: f64) -> CliResult<String> {
    let g = load(cli, file)?;
    if g.is_empty() {
        return Err(CliError::Data(Error::EmptyGraph));
    }
    let (g, notices, _) = trim_sinks(&g);
    if g.is_empty() {
        return empty_after_trim(cli, notices);
    }
    let table = bound_sweep(&g, budget, grid_step)?;
    let output = SweepOutput { notices, table };
    match cli.output {
        OutputArg::Json => json_string(&output),
        OutputArg::Csv => Ok(sweep_csv(&output.table)),
        OutputArg::Text => Ok(paper_tables_text(&g, &output)),
    }
}

/// Tier grouping used by the reference tables: tiers 1 and 2 share a
/// group, every later tier stands alone.
fn tier_group(tier: usize) -> usize {
    tier.max(2)
}

fn paper_tables_text(g: &Digraph, output: &SweepOutput) -> String {
    let table = &output.table;
    let budget = table.budget;
    let wt = walk_table(g, budget);
    let order = display_order(g.labels());

    let mut out = render_notices(&output.notices);

    // Table 1: per-vertex ratio roots with min/max, dagger on the top tier.
    out.push_str(&format!(
        "Table 1: liu bounds from k-outdegree ratios, (k,L) with k+L <= {budget}\n"
    ));
    out.push_str(&format!(
        "(\u{2020} marks the tightest lower/upper bound in the top tier k+L = {budget})\n\n"
    ));
    let mut t1 = TextTable::new();
    let mut header = vec!["(k,L)".to_string()];
    header.extend(order.iter().map(|&i| g.label(i).to_string()));
    header.push("min".to_string());
    header.push("max".to_string());
    t1.row(header);
    for row in &table.liu {
        if let BoundParams::Liu { k, l } = row.result.params {
            let mut cells = vec![format!("({k},{l})")];
            for &i in &order {
                cells.push(fmt4(root_of_ratio(wt.count(k + l, i), wt.count(k, i), l)));
            }
            let top = row.tier == budget;
            cells.push(format!(
                "{}{}",
                fmt4(row.result.lower),
                if top && row.best_lower_at_tier { "\u{2020}" } else { "" }
            ));
            cells.push(format!(
                "{}{}",
                fmt4(row.result.upper),
                if top && row.best_upper_at_tier { "\u{2020}" } else { "" }
            ));
            t1.row(cells);
        }
    }
    out.push_str(&t1.render());

    // Table 2: xu pairs, double dagger against the liu group bests.
    out.push_str(&format!(
        "\nTable 2: xu bounds from arc-pair outdegree ratios, (k,N) with M = 1, k+N <= {budget}\n"
    ));
    out.push_str(
        "(\u{2021} marks bounds strictly tighter than every Table 1 bound of the same tier group)\n\n",
    );
    let mut best_liu_lower: std::collections::BTreeMap<usize, f64> = Default::default();
    let mut best_liu_upper: std::collections::BTreeMap<usize, f64> = Default::default();
    for row in &table.liu {
        let group = tier_group(row.tier);
        let lo = best_liu_lower.entry(group).or_insert(f64::NEG_INFINITY);
        *lo = lo.max(row.result.lower);
        let hi = best_liu_upper.entry(group).or_insert(f64::INFINITY);
        *hi = hi.min(row.result.upper);
    }
    let mut t2 = TextTable::new();
    t2.row(["(k,N)".to_string(), "lower".to_string(), "upper".to_string()]);
    for row in &table.xu {
        if let BoundParams::Xu { k, n, .. } = row.result.params {
            let group = tier_group(row.tier);
            let tighter_lower = best_liu_lower
                .get(&group)
                .map(|&b| row.result.lower > b)
                .unwrap_or(false);
            let tighter_upper = best_liu_upper
                .get(&group)
                .map(|&b| row.result.upper < b)
                .unwrap_or(false);
            t2.row([
                format!("({k},{n})"),
                format!(
                    "{}{}",
                    fmt4(row.result.lower),
                    if tighter_lower { "\u{2021}" } else { "" }
                ),
                format!(
                    "{}{}",
                    fmt4(row.result.upper),
                    if tighter_upper { "\u{2021}" } else { "" }
                ),
            ]);
        }
    }
    out.push_str(&t2.render());

    // Table 3: alpha grid search.
    out.push_str(&format!(
        "\nTable 3: kolotilina bounds with alpha grid search, (k,L) with L = 1, step {}\n",
        table.grid_step
    ));
    out.push_str("(* marks a bound independent of alpha)\n\n");
    let mut t3 = TextTable::new();
    t3.row(["(k,L)".to_string(), "lower".to_string(), "upper".to_string()]);
    for r in &table.kolotilina {
        if let BoundParams::Kolotilina { k, l, .. } = r.params {
            t3.row([
                format!("({k},{l})"),
                kolo_cell(r.lower, r.alpha_lower),
                kolo_cell(r.upper, r.alpha_upper),
            ]);
        }
    }
    out.push_str(&t3.render());
    out
}
