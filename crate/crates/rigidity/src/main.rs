use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use rigidity::certify::{self, Certificate, CertifyError};
use rigidity::cover;
use rigidity::families::{self, FamilySpec};
use rigidity::graph::Graph;
use rigidity::limits::SizeLimitError;
use rigidity::oracle;
use rigidity::packing;
use rigidity::report::{self, AnalyzeOptions};
use rigidity::sparsity;
use rigidity::spectral;

const EXIT_INPUT: u8 = 2;
const EXIT_SIZE_GUARD: u8 = 3;

#[derive(Parser)]
#[command(
    name = "rigidity",
    about = "Combinatorial, spectral, and numeric 2D rigidity certificates",
    version
)]
struct Cli {
    /// Bound the number of parallel worker threads (default: available parallelism).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full analysis: stats, spectra, rigidity verdicts, certificates, witnesses.
    Analyze {
        /// Edge-list file ("-" for stdin).
        path: String,
        #[command(flatten)]
        common: CommonFlags,
    },
    /// Evaluate one spectral certificate against a graph.
    Certify {
        /// Edge-list file ("-" for stdin).
        path: String,
        /// Certificate to evaluate.
        #[arg(long, value_enum)]
        theorem: TheoremId,
        /// Multiplicity parameter (edge-disjoint spanning rigid subgraph count).
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[command(flatten)]
        common: CommonFlags,
    },
    /// Pack k edge-disjoint spanning rigid subgraphs via matroid union.
    Pack {
        /// Edge-list file ("-" for stdin).
        path: String,
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// Emit JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Generate a named graph family; prints an edge list on stdout.
    Family {
        /// Family spec as JSON, e.g. {"family":"hd","d":10} ("-" for stdin).
        spec: String,
    },
    /// Print the full spectrum of a graph matrix.
    Spectrum {
        /// Edge-list file ("-" for stdin).
        path: String,
        #[arg(long, value_enum, default_value_t = MatrixKind::Laplacian)]
        matrix: MatrixKind,
        /// Emit JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Recompute the H_d table for d = 6..12: mu2 bounds, cover values, rigidity checks.
    ReproducePaper,
}

#[derive(Args)]
struct CommonFlags {
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
    /// Run size-guarded checks regardless of graph order.
    #[arg(long)]
    force: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum TheoremId {
    /// Three-level condition check granting k edge-disjoint spanning rigid subgraphs.
    Eigkrig,
    /// k = 1 specialization of eigkrig.
    Strcor,
    /// Vertex-deletion form of eigkrig (same conditions).
    Gzeig,
    /// Single inequality mu2 > 2 + (2k-1)/(delta-1).
    Kdisrig,
    /// Single inequality mu2 > 2 + 1/(delta-1) granting rigidity.
    Maincor,
    /// Single inequality mu2 > 2 + 2/(delta-1) granting global rigidity.
    Glob,
    /// Three-level check with numerators 6, 4, 2 granting redundant rigidity.
    Redund,
    /// Ramanujan regular graphs of degree >= 8 are globally rigid.
    RamanujanGlob,
}

#[derive(Clone, Copy, ValueEnum)]
enum MatrixKind {
    Laplacian,
    Adjacency,
    Signless,
}

struct CliError {
    code: u8,
    message: String,
}

fn input_err(message: impl ToString) -> CliError {
    CliError {
        code: EXIT_INPUT,
        message: message.to_string(),
    }
}

impl From<SizeLimitError> for CliError {
    fn from(e: SizeLimitError) -> Self {
        CliError {
            code: EXIT_SIZE_GUARD,
            message: format!("{e} (pass --force where supported, or shrink the input)"),
        }
    }
}

impl From<CertifyError> for CliError {
    fn from(e: CertifyError) -> Self {
        match e {
            CertifyError::SizeLimit(s) => s.into(),
            other => input_err(other),
        }
    }
}

/// Format with 12 significant digits, fixed-point where reasonable.
fn sig12(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let exp = x.abs().log10().floor() as i32;
    if (-4..12).contains(&exp) {
        let decimals = (11 - exp).max(0) as usize;
        format!("{x:.decimals$}")
    } else {
        format!("{x:.11e}")
    }
}

fn read_graph(path: &str) -> Result<Graph, CliError> {
    let text = if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| input_err(format!("reading stdin: {e}")))?;
        buf
    } else {
        std::fs::read_to_string(path).map_err(|e| input_err(format!("reading {path}: {e}")))?
    };
    Graph::parse(&text).map_err(input_err)
}

fn print_certificate(c: &Certificate, json: bool) -> Result<(), CliError> {
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(c).map_err(|e| input_err(e))?
        );
        return Ok(());
    }
    let k = c.k.map(|k| format!(" (k = {k})")).unwrap_or_default();
    println!("theorem {}{k}: {:?}", c.theorem_id, c.verdict);
    println!("  implies: {}", c.implied_property);
    for cond in &c.conditions {
        println!(
            "  {}: lhs {} vs rhs {} (margin {})",
            cond.description,
            sig12(cond.lhs),
            sig12(cond.rhs),
            sig12(cond.margin)
        );
    }
    Ok(())
}

fn cmd_analyze(path: &str, common: &CommonFlags) -> Result<(), CliError> {
    let g = read_graph(path)?;
    let r = report::analyze(&g, path, &AnalyzeOptions { force: common.force });
    if common.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&r).map_err(|e| input_err(e))?
        );
        return Ok(());
    }
    println!("input: {}", r.input);
    println!(
        "n = {}, m = {}, min degree = {}, vertex connectivity = {}",
        r.stats.n,
        r.stats.m,
        r.stats.min_degree,
        r.stats
            .kappa
            .map(|k| k.to_string())
            .unwrap_or_else(|| "n/a".into())
    );
    let s = |v: Option<f64>| v.map(sig12).unwrap_or_else(|| "n/a".into());
    println!(
        "mu2 = {}, lambda2 = {}, lambda = {}, q2 = {}",
        s(r.spectral.mu2),
        s(r.spectral.lambda2),
        s(r.spectral.lambda_abs),
        s(r.spectral.q2)
    );
    println!(
        "rigid = {} (numeric oracle agrees: {}), redundantly rigid = {}, globally rigid = {}",
        r.verdicts.rigid,
        r.verdicts.rigid == r.verdicts.rigid_numeric,
        r.verdicts.redundantly_rigid,
        r.verdicts.globally_rigid
    );
    for c in &r.certificates {
        print_certificate(c, false)?;
    }
    if let Some(v) = &r.variant_report {
        if v.applicable {
            println!(
                "lambda2 variant fires: {} ({} vs {}), q2 variant fires: {} ({} vs {})",
                v.lambda2_fires,
                s(v.lambda2),
                s(v.lambda2_threshold),
                v.q2_fires,
                s(v.q2),
                s(v.q2_threshold)
            );
        }
    }
    if let Some(ls) = &r.witnesses.laman_subgraph {
        println!("spanning (2,3)-tight subgraph: {} edges", ls.len());
    }
    if let (Some(c), Some(chk)) = (&r.witnesses.cover, &r.witnesses.cover_check) {
        println!(
            "non-rigidity cover witness: {} blocks, value {} < {}",
            c.blocks.len(),
            chk.value,
            chk.threshold
        );
    }
    println!("elapsed: {} s", sig12(r.elapsed_seconds));
    Ok(())
}

fn cmd_certify(path: &str, theorem: TheoremId, k: usize, common: &CommonFlags) -> Result<(), CliError> {
    let g = read_graph(path)?;
    if k == 0 {
        return Err(input_err("--k must be at least 1"));
    }
    let cert = match theorem {
        TheoremId::Eigkrig | TheoremId::Gzeig => certify::certify_eigkrig(&g, k, common.force)?,
        TheoremId::Strcor => {
            if k != 1 {
                return Err(input_err("strcor is the k = 1 case; omit --k"));
            }
            certify::certify_eigkrig(&g, 1, common.force)?
        }
        TheoremId::Kdisrig => certify::certify_corollary(&g, k, certify::CorollaryId::Kdisrig)?,
        TheoremId::Maincor | TheoremId::Glob => {
            if k != 1 {
                return Err(input_err("this corollary requires k = 1; omit --k"));
            }
            let which = match theorem {
                TheoremId::Maincor => certify::CorollaryId::Maincor,
                _ => certify::CorollaryId::Glob,
            };
            certify::certify_corollary(&g, 1, which)?
        }
        TheoremId::Redund => certify::certify_redund(&g, common.force)?,
        TheoremId::RamanujanGlob => certify::certify_ramanujan_glob(&g)?,
    };
    print_certificate(&cert, common.json)
}

fn cmd_pack(path: &str, k: usize, json: bool) -> Result<(), CliError> {
    let g = read_graph(path)?;
    if k == 0 {
        return Err(input_err("--k must be at least 1"));
    }
    let result = packing::pack_spanning_rigid(&g, k);
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&result).map_err(|e| input_err(e))?
        );
        return Ok(());
    }
    println!(
        "k = {}: {}",
        result.k,
        if result.found { "found" } else { "not found" }
    );
    for (i, part) in result.parts.iter().enumerate() {
        println!("part {i}: {} edges", part.len());
    }
    Ok(())
}

fn cmd_family(spec: &str) -> Result<(), CliError> {
    let text = if spec == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| input_err(format!("reading stdin: {e}")))?;
        buf
    } else {
        spec.to_string()
    };
    let spec: FamilySpec = serde_json::from_str(&text)
        .map_err(|e| input_err(format!("family spec must be JSON like {{\"family\":\"hd\",\"d\":10}}: {e}")))?;
    let g = spec.generate().map_err(input_err)?;
    print!("{}", g.to_edge_list());
    Ok(())
}

fn cmd_spectrum(path: &str, matrix: MatrixKind, json: bool) -> Result<(), CliError> {
    let g = read_graph(path)?;
    let m = match matrix {
        MatrixKind::Laplacian => spectral::laplacian(&g),
        MatrixKind::Adjacency => spectral::adjacency(&g),
        MatrixKind::Signless => spectral::signless_laplacian(&g),
    };
    let spectrum = spectral::eigenvalues(&m).map_err(input_err)?;
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&spectrum).map_err(|e| input_err(e))?
        );
        return Ok(());
    }
    for v in &spectrum.values {
        println!("{}", sig12(*v));
    }
    println!("max residual: {}", sig12(spectrum.max_residual));
    Ok(())
}

fn cmd_reproduce_paper() -> Result<(), CliError> {
    println!(
        "{:>3} {:>4} {:>5} {:>15} {:>15} {:>15} {:>7} {:>7} {:>7} {:>7}",
        "d", "n", "m", "5/(d+3)", "mu2", "5/(d+1)", "cover", "thresh", "pebble", "numeric"
    );
    for d in 6..=12 {
        let g = families::gen_hd(d).map_err(input_err)?;
        let mu2 = spectral::mu2(&g).map_err(input_err)?;
        let lower = 5.0 / (d as f64 + 3.0);
        let upper = 5.0 / (d as f64 + 1.0);
        let in_bounds = lower < mu2 && mu2 <= upper + 1e-8;
        let c = cover::hd_canonical_cover(d).map_err(input_err)?;
        let chk = cover::verify_cover(&g, &c).map_err(input_err)?;
        let rigid = sparsity::is_rigid(&g);
        let numeric = oracle::is_rigid_numeric(&g, 3);
        println!(
            "{:>3} {:>4} {:>5} {:>15} {:>15} {:>15} {:>7} {:>7} {:>7} {:>7}",
            d,
            g.n(),
            g.m(),
            sig12(lower),
            sig12(mu2),
            sig12(upper),
            chk.value,
            chk.threshold,
            if rigid { "rigid" } else { "flex" },
            if numeric { "rigid" } else { "flex" }
        );
        if !in_bounds || !chk.is_nonrigidity_witness || rigid || numeric {
            return Err(input_err(format!("H_{d} row failed its checks")));
        }
    }
    println!("all rows satisfy 5/(d+3) < mu2 <= 5/(d+1), cover value 10d+5 < 10d+7, and both rigidity tests report flexible");
    Ok(())
}

fn run(cli: Cli) -> Result<(), CliError> {
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            return Err(input_err("--jobs must be at least 1"));
        }
        // Ignore the error if a global pool already exists.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
    match &cli.command {
        Command::Analyze { path, common } => cmd_analyze(path, common),
        Command::Certify {
            path,
            theorem,
            k,
            common,
        } => cmd_certify(path, *theorem, *k, common),
        Command::Pack { path, k, json } => cmd_pack(path, *k, *json),
        Command::Family { spec } => cmd_family(spec),
        Command::Spectrum { path, matrix, json } => cmd_spectrum(path, *matrix, *json),
        Command::ReproducePaper => cmd_reproduce_paper(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
