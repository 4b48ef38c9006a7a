use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use kacmax::crystal::{enumerate_weight_space_with, YTuple, DEFAULT_NODE_BUDGET};
use kacmax::max_weights::{maximal_dominant_weights, verify_count_conjecture};
use kacmax::paths::{count_t, paths_to_ytuple, ytuple_to_paths, LatticePath, PathSequence};
use kacmax::patterns::{bjs_path_to_perm, bjs_perm_to_path, count_avoiding, Permutation};
use kacmax::{Count, Error, Execution};

const EXIT_USAGE: u8 = 1;
const EXIT_DISAGREE: u8 = 2;
const EXIT_RESOURCE: u8 = 3;

#[derive(Parser)]
#[command(name = "kacmax", version, about = "Maximal dominant weights and multiplicities for affine sl(n)")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Tsv)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Tsv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Oracle {
    Paths,
    Crystal,
    Patterns,
}

impl Oracle {
    fn label(self) -> &'static str {
        match self {
            Oracle::Paths => "paths",
            Oracle::Crystal => "crystal",
            Oracle::Patterns => "patterns",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Conjecture {
    Count,
    Multiplicity,
}

#[derive(Subcommand)]
enum Command {
    /// List the maximal dominant weights of V((k-1)Λ0 + Λs).
    MaxWeights {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        s: usize,
    },
    /// Count maximal dominant weights and compare with the closed formula.
    Count {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        s: usize,
    },
    /// Multiplicity of kΛ0 - γ_ℓ in V(kΛ0).
    Multiplicity {
        #[arg(long)]
        ell: usize,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        backend: BackendArgs,
        /// Run every backend and fail if they disagree.
        #[arg(long)]
        check_all: bool,
    },
    /// Multiplicity table, rows ℓ and columns k.
    Table {
        #[arg(long)]
        ell_max: usize,
        #[arg(long)]
        k_max: usize,
        #[arg(long, default_value_t = 2)]
        k_min: usize,
        #[command(flatten)]
        backend: BackendArgs,
    },
    /// Cross-check a conjecture on a grid.
    Verify {
        #[arg(long, value_enum)]
        conjecture: Conjecture,
        #[arg(long, default_value_t = 2)]
        n_max: usize,
        #[arg(long, default_value_t = 2)]
        k_max: usize,
        #[arg(long, default_value_t = 1)]
        ell_max: usize,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        node_budget: u64,
    },
    /// Apply one direction of a bijection.
    Bijection(BijectionArgs),
}

#[derive(Args)]
struct BackendArgs {
    #[arg(long, value_enum, default_value_t = Oracle::Paths)]
    oracle: Oracle,
    /// Rank used by the crystal backend (default 2ℓ).
    #[arg(long)]
    n: Option<usize>,
    /// Node budget for the crystal backend.
    #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
    node_budget: u64,
}

#[derive(Args)]
#[group(skip)]
#[command(group(clap::ArgGroup::new("input").required(true).args(["perm", "path", "paths", "ytuple"])))]
struct BijectionArgs {
    /// 321-avoiding permutation to a lattice path.
    #[arg(long)]
    perm: Option<String>,
    /// Lattice path below the diagonal to a permutation.
    #[arg(long)]
    path: Option<String>,
    /// Admissible path sequence to a Y-tuple.
    #[arg(long)]
    paths: Option<String>,
    /// Y-tuple to a path sequence; needs --ell.
    #[arg(long, requires = "ell")]
    ytuple: Option<String>,
    #[arg(long)]
    ell: Option<usize>,
    /// Rank (default 2ℓ).
    #[arg(long)]
    n: Option<usize>,
}

enum Failure {
    Usage(String),
    Disagree(String),
    Resource(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ResourceLimit { .. } => Failure::Resource(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

type Outcome = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Ok(v) = std::env::var("KACMAX_THREADS") {
        match v.parse::<usize>() {
            Ok(t) if t > 0 => {
                if let Err(e) = kacmax::configure_threads(t) {
                    eprintln!("warning: {e}");
                }
            }
            _ => {
                eprintln!("error: KACMAX_THREADS must be a positive integer, got {v:?}");
                return ExitCode::from(EXIT_USAGE);
            }
        }
    }
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Disagree(out)) => {
            print!("{out}");
            eprintln!("error: backends disagree");
            ExitCode::from(EXIT_DISAGREE)
        }
        Err(Failure::Resource(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_RESOURCE)
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    let fmt = cli.format;
    match &cli.command {
        Command::MaxWeights { n, k, s } => max_weights(fmt, *n, *k, *s),
        Command::Count { n, k, s } => count(fmt, *n, *k, *s),
        Command::Multiplicity { ell, k, backend, check_all } => multiplicity(fmt, *ell, *k, backend, *check_all),
        Command::Table { ell_max, k_max, k_min, backend } => table(fmt, *ell_max, *k_min, *k_max, backend),
        Command::Verify { conjecture, n_max, k_max, ell_max, node_budget } => match conjecture {
            Conjecture::Count => verify_count(fmt, *n_max, *k_max),
            Conjecture::Multiplicity => verify_multiplicity(fmt, *ell_max, *k_max, *node_budget),
        },
        Command::Bijection(args) => bijection(args),
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

fn max_weights(fmt: Format, n: usize, k: usize, s: usize) -> Outcome {
    let report = maximal_dominant_weights(n, k, s)?;
    if fmt == Format::Json {
        let weights: Vec<_> = report.weights.iter().collect();
        return Ok(json(&weights));
    }
    let mut out = String::from("weight\tm\n");
    for w in &report.weights {
        let m: Vec<String> = w.m.iter().map(u64::to_string).collect();
        let _ = writeln!(out, "{w}\t({})", m.join(","));
    }
    let _ = writeln!(out, "count\t{}", report.count);
    Ok(out)
}

#[derive(Serialize)]
struct CountRow {
    n: usize,
    k: usize,
    s: usize,
    count: usize,
    formula: Option<u64>,
    agree: Option<bool>,
}

fn dash<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "-".to_string(), |x| x.to_string())
}

fn count(fmt: Format, n: usize, k: usize, s: usize) -> Outcome {
    let r = maximal_dominant_weights(n, k, s)?;
    let row = CountRow { n, k, s, count: r.count, formula: r.formula_count, agree: r.agree };
    if fmt == Format::Json {
        return Ok(json(&row));
    }
    Ok(format!(
        "n\tk\ts\tcount\tformula\tagree\n{}\t{}\t{}\t{}\t{}\t{}\n",
        row.n,
        row.k,
        row.s,
        row.count,
        dash(row.formula),
        dash(row.agree)
    ))
}

fn compute(oracle: Oracle, ell: usize, k: usize, n: Option<usize>, budget: u64) -> Result<Count, Error> {
    match oracle {
        Oracle::Paths => count_t(ell, k),
        Oracle::Patterns => count_avoiding(ell, k),
        Oracle::Crystal => {
            let n = n.unwrap_or(2 * ell);
            let set = enumerate_weight_space_with(n, k, ell, budget, Execution::default())?;
            Ok(Count::from(set.len()))
        }
    }
}

#[derive(Serialize)]
struct MultiplicityRow {
    ell: usize,
    k: usize,
    backend: Oracle,
    multiplicity: String,
    conjectural: bool,
}

fn multiplicity(fmt: Format, ell: usize, k: usize, b: &BackendArgs, check_all: bool) -> Outcome {
    let oracles = if check_all { vec![Oracle::Paths, Oracle::Crystal, Oracle::Patterns] } else { vec![b.oracle] };
    let mut rows = Vec::new();
    for oracle in oracles {
        let value = compute(oracle, ell, k, b.n, b.node_budget)?;
        rows.push(MultiplicityRow {
            ell,
            k,
            backend: oracle,
            multiplicity: value.to_string(),
            conjectural: oracle == Oracle::Patterns,
        });
    }
    let agree = rows.windows(2).all(|w| w[0].multiplicity == w[1].multiplicity);
    let out = if fmt == Format::Json {
        json(&rows)
    } else {
        let mut out = String::from("ell\tk\tbackend\tmultiplicity\tnote\n");
        for r in &rows {
            let note = if r.conjectural { "conjectural" } else { "-" };
            let _ = writeln!(out, "{}\t{}\t{}\t{}\t{note}", r.ell, r.k, r.backend.label(), r.multiplicity);
        }
        out
    };
    if agree {
        Ok(out)
    } else {
        Err(Failure::Disagree(out))
    }
}

#[derive(Serialize)]
struct TableJson {
    backend: Oracle,
    conjectural: bool,
    k: Vec<usize>,
    rows: Vec<TableRow>,
}

#[derive(Serialize)]
struct TableRow {
    ell: usize,
    values: Vec<String>,
}

fn table(fmt: Format, ell_max: usize, k_min: usize, k_max: usize, b: &BackendArgs) -> Outcome {
    let ks: Vec<usize> = (k_min..=k_max).collect();
    let mut rows = Vec::new();
    for ell in 1..=ell_max {
        let values = ks
            .iter()
            .map(|&k| compute(b.oracle, ell, k, b.n.map(|n| n.max(2 * ell)), b.node_budget).map(|c| c.to_string()))
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(TableRow { ell, values });
    }
    if fmt == Format::Json {
        return Ok(json(&TableJson { backend: b.oracle, conjectural: b.oracle == Oracle::Patterns, k: ks, rows }));
    }
    let header: Vec<String> = ks.iter().map(usize::to_string).collect();
    let mut out = format!("ell\\k\t{}\n", header.join("\t"));
    for r in rows {
        let _ = writeln!(out, "{}\t{}", r.ell, r.values.join("\t"));
    }
    Ok(out)
}

fn verify_count(fmt: Format, n_max: usize, k_max: usize) -> Outcome {
    let rows = verify_count_conjecture(n_max, k_max)?;
    let all = rows.iter().all(|r| r.agree);
    let out = if fmt == Format::Json {
        #[derive(Serialize)]
        struct Report<'a> {
            pass: bool,
            rows: &'a [kacmax::max_weights::CountCheck],
        }
        json(&Report { pass: all, rows: &rows })
    } else {
        let mut out = String::from("n\tk\tenumerated\tformula\tagree\n");
        for r in &rows {
            let _ = writeln!(out, "{}\t{}\t{}\t{}\t{}", r.n, r.k, r.enumerated, r.formula, r.agree);
        }
        let _ = writeln!(out, "{}", if all { "PASS" } else { "FAIL" });
        out
    };
    if all {
        Ok(out)
    } else {
        Err(Failure::Disagree(out))
    }
}

#[derive(Serialize)]
struct TriangleRow {
    ell: usize,
    k: usize,
    paths: String,
    crystal: String,
    patterns: String,
    agree: bool,
}

fn verify_multiplicity(fmt: Format, ell_max: usize, k_max: usize, budget: u64) -> Outcome {
    let mut rows = Vec::new();
    for ell in 1..=ell_max {
        for k in 2..=k_max {
            let p = compute(Oracle::Paths, ell, k, None, budget)?.to_string();
            let c = compute(Oracle::Crystal, ell, k, None, budget)?.to_string();
            let a = compute(Oracle::Patterns, ell, k, None, budget)?.to_string();
            let agree = p == c && c == a;
            rows.push(TriangleRow { ell, k, paths: p, crystal: c, patterns: a, agree });
        }
    }
    let all = rows.iter().all(|r| r.agree);
    let out = if fmt == Format::Json {
        #[derive(Serialize)]
        struct Report<'a> {
            pass: bool,
            rows: &'a [TriangleRow],
        }
        json(&Report { pass: all, rows: &rows })
    } else {
        let mut out = String::from("ell\tk\tpaths\tcrystal\tpatterns\tagree\n");
        for r in &rows {
            let _ = writeln!(out, "{}\t{}\t{}\t{}\t{}\t{}", r.ell, r.k, r.paths, r.crystal, r.patterns, r.agree);
        }
        let _ = writeln!(out, "{}", if all { "PASS" } else { "FAIL" });
        out
    };
    if all {
        Ok(out)
    } else {
        Err(Failure::Disagree(out))
    }
}

fn bijection(a: &BijectionArgs) -> Outcome {
    if let Some(w) = &a.perm {
        let w: Permutation = w.parse()?;
        return Ok(format!("{}\n", bjs_perm_to_path(&w)?));
    }
    if let Some(p) = &a.path {
        let p: LatticePath = p.parse()?;
        return Ok(format!("{}\n", bjs_path_to_perm(&p)?));
    }
    if let Some(seq) = &a.paths {
        let seq: PathSequence = seq.parse()?;
        let n = a.n.unwrap_or(2 * seq.ell());
        return Ok(format!("{}\n", paths_to_ytuple(&seq, n)?));
    }
    if let (Some(t), Some(ell)) = (&a.ytuple, a.ell) {
        let n = a.n.unwrap_or(2 * ell);
        let t = YTuple::parse(t, n)?;
        return Ok(format!("{}\n", ytuple_to_paths(&t, ell, n)?));
    }
    Err(Failure::Usage("nothing to convert".into()))
}
