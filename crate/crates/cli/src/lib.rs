//! The `nzagreb` command line. [`run`] takes an argument vector and returns
//! what the process prints, so the binary is a thin wrapper around it.

use std::fmt::Write as _;
use std::fs;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use nzagreb::alkane::{dataset_csv, parse_alkane};
use nzagreb::closed_forms::{FormulaId, ParamShape};
use nzagreb::families::Family;
use nzagreb::indices::{compute, format_significant, IndexError};
use nzagreb::products::{cartesian_n, product};
use nzagreb::qspr::{
    degeneracy_table, octane_regression, points_csv, supplemented_regression, Property,
    RegressionResult,
};
use nzagreb::verify::{reports_to_csv, verify, Status, VerifyOptions};
use nzagreb::{Graph, IndexId, ProductKind};

const KNOWN_ERRATA: &str = include_str!("../known_errata.txt");

#[derive(Parser)]
#[command(
    name = "nzagreb",
    version,
    about = "Neighbourhood Zagreb index toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate indices on a named family member or an edge-list file.
    Compute {
        #[command(flatten)]
        source: GraphSource,
        /// Index to print; all indices when omitted.
        #[arg(long)]
        index: Option<IndexId>,
        #[arg(long, default_value_t = 6)]
        precision: usize,
    },
    /// Build a graph product and print it as an edge list.
    Product {
        /// Factor edge-list files, in order (at least two).
        #[arg(long = "input", required = true)]
        inputs: Vec<PathBuf>,
        #[arg(long, default_value = "cartesian")]
        kind: ProductKind,
        /// Print this index of the product instead of the edge list.
        #[arg(long)]
        index: Option<IndexId>,
        #[arg(long, default_value_t = 6)]
        precision: usize,
    },
    /// Compare closed forms with brute-force values on constructed graphs.
    Verify {
        /// Formula id, or `all`.
        #[arg(long, default_value = "all")]
        formula: String,
        /// Parameter range such as `4..6`, `4..=6` or `5`.
        #[arg(long, value_parser = parse_range)]
        m: Option<RangeInclusive<usize>>,
        #[arg(long, value_parser = parse_range)]
        n: Option<RangeInclusive<usize>>,
        /// Hamming size lists, e.g. `2,3;4,4,4`.
        #[arg(long, value_parser = parse_size_lists)]
        sizes: Option<Vec<Vec<usize>>>,
        /// Required whenever a random-trial formula is selected.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        /// Write every compared point to this CSV file.
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Exit 2 if a formula not on the known-errata list reports ERRATUM.
        #[arg(long)]
        strict: bool,
    },
    /// Correlate an octane property with the Neighbourhood Zagreb index.
    Qspr {
        /// `acentric` or `entropy`; both when omitted.
        #[arg(long)]
        property: Option<Property>,
        /// Write the (M_N, property) table points to this CSV file.
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long, default_value_t = 6)]
        precision: usize,
    },
    /// Mean isomer degeneracy of each index over the 18 octanes.
    Degeneracy {
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Parse an alkane name and print its carbon tree.
    ParseAlkane {
        name: String,
        /// Print this index of the tree instead of the edge list.
        #[arg(long)]
        index: Option<IndexId>,
        #[arg(long, default_value_t = 6)]
        precision: usize,
    },
    /// The octane dataset with tabulated and recomputed M_N.
    Dataset {
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

#[derive(Args)]
struct GraphSource {
    #[arg(long, conflicts_with = "input")]
    family: Option<Family>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    /// Comma-separated complete-graph orders for `hamming`.
    #[arg(long, value_delimiter = ',')]
    sizes: Vec<usize>,
    /// Edge-list file.
    #[arg(long)]
    input: Option<PathBuf>,
}

enum Failure {
    Usage(String),
    Data(String),
    /// `--strict` found an unexpected erratum; the report is still printed.
    Strict {
        report: String,
        message: String,
    },
}

type Outcome = Result<String, Failure>;

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let bad = || format!("expected N, A..B or A..=B, got {s:?}");
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
    let range = match s.split_once("..") {
        None => num(s).map(|v| v..=v)?,
        Some((a, b)) => num(a)?..=num(b.strip_prefix('=').unwrap_or(b))?,
    };
    if range.is_empty() {
        return Err(format!("range {s:?} is empty"));
    }
    Ok(range)
}

fn parse_size_lists(s: &str) -> Result<Vec<Vec<usize>>, String> {
    s.split(';')
        .map(|list| {
            list.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|_| format!("bad size {t:?} in {s:?}"))
                })
                .collect()
        })
        .collect()
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::Data(format!("{}: {e}", path.display())))?;
    Graph::parse_edge_list(&text).map_err(|e| Failure::Data(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| Failure::Data(format!("{}: {e}", path.display())))
}

fn render(g: &Graph, id: IndexId, precision: usize) -> Result<String, Failure> {
    compute(g, id)
        .map(|v| v.render(precision))
        .map_err(|e| Failure::Data(e.to_string()))
}

fn index_lines(g: &Graph, precision: usize) -> String {
    let mut out = String::new();
    for id in IndexId::ALL {
        let value = match compute(g, id) {
            Ok(v) => v.render(precision),
            Err(IndexError::TooLarge { .. }) => "n/a (graph too large)".to_string(),
            Err(e) => e.to_string(),
        };
        let _ = writeln!(out, "{:<7}{value}", id.as_str());
    }
    out
}

fn compute_cmd(source: GraphSource, index: Option<IndexId>, precision: usize) -> Outcome {
    let g = match (&source.family, &source.input) {
        (Some(family), _) => family
            .build(source.n, source.m, &source.sizes)
            .map_err(|e| Failure::Usage(e.to_string()))?,
        (None, Some(path)) => read_graph(path)?,
        (None, None) => return Err(Failure::Usage("compute needs --family or --input".into())),
    };
    match index {
        Some(id) => Ok(format!("{}\n", render(&g, id, precision)?)),
        None => Ok(index_lines(&g, precision)),
    }
}

fn product_cmd(
    inputs: &[PathBuf],
    kind: ProductKind,
    index: Option<IndexId>,
    precision: usize,
) -> Outcome {
    if inputs.len() < 2 {
        return Err(Failure::Usage(
            "product needs at least two --input files".into(),
        ));
    }
    let factors = inputs
        .iter()
        .map(|p| read_graph(p))
        .collect::<Result<Vec<_>, _>>()?;
    let g = match (kind, factors.as_slice()) {
        (ProductKind::Cartesian, _) => cartesian_n(&factors),
        (_, [a, b]) => product(a, b, kind),
        _ => {
            return Err(Failure::Usage(format!(
                "{kind} product takes exactly two factors"
            )))
        }
    }
    .map_err(|e| Failure::Data(e.to_string()))?;
    match index {
        Some(id) => Ok(format!("{}\n", render(&g, id, precision)?)),
        None => Ok(g.to_edge_list()),
    }
}

fn known_errata() -> Vec<&'static str> {
    KNOWN_ERRATA
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn verify_cmd(
    formula: &str,
    m: Option<RangeInclusive<usize>>,
    n: Option<RangeInclusive<usize>>,
    sizes: Option<Vec<Vec<usize>>>,
    seed: Option<u64>,
    trials: usize,
    csv: Option<&Path>,
    strict: bool,
) -> Outcome {
    let ids: Vec<FormulaId> = if formula.eq_ignore_ascii_case("all") {
        FormulaId::ALL.to_vec()
    } else {
        vec![formula
            .parse()
            .map_err(|e: nzagreb::closed_forms::FormulaError| Failure::Usage(e.to_string()))?]
    };
    let random = ids
        .iter()
        .any(|id| matches!(id.shape(), ParamShape::RandomPair | ParamShape::RandomList));
    let seed = match (seed, random) {
        (Some(s), _) => s,
        (None, false) => 0,
        (None, true) => {
            return Err(Failure::Usage(
                "--seed is required for formulas checked on random graphs".into(),
            ))
        }
    };
    let opts = VerifyOptions {
        m,
        n,
        sizes,
        seed,
        trials,
        ..Default::default()
    };
    let reports: Vec<_> = ids.iter().map(|&id| verify(id, &opts)).collect();

    let mut out = String::new();
    for r in &reports {
        let _ = writeln!(out, "{}", r.summary());
    }
    if let Some(path) = csv {
        write_file(path, &reports_to_csv(&reports))?;
    }
    if strict {
        let exempt = known_errata();
        let unexpected: Vec<_> = reports
            .iter()
            .filter(|r| r.status == Status::Erratum && !exempt.contains(&r.formula.as_str()))
            .map(|r| r.formula.as_str())
            .collect();
        if !unexpected.is_empty() {
            let message = format!("unexpected ERRATUM: {}", unexpected.join(", "));
            return Err(Failure::Strict {
                report: out,
                message,
            });
        }
    }
    Ok(out)
}

fn regression_lines(label: &str, fit: &RegressionResult, p: usize) -> String {
    format!(
        "  {label}: n={} r={} r^2={} slope={} intercept={}\n",
        fit.n,
        format_significant(fit.r, p),
        format_significant(fit.r_squared, p),
        format_significant(fit.slope, p),
        format_significant(fit.intercept, p),
    )
}

fn qspr_cmd(property: Option<Property>, csv: Option<&Path>, precision: usize) -> Outcome {
    let properties = match property {
        Some(p) => vec![p],
        None => vec![Property::Acentric, Property::Entropy],
    };
    let mut out = String::new();
    for p in &properties {
        let _ = writeln!(out, "{} ~ MN", p.as_str());
        out.push_str(&regression_lines(
            "table rows",
            &octane_regression(*p),
            precision,
        ));
        out.push_str(&regression_lines(
            "with 2,2,4-trimethylpentane",
            &supplemented_regression(*p),
            precision,
        ));
    }
    if let Some(path) = csv {
        let [p] = properties.as_slice() else {
            return Err(Failure::Usage("--csv needs a single --property".into()));
        };
        write_file(path, &points_csv(*p))?;
    }
    Ok(out)
}

fn degeneracy_cmd(csv: Option<&Path>) -> Outcome {
    let table = degeneracy_table();
    let mut text = String::new();
    let mut rows = String::from("index,n,t,d_exact,d\n");
    for r in &table {
        let _ = writeln!(
            text,
            "{:<7}n={} t={:<3} d={}",
            r.index.as_str(),
            r.n,
            r.distinct,
            r.render()
        );
        let _ = writeln!(
            rows,
            "{},{},{},{},{}",
            r.index.as_str(),
            r.n,
            r.distinct,
            r.d,
            r.render()
        );
    }
    if let Some(path) = csv {
        write_file(path, &rows)?;
    }
    Ok(text)
}

fn parse_alkane_cmd(name: &str, index: Option<IndexId>, precision: usize) -> Outcome {
    let g = parse_alkane(name).map_err(|e| Failure::Data(format!("{name:?}: {e}")))?;
    match index {
        Some(id) => Ok(format!("{}\n", render(&g, id, precision)?)),
        None => Ok(g.to_edge_list()),
    }
}

fn dispatch(cli: Cli) -> Outcome {
    match cli.command {
        Command::Compute {
            source,
            index,
            precision,
        } => compute_cmd(source, index, precision),
        Command::Product {
            inputs,
            kind,
            index,
            precision,
        } => product_cmd(&inputs, kind, index, precision),
        Command::Verify {
            formula,
            m,
            n,
            sizes,
            seed,
            trials,
            csv,
            strict,
        } => verify_cmd(&formula, m, n, sizes, seed, trials, csv.as_deref(), strict),
        Command::Qspr {
            property,
            csv,
            precision,
        } => qspr_cmd(property, csv.as_deref(), precision),
        Command::Degeneracy { csv } => degeneracy_cmd(csv.as_deref()),
        Command::ParseAlkane {
            name,
            index,
            precision,
        } => parse_alkane_cmd(&name, index, precision),
        Command::Dataset { csv } => match csv {
            Some(path) => write_file(&path, &dataset_csv()).map(|_| String::new()),
            None => Ok(dataset_csv()),
        },
    }
}

/// What one invocation printed and its exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

/// Runs the command line `args` (program name first). Exit codes: 0 success,
/// 1 usage error, 2 data error or a `--strict` failure.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let output = |code, stdout: String, stderr: String| Output {
        code,
        stdout,
        stderr,
    };
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                output(1, String::new(), text)
            } else {
                output(0, text, String::new())
            };
        }
    };
    match dispatch(cli) {
        Ok(out) => output(0, out, String::new()),
        Err(Failure::Usage(msg)) => output(1, String::new(), format!("error: {msg}\n")),
        Err(Failure::Data(msg)) => output(2, String::new(), format!("error: {msg}\n")),
        Err(Failure::Strict { report, message }) => {
            output(2, report, format!("error: {message}\n"))
        }
    }
}
