//! The `ktminor` command line.
//!
//! Exit codes: 0 success, 1 a checked claim failed, 2 usage or runtime error.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{ArgGroup, Args, CommandFactory, FromArgMatches, Parser, Subcommand, ValueEnum};
use ktminor_core::bounds;
use ktminor_core::constructions::{complete_multipartite, ell_tree, turan_graph};
use ktminor_core::search::{self, Family, VerifyConfig, EXHAUSTIVE_DEFAULT_MAX_N, EXHAUSTIVE_SLOW_MAX_N};
use ktminor_core::{graph6, CockadeSpec, MinorSearch, MultipartiteSpec, PasteChoice};
use serde_json::{json, Value};

use crate::io::{format_graph, read_graphs, GraphFormat, IoError};
use crate::{parallel, report};

/// Multipartite and family scans below this order are expected to be clean.
pub const CLEAN_BELOW_T: usize = 50;
/// Seed used when a seeded rule is requested without `--seed`.
pub const DEFAULT_SEED: u64 = 0x6b74;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] ktminor_core::Error),
    #[error(transparent)]
    Io(#[from] IoError),
    #[error("{0}")]
    Usage(String),
    #[error("writing output: {0}")]
    Write(#[from] io::Error),
    #[error("writing CSV: {0}")]
    Csv(#[from] csv::Error),
}

type CliResult<T> = Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(name = "ktminor", version, about = "Cliques, complete-graph minors and extremal bounds")]
pub struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a graph from one of the extremal families.
    Gen(GenArgs),
    /// Count cliques.
    Count(CountArgs),
    /// Test for a K_t minor or compute the Hadwiger number.
    Minor(MinorArgs),
    /// Evaluate a closed-form bound.
    Bound(BoundArgs),
    /// Cross-check the closed forms against enumeration.
    Verify(VerifyArgs),
    /// Run one of the computer searches.
    Search(SearchArgs),
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("family").required(true).args(["ell_tree", "multipartite", "cockade", "turan"])))]
pub struct GenArgs {
    /// ℓ-tree: `L,N`.
    #[arg(long, value_name = "L,N")]
    pub ell_tree: Option<String>,
    /// Complete multipartite graph: part sizes `a,b,c,...`.
    #[arg(long, value_name = "PARTS")]
    pub multipartite: Option<String>,
    /// Cockade: `BASE,K,COPIES` with BASE either `a:b:c` part sizes or
    /// `g6:<graph6>`.
    #[arg(long, value_name = "BASE,K,COPIES")]
    pub cockade: Option<String>,
    /// Turán graph: `N,T`.
    #[arg(long, value_name = "N,T")]
    pub turan: Option<String>,
    /// Seed for random attachment (ℓ-trees) or random pasting (cockades).
    #[arg(long)]
    pub seed: Option<u64>,
    /// Which clique each new cockade copy is pasted onto.
    #[arg(long, value_enum, default_value_t = PasteRule::Least)]
    pub paste: PasteRule,
    #[arg(long, value_enum, default_value_t = GraphFormat::Graph6)]
    pub format: GraphFormat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PasteRule {
    Least,
    Chain,
    Seeded,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct CountArgs {
    /// Input file, or `-` for standard input.
    #[arg(long = "in", default_value = "-")]
    pub input: PathBuf,
    /// Count only cliques of this size.
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long, value_enum, default_value_t = TableFormat::Json)]
    pub format: TableFormat,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("query").required(true).args(["t", "hadwiger"])))]
pub struct MinorArgs {
    #[arg(long = "in", default_value = "-")]
    pub input: PathBuf,
    #[arg(long)]
    pub t: Option<usize>,
    #[arg(long)]
    pub hadwiger: bool,
    /// Include the branch sets of the model found.
    #[arg(long)]
    pub witness: bool,
    /// Largest vertex count the exact search accepts.
    #[arg(long, default_value_t = ktminor_core::minors::DEFAULT_SEARCH_CAP)]
    pub cap: usize,
}

#[derive(Debug, Args)]
pub struct BoundArgs {
    #[arg(long)]
    pub t: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    /// With `--t --n`: the total clique count instead of `k`-cliques.
    #[arg(long)]
    pub total: bool,
    /// `N,T[,K]`: the bound without a `K_t` subgraph.
    #[arg(long, value_name = "N,T[,K]")]
    pub zykov: Option<String>,
    /// `D,N,K`: the `d`-degenerate bound.
    #[arg(long, value_name = "D,N,K")]
    pub degen: Option<String>,
    /// `C,K`: both sides of the `K_{c×2}` inequality.
    #[arg(long, value_name = "C,K")]
    pub k222: Option<String>,
    /// `N,T`: most `K_{t−1}` copies.
    #[arg(long, value_name = "N,T")]
    pub top: Option<String>,
    /// `C,N[,K]`: cliques of a `(K_{c×2}, c)`-cockade.
    #[arg(long, value_name = "C,N[,K]")]
    pub cockade_count: Option<String>,
    /// `N,M`: `4m − 7n`.
    #[arg(long, value_name = "N,M")]
    pub triangle6: Option<String>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Values of t (comma separated), each in 3..=9.
    #[arg(long, value_delimiter = ',', required = true)]
    pub t: Vec<usize>,
    #[arg(long)]
    pub n_max: usize,
    /// Also compare with the exhaustive oracle for small n.
    #[arg(long)]
    pub oracle: bool,
    /// Allow the oracle at n = 7.
    #[arg(long)]
    pub allow_slow: bool,
    /// Confirm witnesses up to this order are K_t-minor-free.
    #[arg(long, default_value_t = 0)]
    pub minor_check: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ScanArg {
    Multipartite,
    Family,
    Lambda,
    Exhaustive,
    Verify,
    Unbalanced,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(long, value_enum)]
    pub scan: ScanArg,
    #[arg(long)]
    pub t_max: Option<usize>,
    #[arg(long)]
    pub c_max: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub t: Option<usize>,
    /// kc2, k1c2, k11c2 or union.
    #[arg(long, default_value = "kc2")]
    pub family: String,
    #[arg(long)]
    pub allow_slow: bool,
    /// Also write per-row CSV here.
    #[arg(long)]
    pub csv: Option<PathBuf>,
    /// Unbalanced sample size.
    #[arg(long, default_value_t = 10_000)]
    pub samples: usize,
    /// Largest n in the unbalanced sample.
    #[arg(long, default_value_t = 60)]
    pub n_max: usize,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Treat any violation as a failed claim.
    #[arg(long)]
    pub expect_clean: bool,
}

/// Parses `argv` (program name first), runs, and returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let mut cmd = Cli::command();
    if std::env::var_os("NO_COLOR").is_some_and(|v| !v.is_empty()) {
        cmd = cmd.color(clap::ColorChoice::Never);
    }
    let cli = match cmd.try_get_matches_from(argv).and_then(|m| Cli::from_arg_matches(&m)) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    if let Some(threads) = cli.threads {
        // A global pool can be installed once per process; later calls keep it.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
    }
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> CliResult<i32> {
    match command {
        Command::Gen(a) => gen(a, out),
        Command::Count(a) => count(a, out),
        Command::Minor(a) => minor(a, out),
        Command::Bound(a) => bound(a, out),
        Command::Verify(a) => verify(a, out),
        Command::Search(a) => search_cmd(a, out),
    }
}

fn numbers(text: &str, sep: char, want: std::ops::RangeInclusive<usize>, what: &str) -> CliResult<Vec<usize>> {
    let values = text
        .split(sep)
        .map(|s| s.trim().parse::<usize>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| CliError::Usage(format!("{what}: {e}")))?;
    if !want.contains(&values.len()) {
        return Err(CliError::Usage(format!("{what}: expected {want:?} comma-separated numbers")));
    }
    Ok(values)
}

fn emit(out: &mut dyn Write, value: &Value) -> CliResult<()> {
    writeln!(out, "{value}")?;
    Ok(())
}

fn gen(a: GenArgs, out: &mut dyn Write) -> CliResult<i32> {
    let g = if let Some(s) = &a.ell_tree {
        let v = numbers(s, ',', 2..=2, "--ell-tree")?;
        ell_tree(v[0], v[1], a.seed)?
    } else if let Some(s) = &a.multipartite {
        complete_multipartite(&MultipartiteSpec::new(numbers(s, ',', 1..=usize::MAX, "--multipartite")?)?)?
    } else if let Some(s) = &a.turan {
        let v = numbers(s, ',', 2..=2, "--turan")?;
        turan_graph(v[0], v[1])?
    } else {
        let s = a.cockade.as_deref().expect("clap requires one family");
        let (base, rest) = s
            .split_once(',')
            .ok_or_else(|| CliError::Usage("--cockade: expected BASE,K,COPIES".into()))?;
        let v = numbers(rest, ',', 2..=2, "--cockade")?;
        let base = match base.strip_prefix("g6:") {
            Some(text) => graph6::decode(text)?,
            None => complete_multipartite(&MultipartiteSpec::new(numbers(base, ':', 1..=usize::MAX, "cockade base")?)?)?,
        };
        let choice = match a.paste {
            PasteRule::Least => PasteChoice::BaseLeast,
            PasteRule::Chain => PasteChoice::Chain,
            PasteRule::Seeded => PasteChoice::Seeded(a.seed.unwrap_or(DEFAULT_SEED)),
        };
        ktminor_core::constructions::cockade(&CockadeSpec::new(base, v[0], v[1]).with_choice(choice))?
    };
    writeln!(out, "{}", format_graph(&g, a.format))?;
    Ok(0)
}

fn count(a: CountArgs, out: &mut dyn Write) -> CliResult<i32> {
    let graphs = read_graphs(&a.input)?;
    match a.format {
        TableFormat::Json => {
            for g in &graphs {
                let v = match a.k {
                    Some(k) => json!({ "n": g.n(), "k": k, "count": parallel::count_cliques_k(g, k).to_string() }),
                    None => report::clique_vector_json(g, &parallel::clique_vector(g)),
                };
                emit(out, &v)?;
            }
        }
        TableFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            match a.k {
                Some(k) => {
                    w.write_record(["n", "k", "count"])?;
                    for g in &graphs {
                        let c = parallel::count_cliques_k(g, k).to_string();
                        w.write_record([g.n().to_string(), k.to_string(), c])?;
                    }
                }
                None => {
                    w.write_record(["n", "total", "clique_vector"])?;
                    for g in &graphs {
                        let cv = parallel::clique_vector(g);
                        let counts: Vec<String> = cv.counts().iter().map(|c| c.to_string()).collect();
                        w.write_record([g.n().to_string(), cv.total().to_string(), counts.join(" ")])?;
                    }
                }
            }
            w.flush()?;
        }
    }
    Ok(0)
}

fn minor(a: MinorArgs, out: &mut dyn Write) -> CliResult<i32> {
    let search = MinorSearch::new(a.cap);
    for g in read_graphs(&a.input)? {
        let mut v = if a.hadwiger {
            let (h, model) = parallel::hadwiger_number(&search, &g)?;
            let mut v = json!({ "n": g.n(), "hadwiger": h });
            if a.witness {
                v["witness"] = report::model_json(&model);
            }
            v
        } else {
            let t = a.t.expect("clap requires --t or --hadwiger");
            let found = parallel::has_kt_minor(&search, &g, t)?;
            let mut v = json!({ "n": g.n(), "t": t, "has_minor": found.is_some() });
            if let (Some(model), true) = (&found, a.witness) {
                v["witness"] = report::model_json(model);
            }
            v
        };
        if let Some(o) = v.as_object_mut() {
            o.insert("graph6".into(), Value::String(graph6::encode(&g)));
        }
        emit(out, &v)?;
    }
    Ok(0)
}

fn bound(a: BoundArgs, out: &mut dyn Write) -> CliResult<i32> {
    let v = if let Some(s) = &a.zykov {
        let v = numbers(s, ',', 2..=3, "--zykov")?;
        let value = match v.get(2) {
            Some(&k) => bounds::zykov_kcliques(v[0], v[1], k)?,
            None => bounds::zykov_total(v[0], v[1])?,
        };
        json!({ "kind": "zykov", "n": v[0], "t": v[1], "k": v.get(2), "value": value.to_string() })
    } else if let Some(s) = &a.degen {
        let v = numbers(s, ',', 3..=3, "--degen")?;
        let value = bounds::degenerate_bound(v[0], v[1], v[2])?;
        json!({ "kind": "degenerate", "d": v[0], "n": v[1], "k": v[2], "value": value.to_string() })
    } else if let Some(s) = &a.k222 {
        let v = numbers(s, ',', 2..=2, "--k222")?;
        let r = bounds::k222_condition(v[0], v[1])?;
        json!({ "kind": "k222", "c": v[0], "k": v[1], "holds": r.holds, "lhs": r.lhs.to_string(), "rhs": r.rhs.to_string() })
    } else if let Some(s) = &a.top {
        let v = numbers(s, ',', 2..=2, "--top")?;
        let value = bounds::top_clique_bound(v[0], v[1])?;
        json!({ "kind": "top-clique", "n": v[0], "t": v[1], "value": value.to_string() })
    } else if let Some(s) = &a.cockade_count {
        let v = numbers(s, ',', 2..=3, "--cockade-count")?;
        let value = match v.get(2) {
            Some(&k) => bounds::cockade_cliques(v[0], v[1], k)?,
            None => bounds::cockade_total(v[0], v[1])?,
        };
        json!({ "kind": "cockade", "c": v[0], "n": v[1], "k": v.get(2), "value": value.to_string() })
    } else if let Some(s) = &a.triangle6 {
        let v = numbers(s, ',', 2..=2, "--triangle6")?;
        let value = bounds::triangle_bound_6conn(v[0] as u64, v[1] as u64);
        json!({ "kind": "triangle-6conn", "n": v[0], "m": v[1], "value": value.to_string() })
    } else {
        let (t, n) = a
            .t
            .zip(a.n)
            .ok_or_else(|| CliError::Usage("bound needs --t and --n (with --k or --total), or another form".into()))?;
        let record = match (a.k, a.total) {
            (Some(k), false) => bounds::extremal_kcliques(n, t, k)?,
            (None, true) => bounds::extremal_total(n, t)?,
            _ => return Err(CliError::Usage("give exactly one of --k and --total".into())),
        };
        report::extremal_json(&record)
    };
    emit(out, &v)?;
    Ok(0)
}

fn verify_config(ts: Vec<usize>, n_max: usize, oracle: bool, allow_slow: bool, minor_check: usize) -> VerifyConfig {
    VerifyConfig {
        ts,
        n_max,
        oracle,
        oracle_n_max: if allow_slow {
            EXHAUSTIVE_SLOW_MAX_N
        } else {
            EXHAUSTIVE_DEFAULT_MAX_N
        },
        allow_slow,
        attainment: true,
        minor_check_n_max: minor_check,
    }
}

fn verify(a: VerifyArgs, out: &mut dyn Write) -> CliResult<i32> {
    let config = verify_config(a.t, a.n_max, a.oracle, a.allow_slow, a.minor_check);
    let r = parallel::verify_theorem_suite(&config)?;
    emit(out, &report::verify_json(&r))?;
    Ok(if r.passed() { 0 } else { 1 })
}

fn csv_file(path: &Option<PathBuf>) -> CliResult<Option<File>> {
    Ok(path.as_ref().map(File::create).transpose()?)
}

fn search_cmd(a: SearchArgs, out: &mut dyn Write) -> CliResult<i32> {
    let need = |v: Option<usize>, flag: &str| v.ok_or_else(|| CliError::Usage(format!("this scan needs {flag}")));
    match a.scan {
        ScanArg::Multipartite | ScanArg::Family | ScanArg::Unbalanced => {
            let r = match a.scan {
                ScanArg::Multipartite => parallel::multipartite_conjecture_scan(need(a.t_max, "--t-max")?)?,
                ScanArg::Family => {
                    let family = match a.family.as_str() {
                        "union" => None,
                        other => Some(
                            Family::parse(other)
                                .ok_or_else(|| CliError::Usage(format!("unknown family {other:?}")))?,
                        ),
                    };
                    parallel::family_threshold_scan(family, need(a.t_max, "--t-max")?)?
                }
                _ => parallel::unbalanced_sample_scan(a.samples, a.n_max, a.seed.unwrap_or(DEFAULT_SEED))?,
            };
            emit(out, &report::search_json(&r))?;
            if let Some(f) = csv_file(&a.csv)? {
                report::search_csv(&r, f)?;
            }
            let expect_clean = a.expect_clean || a.scan == ScanArg::Unbalanced || r.t_max < CLEAN_BELOW_T;
            Ok(if expect_clean && !r.violations.is_empty() { 1 } else { 0 })
        }
        ScanArg::Lambda => {
            let r = search::lambda_scan(need(a.c_max, "--c-max")?)?;
            emit(out, &report::lambda_json(&r))?;
            if let Some(f) = csv_file(&a.csv)? {
                report::lambda_csv(&r, f)?;
            }
            Ok(0)
        }
        ScanArg::Exhaustive => {
            let (n, t) = (need(a.n, "--n")?, need(a.t, "--t")?);
            let table = parallel::exhaustive_extremal(n, t, a.allow_slow)?;
            let mut v = report::exhaustive_json(&table);
            let mut code = 0;
            if (3..=9).contains(&t) {
                let check = search::verify_against_oracle(&table)?;
                v["agrees_with_closed_forms"] = json!(check.passed());
                if !check.passed() {
                    code = 1;
                }
            }
            emit(out, &v)?;
            if let Some(f) = csv_file(&a.csv)? {
                report::exhaustive_csv(&table, f)?;
            }
            Ok(code)
        }
        ScanArg::Verify => {
            let t = need(a.t, "--t")?;
            let n = need(a.n, "--n")?;
            let config = verify_config(vec![t], n, true, a.allow_slow, 0);
            let r = parallel::verify_theorem_suite(&config)?;
            emit(out, &report::verify_json(&r))?;
            Ok(if r.passed() { 0 } else { 1 })
        }
    }
}
