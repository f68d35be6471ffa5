//! The `braidkl` command line: polynomials, enumerations, verification
//! suites and the polynomial cache.
//!
//! [`run`] is the whole program; `main` only forwards the process arguments
//! and streams so that tests can drive it in-process.

pub mod cache;
pub mod render;

use std::ffi::OsString;
use std::io::{self, Write};
use std::path::PathBuf;

use braidkl::cactus::{
    count_cacti_closed, count_des1_closed, count_husimi_closed, count_rdes_closed, des_convolution, enumerate_cacti,
    enumerate_deserts, enumerate_husimi, enumerate_rooted_deserts, HusimiType,
};
use braidkl::klcore::{inv_kl_poly_braid, kl_poly_braid};
use braidkl::matroid::range_set;
use braidkl::oracles::{run_oracle, ORACLE_IDS};
use braidkl::spgen::{count_s, enumerate_s};
use braidkl::verify::{run_suite, Mode, Suite, SuiteReport, VerifyOptions};
use braidkl::{Error, IntPoly, Integer, KlTable, PolyKind};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use cache::Cache;
use render::Table;

/// Environment variable naming the cache directory.
pub const CACHE_ENV: &str = "BRAIDKL_CACHE_DIR";

/// Largest braid index `poly` computes.
pub const MAX_POLY_N: usize = 40;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "braidkl", version, about = "Kazhdan-Lusztig polynomials of braid matroids and their combinatorics")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Md, global = true)]
    pub format: Format,

    /// Directory for cached polynomials; caching is off when unset.
    #[arg(long, env = CACHE_ENV, global = true)]
    pub cache_dir: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Md,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    P,
    Q,
}

impl From<Kind> for PolyKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::P => PolyKind::P,
            Kind::Q => PolyKind::Q,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    S,
    Cacti,
    Deserts,
    Rdeserts,
    Husimi,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    ClosedForm,
    Exhaustive,
    Both,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::ClosedForm => Mode::ClosedForm,
            ModeArg::Exhaustive => Mode::Exhaustive,
            ModeArg::Both => Mode::Both,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print P_{B_n} or Q_{B_n}.
    Poly {
        #[arg(value_enum, ignore_case = true)]
        kind: Kind,
        n: usize,
    },
    /// Count (and optionally list) a family of labeled objects.
    Enum(EnumArgs),
    /// Run a verification suite, or `all`.
    Verify {
        suite: String,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, value_enum, default_value_t = ModeArg::Both)]
        mode: ModeArg,
    },
    /// Inspect or fill the polynomial cache.
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
    /// Run a brute-force reference computation.
    #[command(hide = true)]
    Oracle {
        id: String,
        n: usize,
        #[arg(long = "type")]
        husimi_type: Option<String>,
    },
}

#[derive(Debug, Args)]
pub struct EnumArgs {
    #[arg(value_enum)]
    pub family: Family,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
    /// Vertex count for cacti (vertex set {1, ..., V}).
    #[arg(long)]
    pub vertices: Option<usize>,
    #[arg(long)]
    pub p: Option<usize>,
    /// Husimi type such as `(0,1)`.
    #[arg(long = "type")]
    pub husimi_type: Option<String>,
    /// Print every object, not just the count.
    #[arg(long)]
    pub list: bool,
}

#[derive(Debug, Subcommand)]
pub enum CacheAction {
    /// List cached entries.
    List,
    /// Delete every cached entry.
    Clear,
    /// Compute and store P and Q up to `--max-n`.
    Warm {
        #[arg(long)]
        max_n: usize,
    },
}

/// A failure with its exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Domain(_) => EXIT_USAGE,
            Error::Resource(_) => EXIT_RESOURCE,
            Error::Invariant(_) => EXIT_FAILED,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure { code: EXIT_FAILED, message: format!("i/o error: {e}") }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure { code: EXIT_USAGE, message: msg.into() }
}

type Outcome = Result<i32, Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    match execute(&cli, out, err) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let cache = cli.cache_dir.as_ref().map(Cache::new);
    match &cli.command {
        Command::Poly { kind, n } => cmd_poly((*kind).into(), *n, cli.format, cache.as_ref(), out, err),
        Command::Enum(args) => cmd_enum(args, cli.format, out),
        Command::Verify { suite, max_n, mode } => {
            cmd_verify(suite, *max_n, (*mode).into(), cli.format, cache.as_ref(), out, err)
        }
        Command::Cache { action } => {
            let cache =
                cache.ok_or_else(|| usage(format!("no cache directory; pass --cache-dir or set {CACHE_ENV}")))?;
            cmd_cache(action, &cache, cli.format, out, err)
        }
        Command::Oracle { id, n, husimi_type } => cmd_oracle(id, *n, husimi_type.as_deref(), cli.format, out),
    }
}

fn emit<S: Serialize>(format: Format, json: &S, table: &Table, out: &mut dyn Write) -> io::Result<()> {
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, json).map_err(io::Error::other)?;
            writeln!(out)
        }
        Format::Csv => table.write_csv(out),
        Format::Md => table.write_markdown(out),
    }
}

fn seeded_table(cache: Option<&Cache>, max_n: usize, err: &mut dyn Write) -> KlTable {
    let mut table = KlTable::new();
    if let Some(c) = cache {
        let mut warnings = Vec::new();
        c.seed(&mut table, max_n, &mut warnings);
        for w in warnings {
            let _ = writeln!(err, "warning: {w}");
        }
    }
    table
}

fn store_table(cache: Option<&Cache>, table: &KlTable) -> Result<(), Failure> {
    if let Some(c) = cache {
        c.store(table)?;
    }
    Ok(())
}

#[derive(Serialize)]
struct PolyJson {
    kind: String,
    n: usize,
    coeffs: Vec<String>,
    poly: String,
}

fn compute(kind: PolyKind, n: usize, table: &mut KlTable) -> braidkl::Result<IntPoly> {
    match kind {
        PolyKind::P => kl_poly_braid(n, table),
        PolyKind::Q => inv_kl_poly_braid(n, table),
    }
}

fn cmd_poly(
    kind: PolyKind,
    n: usize,
    format: Format,
    cache: Option<&Cache>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Outcome {
    if n == 0 {
        return Err(usage("n must be at least 1"));
    }
    if n > MAX_POLY_N {
        return Err(Failure { code: EXIT_RESOURCE, message: format!("poly supports n <= {MAX_POLY_N}, got {n}") });
    }
    let mut table = seeded_table(cache, n, err);
    let poly = compute(kind, n, &mut table)?;
    store_table(cache, &table)?;
    let coeffs: Vec<String> = poly.coeffs().iter().map(|c| c.to_string()).collect();
    let mut t = Table::new(&["degree", "coeff"]);
    for (i, c) in coeffs.iter().enumerate() {
        t.push(vec![i.to_string(), c.clone()]);
    }
    let json = PolyJson { kind: kind.to_string(), n, coeffs, poly: poly.to_string() };
    emit(format, &json, &t, out)?;
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct EnumJson {
    family: String,
    parameters: String,
    count: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    closed_form: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    items: Option<Vec<String>>,
}

fn need(v: Option<usize>, flag: &str, family: &str) -> Result<usize, Failure> {
    v.ok_or_else(|| usage(format!("enum {family} needs --{flag}")))
}

fn family_name(f: Family) -> &'static str {
    match f {
        Family::S => "s",
        Family::Cacti => "cacti",
        Family::Deserts => "deserts",
        Family::Rdeserts => "rdeserts",
        Family::Husimi => "husimi",
    }
}

fn cmd_enum(args: &EnumArgs, format: Format, out: &mut dyn Write) -> Outcome {
    let name = family_name(args.family);
    let (parameters, count, closed, items): (String, Integer, Option<Integer>, Option<Vec<String>>) = match args.family
    {
        Family::S => {
            let (n, k) = (need(args.n, "n", name)?, need(args.k, "k", name)?);
            let items = if args.list {
                Some(enumerate_s(n, k)?.iter().map(|m| m.to_string()).collect::<Vec<_>>())
            } else {
                None
            };
            // |S(n, k)| is the coefficient of t^(n-k) in P_{B_(n+1)}
            let closed = if k <= n && n < MAX_POLY_N {
                Some(kl_poly_braid(n + 1, &mut KlTable::new())?.coeff(n - k))
            } else {
                None
            };
            (format!("n={n},k={k}"), count_s(n, k)?, closed, items)
        }
        Family::Cacti => {
            let v = need(args.vertices, "vertices", name)?;
            if v == 0 || v > 15 {
                return Err(usage("--vertices must be between 1 and 15"));
            }
            let list = enumerate_cacti(range_set(v as u8))?;
            let closed = if v % 2 == 1 { count_cacti_closed(v.div_ceil(2))? } else { Integer::from(0) };
            let items = args.list.then(|| list.iter().map(|g| g.to_string()).collect());
            (format!("vertices={v}"), Integer::from(list.len()), Some(closed), items)
        }
        Family::Deserts => {
            let (n, m) = (need(args.n, "n", name)?, need(args.m, "m", name)?);
            let list = enumerate_deserts(n, m)?;
            let closed = if m == 1 { count_des1_closed(n)? } else { des_convolution(n, m)? };
            let items = args.list.then(|| list.iter().map(|g| g.to_string()).collect());
            (format!("n={n},m={m}"), Integer::from(list.len()), Some(closed), items)
        }
        Family::Rdeserts => {
            let (n, m) = (need(args.n, "n", name)?, need(args.m, "m", name)?);
            let list = enumerate_rooted_deserts(n, m)?;
            let closed = if m < n { Some(count_rdes_closed(n, m)?) } else { None };
            let items = args.list.then(|| list.iter().map(|g| g.to_string()).collect());
            (format!("n={n},m={m}"), Integer::from(list.len()), closed, items)
        }
        Family::Husimi => {
            let p = need(args.p, "p", name)?;
            let ty: HusimiType = args
                .husimi_type
                .as_deref()
                .ok_or_else(|| usage("enum husimi needs --type, for example --type '(0,1)'"))?
                .parse()?;
            let list = enumerate_husimi(p, &ty)?;
            let items = args.list.then(|| list.iter().map(|g| g.to_string()).collect());
            (format!("p={p},type={ty}"), Integer::from(list.len()), Some(count_husimi_closed(p, &ty)?), items)
        }
    };
    let closed_s = closed.map(|c| c.to_string());
    let mut t;
    match &items {
        Some(list) => {
            t = Table::new(&["family", "parameters", "index", "item"]);
            for (i, item) in list.iter().enumerate() {
                t.push(vec![name.into(), parameters.clone(), i.to_string(), item.clone()]);
            }
        }
        None => {
            t = Table::new(&["family", "parameters", "count", "closed_form"]);
            t.push(vec![name.into(), parameters.clone(), count.to_string(), closed_s.clone().unwrap_or_default()]);
        }
    }
    let json = EnumJson { family: name.into(), parameters, count: count.to_string(), closed_form: closed_s, items };
    emit(format, &json, &t, out)?;
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct RowJson<'a> {
    suite: &'a str,
    parameter: &'a str,
    lhs: &'a str,
    rhs: &'a str,
    pass: bool,
}

#[derive(Serialize)]
struct VerifyJson<'a> {
    passed: bool,
    suites: Vec<SuiteJson<'a>>,
}

#[derive(Serialize)]
struct SuiteJson<'a> {
    suite: &'a str,
    passed: bool,
    rows: Vec<RowJson<'a>>,
}

fn report_table(reports: &[SuiteReport], failures_only: bool) -> Table {
    let mut t = Table::new(&["suite", "parameter", "lhs", "rhs", "pass"]);
    for r in reports {
        for row in r.rows.iter().filter(|x| !failures_only || !x.pass) {
            t.push(vec![
                row.suite.clone(),
                row.parameter.clone(),
                row.lhs.clone(),
                row.rhs.clone(),
                row.pass.to_string(),
            ]);
        }
    }
    t
}

fn cmd_verify(
    suite: &str,
    max_n: Option<usize>,
    mode: Mode,
    format: Format,
    cache: Option<&Cache>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Outcome {
    let suites: Vec<Suite> = if suite == "all" { Suite::ALL.to_vec() } else { vec![suite.parse()?] };
    let seed_to = suites.iter().map(|s| 2 * max_n.unwrap_or(s.default_max_n()).min(s.cap())).max().unwrap_or(0);
    let mut table = seeded_table(cache, seed_to.min(MAX_POLY_N), err);
    let mut reports = Vec::new();
    for s in suites {
        reports.push(run_suite(s, VerifyOptions { max_n, mode }, &mut table)?);
    }
    store_table(cache, &table)?;
    let passed = reports.iter().all(|r| r.passed());
    let json = VerifyJson {
        passed,
        suites: reports
            .iter()
            .map(|r| SuiteJson {
                suite: r.suite.id(),
                passed: r.passed(),
                rows: r
                    .rows
                    .iter()
                    .map(|x| RowJson {
                        suite: &x.suite,
                        parameter: &x.parameter,
                        lhs: &x.lhs,
                        rhs: &x.rhs,
                        pass: x.pass,
                    })
                    .collect(),
            })
            .collect(),
    };
    emit(format, &json, &report_table(&reports, false), out)?;
    if passed {
        Ok(EXIT_OK)
    } else {
        writeln!(err, "verification failed:")?;
        report_table(&reports, true).write_markdown(err)?;
        Ok(EXIT_FAILED)
    }
}

#[derive(Serialize)]
struct CacheJson {
    dir: String,
    action: String,
    entries: Vec<String>,
    count: usize,
}

fn cmd_cache(action: &CacheAction, cache: &Cache, format: Format, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let (name, entries) = match action {
        CacheAction::List => ("list", cache.list()?),
        CacheAction::Clear => {
            let before = cache.list()?;
            cache.clear()?;
            ("clear", before)
        }
        CacheAction::Warm { max_n } => {
            if *max_n == 0 || *max_n > MAX_POLY_N {
                return Err(Failure {
                    code: EXIT_RESOURCE,
                    message: format!("cache warm supports 1 <= --max-n <= {MAX_POLY_N}"),
                });
            }
            let mut table = seeded_table(Some(cache), *max_n, err);
            kl_poly_braid(*max_n, &mut table)?;
            inv_kl_poly_braid(*max_n, &mut table)?;
            cache.store(&table)?;
            ("warm", cache.list()?)
        }
    };
    let names: Vec<String> = entries.iter().map(|(k, n)| format!("{k}-{n}")).collect();
    let mut t = Table::new(&["action", "entry"]);
    for e in &names {
        t.push(vec![name.into(), e.clone()]);
    }
    let json =
        CacheJson { dir: cache.dir().display().to_string(), action: name.into(), count: names.len(), entries: names };
    emit(format, &json, &t, out)?;
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct OracleJson {
    oracle: String,
    input: String,
    value: String,
}

fn cmd_oracle(id: &str, n: usize, ty: Option<&str>, format: Format, out: &mut dyn Write) -> Outcome {
    if !ORACLE_IDS.contains(&id) {
        return Err(usage(format!("unknown oracle {id:?}; expected one of {}", ORACLE_IDS.join(", "))));
    }
    let ty: Option<HusimiType> = ty.map(str::parse).transpose()?;
    let r = run_oracle(id, n, ty.as_ref())?;
    let mut t = Table::new(&["oracle", "input", "value"]);
    t.push(vec![r.oracle.clone(), r.input.clone(), r.value.clone()]);
    emit(format, &OracleJson { oracle: r.oracle, input: r.input, value: r.value }, &t, out)?;
    Ok(EXIT_OK)
}
