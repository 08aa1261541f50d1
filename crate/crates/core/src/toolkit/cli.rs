use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::arith::{prime_divisors, require_prime};
use crate::error::{Error, Result};
use crate::groupcore::DEFAULT_ORDER_CAP;
use crate::symchar::{verify_alternating_table, ALT_TABLE_MAX_N, ALT_TABLE_MIN_N};
use crate::theorems::{
    check_corollary, check_theorem_a, check_theorem_b, check_theorem_c, scan_catalog, GroupAnalysis, ScanOptions,
    TheoremId, TheoremReport,
};
use crate::toolkit::bundle::AnalysisBundle;
use crate::toolkit::cache::Cache;
use crate::toolkit::catalog::{builtin_catalog, find_builtin, stretch_catalog};
use crate::toolkit::definition::{load_group_file, GroupDefinition};
use crate::toolkit::lemmas::verify_lemmas;
use crate::toolkit::render;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_CAP: i32 = 2;
pub const EXIT_INCONSISTENT: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "vanishkit", version, about = "Vanishing conjugacy classes of finite permutation groups")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Built-in group name, or a name within --file
    #[arg(long, global = true)]
    group: Option<String>,
    /// Group definition file
    #[arg(long, global = true)]
    file: Option<PathBuf>,
    /// Every group of a built-in catalog
    #[arg(long, global = true, value_enum)]
    catalog: Option<CatalogChoice>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Largest group order to enumerate
    #[arg(long, global = true, default_value_t = DEFAULT_ORDER_CAP)]
    order_cap: usize,
    /// Cache directory (falls back to $VANISHKIT_CACHE)
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    #[arg(long, global = true)]
    no_cache: bool,
    /// Write the report to this file instead of standard output
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Record analysis time in JSON bundles
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CatalogChoice {
    Builtin,
    Stretch,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TheoremArg {
    #[value(name = "A")]
    A,
    #[value(name = "B")]
    B,
    #[value(name = "C")]
    C,
    Corollary,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Conjugacy classes with sizes, orders and centralizers
    Classes,
    /// Exact character table
    Chartable,
    /// Vanishing classes with witness characters
    Vanishing,
    /// Characters of q-defect zero
    DefectZero {
        #[arg(long)]
        prime: Option<u64>,
    },
    /// Check one theorem's hypothesis and conclusion
    Check {
        #[arg(long, value_enum, ignore_case = true)]
        theorem: TheoremArg,
        #[arg(long)]
        prime: Option<u64>,
    },
    /// Full analysis bundle
    Analyze,
    /// Run every checker over a catalog (default: the built-in one)
    Scan,
    /// Reproduce the vanishing pairs for Alt(n)
    VerifyAltTable {
        #[arg(long)]
        n: Option<usize>,
    },
    /// Check the supporting lemmas on their fixture groups
    VerifyLemmas,
    /// List the selected groups
    List,
}

/// Runs the CLI on `argv` (program name first), printing to standard output.
pub fn run_cli<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    run_cli_with(argv, &mut lock)
}

/// As [`run_cli`], writing the report to `out`.
pub fn run_cli_with<I, T>(argv: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return EXIT_OK;
            }
            eprint!("{e}");
            return EXIT_USAGE;
        }
    };
    match execute(&cli) {
        Ok((text, code)) => match &cli.global.output {
            Some(path) => match std::fs::write(path, text) {
                Ok(()) => code,
                Err(e) => {
                    eprintln!("error: {e}");
                    EXIT_USAGE
                }
            },
            None => match out.write_all(text.as_bytes()) {
                Ok(()) => code,
                Err(_) => EXIT_USAGE,
            },
        },
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::OrderCapExceeded { .. } | Error::QuotientTooLarge { .. } => EXIT_CAP,
        Error::SplittingFailure(_) | Error::LiftOutOfRange(_) => EXIT_INCONSISTENT,
        _ => EXIT_USAGE,
    }
}

fn usage(message: &str) -> Error {
    Error::Usage(message.to_string())
}

fn select_groups(g: &Global, default_catalog: bool) -> Result<Vec<GroupDefinition>> {
    if let Some(path) = &g.file {
        let defs = load_group_file(path)?;
        return match &g.group {
            Some(name) => {
                defs.into_iter().find(|d| &d.name == name).map(|d| vec![d]).ok_or(Error::UnknownGroup(name.clone()))
            }
            None => Ok(defs),
        };
    }
    if let Some(name) = &g.group {
        return find_builtin(name).map(|d| vec![d]).ok_or_else(|| Error::UnknownGroup(name.clone()));
    }
    match g.catalog {
        Some(CatalogChoice::Builtin) => Ok(builtin_catalog()),
        Some(CatalogChoice::Stretch) => Ok(stretch_catalog()),
        None if default_catalog => Ok(builtin_catalog()),
        None => Err(usage("select groups with --group, --file or --catalog")),
    }
}

fn bundle(g: &Global, def: &GroupDefinition) -> Result<AnalysisBundle> {
    let cache = if g.no_cache { None } else { Cache::resolve(g.cache_dir.as_deref()) };
    match cache {
        Some(cache) => cache.get_or_compute(def, g.order_cap, g.timing),
        None => AnalysisBundle::compute(def, g.order_cap, g.timing),
    }
}

fn json<T: Serialize>(items: &[T]) -> Result<String> {
    let text =
        if items.len() == 1 { serde_json::to_string_pretty(&items[0])? } else { serde_json::to_string_pretty(items)? };
    Ok(text + "\n")
}

/// Renders per-group output: text blocks separated by blank lines, or JSON.
fn per_group<T: Serialize>(
    g: &Global,
    defs: &[GroupDefinition],
    mut make: impl FnMut(&GroupDefinition, &AnalysisBundle) -> Result<(T, String, bool)>,
) -> Result<(String, i32)> {
    let mut items = Vec::new();
    let mut blocks = Vec::new();
    let mut code = EXIT_OK;
    for def in defs {
        let b = bundle(g, def)?;
        let (item, text, ok) = make(def, &b)?;
        if !ok {
            code = EXIT_INCONSISTENT;
        }
        items.push(item);
        blocks.push(text);
    }
    let text = match g.format {
        Format::Json => json(&items)?,
        Format::Text => blocks.join("\n"),
    };
    Ok((text, code))
}

#[derive(Serialize)]
struct Named<T> {
    group: String,
    #[serde(flatten)]
    body: T,
}

#[derive(Serialize)]
struct DefectZeroRows {
    prime: u64,
    rows: Vec<usize>,
    degrees: Vec<u64>,
}

fn execute(cli: &Cli) -> Result<(String, i32)> {
    let g = &cli.global;
    match &cli.command {
        Command::Classes => per_group(g, &select_groups(g, false)?, |d, b| {
            Ok((Named { group: d.name.clone(), body: b.classes.clone() }, render::classes(b), true))
        }),
        Command::Chartable => per_group(g, &select_groups(g, false)?, |d, b| {
            Ok((Named { group: d.name.clone(), body: b.character_table.clone() }, render::chartable(b), true))
        }),
        Command::Vanishing => per_group(g, &select_groups(g, false)?, |d, b| {
            Ok((Named { group: d.name.clone(), body: b.vanishing.clone() }, render::vanishing(b), true))
        }),
        Command::DefectZero { prime } => per_group(g, &select_groups(g, false)?, |d, b| {
            let primes = match prime {
                Some(q) => {
                    require_prime(*q)?;
                    vec![*q]
                }
                None => prime_divisors(b.order as u64),
            };
            let rows: Vec<(u64, Vec<usize>)> = primes
                .iter()
                .map(|&q| {
                    let degrees = &b.character_table.degrees;
                    (q, (0..degrees.len()).filter(|&r| !(b.order as u64 / degrees[r]).is_multiple_of(q)).collect())
                })
                .collect();
            let body: Vec<DefectZeroRows> = rows
                .iter()
                .map(|(q, rs)| DefectZeroRows {
                    prime: *q,
                    rows: rs.clone(),
                    degrees: rs.iter().map(|&r| b.character_table.degrees[r]).collect(),
                })
                .collect();
            Ok((
                Named { group: d.name.clone(), body: serde_json::json!({ "defect_zero": body }) },
                render::defect_zero(b, &rows),
                true,
            ))
        }),
        Command::Check { theorem, prime } => {
            let id = match theorem {
                TheoremArg::A => TheoremId::A,
                TheoremArg::B => TheoremId::B,
                TheoremArg::C => TheoremId::C,
                TheoremArg::Corollary => TheoremId::Corollary,
            };
            let prime = match (id, prime) {
                (TheoremId::A | TheoremId::C, None) => return Err(usage("theorems A and C need --prime")),
                (TheoremId::A | TheoremId::C, Some(p)) => {
                    require_prime(*p)?;
                    Some(*p)
                }
                _ => None,
            };
            per_group(g, &select_groups(g, false)?, |d, b| {
                let report = match b.theorems.iter().find(|r| r.theorem == id && r.prime == prime) {
                    Some(r) => r.clone(),
                    None => fresh_report(d, g.order_cap, id, prime)?,
                };
                let text = render::theorem(&report);
                let ok = report.consistent;
                Ok((report, text, ok))
            })
        }
        Command::Analyze => per_group(g, &select_groups(g, false)?, |_, b| {
            let text = format!("{}\n{}\n{}", render::classes(b), render::chartable(b), render::vanishing(b));
            let text = b.theorems.iter().fold(text, |acc, r| acc + "\n" + &render::theorem(r));
            Ok((b.clone(), text, b.theorems.iter().all(|r| r.consistent)))
        }),
        Command::Scan => {
            let report = scan_catalog(&select_groups(g, true)?, ScanOptions { order_cap: g.order_cap });
            let ok = report.inconsistent_count() == 0
                && report.groups.iter().all(|s| s.error.is_some() || s.invariants_hold());
            let text = match g.format {
                Format::Json => serde_json::to_string_pretty(&report)? + "\n",
                Format::Text => render::scan(&report),
            };
            Ok((text, if ok { EXIT_OK } else { EXIT_INCONSISTENT }))
        }
        Command::VerifyAltTable { n } => {
            let ns: Vec<usize> = match n {
                Some(n) => vec![*n],
                None => (ALT_TABLE_MIN_N..=ALT_TABLE_MAX_N).collect(),
            };
            let reports = ns.into_iter().map(verify_alternating_table).collect::<Result<Vec<_>>>()?;
            let ok = reports.iter().all(|r| r.passed());
            let text = match g.format {
                Format::Json => json(&reports)?,
                Format::Text => reports.iter().map(render::alt_table).collect::<String>(),
            };
            Ok((text, if ok { EXIT_OK } else { EXIT_INCONSISTENT }))
        }
        Command::VerifyLemmas => {
            let checks = verify_lemmas(g.order_cap)?;
            let ok = checks.iter().all(|c| c.passed);
            let text = match g.format {
                Format::Json => serde_json::to_string_pretty(&checks)? + "\n",
                Format::Text => {
                    checks.iter().map(|c| format!("{}  {}\n", if c.passed { "PASS" } else { "FAIL" }, c.name)).collect()
                }
            };
            Ok((text, if ok { EXIT_OK } else { EXIT_INCONSISTENT }))
        }
        Command::List => {
            let defs = select_groups(g, true)?;
            let text = match g.format {
                Format::Json => serde_json::to_string_pretty(&defs)? + "\n",
                Format::Text => defs.iter().map(|d| format!("{:<18} {}\n", d.name, d.tags.join(" "))).collect(),
            };
            Ok((text, EXIT_OK))
        }
    }
}

fn fresh_report(def: &GroupDefinition, cap: usize, id: TheoremId, prime: Option<u64>) -> Result<TheoremReport> {
    let analysis = GroupAnalysis::new(def.build(cap)?)?;
    match (id, prime) {
        (TheoremId::A, Some(p)) => check_theorem_a(&analysis, p),
        (TheoremId::C, Some(p)) => check_theorem_c(&analysis, p),
        (TheoremId::B, _) => Ok(check_theorem_b(&analysis)),
        _ => Ok(check_corollary(&analysis)),
    }
}
