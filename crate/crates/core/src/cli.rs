//! The `stanley` command line: tables, verification suites, partition
//! listings and sequence export.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::json;
use thiserror::Error;

use crate::cache::{CacheError, CoefficientCache, CACHE_DIR_ENV, CACHE_FILE_NAME};
use crate::export::{self, Format};
use crate::partitions::{classify, hook_grid, partitions_of};
use crate::stanley::{
    series_for, Stat, StanleyError, StanleyTable, DEFAULT_ENUM_BOUND, DEFAULT_ORACLE_BOUND,
    DEFAULT_ORDER,
};
use crate::verify::{json_integer, run_suite, Bounds, Suite, VerificationReport};

/// Largest `n` the `partition` subcommand will list (p(30) = 5604 lines).
pub const MAX_PARTITION_LISTING: usize = 30;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "stanley",
    version,
    about = "Stanley's partition function t(n), its complement u(n), and machine checks of their identities"
)]
pub struct Cli {
    /// Series truncation order.
    #[arg(long, global = true, default_value_t = DEFAULT_ORDER as u64,
          value_parser = clap::value_parser!(u64).range(2..))]
    pub order: u64,

    /// Largest n for exhaustive per-partition checks.
    #[arg(long = "enum-bound", global = true, default_value_t = DEFAULT_ENUM_BOUND as u64,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub enum_bound: u64,

    /// Largest n for series-vs-enumeration cross-checks.
    #[arg(long = "oracle-bound", global = true, default_value_t = DEFAULT_ORACLE_BOUND as u64,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub oracle_bound: u64,

    /// Output format: text, json, csv or bfile.
    #[arg(long, global = true, default_value_t = Format::Text)]
    pub format: Format,

    /// Coefficient cache file (defaults to $STANLEY_CACHE_DIR/stanley-coefficients.json when set).
    #[arg(long, global = true)]
    pub cache: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print p, t, u and f from their generating functions.
    Table {
        /// Comma-separated subset of p,t,u,f.
        #[arg(long, value_delimiter = ',', default_value = "p,t,u,f")]
        stats: Vec<Stat>,
        #[arg(long = "max")]
        max_n: usize,
        /// Add brute-force columns and a per-row match marker.
        #[arg(long)]
        oracle: bool,
    },
    /// Run a verification suite; exit status 1 if any check fails.
    Verify {
        #[arg(long, default_value = "all")]
        suite: Suite,
    },
    /// List the partitions of n with their statistics.
    Partition {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Filter::All)]
        filter: Filter,
        /// Show the hook length of every cell.
        #[arg(long)]
        hooks: bool,
    },
    /// Write one sequence in an interchange format.
    Export {
        #[arg(long)]
        stat: Stat,
        #[arg(long = "max")]
        max_n: usize,
        /// Destination file; standard output when absent.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Filter {
    All,
    T,
    U,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliConfig {
    pub order: usize,
    pub enum_bound: usize,
    pub oracle_bound: usize,
    pub output_format: Format,
    pub cache_path: Option<PathBuf>,
}

impl CliConfig {
    fn from_cli(cli: &Cli) -> Self {
        let cache_path = cli.cache.clone().or_else(|| {
            std::env::var_os(CACHE_DIR_ENV)
                .filter(|d| !d.is_empty())
                .map(|d| PathBuf::from(d).join(CACHE_FILE_NAME))
        });
        Self {
            order: cli.order as usize,
            enum_bound: cli.enum_bound as usize,
            oracle_bound: cli.oracle_bound as usize,
            output_format: cli.format,
            cache_path,
        }
    }
}

impl Default for CliConfig {
    fn default() -> Self {
        Self {
            order: DEFAULT_ORDER,
            enum_bound: DEFAULT_ENUM_BOUND,
            oracle_bound: DEFAULT_ORACLE_BOUND,
            output_format: Format::Text,
            cache_path: None,
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: io::Error,
    },
    #[error(transparent)]
    Cache(#[from] CacheError),
    #[error(transparent)]
    Compute(#[from] StanleyError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Io { .. } | CliError::Cache(_) => EXIT_IO,
            CliError::Compute(_) => EXIT_USAGE,
        }
    }
}

/// Result of a command: rendered output plus whether every check passed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub all_passed: bool,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Self {
            output,
            all_passed: true,
        }
    }
}

/// Parses `args` (including the program name), runs the command and writes
/// to the given streams. Returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(text.as_bytes())
            } else {
                stdout.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let config = CliConfig::from_cli(&cli);
    match execute(&config, &cli.command, stderr) {
        Ok(outcome) => {
            if stdout.write_all(outcome.output.as_bytes()).is_err() {
                return EXIT_IO;
            }
            if outcome.all_passed {
                EXIT_OK
            } else {
                EXIT_VERIFY_FAILED
            }
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

pub fn execute(
    config: &CliConfig,
    command: &Command,
    stderr: &mut dyn Write,
) -> Result<Outcome, CliError> {
    match command {
        Command::Table {
            stats,
            max_n,
            oracle,
        } => cmd_table(config, stats, *max_n, *oracle, stderr),
        Command::Verify { suite } => cmd_verify(config, *suite),
        Command::Partition { n, filter, hooks } => {
            cmd_partition(config, *n, *filter, *hooks).map(Outcome::ok)
        }
        Command::Export {
            stat,
            max_n,
            output,
        } => cmd_export(config, *stat, *max_n, output.as_deref(), stderr),
    }
}

/// Columns for `stats` at the configured order, through the cache when one
/// is configured, truncated to `max_n`.
fn load_columns(
    config: &CliConfig,
    stats: &[Stat],
    max_n: usize,
    stderr: &mut dyn Write,
) -> Result<Vec<Vec<BigInt>>, CliError> {
    if max_n > config.order {
        return Err(CliError::Usage(format!(
            "--max {max_n} exceeds the truncation order {}; raise --order",
            config.order
        )));
    }
    let mut columns = Vec::with_capacity(stats.len());
    match &config.cache_path {
        Some(path) => {
            let mut cache = CoefficientCache::open(path)?;
            for w in cache.take_warnings() {
                let _ = writeln!(stderr, "warning: {w}");
            }
            for &stat in stats {
                columns.push(cache.get_or_compute(stat, config.order)?);
            }
            for w in cache.take_warnings() {
                let _ = writeln!(stderr, "warning: {w}");
            }
            cache.save()?;
        }
        None => {
            for &stat in stats {
                columns.push(series_for(stat, config.order)?.into_coeffs());
            }
        }
    }
    for c in &mut columns {
        c.truncate(max_n + 1);
    }
    Ok(columns)
}

pub fn cmd_table(
    config: &CliConfig,
    stats: &[Stat],
    max_n: usize,
    oracle: bool,
    stderr: &mut dyn Write,
) -> Result<Outcome, CliError> {
    if stats.is_empty() {
        return Err(CliError::Usage("--stats needs at least one of p,t,u,f".into()));
    }
    let columns = load_columns(config, stats, max_n, stderr)?;
    let oracle_table = oracle.then(|| StanleyTable::from_enumeration(max_n.min(config.oracle_bound)));

    // per row: Some(true/false) when an oracle value exists, None past the bound
    let matches: Vec<Option<bool>> = (0..=max_n)
        .map(|n| {
            oracle_table.as_ref().and_then(|t| {
                (n <= t.max_n).then(|| {
                    stats
                        .iter()
                        .zip(&columns)
                        .all(|(&s, col)| t.column(s)[n] == col[n])
                })
            })
        })
        .collect();
    let all_passed = matches.iter().all(|m| m.unwrap_or(true));

    let mut header: Vec<String> = vec!["n".into()];
    header.extend(stats.iter().map(|s| s.name().to_string()));
    if oracle {
        header.extend(stats.iter().map(|s| format!("{s}_enum")));
        header.push("match".into());
    }
    let rows: Vec<Vec<String>> = (0..=max_n)
        .map(|n| {
            let mut row = vec![n.to_string()];
            row.extend(columns.iter().map(|c| c[n].to_string()));
            if let Some(t) = &oracle_table {
                for &s in stats {
                    row.push(if n <= t.max_n {
                        t.column(s)[n].to_string()
                    } else {
                        "-".into()
                    });
                }
                row.push(match matches[n] {
                    Some(true) => "ok".into(),
                    Some(false) => "MISMATCH".into(),
                    None => "-".into(),
                });
            }
            row
        })
        .collect();

    let output = match config.output_format {
        Format::Text => render_aligned(&header, &rows),
        Format::Csv => {
            let mut out = header.join(",");
            out.push('\n');
            for row in &rows {
                out.push_str(&row.join(","));
                out.push('\n');
            }
            out
        }
        Format::Json => {
            let json_rows: Vec<_> = (0..=max_n)
                .map(|n| {
                    let mut obj = serde_json::Map::new();
                    obj.insert("n".into(), json!(n));
                    for (s, col) in stats.iter().zip(&columns) {
                        obj.insert(s.name().into(), json_integer(&col[n]));
                    }
                    if let Some(t) = oracle_table.as_ref().filter(|t| n <= t.max_n) {
                        for &s in stats {
                            obj.insert(format!("{s}_enum"), json_integer(&t.column(s)[n]));
                        }
                        obj.insert("match".into(), json!(matches[n]));
                    }
                    serde_json::Value::Object(obj)
                })
                .collect();
            let doc = json!({
                "order": config.order,
                "source": "generating-function",
                "rows": json_rows,
            });
            serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
        }
        Format::Bfile => match (stats, columns.as_slice()) {
            ([_], [col]) => export::to_bfile(col),
            _ => {
                return Err(CliError::Usage(
                    "bfile output holds exactly one statistic; pass a single --stats value".into(),
                ))
            }
        },
    };
    Ok(Outcome { output, all_passed })
}

fn render_aligned(header: &[String], rows: &[Vec<String>]) -> String {
    let widths: Vec<usize> = (0..header.len())
        .map(|i| {
            rows.iter()
                .map(|r| r[i].len())
                .chain([header[i].len()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let line = |cells: &[String]| {
        let parts: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect();
        parts.join("  ") + "\n"
    };
    let mut out = line(header);
    for row in rows {
        out.push_str(&line(row));
    }
    out
}

pub fn cmd_verify(config: &CliConfig, suite: Suite) -> Result<Outcome, CliError> {
    let bounds = Bounds {
        order: config.order,
        enum_bound: config.enum_bound,
        oracle_bound: config.oracle_bound,
    };
    let reports = run_suite(suite, &bounds);
    let all_passed = reports.iter().all(|r| r.passed);
    let output = render_reports(config.output_format, &reports)?;
    Ok(Outcome { output, all_passed })
}

pub fn render_reports(format: Format, reports: &[VerificationReport]) -> Result<String, CliError> {
    Ok(match format {
        Format::Text => {
            let mut out = String::new();
            for r in reports {
                out.push_str(&r.to_line());
                out.push('\n');
            }
            let failed = reports.iter().filter(|r| !r.passed).count();
            out.push_str(&format!("{} checks, {} failed\n", reports.len(), failed));
            out
        }
        Format::Json => serde_json::to_string_pretty(reports).expect("serializable") + "\n",
        Format::Csv => {
            let mut out =
                String::from("check_name,order_or_bound,passed,first_failure_index,lhs_value,rhs_value\n");
            let opt = |v: Option<String>| v.unwrap_or_default();
            for r in reports {
                out.push_str(&format!(
                    "\"{}\",{},{},{},{},{}\n",
                    r.check_name.replace('"', "\"\""),
                    r.order_or_bound,
                    r.passed,
                    opt(r.first_failure_index.map(|i| i.to_string())),
                    opt(r.lhs_value.as_ref().map(ToString::to_string)),
                    opt(r.rhs_value.as_ref().map(ToString::to_string)),
                ));
            }
            out
        }
        Format::Bfile => {
            return Err(CliError::Usage(
                "verification reports are available as text, json or csv".into(),
            ))
        }
    })
}

pub fn cmd_partition(
    config: &CliConfig,
    n: usize,
    filter: Filter,
    show_hooks: bool,
) -> Result<String, CliError> {
    if n > MAX_PARTITION_LISTING {
        return Err(CliError::Usage(format!(
            "n = {n} is above the listing cap of {MAX_PARTITION_LISTING}"
        )));
    }
    let keep = |is_t: bool| match filter {
        Filter::All => true,
        Filter::T => is_t,
        Filter::U => !is_t,
    };
    let listed: Vec<_> = partitions_of(n)
        .map(|l| (classify(&l), l))
        .filter(|(s, _)| keep(s.is_t_type))
        .collect();
    let kind = |is_t: bool| if is_t { "t" } else { "u" };
    Ok(match config.output_format {
        Format::Text | Format::Bfile => {
            let mut out = String::new();
            for (s, l) in &listed {
                out.push_str(&format!(
                    "{l}  O={}  O'={}  H_e={}  {}-type\n",
                    s.odd_parts,
                    s.odd_parts_conjugate,
                    s.even_hooks,
                    kind(s.is_t_type)
                ));
                if show_hooks {
                    for row in hook_grid(l) {
                        let cells: Vec<String> = row.iter().map(|h| format!("{h:>3}")).collect();
                        out.push_str(&format!("    {}\n", cells.join("")));
                    }
                }
            }
            out
        }
        Format::Csv => {
            let mut out = String::from("partition,odd_parts,odd_parts_conjugate,even_hooks,type\n");
            for (s, l) in &listed {
                let parts: Vec<String> = l.parts().iter().map(ToString::to_string).collect();
                out.push_str(&format!(
                    "{},{},{},{},{}\n",
                    parts.join(" "),
                    s.odd_parts,
                    s.odd_parts_conjugate,
                    s.even_hooks,
                    kind(s.is_t_type)
                ));
            }
            out
        }
        Format::Json => {
            let items: Vec<_> = listed
                .iter()
                .map(|(s, l)| {
                    let mut v = json!({
                        "partition": l.parts(),
                        "odd_parts": s.odd_parts,
                        "odd_parts_conjugate": s.odd_parts_conjugate,
                        "even_hooks": s.even_hooks,
                        "type": kind(s.is_t_type),
                    });
                    if show_hooks {
                        v["hooks"] = json!(hook_grid(l));
                    }
                    v
                })
                .collect();
            serde_json::to_string_pretty(&items).expect("serializable") + "\n"
        }
    })
}

pub fn cmd_export(
    config: &CliConfig,
    stat: Stat,
    max_n: usize,
    output: Option<&std::path::Path>,
    stderr: &mut dyn Write,
) -> Result<Outcome, CliError> {
    let column = load_columns(config, &[stat], max_n, stderr)?.remove(0);
    let text = export::render(config.output_format, stat.name(), &column);
    match output {
        Some(path) => {
            fs::write(path, &text).map_err(|source| CliError::Io {
                path: path.display().to_string(),
                source,
            })?;
            Ok(Outcome::ok(String::new()))
        }
        None => Ok(Outcome::ok(text)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["stanley"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn table_t_u() {
        let (code, out, _) = run_args(&["table", "--stats", "t,u", "--max", "4", "--format", "csv"]);
        assert_eq!(code, 0);
        assert_eq!(out, "n,t,u\n0,1,0\n1,1,0\n2,0,2\n3,1,2\n4,5,0\n");
    }

    #[test]
    fn table_p_single_row() {
        let (code, out, _) = run_args(&["table", "--stats", "p", "--max", "0", "--format", "csv"]);
        assert_eq!(code, 0);
        assert_eq!(out, "n,p\n0,1\n");
    }

    #[test]
    fn table_f_bfile() {
        let (code, out, _) = run_args(&["table", "--stats", "f", "--max", "4", "--format", "bfile"]);
        assert_eq!(code, 0);
        assert_eq!(out, "0 1\n1 1\n2 -2\n3 -1\n4 5\n");
    }

    #[test]
    fn table_max_above_order_is_usage_error() {
        let (code, _, err) = run_args(&["table", "--max", "50", "--order", "20"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("--order"), "{err}");
    }

    #[test]
    fn table_with_oracle_marks_rows() {
        let (code, out, _) = run_args(&["table", "--stats", "t", "--max", "6", "--oracle"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 8);
        assert!(out.lines().skip(1).all(|l| l.ends_with("ok")), "{out}");
    }

    #[test]
    fn verify_proof_steps_small_order() {
        let (code, out, _) = run_args(&["verify", "--suite", "proof-steps", "--order", "8"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.ends_with(", 0 failed\n"));
    }

    #[test]
    fn verify_congruences_names_mod_5() {
        let (code, out, _) = run_args(&["verify", "--suite", "congruences"]);
        assert_eq!(code, 0);
        assert!(out.contains("PASS  congruence: t(5n+4) ≡ 0 (mod 5)  (verified to 200)"), "{out}");
    }

    #[test]
    fn unknown_suite_is_usage_error() {
        let (code, _, err) = run_args(&["verify", "--suite", "bogus"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("bogus"));
    }

    #[test]
    fn order_below_two_rejected() {
        let (code, _, _) = run_args(&["--order", "1", "table", "--max", "0"]);
        assert_eq!(code, EXIT_USAGE);
    }

    #[test]
    fn partition_listing() {
        let (code, out, _) = run_args(&["partition", "--n", "2", "--filter", "u"]);
        assert_eq!(code, 0);
        assert_eq!(
            out,
            "(2)  O=0  O'=2  H_e=1  u-type\n(1,1)  O=2  O'=0  H_e=1  u-type\n"
        );
        let (_, out, _) = run_args(&["partition", "--n", "0"]);
        assert_eq!(out, "()  O=0  O'=0  H_e=0  t-type\n");
        let (_, out, _) = run_args(&["partition", "--n", "4", "--filter", "u"]);
        assert_eq!(out, "");
        let (code, _, _) = run_args(&["partition", "--n", "31"]);
        assert_eq!(code, EXIT_USAGE);
    }

    #[test]
    fn partition_hooks_grid() {
        let (_, out, _) = run_args(&["partition", "--n", "4", "--hooks", "--format", "json"]);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v[2]["partition"], json!([2, 2]));
        assert_eq!(v[2]["hooks"], json!([[3, 2], [2, 1]]));
    }

    #[test]
    fn export_formats() {
        let (_, out, _) = run_args(&["export", "--stat", "t", "--max", "4", "--format", "bfile"]);
        assert_eq!(out, "0 1\n1 1\n2 0\n3 1\n4 5\n");
        let (_, out, _) = run_args(&["export", "--stat", "u", "--max", "2", "--format", "csv"]);
        assert_eq!(out, "n,u\n0,0\n1,0\n2,2\n");
        let (_, out, _) = run_args(&["export", "--stat", "p", "--max", "0", "--format", "json"]);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["values"], json!([1]));
        assert_eq!(v["offset"], 0);
    }

    #[test]
    fn export_to_unwritable_path() {
        let dir = tempfile::tempdir().unwrap();
        let bad = dir.path().join("missing").join("t.b");
        let bad_str = bad.to_str().unwrap();
        let (code, _, err) = run_args(&["export", "--stat", "t", "--max", "4", "-o", bad_str]);
        assert_eq!(code, EXIT_IO);
        assert!(err.contains(bad_str), "{err}");
    }

    #[test]
    fn cache_flag_populates_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.json");
        let p = path.to_str().unwrap();
        let (code, first, _) = run_args(&["--cache", p, "table", "--max", "10", "--order", "30"]);
        assert_eq!(code, 0);
        assert!(path.exists());
        let (_, second, _) = run_args(&["--cache", p, "table", "--max", "10", "--order", "30"]);
        assert_eq!(first, second);
    }
}
