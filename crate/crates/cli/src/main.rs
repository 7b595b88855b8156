//! `hbp` — tables of hypergeometric Bernoulli numbers, polynomials, and
//! sums of products, plus exact verification of the convolution identities
//! they satisfy.
//!
//! Output goes to stdout as a single JSON document (default), CSV, or TSV,
//! and is byte-for-byte deterministic for a fixed command line. Exit codes:
//! 0 success / all identities pass, 1 at least one identity failed,
//! 2 usage or configuration error.

use std::collections::BTreeMap;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use hbp_core::bernoulli::DEFAULT_MAX_INDEX;
use hbp_core::identity::run_identity;
use hbp_core::rational::format_rational;
use hbp_core::sums::{self, PointVector};
use hbp_core::{parse_rational, HbTable, IdentityId, ParamGrid, Rational};

const SCHEMA_VERSION: &str = "1.0";
const MAX_INDEX_ENV: &str = "HBP_MAX_N";

#[derive(Parser)]
#[command(
    name = "hbp",
    version,
    about = "Exact tables and identity verification for hypergeometric Bernoulli polynomials"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print B_{N,n} for n = 0..=n-max.
    Numbers {
        /// Family order N (N = 1 is the classical Bernoulli numbers).
        #[arg(short = 'N', long)]
        order: u32,
        /// Largest index n to print.
        #[arg(long)]
        n_max: u32,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Print the coefficients of B_{N,n}(x), ascending.
    Poly {
        /// Family order N.
        #[arg(short = 'N', long)]
        order: u32,
        /// Polynomial degree n.
        #[arg(short = 'n', long)]
        degree: u32,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Print sums of products S_{N,n}^{(p)} for n = 0..=n-max.
    Sums {
        /// Family order N.
        #[arg(short = 'N', long)]
        order: u32,
        /// Number of factors p.
        #[arg(short = 'p', long)]
        factors: u32,
        /// Largest index n to print.
        #[arg(long)]
        n_max: u32,
        /// Coordinate sum z as `p` or `p/q`.
        #[arg(long)]
        z: String,
        /// Computation route.
        #[arg(long, value_enum, default_value_t = Method::Recurrence)]
        method: Method,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Check identities exactly over a parameter grid.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Identity names, or `all`.
    #[arg(default_value = "all")]
    ids: Vec<String>,
    /// Range of the first family order N, as `lo..hi` or a single value.
    #[arg(long, default_value = "1..4")]
    n_orders: String,
    /// Range of the second family order M.
    #[arg(long, default_value = "1..4")]
    m_orders: String,
    /// Range of the index/degree n.
    #[arg(long, default_value = "0..30")]
    degrees: String,
    /// Range of the product length p.
    #[arg(long, default_value = "1..5")]
    factors: String,
    /// Truncation order for series identities.
    #[arg(long, default_value_t = 40)]
    series_order: usize,
    /// Comma-separated rational sample points overriding the built-in
    /// panel (for reproducing counterexamples).
    #[arg(long)]
    seed_panel: Option<String>,
    /// Stop after the first failing identity.
    #[arg(long)]
    fail_fast: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Corrupt one table entry before checking (test hook).
    #[arg(long, hide = true)]
    inject_fault: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Tsv,
}

impl Format {
    fn name(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Tsv => "tsv",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Brute,
    Recurrence,
    Closed,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Brute => "brute",
            Method::Recurrence => "recurrence",
            Method::Closed => "closed",
        }
    }
}

/// One output document; rendered as JSON, CSV, or TSV.
struct OutputDoc {
    command: &'static str,
    parameters: BTreeMap<String, String>,
    columns: &'static [&'static str],
    rows: Vec<Map<String, Value>>,
    status: &'static str,
}

impl OutputDoc {
    fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let rows: Vec<Value> = self.rows.iter().cloned().map(Value::Object).collect();
                let doc = json!({
                    "schema_version": SCHEMA_VERSION,
                    "command": self.command,
                    "parameters": self.parameters,
                    "rows": rows,
                    "status": self.status,
                });
                let mut out = serde_json::to_string_pretty(&doc).expect("serializable document");
                out.push('\n');
                out
            }
            Format::Csv => self.render_delimited(","),
            Format::Tsv => self.render_delimited("\t"),
        }
    }

    fn render_delimited(&self, sep: &str) -> String {
        let mut out = self.columns.join(sep);
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = self
                .columns
                .iter()
                .map(|col| match row.get(*col) {
                    None => String::new(),
                    Some(Value::String(s)) => s.clone(),
                    Some(Value::Array(items)) => items
                        .iter()
                        .map(|v| match v {
                            Value::String(s) => s.clone(),
                            other => other.to_string(),
                        })
                        .collect::<Vec<_>>()
                        .join(" "),
                    Some(other) => other.to_string(),
                })
                .collect();
            out.push_str(&cells.join(sep));
            out.push('\n');
        }
        out
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(all_pass) => {
            if all_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

/// Soft cap on the table index, overridable through the environment.
fn max_index() -> Result<u32> {
    match std::env::var(MAX_INDEX_ENV) {
        Ok(raw) => raw
            .parse()
            .with_context(|| format!("{MAX_INDEX_ENV} must be a non-negative integer, got {raw:?}")),
        Err(_) => Ok(DEFAULT_MAX_INDEX),
    }
}

fn require_within_cap(needed: u32, cap: u32, what: &str) -> Result<()> {
    if needed > cap {
        bail!(
            "{what} needs table indices up to {needed}, beyond the cap {cap}; \
             set {MAX_INDEX_ENV}={needed} (or higher) to opt in"
        );
    }
    Ok(())
}

fn run(command: Command) -> Result<bool> {
    let cap = max_index()?;
    match command {
        Command::Numbers { order, n_max, format } => {
            require_order(order)?;
            require_within_cap(n_max, cap, "numbers")?;
            let mut table = HbTable::with_max_index(cap);
            let rows = (0..=i64::from(n_max))
                .map(|n| {
                    let mut row = Map::new();
                    row.insert("n".into(), json!(n));
                    row.insert(
                        "value".into(),
                        json!(format_rational(&table.number(order, n))),
                    );
                    row
                })
                .collect();
            let doc = OutputDoc {
                command: "numbers",
                parameters: BTreeMap::from([
                    ("order".into(), order.to_string()),
                    ("n_max".into(), n_max.to_string()),
                    ("format".into(), format.name().into()),
                ]),
                columns: &["n", "value"],
                rows,
                status: "n/a",
            };
            print!("{}", doc.render(format));
            Ok(true)
        }
        Command::Poly { order, degree, format } => {
            require_order(order)?;
            require_within_cap(degree, cap, "poly")?;
            let mut table = HbTable::with_max_index(cap);
            let poly = table.polynomial(order, degree).into_poly();
            let coeffs: Vec<Value> = (0..=degree as usize)
                .map(|k| json!(format_rational(&poly.coeff(k))))
                .collect();
            let mut row = Map::new();
            row.insert("coefficients".into(), Value::Array(coeffs));
            let doc = OutputDoc {
                command: "poly",
                parameters: BTreeMap::from([
                    ("order".into(), order.to_string()),
                    ("degree".into(), degree.to_string()),
                    ("format".into(), format.name().into()),
                ]),
                columns: &["coefficients"],
                rows: vec![row],
                status: "n/a",
            };
            print!("{}", doc.render(format));
            Ok(true)
        }
        Command::Sums {
            order,
            factors,
            n_max,
            z,
            method,
            format,
        } => {
            require_order(order)?;
            if factors < 1 {
                bail!("factors p must be >= 1");
            }
            require_within_cap(n_max, cap, "sums")?;
            let z: Rational = parse_rational(&z).map_err(|e| anyhow!("{e}"))?;
            let mut table = HbTable::with_max_index(cap);
            let rows = (0..=i64::from(n_max))
                .map(|n| {
                    let value = match method {
                        Method::Recurrence => sums::recurrence(&mut table, order, n, factors, &z),
                        Method::Closed => sums::closed_form(&mut table, order, n, factors, &z),
                        Method::Brute => {
                            // any point vector with coordinate sum z works
                            let mut points = vec![z.clone()];
                            points.resize(factors as usize, hbp_core::rat_int(0));
                            sums::bruteforce(&mut table, order, n, &PointVector::new(points))
                        }
                    };
                    let mut row = Map::new();
                    row.insert("n".into(), json!(n));
                    row.insert("value".into(), json!(format_rational(&value)));
                    row
                })
                .collect();
            let doc = OutputDoc {
                command: "sums",
                parameters: BTreeMap::from([
                    ("order".into(), order.to_string()),
                    ("factors".into(), factors.to_string()),
                    ("n_max".into(), n_max.to_string()),
                    ("z".into(), format_rational(&z)),
                    ("method".into(), method.name().into()),
                    ("format".into(), format.name().into()),
                ]),
                columns: &["n", "value"],
                rows,
                status: "n/a",
            };
            print!("{}", doc.render(format));
            Ok(true)
        }
        Command::Verify(args) => run_verify(args, cap),
    }
}

fn require_order(order: u32) -> Result<()> {
    if order < 1 {
        bail!("order N must be >= 1");
    }
    Ok(())
}

fn parse_range_u32(raw: &str, what: &str) -> Result<(u32, u32)> {
    let (lo, hi) = parse_range_i64(raw, what)?;
    if lo < 0 {
        bail!("{what} must be non-negative, got {raw:?}");
    }
    Ok((lo as u32, hi as u32))
}

fn parse_range_i64(raw: &str, what: &str) -> Result<(i64, i64)> {
    let parse_end = |s: &str| {
        s.trim()
            .parse::<i64>()
            .with_context(|| format!("bad {what} range {raw:?}"))
    };
    let (lo, hi) = match raw.split_once("..") {
        Some((lo, hi)) => (parse_end(lo)?, parse_end(hi)?),
        None => {
            let v = parse_end(raw)?;
            (v, v)
        }
    };
    if lo > hi {
        bail!("{what} range {raw:?} is empty");
    }
    Ok((lo, hi))
}

fn resolve_ids(raw: &[String]) -> Result<Vec<IdentityId>> {
    if raw.iter().any(|s| s == "all") {
        if raw.len() > 1 {
            bail!("`all` cannot be combined with explicit identity names");
        }
        return Ok(IdentityId::ALL.to_vec());
    }
    raw.iter()
        .map(|s| s.parse::<IdentityId>().map_err(|e| anyhow!("{e}")))
        .collect()
}

fn parse_panel(raw: &str) -> Result<Vec<Rational>> {
    let values: Vec<Rational> = raw
        .split(',')
        .map(|s| parse_rational(s.trim()).map_err(|e| anyhow!("{e}")))
        .collect::<Result<_>>()?;
    if values.is_empty() {
        bail!("seed panel must not be empty");
    }
    for (i, v) in values.iter().enumerate() {
        if values[..i].contains(v) {
            bail!("seed panel values must be distinct, {} repeats", format_rational(v));
        }
    }
    Ok(values)
}

fn run_verify(args: VerifyArgs, cap: u32) -> Result<bool> {
    let ids = resolve_ids(&args.ids)?;
    let n_orders = parse_range_u32(&args.n_orders, "n-orders")?;
    let m_orders = parse_range_u32(&args.m_orders, "m-orders")?;
    let degrees = parse_range_i64(&args.degrees, "degrees")?;
    let factors = parse_range_u32(&args.factors, "factors")?;
    if n_orders.0 < 1 || m_orders.0 < 1 {
        bail!("orders must be >= 1");
    }
    if factors.0 < 1 {
        bail!("factors must be >= 1");
    }
    if factors.1 > 20 {
        bail!("factors beyond 20 make the subset closed form intractable");
    }
    // the N=2 even/odd splits reach index 2n; Euler's quadratic reaches n+1
    let needed = (2 * degrees.1.max(0)).max(degrees.1.max(0) + 1) as u32;
    require_within_cap(needed, cap, "verify")?;
    let min_series = (n_orders.1 + m_orders.1 + 2) as usize;
    if args.series_order < min_series {
        bail!(
            "series order {} is too small for the order ranges; need at least {min_series}",
            args.series_order
        );
    }

    let mut grid = ParamGrid::new(n_orders, m_orders, degrees, factors, args.series_order);
    if let Some(raw) = &args.seed_panel {
        grid = grid.with_panel(parse_panel(raw)?);
    }

    let mut table = HbTable::with_max_index(cap);
    if args.inject_fault {
        table.corrupt_entry(2, 2);
    }

    let mut rows = Vec::new();
    let mut all_pass = true;
    for &id in &ids {
        let report = run_identity(id, &grid, &mut table);
        let pass = report.pass();
        let failures: Vec<Value> = report
            .failures
            .iter()
            .map(|f| {
                json!({
                    "params": f.params,
                    "lhs": format_rational(&f.lhs),
                    "rhs": format_rational(&f.rhs),
                })
            })
            .collect();
        let mut row = Map::new();
        row.insert("id".into(), json!(report.id.name()));
        row.insert("checked".into(), json!(report.checked));
        row.insert("status".into(), json!(if pass { "pass" } else { "fail" }));
        row.insert("notes".into(), json!(report.notes));
        row.insert("failures".into(), Value::Array(failures));
        if let Some(first) = report.failures.first() {
            row.insert("params".into(), json!(first.params));
            row.insert("lhs".into(), json!(format_rational(&first.lhs)));
            row.insert("rhs".into(), json!(format_rational(&first.rhs)));
        }
        rows.push(row);
        if !pass {
            all_pass = false;
            if args.fail_fast {
                break;
            }
        }
    }

    let doc = OutputDoc {
        command: "verify",
        parameters: BTreeMap::from([
            (
                "ids".into(),
                if args.ids.iter().any(|s| s == "all") {
                    "all".to_string()
                } else {
                    args.ids.join(",")
                },
            ),
            ("n_orders".into(), format!("{}..{}", n_orders.0, n_orders.1)),
            ("m_orders".into(), format!("{}..{}", m_orders.0, m_orders.1)),
            ("degrees".into(), format!("{}..{}", degrees.0, degrees.1)),
            ("factors".into(), format!("{}..{}", factors.0, factors.1)),
            ("series_order".into(), args.series_order.to_string()),
            (
                "seed_panel".into(),
                args.seed_panel.clone().unwrap_or_default(),
            ),
            ("fail_fast".into(), args.fail_fast.to_string()),
            ("inject_fault".into(), args.inject_fault.to_string()),
            ("format".into(), args.format.name().into()),
        ]),
        columns: &["id", "checked", "status", "params", "lhs", "rhs"],
        rows,
        status: if all_pass { "pass" } else { "fail" },
    };
    print!("{}", doc.render(args.format));
    Ok(all_pass)
}
