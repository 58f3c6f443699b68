use std::io::Write;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use num::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;
use serde_json::Value;

use thetadim::characters::{self, CharacterTable};
use thetadim::compute::{self, Limits, Prepared, TableKind};
use thetadim::report::format_rational;
use thetadim::{DimensionReport, Error, GroupExpr, Method};

const EXIT_USAGE: u8 = 1;
const EXIT_MISMATCH: u8 = 2;
const EXIT_RESOURCE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "thetadim",
    version,
    about = "Dimensions of odd theta-graph coinvariants for finite groups"
)]
struct Cli {
    /// Worker threads for the brute-force routes.
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Order budget for the brute-force routes (overrides THETA_DIM_MAX_ORDER).
    #[arg(long, global = true)]
    max_order: Option<usize>,

    /// Log progress to stderr (repeat for more).
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    verbose: u8,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the dimensions for a group expression such as "Z(5) x Dstar(3)".
    Compute {
        expr: String,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
        #[arg(long, conflicts_with = "csv")]
        json: bool,
        #[arg(long)]
        csv: bool,
    },
    /// Run every applicable route and compare; exit status 2 on disagreement.
    Verify {
        expr: String,
        #[arg(long)]
        json: bool,
    },
    /// CSV table over a family parameter.
    Table {
        #[arg(value_enum)]
        family: TableArg,
        /// Largest p for d4p.
        #[arg(long)]
        max_p: Option<u64>,
        /// Largest k for t8_3k.
        #[arg(long)]
        max_k: Option<u64>,
        /// Largest n for zn.
        #[arg(long)]
        max_n: Option<u64>,
        /// `auto` adds a Burnside check where the group fits the budget.
        #[arg(long, value_enum, default_value_t = TableMethod::Auto)]
        method: TableMethod,
    },
    /// Conjugacy classes with sizes, element orders and power maps.
    Classes {
        expr: String,
        #[arg(long)]
        csv: bool,
    },
    /// Character table.
    Chartab {
        expr: String,
        #[arg(long, value_enum, default_value_t = ChartabFormat::Table)]
        format: ChartabFormat,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Auto,
    Closed,
    Chars,
    Burnside,
    Orbits,
    Diagrams,
}

impl MethodArg {
    fn method(self) -> Option<Method> {
        match self {
            MethodArg::Auto => None,
            MethodArg::Closed => Some(Method::Closed),
            MethodArg::Chars => Some(Method::Chars),
            MethodArg::Burnside => Some(Method::Burnside),
            MethodArg::Orbits => Some(Method::Orbits),
            MethodArg::Diagrams => Some(Method::Diagrams),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum TableArg {
    D4p,
    #[value(name = "t8_3k")]
    T83k,
    Zn,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableMethod {
    Auto,
    Closed,
}

#[derive(Clone, Copy, ValueEnum)]
enum ChartabFormat {
    /// Columns in the order the table is written down, with class sizes.
    Table,
    /// Aligned text, columns in class-index order.
    Text,
    Csv,
}

/// Failure with a specific exit status.
#[derive(Debug)]
struct Exit(u8, String);

impl std::fmt::Display for Exit {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.1)
    }
}

impl std::error::Error for Exit {}

fn exit_code(e: &anyhow::Error) -> u8 {
    if let Some(Exit(code, _)) = e.downcast_ref::<Exit>() {
        return *code;
    }
    match e.downcast_ref::<Error>() {
        Some(Error::Resource { .. }) => EXIT_RESOURCE,
        Some(Error::Mismatch(_)) | Some(Error::Inconsistent(_)) => EXIT_MISMATCH,
        _ => EXIT_USAGE,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let level = match cli.verbose {
        0 => "warn",
        1 => "info",
        _ => "debug",
    };
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(level))
        .target(env_logger::Target::Stderr)
        .init();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) if is_broken_pipe(&e) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn is_broken_pipe(e: &anyhow::Error) -> bool {
    e.chain()
        .filter_map(|c| c.downcast_ref::<std::io::Error>())
        .any(|io| io.kind() == std::io::ErrorKind::BrokenPipe)
}

fn parse_expr(s: &str) -> anyhow::Result<GroupExpr> {
    s.parse::<GroupExpr>().map_err(|e| {
        let hint = match &e {
            Error::Parse { offset, .. } => format!("\n  {s}\n  {}^", " ".repeat(*offset)),
            _ => String::new(),
        };
        anyhow::anyhow!("cannot parse group expression: {e}{hint}")
    })
}

fn run(cli: Cli) -> anyhow::Result<()> {
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .context("configuring thread pool")?;
    }
    let limits = match cli.max_order {
        Some(n) => Limits::default().with_max_order(n),
        None => Limits::from_env()?,
    };
    let mut out = std::io::stdout().lock();
    match cli.command {
        Command::Compute {
            expr,
            method,
            json,
            csv,
        } => {
            let expr = parse_expr(&expr)?;
            let r = compute::compute(&expr, method.method(), &limits)?;
            if json {
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&ReportJson::from(&r))?
                )?;
            } else if csv {
                write_report_csv(&mut out, &[r])?;
            } else {
                write_report_text(&mut out, &r)?;
            }
        }
        Command::Verify { expr, json } => {
            let expr = parse_expr(&expr)?;
            let v = compute::verify(&expr, &limits)?;
            if json {
                let doc = serde_json::json!({
                    "group": expr.to_string(),
                    "reports": v.reports.iter().map(ReportJson::from).collect::<Vec<_>>(),
                    "skipped": v.skipped.iter().map(|(m, why)| serde_json::json!({"method": m.as_str(), "reason": why})).collect::<Vec<_>>(),
                    "mismatches": v.mismatches,
                });
                writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
            } else {
                writeln!(out, "{expr}")?;
                writeln!(
                    out,
                    "{:<10} {:>14} {:>14} {:>12} {:>12} {:>8}",
                    "method", "dim_Cpi", "dim_ker_eps", "d1", "d2", "millis"
                )?;
                for r in &v.reports {
                    writeln!(
                        out,
                        "{:<10} {:>14} {:>14} {:>12} {:>12} {:>8}",
                        r.method.as_str(),
                        r.dim_cpi,
                        r.dim_ker_eps,
                        r.d1.as_ref()
                            .map(format_rational)
                            .unwrap_or_else(|| "-".into()),
                        r.d2.as_ref()
                            .map(format_rational)
                            .unwrap_or_else(|| "-".into()),
                        r.millis
                    )?;
                }
                for (m, why) in &v.skipped {
                    writeln!(out, "skipped {m}: {why}")?;
                }
                if v.mismatches.is_empty() {
                    writeln!(out, "OK: {} route(s) agree", v.reports.len())?;
                } else {
                    for m in &v.mismatches {
                        writeln!(out, "MISMATCH {m}")?;
                    }
                }
            }
            if v.reports.len() < 2 {
                log::warn!(
                    "only {} route available; nothing to compare",
                    v.reports.len()
                );
            }
            if !v.mismatches.is_empty() {
                return Err(Exit(
                    EXIT_MISMATCH,
                    format!("{} mismatch(es)", v.mismatches.len()),
                )
                .into());
            }
        }
        Command::Table {
            family,
            max_p,
            max_k,
            max_n,
            method,
        } => {
            let (kind, flag, max, wrong) = match family {
                TableArg::D4p => (
                    TableKind::D4p,
                    "--max-p",
                    max_p.unwrap_or(15),
                    max_k.or(max_n),
                ),
                TableArg::T83k => (
                    TableKind::T83k,
                    "--max-k",
                    max_k.unwrap_or(9),
                    max_p.or(max_n),
                ),
                TableArg::Zn => (
                    TableKind::Zn,
                    "--max-n",
                    max_n.unwrap_or(60),
                    max_p.or(max_k),
                ),
            };
            if wrong.is_some() {
                return Err(Exit(EXIT_USAGE, format!("this table takes {flag}")).into());
            }
            let rows = compute::family_table_rows(
                kind,
                max,
                matches!(method, TableMethod::Auto),
                &limits,
            )?;
            writeln!(out, "param,dim_Cpi,dim_ker_eps,method")?;
            for r in rows {
                writeln!(
                    out,
                    "{},{},{},{}",
                    r.param, r.dim_cpi, r.dim_ker_eps, r.method
                )?;
            }
        }
        Command::Classes { expr, csv } => {
            let expr = parse_expr(&expr)?;
            let p = Prepared::new(&expr, &limits)?;
            write_classes(&mut out, &p, csv)?;
        }
        Command::Chartab { expr, format } => {
            let expr = parse_expr(&expr)?;
            let p = Prepared::new(&expr, &limits)?;
            let t = characters::character_table(&p.expr, &p.group, &p.classes)?;
            write_chartab(&mut out, &t, &p, format)?;
        }
    }
    out.flush()?;
    Ok(())
}

/// JSON view of a report. Integers are numbers when they fit in i64,
/// non-integral rationals are strings `num/den`.
#[derive(Serialize)]
struct ReportJson {
    group: String,
    order: u64,
    num_classes: u64,
    d1: Value,
    d2: Value,
    #[serde(rename = "dim_Cpi")]
    dim_cpi: Value,
    dim_ker_eps: Value,
    #[serde(rename = "dim_classhat_Z2")]
    dim_classhat_z2: Value,
    method: String,
    millis: u64,
}

fn int_value(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(i) => Value::from(i),
        None => Value::from(v.to_string()),
    }
}

fn rational_value(q: &Option<num::BigRational>) -> Value {
    match q {
        None => Value::Null,
        Some(q) if q.is_integer() => int_value(&q.to_integer()),
        Some(q) => Value::from(format_rational(q)),
    }
}

impl From<&DimensionReport> for ReportJson {
    fn from(r: &DimensionReport) -> ReportJson {
        ReportJson {
            group: r.group.clone(),
            order: r.order,
            num_classes: r.num_classes,
            d1: rational_value(&r.d1),
            d2: rational_value(&r.d2),
            dim_cpi: int_value(&r.dim_cpi),
            dim_ker_eps: int_value(&r.dim_ker_eps),
            dim_classhat_z2: int_value(&r.dim_classhat_z2),
            method: r.method.to_string(),
            millis: r.millis as u64,
        }
    }
}

fn opt(q: &Option<num::BigRational>) -> String {
    q.as_ref().map(format_rational).unwrap_or_default()
}

fn write_report_text(out: &mut impl Write, r: &DimensionReport) -> std::io::Result<()> {
    writeln!(out, "group:           {}", r.group)?;
    writeln!(out, "order:           {}", r.order)?;
    writeln!(out, "num_classes:     {}", r.num_classes)?;
    writeln!(
        out,
        "d1:              {}",
        r.d1.as_ref()
            .map(format_rational)
            .unwrap_or_else(|| "-".into())
    )?;
    writeln!(
        out,
        "d2:              {}",
        r.d2.as_ref()
            .map(format_rational)
            .unwrap_or_else(|| "-".into())
    )?;
    writeln!(out, "dim_Cpi:         {}", r.dim_cpi)?;
    writeln!(out, "dim_ker_eps:     {}", r.dim_ker_eps)?;
    writeln!(out, "dim_classhat_Z2: {}", r.dim_classhat_z2)?;
    writeln!(out, "method:          {}", r.method)?;
    writeln!(out, "millis:          {}", r.millis)
}

fn write_report_csv(out: &mut impl Write, rows: &[DimensionReport]) -> std::io::Result<()> {
    writeln!(
        out,
        "group,order,num_classes,d1,d2,dim_Cpi,dim_ker_eps,dim_classhat_Z2,method,millis"
    )?;
    for r in rows {
        writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{}",
            csv_field(&r.group),
            r.order,
            r.num_classes,
            opt(&r.d1),
            opt(&r.d2),
            r.dim_cpi,
            r.dim_ker_eps,
            r.dim_classhat_z2,
            r.method,
            r.millis
        )?;
    }
    Ok(())
}

fn class_labels(p: &Prepared) -> Vec<String> {
    match characters::character_table(&p.expr, &p.group, &p.classes) {
        Ok(t) => t.class_labels,
        Err(e) => {
            log::warn!("no table labels ({e}); using element labels");
            p.classes
                .reps
                .iter()
                .map(|&r| p.group.label(r).to_string())
                .collect()
        }
    }
}

fn write_classes(out: &mut impl Write, p: &Prepared, csv: bool) -> std::io::Result<()> {
    let c = &p.classes;
    let labels = class_labels(p);
    let rows: Vec<[String; 7]> = (0..c.num_classes())
        .map(|i| {
            [
                i.to_string(),
                labels[i].clone(),
                c.sizes[i].to_string(),
                c.element_order[i].to_string(),
                labels[c.square[i]].clone(),
                labels[c.cube[i]].clone(),
                labels[c.inverse[i]].clone(),
            ]
        })
        .collect();
    let header = ["class", "rep", "size", "order", "square", "cube", "inverse"].map(String::from);
    if csv {
        for r in std::iter::once(&header).chain(&rows) {
            let quoted: Vec<String> = r.iter().map(|s| csv_field(s)).collect();
            writeln!(out, "{}", quoted.join(","))?;
        }
        return Ok(());
    }
    writeln!(
        out,
        "{}: order {}, {} classes",
        p.expr,
        c.group_order,
        c.num_classes()
    )?;
    write_aligned(
        out,
        std::iter::once(header.to_vec())
            .chain(rows.into_iter().map(|r| r.to_vec()))
            .collect(),
    )
}

/// CSV fields are never quoted; whitespace is dropped, which keeps group
/// expressions parseable.
fn csv_field(s: &str) -> String {
    debug_assert!(!s.contains([',', '"']));
    s.chars().filter(|c| !c.is_whitespace()).collect()
}

fn write_aligned(out: &mut impl Write, rows: Vec<Vec<String>>) -> std::io::Result<()> {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let width: Vec<usize> = (0..cols)
        .map(|j| {
            rows.iter()
                .filter_map(|r| r.get(j))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    for r in rows {
        let cells: Vec<String> = r
            .iter()
            .enumerate()
            .map(|(j, s)| format!("{:>w$}", s, w = width[j]))
            .collect();
        writeln!(out, "{}", cells.join("  ").trim_end())?;
    }
    Ok(())
}

fn write_chartab(
    out: &mut impl Write,
    t: &CharacterTable,
    p: &Prepared,
    format: ChartabFormat,
) -> std::io::Result<()> {
    let order: Vec<usize> = match format {
        ChartabFormat::Table => t.layout.clone(),
        _ => (0..t.num_classes()).collect(),
    };
    let mut rows = Vec::new();
    let mut head = vec!["".to_string()];
    head.extend(order.iter().map(|&c| t.class_labels[c].clone()));
    rows.push(head);
    let mut sizes = vec!["size".to_string()];
    sizes.extend(order.iter().map(|&c| t.class_sizes[c].to_string()));
    rows.push(sizes);
    for (i, vals) in t.values.iter().enumerate() {
        let mut r = vec![t.row_labels[i].clone()];
        r.extend(order.iter().map(|&c| vals[c].to_string()));
        rows.push(r);
    }
    match format {
        ChartabFormat::Csv => {
            rows[0][0] = "character".into();
            for r in rows {
                let cells: Vec<String> = r.iter().map(|s| csv_field(s)).collect();
                writeln!(out, "{}", cells.join(","))?;
            }
            Ok(())
        }
        _ => {
            writeln!(
                out,
                "{}: order {}, {} classes, values in Q(z({}))",
                p.expr,
                p.classes.group_order,
                t.num_classes(),
                t.conductor
            )?;
            let nonreal: Vec<&str> = t
                .row_labels
                .iter()
                .zip(&t.real)
                .filter(|(_, &r)| !r)
                .map(|(l, _)| l.as_str())
                .collect();
            write_aligned(out, rows)?;
            if !nonreal.is_empty() {
                writeln!(out, "non-real: {}", nonreal.join(", "))?;
            }
            Ok(())
        }
    }
}
