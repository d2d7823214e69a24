//! Command-line front end: counting, tables of identity checks, map
//! application, diagram rendering and the full verification suite.
//!
//! Exit codes: 0 on success (and on an all-pass check), 1 when a check
//! reports a failure or a finding, 2 on usage or domain errors.

pub mod render;

use std::io::{self, Write};
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use partition_lab::maps::{
    from_overpartition, modular4_transform, paint_colors, pair_merge, pair_split, phi_traced, strip_colors, theta,
    to_modular_diagram, to_overpartition, TransformOutcome,
};
use partition_lab::qseries::DEFAULT_TRUNCATION;
use partition_lab::verify::{
    check_gf_display, check_identity, check_relation, cross_check_gf, full_suite, CheckId, IdentityReport, Mode,
    SuiteReport, VerifyConfig,
};
use partition_lab::{count, Ceiling, ColoredPartition, FamilyId, Overpartition, StatFilter};

pub use render::{render_ascii, render_svg};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Ascii,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DiagramFormat {
    Ascii,
    Svg,
}

#[derive(Debug, Parser)]
#[command(name = "partition-lab", version, about = "Two-color partition identities and maps")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Ascii)]
    output: OutputFormat,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Count the members of a family of weight n.
    Count {
        /// F, Q, G, R, H, K, L, M, N, OVER or OVER_ODD.
        family: String,
        #[arg(long)]
        n: u32,
        /// `all` or `<stat>:<even|odd>` with stat one of even-parts, parts,
        /// blue-parts, blue-even-parts.
        #[arg(long, default_value = "all")]
        filter: String,
    },
    /// Tabulate one check for 0 <= n <= max-n.
    Table {
        /// An identity (T11a..T17g), `gf:<family>`, `display:<name>` or
        /// `relation:<name>`.
        identity: String,
        #[arg(long)]
        max_n: u32,
        /// `enum` or `series`.
        #[arg(long, default_value = "enum")]
        mode: String,
    },
    /// Apply one map to a partition.
    Map {
        /// phi, to-overpartition, from-overpartition, strip-colors,
        /// paint-colors, theta, pair-merge, pair-split or modular4.
        map: String,
        /// Comma-separated parts such as `8b,1b`; bare values are Blue.
        /// Overpartitions mark overlined parts with `o`, as in `3o,1,1`.
        #[arg(long, allow_hyphen_values = true)]
        partition: String,
    },
    /// Draw the 4-modular diagram of a partition into distinct parts whose
    /// even parts are multiples of 4.
    Diagram {
        partition: String,
        #[arg(long, value_enum, default_value_t = DiagramFormat::Ascii)]
        format: DiagramFormat,
    },
    /// Run every identity, cross-check and map check.
    Verify {
        #[arg(long, default_value_t = 20)]
        max_enum: u32,
        #[arg(long, default_value_t = 200)]
        max_series: u32,
    },
}

/// Maps reachable from the `map` subcommand.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MapCommand {
    Phi,
    ToOverpartition,
    FromOverpartition,
    StripColors,
    PaintColors,
    Theta,
    PairMerge,
    PairSplit,
    Modular4,
}

impl FromStr for MapCommand {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s.trim().to_ascii_lowercase().replace('_', "-").as_str() {
            "phi" => MapCommand::Phi,
            "to-overpartition" => MapCommand::ToOverpartition,
            "from-overpartition" => MapCommand::FromOverpartition,
            "strip-colors" => MapCommand::StripColors,
            "paint-colors" => MapCommand::PaintColors,
            "theta" => MapCommand::Theta,
            "pair-merge" => MapCommand::PairMerge,
            "pair-split" => MapCommand::PairSplit,
            "modular4" | "modular4-transform" => MapCommand::Modular4,
            _ => return Err(format!("unknown map {s:?}")),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountOutput {
    pub family: FamilyId,
    pub n: u32,
    pub filter: String,
    pub count: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapOutput {
    pub map: String,
    pub input: String,
    /// Absent when the input is a fixed point.
    pub output: Option<String>,
    /// Branch taken (`phi`) or fixed-point description (`modular4`).
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramOutput {
    pub lambda_e: Vec<u32>,
    pub lambda_c1: Vec<u32>,
    pub lambda_c3: Vec<u32>,
    pub format: String,
    pub rendering: String,
}

/// Runs the CLI against the process streams and returns the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let stdout = io::stdout();
    let stderr = io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

/// Runs the CLI writing to the given streams; `argv[0]` is the program name.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(rendered.as_bytes())
            } else {
                err.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(message) => {
            let _ = writeln!(err, "error: {message}");
            2
        }
    }
}

type CmdResult = Result<i32, String>;

fn lib_err(e: partition_lab::Error) -> String {
    e.to_string()
}

fn io_err(e: impl std::fmt::Display) -> String {
    format!("write failed: {e}")
}

fn config_for(n_series: u32) -> VerifyConfig {
    VerifyConfig {
        ceiling: Ceiling::from_env(),
        truncation: DEFAULT_TRUNCATION.max(n_series as usize),
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> CmdResult {
    match &cli.command {
        Command::Count { family, n, filter } => cmd_count(cli.output, family, *n, filter, out),
        Command::Table { identity, max_n, mode } => cmd_table(cli.output, identity, *max_n, mode, out),
        Command::Map { map, partition } => cmd_map(cli.output, map, partition, out),
        Command::Diagram { partition, format } => cmd_diagram(cli.output, partition, *format, out),
        Command::Verify { max_enum, max_series } => cmd_verify(cli.output, *max_enum, *max_series, out),
    }
}

fn write_json<T: Serialize>(value: &T, out: &mut dyn Write) -> Result<(), String> {
    serde_json::to_writer_pretty(&mut *out, value).map_err(io_err)?;
    writeln!(out).map_err(io_err)
}

fn write_csv(header: &[&str], rows: &[Vec<String>], out: &mut dyn Write) -> Result<(), String> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(header).map_err(io_err)?;
    for row in rows {
        w.write_record(row).map_err(io_err)?;
    }
    w.flush().map_err(io_err)
}

fn cmd_count(format: OutputFormat, family: &str, n: u32, filter: &str, out: &mut dyn Write) -> CmdResult {
    let family: FamilyId = family.parse().map_err(lib_err)?;
    let filter: StatFilter = filter.parse().map_err(lib_err)?;
    let value = count(family, n, filter, Ceiling::from_env()).map_err(lib_err)?;
    let result = CountOutput {
        family,
        n,
        filter: filter.to_string(),
        count: value,
    };
    match format {
        OutputFormat::Json => write_json(&result, out)?,
        OutputFormat::Csv => write_csv(
            &["family", "n", "filter", "count"],
            &[vec![family.to_string(), n.to_string(), result.filter.clone(), value.to_string()]],
            out,
        )?,
        OutputFormat::Ascii => writeln!(out, "{value}").map_err(io_err)?,
    }
    Ok(0)
}

fn table_report(check: CheckId, max_n: u32, mode: Mode) -> Result<IdentityReport, String> {
    let config = config_for(max_n);
    let report = match check {
        CheckId::Identity(id) => check_identity(id, max_n, mode, &config),
        CheckId::GfVsCount(family) => cross_check_gf(family, max_n, &config),
        CheckId::GfDisplay(d) => check_gf_display(d, max_n, &config),
        CheckId::Relation(r) => check_relation(r, max_n, &config),
    };
    report.map_err(lib_err)
}

fn cmd_table(format: OutputFormat, identity: &str, max_n: u32, mode: &str, out: &mut dyn Write) -> CmdResult {
    let check: CheckId = identity.parse().map_err(lib_err)?;
    let mode: Mode = mode.parse().map_err(lib_err)?;
    let report = table_report(check, max_n, mode)?;
    match format {
        OutputFormat::Json => write_json(&report, out)?,
        OutputFormat::Csv => {
            let rows: Vec<Vec<String>> = report
                .per_n
                .iter()
                .map(|r| {
                    vec![
                        report.check.to_string(),
                        r.n.to_string(),
                        r.lhs.to_string(),
                        r.rhs.to_string(),
                        r.equal.to_string(),
                        r.mode.to_string(),
                    ]
                })
                .collect();
            write_csv(&["check", "n", "lhs", "rhs", "equal", "mode"], &rows, out)?;
        }
        OutputFormat::Ascii => {
            let cells: Vec<[String; 5]> = report
                .per_n
                .iter()
                .map(|r| [r.n.to_string(), r.lhs.to_string(), r.rhs.to_string(), r.equal.to_string(), r.mode.to_string()])
                .collect();
            write_aligned(&["n", "lhs", "rhs", "equal", "mode"], &cells, out)?;
            let verdict = if report.all_pass { "all equal" } else { "MISMATCH" };
            writeln!(out, "{}: {verdict}", report.check).map_err(io_err)?;
        }
    }
    Ok(if report.all_pass { 0 } else { 1 })
}

fn write_aligned<const K: usize>(header: &[&str; K], rows: &[[String; K]], out: &mut dyn Write) -> Result<(), String> {
    let mut widths: [usize; K] = header.map(str::len);
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let line = |cells: Vec<&str>| {
        cells
            .iter()
            .zip(widths)
            .enumerate()
            .map(|(i, (c, w))| if i == 0 { format!("{c:<w$}") } else { format!("{c:>w$}") })
            .collect::<Vec<_>>()
            .join("  ")
    };
    writeln!(out, "{}", line(header.to_vec())).map_err(io_err)?;
    for row in rows {
        writeln!(out, "{}", line(row.iter().map(String::as_str).collect())).map_err(io_err)?;
    }
    Ok(())
}

fn parse_partition(spec: &str) -> Result<ColoredPartition, String> {
    spec.parse().map_err(lib_err)
}

fn apply_map(map: MapCommand, spec: &str) -> Result<MapOutput, String> {
    let name = format!("{map:?}");
    let colored = |r: partition_lab::Result<ColoredPartition>| r.map(|p| p.to_string()).map_err(lib_err);
    let plain = |r: partition_lab::Result<ColoredPartition>| r.map(|p| p.to_plain_string()).map_err(lib_err);
    let (input, output, detail) = match map {
        MapCommand::FromOverpartition => {
            let beta: Overpartition = spec.parse().map_err(lib_err)?;
            (beta.to_string(), Some(colored(from_overpartition(&beta))?), None)
        }
        _ => {
            let lambda = parse_partition(spec)?;
            let input = lambda.to_string();
            match map {
                MapCommand::Phi => {
                    let (mu, case) = phi_traced(&lambda).map_err(lib_err)?;
                    (input, Some(mu.to_string()), Some(case.to_string()))
                }
                MapCommand::ToOverpartition => {
                    let beta = to_overpartition(&lambda).map_err(lib_err)?;
                    (input, Some(beta.to_string()), None)
                }
                MapCommand::StripColors => (input, Some(plain(strip_colors(&lambda))?), None),
                MapCommand::PaintColors => (lambda.to_plain_string(), Some(colored(paint_colors(&lambda))?), None),
                MapCommand::Theta => (input, Some(colored(theta(&lambda))?), None),
                MapCommand::PairMerge => (input, Some(plain(pair_merge(&lambda))?), None),
                MapCommand::PairSplit => (lambda.to_plain_string(), Some(colored(pair_split(&lambda))?), None),
                MapCommand::Modular4 => {
                    let input = lambda.to_plain_string();
                    match modular4_transform(&lambda).map_err(lib_err)? {
                        TransformOutcome::Moved(mu) => (input, Some(mu.to_plain_string()), None),
                        TransformOutcome::FixedStaircase { kind, k } => {
                            (input, None, Some(format!("fixed point: {kind} staircase, k = {k}")))
                        }
                    }
                }
                MapCommand::FromOverpartition => unreachable!("handled above"),
            }
        }
    };
    Ok(MapOutput {
        map: kebab(&name),
        input,
        output,
        detail,
    })
}

fn kebab(camel: &str) -> String {
    let mut s = String::new();
    for (i, ch) in camel.chars().enumerate() {
        if ch.is_ascii_uppercase() {
            if i > 0 {
                s.push('-');
            }
            s.push(ch.to_ascii_lowercase());
        } else {
            s.push(ch);
        }
    }
    s
}

fn cmd_map(format: OutputFormat, map: &str, spec: &str, out: &mut dyn Write) -> CmdResult {
    let map: MapCommand = map.parse()?;
    let result = apply_map(map, spec)?;
    match format {
        OutputFormat::Json => write_json(&result, out)?,
        OutputFormat::Csv => write_csv(
            &["map", "input", "output", "detail"],
            &[vec![
                result.map.clone(),
                result.input.clone(),
                result.output.clone().unwrap_or_default(),
                result.detail.clone().unwrap_or_default(),
            ]],
            out,
        )?,
        OutputFormat::Ascii => {
            let text = result.output.as_deref().or(result.detail.as_deref()).unwrap_or_default();
            writeln!(out, "{text}").map_err(io_err)?;
        }
    }
    Ok(0)
}

fn cmd_diagram(format: OutputFormat, spec: &str, kind: DiagramFormat, out: &mut dyn Write) -> CmdResult {
    let d = to_modular_diagram(&parse_partition(spec)?).map_err(lib_err)?;
    let rendering = match kind {
        DiagramFormat::Ascii => render_ascii(&d),
        DiagramFormat::Svg => render_svg(&d),
    };
    let join = |xs: &[u32]| xs.iter().map(u32::to_string).collect::<Vec<_>>().join(" ");
    match format {
        OutputFormat::Json => write_json(
            &DiagramOutput {
                lambda_e: d.lambda_e.clone(),
                lambda_c1: d.lambda_c1.clone(),
                lambda_c3: d.lambda_c3.clone(),
                format: format!("{kind:?}").to_ascii_lowercase(),
                rendering,
            },
            out,
        )?,
        OutputFormat::Csv => write_csv(
            &["lambda_e", "lambda_c1", "lambda_c3"],
            &[vec![join(&d.lambda_e), join(&d.lambda_c1), join(&d.lambda_c3)]],
            out,
        )?,
        OutputFormat::Ascii => out.write_all(rendering.as_bytes()).map_err(io_err)?,
    }
    Ok(0)
}

fn suite_rows(report: &SuiteReport) -> Vec<[String; 5]> {
    let mut rows = Vec::new();
    for r in &report.identities {
        let n_max = r.per_n.last().map_or(0, |x| x.n);
        let failures = r.per_n.iter().filter(|x| !x.equal).count();
        rows.push([r.check.to_string(), r.mode.to_string(), n_max.to_string(), r.all_pass.to_string(), failures.to_string()]);
    }
    for m in &report.maps {
        let n_max = m.per_n.last().map_or(0, |x| x.n);
        rows.push([format!("map:{}", m.map), "enum".into(), n_max.to_string(), m.all_pass.to_string(), m.findings.len().to_string()]);
    }
    rows
}

fn cmd_verify(format: OutputFormat, max_enum: u32, max_series: u32, out: &mut dyn Write) -> CmdResult {
    let config = config_for(max_series);
    let report = full_suite(max_enum, max_series, &config).map_err(lib_err)?;
    match format {
        OutputFormat::Json => write_json(&report, out)?,
        OutputFormat::Csv => {
            let rows: Vec<Vec<String>> = suite_rows(&report).into_iter().map(Vec::from).collect();
            write_csv(&["check", "mode", "n_max", "all_pass", "failures"], &rows, out)?;
        }
        OutputFormat::Ascii => {
            write_aligned(&["check", "mode", "n_max", "all_pass", "failures"], &suite_rows(&report), out)?;
            for m in &report.maps {
                for f in &m.findings {
                    writeln!(
                        out,
                        "finding {} n={} {:?}: {} -> {} ({})",
                        f.map,
                        f.n,
                        f.kind,
                        f.input,
                        f.output.as_deref().unwrap_or("-"),
                        f.detail
                    )
                    .map_err(io_err)?;
                }
            }
            writeln!(
                out,
                "identities_pass={} maps_pass={} pass={}",
                report.identities_pass, report.maps_pass, report.pass
            )
            .map_err(io_err)?;
        }
    }
    Ok(if report.pass { 0 } else { 1 })
}
