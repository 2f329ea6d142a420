//! Command-line front end: argument model, table rendering and output files.

use std::f64::consts::PI;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::eigen::EigenfunctionHandle;
use crate::error::{invalid, CourantError, Result};
use crate::geometry::DomainKind;
use crate::nodal::{self, analysis, svg, Basis};
use crate::screening;
use crate::spectrum::{self, Mode};

pub const DEFAULT_RESOLUTION: usize = 512;
pub const CSV_HEADER: &str = "normalized,min_index,max_index,multiplicity,ratio";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
    Svg,
}

#[derive(Debug, Parser)]
#[command(name = "courant-lab", version, about = "Courant-sharp eigenvalues of the equilateral torus and three triangles")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct Common {
    /// torus, equilateral, right-isosceles or hemiequilateral
    #[arg(long, default_value = "equilateral", value_parser = parse_domain)]
    pub domain: DomainKind,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write output here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Write a `<out>.stamp.json` sidecar with run metadata.
    #[arg(long, requires = "out")]
    pub stamp: bool,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct Target {
    /// Mode as `m,n`.
    #[arg(long, value_parser = parse_pair)]
    pub pair: Mode,
    /// Mixing angle: decimal radians, `pi/6`, `2pi/3`, `theta_c`.
    #[arg(long, value_parser = parse_theta, allow_hyphen_values = true)]
    pub theta: Option<f64>,
}

#[derive(Debug, Clone, Subcommand, Serialize)]
#[serde(rename_all = "kebab-case", tag = "command")]
pub enum Command {
    /// Distinct eigenvalues with index ranges, multiplicities and ratios.
    Spectrum {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 85)]
        count: usize,
    },
    /// Faber-Krahn threshold, index cutoff and candidate indices.
    Screen {
        #[command(flatten)]
        common: Common,
    },
    /// Courant-sharp verdict for every screening candidate.
    Verdict {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = nodal::verdict::DEFAULT_RESOLUTION)]
        resolution: usize,
    },
    /// Nodal-domain count of one eigenfunction.
    Nodal {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        target: Target,
        #[arg(long, default_value_t = DEFAULT_RESOLUTION)]
        resolution: usize,
    },
    /// Edge critical zeros of Ψ^θ, or median critical zeros of C and S without θ.
    CriticalZeros {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        target: Target,
    },
    /// Common zeros of C and S.
    FixedPoints {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_parser = parse_pair)]
        pair: Mode,
    },
    /// Double zero u_b and angle θ_c of the (2,3) family.
    Bifurcation {
        #[command(flatten)]
        common: Common,
    },
    /// SVG of the nodal set with fixed points and critical zeros.
    Plot {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        target: Target,
        #[arg(long, default_value_t = DEFAULT_RESOLUTION)]
        resolution: usize,
    },
}

impl Command {
    pub fn common(&self) -> &Common {
        match self {
            Command::Spectrum { common, .. }
            | Command::Screen { common }
            | Command::Verdict { common, .. }
            | Command::Nodal { common, .. }
            | Command::CriticalZeros { common, .. }
            | Command::FixedPoints { common, .. }
            | Command::Bifurcation { common }
            | Command::Plot { common, .. } => common,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Command::Spectrum { .. } => "spectrum",
            Command::Screen { .. } => "screen",
            Command::Verdict { .. } => "verdict",
            Command::Nodal { .. } => "nodal",
            Command::CriticalZeros { .. } => "critical-zeros",
            Command::FixedPoints { .. } => "fixed-points",
            Command::Bifurcation { .. } => "bifurcation",
            Command::Plot { .. } => "plot",
        }
    }
}

/// Rendered output of a command.
#[derive(Debug, Clone, PartialEq)]
pub struct Rendered {
    pub body: String,
    pub exit_code: i32,
}

fn parse_domain(s: &str) -> std::result::Result<DomainKind, String> {
    s.parse().map_err(|e: CourantError| e.to_string())
}

pub fn parse_pair(s: &str) -> std::result::Result<Mode, String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected `m,n`, got `{s}`"))?;
    let m = a.trim().parse::<i64>().map_err(|e| format!("bad m in `{s}`: {e}"))?;
    let n = b.trim().parse::<i64>().map_err(|e| format!("bad n in `{s}`: {e}"))?;
    Ok(Mode::new(m, n))
}

/// Angle in radians: a decimal, `pi`, `pi/N`, `kpi/N`, `k*pi/N` or `theta_c`.
pub fn parse_theta(s: &str) -> std::result::Result<f64, String> {
    let t = s.trim().to_ascii_lowercase();
    if t == "theta_c" {
        return analysis::bifurcation_angle().map(|b| b.theta_c).map_err(|e| e.to_string());
    }
    if let Ok(v) = t.parse::<f64>() {
        return if v.is_finite() { Ok(v) } else { Err(format!("theta must be finite, got `{s}`")) };
    }
    let bad = || format!("cannot read `{s}` as an angle");
    let (num, den) = match t.split_once('/') {
        Some((a, b)) => (a, b.trim().parse::<f64>().map_err(|_| bad())?),
        None => (t.as_str(), 1.0),
    };
    let k = num.trim().strip_suffix("pi").ok_or_else(bad)?.trim_end_matches('*').trim();
    let k = match k {
        "" => 1.0,
        "-" => -1.0,
        k => k.parse::<f64>().map_err(|_| bad())?,
    };
    if den == 0.0 {
        return Err(bad());
    }
    Ok(k * PI / den)
}

/// Ten significant digits, fixed-point.
pub fn format_ratio(v: f64) -> String {
    if v == 0.0 {
        return format!("{:.9}", 0.0);
    }
    let decimals = (9 - v.abs().log10().floor() as i32).max(0) as usize;
    format!("{v:.decimals$}")
}

fn csv_rows(rows: &[screening::ScreeningRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        let ratio = r.ratio.map(format_ratio).unwrap_or_default();
        let _ = writeln!(out, "{},{},{},{},{}", r.normalized, r.min_index, r.max_index, r.multiplicity, ratio);
    }
    out
}

#[derive(Serialize)]
struct SpectrumRow {
    normalized: i64,
    min_index: usize,
    max_index: usize,
    multiplicity: usize,
    ratio: Option<String>,
    modes: Vec<Mode>,
}

fn to_json<T: Serialize>(v: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(v)?;
    s.push('\n');
    Ok(s)
}

fn only_equilateral(command: &'static str, d: DomainKind) -> Result<()> {
    if d == DomainKind::Equilateral {
        Ok(())
    } else {
        Err(CourantError::Unsupported { operation: command, domain: d })
    }
}

fn check_resolution(resolution: usize) -> Result<()> {
    if resolution < 64 {
        return Err(invalid(format!("resolution must be at least 64, got {resolution}")));
    }
    Ok(())
}

/// The handle a target names; θ is required on the equilateral triangle only.
fn target_handle(d: DomainKind, target: &Target) -> Result<EigenfunctionHandle> {
    let theta = match (d, target.theta) {
        (DomainKind::Equilateral, None) => return Err(invalid("--theta is required on the equilateral triangle")),
        (_, th) => th.unwrap_or(0.0),
    };
    Ok(EigenfunctionHandle::new(d, target.pair.m, target.pair.n, theta))
}

#[derive(Serialize)]
struct MedianZeros {
    c: Vec<nodal::CriticalZero>,
    s: Vec<nodal::CriticalZero>,
}

#[derive(Serialize)]
struct VerdictDoc {
    domain: DomainKind,
    resolution: usize,
    sharp: Vec<usize>,
    rows: Vec<nodal::VerdictRow>,
}

/// Runs a command and renders its output without touching the filesystem.
pub fn render(command: &Command) -> Result<Rendered> {
    let common = command.common();
    let d = common.domain;
    let ok = |body: String| Ok(Rendered { body, exit_code: 0 });
    match command {
        Command::Spectrum { count, .. } => {
            let entries = spectrum::enumerate_spectrum(d, *count)?;
            let rows = screening::rows_for(d, &entries);
            match common.format.unwrap_or(Format::Csv) {
                Format::Csv => ok(csv_rows(&rows)),
                Format::Json => {
                    let out: Vec<SpectrumRow> = rows
                        .iter()
                        .zip(&entries)
                        .map(|(r, e)| SpectrumRow {
                            normalized: r.normalized,
                            min_index: r.min_index,
                            max_index: r.max_index,
                            multiplicity: r.multiplicity,
                            ratio: r.ratio.map(format_ratio),
                            modes: e.representative_modes.clone(),
                        })
                        .collect();
                    ok(to_json(&out)?)
                }
                Format::Svg => Err(invalid("spectrum supports csv and json")),
            }
        }
        Command::Screen { .. } => match common.format.unwrap_or(Format::Json) {
            Format::Json => ok(to_json(&screening::summary(d))?),
            Format::Csv => ok(csv_rows(&screening::screening_table(d))),
            Format::Svg => Err(invalid("screen supports csv and json")),
        },
        Command::Verdict { resolution, .. } => {
            check_resolution(*resolution)?;
            let rows = nodal::courant_sharp_verdict_at(d, *resolution)?;
            let sharp = rows.iter().filter(|r| r.sharp).map(|r| r.index).collect();
            let unstable = rows.iter().any(|r| !r.stable);
            let body = match common.format.unwrap_or(Format::Json) {
                Format::Json => to_json(&VerdictDoc { domain: d, resolution: *resolution, sharp, rows })?,
                Format::Csv => {
                    let mut s = String::from("index,normalized,max_domains,stable,sharp\n");
                    for r in &rows {
                        let md = r.max_domains.map(|v| v.to_string()).unwrap_or_default();
                        let _ = writeln!(s, "{},{},{},{},{}", r.index, r.normalized, md, r.stable, r.sharp);
                    }
                    s
                }
                Format::Svg => return Err(invalid("verdict supports csv and json")),
            };
            Ok(Rendered { body, exit_code: if unstable { 3 } else { 0 } })
        }
        Command::Nodal { target, resolution, .. } => {
            check_resolution(*resolution)?;
            let h = target_handle(d, target)?;
            let report = nodal::count_nodal_domains(&h, *resolution)?;
            let body = match common.format.unwrap_or(Format::Json) {
                Format::Json => to_json(&report)?,
                Format::Csv => format!(
                    "domain,m,n,theta,resolution,domain_count,positive_components,negative_components,stable\n{},{},{},{},{},{},{},{},{}\n",
                    report.domain,
                    report.m,
                    report.n,
                    report.theta,
                    report.resolution,
                    report.domain_count,
                    report.positive_components,
                    report.negative_components,
                    report.stable
                ),
                Format::Svg => return Err(invalid("nodal supports csv and json; use plot for svg")),
            };
            Ok(Rendered { body, exit_code: if report.stable { 0 } else { 3 } })
        }
        Command::CriticalZeros { target, .. } => {
            only_equilateral("critical-zeros", d)?;
            match target.theta {
                Some(theta) => ok(to_json(&nodal::edge_critical_zeros(target.pair, theta)?)?),
                None => {
                    let doc = MedianZeros {
                        c: nodal::median_critical_zeros(target.pair, Basis::C)?,
                        s: nodal::median_critical_zeros(target.pair, Basis::S)?,
                    };
                    ok(to_json(&doc)?)
                }
            }
        }
        Command::FixedPoints { pair, .. } => {
            only_equilateral("fixed-points", d)?;
            ok(to_json(&nodal::median_fixed_points(*pair)?)?)
        }
        Command::Bifurcation { .. } => {
            only_equilateral("bifurcation", d)?;
            ok(to_json(&nodal::bifurcation_angle()?)?)
        }
        Command::Plot { target, resolution, .. } => {
            check_resolution(*resolution)?;
            if !matches!(common.format, None | Some(Format::Svg)) {
                return Err(invalid("plot writes svg only"));
            }
            let h = target_handle(d, target)?;
            if !spectrum::is_admissible(d, h.mode) || d == DomainKind::Torus {
                return Err(invalid(format!("pair ({},{}) is not a mode of the {d} domain", h.mode.m, h.mode.n)));
            }
            let analysable = d == DomainKind::Equilateral && matches!((h.mode.m, h.mode.n), (1, 3) | (2, 3));
            let fixed = if analysable { nodal::median_fixed_points(h.mode)? } else { Vec::new() };
            let zeros = if analysable && h.theta > 0.0 && h.theta <= PI / 6.0 {
                nodal::edge_critical_zeros(h.mode, h.theta)?
            } else {
                Vec::new()
            };
            ok(svg::render_svg(&h, *resolution, &fixed, &zeros)?)
        }
    }
}

#[derive(Serialize)]
struct Stamp<'a> {
    tool: &'static str,
    version: &'static str,
    command: &'a Command,
    output: &'a Path,
    created_unix_seconds: u64,
}

/// Runs a command, writing to `--out` (plus the stamp sidecar) or stdout.
pub fn run(command: &Command) -> Result<i32> {
    let rendered = render(command)?;
    let common = command.common();
    match &common.out {
        Some(path) => {
            std::fs::write(path, &rendered.body)?;
            if common.stamp {
                let created = std::time::SystemTime::now()
                    .duration_since(std::time::UNIX_EPOCH)
                    .map(|d| d.as_secs())
                    .unwrap_or(0);
                let stamp = Stamp {
                    tool: env!("CARGO_PKG_NAME"),
                    version: env!("CARGO_PKG_VERSION"),
                    command,
                    output: path,
                    created_unix_seconds: created,
                };
                let mut sidecar = path.as_os_str().to_owned();
                sidecar.push(".stamp.json");
                std::fs::write(PathBuf::from(sidecar), to_json(&stamp)?)?;
            }
        }
        None => print!("{}", rendered.body),
    }
    Ok(rendered.exit_code)
}

/// Process exit code for a failed command.
pub fn exit_code(e: &CourantError) -> i32 {
    match e {
        CourantError::InvalidArgument(_) | CourantError::Unsupported { .. } => 2,
        CourantError::Unstable { .. } | CourantError::NoBracket(_) | CourantError::NotConverged(_) => 3,
        CourantError::Io(_) | CourantError::Json(_) => 1,
    }
}
