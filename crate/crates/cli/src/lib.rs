//! Subcommands of the `lumapal` tool.
//!
//! Exit codes: 0 on success (and for a palette that passes validation),
//! 1 when validation finds violations, 2 for usage, parse and I/O errors.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};

use lumapal_core::catalog::{self, NAMES};
use lumapal_core::io::{
    read_field_csv, read_palette_csv, read_pgm, read_ppm, read_spec, write_curves_csv,
    write_palette_csv, write_pgm, write_ppm, write_spec,
};
use lumapal_core::validate::DEFAULT_EPSILON;
use lumapal_core::{
    apply_palette, apply_signed, build_palette, compare, curves_for, dynamic_range, hue_range,
    to_grayscale, validate, ColorImage, Palette256, ViolationKind,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitStatus {
    Success = 0,
    ValidationFailed = 1,
    Error = 2,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        self as i32
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "lumapal",
    version,
    about = "Grayscale-safe false-color palettes"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Materialize a palette spec into a 256-entry CSV
    Build {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Check luminance monotonicity and report palette metrics
    Validate {
        #[arg(long)]
        palette: PathBuf,
        #[arg(long, default_value_t = DEFAULT_EPSILON)]
        epsilon: f64,
        /// Zero tolerance; overrides --epsilon
        #[arg(long)]
        strict: bool,
    },
    /// Color a grayscale PGM with a palette
    Apply(ApplyArgs),
    /// Color a signed scalar field (CSV) around the palette's middle entry
    ApplySigned(ApplyArgs),
    /// Convert a PPM to BT.601 grayscale PGM
    Grayscale {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Pixel difference statistics of two PGM images
    Compare {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
    },
    /// Per-index luminance, normalized luminance and hue as CSV
    Curves {
        #[arg(long)]
        palette: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// List built-in palettes or write one out as a spec file
    Catalog(CatalogArgs),
    /// Render the palette as a 256-wide color strip
    Swatch {
        #[arg(long)]
        palette: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 32, value_parser = clap::value_parser!(u32).range(1..))]
        height: u32,
    },
}

#[derive(Debug, Args)]
struct ApplyArgs {
    #[arg(long)]
    palette: PathBuf,
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Debug, Args)]
struct CatalogArgs {
    #[arg(long, conflicts_with = "name", required_unless_present = "name")]
    list: bool,
    #[arg(long, requires = "out")]
    name: Option<String>,
    #[arg(long, requires = "name")]
    out: Option<PathBuf>,
}

fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn read_bytes(path: &Path) -> Result<Vec<u8>> {
    fs::read(path).with_context(|| format!("reading {}", path.display()))
}

fn write_file(path: &Path, data: impl AsRef<[u8]>) -> Result<()> {
    fs::write(path, data).with_context(|| format!("writing {}", path.display()))
}

fn load_palette(path: &Path) -> Result<Palette256> {
    read_palette_csv(&read_text(path)?).with_context(|| format!("parsing {}", path.display()))
}

/// Render `p` as a `256 x height` image, column `i` filled with entry `i`.
pub fn swatch(p: &Palette256, height: usize) -> ColorImage {
    let row = p.entries().to_vec();
    let pixels = row.iter().copied().cycle().take(256 * height).collect();
    ColorImage::new(256, height, pixels).expect("256 x height pixels")
}

fn execute(cmd: Command, out: &mut dyn Write) -> Result<ExitStatus> {
    match cmd {
        Command::Build { spec, out: dest } => {
            let text = read_text(&spec)?;
            let spec_value =
                read_spec(&text).with_context(|| format!("parsing {}", spec.display()))?;
            for w in spec_value.warnings() {
                eprintln!("warning: {w}");
            }
            let palette = build_palette(&spec_value);
            write_file(&dest, write_palette_csv(&palette))?;
            writeln!(
                out,
                "D={:.3} hue_range={:.3}",
                dynamic_range(&palette),
                hue_range(&palette)
            )?;
        }
        Command::Validate {
            palette,
            epsilon,
            strict,
        } => {
            let eps = if strict { 0.0 } else { epsilon };
            anyhow::ensure!(
                eps.is_finite() && eps >= 0.0,
                "epsilon must be a non-negative number"
            );
            let p = load_palette(&palette)?;
            let report = validate(&p, eps);
            let yes_no = |b: bool| if b { "yes" } else { "no" };
            writeln!(out, "epsilon: {:.3}", report.epsilon)?;
            writeln!(out, "direction: {}", report.direction)?;
            writeln!(
                out,
                "luminance monotone: {}",
                yes_no(report.luminance_monotone)
            )?;
            writeln!(
                out,
                "normalized luminance monotone: {}",
                yes_no(report.normalized_luminance_monotone)
            )?;
            writeln!(out, "D={:.3}", report.dynamic_range)?;
            writeln!(out, "hue_range={:.3}", report.hue_range)?;
            if report.dark_areas.is_empty() {
                writeln!(out, "dark areas: none")?;
            } else {
                let list: Vec<String> = report.dark_areas.iter().map(ToString::to_string).collect();
                writeln!(out, "dark areas: {}", list.join(", "))?;
            }
            let decreases = report
                .violations
                .iter()
                .filter(|v| v.kind != ViolationKind::DarkArea)
                .count();
            writeln!(out, "violations: {}", report.violations.len())?;
            for v in &report.violations {
                writeln!(out, "  {} {} {:.3}", v.index, v.kind, v.magnitude)?;
            }
            if !report.is_valid() {
                writeln!(out, "result: FAIL ({decreases} monotonicity violations)")?;
                return Ok(ExitStatus::ValidationFailed);
            }
            writeln!(out, "result: PASS")?;
        }
        Command::Apply(a) => {
            let p = load_palette(&a.palette)?;
            let g = read_pgm(&read_bytes(&a.input)?)
                .with_context(|| format!("parsing {}", a.input.display()))?;
            write_file(&a.out, write_ppm(&apply_palette(&g, &p)))?;
        }
        Command::ApplySigned(a) => {
            let p = load_palette(&a.palette)?;
            let f = read_field_csv(&read_text(&a.input)?)
                .with_context(|| format!("parsing {}", a.input.display()))?;
            write_file(&a.out, write_ppm(&apply_signed(&f, &p)))?;
        }
        Command::Grayscale { input, out: dest } => {
            let c = read_ppm(&read_bytes(&input)?)
                .with_context(|| format!("parsing {}", input.display()))?;
            write_file(&dest, write_pgm(&to_grayscale(&c)))?;
        }
        Command::Compare { a, b } => {
            let ia =
                read_pgm(&read_bytes(&a)?).with_context(|| format!("parsing {}", a.display()))?;
            let ib =
                read_pgm(&read_bytes(&b)?).with_context(|| format!("parsing {}", b.display()))?;
            let m = compare(&ia, &ib)?;
            writeln!(out, "max_abs_diff={} rmse={:.3}", m.max_abs_diff, m.rmse)?;
        }
        Command::Curves { palette, out: dest } => {
            let p = load_palette(&palette)?;
            write_file(&dest, write_curves_csv(&curves_for(&p)))?;
        }
        Command::Catalog(c) => {
            if c.list {
                for n in NAMES {
                    writeln!(out, "{n}")?;
                }
            } else if let (Some(name), Some(dest)) = (c.name, c.out) {
                let spec = catalog::builtin(&name)?;
                write_file(&dest, format!("# {name}\n{}", write_spec(&spec)))?;
            }
        }
        Command::Swatch {
            palette,
            out: dest,
            height,
        } => {
            let p = load_palette(&palette)?;
            write_file(&dest, write_ppm(&swatch(&p, height as usize)))?;
        }
    }
    Ok(ExitStatus::Success)
}

/// Parse `args` (including the program name) and run the command, writing
/// reports to `out` and diagnostics to stderr.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> ExitStatus
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitStatus::Error
            } else {
                ExitStatus::Success
            };
        }
    };
    match execute(cli.command, out) {
        Ok(status) => status,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitStatus::Error
        }
    }
}
