//! Commands behind the `cwidth` binary.
//!
//! Each command returns its output as text; [`execute`] handles files and
//! exit codes. Exit codes: 0 success, 1 verification failure, 2 invalid
//! input.

use std::f64::consts::TAU;
use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use cwidth::cheeger::{cheeger, crossing_curve};
use cwidth::harness::{self, Campaign, CampaignConfig, CampaignReport, TestShape};
use cwidth::inner_parallel::{inner_measures, inradius};
use cwidth::svg::{self, SvgOptions};
use cwidth::{DiskPolygonJson, Point2, Shape, ShapeSpec};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

/// Directions sampled for the width deviation in `construct`.
pub const WIDTH_DIRECTIONS: usize = 3600;

#[derive(Debug, Parser)]
#[command(
    name = "cwidth",
    version,
    about = "Constant-width shapes and their inner parallel sets"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a shape and print it with a summary of its measures.
    Construct {
        #[command(flatten)]
        shape: ShapeArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Tabulate perimeter, area and arc count of inner parallel sets.
    Sweep {
        #[command(flatten)]
        shape: ShapeArg,
        #[arg(long, default_value_t = 0.0)]
        t_min: f64,
        /// Defaults to the inradius.
        #[arg(long)]
        t_max: Option<f64>,
        #[arg(long, default_value_t = 50)]
        steps: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Draw the shape and its inner parallel sets as SVG.
    Render {
        #[command(flatten)]
        shape: ShapeArg,
        /// Depths, comma separated or repeated.
        #[arg(long = "t", value_delimiter = ',')]
        depths: Vec<f64>,
        #[arg(long, default_value_t = 400.0)]
        scale: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute the Cheeger constant.
    Cheeger {
        #[command(flatten)]
        shape: ShapeArg,
        /// Also write the area-versus-πt² crossing curve as CSV.
        #[arg(long, value_name = "PATH")]
        emit_curve: Option<PathBuf>,
        #[arg(long, default_value_t = 200)]
        steps: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a numerical campaign and report margins.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct ShapeArg {
    /// JSON, inline (`regular:5`, `random:7:1`, `angles:..`, `disk:R:x,y;..`) or a file path.
    #[arg(long)]
    pub shape: String,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// perim, area, cheeger or maxsumf.
    pub campaign: String,
    /// JSON campaign configuration; flags override its fields.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Run on this single shape instead of the random ensemble.
    #[arg(long)]
    pub shape: Option<String>,
    #[arg(long)]
    pub shapes: Option<usize>,
    #[arg(long)]
    pub max_order: Option<usize>,
    #[arg(long)]
    pub steps: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub tol: Option<f64>,
    #[arg(long)]
    pub workers: Option<usize>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Reads `--shape`: JSON, then the inline syntax, then a file.
pub fn resolve_shape(text: &str) -> Result<ShapeSpec> {
    let trimmed = text.trim();
    if trimmed.starts_with('{') {
        return Ok(ShapeSpec::from_json(trimmed)?);
    }
    match ShapeSpec::from_inline(trimmed) {
        Ok(spec) => Ok(spec),
        Err(inline_err) => {
            let path = Path::new(trimmed);
            if path.is_file() {
                let body = fs::read_to_string(path)
                    .with_context(|| format!("reading {}", path.display()))?;
                Ok(ShapeSpec::parse(&body)?)
            } else {
                Err(inline_err.into())
            }
        }
    }
}

#[derive(Debug, Serialize)]
struct Summary {
    area: f64,
    perimeter: f64,
    inradius: f64,
    width_deviation: f64,
    arc_count: usize,
    angle_sum: f64,
}

#[derive(Debug, Serialize)]
struct ConstructOutput<'a> {
    schema: &'static str,
    spec: &'a ShapeSpec,
    shape: DiskPolygonJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    angles: Option<&'a [f64]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    vertices: Option<&'a [Point2]>,
    summary: Summary,
}

/// `max w − min w` over evenly spaced directions.
pub fn width_deviation(shape: &Shape, directions: usize) -> f64 {
    let p = shape.polygon();
    let (lo, hi) = (0..directions.max(2))
        .map(|j| p.width(TAU * j as f64 / directions as f64))
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), w| {
            (lo.min(w), hi.max(w))
        });
    hi - lo
}

pub fn cmd_construct(spec: &ShapeSpec) -> Result<String> {
    let shape = spec.build()?;
    let p = shape.polygon();
    let out = ConstructOutput {
        schema: "cwidth.construct/1",
        spec,
        shape: p.to_json(),
        angles: shape.reuleaux().map(|r| r.angles().values()),
        vertices: shape.reuleaux().map(|r| r.vertices()),
        summary: Summary {
            area: p.area(),
            perimeter: p.perimeter(),
            inradius: inradius(p),
            width_deviation: width_deviation(&shape, WIDTH_DIRECTIONS),
            arc_count: p.arc_count(),
            angle_sum: p.angle_sum(),
        },
    };
    Ok(serde_json::to_string_pretty(&out)? + "\n")
}

pub const SWEEP_SCHEMA: &str = "# schema: cwidth.sweep/1";
pub const CURVE_SCHEMA: &str = "# schema: cwidth.curve/1";

/// `steps` evenly spaced depths from `t_min` to `t_max`, both included.
pub fn cmd_sweep(spec: &ShapeSpec, t_min: f64, t_max: Option<f64>, steps: usize) -> Result<String> {
    let shape = spec.build()?;
    let p = shape.polygon();
    let r_in = inradius(p);
    let t_max = t_max.unwrap_or(r_in);
    if !(t_min >= 0.0 && t_min < t_max && t_max <= r_in) {
        bail!("out-of-range: need 0 <= t_min < t_max <= inradius = {r_in}, got [{t_min}, {t_max}]");
    }
    if steps < 2 {
        bail!("out-of-range: steps must be at least 2");
    }
    let mut csv = format!("{SWEEP_SCHEMA}\nt,perimeter,area,arc_count\n");
    for i in 0..steps {
        let t = if i + 1 == steps {
            t_max
        } else {
            t_min + (t_max - t_min) * i as f64 / (steps - 1) as f64
        };
        let m = inner_measures(p, t)?;
        csv.push_str(&format!("{t},{},{},{}\n", m.perimeter, m.area, m.arc_count));
    }
    Ok(csv)
}

pub fn cmd_render(spec: &ShapeSpec, depths: &[f64], scale: f64) -> Result<String> {
    let shape = spec.build()?;
    if !(scale > 0.0 && scale.is_finite()) {
        bail!("out-of-range: scale must be positive");
    }
    let opts = SvgOptions {
        scale,
        ..SvgOptions::default()
    };
    Ok(svg::render(shape.polygon(), depths, &opts)?)
}

#[derive(Debug, Serialize)]
struct CheegerOutput {
    schema: &'static str,
    t_star: f64,
    h: f64,
    residual: f64,
    iterations: usize,
    inradius: f64,
}

/// Returns the JSON result and, with `curve_steps`, the crossing curve CSV.
pub fn cmd_cheeger(
    spec: &ShapeSpec,
    curve_steps: Option<usize>,
) -> Result<(String, Option<String>)> {
    let shape = spec.build()?;
    let p = shape.polygon();
    let c = cheeger(p)?;
    let json = serde_json::to_string_pretty(&CheegerOutput {
        schema: "cwidth.cheeger/1",
        t_star: c.t_star,
        h: c.h,
        residual: c.residual,
        iterations: c.iterations,
        inradius: inradius(p),
    })? + "\n";
    let curve = match curve_steps {
        None => None,
        Some(steps) => {
            let mut csv = format!("{CURVE_SCHEMA}\nt,area,disk_area,difference\n");
            for s in crossing_curve(p, steps)? {
                csv.push_str(&format!(
                    "{},{},{},{}\n",
                    s.t,
                    s.area,
                    s.disk_area,
                    s.difference()
                ));
            }
            Some(csv)
        }
    };
    Ok((json, curve))
}

/// Merges the config file and flags.
pub fn campaign_config(args: &VerifyArgs) -> Result<CampaignConfig> {
    let mut cfg = match &args.config {
        Some(path) => {
            let body =
                fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            serde_json::from_str(&body).map_err(|e| cwidth::Error::InvalidConfig(e.to_string()))?
        }
        None => CampaignConfig::default(),
    };
    if let Some(v) = args.shapes {
        cfg.shape_count = v;
    }
    if let Some(v) = args.max_order {
        cfg.max_order = v;
    }
    if let Some(v) = args.steps {
        cfg.t_grid_size = v;
    }
    if let Some(v) = args.seed {
        cfg.seed = v;
    }
    if let Some(v) = args.tol {
        cfg.tolerance = v;
    }
    if let Some(v) = args.workers {
        cfg.workers = v;
    }
    cfg.validate()?;
    Ok(cfg)
}

pub fn cmd_verify(
    campaign: Campaign,
    cfg: &CampaignConfig,
    shape: Option<&ShapeSpec>,
) -> Result<CampaignReport> {
    match shape {
        None => Ok(harness::run_campaign(campaign, cfg)?),
        Some(spec) => {
            let test_shape = match spec.build()? {
                Shape::Reuleaux(r) => TestShape::from_reuleaux(spec.to_json(), &r),
                Shape::Disk(d) => TestShape::from_polygon(spec.to_json(), d),
            };
            Ok(harness::run_campaign_on(campaign, &[test_shape], cfg)?)
        }
    }
}

fn emit(out: Option<&Path>, body: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, body).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

/// Runs a parsed command line. `Ok` carries the exit code (0 or 1);
/// errors mean invalid input and map to exit code 2.
pub fn execute(cli: &Cli) -> Result<i32> {
    match &cli.command {
        Command::Construct { shape, out } => {
            let spec = resolve_shape(&shape.shape)?;
            emit(out.as_deref(), &cmd_construct(&spec)?)?;
        }
        Command::Sweep {
            shape,
            t_min,
            t_max,
            steps,
            out,
        } => {
            let spec = resolve_shape(&shape.shape)?;
            emit(out.as_deref(), &cmd_sweep(&spec, *t_min, *t_max, *steps)?)?;
        }
        Command::Render {
            shape,
            depths,
            scale,
            out,
        } => {
            let spec = resolve_shape(&shape.shape)?;
            emit(out.as_deref(), &cmd_render(&spec, depths, *scale)?)?;
        }
        Command::Cheeger {
            shape,
            emit_curve,
            steps,
            out,
        } => {
            let spec = resolve_shape(&shape.shape)?;
            let (json, curve) = cmd_cheeger(&spec, emit_curve.as_ref().map(|_| *steps))?;
            if let (Some(path), Some(csv)) = (emit_curve, curve) {
                emit(Some(path), &csv)?;
            }
            emit(out.as_deref(), &json)?;
        }
        Command::Verify(args) => {
            let campaign: Campaign = args.campaign.parse()?;
            let cfg = campaign_config(args)?;
            let spec = args.shape.as_deref().map(resolve_shape).transpose()?;
            let report = cmd_verify(campaign, &cfg, spec.as_ref())?;
            emit(
                args.out.as_deref(),
                &(serde_json::to_string_pretty(&report)? + "\n"),
            )?;
            if !report.pass {
                return Ok(EXIT_VERIFICATION);
            }
        }
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn spec(text: &str) -> ShapeSpec {
        resolve_shape(text).unwrap()
    }

    #[test]
    fn construct_triangle_summary() {
        let out: serde_json::Value =
            serde_json::from_str(&cmd_construct(&spec("regular:3")).unwrap()).unwrap();
        let s = &out["summary"];
        assert!((s["perimeter"].as_f64().unwrap() - PI).abs() < 1e-12);
        assert!((s["inradius"].as_f64().unwrap() - (1.0 - 3f64.sqrt() / 3.0)).abs() < 1e-12);
        assert_eq!(out["schema"], "cwidth.construct/1");
    }

    #[test]
    fn construct_is_deterministic() {
        let s = spec("random:7:42");
        assert_eq!(cmd_construct(&s).unwrap(), cmd_construct(&s).unwrap());
    }

    #[test]
    fn sweep_rejects_bad_range() {
        assert!(cmd_sweep(&spec("regular:3"), 0.3, Some(0.2), 10).is_err());
        assert!(cmd_sweep(&spec("regular:3"), 0.0, Some(0.5), 10).is_err());
        assert!(cmd_sweep(&spec("regular:3"), 0.0, None, 1).is_err());
    }

    #[test]
    fn shape_from_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("shape.json");
        fs::write(&path, r#"{"type":"reuleaux-regular","n":5}"#).unwrap();
        assert_eq!(
            spec(path.to_str().unwrap()),
            ShapeSpec::ReuleauxRegular { n: 5 }
        );
        assert!(resolve_shape("no-such-shape").is_err());
    }

    #[test]
    fn config_flags_override_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cfg.json");
        fs::write(&path, r#"{"shape_count": 5, "seed": 3}"#).unwrap();
        let cli = Cli::try_parse_from([
            "cwidth",
            "verify",
            "perim",
            "--config",
            path.to_str().unwrap(),
            "--seed",
            "9",
        ])
        .unwrap();
        let Command::Verify(args) = cli.command else {
            panic!()
        };
        let cfg = campaign_config(&args).unwrap();
        assert_eq!((cfg.shape_count, cfg.seed, cfg.max_order), (5, 9, 11));
    }
}
