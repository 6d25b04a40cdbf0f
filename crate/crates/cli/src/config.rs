//! Command-line arguments, the flat `key = value` config file and their
//! merge into a [`RunConfig`]. Precedence: flags, then the config file, then
//! built-in defaults.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use anyhow::Context;
use bellbasis::correlations::MeasuredParty;
use bellbasis::{BasisSpec, ControlledFamily, MeasureConfig, PhaseId};
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::format::OutputFormat;
use crate::UsageError;

#[derive(Debug, Parser)]
#[command(
    name = "bellbasis",
    version,
    about = "Generate Bell-like entangled bases and measure their correlations"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a full labeled basis.
    Generate(GenerateArgs),
    /// Correlation measures for one basis or a sweep of bases.
    Measure(MeasureArgs),
    /// Match the (n, n-1, CO1, P2) basis against the braid basis.
    CompareBraid(CompareArgs),
    /// Run the property suites; exits 1 if any fails.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BasisChoice {
    Generated,
    Bell,
    Graph,
    Braid,
}

impl FromStr for BasisChoice {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        <Self as ValueEnum>::from_str(s, true)
    }
}

#[derive(Debug, Clone, Default, Args)]
pub struct CommonArgs {
    #[arg(long, value_enum)]
    pub format: Option<OutputFormat>,
    /// Write output here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Flat `key = value` file; flags take precedence over it.
    #[arg(long)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Clone, Default, Args)]
pub struct SpecArgs {
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
    /// A1, O1 or AQ (a leading C is accepted).
    #[arg(long)]
    pub family: Option<ControlledFamily>,
    /// P0..Pm or Pz.
    #[arg(long)]
    pub phase: Option<PhaseId>,
}

#[derive(Debug, Clone, Default, Args)]
pub struct OptimizerArgs {
    #[arg(long)]
    pub theta_steps: Option<usize>,
    #[arg(long)]
    pub phi_steps: Option<usize>,
    #[arg(long)]
    pub refine_tol: Option<f64>,
    #[arg(long)]
    pub measured_party: Option<MeasuredParty>,
    /// Node qubit of the monogamy scores.
    #[arg(long)]
    pub node: Option<usize>,
    /// Square concurrences in the concurrence monogamy score.
    #[arg(long, num_args = 0..=1, default_missing_value = "true")]
    pub tangle: Option<bool>,
    /// Seed for the labels sampled by the invariance check.
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, Default, Args)]
pub struct GenerateArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    #[command(flatten)]
    pub spec: SpecArgs,
    #[arg(long, value_enum)]
    pub basis: Option<BasisChoice>,
    /// Print amplitudes instead of unnormalized ±1 terms.
    #[arg(long, num_args = 0..=1, default_missing_value = "true")]
    pub normalized: Option<bool>,
    /// JSON with raw `[re, im]` amplitudes instead of signed terms.
    #[arg(long, num_args = 0..=1, default_missing_value = "true")]
    pub flat: Option<bool>,
}

#[derive(Debug, Clone, Default, Args)]
pub struct MeasureArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    #[command(flatten)]
    pub spec: SpecArgs,
    #[command(flatten)]
    pub optimizer: OptimizerArgs,
    #[arg(long)]
    pub sweep_min_n: Option<usize>,
    #[arg(long)]
    pub sweep_max_n: Option<usize>,
    /// Leave out the discord and work-deficit scores.
    #[arg(long, num_args = 0..=1, default_missing_value = "true")]
    pub skip_optimized: Option<bool>,
}

#[derive(Debug, Clone, Default, Args)]
pub struct CompareArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    #[arg(long)]
    pub n: Option<usize>,
}

#[derive(Debug, Clone, Default, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    #[command(flatten)]
    pub optimizer: OptimizerArgs,
    #[arg(long)]
    pub sweep_max_n: Option<usize>,
    #[arg(long, num_args = 0..=1, default_missing_value = "true")]
    pub skip_optimized: Option<bool>,
    /// Flip the sign of one amplitude before the orthonormality suite.
    #[arg(long, num_args = 0..=1, default_missing_value = "true")]
    pub inject_fault: Option<bool>,
}

/// Fully resolved settings for one command.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub n: Option<usize>,
    pub m: Option<usize>,
    pub family: Option<ControlledFamily>,
    pub phase: Option<PhaseId>,
    pub basis: BasisChoice,
    pub format: OutputFormat,
    pub out: Option<PathBuf>,
    pub measure: MeasureConfig,
    pub sweep_min_n: usize,
    pub sweep_max_n: usize,
    pub skip_optimized: bool,
    pub normalized: bool,
    pub flat: bool,
    pub inject_fault: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            n: None,
            m: None,
            family: None,
            phase: None,
            basis: BasisChoice::Generated,
            format: OutputFormat::Markdown,
            out: None,
            measure: MeasureConfig::default(),
            sweep_min_n: 3,
            sweep_max_n: 5,
            skip_optimized: false,
            normalized: false,
            flat: false,
            inject_fault: false,
        }
    }
}

impl RunConfig {
    /// The single basis named by `n, m, family, phase`, or `None` when none
    /// of them is set. A partial spec is a usage error.
    pub fn spec(&self) -> anyhow::Result<Option<BasisSpec>> {
        match (self.n, self.m, self.family, self.phase) {
            (None, None, None, None) => Ok(None),
            (Some(n), Some(m), Some(family), Some(phase)) => BasisSpec::new(n, m, family, phase)
                .map(Some)
                .map_err(|e| UsageError(e.to_string()).into()),
            _ => Err(UsageError("a basis needs all of --n, --m, --family and --phase".into()).into()),
        }
    }
}

/// Parses `key = value` lines; blank lines and `#` comments are skipped.
/// Keys use underscores or dashes interchangeably.
pub fn parse_config_text(text: &str) -> anyhow::Result<BTreeMap<String, String>> {
    let mut map = BTreeMap::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| UsageError(format!("config line {}: expected key = value", lineno + 1)))?;
        let key = key.trim().replace('-', "_");
        if map.insert(key.clone(), value.trim().to_string()).is_some() {
            return Err(UsageError(format!("config key {key} set twice")).into());
        }
    }
    Ok(map)
}

pub fn read_config_file(path: &Path) -> anyhow::Result<BTreeMap<String, String>> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading config {}", path.display()))?;
    parse_config_text(&text)
}

/// Layers flags over file values over defaults.
struct Layer {
    file: BTreeMap<String, String>,
}

impl Layer {
    fn pick<T: FromStr>(&mut self, key: &str, flag: Option<T>) -> anyhow::Result<Option<T>>
    where
        T::Err: std::fmt::Display,
    {
        let from_file = match self.file.remove(key) {
            Some(v) => Some(
                v.parse::<T>()
                    .map_err(|e| UsageError(format!("config key {key}: {e}")))?,
            ),
            None => None,
        };
        Ok(flag.or(from_file))
    }

    fn finish(self) -> anyhow::Result<()> {
        if let Some(key) = self.file.keys().next() {
            return Err(UsageError(format!("unknown or inapplicable config key {key}")).into());
        }
        Ok(())
    }
}

fn layer(common: &CommonArgs) -> anyhow::Result<Layer> {
    let file = match &common.config {
        Some(path) => read_config_file(path).map_err(|e| UsageError(format!("{e:#}")))?,
        None => BTreeMap::new(),
    };
    Ok(Layer { file })
}

fn apply_common(cfg: &mut RunConfig, l: &mut Layer, common: &CommonArgs) -> anyhow::Result<()> {
    if let Some(f) = l.pick("format", common.format)? {
        cfg.format = f;
    }
    cfg.out = l.pick("out", common.out.clone())?;
    Ok(())
}

fn apply_spec(cfg: &mut RunConfig, l: &mut Layer, spec: &SpecArgs) -> anyhow::Result<()> {
    cfg.n = l.pick("n", spec.n)?;
    cfg.m = l.pick("m", spec.m)?;
    cfg.family = l.pick("family", spec.family)?;
    cfg.phase = l.pick("phase", spec.phase)?;
    Ok(())
}

fn apply_optimizer(cfg: &mut RunConfig, l: &mut Layer, o: &OptimizerArgs) -> anyhow::Result<()> {
    let m = &mut cfg.measure;
    if let Some(v) = l.pick("theta_steps", o.theta_steps)? {
        m.theta_steps = v;
    }
    if let Some(v) = l.pick("phi_steps", o.phi_steps)? {
        m.phi_steps = v;
    }
    if let Some(v) = l.pick("refine_tol", o.refine_tol)? {
        m.refine_tol = v;
    }
    if let Some(v) = l.pick("measured_party", o.measured_party)? {
        m.measured_party = v;
    }
    if let Some(v) = l.pick("node", o.node)? {
        m.node = v;
    }
    if let Some(v) = l.pick("tangle", o.tangle)? {
        m.tangle = v;
    }
    if let Some(v) = l.pick("seed", o.seed)? {
        m.seed = v;
    }
    m.validate().map_err(|e| UsageError(e.to_string()))?;
    Ok(())
}

fn check_sweep(cfg: &RunConfig) -> anyhow::Result<()> {
    let max = bellbasis::basisgen::MAX_QUBITS;
    if cfg.sweep_min_n < 2 || cfg.sweep_min_n > cfg.sweep_max_n || cfg.sweep_max_n > max {
        return Err(UsageError(format!(
            "sweep range {}..={} must lie within 2..={max} and be nonempty",
            cfg.sweep_min_n, cfg.sweep_max_n
        ))
        .into());
    }
    Ok(())
}

pub fn resolve_generate(args: &GenerateArgs) -> anyhow::Result<RunConfig> {
    let mut cfg = RunConfig::default();
    let mut l = layer(&args.common)?;
    apply_common(&mut cfg, &mut l, &args.common)?;
    apply_spec(&mut cfg, &mut l, &args.spec)?;
    if let Some(b) = l.pick("basis", args.basis)? {
        cfg.basis = b;
    }
    cfg.normalized = l.pick("normalized", args.normalized)?.unwrap_or(false);
    cfg.flat = l.pick("flat", args.flat)?.unwrap_or(false);
    l.finish()?;
    match cfg.basis {
        BasisChoice::Generated => {
            if cfg.spec()?.is_none() {
                return Err(UsageError("generate needs --n, --m, --family and --phase".into()).into());
            }
        }
        _ => {
            if cfg.m.is_some() || cfg.family.is_some() || cfg.phase.is_some() {
                return Err(UsageError("--m, --family and --phase only apply to generated bases".into()).into());
            }
            if cfg.n.is_none() {
                return Err(UsageError("--n is required".into()).into());
            }
        }
    }
    Ok(cfg)
}

pub fn resolve_measure(args: &MeasureArgs) -> anyhow::Result<RunConfig> {
    let mut cfg = RunConfig::default();
    let mut l = layer(&args.common)?;
    apply_common(&mut cfg, &mut l, &args.common)?;
    apply_spec(&mut cfg, &mut l, &args.spec)?;
    apply_optimizer(&mut cfg, &mut l, &args.optimizer)?;
    if let Some(v) = l.pick("sweep_min_n", args.sweep_min_n)? {
        cfg.sweep_min_n = v;
    }
    if let Some(v) = l.pick("sweep_max_n", args.sweep_max_n)? {
        cfg.sweep_max_n = v;
    }
    cfg.skip_optimized = l.pick("skip_optimized", args.skip_optimized)?.unwrap_or(false);
    l.finish()?;
    cfg.spec()?;
    check_sweep(&cfg)?;
    Ok(cfg)
}

pub fn resolve_compare(args: &CompareArgs) -> anyhow::Result<RunConfig> {
    let mut cfg = RunConfig::default();
    let mut l = layer(&args.common)?;
    apply_common(&mut cfg, &mut l, &args.common)?;
    cfg.n = l.pick("n", args.n)?;
    l.finish()?;
    match cfg.n {
        Some(n) if (3..=bellbasis::basisgen::MAX_QUBITS).contains(&n) => Ok(cfg),
        Some(n) => Err(UsageError(format!("compare-braid needs n >= 3, got {n}")).into()),
        None => Err(UsageError("compare-braid needs --n".into()).into()),
    }
}

pub fn resolve_verify(args: &VerifyArgs) -> anyhow::Result<RunConfig> {
    let mut cfg = RunConfig::default();
    let mut l = layer(&args.common)?;
    apply_common(&mut cfg, &mut l, &args.common)?;
    apply_optimizer(&mut cfg, &mut l, &args.optimizer)?;
    if let Some(v) = l.pick("sweep_max_n", args.sweep_max_n)? {
        cfg.sweep_max_n = v;
    }
    cfg.sweep_min_n = 2;
    cfg.skip_optimized = l.pick("skip_optimized", args.skip_optimized)?.unwrap_or(false);
    cfg.inject_fault = l.pick("inject_fault", args.inject_fault)?.unwrap_or(false);
    l.finish()?;
    check_sweep(&cfg)?;
    Ok(cfg)
}
