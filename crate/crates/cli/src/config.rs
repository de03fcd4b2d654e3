//! Job configuration: JSON defaults, the constants profile, and the exit
//! classification of failures.

use std::path::{Path, PathBuf};

use serde::Deserialize;
use surfgeom::hyp::ConstantsProfile;

use crate::args::{Format, GlobalOpts};

pub const CONSTANTS_ENV: &str = "SURFGEOM_CONSTANTS";

/// Why a job failed, which fixes its exit status.
#[derive(Debug, thiserror::Error)]
pub enum Failure {
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Domain(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Domain(_) => 1,
            Failure::Parse(_) => 2,
        }
    }
}

impl From<surfgeom::Error> for Failure {
    fn from(e: surfgeom::Error) -> Self {
        match e {
            surfgeom::Error::Parse(m) => Failure::Parse(m),
            other => Failure::Domain(other.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

pub type Outcome<T> = std::result::Result<T, Failure>;

/// Overrides for individual constants.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConstantOverrides {
    pub eps0: Option<f64>,
    pub eps1: Option<f64>,
    pub l1: Option<f64>,
    pub k0: Option<f64>,
    pub tube_radius_c: Option<f64>,
}

/// Contents of a `--config` file. Every field is optional.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobConfig {
    pub output: Option<PathBuf>,
    pub format: Option<Format>,
    pub depth: Option<usize>,
    pub threshold: Option<u64>,
    pub radius: Option<usize>,
    pub height: Option<u32>,
    #[serde(default)]
    pub constants: ConstantOverrides,
}

/// Effective settings after merging flags, config file and defaults.
#[derive(Debug, Clone)]
pub struct Settings {
    pub output: Option<PathBuf>,
    /// Requested format; commands supply their own default.
    pub format: Option<Format>,
    pub depth: usize,
    pub threshold: u64,
    pub radius: usize,
    pub height: u32,
    pub constants: ConstantsProfile,
}

pub const DEFAULT_DEPTH: usize = 64;
pub const DEFAULT_THRESHOLD: u64 = 10;
pub const DEFAULT_RADIUS: usize = 4;
pub const DEFAULT_HEIGHT: u32 = 8;

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Outcome<T> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))
}

impl Settings {
    pub fn resolve(global: &GlobalOpts) -> Outcome<Settings> {
        let job: JobConfig = match &global.config {
            Some(p) => read_json(p)?,
            None => JobConfig::default(),
        };
        let profile_path = global
            .constants
            .clone()
            .or_else(|| std::env::var_os(CONSTANTS_ENV).map(PathBuf::from));
        let base: ConstantsProfile = match profile_path {
            Some(p) => read_json(&p)?,
            None => ConstantsProfile::default(),
        };
        let o = &job.constants;
        let constants = ConstantsProfile::new(
            o.eps0.unwrap_or(base.eps0),
            o.eps1.unwrap_or(base.eps1),
            o.l1.unwrap_or(base.l1),
            o.k0.unwrap_or(base.k0),
            o.tube_radius_c.unwrap_or(base.tube_radius_c),
        )?;
        let settings = Settings {
            output: global.output.clone().or(job.output),
            format: global.format.or(job.format),
            depth: job.depth.unwrap_or(DEFAULT_DEPTH),
            threshold: job.threshold.unwrap_or(DEFAULT_THRESHOLD),
            radius: job.radius.unwrap_or(DEFAULT_RADIUS),
            height: job.height.unwrap_or(DEFAULT_HEIGHT),
            constants,
        };
        settings.check_depth(settings.depth)?;
        settings.check_threshold(settings.threshold)?;
        Ok(settings)
    }

    pub fn check_depth(&self, depth: usize) -> Outcome<usize> {
        if depth == 0 {
            return Err(Failure::Domain("depth must be at least 1".into()));
        }
        Ok(depth)
    }

    pub fn check_threshold(&self, k: u64) -> Outcome<u64> {
        if k == 0 {
            return Err(Failure::Domain("threshold K must be at least 1".into()));
        }
        Ok(k)
    }
}
