//! JSON file formats. Every document carries `"schema_version": 1`.

use std::fs;
use std::path::Path;

use choreo_core::{Complex, FourierLoop, Trajectory};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{context}: {source}")]
    Json { context: String, source: serde_json::Error },
    #[error("{context}: field `{field}`: {msg}")]
    Field { context: String, field: &'static str, msg: String },
    #[error("{context}: unsupported schema_version {found} (expected {SCHEMA_VERSION})")]
    Version { context: String, found: u32 },
}

impl FormatError {
    /// The offending field, when the error is tied to one.
    pub fn field(&self) -> Option<&str> {
        match self {
            FormatError::Field { field, .. } => Some(field),
            FormatError::Version { .. } => Some("schema_version"),
            _ => None,
        }
    }
}

fn field(context: &str, field: &'static str, msg: impl Into<String>) -> FormatError {
    FormatError::Field { context: context.to_owned(), field, msg: msg.into() }
}

fn default_version() -> u32 {
    SCHEMA_VERSION
}

fn check_version(context: &str, v: u32) -> Result<(), FormatError> {
    if v == SCHEMA_VERSION {
        Ok(())
    } else {
        Err(FormatError::Version { context: context.to_owned(), found: v })
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct LoopFile {
    #[serde(default = "default_version")]
    pub schema_version: u32,
    pub n: usize,
    #[serde(rename = "R")]
    pub r_max: usize,
    /// `[re, im]` for `r = −R..=R`.
    pub coeffs: Vec<[f64; 2]>,
}

impl LoopFile {
    pub fn from_loop(lp: &FourierLoop) -> LoopFile {
        LoopFile {
            schema_version: SCHEMA_VERSION,
            n: lp.n(),
            r_max: lp.r_max(),
            coeffs: lp.coeffs().iter().map(|c| [c.re, c.im]).collect(),
        }
    }

    pub fn to_loop(&self, context: &str) -> Result<FourierLoop, FormatError> {
        check_version(context, self.schema_version)?;
        if self.n < 3 {
            return Err(field(context, "n", format!("{} particles; at least 3 are required", self.n)));
        }
        if self.coeffs.len() != 2 * self.r_max + 1 {
            let msg = format!("{} entries, expected 2R+1 = {}", self.coeffs.len(), 2 * self.r_max + 1);
            return Err(field(context, "coeffs", msg));
        }
        if self.coeffs.iter().flatten().any(|x| !x.is_finite()) {
            return Err(field(context, "coeffs", "non-finite value"));
        }
        let coeffs = self.coeffs.iter().map(|&[re, im]| Complex::new(re, im)).collect();
        FourierLoop::new(self.n, self.r_max, coeffs).map_err(|e| field(context, "coeffs", e.to_string()))
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct TrajectoryFile {
    #[serde(default = "default_version")]
    pub schema_version: u32,
    pub n: usize,
    #[serde(rename = "M")]
    pub samples: usize,
    /// `positions[particle][sample] = [x, y]`.
    pub positions: Vec<Vec<[f64; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub velocities: Option<Vec<Vec<[f64; 2]>>>,
}

fn to_points(rows: &[[f64; 2]]) -> Vec<Complex> {
    rows.iter().map(|&[x, y]| Complex::new(x, y)).collect()
}

fn from_points(rows: &[Complex]) -> Vec<[f64; 2]> {
    rows.iter().map(|z| [z.re, z.im]).collect()
}

impl TrajectoryFile {
    pub fn from_trajectory(traj: &Trajectory) -> TrajectoryFile {
        TrajectoryFile {
            schema_version: SCHEMA_VERSION,
            n: traj.n,
            samples: traj.samples,
            positions: traj.positions.iter().map(|p| from_points(p)).collect(),
            velocities: traj.velocities.as_ref().map(|v| v.iter().map(|p| from_points(p)).collect()),
        }
    }

    pub fn to_trajectory(&self, context: &str) -> Result<Trajectory, FormatError> {
        check_version(context, self.schema_version)?;
        if self.n < 3 {
            return Err(field(context, "n", format!("{} particles; at least 3 are required", self.n)));
        }
        if self.samples < 3 {
            return Err(field(context, "M", format!("{} samples; at least 3 are required", self.samples)));
        }
        let check = |rows: &Vec<Vec<[f64; 2]>>, name: &'static str| -> Result<(), FormatError> {
            if rows.len() != self.n {
                return Err(field(context, name, format!("{} particles, expected n = {}", rows.len(), self.n)));
            }
            if let Some((j, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != self.samples) {
                let msg = format!("particle {} has {} samples, expected M = {}", j + 1, r.len(), self.samples);
                return Err(field(context, name, msg));
            }
            if rows.iter().flatten().flatten().any(|x| !x.is_finite()) {
                return Err(field(context, name, "non-finite value"));
            }
            Ok(())
        };
        check(&self.positions, "positions")?;
        if let Some(v) = &self.velocities {
            check(v, "velocities")?;
        }
        Ok(Trajectory {
            n: self.n,
            samples: self.samples,
            positions: self.positions.iter().map(|p| to_points(p)).collect(),
            velocities: self.velocities.as_ref().map(|v| v.iter().map(|p| to_points(p)).collect()),
        })
    }
}

pub fn parse_json<T: DeserializeOwned>(text: &str, context: &str) -> Result<T, FormatError> {
    serde_json::from_str(text).map_err(|source| FormatError::Json { context: context.to_owned(), source })
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, FormatError> {
    let context = path.display().to_string();
    let text = fs::read_to_string(path).map_err(|source| FormatError::Io { path: context.clone(), source })?;
    parse_json(&text, &context)
}

/// Pretty-printed JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable value");
    s.push('\n');
    s
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<(), FormatError> {
    fs::write(path, to_json(value)).map_err(|source| FormatError::Io { path: path.display().to_string(), source })
}

pub fn read_loop(path: &Path) -> Result<FourierLoop, FormatError> {
    read_json::<LoopFile>(path)?.to_loop(&path.display().to_string())
}

pub fn read_trajectory(path: &Path) -> Result<Trajectory, FormatError> {
    read_json::<TrajectoryFile>(path)?.to_trajectory(&path.display().to_string())
}
