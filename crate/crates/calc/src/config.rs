//! Process configuration: `blowup.toml` in the working directory, then the
//! `BLOWUP_EPSILON` environment variable.
//!
//! ```toml
//! epsilon = 1          # or -1
//! output = "json"      # json | csv | pretty
//! literal_mode = false
//! ```

use std::path::Path;

use blowup_core::Epsilon;
use serde::Deserialize;

use crate::error::CliError;

pub const CONFIG_FILE: &str = "blowup.toml";
pub const EPSILON_VAR: &str = "BLOWUP_EPSILON";

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
    Pretty,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Config {
    pub epsilon: Epsilon,
    pub output: OutputFormat,
    /// Also report the charge obtained when a line of the exceptional
    /// plane is counted as `+E²`.
    pub literal_mode: bool,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    epsilon: Option<i64>,
    output: Option<OutputFormat>,
    literal_mode: Option<bool>,
}

fn parse_epsilon(raw: &str) -> Option<Epsilon> {
    raw.trim().parse::<i64>().ok().and_then(Epsilon::from_sign)
}

impl Config {
    pub fn from_toml(text: &str, path: &Path) -> Result<Self, CliError> {
        let bad = |message: String| CliError::Config {
            path: path.to_owned(),
            message,
        };
        let file: ConfigFile = toml::from_str(text).map_err(|e| bad(e.message().to_owned()))?;
        let epsilon = match file.epsilon {
            None => Epsilon::default(),
            Some(v) => Epsilon::from_sign(v)
                .ok_or_else(|| bad(format!("epsilon must be 1 or -1, got {v}")))?,
        };
        Ok(Config {
            epsilon,
            output: file.output.unwrap_or_default(),
            literal_mode: file.literal_mode.unwrap_or(false),
        })
    }

    /// Reads `dir/blowup.toml` if present and applies `epsilon_override`.
    pub fn load(dir: &Path, epsilon_override: Option<&str>) -> Result<Self, CliError> {
        let path = dir.join(CONFIG_FILE);
        let mut config = match std::fs::read_to_string(&path) {
            Ok(text) => Self::from_toml(&text, &path)?,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => Config::default(),
            Err(source) => return Err(CliError::Read { path, source }),
        };
        if let Some(raw) = epsilon_override {
            config.epsilon = parse_epsilon(raw).ok_or_else(|| CliError::Config {
                path: EPSILON_VAR.into(),
                message: format!("expected 1 or -1, got {raw:?}"),
            })?;
        }
        Ok(config)
    }

    /// [`Config::load`] against the current directory and environment.
    pub fn from_environment() -> Result<Self, CliError> {
        let dir = std::env::current_dir().map_err(|source| CliError::Read {
            path: ".".into(),
            source,
        })?;
        let var = std::env::var(EPSILON_VAR).ok();
        Self::load(&dir, var.as_deref())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_without_file() {
        let dir = tempfile::tempdir().unwrap();
        assert_eq!(Config::load(dir.path(), None).unwrap(), Config::default());
    }

    #[test]
    fn file_and_override() {
        let dir = tempfile::tempdir().unwrap();
        std::fs::write(
            dir.path().join(CONFIG_FILE),
            "epsilon = -1\noutput = \"pretty\"\nliteral_mode = true\n",
        )
        .unwrap();
        let c = Config::load(dir.path(), None).unwrap();
        assert_eq!(
            c,
            Config {
                epsilon: Epsilon::Minus,
                output: OutputFormat::Pretty,
                literal_mode: true
            }
        );
        let c = Config::load(dir.path(), Some("+1")).unwrap();
        assert_eq!(c.epsilon, Epsilon::Plus);
        assert!(Config::load(dir.path(), Some("2")).is_err());
    }

    #[test]
    fn rejects_bad_values() {
        let p = Path::new("blowup.toml");
        assert!(Config::from_toml("epsilon = 3", p).is_err());
        assert!(Config::from_toml("output = \"xml\"", p).is_err());
        assert!(Config::from_toml("colour = 1", p).is_err());
    }
}
