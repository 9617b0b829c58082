//! `key = value` settings file. Command-line flags take precedence.

use std::path::Path;
use std::str::FromStr;

use grrforge::perm::Caps;

pub const CAP_ENV: &str = "GRRFORGE_CAP";

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Config {
    pub enumeration_cap: Option<u128>,
    pub degree_cap: Option<usize>,
    pub trials: Option<usize>,
    pub seed: Option<u64>,
    pub threads: Option<usize>,
}

fn parse_value<T: FromStr>(key: &str, value: &str, line: usize) -> Result<T, String> {
    value
        .parse()
        .map_err(|_| format!("line {line}: invalid value '{value}' for '{key}'"))
}

impl Config {
    pub fn parse(text: &str) -> Result<Self, String> {
        let mut cfg = Config::default();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let Some((key, value)) = content.split_once('=') else {
                return Err(format!("line {line}: expected key = value"));
            };
            let (key, value) = (key.trim(), value.trim());
            match key {
                "enumeration_cap" => cfg.enumeration_cap = Some(parse_value(key, value, line)?),
                "degree_cap" => cfg.degree_cap = Some(parse_value(key, value, line)?),
                "trials" => cfg.trials = Some(parse_value(key, value, line)?),
                "seed" => cfg.seed = Some(parse_value(key, value, line)?),
                "threads" => cfg.threads = Some(parse_value(key, value, line)?),
                _ => return Err(format!("line {line}: unknown key '{key}'")),
            }
        }
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
        Self::parse(&text).map_err(|e| format!("{}: {e}", path.display()))
    }

    /// Caps from the defaults, then this file, then `GRRFORGE_CAP`.
    pub fn caps(&self, env_cap: Option<&str>) -> Result<Caps, String> {
        let mut caps = Caps::default();
        if let Some(c) = self.enumeration_cap {
            caps.enumeration = c;
        }
        if let Some(d) = self.degree_cap {
            caps.degree = d;
        }
        if let Some(v) = env_cap {
            caps.enumeration = v
                .trim()
                .parse()
                .map_err(|_| format!("{CAP_ENV}: invalid value '{v}'"))?;
        }
        Ok(caps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_known_keys() {
        let cfg = Config::parse("# caps\nenumeration_cap = 5000\n\ntrials=20 # inline\nseed = 7\n")
            .unwrap();
        assert_eq!(cfg.enumeration_cap, Some(5000));
        assert_eq!(cfg.trials, Some(20));
        assert_eq!(cfg.seed, Some(7));
        assert_eq!(cfg.threads, None);
    }

    #[test]
    fn rejects_unknown_keys_and_bad_values() {
        assert!(Config::parse("trails = 3")
            .unwrap_err()
            .contains("unknown key 'trails'"));
        assert!(Config::parse("seed = x")
            .unwrap_err()
            .contains("invalid value"));
        assert!(Config::parse("seed").unwrap_err().contains("key = value"));
    }

    #[test]
    fn env_overrides_file() {
        let cfg = Config::parse("enumeration_cap = 10").unwrap();
        assert_eq!(cfg.caps(None).unwrap().enumeration, 10);
        assert_eq!(cfg.caps(Some("99")).unwrap().enumeration, 99);
        assert!(cfg.caps(Some("lots")).is_err());
        assert_eq!(Config::default().caps(None).unwrap(), Caps::default());
    }
}
