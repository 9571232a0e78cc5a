//! `key = value` settings file. Command-line flags take precedence.

use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Config {
    pub census: Option<PathBuf>,
    pub jobs: Option<usize>,
    pub node_budget: Option<u64>,
    pub memo_capacity: Option<usize>,
    pub clasp_bound: Option<i64>,
    pub n_bound: Option<i64>,
    pub sos_deg_bound: Option<i32>,
    pub sos_coeff_bound: Option<i64>,
    pub sos_work_budget: Option<u64>,
    pub max_cosets: Option<usize>,
    pub max_target_order: Option<u64>,
}

impl Config {
    pub fn load(path: &Path) -> Result<Config> {
        let text =
            std::fs::read_to_string(path).with_context(|| format!("cannot read config file {}", path.display()))?;
        Config::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Config> {
        let mut c = Config::default();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let s = raw.split('#').next().unwrap_or("").trim();
            if s.is_empty() {
                continue;
            }
            let Some((key, value)) = s.split_once('=') else {
                bail!("config line {line}: expected `key = value`");
            };
            let (key, value) = (key.trim(), value.trim());
            fn num<T: std::str::FromStr>(line: usize, key: &str, value: &str) -> Result<Option<T>> {
                match value.parse() {
                    Ok(v) => Ok(Some(v)),
                    Err(_) => bail!("config line {line}: invalid value `{value}` for `{key}`"),
                }
            }
            match key {
                "census" => c.census = Some(PathBuf::from(value)),
                "jobs" => c.jobs = num(line, key, value)?,
                "node_budget" => c.node_budget = num(line, key, value)?,
                "memo_capacity" => c.memo_capacity = num(line, key, value)?,
                "clasp_bound" => c.clasp_bound = num(line, key, value)?,
                "n_bound" => c.n_bound = num(line, key, value)?,
                "sos_deg_bound" => c.sos_deg_bound = num(line, key, value)?,
                "sos_coeff_bound" => c.sos_coeff_bound = num(line, key, value)?,
                "sos_work_budget" => c.sos_work_budget = num(line, key, value)?,
                "max_cosets" => c.max_cosets = num(line, key, value)?,
                "max_target_order" => c.max_target_order = num(line, key, value)?,
                _ => bail!("config line {line}: unknown key `{key}`"),
            }
        }
        Ok(c)
    }

    /// Values set in `other` replace those in `self`.
    pub fn overridden_by(self, other: Config) -> Config {
        Config {
            census: other.census.or(self.census),
            jobs: other.jobs.or(self.jobs),
            node_budget: other.node_budget.or(self.node_budget),
            memo_capacity: other.memo_capacity.or(self.memo_capacity),
            clasp_bound: other.clasp_bound.or(self.clasp_bound),
            n_bound: other.n_bound.or(self.n_bound),
            sos_deg_bound: other.sos_deg_bound.or(self.sos_deg_bound),
            sos_coeff_bound: other.sos_coeff_bound.or(self.sos_coeff_bound),
            sos_work_budget: other.sos_work_budget.or(self.sos_work_budget),
            max_cosets: other.max_cosets.or(self.max_cosets),
            max_target_order: other.max_target_order.or(self.max_target_order),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_keys_and_comments() {
        let c = Config::parse("# bounds\nclasp_bound = 7\n\nnode_budget=100 # small\ncensus = data/x.tsv\n").unwrap();
        assert_eq!(c.clasp_bound, Some(7));
        assert_eq!(c.node_budget, Some(100));
        assert_eq!(c.census, Some(PathBuf::from("data/x.tsv")));
        assert_eq!(c.jobs, None);
    }

    #[test]
    fn rejects_bad_lines() {
        let err = |text: &str| Config::parse(text).unwrap_err().to_string();
        assert_eq!(err("jobs"), "config line 1: expected `key = value`");
        assert_eq!(err("\ncolour = red"), "config line 2: unknown key `colour`");
        assert_eq!(err("jobs = many"), "config line 1: invalid value `many` for `jobs`");
    }

    #[test]
    fn flags_win() {
        let file = Config::parse("jobs = 2\nn_bound = 3").unwrap();
        let flags = Config { jobs: Some(8), ..Default::default() };
        let c = file.overridden_by(flags);
        assert_eq!((c.jobs, c.n_bound), (Some(8), Some(3)));
    }
}
