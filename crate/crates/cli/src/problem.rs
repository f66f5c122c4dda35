//! Problem input: inline flags and JSON/TOML problem files.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use oscbound::partitions::{Partition, SchubertProblem};

use crate::CliError;

/// `c` as a single value or an inclusive range `a..b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PairSpec {
    One(usize),
    Range(usize, usize),
}

impl PairSpec {
    pub fn values(&self) -> RangeInclusive<usize> {
        match *self {
            PairSpec::One(c) => c..=c,
            PairSpec::Range(a, b) => a..=b,
        }
    }

    pub fn is_range(&self) -> bool {
        matches!(self, PairSpec::Range(..))
    }
}

impl Default for PairSpec {
    fn default() -> Self {
        PairSpec::One(0)
    }
}

impl FromStr for PairSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let int = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("bad pair count '{s}'"));
        match s.split_once("..") {
            None => Ok(PairSpec::One(int(s)?)),
            Some((a, b)) => {
                let (a, b) = (int(a)?, int(b.strip_prefix('=').unwrap_or(b))?);
                if a > b {
                    return Err(format!("empty pair range '{s}'"));
                }
                Ok(PairSpec::Range(a, b))
            }
        }
    }
}

impl fmt::Display for PairSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PairSpec::One(c) => write!(f, "{c}"),
            PairSpec::Range(a, b) => write!(f, "{a}..{b}"),
        }
    }
}

impl Serialize for PairSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            PairSpec::One(c) => s.serialize_u64(*c as u64),
            PairSpec::Range(..) => s.serialize_str(&self.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for PairSpec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(usize),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Int(c) => Ok(PairSpec::One(c)),
            Raw::Text(t) => t.parse().map_err(serde::de::Error::custom),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LambdaEntry {
    pub parts: Vec<u32>,
    #[serde(default = "one")]
    pub repeat: usize,
}

fn one() -> usize {
    1
}

/// The on-disk form of a problem.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<u32>,
    pub lambdas: Vec<LambdaEntry>,
    #[serde(default)]
    pub nu: Vec<u32>,
    #[serde(default)]
    pub c: PairSpec,
}

/// A `bound` report as written by `--format json`; only the problem is read back.
#[derive(Deserialize)]
struct Wrapped {
    problem: ProblemFile,
}

impl ProblemFile {
    /// Parses JSON (a bare problem or a wrapped report) or TOML.
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let trimmed = text.trim_start();
        if trimmed.starts_with('{') {
            let value: serde_json::Value =
                serde_json::from_str(text).map_err(|e| CliError::Input(format!("problem file: {e}")))?;
            let parsed = if value.get("problem").is_some() {
                serde_json::from_value::<Wrapped>(value).map(|w| w.problem)
            } else {
                serde_json::from_value::<ProblemFile>(value)
            };
            parsed.map_err(|e| CliError::Input(format!("problem file: {e}")))
        } else {
            toml::from_str(text).map_err(|e| CliError::Input(format!("problem file: {e}")))
        }
    }

    pub fn lambdas(&self) -> Result<Vec<Partition>, CliError> {
        let mut out = Vec::new();
        for entry in &self.lambdas {
            let lambda = Partition::new(entry.parts.clone()).map_err(|e| CliError::Input(e.to_string()))?;
            out.extend(std::iter::repeat_n(lambda, entry.repeat));
        }
        Ok(out)
    }

    pub fn nu(&self) -> Result<Partition, CliError> {
        Partition::new(self.nu.clone()).map_err(|e| CliError::Input(format!("nu: {e}")))
    }

    /// `d` as given, or the value forced by the weight condition.
    pub fn degree(&self) -> Result<u32, CliError> {
        if let Some(d) = self.d {
            return Ok(d);
        }
        let lambdas = self.lambdas()?;
        let nu = self.nu()?;
        SchubertProblem::degree_from_weight(&lambdas, &nu, self.n).ok_or_else(|| {
            let total = nu.weight() + lambdas.iter().map(Partition::weight).sum::<u64>();
            CliError::Input(format!(
                "weight condition: |nu| + sum |lambda| = {total} is not a positive multiple of n = {}, so d cannot be inferred",
                self.n
            ))
        })
    }

    /// The problem at pair count `c`, validated.
    pub fn problem(&self, c: usize) -> Result<SchubertProblem, CliError> {
        let problem = SchubertProblem {
            lambdas: self.lambdas()?,
            nu: self.nu()?,
            n: self.n,
            d: self.degree()?,
            c,
        };
        let report = problem.validate();
        if report.is_ok() {
            Ok(problem)
        } else {
            Err(CliError::Input(format!("invalid problem: {report}")))
        }
    }

    /// The same file with `d` filled in, as echoed in reports.
    pub fn resolved(&self) -> Result<Self, CliError> {
        Ok(ProblemFile {
            d: Some(self.degree()?),
            ..self.clone()
        })
    }
}

/// Parses `2,1:x3` (three copies of `(2,1)`); the suffix is optional.
pub fn parse_lambda_flag(s: &str) -> Result<LambdaEntry, String> {
    let (parts, repeat) = match s.rsplit_once(":x") {
        Some((p, r)) => (
            p,
            r.trim()
                .parse::<usize>()
                .map_err(|_| format!("bad repeat count in '{s}'"))?,
        ),
        None => (s, 1),
    };
    let lambda = Partition::from_str(parts).map_err(|e| format!("'{s}': {e}"))?;
    Ok(LambdaEntry {
        parts: lambda.parts().to_vec(),
        repeat,
    })
}

/// Collapses runs of equal partitions into `(parts, repeat)` entries.
pub fn compress(lambdas: &[Partition]) -> Vec<LambdaEntry> {
    let mut out: Vec<LambdaEntry> = Vec::new();
    for l in lambdas {
        match out.last_mut() {
            Some(last) if last.parts == l.parts() => last.repeat += 1,
            _ => out.push(LambdaEntry {
                parts: l.parts().to_vec(),
                repeat: 1,
            }),
        }
    }
    out
}
