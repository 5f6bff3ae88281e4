//! Graph corpora and their descriptors.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use suntrap_core::format::{parse_graphs, FormatError};
use suntrap_core::witness::generators::{GenerateError, GraphKind};
use suntrap_core::Graph;

use crate::enumerate::{enumerate_flat, EnumerateError, Predicate};
use crate::random::{random_graphs, RandomError, RandomModel};

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error(transparent)]
    Enumerate(#[from] EnumerateError),
    #[error(transparent)]
    Random(#[from] RandomError),
    #[error(transparent)]
    Generate(#[from] GenerateError),
    #[error("{path}: {source}")]
    Format { path: String, source: FormatError },
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("bad corpus spec `{0}`")]
    BadSpec(String),
}

/// Where a corpus came from, recorded verbatim in reports.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "source", rename_all = "kebab-case")]
pub enum CorpusDescriptor {
    /// Connected graphs on `1..=n_max` vertices passing `predicate`, one per isomorphism class.
    Exhaustive {
        n_max: usize,
        predicate: Predicate,
    },
    /// Seeded random graphs, kept when they pass `predicate`.
    Random {
        model: RandomModel,
        n_min: usize,
        n_max: usize,
        count: usize,
        seed: u64,
        predicate: Predicate,
    },
    File {
        path: String,
    },
    /// Named graphs, in the `generate` syntax.
    Generated {
        kinds: Vec<String>,
    },
}

/// The built-in family of named graphs used by `--corpus generated`.
pub fn default_generated_kinds() -> Vec<String> {
    let mut kinds = Vec::new();
    kinds.extend((5..=10).map(|n| format!("cycle {n}")));
    kinds.extend((4..=10).map(|t| format!("t-sun {t}")));
    kinds.extend((4..=8).map(|t| format!("t-sunspot {t}")));
    kinds.extend(["net", "bull", "petersen", "groetzsch", "hypercube 3"].map(String::from));
    kinds.extend((3..=8).map(|n| format!("shift {n}")));
    kinds.extend((5..=8).map(|k| format!("spoked-hole {k}")));
    kinds.push("quartic-girth5".into());
    kinds
}

#[derive(Debug, Clone)]
pub struct Corpus {
    pub descriptor: CorpusDescriptor,
    pub graphs: Vec<Graph>,
}

impl Corpus {
    pub fn load(descriptor: CorpusDescriptor) -> Result<Corpus, CorpusError> {
        let graphs = match &descriptor {
            CorpusDescriptor::Exhaustive { n_max, predicate } => {
                enumerate_flat(*n_max, *predicate)?
            }
            CorpusDescriptor::Random {
                model,
                n_min,
                n_max,
                count,
                seed,
                predicate,
            } => random_graphs(*model, *n_min, *n_max, *count, *seed)?
                .into_iter()
                .filter(|g| predicate.holds(g))
                .collect(),
            CorpusDescriptor::File { path } => {
                let text = std::fs::read_to_string(path).map_err(|source| CorpusError::Io {
                    path: path.clone(),
                    source,
                })?;
                parse_graphs(&text).map_err(|source| CorpusError::Format {
                    path: path.clone(),
                    source,
                })?
            }
            CorpusDescriptor::Generated { kinds } => kinds
                .iter()
                .map(|k| k.parse::<GraphKind>()?.build())
                .collect::<Result<_, _>>()?,
        };
        Ok(Corpus { descriptor, graphs })
    }

    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }
}

/// A `--corpus` value before the campaign supplies `n_max`, predicate and seed.
///
/// Forms: `exhaustive`, `random:MODEL:N:COUNT` (MODEL is `triangle-free` or
/// `gnp=P`, N is `n` or `a-b`), `file:PATH`, `generated` or `generated:KIND,KIND,...`.
#[derive(Debug, Clone, PartialEq)]
pub enum CorpusSpec {
    Exhaustive,
    Random {
        model: RandomModel,
        n_min: usize,
        n_max: usize,
        count: usize,
    },
    File(String),
    Generated(Vec<String>),
}

impl CorpusSpec {
    pub fn descriptor(&self, n_max: usize, predicate: Predicate, seed: u64) -> CorpusDescriptor {
        match self {
            CorpusSpec::Exhaustive => CorpusDescriptor::Exhaustive { n_max, predicate },
            CorpusSpec::Random {
                model,
                n_min,
                n_max,
                count,
            } => CorpusDescriptor::Random {
                model: *model,
                n_min: *n_min,
                n_max: *n_max,
                count: *count,
                seed,
                predicate,
            },
            CorpusSpec::File(path) => CorpusDescriptor::File { path: path.clone() },
            CorpusSpec::Generated(kinds) => CorpusDescriptor::Generated {
                kinds: kinds.clone(),
            },
        }
    }
}

impl FromStr for CorpusSpec {
    type Err = CorpusError;

    fn from_str(s: &str) -> Result<Self, CorpusError> {
        let bad = || CorpusError::BadSpec(s.to_string());
        let (head, rest) = s.split_once(':').unwrap_or((s, ""));
        match head {
            "exhaustive" if rest.is_empty() => Ok(CorpusSpec::Exhaustive),
            "file" if !rest.is_empty() => Ok(CorpusSpec::File(rest.to_string())),
            "generated" if rest.is_empty() => Ok(CorpusSpec::Generated(default_generated_kinds())),
            "generated" => Ok(CorpusSpec::Generated(
                rest.split(',').map(|k| k.trim().to_string()).collect(),
            )),
            "random" => {
                let parts: Vec<&str> = rest.split(':').collect();
                let [model, n, count] = parts[..] else {
                    return Err(bad());
                };
                let model = match model.split_once('=') {
                    None if model == "triangle-free" => RandomModel::TriangleFree,
                    Some(("gnp", p)) => RandomModel::Gnp {
                        p: p.parse().map_err(|_| bad())?,
                    },
                    _ => return Err(bad()),
                };
                let (n_min, n_max) = match n.split_once('-') {
                    Some((a, b)) => (a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?),
                    None => {
                        let n = n.parse().map_err(|_| bad())?;
                        (n, n)
                    }
                };
                Ok(CorpusSpec::Random {
                    model,
                    n_min,
                    n_max,
                    count: count.parse().map_err(|_| bad())?,
                })
            }
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for CorpusDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CorpusDescriptor::Exhaustive { n_max, predicate } => {
                write!(f, "exhaustive n <= {n_max}, {predicate}")
            }
            CorpusDescriptor::Random {
                n_min,
                n_max,
                count,
                seed,
                predicate,
                ..
            } => write!(
                f,
                "random {count} graphs, n in {n_min}..={n_max}, seed {seed}, {predicate}"
            ),
            CorpusDescriptor::File { path } => write!(f, "file {path}"),
            CorpusDescriptor::Generated { kinds } => write!(f, "{} generated graphs", kinds.len()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn specs_parse() {
        assert_eq!(
            "exhaustive".parse::<CorpusSpec>().unwrap(),
            CorpusSpec::Exhaustive
        );
        assert_eq!(
            "random:gnp=0.3:5-9:20".parse::<CorpusSpec>().unwrap(),
            CorpusSpec::Random {
                model: RandomModel::Gnp { p: 0.3 },
                n_min: 5,
                n_max: 9,
                count: 20
            }
        );
        assert_eq!(
            "generated:t-sun 6,petersen".parse::<CorpusSpec>().unwrap(),
            CorpusSpec::Generated(vec!["t-sun 6".into(), "petersen".into()])
        );
        for bad in ["random:foo:5:3", "exhaustive:3", "file:", "nope"] {
            assert!(bad.parse::<CorpusSpec>().is_err(), "{bad}");
        }
    }

    #[test]
    fn generated_corpus_loads() {
        let c = Corpus::load(CorpusDescriptor::Generated {
            kinds: default_generated_kinds(),
        })
        .unwrap();
        assert_eq!(c.len(), default_generated_kinds().len());
    }

    #[test]
    fn random_corpus_filters() {
        let d = "random:gnp=0.5:6:50"
            .parse::<CorpusSpec>()
            .unwrap()
            .descriptor(0, Predicate::TriangleFree, 9);
        let c = Corpus::load(d).unwrap();
        assert!(c.len() < 50);
        assert!(c.graphs.iter().all(|g| Predicate::TriangleFree.holds(g)));
    }
}
