//! Campaign runs and their JSON reports.
//!
//! Everything that varies between identical runs lives under `timestamp`, so
//! two reports from the same seed and corpus agree byte for byte elsewhere.

use std::time::{Duration, Instant, SystemTime, UNIX_EPOCH};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use suntrap_core::format::{from_graph6, to_graph6};

use crate::campaign::{check_graph, Deadline, GraphOutcome, GraphVerdict, LemmaId};
use crate::corpus::{Corpus, CorpusDescriptor};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub graphs: usize,
    pub holds: usize,
    pub violated: usize,
    pub not_applicable: usize,
    pub skipped: usize,
    pub instances_checked: usize,
    pub instances_not_applicable: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub index: usize,
    pub graph6: String,
    pub n: usize,
    #[serde(flatten)]
    pub outcome: GraphOutcome,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timestamp {
    pub unix_seconds: u64,
    pub wall_time_ms: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub tool_version: String,
    pub campaign: LemmaId,
    pub corpus: CorpusDescriptor,
    pub seed: u64,
    pub timeout_per_graph_ms: Option<u64>,
    pub summary: Summary,
    pub entries: Vec<Entry>,
    pub timestamp: Timestamp,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct RunOptions {
    /// Worker threads; `None` uses rayon's default.
    pub jobs: Option<usize>,
    pub timeout_per_graph: Option<Duration>,
    pub seed: u64,
}

pub fn summarize(entries: &[Entry]) -> Summary {
    let mut s = Summary {
        graphs: entries.len(),
        ..Summary::default()
    };
    for e in entries {
        match e.outcome.verdict {
            GraphVerdict::Holds => s.holds += 1,
            GraphVerdict::Violated { .. } => s.violated += 1,
            GraphVerdict::NotApplicable { .. } => s.not_applicable += 1,
            GraphVerdict::Skipped { .. } => s.skipped += 1,
        }
        s.instances_checked += e.outcome.instances_checked;
        s.instances_not_applicable += e.outcome.instances_not_applicable;
    }
    s
}

/// Checks every graph of `corpus`; entry order follows the corpus regardless of `jobs`.
pub fn verify_campaign(lemma: LemmaId, corpus: &Corpus, opts: RunOptions) -> Report {
    let start = Instant::now();
    let run = || -> Vec<Entry> {
        corpus
            .graphs
            .par_iter()
            .enumerate()
            .map(|(index, g)| Entry {
                index,
                graph6: to_graph6(g),
                n: g.n(),
                outcome: check_graph(lemma, g, Deadline::after(opts.timeout_per_graph)),
            })
            .collect()
    };
    let entries = match opts.jobs {
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build()
            .expect("thread pool")
            .install(run),
        None => run(),
    };
    Report {
        schema_version: SCHEMA_VERSION,
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        campaign: lemma,
        corpus: corpus.descriptor.clone(),
        seed: opts.seed,
        timeout_per_graph_ms: opts.timeout_per_graph.map(|d| d.as_millis() as u64),
        summary: summarize(&entries),
        entries,
        timestamp: Timestamp {
            unix_seconds: SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0),
            wall_time_ms: start.elapsed().as_millis() as u64,
        },
    }
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn from_json(text: &str) -> Result<Report, serde_json::Error> {
        serde_json::from_str(text)
    }

    /// The report with the timestamp zeroed, for byte comparisons.
    pub fn without_timestamp(&self) -> Report {
        Report {
            timestamp: Timestamp {
                unix_seconds: 0,
                wall_time_ms: 0,
            },
            ..self.clone()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecheckError {
    #[error("schema version {0} is not supported")]
    Schema(u32),
    #[error("entry {index}: {reason}")]
    Entry { index: usize, reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RecheckOutcome {
    pub index: usize,
    pub confirmed: bool,
}

/// Re-verifies every violated entry from its graph6 string and witness alone,
/// and checks that the summary matches the entries.
pub fn recheck(report: &Report) -> Result<Vec<RecheckOutcome>, RecheckError> {
    if report.schema_version != SCHEMA_VERSION {
        return Err(RecheckError::Schema(report.schema_version));
    }
    if summarize(&report.entries) != report.summary {
        return Err(RecheckError::Entry {
            index: report.entries.len(),
            reason: "summary does not match the entries".into(),
        });
    }
    let mut out = Vec::new();
    for e in &report.entries {
        let GraphVerdict::Violated { witness } = &e.outcome.verdict else {
            continue;
        };
        let g = from_graph6(&e.graph6).map_err(|err| RecheckError::Entry {
            index: e.index,
            reason: err.to_string(),
        })?;
        out.push(RecheckOutcome {
            index: e.index,
            confirmed: witness.reverify(report.campaign, &g),
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::Predicate;

    fn corpus() -> Corpus {
        Corpus::load(CorpusDescriptor::Exhaustive {
            n_max: 6,
            predicate: Predicate::All,
        })
        .unwrap()
    }

    #[test]
    fn reports_are_stable_across_jobs() {
        let c = corpus();
        let opts = |jobs| RunOptions {
            jobs: Some(jobs),
            seed: 5,
            ..RunOptions::default()
        };
        let a = verify_campaign(LemmaId::LongHoleBound, &c, opts(1)).without_timestamp();
        let b = verify_campaign(LemmaId::LongHoleBound, &c, opts(4)).without_timestamp();
        assert_eq!(a.to_json(), b.to_json());
        assert_eq!(a.summary.graphs, 143);
        assert_eq!(a.summary.holds, 143);
    }

    #[test]
    fn json_round_trip() {
        let r = verify_campaign(
            LemmaId::SunContainsSunspot,
            &corpus(),
            RunOptions::default(),
        );
        let back = Report::from_json(&r.to_json()).unwrap();
        assert_eq!(back, r);
        assert!(recheck(&back).unwrap().is_empty());
    }

    #[test]
    fn tampered_summary_is_rejected() {
        let mut r = verify_campaign(LemmaId::LongHoleBound, &corpus(), RunOptions::default());
        r.summary.holds += 1;
        assert!(recheck(&r).is_err());
    }
}
