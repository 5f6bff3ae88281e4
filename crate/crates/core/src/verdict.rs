use serde::{Deserialize, Serialize};

/// Outcome of checking one lemma instance. "Not applicable" is kept apart from
/// "holds" so that vacuous passes stay visible.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", content = "detail", rename_all = "kebab-case")]
pub enum Verdict<V> {
    Holds,
    Violated(V),
    NotApplicable(String),
}

impl<V> Verdict<V> {
    pub fn not_applicable(reason: impl Into<String>) -> Self {
        Verdict::NotApplicable(reason.into())
    }

    pub fn is_violated(&self) -> bool {
        matches!(self, Verdict::Violated(_))
    }

    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn map<W>(self, f: impl FnOnce(V) -> W) -> Verdict<W> {
        match self {
            Verdict::Holds => Verdict::Holds,
            Verdict::Violated(v) => Verdict::Violated(f(v)),
            Verdict::NotApplicable(r) => Verdict::NotApplicable(r),
        }
    }
}
