//! Records emitted when a stated closed form disagrees with an oracle, or
//! when a known caveat of a closed form is exercised.

use std::collections::BTreeMap;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Severity {
    /// A documented caveat; the oracle side passed.
    Warning,
    /// The oracle contradicts an implemented closed form.
    Failure,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Discrepancy {
    pub params: BTreeMap<String, i64>,
    /// Short identifier of the claim being checked.
    pub claim: String,
    pub computed: String,
    pub expected: String,
    pub severity: Severity,
}

impl Discrepancy {
    pub fn warning(
        params: &BTreeMap<String, i64>,
        claim: impl Into<String>,
        computed: impl ToString,
        expected: impl ToString,
    ) -> Self {
        Self {
            params: params.clone(),
            claim: claim.into(),
            computed: computed.to_string(),
            expected: expected.to_string(),
            severity: Severity::Warning,
        }
    }

    pub fn failure(
        params: &BTreeMap<String, i64>,
        claim: impl Into<String>,
        computed: impl ToString,
        expected: impl ToString,
    ) -> Self {
        Self {
            severity: Severity::Failure,
            ..Self::warning(params, claim, computed, expected)
        }
    }

    pub fn is_failure(&self) -> bool {
        self.severity == Severity::Failure
    }
}

/// `{name: value}` map used as the `params` field of reports.
pub fn params<const N: usize>(pairs: [(&str, i64); N]) -> BTreeMap<String, i64> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

/// Formats a collection as `{a, b, c}` or `(a, b, c)`.
pub fn fmt_list<T: std::fmt::Display>(items: impl IntoIterator<Item = T>, open: char, close: char) -> String {
    let body: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
    format!("{open}{}{close}", body.join(", "))
}
