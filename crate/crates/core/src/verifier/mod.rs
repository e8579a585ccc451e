//! Theorem catalog: named hypotheses and conclusions evaluated on finite
//! instances, with self-certifying counterexamples.

mod corpus;
mod instance;
mod ledger;
mod theorems;
mod witness;

use std::fmt;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub use corpus::{fixtures, generate_corpus, Corpus, CorpusConfig, ExampleClaim};
pub use instance::{Instance, InstanceKind, RingContext, Signature};
pub use ledger::{known_discrepancy, LedgerEntry, LEDGER};
pub use witness::Witness;

/// Truth value of a hypothesis; `Unknown` only arises from capped searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Met {
    Yes,
    No,
    Unknown,
}

impl From<bool> for Met {
    fn from(b: bool) -> Self {
        if b {
            Met::Yes
        } else {
            Met::No
        }
    }
}

impl Serialize for Met {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Met::Yes => s.serialize_bool(true),
            Met::No => s.serialize_bool(false),
            Met::Unknown => s.serialize_str("unknown"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HypothesisRecord {
    pub name: &'static str,
    pub met: Met,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Holds,
    Fails,
    HypothesesNotMet,
    Undecided,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Holds => "holds",
            Status::Fails => "fails",
            Status::HypothesesNotMet => "hypotheses_not_met",
            Status::Undecided => "undecided",
        })
    }
}

/// One verdict. Field order is the serialized order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerdictReport {
    pub instance: String,
    pub theorem: String,
    pub status: Status,
    pub hypotheses: Vec<HypothesisRecord>,
    pub witness: Option<Witness>,
    pub anchors: Vec<String>,
    pub flags: Vec<String>,
    /// Ledger entry explaining an expected failure.
    pub ledger: Option<&'static str>,
}

impl VerdictReport {
    /// Names of the hypotheses that are not met.
    pub fn unmet(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.hypotheses
            .iter()
            .filter(|h| h.met == Met::No)
            .map(|h| h.name)
    }

    /// A failure with no ledger entry.
    pub fn is_unexpected_failure(&self) -> bool {
        self.status == Status::Fails && self.ledger.is_none()
    }
}

/// One catalog entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TheoremCheck {
    pub id: &'static str,
    pub signature: Signature,
    /// Hypothesis names, in evaluation order.
    pub hypotheses: &'static [&'static str],
    pub conclusion: &'static str,
    pub anchor: &'static str,
}

/// The 28 checks, ordered by id.
pub fn catalog() -> &'static [TheoremCheck] {
    theorems::CATALOG
}

pub fn theorem(id: &str) -> Option<&'static TheoremCheck> {
    catalog().iter().find(|t| t.id.eq_ignore_ascii_case(id))
}

/// Evaluates one check on one instance.
pub fn check(instance: &Instance, t: &TheoremCheck) -> Result<VerdictReport> {
    if instance.signature() != t.signature {
        return Err(Error::SignatureMismatch(format!(
            "{} takes ({}), instance {} is ({})",
            t.id,
            t.signature,
            instance.id(),
            instance.signature()
        )));
    }
    let outcome = theorems::evaluate(t.id, instance);
    debug_assert_eq!(
        outcome
            .hypotheses
            .iter()
            .map(|h| h.name)
            .collect::<Vec<_>>(),
        t.hypotheses,
        "{}",
        t.id
    );
    let mut report = VerdictReport {
        instance: instance.id().to_string(),
        theorem: t.id.to_string(),
        status: outcome.status,
        hypotheses: outcome.hypotheses,
        witness: outcome.witness,
        anchors: vec![t.anchor.to_string()],
        flags: outcome.flags,
        ledger: None,
    };
    report.ledger = known_discrepancy(instance, &report).map(|e| e.id);
    Ok(report)
}

/// Re-derives a failing verdict's witness from scratch; `true` when it
/// exhibits a genuine violation of the conclusion.
pub fn recheck(instance: &Instance, t: &TheoremCheck, witness: &Witness) -> bool {
    instance.signature() == t.signature && theorems::recheck(t.id, instance, witness)
}

fn selected(selection: &[&str]) -> Vec<&'static TheoremCheck> {
    catalog()
        .iter()
        .filter(|t| selection.is_empty() || selection.iter().any(|s| s.eq_ignore_ascii_case(t.id)))
        .collect()
}

fn reports_for(instance: &Instance, checks: &[&'static TheoremCheck]) -> Vec<VerdictReport> {
    checks
        .iter()
        .filter(|t| t.signature == instance.signature())
        .map(|t| check(instance, t).expect("signature already matched"))
        .collect()
}

/// Every applicable `(instance, check)` pair, in corpus order and then
/// catalog order. An empty selection means the whole catalog.
pub fn run_suite(corpus: &[Instance], selection: &[&str]) -> Vec<VerdictReport> {
    let checks = selected(selection);
    corpus
        .par_iter()
        .flat_map_iter(|i| reports_for(i, &checks))
        .collect()
}

/// [`run_suite`] on a dedicated pool of `jobs` threads. The output does not
/// depend on `jobs`.
pub fn run_suite_with_jobs(
    corpus: &[Instance],
    selection: &[&str],
    jobs: usize,
) -> Result<Vec<VerdictReport>> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::Malformed(format!("thread pool: {e}")))?;
    Ok(pool.install(|| run_suite(corpus, selection)))
}

/// Evaluates the example claims attached to a corpus.
pub fn run_claims(claims: &[ExampleClaim]) -> Vec<VerdictReport> {
    claims.iter().map(ExampleClaim::evaluate).collect()
}
