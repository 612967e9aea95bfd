//! Executable checks of the structural results on centrally essential rings,
//! a corpus registry, and a deterministic JSON report.

mod checks;
mod corpus;

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;

pub use checks::{
    check_backend_agreement, check_ce_matrix, check_hypothesis_needed, check_section2, check_section3, check_section4, probe_essential_ideals,
};
pub use corpus::{Corpus, CorpusEntry, Tags};

use crate::center::{is_centrally_essential, CentralEssentiality, Verdict};
use crate::constructions::Family;
use crate::error::{Error, Result};
use crate::exactalg::{is_prime, Scalars};
use crate::ring::io::AnyRing;
use crate::ring::RingPresentation;

pub const REPORT_VERSION: &str = "1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckVerdict {
    Pass,
    Fail,
    /// The hypothesis of the claim never applies on this ring.
    Vacuous,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub check_id: String,
    pub ring: String,
    pub verdict: CheckVerdict,
    #[serde(default, skip_serializing_if = "Value::is_null")]
    pub evidence: Value,
    pub millis: u64,
}

impl CheckResult {
    pub fn new(check_id: &str, ring: &str, verdict: CheckVerdict, evidence: Value) -> Self {
        CheckResult {
            check_id: check_id.into(),
            ring: ring.into(),
            verdict,
            evidence,
            millis: 0,
        }
    }

    pub fn skipped(check_id: &str, ring: &str, reason: impl Into<String>) -> Self {
        Self::new(check_id, ring, CheckVerdict::Skipped, serde_json::json!({ "reason": reason.into() }))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerifyConfig {
    pub seed: u64,
    /// Largest element count for exhaustive scans.
    pub cap: u64,
    /// Primes for the quotient checks.
    pub primes: Vec<u64>,
    /// Primes for the quasi-invariance check of quotients.
    pub invariance_primes: Vec<u64>,
    /// Random elements for the witness family of the generalized matrix rings.
    pub family_samples: usize,
    /// Random generator sets for the essential right ideal probe.
    pub probe_samples: usize,
    /// Record wall-clock milliseconds; off by default so reports are reproducible.
    pub timings: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            seed: 0x5eed,
            cap: 1 << 16,
            primes: vec![2, 3, 5, 7, 11, 13],
            invariance_primes: vec![2, 3, 5],
            family_samples: 1000,
            probe_samples: 500,
            timings: false,
        }
    }
}

impl VerifyConfig {
    pub fn validate(&self) -> Result<()> {
        if self.cap == 0 {
            return Err(Error::InvalidArgument("cap must be at least 1".into()));
        }
        if let Some(&p) = self.primes.iter().chain(&self.invariance_primes).find(|&&p| !is_prime(p)) {
            return Err(Error::NotPrime(p));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub vacuous: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub version: String,
    pub corpus: Vec<String>,
    pub results: Vec<CheckResult>,
    pub summary: Summary,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable") + "\n"
    }

    /// 0 when nothing failed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        i32::from(self.summary.fail > 0)
    }
}

pub fn summarize(results: &[CheckResult]) -> Summary {
    let mut s = Summary::default();
    for r in results {
        match r.verdict {
            CheckVerdict::Pass => s.pass += 1,
            CheckVerdict::Fail => s.fail += 1,
            CheckVerdict::Vacuous => s.vacuous += 1,
            CheckVerdict::Skipped => s.skipped += 1,
        }
    }
    s
}

/// Runs `f` and stamps its results with the elapsed time when enabled.
pub(crate) fn timed(cfg: &VerifyConfig, f: impl FnOnce() -> Vec<CheckResult>) -> Vec<CheckResult> {
    let start = Instant::now();
    let mut out = f();
    if cfg.timings {
        let ms = start.elapsed().as_millis() as u64;
        for r in &mut out {
            r.millis = ms;
        }
    }
    out
}

/// Every checker over every corpus entry. Entries run in parallel; the
/// result order is the corpus order and, within an entry, a fixed check order.
pub fn run_paper_report(corpus: &Corpus, cfg: &VerifyConfig) -> Result<Report> {
    cfg.validate()?;
    let results: Vec<CheckResult> = corpus
        .entries
        .par_iter()
        .map(|e| check_entry(e, cfg))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    Ok(Report {
        version: REPORT_VERSION.into(),
        corpus: corpus.names(),
        summary: summarize(&results),
        results,
    })
}

struct Common<E> {
    results: Vec<CheckResult>,
    valid: bool,
    ce: Option<crate::center::CEDecision<E>>,
}

fn common_checks<S: CentralEssentiality>(ring: &RingPresentation<S>, entry: &CorpusEntry, cfg: &VerifyConfig) -> Common<S::Elem> {
    let name = ring.name();
    let mut results = Vec::new();
    let report = ring.validate();
    let valid = report.passed();
    results.extend(timed(cfg, || {
        let verdict = if valid { CheckVerdict::Pass } else { CheckVerdict::Fail };
        let ev = match (report.associativity.first(), report.identity.first()) {
            (Some(a), _) => serde_json::json!({ "triple": [a.triple.0, a.triple.1, a.triple.2] }),
            (None, Some(i)) => serde_json::json!({ "identity_fails_on": i.basis }),
            _ => serde_json::json!({ "triples_checked": report.triples_checked }),
        };
        vec![CheckResult::new("validates", name, verdict, ev)]
    }));
    if !valid {
        return Common { results, valid, ce: None };
    }
    let opts = crate::center::DecideOptions {
        cap: cfg.cap,
        samples: 256,
        seed: cfg.seed,
    };
    let mut ce = None;
    results.extend(timed(cfg, || {
        let d = is_centrally_essential(ring, &opts);
        let commutative = ring.is_commutative();
        let finite = ring.scalars().order().is_some();
        let got_ce = match d.verdict {
            Verdict::Yes => Some(true),
            Verdict::No => Some(false),
            Verdict::Unknown => None,
        };
        let ok = got_ce == Some(entry.expected.centrally_essential)
            && commutative == entry.expected.commutative
            && finite == entry.expected.finite;
        let ev = serde_json::json!({
            "centrally_essential": d.to_json(ring.scalars()),
            "commutative": commutative,
            "finite": finite,
        });
        ce = Some(d);
        vec![CheckResult::new(
            "corpus-tags",
            name,
            if ok { CheckVerdict::Pass } else { CheckVerdict::Fail },
            ev,
        )]
    }));
    Common { results, valid, ce }
}

fn is_ce_matrix(entry: &CorpusEntry) -> bool {
    entry.origin.is_some_and(|o| o.family == Family::CeMatrix)
}

pub fn check_entry(entry: &CorpusEntry, cfg: &VerifyConfig) -> Vec<CheckResult> {
    match &entry.ring {
        AnyRing::Integer(r) => {
            let c = common_checks(r, entry, cfg);
            let mut out = c.results;
            if !c.valid {
                return out;
            }
            if is_ce_matrix(entry) {
                out.extend(check_ce_matrix(r, &r.rationalize(), cfg));
            }
            let ce = c.ce.is_some_and(|d| d.is_yes());
            out.extend(check_section3(r, ce, cfg));
            out.extend(check_section4(r, ce, cfg));
            out
        }
        AnyRing::Rational(r) => {
            let c = common_checks(r, entry, cfg);
            let mut out = c.results;
            if c.valid && is_ce_matrix(entry) {
                out.extend(check_ce_matrix(r, r, cfg));
            }
            out
        }
        AnyRing::Modular(r) => {
            let c = common_checks(r, entry, cfg);
            let mut out = c.results;
            if !c.valid {
                return out;
            }
            let ce = c.ce.is_some_and(|d| d.is_yes());
            if is_ce_matrix(entry) && r.scalars().is_field() {
                out.extend(check_ce_matrix(r, r, cfg));
            }
            out.extend(check_section2(r, ce, cfg));
            if ce {
                out.extend(probe_essential_ideals(r, cfg));
            } else {
                out.extend(check_hypothesis_needed(r, cfg));
            }
            out.extend(check_backend_agreement(r, cfg));
            out
        }
    }
}
