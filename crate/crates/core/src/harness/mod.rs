//! Machine checks of the factorization and divisor-graph theorems over a
//! corpus of rings.

mod checks;
mod corpus;
mod render;

use std::sync::OnceLock;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::associates::AssocKind;
use crate::atoms::AtomKind;
use crate::error::{Error, Result};
use crate::lab::Lab;
use crate::props::{ElementScope, PropertyReport};
use crate::ring::{BuildOptions, ElementId};

pub use checks::{theorem, Theorem, THEOREMS};
pub use corpus::{Corpus, CORPUS_ENV};

/// Counterexamples kept per theorem; the total is still counted.
pub const MAX_COUNTEREXAMPLES: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    /// Only fails because the element scope includes zero.
    ScopeBreak,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::ScopeBreak => "SCOPE-BREAK",
        })
    }
}

/// A failing instance, with enough context to replay it from the CLI.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub ring: String,
    pub x: Option<String>,
    pub alpha: Option<AtomKind>,
    pub beta: Option<AssocKind>,
    pub detail: String,
}

impl Counterexample {
    /// A CLI invocation showing the offending object.
    pub fn replay(&self) -> String {
        match (&self.x, self.alpha, self.beta) {
            (Some(x), Some(a), Some(b)) => format!(
                "divgraph graph --ring '{}' --x '{x}' --alpha {a} --beta {b}",
                self.ring
            ),
            (Some(x), _, _) => format!("divgraph classify --ring '{}' --x '{x}'", self.ring),
            _ => format!("divgraph props --ring '{}'", self.ring),
        }
    }
}

/// A remark attached to a theorem: the first instance and how many there were.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Note {
    pub key: String,
    pub text: String,
    pub count: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremReport {
    pub id: &'static str,
    pub domain: &'static str,
    pub status: Status,
    /// Number of instances asserted.
    pub checked: u64,
    pub total_counterexamples: u64,
    pub counterexamples: Vec<Counterexample>,
    pub scope_breaks: Vec<Counterexample>,
    pub notes: Vec<Note>,
    /// Wall time; excluded from rendered reports so they stay deterministic.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }

    pub fn note(&self, key: &str) -> Option<&Note> {
        self.notes.iter().find(|n| n.key == key)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BuildFailure {
    pub spec: String,
    pub error: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub scope: ElementScope,
    pub rings: Vec<String>,
    pub build_failures: Vec<BuildFailure>,
    pub theorems: Vec<TheoremReport>,
}

impl SuiteReport {
    /// No failed theorem and every ring built.
    pub fn passed(&self) -> bool {
        self.build_failures.is_empty() && self.theorems.iter().all(TheoremReport::passed)
    }

    pub fn theorem(&self, id: &str) -> Option<&TheoremReport> {
        self.theorems.iter().find(|t| t.id == id)
    }

    pub fn elapsed(&self) -> Duration {
        self.theorems.iter().map(|t| t.elapsed).sum()
    }
}

#[derive(Clone, Debug, Default)]
pub struct SuiteConfig {
    pub include_zero: bool,
    /// Worker threads; 0 picks the number of CPUs.
    pub jobs: usize,
    /// Restrict to these theorem ids.
    pub only: Option<Vec<String>>,
    pub build: BuildOptions,
}

impl SuiteConfig {
    pub fn scope(&self) -> ElementScope {
        ElementScope::from_include_zero(self.include_zero)
    }
}

/// One corpus ring with its analyses and property reports per scope.
pub struct RingCase {
    pub spec: String,
    pub lab: Lab,
    props: [OnceLock<Result<PropertyReport>>; 2],
}

impl RingCase {
    pub fn new(spec: impl Into<String>, lab: Lab) -> RingCase {
        RingCase {
            spec: spec.into(),
            lab,
            props: Default::default(),
        }
    }

    pub fn props(&self, scope: ElementScope) -> Result<&PropertyReport> {
        let slot = &self.props[usize::from(scope.includes_zero())];
        slot.get_or_init(|| PropertyReport::compute(&self.lab, scope))
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn elements(&self, scope: ElementScope) -> Vec<ElementId> {
        scope.elements(self.lab.ring())
    }
}

/// What one check found on one ring.
#[derive(Debug, Default)]
pub struct Findings {
    pub checked: u64,
    pub failures: Vec<Counterexample>,
    pub notes: Vec<Note>,
}

impl Findings {
    pub fn note(&mut self, key: &str, text: impl Into<String>) {
        match self.notes.iter_mut().find(|n| n.key == key) {
            Some(n) => n.count += 1,
            None => self.notes.push(Note {
                key: key.to_string(),
                text: text.into(),
                count: 1,
            }),
        }
    }
}

fn merge_notes(into: &mut Vec<Note>, from: Vec<Note>) {
    for n in from {
        match into.iter_mut().find(|m| m.key == n.key) {
            Some(m) => m.count += n.count,
            None => into.push(n),
        }
    }
}

/// Run one check on one ring; under the inclusive scope, failures that
/// disappear in the default scope are scope breaks.
fn run_case(t: &Theorem, case: &RingCase, scope: ElementScope) -> (Findings, Vec<Counterexample>) {
    let findings = checks::run(t, case, scope);
    if scope.includes_zero() && !findings.failures.is_empty() {
        let strict = checks::run(t, case, ElementScope::Nonzero);
        if strict.failures.is_empty() {
            let Findings {
                checked,
                failures,
                notes,
            } = findings;
            return (
                Findings {
                    checked,
                    failures: Vec::new(),
                    notes,
                },
                failures,
            );
        }
    }
    (findings, Vec::new())
}

fn selected(config: &SuiteConfig) -> Result<Vec<&'static Theorem>> {
    let Some(only) = &config.only else {
        return Ok(THEOREMS.iter().collect());
    };
    for id in only {
        if theorem(id).is_none() {
            let known: Vec<&str> = THEOREMS.iter().map(|t| t.id).collect();
            return Err(Error::InvalidArgument(format!(
                "unknown theorem id {id:?}; known: {}",
                known.join(", ")
            )));
        }
    }
    Ok(THEOREMS
        .iter()
        .filter(|t| only.iter().any(|id| id == t.id))
        .collect())
}

/// Build every corpus ring and run the selected checks. Ring build failures
/// are reported and the suite continues; the report is independent of the
/// number of worker threads.
pub fn run_suite(corpus: &Corpus, config: &SuiteConfig) -> Result<SuiteReport> {
    let mut theorems = selected(config)?;
    if corpus.is_empty() {
        theorems.clear();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| Error::InvalidArgument(format!("worker pool: {e}")))?;
    pool.install(|| run_in_pool(corpus, config, &theorems))
}

fn run_in_pool(
    corpus: &Corpus,
    config: &SuiteConfig,
    theorems: &[&'static Theorem],
) -> Result<SuiteReport> {
    let scope = config.scope();
    let built: Vec<std::result::Result<RingCase, BuildFailure>> = corpus
        .specs
        .par_iter()
        .map(|spec| {
            Lab::build(spec, &config.build)
                .map(|lab| RingCase::new(lab.ring().spec_string().to_string(), lab))
                .map_err(|e| BuildFailure {
                    spec: spec.clone(),
                    error: e.to_string(),
                })
        })
        .collect();
    let mut cases = Vec::new();
    let mut build_failures = Vec::new();
    for b in built {
        match b {
            Ok(c) => cases.push(c),
            Err(f) => build_failures.push(f),
        }
    }
    let rings = cases.iter().map(|c| c.spec.clone()).collect();

    let jobs: Vec<(usize, usize)> = (0..theorems.len())
        .flat_map(|t| (0..cases.len()).map(move |c| (t, c)))
        .collect();
    let results: Vec<(Findings, Vec<Counterexample>, Duration)> = jobs
        .par_iter()
        .map(|&(t, c)| {
            let start = Instant::now();
            let (f, breaks) = run_case(theorems[t], &cases[c], scope);
            (f, breaks, start.elapsed())
        })
        .collect();

    let mut reports: Vec<TheoremReport> = theorems
        .iter()
        .map(|t| TheoremReport {
            id: t.id,
            domain: t.domain,
            status: Status::Pass,
            checked: 0,
            total_counterexamples: 0,
            counterexamples: Vec::new(),
            scope_breaks: Vec::new(),
            notes: Vec::new(),
            elapsed: Duration::ZERO,
        })
        .collect();
    for (&(t, _), (findings, breaks, elapsed)) in jobs.iter().zip(results) {
        let r = &mut reports[t];
        r.checked += findings.checked;
        r.elapsed += elapsed;
        r.total_counterexamples += findings.failures.len() as u64;
        let room = MAX_COUNTEREXAMPLES.saturating_sub(r.counterexamples.len());
        r.counterexamples
            .extend(findings.failures.into_iter().take(room));
        let room = MAX_COUNTEREXAMPLES.saturating_sub(r.scope_breaks.len());
        r.scope_breaks.extend(breaks.into_iter().take(room));
        merge_notes(&mut r.notes, findings.notes);
    }
    for r in &mut reports {
        r.status = if r.total_counterexamples > 0 {
            Status::Fail
        } else if !r.scope_breaks.is_empty() {
            Status::ScopeBreak
        } else {
            Status::Pass
        };
    }
    Ok(SuiteReport {
        scope,
        rings,
        build_failures,
        theorems: reports,
    })
}
