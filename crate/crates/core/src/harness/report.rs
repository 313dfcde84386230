use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::harness::corpus::{Corpus, CorpusDefect};
use crate::harness::statements::{lookup, Statement, StatementKind};
use crate::harness::subject::Subject;
use crate::io::{emit_graph6, to_json};
use crate::limits::Limits;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    /// graph6 when simple, JSON otherwise (see `format`).
    pub graph: String,
    pub format: String,
    pub provenance: String,
    pub failed_check: String,
}

/// A graph whose premise or conclusion ran out of budget; it is excluded
/// from the premise and conclusion counts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BudgetRecord {
    pub provenance: String,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub statement: String,
    pub kind: StatementKind,
    pub claim: String,
    pub corpus: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub scanned: usize,
    pub premise_matched: usize,
    pub conclusion_held: usize,
    pub counterexamples: Vec<Counterexample>,
    pub budget_exceeded: Vec<BudgetRecord>,
    pub defects: Vec<CorpusDefect>,
    pub verdict: String,
    pub wall_ms: u64,
}

impl VerificationReport {
    /// `scanned >= premise_matched >= conclusion_held` and one
    /// counterexample per failed premise match.
    pub fn is_consistent(&self) -> bool {
        self.scanned >= self.premise_matched
            && self.premise_matched >= self.conclusion_held
            && self.counterexamples.len() == self.premise_matched - self.conclusion_held
    }

    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }

    /// JSON with the wall-time zeroed, for byte-level comparisons.
    pub fn to_json_without_time(&self) -> String {
        let mut r = self.clone();
        r.wall_ms = 0;
        serde_json::to_string(&r).expect("plain data serializes")
    }
}

enum Outcome {
    Vacuous,
    Held,
    Failed(String),
    Budget(String),
}

fn evaluate(st: &Statement, s: &Subject) -> Outcome {
    match st.premise(s) {
        Ok(false) => Outcome::Vacuous,
        Err(e) => Outcome::Budget(format!("premise: {e}")),
        Ok(true) => match st.conclusion(s) {
            Ok(None) => Outcome::Held,
            Ok(Some(check)) => Outcome::Failed(check),
            Err(e) => Outcome::Budget(format!("conclusion: {e}")),
        },
    }
}

fn verdict(kind: StatementKind, matched: usize, failures: usize, budget: usize) -> String {
    let base = if failures > 0 {
        format!("{failures} counterexample(s) found")
    } else if matched == 0 {
        "vacuous: no graph in the corpus meets the premise".to_string()
    } else {
        match kind {
            StatementKind::Theorem => format!("verified on corpus ({matched} premise matches)"),
            StatementKind::Conjecture => format!("no counterexample in corpus ({matched} premise matches)"),
        }
    };
    if budget > 0 {
        format!("{base}; {budget} graph(s) over budget")
    } else {
        base
    }
}

fn run(st: &Statement, corpus: &Corpus, limits: &Limits) -> VerificationReport {
    let start = Instant::now();
    let outcomes: Vec<Outcome> = corpus
        .items
        .par_iter()
        .map(|item| evaluate(st, &Subject::new(&item.graph, limits)))
        .collect();
    let mut premise_matched = 0;
    let mut conclusion_held = 0;
    let mut counterexamples = Vec::new();
    let mut budget_exceeded = Vec::new();
    for (item, outcome) in corpus.items.iter().zip(outcomes) {
        match outcome {
            Outcome::Vacuous => {}
            Outcome::Held => {
                premise_matched += 1;
                conclusion_held += 1;
            }
            Outcome::Failed(check) => {
                premise_matched += 1;
                let (graph, format) = match emit_graph6(&item.graph) {
                    Ok(line) => (line, "graph6"),
                    Err(_) => (to_json(&item.graph), "json"),
                };
                counterexamples.push(Counterexample {
                    graph,
                    format: format.to_string(),
                    provenance: item.provenance.clone(),
                    failed_check: check,
                });
            }
            Outcome::Budget(reason) => budget_exceeded.push(BudgetRecord {
                provenance: item.provenance.clone(),
                reason,
            }),
        }
    }
    VerificationReport {
        statement: st.id.to_string(),
        kind: st.kind,
        claim: st.claim.to_string(),
        corpus: corpus.descriptor.clone(),
        seed: corpus.seed,
        scanned: corpus.items.len(),
        premise_matched,
        conclusion_held,
        verdict: verdict(st.kind, premise_matched, counterexamples.len(), budget_exceeded.len()),
        counterexamples,
        budget_exceeded,
        defects: corpus.defects.clone(),
        wall_ms: start.elapsed().as_millis() as u64,
    }
}

/// Evaluates the premise, then (only on matches) the conclusion, on every
/// corpus graph. Results are assembled in corpus order.
pub fn verify_statement(id: &str, corpus: &Corpus, limits: &Limits) -> Result<VerificationReport> {
    Ok(run(lookup(id)?, corpus, limits))
}

/// [`verify_statement`] restricted to the conjectures.
pub fn scan_conjecture(id: &str, corpus: &Corpus, limits: &Limits) -> Result<VerificationReport> {
    let st = lookup(id)?;
    if st.kind != StatementKind::Conjecture {
        return Err(Error::InvalidParameter(format!("`{id}` is not a conjecture")));
    }
    Ok(run(st, corpus, limits))
}
