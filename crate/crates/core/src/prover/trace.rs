//! Replayable proof traces.
//!
//! A trace is the extracted ancestry of the empty clause: base clauses
//! (inputs and equality axioms) plus resolution and factoring steps.
//! Replay re-derives every step from its recorded parents using the same
//! inference functions and checks the base clauses against a fresh
//! clausification of the sequent, so a tampered trace fails.

use std::fmt::Write as _;

use crate::clause::Clause;
use crate::term::Substitution;

use super::{factors_of, resolvents_of, sequent_clause_base, Sequent};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TraceRule {
    /// A clause of the hypotheses or the negated goal.
    Input,
    /// A clause of the generated equality axioms.
    EqualityAxiom,
    /// Binary resolvent of two earlier steps.
    Resolve {
        left: usize,
        right: usize,
        unifier: Substitution,
    },
    /// Factor of an earlier step.
    Factor { parent: usize, unifier: Substitution },
}

impl TraceRule {
    pub fn parents(&self) -> Vec<usize> {
        match self {
            TraceRule::Input | TraceRule::EqualityAxiom => vec![],
            TraceRule::Resolve { left, right, .. } => vec![*left, *right],
            TraceRule::Factor { parent, .. } => vec![*parent],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub id: usize,
    pub rule: TraceRule,
    pub clause: Clause,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ProofTrace {
    pub steps: Vec<TraceStep>,
}

impl ProofTrace {
    /// Line-oriented text form: `id rule parents unifier | clause`,
    /// with `-` for an absent field and `[]` for the empty clause.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for step in &self.steps {
            let (rule, parents, unifier) = match &step.rule {
                TraceRule::Input => ("input".to_string(), "-".to_string(), "-".to_string()),
                TraceRule::EqualityAxiom => {
                    ("eq-axiom".to_string(), "-".to_string(), "-".to_string())
                }
                TraceRule::Resolve {
                    left,
                    right,
                    unifier,
                } => (
                    "resolve".to_string(),
                    format!("{left},{right}"),
                    unifier.to_string(),
                ),
                TraceRule::Factor { parent, unifier } => {
                    ("factor".to_string(), parent.to_string(), unifier.to_string())
                }
            };
            let _ = writeln!(out, "{} {} {} {} | {}", step.id, rule, parents, unifier, step.clause);
        }
        out
    }
}

/// Why a replay failed, for diagnostics.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ReplayFailure {
    #[error("trace is empty")]
    EmptyTrace,
    #[error("step {id}: clause is not among the sequent's input clauses")]
    NotAnInput { id: usize },
    #[error("step {id}: clause is not among the generated equality axioms")]
    NotAnEqualityAxiom { id: usize },
    #[error("step {id}: parent {parent} does not precede it")]
    MissingParent { id: usize, parent: usize },
    #[error("step {id}: recorded clause is not derivable from its parents")]
    NotDerivable { id: usize },
    #[error("final step does not derive the empty clause")]
    NoEmptyClause,
    #[error("step ids must be strictly increasing at step {id}")]
    UnorderedIds { id: usize },
}

/// Re-derive every step of `trace` against `sequent`. Returns the first
/// failure, if any.
pub fn replay_report(trace: &ProofTrace, sequent: &Sequent) -> Result<(), ReplayFailure> {
    if trace.steps.is_empty() {
        return Err(ReplayFailure::EmptyTrace);
    }
    let base = sequent_clause_base(sequent);
    let inputs: Vec<_> = base
        .hypothesis_clauses
        .iter()
        .chain(base.goal_clauses.iter())
        .cloned()
        .collect();
    let eqs = base.equality_clauses;
    let mut derived: std::collections::BTreeMap<usize, &Clause> = std::collections::BTreeMap::new();
    let mut last_id = 0usize;
    for step in &trace.steps {
        if step.id <= last_id {
            return Err(ReplayFailure::UnorderedIds { id: step.id });
        }
        last_id = step.id;
        match &step.rule {
            TraceRule::Input => {
                if !inputs.contains(&step.clause) {
                    return Err(ReplayFailure::NotAnInput { id: step.id });
                }
            }
            TraceRule::EqualityAxiom => {
                if !eqs.contains(&step.clause) {
                    return Err(ReplayFailure::NotAnEqualityAxiom { id: step.id });
                }
            }
            TraceRule::Resolve { left, right, .. } => {
                let (Some(l), Some(r)) = (derived.get(left), derived.get(right)) else {
                    let parent = if derived.contains_key(left) { *right } else { *left };
                    return Err(ReplayFailure::MissingParent { id: step.id, parent });
                };
                let all = resolvents_of(l, r);
                if !all.iter().any(|(c, _)| c == &step.clause) {
                    return Err(ReplayFailure::NotDerivable { id: step.id });
                }
            }
            TraceRule::Factor { parent, .. } => {
                let Some(p) = derived.get(parent) else {
                    return Err(ReplayFailure::MissingParent {
                        id: step.id,
                        parent: *parent,
                    });
                };
                let all = factors_of(p);
                if !all.iter().any(|(c, _)| c == &step.clause) {
                    return Err(ReplayFailure::NotDerivable { id: step.id });
                }
            }
        }
        derived.insert(step.id, &step.clause);
    }
    if !trace.steps.last().unwrap().clause.is_empty() {
        return Err(ReplayFailure::NoEmptyClause);
    }
    Ok(())
}

/// True iff every step re-derives its recorded clause and the final clause
/// is empty.
pub fn replay(trace: &ProofTrace, sequent: &Sequent) -> bool {
    replay_report(trace, sequent).is_ok()
}
