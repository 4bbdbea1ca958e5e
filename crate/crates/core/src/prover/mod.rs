//! A given-clause resolution prover with axiomatized equality, running a
//! set-of-support strategy.
//!
//! Clauses from the hypotheses and the equality axioms enter the usable
//! (active) set directly; only clauses descending from the negated goal are
//! ever selected for inference, so the axioms never breed among themselves.
//! With axioms consistent this keeps refutation completeness while making
//! equality problems tractable; a contradiction lying entirely inside the
//! hypotheses is found only if it is explicit at the clause level, which is
//! within the stated no-completeness-under-limits contract.
//!
//! Selection among supported clauses is lightest-first, where a clause's
//! weight is its total symbol count plus twice its inference depth (ties
//! FIFO on clause id); the depth penalty sinks small derived junk that
//! would otherwise starve the larger clauses a proof runs through. Every
//! fourth pick takes the oldest passive clause instead, as a fairness
//! backstop. New clauses pass tautology deletion and forward subsumption
//! before being kept; kept clauses are never deleted, so clause ids are
//! stable and every proof replays exactly.

mod equality;
mod trace;

pub use equality::{equality_axioms, ProblemSignature};
pub use trace::{replay, replay_report, ProofTrace, ReplayFailure, TraceRule, TraceStep};

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::time::Instant;

use crate::annotated::AgentId;
use crate::clause::{is_reserved_symbol, Clause, Clausifier};
use crate::formula::Formula;
use crate::term::Substitution;

/// A proof obligation: prove `goal` from `hypotheses`, on behalf of `owner`.
/// All formulas are taken under their implicit universal closure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sequent {
    pub hypotheses: Vec<Formula>,
    pub goal: Formula,
    pub owner: AgentId,
}

/// Search budgets. All fields must be positive; use
/// [`ResourceLimits::without_wall_clock`] in tests that need bit-for-bit
/// reproducibility regardless of machine speed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ResourceLimits {
    /// Maximum number of kept clauses.
    pub max_clauses: usize,
    /// Maximum inference-chain length from the inputs.
    pub max_depth: usize,
    /// Wall-clock budget in milliseconds.
    pub max_millis: u64,
}

impl Default for ResourceLimits {
    fn default() -> Self {
        ResourceLimits {
            max_clauses: 50_000,
            max_depth: 30,
            max_millis: 10_000,
        }
    }
}

impl ResourceLimits {
    pub fn without_wall_clock(self) -> Self {
        ResourceLimits {
            max_millis: u64::MAX,
            ..self
        }
    }

    fn wall_clock_enabled(&self) -> bool {
        self.max_millis != u64::MAX
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProofStatus {
    /// A refutation was found and recorded.
    Proved,
    /// The search space closed (or a clause/depth budget bound) without a
    /// proof; no claim of unprovability is made under finite limits.
    Exhausted,
    /// The wall-clock budget was hit.
    Timeout,
}

impl std::fmt::Display for ProofStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ProofStatus::Proved => write!(f, "proved"),
            ProofStatus::Exhausted => write!(f, "exhausted"),
            ProofStatus::Timeout => write!(f, "timeout"),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub generated: usize,
    pub kept: usize,
    pub depth: usize,
    pub elapsed_millis: u128,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofResult {
    pub status: ProofStatus,
    /// Present exactly when status is `Proved`.
    pub trace: Option<ProofTrace>,
    pub stats: SearchStats,
}

impl ProofResult {
    pub fn proved(&self) -> bool {
        self.status == ProofStatus::Proved
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ProverError {
    #[error("symbol {symbol} used with arities {first} and {second}")]
    ArityMismatch {
        symbol: String,
        first: usize,
        second: usize,
    },
    #[error("{0} is used both as a function and as a predicate")]
    SymbolKindClash(String),
    #[error("symbol {0} lies in the reserved namespace")]
    ReservedSymbol(String),
    #[error("resource limits must be positive")]
    InvalidLimits,
}

/// All binary resolvents of two clauses on complementary literal pairs,
/// with the most general unifier applied. The clauses are renamed apart
/// internally; inputs need not be.
pub fn resolve(c1: &Clause, c2: &Clause) -> Vec<Clause> {
    resolvents_of(c1, c2).into_iter().map(|(c, _)| c).collect()
}

/// All factors of a clause: results of unifying two same-sign literals.
pub fn factors(c: &Clause) -> Vec<Clause> {
    factors_of(c).into_iter().map(|(c, _)| c).collect()
}

pub(crate) fn resolvents_of(c1: &Clause, c2: &Clause) -> Vec<(Clause, Substitution)> {
    resolvents_prepared(&c1.rename_vars("L#"), &c2.rename_vars("R#"))
}

/// Resolution on clauses already renamed apart (left in the `L#`
/// namespace, right in `R#`).
fn resolvents_prepared(left: &Clause, right: &Clause) -> Vec<(Clause, Substitution)> {
    let mut out = Vec::new();
    for (i, l1) in left.literals().iter().enumerate() {
        for (j, l2) in right.literals().iter().enumerate() {
            if l1.positive == l2.positive {
                continue;
            }
            let mut s = Substitution::new();
            if l1.atom.unify_with(&l2.atom, &mut s) {
                let mut lits = Vec::with_capacity(left.len() + right.len() - 2);
                for (k, l) in left.literals().iter().enumerate() {
                    if k != i {
                        lits.push(l.apply(&s));
                    }
                }
                for (k, l) in right.literals().iter().enumerate() {
                    if k != j {
                        lits.push(l.apply(&s));
                    }
                }
                out.push((Clause::new(lits), s));
            }
        }
    }
    out
}

pub(crate) fn factors_of(c: &Clause) -> Vec<(Clause, Substitution)> {
    let base = c.rename_vars("L#");
    let lits = base.literals();
    let mut out = Vec::new();
    for i in 0..lits.len() {
        for j in (i + 1)..lits.len() {
            if lits[i].positive != lits[j].positive {
                continue;
            }
            let mut s = Substitution::new();
            if lits[i].atom.unify_with(&lits[j].atom, &mut s) {
                let merged: Vec<_> = lits.iter().map(|l| l.apply(&s)).collect();
                out.push((Clause::new(merged), s));
            }
        }
    }
    out
}

/// Clausal base of a sequent, produced deterministically with a shared
/// Skolem counter. Input clauses split into the hypothesis part and the
/// negated-goal part (the set of support); replay recomputes all of this
/// to check trace inputs.
pub(crate) struct ClauseBase {
    pub hypothesis_clauses: Vec<Clause>,
    pub goal_clauses: Vec<Clause>,
    pub equality_clauses: Vec<Clause>,
}

pub(crate) fn sequent_clause_base(s: &Sequent) -> ClauseBase {
    let mut clausifier = Clausifier::new();
    let mut hypothesis_clauses = Vec::new();
    for h in &s.hypotheses {
        hypothesis_clauses.extend(clausifier.clausify(h));
    }
    let neg_goal = Formula::not(s.goal.universal_closure());
    let goal_clauses = clausifier.clausify(&neg_goal);

    let sig = ProblemSignature::of(s.hypotheses.iter().chain(std::iter::once(&s.goal)));
    let mut equality_clauses = Vec::new();
    if sig.uses_equality {
        for axiom in equality_axioms(&sig) {
            equality_clauses.extend(clausifier.clausify(&axiom));
        }
    }
    ClauseBase {
        hypothesis_clauses,
        goal_clauses,
        equality_clauses,
    }
}

/// Arity and kind consistency over the sequent's symbols, checked before
/// any search is attempted.
fn validate_sequent(s: &Sequent) -> Result<(), ProverError> {
    let mut symbols: BTreeMap<String, (usize, u8)> = BTreeMap::new();
    for f in s.hypotheses.iter().chain(std::iter::once(&s.goal)) {
        let mut funcs = BTreeMap::new();
        let mut preds = BTreeMap::new();
        f.collect_signature(&mut funcs, &mut preds);
        for (sym, arity, kind) in funcs
            .into_iter()
            .map(|(s, a)| (s, a, 0u8))
            .chain(preds.into_iter().map(|(s, a)| (s, a, 1u8)))
        {
            if is_reserved_symbol(&sym) {
                return Err(ProverError::ReservedSymbol(sym));
            }
            match symbols.get(&sym) {
                Some(&(prev_arity, prev_kind)) => {
                    if prev_arity != arity {
                        return Err(ProverError::ArityMismatch {
                            symbol: sym,
                            first: prev_arity,
                            second: arity,
                        });
                    }
                    if prev_kind != kind {
                        return Err(ProverError::SymbolKindClash(sym));
                    }
                }
                None => {
                    symbols.insert(sym, (arity, kind));
                }
            }
        }
    }
    Ok(())
}

/// Bit set over hashed literal features: a subsuming clause's feature bits
/// must be a subset of the subsumed clause's. Besides the (sign, predicate)
/// pair, equality literals contribute the top function symbol of each
/// non-variable side, which is what discriminates clauses in problems where
/// every literal is an equality.
fn literal_mask(clause: &Clause) -> u64 {
    use crate::clause::Atom;
    use crate::term::Term;

    fn bit(sign: bool, tag: u8, sym: &str) -> u64 {
        let mut h: u64 = if sign { 0x9e3779b97f4a7c15 } else { 0x517cc1b727220a95 };
        h = h.wrapping_mul(0x100000001b3).wrapping_add(tag as u64);
        for b in sym.bytes() {
            h = h.wrapping_mul(0x100000001b3).wrapping_add(b as u64);
        }
        1 << (h % 64)
    }

    let mut mask = 0u64;
    for l in clause.literals() {
        match &l.atom {
            Atom::Pred(p, _) => mask |= bit(l.positive, 0, p),
            Atom::Eq(lhs, rhs) => {
                mask |= bit(l.positive, 1, "=");
                if let Term::Fun(f, _) = lhs {
                    mask |= bit(l.positive, 2, f);
                }
                if let Term::Fun(f, _) = rhs {
                    mask |= bit(l.positive, 3, f);
                }
            }
        }
    }
    mask
}

struct StoredClause {
    clause: Clause,
    /// The clause pre-renamed to the right-hand namespace, so resolution
    /// against it does not re-rename on every pair.
    renamed_right: Clause,
    rule: TraceRule,
    depth: usize,
    size: usize,
    /// Selection weight: size plus a depth penalty, so derived junk that
    /// stays small but keeps deepening sinks below mid-proof clauses.
    weight: usize,
    mask: u64,
}

struct Search {
    clauses: Vec<StoredClause>,
    /// Passive indices: by (weight, id) for lightest-first and by id for
    /// the periodic oldest-first pick.
    passive_by_weight: BTreeSet<(usize, usize)>,
    passive_by_age: BTreeSet<usize>,
    seen: HashSet<Clause>,
    active: Vec<usize>,
    generated: usize,
    max_depth_kept: usize,
}

enum Inserted {
    Kept,
    EmptyClause(usize),
    Discarded,
}

/// Every `AGE_INTERVAL`-th given-clause pick takes the oldest passive
/// clause instead of the smallest.
const AGE_INTERVAL: u64 = 4;

impl Search {
    fn new() -> Search {
        Search {
            clauses: Vec::new(),
            passive_by_weight: BTreeSet::new(),
            passive_by_age: BTreeSet::new(),
            seen: HashSet::new(),
            active: Vec::new(),
            generated: 0,
            max_depth_kept: 0,
        }
    }

    fn pop_given(&mut self, iteration: u64) -> Option<usize> {
        let id = if iteration % AGE_INTERVAL == AGE_INTERVAL - 1 {
            *self.passive_by_age.iter().next()?
        } else {
            self.passive_by_weight.iter().next()?.1
        };
        self.passive_by_age.remove(&id);
        self.passive_by_weight
            .remove(&(self.clauses[id].weight, id));
        Some(id)
    }

    /// Add a clause to the store: supported clauses go to the passive
    /// queue, unsupported ones (hypotheses, equality axioms) straight to
    /// the usable set.
    fn insert(
        &mut self,
        clause: Clause,
        rule: TraceRule,
        depth: usize,
        max_depth: usize,
        supported: bool,
    ) -> Inserted {
        self.generated += 1;
        if depth > max_depth {
            return Inserted::Discarded;
        }
        if clause.is_tautology() {
            return Inserted::Discarded;
        }
        if self.seen.contains(&clause) {
            return Inserted::Discarded;
        }
        // forward subsumption against every kept clause
        let len = clause.len();
        let size = clause.size();
        let mask = literal_mask(&clause);
        if !clause.is_empty() {
            for kept in &self.clauses {
                if kept.clause.len() <= len
                    && kept.size <= size
                    && kept.mask & !mask == 0
                    && kept.clause.subsumes(&clause)
                {
                    return Inserted::Discarded;
                }
            }
        }
        let id = self.clauses.len();
        let empty = clause.is_empty();
        let weight = size + 2 * depth;
        self.seen.insert(clause.clone());
        self.clauses.push(StoredClause {
            renamed_right: clause.rename_vars("R#"),
            clause,
            rule,
            depth,
            size,
            weight,
            mask,
        });
        self.max_depth_kept = self.max_depth_kept.max(depth);
        if supported {
            self.passive_by_weight.insert((weight, id));
            self.passive_by_age.insert(id);
        } else {
            self.active.push(id);
        }
        if empty {
            Inserted::EmptyClause(id)
        } else {
            Inserted::Kept
        }
    }

    fn extract_trace(&self, empty_id: usize) -> ProofTrace {
        // ancestors of the empty clause, in increasing id order
        let mut needed = vec![false; self.clauses.len()];
        let mut stack = vec![empty_id];
        while let Some(id) = stack.pop() {
            if needed[id] {
                continue;
            }
            needed[id] = true;
            stack.extend(self.clauses[id].rule.parents());
        }
        let mut renumber = BTreeMap::new();
        let mut steps = Vec::new();
        for (id, stored) in self.clauses.iter().enumerate() {
            if !needed[id] {
                continue;
            }
            let new_id = renumber.len() + 1;
            renumber.insert(id, new_id);
            let rule = match &stored.rule {
                TraceRule::Input => TraceRule::Input,
                TraceRule::EqualityAxiom => TraceRule::EqualityAxiom,
                TraceRule::Resolve {
                    left,
                    right,
                    unifier,
                } => TraceRule::Resolve {
                    left: renumber[left],
                    right: renumber[right],
                    unifier: unifier.clone(),
                },
                TraceRule::Factor { parent, unifier } => TraceRule::Factor {
                    parent: renumber[parent],
                    unifier: unifier.clone(),
                },
            };
            steps.push(TraceStep {
                id: new_id,
                rule,
                clause: stored.clause.clone(),
            });
        }
        ProofTrace { steps }
    }
}

/// Decide the sequent within the limits. `Proved` is returned only with a
/// recorded refutation of `hypotheses + equality axioms + ~goal`;
/// `Exhausted` and `Timeout` carry no claim about unprovability.
pub fn prove(s: &Sequent, limits: &ResourceLimits) -> Result<ProofResult, ProverError> {
    if limits.max_clauses == 0 || limits.max_depth == 0 || limits.max_millis == 0 {
        return Err(ProverError::InvalidLimits);
    }
    validate_sequent(s)?;
    let started = Instant::now();
    let base = sequent_clause_base(s);

    let mut search = Search::new();
    let mut proved: Option<usize> = None;
    for c in base.hypothesis_clauses {
        if let Inserted::EmptyClause(id) =
            search.insert(c, TraceRule::Input, 0, limits.max_depth, false)
        {
            proved = Some(id);
            break;
        }
    }
    if proved.is_none() {
        for c in base.equality_clauses {
            if let Inserted::EmptyClause(id) =
                search.insert(c, TraceRule::EqualityAxiom, 0, limits.max_depth, false)
            {
                proved = Some(id);
                break;
            }
        }
    }
    if proved.is_none() {
        for c in base.goal_clauses {
            if let Inserted::EmptyClause(id) =
                search.insert(c, TraceRule::Input, 0, limits.max_depth, true)
            {
                proved = Some(id);
                break;
            }
        }
    }

    let mut iteration: u64 = 0;
    let result = loop {
        if let Some(id) = proved {
            break finish(&search, started, ProofStatus::Proved, Some(id));
        }
        if limits.wall_clock_enabled() && started.elapsed().as_millis() >= limits.max_millis as u128
        {
            break finish(&search, started, ProofStatus::Timeout, None);
        }
        if search.clauses.len() >= limits.max_clauses {
            break finish(&search, started, ProofStatus::Exhausted, None);
        }
        let Some(given) = search.pop_given(iteration) else {
            break finish(&search, started, ProofStatus::Exhausted, None);
        };
        iteration += 1;
        search.active.push(given);
        let given_depth = search.clauses[given].depth;
        let given_clause = search.clauses[given].clause.clone();
        let given_left = given_clause.rename_vars("L#");

        'infer: {
            for (c, unifier) in factors_of(&given_clause) {
                if let Inserted::EmptyClause(id) = search.insert(
                    c,
                    TraceRule::Factor {
                        parent: given,
                        unifier,
                    },
                    given_depth + 1,
                    limits.max_depth,
                    true,
                ) {
                    proved = Some(id);
                    break 'infer;
                }
            }
            for idx in 0..search.active.len() {
                let other = search.active[idx];
                let depth = 1 + given_depth.max(search.clauses[other].depth);
                let mut results =
                    resolvents_prepared(&given_left, &search.clauses[other].renamed_right);
                for (c, unifier) in results.drain(..) {
                    if let Inserted::EmptyClause(id) = search.insert(
                        c,
                        TraceRule::Resolve {
                            left: given,
                            right: other,
                            unifier,
                        },
                        depth,
                        limits.max_depth,
                        true,
                    ) {
                        proved = Some(id);
                        break 'infer;
                    }
                }
            }
        }
    };

    Ok(result)
}

fn finish(search: &Search, started: Instant, status: ProofStatus, proved: Option<usize>) -> ProofResult {
    let stats = SearchStats {
        generated: search.generated,
        kept: search.clauses.len(),
        depth: search.max_depth_kept,
        elapsed_millis: started.elapsed().as_millis(),
    };
    match proved {
        Some(id) => ProofResult {
            status: ProofStatus::Proved,
            trace: Some(search.extract_trace(id)),
            stats,
        },
        None => ProofResult {
            status,
            trace: None,
            stats,
        },
    }
}


#[cfg(test)]
mod root_sequent_tests {
    use super::*;
    use crate::parse::parse_formula;

    #[test]
    fn proves_composed_root_sequent_with_factoring() {
        // the induction instance plus both lemmas entails the goal; the
        // refutation needs factoring on the instance's clause pair
        let s = Sequent {
            hypotheses: vec![
                parse_formula(
                    "(0 + 1 = 1 + 0 & forall x (x + 1 = 1 + x -> (x + 1) + 1 = 1 + (x + 1))) \
                     -> forall x (x + 1 = 1 + x)",
                )
                .unwrap(),
                parse_formula("0 + 1 = 1 + 0").unwrap(),
                parse_formula("forall x (x + 1 = 1 + x -> (x + 1) + 1 = 1 + (x + 1))").unwrap(),
            ],
            goal: parse_formula("forall x (x + 1 = 1 + x)").unwrap(),
            owner: AgentId::new("m"),
        };
        let limits = ResourceLimits::default().without_wall_clock();
        let r = prove(&s, &limits).unwrap();
        assert_eq!(r.status, ProofStatus::Proved);
        assert!(replay(r.trace.as_ref().unwrap(), &s));
    }
}
