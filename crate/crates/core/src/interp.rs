//! Finite interpretations and ground evaluation.
//!
//! This is the semantic side of the toolkit: classical truth over a finite
//! domain, used as an independent source of truth when checking the
//! syntactic machinery (normal forms, clausification, proof search).
//! Equality is always interpreted as identity of domain elements.

use std::collections::BTreeMap;
use std::fmt;

use crate::formula::Formula;
use crate::term::Term;

/// Signature entry kinds for enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum SymbolKind {
    Function,
    Predicate,
}

/// A problem signature: symbol name, arity, kind. Sorted for determinism.
pub type Signature = Vec<(String, usize, SymbolKind)>;

/// Build the signature of a set of formulas.
pub fn signature_of<'a>(formulas: impl IntoIterator<Item = &'a Formula>) -> Signature {
    let mut funcs = BTreeMap::new();
    let mut preds = BTreeMap::new();
    for f in formulas {
        f.collect_signature(&mut funcs, &mut preds);
    }
    let mut sig: Signature = funcs
        .into_iter()
        .map(|(s, a)| (s, a, SymbolKind::Function))
        .chain(preds.into_iter().map(|(s, a)| (s, a, SymbolKind::Predicate)))
        .collect();
    sig.sort();
    sig
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EvalError {
    UnknownFunction(String, usize),
    UnknownPredicate(String, usize),
    UnboundVariable(String),
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalError::UnknownFunction(s, a) => write!(f, "function {s}/{a} not interpreted"),
            EvalError::UnknownPredicate(s, a) => write!(f, "predicate {s}/{a} not interpreted"),
            EvalError::UnboundVariable(v) => write!(f, "variable {v} has no value"),
        }
    }
}

impl std::error::Error for EvalError {}

/// A finite interpretation: a domain `{0, .., domain_size-1}`, total
/// function tables and predicate tables. Tables are indexed by mixed-radix
/// argument tuples (first argument most significant).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interpretation {
    pub domain_size: usize,
    funcs: BTreeMap<(String, usize), Vec<usize>>,
    preds: BTreeMap<(String, usize), Vec<bool>>,
}

impl Interpretation {
    pub fn new(domain_size: usize) -> Self {
        assert!(domain_size > 0, "domain must be nonempty");
        Interpretation {
            domain_size,
            funcs: BTreeMap::new(),
            preds: BTreeMap::new(),
        }
    }

    /// Install a function table; `table.len()` must be `domain_size^arity`.
    pub fn set_function(&mut self, name: &str, arity: usize, table: Vec<usize>) {
        assert_eq!(table.len(), self.domain_size.pow(arity as u32));
        assert!(table.iter().all(|&v| v < self.domain_size));
        self.funcs.insert((name.to_string(), arity), table);
    }

    pub fn set_constant(&mut self, name: &str, value: usize) {
        self.set_function(name, 0, vec![value]);
    }

    /// Install a predicate table; `table.len()` must be `domain_size^arity`.
    pub fn set_predicate(&mut self, name: &str, arity: usize, table: Vec<bool>) {
        assert_eq!(table.len(), self.domain_size.pow(arity as u32));
        self.preds.insert((name.to_string(), arity), table);
    }

    fn index(&self, args: &[usize]) -> usize {
        let mut idx = 0;
        for &a in args {
            idx = idx * self.domain_size + a;
        }
        idx
    }

    fn eval_term(&self, t: &Term, env: &[(String, usize)]) -> Result<usize, EvalError> {
        match t {
            Term::Var(v) => env
                .iter()
                .rev()
                .find(|(name, _)| name == v)
                .map(|(_, val)| *val)
                .ok_or_else(|| EvalError::UnboundVariable(v.clone())),
            Term::Fun(f, args) => {
                let mut vals = Vec::with_capacity(args.len());
                for a in args {
                    vals.push(self.eval_term(a, env)?);
                }
                let table = self
                    .funcs
                    .get(&(f.clone(), args.len()))
                    .ok_or_else(|| EvalError::UnknownFunction(f.clone(), args.len()))?;
                Ok(table[self.index(&vals)])
            }
        }
    }

    fn eval_inner(&self, f: &Formula, env: &mut Vec<(String, usize)>) -> Result<bool, EvalError> {
        match f {
            Formula::Atom(p, args) => {
                let mut vals = Vec::with_capacity(args.len());
                for a in args {
                    vals.push(self.eval_term(a, env)?);
                }
                let table = self
                    .preds
                    .get(&(p.clone(), args.len()))
                    .ok_or_else(|| EvalError::UnknownPredicate(p.clone(), args.len()))?;
                Ok(table[self.index(&vals)])
            }
            Formula::Eq(l, r) => Ok(self.eval_term(l, env)? == self.eval_term(r, env)?),
            Formula::Top => Ok(true),
            Formula::Bottom => Ok(false),
            Formula::Not(g) => Ok(!self.eval_inner(g, env)?),
            Formula::And(a, b) => Ok(self.eval_inner(a, env)? && self.eval_inner(b, env)?),
            Formula::Or(a, b) => Ok(self.eval_inner(a, env)? || self.eval_inner(b, env)?),
            Formula::Implies(a, b) => Ok(!self.eval_inner(a, env)? || self.eval_inner(b, env)?),
            Formula::Forall(v, g) => {
                for d in 0..self.domain_size {
                    env.push((v.clone(), d));
                    let holds = self.eval_inner(g, env)?;
                    env.pop();
                    if !holds {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            Formula::Exists(v, g) => {
                for d in 0..self.domain_size {
                    env.push((v.clone(), d));
                    let holds = self.eval_inner(g, env)?;
                    env.pop();
                    if holds {
                        return Ok(true);
                    }
                }
                Ok(false)
            }
        }
    }
}

/// Classical truth of `f` under `interp`. Free variables are treated as
/// universally quantified (the implicit closure). Formulas mentioning
/// symbols absent from the interpretation are rejected.
pub fn ground_eval(f: &Formula, interp: &Interpretation) -> Result<bool, EvalError> {
    let closed = f.universal_closure();
    interp.eval_inner(&closed, &mut Vec::new())
}

/// Enumerate every interpretation of `sig` over a domain of the given size,
/// invoking `visit` on each. `visit` returns false to stop early; the
/// function returns false if enumeration was stopped.
pub fn for_each_interpretation(
    sig: &Signature,
    domain_size: usize,
    mut visit: impl FnMut(&Interpretation) -> bool,
) -> bool {
    // Odometer over all tables. Functions count in base `domain_size`,
    // predicates in base 2.
    let mut tables: Vec<(String, usize, SymbolKind, Vec<usize>)> = sig
        .iter()
        .map(|(name, arity, kind)| {
            let len = domain_size.pow(*arity as u32);
            (name.clone(), *arity, *kind, vec![0usize; len])
        })
        .collect();

    loop {
        let mut interp = Interpretation::new(domain_size);
        for (name, arity, kind, table) in &tables {
            match kind {
                SymbolKind::Function => interp.set_function(name, *arity, table.clone()),
                SymbolKind::Predicate => {
                    interp.set_predicate(name, *arity, table.iter().map(|&v| v == 1).collect())
                }
            }
        }
        if !visit(&interp) {
            return false;
        }
        // increment odometer
        let mut done = true;
        'outer: for (_, _, kind, table) in tables.iter_mut() {
            let base = match kind {
                SymbolKind::Function => domain_size,
                SymbolKind::Predicate => 2,
            };
            for cell in table.iter_mut() {
                *cell += 1;
                if *cell < base {
                    done = false;
                    break 'outer;
                }
                *cell = 0;
            }
        }
        if done {
            return true;
        }
    }
}

/// Number of interpretations of `sig` at the given domain size, used to keep
/// brute-force sweeps within budget.
pub fn interpretation_count(sig: &Signature, domain_size: usize) -> u128 {
    let mut count: u128 = 1;
    for (_, arity, kind) in sig {
        let cells = (domain_size as u128).pow(*arity as u32);
        let base = match kind {
            SymbolKind::Function => domain_size as u128,
            SymbolKind::Predicate => 2,
        };
        count = count.saturating_mul(base.saturating_pow(cells.min(64) as u32));
        if count > u128::MAX / 2 {
            return u128::MAX;
        }
    }
    count
}

/// Search for a model of `hypotheses` in which `goal` is false, over all
/// interpretations of the combined signature at the given domain size.
pub fn find_countermodel(
    hypotheses: &[Formula],
    goal: &Formula,
    domain_size: usize,
) -> Option<Interpretation> {
    let sig = signature_of(hypotheses.iter().chain(std::iter::once(goal)));
    let mut found = None;
    for_each_interpretation(&sig, domain_size, |m| {
        let sat = hypotheses
            .iter()
            .all(|h| ground_eval(h, m).unwrap_or(false));
        if sat && !ground_eval(goal, m).unwrap_or(true) {
            found = Some(m.clone());
            return false;
        }
        true
    });
    found
}

/// True when every model of `hypotheses` at every domain size in `sizes`
/// satisfies `goal`.
pub fn entails_finitely(hypotheses: &[Formula], goal: &Formula, sizes: &[usize]) -> bool {
    sizes
        .iter()
        .all(|&n| find_countermodel(hypotheses, goal, n).is_none())
}
