//! First-order terms, substitutions and syntactic unification.
//!
//! Constants are zero-arity functions. Variable names and function symbols
//! are kept in separate lexical classes by the parser and validators; the
//! term representation itself distinguishes them structurally.

use std::collections::BTreeMap;
use std::fmt;

/// A first-order term: a variable or a function symbol applied to arguments.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Var(String),
    Fun(String, Vec<Term>),
}

impl Term {
    pub fn var(name: &str) -> Term {
        Term::Var(name.to_string())
    }

    pub fn fun(symbol: &str, args: Vec<Term>) -> Term {
        Term::Fun(symbol.to_string(), args)
    }

    pub fn constant(symbol: &str) -> Term {
        Term::Fun(symbol.to_string(), Vec::new())
    }

    /// True if `var` occurs anywhere in this term.
    pub fn occurs(&self, var: &str) -> bool {
        match self {
            Term::Var(v) => v == var,
            Term::Fun(_, args) => args.iter().any(|a| a.occurs(var)),
        }
    }

    /// All variable names in this term, in first-occurrence order.
    pub fn vars(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_vars(&mut out);
        out
    }

    pub(crate) fn collect_vars(&self, out: &mut Vec<String>) {
        match self {
            Term::Var(v) => {
                if !out.iter().any(|x| x == v) {
                    out.push(v.clone());
                }
            }
            Term::Fun(_, args) => {
                for a in args {
                    a.collect_vars(out);
                }
            }
        }
    }

    /// Collect every function symbol with its arity into `sig`.
    pub fn collect_symbols(&self, sig: &mut BTreeMap<String, usize>) {
        if let Term::Fun(f, args) = self {
            sig.insert(f.clone(), args.len());
            for a in args {
                a.collect_symbols(sig);
            }
        }
    }

    /// Number of symbol occurrences (variables and function symbols).
    pub fn size(&self) -> usize {
        match self {
            Term::Var(_) => 1,
            Term::Fun(_, args) => 1 + args.iter().map(Term::size).sum::<usize>(),
        }
    }

    fn is_binary_op(sym: &str) -> bool {
        sym == "+" || sym == "*"
    }

    fn precedence(&self) -> u8 {
        match self {
            Term::Fun(f, args) if args.len() == 2 && f == "+" => 1,
            Term::Fun(f, args) if args.len() == 2 && f == "*" => 2,
            _ => 3,
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(v) => write!(f, "{v}"),
            Term::Fun(sym, args) if args.len() == 2 && Term::is_binary_op(sym) => {
                let prec = self.precedence();
                let left = &args[0];
                let right = &args[1];
                // Left-associative: parenthesize the right child at equal precedence.
                if left.precedence() < prec {
                    write!(f, "({left})")?;
                } else {
                    write!(f, "{left}")?;
                }
                write!(f, " {sym} ")?;
                if right.precedence() <= prec {
                    write!(f, "({right})")?;
                } else {
                    write!(f, "{right}")?;
                }
                Ok(())
            }
            Term::Fun(sym, args) => {
                if args.is_empty() {
                    write!(f, "{sym}")
                } else {
                    write!(f, "{sym}(")?;
                    for (i, a) in args.iter().enumerate() {
                        if i > 0 {
                            write!(f, ", ")?;
                        }
                        write!(f, "{a}")?;
                    }
                    write!(f, ")")
                }
            }
        }
    }
}

/// An idempotent substitution from variable names to terms.
///
/// Invariants kept by construction: no binding maps a variable to a term
/// containing that variable, and no range term mentions a bound variable,
/// so applying a substitution twice equals applying it once.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Substitution {
    map: BTreeMap<String, Term>,
}

impl Substitution {
    pub fn new() -> Self {
        Substitution::default()
    }

    /// Build a substitution from pairs, enforcing the idempotence invariant.
    /// Returns `None` if any binding fails the occurs check against the
    /// already-resolved set.
    pub fn from_pairs<I: IntoIterator<Item = (String, Term)>>(pairs: I) -> Option<Self> {
        let mut s = Substitution::new();
        for (v, t) in pairs {
            if !s.bind(&v, t) {
                return None;
            }
        }
        Some(s)
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn get(&self, var: &str) -> Option<&Term> {
        self.map.get(var)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&String, &Term)> {
        self.map.iter()
    }

    /// Extend with `var -> term`, resolving through existing bindings first
    /// and then substituting into existing ranges so the result stays
    /// idempotent. Returns false on an occurs-check violation.
    pub fn bind(&mut self, var: &str, term: Term) -> bool {
        let resolved = self.apply(&term);
        if let Term::Var(v) = &resolved {
            if v == var {
                return true; // x -> x is a no-op
            }
        }
        if resolved.occurs(var) {
            return false;
        }
        let single = {
            let mut m = BTreeMap::new();
            m.insert(var.to_string(), resolved.clone());
            Substitution { map: m }
        };
        for t in self.map.values_mut() {
            *t = single.apply(t);
        }
        self.map.insert(var.to_string(), resolved);
        true
    }

    /// Apply to a term.
    pub fn apply(&self, term: &Term) -> Term {
        match term {
            Term::Var(v) => self.map.get(v).cloned().unwrap_or_else(|| term.clone()),
            Term::Fun(f, args) => {
                Term::Fun(f.clone(), args.iter().map(|a| self.apply(a)).collect())
            }
        }
    }
}

impl fmt::Display for Substitution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (v, t)) in self.map.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v} -> {t}")?;
        }
        write!(f, "}}")
    }
}

/// Most general unifier of two terms, or `None` if they do not unify
/// (symbol clash, arity clash or occurs-check failure).
pub fn unify(t1: &Term, t2: &Term) -> Option<Substitution> {
    let mut s = Substitution::new();
    if unify_into(t1, t2, &mut s) {
        Some(s)
    } else {
        None
    }
}

/// Unify two argument lists pairwise under one substitution.
pub fn unify_all(ts1: &[Term], ts2: &[Term], s: &mut Substitution) -> bool {
    if ts1.len() != ts2.len() {
        return false;
    }
    ts1.iter().zip(ts2.iter()).all(|(a, b)| unify_into(a, b, s))
}

fn unify_into(t1: &Term, t2: &Term, s: &mut Substitution) -> bool {
    let a = s.apply(t1);
    let b = s.apply(t2);
    match (&a, &b) {
        (Term::Var(x), Term::Var(y)) if x == y => true,
        (Term::Var(x), _) => s.bind(x, b.clone()),
        (_, Term::Var(y)) => s.bind(y, a.clone()),
        (Term::Fun(f, fa), Term::Fun(g, ga)) => f == g && unify_all(fa, ga, s),
    }
}
