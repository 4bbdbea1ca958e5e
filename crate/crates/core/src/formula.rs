//! First-order formulas over [`Term`]s: construction, capture-avoiding
//! substitution, negation normal form and canonical text rendering.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::term::{Substitution, Term};

/// A first-order formula. `Top` and `Bottom` are the only nullary
/// connectives; equality is its own node rather than a binary atom.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Atom(String, Vec<Term>),
    Eq(Term, Term),
    Top,
    Bottom,
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Forall(String, Box<Formula>),
    Exists(String, Box<Formula>),
}

impl Formula {
    pub fn atom(pred: &str, args: Vec<Term>) -> Formula {
        Formula::Atom(pred.to_string(), args)
    }

    pub fn eq(lhs: Term, rhs: Term) -> Formula {
        Formula::Eq(lhs, rhs)
    }

    pub fn not(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn implies(a: Formula, b: Formula) -> Formula {
        Formula::Implies(Box::new(a), Box::new(b))
    }

    pub fn forall(var: &str, f: Formula) -> Formula {
        Formula::Forall(var.to_string(), Box::new(f))
    }

    pub fn exists(var: &str, f: Formula) -> Formula {
        Formula::Exists(var.to_string(), Box::new(f))
    }

    /// Free variables in first-occurrence order.
    pub fn free_vars(&self) -> Vec<String> {
        let mut out = Vec::new();
        let mut bound = Vec::new();
        self.collect_free(&mut bound, &mut out);
        out
    }

    fn collect_free(&self, bound: &mut Vec<String>, out: &mut Vec<String>) {
        match self {
            Formula::Atom(_, args) => {
                for t in args {
                    collect_free_term(t, bound, out);
                }
            }
            Formula::Eq(l, r) => {
                collect_free_term(l, bound, out);
                collect_free_term(r, bound, out);
            }
            Formula::Top | Formula::Bottom => {}
            Formula::Not(f) => f.collect_free(bound, out),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.collect_free(bound, out);
                b.collect_free(bound, out);
            }
            Formula::Forall(v, f) | Formula::Exists(v, f) => {
                bound.push(v.clone());
                f.collect_free(bound, out);
                bound.pop();
            }
        }
    }

    /// Every variable name occurring anywhere, bound or free.
    pub fn all_var_names(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.visit_terms(&mut |t| {
            for v in t.vars() {
                out.insert(v);
            }
        });
        self.visit_binders(&mut |v| {
            out.insert(v.to_string());
        });
        out
    }

    pub fn visit_terms(&self, f: &mut impl FnMut(&Term)) {
        match self {
            Formula::Atom(_, args) => args.iter().for_each(&mut *f),
            Formula::Eq(l, r) => {
                f(l);
                f(r);
            }
            Formula::Top | Formula::Bottom => {}
            Formula::Not(g) => g.visit_terms(f),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.visit_terms(f);
                b.visit_terms(f);
            }
            Formula::Forall(_, g) | Formula::Exists(_, g) => g.visit_terms(f),
        }
    }

    fn visit_binders(&self, f: &mut impl FnMut(&str)) {
        match self {
            Formula::Not(g) => g.visit_binders(f),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.visit_binders(f);
                b.visit_binders(f);
            }
            Formula::Forall(v, g) | Formula::Exists(v, g) => {
                f(v);
                g.visit_binders(f);
            }
            _ => {}
        }
    }

    /// Function symbols (with arity) and predicate symbols (with arity).
    /// Equality is not listed as a predicate; it is tracked by callers.
    pub fn collect_signature(&self, funcs: &mut BTreeMap<String, usize>, preds: &mut BTreeMap<String, usize>) {
        match self {
            Formula::Atom(p, args) => {
                preds.insert(p.clone(), args.len());
                for t in args {
                    t.collect_symbols(funcs);
                }
            }
            Formula::Eq(l, r) => {
                l.collect_symbols(funcs);
                r.collect_symbols(funcs);
            }
            Formula::Top | Formula::Bottom => {}
            Formula::Not(f) => f.collect_signature(funcs, preds),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.collect_signature(funcs, preds);
                b.collect_signature(funcs, preds);
            }
            Formula::Forall(_, f) | Formula::Exists(_, f) => f.collect_signature(funcs, preds),
        }
    }

    /// True if the formula mentions the equality predicate.
    pub fn mentions_equality(&self) -> bool {
        match self {
            Formula::Eq(_, _) => true,
            Formula::Atom(_, _) | Formula::Top | Formula::Bottom => false,
            Formula::Not(f) => f.mentions_equality(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.mentions_equality() || b.mentions_equality()
            }
            Formula::Forall(_, f) | Formula::Exists(_, f) => f.mentions_equality(),
        }
    }

    /// Universal closure over the free variables, in first-occurrence order.
    pub fn universal_closure(&self) -> Formula {
        let mut f = self.clone();
        for v in self.free_vars().into_iter().rev() {
            f = Formula::Forall(v, Box::new(f));
        }
        f
    }

    /// Negation normal form: implications eliminated first, then negation
    /// pushed to atoms and equalities, with `~Top`/`~Bottom` simplified away.
    pub fn nnf(&self) -> Formula {
        self.nnf_signed(true)
    }

    fn nnf_signed(&self, positive: bool) -> Formula {
        match self {
            Formula::Atom(_, _) | Formula::Eq(_, _) => {
                if positive {
                    self.clone()
                } else {
                    Formula::not(self.clone())
                }
            }
            Formula::Top => {
                if positive {
                    Formula::Top
                } else {
                    Formula::Bottom
                }
            }
            Formula::Bottom => {
                if positive {
                    Formula::Bottom
                } else {
                    Formula::Top
                }
            }
            Formula::Not(f) => f.nnf_signed(!positive),
            Formula::And(a, b) => {
                let (l, r) = (a.nnf_signed(positive), b.nnf_signed(positive));
                if positive {
                    Formula::and(l, r)
                } else {
                    Formula::or(l, r)
                }
            }
            Formula::Or(a, b) => {
                let (l, r) = (a.nnf_signed(positive), b.nnf_signed(positive));
                if positive {
                    Formula::or(l, r)
                } else {
                    Formula::and(l, r)
                }
            }
            // A -> B reads as ~A \/ B.
            Formula::Implies(a, b) => {
                let (l, r) = (a.nnf_signed(!positive), b.nnf_signed(positive));
                if positive {
                    Formula::or(l, r)
                } else {
                    Formula::and(l, r)
                }
            }
            Formula::Forall(v, f) => {
                let inner = f.nnf_signed(positive);
                if positive {
                    Formula::Forall(v.clone(), Box::new(inner))
                } else {
                    Formula::Exists(v.clone(), Box::new(inner))
                }
            }
            Formula::Exists(v, f) => {
                let inner = f.nnf_signed(positive);
                if positive {
                    Formula::Exists(v.clone(), Box::new(inner))
                } else {
                    Formula::Forall(v.clone(), Box::new(inner))
                }
            }
        }
    }

    /// Capture-avoiding substitution of free variables. Bound variables are
    /// renamed (with primes) whenever a binder would capture a variable
    /// introduced by the substitution; the result shares no bound-variable
    /// name with the range of `subst`.
    pub fn substitute(&self, subst: &Substitution) -> Formula {
        let mut avoid: BTreeSet<String> = self.all_var_names();
        for (_, t) in subst.iter() {
            for v in t.vars() {
                avoid.insert(v);
            }
        }
        self.substitute_inner(subst, &mut avoid)
    }

    fn substitute_inner(&self, subst: &Substitution, avoid: &mut BTreeSet<String>) -> Formula {
        match self {
            Formula::Atom(p, args) => {
                Formula::Atom(p.clone(), args.iter().map(|t| subst.apply(t)).collect())
            }
            Formula::Eq(l, r) => Formula::Eq(subst.apply(l), subst.apply(r)),
            Formula::Top => Formula::Top,
            Formula::Bottom => Formula::Bottom,
            Formula::Not(f) => Formula::not(f.substitute_inner(subst, avoid)),
            Formula::And(a, b) => Formula::and(
                a.substitute_inner(subst, avoid),
                b.substitute_inner(subst, avoid),
            ),
            Formula::Or(a, b) => Formula::or(
                a.substitute_inner(subst, avoid),
                b.substitute_inner(subst, avoid),
            ),
            Formula::Implies(a, b) => Formula::implies(
                a.substitute_inner(subst, avoid),
                b.substitute_inner(subst, avoid),
            ),
            Formula::Forall(v, f) | Formula::Exists(v, f) => {
                // Drop any binding of the bound variable itself; rename the
                // binder when a range term would be captured.
                let mut inner_subst = Substitution::new();
                let mut range_vars: BTreeSet<String> = BTreeSet::new();
                let mut relevant = false;
                let inner_free = f.free_vars();
                for (sv, st) in subst.iter() {
                    if sv != v && inner_free.contains(sv) {
                        relevant = true;
                        assert!(inner_subst.bind(sv, st.clone()));
                        for tv in st.vars() {
                            range_vars.insert(tv);
                        }
                    }
                }
                let needs_rename = relevant && range_vars.contains(v);
                let (new_v, body) = if needs_rename {
                    let fresh = fresh_name(v, avoid);
                    avoid.insert(fresh.clone());
                    let mut rename = Substitution::new();
                    assert!(rename.bind(v, Term::Var(fresh.clone())));
                    let renamed = f.substitute_inner(&rename, avoid);
                    (fresh, renamed.substitute_inner(&inner_subst, avoid))
                } else {
                    (v.clone(), f.substitute_inner(&inner_subst, avoid))
                };
                match self {
                    Formula::Forall(_, _) => Formula::Forall(new_v, Box::new(body)),
                    _ => Formula::Exists(new_v, Box::new(body)),
                }
            }
        }
    }

    /// Rename every bound variable to a canonical name (`b0`, `b1`, ... in
    /// binder-traversal order), so alpha-equivalent formulas become equal.
    pub fn alpha_normalize(&self) -> Formula {
        let mut counter = 0usize;
        self.alpha_inner(&mut BTreeMap::new(), &mut counter)
    }

    fn alpha_inner(&self, renaming: &mut BTreeMap<String, Vec<String>>, counter: &mut usize) -> Formula {
        let rename_term = |t: &Term, renaming: &BTreeMap<String, Vec<String>>| -> Term {
            fn go(t: &Term, renaming: &BTreeMap<String, Vec<String>>) -> Term {
                match t {
                    Term::Var(v) => match renaming.get(v).and_then(|stack| stack.last()) {
                        Some(n) => Term::Var(n.clone()),
                        None => t.clone(),
                    },
                    Term::Fun(f, args) => {
                        Term::Fun(f.clone(), args.iter().map(|a| go(a, renaming)).collect())
                    }
                }
            }
            go(t, renaming)
        };
        match self {
            Formula::Atom(p, args) => Formula::Atom(
                p.clone(),
                args.iter().map(|t| rename_term(t, renaming)).collect(),
            ),
            Formula::Eq(l, r) => Formula::Eq(rename_term(l, renaming), rename_term(r, renaming)),
            Formula::Top => Formula::Top,
            Formula::Bottom => Formula::Bottom,
            Formula::Not(f) => Formula::not(f.alpha_inner(renaming, counter)),
            Formula::And(a, b) => Formula::and(
                a.alpha_inner(renaming, counter),
                b.alpha_inner(renaming, counter),
            ),
            Formula::Or(a, b) => Formula::or(
                a.alpha_inner(renaming, counter),
                b.alpha_inner(renaming, counter),
            ),
            Formula::Implies(a, b) => Formula::implies(
                a.alpha_inner(renaming, counter),
                b.alpha_inner(renaming, counter),
            ),
            Formula::Forall(v, f) | Formula::Exists(v, f) => {
                let fresh = format!("b{counter}");
                *counter += 1;
                renaming.entry(v.clone()).or_default().push(fresh.clone());
                let body = f.alpha_inner(renaming, counter);
                renaming.get_mut(v).unwrap().pop();
                match self {
                    Formula::Forall(_, _) => Formula::Forall(fresh, Box::new(body)),
                    _ => Formula::Exists(fresh, Box::new(body)),
                }
            }
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Formula::Implies(_, _) => 1,
            Formula::Or(_, _) => 2,
            Formula::And(_, _) => 3,
            Formula::Not(_) => 4,
            _ => 5,
        }
    }

    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, parent: u8) -> fmt::Result {
        let prec = self.precedence();
        let paren = prec < parent;
        if paren {
            write!(f, "(")?;
        }
        match self {
            Formula::Atom(p, args) => {
                if args.is_empty() {
                    write!(f, "{p}")?;
                } else {
                    write!(f, "{p}(")?;
                    for (i, t) in args.iter().enumerate() {
                        if i > 0 {
                            write!(f, ", ")?;
                        }
                        write!(f, "{t}")?;
                    }
                    write!(f, ")")?;
                }
            }
            Formula::Eq(l, r) => write!(f, "{l} = {r}")?,
            Formula::Top => write!(f, "true")?,
            Formula::Bottom => write!(f, "false")?,
            // ~(a = b) renders as the surface form a != b.
            Formula::Not(inner) => {
                if let Formula::Eq(l, r) = inner.as_ref() {
                    write!(f, "{l} != {r}")?;
                } else {
                    write!(f, "~")?;
                    inner.fmt_prec(f, 4)?;
                }
            }
            Formula::And(a, b) => {
                a.fmt_prec(f, prec)?;
                write!(f, " & ")?;
                b.fmt_prec(f, prec + 1)?;
            }
            Formula::Or(a, b) => {
                a.fmt_prec(f, prec)?;
                write!(f, " | ")?;
                b.fmt_prec(f, prec + 1)?;
            }
            // right-associative
            Formula::Implies(a, b) => {
                a.fmt_prec(f, prec + 1)?;
                write!(f, " -> ")?;
                b.fmt_prec(f, prec)?;
            }
            Formula::Forall(v, body) => write!(f, "forall {v} ({body})")?,
            Formula::Exists(v, body) => write!(f, "exists {v} ({body})")?,
        }
        if paren {
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, 0)
    }
}

fn collect_free_term(t: &Term, bound: &[String], out: &mut Vec<String>) {
    match t {
        Term::Var(v) => {
            if !bound.contains(v) && !out.iter().any(|x| x == v) {
                out.push(v.clone());
            }
        }
        Term::Fun(_, args) => {
            for a in args {
                collect_free_term(a, bound, out);
            }
        }
    }
}

/// A name based on `base` that is not in `avoid`, priming until free.
pub fn fresh_name(base: &str, avoid: &BTreeSet<String>) -> String {
    let mut candidate = format!("{base}'");
    while avoid.contains(&candidate) {
        candidate.push('\'');
    }
    candidate
}

#[cfg(test)]
mod tests {
    use super::*;

    fn plus(a: Term, b: Term) -> Term {
        Term::fun("+", vec![a, b])
    }

    fn peano_eq(l: Term, r: Term) -> Formula {
        Formula::eq(l, r)
    }

    #[test]
    fn substitute_direct_replacement() {
        // (x+1 = 1+x){x -> 0} = 0+1 = 1+0
        let f = peano_eq(
            plus(Term::var("x"), Term::constant("1")),
            plus(Term::constant("1"), Term::var("x")),
        );
        let s = Substitution::from_pairs([("x".to_string(), Term::constant("0"))]).unwrap();
        let expected = peano_eq(
            plus(Term::constant("0"), Term::constant("1")),
            plus(Term::constant("1"), Term::constant("0")),
        );
        assert_eq!(f.substitute(&s), expected);
    }

    #[test]
    fn substitute_leaves_bound_occurrences() {
        // (forall x (x = x)){x -> 0} is unchanged
        let f = Formula::forall("x", peano_eq(Term::var("x"), Term::var("x")));
        let s = Substitution::from_pairs([("x".to_string(), Term::constant("0"))]).unwrap();
        assert_eq!(f.substitute(&s), f);
    }

    #[test]
    fn substitute_avoids_capture() {
        // (exists y (x = y)){x -> y} renames the binder before inserting y
        let f = Formula::exists("y", peano_eq(Term::var("x"), Term::var("y")));
        let s = Substitution::from_pairs([("x".to_string(), Term::var("y"))]).unwrap();
        let got = f.substitute(&s);
        match &got {
            Formula::Exists(b, body) => {
                assert_ne!(b, "y", "binder must be renamed");
                assert_eq!(
                    body.as_ref(),
                    &peano_eq(Term::var("y"), Term::var(b)),
                    "free y inserted, bound occurrence renamed"
                );
            }
            other => panic!("unexpected shape {other:?}"),
        }
    }

    #[test]
    fn substitute_is_idempotent_on_results() {
        let f = Formula::exists("y", peano_eq(Term::var("x"), Term::var("y")));
        let s = Substitution::from_pairs([("x".to_string(), Term::var("y"))]).unwrap();
        let once = f.substitute(&s);
        assert_eq!(once.substitute(&s), once);
    }

    #[test]
    fn nnf_de_morgan() {
        let a = Formula::atom("A", vec![]);
        let b = Formula::atom("B", vec![]);
        let f = Formula::not(Formula::and(a.clone(), b.clone()));
        assert_eq!(f.nnf(), Formula::or(Formula::not(a), Formula::not(b)));
    }

    #[test]
    fn nnf_eliminates_implication() {
        let a = Formula::atom("A", vec![]);
        let b = Formula::atom("B", vec![]);
        let f = Formula::implies(a.clone(), b.clone());
        assert_eq!(f.nnf(), Formula::or(Formula::not(a), b));
    }

    #[test]
    fn nnf_quantifier_duality() {
        let f = Formula::not(Formula::forall(
            "x",
            Formula::atom("P", vec![Term::var("x")]),
        ));
        assert_eq!(
            f.nnf(),
            Formula::exists("x", Formula::not(Formula::atom("P", vec![Term::var("x")])))
        );
    }

    #[test]
    fn alpha_normalization_identifies_renamings() {
        let f = Formula::forall("x", Formula::atom("p", vec![Term::var("x")]));
        let g = Formula::forall("y", Formula::atom("p", vec![Term::var("y")]));
        assert_eq!(f.alpha_normalize(), g.alpha_normalize());
        let h = Formula::atom("p", vec![Term::constant("a")]);
        assert_ne!(f.alpha_normalize(), h.alpha_normalize());
    }

    mod properties {
        use super::super::*;
        use crate::interp::{for_each_interpretation, ground_eval, signature_of};
        use proptest::prelude::*;

        fn term_strategy() -> impl Strategy<Value = Term> {
            let leaf = prop_oneof![
                Just(Term::var("x")),
                Just(Term::var("y")),
                Just(Term::constant("a")),
                Just(Term::constant("b")),
            ];
            leaf.prop_recursive(2, 8, 1, |inner| {
                inner.prop_map(|t| Term::fun("f", vec![t]))
            })
        }

        fn formula_strategy() -> impl Strategy<Value = Formula> {
            let atom = prop_oneof![
                term_strategy().prop_map(|t| Formula::atom("p", vec![t])),
                term_strategy().prop_map(|t| Formula::atom("q", vec![t])),
                (term_strategy(), term_strategy()).prop_map(|(l, r)| Formula::eq(l, r)),
                Just(Formula::Top),
                Just(Formula::Bottom),
            ];
            atom.prop_recursive(3, 24, 2, |inner| {
                prop_oneof![
                    inner.clone().prop_map(Formula::not),
                    (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
                    (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)),
                    (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::implies(a, b)),
                    inner.clone().prop_map(|f| Formula::forall("x", f)),
                    inner.prop_map(|f| Formula::exists("y", f)),
                ]
            })
        }

        fn ground_term_strategy() -> impl Strategy<Value = Term> {
            prop_oneof![
                Just(Term::constant("a")),
                Just(Term::constant("b")),
                Just(Term::fun("f", vec![Term::constant("a")])),
            ]
        }

        proptest! {
            #[test]
            fn substitution_is_idempotent_on_formulas(
                f in formula_strategy(),
                tx in ground_term_strategy(),
                ty in ground_term_strategy(),
            ) {
                let s = Substitution::from_pairs([
                    ("x".to_string(), tx),
                    ("y".to_string(), ty),
                ]).unwrap();
                let once = f.substitute(&s);
                prop_assert_eq!(once.substitute(&s), once);
            }

            #[test]
            fn nnf_agrees_with_ground_evaluation(f in formula_strategy()) {
                let g = f.nnf();
                // no implications and negations only at atoms
                fn check_shape(h: &Formula, negated: bool) -> bool {
                    match h {
                        Formula::Implies(_, _) => false,
                        Formula::Not(inner) => {
                            !negated
                                && matches!(
                                    inner.as_ref(),
                                    Formula::Atom(_, _) | Formula::Eq(_, _)
                                )
                        }
                        Formula::And(a, b) | Formula::Or(a, b) => {
                            check_shape(a, false) && check_shape(b, false)
                        }
                        Formula::Forall(_, a) | Formula::Exists(_, a) => check_shape(a, false),
                        _ => true,
                    }
                }
                prop_assert!(check_shape(&g, false));
                // logically equivalent on every interpretation up to size 2
                let sig = signature_of([&f]);
                for size in 1..=2 {
                    let ok = for_each_interpretation(&sig, size, |m| {
                        ground_eval(&f, m).unwrap() == ground_eval(&g, m).unwrap()
                    });
                    prop_assert!(ok, "nnf disagrees at domain size {}", size);
                }
            }
        }
    }

    #[test]
    fn display_round_shapes() {
        let f = Formula::implies(
            Formula::and(Formula::atom("p", vec![]), Formula::atom("q", vec![])),
            Formula::or(
                Formula::not(Formula::atom("r", vec![])),
                Formula::atom("s", vec![]),
            ),
        );
        assert_eq!(f.to_string(), "p & q -> ~r | s");
        let g = Formula::not(Formula::eq(Term::var("x"), Term::constant("0")));
        assert_eq!(g.to_string(), "x != 0");
        let nested = Formula::implies(
            Formula::implies(Formula::atom("p", vec![]), Formula::atom("q", vec![])),
            Formula::atom("r", vec![]),
        );
        assert_eq!(nested.to_string(), "(p -> q) -> r");
    }
}
