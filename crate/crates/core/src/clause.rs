//! Clausal form: literals, clauses and the CNF transformation
//! (negation normal form, Skolemization, distribution).
//!
//! Skolem symbols live in a reserved namespace `sk0, sk1, ...`; the parser
//! rejects user symbols of that shape, so generated symbols never collide.

use std::collections::BTreeMap;
use std::fmt;

use crate::formula::Formula;
use crate::term::{unify_all, Substitution, Term};

/// Reserved Skolem namespace: `sk` followed by one or more digits.
pub fn is_reserved_symbol(name: &str) -> bool {
    name.len() > 2 && name.starts_with("sk") && name[2..].chars().all(|c| c.is_ascii_digit())
}

/// An atomic proposition inside a literal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Atom {
    Pred(String, Vec<Term>),
    Eq(Term, Term),
}

impl Atom {
    pub fn apply(&self, s: &Substitution) -> Atom {
        match self {
            Atom::Pred(p, args) => Atom::Pred(p.clone(), args.iter().map(|t| s.apply(t)).collect()),
            Atom::Eq(l, r) => Atom::Eq(s.apply(l), s.apply(r)),
        }
    }

    /// Cheap structural pre-check: false only when unification certainly
    /// fails (rigid symbol clash somewhere above any variable).
    pub fn compatible(&self, other: &Atom) -> bool {
        fn terms_compatible(a: &Term, b: &Term) -> bool {
            match (a, b) {
                (Term::Var(_), _) | (_, Term::Var(_)) => true,
                (Term::Fun(f, fa), Term::Fun(g, ga)) => {
                    f == g
                        && fa.len() == ga.len()
                        && fa.iter().zip(ga.iter()).all(|(x, y)| terms_compatible(x, y))
                }
            }
        }
        match (self, other) {
            (Atom::Pred(p, pa), Atom::Pred(q, qa)) => {
                p == q
                    && pa.len() == qa.len()
                    && pa.iter().zip(qa.iter()).all(|(x, y)| terms_compatible(x, y))
            }
            (Atom::Eq(l1, r1), Atom::Eq(l2, r2)) => {
                terms_compatible(l1, l2) && terms_compatible(r1, r2)
            }
            _ => false,
        }
    }

    pub fn unify_with(&self, other: &Atom, s: &mut Substitution) -> bool {
        if !self.compatible(other) {
            return false;
        }
        match (self, other) {
            (Atom::Pred(p, pa), Atom::Pred(q, qa)) => p == q && unify_all(pa, qa, s),
            (Atom::Eq(l1, r1), Atom::Eq(l2, r2)) => {
                unify_all(&[l1.clone(), r1.clone()], &[l2.clone(), r2.clone()], s)
            }
            _ => false,
        }
    }

    fn collect_vars(&self, out: &mut Vec<String>) {
        match self {
            Atom::Pred(_, args) => args.iter().for_each(|t| t.collect_vars(out)),
            Atom::Eq(l, r) => {
                l.collect_vars(out);
                r.collect_vars(out);
            }
        }
    }

    fn size(&self) -> usize {
        match self {
            Atom::Pred(_, args) => 1 + args.iter().map(Term::size).sum::<usize>(),
            Atom::Eq(l, r) => 1 + l.size() + r.size(),
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Pred(p, args) => {
                if args.is_empty() {
                    write!(f, "{p}")
                } else {
                    write!(f, "{p}(")?;
                    for (i, t) in args.iter().enumerate() {
                        if i > 0 {
                            write!(f, ", ")?;
                        }
                        write!(f, "{t}")?;
                    }
                    write!(f, ")")
                }
            }
            Atom::Eq(l, r) => write!(f, "{l} = {r}"),
        }
    }
}

/// A signed atom.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    pub positive: bool,
    pub atom: Atom,
}

impl Literal {
    pub fn pos(atom: Atom) -> Literal {
        Literal { positive: true, atom }
    }

    pub fn neg(atom: Atom) -> Literal {
        Literal { positive: false, atom }
    }

    pub fn apply(&self, s: &Substitution) -> Literal {
        Literal {
            positive: self.positive,
            atom: self.atom.apply(s),
        }
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.positive {
            write!(f, "{}", self.atom)
        } else if let Atom::Eq(l, r) = &self.atom {
            write!(f, "{l} != {r}")
        } else {
            write!(f, "~{}", self.atom)
        }
    }
}

/// A clause: a set of literals kept in a canonical sorted form with
/// variables renamed by first occurrence, so structurally equal clauses
/// compare equal. Literals of the form `t != t` are dropped on
/// construction (they are false under the equality interpretation), so a
/// clause consisting only of such literals becomes the empty clause.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Clause {
    literals: Vec<Literal>,
}

impl Clause {
    pub fn new(mut literals: Vec<Literal>) -> Clause {
        literals.retain(|l| match &l.atom {
            Atom::Eq(lhs, rhs) => l.positive || lhs != rhs,
            Atom::Pred(_, _) => true,
        });
        literals.sort();
        literals.dedup();
        let mut c = Clause { literals };
        c.normalize();
        c
    }

    pub fn empty() -> Clause {
        Clause { literals: Vec::new() }
    }

    pub fn is_empty(&self) -> bool {
        self.literals.is_empty()
    }

    pub fn literals(&self) -> &[Literal] {
        &self.literals
    }

    pub fn len(&self) -> usize {
        self.literals.len()
    }

    /// Total symbol-occurrence count, used for smallest-clause-first search.
    pub fn size(&self) -> usize {
        self.literals.iter().map(|l| l.atom.size()).sum()
    }

    pub fn vars(&self) -> Vec<String> {
        let mut out = Vec::new();
        for l in &self.literals {
            l.atom.collect_vars(&mut out);
        }
        out
    }

    /// A clause is a tautology if it contains complementary literals.
    pub fn is_tautology(&self) -> bool {
        self.literals.iter().any(|l| {
            self.literals
                .iter()
                .any(|m| l.positive != m.positive && l.atom == m.atom)
        })
    }

    /// Rename variables to `prefix0, prefix1, ...` by first occurrence.
    pub fn rename_vars(&self, prefix: &str) -> Clause {
        let vars = self.vars();
        let mut s = Substitution::new();
        for (i, v) in vars.iter().enumerate() {
            assert!(s.bind(v, Term::Var(format!("{prefix}{i}"))));
        }
        Clause {
            literals: self.literals.iter().map(|l| l.apply(&s)).collect(),
        }
    }

    /// Canonical form: sort, rename by first occurrence, repeat to a small
    /// fixpoint. Equal clauses modulo variable names and literal order end
    /// up identical in almost all cases that arise in practice.
    fn normalize(&mut self) {
        for _ in 0..4 {
            let renamed = self.rename_vars("X");
            let mut lits = renamed.literals;
            lits.sort();
            lits.dedup();
            if lits == self.literals {
                return;
            }
            self.literals = lits;
        }
    }

    /// Theta-subsumption: does `self` subsume `other`? True when some
    /// substitution maps every literal of `self` onto a literal of `other`.
    /// Restricted to |self| <= |other| to keep deletion well-founded.
    pub fn subsumes(&self, other: &Clause) -> bool {
        if self.len() > other.len() {
            return false;
        }
        // self's variables must be treated as pattern variables; rename them
        // away from other's to avoid accidental clashes in matching.
        let pattern = self.rename_vars("S#");
        let mut binding = BTreeMap::new();
        subsume_from(&pattern.literals, 0, &other.literals, &mut binding)
    }
}

fn subsume_from(
    pattern: &[Literal],
    idx: usize,
    target: &[Literal],
    binding: &mut BTreeMap<String, Term>,
) -> bool {
    if idx == pattern.len() {
        return true;
    }
    let lit = &pattern[idx];
    for cand in target {
        if cand.positive != lit.positive {
            continue;
        }
        let saved = binding.clone();
        if match_atom(&lit.atom, &cand.atom, binding)
            && subsume_from(pattern, idx + 1, target, binding)
        {
            return true;
        }
        *binding = saved;
    }
    false
}

fn match_atom(pattern: &Atom, instance: &Atom, binding: &mut BTreeMap<String, Term>) -> bool {
    match (pattern, instance) {
        (Atom::Pred(p, pa), Atom::Pred(q, qa)) if p == q && pa.len() == qa.len() => pa
            .iter()
            .zip(qa.iter())
            .all(|(x, y)| match_term(x, y, binding)),
        (Atom::Eq(l1, r1), Atom::Eq(l2, r2)) => {
            match_term(l1, l2, binding) && match_term(r1, r2, binding)
        }
        _ => false,
    }
}

fn match_term(pattern: &Term, instance: &Term, binding: &mut BTreeMap<String, Term>) -> bool {
    match pattern {
        Term::Var(v) => match binding.get(v) {
            Some(bound) => bound == instance,
            None => {
                binding.insert(v.clone(), instance.clone());
                true
            }
        },
        Term::Fun(f, fa) => match instance {
            Term::Fun(g, ga) if f == g && fa.len() == ga.len() => fa
                .iter()
                .zip(ga.iter())
                .all(|(x, y)| match_term(x, y, binding)),
            _ => false,
        },
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.literals.is_empty() {
            return write!(f, "[]");
        }
        for (i, l) in self.literals.iter().enumerate() {
            if i > 0 {
                write!(f, " \\/ ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Stateful clausifier so Skolem symbols stay unique across the formulas of
/// one proof problem.
#[derive(Debug, Default)]
pub struct Clausifier {
    skolem_counter: usize,
    rename_counter: usize,
}

impl Clausifier {
    pub fn new() -> Self {
        Clausifier::default()
    }

    fn fresh_skolem(&mut self) -> String {
        let name = format!("sk{}", self.skolem_counter);
        self.skolem_counter += 1;
        name
    }

    fn fresh_var(&mut self) -> String {
        let name = format!("V#{}", self.rename_counter);
        self.rename_counter += 1;
        name
    }

    /// Equisatisfiable clause set for `f` (universally closed first).
    /// `Top` contributes no clauses; `Bottom` contributes the empty clause.
    pub fn clausify(&mut self, f: &Formula) -> Vec<Clause> {
        let closed = f.universal_closure();
        let nnf = closed.nnf();
        let matrix = self.skolemize(&nnf, &mut Vec::new(), &mut BTreeMap::new());
        let mut out: Vec<Clause> = Vec::new();
        for lits in cnf(&matrix) {
            let c = Clause::new(lits);
            if c.is_tautology() {
                continue;
            }
            if !out.contains(&c) {
                out.push(c);
            }
        }
        out
    }

    /// On an NNF formula: standardize binders apart, replace existential
    /// variables by Skolem terms over the universals in scope, and drop
    /// quantifiers, producing a quantifier-free matrix.
    fn skolemize(
        &mut self,
        f: &Formula,
        univ_scope: &mut Vec<String>,
        renaming: &mut BTreeMap<String, Vec<Term>>,
    ) -> Matrix {
        match f {
            Formula::Atom(p, args) => Matrix::Lit(Literal::pos(Atom::Pred(
                p.clone(),
                args.iter().map(|t| apply_renaming(t, renaming)).collect(),
            ))),
            Formula::Eq(l, r) => Matrix::Lit(Literal::pos(Atom::Eq(
                apply_renaming(l, renaming),
                apply_renaming(r, renaming),
            ))),
            Formula::Not(inner) => match inner.as_ref() {
                Formula::Atom(p, args) => Matrix::Lit(Literal::neg(Atom::Pred(
                    p.clone(),
                    args.iter().map(|t| apply_renaming(t, renaming)).collect(),
                ))),
                Formula::Eq(l, r) => Matrix::Lit(Literal::neg(Atom::Eq(
                    apply_renaming(l, renaming),
                    apply_renaming(r, renaming),
                ))),
                _ => unreachable!("input must be in negation normal form"),
            },
            Formula::Top => Matrix::True,
            Formula::Bottom => Matrix::False,
            Formula::And(a, b) => {
                let l = self.skolemize(a, univ_scope, renaming);
                let r = self.skolemize(b, univ_scope, renaming);
                Matrix::And(Box::new(l), Box::new(r))
            }
            Formula::Or(a, b) => {
                let l = self.skolemize(a, univ_scope, renaming);
                let r = self.skolemize(b, univ_scope, renaming);
                Matrix::Or(Box::new(l), Box::new(r))
            }
            Formula::Forall(v, body) => {
                let fresh = self.fresh_var();
                univ_scope.push(fresh.clone());
                renaming
                    .entry(v.clone())
                    .or_default()
                    .push(Term::Var(fresh));
                let m = self.skolemize(body, univ_scope, renaming);
                renaming.get_mut(v).unwrap().pop();
                univ_scope.pop();
                m
            }
            Formula::Exists(v, body) => {
                let sk = self.fresh_skolem();
                let args: Vec<Term> = univ_scope.iter().map(|u| Term::Var(u.clone())).collect();
                renaming
                    .entry(v.clone())
                    .or_default()
                    .push(Term::Fun(sk, args));
                let m = self.skolemize(body, univ_scope, renaming);
                renaming.get_mut(v).unwrap().pop();
                m
            }
            Formula::Implies(_, _) => unreachable!("input must be in negation normal form"),
        }
    }
}

fn apply_renaming(t: &Term, renaming: &BTreeMap<String, Vec<Term>>) -> Term {
    match t {
        Term::Var(v) => match renaming.get(v).and_then(|stack| stack.last()) {
            Some(replacement) => replacement.clone(),
            None => t.clone(),
        },
        Term::Fun(f, args) => Term::Fun(
            f.clone(),
            args.iter().map(|a| apply_renaming(a, renaming)).collect(),
        ),
    }
}

enum Matrix {
    Lit(Literal),
    True,
    False,
    And(Box<Matrix>, Box<Matrix>),
    Or(Box<Matrix>, Box<Matrix>),
}

/// Conjunction-of-disjunctions view of a quantifier-free matrix.
/// An empty outer list is "true"; a list containing an empty row is "false".
fn cnf(m: &Matrix) -> Vec<Vec<Literal>> {
    match m {
        Matrix::Lit(l) => vec![vec![l.clone()]],
        Matrix::True => vec![],
        Matrix::False => vec![vec![]],
        Matrix::And(a, b) => {
            let mut out = cnf(a);
            out.extend(cnf(b));
            out
        }
        Matrix::Or(a, b) => {
            let left = cnf(a);
            let right = cnf(b);
            let mut out = Vec::with_capacity(left.len() * right.len());
            for l in &left {
                for r in &right {
                    let mut row = l.clone();
                    row.extend(r.iter().cloned());
                    out.push(row);
                }
            }
            out
        }
    }
}

/// Convenience wrapper when a single formula is clausified in isolation.
pub fn clausify(f: &Formula) -> Vec<Clause> {
    Clausifier::new().clausify(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::Formula;
    use crate::term::Term;

    fn var(v: &str) -> Term {
        Term::var(v)
    }

    fn p(t: Term) -> Formula {
        Formula::atom("P", vec![t])
    }

    fn q(t: Term) -> Formula {
        Formula::atom("Q", vec![t])
    }

    #[test]
    fn horn_clause_from_implication() {
        let f = Formula::forall("x", Formula::implies(p(var("x")), q(var("x"))));
        let cs = clausify(&f);
        assert_eq!(cs.len(), 1);
        let c = &cs[0];
        assert_eq!(c.len(), 2);
        assert_eq!(c.to_string(), "~P(X0) \\/ Q(X0)");
    }

    #[test]
    fn skolem_constant_for_existential() {
        let f = Formula::exists("x", p(var("x")));
        let cs = clausify(&f);
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0].to_string(), "P(sk0)");
    }

    #[test]
    fn skolem_function_under_universal() {
        let f = Formula::forall("x", Formula::exists("y", Formula::eq(var("x"), var("y"))));
        let cs = clausify(&f);
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0].to_string(), "X0 = sk0(X0)");
    }

    #[test]
    fn negated_goal_clause() {
        let zero_one = Term::fun("+", vec![Term::constant("0"), Term::constant("1")]);
        let one_zero = Term::fun("+", vec![Term::constant("1"), Term::constant("0")]);
        let f = Formula::not(Formula::eq(zero_one, one_zero));
        let cs = clausify(&f);
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0].to_string(), "0 + 1 != 1 + 0");
    }

    #[test]
    fn top_and_bottom() {
        assert!(clausify(&Formula::Top).is_empty());
        let bot = clausify(&Formula::Bottom);
        assert_eq!(bot.len(), 1);
        assert!(bot[0].is_empty());
        // negated Top is Bottom
        let c = clausify(&Formula::not(Formula::Top));
        assert_eq!(c.len(), 1);
        assert!(c[0].is_empty());
    }

    #[test]
    fn distribution_produces_cnf() {
        // (a & b) | c  ->  {a|c, b|c}
        let a = Formula::atom("a", vec![]);
        let b = Formula::atom("b", vec![]);
        let c = Formula::atom("c", vec![]);
        let f = Formula::or(Formula::and(a, b), c);
        let cs = clausify(&f);
        assert_eq!(cs.len(), 2);
        assert_eq!(cs[0].to_string(), "a \\/ c");
        assert_eq!(cs[1].to_string(), "b \\/ c");
    }

    #[test]
    fn tautologies_are_dropped() {
        let a = Formula::atom("a", vec![]);
        let f = Formula::or(a.clone(), Formula::not(a));
        assert!(clausify(&f).is_empty());
    }

    #[test]
    fn subsumption_basics() {
        let pa = Clause::new(vec![Literal::pos(Atom::Pred(
            "p".into(),
            vec![Term::constant("a")],
        ))]);
        let px = Clause::new(vec![Literal::pos(Atom::Pred("p".into(), vec![var("x")]))]);
        let pa_qb = Clause::new(vec![
            Literal::pos(Atom::Pred("p".into(), vec![Term::constant("a")])),
            Literal::pos(Atom::Pred("q".into(), vec![Term::constant("b")])),
        ]);
        assert!(px.subsumes(&pa));
        assert!(px.subsumes(&pa_qb));
        assert!(!pa.subsumes(&px));
        assert!(!pa_qb.subsumes(&pa));
        assert!(pa.subsumes(&pa));
    }

    #[test]
    fn clause_canonical_form_is_stable() {
        let c1 = Clause::new(vec![
            Literal::pos(Atom::Pred("p".into(), vec![var("u"), var("v")])),
            Literal::neg(Atom::Pred("q".into(), vec![var("v")])),
        ]);
        let c2 = Clause::new(vec![
            Literal::neg(Atom::Pred("q".into(), vec![var("b")])),
            Literal::pos(Atom::Pred("p".into(), vec![var("a"), var("b")])),
        ]);
        assert_eq!(c1, c2);
    }

    mod equisatisfiability {
        use super::super::*;
        use crate::interp::{for_each_interpretation, ground_eval, signature_of, Signature};
        use proptest::prelude::*;

        /// View a clause as the universal closure of its disjunction.
        fn clause_to_formula(c: &Clause) -> Formula {
            let mut lits = c.literals().iter();
            let lit_formula = |l: &Literal| -> Formula {
                let atom = match &l.atom {
                    Atom::Pred(p, args) => Formula::Atom(p.clone(), args.clone()),
                    Atom::Eq(lh, rh) => Formula::Eq(lh.clone(), rh.clone()),
                };
                if l.positive {
                    atom
                } else {
                    Formula::not(atom)
                }
            };
            let Some(first) = lits.next() else {
                return Formula::Bottom;
            };
            let mut out = lit_formula(first);
            for l in lits {
                out = Formula::or(out, lit_formula(l));
            }
            out.universal_closure()
        }

        fn clauses_formula(cs: &[Clause]) -> Formula {
            let mut it = cs.iter();
            let Some(first) = it.next() else {
                return Formula::Top;
            };
            let mut out = clause_to_formula(first);
            for c in it {
                out = Formula::and(out, clause_to_formula(c));
            }
            out
        }

        fn satisfiable_at(f: &Formula, sig: &Signature, size: usize) -> bool {
            let mut sat = false;
            for_each_interpretation(sig, size, |m| {
                if ground_eval(f, m).unwrap_or(false) {
                    sat = true;
                    return false;
                }
                true
            });
            sat
        }

        fn term_strategy() -> impl Strategy<Value = Term> {
            prop_oneof![
                Just(Term::var("x")),
                Just(Term::var("y")),
                Just(Term::constant("a")),
                Just(Term::constant("b")),
            ]
        }

        fn atom_strategy() -> impl Strategy<Value = Formula> {
            prop_oneof![
                term_strategy().prop_map(|t| Formula::atom("p", vec![t])),
                (term_strategy(), term_strategy()).prop_map(|(l, r)| Formula::eq(l, r)),
                Just(Formula::Top),
                Just(Formula::Bottom),
            ]
        }

        /// Quantifier-free matrices: atoms closed under the connectives.
        fn matrix_strategy() -> impl Strategy<Value = Formula> {
            atom_strategy().prop_recursive(2, 12, 2, |inner| {
                prop_oneof![
                    inner.clone().prop_map(Formula::not),
                    (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
                    (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)),
                    (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::implies(a, b)),
                ]
            })
        }

        /// Formulas whose quantifiers occur only positively (never under a
        /// negation or on the left of an implication), so negation normal
        /// form introduces no existentials and Skolemization is vacuous.
        fn universal_formula_strategy() -> impl Strategy<Value = Formula> {
            matrix_strategy().prop_recursive(2, 12, 2, |inner| {
                prop_oneof![
                    (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
                    (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)),
                    inner.clone().prop_map(|f| Formula::forall("x", f)),
                    (matrix_strategy(), inner).prop_map(|(m, u)| Formula::implies(m, u)),
                ]
            })
        }

        /// A single existential wrapped in at most one universal, so Skolem
        /// functions stay at arity <= 1 and the model sweep stays small.
        fn existential_formula_strategy() -> impl Strategy<Value = Formula> {
            (universal_formula_strategy(), any::<bool>()).prop_map(|(body, under_forall)| {
                if under_forall {
                    Formula::forall("x", Formula::exists("y", body))
                } else {
                    Formula::exists("y", body)
                }
            })
        }

        proptest! {
            /// Without existentials Skolemization introduces nothing, so
            /// clausification preserves truth model by model.
            #[test]
            fn universal_clausification_is_equivalent(f in universal_formula_strategy()) {
                let clauses = clausify(&f);
                let g = clauses_formula(&clauses);
                let sig = signature_of([&f]);
                for size in 1..=2 {
                    let ok = for_each_interpretation(&sig, size, |m| {
                        ground_eval(&f, m).unwrap() == ground_eval(&g, m).unwrap()
                    });
                    prop_assert!(ok, "clausification changed truth at size {}", size);
                }
            }

            /// With existentials, satisfiability at each domain size is
            /// preserved (the Skolem expansion ranges over the same domain).
            #[test]
            fn existential_clausification_is_equisatisfiable(
                f in existential_formula_strategy()
            ) {
                let clauses = clausify(&f);
                let g = clauses_formula(&clauses);
                let sig_f = signature_of([&f]);
                let sig_g = signature_of([&g]);
                for size in 1..=2 {
                    let sat_f = satisfiable_at(&f, &sig_f, size);
                    let sat_g = satisfiable_at(&g, &sig_g, size);
                    prop_assert_eq!(
                        sat_f, sat_g,
                        "satisfiability diverged at size {}", size
                    );
                }
            }
        }
    }

    #[test]
    fn reserved_symbol_pattern() {
        assert!(is_reserved_symbol("sk0"));
        assert!(is_reserved_symbol("sk42"));
        assert!(!is_reserved_symbol("sk"));
        assert!(!is_reserved_symbol("sky"));
        assert!(!is_reserved_symbol("skolem"));
        assert!(!is_reserved_symbol("s0"));
    }
}
