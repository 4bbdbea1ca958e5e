//! Generated equality axioms: reflexivity, symmetry, transitivity and one
//! congruence axiom per argument position of every function and predicate
//! symbol. Equality is handled by axioms rather than a built-in rule, which
//! keeps traces plain resolution steps.

use std::collections::BTreeMap;

use crate::formula::Formula;
use crate::term::Term;

/// Function and predicate symbols of one proof problem. `=` itself is not
/// listed; congruence is generated for the listed symbols only.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ProblemSignature {
    pub functions: BTreeMap<String, usize>,
    pub predicates: BTreeMap<String, usize>,
    pub uses_equality: bool,
}

impl ProblemSignature {
    pub fn of<'a>(formulas: impl IntoIterator<Item = &'a Formula>) -> ProblemSignature {
        let mut sig = ProblemSignature::default();
        for f in formulas {
            f.collect_signature(&mut sig.functions, &mut sig.predicates);
            sig.uses_equality |= f.mentions_equality();
        }
        sig
    }
}

/// The equality axioms for a signature, as closed first-order formulas.
pub fn equality_axioms(sig: &ProblemSignature) -> Vec<Formula> {
    let v = |n: usize| Term::Var(format!("v{n}"));
    let w = || Term::Var("w".to_string());

    let mut out = Vec::new();
    // forall x (x = x)
    out.push(Formula::forall("v0", Formula::eq(v(0), v(0))));
    // forall x y (x = y -> y = x)
    out.push(Formula::forall(
        "v0",
        Formula::forall(
            "v1",
            Formula::implies(Formula::eq(v(0), v(1)), Formula::eq(v(1), v(0))),
        ),
    ));
    // forall x y z (x = y -> (y = z -> x = z))
    out.push(Formula::forall(
        "v0",
        Formula::forall(
            "v1",
            Formula::forall(
                "v2",
                Formula::implies(
                    Formula::eq(v(0), v(1)),
                    Formula::implies(Formula::eq(v(1), v(2)), Formula::eq(v(0), v(2))),
                ),
            ),
        ),
    ));

    // one congruence axiom per argument position of every function symbol:
    // forall v.. w (v_i = w -> f(v1..vi..vn) = f(v1..w..vn))
    for (f, &arity) in &sig.functions {
        for i in 0..arity {
            let args: Vec<Term> = (0..arity).map(v).collect();
            let mut swapped = args.clone();
            swapped[i] = w();
            let body = Formula::implies(
                Formula::eq(v(i), w()),
                Formula::eq(Term::fun(f, args), Term::fun(f, swapped)),
            );
            out.push(close_over(body, arity));
        }
    }

    // and per argument position of every predicate symbol:
    // forall v.. w (v_i = w -> (P(v1..vi..vn) -> P(v1..w..vn)))
    for (p, &arity) in &sig.predicates {
        for i in 0..arity {
            let args: Vec<Term> = (0..arity).map(v).collect();
            let mut swapped = args.clone();
            swapped[i] = w();
            let body = Formula::implies(
                Formula::eq(v(i), w()),
                Formula::implies(Formula::atom(p, args), Formula::atom(p, swapped)),
            );
            out.push(close_over(body, arity));
        }
    }
    out
}

fn close_over(body: Formula, arity: usize) -> Formula {
    let mut f = Formula::forall("w", body);
    for n in (0..arity).rev() {
        f = Formula::forall(&format!("v{n}"), f);
    }
    f
}
