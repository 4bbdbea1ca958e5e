//! Agent networks: named agents with knowledgebase entries, predicate
//! bindings for schema instantiation, and a single top-level query.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use crate::annotated::{AgentId, AnnotatedFormula};
use crate::clause::is_reserved_symbol;
use crate::formula::Formula;
use crate::term::{Substitution, Term};

/// One knowledgebase entry of an agent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KBEntry {
    /// Stable key for traces and diagrams; axioms get `ax1`, `ax2`, ...
    pub label: String,
    pub kind: EntryKind,
    /// The body as written; predicate placeholders not yet instantiated.
    pub body: Formula,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EntryKind {
    /// A fact of this agent, granted by Nature.
    Axiom,
    /// Knowledge the agent must query from another agent before use.
    QueryKnowledge { provider: AgentId },
    /// A rule over predicate placeholders, made first-order by a binding.
    Schema { params: Vec<String> },
}

impl KBEntry {
    pub fn provider(&self) -> Option<&AgentId> {
        match &self.kind {
            EntryKind::QueryKnowledge { provider } => Some(provider),
            _ => None,
        }
    }
}

/// A predicate binding `P(x1, .., xn) := body`, the hole-filling side of a
/// schema parameter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Binding {
    pub params: Vec<String>,
    pub body: Formula,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Agent {
    pub id: AgentId,
    pub entries: Vec<KBEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Query {
    pub goal: Formula,
    pub target: AgentId,
}

/// A parsed and validated agent network.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AgentNetwork {
    pub agents: Vec<Agent>,
    pub bindings: BTreeMap<String, Binding>,
    pub query: Query,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NetworkError {
    #[error("agent {0} declared more than once")]
    DuplicateAgent(String),
    #[error("agent {agent}: label {label} used more than once")]
    DuplicateLabel { agent: String, label: String },
    #[error("agent {agent}: entry {label} queries unknown provider {provider}")]
    UnknownProvider {
        agent: String,
        label: String,
        provider: String,
    },
    #[error("agent {agent}: entry {label} queries its own agent")]
    SelfProvider { agent: String, label: String },
    #[error("query target {0} is not a declared agent")]
    UnknownQueryTarget(String),
    #[error("schema parameter {param} has no binding")]
    UnboundSchemaParam { param: String },
    #[error("agent {agent}: axiom {label} mentions predicate placeholder {param}")]
    PlaceholderInAxiom {
        agent: String,
        label: String,
        param: String,
    },
    #[error("symbol {symbol} used with arities {first} and {second}")]
    ArityMismatch {
        symbol: String,
        first: usize,
        second: usize,
    },
    #[error("binding for {param} takes {expected} arguments but is applied to {found}")]
    BindingArityMismatch {
        param: String,
        expected: usize,
        found: usize,
    },
    #[error("{name} is used both as a bound variable and as a symbol")]
    VarSymbolClash { name: String },
    #[error("symbol {0} lies in the reserved namespace")]
    ReservedSymbol(String),
    #[error("binding for {param} may not mention placeholder {inner}")]
    PlaceholderInBinding { param: String, inner: String },
    #[error("entry {label} is not a schema")]
    NotASchema { label: String },
}

impl AgentNetwork {
    pub fn agent(&self, id: &AgentId) -> Option<&Agent> {
        self.agents.iter().find(|a| &a.id == id)
    }

    /// Predicate names that act as placeholders: declared schema parameters
    /// plus every bound name.
    pub fn placeholder_names(&self) -> BTreeSet<String> {
        let mut out: BTreeSet<String> = self.bindings.keys().cloned().collect();
        for agent in &self.agents {
            for e in &agent.entries {
                if let EntryKind::Schema { params } = &e.kind {
                    out.extend(params.iter().cloned());
                }
            }
        }
        out
    }

    /// Check every structural invariant; parsers call this before returning.
    pub fn validate(&self) -> Result<(), NetworkError> {
        let mut seen_agents = BTreeSet::new();
        for agent in &self.agents {
            if !seen_agents.insert(agent.id.clone()) {
                return Err(NetworkError::DuplicateAgent(agent.id.as_str().into()));
            }
        }
        for agent in &self.agents {
            let mut labels = BTreeSet::new();
            for e in &agent.entries {
                if !labels.insert(e.label.clone()) {
                    return Err(NetworkError::DuplicateLabel {
                        agent: agent.id.as_str().into(),
                        label: e.label.clone(),
                    });
                }
                if let EntryKind::QueryKnowledge { provider } = &e.kind {
                    if provider == &agent.id {
                        return Err(NetworkError::SelfProvider {
                            agent: agent.id.as_str().into(),
                            label: e.label.clone(),
                        });
                    }
                    if self.agent(provider).is_none() {
                        return Err(NetworkError::UnknownProvider {
                            agent: agent.id.as_str().into(),
                            label: e.label.clone(),
                            provider: provider.as_str().into(),
                        });
                    }
                }
            }
        }
        if self.agent(&self.query.target).is_none() {
            return Err(NetworkError::UnknownQueryTarget(
                self.query.target.as_str().into(),
            ));
        }

        let placeholders = self.placeholder_names();

        // Placeholders may not appear in axioms; every used placeholder must
        // have a binding; bindings must be placeholder-free themselves.
        for agent in &self.agents {
            for e in &agent.entries {
                let used = used_placeholders(&e.body, &placeholders);
                match &e.kind {
                    EntryKind::Axiom => {
                        if let Some(param) = used.first() {
                            return Err(NetworkError::PlaceholderInAxiom {
                                agent: agent.id.as_str().into(),
                                label: e.label.clone(),
                                param: param.clone(),
                            });
                        }
                    }
                    _ => {
                        for param in &used {
                            if !self.bindings.contains_key(param) {
                                return Err(NetworkError::UnboundSchemaParam {
                                    param: param.clone(),
                                });
                            }
                        }
                    }
                }
            }
        }
        let goal_used = used_placeholders(&self.query.goal, &placeholders);
        for param in &goal_used {
            if !self.bindings.contains_key(param) {
                return Err(NetworkError::UnboundSchemaParam {
                    param: param.clone(),
                });
            }
        }
        for (name, binding) in &self.bindings {
            let inner = used_placeholders(&binding.body, &placeholders);
            if let Some(p) = inner.first() {
                return Err(NetworkError::PlaceholderInBinding {
                    param: name.clone(),
                    inner: p.clone(),
                });
            }
        }

        // Schema parameters declared but never bound are also an error, so
        // that every schema is instantiable.
        for agent in &self.agents {
            for e in &agent.entries {
                if let EntryKind::Schema { params } = &e.kind {
                    for p in params {
                        if !self.bindings.contains_key(p) {
                            return Err(NetworkError::UnboundSchemaParam { param: p.clone() });
                        }
                    }
                }
            }
        }

        self.check_symbols(&placeholders)?;
        Ok(())
    }

    /// Arity consistency (one namespace for function and predicate symbols),
    /// reserved names, and variable/symbol disjointness across the network.
    fn check_symbols(&self, placeholders: &BTreeSet<String>) -> Result<(), NetworkError> {
        // kind: 0 = function, 1 = predicate; a symbol may be only one of the
        // two, with a single arity, across the whole problem.
        let mut symbols: BTreeMap<String, (usize, u8)> = BTreeMap::new();
        let mut binders: BTreeSet<String> = BTreeSet::new();

        let mut formulas: Vec<&Formula> = Vec::new();
        for agent in &self.agents {
            for e in &agent.entries {
                formulas.push(&e.body);
            }
        }
        for b in self.bindings.values() {
            formulas.push(&b.body);
        }
        formulas.push(&self.query.goal);

        for f in &formulas {
            collect_binders(f, &mut binders);
        }
        for b in self.bindings.values() {
            binders.extend(b.params.iter().cloned());
        }

        for f in &formulas {
            let mut fs = BTreeMap::new();
            let mut ps = BTreeMap::new();
            f.collect_signature(&mut fs, &mut ps);
            for (sym, arity, kind) in fs
                .into_iter()
                .map(|(s, a)| (s, a, 0u8))
                .chain(ps.into_iter().map(|(s, a)| (s, a, 1u8)))
            {
                if is_reserved_symbol(&sym) {
                    return Err(NetworkError::ReservedSymbol(sym));
                }
                if let Some(&(prev, _)) = symbols.get(&sym) {
                    if prev != arity {
                        return Err(NetworkError::ArityMismatch {
                            symbol: sym,
                            first: prev,
                            second: arity,
                        });
                    }
                    // same name as both function and predicate is a clash of
                    // lexical classes even at equal arity
                    if symbols[&sym].1 != kind {
                        return Err(NetworkError::VarSymbolClash { name: sym });
                    }
                } else {
                    symbols.insert(sym, (arity, kind));
                }
            }
        }

        // A placeholder's use arity must match its binding's parameter count.
        for (name, binding) in &self.bindings {
            if let Some(&(used, 1)) = symbols.get(name) {
                if used != binding.params.len() {
                    return Err(NetworkError::BindingArityMismatch {
                        param: name.clone(),
                        expected: binding.params.len(),
                        found: used,
                    });
                }
            }
        }

        for b in &binders {
            if symbols.contains_key(b) && !placeholders.contains(b) {
                return Err(NetworkError::VarSymbolClash { name: b.clone() });
            }
        }
        Ok(())
    }

    /// Replace every placeholder application `P(t1, .., tn)` by the bound
    /// body with the terms substituted for the parameters.
    pub fn instantiate(&self, f: &Formula) -> Result<Formula, NetworkError> {
        instantiate_placeholders(f, &self.bindings)
    }

    /// The entries of `agent` with schemas and querying knowledge made
    /// concrete and first-order.
    pub fn instantiated_entries(&self, agent: &AgentId) -> Result<Vec<(KBEntry, Formula)>, NetworkError> {
        let a = self
            .agent(agent)
            .unwrap_or_else(|| panic!("agent {agent} not in network"));
        a.entries
            .iter()
            .map(|e| Ok((e.clone(), self.instantiate(&e.body)?)))
            .collect()
    }

    /// Expand an agent into its implicit top-level disjunction: the negated
    /// knowledgebase services, each played against its matching environment,
    /// followed by the positive goal at the agent itself.
    pub fn expand_agent(
        &self,
        agent: &AgentId,
        goal: &Formula,
    ) -> Result<AnnotatedFormula, NetworkError> {
        let entries = self.instantiated_entries(agent)?;
        let goal = self.instantiate(goal)?;
        let mut leaves: Vec<AnnotatedFormula> = Vec::with_capacity(entries.len() + 1);
        for (entry, body) in &entries {
            let env = match &entry.kind {
                EntryKind::QueryKnowledge { provider } => provider.clone(),
                _ => agent.clone(),
            };
            leaves.push(AnnotatedFormula::Not(Box::new(AnnotatedFormula::leaf(
                body.clone(),
                env,
            ))));
        }
        leaves.push(AnnotatedFormula::leaf(goal, agent.clone()));
        let mut out = leaves.pop().expect("at least the goal leaf");
        while let Some(prev) = leaves.pop() {
            out = AnnotatedFormula::Or(Box::new(prev), Box::new(out));
        }
        Ok(out)
    }

    /// Canonical text form: one declaration per line, agents in declaration
    /// order, bindings sorted by name, the query last.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for agent in &self.agents {
            let _ = writeln!(out, "agent {}.", agent.id);
            for e in &agent.entries {
                match &e.kind {
                    EntryKind::Axiom => {
                        let _ = writeln!(out, "  axiom {}.", e.body);
                    }
                    EntryKind::QueryKnowledge { provider } => {
                        let _ = writeln!(out, "  query {} from {}: {}.", e.label, provider, e.body);
                    }
                    EntryKind::Schema { params } => {
                        let _ = writeln!(
                            out,
                            "  schema {}({}): {}.",
                            e.label,
                            params.join(", "),
                            e.body
                        );
                    }
                }
            }
            let _ = writeln!(out, "end.");
            out.push('\n');
        }
        for (name, b) in &self.bindings {
            let _ = writeln!(out, "let {}({}) := {}.", name, b.params.join(", "), b.body);
        }
        if !self.bindings.is_empty() {
            out.push('\n');
        }
        let _ = writeln!(out, "?- {} @ {}.", self.query.goal, self.query.target);
        out
    }
}

/// Instantiate every placeholder application in `f` through `bindings`.
pub fn instantiate_placeholders(
    f: &Formula,
    bindings: &BTreeMap<String, Binding>,
) -> Result<Formula, NetworkError> {
    Ok(match f {
        Formula::Atom(p, args) => match bindings.get(p) {
            Some(binding) => {
                if binding.params.len() != args.len() {
                    return Err(NetworkError::BindingArityMismatch {
                        param: p.clone(),
                        expected: binding.params.len(),
                        found: args.len(),
                    });
                }
                // The formal parameters live in their own scope: rename them
                // to internal names first so an argument may mention the same
                // surface variable without tripping the occurs check.
                let fresh: Vec<String> = (0..binding.params.len())
                    .map(|i| format!("arg#{i}"))
                    .collect();
                let rename = Substitution::from_pairs(
                    binding
                        .params
                        .iter()
                        .cloned()
                        .zip(fresh.iter().map(|n| Term::Var(n.clone())))
                        .collect::<Vec<_>>(),
                )
                .expect("fresh names are distinct");
                let body = binding.body.substitute(&rename);
                let subst = Substitution::from_pairs(
                    fresh
                        .into_iter()
                        .zip(args.iter().cloned())
                        .collect::<Vec<_>>(),
                )
                .expect("internal parameter names cannot occur in arguments");
                body.substitute(&subst)
            }
            None => f.clone(),
        },
        Formula::Eq(_, _) | Formula::Top | Formula::Bottom => f.clone(),
        Formula::Not(a) => Formula::not(instantiate_placeholders(a, bindings)?),
        Formula::And(a, b) => Formula::and(
            instantiate_placeholders(a, bindings)?,
            instantiate_placeholders(b, bindings)?,
        ),
        Formula::Or(a, b) => Formula::or(
            instantiate_placeholders(a, bindings)?,
            instantiate_placeholders(b, bindings)?,
        ),
        Formula::Implies(a, b) => Formula::implies(
            instantiate_placeholders(a, bindings)?,
            instantiate_placeholders(b, bindings)?,
        ),
        Formula::Forall(v, a) => {
            Formula::Forall(v.clone(), Box::new(instantiate_placeholders(a, bindings)?))
        }
        Formula::Exists(v, a) => {
            Formula::Exists(v.clone(), Box::new(instantiate_placeholders(a, bindings)?))
        }
    })
}

/// Instantiate a schema entry through the given bindings, yielding the
/// concrete first-order formula.
pub fn instantiate_schema(
    entry: &KBEntry,
    bindings: &BTreeMap<String, Binding>,
) -> Result<Formula, NetworkError> {
    let EntryKind::Schema { params } = &entry.kind else {
        return Err(NetworkError::NotASchema {
            label: entry.label.clone(),
        });
    };
    for p in params {
        if !bindings.contains_key(p) {
            return Err(NetworkError::UnboundSchemaParam { param: p.clone() });
        }
    }
    instantiate_placeholders(&entry.body, bindings)
}

fn used_placeholders(f: &Formula, placeholders: &BTreeSet<String>) -> Vec<String> {
    let mut out = Vec::new();
    collect_placeholder_uses(f, placeholders, &mut out);
    out
}

fn collect_placeholder_uses(f: &Formula, placeholders: &BTreeSet<String>, out: &mut Vec<String>) {
    match f {
        Formula::Atom(p, _) => {
            if placeholders.contains(p) && !out.contains(p) {
                out.push(p.clone());
            }
        }
        Formula::Eq(_, _) | Formula::Top | Formula::Bottom => {}
        Formula::Not(a) | Formula::Forall(_, a) | Formula::Exists(_, a) => {
            collect_placeholder_uses(a, placeholders, out)
        }
        Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
            collect_placeholder_uses(a, placeholders, out);
            collect_placeholder_uses(b, placeholders, out);
        }
    }
}

fn collect_binders(f: &Formula, out: &mut BTreeSet<String>) {
    match f {
        Formula::Not(a) => collect_binders(a, out),
        Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
            collect_binders(a, out);
            collect_binders(b, out);
        }
        Formula::Forall(v, a) | Formula::Exists(v, a) => {
            out.insert(v.clone());
            collect_binders(a, out);
        }
        _ => {}
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::annotated::validate_annotated;

    fn var(v: &str) -> Term {
        Term::var(v)
    }

    fn plus(a: Term, b: Term) -> Term {
        Term::fun("+", vec![a, b])
    }

    fn q_of(t: Term) -> Formula {
        Formula::atom("Q", vec![t])
    }

    /// x+1 = 1+x, the matrix of the worked example.
    fn commute_matrix(t: Term) -> Formula {
        Formula::eq(
            plus(t.clone(), Term::constant("1")),
            plus(Term::constant("1"), t),
        )
    }

    fn induction_schema_entry() -> KBEntry {
        // (Q(0) & forall x (Q(x) -> Q(x+1))) -> forall x Q(x)
        let body = Formula::implies(
            Formula::and(
                q_of(Term::constant("0")),
                Formula::forall(
                    "x",
                    Formula::implies(q_of(var("x")), q_of(plus(var("x"), Term::constant("1")))),
                ),
            ),
            Formula::forall("x", q_of(var("x"))),
        );
        KBEntry {
            label: "Ind".into(),
            kind: EntryKind::Schema {
                params: vec!["Q".into()],
            },
            body,
        }
    }

    fn commute_binding() -> BTreeMap<String, Binding> {
        let mut m = BTreeMap::new();
        m.insert(
            "Q".to_string(),
            Binding {
                params: vec!["x".into()],
                body: commute_matrix(var("x")),
            },
        );
        m
    }

    #[test]
    fn schema_instantiation_of_induction() {
        let inst = instantiate_schema(&induction_schema_entry(), &commute_binding()).unwrap();
        let expected = Formula::implies(
            Formula::and(
                commute_matrix(Term::constant("0")),
                Formula::forall(
                    "x",
                    Formula::implies(
                        commute_matrix(var("x")),
                        commute_matrix(plus(var("x"), Term::constant("1"))),
                    ),
                ),
            ),
            Formula::forall("x", commute_matrix(var("x"))),
        );
        assert_eq!(inst, expected);
    }

    #[test]
    fn trivial_schema_instantiation() {
        let entry = KBEntry {
            label: "S".into(),
            kind: EntryKind::Schema {
                params: vec!["Q".into()],
            },
            body: Formula::implies(q_of(Term::constant("0")), q_of(Term::constant("0"))),
        };
        let mut bindings = BTreeMap::new();
        bindings.insert(
            "Q".to_string(),
            Binding {
                params: vec!["x".into()],
                body: Formula::atom("p", vec![var("x")]),
            },
        );
        let inst = instantiate_schema(&entry, &bindings).unwrap();
        assert_eq!(
            inst,
            Formula::implies(
                Formula::atom("p", vec![Term::constant("0")]),
                Formula::atom("p", vec![Term::constant("0")])
            )
        );
    }

    #[test]
    fn arity_mismatch_is_reported() {
        let entry = induction_schema_entry();
        let mut bindings = BTreeMap::new();
        bindings.insert(
            "Q".to_string(),
            Binding {
                params: vec!["x".into(), "y".into()],
                body: Formula::eq(var("x"), var("y")),
            },
        );
        assert!(matches!(
            instantiate_schema(&entry, &bindings),
            Err(NetworkError::BindingArityMismatch {
                expected: 2,
                found: 1,
                ..
            })
        ));
    }

    #[test]
    fn instantiation_commutes_with_substitution() {
        // For variables not occurring in the binding body's parameters,
        // instantiate(sub(f)) == sub(instantiate(f)).
        let bindings = commute_binding();
        let f = Formula::forall(
            "y",
            Formula::implies(q_of(var("y")), q_of(plus(var("y"), var("z")))),
        );
        let s = Substitution::from_pairs([("z".to_string(), Term::constant("0"))]).unwrap();
        let a = instantiate_placeholders(&f.substitute(&s), &bindings).unwrap();
        let b = instantiate_placeholders(&f, &bindings).unwrap().substitute(&s);
        assert_eq!(a, b);
    }

    fn tiny_network() -> AgentNetwork {
        AgentNetwork {
            agents: vec![Agent {
                id: AgentId::new("a"),
                entries: vec![
                    KBEntry {
                        label: "ax1".into(),
                        kind: EntryKind::Axiom,
                        body: Formula::atom("p", vec![]),
                    },
                    KBEntry {
                        label: "ax2".into(),
                        kind: EntryKind::Axiom,
                        body: Formula::atom("q", vec![]),
                    },
                ],
            }],
            bindings: BTreeMap::new(),
            query: Query {
                goal: Formula::atom("r", vec![]),
                target: AgentId::new("a"),
            },
        }
    }

    #[test]
    fn expansion_is_negated_kb_then_goal() {
        let net = tiny_network();
        net.validate().unwrap();
        let exp = net
            .expand_agent(&AgentId::new("a"), &Formula::atom("r", vec![]))
            .unwrap();
        // ~p^a | ~q^a | r^a with three leaves
        let leaves = exp.leaves();
        assert_eq!(leaves.len(), 3);
        assert_eq!(leaves[0].0, &Formula::atom("p", vec![]));
        assert_eq!(leaves[2].0, &Formula::atom("r", vec![]));
        assert!(leaves.iter().all(|(_, env)| env.as_str() == "a"));
        // the expansion is well-formed by construction
        assert!(validate_annotated(&exp.to_raw()).is_ok());
    }

    #[test]
    fn expansion_of_empty_kb_is_just_the_goal() {
        let mut net = tiny_network();
        net.agents[0].entries.clear();
        let exp = net
            .expand_agent(&AgentId::new("a"), &Formula::atom("r", vec![]))
            .unwrap();
        assert_eq!(
            exp,
            AnnotatedFormula::leaf(Formula::atom("r", vec![]), AgentId::new("a"))
        );
    }

    #[test]
    fn validation_catches_unknown_provider() {
        let mut net = tiny_network();
        net.agents[0].entries.push(KBEntry {
            label: "L".into(),
            kind: EntryKind::QueryKnowledge {
                provider: AgentId::new("ghost"),
            },
            body: Formula::atom("p", vec![]),
        });
        assert!(matches!(
            net.validate(),
            Err(NetworkError::UnknownProvider { .. })
        ));
    }

    #[test]
    fn validation_catches_self_provider() {
        let mut net = tiny_network();
        net.agents[0].entries.push(KBEntry {
            label: "L".into(),
            kind: EntryKind::QueryKnowledge {
                provider: AgentId::new("a"),
            },
            body: Formula::atom("p", vec![]),
        });
        assert!(matches!(
            net.validate(),
            Err(NetworkError::SelfProvider { .. })
        ));
    }

    #[test]
    fn validation_catches_arity_clash() {
        let mut net = tiny_network();
        net.agents[0].entries.push(KBEntry {
            label: "bad".into(),
            kind: EntryKind::Axiom,
            body: Formula::atom("p", vec![Term::constant("c")]),
        });
        assert!(matches!(
            net.validate(),
            Err(NetworkError::ArityMismatch { .. })
        ));
    }
}
