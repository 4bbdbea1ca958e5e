//! Agent-annotated formulas.
//!
//! An annotated formula is built from first-order leaves, each played
//! against exactly one agent, closed under `~`, `&`, `|` and `->`. Trees
//! that switch environments inside an annotated body, or that leave
//! first-order content outside every annotation, are rejected.

use std::fmt;

use crate::formula::Formula;
use crate::term::Term;

/// Name of an agent (a machine/environment in the network).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AgentId(String);

impl AgentId {
    pub fn new(name: &str) -> AgentId {
        assert!(!name.is_empty(), "agent name must be nonempty");
        AgentId(name.to_string())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for AgentId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An expression tree in which annotations may appear anywhere.
/// [`validate_annotated`] carves out the well-formed class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OmegaExpr {
    Atom(String, Vec<Term>),
    Eq(Term, Term),
    Top,
    Bottom,
    Not(Box<OmegaExpr>),
    And(Box<OmegaExpr>, Box<OmegaExpr>),
    Or(Box<OmegaExpr>, Box<OmegaExpr>),
    Implies(Box<OmegaExpr>, Box<OmegaExpr>),
    Forall(String, Box<OmegaExpr>),
    Exists(String, Box<OmegaExpr>),
    Annotated(Box<OmegaExpr>, AgentId),
}

impl OmegaExpr {
    pub fn annotated(body: OmegaExpr, env: AgentId) -> OmegaExpr {
        OmegaExpr::Annotated(Box::new(body), env)
    }

    fn contains_annotation(&self) -> bool {
        match self {
            OmegaExpr::Annotated(_, _) => true,
            OmegaExpr::Atom(_, _) | OmegaExpr::Eq(_, _) | OmegaExpr::Top | OmegaExpr::Bottom => {
                false
            }
            OmegaExpr::Not(a) | OmegaExpr::Forall(_, a) | OmegaExpr::Exists(_, a) => {
                a.contains_annotation()
            }
            OmegaExpr::And(a, b) | OmegaExpr::Or(a, b) | OmegaExpr::Implies(a, b) => {
                a.contains_annotation() || b.contains_annotation()
            }
        }
    }

    /// Path to the first annotation inside this subtree, if any.
    fn find_annotation(&self, path: &mut Vec<usize>) -> Option<(Vec<usize>, AgentId)> {
        match self {
            OmegaExpr::Annotated(_, env) => Some((path.clone(), env.clone())),
            OmegaExpr::Atom(_, _) | OmegaExpr::Eq(_, _) | OmegaExpr::Top | OmegaExpr::Bottom => {
                None
            }
            OmegaExpr::Not(a) | OmegaExpr::Forall(_, a) | OmegaExpr::Exists(_, a) => {
                path.push(0);
                let r = a.find_annotation(path);
                path.pop();
                r
            }
            OmegaExpr::And(a, b) | OmegaExpr::Or(a, b) | OmegaExpr::Implies(a, b) => {
                path.push(0);
                if let Some(hit) = a.find_annotation(path) {
                    path.pop();
                    return Some(hit);
                }
                path.pop();
                path.push(1);
                let r = b.find_annotation(path);
                path.pop();
                r
            }
        }
    }

    /// Strict conversion to a first-order formula; annotations are not
    /// first-order content.
    pub fn to_formula(&self) -> Result<Formula, AnnotationError> {
        match self {
            OmegaExpr::Atom(p, args) => Ok(Formula::Atom(p.clone(), args.clone())),
            OmegaExpr::Eq(l, r) => Ok(Formula::Eq(l.clone(), r.clone())),
            OmegaExpr::Top => Ok(Formula::Top),
            OmegaExpr::Bottom => Ok(Formula::Bottom),
            OmegaExpr::Not(a) => Ok(Formula::not(a.to_formula()?)),
            OmegaExpr::And(a, b) => Ok(Formula::and(a.to_formula()?, b.to_formula()?)),
            OmegaExpr::Or(a, b) => Ok(Formula::or(a.to_formula()?, b.to_formula()?)),
            OmegaExpr::Implies(a, b) => Ok(Formula::implies(a.to_formula()?, b.to_formula()?)),
            OmegaExpr::Forall(v, a) => Ok(Formula::Forall(v.clone(), Box::new(a.to_formula()?))),
            OmegaExpr::Exists(v, a) => Ok(Formula::Exists(v.clone(), Box::new(a.to_formula()?))),
            OmegaExpr::Annotated(_, env) => Err(AnnotationError::AnnotationNotAllowed {
                env: env.clone(),
            }),
        }
    }
}

/// A validated annotated formula: annotations exactly at the first-order
/// leaves, closed under the four propositional connectives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnnotatedFormula {
    Leaf { body: Formula, env: AgentId },
    Not(Box<AnnotatedFormula>),
    And(Box<AnnotatedFormula>, Box<AnnotatedFormula>),
    Or(Box<AnnotatedFormula>, Box<AnnotatedFormula>),
    Implies(Box<AnnotatedFormula>, Box<AnnotatedFormula>),
}

impl AnnotatedFormula {
    pub fn leaf(body: Formula, env: AgentId) -> AnnotatedFormula {
        AnnotatedFormula::Leaf { body, env }
    }

    /// Leaves in left-to-right order.
    pub fn leaves(&self) -> Vec<(&Formula, &AgentId)> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves<'a>(&'a self, out: &mut Vec<(&'a Formula, &'a AgentId)>) {
        match self {
            AnnotatedFormula::Leaf { body, env } => out.push((body, env)),
            AnnotatedFormula::Not(a) => a.collect_leaves(out),
            AnnotatedFormula::And(a, b)
            | AnnotatedFormula::Or(a, b)
            | AnnotatedFormula::Implies(a, b) => {
                a.collect_leaves(out);
                b.collect_leaves(out);
            }
        }
    }

    /// The raw tree this formula denotes.
    pub fn to_raw(&self) -> OmegaExpr {
        match self {
            AnnotatedFormula::Leaf { body, env } => {
                OmegaExpr::annotated(formula_to_omega(body), env.clone())
            }
            AnnotatedFormula::Not(a) => OmegaExpr::Not(Box::new(a.to_raw())),
            AnnotatedFormula::And(a, b) => {
                OmegaExpr::And(Box::new(a.to_raw()), Box::new(b.to_raw()))
            }
            AnnotatedFormula::Or(a, b) => {
                OmegaExpr::Or(Box::new(a.to_raw()), Box::new(b.to_raw()))
            }
            AnnotatedFormula::Implies(a, b) => {
                OmegaExpr::Implies(Box::new(a.to_raw()), Box::new(b.to_raw()))
            }
        }
    }
}

impl fmt::Display for AnnotatedFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnnotatedFormula::Leaf { body, env } => write!(f, "({body})^{env}"),
            AnnotatedFormula::Not(a) => write!(f, "~{a}"),
            AnnotatedFormula::And(a, b) => write!(f, "({a} & {b})"),
            AnnotatedFormula::Or(a, b) => write!(f, "({a} | {b})"),
            AnnotatedFormula::Implies(a, b) => write!(f, "({a} -> {b})"),
        }
    }
}

fn formula_to_omega(f: &Formula) -> OmegaExpr {
    match f {
        Formula::Atom(p, args) => OmegaExpr::Atom(p.clone(), args.clone()),
        Formula::Eq(l, r) => OmegaExpr::Eq(l.clone(), r.clone()),
        Formula::Top => OmegaExpr::Top,
        Formula::Bottom => OmegaExpr::Bottom,
        Formula::Not(a) => OmegaExpr::Not(Box::new(formula_to_omega(a))),
        Formula::And(a, b) => {
            OmegaExpr::And(Box::new(formula_to_omega(a)), Box::new(formula_to_omega(b)))
        }
        Formula::Or(a, b) => {
            OmegaExpr::Or(Box::new(formula_to_omega(a)), Box::new(formula_to_omega(b)))
        }
        Formula::Implies(a, b) => {
            OmegaExpr::Implies(Box::new(formula_to_omega(a)), Box::new(formula_to_omega(b)))
        }
        Formula::Forall(v, a) => OmegaExpr::Forall(v.clone(), Box::new(formula_to_omega(a))),
        Formula::Exists(v, a) => OmegaExpr::Exists(v.clone(), Box::new(formula_to_omega(a))),
    }
}

/// Why a raw tree is not a well-formed annotated formula.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AnnotationError {
    /// An annotation occurs inside the body of another annotation: the
    /// machine would have to switch environments mid-service.
    #[error("nested annotation ^{inner} at {inner_path} inside annotation ^{outer} at {outer_path}")]
    NestedAnnotation {
        outer: AgentId,
        outer_path: TreePath,
        inner: AgentId,
        inner_path: TreePath,
    },
    /// First-order content with no matching environment.
    #[error("unannotated first-order content at {path}")]
    UnannotatedLeaf { path: TreePath },
    /// A quantifier in the outer layer scopes over annotated content.
    #[error("annotation under a quantifier at {path}: quantifiers belong inside a single annotation")]
    AnnotationUnderQuantifier { path: TreePath },
    /// An annotation occurred where plain first-order syntax was required.
    #[error("annotation ^{env} not allowed in a first-order formula")]
    AnnotationNotAllowed { env: AgentId },
}

/// A path from the root of a raw tree: child indices, rendered `$.0.1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreePath(pub Vec<usize>);

impl fmt::Display for TreePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "$")?;
        for i in &self.0 {
            write!(f, ".{i}")?;
        }
        Ok(())
    }
}

/// Accept a raw tree iff annotations occur exactly at the first-order
/// leaves of the outer connective layer.
pub fn validate_annotated(raw: &OmegaExpr) -> Result<AnnotatedFormula, AnnotationError> {
    validate_at(raw, &mut Vec::new())
}

fn validate_at(raw: &OmegaExpr, path: &mut Vec<usize>) -> Result<AnnotatedFormula, AnnotationError> {
    match raw {
        OmegaExpr::Annotated(body, env) => {
            if let Some((inner_path, inner)) = {
                let mut p = Vec::new();
                body.find_annotation(&mut p)
            } {
                let mut abs = path.clone();
                abs.push(0);
                abs.extend(inner_path);
                return Err(AnnotationError::NestedAnnotation {
                    outer: env.clone(),
                    outer_path: TreePath(path.clone()),
                    inner,
                    inner_path: TreePath(abs),
                });
            }
            let body = body.to_formula().expect("annotation-free body");
            Ok(AnnotatedFormula::Leaf {
                body,
                env: env.clone(),
            })
        }
        OmegaExpr::Not(a) => {
            path.push(0);
            let r = validate_at(a, path);
            path.pop();
            Ok(AnnotatedFormula::Not(Box::new(r?)))
        }
        OmegaExpr::And(a, b) | OmegaExpr::Or(a, b) | OmegaExpr::Implies(a, b) => {
            path.push(0);
            let left = validate_at(a, path);
            path.pop();
            let left = left?;
            path.push(1);
            let right = validate_at(b, path);
            path.pop();
            let right = right?;
            Ok(match raw {
                OmegaExpr::And(_, _) => AnnotatedFormula::And(Box::new(left), Box::new(right)),
                OmegaExpr::Or(_, _) => AnnotatedFormula::Or(Box::new(left), Box::new(right)),
                _ => AnnotatedFormula::Implies(Box::new(left), Box::new(right)),
            })
        }
        OmegaExpr::Forall(_, body) | OmegaExpr::Exists(_, body) => {
            if body.contains_annotation() {
                Err(AnnotationError::AnnotationUnderQuantifier {
                    path: TreePath(path.clone()),
                })
            } else {
                Err(AnnotationError::UnannotatedLeaf {
                    path: TreePath(path.clone()),
                })
            }
        }
        OmegaExpr::Atom(_, _) | OmegaExpr::Eq(_, _) | OmegaExpr::Top | OmegaExpr::Bottom => {
            Err(AnnotationError::UnannotatedLeaf {
                path: TreePath(path.clone()),
            })
        }
    }
}
