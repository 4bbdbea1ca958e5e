//! Lemma-flow theorem proving over agent networks.
//!
//! The toolkit parses `.lfd` agent-network files, proves each agent's
//! sequent with a resolution prover, composes the sub-proofs into a single
//! lemma-flow proof, and renders the network as a lemma flow diagram in
//! DOT format.

pub mod annotated;
pub mod clause;
pub mod diagram;
pub mod flow;
pub mod formula;
pub mod interp;
pub mod network;
pub mod parse;
pub mod prover;
pub mod term;

pub use annotated::{AgentId, AnnotatedFormula};
pub use formula::Formula;
pub use network::AgentNetwork;
pub use term::{unify, Substitution, Term};
