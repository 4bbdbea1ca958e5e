//! Lemma flow diagrams: boxes for agents, circles for services, bullets
//! for knowledgebase membership, arrows from provider to consumer, and a
//! DOT rendering.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use crate::annotated::AgentId;
use crate::flow::canonical_lemma_key;
use crate::network::{AgentNetwork, EntryKind, NetworkError};

/// Where a service arrow starts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EdgeSource {
    /// An unidentified provider grants the service (axioms, instantiated
    /// schemas). Drawn with the arrow tail at the circle itself.
    Nature,
    Agent(AgentId),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ServiceCircle {
    /// Stable node id, unique within the diagram.
    pub id: String,
    /// The service formula, canonically rendered.
    pub label: String,
    /// Set iff the service is a knowledgebase entry of the edge target.
    pub bulleted: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramEdge {
    pub source: EdgeSource,
    /// Index into [`Diagram::circles`].
    pub service: usize,
    pub target: AgentId,
}

/// A lemma flow diagram. The query mark is the one unbulleted circle,
/// attached to the target box; its arrow counts toward [`edge_count`].
///
/// [`edge_count`]: Diagram::edge_count
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Diagram {
    /// One per agent, in declaration order, with the ordered service list.
    pub boxes: Vec<(AgentId, Vec<String>)>,
    pub circles: Vec<ServiceCircle>,
    pub edges: Vec<DiagramEdge>,
    /// Index of the query circle and the box it attaches to.
    pub query: Option<(usize, AgentId)>,
}

impl Diagram {
    /// Service edges plus the query arrow.
    pub fn edge_count(&self) -> usize {
        self.edges.len() + usize::from(self.query.is_some())
    }
}

/// Translate a validated network into its diagram: one box per agent, one
/// bulleted circle per knowledgebase entry (Nature-sourced for axioms and
/// instantiated schemas, provider-sourced for querying knowledge), and the
/// query as an unbulleted circle into the target box. A lemma queried from
/// the same provider by several consumers becomes one circle with an
/// outgoing edge per consumer.
pub fn build_diagram(net: &AgentNetwork) -> Result<Diagram, NetworkError> {
    let mut diagram = Diagram::default();
    let mut shared: HashMap<(AgentId, crate::flow::LemmaKey), usize> = HashMap::new();

    for agent in &net.agents {
        let labels: Vec<String> = agent.entries.iter().map(|e| e.label.clone()).collect();
        diagram.boxes.push((agent.id.clone(), labels));
    }
    for agent in &net.agents {
        for (entry, body) in net.instantiated_entries(&agent.id)? {
            match &entry.kind {
                EntryKind::Axiom | EntryKind::Schema { .. } => {
                    let service = diagram.circles.len();
                    diagram.circles.push(ServiceCircle {
                        id: format!("svc:{}:{}", agent.id, entry.label),
                        label: body.to_string(),
                        bulleted: true,
                    });
                    diagram.edges.push(DiagramEdge {
                        source: EdgeSource::Nature,
                        service,
                        target: agent.id.clone(),
                    });
                }
                EntryKind::QueryKnowledge { provider } => {
                    let key = (provider.clone(), canonical_lemma_key(&body));
                    let service = match shared.get(&key) {
                        Some(&idx) => idx,
                        None => {
                            let idx = diagram.circles.len();
                            diagram.circles.push(ServiceCircle {
                                id: format!("svc:{}:{}", provider, entry.label),
                                label: body.to_string(),
                                bulleted: true,
                            });
                            shared.insert(key, idx);
                            idx
                        }
                    };
                    diagram.edges.push(DiagramEdge {
                        source: EdgeSource::Agent(provider.clone()),
                        service,
                        target: agent.id.clone(),
                    });
                }
            }
        }
    }
    let goal = net.instantiate(&net.query.goal)?;
    let query_idx = diagram.circles.len();
    diagram.circles.push(ServiceCircle {
        id: "query".to_string(),
        label: goal.to_string(),
        bulleted: false,
    });
    diagram.query = Some((query_idx, net.query.target.clone()));
    Ok(diagram)
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Render as a DOT digraph. Nodes are emitted agents-first, then services
/// in declaration order; one edge statement per service arrow (a
/// provider-sourced service renders as the chain `provider -> circle ->
/// consumer` the first time, and as `circle -> consumer` for further
/// consumers of the shared circle). Output is deterministic byte-for-byte.
pub fn emit_dot(diagram: &Diagram) -> String {
    let mut out = String::new();
    out.push_str("digraph lfd {\n");
    if !diagram.boxes.is_empty() || !diagram.circles.is_empty() {
        out.push_str("  rankdir=LR;\n");
    }
    for (agent, _) in &diagram.boxes {
        let _ = writeln!(
            out,
            "  {} [shape=box, label={}];",
            quote(&format!("agent:{agent}")),
            quote(agent.as_str())
        );
    }
    for circle in &diagram.circles {
        let label = if circle.bulleted {
            format!("\u{2022} {}", circle.label)
        } else {
            circle.label.clone()
        };
        let _ = writeln!(
            out,
            "  {} [shape=ellipse, label={}];",
            quote(&circle.id),
            quote(&label)
        );
    }
    let mut tails_drawn: BTreeSet<(String, String)> = BTreeSet::new();
    for edge in &diagram.edges {
        let svc = quote(&diagram.circles[edge.service].id);
        let tgt = quote(&format!("agent:{}", edge.target));
        match &edge.source {
            EdgeSource::Nature => {
                let _ = writeln!(out, "  {svc} -> {tgt};");
            }
            EdgeSource::Agent(provider) => {
                let src = quote(&format!("agent:{provider}"));
                if tails_drawn.insert((src.clone(), svc.clone())) {
                    let _ = writeln!(out, "  {src} -> {svc} -> {tgt};");
                } else {
                    let _ = writeln!(out, "  {svc} -> {tgt};");
                }
            }
        }
    }
    if let Some((idx, target)) = &diagram.query {
        let _ = writeln!(
            out,
            "  {} -> {};",
            quote(&diagram.circles[*idx].id),
            quote(&format!("agent:{target}"))
        );
    }
    out.push_str("}\n");
    out
}
