//! Lemma-flow orchestration: plan the lemma dependency graph over an agent
//! network, prove every shared lemma once at its matching environment, then
//! prove the main goal with the proved lemmas as extra hypotheses, and
//! compose the sub-results into one proof object.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::fmt::Write as _;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use crate::annotated::AgentId;
use crate::formula::Formula;
use crate::network::{AgentNetwork, EntryKind, NetworkError};
use crate::prover::{prove, ProofResult, ProofStatus, ResourceLimits, Sequent};

/// Cache identity of a lemma: alpha-equivalent formulas get equal keys.
/// Comparison is full structural equality on the normalized formula.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LemmaKey(Formula);

impl fmt::Display for LemmaKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Key a closed lemma for sharing: universal closure, then canonical
/// renaming of every bound variable.
pub fn canonical_lemma_key(f: &Formula) -> LemmaKey {
    LemmaKey(f.universal_closure().alpha_normalize())
}

/// One shared lemma to be proved by its provider.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaTask {
    pub label: String,
    /// The concrete (instantiated) lemma.
    pub lemma: Formula,
    pub provider: AgentId,
    pub consumers: BTreeSet<AgentId>,
    /// Indices of tasks that must be proved first: the provider's own
    /// querying-knowledge lemmas.
    pub dependencies: Vec<usize>,
}

/// The dependency plan: lemma tasks in a topological order (dependencies
/// always precede dependents) and the root obligation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaFlowPlan {
    pub tasks: Vec<LemmaTask>,
    pub root_goal: Formula,
    pub root_target: AgentId,
    pub root_dependencies: Vec<usize>,
}

impl LemmaFlowPlan {
    /// Task labels in execution order, ending with "root".
    pub fn order(&self) -> Vec<String> {
        let mut out: Vec<String> = self.tasks.iter().map(|t| t.label.clone()).collect();
        out.push("root".to_string());
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PlanError {
    #[error("querying cycle: {}", .0.iter().map(|a| a.as_str()).collect::<Vec<_>>().join(" -> "))]
    Cycle(Vec<AgentId>),
    #[error(transparent)]
    Network(#[from] NetworkError),
}

/// Build the lemma dependency plan for the network's query. One task per
/// distinct (provider, canonical lemma) pair reachable from the target;
/// a lemma queried by several consumers is planned once and shared.
pub fn plan(net: &AgentNetwork) -> Result<LemmaFlowPlan, PlanError> {
    struct Planner<'a> {
        net: &'a AgentNetwork,
        tasks: Vec<LemmaTask>,
        by_key: HashMap<(AgentId, LemmaKey), usize>,
        done: BTreeMap<AgentId, Vec<usize>>,
        stack: Vec<AgentId>,
    }

    impl Planner<'_> {
        fn visit(&mut self, agent: &AgentId) -> Result<Vec<usize>, PlanError> {
            if let Some(ids) = self.done.get(agent) {
                return Ok(ids.clone());
            }
            if let Some(pos) = self.stack.iter().position(|a| a == agent) {
                let mut cycle: Vec<AgentId> = self.stack[pos..].to_vec();
                cycle.push(agent.clone());
                return Err(PlanError::Cycle(cycle));
            }
            self.stack.push(agent.clone());
            let mut ids = Vec::new();
            let entries = self
                .net
                .agent(agent)
                .expect("validated network")
                .entries
                .clone();
            for entry in &entries {
                let EntryKind::QueryKnowledge { provider } = &entry.kind else {
                    continue;
                };
                let deps = self.visit(provider)?;
                let lemma = self.net.instantiate(&entry.body)?;
                let key = (provider.clone(), canonical_lemma_key(&lemma));
                match self.by_key.get(&key) {
                    Some(&idx) => {
                        self.tasks[idx].consumers.insert(agent.clone());
                        if !ids.contains(&idx) {
                            ids.push(idx);
                        }
                    }
                    None => {
                        let idx = self.tasks.len();
                        self.tasks.push(LemmaTask {
                            label: entry.label.clone(),
                            lemma,
                            provider: provider.clone(),
                            consumers: BTreeSet::from([agent.clone()]),
                            dependencies: deps,
                        });
                        self.by_key.insert(key, idx);
                        ids.push(idx);
                    }
                }
            }
            self.stack.pop();
            self.done.insert(agent.clone(), ids.clone());
            Ok(ids)
        }
    }

    let mut planner = Planner {
        net,
        tasks: Vec::new(),
        by_key: HashMap::new(),
        done: BTreeMap::new(),
        stack: Vec::new(),
    };
    let root_dependencies = planner.visit(&net.query.target)?;
    let root_goal = net.instantiate(&net.query.goal)?;
    Ok(LemmaFlowPlan {
        tasks: planner.tasks,
        root_goal,
        root_target: net.query.target.clone(),
        root_dependencies,
    })
}

/// Shared results of lemma proofs, keyed by provider and canonical lemma
/// form. Insertion is first-writer-wins so concurrent discharge schedules
/// agree on the stored result.
#[derive(Debug, Default)]
pub struct LemmaCache {
    map: Mutex<HashMap<(AgentId, LemmaKey), ProofResult>>,
}

impl LemmaCache {
    pub fn new() -> Self {
        LemmaCache::default()
    }

    pub fn get(&self, provider: &AgentId, key: &LemmaKey) -> Option<ProofResult> {
        self.map
            .lock()
            .unwrap()
            .get(&(provider.clone(), key.clone()))
            .cloned()
    }

    /// Store a settled result; an already-present entry wins.
    pub fn insert_first(&self, provider: &AgentId, key: &LemmaKey, result: ProofResult) {
        self.map
            .lock()
            .unwrap()
            .entry((provider.clone(), key.clone()))
            .or_insert(result);
    }

    pub fn len(&self) -> usize {
        self.map.lock().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Final status of one task in a discharge run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TaskStatus {
    Proved,
    Exhausted,
    Timeout,
    /// Not attempted: some dependency was not proved.
    DependencyFailed,
}

impl TaskStatus {
    fn of(status: ProofStatus) -> TaskStatus {
        match status {
            ProofStatus::Proved => TaskStatus::Proved,
            ProofStatus::Exhausted => TaskStatus::Exhausted,
            ProofStatus::Timeout => TaskStatus::Timeout,
        }
    }
}

impl fmt::Display for TaskStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TaskStatus::Proved => write!(f, "proved"),
            TaskStatus::Exhausted => write!(f, "exhausted"),
            TaskStatus::Timeout => write!(f, "timeout"),
            TaskStatus::DependencyFailed => write!(f, "dependency-failed"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TaskReport {
    pub label: String,
    pub provider: AgentId,
    pub status: TaskStatus,
    /// Prover output; absent when the task was not attempted.
    pub result: Option<ProofResult>,
}

/// The composed result of a lemma-flow run: the root sequent's outcome,
/// every lemma outcome, and the record of which lemmas entered the root
/// sequent as hypotheses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaFlowProof {
    pub lemmas: Vec<TaskReport>,
    pub root: TaskReport,
    pub goal: Formula,
    pub target: AgentId,
    /// Labels of the lemma tasks whose formulas became root hypotheses.
    pub composition: Vec<String>,
    /// One entry per prover invocation: (provider, canonical lemma key).
    pub audit: Vec<(AgentId, String)>,
}

impl LemmaFlowProof {
    /// Proved iff the root and every lemma are proved.
    pub fn proved(&self) -> bool {
        self.root.status == TaskStatus::Proved
            && self.lemmas.iter().all(|t| t.status == TaskStatus::Proved)
    }

    /// Line-oriented report; stable bytes for fixed inputs and limits.
    /// Wall-clock figures are deliberately excluded.
    pub fn render_report(&self, full_trace: bool) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "overall: {}", if self.proved() { "proved" } else { "failed" });
        let _ = writeln!(out, "goal: {} @ {}", self.goal, self.target);
        let _ = writeln!(out, "tasks: {}", self.lemmas.len() + 1);
        for t in self.lemmas.iter().chain(std::iter::once(&self.root)) {
            let _ = write!(out, "task {} provider={} status={}", t.label, t.provider, t.status);
            if let Some(r) = &t.result {
                let _ = write!(
                    out,
                    " kept={} generated={} depth={}",
                    r.stats.kept, r.stats.generated, r.stats.depth
                );
            }
            out.push('\n');
        }
        let _ = writeln!(
            out,
            "composition: root uses lemmas [{}]",
            self.composition.join(", ")
        );
        if full_trace {
            for t in self.lemmas.iter().chain(std::iter::once(&self.root)) {
                if let Some(trace) = t.result.as_ref().and_then(|r| r.trace.as_ref()) {
                    out.push('\n');
                    let _ = writeln!(out, "trace {}:", t.label);
                    out.push_str(&trace.render());
                }
            }
        }
        out
    }
}

/// The axioms an agent contributes as hypotheses: its axiom entries and
/// instantiated schemas, in declaration order.
fn agent_axioms(net: &AgentNetwork, agent: &AgentId) -> Result<Vec<Formula>, NetworkError> {
    Ok(net
        .instantiated_entries(agent)?
        .into_iter()
        .filter(|(e, _)| !matches!(e.kind, EntryKind::QueryKnowledge { .. }))
        .map(|(_, f)| f)
        .collect())
}

/// The sequent a lemma task proves: the provider's own axioms plus the
/// lemmas of its dependencies, entailing the task's lemma.
pub fn task_sequent(net: &AgentNetwork, plan: &LemmaFlowPlan, task: usize) -> Sequent {
    let t = &plan.tasks[task];
    let mut hypotheses = agent_axioms(net, &t.provider).expect("validated network");
    for &d in &t.dependencies {
        hypotheses.push(plan.tasks[d].lemma.clone());
    }
    Sequent {
        hypotheses,
        goal: t.lemma.clone(),
        owner: t.provider.clone(),
    }
}

/// The root sequent: the target's axioms plus every root-dependency lemma,
/// entailing the main goal.
pub fn root_sequent(net: &AgentNetwork, plan: &LemmaFlowPlan) -> Sequent {
    let mut hypotheses = agent_axioms(net, &plan.root_target).expect("validated network");
    for &d in &plan.root_dependencies {
        hypotheses.push(plan.tasks[d].lemma.clone());
    }
    Sequent {
        hypotheses,
        goal: plan.root_goal.clone(),
        owner: plan.root_target.clone(),
    }
}

/// Run the plan: prove each lemma at its provider (consulting the cache
/// first), then the root goal at the target with every proved lemma as an
/// extra hypothesis. A failed lemma marks its dependents dependency-failed
/// without invoking the prover on them; the overall result is proved only
/// when every subproof is.
pub fn discharge(
    net: &AgentNetwork,
    plan: &LemmaFlowPlan,
    limits: &ResourceLimits,
    jobs: usize,
) -> LemmaFlowProof {
    let jobs = jobs.max(1);
    let cache = LemmaCache::new();
    let audit: Mutex<Vec<(AgentId, String)>> = Mutex::new(Vec::new());

    // level = longest dependency chain below the task; tasks within one
    // level are independent and may run concurrently
    let mut level = vec![0usize; plan.tasks.len()];
    for (i, t) in plan.tasks.iter().enumerate() {
        level[i] = t
            .dependencies
            .iter()
            .map(|&d| level[d] + 1)
            .max()
            .unwrap_or(0);
    }
    let max_level = level.iter().copied().max().unwrap_or(0);

    let mut settled: Vec<Option<TaskReport>> = vec![None; plan.tasks.len()];
    for current in 0..=max_level {
        let batch: Vec<usize> = (0..plan.tasks.len())
            .filter(|&i| level[i] == current)
            .collect();
        let outcomes: Vec<(usize, TaskReport)> = run_batch(&batch, jobs, |i| {
            let task = &plan.tasks[i];
            let failed_dep = task
                .dependencies
                .iter()
                .any(|&d| settled[d].as_ref().map(|r| r.status) != Some(TaskStatus::Proved));
            if failed_dep {
                return TaskReport {
                    label: task.label.clone(),
                    provider: task.provider.clone(),
                    status: TaskStatus::DependencyFailed,
                    result: None,
                };
            }
            let sequent = task_sequent(net, plan, i);
            let result = prove_cached(&cache, &audit, &task.provider, &task.lemma, &sequent, limits);
            TaskReport {
                label: task.label.clone(),
                provider: task.provider.clone(),
                status: TaskStatus::of(result.status),
                result: Some(result),
            }
        });
        for (i, report) in outcomes {
            settled[i] = Some(report);
        }
    }
    let lemmas: Vec<TaskReport> = settled.into_iter().map(|r| r.unwrap()).collect();

    // root: target's axioms plus all proved lemmas
    let all_deps_proved = plan
        .root_dependencies
        .iter()
        .all(|&d| lemmas[d].status == TaskStatus::Proved);
    let composition: Vec<String> = plan
        .root_dependencies
        .iter()
        .map(|&d| plan.tasks[d].label.clone())
        .collect();
    let root = if all_deps_proved {
        let sequent = root_sequent(net, plan);
        let result = prove_cached(
            &cache,
            &audit,
            &plan.root_target,
            &plan.root_goal,
            &sequent,
            limits,
        );
        TaskReport {
            label: "root".to_string(),
            provider: plan.root_target.clone(),
            status: TaskStatus::of(result.status),
            result: Some(result),
        }
    } else {
        TaskReport {
            label: "root".to_string(),
            provider: plan.root_target.clone(),
            status: TaskStatus::DependencyFailed,
            result: None,
        }
    };

    LemmaFlowProof {
        lemmas,
        root,
        goal: plan.root_goal.clone(),
        target: plan.root_target.clone(),
        composition,
        audit: audit.into_inner().unwrap(),
    }
}

fn prove_cached(
    cache: &LemmaCache,
    audit: &Mutex<Vec<(AgentId, String)>>,
    provider: &AgentId,
    lemma: &Formula,
    sequent: &Sequent,
    limits: &ResourceLimits,
) -> ProofResult {
    let key = canonical_lemma_key(lemma);
    if let Some(hit) = cache.get(provider, &key) {
        return hit;
    }
    audit
        .lock()
        .unwrap()
        .push((provider.clone(), key.to_string()));
    let result = prove(sequent, limits).expect("validated network yields well-formed sequents");
    cache.insert_first(provider, &key, result.clone());
    result
}

/// Run `work` over the indices in `batch` on up to `jobs` threads.
fn run_batch<F>(batch: &[usize], jobs: usize, work: F) -> Vec<(usize, TaskReport)>
where
    F: Fn(usize) -> TaskReport + Sync,
{
    if jobs == 1 || batch.len() <= 1 {
        return batch.iter().map(|&i| (i, work(i))).collect();
    }
    let next = AtomicUsize::new(0);
    let results: Mutex<Vec<(usize, TaskReport)>> = Mutex::new(Vec::with_capacity(batch.len()));
    std::thread::scope(|scope| {
        for _ in 0..jobs.min(batch.len()) {
            scope.spawn(|| loop {
                let n = next.fetch_add(1, Ordering::SeqCst);
                if n >= batch.len() {
                    break;
                }
                let i = batch[n];
                let report = work(i);
                results.lock().unwrap().push((i, report));
            });
        }
    });
    results.into_inner().unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_network;
    use crate::prover::replay;

    fn peano() -> AgentNetwork {
        parse_network(&crate::parse::peano_source()).unwrap()
    }

    fn generous() -> ResourceLimits {
        ResourceLimits::default().without_wall_clock()
    }

    #[test]
    fn peano_plan_has_two_lemma_tasks() {
        let net = peano();
        let p = plan(&net).unwrap();
        assert_eq!(p.tasks.len(), 2);
        assert_eq!(p.tasks[0].label, "Q0");
        assert_eq!(p.tasks[0].provider, AgentId::new("m1"));
        assert_eq!(p.tasks[0].lemma.to_string(), "0 + 1 = 1 + 0");
        assert_eq!(p.tasks[1].label, "Step");
        assert_eq!(p.tasks[1].provider, AgentId::new("m1"));
        assert!(p.tasks.iter().all(|t| t.dependencies.is_empty()));
        assert_eq!(p.root_dependencies, vec![0, 1]);
        assert_eq!(p.order(), vec!["Q0", "Step", "root"]);
    }

    #[test]
    fn plan_without_queries_is_empty() {
        let net = parse_network("agent a. axiom p. end. ?- p @ a.").unwrap();
        let p = plan(&net).unwrap();
        assert!(p.tasks.is_empty());
        assert_eq!(p.order(), vec!["root"]);
    }

    #[test]
    fn mutual_queries_are_a_cycle() {
        let net = parse_network(
            "agent a. query La from b: p. end. \
             agent b. query Lb from a: q. end. \
             ?- p @ a.",
        )
        .unwrap();
        match plan(&net) {
            Err(PlanError::Cycle(path)) => {
                assert_eq!(path.first(), path.last());
                assert!(path.len() >= 3);
            }
            other => panic!("expected cycle, got {other:?}"),
        }
    }

    #[test]
    fn peano_discharge_proves_everything() {
        let net = peano();
        let p = plan(&net).unwrap();
        let proof = discharge(&net, &p, &generous(), 1);
        assert!(proof.proved());
        assert_eq!(proof.lemmas.len(), 2);
        for t in proof.lemmas.iter().chain(std::iter::once(&proof.root)) {
            assert_eq!(t.status, TaskStatus::Proved, "task {}", t.label);
            assert!(t.result.as_ref().unwrap().trace.is_some());
        }
        assert_eq!(proof.composition, vec!["Q0", "Step"]);
        // one prover call per task
        assert_eq!(proof.audit.len(), 3);
    }

    #[test]
    fn degenerate_discharge_equals_single_prove() {
        let net = parse_network("agent a. axiom p. axiom p -> q. end. ?- q @ a.").unwrap();
        let p = plan(&net).unwrap();
        let proof = discharge(&net, &p, &generous(), 1);
        assert!(proof.proved());
        let direct = prove(
            &Sequent {
                hypotheses: vec![
                    crate::parse::parse_formula("p").unwrap(),
                    crate::parse::parse_formula("p -> q").unwrap(),
                ],
                goal: crate::parse::parse_formula("q").unwrap(),
                owner: AgentId::new("a"),
            },
            &generous(),
        )
        .unwrap();
        assert_eq!(proof.root.result.as_ref().unwrap(), &direct);
    }

    #[test]
    fn shared_lemma_is_planned_and_proved_once() {
        // two consumers query the same lemma from the same provider
        let net = parse_network(
            "agent src. axiom p. end. \
             agent a. query L from src: p. axiom p -> q. end. \
             agent b. query K from src: p. axiom p -> r. end. \
             agent top. query H1 from a: q. query H2 from b: r. end. \
             ?- r @ top.",
        )
        .unwrap();
        let p = plan(&net).unwrap();
        // tasks: p@src (shared), q@a, r@b
        assert_eq!(p.tasks.len(), 3);
        let shared = &p.tasks[0];
        assert_eq!(shared.provider, AgentId::new("src"));
        assert_eq!(shared.consumers.len(), 2);
        let proof = discharge(&net, &p, &generous(), 1);
        assert!(proof.proved());
        // four prover invocations: three lemmas and the root, each once
        assert_eq!(proof.audit.len(), 4);
        let mut distinct = proof.audit.clone();
        distinct.sort();
        distinct.dedup();
        assert_eq!(distinct.len(), proof.audit.len());
    }

    #[test]
    fn failed_lemma_blocks_dependents_without_prover_calls() {
        // q is unprovable at src; a's own lemma depends on it, and the root
        // depends on a's lemma
        let net = parse_network(
            "agent src. axiom p. end. \
             agent a. query L from src: q. axiom p -> r. end. \
             agent top. query H from a: r. end. \
             ?- r @ top.",
        )
        .unwrap();
        let p = plan(&net).unwrap();
        assert_eq!(p.tasks.len(), 2);
        let small = ResourceLimits {
            max_clauses: 200,
            max_depth: 8,
            max_millis: 5_000,
        }
        .without_wall_clock();
        let proof = discharge(&net, &p, &small, 1);
        assert!(!proof.proved());
        assert_eq!(proof.lemmas[0].status, TaskStatus::Exhausted);
        assert_eq!(proof.lemmas[1].status, TaskStatus::DependencyFailed);
        assert!(proof.lemmas[1].result.is_none());
        assert_eq!(proof.root.status, TaskStatus::DependencyFailed);
        assert!(proof.root.result.is_none());
        // exactly one prover invocation: the failing lemma itself
        assert_eq!(proof.audit.len(), 1);
    }

    #[test]
    fn reports_are_identical_across_job_counts() {
        let net = peano();
        let p = plan(&net).unwrap();
        let a = discharge(&net, &p, &generous(), 1).render_report(true);
        let b = discharge(&net, &p, &generous(), 8).render_report(true);
        assert_eq!(a, b);
    }

    #[test]
    fn proved_results_replay() {
        let net = peano();
        let p = plan(&net).unwrap();
        let proof = discharge(&net, &p, &generous(), 2);
        assert!(proof.proved());
        // rebuild each sequent and replay its trace
        for (i, t) in proof.lemmas.iter().enumerate() {
            let task = &p.tasks[i];
            let mut hypotheses = agent_axioms(&net, &task.provider).unwrap();
            for &d in &task.dependencies {
                hypotheses.push(p.tasks[d].lemma.clone());
            }
            let sequent = Sequent {
                hypotheses,
                goal: task.lemma.clone(),
                owner: task.provider.clone(),
            };
            assert!(replay(
                t.result.as_ref().unwrap().trace.as_ref().unwrap(),
                &sequent
            ));
        }
    }

    #[test]
    fn goal_placeholders_are_instantiated_before_proving() {
        // the query itself mentions the bound predicate
        let net = parse_network(
            "agent a. axiom p(0). end. let Q(x) := p(x). ?- Q(0) @ a.",
        )
        .unwrap();
        let p = plan(&net).unwrap();
        assert_eq!(p.root_goal.to_string(), "p(0)");
        let proof = discharge(&net, &p, &generous(), 1);
        assert!(proof.proved());
    }

    #[test]
    fn composition_is_sound_on_finite_models() {
        // Whenever discharge reports proved, the union of every agent's
        // axioms must entail the goal; confirmed by model enumeration on
        // randomly generated propositional-style networks.
        use rand::prelude::*;
        use rand_chacha::ChaCha8Rng;

        let mut rng = ChaCha8Rng::seed_from_u64(0xf10e);
        let atoms = ["p", "q", "r", "s"];
        let mut proved_count = 0;
        for _ in 0..60 {
            // src holds 1-2 facts; mid queries one and derives; top asks mid
            let fact = atoms[rng.gen_range(0..2)];
            let derived = atoms[rng.gen_range(2..4)];
            let extra = atoms[rng.gen_range(0..4)];
            let src_text = format!("agent src. axiom {fact}. axiom {extra}. end.");
            let mid_text = format!(
                "agent mid. query L from src: {fact}. axiom {fact} -> {derived}. end."
            );
            let goal = if rng.gen_bool(0.7) { derived } else { atoms[rng.gen_range(0..4)] };
            let text = format!("{src_text} {mid_text} ?- {goal} @ mid.");
            let net = parse_network(&text).unwrap();
            let p = plan(&net).unwrap();
            let small = ResourceLimits {
                max_clauses: 500,
                max_depth: 10,
                max_millis: 5_000,
            }
            .without_wall_clock();
            let proof = discharge(&net, &p, &small, 1);
            if !proof.proved() {
                continue;
            }
            proved_count += 1;
            let mut all_axioms: Vec<crate::formula::Formula> = Vec::new();
            for agent in &net.agents {
                all_axioms.extend(agent_axioms(&net, &agent.id).unwrap());
            }
            let goal_f = net.instantiate(&net.query.goal).unwrap();
            assert!(
                crate::interp::entails_finitely(&all_axioms, &goal_f, &[1, 2, 3]),
                "discharge proved {text} but the axioms do not entail the goal"
            );
        }
        assert!(proved_count >= 10, "suite too weak: only {proved_count} proved");
    }

    #[test]
    fn alpha_equivalent_lemmas_share_a_key() {
        let f = crate::parse::parse_formula("forall x (p(x))").unwrap();
        let g = crate::parse::parse_formula("forall y (p(y))").unwrap();
        assert_eq!(canonical_lemma_key(&f), canonical_lemma_key(&g));
        let h = crate::parse::parse_formula("p(a)").unwrap();
        let k = crate::parse::parse_formula("p(b)").unwrap();
        assert_ne!(canonical_lemma_key(&h), canonical_lemma_key(&k));
        // the two worked-example lemmas are distinct
        let q0 = crate::parse::parse_formula("0 + 1 = 1 + 0").unwrap();
        let step =
            crate::parse::parse_formula("forall x (x + 1 = 1 + x -> (x + 1) + 1 = 1 + (x + 1))")
                .unwrap();
        assert_ne!(canonical_lemma_key(&q0), canonical_lemma_key(&step));
    }
}
