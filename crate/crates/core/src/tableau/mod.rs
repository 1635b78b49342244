//! Proof-graph search: satisfiability with witness traces, and validity
//! by duality.
//!
//! The start node asserts the query formula together with `◊end`. Nodes
//! are complete, locally consistent PNPs; the successors of a node are
//! the completions of its step. A path ending in a node with `X⊤`
//! negative reads off directly as a finite model, one state per node.
//! Search is breadth-first, so the witness found is a shortest one.

mod dot;

use std::collections::hash_map::Entry;
use std::collections::{BTreeSet, HashMap, VecDeque};

use serde::Serialize;
use thiserror::Error;

use crate::formula::encode::{eventually, eventually_end, neg};
use crate::formula::{closure_of, Formula};
use crate::pnp::Pnp;
use crate::semantics::{Trace, Valuation};

pub use dot::to_dot;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableauError {
    #[error("cannot extract a trace from an empty path")]
    EmptyPath,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SatVerdict {
    Sat(Trace),
    Unsat,
}

impl SatVerdict {
    pub fn is_sat(&self) -> bool {
        matches!(self, SatVerdict::Sat(_))
    }

    pub fn witness(&self) -> Option<&Trace> {
        match self {
            SatVerdict::Sat(t) => Some(t),
            SatVerdict::Unsat => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ValidityVerdict {
    Valid,
    Invalid(Trace),
}

impl ValidityVerdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, ValidityVerdict::Valid)
    }

    pub fn countermodel(&self) -> Option<&Trace> {
        match self {
            ValidityVerdict::Valid => None,
            ValidityVerdict::Invalid(t) => Some(t),
        }
    }
}

/// Work done by one search.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    /// Distinct nodes discovered.
    pub nodes: usize,
    /// Nodes whose successors were computed.
    pub expansions: usize,
    /// Largest node closure seen.
    #[serde(skip)]
    pub max_closure: usize,
}

#[derive(Debug, Clone)]
pub struct SatOutcome {
    pub verdict: SatVerdict,
    /// The terminal path the witness was read from.
    pub path: Option<Vec<Pnp>>,
    pub stats: SearchStats,
}

#[derive(Debug, Clone)]
pub struct ValidityOutcome {
    pub verdict: ValidityVerdict,
    pub stats: SearchStats,
}

/// Adds `◊end` to the positive side.
pub fn inject_finiteness(p: &Pnp) -> Pnp {
    let mut out = p.clone();
    out.pos.insert(eventually_end());
    out
}

/// Completions of the finiteness-injected start node for `f`.
pub fn roots(f: &Formula) -> BTreeSet<Pnp> {
    inject_finiteness(&Pnp::asserting(f.clone())).completions()
}

/// Successor nodes: completions of the step, with finiteness re-asserted
/// so every reachable node carries `◊end` positively.
pub fn successors(node: &Pnp) -> BTreeSet<Pnp> {
    inject_finiteness(&node.step()).completions()
}

/// Reads a trace off a path: state `i` makes true exactly the variables
/// positive in node `i`.
pub fn extract_trace(path: &[Pnp]) -> Result<Trace, TableauError> {
    if path.is_empty() {
        return Err(TableauError::EmptyPath);
    }
    let states = path
        .iter()
        .map(|node| {
            Valuation::new(node.pos.iter().filter_map(|f| match f {
                Formula::Var(name) => Some(name.to_string()),
                _ => None,
            }))
        })
        .collect();
    Ok(Trace::new(states).expect("path is non-empty"))
}

/// Memoizes successor computation; distinct nodes often share a step.
#[derive(Default)]
struct SuccessorCache {
    by_step: HashMap<Pnp, Vec<Pnp>>,
}

impl SuccessorCache {
    fn successors(&mut self, node: &Pnp) -> &[Pnp] {
        match self.by_step.entry(inject_finiteness(&node.step())) {
            Entry::Occupied(e) => e.into_mut(),
            Entry::Vacant(e) => {
                let comps = e.key().completions().into_iter().collect();
                e.insert(comps)
            }
        }
    }
}

/// Breadth-first search for a terminal path from any root.
pub fn search_from(start: &Pnp) -> SatOutcome {
    let roots = inject_finiteness(start).completions();
    let mut stats = SearchStats::default();
    let mut nodes: Vec<Pnp> = Vec::new();
    let mut parent: Vec<Option<usize>> = Vec::new();
    let mut index: HashMap<Pnp, usize> = HashMap::new();
    let mut queue = VecDeque::new();
    let mut cache = SuccessorCache::default();

    let mut found = None;
    for root in roots {
        let id = nodes.len();
        stats.max_closure = stats.max_closure.max(root.pos.len() + root.neg.len());
        index.insert(root.clone(), id);
        if root.is_terminal() && found.is_none() {
            found = Some(id);
        }
        nodes.push(root);
        parent.push(None);
        queue.push_back(id);
    }

    'bfs: while found.is_none() {
        let Some(id) = queue.pop_front() else { break };
        if nodes[id].is_terminal() {
            continue;
        }
        stats.expansions += 1;
        let succ = cache.successors(&nodes[id]).to_vec();
        for next in succ {
            if index.contains_key(&next) {
                continue;
            }
            let next_id = nodes.len();
            stats.max_closure = stats.max_closure.max(next.pos.len() + next.neg.len());
            index.insert(next.clone(), next_id);
            let terminal = next.is_terminal();
            nodes.push(next);
            parent.push(Some(id));
            if terminal {
                found = Some(next_id);
                break 'bfs;
            }
            queue.push_back(next_id);
        }
    }
    stats.nodes = nodes.len();

    match found {
        None => SatOutcome {
            verdict: SatVerdict::Unsat,
            path: None,
            stats,
        },
        Some(mut id) => {
            let mut path = vec![nodes[id].clone()];
            while let Some(prev) = parent[id] {
                path.push(nodes[prev].clone());
                id = prev;
            }
            path.reverse();
            let trace = extract_trace(&path).expect("path is non-empty");
            SatOutcome {
                verdict: SatVerdict::Sat(trace),
                path: Some(path),
                stats,
            }
        }
    }
}

/// Is there a finite trace whose first state satisfies `f`?
pub fn decide_sat(f: &Formula) -> SatOutcome {
    search_from(&Pnp::asserting(f.clone()))
}

/// Does `f` hold at every position of every finite trace? Searches for a
/// trace where `◊¬f` holds at the start.
pub fn decide_valid(f: &Formula) -> ValidityOutcome {
    let outcome = decide_sat(&eventually(neg(f.clone())));
    ValidityOutcome {
        verdict: match outcome.verdict {
            SatVerdict::Sat(t) => ValidityVerdict::Invalid(t),
            SatVerdict::Unsat => ValidityVerdict::Valid,
        },
        stats: outcome.stats,
    }
}

/// Does `f` hold at the first position of every finite trace?
pub fn decide_valid_at_root(f: &Formula) -> ValidityOutcome {
    let outcome = decide_sat(&neg(f.clone()));
    ValidityOutcome {
        verdict: match outcome.verdict {
            SatVerdict::Sat(t) => ValidityVerdict::Invalid(t),
            SatVerdict::Unsat => ValidityVerdict::Valid,
        },
        stats: outcome.stats,
    }
}

/// Formula count of the start node's closure, `f` with `◊end` injected.
pub fn root_closure_size(f: &Formula) -> usize {
    closure_of([f, &eventually_end()]).len()
}

/// A fully materialized proof graph.
#[derive(Debug, Clone, Default)]
pub struct ProofGraph {
    nodes: Vec<Pnp>,
    edges: Vec<BTreeSet<usize>>,
    roots: BTreeSet<usize>,
}

impl ProofGraph {
    /// Every node reachable from the roots of `f`'s start node.
    pub fn build(f: &Formula) -> ProofGraph {
        ProofGraph::build_from(&Pnp::asserting(f.clone()))
    }

    pub fn build_from(start: &Pnp) -> ProofGraph {
        let mut graph = ProofGraph::default();
        let mut index: HashMap<Pnp, usize> = HashMap::new();
        let mut cache = SuccessorCache::default();
        let mut queue = VecDeque::new();
        for root in inject_finiteness(start).completions() {
            let id = graph.intern(&mut index, root);
            graph.roots.insert(id);
            queue.push_back(id);
        }
        while let Some(id) = queue.pop_front() {
            let succ = cache.successors(&graph.nodes[id]).to_vec();
            for next in succ {
                let before = graph.nodes.len();
                let next_id = graph.intern(&mut index, next);
                if next_id == before {
                    queue.push_back(next_id);
                }
                graph.edges[id].insert(next_id);
            }
        }
        graph
    }

    fn intern(&mut self, index: &mut HashMap<Pnp, usize>, node: Pnp) -> usize {
        *index.entry(node).or_insert_with_key(|node| {
            self.nodes.push(node.clone());
            self.edges.push(BTreeSet::new());
            self.nodes.len() - 1
        })
    }

    pub fn nodes(&self) -> &[Pnp] {
        &self.nodes
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.iter().map(BTreeSet::len).sum()
    }

    pub fn successors(&self, id: usize) -> &BTreeSet<usize> {
        &self.edges[id]
    }

    pub fn roots(&self) -> &BTreeSet<usize> {
        &self.roots
    }

    pub fn is_root(&self, id: usize) -> bool {
        self.roots.contains(&id)
    }
}
