//! Bounded search for Reidemeister equivalences.
//!
//! Nodes are diagrams up to crossing relabeling and rotation, identified by
//! [`LinkDiagram::canonical_key`]. Expansion is level by level in key
//! order, so results depend only on the bounds, never on timing (unless a
//! time limit is set and hit).

use std::collections::HashMap;
use std::time::{Duration, Instant};

use serde::Serialize;
use thiserror::Error;

use crate::diagram::LinkDiagram;
use crate::invariants::homology_class;
use crate::moves::{apply_move, enumerate_moves, Move, MoveKind};
use crate::ribbon::surface_report;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchBounds {
    /// Diagrams with more crossings are never visited.
    pub max_crossings: usize,
    /// Longest move sequence considered.
    pub max_steps: usize,
    /// Visited-node budget across both directions.
    pub max_nodes: usize,
    pub time_limit: Option<Duration>,
}

impl SearchBounds {
    pub fn new(max_crossings: usize, max_steps: usize) -> Self {
        SearchBounds { max_crossings, max_steps, max_nodes: 2_000_000, time_limit: None }
    }

    pub fn with_max_nodes(mut self, max_nodes: usize) -> Self {
        self.max_nodes = max_nodes;
        self
    }

    pub fn with_time_limit(mut self, limit: Duration) -> Self {
        self.time_limit = Some(limit);
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Exhaustion {
    /// Everything within the crossing and step bounds was explored.
    Frontier,
    /// The node or time budget ran out first.
    Budget,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Step {
    #[serde(flatten)]
    pub mv: Move,
    /// Canonical key of the diagram after the move.
    pub result: String,
}

/// A verified chain of moves. Each move applies to the canonical form of
/// the previous snapshot (the start, for the first move).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MoveSequence {
    pub start: LinkDiagram,
    pub steps: Vec<Step>,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ReplayError {
    #[error("step {step}: {source}")]
    Move { step: usize, source: crate::moves::MoveError },
    #[error("step {step}: expected {expected}, got {got}")]
    Snapshot { step: usize, expected: String, got: String },
}

impl MoveSequence {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Re-applies every move and checks every snapshot; returns the final
    /// canonical diagram.
    pub fn replay(&self) -> Result<LinkDiagram, ReplayError> {
        let mut cur = self.start.canonical_form();
        for (i, step) in self.steps.iter().enumerate() {
            let next = apply_move(&cur, &step.mv)
                .map_err(|source| ReplayError::Move { step: i, source })?;
            let (key, comps) = next.canonical_parts();
            if key != step.result {
                return Err(ReplayError::Snapshot { step: i, expected: step.result.clone(), got: key });
            }
            cur = LinkDiagram::new(comps).expect("relabeling preserves validity");
        }
        Ok(cur)
    }

    /// One JSON object per line: `{"kind":…,"site":…,"result":…}`.
    pub fn to_json_lines(&self) -> String {
        self.steps
            .iter()
            .map(|s| serde_json::to_string(s).expect("step serializes") + "\n")
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(MoveSequence),
    NotFound { exhaustion: Exhaustion, explored: usize },
}

struct Node {
    diagram: LinkDiagram,
    parent: Option<(String, Move)>,
    depth: usize,
}

struct Side {
    nodes: HashMap<String, Node>,
    frontier: Vec<String>,
    depth: usize,
}

impl Side {
    fn new(d: &LinkDiagram) -> Self {
        let (key, comps) = d.canonical_parts();
        let diagram = LinkDiagram::new(comps).expect("relabeling preserves validity");
        let mut nodes = HashMap::new();
        nodes.insert(key.clone(), Node { diagram, parent: None, depth: 0 });
        Side { nodes, frontier: vec![key], depth: 0 }
    }

    /// Keys from the root to `key`, root first.
    fn chain(&self, key: &str) -> Vec<String> {
        let mut out = vec![key.to_string()];
        let mut cur = key;
        while let Some((p, _)) = &self.nodes[cur].parent {
            out.push(p.clone());
            cur = p;
        }
        out.reverse();
        out
    }
}

struct Budget {
    max_nodes: usize,
    deadline: Option<Instant>,
}

impl Budget {
    fn exceeded(&self, visited: usize) -> bool {
        visited > self.max_nodes || self.deadline.is_some_and(|t| Instant::now() > t)
    }
}

/// Expands one BFS level of `side`. Returns false if the budget ran out,
/// in which case the new frontier holds whatever was reached so far.
fn expand(side: &mut Side, other_len: usize, bounds: &SearchBounds, budget: &Budget) -> bool {
    let mut next = Vec::new();
    let frontier = std::mem::take(&mut side.frontier);
    let mut within_budget = true;
    'outer: for key in &frontier {
        let diagram = side.nodes[key].diagram.clone();
        for mv in enumerate_moves(&diagram, &MoveKind::ALL) {
            if (diagram.crossing_count() as i64 + mv.crossing_delta()) as usize > bounds.max_crossings {
                continue;
            }
            let result = apply_move(&diagram, &mv).expect("enumerated moves apply");
            let (child, comps) = result.canonical_parts();
            if side.nodes.contains_key(&child) {
                continue;
            }
            let node = Node {
                diagram: LinkDiagram::new(comps).expect("relabeling preserves validity"),
                parent: Some((key.clone(), mv)),
                depth: side.depth + 1,
            };
            side.nodes.insert(child.clone(), node);
            next.push(child);
            if budget.exceeded(side.nodes.len() + other_len) {
                within_budget = false;
                break 'outer;
            }
        }
    }
    next.sort();
    side.frontier = next;
    side.depth += 1;
    within_budget
}

/// First move on `from` (in enumeration order) whose result has key `to`.
fn connecting_move(from: &LinkDiagram, to: &str) -> (Move, String) {
    enumerate_moves(from, &MoveKind::ALL)
        .into_iter()
        .find_map(|mv| {
            let key = apply_move(from, &mv).ok()?.canonical_key();
            (key == to).then_some((mv, key))
        })
        .expect("backward edges are invertible")
}

fn build_sequence(fwd: &Side, bwd: &Side, meet: &str) -> MoveSequence {
    let mut steps = Vec::new();
    let forward_chain = fwd.chain(meet);
    for key in &forward_chain[1..] {
        let (_, mv) = fwd.nodes[key].parent.as_ref().unwrap();
        steps.push(Step { mv: *mv, result: key.clone() });
    }
    // walk back towards the target, inverting each backward edge
    let mut backward_chain = bwd.chain(meet);
    backward_chain.reverse();
    for pair in backward_chain.windows(2) {
        let from = &bwd.nodes[&pair[0]].diagram;
        let (mv, key) = connecting_move(from, &pair[1]);
        steps.push(Step { mv, result: key });
    }
    let root = &forward_chain[0];
    MoveSequence { start: fwd.nodes[root].diagram.clone(), steps }
}

/// Bidirectional breadth-first search for a move sequence from `a` to `b`
/// within `bounds`.
///
/// Moves never change the off-diagonal linking numbers, so when those of
/// `a` and `b` differ no node could ever reach the target and nothing is
/// expanded. A `NotFound` outcome is not a proof of inequivalence.
pub fn search_equivalent(a: &LinkDiagram, b: &LinkDiagram, bounds: &SearchBounds) -> SearchOutcome {
    let budget = Budget {
        max_nodes: bounds.max_nodes,
        deadline: bounds.time_limit.map(|t| Instant::now() + t),
    };
    let mut fwd = Side::new(a);
    let mut bwd = Side::new(b);
    let start_key = fwd.frontier[0].clone();
    if bwd.nodes.contains_key(&start_key) {
        let start = fwd.nodes[&start_key].diagram.clone();
        return SearchOutcome::Found(MoveSequence { start, steps: Vec::new() });
    }
    if a.component_count() != b.component_count() || homology_class(a) != homology_class(b) {
        return SearchOutcome::NotFound { exhaustion: Exhaustion::Frontier, explored: 2 };
    }
    loop {
        let explored = fwd.nodes.len() + bwd.nodes.len();
        if fwd.depth + bwd.depth >= bounds.max_steps
            || fwd.frontier.is_empty()
            || bwd.frontier.is_empty()
        {
            return SearchOutcome::NotFound { exhaustion: Exhaustion::Frontier, explored };
        }
        let forward = fwd.frontier.len() <= bwd.frontier.len();
        let (this, other) = if forward { (&mut fwd, &bwd) } else { (&mut bwd, &fwd) };
        if !expand(this, other.nodes.len(), bounds, &budget) {
            let explored = fwd.nodes.len() + bwd.nodes.len();
            return SearchOutcome::NotFound { exhaustion: Exhaustion::Budget, explored };
        }
        // shortest total length first, then least key
        let meet = this
            .frontier
            .iter()
            .filter_map(|k| other.nodes.get(k).map(|n| (n.depth, k)))
            .min()
            .map(|(_, k)| k.clone());
        if let Some(meet) = meet {
            let seq = build_sequence(&fwd, &bwd, &meet);
            debug_assert!(seq.replay().is_ok());
            return SearchOutcome::Found(seq);
        }
    }
}

/// Outcome of [`ground_genus_upper_bound`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenusBound {
    pub genus: usize,
    /// A visited diagram realizing `genus` (canonical form).
    pub witness: LinkDiagram,
    pub explored: usize,
    pub exhaustion: Exhaustion,
}

/// Smallest canonical genus among diagrams reachable from `d` within the
/// bounds, `d` included. An upper bound for the least genus over the
/// whole stable class.
pub fn ground_genus_upper_bound(d: &LinkDiagram, bounds: &SearchBounds) -> GenusBound {
    let budget = Budget {
        max_nodes: bounds.max_nodes,
        deadline: bounds.time_limit.map(|t| Instant::now() + t),
    };
    let mut side = Side::new(d);
    let root = side.frontier[0].clone();
    let mut best = (surface_report(&side.nodes[&root].diagram).canonical_genus, root);
    let mut exhaustion = Exhaustion::Frontier;
    while best.0 > 0 && side.depth < bounds.max_steps && !side.frontier.is_empty() {
        let within_budget = expand(&mut side, 0, bounds, &budget);
        // frontier is sorted, so ties go to the least key
        for key in &side.frontier {
            let g = surface_report(&side.nodes[key].diagram).canonical_genus;
            if g < best.0 {
                best = (g, key.clone());
            }
        }
        if !within_budget {
            exhaustion = Exhaustion::Budget;
            break;
        }
    }
    GenusBound {
        genus: best.0,
        witness: side.nodes[&best.1].diagram.clone(),
        explored: side.nodes.len(),
        exhaustion,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> LinkDiagram {
        LinkDiagram::parse(s).unwrap()
    }

    #[test]
    fn kink_unknots_in_one_step() {
        let out = search_equivalent(&d("O1+,U1+"), &d("@"), &SearchBounds::new(2, 3));
        let SearchOutcome::Found(seq) = out else { panic!("{out:?}") };
        assert_eq!(seq.len(), 1);
        assert_eq!(seq.steps[0].mv.kind(), MoveKind::R1Remove);
        assert_eq!(seq.replay().unwrap(), d("@"));
    }

    #[test]
    fn identical_diagrams_need_no_moves() {
        let a = d("O1+,O2+,U1+,U2+");
        let b = d("O7+,O3+,U7+,U3+");
        let SearchOutcome::Found(seq) = search_equivalent(&a, &b, &SearchBounds::new(4, 4)) else {
            panic!()
        };
        assert!(seq.is_empty());
    }

    #[test]
    fn backward_half_is_inverted() {
        // @ needs two additions to reach the kink pair
        let target = d("O1+,U1+,O2-,U2-");
        let out = search_equivalent(&d("@"), &target, &SearchBounds::new(2, 4));
        let SearchOutcome::Found(seq) = out else { panic!("{out:?}") };
        assert_eq!(seq.len(), 2);
        assert_eq!(seq.replay().unwrap().canonical_key(), target.canonical_key());
        // and the other way round
        let out = search_equivalent(&target, &d("@"), &SearchBounds::new(2, 4));
        let SearchOutcome::Found(seq) = out else { panic!("{out:?}") };
        assert_eq!(seq.len(), 2);
        assert_eq!(seq.replay().unwrap(), d("@"));
    }

    #[test]
    fn linking_mismatch_is_pruned() {
        let out = search_equivalent(&d("O1+/U1+"), &d("@/@"), &SearchBounds::new(3, 6));
        assert_eq!(out, SearchOutcome::NotFound { exhaustion: Exhaustion::Frontier, explored: 2 });
    }

    #[test]
    fn budget_is_reported() {
        let out = search_equivalent(
            &d("O1+,O2+,U1+,U2+"),
            &d("@"),
            &SearchBounds::new(4, 8).with_max_nodes(50),
        );
        assert!(matches!(out, SearchOutcome::NotFound { exhaustion: Exhaustion::Budget, .. }));
    }

    #[test]
    fn tampered_sequence_fails_replay() {
        let SearchOutcome::Found(mut seq) =
            search_equivalent(&d("O1+,U1+"), &d("@"), &SearchBounds::new(2, 3))
        else {
            panic!()
        };
        seq.steps[0].result = "O1+,U1+".into();
        assert!(matches!(seq.replay(), Err(ReplayError::Snapshot { .. })));
    }

    #[test]
    fn json_lines() {
        let SearchOutcome::Found(seq) =
            search_equivalent(&d("O1+,U1+"), &d("@"), &SearchBounds::new(2, 3))
        else {
            panic!()
        };
        assert_eq!(
            seq.to_json_lines(),
            "{\"kind\":\"R1_remove\",\"site\":{\"crossing\":1,\"pair\":{\"component\":0,\"position\":0}},\"result\":\"@\"}\n"
        );
    }

    #[test]
    fn genus_bound_drops_through_kinks() {
        let g = ground_genus_upper_bound(&d("O1+,U1+"), &SearchBounds::new(2, 3));
        assert_eq!(g.genus, 0);
        let g = ground_genus_upper_bound(&d("O1-,U2-,O3-,U1-,O2-,U3-"), &SearchBounds::new(3, 2));
        assert_eq!((g.genus, g.explored), (0, 1));
    }
}
