use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet, VecDeque};

use serde::{Deserialize, Serialize};
use serde_json::json;

use super::barrier::{barrier_crossings, barrier_lower_bound};
use super::moves::{apply_move, apply_unchecked, available_moves, moves_of_kind, Move, MoveKind};
use crate::bracket::normalized_bracket;
use crate::diagram::{DiagramCode, StuckDiagram};
use crate::error::{Error, Result};
use crate::skein::rigid_homflypt;

/// Attached to serialized reports: the search is exact only relative to the
/// implemented move set and crossing cap.
pub const DISTANCE_CAVEAT: &str = "exact is relative to the implemented move set (classical R1/R2/R3 away from \
stuck crossings, RigidSlide, Unstick) under the stated crossing cap";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceReport {
    pub lower: usize,
    pub upper: Option<usize>,
    pub exact: Option<usize>,
    /// Moves from the canonical form of the source to that of the target;
    /// each applies to the canonical form of the previous diagram.
    pub certificate: Option<Vec<Move>>,
    pub exhausted: bool,
}

impl DistanceReport {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "lower": self.lower,
            "upper": self.upper,
            "exact": self.exact,
            "exhausted": self.exhausted,
            "certificate": self.certificate.clone().unwrap_or_default(),
            "note": DISTANCE_CAVEAT,
        })
    }
}

/// Replays a certificate, canonicalizing after every move.
pub fn replay_certificate(d: &StuckDiagram, moves: &[Move]) -> Result<StuckDiagram> {
    let mut cur = d.canonicalize();
    for m in moves {
        cur = apply_move(&cur, m)?.canonicalize();
    }
    Ok(cur)
}

fn decreasing_move(d: &StuckDiagram) -> Option<Move> {
    let mut ms = moves_of_kind(d, MoveKind::R1Remove, 0);
    ms.extend(moves_of_kind(d, MoveKind::R2Remove, 0));
    ms.into_iter().min()
}

const SLIDE_LOOKAHEAD: usize = 256;

/// Searches R3 and RigidSlide neighbours for a diagram that admits a
/// crossing-decreasing move.
fn slide_to_decreasing(d: &StuckDiagram) -> Option<(StuckDiagram, Vec<Move>)> {
    let mut seen: HashSet<DiagramCode> = HashSet::from([d.canonical_code()]);
    let mut queue = VecDeque::from([(d.clone(), Vec::<Move>::new())]);
    while let Some((cur, path)) = queue.pop_front() {
        let mut ms = moves_of_kind(&cur, MoveKind::R3, 0);
        ms.extend(moves_of_kind(&cur, MoveKind::RigidSlide, 0));
        for m in ms {
            let Ok(next) = apply_unchecked(&cur, &m) else { continue };
            let next = next.canonicalize();
            if !seen.insert(next.canonical_code()) {
                continue;
            }
            let mut p = path.clone();
            p.push(m);
            if decreasing_move(&next).is_some() {
                return Some((next, p));
            }
            if seen.len() < SLIDE_LOOKAHEAD {
                queue.push_back((next, p));
            }
        }
    }
    None
}

/// Reduces crossings with stuck-isotopy moves only. The moves follow the
/// certificate convention of [`replay_certificate`].
pub fn simplify(d: &StuckDiagram) -> (StuckDiagram, Vec<Move>) {
    let mut cur = d.canonicalize();
    let mut moves = Vec::new();
    loop {
        if let Some(m) = decreasing_move(&cur) {
            cur = apply_unchecked(&cur, &m).expect("removals always apply").canonicalize();
            moves.push(m);
        } else if let Some((next, path)) = slide_to_decreasing(&cur) {
            cur = next;
            moves.extend(path);
        } else {
            return (cur, moves);
        }
    }
}

/// Fails when the underlying classical diagrams are told apart by the
/// HOMFLYPT polynomial or the normalized bracket. Invariants that cannot be
/// computed within default limits are skipped.
pub fn check_classical_match(d1: &StuckDiagram, d2: &StuckDiagram) -> Result<()> {
    let (c1, c2) = (d1.forget_rigidity(), d2.forget_rigidity());
    if let (Ok(p1), Ok(p2)) = (rigid_homflypt(&c1), rigid_homflypt(&c2)) {
        if p1 != p2 {
            return Err(Error::InvariantMismatch("HOMFLYPT".into()));
        }
    }
    if let (Ok(b1), Ok(b2)) = (normalized_bracket(&c1), normalized_bracket(&c2)) {
        if b1 != b2 {
            return Err(Error::InvariantMismatch("normalized bracket".into()));
        }
    }
    Ok(())
}

/// Greedy relaxed isotopy from `d` to `target`: simplify, and when stuck,
/// unstick a barrier crossing (else any stuck crossing). `None` when the two
/// simplified forms never meet or a diagram exceeds `max_crossings`.
pub fn unstick_upper_bound(d: &StuckDiagram, target: &StuckDiagram, max_crossings: usize) -> Result<Option<usize>> {
    check_classical_match(d, target)?;
    if d.crossing_count() > max_crossings || target.crossing_count() > max_crossings {
        return Ok(None);
    }
    let goal = simplify(target).0;
    let goal_code = goal.canonical_code();
    let mut cur = d.clone();
    let mut unsticks = 0;
    loop {
        cur = simplify(&cur).0;
        if cur.canonical_code() == goal_code {
            return Ok(Some(unsticks));
        }
        if cur.stuck_count() <= goal.stuck_count() {
            return Ok(None);
        }
        let c = barrier_crossings(&cur).first().copied().unwrap_or_else(|| cur.stuck_crossings()[0]);
        cur = cur.unstick(c)?;
        unsticks += 1;
    }
}

struct Node {
    diagram: StuckDiagram,
    code: DiagramCode,
    parent: Option<(usize, Move)>,
}

struct SearchOutcome {
    path: Option<Vec<Move>>,
    exhausted: bool,
}

/// Shortest relaxed isotopy with isotopy moves of weight 0 and unsticks of
/// weight 1. Every move but Unstick preserves the stuck count, so
/// `|S(state)| − |S(target)|` is an exact, consistent heuristic; ties go to
/// fewer crossings.
fn search(d1: &StuckDiagram, d2: &StuckDiagram, max_crossings: usize, node_budget: usize) -> SearchOutcome {
    let goal = d2.canonical_code();
    let s2 = d2.stuck_count();
    let start = d1.canonicalize();
    if start.stuck_count() < s2 {
        return SearchOutcome { path: None, exhausted: false };
    }
    let mut nodes = vec![Node { code: start.canonical_code(), diagram: start, parent: None }];
    let mut seen: HashSet<DiagramCode> = HashSet::from([nodes[0].code.clone()]);
    let mut heap = BinaryHeap::from([Reverse((nodes[0].diagram.crossing_count(), 0usize))]);
    let mut expanded = 0;
    while let Some(Reverse((_, i))) = heap.pop() {
        if nodes[i].code == goal {
            let mut path = Vec::new();
            let mut k = i;
            while let Some((p, m)) = &nodes[k].parent {
                path.push(m.clone());
                k = *p;
            }
            path.reverse();
            return SearchOutcome { path: Some(path), exhausted: false };
        }
        expanded += 1;
        if expanded > node_budget {
            return SearchOutcome { path: None, exhausted: true };
        }
        let cur = nodes[i].diagram.clone();
        for m in available_moves(&cur, cur.stuck_count() > s2, max_crossings) {
            let Ok(next) = apply_unchecked(&cur, &m) else { continue };
            let next = next.canonicalize();
            let code = next.canonical_code();
            if seen.insert(code.clone()) {
                heap.push(Reverse((next.crossing_count(), nodes.len())));
                nodes.push(Node { diagram: next, code, parent: Some((i, m)) });
            }
        }
    }
    SearchOutcome { path: None, exhausted: false }
}

/// Bounds and, when the search succeeds, the exact unsticking distance from
/// `d1` to `d2`.
pub fn unsticking_distance(d1: &StuckDiagram, d2: &StuckDiagram, max_crossings: usize, node_budget: usize) -> DistanceReport {
    let cap = max_crossings.max(d1.crossing_count()).max(d2.crossing_count());
    let mut lower = d1.stuck_count().saturating_sub(d2.stuck_count());
    if d2.stuck_count() == 0 {
        lower = lower.max(barrier_lower_bound(d1));
    }
    let greedy = unstick_upper_bound(d1, d2, cap).ok().flatten();
    let outcome = search(d1, d2, cap, node_budget);
    let exact = outcome
        .path
        .as_ref()
        .map(|p| p.iter().filter(|m| m.kind == MoveKind::Unstick).count());
    DistanceReport {
        lower,
        upper: greedy.or(exact),
        exact,
        certificate: outcome.path,
        exhausted: outcome.exhausted,
    }
}
