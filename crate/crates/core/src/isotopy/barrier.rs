use serde::{Deserialize, Serialize};

use super::moves::r2_bigons;
use crate::diagram::{CrossingKind, End, StuckDiagram};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BarrierKind {
    RigidTwist,
    HalfRigidR2,
}

/// A classically reducible configuration blocked by rigidity.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Barrier {
    pub kind: BarrierKind,
    pub crossings: Vec<usize>,
    /// Supporting arcs, each named by its tail end.
    pub arcs: Vec<End>,
}

impl Barrier {
    /// No shared crossing and no shared arc.
    pub fn is_disjoint(&self, other: &Barrier) -> bool {
        self.crossings.iter().all(|c| !other.crossings.contains(c)) && self.arcs.iter().all(|a| !other.arcs.contains(a))
    }
}

pub fn detect_barriers(d: &StuckDiagram) -> Vec<Barrier> {
    let mut out = Vec::new();
    for c in d.stuck_crossings() {
        let mut arcs: Vec<End> = (0..4)
            .map(|s| End::new(c, s))
            .filter(|&e| {
                let p = d.partner(e);
                p.crossing == c && (p.slot + 4 - e.slot) % 2 == 1
            })
            .map(|e| d.arc_tail(e))
            .collect();
        arcs.sort_unstable();
        arcs.dedup();
        if !arcs.is_empty() {
            out.push(Barrier { kind: BarrierKind::RigidTwist, crossings: vec![c], arcs });
        }
    }
    let mut seen = std::collections::BTreeSet::new();
    for (e, pair) in r2_bigons(d) {
        let stuck = pair.iter().filter(|&&c| d.kind(c) == CrossingKind::Stuck).count();
        if stuck != 1 {
            continue;
        }
        let mut arcs = vec![d.arc_tail(e), d.arc_tail(d.partner(e).rotated(1))];
        arcs.sort_unstable();
        if seen.insert((pair, arcs.clone())) {
            out.push(Barrier { kind: BarrierKind::HalfRigidR2, crossings: pair.to_vec(), arcs });
        }
    }
    out.sort();
    out
}

/// Size of a largest pairwise disjoint family of barriers, found by
/// branch and bound.
pub fn barrier_lower_bound(d: &StuckDiagram) -> usize {
    let bs = detect_barriers(d);
    let conflict: Vec<Vec<bool>> = bs.iter().map(|a| bs.iter().map(|b| !a.is_disjoint(b)).collect()).collect();
    let mut best = 0;
    let mut chosen = Vec::new();
    search(&conflict, 0, &mut chosen, &mut best);
    best
}

fn search(conflict: &[Vec<bool>], i: usize, chosen: &mut Vec<usize>, best: &mut usize) {
    if chosen.len() + (conflict.len() - i) <= *best {
        return;
    }
    if i == conflict.len() {
        *best = chosen.len();
        return;
    }
    if chosen.iter().all(|&j| !conflict[i][j]) {
        chosen.push(i);
        search(conflict, i + 1, chosen, best);
        chosen.pop();
    }
    search(conflict, i + 1, chosen, best);
}

/// Crossings that appear in some barrier.
pub fn barrier_crossings(d: &StuckDiagram) -> Vec<usize> {
    let mut cs: Vec<usize> = detect_barriers(d)
        .into_iter()
        .flat_map(|b| b.crossings)
        .filter(|&c| d.kind(c) == CrossingKind::Stuck)
        .collect();
    cs.sort_unstable();
    cs.dedup();
    cs
}
